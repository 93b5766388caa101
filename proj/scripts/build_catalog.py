"""Write resources/catalog.json from rows produced by extract_table.py.

Usage: python3 scripts/build_catalog.py rows.json resources/catalog.json

Entries already present in the output whose source is not "table" (the
frozen search results) and the family bases are kept. tripack-freeze-catalog
regenerates those.
"""
import json
import os
import sys


def packing(copies):
    lengths = sorted(len(c) for c in copies[0])
    return {"n": sum(lengths), "shape": lengths, "copies": copies}


def main(rows_path, out_path):
    rows = json.load(open(rows_path))
    entries = []
    for row in rows:
        packs = [packing(p) for p in row["copies"]]
        entries.append({"shape": packs[0]["shape"], "source": "table", "packings": packs})
    bases = []
    if os.path.exists(out_path):
        old = json.load(open(out_path))
        entries += [e for e in old["entries"] if e["source"] != "table"]
        bases = old.get("family_bases", [])

    def block(items):
        return ",\n".join("    " + json.dumps(e, separators=(",", ":")) for e in items)

    with open(out_path, "w") as f:
        f.write('{\n  "version": 1,\n  "entries": [\n' + block(entries) + "\n  ]")
        if bases:
            f.write(',\n  "family_bases": [\n' + block(bases) + "\n  ]")
        f.write("\n}\n")


if __name__ == "__main__":
    main(sys.argv[1], sys.argv[2])
