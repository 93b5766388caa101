"""Extract the small-case packing table from the source LaTeX into catalog JSON rows."""
import json, re, sys

src = open(sys.argv[1]).read()
rows = []
cur = None
for line in src.splitlines():
    if '&' not in line or '(' not in line:
        continue
    cells = line.split('&')
    name = cells[0].strip()
    seqs = [re.findall(r'\(([\d,\s]+)\)', c) for c in cells[1:3]]
    seqs = [[[int(x) for x in s.split(',')] for s in c] for c in seqs]
    if name:
        cur = {"label": name.strip('$ '), "copies": [[seqs[0]], [seqs[1]]]}
        rows.append(cur)
    else:
        cur["copies"][0].append(seqs[0])
        cur["copies"][1].append(seqs[1])
print(len(rows), file=sys.stderr)
json.dump(rows, sys.stdout)
