// Regenerates resources/catalog.json: keeps the transcribed table rows of the
// embedded catalog and re-runs the searches for the unique shapes and the
// family base packings. Usage: tripack-freeze-catalog > resources/catalog.json
#include <iostream>

#include "tripack/construct.hpp"
#include "tripack/io.hpp"

using namespace tripack;

namespace {

TriplePacking found(const TwoFactorShape& shape, PackingConstraint c) {
  auto r = search_packing(shape, c);
  if (!r.packing) {
    std::cerr << "search failed for " << shape.to_string() << " (" << to_string(c) << ")\n";
    std::exit(1);
  }
  return *r.packing;
}

}  // namespace

int main() {
  const Json embedded = Json::parse(catalog_text());
  std::vector<std::string> entries;
  for (const auto& e : embedded.at("entries"))
    if (e.at("source") == "table") entries.push_back(e.dump());

  for (const char* s : {"7", "8", "3,4", "4,4", "3,5", "3,3,3"}) {
    const auto shape = TwoFactorShape::parse(s);
    Json e;
    e["shape"] = shape.lengths();
    e["source"] = "search";
    e["packings"] = Json::array({to_json(found(shape, PackingConstraint::Any))});
    entries.push_back(e.dump());
  }

  std::vector<std::string> bases;
  for (const char* s : {"3,11", "4,11", "5,11", "6,11", "3,3,11"}) {
    const auto shape = TwoFactorShape::parse(s);
    for (bool k5 : {true, false}) {
      Json b;
      b["shape"] = shape.lengths();
      b["k5"] = k5;
      b["packing"] = to_json(found(shape, k5 ? PackingConstraint::RequireK5 : PackingConstraint::ForbidK5));
      bases.push_back(b.dump());
    }
  }

  auto emit = [](const std::vector<std::string>& items) {
    for (std::size_t i = 0; i < items.size(); ++i)
      std::cout << "    " << items[i] << (i + 1 < items.size() ? ",\n" : "\n");
  };
  std::cout << "{\n  \"version\": 1,\n  \"entries\": [\n";
  emit(entries);
  std::cout << "  ],\n  \"family_bases\": [\n";
  emit(bases);
  std::cout << "  ]\n}\n";
}
