#include "tripack/construct.hpp"
#include "tripack/error.hpp"
#include "tripack/io.hpp"

namespace tripack {

namespace detail {
extern const std::string_view kCatalogJson;
extern const std::string_view kCatalogSha256;
}  // namespace detail

namespace {

struct FamilyBase {
  TwoFactorShape shape;
  bool with_k5;
  TriplePacking packing;
};

struct Catalog {
  std::vector<CatalogEntry> entries;
  std::vector<FamilyBase> bases;
};

const Catalog& catalog() {
  static const Catalog loaded = [] {
    Catalog c;
    const Json j = Json::parse(detail::kCatalogJson);
    for (const auto& e : j.at("entries")) {
      CatalogEntry entry;
      entry.shape = TwoFactorShape(e.at("shape").get<std::vector<int>>());
      entry.source = e.at("source").get<std::string>();
      for (const auto& p : e.at("packings")) entry.packings.push_back(packing_from_json(p));
      c.entries.push_back(std::move(entry));
    }
    if (j.contains("family_bases")) {
      for (const auto& b : j.at("family_bases"))
        c.bases.push_back({TwoFactorShape(b.at("shape").get<std::vector<int>>()),
                           b.at("k5").get<bool>(), packing_from_json(b.at("packing"))});
    }
    return c;
  }();
  return loaded;
}

}  // namespace

const std::vector<CatalogEntry>& catalog_entries() { return catalog().entries; }

std::optional<CatalogEntry> catalog_lookup(const TwoFactorShape& shape) {
  for (const auto& e : catalog().entries)
    if (e.shape == shape) return e;
  return std::nullopt;
}

std::optional<TriplePacking> family_base(const TwoFactorShape& shape, bool with_k5) {
  for (const auto& b : catalog().bases)
    if (b.shape == shape && b.with_k5 == with_k5) return b.packing;
  return std::nullopt;
}

std::string_view catalog_checksum() { return detail::kCatalogSha256; }

std::string_view catalog_text() { return detail::kCatalogJson; }

}  // namespace tripack
