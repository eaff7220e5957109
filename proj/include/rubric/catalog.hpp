#pragma once

#include <string>
#include <string_view>
#include <vector>

namespace rubric {

struct Criterion {
  std::string id;  // dotted "c.k", where c is the owning category id
  std::string prompt;
  std::string category_id;

  bool operator==(const Criterion&) const = default;
};

struct Category {
  std::string id;
  std::string name;
  std::vector<Criterion> criteria;

  bool operator==(const Category&) const = default;
};

struct CatalogRef {
  std::string catalog_id;
  std::string version;

  bool operator==(const CatalogRef&) const = default;
};

/// Two-level criteria framework: ordered categories, each holding ordered
/// criteria. Values are immutable once built; a changed catalog gets a new
/// version string.
struct CriteriaCatalog {
  std::string catalog_id;
  std::string version;
  std::vector<Category> categories;

  bool operator==(const CriteriaCatalog&) const = default;

  CatalogRef ref() const { return {catalog_id, version}; }

  const Category* find_category(std::string_view id) const;
  const Criterion* find_criterion(std::string_view id) const;
  std::size_t criterion_count() const;
};

struct Violation {
  std::string id;
  std::string message;

  bool operator==(const Violation&) const = default;
};

/// The 11-category, 33-criterion framework for rating research articles as
/// teaching material.
const CriteriaCatalog& builtin_catalog();

inline constexpr std::string_view kBuiltinCatalogId = "builtin";

/// Every broken invariant, each naming the offending id. Empty means valid.
std::vector<Violation> validate_catalog(const CriteriaCatalog& catalog);

/// Parses a catalog document (JSON) and validates it.
/// Throws Error{ParseError} or Error{ValidationError}.
CriteriaCatalog load_catalog(std::string_view document);

std::string serialize_catalog(const CriteriaCatalog& catalog);

}  // namespace rubric
