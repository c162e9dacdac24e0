#pragma once

#include "antidiag/families.hpp"
#include "antidiag/group.hpp"
#include "antidiag/limits.hpp"

#include <cstdint>
#include <filesystem>
#include <map>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

namespace antidiag {

struct PermGensRecipe {
  std::vector<std::vector<std::uint32_t>> generators;  // image arrays, 0-based
  friend bool operator==(const PermGensRecipe&, const PermGensRecipe&) = default;
};

struct CayleyRecipe {
  std::vector<std::vector<ElementIndex>> table;
  friend bool operator==(const CayleyRecipe&, const CayleyRecipe&) = default;
};

/// Direct product of entries defined earlier in the same document.
struct ProductRecipe {
  std::vector<std::string> names;
  friend bool operator==(const ProductRecipe&, const ProductRecipe&) = default;
};

using Recipe = std::variant<FamilySpec, PermGensRecipe, CayleyRecipe, ProductRecipe>;

struct CatalogEntry {
  std::string name;
  Recipe recipe;
  std::string notes;
};

/// Parses a JSON array of entry objects. Each has "name" and exactly one of
/// "kind" (+ "params"), "perm_gens", "cayley" or "product"; "notes" is optional.
/// Throws Error(ParseError) with the position or entry index, Error(DuplicateName).
std::vector<CatalogEntry> parse_catalog(std::string_view text);

/// Reads and parses a catalog file. Throws Error(Io) if it cannot be read.
std::vector<CatalogEntry> load_catalog(const std::filesystem::path& path);

/// The catalog shipped with the library.
const std::vector<CatalogEntry>& bundled_catalog();
std::string_view bundled_catalog_text();

/// Builds one entry. Product recipes look their factors up in `earlier`.
/// The group is named after the entry.
Group build_entry(const CatalogEntry& entry, const std::map<std::string, Group>& earlier,
                  const Limits& limits = {});

}  // namespace antidiag
