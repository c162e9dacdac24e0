#include "antidiag/catalog.hpp"

#include "antidiag/error.hpp"

#include "json.hpp"

#include <fstream>
#include <set>
#include <sstream>

namespace antidiag {

namespace {

using nlohmann::json;

constexpr std::string_view kBundled = R"json([
  {"name": "C1", "kind": "cyclic", "params": [1]},
  {"name": "C2", "kind": "cyclic", "params": [2]},
  {"name": "C3", "kind": "cyclic", "params": [3]},
  {"name": "C4", "kind": "cyclic", "params": [4]},
  {"name": "C5", "kind": "cyclic", "params": [5]},
  {"name": "C6", "kind": "cyclic", "params": [6]},
  {"name": "C7", "kind": "cyclic", "params": [7]},
  {"name": "C8", "kind": "cyclic", "params": [8]},
  {"name": "C9", "kind": "cyclic", "params": [9]},
  {"name": "C10", "kind": "cyclic", "params": [10]},
  {"name": "C11", "kind": "cyclic", "params": [11]},
  {"name": "C12", "kind": "cyclic", "params": [12]},
  {"name": "C2^2", "product": ["C2", "C2"], "notes": "elementary abelian of order 4"},
  {"name": "C2^3", "product": ["C2^2", "C2"], "notes": "elementary abelian of order 8"},
  {"name": "V4", "cayley": [[0, 1, 2, 3], [1, 0, 3, 2], [2, 3, 0, 1], [3, 2, 1, 0]],
   "notes": "Klein four-group from its multiplication table"},
  {"name": "D4", "kind": "dihedral", "params": [2]},
  {"name": "D6", "kind": "dihedral", "params": [3]},
  {"name": "D8", "kind": "dihedral", "params": [4], "notes": "extraspecial of order 8, + type"},
  {"name": "D10", "kind": "dihedral", "params": [5]},
  {"name": "D12", "kind": "dihedral", "params": [6]},
  {"name": "D14", "kind": "dihedral", "params": [7]},
  {"name": "D16", "kind": "dihedral", "params": [8]},
  {"name": "D18", "kind": "dihedral", "params": [9]},
  {"name": "D20", "kind": "dihedral", "params": [10]},
  {"name": "D22", "kind": "dihedral", "params": [11]},
  {"name": "D24", "kind": "dihedral", "params": [12]},
  {"name": "Q8", "perm_gens": [[1, 2, 3, 0, 5, 6, 7, 4], [4, 7, 6, 5, 2, 1, 0, 3]],
   "notes": "extraspecial of order 8, - type; regular representation"},
  {"name": "Dic12",
   "perm_gens": [[1, 2, 3, 4, 5, 0, 7, 8, 9, 10, 11, 6], [6, 11, 10, 9, 8, 7, 3, 2, 1, 0, 5, 4]],
   "notes": "dicyclic of order 12; regular representation"},
  {"name": "Dic16",
   "perm_gens": [[1, 2, 3, 4, 5, 6, 7, 0, 9, 10, 11, 12, 13, 14, 15, 8],
                 [8, 15, 14, 13, 12, 11, 10, 9, 4, 3, 2, 1, 0, 7, 6, 5]],
   "notes": "dicyclic (generalized quaternion) of order 16; regular representation"},
  {"name": "2^(1+2)", "kind": "extraspecial", "params": [2, 1], "notes": "isomorphic to D8"},
  {"name": "2^(1+4)", "kind": "extraspecial", "params": [2, 2], "notes": "central product D8 * D8"},
  {"name": "3^(1+2)", "kind": "extraspecial", "params": [3, 1], "notes": "Heisenberg group over F3"},
  {"name": "5^(1+2)", "kind": "extraspecial", "params": [5, 1], "notes": "Heisenberg group over F5"},
  {"name": "A4", "kind": "alternating", "params": [4]},
  {"name": "S4", "kind": "symmetric", "params": [4]},
  {"name": "A5", "perm_gens": [[1, 2, 3, 4, 0], [1, 2, 0, 3, 4]],
   "notes": "generated by (0 1 2 3 4) and (0 1 2)"},
  {"name": "S5", "kind": "symmetric", "params": [5]},
  {"name": "SL(2,2)", "kind": "sl2", "params": [2]},
  {"name": "SL(2,3)", "kind": "sl2", "params": [3], "notes": "binary tetrahedral group"},
  {"name": "SL(2,4)", "kind": "sl2", "params": [4], "notes": "isomorphic to A5"},
  {"name": "SL(2,5)", "kind": "sl2", "params": [5], "notes": "binary icosahedral group"},
  {"name": "GL(2,3)", "kind": "gl2_3", "params": [],
   "notes": "stands in for the binary octahedral group: isoclinic to it, same degrees 1,1,2,2,2,3,3,4"},
  {"name": "SL(2,7)", "kind": "sl2", "params": [7]},
  {"name": "PSL(2,7)", "kind": "psl2_7", "params": []},
  {"name": "AGL(1,3)", "kind": "affine", "params": [3]},
  {"name": "AGL(1,4)", "kind": "affine", "params": [4]},
  {"name": "AGL(1,5)", "kind": "affine", "params": [5]},
  {"name": "AGL(1,7)", "kind": "affine", "params": [7]},
  {"name": "AGL(1,8)", "kind": "affine", "params": [8]},
  {"name": "AGL(1,9)", "kind": "affine", "params": [9]},
  {"name": "D8xC3", "product": ["D8", "C3"], "notes": "nilpotent: 2-group times odd abelian"},
  {"name": "Q8xC3", "product": ["Q8", "C3"]},
  {"name": "D8xC2", "product": ["D8", "C2"]},
  {"name": "A4xC2", "product": ["A4", "C2"]},
  {"name": "S3xS3", "product": ["D6", "D6"]},
  {"name": "SL(2,3)xC2", "product": ["SL(2,3)", "C2"]},
  {"name": "A5xA5", "product": ["A5", "A5"]}
]
)json";

[[noreturn]] void fail(std::size_t index, const std::string& what) {
  throw Error(ErrorCode::ParseError, "entry " + std::to_string(index) + ": " + what);
}

template <typename T>
std::vector<T> integer_list(const json& node, std::size_t index, const char* field) {
  if (!node.is_array()) fail(index, std::string("\"") + field + "\" must be an array");
  std::vector<T> out;
  for (const auto& v : node) {
    if (!v.is_number_integer()) fail(index, std::string("\"") + field + "\" must hold integers");
    if constexpr (std::is_unsigned_v<T>) {
      if (v.get<std::int64_t>() < 0) fail(index, std::string("\"") + field + "\" must be nonnegative");
    }
    out.push_back(v.get<T>());
  }
  return out;
}

template <typename T>
std::vector<std::vector<T>> integer_matrix(const json& node, std::size_t index, const char* field) {
  if (!node.is_array()) fail(index, std::string("\"") + field + "\" must be an array of arrays");
  std::vector<std::vector<T>> out;
  for (const auto& row : node) out.push_back(integer_list<T>(row, index, field));
  return out;
}

CatalogEntry parse_entry(const json& obj, std::size_t index, const std::set<std::string>& earlier) {
  if (!obj.is_object()) fail(index, "not an object");
  if (!obj.contains("name") || !obj["name"].is_string()) fail(index, "missing string \"name\"");
  CatalogEntry entry;
  entry.name = obj["name"].get<std::string>();
  if (entry.name.empty()) fail(index, "empty name");
  if (obj.contains("notes")) {
    if (!obj["notes"].is_string()) fail(index, "\"notes\" must be a string");
    entry.notes = obj["notes"].get<std::string>();
  }

  const int recipes = static_cast<int>(obj.contains("kind")) + obj.contains("perm_gens") +
                      obj.contains("cayley") + obj.contains("product");
  if (recipes != 1) {
    fail(index, "\"" + entry.name + "\" needs exactly one of kind, perm_gens, cayley, product");
  }
  if (obj.contains("params") && !obj.contains("kind")) {
    fail(index, "\"" + entry.name + "\" has params without kind");
  }

  if (obj.contains("kind")) {
    if (!obj["kind"].is_string()) fail(index, "\"kind\" must be a string");
    const auto kind = parse_family_kind(obj["kind"].get<std::string>());
    if (!kind) fail(index, "unknown kind \"" + obj["kind"].get<std::string>() + "\"");
    if (*kind == FamilyKind::product) fail(index, "use \"product\" with entry names instead of kind product");
    FamilySpec spec;
    spec.kind = *kind;
    if (obj.contains("params")) spec.params = integer_list<std::int64_t>(obj["params"], index, "params");
    entry.recipe = spec;
  } else if (obj.contains("perm_gens")) {
    entry.recipe = PermGensRecipe{integer_matrix<std::uint32_t>(obj["perm_gens"], index, "perm_gens")};
  } else if (obj.contains("cayley")) {
    entry.recipe = CayleyRecipe{integer_matrix<ElementIndex>(obj["cayley"], index, "cayley")};
  } else {
    const json& names = obj["product"];
    if (!names.is_array() || names.empty()) fail(index, "\"product\" must be a nonempty array");
    ProductRecipe recipe;
    for (const auto& n : names) {
      if (!n.is_string()) fail(index, "\"product\" must hold entry names");
      const auto name = n.get<std::string>();
      if (!earlier.count(name)) fail(index, "product refers to unknown or later entry \"" + name + "\"");
      recipe.names.push_back(name);
    }
    entry.recipe = recipe;
  }
  return entry;
}

}  // namespace

std::vector<CatalogEntry> parse_catalog(std::string_view text) {
  json doc;
  try {
    doc = json::parse(text.begin(), text.end());
  } catch (const json::parse_error& e) {
    throw Error(ErrorCode::ParseError, e.what());
  }
  if (!doc.is_array()) throw Error(ErrorCode::ParseError, "catalog must be a JSON array");

  std::vector<CatalogEntry> entries;
  std::set<std::string> names;
  for (std::size_t i = 0; i < doc.size(); ++i) {
    CatalogEntry entry = parse_entry(doc[i], i, names);
    if (!names.insert(entry.name).second) {
      throw Error(ErrorCode::DuplicateName, "entry " + std::to_string(i) + ": \"" + entry.name + "\"");
    }
    entries.push_back(std::move(entry));
  }
  return entries;
}

std::vector<CatalogEntry> load_catalog(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorCode::Io, "cannot read " + path.string());
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return parse_catalog(buffer.str());
}

std::string_view bundled_catalog_text() { return kBundled; }

const std::vector<CatalogEntry>& bundled_catalog() {
  static const std::vector<CatalogEntry> entries = parse_catalog(kBundled);
  return entries;
}

Group build_entry(const CatalogEntry& entry, const std::map<std::string, Group>& earlier,
                  const Limits& limits) {
  struct Builder {
    const CatalogEntry& entry;
    const std::map<std::string, Group>& earlier;
    const Limits& limits;

    Group operator()(const FamilySpec& spec) const { return make_family(spec, limits); }

    Group operator()(const PermGensRecipe& r) const {
      std::vector<Permutation> gens;
      for (const auto& images : r.generators) gens.emplace_back(images);
      return from_permutation_generators(gens, entry.name, limits);
    }

    Group operator()(const CayleyRecipe& r) const {
      std::vector<std::string> labels;
      for (std::size_t i = 0; i < r.table.size(); ++i) labels.push_back(std::to_string(i));
      return Group::from_cayley_table(r.table, std::move(labels), entry.name, limits);
    }

    Group operator()(const ProductRecipe& r) const {
      auto lookup = [&](const std::string& name) -> const Group& {
        const auto it = earlier.find(name);
        if (it == earlier.end()) {
          throw Error(ErrorCode::InvalidParams, entry.name + ": factor \"" + name + "\" was not built");
        }
        return it->second;
      };
      Group acc = lookup(r.names.front());
      for (std::size_t i = 1; i < r.names.size(); ++i) {
        const Group& next = lookup(r.names[i]);
        if (acc.order() * next.order() > limits.order_cap) {
          throw Error(ErrorCode::ClosureExceedsCap, entry.name + ": product order above cap");
        }
        acc = direct_product(acc, next, limits);
      }
      return acc;
    }
  };
  return std::visit(Builder{entry, earlier, limits}, entry.recipe).renamed(entry.name);
}

}  // namespace antidiag
