#include "weilbounds/variety_io.hpp"

#include <filesystem>
#include <fstream>
#include <set>

#include <json.hpp>

namespace weilbounds {

namespace {

using nlohmann::json;

void reject_unknown_keys(const json& obj, const std::set<std::string>& allowed,
                         const std::string& path, const std::string& where) {
  for (const auto& [key, _] : obj.items()) {
    if (!allowed.count(key))
      throw SchemaError(path, "unknown key \"" + key + "\" in " + where);
  }
}

const json& require(const json& obj, const char* key, const std::string& path,
                    const std::string& where) {
  auto it = obj.find(key);
  if (it == obj.end())
    throw SchemaError(path, "missing key \"" + std::string(key) + "\" in " +
                                where);
  return *it;
}

long require_int(const json& obj, const char* key, const std::string& path,
                 const std::string& where) {
  const json& v = require(obj, key, path, where);
  if (!v.is_number_integer())
    throw SchemaError(path, "\"" + std::string(key) + "\" must be an integer");
  return v.get<long>();
}

bool require_bool(const json& obj, const char* key, const std::string& path,
                  const std::string& where) {
  const json& v = require(obj, key, path, where);
  if (!v.is_boolean())
    throw SchemaError(path, "\"" + std::string(key) + "\" must be a boolean");
  return v.get<bool>();
}

}  // namespace

VarietySpec load_variety(const std::string& path, const Caps& caps) {
  std::ifstream in(path);
  if (!in) throw SchemaError(path, "cannot open file");
  json doc;
  try {
    in >> doc;
  } catch (const json::parse_error& e) {
    throw SchemaError(path, std::string("invalid JSON: ") + e.what());
  }
  if (!doc.is_object()) throw SchemaError(path, "top level must be an object");
  reject_unknown_keys(doc, {"field", "ambient", "forms", "declared", "cone_of"},
                      path, "top level");

  const json& field = require(doc, "field", path, "top level");
  reject_unknown_keys(field, {"p", "k"}, path, "\"field\"");
  const long p = require_int(field, "p", path, "\"field\"");
  const long k = require_int(field, "k", path, "\"field\"");
  if (p < 2 || k < 1) throw SchemaError(path, "field needs p >= 2 and k >= 1");

  const json& ambient = require(doc, "ambient", path, "top level");
  reject_unknown_keys(ambient, {"type", "dim"}, path, "\"ambient\"");
  const json& type = require(ambient, "type", path, "\"ambient\"");
  if (!type.is_string() ||
      (type.get<std::string>() != "projective" &&
       type.get<std::string>() != "affine"))
    throw SchemaError(path, "ambient type must be \"projective\" or \"affine\"");
  const long N = require_int(ambient, "dim", path, "\"ambient\"");
  if (N < 1) throw SchemaError(path, "ambient dim must be >= 1");

  const json& forms = require(doc, "forms", path, "top level");
  if (!forms.is_array())
    throw SchemaError(path, "\"forms\" must be an array of strings");

  const json& declared = require(doc, "declared", path, "top level");
  reject_unknown_keys(declared,
                      {"dim", "sing_dim", "irreducible", "nonsingular",
                       "normal", "isolated_singularities",
                       "complete_intersection"},
                      path, "\"declared\"");

  VarietySpec v;
  v.field = make_field(static_cast<std::uint64_t>(p),
                       static_cast<unsigned>(k), caps);
  v.ambient = type.get<std::string>() == "projective" ? Ambient::projective
                                                      : Ambient::affine;
  v.ambient_dim = static_cast<unsigned>(N);
  v.declared_dim = static_cast<int>(require_int(declared, "dim", path,
                                                "\"declared\""));
  v.declared_sing_dim = static_cast<int>(
      require_int(declared, "sing_dim", path, "\"declared\""));
  v.flags.irreducible = require_bool(declared, "irreducible", path,
                                     "\"declared\"");
  v.flags.nonsingular = require_bool(declared, "nonsingular", path,
                                     "\"declared\"");
  v.flags.normal = require_bool(declared, "normal", path, "\"declared\"");
  v.flags.isolated_singularities =
      require_bool(declared, "isolated_singularities", path, "\"declared\"");
  v.flags.complete_intersection =
      require_bool(declared, "complete_intersection", path, "\"declared\"");

  const unsigned nvars = v.nvars();
  std::size_t index = 0;
  for (const auto& entry : forms) {
    if (!entry.is_string())
      throw SchemaError(path, "form " + std::to_string(index) +
                                  " must be a string");
    MPoly f = MPoly::parse(entry.get<std::string>(), nvars,
                           static_cast<std::uint64_t>(p), caps.degree_cap);
    if (v.ambient == Ambient::projective && !f.is_homogeneous())
      throw NonHomogeneousFormError(index);
    v.forms.push_back(std::move(f));
    ++index;
  }

  if (doc.contains("cone_of")) {
    const json& cone = doc["cone_of"];
    if (!cone.is_string())
      throw SchemaError(path, "\"cone_of\" must be a string path");
    std::filesystem::path base = std::filesystem::path(path).parent_path();
    v.cone_of = (base / cone.get<std::string>()).string();
  }

  if (v.declared_sing_dim < -1)
    throw DeclarationError("declared sing_dim must be >= -1");
  if (v.flags.nonsingular && v.declared_sing_dim != -1)
    throw DeclarationError(
        "nonsingular flag requires declared sing_dim = -1");
  if (v.flags.complete_intersection &&
      v.declared_dim !=
          static_cast<long>(v.ambient_dim) - static_cast<long>(v.forms.size()))
    throw DeclarationError(
        "complete-intersection flag requires declared dim = N - r");
  if (v.declared_dim < 0 || v.declared_dim > static_cast<long>(v.ambient_dim))
    throw DeclarationError("declared dim out of range");
  return v;
}

}  // namespace weilbounds
