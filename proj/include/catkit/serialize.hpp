#pragma once

#include <algorithm>
#include <map>
#include <memory>
#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

#include "monmonad.hpp"

namespace catkit {

/// Identifier of the on-disk format, echoed in every file and by the CLI.
inline const char* format_name() { return "catkit-ff/1"; }

/// A named bag of entities, the unit the file format works in. Loading a
/// file yields one of these; every CLI command addresses entities by name
/// inside it.
struct Workspace {
  std::map<std::string, CatRef> categories;
  std::map<std::string, Functor> functors;
  std::map<std::string, NatTrans> nattrans;
  std::map<std::string, Monad> monads;
  std::map<std::string, MonoidalStructure> monoidals;
  std::map<std::string, MonoidalMonadTuple> tuples;
};

namespace detail {

using json = nlohmann::json;

/// Canonical form for a table: rows of strings, sorted lexicographically.
inline json sorted_rows(std::vector<std::vector<std::string>> rows) {
  std::sort(rows.begin(), rows.end());
  json a = json::array();
  for (auto& r : rows) {
    json row = json::array();
    for (auto& s : r) row.push_back(std::move(s));
    a.push_back(std::move(row));
  }
  return a;
}

/// SAX walk that finds the first repeated key inside any one object; the
/// DOM parser would silently keep the last occurrence, and a file with two
/// entities of one name must be rejected by name instead.
struct DuplicateKeyScan {
  std::vector<std::set<std::string>> stack;
  std::string duplicate;

  bool key(std::string& k) {
    if (!stack.back().insert(k).second) {
      duplicate = k;
      return false;
    }
    return true;
  }
  bool start_object(std::size_t) {
    stack.emplace_back();
    return true;
  }
  bool end_object() {
    stack.pop_back();
    return true;
  }
  bool start_array(std::size_t) { return true; }
  bool end_array() { return true; }
  bool null() { return true; }
  bool boolean(bool) { return true; }
  bool number_integer(json::number_integer_t) { return true; }
  bool number_unsigned(json::number_unsigned_t) { return true; }
  bool number_float(json::number_float_t, const std::string&) { return true; }
  bool string(std::string&) { return true; }
  bool binary(json::binary_t&) { return true; }
  bool parse_error(std::size_t, const std::string&, const nlohmann::detail::exception&) {
    return false;
  }
};

inline const json& want(const json& j, const char* key, const std::string& ctx) {
  auto it = j.find(key);
  if (it == j.end()) throw catkit_error(ctx + ": missing field '" + key + "'");
  return *it;
}

inline std::string want_str(const json& j, const char* key, const std::string& ctx) {
  const json& v = want(j, key, ctx);
  if (!v.is_string()) throw catkit_error(ctx + ": field '" + key + "' must be a string");
  return v.get<std::string>();
}

/// Reads an array of fixed-width string tuples, e.g. [["f","g","fg"], ...].
inline std::vector<std::vector<std::string>> want_rows(const json& j, const char* key,
                                                       std::size_t width,
                                                       const std::string& ctx) {
  const json& v = want(j, key, ctx);
  if (!v.is_array()) throw catkit_error(ctx + ": field '" + key + "' must be an array");
  std::vector<std::vector<std::string>> rows;
  rows.reserve(v.size());
  for (const json& row : v) {
    if (!row.is_array() || row.size() != width)
      throw catkit_error(ctx + ": field '" + key + "' expects rows of " +
                         std::to_string(width) + " strings");
    std::vector<std::string> r;
    r.reserve(width);
    for (const json& cell : row) {
      if (!cell.is_string())
        throw catkit_error(ctx + ": field '" + key + "' expects rows of strings");
      r.push_back(cell.get<std::string>());
    }
    rows.push_back(std::move(r));
  }
  return rows;
}

inline CatRef find_category(const Workspace& w, const std::string& name,
                            const std::string& ctx) {
  auto it = w.categories.find(name);
  if (it == w.categories.end())
    throw catkit_error(ctx + ": unknown category '" + name + "'");
  return it->second;
}

// --- categories -------------------------------------------------------------

inline json category_to_json(const FinCat& c) {
  json j;
  std::vector<std::string> obs(c.objects().begin(), c.objects().end());
  std::sort(obs.begin(), obs.end());
  j["objects"] = json(obs);
  std::vector<Mor> mors(c.morphisms().begin(), c.morphisms().end());
  std::sort(mors.begin(), mors.end(), [](const Mor& a, const Mor& b) { return a.id < b.id; });
  json mj = json::array();
  for (const auto& m : mors)
    mj.push_back(json{{"id", m.id}, {"dom", m.dom}, {"cod", m.cod}});
  j["morphisms"] = std::move(mj);
  std::vector<std::vector<std::string>> ids;
  for (const auto& a : c.objects())
    if (const std::string* i = c.identity_of(a)) ids.push_back({a, *i});
  j["identities"] = sorted_rows(std::move(ids));
  std::vector<std::vector<std::string>> comp;
  for (const auto& row : c.compose_entries_sorted())
    comp.push_back({row[0], row[1], row[2]});
  j["compose"] = sorted_rows(std::move(comp));
  return j;
}

inline CatRef category_from_json(const json& j, const std::string& ctx) {
  auto c = std::make_shared<FinCat>();
  const json& obs = want(j, "objects", ctx);
  if (!obs.is_array()) throw catkit_error(ctx + ": field 'objects' must be an array");
  for (const json& a : obs) {
    if (!a.is_string()) throw catkit_error(ctx + ": objects must be strings");
    c->add_object(a.get<std::string>());
  }
  const json& mors = want(j, "morphisms", ctx);
  if (!mors.is_array()) throw catkit_error(ctx + ": field 'morphisms' must be an array");
  for (const json& m : mors) {
    if (!m.is_object())
      throw catkit_error(ctx + ": each morphism must be an object with id, dom, cod");
    c->add_morphism(want_str(m, "id", ctx + ".morphisms"),
                    want_str(m, "dom", ctx + ".morphisms"),
                    want_str(m, "cod", ctx + ".morphisms"));
  }
  for (const auto& row : want_rows(j, "identities", 2, ctx))
    c->set_identity(row[0], row[1]);
  for (const auto& row : want_rows(j, "compose", 3, ctx))
    c->set_compose(row[0], row[1], row[2]);
  return c;
}

// --- functors and transformations -------------------------------------------

/// Maps of a functor as sorted rows; boundary categories are written by the
/// caller (named functors write names, embedded ones write only the maps).
inline void functor_maps_to_json(json& j, const Functor& f) {
  std::vector<std::vector<std::string>> ob;
  for (const auto& a : f.source->objects()) {
    auto it = f.ob_map.find(a);
    if (it != f.ob_map.end()) ob.push_back({a, it->second});
  }
  j["ob"] = sorted_rows(std::move(ob));
  std::vector<std::vector<std::string>> mor;
  for (const auto& m : f.source->morphisms()) {
    auto it = f.mor_map.find(m.id);
    if (it != f.mor_map.end()) mor.push_back({m.id, it->second});
  }
  j["mor"] = sorted_rows(std::move(mor));
}

inline void functor_maps_from_json(Functor& f, const json& j, const std::string& ctx) {
  for (const auto& row : want_rows(j, "ob", 2, ctx)) f.ob_map[row[0]] = row[1];
  for (const auto& row : want_rows(j, "mor", 2, ctx)) f.mor_map[row[0]] = row[1];
}

inline json functor_to_json(const Functor& f, const Workspace& w) {
  json j;
  for (const auto& [name, cat] : w.categories) {
    if (same_cat(cat, f.source)) j["source"] = name;
    if (same_cat(cat, f.target)) j["target"] = name;
  }
  if (!j.contains("source") || !j.contains("target"))
    throw catkit_error("cannot save functor: its categories are not in the workspace");
  functor_maps_to_json(j, f);
  return j;
}

inline Functor functor_from_json(const json& j, const Workspace& w, const std::string& ctx) {
  Functor f{find_category(w, want_str(j, "source", ctx), ctx),
            find_category(w, want_str(j, "target", ctx), ctx),
            {},
            {}};
  functor_maps_from_json(f, j, ctx);
  return f;
}

inline json nattrans_to_json(const NatTrans& t, const Workspace& w) {
  json j;
  j["source"] = functor_to_json(t.source, w);
  j["target"] = functor_to_json(t.target, w);
  std::vector<std::vector<std::string>> comp;
  for (const auto& a : t.source.source->objects()) {
    auto it = t.components.find(a);
    if (it != t.components.end()) comp.push_back({a, it->second});
  }
  j["components"] = sorted_rows(std::move(comp));
  return j;
}

inline NatTrans nattrans_from_json(const json& j, const Workspace& w, const std::string& ctx) {
  NatTrans t{functor_from_json(want(j, "source", ctx), w, ctx + ".source"),
             functor_from_json(want(j, "target", ctx), w, ctx + ".target"),
             {}};
  for (const auto& row : want_rows(j, "components", 2, ctx)) t.components[row[0]] = row[1];
  return t;
}

// --- monads ------------------------------------------------------------------

inline json monad_to_json(const Monad& m, const Workspace& w) {
  json j;
  for (const auto& [name, cat] : w.categories)
    if (same_cat(cat, m.base)) j["base"] = name;
  if (!j.contains("base"))
    throw catkit_error("cannot save monad: its base category is not in the workspace");
  json endo;
  functor_maps_to_json(endo, m.endo);
  j["endo"] = std::move(endo);
  std::vector<std::vector<std::string>> unit, mult;
  for (const auto& a : m.base->objects()) {
    auto u = m.unit.components.find(a);
    if (u != m.unit.components.end()) unit.push_back({a, u->second});
    auto x = m.mult.components.find(a);
    if (x != m.mult.components.end()) mult.push_back({a, x->second});
  }
  j["unit"] = sorted_rows(std::move(unit));
  j["mult"] = sorted_rows(std::move(mult));
  return j;
}

inline Monad monad_from_json(const json& j, const Workspace& w, const std::string& ctx) {
  CatRef base = find_category(w, want_str(j, "base", ctx), ctx);
  Monad m;
  m.base = base;
  m.endo = Functor{base, base, {}, {}};
  functor_maps_from_json(m.endo, want(j, "endo", ctx), ctx + ".endo");
  // Boundaries of the structure transformations are canonical, so the file
  // stores only components and the loader rebuilds the functors. On a file
  // whose endofunctor is not total the squared composite cannot be formed;
  // fall back to an empty-map functor and let validation flag the gap.
  m.unit = NatTrans{identity_functor(base), m.endo, {}};
  Functor sq{base, base, {}, {}};
  try {
    sq = compose_functors(m.endo, m.endo);
  } catch (const catkit_error&) {
  }
  m.mult = NatTrans{std::move(sq), m.endo, {}};
  for (const auto& row : want_rows(j, "unit", 2, ctx)) m.unit.components[row[0]] = row[1];
  for (const auto& row : want_rows(j, "mult", 2, ctx)) m.mult.components[row[0]] = row[1];
  return m;
}

// --- monoidal structures ------------------------------------------------------

inline json monoidal_to_json(const MonoidalStructure& s, const Workspace& w) {
  json j;
  for (const auto& [name, cat] : w.categories)
    if (same_cat(cat, s.base)) j["base"] = name;
  if (!j.contains("base"))
    throw catkit_error("cannot save monoidal structure: its base category is not in the workspace");
  j["unit"] = s.unit_object;
  const FinCat& c = *s.base;
  std::vector<std::vector<std::string>> tob, tmor;
  for (const auto& a : c.objects())
    for (const auto& b : c.objects()) {
      auto it = s.tensor.ob_map.find(pair_id(a, b));
      if (it != s.tensor.ob_map.end()) tob.push_back({a, b, it->second});
    }
  for (const auto& f : c.morphisms())
    for (const auto& g : c.morphisms()) {
      auto it = s.tensor.mor_map.find(pair_id(f.id, g.id));
      if (it != s.tensor.mor_map.end()) tmor.push_back({f.id, g.id, it->second});
    }
  j["tensor"] =
      json{{"ob", sorted_rows(std::move(tob))}, {"mor", sorted_rows(std::move(tmor))}};
  std::vector<std::vector<std::string>> assoc;
  for (const auto& a : c.objects())
    for (const auto& b : c.objects())
      for (const auto& x : c.objects()) {
        auto it = s.assoc.find({a, b, x});
        if (it != s.assoc.end()) assoc.push_back({a, b, x, it->second});
      }
  j["assoc"] = sorted_rows(std::move(assoc));
  std::vector<std::vector<std::string>> lu, ru;
  for (const auto& a : c.objects()) {
    auto l = s.left_unitor.find(a);
    if (l != s.left_unitor.end()) lu.push_back({a, l->second});
    auto r = s.right_unitor.find(a);
    if (r != s.right_unitor.end()) ru.push_back({a, r->second});
  }
  j["left_unitor"] = sorted_rows(std::move(lu));
  j["right_unitor"] = sorted_rows(std::move(ru));
  if (s.braid) {
    json braid;
    braid["symmetric"] = s.braid->symmetric;
    std::vector<std::vector<std::string>> comps;
    for (const auto& a : c.objects())
      for (const auto& b : c.objects()) {
        auto it = s.braid->components.find({a, b});
        if (it != s.braid->components.end()) comps.push_back({a, b, it->second});
      }
    braid["components"] = sorted_rows(std::move(comps));
    j["braid"] = std::move(braid);
  }
  return j;
}

inline MonoidalStructure monoidal_from_json(const json& j, const Workspace& w,
                                            const std::string& ctx) {
  CatRef base = find_category(w, want_str(j, "base", ctx), ctx);
  MonoidalStructure s;
  s.base = base;
  s.base_sq = product_category(base, base).cat;
  s.unit_object = want_str(j, "unit", ctx);
  s.tensor = Functor{s.base_sq, base, {}, {}};
  const json& tensor = want(j, "tensor", ctx);
  for (const auto& row : want_rows(tensor, "ob", 3, ctx + ".tensor"))
    s.tensor.ob_map[pair_id(row[0], row[1])] = row[2];
  for (const auto& row : want_rows(tensor, "mor", 3, ctx + ".tensor"))
    s.tensor.mor_map[pair_id(row[0], row[1])] = row[2];
  for (const auto& row : want_rows(j, "assoc", 4, ctx))
    s.assoc[{row[0], row[1], row[2]}] = row[3];
  for (const auto& row : want_rows(j, "left_unitor", 2, ctx)) s.left_unitor[row[0]] = row[1];
  for (const auto& row : want_rows(j, "right_unitor", 2, ctx)) s.right_unitor[row[0]] = row[1];
  if (auto it = j.find("braid"); it != j.end()) {
    const json& bj = *it;
    Braid b;
    const json& sym = want(bj, "symmetric", ctx + ".braid");
    if (!sym.is_boolean())
      throw catkit_error(ctx + ".braid: field 'symmetric' must be a boolean");
    b.symmetric = sym.get<bool>();
    for (const auto& row : want_rows(bj, "components", 3, ctx + ".braid"))
      b.components[{row[0], row[1]}] = row[2];
    s.braid = std::move(b);
  }
  return s;
}

// --- tuples --------------------------------------------------------------------

inline json tuple_to_json(const MonoidalMonadTuple& t, const Workspace& w) {
  json j;
  for (const auto& [name, s] : w.monoidals)
    if (same_monoidal(s, t.structure)) j["monoidal"] = name;
  for (const auto& [name, m] : w.monads)
    if (same_monad(m, t.monad)) j["monad"] = name;
  if (!j.contains("monoidal") || !j.contains("monad"))
    throw catkit_error(
        "cannot save tuple: its monoidal structure or monad is not in the workspace");
  j["variant"] = laxity_name(t.variant);
  std::vector<std::vector<std::string>> ic;
  const FinCat& c = *t.structure.base;
  for (const auto& a : c.objects())
    for (const auto& b : c.objects()) {
      auto it = t.interchange.components.find(pair_id(a, b));
      if (it != t.interchange.components.end()) ic.push_back({a, b, it->second});
    }
  j["interchange"] = sorted_rows(std::move(ic));
  j["unit_cell"] = t.unit_cell;
  return j;
}

inline MonoidalMonadTuple tuple_from_json(const json& j, const Workspace& w,
                                          const std::string& ctx,
                                          std::optional<Laxity> requested) {
  std::string mono_name = want_str(j, "monoidal", ctx);
  auto ms = w.monoidals.find(mono_name);
  if (ms == w.monoidals.end())
    throw catkit_error(ctx + ": unknown monoidal structure '" + mono_name + "'");
  std::string monad_name = want_str(j, "monad", ctx);
  auto mm = w.monads.find(monad_name);
  if (mm == w.monads.end())
    throw catkit_error(ctx + ": unknown monad '" + monad_name + "'");

  // The variant field is authoritative when present; a caller-requested
  // orientation fills in when the file omits it and must not contradict it
  // otherwise. Files without either default to lax.
  Laxity variant = Laxity::lax;
  if (auto it = j.find("variant"); it != j.end()) {
    if (!it->is_string() || (*it != "lax" && *it != "oplax"))
      throw catkit_error(ctx + ": field 'variant' must be \"lax\" or \"oplax\"");
    variant = *it == "lax" ? Laxity::lax : Laxity::oplax;
    if (requested && *requested != variant)
      throw catkit_error(ctx + ": the file says " + laxity_name(variant) +
                         " but the command requested " + laxity_name(*requested));
  } else if (requested) {
    variant = *requested;
  }

  MonoidalMonadTuple t;
  t.structure = ms->second;
  t.monad = mm->second;
  t.variant = variant;
  // The interchange boundary is canonical in the structure and monad; on a
  // file whose tensor or endofunctor is not total it cannot be formed — use
  // empty boundary functors and let validation flag the gaps first.
  NatTrans ic{Functor{t.structure.base_sq, t.structure.base, {}, {}},
              Functor{t.structure.base_sq, t.structure.base, {}, {}},
              {}};
  try {
    auto [src, tgt] = interchange_boundary(t.structure, t.monad, t.variant);
    ic.source = std::move(src);
    ic.target = std::move(tgt);
  } catch (const catkit_error&) {
  }
  for (const auto& row : want_rows(j, "interchange", 3, ctx))
    ic.components[pair_id(row[0], row[1])] = row[2];
  t.interchange = std::move(ic);
  t.unit_cell = want_str(j, "unit_cell", ctx);
  return t;
}

}  // namespace detail

/// Parses the canonical file format into a workspace. Throws catkit_error
/// with a human-readable message on malformed input or dangling references;
/// unlawful but well-formed entities load fine and fail validation instead.
/// `requested` supplies a tuple orientation for files that omit the field
/// and is an error when it contradicts one they carry.
inline Workspace load_workspace(const std::string& text,
                                std::optional<Laxity> requested = std::nullopt) {
  detail::json j;
  try {
    j = detail::json::parse(text);
  } catch (const detail::json::parse_error& e) {
    throw catkit_error(std::string("parse error: ") + e.what());
  }
  detail::DuplicateKeyScan scan;
  if (!detail::json::sax_parse(text, &scan) && !scan.duplicate.empty())
    throw catkit_error("duplicate name '" + scan.duplicate + "'");
  if (!j.is_object()) throw catkit_error("the top level of a workspace file must be an object");
  std::string fmt = detail::want_str(j, "format", "workspace");
  if (fmt != format_name())
    throw catkit_error("unsupported format '" + fmt + "' (expected " + format_name() + ")");
  static const char* known[] = {"format",  "categories", "functors", "nattrans",
                                "monads",  "monoidal",   "tuples"};
  for (const auto& [key, value] : j.items()) {
    (void)value;
    bool ok = false;
    for (const char* k : known) ok = ok || key == k;
    if (!ok) throw catkit_error("unknown top-level field '" + key + "'");
  }

  Workspace w;
  auto section = [&](const char* key) -> const detail::json* {
    auto it = j.find(key);
    if (it == j.end()) return nullptr;
    if (!it->is_object())
      throw catkit_error(std::string("field '") + key + "' must map names to entities");
    return &*it;
  };
  if (const auto* s = section("categories"))
    for (const auto& [name, spec] : s->items())
      w.categories[name] = detail::category_from_json(spec, "category " + name);
  if (const auto* s = section("functors"))
    for (const auto& [name, spec] : s->items())
      w.functors[name] = detail::functor_from_json(spec, w, "functor " + name);
  if (const auto* s = section("nattrans"))
    for (const auto& [name, spec] : s->items())
      w.nattrans[name] = detail::nattrans_from_json(spec, w, "transformation " + name);
  if (const auto* s = section("monads"))
    for (const auto& [name, spec] : s->items())
      w.monads[name] = detail::monad_from_json(spec, w, "monad " + name);
  if (const auto* s = section("monoidal"))
    for (const auto& [name, spec] : s->items())
      w.monoidals[name] = detail::monoidal_from_json(spec, w, "monoidal " + name);
  if (const auto* s = section("tuples"))
    for (const auto& [name, spec] : s->items())
      w.tuples[name] = detail::tuple_from_json(spec, w, "tuple " + name, requested);
  return w;
}

/// Renders a workspace in canonical form: object keys sorted, every table a
/// sorted or insertion-ordered array of string rows, two-space indentation,
/// trailing newline. Loading and saving a canonical file reproduces it byte
/// for byte.
inline std::string save_workspace(const Workspace& w) {
  detail::json j;
  j["format"] = format_name();
  if (!w.categories.empty()) {
    detail::json s;
    for (const auto& [name, cat] : w.categories) s[name] = detail::category_to_json(*cat);
    j["categories"] = std::move(s);
  }
  if (!w.functors.empty()) {
    detail::json s;
    for (const auto& [name, f] : w.functors) s[name] = detail::functor_to_json(f, w);
    j["functors"] = std::move(s);
  }
  if (!w.nattrans.empty()) {
    detail::json s;
    for (const auto& [name, t] : w.nattrans) s[name] = detail::nattrans_to_json(t, w);
    j["nattrans"] = std::move(s);
  }
  if (!w.monads.empty()) {
    detail::json s;
    for (const auto& [name, m] : w.monads) s[name] = detail::monad_to_json(m, w);
    j["monads"] = std::move(s);
  }
  if (!w.monoidals.empty()) {
    detail::json s;
    for (const auto& [name, m] : w.monoidals) s[name] = detail::monoidal_to_json(m, w);
    j["monoidal"] = std::move(s);
  }
  if (!w.tuples.empty()) {
    detail::json s;
    for (const auto& [name, t] : w.tuples) s[name] = detail::tuple_to_json(t, w);
    j["tuples"] = std::move(s);
  }
  return j.dump(2) + "\n";
}

}  // namespace catkit
