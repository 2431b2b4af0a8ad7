#pragma once

#include <algorithm>
#include <array>
#include <cstddef>
#include <memory>
#include <optional>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "report.hpp"

namespace catkit {

struct Mor {
  std::string id, dom, cod;
  friend bool operator==(const Mor&, const Mor&) = default;
};

/// A finite category as explicit data: ordered object/morphism lists, an
/// identity assignment, and a composition table keyed by (g, f) pairs.
/// Nothing is validated on construction — deliberately broken instances are
/// representable, and check_category reports what is wrong with them.
class FinCat {
 public:
  std::string name;

  void add_object(std::string id) {
    objects_.push_back(std::move(id));
  }

  void add_morphism(std::string id, std::string dom, std::string cod) {
    mor_index_.emplace(id, morphisms_.size());
    by_dom_[dom].push_back(id);
    morphisms_.push_back({std::move(id), std::move(dom), std::move(cod)});
  }

  void set_identity(const std::string& obj, std::string mor_id) {
    identity_[obj] = std::move(mor_id);
  }

  void set_compose(const std::string& g, const std::string& f, std::string gf) {
    compose_[key(g, f)] = std::move(gf);
  }

  void erase_compose(const std::string& g, const std::string& f) {
    compose_.erase(key(g, f));
  }

  const std::vector<std::string>& objects() const { return objects_; }
  const std::vector<Mor>& morphisms() const { return morphisms_; }

  bool has_object(const std::string& obj) const {
    return std::find(objects_.begin(), objects_.end(), obj) != objects_.end();
  }

  const Mor* mor(const std::string& id) const {
    auto it = mor_index_.find(id);
    return it == mor_index_.end() ? nullptr : &morphisms_[it->second];
  }

  const Mor& mor_req(const std::string& id) const {
    const Mor* m = mor(id);
    if (!m) throw catkit_error("unknown morphism id: " + id);
    return *m;
  }

  const std::string* identity_of(const std::string& obj) const {
    auto it = identity_.find(obj);
    return it == identity_.end() ? nullptr : &it->second;
  }

  const std::string& id_of(const std::string& obj) const {
    const std::string* i = identity_of(obj);
    if (!i) throw catkit_error("no identity assigned to object: " + obj);
    return *i;
  }

  const std::string* compose_of(const std::string& g, const std::string& f) const {
    auto it = compose_.find(key(g, f));
    return it == compose_.end() ? nullptr : &it->second;
  }

  const std::string& comp(const std::string& g, const std::string& f) const {
    const std::string* c = compose_of(g, f);
    if (!c) throw catkit_error("composite undefined: (" + g + ") after (" + f + ")");
    return *c;
  }

  /// Morphism ids with the given domain, in insertion order.
  const std::vector<std::string>& morphisms_from(const std::string& obj) const {
    static const std::vector<std::string> empty;
    auto it = by_dom_.find(obj);
    return it == by_dom_.end() ? empty : it->second;
  }

  const std::unordered_map<std::string, std::string>& identity_map() const {
    return identity_;
  }

  /// (g, f, g∘f) triples, sorted — for serialization and diffing.
  std::vector<std::array<std::string, 3>> compose_entries_sorted() const {
    std::vector<std::array<std::string, 3>> out;
    out.reserve(compose_.size());
    for (const auto& [k, v] : compose_) {
      auto cut = k.find('\x1f');
      out.push_back({k.substr(0, cut), k.substr(cut + 1), v});
    }
    std::sort(out.begin(), out.end());
    return out;
  }

  std::size_t compose_size() const { return compose_.size(); }

  /// Structural equality: same objects, morphisms, identities, and
  /// composition table. Listing order is presentation, not structure, so it
  /// does not participate.
  friend bool operator==(const FinCat& a, const FinCat& b) {
    if (a.identity_ != b.identity_ || a.compose_ != b.compose_) return false;
    auto ao = a.objects_;
    auto bo = b.objects_;
    std::sort(ao.begin(), ao.end());
    std::sort(bo.begin(), bo.end());
    if (ao != bo) return false;
    auto am = a.morphisms_;
    auto bm = b.morphisms_;
    auto by_id = [](const Mor& x, const Mor& y) { return x.id < y.id; };
    std::sort(am.begin(), am.end(), by_id);
    std::sort(bm.begin(), bm.end(), by_id);
    return am == bm;
  }

 private:
  static std::string key(const std::string& g, const std::string& f) {
    std::string k;
    k.reserve(g.size() + f.size() + 1);
    k += g;
    k += '\x1f';
    k += f;
    return k;
  }

  std::vector<std::string> objects_;
  std::vector<Mor> morphisms_;
  std::unordered_map<std::string, std::size_t> mor_index_;
  std::unordered_map<std::string, std::vector<std::string>> by_dom_;
  std::unordered_map<std::string, std::string> identity_;
  std::unordered_map<std::string, std::string> compose_;
};

/// Categories are shared immutably once built; constructions hand out and
/// keep shared references rather than copying tables around.
using CatRef = std::shared_ptr<const FinCat>;

inline bool same_cat(const CatRef& a, const CatRef& b) {
  if (a == b) return true;
  return a && b && *a == *b;
}

namespace detail {

/// Total-function views of composition used by the law checkers: a missing
/// composite evaluates to a sentinel that never equals a real morphism id,
/// so diagram comparisons stay meaningful over broken tables.
inline std::string comp2(const FinCat& c, const std::string& x, const std::string& y) {
  const std::string* xy = c.compose_of(x, y);
  return xy ? *xy : "<undefined>";
}

inline std::string comp3(const FinCat& c, const std::string& x, const std::string& y,
                         const std::string& z) {
  const std::string* yz = c.compose_of(y, z);
  if (!yz) return "<undefined>";
  const std::string* xyz = c.compose_of(x, *yz);
  return xyz ? *xyz : "<undefined>";
}

}  // namespace detail

struct Functor {
  CatRef source, target;
  std::unordered_map<std::string, std::string> ob_map;
  std::unordered_map<std::string, std::string> mor_map;

  const std::string* ob_ptr(const std::string& a) const {
    auto it = ob_map.find(a);
    return it == ob_map.end() ? nullptr : &it->second;
  }
  const std::string* mor_ptr(const std::string& f) const {
    auto it = mor_map.find(f);
    return it == mor_map.end() ? nullptr : &it->second;
  }
  const std::string& ob(const std::string& a) const {
    const std::string* p = ob_ptr(a);
    if (!p) throw catkit_error("functor undefined on object: " + a);
    return *p;
  }
  const std::string& mor(const std::string& f) const {
    const std::string* p = mor_ptr(f);
    if (!p) throw catkit_error("functor undefined on morphism: " + f);
    return *p;
  }
};

/// Equality of assignments (boundaries are compared by the caller when it
/// matters; two functors with equal maps on a shared source agree).
inline bool same_maps(const Functor& a, const Functor& b) {
  return a.ob_map == b.ob_map && a.mor_map == b.mor_map;
}

struct NatTrans {
  Functor source, target;  // parallel functors
  std::unordered_map<std::string, std::string> components;  // object -> morphism

  const std::string* at_ptr(const std::string& obj) const {
    auto it = components.find(obj);
    return it == components.end() ? nullptr : &it->second;
  }
  const std::string& at(const std::string& obj) const {
    const std::string* p = at_ptr(obj);
    if (!p) throw catkit_error("natural transformation has no component at: " + obj);
    return *p;
  }
};

// ---------------------------------------------------------------------------
// Law checking

/// Validates the category axioms on explicit data: identities exist and are
/// endomorphisms, the composition table is total on composable pairs and
/// empty elsewhere, composites have the right boundaries, and the unit and
/// associativity laws hold. Every violated instance is reported with its
/// witnessing morphisms.
inline Report check_category(const FinCat& c) {
  Report r;
  for (const auto& a : c.objects()) {
    const std::string* i = c.identity_of(a);
    if (!i) {
      r.error("object " + a + " has no identity morphism assigned");
      continue;
    }
    const Mor* m = c.mor(*i);
    if (!m) {
      r.error("identity of " + a + " refers to unknown morphism " + *i);
      continue;
    }
    if (m->dom != a || m->cod != a)
      r.violation("identity-endpoints", "object=" + a, m->dom + "->" + m->cod, a + "->" + a);
  }
  for (const auto& m : c.morphisms()) {
    if (!c.has_object(m.dom)) r.error("morphism " + m.id + " has unknown domain " + m.dom);
    if (!c.has_object(m.cod)) r.error("morphism " + m.id + " has unknown codomain " + m.cod);
  }

  // Composition: total on composable pairs, correctly bounded.
  for (const auto& f : c.morphisms()) {
    for (const auto& gid : c.morphisms_from(f.cod)) {
      const Mor& g = *c.mor(gid);
      const std::string* gf = c.compose_of(gid, f.id);
      if (!gf) {
        r.violation("compose-totality", "g=" + gid + " f=" + f.id, "<undefined>", "<required>");
        continue;
      }
      const Mor* cm = c.mor(*gf);
      if (!cm) {
        r.error("compose(" + gid + "," + f.id + ") refers to unknown morphism " + *gf);
        continue;
      }
      if (cm->dom != f.dom || cm->cod != g.cod)
        r.violation("compose-boundary", "g=" + gid + " f=" + f.id,
                    cm->dom + "->" + cm->cod, f.dom + "->" + g.cod);
    }
  }
  for (const auto& [g, f, gf] : c.compose_entries_sorted()) {
    const Mor* mg = c.mor(g);
    const Mor* mf = c.mor(f);
    if (!mg || !mf) {
      r.error("compose table entry (" + g + "," + f + ") references an unknown morphism");
      continue;
    }
    if (mf->cod != mg->dom)
      r.violation("compose-spurious", "g=" + g + " f=" + f, gf, "<no entry>");
  }

  // Unit laws.
  for (const auto& f : c.morphisms()) {
    const std::string* il = c.identity_of(f.cod);
    const std::string* ir = c.identity_of(f.dom);
    if (il) {
      const std::string* v = c.compose_of(*il, f.id);
      if (v && *v != f.id)
        r.violation("unit-left", "id=" + *il + " f=" + f.id, *v, f.id);
    }
    if (ir) {
      const std::string* v = c.compose_of(f.id, *ir);
      if (v && *v != f.id)
        r.violation("unit-right", "f=" + f.id + " id=" + *ir, *v, f.id);
    }
  }

  // Associativity over all composable triples.
  for (const auto& f : c.morphisms()) {
    for (const auto& gid : c.morphisms_from(f.cod)) {
      const Mor& g = *c.mor(gid);
      for (const auto& hid : c.morphisms_from(g.cod)) {
        const std::string* gf = c.compose_of(gid, f.id);
        const std::string* hg = c.compose_of(hid, gid);
        if (!gf || !hg) continue;  // already reported by totality
        const std::string* lhs = c.compose_of(hid, *gf);
        const std::string* rhs = c.compose_of(*hg, f.id);
        std::string l = lhs ? *lhs : "<undefined>";
        std::string rr = rhs ? *rhs : "<undefined>";
        if (l != rr)
          r.violation("associativity", "h=" + hid + " g=" + gid + " f=" + f.id, l, rr);
      }
    }
  }
  return r;
}

/// Totality of the assignments plus preservation of boundaries, identities,
/// and every entry of the source composition table.
inline Report check_functor(const Functor& F) {
  Report r;
  if (!F.source || !F.target) {
    r.error("functor has unset source or target category");
    return r;
  }
  const FinCat& c = *F.source;
  const FinCat& d = *F.target;
  for (const auto& a : c.objects()) {
    const std::string* fa = F.ob_ptr(a);
    if (!fa)
      r.error("ob_map undefined on object " + a);
    else if (!d.has_object(*fa))
      r.error("ob_map sends " + a + " to unknown object " + *fa);
  }
  for (const auto& [a, fa] : F.ob_map)
    if (!c.has_object(a)) r.error("ob_map key " + a + " is not an object of the source");
  for (const auto& m : c.morphisms()) {
    const std::string* fm = F.mor_ptr(m.id);
    if (!fm) {
      r.error("mor_map undefined on morphism " + m.id);
      continue;
    }
    const Mor* im = d.mor(*fm);
    if (!im) {
      r.error("mor_map sends " + m.id + " to unknown morphism " + *fm);
      continue;
    }
    const std::string* fd = F.ob_ptr(m.dom);
    const std::string* fc = F.ob_ptr(m.cod);
    if (fd && fc && (im->dom != *fd || im->cod != *fc))
      r.violation("functor-boundary", "f=" + m.id, im->dom + "->" + im->cod, *fd + "->" + *fc);
  }
  for (const auto& [f, ff] : F.mor_map)
    if (!c.mor(f)) r.error("mor_map key " + f + " is not a morphism of the source");
  for (const auto& a : c.objects()) {
    const std::string* ia = c.identity_of(a);
    const std::string* fa = F.ob_ptr(a);
    if (!ia || !fa) continue;
    const std::string* fia = F.mor_ptr(*ia);
    const std::string* itgt = d.identity_of(*fa);
    if (fia && itgt && *fia != *itgt)
      r.violation("functor-identity", "object=" + a, *fia, *itgt);
  }
  for (const auto& [g, f, gf] : c.compose_entries_sorted()) {
    const std::string* Fg = F.mor_ptr(g);
    const std::string* Ff = F.mor_ptr(f);
    const std::string* Fgf = F.mor_ptr(gf);
    if (!Fg || !Ff || !Fgf) continue;
    const std::string* tgt = d.compose_of(*Fg, *Ff);
    std::string rhs = tgt ? *tgt : "<undefined>";
    if (*Fgf != rhs)
      r.violation("functor-composition", "g=" + g + " f=" + f, *Fgf, rhs);
  }
  return r;
}

/// Components are total over the source category's objects, correctly
/// bounded (F(A) -> G(A)), and natural against every morphism.
inline Report check_nat_trans(const NatTrans& t) {
  Report r;
  const Functor& F = t.source;
  const Functor& G = t.target;
  if (!F.source || !F.target || !G.source || !G.target) {
    r.error("natural transformation endpoints have unset categories");
    return r;
  }
  if (!same_cat(F.source, G.source) || !same_cat(F.target, G.target)) {
    r.error("natural transformation endpoints are not parallel functors");
    return r;
  }
  const FinCat& c = *F.source;
  const FinCat& d = *F.target;
  for (const auto& a : c.objects()) {
    const std::string* comp = t.at_ptr(a);
    if (!comp) {
      r.error("no component at object " + a);
      continue;
    }
    const Mor* m = d.mor(*comp);
    if (!m) {
      r.error("component at " + a + " refers to unknown morphism " + *comp);
      continue;
    }
    const std::string* fa = F.ob_ptr(a);
    const std::string* ga = G.ob_ptr(a);
    if (fa && ga && (m->dom != *fa || m->cod != *ga))
      r.violation("component-boundary", "object=" + a, m->dom + "->" + m->cod, *fa + "->" + *ga);
  }
  for (const auto& [a, comp] : t.components)
    if (!c.has_object(a)) r.error("component key " + a + " is not an object of the source");
  for (const auto& m : c.morphisms()) {
    const std::string* ta = t.at_ptr(m.dom);
    const std::string* tb = t.at_ptr(m.cod);
    const std::string* Fm = F.mor_ptr(m.id);
    const std::string* Gm = G.mor_ptr(m.id);
    if (!ta || !tb || !Fm || !Gm) continue;
    const std::string* lhs = d.compose_of(*Gm, *ta);
    const std::string* rhs = d.compose_of(*tb, *Fm);
    std::string l = lhs ? *lhs : "<undefined>";
    std::string rr = rhs ? *rhs : "<undefined>";
    if (l != rr) r.violation("naturality", "f=" + m.id, l, rr);
  }
  return r;
}

// ---------------------------------------------------------------------------
// Functor and transformation algebra

inline Functor identity_functor(const CatRef& c) {
  Functor F{c, c, {}, {}};
  for (const auto& a : c->objects()) F.ob_map[a] = a;
  for (const auto& m : c->morphisms()) F.mor_map[m.id] = m.id;
  return F;
}

/// G after F (apply F first).
inline Functor compose_functors(const Functor& G, const Functor& F) {
  if (!same_cat(F.target, G.source))
    throw catkit_error("compose_functors: middle categories do not match");
  Functor R{F.source, G.target, {}, {}};
  for (const auto& [a, fa] : F.ob_map) R.ob_map[a] = G.ob(fa);
  for (const auto& [f, ff] : F.mor_map) R.mor_map[f] = G.mor(ff);
  return R;
}

inline NatTrans identity_nat(const Functor& F) {
  NatTrans t{F, F, {}};
  for (const auto& a : F.source->objects()) t.components[a] = F.target->id_of(F.ob(a));
  return t;
}

/// Componentwise composite of b: G => H after a: F => G.
inline NatTrans vertical_compose(const NatTrans& b, const NatTrans& a) {
  if (!same_maps(a.target, b.source))
    throw catkit_error("vertical_compose: inner functors do not match");
  NatTrans t{a.source, b.target, {}};
  const FinCat& d = *a.source.target;
  // Tolerate non-composable component pairs (possible on unlawful inputs):
  // the sentinel then surfaces as a violation in downstream checks instead
  // of aborting the construction.
  for (const auto& x : a.source.source->objects())
    t.components[x] = detail::comp2(d, b.at(x), a.at(x));
  return t;
}

/// F(t): F∘S => F∘T for t: S => T landing in F's source.
inline NatTrans whisker_left(const Functor& F, const NatTrans& t) {
  if (!same_cat(t.source.target, F.source))
    throw catkit_error("whisker_left: functor does not start where the transformation lands");
  NatTrans r{compose_functors(F, t.source), compose_functors(F, t.target), {}};
  for (const auto& a : t.source.source->objects()) r.components[a] = F.mor(t.at(a));
  return r;
}

/// t_F: S∘F => T∘F for t: S => T and F landing in t's source category.
inline NatTrans whisker_right(const NatTrans& t, const Functor& F) {
  if (!same_cat(F.target, t.source.source))
    throw catkit_error("whisker_right: functor does not land where the transformation starts");
  NatTrans r{compose_functors(t.source, F), compose_functors(t.target, F), {}};
  for (const auto& a : F.source->objects()) r.components[a] = t.at(F.ob(a));
  return r;
}

// ---------------------------------------------------------------------------
// Constructions

inline std::string pair_id(const std::string& a, const std::string& b) {
  return "(" + a + "," + b + ")";
}

struct ProductCategory {
  CatRef cat;
  Functor proj_left, proj_right;
};

/// Cartesian product with canonical "(a,b)" / "(f,g)" identifiers.
inline ProductCategory product_category(const CatRef& c, const CatRef& d) {
  auto p = std::make_shared<FinCat>();
  p->name = pair_id(c->name, d->name);
  for (const auto& a : c->objects())
    for (const auto& b : d->objects()) p->add_object(pair_id(a, b));
  for (const auto& f : c->morphisms())
    for (const auto& g : d->morphisms())
      p->add_morphism(pair_id(f.id, g.id), pair_id(f.dom, g.dom), pair_id(f.cod, g.cod));
  for (const auto& a : c->objects())
    for (const auto& b : d->objects())
      p->set_identity(pair_id(a, b), pair_id(c->id_of(a), d->id_of(b)));
  // Composable pairs whose factor composite is missing (possible on
  // unlawful inputs) are left out; the gap then shows up as a totality
  // violation of the product rather than an abort here.
  for (const auto& f : c->morphisms())
    for (const auto& gid : c->morphisms_from(f.cod)) {
      const std::string* gf = c->compose_of(gid, f.id);
      if (!gf) continue;
      for (const auto& f2 : d->morphisms())
        for (const auto& g2id : d->morphisms_from(f2.cod)) {
          const std::string* g2f2 = d->compose_of(g2id, f2.id);
          if (!g2f2) continue;
          p->set_compose(pair_id(gid, g2id), pair_id(f.id, f2.id), pair_id(*gf, *g2f2));
        }
    }
  CatRef pc = p;
  Functor pl{pc, c, {}, {}}, pr{pc, d, {}, {}};
  for (const auto& a : c->objects())
    for (const auto& b : d->objects()) {
      pl.ob_map[pair_id(a, b)] = a;
      pr.ob_map[pair_id(a, b)] = b;
    }
  for (const auto& f : c->morphisms())
    for (const auto& g : d->morphisms()) {
      pl.mor_map[pair_id(f.id, g.id)] = f.id;
      pr.mor_map[pair_id(f.id, g.id)] = g.id;
    }
  return {pc, std::move(pl), std::move(pr)};
}

/// F×G between given product categories, built by iterating the factors.
inline Functor product_functor(const Functor& F, const Functor& G,
                               const CatRef& src_prod, const CatRef& dst_prod) {
  Functor R{src_prod, dst_prod, {}, {}};
  for (const auto& a : F.source->objects())
    for (const auto& b : G.source->objects())
      R.ob_map[pair_id(a, b)] = pair_id(F.ob(a), G.ob(b));
  for (const auto& f : F.source->morphisms())
    for (const auto& g : G.source->morphisms())
      R.mor_map[pair_id(f.id, g.id)] = pair_id(F.mor(f.id), G.mor(g.id));
  return R;
}

/// Pairwise product of parallel transformations, as a transformation
/// between the corresponding product functors.
inline NatTrans product_nat(const NatTrans& s, const NatTrans& t,
                            const CatRef& src_prod, const CatRef& dst_prod) {
  NatTrans r{product_functor(s.source, t.source, src_prod, dst_prod),
             product_functor(s.target, t.target, src_prod, dst_prod),
             {}};
  for (const auto& a : s.source.source->objects())
    for (const auto& b : t.source.source->objects())
      r.components[pair_id(a, b)] = pair_id(s.at(a), t.at(b));
  return r;
}

/// Same identifiers, reversed arrows, transposed composition table.
inline CatRef opposite_category(const CatRef& c) {
  auto o = std::make_shared<FinCat>();
  o->name = c->name.empty() ? std::string("op") : ("op(" + c->name + ")");
  for (const auto& a : c->objects()) o->add_object(a);
  for (const auto& m : c->morphisms()) o->add_morphism(m.id, m.cod, m.dom);
  for (const auto& [a, i] : c->identity_map()) o->set_identity(a, i);
  for (const auto& [g, f, gf] : c->compose_entries_sorted()) o->set_compose(f, g, gf);
  return o;
}

inline CatRef terminal_category() {
  auto t = std::make_shared<FinCat>();
  t->name = "1";
  t->add_object("*");
  t->add_morphism("id_*", "*", "*");
  t->set_identity("*", "id_*");
  t->set_compose("id_*", "id_*", "id_*");
  return t;
}

/// All morphisms a -> b, in stored order.
inline std::vector<std::string> hom_set(const FinCat& c, const std::string& a,
                                        const std::string& b) {
  std::vector<std::string> out;
  for (const auto& fid : c.morphisms_from(a))
    if (c.mor(fid)->cod == b) out.push_back(fid);
  return out;
}

// ---------------------------------------------------------------------------
// Isomorphism search

enum class IsoStatus { found, none, aborted };

struct IsoResult {
  IsoStatus status = IsoStatus::none;
  std::optional<std::pair<Functor, Functor>> iso;  // forward, inverse
};

namespace detail {

struct IsoSearch {
  const FinCat& c;
  const FinCat& d;
  std::vector<std::string> cobs, dobs;
  // hom sets, keyed by object-index pairs
  std::vector<std::vector<std::vector<std::string>>> chom, dhom;
  std::vector<int> obj_assign;   // c object idx -> d object idx
  std::vector<bool> obj_used;
  std::unordered_map<std::string, std::string> mor_assign;
  std::unordered_map<std::string, std::string> mor_used;  // target -> source

  explicit IsoSearch(const FinCat& c_, const FinCat& d_) : c(c_), d(d_) {
    cobs = c.objects();
    dobs = d.objects();
    auto build = [](const FinCat& x, const std::vector<std::string>& obs) {
      std::unordered_map<std::string, std::size_t> idx;
      for (std::size_t i = 0; i < obs.size(); ++i) idx[obs[i]] = i;
      std::vector<std::vector<std::vector<std::string>>> h(
          obs.size(), std::vector<std::vector<std::string>>(obs.size()));
      for (const auto& m : x.morphisms()) {
        auto a = idx.find(m.dom);
        auto b = idx.find(m.cod);
        if (a != idx.end() && b != idx.end()) h[a->second][b->second].push_back(m.id);
      }
      return h;
    };
    chom = build(c, cobs);
    dhom = build(d, dobs);
  }

  bool objects_ok(std::size_t i, std::size_t cand) const {
    for (std::size_t j = 0; j <= i; ++j) {
      if (obj_assign[j] < 0 && j != i) continue;
      std::size_t tj = (j == i) ? cand : static_cast<std::size_t>(obj_assign[j]);
      if (chom[i][j].size() != dhom[cand][tj].size()) return false;
      if (chom[j][i].size() != dhom[tj][cand].size()) return false;
    }
    return true;
  }

  bool assign_objects(std::size_t i) {
    if (i == cobs.size()) return assign_identities() && assign_morphisms(0);
    for (std::size_t cand = 0; cand < dobs.size(); ++cand) {
      if (obj_used[cand] || !objects_ok(i, cand)) continue;
      obj_assign[i] = static_cast<int>(cand);
      obj_used[cand] = true;
      if (assign_objects(i + 1)) return true;
      obj_used[cand] = false;
      obj_assign[i] = -1;
    }
    return false;
  }

  bool assign_identities() {
    mor_assign.clear();
    mor_used.clear();
    for (std::size_t i = 0; i < cobs.size(); ++i) {
      const std::string* ci = c.identity_of(cobs[i]);
      const std::string* di = d.identity_of(dobs[obj_assign[i]]);
      if (!ci || !di) return false;
      mor_assign[*ci] = *di;
      mor_used[*di] = *ci;
    }
    return true;
  }

  bool partial_consistent(const std::string& mid) {
    // Check every composition entry all of whose participants are assigned.
    const Mor& m = *c.mor(mid);
    auto check_pair = [&](const std::string& g, const std::string& f) {
      const std::string* gf = c.compose_of(g, f);
      if (!gf) return true;
      auto ig = mor_assign.find(g);
      auto iff = mor_assign.find(f);
      auto igf = mor_assign.find(*gf);
      if (ig == mor_assign.end() || iff == mor_assign.end() || igf == mor_assign.end())
        return true;
      const std::string* t = d.compose_of(ig->second, iff->second);
      return t && *t == igf->second;
    };
    for (const auto& f : c.morphisms()) {
      if (mor_assign.find(f.id) == mor_assign.end()) continue;
      if (f.cod == m.dom && !check_pair(mid, f.id)) return false;
      if (m.cod == f.dom && !check_pair(f.id, mid)) return false;
    }
    if (m.cod == m.dom && !check_pair(mid, mid)) return false;
    return true;
  }

  bool assign_morphisms(std::size_t k) {
    while (k < c.morphisms().size() &&
           mor_assign.find(c.morphisms()[k].id) != mor_assign.end())
      ++k;
    if (k == c.morphisms().size()) return full_check();
    const Mor& m = c.morphisms()[k];
    auto a = std::find(cobs.begin(), cobs.end(), m.dom);
    auto b = std::find(cobs.begin(), cobs.end(), m.cod);
    if (a == cobs.end() || b == cobs.end()) return false;
    std::size_t ta = obj_assign[a - cobs.begin()];
    std::size_t tb = obj_assign[b - cobs.begin()];
    for (const auto& cand : dhom[ta][tb]) {
      if (mor_used.find(cand) != mor_used.end()) continue;
      mor_assign[m.id] = cand;
      mor_used[cand] = m.id;
      if (partial_consistent(m.id) && assign_morphisms(k + 1)) return true;
      mor_assign.erase(m.id);
      mor_used.erase(cand);
    }
    return false;
  }

  bool full_check() const {
    for (const auto& f : c.morphisms())
      for (const auto& gid : c.morphisms_from(f.cod)) {
        const std::string* gf = c.compose_of(gid, f.id);
        if (!gf) return false;
        const std::string* t =
            d.compose_of(mor_assign.at(gid), mor_assign.at(f.id));
        if (!t || *t != mor_assign.at(*gf)) return false;
      }
    return true;
  }
};

}  // namespace detail

/// Exhaustive isomorphism search with hom-cardinality pruning. Categories
/// larger than max_objects are not searched: the result says "aborted",
/// which is distinct from a completed search that found nothing.
inline IsoResult find_isomorphism(const CatRef& c, const CatRef& d,
                                  std::size_t max_objects = 8) {
  if (c->objects().size() != d->objects().size() ||
      c->morphisms().size() != d->morphisms().size())
    return {IsoStatus::none, std::nullopt};
  if (c->objects().size() > max_objects) return {IsoStatus::aborted, std::nullopt};
  detail::IsoSearch s(*c, *d);
  s.obj_assign.assign(c->objects().size(), -1);
  s.obj_used.assign(d->objects().size(), false);
  if (!s.assign_objects(0)) return {IsoStatus::none, std::nullopt};
  Functor fwd{c, d, {}, {}}, bwd{d, c, {}, {}};
  for (std::size_t i = 0; i < s.cobs.size(); ++i) {
    fwd.ob_map[s.cobs[i]] = s.dobs[s.obj_assign[i]];
    bwd.ob_map[s.dobs[s.obj_assign[i]]] = s.cobs[i];
  }
  for (const auto& [f, t] : s.mor_assign) {
    fwd.mor_map[f] = t;
    bwd.mor_map[t] = f;
  }
  return {IsoStatus::found, std::make_pair(std::move(fwd), std::move(bwd))};
}

}  // namespace catkit
