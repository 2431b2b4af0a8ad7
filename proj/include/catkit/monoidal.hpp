#pragma once

#include <array>
#include <map>
#include <optional>
#include <string>
#include <utility>

#include "fincat.hpp"
#include "report.hpp"

namespace catkit {

/// Two-sided inverse of f, if the composition table contains one.
inline std::optional<std::string> find_inverse(const FinCat& c, const std::string& f) {
  const Mor* m = c.mor(f);
  if (!m) return std::nullopt;
  const std::string* id_dom = c.identity_of(m->dom);
  const std::string* id_cod = c.identity_of(m->cod);
  if (!id_dom || !id_cod) return std::nullopt;
  for (const auto& gid : hom_set(c, m->cod, m->dom)) {
    const std::string* gf = c.compose_of(gid, f);
    const std::string* fg = c.compose_of(f, gid);
    if (gf && fg && *gf == *id_dom && *fg == *id_cod) return gid;
  }
  return std::nullopt;
}

struct Braid {
  std::map<std::array<std::string, 2>, std::string> components;  // A⊗B -> B⊗A
  bool symmetric = false;
};

/// A monoidal structure on a finite category: a tensor functor from the
/// canonical product base×base, a unit object, and explicit associator and
/// unitor component families (oriented A⊗(B⊗C) -> (A⊗B)⊗C, I⊗A -> A,
/// A⊗I -> A). An optional braiding can ride along.
struct MonoidalStructure {
  CatRef base;
  CatRef base_sq;  // product_category(base, base)
  Functor tensor;  // base_sq -> base
  std::string unit_object;
  std::map<std::array<std::string, 3>, std::string> assoc;
  std::map<std::string, std::string> left_unitor;
  std::map<std::string, std::string> right_unitor;
  std::optional<Braid> braid;

  const std::string& ob(const std::string& a, const std::string& b) const {
    return tensor.ob(pair_id(a, b));
  }
  const std::string& mor(const std::string& f, const std::string& g) const {
    return tensor.mor(pair_id(f, g));
  }
  const std::string* assoc_ptr(const std::string& a, const std::string& b,
                               const std::string& c) const {
    auto it = assoc.find({a, b, c});
    return it == assoc.end() ? nullptr : &it->second;
  }
  const std::string& assoc_at(const std::string& a, const std::string& b,
                              const std::string& c) const {
    const std::string* p = assoc_ptr(a, b, c);
    if (!p) throw catkit_error("no associator component at (" + a + "," + b + "," + c + ")");
    return *p;
  }
  const std::string* lunit_ptr(const std::string& a) const {
    auto it = left_unitor.find(a);
    return it == left_unitor.end() ? nullptr : &it->second;
  }
  const std::string* runit_ptr(const std::string& a) const {
    auto it = right_unitor.find(a);
    return it == right_unitor.end() ? nullptr : &it->second;
  }
};

inline bool same_monoidal(const MonoidalStructure& a, const MonoidalStructure& b) {
  return same_cat(a.base, b.base) && same_maps(a.tensor, b.tensor) &&
         a.unit_object == b.unit_object && a.assoc == b.assoc &&
         a.left_unitor == b.left_unitor && a.right_unitor == b.right_unitor;
}

namespace detail {

/// Component boundary check for a coherence cell family.
inline void cell_boundary(Report& r, const FinCat& c, const std::string& law,
                          const std::string& at, const std::string& cell,
                          const std::string& dom, const std::string& cod) {
  const Mor* m = c.mor(cell);
  if (!m) {
    r.error(law + " component at " + at + " refers to unknown morphism " + cell);
    return;
  }
  if (m->dom != dom || m->cod != cod)
    r.violation(law + "-boundary", at, m->dom + "->" + m->cod, dom + "->" + cod);
}

inline void cell_invertible(Report& r, const FinCat& c, const std::string& law,
                            const std::string& at, const std::string& cell) {
  if (!find_inverse(c, cell))
    r.violation(law + "-invertible", at, cell, "<no two-sided inverse>");
}

/// Boundary and two-sided-invertibility checks for the associator and
/// unitor families. Assumes component totality was already established.
inline void coherence_cells(Report& r, const MonoidalStructure& s) {
  const FinCat& c = *s.base;
  const auto& obs = c.objects();
  for (const auto& a : obs)
    for (const auto& b : obs)
      for (const auto& x : obs) {
        const std::string& cell = s.assoc_at(a, b, x);
        std::string at = "(" + a + "," + b + "," + x + ")";
        cell_boundary(r, c, "assoc", at, cell, s.ob(a, s.ob(b, x)), s.ob(s.ob(a, b), x));
        cell_invertible(r, c, "assoc", at, cell);
      }
  for (const auto& a : obs) {
    cell_boundary(r, c, "left-unitor", "object=" + a, *s.lunit_ptr(a),
                  s.ob(s.unit_object, a), a);
    cell_invertible(r, c, "left-unitor", "object=" + a, *s.lunit_ptr(a));
    cell_boundary(r, c, "right-unitor", "object=" + a, *s.runit_ptr(a),
                  s.ob(a, s.unit_object), a);
    cell_invertible(r, c, "right-unitor", "object=" + a, *s.runit_ptr(a));
  }
}

/// The pentagon and triangle axioms by exhaustive enumeration. Assumes
/// component totality was already established.
inline void pentagon_triangle(Report& r, const MonoidalStructure& s) {
  const FinCat& c = *s.base;
  const auto& obs = c.objects();
  for (const auto& a : obs)
    for (const auto& b : obs)
      for (const auto& x : obs)
        for (const auto& d : obs) {
          std::string lhs = comp3(c, s.mor(s.assoc_at(a, b, x), c.id_of(d)),
                                  s.assoc_at(a, s.ob(b, x), d),
                                  s.mor(c.id_of(a), s.assoc_at(b, x, d)));
          std::string rhs =
              comp2(c, s.assoc_at(s.ob(a, b), x, d), s.assoc_at(a, b, s.ob(x, d)));
          if (lhs != rhs)
            r.violation("pentagon", "(" + a + "," + b + "," + x + "," + d + ")", lhs, rhs);
        }
  for (const auto& a : obs)
    for (const auto& b : obs) {
      std::string lhs =
          comp2(c, s.mor(*s.runit_ptr(a), c.id_of(b)), s.assoc_at(a, s.unit_object, b));
      const std::string& rhs = s.mor(c.id_of(a), *s.lunit_ptr(b));
      if (lhs != rhs) r.violation("triangle", "(" + a + "," + b + ")", lhs, rhs);
    }
}

}  // namespace detail

/// Full monoidal-category validation: tensor functoriality from the
/// canonical product, coherence-cell boundaries, invertibility, naturality
/// in every variable, and the pentagon and triangle axioms by exhaustive
/// enumeration. Diagrams are checked even where the base is a poset and
/// everything commutes automatically.
inline Report check_monoidal(const MonoidalStructure& s) {
  Report r;
  if (!s.base || !s.base_sq) {
    r.error("monoidal structure has unset base categories");
    return r;
  }
  ProductCategory canonical = product_category(s.base, s.base);
  if (!(*s.base_sq == *canonical.cat))
    r.error("stored square category is not the canonical product of the base with itself");
  if (!same_cat(s.tensor.source, s.base_sq) || !same_cat(s.tensor.target, s.base))
    r.error("tensor is not a functor from the product category to the base");
  r.absorb(check_functor(s.tensor), "tensor");
  if (!s.base->has_object(s.unit_object))
    r.error("unit object " + s.unit_object + " is not an object of the base");
  if (!r.structural.empty()) return r;

  const FinCat& c = *s.base;
  const auto& obs = c.objects();

  for (const auto& a : obs)
    for (const auto& b : obs)
      for (const auto& x : obs)
        if (!s.assoc_ptr(a, b, x))
          r.error("no associator component at (" + a + "," + b + "," + x + ")");
  for (const auto& a : obs) {
    if (!s.lunit_ptr(a)) r.error("no left unitor component at " + a);
    if (!s.runit_ptr(a)) r.error("no right unitor component at " + a);
  }
  if (!r.structural.empty()) return r;

  detail::coherence_cells(r, s);
  // A dangling cell id leaves the diagrams below unevaluable (the tensor is
  // only defined on real morphism pairs), so stop at the structural stage.
  if (!r.structural.empty()) return r;

  // Naturality of the associator in all three variables.
  const auto& mors = c.morphisms();
  for (const auto& f : mors)
    for (const auto& g : mors)
      for (const auto& h : mors) {
        std::string lhs = detail::comp2(c, s.assoc_at(f.cod, g.cod, h.cod),
                                        s.mor(f.id, s.mor(g.id, h.id)));
        std::string rhs = detail::comp2(c, s.mor(s.mor(f.id, g.id), h.id),
                                        s.assoc_at(f.dom, g.dom, h.dom));
        if (lhs != rhs)
          r.violation("assoc-natural", "f=" + f.id + " g=" + g.id + " h=" + h.id, lhs, rhs);
      }
  const std::string& idI = c.id_of(s.unit_object);
  for (const auto& f : mors) {
    std::string lhs = detail::comp2(c, *s.lunit_ptr(f.cod), s.mor(idI, f.id));
    std::string rhs = detail::comp2(c, f.id, *s.lunit_ptr(f.dom));
    if (lhs != rhs) r.violation("left-unitor-natural", "f=" + f.id, lhs, rhs);
    std::string lhs2 = detail::comp2(c, *s.runit_ptr(f.cod), s.mor(f.id, idI));
    std::string rhs2 = detail::comp2(c, f.id, *s.runit_ptr(f.dom));
    if (lhs2 != rhs2) r.violation("right-unitor-natural", "f=" + f.id, lhs2, rhs2);
  }

  detail::pentagon_triangle(r, s);
  return r;
}

/// Hexagon-based braiding validation on top of a monoidal structure, with
/// the involution law when the braiding claims to be symmetric.
inline Report check_braiding(const MonoidalStructure& s) {
  Report r;
  if (!s.braid) {
    r.error("monoidal structure carries no braiding");
    return r;
  }
  // Self-contained frame gate: the hexagon sweeps need a total tensor on
  // the canonical square, identities everywhere, and a total associator or
  // they cannot even be written down.
  if (!s.base || !s.base_sq) {
    r.error("monoidal structure has unset base categories");
    return r;
  }
  if (!(*s.base_sq == *product_category(s.base, s.base).cat))
    r.error("stored square category is not the canonical product of the base with itself");
  if (!check_functor(s.tensor).structural.empty())
    r.error("tensor functor is not totally defined; braiding unevaluable");
  const FinCat& c = *s.base;
  const auto& obs = c.objects();
  for (const auto& a : obs)
    if (!c.identity_of(a)) r.error("object " + a + " has no identity morphism assigned");
  for (const auto& x : obs)
    for (const auto& y : obs)
      for (const auto& z : obs)
        if (!s.assoc_ptr(x, y, z))
          r.error("no associator component at (" + x + "," + y + "," + z + ")");
  if (!r.structural.empty()) return r;
  const Braid& b = *s.braid;
  for (const auto& x : obs)
    for (const auto& y : obs) {
      auto it = b.components.find({x, y});
      if (it == b.components.end()) {
        r.error("no braiding component at (" + x + "," + y + ")");
        continue;
      }
      detail::cell_boundary(r, c, "braid", "(" + x + "," + y + ")", it->second,
                            s.ob(x, y), s.ob(y, x));
      detail::cell_invertible(r, c, "braid", "(" + x + "," + y + ")", it->second);
    }
  if (!r.structural.empty()) return r;
  auto beta = [&](const std::string& x, const std::string& y) -> const std::string& {
    return b.components.at({x, y});
  };

  // Inverse associator components, needed by the first hexagon.
  std::map<std::array<std::string, 3>, std::string> ainv;
  for (const auto& [k, cell] : s.assoc) {
    auto inv = find_inverse(c, cell);
    if (!inv) {
      r.error("associator component at (" + k[0] + "," + k[1] + "," + k[2] +
              ") is not invertible; hexagons unevaluable");
      return r;
    }
    ainv[k] = *inv;
  }

  for (const auto& f : c.morphisms())
    for (const auto& g : c.morphisms()) {
      std::string lhs = detail::comp2(c, beta(f.cod, g.cod), s.mor(f.id, g.id));
      std::string rhs = detail::comp2(c, s.mor(g.id, f.id), beta(f.dom, g.dom));
      if (lhs != rhs) r.violation("braid-natural", "f=" + f.id + " g=" + g.id, lhs, rhs);
    }

  for (const auto& x : obs)
    for (const auto& y : obs)
      for (const auto& z : obs) {
        std::string lhs = detail::comp3(c, ainv.at({y, z, x}), beta(x, s.ob(y, z)),
                                        ainv.at({x, y, z}));
        std::string rhs = detail::comp3(c, s.mor(c.id_of(y), beta(x, z)),
                                        ainv.at({y, x, z}), s.mor(beta(x, y), c.id_of(z)));
        if (lhs != rhs) r.violation("hexagon-1", "(" + x + "," + y + "," + z + ")", lhs, rhs);

        std::string lhs2 = detail::comp3(c, s.assoc_at(z, x, y), beta(s.ob(x, y), z),
                                         s.assoc_at(x, y, z));
        std::string rhs2 = detail::comp3(c, s.mor(beta(x, z), c.id_of(y)),
                                         s.assoc_at(x, z, y), s.mor(c.id_of(x), beta(y, z)));
        if (lhs2 != rhs2) r.violation("hexagon-2", "(" + x + "," + y + "," + z + ")", lhs2, rhs2);
      }

  if (b.symmetric)
    for (const auto& x : obs)
      for (const auto& y : obs) {
        std::string lhs = detail::comp2(c, beta(y, x), beta(x, y));
        const std::string& rhs = c.id_of(s.ob(x, y));
        if (lhs != rhs) r.violation("symmetry", "(" + x + "," + y + ")", lhs, rhs);
      }
  return r;
}

// ---------------------------------------------------------------------------
// Monoidal functors

/// (F, tensorator, unitor) with tensorator: ⊗'∘(F×F) => F∘⊗ and
/// unitor: I' -> F(I).
struct LaxMonoidalFunctor {
  MonoidalStructure source, target;
  Functor carrier;
  NatTrans tensorator;
  std::string unitor;
};

/// (F, tensorator, unitor) with tensorator: F∘⊗ => ⊗'∘(F×F) and
/// unitor: F(I) -> I'.
struct OplaxMonoidalFunctor {
  MonoidalStructure source, target;
  Functor carrier;
  NatTrans tensorator;
  std::string unitor;
};

namespace detail {

template <typename MF>
inline bool monoidal_functor_structure(Report& r, const MF& l, bool lax) {
  r.absorb(check_functor(l.carrier), "carrier");
  bool ok = true;
  try {
    Functor ff = product_functor(l.carrier, l.carrier, l.source.base_sq, l.target.base_sq);
    Functor via_target = compose_functors(l.target.tensor, ff);
    Functor via_source = compose_functors(l.carrier, l.source.tensor);
    const Functor& expect_src = lax ? via_target : via_source;
    const Functor& expect_tgt = lax ? via_source : via_target;
    if (!same_maps(l.tensorator.source, expect_src) ||
        !same_maps(l.tensorator.target, expect_tgt)) {
      r.error("tensorator boundary mismatch");
      ok = false;
    }
  } catch (const catkit_error& e) {
    r.error(std::string("tensorator boundary unbuildable: ") + e.what());
    ok = false;
  }
  r.absorb(check_nat_trans(l.tensorator), "tensorator");
  // The law sweeps evaluate both structures' tensors and coherence cells at
  // arbitrary points, so their frames must be total up front.
  auto frame_total = [&r, &ok](const MonoidalStructure& m, const char* which) {
    if (!m.base || !m.base_sq) {
      r.error(std::string(which) + " monoidal structure has unset base categories");
      ok = false;
      return;
    }
    if (!check_functor(m.tensor).structural.empty()) {
      r.error(std::string(which) + " tensor functor is not totally defined");
      ok = false;
    }
    for (const auto& a : m.base->objects()) {
      if (!m.base->identity_of(a)) {
        r.error(std::string(which) + " base object " + a + " has no identity");
        ok = false;
      }
      if (!m.lunit_ptr(a) || !m.runit_ptr(a)) {
        r.error(std::string(which) + " unitor family is missing a component at " + a);
        ok = false;
      }
      for (const auto& b : m.base->objects())
        for (const auto& x : m.base->objects())
          if (!m.assoc_ptr(a, b, x)) {
            r.error(std::string(which) + " associator is missing a component at (" + a +
                    "," + b + "," + x + ")");
            ok = false;
          }
    }
  };
  frame_total(l.source, "source");
  frame_total(l.target, "target");
  const Mor* u = l.target.base->mor(l.unitor);
  if (!u) {
    r.error("unitor refers to unknown morphism " + l.unitor);
    ok = false;
  } else {
    const std::string* fi = l.carrier.ob_ptr(l.source.unit_object);
    std::string dom = lax ? l.target.unit_object : (fi ? *fi : "<undefined>");
    std::string cod = lax ? (fi ? *fi : "<undefined>") : l.target.unit_object;
    if (u->dom != dom || u->cod != cod) {
      r.error("unitor boundary mismatch: got " + u->dom + "->" + u->cod + ", expected " +
              dom + "->" + cod);
      ok = false;
    }
  }
  return ok && r.structural.empty();
}

}  // namespace detail

namespace detail {

/// Tolerant image lookup: unknown ids surface as the sentinel rather than
/// aborting a diagram sweep over unlawful input.
inline std::string fimage(const Functor& f, const std::string& mor) {
  const std::string* p = f.mor_ptr(mor);
  return p ? *p : "<undefined>";
}

}  // namespace detail

inline Report check_lax_monoidal_functor(const LaxMonoidalFunctor& l) {
  Report r;
  if (!detail::monoidal_functor_structure(r, l, /*lax=*/true)) return r;
  const FinCat& d = *l.target.base;
  const auto& obs = l.source.base->objects();
  auto phi = [&](const std::string& a, const std::string& b) -> const std::string& {
    return l.tensorator.at(pair_id(a, b));
  };
  auto fid = [&](const std::string& a) -> const std::string& {
    return d.id_of(l.carrier.ob(a));
  };
  const MonoidalStructure& s = l.source;
  const MonoidalStructure& t = l.target;
  for (const auto& a : obs)
    for (const auto& b : obs)
      for (const auto& x : obs) {
        std::string lhs = detail::comp3(
            d, phi(s.ob(a, b), x), t.mor(phi(a, b), fid(x)),
            t.assoc_at(l.carrier.ob(a), l.carrier.ob(b), l.carrier.ob(x)));
        std::string rhs = detail::comp3(d, detail::fimage(l.carrier, s.assoc_at(a, b, x)),
                                        phi(a, s.ob(b, x)), t.mor(fid(a), phi(b, x)));
        if (lhs != rhs)
          r.violation("lax-assoc", "(" + a + "," + b + "," + x + ")", lhs, rhs);
      }
  for (const auto& a : obs) {
    std::string rhs = detail::comp3(d, detail::fimage(l.carrier, *s.runit_ptr(a)),
                                    phi(a, s.unit_object), t.mor(fid(a), l.unitor));
    const std::string& lhs = *t.runit_ptr(l.carrier.ob(a));
    if (lhs != rhs) r.violation("lax-right-unit", "object=" + a, lhs, rhs);
    std::string rhs2 = detail::comp3(d, detail::fimage(l.carrier, *s.lunit_ptr(a)),
                                     phi(s.unit_object, a), t.mor(l.unitor, fid(a)));
    const std::string& lhs2 = *t.lunit_ptr(l.carrier.ob(a));
    if (lhs2 != rhs2) r.violation("lax-left-unit", "object=" + a, lhs2, rhs2);
  }
  return r;
}

inline Report check_oplax_monoidal_functor(const OplaxMonoidalFunctor& l) {
  Report r;
  if (!detail::monoidal_functor_structure(r, l, /*lax=*/false)) return r;
  const FinCat& d = *l.target.base;
  const auto& obs = l.source.base->objects();
  auto phi = [&](const std::string& a, const std::string& b) -> const std::string& {
    return l.tensorator.at(pair_id(a, b));
  };
  auto fid = [&](const std::string& a) -> const std::string& {
    return d.id_of(l.carrier.ob(a));
  };
  const MonoidalStructure& s = l.source;
  const MonoidalStructure& t = l.target;
  for (const auto& a : obs)
    for (const auto& b : obs)
      for (const auto& x : obs) {
        std::string lhs = detail::comp3(
            d, t.assoc_at(l.carrier.ob(a), l.carrier.ob(b), l.carrier.ob(x)),
            t.mor(fid(a), phi(b, x)), phi(a, s.ob(b, x)));
        std::string rhs = detail::comp3(d, t.mor(phi(a, b), fid(x)), phi(s.ob(a, b), x),
                                        detail::fimage(l.carrier, s.assoc_at(a, b, x)));
        if (lhs != rhs)
          r.violation("oplax-assoc", "(" + a + "," + b + "," + x + ")", lhs, rhs);
      }
  for (const auto& a : obs) {
    std::string rhs = detail::comp3(d, *t.runit_ptr(l.carrier.ob(a)), t.mor(fid(a), l.unitor),
                                    phi(a, s.unit_object));
    std::string lhs = detail::fimage(l.carrier, *s.runit_ptr(a));
    if (lhs != rhs) r.violation("oplax-right-unit", "object=" + a, lhs, rhs);
    std::string rhs2 = detail::comp3(d, *t.lunit_ptr(l.carrier.ob(a)), t.mor(l.unitor, fid(a)),
                                     phi(s.unit_object, a));
    std::string lhs2 = detail::fimage(l.carrier, *s.lunit_ptr(a));
    if (lhs2 != rhs2) r.violation("oplax-left-unit", "object=" + a, lhs2, rhs2);
  }
  return r;
}

// ---------------------------------------------------------------------------
// Monoidal transformations

struct LaxMonoidalTransformation {
  LaxMonoidalFunctor source, target;
  NatTrans cell;
};

struct OplaxMonoidalTransformation {
  OplaxMonoidalFunctor source, target;
  NatTrans cell;
};

inline Report check_monoidal_transformation(const LaxMonoidalTransformation& t) {
  Report r;
  if (!same_monoidal(t.source.source, t.target.source) ||
      !same_monoidal(t.source.target, t.target.target)) {
    r.error("endpoints are not parallel lax monoidal functors");
    return r;
  }
  if (!same_maps(t.cell.source, t.source.carrier) ||
      !same_maps(t.cell.target, t.target.carrier))
    r.error("cell boundary mismatch: expected source.carrier => target.carrier");
  r.absorb(check_nat_trans(t.cell), "cell");
  if (!r.structural.empty()) return r;
  const MonoidalStructure& s = t.source.source;
  const MonoidalStructure& d = t.source.target;
  const FinCat& dc = *d.base;
  for (const auto& a : s.base->objects())
    for (const auto& b : s.base->objects()) {
      std::string lhs = detail::comp2(dc, t.cell.at(s.ob(a, b)),
                                      t.source.tensorator.at(pair_id(a, b)));
      std::string rhs = detail::comp2(dc, t.target.tensorator.at(pair_id(a, b)),
                                      d.mor(t.cell.at(a), t.cell.at(b)));
      if (lhs != rhs) r.violation("tensorator-square", "(" + a + "," + b + ")", lhs, rhs);
    }
  std::string lhs = detail::comp2(dc, t.cell.at(s.unit_object), t.source.unitor);
  if (lhs != t.target.unitor)
    r.violation("unitor-square", "object=" + s.unit_object, lhs, t.target.unitor);
  return r;
}

inline Report check_monoidal_transformation(const OplaxMonoidalTransformation& t) {
  Report r;
  if (!same_monoidal(t.source.source, t.target.source) ||
      !same_monoidal(t.source.target, t.target.target)) {
    r.error("endpoints are not parallel oplax monoidal functors");
    return r;
  }
  if (!same_maps(t.cell.source, t.source.carrier) ||
      !same_maps(t.cell.target, t.target.carrier))
    r.error("cell boundary mismatch: expected source.carrier => target.carrier");
  r.absorb(check_nat_trans(t.cell), "cell");
  if (!r.structural.empty()) return r;
  const MonoidalStructure& s = t.source.source;
  const MonoidalStructure& d = t.source.target;
  const FinCat& dc = *d.base;
  for (const auto& a : s.base->objects())
    for (const auto& b : s.base->objects()) {
      std::string lhs = detail::comp2(dc, t.target.tensorator.at(pair_id(a, b)),
                                      t.cell.at(s.ob(a, b)));
      std::string rhs = detail::comp2(dc, d.mor(t.cell.at(a), t.cell.at(b)),
                                      t.source.tensorator.at(pair_id(a, b)));
      if (lhs != rhs) r.violation("tensorator-square", "(" + a + "," + b + ")", lhs, rhs);
    }
  std::string lhs = detail::comp2(dc, t.target.unitor, t.cell.at(s.unit_object));
  if (lhs != t.source.unitor)
    r.violation("unitor-square", "object=" + s.unit_object, lhs, t.source.unitor);
  return r;
}

// ---------------------------------------------------------------------------
// Composition and identities

inline LaxMonoidalFunctor identity_lax_monoidal(const MonoidalStructure& s) {
  Functor id = identity_functor(s.base);
  NatTrans t{compose_functors(s.tensor, product_functor(id, id, s.base_sq, s.base_sq)),
             compose_functors(id, s.tensor),
             {}};
  for (const auto& o : s.base_sq->objects()) t.components[o] = s.base->id_of(s.tensor.ob(o));
  return {s, s, std::move(id), std::move(t), s.base->id_of(s.unit_object)};
}

inline OplaxMonoidalFunctor identity_oplax_monoidal(const MonoidalStructure& s) {
  Functor id = identity_functor(s.base);
  NatTrans t{compose_functors(id, s.tensor),
             compose_functors(s.tensor, product_functor(id, id, s.base_sq, s.base_sq)),
             {}};
  for (const auto& o : s.base_sq->objects()) t.components[o] = s.base->id_of(s.tensor.ob(o));
  return {s, s, std::move(id), std::move(t), s.base->id_of(s.unit_object)};
}

/// Pairwise composite: tensorator G(phi_f) ∘ phi_g at (F,F), unitor
/// G(unitor_f) ∘ unitor_g, assembled with the whiskering operations.
inline LaxMonoidalFunctor compose_lax_monoidal(const LaxMonoidalFunctor& g,
                                               const LaxMonoidalFunctor& f) {
  if (!same_monoidal(g.source, f.target))
    throw catkit_error("compose_lax_monoidal: middle structures do not match");
  Functor carrier = compose_functors(g.carrier, f.carrier);
  Functor ff = product_functor(f.carrier, f.carrier, f.source.base_sq, f.target.base_sq);
  NatTrans tensorator = vertical_compose(whisker_left(g.carrier, f.tensorator),
                                         whisker_right(g.tensorator, ff));
  std::string unitor = detail::comp2(*g.target.base, g.carrier.mor(f.unitor), g.unitor);
  return {f.source, g.target, std::move(carrier), std::move(tensorator), std::move(unitor)};
}

inline OplaxMonoidalFunctor compose_oplax_monoidal(const OplaxMonoidalFunctor& g,
                                                   const OplaxMonoidalFunctor& f) {
  if (!same_monoidal(g.source, f.target))
    throw catkit_error("compose_oplax_monoidal: middle structures do not match");
  Functor carrier = compose_functors(g.carrier, f.carrier);
  Functor ff = product_functor(f.carrier, f.carrier, f.source.base_sq, f.target.base_sq);
  NatTrans tensorator = vertical_compose(whisker_right(g.tensorator, ff),
                                         whisker_left(g.carrier, f.tensorator));
  std::string unitor = detail::comp2(*g.target.base, g.unitor, g.carrier.mor(f.unitor));
  return {f.source, g.target, std::move(carrier), std::move(tensorator), std::move(unitor)};
}

}  // namespace catkit
