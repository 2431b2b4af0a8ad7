#pragma once

#include <string>
#include <utility>

#include "monad.hpp"
#include "monoidal.hpp"

namespace catkit {

enum class Laxity { lax, oplax };

inline const char* laxity_name(Laxity v) { return v == Laxity::lax ? "lax" : "oplax"; }

/// A monad and a monoidal structure on the same base category, glued by an
/// interchange family and a unit cell:
///   lax    interchange: ⊗∘(S×S) => S∘⊗   unit cell: I -> S(I)
///   oplax  interchange: S∘⊗ => ⊗∘(S×S)   unit cell: S(I) -> I
/// The tuple is plain data; the two validators below decide whether it is
/// lawful, by two different readings of the same axioms.
struct MonoidalMonadTuple {
  MonoidalStructure structure;
  Monad monad;
  Laxity variant = Laxity::lax;
  NatTrans interchange;
  std::string unit_cell;
};

/// The functors an interchange family of the given orientation must run
/// between: first = source, second = target.
inline std::pair<Functor, Functor> interchange_boundary(const MonoidalStructure& s,
                                                        const Monad& m, Laxity v) {
  Functor ss = product_functor(m.endo, m.endo, s.base_sq, s.base_sq);
  Functor via_prod = compose_functors(s.tensor, ss);
  Functor via_base = compose_functors(m.endo, s.tensor);
  if (v == Laxity::lax) return {std::move(via_prod), std::move(via_base)};
  return {std::move(via_base), std::move(via_prod)};
}

namespace detail {

/// Structural gate shared by both validators: everything that must hold
/// before either can safely build composite functors and sweep diagrams.
/// Emits only structural errors, never law violations.
inline Report tuple_frame(const MonoidalMonadTuple& t) {
  Report r;
  const MonoidalStructure& s = t.structure;
  const Monad& m = t.monad;
  if (!s.base || !s.base_sq || !m.base) {
    r.error("tuple has unset base categories");
    return r;
  }
  if (!same_cat(m.base, s.base))
    r.error("monad and monoidal structure live on different base categories");
  const FinCat& c = *s.base;
  for (const auto& a : c.objects())
    if (!c.identity_of(a)) r.error("object " + a + " has no identity morphism assigned");
  if (!r.structural.empty()) return r;

  ProductCategory canonical = product_category(s.base, s.base);
  if (!(*s.base_sq == *canonical.cat))
    r.error("stored square category is not the canonical product of the base with itself");
  if (!same_cat(s.tensor.source, s.base_sq) || !same_cat(s.tensor.target, s.base))
    r.error("tensor is not a functor from the product category to the base");
  if (!s.base->has_object(s.unit_object))
    r.error("unit object " + s.unit_object + " is not an object of the base");

  // Tensor assignments: total on the square, valued in the base.
  for (const auto& o : s.base_sq->objects()) {
    const std::string* v = s.tensor.ob_ptr(o);
    if (!v)
      r.error("tensor has no object assignment at " + o);
    else if (!c.has_object(*v))
      r.error("tensor maps " + o + " to unknown object " + *v);
  }
  for (const auto& f : s.base_sq->morphisms()) {
    const std::string* v = s.tensor.mor_ptr(f.id);
    if (!v)
      r.error("tensor has no morphism assignment at " + f.id);
    else if (!c.mor(*v))
      r.error("tensor maps " + f.id + " to unknown morphism " + *v);
  }

  // Endofunctor assignments likewise.
  if (!same_cat(m.endo.source, s.base) || !same_cat(m.endo.target, s.base))
    r.error("monad endofunctor does not run on the base category");
  for (const auto& a : c.objects()) {
    const std::string* v = m.endo.ob_ptr(a);
    if (!v)
      r.error("endofunctor has no object assignment at " + a);
    else if (!c.has_object(*v))
      r.error("endofunctor maps " + a + " to unknown object " + *v);
  }
  for (const auto& f : c.morphisms()) {
    const std::string* v = m.endo.mor_ptr(f.id);
    if (!v)
      r.error("endofunctor has no morphism assignment at " + f.id);
    else if (!c.mor(*v))
      r.error("endofunctor maps " + f.id + " to unknown morphism " + *v);
  }
  if (!r.structural.empty()) return r;

  auto component_scan = [&](const NatTrans& n, const char* what, const FinCat& index) {
    for (const auto& a : index.objects()) {
      const std::string* v = n.at_ptr(a);
      if (!v)
        r.error(std::string(what) + " has no component at " + a);
      else if (!c.mor(*v))
        r.error(std::string(what) + " component at " + a + " is an unknown morphism " + *v);
    }
  };
  component_scan(m.unit, "monad unit", c);
  component_scan(m.mult, "monad multiplication", c);
  component_scan(t.interchange, "interchange", *s.base_sq);

  auto [ic_src, ic_tgt] = interchange_boundary(s, m, t.variant);
  if (!same_maps(t.interchange.source, ic_src) || !same_maps(t.interchange.target, ic_tgt))
    r.error(std::string("interchange boundary does not match the ") + laxity_name(t.variant) +
            " orientation");

  const Mor* u = c.mor(t.unit_cell);
  if (!u) {
    r.error("unit cell refers to unknown morphism " + t.unit_cell);
  } else {
    const std::string& si = m.endo.ob(s.unit_object);
    std::string dom = t.variant == Laxity::lax ? s.unit_object : si;
    std::string cod = t.variant == Laxity::lax ? si : s.unit_object;
    if (u->dom != dom || u->cod != cod)
      r.error("unit cell boundary mismatch: got " + u->dom + "->" + u->cod + ", expected " +
              dom + "->" + cod);
  }

  for (const auto& a : c.objects())
    for (const auto& b : c.objects())
      for (const auto& x : c.objects()) {
        const std::string* v = s.assoc_ptr(a, b, x);
        if (!v)
          r.error("no associator component at (" + a + "," + b + "," + x + ")");
        else if (!c.mor(*v))
          r.error("associator component at (" + a + "," + b + "," + x +
                  ") is an unknown morphism " + *v);
      }
  for (const auto& a : c.objects()) {
    const std::string* l = s.lunit_ptr(a);
    const std::string* rr = s.runit_ptr(a);
    if (!l)
      r.error("no left unitor component at " + a);
    else if (!c.mor(*l))
      r.error("left unitor component at " + a + " is an unknown morphism " + *l);
    if (!rr)
      r.error("no right unitor component at " + a);
    else if (!c.mor(*rr))
      r.error("right unitor component at " + a + " is an unknown morphism " + *rr);
  }
  return r;
}

/// Pairwise product of one-cells between already-constructed product
/// monads, with the boundary functors retied to the canonical composites.
inline OplaxMonadMorphism product_cell(const OplaxMonadMorphism& f, const OplaxMonadMorphism& g,
                                       const ProductMonad& src, const ProductMonad& dst) {
  Functor carrier = product_functor(f.carrier, g.carrier, src.prod.cat, dst.prod.cat);
  NatTrans ic = product_nat(f.interchange, g.interchange, src.prod.cat, dst.prod.cat);
  ic.source = compose_functors(carrier, src.monad.endo);
  ic.target = compose_functors(dst.monad.endo, carrier);
  return {src.monad, dst.monad, std::move(carrier), std::move(ic)};
}

inline LaxMonadMorphism product_cell(const LaxMonadMorphism& f, const LaxMonadMorphism& g,
                                     const ProductMonad& src, const ProductMonad& dst) {
  Functor carrier = product_functor(f.carrier, g.carrier, src.prod.cat, dst.prod.cat);
  NatTrans ic = product_nat(f.interchange, g.interchange, src.prod.cat, dst.prod.cat);
  ic.source = compose_functors(dst.monad.endo, carrier);
  ic.target = compose_functors(carrier, src.monad.endo);
  return {src.monad, dst.monad, std::move(carrier), std::move(ic)};
}

/// (a,(b,c)) |-> ((a,b),c) on objects and morphisms of the iterated
/// products, built from the factor data directly.
inline Functor reassociator(const FinCat& c, const CatRef& from, const CatRef& to) {
  Functor f{from, to, {}, {}};
  for (const auto& a : c.objects())
    for (const auto& b : c.objects())
      for (const auto& x : c.objects())
        f.ob_map[pair_id(a, pair_id(b, x))] = pair_id(pair_id(a, b), x);
  for (const auto& p : c.morphisms())
    for (const auto& q : c.morphisms())
      for (const auto& s : c.morphisms())
        f.mor_map[pair_id(p.id, pair_id(q.id, s.id))] = pair_id(pair_id(p.id, q.id), s.id);
  return f;
}

/// Constant-unit bracket <I,1>: C -> C×C (resp. <1,I>), the carrier under
/// the unitor two-cells.
inline Functor bracket(const MonoidalStructure& s, bool unit_first) {
  const FinCat& c = *s.base;
  Functor f{s.base, s.base_sq, {}, {}};
  const std::string& idI = c.id_of(s.unit_object);
  for (const auto& a : c.objects())
    f.ob_map[a] = unit_first ? pair_id(s.unit_object, a) : pair_id(a, s.unit_object);
  for (const auto& m : c.morphisms())
    f.mor_map[m.id] = unit_first ? pair_id(idI, m.id) : pair_id(m.id, idI);
  return f;
}

}  // namespace detail

/// Validator 1 (monad-side): reads the tuple as monoidal structure carried
/// by one-cells and two-cells over the monad. The tensor and the unit
/// object become morphisms of monads with the interchange family and unit
/// cell on board; the associator and unitors become transformations between
/// composite one-cells, assembled with the whiskering calculus; pentagon,
/// triangle, and invertibility close the system.
inline Report validate_as_monoidal_in_monads(const MonoidalMonadTuple& t) {
  Report r = detail::tuple_frame(t);
  if (!r.structural.empty()) return r;
  const MonoidalStructure& s = t.structure;
  const Monad& m = t.monad;
  const FinCat& c = *s.base;

  r.absorb(check_category(c), "base");
  r.absorb(check_monad(m), "monad");
  if (!r.structural.empty()) return r;

  {
    Report mono;
    detail::coherence_cells(mono, s);
    detail::pentagon_triangle(mono, s);
    r.absorb(mono, "monoidal");
  }

  ProductMonad m2 = product_monad(m, m);
  ProductMonad m3l = product_monad(m, m2.monad);
  ProductMonad m3r = product_monad(m2.monad, m);
  CatRef term = terminal_category();
  Monad mterm = identity_monad(term);
  const std::string& tob = term->objects().front();
  Functor unit_carrier{term, s.base, {}, {}};
  unit_carrier.ob_map[tob] = s.unit_object;
  unit_carrier.mor_map[term->id_of(tob)] = c.id_of(s.unit_object);

  auto alpha_cell = [&]() {
    NatTrans n;
    for (const auto& a : c.objects())
      for (const auto& b : c.objects())
        for (const auto& x : c.objects())
          n.components[pair_id(a, pair_id(b, x))] = s.assoc_at(a, b, x);
    return n;
  };
  auto unitor_cell = [&](bool left) {
    NatTrans n;
    for (const auto& a : c.objects())
      n.components[a] = left ? *s.lunit_ptr(a) : *s.runit_ptr(a);
    return n;
  };

  if (t.variant == Laxity::lax) {
    OplaxMonadMorphism tens{m2.monad, m, s.tensor, t.interchange};
    r.absorb(check_oplax_morphism(tens), "tensor-cell");

    NatTrans uic{compose_functors(unit_carrier, mterm.endo),
                 compose_functors(m.endo, unit_carrier),
                 {}};
    uic.components[tob] = t.unit_cell;
    OplaxMonadMorphism unit_mor{mterm, m, unit_carrier, uic};
    r.absorb(check_oplax_morphism(unit_mor), "unit-cell");

    OplaxMonadMorphism ident = identity_oplax(m);
    OplaxMonadMorphism left_leg =
        compose_oplax(tens, detail::product_cell(ident, tens, m3l, m2));
    OplaxMonadMorphism right_leg = compose_oplax(
        compose_oplax(tens, detail::product_cell(tens, ident, m3r, m2)),
        strict_oplax(detail::reassociator(c, m3l.prod.cat, m3r.prod.cat), m3l.monad,
                     m3r.monad));
    NatTrans an = alpha_cell();
    an.source = left_leg.carrier;
    an.target = right_leg.carrier;
    r.absorb(check_monad_transformation(OplaxMonadTransformation{left_leg, right_leg, an}),
             "assoc-cell");

    for (bool left : {true, false}) {
      Functor br = detail::bracket(s, left);
      NatTrans bic{compose_functors(br, m.endo), compose_functors(m2.monad.endo, br), {}};
      for (const auto& a : c.objects()) {
        const std::string& sid = c.id_of(m.endo.ob(a));
        bic.components[a] = left ? pair_id(t.unit_cell, sid) : pair_id(sid, t.unit_cell);
      }
      OplaxMonadMorphism leg = compose_oplax(tens, OplaxMonadMorphism{m, m2.monad, br, bic});
      NatTrans un = unitor_cell(left);
      un.source = leg.carrier;
      un.target = ident.carrier;
      r.absorb(check_monad_transformation(OplaxMonadTransformation{leg, ident, un}),
               left ? "left-unit-cell" : "right-unit-cell");
    }
  } else {
    LaxMonadMorphism tens{m2.monad, m, s.tensor, t.interchange};
    r.absorb(check_lax_morphism(tens), "tensor-cell");

    NatTrans uic{compose_functors(m.endo, unit_carrier),
                 compose_functors(unit_carrier, mterm.endo),
                 {}};
    uic.components[tob] = t.unit_cell;
    LaxMonadMorphism unit_mor{mterm, m, unit_carrier, uic};
    r.absorb(check_lax_morphism(unit_mor), "unit-cell");

    LaxMonadMorphism ident = identity_lax(m);
    LaxMonadMorphism left_leg = compose_lax(tens, detail::product_cell(ident, tens, m3l, m2));
    LaxMonadMorphism right_leg = compose_lax(
        compose_lax(tens, detail::product_cell(tens, ident, m3r, m2)),
        strict_lax(detail::reassociator(c, m3l.prod.cat, m3r.prod.cat), m3l.monad, m3r.monad));
    NatTrans an = alpha_cell();
    an.source = left_leg.carrier;
    an.target = right_leg.carrier;
    r.absorb(check_monad_transformation(LaxMonadTransformation{left_leg, right_leg, an}),
             "assoc-cell");

    for (bool left : {true, false}) {
      Functor br = detail::bracket(s, left);
      NatTrans bic{compose_functors(m2.monad.endo, br), compose_functors(br, m.endo), {}};
      for (const auto& a : c.objects()) {
        const std::string& sid = c.id_of(m.endo.ob(a));
        bic.components[a] = left ? pair_id(t.unit_cell, sid) : pair_id(sid, t.unit_cell);
      }
      LaxMonadMorphism leg = compose_lax(tens, LaxMonadMorphism{m, m2.monad, br, bic});
      NatTrans un = unitor_cell(left);
      un.source = leg.carrier;
      un.target = ident.carrier;
      r.absorb(check_monad_transformation(LaxMonadTransformation{leg, ident, un}),
               left ? "left-unit-cell" : "right-unit-cell");
    }
  }
  return r;
}

/// Validator 2 (monoidal-side): reads the tuple as monad structure carried
/// by monoidal machinery. The endofunctor becomes a monoidal functor with
/// the interchange family as tensorator, the unit and multiplication become
/// monoidal transformations (the squared tensorator is produced by functor
/// composition), and the monad laws close the system.
inline Report validate_as_monad_on_monoidal(const MonoidalMonadTuple& t) {
  Report r = detail::tuple_frame(t);
  if (!r.structural.empty()) return r;
  const MonoidalStructure& s = t.structure;
  const Monad& m = t.monad;

  r.absorb(check_category(*s.base), "base");
  r.absorb(check_monoidal(s), "monoidal");
  r.absorb(check_monad(m), "monad");
  if (!r.structural.empty()) return r;

  if (t.variant == Laxity::lax) {
    LaxMonoidalFunctor sf{s, s, m.endo, t.interchange, t.unit_cell};
    r.absorb(check_lax_monoidal_functor(sf), "endofunctor");
    LaxMonoidalTransformation eta{identity_lax_monoidal(s), sf, m.unit};
    r.absorb(check_monoidal_transformation(eta), "unit");
    LaxMonoidalFunctor ss = compose_lax_monoidal(sf, sf);
    LaxMonoidalTransformation mu{ss, sf, m.mult};
    r.absorb(check_monoidal_transformation(mu), "mult");
  } else {
    OplaxMonoidalFunctor sf{s, s, m.endo, t.interchange, t.unit_cell};
    r.absorb(check_oplax_monoidal_functor(sf), "endofunctor");
    OplaxMonoidalTransformation eta{identity_oplax_monoidal(s), sf, m.unit};
    r.absorb(check_monoidal_transformation(eta), "unit");
    OplaxMonoidalFunctor ss = compose_oplax_monoidal(sf, sf);
    OplaxMonoidalTransformation mu{ss, sf, m.mult};
    r.absorb(check_monoidal_transformation(mu), "mult");
  }
  return r;
}

/// Runs both validators and compares verdicts. The two condition systems
/// are equivalent readings of the same axioms, so `agree` holding on lawful
/// and unlawful inputs alike is itself a checked property of the library.
struct InterchangeVerdict {
  Report monad_side;
  Report monoidal_side;
  bool agree = false;
  bool ok = false;
};

inline InterchangeVerdict check_interchange_equivalence(const MonoidalMonadTuple& t) {
  InterchangeVerdict v;
  v.monad_side = validate_as_monoidal_in_monads(t);
  v.monoidal_side = validate_as_monad_on_monoidal(t);
  v.agree = v.monad_side.ok() == v.monoidal_side.ok();
  v.ok = v.agree && v.monad_side.ok();
  return v;
}

}  // namespace catkit
