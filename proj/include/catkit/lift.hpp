#pragma once

#include <string>
#include <unordered_map>
#include <utility>

#include "monmonad.hpp"
#include "resolutions.hpp"

namespace catkit {

/// A monoidal structure carried up to the Kleisli category of a lax tuple,
/// together with the two canonical monoidal functors around it: the free
/// functor is strictly monoidal (identity comparison cells), the forgetful
/// functor is monoidal with the tuple's interchange family as comparison.
struct LiftedKleisli {
  KleisliResolution resolution;
  MonoidalStructure structure;
  LaxMonoidalFunctor free_as_monoidal;
  LaxMonoidalFunctor forget_as_monoidal;
  Report verification;
};

/// The same package over the algebra category of an oplax tuple; here the
/// forgetful functor is the strict one and the free functor carries the
/// interchange cells.
struct LiftedEM {
  EMResolution resolution;
  MonoidalStructure structure;
  OplaxMonoidalFunctor free_as_monoidal;
  OplaxMonoidalFunctor forget_as_monoidal;
  Report verification;
};

namespace detail {

/// Gate shared by all lifts: right orientation, and both interchange
/// validators accept the tuple. Disagreement between the validators is a
/// defect of this library, never of the input.
inline void require_lawful_tuple(const MonoidalMonadTuple& t, Laxity need, const char* what) {
  if (t.variant != need) {
    Report pre;
    pre.error(std::string(what) + " needs the " + laxity_name(need) +
              " orientation, got " + laxity_name(t.variant));
    throw precondition_error(std::string(what) + ": wrong tuple orientation", std::move(pre));
  }
  InterchangeVerdict v = check_interchange_equivalence(t);
  if (v.ok) return;
  if (!v.agree) {
    Report bug;
    bug.error("the two interchange validators disagree on this input");
    bug.absorb(v.monad_side, "monad-side");
    bug.absorb(v.monoidal_side, "monoidal-side");
    throw internal_error(std::string(what) + ": validator disagreement", std::move(bug));
  }
  Report pre;
  pre.absorb(v.monad_side, "monad-side");
  pre.absorb(v.monoidal_side, "monoidal-side");
  throw precondition_error(std::string(what) + ": tuple fails validation", std::move(pre));
}

/// Compatibility of a braiding with the interchange family, the square a
/// braided tuple must satisfy before its braiding can follow the tensor up
/// to a resolution. Assumes the tuple itself already validated (total
/// interchange and endofunctor); the braid table may still be partial and
/// is looked up tolerantly.
inline Report braid_interchange_compat(const MonoidalMonadTuple& t) {
  Report r;
  const MonoidalStructure& s = t.structure;
  if (!s.braid) {
    r.error("tuple carries no braiding");
    return r;
  }
  const FinCat& c = *s.base;
  const Functor& endo = t.monad.endo;
  auto braid_at = [&](const std::string& x, const std::string& y) -> const std::string* {
    auto it = s.braid->components.find({x, y});
    if (it == s.braid->components.end() || !c.mor(it->second)) return nullptr;
    return &it->second;
  };
  for (const auto& a : c.objects())
    for (const auto& b : c.objects()) {
      const std::string* beta = braid_at(a, b);
      const std::string* beta_s = braid_at(endo.ob(a), endo.ob(b));
      if (!beta || !beta_s) {
        r.error("braiding has no usable component at (" + a + "," + b + ")");
        continue;
      }
      std::string lhs, rhs;
      if (t.variant == Laxity::lax) {
        lhs = comp2(c, t.interchange.at(pair_id(b, a)), *beta_s);
        rhs = comp2(c, endo.mor(*beta), t.interchange.at(pair_id(a, b)));
      } else {
        lhs = comp2(c, *beta_s, t.interchange.at(pair_id(a, b)));
        rhs = comp2(c, t.interchange.at(pair_id(b, a)), endo.mor(*beta));
      }
      if (lhs != rhs) r.violation("braid-interchange", "(" + a + "," + b + ")", lhs, rhs);
    }
  return r;
}

}  // namespace detail

/// Carries the tensor of a lawful lax tuple onto the Kleisli category:
/// objects tensor as in the base, a pair of Kleisli morphisms tensors to
/// the interchange cell composed after the tensored representatives, and
/// the coherence cells are the free images of the base cells. The result
/// is re-verified wholesale; failure there is a library defect.
inline LiftedKleisli lift_kleisli(const MonoidalMonadTuple& t) {
  detail::require_lawful_tuple(t, Laxity::lax, "the Kleisli lift");
  const MonoidalStructure& s = t.structure;
  const FinCat& c = *s.base;

  LiftedKleisli out;
  out.resolution = kleisli(t.monad);
  const KleisliResolution& k = out.resolution;

  ProductCategory sq = product_category(k.cat, k.cat);
  MonoidalStructure ks;
  ks.base = k.cat;
  ks.base_sq = sq.cat;
  ks.tensor = Functor{sq.cat, k.cat, {}, {}};
  for (const auto& a : c.objects())
    for (const auto& b : c.objects()) ks.tensor.ob_map[pair_id(a, b)] = s.ob(a, b);
  for (const auto& k1 : k.mors)
    for (const auto& k2 : k.mors) {
      std::string rep = detail::comp2(c, t.interchange.at(pair_id(k1.cod, k2.cod)),
                                      s.mor(k1.rep, k2.rep));
      ks.tensor.mor_map[pair_id(k1.id, k2.id)] =
          kleisli_mor_id(rep, s.ob(k1.cod, k2.cod));
    }
  ks.unit_object = s.unit_object;
  for (const auto& a : c.objects())
    for (const auto& b : c.objects())
      for (const auto& x : c.objects())
        ks.assoc[{a, b, x}] = k.free.mor(s.assoc_at(a, b, x));
  for (const auto& a : c.objects()) {
    ks.left_unitor[a] = k.free.mor(*s.lunit_ptr(a));
    ks.right_unitor[a] = k.free.mor(*s.runit_ptr(a));
  }
  out.structure = std::move(ks);
  const MonoidalStructure& lifted = out.structure;

  {
    Functor ff = product_functor(k.free, k.free, s.base_sq, lifted.base_sq);
    NatTrans cells{compose_functors(lifted.tensor, ff), compose_functors(k.free, s.tensor), {}};
    for (const auto& a : c.objects())
      for (const auto& b : c.objects())
        cells.components[pair_id(a, b)] = k.cat->id_of(s.ob(a, b));
    out.free_as_monoidal = LaxMonoidalFunctor{s, lifted, k.free, std::move(cells),
                                              k.cat->id_of(s.unit_object)};
  }
  {
    Functor uu = product_functor(k.forget, k.forget, lifted.base_sq, s.base_sq);
    NatTrans cells{compose_functors(s.tensor, uu), compose_functors(k.forget, lifted.tensor), {}};
    for (const auto& a : c.objects())
      for (const auto& b : c.objects())
        cells.components[pair_id(a, b)] = t.interchange.at(pair_id(a, b));
    out.forget_as_monoidal =
        LaxMonoidalFunctor{lifted, s, k.forget, std::move(cells), t.unit_cell};
  }

  Report ver;
  ver.absorb(check_monoidal(out.structure), "lifted-monoidal");
  ver.absorb(check_lax_monoidal_functor(out.free_as_monoidal), "free");
  ver.absorb(check_lax_monoidal_functor(out.forget_as_monoidal), "forget");
  if (!ver.ok())
    throw internal_error("the lifted Kleisli structure failed re-verification",
                         std::move(ver));
  out.verification = std::move(ver);
  return out;
}

/// Carries the tensor of a lawful oplax tuple onto the algebra category:
/// two algebras tensor to their tensored carrier with the action routed
/// through the interchange cell, the unit is the unit object with the
/// tuple's unit cell as action, and the coherence cells are the base cells
/// as algebra morphisms. Re-verified wholesale like the Kleisli lift.
inline LiftedEM lift_em(const MonoidalMonadTuple& t) {
  detail::require_lawful_tuple(t, Laxity::oplax, "the algebra-category lift");
  const MonoidalStructure& s = t.structure;
  const FinCat& c = *s.base;

  LiftedEM out;
  out.resolution = em(t.monad);
  const EMResolution& e = out.resolution;

  std::unordered_map<std::string, const Algebra*> alg;
  for (const auto& a : e.algebras) alg[a.id] = &a;
  auto alg_of = [&](const std::string& x) -> const Algebra& {
    auto it = alg.find(x);
    if (it == alg.end()) {
      Report bug;
      bug.error("expected a lawful algebra named " + x + " but the algebra category has none");
      throw internal_error("the algebra-category lift produced an unlawful algebra",
                           std::move(bug));
    }
    return *it->second;
  };
  auto tensor_alg = [&](const std::string& x, const std::string& y) {
    const Algebra& ax = alg_of(x);
    const Algebra& ay = alg_of(y);
    std::string action = detail::comp2(c, s.mor(ax.action, ay.action),
                                       t.interchange.at(pair_id(ax.carrier, ay.carrier)));
    return algebra_id(s.ob(ax.carrier, ay.carrier), action);
  };

  ProductCategory sq = product_category(e.cat, e.cat);
  MonoidalStructure es;
  es.base = e.cat;
  es.base_sq = sq.cat;
  es.tensor = Functor{sq.cat, e.cat, {}, {}};
  for (const auto& x : e.cat->objects())
    for (const auto& y : e.cat->objects()) es.tensor.ob_map[pair_id(x, y)] = tensor_alg(x, y);
  for (const auto& h1 : e.mors)
    for (const auto& h2 : e.mors)
      es.tensor.mor_map[pair_id(h1.id, h2.id)] =
          algebra_mor_id(s.mor(h1.underlying, h2.underlying), tensor_alg(h1.dom, h2.dom),
                         tensor_alg(h1.cod, h2.cod));
  es.unit_object = algebra_id(s.unit_object, t.unit_cell);
  auto carrier_of = [&](const std::string& x) -> const std::string& { return alg_of(x).carrier; };
  for (const auto& x : e.cat->objects())
    for (const auto& y : e.cat->objects())
      for (const auto& z : e.cat->objects())
        es.assoc[{x, y, z}] =
            algebra_mor_id(s.assoc_at(carrier_of(x), carrier_of(y), carrier_of(z)),
                           tensor_alg(x, tensor_alg(y, z)), tensor_alg(tensor_alg(x, y), z));
  for (const auto& x : e.cat->objects()) {
    es.left_unitor[x] = algebra_mor_id(*s.lunit_ptr(carrier_of(x)),
                                       tensor_alg(es.unit_object, x), x);
    es.right_unitor[x] = algebra_mor_id(*s.runit_ptr(carrier_of(x)),
                                        tensor_alg(x, es.unit_object), x);
  }
  out.structure = std::move(es);
  const MonoidalStructure& lifted = out.structure;

  {
    Functor ff = product_functor(e.free, e.free, s.base_sq, lifted.base_sq);
    NatTrans cells{compose_functors(e.free, s.tensor), compose_functors(lifted.tensor, ff), {}};
    for (const auto& a : c.objects())
      for (const auto& b : c.objects())
        cells.components[pair_id(a, b)] =
            algebra_mor_id(t.interchange.at(pair_id(a, b)), e.free.ob(s.ob(a, b)),
                           tensor_alg(e.free.ob(a), e.free.ob(b)));
    out.free_as_monoidal = OplaxMonoidalFunctor{
        s, lifted, e.free, std::move(cells),
        algebra_mor_id(t.unit_cell, e.free.ob(s.unit_object), lifted.unit_object)};
  }
  {
    Functor uu = product_functor(e.forget, e.forget, lifted.base_sq, s.base_sq);
    NatTrans cells{compose_functors(e.forget, lifted.tensor), compose_functors(s.tensor, uu), {}};
    for (const auto& x : e.cat->objects())
      for (const auto& y : e.cat->objects())
        cells.components[pair_id(x, y)] = c.id_of(s.ob(carrier_of(x), carrier_of(y)));
    out.forget_as_monoidal = OplaxMonoidalFunctor{lifted, s, e.forget, std::move(cells),
                                                  c.id_of(s.unit_object)};
  }

  Report ver;
  ver.absorb(check_monoidal(out.structure), "lifted-monoidal");
  ver.absorb(check_oplax_monoidal_functor(out.free_as_monoidal), "free");
  ver.absorb(check_oplax_monoidal_functor(out.forget_as_monoidal), "forget");
  if (!ver.ok())
    throw internal_error("the lifted algebra-category structure failed re-verification",
                         std::move(ver));
  out.verification = std::move(ver);
  return out;
}

/// Braided Kleisli lift: additionally demands a lawful braiding compatible
/// with the interchange family, then sends it through the free functor.
/// The symmetry claim is carried along and re-verified.
inline LiftedKleisli lift_kleisli_braided(const MonoidalMonadTuple& t) {
  detail::require_lawful_tuple(t, Laxity::lax, "the braided Kleisli lift");
  Report pre;
  if (!t.structure.braid) {
    pre.error("the tuple carries no braiding to lift");
    throw precondition_error("braided Kleisli lift: no braiding", std::move(pre));
  }
  pre.absorb(check_braiding(t.structure), "braiding");
  pre.absorb(detail::braid_interchange_compat(t), "compat");
  if (!pre.ok())
    throw precondition_error("braided Kleisli lift: braiding fails validation",
                             std::move(pre));
  LiftedKleisli out = lift_kleisli(t);
  Braid kb;
  kb.symmetric = t.structure.braid->symmetric;
  for (const auto& [key, cell] : t.structure.braid->components)
    kb.components[key] = out.resolution.free.mor(cell);
  out.structure.braid = std::move(kb);
  Report ver = check_braiding(out.structure);
  if (!ver.ok())
    throw internal_error("the lifted Kleisli braiding failed re-verification", std::move(ver));
  out.verification.absorb(ver, "lifted-braiding");
  return out;
}

/// Braided algebra-category lift: same gates, with the braiding landing on
/// carriers as algebra morphisms.
inline LiftedEM lift_em_braided(const MonoidalMonadTuple& t) {
  detail::require_lawful_tuple(t, Laxity::oplax, "the braided algebra-category lift");
  Report pre;
  if (!t.structure.braid) {
    pre.error("the tuple carries no braiding to lift");
    throw precondition_error("braided algebra-category lift: no braiding", std::move(pre));
  }
  pre.absorb(check_braiding(t.structure), "braiding");
  pre.absorb(detail::braid_interchange_compat(t), "compat");
  if (!pre.ok())
    throw precondition_error("braided algebra-category lift: braiding fails validation",
                             std::move(pre));
  LiftedEM out = lift_em(t);
  std::unordered_map<std::string, const Algebra*> alg;
  for (const auto& a : out.resolution.algebras) alg[a.id] = &a;
  Braid eb;
  eb.symmetric = t.structure.braid->symmetric;
  for (const auto& x : out.resolution.cat->objects())
    for (const auto& y : out.resolution.cat->objects())
      eb.components[{x, y}] = algebra_mor_id(
          t.structure.braid->components.at({alg.at(x)->carrier, alg.at(y)->carrier}),
          out.structure.ob(x, y), out.structure.ob(y, x));
  out.structure.braid = std::move(eb);
  Report ver = check_braiding(out.structure);
  if (!ver.ok())
    throw internal_error("the lifted algebra-category braiding failed re-verification",
                         std::move(ver));
  out.verification.absorb(ver, "lifted-braiding");
  return out;
}

}  // namespace catkit
