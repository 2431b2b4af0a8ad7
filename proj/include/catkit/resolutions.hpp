#pragma once

#include <string>
#include <utility>
#include <vector>

#include "fincat.hpp"
#include "monad.hpp"
#include "report.hpp"

namespace catkit {

/// Kleisli morphism id: the representing morphism dom -> S(cod) plus the
/// codomain object. The codomain is part of the id because the endofunctor
/// need not be injective on objects, so the representative alone can be
/// ambiguous.
inline std::string kleisli_mor_id(const std::string& rep, const std::string& cod) {
  return "k:" + rep + ":" + cod;
}

struct KleisliMor {
  std::string id, dom, cod;
  std::string rep;  // dom -> S(cod) in the base category
};

struct KleisliResolution {
  Monad monad;
  CatRef cat;                   // same objects as the base
  std::vector<KleisliMor> mors;
  Functor free;    // base -> cat, identity on objects
  Functor forget;  // cat -> base, A |-> S(A)
  NatTrans kappa;  // free∘S => free, component at X represented by id_{S(X)}
  NatTrans unit;   // Id => forget∘free  (the monad unit)
  NatTrans counit; // free∘forget => Id
};

/// Builds the Kleisli category with hom-sets Hom(A, S(B)), composition
/// g∘f = mult ∘ S(g) ∘ f, and identities given by the unit.
inline KleisliResolution kleisli(const Monad& m) {
  Report pre;
  if (m.base) pre.absorb(check_category(*m.base), "base");
  pre.absorb(check_monad(m), "monad");
  if (!pre.ok()) throw precondition_error("kleisli: input is not a valid monad", pre);

  const FinCat& c = *m.base;
  auto k = std::make_shared<FinCat>();
  k->name = c.name.empty() ? std::string("kleisli") : (c.name + ".kleisli");
  std::vector<KleisliMor> mors;
  for (const auto& a : c.objects()) k->add_object(a);
  for (const auto& a : c.objects())
    for (const auto& b : c.objects())
      for (const auto& rep : hom_set(c, a, m.endo.ob(b))) {
        KleisliMor km{kleisli_mor_id(rep, b), a, b, rep};
        k->add_morphism(km.id, km.dom, km.cod);
        mors.push_back(std::move(km));
      }
  for (const auto& a : c.objects())
    k->set_identity(a, kleisli_mor_id(m.unit.at(a), a));
  for (const auto& f : mors)
    for (const auto& g : mors) {
      if (g.dom != f.cod) continue;
      const std::string& rep = c.comp(m.mult.at(g.cod), c.comp(m.endo.mor(g.rep), f.rep));
      k->set_compose(g.id, f.id, kleisli_mor_id(rep, g.cod));
    }
  CatRef kc = k;

  Functor free{m.base, kc, {}, {}};
  for (const auto& a : c.objects()) free.ob_map[a] = a;
  for (const auto& f : c.morphisms())
    free.mor_map[f.id] = kleisli_mor_id(c.comp(m.unit.at(f.cod), f.id), f.cod);

  Functor forget{kc, m.base, {}, {}};
  for (const auto& a : c.objects()) forget.ob_map[a] = m.endo.ob(a);
  for (const auto& f : mors)
    forget.mor_map[f.id] = c.comp(m.mult.at(f.cod), m.endo.mor(f.rep));

  NatTrans kappa{compose_functors(free, m.endo), free, {}};
  for (const auto& a : c.objects())
    kappa.components[a] = kleisli_mor_id(c.id_of(m.endo.ob(a)), a);

  NatTrans unit{identity_functor(m.base), compose_functors(forget, free),
                m.unit.components};

  NatTrans counit{compose_functors(free, forget), identity_functor(kc), {}};
  for (const auto& a : c.objects())
    counit.components[a] = kleisli_mor_id(c.id_of(m.endo.ob(a)), a);

  return {m, kc, std::move(mors), std::move(free), std::move(forget),
          std::move(kappa), std::move(unit), std::move(counit)};
}

// ---------------------------------------------------------------------------
// Eilenberg-Moore

inline std::string algebra_id(const std::string& carrier, const std::string& action) {
  return "alg(" + carrier + "," + action + ")";
}

inline std::string algebra_mor_id(const std::string& underlying, const std::string& src,
                                  const std::string& dst) {
  return "em(" + underlying + ":" + src + ">" + dst + ")";
}

struct Algebra {
  std::string id, carrier, action;  // action: S(carrier) -> carrier
};

struct AlgebraMor {
  std::string id, dom, cod;
  std::string underlying;  // carrier(dom) -> carrier(cod) in the base
};

struct EMResolution {
  Monad monad;
  CatRef cat;
  std::vector<Algebra> algebras;
  std::vector<AlgebraMor> mors;
  Functor free;    // base -> cat, A |-> (S(A), mult_A)
  Functor forget;  // cat -> base
  NatTrans unit;   // Id => forget∘free  (the monad unit)
  NatTrans counit; // free∘forget => Id, component at (A,a) carried by a
};

/// Exhaustively enumerates algebras (every S(A) -> A satisfying the unit
/// and associativity laws) and the structure-preserving morphisms between
/// them.
inline EMResolution em(const Monad& m) {
  Report pre;
  if (m.base) pre.absorb(check_category(*m.base), "base");
  pre.absorb(check_monad(m), "monad");
  if (!pre.ok()) throw precondition_error("em: input is not a valid monad", pre);

  const FinCat& c = *m.base;
  std::vector<Algebra> algebras;
  for (const auto& a : c.objects())
    for (const auto& act : hom_set(c, m.endo.ob(a), a)) {
      if (c.comp(act, m.unit.at(a)) != c.id_of(a)) continue;
      if (c.comp(act, m.mult.at(a)) != c.comp(act, m.endo.mor(act))) continue;
      algebras.push_back({algebra_id(a, act), a, act});
    }

  auto e = std::make_shared<FinCat>();
  e->name = c.name.empty() ? std::string("em") : (c.name + ".em");
  for (const auto& alg : algebras) e->add_object(alg.id);
  std::vector<AlgebraMor> mors;
  for (const auto& src : algebras)
    for (const auto& dst : algebras)
      for (const auto& h : hom_set(c, src.carrier, dst.carrier)) {
        if (c.comp(h, src.action) != c.comp(dst.action, m.endo.mor(h))) continue;
        AlgebraMor am{algebra_mor_id(h, src.id, dst.id), src.id, dst.id, h};
        e->add_morphism(am.id, am.dom, am.cod);
        mors.push_back(std::move(am));
      }
  for (const auto& alg : algebras)
    e->set_identity(alg.id, algebra_mor_id(c.id_of(alg.carrier), alg.id, alg.id));
  for (const auto& f : mors)
    for (const auto& g : mors) {
      if (g.dom != f.cod) continue;
      e->set_compose(g.id, f.id,
                     algebra_mor_id(c.comp(g.underlying, f.underlying), f.dom, g.cod));
    }
  CatRef ec = e;

  auto free_ob = [&](const std::string& a) {
    return algebra_id(m.endo.ob(a), m.mult.at(a));
  };
  Functor free{m.base, ec, {}, {}};
  for (const auto& a : c.objects()) free.ob_map[a] = free_ob(a);
  for (const auto& f : c.morphisms())
    free.mor_map[f.id] = algebra_mor_id(m.endo.mor(f.id), free_ob(f.dom), free_ob(f.cod));

  Functor forget{ec, m.base, {}, {}};
  for (const auto& alg : algebras) forget.ob_map[alg.id] = alg.carrier;
  for (const auto& am : mors) forget.mor_map[am.id] = am.underlying;

  NatTrans unit{identity_functor(m.base), compose_functors(forget, free),
                m.unit.components};

  NatTrans counit{compose_functors(free, forget), identity_functor(ec), {}};
  for (const auto& alg : algebras)
    counit.components[alg.id] = algebra_mor_id(alg.action, free_ob(alg.carrier), alg.id);

  return {m, ec, std::move(algebras), std::move(mors), std::move(free),
          std::move(forget), std::move(unit), std::move(counit)};
}

// ---------------------------------------------------------------------------
// Adjunction verification

/// Boundary validation plus both triangle identities for a candidate
/// adjunction free ⊣ forget presented by unit and counit.
inline Report verify_adjunction(const Functor& free, const Functor& forget,
                                const NatTrans& unit, const NatTrans& counit) {
  Report r;
  if (!same_cat(free.source, forget.target) || !same_cat(free.target, forget.source)) {
    r.error("free and forget do not form a cycle of categories");
    return r;
  }
  if (!same_maps(unit.source, identity_functor(free.source)) ||
      !same_maps(unit.target, compose_functors(forget, free)))
    r.error("unit boundary mismatch: expected Id => forget∘free");
  if (!same_maps(counit.source, compose_functors(free, forget)) ||
      !same_maps(counit.target, identity_functor(free.target)))
    r.error("counit boundary mismatch: expected free∘forget => Id");
  r.absorb(check_functor(free), "free");
  r.absorb(check_functor(forget), "forget");
  r.absorb(check_nat_trans(unit), "unit");
  r.absorb(check_nat_trans(counit), "counit");
  if (!r.structural.empty()) return r;

  const FinCat& c = *free.source;
  const FinCat& d = *free.target;
  for (const auto& a : c.objects()) {
    std::string lhs = detail::comp2(d, counit.at(free.ob(a)), free.mor(unit.at(a)));
    const std::string& rhs = d.id_of(free.ob(a));
    if (lhs != rhs) r.violation("triangle-free", "object=" + a, lhs, rhs);
  }
  for (const auto& x : d.objects()) {
    std::string lhs = detail::comp2(c, forget.mor(counit.at(x)), unit.at(forget.ob(x)));
    const std::string& rhs = c.id_of(forget.ob(x));
    if (lhs != rhs) r.violation("triangle-forget", "object=" + x, lhs, rhs);
  }
  return r;
}

// ---------------------------------------------------------------------------
// Kleisli of a product vs product of Kleislis

struct KleisliComparison {
  KleisliResolution left, right;   // Kleisli of each factor
  ProductMonad product;            // the product monad and its base
  KleisliResolution of_product;    // Kleisli of the product monad
  ProductCategory kleisli_product; // product of the two Kleisli categories
  Functor comparison;              // of_product.cat -> kleisli_product.cat
  Functor inverse;
  Report verification;             // defining equations + two-sided inverse
};

/// The unique comparison sending the free resolution of the product monad
/// to the product of the free resolutions. It is built directly from the
/// hom-set bijection Hom((A,A'),(S×S')(B,B')) = Hom(A,S(B)) × Hom(A',S'(B'))
/// and then verified: H∘free = free×free, H(kappa) = (kappa,kappa), and
/// H is invertible on the nose.
inline KleisliComparison kleisli_product_comparison(const Monad& m, const Monad& n) {
  KleisliResolution km = kleisli(m);
  KleisliResolution kn = kleisli(n);
  ProductMonad pm = product_monad(m, n);
  KleisliResolution kp = kleisli(pm.monad);
  ProductCategory kk = product_category(km.cat, kn.cat);

  Functor h{kp.cat, kk.cat, {}, {}};
  Functor hinv{kk.cat, kp.cat, {}, {}};
  for (const auto& o : kp.cat->objects()) {
    h.ob_map[o] = o;  // both sides carry the canonical pair ids
    hinv.ob_map[o] = o;
  }
  for (const auto& fm : km.mors)
    for (const auto& gn : kn.mors) {
      std::string prod_id =
          kleisli_mor_id(pair_id(fm.rep, gn.rep), pair_id(fm.cod, gn.cod));
      std::string pair = pair_id(fm.id, gn.id);
      h.mor_map[prod_id] = pair;
      hinv.mor_map[pair] = prod_id;
    }

  Report v;
  v.absorb(check_functor(h), "comparison");
  v.absorb(check_functor(hinv), "inverse");
  Functor free_pair = product_functor(km.free, kn.free, pm.prod.cat, kk.cat);
  if (!same_maps(compose_functors(h, kp.free), free_pair))
    v.error("comparison does not restrict to the product of the free functors");
  NatTrans kappa_pair = product_nat(km.kappa, kn.kappa, pm.prod.cat, kk.cat);
  if (whisker_left(h, kp.kappa).components != kappa_pair.components)
    v.error("comparison does not carry kappa to the pair of kappas");
  if (!same_maps(compose_functors(hinv, h), identity_functor(kp.cat)))
    v.error("inverse∘comparison is not the identity");
  if (!same_maps(compose_functors(h, hinv), identity_functor(kk.cat)))
    v.error("comparison∘inverse is not the identity");

  return {std::move(km), std::move(kn), std::move(pm), std::move(kp),
          std::move(kk), std::move(h), std::move(hinv), std::move(v)};
}

}  // namespace catkit
