#pragma once

#include <algorithm>
#include <optional>
#include <string>
#include <vector>

#include "monmonad.hpp"

namespace catkit {

/// Unique morphism i -> j of a chain (requires i <= j).
inline std::string chain_mor(int i, int j) {
  if (i == j) return "id_" + std::to_string(i);
  return std::to_string(i) + "<=" + std::to_string(j);
}

/// The total order 0 < 1 < ... < n-1 as a category.
inline CatRef chain_category(int n) {
  auto c = std::make_shared<FinCat>();
  c->name = "chain" + std::to_string(n);
  for (int i = 0; i < n; ++i) c->add_object(std::to_string(i));
  for (int i = 0; i < n; ++i) {
    c->add_morphism(chain_mor(i, i), std::to_string(i), std::to_string(i));
    c->set_identity(std::to_string(i), chain_mor(i, i));
  }
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      c->add_morphism(chain_mor(i, j), std::to_string(i), std::to_string(j));
  for (int i = 0; i < n; ++i)
    for (int j = i; j < n; ++j)
      for (int k = j; k < n; ++k)
        c->set_compose(chain_mor(j, k), chain_mor(i, j), chain_mor(i, k));
  return c;
}

/// The group of order two as a one-object category: identity e, involution s.
inline CatRef z2_category() {
  auto c = std::make_shared<FinCat>();
  c->name = "z2";
  c->add_object("*");
  c->add_morphism("e", "*", "*");
  c->add_morphism("s", "*", "*");
  c->set_identity("*", "e");
  c->set_compose("e", "e", "e");
  c->set_compose("e", "s", "s");
  c->set_compose("s", "e", "s");
  c->set_compose("s", "s", "e");
  return c;
}

/// All monotone maps {0..n-1} -> {0..n-1}, lexicographically.
inline std::vector<std::vector<int>> monotone_endomaps(int n) {
  std::vector<std::vector<int>> out;
  std::vector<int> cur(static_cast<size_t>(n), 0);
  auto rec = [&](auto&& self, int pos, int low) -> void {
    if (pos == n) {
      out.push_back(cur);
      return;
    }
    for (int v = low; v < n; ++v) {
      cur[static_cast<size_t>(pos)] = v;
      self(self, pos + 1, v);
    }
  };
  if (n > 0) rec(rec, 0, 0);
  return out;
}

/// The closure operator on the n-chain whose fixed points are exactly
/// `fixed` (which must contain n-1): each point maps to the least fixed
/// point above it.
inline std::vector<int> closure_from_fixed_points(int n, const std::vector<int>& fixed) {
  std::vector<bool> is_fixed(static_cast<size_t>(n), false);
  for (int f : fixed) is_fixed[static_cast<size_t>(f)] = true;
  if (n > 0 && !is_fixed[static_cast<size_t>(n - 1)])
    throw catkit_error("closure_from_fixed_points: top element must be fixed");
  std::vector<int> cl(static_cast<size_t>(n), n - 1);
  for (int a = 0; a < n; ++a)
    for (int f = a; f < n; ++f)
      if (is_fixed[static_cast<size_t>(f)]) {
        cl[static_cast<size_t>(a)] = f;
        break;
      }
  return cl;
}

/// All closure operators on the n-chain: one per subset of {0..n-2}
/// adjoined to the always-fixed top, in increasing bitmask order.
inline std::vector<std::vector<int>> all_closures(int n) {
  std::vector<std::vector<int>> out;
  int free_points = n - 1;
  for (int mask = 0; mask < (1 << free_points); ++mask) {
    std::vector<int> fixed;
    for (int i = 0; i < free_points; ++i)
      if (mask & (1 << i)) fixed.push_back(i);
    fixed.push_back(n - 1);
    out.push_back(closure_from_fixed_points(n, fixed));
  }
  return out;
}

/// A monotone endomap as an endofunctor of the chain.
inline Functor chain_endofunctor(const CatRef& chain, const std::vector<int>& f) {
  int n = static_cast<int>(chain->objects().size());
  Functor e{chain, chain, {}, {}};
  for (int i = 0; i < n; ++i)
    e.ob_map[std::to_string(i)] = std::to_string(f[static_cast<size_t>(i)]);
  for (int i = 0; i < n; ++i)
    for (int j = i; j < n; ++j)
      e.mor_map[chain_mor(i, j)] =
          chain_mor(f[static_cast<size_t>(i)], f[static_cast<size_t>(j)]);
  return e;
}

namespace detail {

inline Monad chain_monad_from_components(const CatRef& chain, const std::vector<int>& f,
                                         bool force_fallback) {
  int n = static_cast<int>(chain->objects().size());
  Functor endo = chain_endofunctor(chain, f);
  NatTrans unit{identity_functor(chain), endo, {}};
  NatTrans mult{compose_functors(endo, endo), endo, {}};
  for (int a = 0; a < n; ++a) {
    int fa = f[static_cast<size_t>(a)];
    int ffa = f[static_cast<size_t>(fa)];
    if (a <= fa)
      unit.components[std::to_string(a)] = chain_mor(a, fa);
    else if (force_fallback)
      unit.components[std::to_string(a)] = chain_mor(a, a);
    if (ffa <= fa)
      mult.components[std::to_string(a)] = chain_mor(ffa, fa);
    else if (force_fallback)
      mult.components[std::to_string(a)] = chain_mor(ffa, ffa);
  }
  return {chain, std::move(endo), std::move(unit), std::move(mult)};
}

}  // namespace detail

/// The candidate monad of a monotone endomap, when its unit and
/// multiplication cells exist at every point (the map is inflationary and
/// idempotent); nothing otherwise. Chain thinness makes those cells unique,
/// so this is the only possible monad structure on the endofunctor.
inline std::optional<Monad> chain_endomap_monad(const CatRef& chain, const std::vector<int>& f) {
  int n = static_cast<int>(chain->objects().size());
  for (int a = 0; a < n; ++a) {
    int fa = f[static_cast<size_t>(a)];
    if (a > fa || f[static_cast<size_t>(fa)] != fa) return std::nullopt;
  }
  return detail::chain_monad_from_components(chain, f, false);
}

/// Monad data for any monotone endomap: where the canonical unit or
/// multiplication cell does not exist in the chain, the identity on its
/// required domain stands in, so the result is always well-formed data
/// whose validation report localizes exactly what failed.
inline Monad chain_endomap_monad_forced(const CatRef& chain, const std::vector<int>& f) {
  return detail::chain_monad_from_components(chain, f, true);
}

/// The monad of a closure operator on the chain (unit a <= cl(a),
/// multiplication an identity by idempotence).
inline Monad closure_monad(const CatRef& chain, const std::vector<int>& cl) {
  auto m = chain_endomap_monad(chain, cl);
  if (!m) throw catkit_error("closure_monad: map is not a closure operator");
  return *m;
}

/// Join-semilattice structure on the chain: tensor = max, unit = bottom,
/// all coherence cells identities. Carries the (strictly symmetric)
/// braiding unless `braided` is false.
inline MonoidalStructure max_monoidal(const CatRef& chain, bool braided = true) {
  int n = static_cast<int>(chain->objects().size());
  ProductCategory sq = product_category(chain, chain);
  MonoidalStructure s;
  s.base = chain;
  s.base_sq = sq.cat;
  s.tensor = Functor{sq.cat, chain, {}, {}};
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      s.tensor.ob_map[pair_id(std::to_string(i), std::to_string(j))] =
          std::to_string(std::max(i, j));
  for (int i = 0; i < n; ++i)
    for (int j = i; j < n; ++j)
      for (int k = 0; k < n; ++k)
        for (int l = k; l < n; ++l)
          s.tensor.mor_map[pair_id(chain_mor(i, j), chain_mor(k, l))] =
              chain_mor(std::max(i, k), std::max(j, l));
  s.unit_object = "0";
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      for (int c = 0; c < n; ++c)
        s.assoc[{std::to_string(a), std::to_string(b), std::to_string(c)}] =
            chain_mor(std::max({a, b, c}), std::max({a, b, c}));
  for (int a = 0; a < n; ++a) {
    s.left_unitor[std::to_string(a)] = chain_mor(a, a);
    s.right_unitor[std::to_string(a)] = chain_mor(a, a);
  }
  if (braided) {
    Braid b;
    b.symmetric = true;
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j)
        b.components[{std::to_string(i), std::to_string(j)}] =
            chain_mor(std::max(i, j), std::max(i, j));
    s.braid = std::move(b);
  }
  return s;
}

/// Group multiplication of the two-element group as a tensor on its
/// one-object category; all coherence cells are the identity.
inline MonoidalStructure z2_monoidal() {
  CatRef z = z2_category();
  ProductCategory sq = product_category(z, z);
  MonoidalStructure s;
  s.base = z;
  s.base_sq = sq.cat;
  s.tensor = Functor{sq.cat, z, {}, {}};
  s.tensor.ob_map[pair_id("*", "*")] = "*";
  s.tensor.mor_map[pair_id("e", "e")] = "e";
  s.tensor.mor_map[pair_id("e", "s")] = "s";
  s.tensor.mor_map[pair_id("s", "e")] = "s";
  s.tensor.mor_map[pair_id("s", "s")] = "e";
  s.unit_object = "*";
  s.assoc[{"*", "*", "*"}] = "e";
  s.left_unitor["*"] = "e";
  s.right_unitor["*"] = "e";
  return s;
}

/// Candidate braiding on the one-object group category: the identity
/// (lawful) or the involution (fails the hexagons — the braiding checker
/// rejects it by enumeration, not by symmetry of the formulas).
inline Braid z2_braid(bool twisted) {
  Braid b;
  b.symmetric = true;
  b.components[{"*", "*"}] = twisted ? "s" : "e";
  return b;
}

/// The involution-valued monad on the group category: identity carrier,
/// unit and multiplication both s. Lawful because s∘s = e.
inline Monad z2_twisted_monad() {
  CatRef z = z2_category();
  Functor endo = identity_functor(z);
  NatTrans unit{identity_functor(z), endo, {}};
  unit.components["*"] = "s";
  NatTrans mult{compose_functors(endo, endo), endo, {}};
  mult.components["*"] = "s";
  return {z, std::move(endo), std::move(unit), std::move(mult)};
}

namespace detail {

inline NatTrans interchange_shell(const MonoidalStructure& s, const Monad& m, Laxity v) {
  auto [src, tgt] = interchange_boundary(s, m, v);
  return NatTrans{std::move(src), std::move(tgt), {}};
}

}  // namespace detail

/// Closure monad + max tensor glued over the chain. The interchange cells
/// are forced: max(cl a, cl b) and cl(max(a, b)) coincide, so each
/// component is that object's identity in either orientation. The oplax
/// unit cell cl(0) -> 0 exists only when the bottom is closed.
inline MonoidalMonadTuple closure_tuple(const CatRef& chain, const std::vector<int>& cl,
                                        Laxity v) {
  int n = static_cast<int>(chain->objects().size());
  MonoidalMonadTuple t;
  t.structure = max_monoidal(chain);
  t.monad = closure_monad(chain, cl);
  t.variant = v;
  t.interchange = detail::interchange_shell(t.structure, t.monad, v);
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) {
      int c = cl[static_cast<size_t>(std::max(a, b))];
      t.interchange.components[pair_id(std::to_string(a), std::to_string(b))] = chain_mor(c, c);
    }
  int cl0 = cl[0];
  if (v == Laxity::lax) {
    t.unit_cell = chain_mor(0, cl0);
  } else {
    if (cl0 != 0)
      throw catkit_error(
          "closure_tuple: no oplax unit cell — the bottom of the chain is not closed");
    t.unit_cell = chain_mor(0, 0);
  }
  return t;
}

/// The identity monad on any monoidal base, with identity interchange
/// cells; lawful in both orientations.
inline MonoidalMonadTuple identity_tuple(const MonoidalStructure& s, Laxity v) {
  MonoidalMonadTuple t;
  t.structure = s;
  t.monad = identity_monad(s.base);
  t.variant = v;
  t.interchange = detail::interchange_shell(t.structure, t.monad, v);
  for (const auto& o : s.base_sq->objects())
    t.interchange.components[o] = s.base->id_of(s.tensor.ob(o));
  t.unit_cell = s.base->id_of(s.unit_object);
  return t;
}

/// The involution monad glued to the group tensor with interchange and
/// unit cell both s; lawful in both orientations because the group is
/// abelian and s is its own inverse.
inline MonoidalMonadTuple z2_twisted_tuple(Laxity v) {
  MonoidalMonadTuple t;
  t.structure = z2_monoidal();
  t.monad = z2_twisted_monad();
  t.variant = v;
  t.interchange = detail::interchange_shell(t.structure, t.monad, v);
  t.interchange.components[pair_id("*", "*")] = "s";
  t.unit_cell = "s";
  return t;
}

/// Componentwise product of two monoidal structures on the product of
/// their bases.
inline MonoidalStructure product_monoidal(const MonoidalStructure& a,
                                          const MonoidalStructure& b) {
  ProductCategory base = product_category(a.base, b.base);
  ProductCategory sq = product_category(base.cat, base.cat);
  MonoidalStructure s;
  s.base = base.cat;
  s.base_sq = sq.cat;
  s.tensor = Functor{sq.cat, base.cat, {}, {}};
  for (const auto& x1 : a.base->objects())
    for (const auto& y1 : b.base->objects())
      for (const auto& x2 : a.base->objects())
        for (const auto& y2 : b.base->objects())
          s.tensor.ob_map[pair_id(pair_id(x1, y1), pair_id(x2, y2))] =
              pair_id(a.ob(x1, x2), b.ob(y1, y2));
  for (const auto& f1 : a.base->morphisms())
    for (const auto& g1 : b.base->morphisms())
      for (const auto& f2 : a.base->morphisms())
        for (const auto& g2 : b.base->morphisms())
          s.tensor.mor_map[pair_id(pair_id(f1.id, g1.id), pair_id(f2.id, g2.id))] =
              pair_id(a.mor(f1.id, f2.id), b.mor(g1.id, g2.id));
  s.unit_object = pair_id(a.unit_object, b.unit_object);
  for (const auto& x1 : a.base->objects())
    for (const auto& y1 : b.base->objects())
      for (const auto& x2 : a.base->objects())
        for (const auto& y2 : b.base->objects())
          for (const auto& x3 : a.base->objects())
            for (const auto& y3 : b.base->objects())
              s.assoc[{pair_id(x1, y1), pair_id(x2, y2), pair_id(x3, y3)}] =
                  pair_id(a.assoc_at(x1, x2, x3), b.assoc_at(y1, y2, y3));
  for (const auto& x : a.base->objects())
    for (const auto& y : b.base->objects()) {
      s.left_unitor[pair_id(x, y)] = pair_id(*a.lunit_ptr(x), *b.lunit_ptr(y));
      s.right_unitor[pair_id(x, y)] = pair_id(*a.runit_ptr(x), *b.runit_ptr(y));
    }
  if (a.braid && b.braid) {
    Braid br;
    br.symmetric = a.braid->symmetric && b.braid->symmetric;
    for (const auto& x1 : a.base->objects())
      for (const auto& y1 : b.base->objects())
        for (const auto& x2 : a.base->objects())
          for (const auto& y2 : b.base->objects())
            br.components[{pair_id(x1, y1), pair_id(x2, y2)}] =
                pair_id(a.braid->components.at({x1, x2}), b.braid->components.at({y1, y2}));
    s.braid = std::move(br);
  }
  return s;
}

/// Componentwise product of two tuples of the same orientation.
inline MonoidalMonadTuple product_tuple(const MonoidalMonadTuple& a,
                                        const MonoidalMonadTuple& b) {
  if (a.variant != b.variant)
    throw catkit_error("product_tuple: orientations differ");
  MonoidalMonadTuple t;
  t.structure = product_monoidal(a.structure, b.structure);
  ProductMonad pm = product_monad(a.monad, b.monad);
  t.monad = pm.monad;
  t.variant = a.variant;
  t.interchange = detail::interchange_shell(t.structure, t.monad, t.variant);
  for (const auto& x1 : a.structure.base->objects())
    for (const auto& y1 : b.structure.base->objects())
      for (const auto& x2 : a.structure.base->objects())
        for (const auto& y2 : b.structure.base->objects())
          t.interchange.components[pair_id(pair_id(x1, y1), pair_id(x2, y2))] =
              pair_id(a.interchange.at(pair_id(x1, x2)), b.interchange.at(pair_id(y1, y2)));
  t.unit_cell = pair_id(a.unit_cell, b.unit_cell);
  return t;
}

}  // namespace catkit
