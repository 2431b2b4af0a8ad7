// Two readings of a monoidal-monad tuple — as monoidal structure in the
// world of monads, and as monad structure in the world of monoidal
// categories — must accept and reject exactly the same tuples.  These
// tests exercise that agreement on lawful examples, on hand-corrupted
// examples with known failure modes, and on exhaustive single-site
// corruption sweeps.

#include <catch2/catch_amalgamated.hpp>

#include <algorithm>
#include <set>
#include <string>
#include <vector>

#include "catkit/catkit.hpp"
#include "corruption.hpp"

using namespace catkit;

namespace {

// Every lawful tuple the builders can produce on small chains, plus the
// group examples and a product.  Each entry carries a label for failure
// messages.
std::vector<std::pair<std::string, MonoidalMonadTuple>> lawful_tuples() {
  std::vector<std::pair<std::string, MonoidalMonadTuple>> out;
  for (int n = 2; n <= 4; ++n) {
    auto chain = chain_category(n);
    for (const auto& cl : all_closures(n)) {
      std::string tag = "chain" + std::to_string(n) + " cl=";
      for (int v : cl) tag += std::to_string(v);
      out.emplace_back(tag + " lax", closure_tuple(chain, cl, Laxity::lax));
      if (cl[0] == 0)
        out.emplace_back(tag + " oplax", closure_tuple(chain, cl, Laxity::oplax));
    }
    out.emplace_back("chain" + std::to_string(n) + " identity lax",
                     identity_tuple(max_monoidal(chain), Laxity::lax));
    out.emplace_back("chain" + std::to_string(n) + " identity oplax",
                     identity_tuple(max_monoidal(chain), Laxity::oplax));
  }
  out.emplace_back("z2 identity lax", identity_tuple(z2_monoidal(), Laxity::lax));
  out.emplace_back("z2 twisted lax", z2_twisted_tuple(Laxity::lax));
  out.emplace_back("z2 twisted oplax", z2_twisted_tuple(Laxity::oplax));
  auto c2 = chain_category(2);
  out.emplace_back("chain2{11} x chain2{01} lax",
                   product_tuple(closure_tuple(c2, {1, 1}, Laxity::lax),
                                 closure_tuple(c2, {0, 1}, Laxity::lax)));
  out.emplace_back("chain2{01} x chain2{01} oplax",
                   product_tuple(closure_tuple(c2, {0, 1}, Laxity::oplax),
                                 closure_tuple(c2, {0, 1}, Laxity::oplax)));
  return out;
}

}  // namespace

TEST_CASE("the two validators accept every lawful tuple and agree") {
  for (const auto& [tag, t] : lawful_tuples()) {
    INFO(tag);
    InterchangeVerdict v = check_interchange_equivalence(t);
    CHECK(v.agree);
    CHECK(v.ok);
    CHECK(v.monad_side.ok());
    CHECK(v.monoidal_side.ok());
    CHECK(v.monad_side.violations.empty());
    CHECK(v.monoidal_side.violations.empty());
    CHECK(v.monad_side.structural.empty());
    CHECK(v.monoidal_side.structural.empty());
  }
}

TEST_CASE("an oplax closure tuple requires the bottom element to be closed") {
  auto c2 = chain_category(2);
  CHECK_NOTHROW(closure_tuple(c2, {0, 1}, Laxity::oplax));
  CHECK_THROWS_AS(closure_tuple(c2, {1, 1}, Laxity::oplax), catkit_error);
  // The lax orientation has no such constraint: the unit cell runs the
  // other way and always exists.
  CHECK_NOTHROW(closure_tuple(c2, {1, 1}, Laxity::lax));
}

TEST_CASE("breaking the group interchange cell fails exactly the laws that consume it") {
  // In the involution example every structure map is a group element, so
  // the failure set is exactly predictable.  Replacing the interchange
  // cell s by e flips the two laws comparing it against the twisted unit
  // and multiplication, plus the two unitor legs (whose composite cells
  // mix the interchange with the unit cell: e after s is s, no longer the
  // identity).  The associator leg sees the interchange the same number
  // of times on both sides and stays silent.  A lax tuple makes the
  // tensor an oplax morphism of monads, so the law names carry the
  // opposite polarity.
  for (Laxity v : {Laxity::lax, Laxity::oplax}) {
    MonoidalMonadTuple t = z2_twisted_tuple(v);
    t.interchange.components[pair_id("*", "*")] = "e";
    InterchangeVerdict verdict = check_interchange_equivalence(t);
    INFO((v == Laxity::lax ? "lax" : "oplax"));
    CHECK(verdict.agree);
    CHECK_FALSE(verdict.ok);
    CHECK_FALSE(verdict.monad_side.ok());
    CHECK_FALSE(verdict.monoidal_side.ok());
    const std::string pol = v == Laxity::lax ? "oplax" : "lax";
    CHECK(verdict.monad_side.count("tensor-cell/" + pol + "-unit") == 1);
    CHECK(verdict.monad_side.count("tensor-cell/" + pol + "-mult") == 1);
    CHECK(verdict.monad_side.count("left-unit-cell/" + pol + "-transformation") == 1);
    CHECK(verdict.monad_side.count("right-unit-cell/" + pol + "-transformation") == 1);
    CHECK(verdict.monad_side.violations.size() == 4);
    CHECK(verdict.monad_side.structural.empty());
  }
}

TEST_CASE("breaking the group unit cell fails exactly the laws that consume it") {
  for (Laxity v : {Laxity::lax, Laxity::oplax}) {
    MonoidalMonadTuple t = z2_twisted_tuple(v);
    t.unit_cell = "e";
    InterchangeVerdict verdict = check_interchange_equivalence(t);
    INFO((v == Laxity::lax ? "lax" : "oplax"));
    CHECK(verdict.agree);
    CHECK_FALSE(verdict.monad_side.ok());
    CHECK_FALSE(verdict.monoidal_side.ok());
    const std::string pol = v == Laxity::lax ? "oplax" : "lax";
    CHECK(verdict.monad_side.count("unit-cell/" + pol + "-unit") == 1);
    CHECK(verdict.monad_side.count("unit-cell/" + pol + "-mult") == 1);
    CHECK(verdict.monad_side.count("left-unit-cell/" + pol + "-transformation") == 1);
    CHECK(verdict.monad_side.count("right-unit-cell/" + pol + "-transformation") == 1);
    CHECK(verdict.monad_side.violations.size() == 4);
    CHECK(verdict.monad_side.structural.empty());
  }
}

TEST_CASE("the interchange boundary swaps ends between the two orientations") {
  auto chain = chain_category(3);
  MonoidalStructure s = max_monoidal(chain);
  Monad m = closure_monad(chain, {0, 2, 2});
  auto [lax_src, lax_tgt] = interchange_boundary(s, m, Laxity::lax);
  auto [op_src, op_tgt] = interchange_boundary(s, m, Laxity::oplax);
  CHECK(lax_src.ob_map == op_tgt.ob_map);
  CHECK(lax_src.mor_map == op_tgt.mor_map);
  CHECK(lax_tgt.ob_map == op_src.ob_map);
  CHECK(lax_tgt.mor_map == op_src.mor_map);
  // The lax orientation runs from the tensor-of-images side: its source
  // sends a pair (a,b) to cl(a) x cl(b) read through the tensor.
  CHECK(lax_src.ob(pair_id("0", "1")) == "2");  // max(cl 0, cl 1) = max(2,2)
  CHECK(lax_tgt.ob(pair_id("0", "1")) == "2");  // cl(max(0,1)) = cl(1)
  CHECK(lax_src.ob(pair_id("0", "0")) == "0");  // max(cl 0, cl 0) = max(0,0)
  CHECK(lax_tgt.ob(pair_id("0", "0")) == "0");  // cl(max(0,0)) = cl(0) = 0
}

TEST_CASE("rebuilding a lawful tuple from its raw data preserves lawfulness") {
  auto chain = chain_category(3);
  for (const auto& cl : all_closures(3)) {
    MonoidalMonadTuple t = closure_tuple(chain, cl, Laxity::lax);
    MonoidalMonadTuple r = corruption::rebuild(t, t.structure.base);
    InterchangeVerdict v = check_interchange_equivalence(r);
    CHECK(v.ok);
  }
}

TEST_CASE("single-site corruption sweep: the validators agree on every mutant") {
  auto chain = chain_category(3);
  for (const auto& cl : all_closures(3)) {
    MonoidalMonadTuple t = closure_tuple(chain, cl, Laxity::lax);
    auto mutants = corruption::corrupt_tuple(t, 1);
    std::string tag = "cl=";
    for (int v : cl) tag += std::to_string(v);
    INFO(tag << ": " << mutants.size() << " corruption sites");
    CHECK(mutants.size() >= 100);
    std::size_t rejected = 0;
    for (const auto& m : mutants) {
      InterchangeVerdict v = check_interchange_equivalence(m.tuple);
      INFO("site " << m.site);
      CHECK(v.agree);
      if (!v.monad_side.ok()) ++rejected;
    }
    // A sweep that rejects nothing would mean the mutation engine is not
    // actually changing anything the validators look at.
    CHECK(rejected >= 1);
  }
}

TEST_CASE("the corruption site schedule is deterministic") {
  auto chain = chain_category(3);
  MonoidalMonadTuple t = closure_tuple(chain, {0, 1, 2}, Laxity::lax);
  auto first = corruption::site_labels(corruption::corrupt_tuple(t, 1));
  auto second = corruption::site_labels(corruption::corrupt_tuple(t, 1));
  REQUIRE(first == second);
  CHECK(first.size() >= 100);
  // Labels name their sites uniquely so a failure report can be traced
  // back to the exact mutation.
  std::set<std::string> unique(first.begin(), first.end());
  CHECK(unique.size() == first.size());
}

TEST_CASE("the verdict is the conjunction of agreement and acceptance") {
  MonoidalMonadTuple good = z2_twisted_tuple(Laxity::lax);
  InterchangeVerdict g = check_interchange_equivalence(good);
  CHECK(g.ok == (g.agree && g.monad_side.ok()));

  MonoidalMonadTuple bad = z2_twisted_tuple(Laxity::lax);
  bad.unit_cell = "e";
  InterchangeVerdict b = check_interchange_equivalence(bad);
  CHECK(b.agree);
  CHECK_FALSE(b.ok);
}
