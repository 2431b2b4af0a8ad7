#pragma once

// The workspaces shipped under corpus/. The generator writes them; the test
// suite rebuilds them and insists the files on disk match byte for byte.

#include <map>
#include <string>

#include "catkit/builders.hpp"
#include "catkit/serialize.hpp"

namespace catkit_corpus {

inline std::map<std::string, catkit::Workspace> corpus_workspaces() {
  using namespace catkit;
  std::map<std::string, Workspace> out;

  // A three-element chain with its largest closure family: the closure
  // fixing {0, 2} admits both tuple orientations.
  {
    Workspace w;
    CatRef chain = chain_category(3);
    w.categories["chain3"] = chain;
    w.monads["closure"] = closure_monad(chain, {0, 2, 2});
    w.monoidals["max"] = max_monoidal(chain);
    w.tuples["closure.lax"] = closure_tuple(chain, {0, 2, 2}, Laxity::lax);
    w.tuples["closure.oplax"] = closure_tuple(chain, {0, 2, 2}, Laxity::oplax);
    out["chain3"] = std::move(w);
  }

  // The one-object group of order two with its twisted point: the smallest
  // example whose interchange cells are not identities. Carries the trivial
  // braiding, which is compatible with the twist.
  {
    Workspace w;
    w.categories["z2"] = z2_category();
    w.monads["twisted"] = z2_twisted_monad();
    MonoidalStructure s = z2_monoidal();
    s.braid = z2_braid(false);
    w.monoidals["mult"] = s;
    MonoidalMonadTuple lax = z2_twisted_tuple(Laxity::lax);
    lax.structure = w.monoidals["mult"];
    MonoidalMonadTuple oplax = z2_twisted_tuple(Laxity::oplax);
    oplax.structure = w.monoidals["mult"];
    w.tuples["twisted.lax"] = std::move(lax);
    w.tuples["twisted.oplax"] = std::move(oplax);
    out["z2"] = std::move(w);
  }

  // Two distinct closure tuples on the two-element chain, for the product
  // command.
  {
    Workspace w;
    CatRef chain = chain_category(2);
    w.categories["chain2"] = chain;
    w.monads["top"] = closure_monad(chain, {1, 1});
    w.monads["discrete"] = closure_monad(chain, {0, 1});
    w.monoidals["max"] = max_monoidal(chain);
    w.tuples["top"] = closure_tuple(chain, {1, 1}, Laxity::lax);
    w.tuples["discrete"] = closure_tuple(chain, {0, 1}, Laxity::lax);
    out["chain2_pair"] = std::move(w);
  }

  // A deliberately unlawful structure: the associator component of the
  // one-object group is replaced by the non-identity element, which breaks
  // the pentagon and triangle while keeping every table well-formed.
  {
    Workspace w;
    w.categories["z2"] = z2_category();
    MonoidalStructure s = z2_monoidal();
    s.assoc[{"*", "*", "*"}] = "s";
    w.monoidals["bent"] = s;
    out["broken_pentagon"] = std::move(w);
  }

  return out;
}

}  // namespace catkit_corpus
