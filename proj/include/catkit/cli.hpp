#pragma once

#include <fstream>
#include <optional>
#include <ostream>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "lift.hpp"
#include "serialize.hpp"

namespace catkit {

/// Everything a command invocation needs, independent of how arguments were
/// parsed; tests drive run_command with these directly.
struct Options {
  std::string command;           // validate, kleisli, em, check-interchange,
                                 // lift-kleisli, lift-em, lift-braided, product-check
  std::string input_path;
  std::string entity;            // optional name of the entity to act on
  std::string entity2;           // second name for product-check
  std::string output_path;       // where constructive commands save their result
  std::string report = "text";   // text | json
  bool oplax = false;            // orientation for tuples whose file omits it
  int max_objects = 64;          // refusal threshold for constructive commands
};

/// One named validation outcome; a command emits several.
struct CheckResult {
  std::string kind;
  std::string name;
  Report report;
};

namespace detail {

struct CommandOutcome {
  std::vector<CheckResult> checks;
  std::vector<std::string> notes;
  std::optional<Workspace> output;
  bool internal_failure = false;  // forces the structural exit code
};

inline int exit_code(const CommandOutcome& oc) {
  std::size_t errors = 0, violations = 0;
  for (const auto& c : oc.checks) {
    errors += c.report.structural.size();
    violations += c.report.violations.size();
  }
  if (oc.internal_failure || errors > 0) return 2;
  return violations > 0 ? 1 : 0;
}

inline void render_text(const Options& o, const CommandOutcome& oc, std::ostream& out) {
  out << "catkit " << o.command << " " << o.input_path << "\n";
  for (const auto& n : oc.notes) out << "note: " << n << "\n";
  std::size_t failed = 0, errors = 0, violations = 0;
  for (const auto& c : oc.checks) {
    bool ok = c.report.ok();
    if (!ok) ++failed;
    out << "check " << c.kind << " " << c.name << ": " << (ok ? "PASS" : "FAIL") << "\n";
    for (const auto& e : c.report.structural) {
      out << "  error: " << e << "\n";
      ++errors;
    }
    for (const auto& v : c.report.violations) {
      out << "  law=" << v.law << " at=" << v.at << "\n";
      out << "    lhs=" << v.lhs << "\n";
      out << "    rhs=" << v.rhs << "\n";
      ++violations;
    }
  }
  out << "summary: " << oc.checks.size() << " checks, " << failed << " failed, "
      << violations << " violations, " << errors << " errors\n";
}

inline void render_json(const Options& o, const CommandOutcome& oc, std::ostream& out) {
  json j;
  j["command"] = o.command;
  j["input"] = o.input_path;
  j["notes"] = oc.notes;
  json checks = json::array();
  std::size_t failed = 0, errors = 0, violations = 0;
  for (const auto& c : oc.checks) {
    json cj;
    cj["kind"] = c.kind;
    cj["name"] = c.name;
    cj["ok"] = c.report.ok();
    if (!c.report.ok()) ++failed;
    cj["errors"] = c.report.structural;
    errors += c.report.structural.size();
    json vs = json::array();
    for (const auto& v : c.report.violations)
      vs.push_back(json{{"law", v.law}, {"at", v.at}, {"lhs", v.lhs}, {"rhs", v.rhs}});
    violations += c.report.violations.size();
    cj["violations"] = std::move(vs);
    checks.push_back(std::move(cj));
  }
  j["checks"] = std::move(checks);
  j["summary"] = json{{"checks", oc.checks.size()},
                      {"failed", failed},
                      {"violations", violations},
                      {"errors", errors}};
  j["exit"] = exit_code(oc);
  out << j.dump(2) << "\n";
}

/// Picks a named entity, or the only one when no name was given.
template <class Map>
inline typename Map::const_iterator pick(const Map& m, const std::string& requested,
                                         const char* kind) {
  if (!requested.empty()) {
    auto it = m.find(requested);
    if (it == m.end())
      throw catkit_error(std::string("no ") + kind + " named '" + requested +
                         "' in the file");
    return it;
  }
  if (m.empty()) throw catkit_error(std::string("the file contains no ") + kind);
  if (m.size() > 1)
    throw catkit_error(std::string("the file contains several of kind ") + kind +
                       "; name the one to use");
  return m.begin();
}

inline std::string category_name_of(const Workspace& w, const CatRef& c) {
  for (const auto& [name, cat] : w.categories)
    if (same_cat(cat, c)) return name;
  return "base";
}

inline void guard_size(const FinCat& c, int max_objects, const char* what) {
  if (static_cast<int>(c.objects().size()) > max_objects)
    throw catkit_error(std::string("refusing to build the ") + what + ": the base has " +
                       std::to_string(c.objects().size()) + " objects (limit " +
                       std::to_string(max_objects) + "; raise it with --max-objects)");
}

/// The agreement check rendered as reportable results: one per formulation,
/// plus a structural failure when the two disagree (which would be a defect
/// of this library, not of the input).
inline void tuple_checks(const std::string& name, const MonoidalMonadTuple& t,
                         CommandOutcome& oc) {
  InterchangeVerdict v = check_interchange_equivalence(t);
  oc.checks.push_back({"tuple-as-monad-form", name, std::move(v.monad_side)});
  oc.checks.push_back({"tuple-as-monoidal-form", name, std::move(v.monoidal_side)});
  if (!v.agree) {
    Report r;
    r.error("the two formulations disagree on this input; please report this as a bug");
    oc.checks.push_back({"formulation-agreement", name, std::move(r)});
    oc.internal_failure = true;
  } else {
    oc.notes.push_back("tuple " + name + ": both formulations agree (" +
                       std::string(v.ok ? "lawful" : "unlawful") + ")");
  }
}

inline CommandOutcome cmd_validate(const Workspace& w) {
  CommandOutcome oc;
  for (const auto& [name, c] : w.categories)
    oc.checks.push_back({"category", name, check_category(*c)});
  for (const auto& [name, f] : w.functors)
    oc.checks.push_back({"functor", name, check_functor(f)});
  for (const auto& [name, t] : w.nattrans)
    oc.checks.push_back({"transformation", name, check_nat_trans(t)});
  for (const auto& [name, m] : w.monads)
    oc.checks.push_back({"monad", name, check_monad(m)});
  for (const auto& [name, s] : w.monoidals) {
    oc.checks.push_back({"monoidal", name, check_monoidal(s)});
    if (s.braid) oc.checks.push_back({"braiding", name, check_braiding(s)});
  }
  for (const auto& [name, t] : w.tuples) tuple_checks(name, t, oc);
  return oc;
}

inline void resolution_common_checks(const std::string& name, const Functor& free,
                                     const Functor& forget, const NatTrans& unit,
                                     const NatTrans& counit, const Functor& endo,
                                     CommandOutcome& oc) {
  oc.checks.push_back({"functor", name + ".free", check_functor(free)});
  oc.checks.push_back({"functor", name + ".forget", check_functor(forget)});
  oc.checks.push_back({"transformation", name + ".unit", check_nat_trans(unit)});
  oc.checks.push_back({"transformation", name + ".counit", check_nat_trans(counit)});
  oc.checks.push_back({"adjunction", name, verify_adjunction(free, forget, unit, counit)});
  Report round;
  if (!same_maps(compose_functors(forget, free), endo))
    round.error("the forgetful-after-free composite differs from the monad endofunctor");
  oc.checks.push_back({"resolution", name, std::move(round)});
}

inline CommandOutcome cmd_kleisli(const Workspace& w, const Options& o) {
  auto it = pick(w.monads, o.entity, "monad");
  guard_size(*it->second.base, o.max_objects, "resolution");
  KleisliResolution k = kleisli(it->second);
  CommandOutcome oc;
  oc.notes.push_back("the morphism category has " +
                     std::to_string(k.cat->objects().size()) + " objects and " +
                     std::to_string(k.cat->morphisms().size()) + " morphisms");
  oc.checks.push_back({"category", it->first + ".kleisli", check_category(*k.cat)});
  resolution_common_checks(it->first + ".kleisli", k.free, k.forget, k.unit, k.counit,
                           it->second.endo, oc);
  oc.checks.push_back(
      {"transformation", it->first + ".kleisli.kappa", check_nat_trans(k.kappa)});
  Workspace out;
  out.categories[category_name_of(w, it->second.base)] = it->second.base;
  out.categories[it->first + ".kleisli"] = k.cat;
  out.functors[it->first + ".free"] = k.free;
  out.functors[it->first + ".forget"] = k.forget;
  out.nattrans[it->first + ".unit"] = k.unit;
  out.nattrans[it->first + ".counit"] = k.counit;
  out.monads[it->first] = it->second;
  oc.output = std::move(out);
  return oc;
}

inline CommandOutcome cmd_em(const Workspace& w, const Options& o) {
  auto it = pick(w.monads, o.entity, "monad");
  guard_size(*it->second.base, o.max_objects, "resolution");
  EMResolution e = em(it->second);
  CommandOutcome oc;
  oc.notes.push_back("the algebra category has " + std::to_string(e.algebras.size()) +
                     " algebras and " + std::to_string(e.cat->morphisms().size()) +
                     " morphisms");
  oc.checks.push_back({"category", it->first + ".em", check_category(*e.cat)});
  resolution_common_checks(it->first + ".em", e.free, e.forget, e.unit, e.counit,
                           it->second.endo, oc);
  Workspace out;
  out.categories[category_name_of(w, it->second.base)] = it->second.base;
  out.categories[it->first + ".em"] = e.cat;
  out.functors[it->first + ".free"] = e.free;
  out.functors[it->first + ".forget"] = e.forget;
  out.nattrans[it->first + ".unit"] = e.unit;
  out.nattrans[it->first + ".counit"] = e.counit;
  out.monads[it->first] = it->second;
  oc.output = std::move(out);
  return oc;
}

inline CommandOutcome cmd_check_interchange(const Workspace& w, const Options& o) {
  auto it = pick(w.tuples, o.entity, "tuple");
  CommandOutcome oc;
  oc.notes.push_back("tuple " + it->first + " is presented in the " +
                     laxity_name(it->second.variant) + " orientation");
  tuple_checks(it->first, it->second, oc);
  return oc;
}

inline CommandOutcome cmd_lift_kleisli(const Workspace& w, const Options& o) {
  auto it = pick(w.tuples, o.entity, "tuple");
  guard_size(*it->second.structure.base, o.max_objects, "lift");
  LiftedKleisli l = lift_kleisli(it->second);
  CommandOutcome oc;
  oc.notes.push_back("lifted tensor lives on " +
                     std::to_string(l.structure.base->objects().size()) + " objects");
  oc.checks.push_back({"lift", it->first + ".kleisli", l.verification});
  Workspace out;
  out.categories[category_name_of(w, it->second.structure.base)] =
      it->second.structure.base;
  out.categories[it->first + ".kleisli"] = l.resolution.cat;
  out.functors[it->first + ".free"] = l.resolution.free;
  out.functors[it->first + ".forget"] = l.resolution.forget;
  out.monoidals[it->first + ".kleisli"] = l.structure;
  oc.output = std::move(out);
  return oc;
}

inline CommandOutcome cmd_lift_em(const Workspace& w, const Options& o) {
  auto it = pick(w.tuples, o.entity, "tuple");
  guard_size(*it->second.structure.base, o.max_objects, "lift");
  LiftedEM l = lift_em(it->second);
  CommandOutcome oc;
  oc.notes.push_back("lifted tensor lives on " +
                     std::to_string(l.structure.base->objects().size()) + " algebras");
  oc.checks.push_back({"lift", it->first + ".em", l.verification});
  Workspace out;
  out.categories[category_name_of(w, it->second.structure.base)] =
      it->second.structure.base;
  out.categories[it->first + ".em"] = l.resolution.cat;
  out.functors[it->first + ".free"] = l.resolution.free;
  out.functors[it->first + ".forget"] = l.resolution.forget;
  out.monoidals[it->first + ".em"] = l.structure;
  oc.output = std::move(out);
  return oc;
}

inline CommandOutcome cmd_lift_braided(const Workspace& w, const Options& o) {
  auto it = pick(w.tuples, o.entity, "tuple");
  guard_size(*it->second.structure.base, o.max_objects, "lift");
  CommandOutcome oc;
  Workspace out;
  out.categories[category_name_of(w, it->second.structure.base)] =
      it->second.structure.base;
  if (it->second.variant == Laxity::lax) {
    LiftedKleisli l = lift_kleisli_braided(it->second);
    oc.notes.push_back("lax orientation: lifting onto the morphism category");
    oc.checks.push_back({"braided-lift", it->first + ".kleisli", l.verification});
    out.categories[it->first + ".kleisli"] = l.resolution.cat;
    out.monoidals[it->first + ".kleisli"] = l.structure;
  } else {
    LiftedEM l = lift_em_braided(it->second);
    oc.notes.push_back("oplax orientation: lifting onto the algebra category");
    oc.checks.push_back({"braided-lift", it->first + ".em", l.verification});
    out.categories[it->first + ".em"] = l.resolution.cat;
    out.monoidals[it->first + ".em"] = l.structure;
  }
  oc.output = std::move(out);
  return oc;
}

inline CommandOutcome cmd_product_check(const Workspace& w, const Options& o) {
  const MonoidalMonadTuple* ta = nullptr;
  const MonoidalMonadTuple* tb = nullptr;
  std::string na, nb;
  if (!o.entity.empty()) {
    auto a = pick(w.tuples, o.entity, "tuple");
    auto b = pick(w.tuples, o.entity2.empty() ? o.entity : o.entity2, "tuple");
    ta = &a->second;
    tb = &b->second;
    na = a->first;
    nb = b->first;
  } else if (w.tuples.size() == 1) {
    ta = tb = &w.tuples.begin()->second;
    na = nb = w.tuples.begin()->first;
  } else if (w.tuples.size() == 2) {
    auto a = w.tuples.begin();
    auto b = std::next(a);
    ta = &a->second;
    tb = &b->second;
    na = a->first;
    nb = b->first;
  } else {
    throw catkit_error("name one or two tuples for the product check");
  }
  guard_size(*ta->structure.base, o.max_objects, "product");
  guard_size(*tb->structure.base, o.max_objects, "product");

  CommandOutcome oc;
  tuple_checks(na, *ta, oc);
  if (ta != tb) tuple_checks(nb, *tb, oc);
  bool inputs_ok = true;
  for (const auto& c : oc.checks) inputs_ok = inputs_ok && c.report.ok();
  if (!inputs_ok || oc.internal_failure) {
    oc.notes.push_back("skipping the product construction: an input fails validation");
    return oc;
  }

  std::string pname = na + "x" + nb;
  MonoidalMonadTuple pt = product_tuple(*ta, *tb);
  tuple_checks(pname, pt, oc);
  KleisliComparison cmp = kleisli_product_comparison(ta->monad, tb->monad);
  oc.checks.push_back({"comparison", pname, cmp.verification});
  oc.notes.push_back("the product morphism category has " +
                     std::to_string(cmp.of_product.cat->morphisms().size()) +
                     " morphisms");

  Workspace out;
  out.categories[pname + ".base"] = pt.structure.base;
  out.monads[pname] = pt.monad;
  out.monoidals[pname] = pt.structure;
  out.tuples[pname] = pt;
  oc.output = std::move(out);
  return oc;
}

}  // namespace detail

/// Runs one command against the given streams and returns the process exit
/// code: 0 when everything checked passes, 1 when only law violations were
/// found, 2 on structural errors, unreadable input, or usage mistakes.
inline int run_command(const Options& o, std::ostream& out, std::ostream& err) {
  try {
    std::ifstream in(o.input_path);
    if (!in) {
      err << "error: cannot open " << o.input_path << "\n";
      return 2;
    }
    std::stringstream buf;
    buf << in.rdbuf();
    std::optional<Laxity> requested;
    if (o.oplax) requested = Laxity::oplax;
    Workspace w = load_workspace(buf.str(), requested);

    detail::CommandOutcome oc;
    if (o.command == "validate")
      oc = detail::cmd_validate(w);
    else if (o.command == "kleisli")
      oc = detail::cmd_kleisli(w, o);
    else if (o.command == "em")
      oc = detail::cmd_em(w, o);
    else if (o.command == "check-interchange")
      oc = detail::cmd_check_interchange(w, o);
    else if (o.command == "lift-kleisli")
      oc = detail::cmd_lift_kleisli(w, o);
    else if (o.command == "lift-em")
      oc = detail::cmd_lift_em(w, o);
    else if (o.command == "lift-braided")
      oc = detail::cmd_lift_braided(w, o);
    else if (o.command == "product-check")
      oc = detail::cmd_product_check(w, o);
    else {
      err << "error: unknown command '" << o.command << "'\n";
      return 2;
    }

    if (!o.output_path.empty()) {
      if (!oc.output) {
        err << "error: the " << o.command << " command produces no output file\n";
        return 2;
      }
      std::ofstream f(o.output_path, std::ios::binary);
      if (!f) {
        err << "error: cannot write " << o.output_path << "\n";
        return 2;
      }
      f << save_workspace(*oc.output);
      oc.notes.push_back("wrote " + o.output_path);
    }

    if (o.report == "json")
      detail::render_json(o, oc, out);
    else
      detail::render_text(o, oc, out);
    return detail::exit_code(oc);
  } catch (const internal_error& e) {
    detail::CommandOutcome oc;
    oc.checks.push_back({"internal", o.command, e.report});
    oc.internal_failure = true;
    err << "internal error: " << e.what() << "\n";
    if (o.report == "json")
      detail::render_json(o, oc, out);
    else
      detail::render_text(o, oc, out);
    return 2;
  } catch (const precondition_error& e) {
    detail::CommandOutcome oc;
    oc.checks.push_back({"precondition", o.command, e.report});
    err << "error: " << e.what() << "\n";
    if (o.report == "json")
      detail::render_json(o, oc, out);
    else
      detail::render_text(o, oc, out);
    int code = detail::exit_code(oc);
    return code == 0 ? 2 : code;
  } catch (const catkit_error& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  }
}

}  // namespace catkit
