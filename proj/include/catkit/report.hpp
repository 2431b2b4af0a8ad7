#pragma once

#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace catkit {

/// One failed law instance, with the two morphisms that should have agreed.
struct Violation {
  std::string law;   // e.g. "associativity", "pentagon", "oplax-mult"
  std::string at;    // witnessing site, e.g. "h=1<=2 g=0<=1 f=id_0"
  std::string lhs;   // morphism id computed on the left (or "<undefined>")
  std::string rhs;   // morphism id computed on the right

  friend bool operator==(const Violation&, const Violation&) = default;
};

/// Outcome of a check. Structural problems (dangling ids, boundary
/// mismatches, missing table entries that make a law unevaluable) are kept
/// apart from genuine law violations; both make the report non-ok.
struct Report {
  std::vector<Violation> violations;
  std::vector<std::string> structural;

  bool ok() const { return violations.empty() && structural.empty(); }

  void violation(std::string law, std::string at, std::string lhs, std::string rhs) {
    violations.push_back({std::move(law), std::move(at), std::move(lhs), std::move(rhs)});
  }

  void error(std::string msg) { structural.push_back(std::move(msg)); }

  /// Merge a sub-check's report, prefixing each entry with a context label.
  void absorb(const Report& sub, const std::string& context) {
    for (const auto& v : sub.violations)
      violations.push_back({context + "/" + v.law, v.at, v.lhs, v.rhs});
    for (const auto& e : sub.structural)
      structural.push_back(context + ": " + e);
  }

  std::size_t count(const std::string& law_name) const {
    std::size_t n = 0;
    for (const auto& v : violations)
      if (v.law == law_name) ++n;
    return n;
  }
};

struct catkit_error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Thrown by constructions whose input fails a validated precondition.
struct precondition_error : catkit_error {
  Report report;
  precondition_error(const std::string& msg, Report r)
      : catkit_error(msg), report(std::move(r)) {}
};

/// Thrown when a construction's own output fails its re-verification.
struct internal_error : catkit_error {
  Report report;
  internal_error(const std::string& msg, Report r)
      : catkit_error(msg), report(std::move(r)) {}
};

}  // namespace catkit
