#pragma once

// Exhaustive verification suites at bounded weight or depth. Each suite is
// a deterministic function of its bounds returning a structured report.

#include <deque>
#include <optional>
#include <string>
#include <vector>

#include "mvpoly/crystal.hpp"
#include "mvpoly/transition.hpp"

namespace mvpoly {

struct Counterexample {
  RootVector weight;
  std::string element;
  std::string detail;
};

// Smaller weight height first, then smaller alpha0 coefficient, then the
// element's canonical text.
bool precedes(const Counterexample& x, const Counterexample& y);

struct CheckResult {
  std::string name;
  // Informational checks document a known failure; they never fail a report.
  bool informational = false;
  std::size_t checked = 0;
  std::size_t failed = 0;
  std::optional<Counterexample> first;  // minimal counterexample

  void pass() { ++checked; }
  void fail(Counterexample c);
  // pass() if ok, else fail(make()).
  template <class Make>
  void expect(bool ok, Make&& make) {
    if (ok) {
      pass();
    } else {
      fail(make());
    }
  }
  bool passed() const { return failed == 0; }
};

struct Report {
  std::string suite;
  AlgebraKind kind = AlgebraKind::Sl2Hat;
  std::string bounds;
  std::deque<CheckResult> checks;  // stable references for check()
  std::vector<std::string> notes;

  // Find-or-create by name, keeping insertion order.
  CheckResult& check(const std::string& name, bool informational = false);
  const CheckResult* find(const std::string& name) const;
  bool passed() const;
};

std::string to_text(const Report& r);

// Every datum of weight <= box: exactly one MV completion on each side
// (generate-and-test), the completed pair and its side swap pass is_mv,
// and the boundary is convex. Notes list the datum count per weight.
Report check_uniqueness(AlgebraKind kind, const RootVector& box);

// Pruned search against generate-and-test on both sides; the two
// transition maps are mutually inverse; the imaginary fast path agrees.
Report check_solver_equivalence(AlgebraKind kind, const RootVector& box);

// (W), (C1)-(C4), (S1)-(S4) with operator-built Saito reflections, and (I)
// for purely imaginary left data with |lambda| <= max_lambda, on
// crystal_graph(kind, depth). Also re-checks is_mv on every node.
Report check_axioms(AlgebraKind kind, int depth, Int max_lambda = 6);

// (I) for every partition with 0 < |lambda| <= max_size, against the
// generate-and-test completion.
Report check_trapezoids(AlgebraKind kind, Int max_size);

// star(b) has vertex multiset { wt(b) - v } and swapped decorations.
Report check_star_negation(AlgebraKind kind, int depth);

// saito(i, b) = f_i*^max e_i^N b for phi_i(b) = 0, N >= eps_i*(b), and
// saito_star(i, b) = f_i^max e_i*^N b for phi_i*(b) = 0, N >= eps_i(b),
// for N = threshold .. threshold + slack. The opposite pairing is run as
// an informational check.
Report check_saito_formulas(AlgebraKind kind, int depth, int slack = 2);

// Unique lowest node, e/f inverse pairs, weight additivity, operational
// phi, star and tau relations, and the local e_i / e_i* structure.
Report check_crystal_axioms(AlgebraKind kind, int depth);

}  // namespace mvpoly
