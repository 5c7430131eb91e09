#include "mvpoly/verify.hpp"

#include <algorithm>
#include <set>
#include <sstream>

#include "mvpoly/errors.hpp"

namespace mvpoly {

bool precedes(const Counterexample& x, const Counterexample& y) {
  if (x.weight.height() != y.weight.height()) {
    return x.weight.height() < y.weight.height();
  }
  if (x.weight.a != y.weight.a) return x.weight.a < y.weight.a;
  if (x.element != y.element) return x.element < y.element;
  return x.detail < y.detail;
}

void CheckResult::fail(Counterexample c) {
  ++checked;
  ++failed;
  if (!first || precedes(c, *first)) first = std::move(c);
}

CheckResult& Report::check(const std::string& name, bool informational) {
  for (auto& c : checks) {
    if (c.name == name) return c;
  }
  checks.push_back(CheckResult{name, informational, 0, 0, std::nullopt});
  return checks.back();
}

const CheckResult* Report::find(const std::string& name) const {
  for (const auto& c : checks) {
    if (c.name == name) return &c;
  }
  return nullptr;
}

bool Report::passed() const {
  return std::all_of(checks.begin(), checks.end(), [](const CheckResult& c) {
    return c.informational || c.passed();
  });
}

std::string to_text(const Report& r) {
  std::ostringstream os;
  os << r.suite << " [" << to_string(r.kind) << ", " << r.bounds << "]: "
     << (r.passed() ? "PASS" : "FAIL") << "\n";
  for (const auto& c : r.checks) {
    os << "  " << (c.passed() ? "ok  " : (c.informational ? "info" : "FAIL"))
       << " " << c.name << ": " << c.checked - c.failed << " of " << c.checked << " hold";
    if (c.first) {
      os << "\n       first counterexample at weight " << c.first->weight
         << ": " << c.first->element;
      if (!c.first->detail.empty()) os << " (" << c.first->detail << ")";
    }
    os << "\n";
  }
  for (const auto& n : r.notes) os << "  note: " << n << "\n";
  return os.str();
}

namespace {

Counterexample at(const CrystalElement& b, std::string detail = {}) {
  return {wt(b), to_string(b), std::move(detail)};
}

Counterexample at(const LusztigDatum& d, std::string detail = {}) {
  return {weight(d), to_string(d), std::move(detail)};
}

std::string bounds_text(const RootVector& box) {
  return "weights <= " + to_string(box);
}

std::string depth_text(int depth) { return "depth " + std::to_string(depth); }

template <class Fn>
void for_each_datum(AlgebraKind kind, const RootVector& box, Fn&& fn) {
  for (Int a = 0; a <= box.a; ++a) {
    for (Int b = 0; b <= box.b; ++b) {
      for (const LusztigDatum& d : enumerate_data(kind, {a, b})) fn(d);
    }
  }
}

// Integer square root of a perfect square.
Int exact_sqrt(Int n) {
  Int r = 0;
  while ((r + 1) * (r + 1) <= n) ++r;
  if (r * r != n) throw InvariantBreach("length ratio is not integral");
  return r;
}

// Axiom (I) right datum, computed from the bilinear form directly.
LusztigDatum expected_trapezoid(AlgebraKind kind, const Partition& lambda) {
  const Int ratio = exact_sqrt(symmetrized_form(kind, kAlpha0, kAlpha0) /
                               symmetrized_form(kind, kAlpha1, kAlpha1));
  const Int l1 = lambda.parts().front();
  std::vector<Int> rest(lambda.parts().begin() + 1, lambda.parts().end());
  return LusztigDatum(kind,
                      {{RootLabel{Family::Low, 1}, ratio * l1},
                       {RootLabel{Family::High, 1}, l1}},
                      Partition(std::move(rest)));
}

CrystalElement raise_times(int i, bool starred, CrystalElement b, Int n) {
  for (Int j = 0; j < n; ++j) b = starred ? e_star(i, b) : e(i, b);
  return b;
}

CrystalElement lower_fully(int i, bool starred, CrystalElement b) {
  for (;;) {
    auto next = starred ? f_star(i, b) : f(i, b);
    if (!next) return b;
    b = std::move(*next);
  }
}

Int lowering_steps(int i, bool starred, CrystalElement b) {
  Int n = 0;
  for (;;) {
    auto next = starred ? f_star(i, b) : f(i, b);
    if (!next) return n;
    b = std::move(*next);
    ++n;
  }
}

RootVector op_root(Op op) {
  return op == Op::E0 || op == Op::E0Star ? kAlpha0 : kAlpha1;
}

}  // namespace

Report check_uniqueness(AlgebraKind kind, const RootVector& box) {
  Report r{"uniqueness", kind, bounds_text(box), {}, {}};
  CheckResult& one_right = r.check("exactly one right completion");
  CheckResult& one_left = r.check("exactly one left completion");
  CheckResult& swapped = r.check("side-swapped completion is MV");
  CheckResult& convex = r.check("completed polytope is convex");
  std::size_t total = 0;
  for (Int a = 0; a <= box.a; ++a) {
    for (Int b = 0; b <= box.b; ++b) {
      const auto data = enumerate_data(kind, {a, b});
      total += data.size();
      r.notes.push_back("weight " + to_string(RootVector{a, b}) + ": " +
                        std::to_string(data.size()) + " data");
      for (const LusztigDatum& d : data) {
        const auto rights = right_partners(d, Strategy::GenerateAndTest);
        const auto lefts = left_partners(d, Strategy::GenerateAndTest);
        one_right.expect(rights.size() == 1, [&] {
          return at(d, std::to_string(rights.size()) + " right completions");
        });
        one_left.expect(lefts.size() == 1, [&] {
          return at(d, std::to_string(lefts.size()) + " left completions");
        });
        if (rights.size() != 1) continue;
        const DecoratedPolytope p(d, rights.front());
        swapped.expect(is_mv(p.swapped()).passed(), [&] { return at(p); });
        convex.expect(is_convex(boundary(vertices(p))),
                      [&] { return at(p); });
      }
    }
  }
  r.notes.push_back("total data: " + std::to_string(total));
  return r;
}

Report check_solver_equivalence(AlgebraKind kind, const RootVector& box) {
  Report r{"solver-equivalence", kind, bounds_text(box), {}, {}};
  CheckResult& right_eq = r.check("pruned = generate-and-test (right)");
  CheckResult& left_eq = r.check("pruned = generate-and-test (left)");
  CheckResult& inverse = r.check("transition maps are mutually inverse");
  CheckResult& weights = r.check("transition preserves weight");
  CheckResult& fast = r.check("imaginary fast path = search");
  for_each_datum(kind, box, [&](const LusztigDatum& d) {
    const auto gr = right_partners(d, Strategy::GenerateAndTest);
    const auto gl = left_partners(d, Strategy::GenerateAndTest);
    right_eq.expect(right_partners(d, Strategy::PrunedSearch) == gr,
                    [&] { return at(d); });
    left_eq.expect(left_partners(d, Strategy::PrunedSearch) == gl,
                   [&] { return at(d); });
    const LusztigDatum to_r = transition_l_to_r(d);
    const LusztigDatum to_l = transition_r_to_l(d);
    inverse.expect(transition_r_to_l(to_r) == d && transition_l_to_r(to_l) == d,
                   [&] { return at(d); });
    weights.expect(weight(to_r) == weight(d) && weight(to_l) == weight(d),
                   [&] { return at(d); });
    if (is_purely_imaginary(d) && !d.is_zero() && gr.size() == 1 &&
        gl.size() == 1) {
      fast.expect(to_r == gr.front() && to_l == gl.front(),
                  [&] { return at(d); });
    }
  });
  return r;
}

Report check_axioms(AlgebraKind kind, int depth, Int max_lambda) {
  Report r{"axioms", kind, depth_text(depth), {}, {}};
  const CrystalGraph g = crystal_graph(kind, depth);
  CheckResult& mv = r.check("every node is MV");
  CheckResult& w = r.check("(W) weight");
  CheckResult* c[4] = {&r.check("(C1) e0 on right alpha0"),
                       &r.check("(C2) e1 on left alpha1"),
                       &r.check("(C3) e0* on left alpha0"),
                       &r.check("(C4) e1* on right alpha1")};
  CheckResult* s[4] = {&r.check("(S1)"), &r.check("(S2)"), &r.check("(S3)"),
                       &r.check("(S4)")};
  CheckResult& s_wt = r.check("Saito reflections act on weight by s_i");
  CheckResult& imag = r.check("(I) purely imaginary left");

  // Weights accumulated along the breadth-first tree.
  std::vector<std::optional<RootVector>> path(g.nodes.size());
  path[0] = RootVector{};
  for (const auto& edge : g.edges) {
    const RootVector next = *path[edge.from] + op_root(edge.op);
    if (!path[edge.to]) path[edge.to] = next;
    w.expect(*path[edge.to] == next, [&] {
      return at(g.nodes[edge.to], "path weights disagree");
    });
  }

  for (std::size_t n = 0; n < g.nodes.size(); ++n) {
    const CrystalElement& b = g.nodes[n];
    mv.expect(is_mv(b).passed(), [&] { return at(b); });
    w.expect(*path[n] == wt(b), [&] {
      return at(b, "path weight " + to_string(*path[n]));
    });

    for (int i = 0; i < 2; ++i) {
      const RootVector si = simple_reflection(kind, i, wt(b));
      if (phi(i, b) == 0) {
        const CrystalElement sigma = lower_fully(
            i, true, raise_times(i, false, b, std::max<Int>(0, eps_star(i, b))));
        const bool ok = i == 0 ? sigma.left() == twist_s(b.right(), 0)
                               : sigma.right() == twist_s(b.left(), 1);
        s[i]->expect(ok, [&] { return at(b, "sigma = " + to_string(sigma)); });
        s_wt.expect(wt(sigma) == si, [&] { return at(b); });
      }
      if (phi_star(i, b) == 0) {
        const CrystalElement sigma = lower_fully(
            i, false, raise_times(i, true, b, std::max<Int>(0, eps(i, b))));
        const bool ok = i == 0 ? sigma.right() == twist_s(b.left(), 0)
                               : sigma.left() == twist_s(b.right(), 1);
        s[2 + i]->expect(ok,
                         [&] { return at(b, "sigma* = " + to_string(sigma)); });
        s_wt.expect(wt(sigma) == si, [&] { return at(b); });
      }
    }

    const Partition& lambda = b.left().delta_part();
    if (is_purely_imaginary(b.left()) && !lambda.empty() &&
        lambda.size() <= max_lambda) {
      const LusztigDatum expected = expected_trapezoid(kind, lambda);
      const auto oracle = right_partners(b.left(), Strategy::GenerateAndTest);
      imag.expect(b.right() == expected && oracle.size() == 1 &&
                      oracle.front() == expected,
                  [&] { return at(b, "expected right " + to_string(expected)); });
    }
  }

  for (const auto& edge : g.edges) {
    const CrystalElement& b = g.nodes[edge.from];
    const CrystalElement& t = g.nodes[edge.to];
    const int k = static_cast<int>(edge.op);
    const int i = edge.op == Op::E0 || edge.op == Op::E0Star ? 0 : 1;
    const Side side =
        edge.op == Op::E0 || edge.op == Op::E1Star ? Side::Right : Side::Left;
    const LusztigDatum& before = b.side(side);
    c[k]->expect(t.side(side) ==
                     before.with_mult(simple_label(i), before.simple_mult(i) + 1),
                 [&] { return at(b, "after: " + to_string(t)); });
  }
  r.notes.push_back("nodes: " + std::to_string(g.nodes.size()));
  return r;
}

Report check_trapezoids(AlgebraKind kind, Int max_size) {
  Report r{"trapezoids", kind, "|lambda| <= " + std::to_string(max_size), {}, {}};
  CheckResult& solver = r.check("complete_from_left = trapezoid");
  CheckResult& oracle = r.check("generate-and-test = trapezoid");
  for (Int n = 1; n <= max_size; ++n) {
    for (const Partition& lambda : partitions_of(n)) {
      const LusztigDatum cl(kind, {}, lambda);
      const LusztigDatum expected = expected_trapezoid(kind, lambda);
      solver.expect(complete_from_left(cl).right() == expected,
                    [&] { return at(cl); });
      const auto sols = right_partners(cl, Strategy::GenerateAndTest);
      oracle.expect(sols.size() == 1 && sols.front() == expected,
                    [&] { return at(cl); });
    }
  }
  return r;
}

Report check_star_negation(AlgebraKind kind, int depth) {
  Report r{"star-negation", kind, depth_text(depth), {}, {}};
  const CrystalGraph g = crystal_graph(kind, depth);
  CheckResult& verts = r.check("vertices of star(b) = wt(b) - vertices of b");
  CheckResult& deco = r.check("delta decorations swap sides");
  CheckResult& mv = r.check("star(b) is MV");
  CheckResult& inv = r.check("star is an involution");
  for (const CrystalElement& b : g.nodes) {
    const CrystalElement s = star(b);
    const auto own = boundary(vertices(b));
    const auto other = boundary(vertices(s));
    std::set<RootVector> negated;
    for (const RootVector& v : own) negated.insert(wt(b) - v);
    verts.expect(std::set<RootVector>(other.begin(), other.end()) == negated,
                 [&] { return at(b); });
    deco.expect(s.left().delta_part() == b.right().delta_part() &&
                    s.right().delta_part() == b.left().delta_part(),
                [&] { return at(b); });
    mv.expect(is_mv(s).passed(), [&] { return at(b); });
    inv.expect(star(s) == b, [&] { return at(b); });
  }
  return r;
}

Report check_saito_formulas(AlgebraKind kind, int depth, int slack) {
  Report r{"saito-formulas", kind,
           depth_text(depth) + ", slack " + std::to_string(slack), {}, {}};
  const CrystalGraph g = crystal_graph(kind, depth);
  CheckResult& plain = r.check("phi_i = 0: saito = f_i*^max e_i^N");
  CheckResult& starred = r.check("phi_i* = 0: saito_star = f_i^max e_i*^N");
  CheckResult& round = r.check("saito_star inverts saito");
  CheckResult& weights = r.check("saito acts on weight by s_i");
  CheckResult& opp_plain =
      r.check("opposite pairing: saito = f_i^max e_i*^N", true);
  CheckResult& opp_starred =
      r.check("opposite pairing: saito_star = f_i*^max e_i^N", true);

  for (const CrystalElement& b : g.nodes) {
    for (int i = 0; i < 2; ++i) {
      const std::string tag = "i=" + std::to_string(i);
      if (phi(i, b) == 0) {
        const CrystalElement target = saito(i, b);
        weights.expect(wt(target) == simple_reflection(kind, i, wt(b)),
                       [&] { return at(b, tag); });
        round.expect(saito_star(i, target) == b, [&] { return at(b, tag); });
        const Int t = std::max<Int>(0, eps_star(i, b));
        const Int t_opp = std::max<Int>(0, eps(i, b));
        for (int extra = 0; extra <= slack; ++extra) {
          const std::string where = tag + ", N=" + std::to_string(t + extra);
          plain.expect(lower_fully(i, true, raise_times(i, false, b, t + extra)) ==
                           target,
                       [&] { return at(b, where); });
          const std::string where_opp =
              tag + ", N=" + std::to_string(t_opp + extra);
          opp_plain.expect(
              lower_fully(i, false, raise_times(i, true, b, t_opp + extra)) ==
                  target,
              [&] { return at(b, where_opp); });
        }
      }
      if (phi_star(i, b) == 0) {
        const CrystalElement target = saito_star(i, b);
        weights.expect(wt(target) == simple_reflection(kind, i, wt(b)),
                       [&] { return at(b, tag + ", starred"); });
        round.expect(saito(i, target) == b,
                     [&] { return at(b, tag + ", starred"); });
        const Int t = std::max<Int>(0, eps(i, b));
        const Int t_opp = std::max<Int>(0, eps_star(i, b));
        for (int extra = 0; extra <= slack; ++extra) {
          const std::string where = tag + ", N=" + std::to_string(t + extra);
          starred.expect(
              lower_fully(i, false, raise_times(i, true, b, t + extra)) == target,
              [&] { return at(b, where); });
          const std::string where_opp =
              tag + ", N=" + std::to_string(t_opp + extra);
          opp_starred.expect(
              lower_fully(i, true, raise_times(i, false, b, t_opp + extra)) ==
                  target,
              [&] { return at(b, where_opp); });
        }
      }
    }
  }
  return r;
}

Report check_crystal_axioms(AlgebraKind kind, int depth) {
  Report r{"crystal-axioms", kind, depth_text(depth), {}, {}};
  const CrystalGraph g = crystal_graph(kind, depth);
  CheckResult& lowest_unique = r.check("unique lowest node");
  CheckResult& fe = r.check("f_i e_i = id and f_i* e_i* = id");
  CheckResult& ef = r.check("e_i f_i = id and e_i* f_i* = id where defined");
  CheckResult& wts = r.check("e_i and e_i* add alpha_i to the weight");
  CheckResult& phis = r.check("phi_i, phi_i* = number of f steps");
  CheckResult& star_inv = r.check("star e_i star = e_i*");
  CheckResult& same = r.check("e_i = e_i* when phi_i + eps_i* = 0");
  CheckResult& differ = r.check("e_i e_i* != e_i* e_i when phi_i + eps_i* = 1");
  CheckResult& commute = r.check("e_i e_i* = e_i* e_i when phi_i + eps_i* >= 2");
  CheckResult& literal =
      r.check("e_i e_i* = e_i* e_i when phi_i, phi_i* > 0", true);

  std::size_t lows = 0;
  for (const CrystalElement& b : g.nodes) {
    if (!f(0, b) && !f(1, b)) ++lows;
    for (int i = 0; i < 2; ++i) {
      const CrystalElement up = e(i, b);
      const CrystalElement up_star = e_star(i, b);
      fe.expect(f(i, up) == b && f_star(i, up_star) == b,
                [&] { return at(b, "i=" + std::to_string(i)); });
      if (auto down = f(i, b)) {
        ef.expect(e(i, *down) == b, [&] { return at(b, "i=" + std::to_string(i)); });
      }
      if (auto down = f_star(i, b)) {
        ef.expect(e_star(i, *down) == b,
                  [&] { return at(b, "i=" + std::to_string(i) + ", starred"); });
      }
      const RootVector plus = wt(b) + simple_root(i);
      wts.expect(wt(up) == plus && wt(up_star) == plus,
                 [&] { return at(b, "i=" + std::to_string(i)); });
      phis.expect(phi(i, b) == lowering_steps(i, false, b) &&
                      phi_star(i, b) == lowering_steps(i, true, b),
                  [&] { return at(b, "i=" + std::to_string(i)); });
      star_inv.expect(star(e(i, star(b))) == up_star,
                      [&] { return at(b, "i=" + std::to_string(i)); });

      const Int c = phi(i, b) + eps_star(i, b);
      const bool commutes = e(i, up_star) == e_star(i, up);
      const auto tag = [&] {
        return at(b, "i=" + std::to_string(i) + ", phi+eps*=" + std::to_string(c));
      };
      if (c == 0) same.expect(up == up_star, tag);
      if (c == 1) differ.expect(!commutes, tag);
      if (c >= 2) commute.expect(commutes, tag);
      if (phi(i, b) > 0 && phi_star(i, b) > 0) literal.expect(commutes, tag);
    }
  }
  lowest_unique.expect(lows == 1, [&] {
    return at(g.nodes.front(), std::to_string(lows) + " lowest nodes");
  });

  if (kind == AlgebraKind::Sl2Hat) {
    CheckResult& tau_inv = r.check("tau is an involution");
    CheckResult& tau_e = r.check("tau e0 tau = e1");
    CheckResult& tau_star = r.check("tau star = star tau");
    for (const CrystalElement& b : g.nodes) {
      tau_inv.expect(tau(tau(b)) == b, [&] { return at(b); });
      tau_e.expect(tau(e(0, tau(b))) == e(1, b), [&] { return at(b); });
      tau_star.expect(tau(star(b)) == star(tau(b)), [&] { return at(b); });
    }
  }
  r.notes.push_back("nodes: " + std::to_string(g.nodes.size()));
  return r;
}

}  // namespace mvpoly
