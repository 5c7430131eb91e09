#include "mvpoly/polytope.hpp"

#include <algorithm>
#include <functional>

#include "mvpoly/errors.hpp"

namespace mvpoly {

std::string_view to_string(Side side) {
  return side == Side::Left ? "left" : "right";
}

DecoratedPolytope::DecoratedPolytope(LusztigDatum left, LusztigDatum right)
    : left_(std::move(left)), right_(std::move(right)) {
  if (left_.kind() != right_.kind()) {
    throw PreconditionViolated("left and right data of different algebras");
  }
  if (mvpoly::weight(left_) != mvpoly::weight(right_)) {
    throw PreconditionViolated(
        "left and right data have different weights: " +
        to_string(mvpoly::weight(left_)) + " vs " +
        to_string(mvpoly::weight(right_)));
  }
}

std::size_t hash_value(const DecoratedPolytope& p) {
  const std::size_t h = hash_value(p.left());
  return h ^ (hash_value(p.right()) + 0x9e3779b97f4a7c15ULL + (h << 6) +
              (h >> 2));
}

std::string to_string(const DecoratedPolytope& p) {
  return "L" + to_string(p.left()) + " R" + to_string(p.right());
}

int truncation_index(const DecoratedPolytope& p) {
  return std::max(2, 1 + std::max(p.left().max_index(), p.right().max_index()));
}

VertexFan vertices(const DecoratedPolytope& p) {
  return vertices(p, truncation_index(p));
}

VertexFan vertices(const DecoratedPolytope& p, int last_index) {
  last_index = std::max(last_index, truncation_index(p));
  const AlgebraKind kind = p.kind();
  const RootVector top = p.weight();
  const LusztigDatum& cl = p.left();
  const LusztigDatum& cr = p.right();

  VertexFan fan;
  fan.right_lower.assign(1, RootVector{});
  fan.left_lower.assign(1, RootVector{});
  fan.right_upper.assign(1, top);
  fan.left_upper.assign(1, top);
  for (int k = 1; k <= last_index; ++k) {
    const RootVector lo = beta_low(kind, k);
    const RootVector hi = beta_high(kind, k);
    fan.right_lower.push_back(fan.right_lower.back() +
                              cr.mult(Family::Low, k) * lo);
    fan.right_upper.push_back(fan.right_upper.back() -
                              cr.mult(Family::High, k) * hi);
    fan.left_lower.push_back(fan.left_lower.back() +
                             cl.mult(Family::High, k) * hi);
    fan.left_upper.push_back(fan.left_upper.back() -
                             cl.mult(Family::Low, k) * lo);
  }
  return fan;
}

std::vector<RootVector> boundary(const VertexFan& fan) {
  std::vector<RootVector> cycle;
  auto push = [&cycle](const RootVector& v) {
    if (cycle.empty() || cycle.back() != v) cycle.push_back(v);
  };
  for (const auto& v : fan.right_lower) push(v);
  for (auto it = fan.right_upper.rbegin(); it != fan.right_upper.rend(); ++it)
    push(*it);
  for (const auto& v : fan.left_upper) push(v);
  for (auto it = fan.left_lower.rbegin(); it != fan.left_lower.rend(); ++it)
    push(*it);
  while (cycle.size() > 1 && cycle.back() == cycle.front()) cycle.pop_back();
  return cycle;
}

bool is_convex(const std::vector<RootVector>& cycle) {
  const std::size_t n = cycle.size();
  if (n < 3) return true;
  auto edge = [&](std::size_t j) { return cycle[(j + 1) % n] - cycle[j]; };
  int sign = 0;
  int height_runs = 0;
  int prev_dir = 0;
  for (std::size_t j = 0; j < n; ++j) {
    const RootVector e0 = edge(j);
    const RootVector e1 = edge((j + 1) % n);
    const Int cross = e0.a * e1.b - e0.b * e1.a;
    const int s = (cross > 0) - (cross < 0);
    if (s != 0) {
      if (sign != 0 && s != sign) return false;
      sign = s;
    }
    const int dir = (e0.height() > 0) - (e0.height() < 0);
    if (dir != 0 && dir != prev_dir) {
      ++height_runs;
      prev_dir = dir;
    }
  }
  // Starting at the base vertex, heights go up once and down once.
  return height_runs <= 2;
}

Int lower_diagonal_max(const RootVector& left_k, const RootVector& left_prev,
                       const RootVector& right_k,
                       const RootVector& right_prev) {
  return std::max(coweight_pair(left_k - right_prev, 1),
                  coweight_pair(right_k - left_prev, 0));
}

Int upper_diagonal_min(const RootVector& left_k, const RootVector& left_prev,
                       const RootVector& right_k,
                       const RootVector& right_prev) {
  return std::min(coweight_pair(left_k - right_prev, 0),
                  coweight_pair(right_k - left_prev, 1));
}

std::vector<Violation> imaginary_violations(AlgebraKind kind,
                                            const RootVector& lower_gap,
                                            const RootVector& upper_gap,
                                            const Partition& left_delta,
                                            const Partition& right_delta) {
  std::vector<Violation> out;
  // part size s = factor * (lower_gap, alpha1), kept as num / den
  const Rational factor = part_size_factor(kind);
  const Int s_num = factor.num * symmetrized_form(kind, lower_gap, kAlpha1);
  const Int s_den = factor.den;
  const bool integral = s_num % s_den == 0;
  const Int s = s_num / s_den;
  const std::string s_text =
      integral ? std::to_string(s)
               : std::to_string(s_num) + "/" + std::to_string(s_den);

  const bool parallel =
      lower_gap.a * upper_gap.b - lower_gap.b * upper_gap.a == 0;
  if (parallel) {
    if (left_delta != right_delta) {
      out.push_back({3, 0,
                     "parallel gaps but delta partitions differ: " +
                         to_string(left_delta) + " vs " +
                         to_string(right_delta)});
    }
  } else {
    const Partition& big =
        left_delta.size() >= right_delta.size() ? left_delta : right_delta;
    const Partition& small =
        left_delta.size() >= right_delta.size() ? right_delta : left_delta;
    if (!integral || s <= 0) {
      out.push_back({3, 0, "part size " + s_text + " is not a positive integer"});
    } else if (big.size() == small.size() || !big.contains(s) ||
               remove_part(big, s) != small) {
      out.push_back({3, 0,
                     "delta partitions " + to_string(left_delta) + " and " +
                         to_string(right_delta) +
                         " do not differ by one part of size " + s_text});
    }
  }

  const Int largest =
      std::max(largest_part(left_delta), largest_part(right_delta));
  if (largest * s_den > s_num) {
    out.push_back({4, 0,
                   "largest delta part " + std::to_string(largest) +
                       " exceeds " + s_text});
  }
  return out;
}

MvVerdict is_mv(const DecoratedPolytope& p) {
  return is_mv(p, truncation_index(p));
}

MvVerdict is_mv(const DecoratedPolytope& p, int last_index) {
  const VertexFan fan = vertices(p, last_index);
  MvVerdict verdict;
  for (int k = 2; k <= fan.last(); ++k) {
    const Int lower =
        lower_diagonal_max(fan.left_lower[k], fan.left_lower[k - 1],
                           fan.right_lower[k], fan.right_lower[k - 1]);
    if (lower != 0) {
      verdict.violations.push_back(
          {1, k, "max of lower diagonals is " + std::to_string(lower)});
    }
    const Int upper =
        upper_diagonal_min(fan.left_upper[k], fan.left_upper[k - 1],
                           fan.right_upper[k], fan.right_upper[k - 1]);
    if (upper != 0) {
      verdict.violations.push_back(
          {2, k, "min of upper diagonals is " + std::to_string(upper)});
    }
  }
  auto rest = imaginary_violations(
      p.kind(), fan.right_lower_limit() - fan.left_lower_limit(),
      fan.right_upper_limit() - fan.left_upper_limit(),
      p.left().delta_part(), p.right().delta_part());
  verdict.violations.insert(verdict.violations.end(), rest.begin(),
                            rest.end());
  return verdict;
}

}  // namespace mvpoly
