#pragma once

// Decorated pseudo-Weyl polytopes and the MV conditions.
//
// A polytope is a pair of Lusztig data of equal weight. The right datum
// traces the right-hand boundary: the low-family edges climb from the base
// vertex mu_0 = 0, then the delta edge, then the high-family edges in
// descending k up to the top vertex weight(P). The left datum does the same
// on the other side with the roles of the two families exchanged.

#include <compare>
#include <optional>
#include <string>
#include <vector>

#include "mvpoly/lusztig_data.hpp"
#include "mvpoly/root_data.hpp"

namespace mvpoly {

enum class Side { Left, Right };

inline constexpr Side opposite(Side s) {
  return s == Side::Left ? Side::Right : Side::Left;
}
std::string_view to_string(Side side);

class DecoratedPolytope {
 public:
  // Throws PreconditionViolated unless both data have the same kind and
  // the same weight.
  DecoratedPolytope(LusztigDatum left, LusztigDatum right);

  AlgebraKind kind() const { return left_.kind(); }
  const LusztigDatum& left() const { return left_; }
  const LusztigDatum& right() const { return right_; }
  const LusztigDatum& side(Side s) const {
    return s == Side::Left ? left_ : right_;
  }
  RootVector weight() const { return mvpoly::weight(left_); }

  // cl <-> cr; the polytope negated and translated back to the origin.
  DecoratedPolytope swapped() const { return {right_, left_}; }

  friend bool operator==(const DecoratedPolytope&,
                         const DecoratedPolytope&) = default;
  friend auto operator<=>(const DecoratedPolytope&,
                          const DecoratedPolytope&) = default;

 private:
  LusztigDatum left_;
  LusztigDatum right_;
};

std::size_t hash_value(const DecoratedPolytope& p);
std::string to_string(const DecoratedPolytope& p);

// The four vertex sequences, indexed 0..last():
//   right_lower[k]  = mu^r_k,    right_upper[k] = mu^{r,k},
//   left_lower[k]   = mu^l_k,    left_upper[k]  = mu^{l,k}.
// The final entries are the limits mu_infinity.
struct VertexFan {
  std::vector<RootVector> right_lower;
  std::vector<RootVector> right_upper;
  std::vector<RootVector> left_lower;
  std::vector<RootVector> left_upper;

  int last() const { return static_cast<int>(right_lower.size()) - 1; }
  const RootVector& right_lower_limit() const { return right_lower.back(); }
  const RootVector& right_upper_limit() const { return right_upper.back(); }
  const RootVector& left_lower_limit() const { return left_lower.back(); }
  const RootVector& left_upper_limit() const { return left_upper.back(); }
};

// 1 + the largest root index in the support of either datum, at least 2.
int truncation_index(const DecoratedPolytope& p);

VertexFan vertices(const DecoratedPolytope& p);
// Same, but computed out to `last_index` (>= truncation_index(p)).
VertexFan vertices(const DecoratedPolytope& p, int last_index);

// Boundary cycle starting at mu_0, up the right side, down the left side,
// with repeated consecutive vertices removed.
std::vector<RootVector> boundary(const VertexFan& fan);

// Convex (possibly degenerate) polygon: consistent turning and a single
// ascending then descending run of heights.
bool is_convex(const std::vector<RootVector>& cycle);

struct Violation {
  int condition = 0;  // 1..4
  int k = 0;          // diagonal index for conditions 1 and 2, else 0
  std::string detail;

  friend bool operator==(const Violation& a, const Violation& b) {
    return a.condition == b.condition && a.k == b.k;
  }
};

struct MvVerdict {
  std::vector<Violation> violations;
  bool passed() const { return violations.empty(); }
};

// max{ (mu^l_k - mu^r_{k-1}, omega_1), (mu^r_k - mu^l_{k-1}, omega_0) };
// condition 1 asks for exactly 0.
Int lower_diagonal_max(const RootVector& left_k, const RootVector& left_prev,
                       const RootVector& right_k, const RootVector& right_prev);

// min{ (mu^{l,k} - mu^{r,k-1}, omega_0), (mu^{r,k} - mu^{l,k-1}, omega_1) };
// condition 2 asks for exactly 0.
Int upper_diagonal_min(const RootVector& left_k, const RootVector& left_prev,
                       const RootVector& right_k, const RootVector& right_prev);

// Conditions 3 and 4, given the two limit differences
// mu^r_inf - mu^l_inf and mu^{r,inf} - mu^{l,inf}.
std::vector<Violation> imaginary_violations(AlgebraKind kind,
                                            const RootVector& lower_gap,
                                            const RootVector& upper_gap,
                                            const Partition& left_delta,
                                            const Partition& right_delta);

// All four MV conditions, conditions 1 and 2 for k = 2..truncation_index.
MvVerdict is_mv(const DecoratedPolytope& p);
// Same with conditions 1 and 2 scanned out to `last_index`.
MvVerdict is_mv(const DecoratedPolytope& p, int last_index);

}  // namespace mvpoly

template <>
struct std::hash<mvpoly::DecoratedPolytope> {
  std::size_t operator()(const mvpoly::DecoratedPolytope& p) const noexcept {
    return mvpoly::hash_value(p);
  }
};
