#pragma once

// Completing a one-sided Lusztig datum to its MV polytope, and the
// left <-> right transition map that results.
//
// Swapping the two data of an MV polytope gives an MV polytope again, so a
// right datum c completes to (x, c) exactly when (c, x) is MV. Both solvers
// only ever search for a right datum given a left one.

#include <cstddef>
#include <shared_mutex>
#include <unordered_map>
#include <vector>

#include "mvpoly/lusztig_data.hpp"
#include "mvpoly/polytope.hpp"

namespace mvpoly {

enum class Strategy {
  GenerateAndTest,  // filter enumerate_data(weight) through is_mv
  PrunedSearch,     // depth-first over the unknown side, conditions as pruning
};

// Completion table keyed by (side of the known datum, datum). The kind is
// part of the datum. Safe for concurrent readers and writers; inserting an
// existing key is a no-op.
class TransitionCache {
 public:
  std::optional<LusztigDatum> find(Side known, const LusztigDatum& d) const;
  void insert(Side known, const LusztigDatum& d, const LusztigDatum& other);
  std::size_t size() const;
  void clear();

 private:
  struct Key {
    Side side;
    LusztigDatum datum;
    friend bool operator==(const Key&, const Key&) = default;
  };
  struct KeyHash {
    std::size_t operator()(const Key& k) const noexcept {
      return hash_value(k.datum) * 2 + static_cast<std::size_t>(k.side);
    }
  };

  mutable std::shared_mutex mutex_;
  std::unordered_map<Key, LusztigDatum, KeyHash> table_;
};

// Process-wide cache used by the pruned strategy.
TransitionCache& default_cache();

// Every right datum x with (left, x) passing is_mv. Uncached.
std::vector<LusztigDatum> right_partners(const LusztigDatum& left,
                                         Strategy strategy);
// Every left datum x with (x, right) passing is_mv. Uncached.
std::vector<LusztigDatum> left_partners(const LusztigDatum& right,
                                        Strategy strategy);

// The right datum {alpha1: r*l1, delta: lambda minus l1, alpha0: l1} of
// the MV polytope whose left datum is {delta: lambda}, r = |alpha0|/|alpha1|.
LusztigDatum trapezoid_partner(AlgebraKind kind, const Partition& lambda);

// The unique MV polytope with the given left (right) datum. Throws
// InvariantBreach if the solver finds zero or several.
DecoratedPolytope complete_from_left(
    const LusztigDatum& cl, Strategy strategy = Strategy::PrunedSearch);
DecoratedPolytope complete_from_right(
    const LusztigDatum& cr, Strategy strategy = Strategy::PrunedSearch);

LusztigDatum transition_l_to_r(const LusztigDatum& cl,
                               Strategy strategy = Strategy::PrunedSearch);
LusztigDatum transition_r_to_l(const LusztigDatum& cr,
                               Strategy strategy = Strategy::PrunedSearch);

}  // namespace mvpoly
