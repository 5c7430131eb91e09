#include "mvpoly/transition.hpp"

#include <algorithm>
#include <mutex>

#include "mvpoly/errors.hpp"

namespace mvpoly {

std::optional<LusztigDatum> TransitionCache::find(Side known,
                                                  const LusztigDatum& d) const {
  std::shared_lock lock(mutex_);
  auto it = table_.find(Key{known, d});
  if (it == table_.end()) return std::nullopt;
  return it->second;
}

void TransitionCache::insert(Side known, const LusztigDatum& d,
                             const LusztigDatum& other) {
  std::unique_lock lock(mutex_);
  table_.try_emplace(Key{known, d}, other);
}

std::size_t TransitionCache::size() const {
  std::shared_lock lock(mutex_);
  return table_.size();
}

void TransitionCache::clear() {
  std::unique_lock lock(mutex_);
  table_.clear();
}

TransitionCache& default_cache() {
  static TransitionCache cache;
  return cache;
}

namespace {

// Largest m >= 0 with m * root <= residual componentwise.
Int max_multiple(const RootVector& root, const RootVector& residual) {
  Int m = -1;
  if (root.a > 0) m = residual.a / root.a;
  if (root.b > 0) {
    const Int mb = residual.b / root.b;
    m = m < 0 ? mb : std::min(m, mb);
  }
  return std::max<Int>(m, 0);
}

// Depth-first search for the right datum. The right path is built bottom-up
// (low family, ascending k), then top-down (high family, ascending k); at
// every k >= 2 the diagonal condition relating index k to k-1 is settled as
// soon as the new vertex is known. The residual weight is finally split
// into delta parts by conditions 3 and 4.
class RightSearch {
 public:
  explicit RightSearch(const LusztigDatum& left)
      : kind_(left.kind()),
        left_(left),
        weight_(weight(left)),
        last_(max_root_index(weight_) + 1) {
    left_lower_.assign(1, RootVector{});
    left_upper_.assign(1, weight_);
    for (int k = 1; k <= last_; ++k) {
      left_lower_.push_back(left_lower_.back() +
                            left.mult(Family::High, k) * beta_high(kind_, k));
      left_upper_.push_back(left_upper_.back() -
                            left.mult(Family::Low, k) * beta_low(kind_, k));
    }
    right_lower_.assign(1, RootVector{});
    right_upper_.assign(1, weight_);
  }

  std::vector<LusztigDatum> run() {
    lower(1, weight_);
    std::sort(found_.begin(), found_.end());
    return std::move(found_);
  }

 private:
  void lower(int k, const RootVector& residual) {
    if (k > last_) {
      upper(1, residual);
      return;
    }
    const RootVector root = beta_low(kind_, k);
    const RootVector prev = right_lower_.back();
    const Int settled =
        k >= 2 ? coweight_pair(left_lower_[k] - prev, 1) : Int{0};
    if (settled > 0) return;
    const Int top = max_multiple(root, residual);
    for (Int m = 0; m <= top; ++m) {
      const RootVector cur = prev + m * root;
      if (k >= 2) {
        // increasing in m, since beta_k has a positive alpha0 part
        const Int open = coweight_pair(cur - left_lower_[k - 1], 0);
        if (open > 0) break;
        if (settled < 0 && open < 0) continue;
      }
      right_lower_.push_back(cur);
      if (m > 0) chosen_[RootLabel{Family::Low, k}] = m;
      lower(k + 1, residual - m * root);
      chosen_.erase(RootLabel{Family::Low, k});
      right_lower_.pop_back();
    }
  }

  void upper(int k, const RootVector& residual) {
    if (k > last_) {
      split_delta(residual);
      return;
    }
    const RootVector root = beta_high(kind_, k);
    const RootVector prev = right_upper_.back();
    const Int settled =
        k >= 2 ? coweight_pair(left_upper_[k] - prev, 0) : Int{0};
    if (settled < 0) return;
    const Int top = max_multiple(root, residual);
    for (Int m = 0; m <= top; ++m) {
      const RootVector cur = prev - m * root;
      if (k >= 2) {
        // decreasing in m, since beta^k has a positive alpha1 part
        const Int open = coweight_pair(cur - left_upper_[k - 1], 1);
        if (open < 0) break;
        if (settled > 0 && open > 0) continue;
      }
      right_upper_.push_back(cur);
      if (m > 0) chosen_[RootLabel{Family::High, k}] = m;
      upper(k + 1, residual - m * root);
      chosen_.erase(RootLabel{Family::High, k});
      right_upper_.pop_back();
    }
  }

  void split_delta(const RootVector& residual) {
    const RootVector d = delta(kind_);
    if (residual.a % d.a != 0) return;
    const Int n = residual.a / d.a;
    if (residual != n * d) return;

    const Partition& given = left_.delta_part();
    const RootVector lower_gap = right_lower_.back() - left_lower_.back();
    const RootVector upper_gap = right_upper_.back() - left_upper_.back();
    std::vector<Partition> candidates;
    if (lower_gap.a * upper_gap.b - lower_gap.b * upper_gap.a == 0) {
      if (n == given.size()) candidates.push_back(given);
    } else {
      const Rational f = part_size_factor(kind_);
      const Int s_num = f.num * symmetrized_form(kind_, lower_gap, kAlpha1);
      if (s_num % f.den != 0) return;
      const Int s = s_num / f.den;
      if (s <= 0) return;
      if (n == given.size() + s) candidates.push_back(add_part(given, s));
      if (n + s == given.size() && given.contains(s)) {
        candidates.push_back(remove_part(given, s));
      }
    }
    for (Partition& p : candidates) {
      LusztigDatum right(kind_, chosen_, std::move(p));
      if (is_mv(DecoratedPolytope(left_, right)).passed()) {
        found_.push_back(std::move(right));
      }
    }
  }

  AlgebraKind kind_;
  const LusztigDatum& left_;
  RootVector weight_;
  int last_;
  std::vector<RootVector> left_lower_, left_upper_;
  std::vector<RootVector> right_lower_, right_upper_;
  LusztigDatum::RealMap chosen_;
  std::vector<LusztigDatum> found_;
};

LusztigDatum unique_or_throw(std::vector<LusztigDatum> found,
                             const LusztigDatum& known, Side side) {
  if (found.size() == 1) return std::move(found.front());
  throw InvariantBreach(std::string(to_string(side)) + " datum " +
                        to_string(known) + " has " +
                        std::to_string(found.size()) + " MV completions");
}

}  // namespace

std::vector<LusztigDatum> right_partners(const LusztigDatum& left,
                                         Strategy strategy) {
  if (strategy == Strategy::PrunedSearch) return RightSearch(left).run();
  std::vector<LusztigDatum> out;
  for (LusztigDatum& x : enumerate_data(left.kind(), weight(left))) {
    if (is_mv(DecoratedPolytope(left, x)).passed()) out.push_back(std::move(x));
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<LusztigDatum> left_partners(const LusztigDatum& right,
                                        Strategy strategy) {
  if (strategy == Strategy::PrunedSearch) return RightSearch(right).run();
  std::vector<LusztigDatum> out;
  for (LusztigDatum& x : enumerate_data(right.kind(), weight(right))) {
    if (is_mv(DecoratedPolytope(x, right)).passed()) {
      out.push_back(std::move(x));
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

LusztigDatum trapezoid_partner(AlgebraKind kind, const Partition& lambda) {
  if (lambda.empty()) return LusztigDatum(kind);
  const Int l1 = largest_part(lambda);
  LusztigDatum::RealMap real{
      {simple_label(1), long_short_ratio(kind) * l1},
      {simple_label(0), l1},
  };
  return LusztigDatum(kind, std::move(real), remove_part(lambda, l1));
}

LusztigDatum transition_l_to_r(const LusztigDatum& cl, Strategy strategy) {
  if (strategy == Strategy::GenerateAndTest) {
    return unique_or_throw(right_partners(cl, strategy), cl, Side::Left);
  }
  TransitionCache& cache = default_cache();
  if (auto hit = cache.find(Side::Left, cl)) return *hit;
  LusztigDatum cr =
      is_purely_imaginary(cl)
          ? trapezoid_partner(cl.kind(), cl.delta_part())
          : unique_or_throw(right_partners(cl, strategy), cl, Side::Left);
  cache.insert(Side::Left, cl, cr);
  return cr;
}

LusztigDatum transition_r_to_l(const LusztigDatum& cr, Strategy strategy) {
  if (strategy == Strategy::GenerateAndTest) {
    return unique_or_throw(left_partners(cr, strategy), cr, Side::Right);
  }
  TransitionCache& cache = default_cache();
  if (auto hit = cache.find(Side::Right, cr)) return *hit;
  LusztigDatum cl =
      is_purely_imaginary(cr)
          ? trapezoid_partner(cr.kind(), cr.delta_part())
          : unique_or_throw(left_partners(cr, strategy), cr, Side::Right);
  cache.insert(Side::Right, cr, cl);
  return cl;
}

DecoratedPolytope complete_from_left(const LusztigDatum& cl,
                                     Strategy strategy) {
  return DecoratedPolytope(cl, transition_l_to_r(cl, strategy));
}

DecoratedPolytope complete_from_right(const LusztigDatum& cr,
                                      Strategy strategy) {
  return DecoratedPolytope(transition_r_to_l(cr, strategy), cr);
}

}  // namespace mvpoly
