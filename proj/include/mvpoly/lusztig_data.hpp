#pragma once

// Partitions and Lusztig data (Kostant partitions of a root-lattice weight).

#include <compare>
#include <cstddef>
#include <map>
#include <string>
#include <vector>

#include "mvpoly/root_data.hpp"

namespace mvpoly {

// A weakly decreasing sequence of positive integers. Always canonical.
class Partition {
 public:
  Partition() = default;
  // Sorts the parts; throws PreconditionViolated on a nonpositive part.
  explicit Partition(std::vector<Int> parts);

  const std::vector<Int>& parts() const { return parts_; }
  bool empty() const { return parts_.empty(); }
  std::size_t length() const { return parts_.size(); }
  Int size() const;
  bool contains(Int part) const;

  friend bool operator==(const Partition&, const Partition&) = default;
  friend auto operator<=>(const Partition&, const Partition&) = default;

 private:
  std::vector<Int> parts_;
};

// Largest part; 0 for the empty partition.
Int largest_part(const Partition& p);
// Deletes exactly one occurrence of `part`; throws PartAbsent if missing.
Partition remove_part(const Partition& p, Int part);
Partition add_part(const Partition& p, Int part);
Partition transpose(const Partition& p);
// Partitions of n, starting from (n) and descending lexicographically.
std::vector<Partition> partitions_of(Int n);

std::string to_string(const Partition& p);

// Multiplicities on positive real roots (nonzero entries only) plus the
// partition carried by the imaginary direction delta.
class LusztigDatum {
 public:
  using RealMap = std::map<RootLabel, Int>;

  explicit LusztigDatum(AlgebraKind kind) : kind_(kind) {}
  // Drops zero entries; throws PreconditionViolated on negative
  // multiplicities or k < 1.
  LusztigDatum(AlgebraKind kind, RealMap real, Partition delta = {});

  AlgebraKind kind() const { return kind_; }
  const RealMap& real() const { return real_; }
  const Partition& delta_part() const { return delta_; }

  Int mult(const RootLabel& label) const;
  Int mult(Family family, int k) const { return mult(RootLabel{family, k}); }
  Int simple_mult(int i) const { return mult(simple_label(i)); }

  LusztigDatum with_mult(const RootLabel& label, Int m) const;
  LusztigDatum with_delta(Partition delta) const;

  // Largest k carrying a nonzero multiplicity (either family), 0 if none.
  int max_index() const;
  bool is_zero() const { return real_.empty() && delta_.empty(); }

  friend bool operator==(const LusztigDatum&, const LusztigDatum&) = default;
  friend auto operator<=>(const LusztigDatum&, const LusztigDatum&) = default;

 private:
  AlgebraKind kind_;
  RealMap real_;
  Partition delta_;
};

std::size_t hash_value(const LusztigDatum& d);

// |c_delta| delta + sum_beta c_beta beta.
RootVector weight(const LusztigDatum& d);

bool is_purely_imaginary(const LusztigDatum& d);

// c o s_i: the entry at rho moves to s_i(rho); the delta partition is kept.
// Throws PreconditionViolated if c_{alpha_i} != 0.
LusztigDatum twist_s(const LusztigDatum& d, int i);

// c o tau (sl2-hat only): swaps the low and high families at equal k.
// Throws UnsupportedKind for A2^(2).
LusztigDatum twist_tau(const LusztigDatum& d);

// Every Lusztig datum of weight exactly w, each once, in a fixed order:
// multiplicities are chosen over the real roots fitting in w (low family by
// ascending k, then high family by ascending k, each from 0 upward), and the
// residual n*delta is split by partitions_of(n).
std::vector<LusztigDatum> enumerate_data(AlgebraKind kind,
                                         const RootVector& w);

// Canonical one-line form, e.g. "{low1:2,low2:1,high1:1,delta:(9,2,1,1)}".
// Real entries are ordered low family first, then ascending k.
std::string to_string(const LusztigDatum& d);

}  // namespace mvpoly

template <>
struct std::hash<mvpoly::LusztigDatum> {
  std::size_t operator()(const mvpoly::LusztigDatum& d) const noexcept {
    return mvpoly::hash_value(d);
  }
};
