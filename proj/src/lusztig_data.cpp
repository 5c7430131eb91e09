#include "mvpoly/lusztig_data.hpp"

#include <algorithm>
#include <functional>
#include <numeric>

#include "mvpoly/errors.hpp"

namespace mvpoly {

Partition::Partition(std::vector<Int> parts) : parts_(std::move(parts)) {
  for (Int p : parts_) {
    if (p <= 0) throw PreconditionViolated("partition parts must be positive");
  }
  std::sort(parts_.begin(), parts_.end(), std::greater<>());
}

Int Partition::size() const {
  return std::accumulate(parts_.begin(), parts_.end(), Int{0});
}

bool Partition::contains(Int part) const {
  return std::find(parts_.begin(), parts_.end(), part) != parts_.end();
}

Int largest_part(const Partition& p) {
  return p.empty() ? 0 : p.parts().front();
}

Partition remove_part(const Partition& p, Int part) {
  std::vector<Int> parts = p.parts();
  auto it = std::find(parts.begin(), parts.end(), part);
  if (it == parts.end()) {
    throw PartAbsent("part " + std::to_string(part) + " does not occur in " +
                     to_string(p));
  }
  parts.erase(it);
  return Partition(std::move(parts));
}

Partition add_part(const Partition& p, Int part) {
  std::vector<Int> parts = p.parts();
  parts.push_back(part);
  return Partition(std::move(parts));
}

Partition transpose(const Partition& p) {
  std::vector<Int> cols;
  for (Int j = 1; j <= largest_part(p); ++j) {
    cols.push_back(std::count_if(p.parts().begin(), p.parts().end(),
                                 [j](Int part) { return part >= j; }));
  }
  return Partition(std::move(cols));
}

namespace {

void partitions_rec(Int remaining, Int max_part, std::vector<Int>& prefix,
                    std::vector<Partition>& out) {
  if (remaining == 0) {
    out.emplace_back(prefix);
    return;
  }
  for (Int p = std::min(remaining, max_part); p >= 1; --p) {
    prefix.push_back(p);
    partitions_rec(remaining - p, p, prefix, out);
    prefix.pop_back();
  }
}

}  // namespace

std::vector<Partition> partitions_of(Int n) {
  std::vector<Partition> out;
  if (n < 0) return out;
  std::vector<Int> prefix;
  partitions_rec(n, n, prefix, out);
  return out;
}

std::string to_string(const Partition& p) {
  std::string s = "(";
  for (std::size_t j = 0; j < p.parts().size(); ++j) {
    if (j) s += ",";
    s += std::to_string(p.parts()[j]);
  }
  return s + ")";
}

LusztigDatum::LusztigDatum(AlgebraKind kind, RealMap real, Partition delta)
    : kind_(kind), delta_(std::move(delta)) {
  for (const auto& [label, m] : real) {
    if (label.k < 1) throw PreconditionViolated("root index must be >= 1");
    if (m < 0) throw PreconditionViolated("multiplicities must be >= 0");
    if (m > 0) real_.emplace(label, m);
  }
}

Int LusztigDatum::mult(const RootLabel& label) const {
  auto it = real_.find(label);
  return it == real_.end() ? 0 : it->second;
}

LusztigDatum LusztigDatum::with_mult(const RootLabel& label, Int m) const {
  if (m < 0) throw PreconditionViolated("multiplicities must be >= 0");
  LusztigDatum out = *this;
  if (m == 0) {
    out.real_.erase(label);
  } else {
    out.real_[label] = m;
  }
  return out;
}

LusztigDatum LusztigDatum::with_delta(Partition delta) const {
  LusztigDatum out = *this;
  out.delta_ = std::move(delta);
  return out;
}

int LusztigDatum::max_index() const {
  int k = 0;
  for (const auto& [label, m] : real_) k = std::max(k, label.k);
  return k;
}

std::size_t hash_value(const LusztigDatum& d) {
  std::size_t h = std::hash<int>{}(static_cast<int>(d.kind()));
  auto mix = [&h](std::size_t v) {
    h ^= v + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
  };
  for (const auto& [label, m] : d.real()) {
    mix(static_cast<std::size_t>(label.family));
    mix(static_cast<std::size_t>(label.k));
    mix(static_cast<std::size_t>(m));
  }
  mix(0xdeadbeef);
  for (Int p : d.delta_part().parts()) mix(static_cast<std::size_t>(p));
  return h;
}

RootVector weight(const LusztigDatum& d) {
  RootVector w = d.delta_part().size() * delta(d.kind());
  for (const auto& [label, m] : d.real()) w += m * root_of(d.kind(), label);
  return w;
}

bool is_purely_imaginary(const LusztigDatum& d) { return d.real().empty(); }

LusztigDatum twist_s(const LusztigDatum& d, int i) {
  if (d.simple_mult(i) != 0) {
    throw PreconditionViolated("twist by s_" + std::to_string(i) +
                               " needs a zero alpha_" + std::to_string(i) +
                               " entry, datum is " + to_string(d));
  }
  LusztigDatum::RealMap real;
  for (const auto& [label, m] : d.real()) {
    const RootVector image =
        simple_reflection(d.kind(), i, root_of(d.kind(), label));
    auto target = label_of(d.kind(), image);
    if (!target) {
      throw InvariantBreach("s_i did not map a positive real root " +
                            to_string(label) + " to a positive real root");
    }
    real.emplace(*target, m);
  }
  return LusztigDatum(d.kind(), std::move(real), d.delta_part());
}

LusztigDatum twist_tau(const LusztigDatum& d) {
  if (d.kind() != AlgebraKind::Sl2Hat) {
    throw UnsupportedKind("tau is only defined for sl2hat");
  }
  LusztigDatum::RealMap real;
  for (const auto& [label, m] : d.real()) {
    const Family other =
        label.family == Family::Low ? Family::High : Family::Low;
    real.emplace(RootLabel{other, label.k}, m);
  }
  return LusztigDatum(d.kind(), std::move(real), d.delta_part());
}

namespace {

struct Enumerator {
  AlgebraKind kind;
  RootVector dlt;
  std::vector<LabeledRoot> roots;
  std::vector<LusztigDatum>& out;
  LusztigDatum::RealMap chosen;

  void run(std::size_t idx, RootVector residual) {
    if (idx == roots.size()) {
      // residual must be n * delta with n >= 0
      if (residual.a % dlt.a != 0) return;
      const Int n = residual.a / dlt.a;
      if (n < 0 || residual != n * dlt) return;
      for (Partition& p : partitions_of(n)) {
        out.emplace_back(kind, chosen, std::move(p));
      }
      return;
    }
    const LabeledRoot& r = roots[idx];
    for (Int m = 0;; ++m) {
      const RootVector rest = residual - m * r.vector;
      if (rest.a < 0 || rest.b < 0) break;
      if (m > 0) chosen[r.label] = m;
      run(idx + 1, rest);
    }
    chosen.erase(r.label);
  }
};

}  // namespace

std::vector<LusztigDatum> enumerate_data(AlgebraKind kind,
                                         const RootVector& w) {
  std::vector<LusztigDatum> out;
  if (w.a < 0 || w.b < 0) return out;
  Enumerator e{kind, delta(kind), positive_real_roots(kind, w), out, {}};
  e.run(0, w);
  return out;
}

std::string to_string(const LusztigDatum& d) {
  std::string s = "{";
  bool first = true;
  for (const auto& [label, m] : d.real()) {
    if (!first) s += ",";
    first = false;
    s += to_string(label) + ":" + std::to_string(m);
  }
  if (!d.delta_part().empty()) {
    if (!first) s += ",";
    s += "delta:" + to_string(d.delta_part());
  }
  return s + "}";
}

}  // namespace mvpoly
