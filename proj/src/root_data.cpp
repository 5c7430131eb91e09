#include "mvpoly/root_data.hpp"

#include <ostream>

#include "mvpoly/errors.hpp"

namespace mvpoly {

namespace {

void require_node(int i) {
  if (i != 0 && i != 1) {
    throw PreconditionViolated("node index must be 0 or 1, got " +
                               std::to_string(i));
  }
}

// Symmetrized Cartan matrix entries N_ij.
constexpr Int kSl2Form[2][2] = {{2, -2}, {-2, 2}};
constexpr Int kA22Form[2][2] = {{8, -4}, {-4, 2}};

}  // namespace

std::string_view to_string(AlgebraKind kind) {
  return kind == AlgebraKind::Sl2Hat ? "sl2hat" : "a2(2)";
}

std::optional<AlgebraKind> parse_algebra(std::string_view name) {
  if (name == "sl2hat") return AlgebraKind::Sl2Hat;
  if (name == "a2(2)") return AlgebraKind::A22;
  return std::nullopt;
}

std::string to_string(const RootVector& v) {
  return "(" + std::to_string(v.a) + "," + std::to_string(v.b) + ")";
}

std::ostream& operator<<(std::ostream& os, const RootVector& v) {
  return os << to_string(v);
}

RootVector delta(AlgebraKind kind) {
  return kind == AlgebraKind::Sl2Hat ? RootVector{1, 1} : RootVector{1, 2};
}

Int symmetrized_form(AlgebraKind kind, const RootVector& v,
                     const RootVector& w) {
  const auto& n = kind == AlgebraKind::Sl2Hat ? kSl2Form : kA22Form;
  return v.a * (n[0][0] * w.a + n[0][1] * w.b) +
         v.b * (n[1][0] * w.a + n[1][1] * w.b);
}

Int cartan_pair(AlgebraKind kind, int i, const RootVector& v) {
  require_node(i);
  const RootVector ai = simple_root(i);
  // (alpha_i, alpha_i) divides 2 (alpha_i, alpha_j) in both systems.
  return 2 * symmetrized_form(kind, ai, v) / symmetrized_form(kind, ai, ai);
}

RootVector simple_reflection(AlgebraKind kind, int i, const RootVector& v) {
  return v - cartan_pair(kind, i, v) * simple_root(i);
}

Int coweight_pair(const RootVector& v, int i) {
  require_node(i);
  return i == 0 ? v.a : v.b;
}

std::string_view to_string(Family family) {
  return family == Family::Low ? "low" : "high";
}

std::string to_string(const RootLabel& label) {
  return std::string(to_string(label.family)) + std::to_string(label.k);
}

RootVector beta_low(AlgebraKind kind, int k) {
  if (k < 1) throw PreconditionViolated("root index must be >= 1");
  const RootVector d = delta(kind);
  if (kind == AlgebraKind::Sl2Hat) return kAlpha1 + (k - 1) * d;
  if (k % 2 == 1) return kAlpha1 + ((k - 1) / 2) * d;
  return 2 * kAlpha1 + (k - 1) * d;
}

RootVector beta_high(AlgebraKind kind, int k) {
  if (k < 1) throw PreconditionViolated("root index must be >= 1");
  const RootVector d = delta(kind);
  if (kind == AlgebraKind::Sl2Hat) return kAlpha0 + (k - 1) * d;
  if (k % 2 == 1) return kAlpha0 + (k - 1) * d;
  return kAlpha0 + kAlpha1 + ((k - 2) / 2) * d;
}

RootVector root_of(AlgebraKind kind, const RootLabel& label) {
  return label.family == Family::Low ? beta_low(kind, label.k)
                                     : beta_high(kind, label.k);
}

std::optional<RootLabel> label_of(AlgebraKind kind, const RootVector& v) {
  if (v.a < 0 || v.b < 0 || v.is_zero()) return std::nullopt;
  for (int k = 1; k <= max_root_index(v); ++k) {
    if (beta_low(kind, k) == v) return RootLabel{Family::Low, k};
    if (beta_high(kind, k) == v) return RootLabel{Family::High, k};
  }
  return std::nullopt;
}

std::vector<LabeledRoot> positive_real_roots(AlgebraKind kind,
                                             const RootVector& box) {
  std::vector<LabeledRoot> out;
  if (box.a < 0 || box.b < 0) return out;
  const int kmax = max_root_index(box);
  for (Family family : {Family::Low, Family::High}) {
    for (int k = 1; k <= kmax; ++k) {
      const RootLabel label{family, k};
      const RootVector v = root_of(kind, label);
      if (v.fits_in(box)) out.push_back({label, v});
    }
  }
  return out;
}

Rational part_size_factor(AlgebraKind kind) {
  return kind == AlgebraKind::Sl2Hat ? Rational{1, 2} : Rational{1, 4};
}

Int long_short_ratio(AlgebraKind kind) {
  return kind == AlgebraKind::Sl2Hat ? 1 : 2;
}

}  // namespace mvpoly
