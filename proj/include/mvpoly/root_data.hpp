#pragma once

// Root data for the two rank-2 affine root systems: sl2-hat (A1^(1)) and the
// twisted A2^(2), with node 0 the long root of A2^(2).
//
// Everything lives in the root lattice written over the simple roots
// (alpha0, alpha1); no floating point appears anywhere.

#include <compare>
#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace mvpoly {

using Int = std::int64_t;

enum class AlgebraKind { Sl2Hat, A22 };

inline constexpr AlgebraKind kAllKinds[] = {AlgebraKind::Sl2Hat,
                                            AlgebraKind::A22};

// "sl2hat" / "a2(2)", the names used by the document formats.
std::string_view to_string(AlgebraKind kind);
std::optional<AlgebraKind> parse_algebra(std::string_view name);

// a * alpha0 + b * alpha1.
struct RootVector {
  Int a = 0;
  Int b = 0;

  constexpr RootVector() = default;
  constexpr RootVector(Int a_, Int b_) : a(a_), b(b_) {}

  constexpr RootVector& operator+=(const RootVector& o) {
    a += o.a;
    b += o.b;
    return *this;
  }
  constexpr RootVector& operator-=(const RootVector& o) {
    a -= o.a;
    b -= o.b;
    return *this;
  }
  friend constexpr RootVector operator+(RootVector x, const RootVector& y) {
    return x += y;
  }
  friend constexpr RootVector operator-(RootVector x, const RootVector& y) {
    return x -= y;
  }
  friend constexpr RootVector operator-(const RootVector& x) {
    return {-x.a, -x.b};
  }
  friend constexpr RootVector operator*(Int s, const RootVector& x) {
    return {s * x.a, s * x.b};
  }

  constexpr bool is_zero() const { return a == 0 && b == 0; }
  // Componentwise <= box.
  constexpr bool fits_in(const RootVector& box) const {
    return a >= 0 && b >= 0 && a <= box.a && b <= box.b;
  }
  // Sum of coordinates; strictly positive on nonzero positive-cone vectors.
  constexpr Int height() const { return a + b; }

  friend constexpr bool operator==(const RootVector&,
                                   const RootVector&) = default;
  friend constexpr auto operator<=>(const RootVector&,
                                    const RootVector&) = default;
};

std::string to_string(const RootVector& v);
std::ostream& operator<<(std::ostream& os, const RootVector& v);

inline constexpr RootVector kAlpha0{1, 0};
inline constexpr RootVector kAlpha1{0, 1};

inline constexpr RootVector simple_root(int i) {
  return i == 0 ? kAlpha0 : kAlpha1;
}

// The null root: alpha0 + alpha1 (sl2-hat), alpha0 + 2 alpha1 (A2^(2)).
RootVector delta(AlgebraKind kind);

// (v, w) for the symmetrized Cartan matrices [[2,-2],[-2,2]] and
// [[8,-4],[-4,2]].
Int symmetrized_form(AlgebraKind kind, const RootVector& v,
                     const RootVector& w);

// <alpha_i^vee, v> = 2 (alpha_i, v) / (alpha_i, alpha_i).
Int cartan_pair(AlgebraKind kind, int i, const RootVector& v);

// s_i(v) = v - <alpha_i^vee, v> alpha_i.
RootVector simple_reflection(AlgebraKind kind, int i, const RootVector& v);

// (v, omega_i): the alpha_i coefficient of v.
Int coweight_pair(const RootVector& v, int i);

// Positive real roots come in two families: "low" (beta_k, starting at
// alpha1) and "high" (beta^k, starting at alpha0), each indexed by k >= 1.
enum class Family { Low, High };

struct RootLabel {
  Family family = Family::Low;
  int k = 1;

  friend constexpr bool operator==(const RootLabel&,
                                   const RootLabel&) = default;
  // Low family first, then ascending k.
  friend constexpr auto operator<=>(const RootLabel&,
                                    const RootLabel&) = default;
};

std::string to_string(const RootLabel& label);
std::string_view to_string(Family family);

// The label of the simple roots: alpha1 = beta_1, alpha0 = beta^1.
inline constexpr RootLabel simple_label(int i) {
  return i == 0 ? RootLabel{Family::High, 1} : RootLabel{Family::Low, 1};
}

RootVector beta_low(AlgebraKind kind, int k);
RootVector beta_high(AlgebraKind kind, int k);
RootVector root_of(AlgebraKind kind, const RootLabel& label);

// Inverse of root_of on positive real roots; nullopt for anything else.
std::optional<RootLabel> label_of(AlgebraKind kind, const RootVector& v);

struct LabeledRoot {
  RootLabel label;
  RootVector vector;
};

// All positive real roots componentwise <= box, low family (ascending k)
// then high family (ascending k).
std::vector<LabeledRoot> positive_real_roots(AlgebraKind kind,
                                             const RootVector& box);

// Every real root has height >= its index k, so a root fitting in `box`
// has k <= max_root_index(box).
inline constexpr int max_root_index(const RootVector& box) {
  return static_cast<int>(box.height() < 1 ? 1 : box.height());
}

struct Rational {
  Int num = 0;
  Int den = 1;
};

// |alpha1| / (2 |alpha0|): 1/2 for sl2-hat, 1/4 for A2^(2).
Rational part_size_factor(AlgebraKind kind);

// |alpha0| / |alpha1|: 1 for sl2-hat, 2 for A2^(2).
Int long_short_ratio(AlgebraKind kind);

}  // namespace mvpoly
