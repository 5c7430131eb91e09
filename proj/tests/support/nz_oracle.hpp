#pragma once

// Independent model of B(infinity) for the rank-2 affine Cartan matrices:
// the Nakashima-Zelevinsky polyhedral realization along the alternating
// reduced word ...i2 i1, truncated to a finite length. Nothing here uses
// Lusztig data or MV polytopes.
//
// Standard f_i (lowering in B(infinity)) corresponds to the raising
// operator e_i of B(-infinity). The Kashiwara-starred operator for i is
// read off the first coordinate of the realization whose word starts with
// i; moving between the two realizations replays a lowering path.

#include <array>
#include <optional>
#include <stdexcept>
#include <utility>
#include <vector>

#include "mvpoly/root_data.hpp"

namespace oracle {

using Vec = std::vector<long>;

class Realization {
 public:
  Realization(mvpoly::AlgebraKind kind, int length, int first)
      : length_(length) {
    // Cartan matrices, alpha0 long for A2^(2).
    const bool sl2 = kind == mvpoly::AlgebraKind::Sl2Hat;
    a_[0][0] = 2;
    a_[0][1] = sl2 ? -2 : -1;
    a_[1][0] = sl2 ? -2 : -4;
    a_[1][1] = 2;
    for (int k = 0; k < length; ++k) word_.push_back((first + k) % 2);
  }

  Vec zero() const { return Vec(length_, 0); }

  // max_k sigma_k over positions with i_k = i, and its arguments.
  std::pair<long, std::vector<int>> sigma(const Vec& x, int i) const {
    long best = 0;
    std::vector<int> args;
    bool any = false;
    for (int k = 0; k < length_; ++k) {
      if (word_[k] != i) continue;
      long v = x[k];
      for (int j = k + 1; j < length_; ++j) v += a_[i][word_[j]] * x[j];
      if (!any || v > best) {
        best = v;
        args.assign(1, k);
        any = true;
      } else if (v == best) {
        args.push_back(k);
      }
    }
    return {best, args};
  }

  Vec lower(const Vec& x, int i) const {
    auto [best, args] = sigma(x, i);
    const int m = args.front();
    if (m >= length_ - 4) throw std::runtime_error("realization too short");
    Vec y = x;
    ++y[m];
    return y;
  }

  std::optional<Vec> raise(const Vec& x, int i) const {
    auto [best, args] = sigma(x, i);
    if (best <= 0) return std::nullopt;
    Vec y = x;
    --y[args.back()];
    return y;
  }

  long eps(const Vec& x, int i) const { return sigma(x, i).first; }

 private:
  int length_;
  long a_[2][2];
  std::vector<int> word_;
};

class Crystal {
 public:
  explicit Crystal(mvpoly::AlgebraKind kind, int length = 48)
      : r_{Realization(kind, length, 0), Realization(kind, length, 1)} {}

  Vec lowest() const { return r_[0].zero(); }

  // B(-infinity) raising operators e_i and e_i*.
  Vec e(const Vec& x, int i) const { return r_[0].lower(x, i); }
  Vec e_star(const Vec& x, int i) const {
    Vec y = to(i, x);
    ++y[0];
    return from(i, y);
  }
  std::optional<Vec> f(const Vec& x, int i) const { return r_[0].raise(x, i); }
  std::optional<Vec> f_star(const Vec& x, int i) const {
    Vec y = to(i, x);
    if (y[0] == 0) return std::nullopt;
    --y[0];
    return from(i, y);
  }
  long phi(const Vec& x, int i) const { return r_[0].eps(x, i); }
  long phi_star(const Vec& x, int i) const { return to(i, x)[0]; }

 private:
  // Lowering word (applied in order) producing x from zero.
  std::vector<int> path(int which, Vec x) const {
    std::vector<int> w;
    auto nonzero = [](const Vec& v) {
      for (long c : v) {
        if (c) return true;
      }
      return false;
    };
    while (nonzero(x)) {
      bool moved = false;
      for (int i = 0; i < 2 && !moved; ++i) {
        if (auto y = r_[which].raise(x, i)) {
          x = *y;
          w.push_back(i);
          moved = true;
        }
      }
      if (!moved) throw std::runtime_error("no raising step from nonzero");
    }
    return {w.rbegin(), w.rend()};
  }
  Vec replay(int which, const std::vector<int>& w) const {
    Vec x = r_[which].zero();
    for (int i : w) x = r_[which].lower(x, i);
    return x;
  }
  Vec to(int which, const Vec& x) const {
    return which == 0 ? x : replay(which, path(0, x));
  }
  Vec from(int which, const Vec& x) const {
    return which == 0 ? x : replay(0, path(which, x));
  }

  std::array<Realization, 2> r_;
};

}  // namespace oracle
