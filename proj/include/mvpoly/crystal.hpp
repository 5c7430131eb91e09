#pragma once

// B(-infinity) on MV polytopes. An element is a completed DecoratedPolytope;
// each operator edits one simple-root entry on one side and lets the
// transition map rebuild the other side.
//
//   e0, f0   : right datum, alpha0      e0*, f0* : left datum, alpha0
//   e1, f1   : left datum, alpha1       e1*, f1* : right datum, alpha1

#include <optional>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "mvpoly/polytope.hpp"

namespace mvpoly {

using CrystalElement = DecoratedPolytope;

CrystalElement lowest(AlgebraKind kind);
inline RootVector wt(const CrystalElement& b) { return b.weight(); }

CrystalElement e(int i, const CrystalElement& b);
std::optional<CrystalElement> f(int i, const CrystalElement& b);
CrystalElement e_star(int i, const CrystalElement& b);
std::optional<CrystalElement> f_star(int i, const CrystalElement& b);

Int phi(int i, const CrystalElement& b);
Int eps(int i, const CrystalElement& b);
Int phi_star(int i, const CrystalElement& b);
Int eps_star(int i, const CrystalElement& b);

// Kashiwara involution: swaps the two data.
CrystalElement star(const CrystalElement& b);
// sl2-hat only: (cl, cr) -> (cr o tau, cl o tau). Throws UnsupportedKind.
CrystalElement tau(const CrystalElement& b);

// saito(0): left := cr o s0;  saito(1): right := cl o s1.
// saito_star(0): right := cl o s0;  saito_star(1): left := cr o s1.
// The other side is completed. Throw PreconditionViolated unless
// phi(i) = 0 (resp. phi_star(i) = 0).
CrystalElement saito(int i, const CrystalElement& b);
CrystalElement saito_star(int i, const CrystalElement& b);

enum class Op { E0, E1, E0Star, E1Star };
inline constexpr Op kAllOps[] = {Op::E0, Op::E1, Op::E0Star, Op::E1Star};
std::string_view to_string(Op op);
CrystalElement apply(Op op, const CrystalElement& b);

struct CrystalGraph {
  struct Edge {
    std::size_t from;
    std::size_t to;
    Op op;
  };

  AlgebraKind kind;
  std::vector<CrystalElement> nodes;  // breadth-first order, nodes[0] lowest
  std::vector<int> depth;             // first depth at which a node appears
  std::vector<Edge> edges;            // every op applied at depth < limit
  std::unordered_map<CrystalElement, std::size_t> index;

  std::optional<std::size_t> find(const CrystalElement& b) const;
};

// Everything reachable from lowest(kind) by at most `depth` raising
// operators e0, e1, e0*, e1*.
CrystalGraph crystal_graph(AlgebraKind kind, int depth);

}  // namespace mvpoly
