#include "mvpoly/crystal.hpp"

#include "mvpoly/errors.hpp"
#include "mvpoly/transition.hpp"

namespace mvpoly {

namespace {

void require_node(int i) {
  if (i != 0 && i != 1) {
    throw PreconditionViolated("node index must be 0 or 1, got " +
                               std::to_string(i));
  }
}

LusztigDatum bump(const LusztigDatum& d, int i, Int by) {
  return d.with_mult(simple_label(i), d.simple_mult(i) + by);
}

// Which side each (starred) operator edits.
Side edited_side(int i, bool starred) {
  const bool right = (i == 0) != starred;
  return right ? Side::Right : Side::Left;
}

CrystalElement rebuild(Side fixed, const LusztigDatum& d) {
  return fixed == Side::Right ? complete_from_right(d) : complete_from_left(d);
}

CrystalElement raise(int i, bool starred, const CrystalElement& b) {
  require_node(i);
  const Side s = edited_side(i, starred);
  return rebuild(s, bump(b.side(s), i, 1));
}

std::optional<CrystalElement> lower(int i, bool starred,
                                    const CrystalElement& b) {
  require_node(i);
  const Side s = edited_side(i, starred);
  if (b.side(s).simple_mult(i) == 0) return std::nullopt;
  return rebuild(s, bump(b.side(s), i, -1));
}

}  // namespace

CrystalElement lowest(AlgebraKind kind) {
  return {LusztigDatum(kind), LusztigDatum(kind)};
}

CrystalElement e(int i, const CrystalElement& b) { return raise(i, false, b); }
CrystalElement e_star(int i, const CrystalElement& b) {
  return raise(i, true, b);
}
std::optional<CrystalElement> f(int i, const CrystalElement& b) {
  return lower(i, false, b);
}
std::optional<CrystalElement> f_star(int i, const CrystalElement& b) {
  return lower(i, true, b);
}

Int phi(int i, const CrystalElement& b) {
  require_node(i);
  return b.side(edited_side(i, false)).simple_mult(i);
}

Int phi_star(int i, const CrystalElement& b) {
  require_node(i);
  return b.side(edited_side(i, true)).simple_mult(i);
}

Int eps(int i, const CrystalElement& b) {
  return phi(i, b) - cartan_pair(b.kind(), i, wt(b));
}

Int eps_star(int i, const CrystalElement& b) {
  return phi_star(i, b) - cartan_pair(b.kind(), i, wt(b));
}

CrystalElement star(const CrystalElement& b) { return b.swapped(); }

CrystalElement tau(const CrystalElement& b) {
  return {twist_tau(b.right()), twist_tau(b.left())};
}

CrystalElement saito(int i, const CrystalElement& b) {
  if (phi(i, b) != 0) {
    throw PreconditionViolated("saito(" + std::to_string(i) +
                               ") needs phi = 0, element is " + to_string(b));
  }
  if (i == 0) return complete_from_left(twist_s(b.right(), 0));
  return complete_from_right(twist_s(b.left(), 1));
}

CrystalElement saito_star(int i, const CrystalElement& b) {
  if (phi_star(i, b) != 0) {
    throw PreconditionViolated("saito_star(" + std::to_string(i) +
                               ") needs phi* = 0, element is " + to_string(b));
  }
  if (i == 0) return complete_from_right(twist_s(b.left(), 0));
  return complete_from_left(twist_s(b.right(), 1));
}

std::string_view to_string(Op op) {
  switch (op) {
    case Op::E0: return "e0";
    case Op::E1: return "e1";
    case Op::E0Star: return "e0*";
    case Op::E1Star: return "e1*";
  }
  return "?";
}

CrystalElement apply(Op op, const CrystalElement& b) {
  switch (op) {
    case Op::E0: return e(0, b);
    case Op::E1: return e(1, b);
    case Op::E0Star: return e_star(0, b);
    case Op::E1Star: return e_star(1, b);
  }
  throw PreconditionViolated("unknown operator");
}

std::optional<std::size_t> CrystalGraph::find(const CrystalElement& b) const {
  auto it = index.find(b);
  if (it == index.end()) return std::nullopt;
  return it->second;
}

CrystalGraph crystal_graph(AlgebraKind kind, int depth) {
  if (depth < 0) throw PreconditionViolated("depth must be >= 0");
  CrystalGraph g{kind, {}, {}, {}, {}};
  g.nodes.push_back(lowest(kind));
  g.depth.push_back(0);
  g.index.emplace(g.nodes.front(), 0);
  std::size_t begin = 0;
  for (int d = 0; d < depth; ++d) {
    const std::size_t end = g.nodes.size();
    for (std::size_t n = begin; n < end; ++n) {
      for (Op op : kAllOps) {
        CrystalElement next = apply(op, g.nodes[n]);
        auto [it, fresh] = g.index.try_emplace(next, g.nodes.size());
        if (fresh) {
          g.nodes.push_back(std::move(next));
          g.depth.push_back(d + 1);
        }
        g.edges.push_back({n, it->second, op});
      }
    }
    begin = end;
  }
  return g;
}

}  // namespace mvpoly
