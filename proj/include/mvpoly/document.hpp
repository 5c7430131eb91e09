#pragma once

// JSON documents, DOT export and drawings.
//
// Datum document:
//   {"algebra": "sl2hat" | "a2(2)",
//    "real": [{"family": "low" | "high", "k": int >= 1, "mult": int >= 1}],
//    "delta": [int, ...]}                         (weakly decreasing)
// Polytope document:
//   {"left": datum, "right": datum, "weight": [a, b], "mv": bool,
//    "violations": [{"condition": n, "k": k, "detail": "..."}],
//    "vertices": {...}}                           ("vertices" optional)

#include <string>

#include <json.hpp>

#include "mvpoly/crystal.hpp"
#include "mvpoly/verify.hpp"

namespace mvpoly {

using Json = nlohmann::ordered_json;

Json datum_to_json(const LusztigDatum& d);
// Throws ParseError on unknown fields, bad values, duplicate real entries,
// zero multiplicities or a non-canonical partition.
LusztigDatum datum_from_json(const Json& j);

Json polytope_to_json(const DecoratedPolytope& p, bool with_vertices);
// Reads "left" and "right"; "weight" must match if present; "mv",
// "violations" and "vertices" are recomputed, not trusted.
DecoratedPolytope polytope_from_json(const Json& j);

bool is_polytope_document(const Json& j);

Json report_to_json(const Report& r);

// Parses text as JSON; throws ParseError with the parser's message.
Json parse_json(const std::string& text);

// DOT digraph; node ids are the canonical element text.
std::string to_dot(const CrystalGraph& g);

// Plane embedding with delta vertical: alpha1 -> (1, 1), alpha0 -> (-1, 1)
// for sl2-hat and (-2, 2) for A2^(2).
struct PlanePoint {
  Int x = 0;
  Int y = 0;
  friend bool operator==(const PlanePoint&, const PlanePoint&) = default;
};
PlanePoint embed(AlgebraKind kind, const RootVector& v);

// The cut points on the two vertical edges: the edge is cut into pieces of
// the partition's sizes, largest piece at the bottom.
std::vector<RootVector> delta_cuts(AlgebraKind kind, const RootVector& bottom,
                                   const Partition& lambda);

std::string render_svg(const DecoratedPolytope& p);
std::string render_tikz(const DecoratedPolytope& p);

}  // namespace mvpoly
