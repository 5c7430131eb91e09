#include <doctest.h>

#include <sstream>

#include "mvpoly/document.hpp"
#include "mvpoly/errors.hpp"
#include "mvpoly/transition.hpp"
#include "support/samples.hpp"

using namespace mvpoly;
using namespace samples;

namespace {

std::size_t count(const std::string& text, const std::string& needle) {
  std::size_t n = 0;
  for (auto pos = text.find(needle); pos != std::string::npos;
       pos = text.find(needle, pos + 1)) {
    ++n;
  }
  return n;
}

}  // namespace

TEST_CASE("datum document shape") {
  const Json j = datum_to_json(datum(S, {{hi(1), 1}, {lo(2), 3}}, {2, 1}));
  CHECK(j.dump() ==
        R"({"algebra":"sl2hat","real":[{"family":"low","k":2,"mult":3},)"
        R"({"family":"high","k":1,"mult":1}],"delta":[2,1]})");
}

TEST_CASE("parse after serialize is the identity") {
  for (auto kind : kAllKinds) {
    for (Int a = 0; a <= 3; ++a) {
      for (Int b = 0; b <= 4; ++b) {
        for (const auto& d : enumerate_data(kind, {a, b})) {
          const Json j = datum_to_json(d);
          CHECK(datum_from_json(j) == d);
          CHECK(datum_to_json(datum_from_json(parse_json(j.dump()))).dump() == j.dump());
          for (bool with_vertices : {false, true}) {
            const DecoratedPolytope mv = complete_from_left(d);
            const DecoratedPolytope odd(d, d);
            for (const auto& p : {mv, odd}) {
              const Json doc = polytope_to_json(p, with_vertices);
              CHECK(polytope_from_json(parse_json(doc.dump())) == p);
              CHECK(polytope_to_json(polytope_from_json(doc), with_vertices) == doc);
            }
          }
        }
      }
    }
  }
}

TEST_CASE("datum documents are validated") {
  auto bad = [](const std::string& text) {
    CHECK_THROWS_AS(datum_from_json(parse_json(text)), ParseError);
  };
  bad(R"({"algebra":"sl2hat","extra":1})");
  bad(R"({"algebra":"sl3"})");
  bad(R"({"real":[]})");
  bad(R"({"algebra":"sl2hat","delta":[1,2]})");
  bad(R"({"algebra":"sl2hat","delta":[0]})");
  bad(R"({"algebra":"sl2hat","delta":[1.5]})");
  bad(R"({"algebra":"sl2hat","real":[{"family":"low","k":1,"mult":0}]})");
  bad(R"({"algebra":"sl2hat","real":[{"family":"low","k":0,"mult":1}]})");
  bad(R"({"algebra":"sl2hat","real":[{"family":"mid","k":1,"mult":1}]})");
  bad(R"({"algebra":"sl2hat","real":[{"family":"low","k":1}]})");
  bad(R"({"algebra":"sl2hat","real":[{"family":"low","k":1,"mult":1,"x":2}]})");
  bad(R"({"algebra":"sl2hat","real":[{"family":"low","k":1,"mult":1},)"
      R"({"family":"low","k":1,"mult":2}]})");
  CHECK_THROWS_AS(parse_json("{"), ParseError);
  CHECK(datum_from_json(parse_json(R"j({"algebra":"a2(2)"})j")) == LusztigDatum(T));
}

TEST_CASE("polytope documents are validated") {
  const std::string l = R"({"algebra":"sl2hat","real":[{"family":"low","k":1,"mult":1}]})";
  const std::string r = R"({"algebra":"sl2hat","real":[{"family":"high","k":1,"mult":1}]})";
  CHECK_THROWS_AS(polytope_from_json(parse_json(R"({"left":)" + l + R"(,"right":)" + r + "}")),
                  ParseError);
  CHECK_THROWS_AS(polytope_from_json(parse_json(R"({"left":)" + l + "}")), ParseError);
  CHECK_THROWS_AS(polytope_from_json(parse_json(R"({"left":)" + l + R"(,"right":)" + l +
                                                R"(,"weight":[1,0]})")),
                  ParseError);
  CHECK_THROWS_AS(polytope_from_json(parse_json(R"({"left":)" + l + R"(,"right":)" + l +
                                                R"(,"colour":"red"})")),
                  ParseError);
  CHECK(polytope_from_json(parse_json(R"({"left":)" + l + R"(,"right":)" + l + "}")).weight() ==
        kAlpha1);
}

TEST_CASE("polytope document content") {
  const Json doc = polytope_to_json(worked(), true);
  CHECK(doc["mv"] == true);
  CHECK(doc["weight"] == Json::array({20, 22}));
  CHECK(doc["violations"].empty());
  CHECK(doc["vertices"]["right_lower"][1] == Json::array({0, 2}));
  const auto bad = datum(S, {{hi(1), 2}, {lo(1), 1}});
  const Json v = polytope_to_json(DecoratedPolytope(bad, bad), false);
  CHECK(v["mv"] == false);
  CHECK(v["violations"][0]["condition"] == 1);
  CHECK(v["violations"][0]["k"] == 2);
  CHECK_FALSE(v.contains("vertices"));
}

TEST_CASE("dot export") {
  const std::string d0 = to_dot(crystal_graph(S, 0));
  CHECK(count(d0, "[label=") == 1);
  const std::string d1 = to_dot(crystal_graph(S, 1));
  CHECK(count(d1, " -> ") == 4);
  CHECK(count(d1, "[label=\"{") == 3);
  CHECK(d1.find("\"L{} R{}\" -> \"L{high1:1} R{high1:1}\" [label=\"e0\"]") !=
        std::string::npos);
  CHECK(to_dot(crystal_graph(T, 4)) == to_dot(crystal_graph(T, 4)));
}

TEST_CASE("embedding keeps delta vertical") {
  for (auto kind : kAllKinds) CHECK(embed(kind, delta(kind)).x == 0);
  CHECK(embed(S, kAlpha1) == PlanePoint{1, 1});
  CHECK(embed(S, kAlpha0) == PlanePoint{-1, 1});
  CHECK(embed(T, kAlpha0) == PlanePoint{-2, 2});
}

TEST_CASE("delta cuts put the largest piece at the bottom") {
  const auto cuts = delta_cuts(S, {3, 7}, Partition({9, 2, 1, 1}));
  REQUIRE(cuts.size() == 3);
  CHECK(cuts[0] == RootVector{12, 16});
  CHECK(cuts[1] == RootVector{14, 18});
  CHECK(cuts[2] == RootVector{15, 19});
  CHECK(delta_cuts(S, {0, 0}, Partition()).empty());
}

TEST_CASE("renderings") {
  const std::string zero = render_svg(DecoratedPolytope(LusztigDatum(S), LusztigDatum(S)));
  CHECK(count(zero, "<circle") == 1);
  CHECK(count(zero, "<polygon") == 0);
  const auto seg = datum(S, {{lo(1), 2}});
  const std::string tikz_seg = render_tikz(DecoratedPolytope(seg, seg));
  CHECK(tikz_seg.find("\\draw (0,0) -- (2,2) -- cycle;") != std::string::npos);
  const std::string worked_tikz = render_tikz(worked());
  CHECK(count(worked_tikz, "++(-0.2,0)") == 5);  // three cuts right, two left
  CHECK(worked_tikz.find("(4,10) -- (4,36)") != std::string::npos);  // right vertical edge
  const std::string svg = render_svg(worked());
  CHECK(count(svg, "<line") == 5);
  CHECK(svg.rfind("<svg", 0) == 0);
}
