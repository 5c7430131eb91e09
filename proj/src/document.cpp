#include "mvpoly/document.hpp"

#include <algorithm>
#include <set>
#include <sstream>

#include "mvpoly/errors.hpp"

namespace mvpoly {

namespace {

void only_fields(const Json& j, std::initializer_list<std::string_view> allowed,
                 std::string_view what) {
  if (!j.is_object()) throw ParseError(std::string(what) + " must be an object");
  for (const auto& [key, value] : j.items()) {
    if (std::find(allowed.begin(), allowed.end(), key) == allowed.end()) {
      throw ParseError("unknown field '" + key + "' in " + std::string(what));
    }
  }
}

Int integer(const Json& j, std::string_view what) {
  if (!j.is_number_integer()) {
    throw ParseError(std::string(what) + " must be an integer");
  }
  return j.get<Int>();
}

Json vector_json(const RootVector& v) { return Json::array({v.a, v.b}); }

RootVector vector_from_json(const Json& j, std::string_view what) {
  if (!j.is_array() || j.size() != 2) {
    throw ParseError(std::string(what) + " must be a pair [a, b]");
  }
  return {integer(j[0], what), integer(j[1], what)};
}

Json path_json(const std::vector<RootVector>& path) {
  Json out = Json::array();
  for (const auto& v : path) out.push_back(vector_json(v));
  return out;
}

}  // namespace

Json datum_to_json(const LusztigDatum& d) {
  Json real = Json::array();
  for (const auto& [label, m] : d.real()) {
    real.push_back({{"family", std::string(to_string(label.family))},
                    {"k", label.k},
                    {"mult", m}});
  }
  return {{"algebra", std::string(to_string(d.kind()))},
          {"real", real},
          {"delta", d.delta_part().parts()}};
}

LusztigDatum datum_from_json(const Json& j) {
  only_fields(j, {"algebra", "real", "delta"}, "datum");
  if (!j.contains("algebra") || !j["algebra"].is_string()) {
    throw ParseError("datum needs a string field 'algebra'");
  }
  const auto kind = parse_algebra(j["algebra"].get<std::string>());
  if (!kind) {
    throw ParseError("unknown algebra '" + j["algebra"].get<std::string>() +
                     "', expected sl2hat or a2(2)");
  }

  LusztigDatum::RealMap real;
  if (j.contains("real")) {
    if (!j["real"].is_array()) throw ParseError("'real' must be an array");
    for (const Json& entry : j["real"]) {
      only_fields(entry, {"family", "k", "mult"}, "real entry");
      if (!entry.contains("family") || !entry.contains("k") ||
          !entry.contains("mult")) {
        throw ParseError("real entry needs 'family', 'k' and 'mult'");
      }
      const Json& fam = entry["family"];
      Family family;
      if (fam == "low") {
        family = Family::Low;
      } else if (fam == "high") {
        family = Family::High;
      } else {
        throw ParseError("family must be \"low\" or \"high\"");
      }
      const Int k = integer(entry["k"], "k");
      const Int mult = integer(entry["mult"], "mult");
      if (k < 1 || k > 1'000'000) throw ParseError("k must be >= 1");
      if (mult < 1) throw ParseError("mult must be >= 1");
      const RootLabel label{family, static_cast<int>(k)};
      if (!real.emplace(label, mult).second) {
        throw ParseError("duplicate real entry " + to_string(label));
      }
    }
  }

  std::vector<Int> parts;
  if (j.contains("delta")) {
    if (!j["delta"].is_array()) throw ParseError("'delta' must be an array");
    for (const Json& p : j["delta"]) {
      const Int part = integer(p, "delta part");
      if (part < 1) throw ParseError("delta parts must be >= 1");
      if (!parts.empty() && part > parts.back()) {
        throw ParseError("delta partition must be weakly decreasing");
      }
      parts.push_back(part);
    }
  }
  return LusztigDatum(*kind, std::move(real), Partition(std::move(parts)));
}

bool is_polytope_document(const Json& j) {
  return j.is_object() && (j.contains("left") || j.contains("right"));
}

Json polytope_to_json(const DecoratedPolytope& p, bool with_vertices) {
  const MvVerdict verdict = is_mv(p);
  Json violations = Json::array();
  for (const auto& v : verdict.violations) {
    violations.push_back(
        {{"condition", v.condition}, {"k", v.k}, {"detail", v.detail}});
  }
  Json out = {{"left", datum_to_json(p.left())},
              {"right", datum_to_json(p.right())},
              {"weight", vector_json(p.weight())},
              {"mv", verdict.passed()},
              {"violations", violations}};
  if (with_vertices) {
    const VertexFan fan = vertices(p);
    out["vertices"] = {{"right_lower", path_json(fan.right_lower)},
                       {"right_upper", path_json(fan.right_upper)},
                       {"left_lower", path_json(fan.left_lower)},
                       {"left_upper", path_json(fan.left_upper)}};
  }
  return out;
}

DecoratedPolytope polytope_from_json(const Json& j) {
  only_fields(j, {"left", "right", "weight", "mv", "violations", "vertices"},
              "polytope");
  if (!j.contains("left") || !j.contains("right")) {
    throw ParseError("polytope needs both 'left' and 'right'");
  }
  LusztigDatum left = datum_from_json(j["left"]);
  LusztigDatum right = datum_from_json(j["right"]);
  if (left.kind() != right.kind()) {
    throw ParseError("left and right data name different algebras");
  }
  if (weight(left) != weight(right)) {
    throw ParseError("left weight " + to_string(weight(left)) +
                     " differs from right weight " + to_string(weight(right)));
  }
  if (j.contains("weight") &&
      vector_from_json(j["weight"], "weight") != weight(left)) {
    throw ParseError("'weight' does not match the data");
  }
  return DecoratedPolytope(std::move(left), std::move(right));
}

Json report_to_json(const Report& r) {
  Json checks = Json::array();
  for (const auto& c : r.checks) {
    Json entry = {{"name", c.name},
                  {"informational", c.informational},
                  {"checked", c.checked},
                  {"failed", c.failed}};
    if (c.first) {
      entry["first_counterexample"] = {{"weight", vector_json(c.first->weight)},
                                       {"element", c.first->element},
                                       {"detail", c.first->detail}};
    }
    checks.push_back(entry);
  }
  return {{"suite", r.suite},
          {"algebra", std::string(to_string(r.kind))},
          {"bounds", r.bounds},
          {"passed", r.passed()},
          {"checks", checks},
          {"notes", r.notes}};
}

Json parse_json(const std::string& text) {
  try {
    return Json::parse(text);
  } catch (const Json::parse_error& e) {
    throw ParseError(std::string("invalid JSON: ") + e.what());
  }
}

std::string to_dot(const CrystalGraph& g) {
  auto quote = [](const std::string& s) {
    std::string out = "\"";
    for (char ch : s) {
      if (ch == '"' || ch == '\\') out += '\\';
      out += ch;
    }
    return out + "\"";
  };
  std::ostringstream os;
  os << "digraph crystal {\n";
  os << "  // " << to_string(g.kind) << ", " << g.nodes.size() << " nodes\n";
  for (const auto& b : g.nodes) {
    os << "  " << quote(to_string(b))
       << " [label=" << quote(to_string(b.right()) + "\\nwt " + to_string(wt(b)))
       << "];\n";
  }
  for (const auto& edge : g.edges) {
    os << "  " << quote(to_string(g.nodes[edge.from])) << " -> "
       << quote(to_string(g.nodes[edge.to]))
       << " [label=" << quote(std::string(to_string(edge.op))) << "];\n";
  }
  os << "}\n";
  return os.str();
}

PlanePoint embed(AlgebraKind kind, const RootVector& v) {
  const Int x0 = kind == AlgebraKind::Sl2Hat ? -1 : -2;
  const Int y0 = kind == AlgebraKind::Sl2Hat ? 1 : 2;
  return {v.a * x0 + v.b, v.a * y0 + v.b};
}

std::vector<RootVector> delta_cuts(AlgebraKind kind, const RootVector& bottom,
                                   const Partition& lambda) {
  std::vector<RootVector> out;
  RootVector at = bottom;
  const auto& parts = lambda.parts();
  for (std::size_t j = 0; j + 1 < parts.size(); ++j) {
    at += parts[j] * delta(kind);
    out.push_back(at);
  }
  return out;
}

namespace {

struct Drawing {
  std::vector<PlanePoint> outline;
  std::vector<PlanePoint> cuts;
};

Drawing layout(const DecoratedPolytope& p) {
  const VertexFan fan = vertices(p);
  Drawing d;
  for (const auto& v : boundary(fan)) d.outline.push_back(embed(p.kind(), v));
  for (const auto& v : delta_cuts(p.kind(), fan.right_lower_limit(),
                                  p.right().delta_part())) {
    d.cuts.push_back(embed(p.kind(), v));
  }
  for (const auto& v : delta_cuts(p.kind(), fan.left_lower_limit(),
                                  p.left().delta_part())) {
    d.cuts.push_back(embed(p.kind(), v));
  }
  return d;
}

}  // namespace

std::string render_svg(const DecoratedPolytope& p) {
  constexpr Int unit = 20;
  constexpr Int margin = 10;
  const Drawing d = layout(p);
  Int xmin = 0, xmax = 0, ymin = 0, ymax = 0;
  for (const auto& q : d.outline) {
    xmin = std::min(xmin, q.x);
    xmax = std::max(xmax, q.x);
    ymin = std::min(ymin, q.y);
    ymax = std::max(ymax, q.y);
  }
  // SVG y grows downward.
  auto sx = [&](Int x) { return (x - xmin) * unit + margin; };
  auto sy = [&](Int y) { return (ymax - y) * unit + margin; };
  const Int width = (xmax - xmin) * unit + 2 * margin;
  const Int height = (ymax - ymin) * unit + 2 * margin;

  std::ostringstream os;
  os << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << width
     << "\" height=\"" << height << "\" viewBox=\"0 0 " << width << " "
     << height << "\">\n";
  if (d.outline.size() > 1) {
    os << "  <polygon fill=\"none\" stroke=\"black\" points=\"";
    for (std::size_t j = 0; j < d.outline.size(); ++j) {
      if (j) os << " ";
      os << sx(d.outline[j].x) << "," << sy(d.outline[j].y);
    }
    os << "\"/>\n";
  }
  for (const auto& q : d.outline) {
    os << "  <circle cx=\"" << sx(q.x) << "\" cy=\"" << sy(q.y)
       << "\" r=\"2\" fill=\"black\"/>\n";
  }
  for (const auto& q : d.cuts) {
    os << "  <line x1=\"" << sx(q.x) - 4 << "\" y1=\"" << sy(q.y) << "\" x2=\""
       << sx(q.x) + 4 << "\" y2=\"" << sy(q.y) << "\" stroke=\"black\"/>\n";
  }
  os << "</svg>\n";
  return os.str();
}

std::string render_tikz(const DecoratedPolytope& p) {
  const Drawing d = layout(p);
  std::ostringstream os;
  os << "\\begin{tikzpicture}[scale=0.4]\n";
  if (d.outline.size() > 1) {
    os << "  \\draw ";
    for (const auto& q : d.outline) os << "(" << q.x << "," << q.y << ") -- ";
    os << "cycle;\n";
  }
  for (const auto& q : d.outline) {
    os << "  \\fill (" << q.x << "," << q.y << ") circle (2pt);\n";
  }
  for (const auto& q : d.cuts) {
    os << "  \\draw (" << q.x << "," << q.y << ") ++(-0.2,0) -- ++(0.4,0);\n";
  }
  os << "\\end{tikzpicture}\n";
  return os.str();
}

}  // namespace mvpoly
