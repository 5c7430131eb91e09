#include "mvpoly/cli.hpp"

#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "mvpoly/document.hpp"
#include "mvpoly/errors.hpp"

namespace mvpoly::cli {

namespace {

// An operator word that cannot be applied to the current element.
class StepFailed : public Error {
 public:
  using Error::Error;
};

std::string read_text(const std::string& path, std::istream& in) {
  if (path == "-") {
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
  }
  std::ifstream file(path);
  if (!file) throw ParseError("cannot open '" + path + "'");
  std::ostringstream ss;
  ss << file.rdbuf();
  return ss.str();
}

Side parse_side(const std::string& s) {
  if (s == "left") return Side::Left;
  if (s == "right") return Side::Right;
  throw ParseError("side must be left or right");
}

AlgebraKind parse_kind(const std::string& s) {
  auto kind = parse_algebra(s);
  if (!kind) throw ParseError("algebra must be sl2hat or a2(2), got '" + s + "'");
  return *kind;
}

DecoratedPolytope complete(const LusztigDatum& d, Side side, Strategy strategy) {
  return side == Side::Left ? complete_from_left(d, strategy)
                            : complete_from_right(d, strategy);
}

// A polytope document as is, or a datum document completed from `side`.
DecoratedPolytope load_element(const Json& j, const std::string& side) {
  if (is_polytope_document(j)) return polytope_from_json(j);
  return complete(datum_from_json(j), parse_side(side), Strategy::PrunedSearch);
}

std::vector<std::string> split_words(const std::vector<std::string>& parts) {
  std::vector<std::string> out;
  for (const auto& p : parts) {
    std::istringstream ss(p);
    std::string token;
    while (ss >> token) out.push_back(token);
  }
  return out;
}

CrystalElement apply_token(const std::string& token, const CrystalElement& b) {
  auto lowered = [&](std::optional<CrystalElement> next) {
    if (!next) throw StepFailed("result is absent");
    return *next;
  };
  if (token == "e0") return e(0, b);
  if (token == "e1") return e(1, b);
  if (token == "e0*") return e_star(0, b);
  if (token == "e1*") return e_star(1, b);
  if (token == "f0") return lowered(f(0, b));
  if (token == "f1") return lowered(f(1, b));
  if (token == "f0*") return lowered(f_star(0, b));
  if (token == "f1*") return lowered(f_star(1, b));
  if (token == "s0") return saito(0, b);
  if (token == "s1") return saito(1, b);
  if (token == "s0*") return saito_star(0, b);
  if (token == "s1*") return saito_star(1, b);
  if (token == "star") return star(b);
  if (token == "tau") return tau(b);
  throw ParseError("unknown operator '" + token + "'");
}

struct Options {
  std::string input = "-";
  std::string side = "left";
  std::string strategy = "pruned";
  std::string algebra = "sl2hat";
  std::string verify_algebra = "both";
  std::string start;
  std::vector<std::string> word;
  int depth = -1;
  std::string format;
  std::string suite;
  std::vector<Int> box;
  int slack = 2;
  Int max_size = 6;
  bool json = false;
  bool vertices = true;
};

int cmd_complete(const Options& o, std::istream& in, std::ostream& out) {
  const LusztigDatum d = datum_from_json(parse_json(read_text(o.input, in)));
  Strategy strategy;
  if (o.strategy == "pruned") {
    strategy = Strategy::PrunedSearch;
  } else if (o.strategy == "generate") {
    strategy = Strategy::GenerateAndTest;
  } else {
    throw ParseError("strategy must be pruned or generate");
  }
  out << polytope_to_json(complete(d, parse_side(o.side), strategy), true)
             .dump(2)
      << "\n";
  return kOk;
}

int cmd_check(const Options& o, std::istream& in, std::ostream& out) {
  const DecoratedPolytope p =
      polytope_from_json(parse_json(read_text(o.input, in)));
  const Json doc = polytope_to_json(p, o.vertices);
  out << doc.dump(2) << "\n";
  return doc["mv"].get<bool>() ? kOk : kFailed;
}

int cmd_op(const Options& o, std::istream& in, std::ostream& out,
           std::ostream& err) {
  CrystalElement b = lowest(parse_kind(o.algebra));
  if (!o.start.empty()) {
    b = load_element(parse_json(read_text(o.start, in)), o.side);
    if (!is_mv(b).passed()) throw ParseError("start element is not MV");
  }
  const auto tokens = split_words(o.word);
  for (std::size_t n = 0; n < tokens.size(); ++n) {
    try {
      b = apply_token(tokens[n], b);
    } catch (const ParseError& e) {
      throw ParseError("token " + std::to_string(n + 1) + " ('" + tokens[n] +
                       "'): " + e.what());
    } catch (const InvariantBreach&) {
      throw;
    } catch (const Error& e) {
      err << "token " << n + 1 << " ('" << tokens[n] << "'): " << e.what()
          << "\n";
      return kFailed;
    }
  }
  out << polytope_to_json(b, false).dump(2) << "\n";
  return kOk;
}

int cmd_graph(const Options& o, std::ostream& out) {
  if (o.depth < 0) throw ParseError("--depth is required and must be >= 0");
  if (!o.format.empty() && o.format != "dot") {
    throw ParseError("graph format must be dot");
  }
  out << to_dot(crystal_graph(parse_kind(o.algebra), o.depth));
  return kOk;
}

int cmd_render(const Options& o, std::istream& in, std::ostream& out) {
  const DecoratedPolytope p =
      load_element(parse_json(read_text(o.input, in)), o.side);
  if (o.format == "svg" || o.format.empty()) {
    out << render_svg(p);
  } else if (o.format == "tikz") {
    out << render_tikz(p);
  } else {
    throw ParseError("render format must be svg or tikz");
  }
  return kOk;
}

int cmd_verify(const Options& o, std::ostream& out) {
  std::vector<AlgebraKind> kinds;
  if (o.verify_algebra == "both") {
    kinds.assign(std::begin(kAllKinds), std::end(kAllKinds));
  } else {
    kinds.push_back(parse_kind(o.verify_algebra));
  }
  if (!o.box.empty() && o.box.size() != 2) {
    throw ParseError("--box takes two integers");
  }
  std::vector<Report> reports;
  for (AlgebraKind kind : kinds) {
    const bool sl2 = kind == AlgebraKind::Sl2Hat;
    const RootVector box = o.box.empty() ? (sl2 ? RootVector{6, 6}
                                                : RootVector{4, 8})
                                         : RootVector{o.box[0], o.box[1]};
    auto depth_or = [&](int fallback) { return o.depth < 0 ? fallback : o.depth; };
    const std::string& s = o.suite;
    const bool all = s == "all";
    bool known = all;
    if (all || s == "uniqueness") {
      reports.push_back(check_uniqueness(kind, box));
      known = true;
    }
    if (all || s == "solvers") {
      reports.push_back(check_solver_equivalence(kind, box));
      known = true;
    }
    if (all || s == "axioms") {
      reports.push_back(check_axioms(kind, depth_or(sl2 ? 8 : 6), 6));
      known = true;
    }
    if (all || s == "trapezoids") {
      reports.push_back(check_trapezoids(kind, o.max_size));
      known = true;
    }
    if (all || s == "star") {
      reports.push_back(check_star_negation(kind, depth_or(8)));
      known = true;
    }
    if (all || s == "saito") {
      reports.push_back(check_saito_formulas(kind, depth_or(6), o.slack));
      known = true;
    }
    if (all || s == "crystal") {
      reports.push_back(check_crystal_axioms(kind, depth_or(8)));
      known = true;
    }
    if (!known) throw ParseError("unknown suite '" + s + "'");
  }
  bool passed = true;
  Json all_json = Json::array();
  for (const auto& r : reports) {
    passed = passed && r.passed();
    if (o.json) {
      all_json.push_back(report_to_json(r));
    } else {
      out << to_text(r);
    }
  }
  if (o.json) out << all_json.dump(2) << "\n";
  return passed ? kOk : kFailed;
}

}  // namespace

int run(const std::vector<std::string>& args, std::istream& in,
        std::ostream& out, std::ostream& err) {
  CLI::App app{"Affine rank-2 MV polytopes: transition map, crystal, checks"};
  app.name("mvpoly");
  app.require_subcommand(1);
  Options o;

  auto* complete_cmd =
      app.add_subcommand("complete", "complete a datum document to its MV polytope");
  complete_cmd->add_option("input", o.input, "datum document, - for stdin");
  complete_cmd->add_option("--side", o.side, "side the datum sits on")
      ->check(CLI::IsMember({"left", "right"}));
  complete_cmd->add_option("--strategy", o.strategy, "pruned or generate");

  auto* check_cmd = app.add_subcommand("check", "evaluate the MV conditions");
  check_cmd->add_option("input", o.input, "polytope document, - for stdin");

  auto* op_cmd = app.add_subcommand("op", "apply an operator word left to right");
  op_cmd->add_option("word", o.word,
                     "tokens from e0 e1 f0 f1 e0* e1* f0* f1* s0 s1 s0* s1* "
                     "star tau");
  op_cmd->add_option("--algebra", o.algebra, "sl2hat or a2(2)");
  op_cmd->add_option("--start", o.start,
                     "start element: polytope document, or datum with --side");
  op_cmd->add_option("--side", o.side, "side of a start datum");

  auto* graph_cmd = app.add_subcommand("graph", "crystal graph as DOT");
  graph_cmd->add_option("--algebra", o.algebra, "sl2hat or a2(2)");
  graph_cmd->add_option("--depth", o.depth, "operator applications")->required();
  graph_cmd->add_option("--format", o.format, "dot");

  auto* render_cmd = app.add_subcommand("render", "draw a polytope");
  render_cmd->add_option("input", o.input,
                         "polytope document, or datum with --side");
  render_cmd->add_option("--side", o.side, "side of a datum document");
  render_cmd->add_option("--format", o.format, "svg or tikz");

  auto* verify_cmd = app.add_subcommand("verify", "run a verification suite");
  verify_cmd
      ->add_option("suite", o.suite,
                   "uniqueness, solvers, axioms, trapezoids, star, saito, "
                   "crystal or all")
      ->required();
  verify_cmd->add_option("--algebra", o.verify_algebra, "sl2hat, a2(2) or both");
  verify_cmd->add_option("--depth", o.depth, "graph depth");
  verify_cmd->add_option("--box", o.box, "weight box a b")->expected(2);
  verify_cmd->add_option("--slack", o.slack, "extra N values for Saito formulas");
  verify_cmd->add_option("--max-size", o.max_size, "largest |lambda| for trapezoids");
  verify_cmd->add_flag("--json", o.json, "machine-readable report");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kOk : kUsage;
  }

  try {
    if (*complete_cmd) return cmd_complete(o, in, out);
    if (*check_cmd) return cmd_check(o, in, out);
    if (*op_cmd) return cmd_op(o, in, out, err);
    if (*graph_cmd) return cmd_graph(o, out);
    if (*render_cmd) return cmd_render(o, in, out);
    if (*verify_cmd) return cmd_verify(o, out);
  } catch (const ParseError& e) {
    err << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const InvariantBreach& e) {
    err << "internal invariant breach: " << e.what() << "\n";
    return kBreach;
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return kUsage;
  }
  return kUsage;
}

}  // namespace mvpoly::cli
