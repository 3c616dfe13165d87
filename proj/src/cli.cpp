#include "qfg/cli.hpp"

#include <CLI11.hpp>
#include <fstream>
#include <iterator>
#include <optional>
#include <sstream>

#include "qfg/error.hpp"
#include "qfg/families.hpp"
#include "qfg/io.hpp"
#include "qfg/primality.hpp"
#include "qfg/redsets.hpp"

namespace qfg::cli {

using nlohmann::json;

namespace {

std::string dump(const json& j) { return j.dump(2) + "\n"; }

int exit_code_of(Outcome o) {
  switch (o) {
    case Outcome::Prime: return kSuccess;
    case Outcome::NotPrime: return kNotPrime;
    case Outcome::Unknown: return kUnknown;
  }
  return kData;
}

std::vector<int> parse_int_list(const std::string& text) {
  std::vector<int> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    std::size_t used = 0;
    int v = 0;
    try {
      v = std::stoi(item, &used);
    } catch (const std::exception&) {
      throw Error(ErrorKind::SyntaxError, "bad integer list \"" + text + "\"");
    }
    if (used != item.size()) throw Error(ErrorKind::SyntaxError, "bad integer list \"" + text + "\"");
    out.push_back(v);
  }
  return out;
}

std::vector<SnakePoint> parse_points(const std::string& text) {
  std::vector<SnakePoint> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    const auto colon = item.find(':');
    if (colon == std::string::npos) throw Error(ErrorKind::SyntaxError, "snake point \"" + item + "\" lacks ':'");
    const auto pair = parse_int_list(item.substr(0, colon) + "," + item.substr(colon + 1));
    if (pair.size() != 2) throw Error(ErrorKind::SyntaxError, "bad snake point \"" + item + "\"");
    out.push_back({pair[0], pair[1]});
  }
  return out;
}

std::string read_all(std::istream& in) {
  return {std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
}

json verdict_block(const FactGraph& g, const ClassifyOptions& opts) {
  return verdict_to_json(classify(g, opts), g);
}

struct Shared {
  int rank = 0;
  std::string poly;
  bool json_out = false;
};

}  // namespace

RunResult run(const std::vector<std::string>& args, std::istream* in) {
  RunResult result;
  std::ostringstream out;

  CLI::App app{"q-factorization graphs and primality certificates for type A"};
  app.require_subcommand(1, 1);
  app.set_help_all_flag("--help-all");

  Shared sh;
  std::string level = "qfact";
  std::string graph_file;
  bool dot = false;
  bool hasse = false;
  bool serial = false;
  std::size_t cut_cap = CutRange::kDefaultCap;

  auto poly_arg = [&](CLI::App* sub) {
    sub->add_option("--rank", sh.rank, "Rank n of A_n")->required();
    sub->add_option("poly", sh.poly, "Factors color:center:length[@coset]; read from stdin if absent");
  };

  auto* factorize = app.add_subcommand("factorize", "Print the q-factorization");
  poly_arg(factorize);
  factorize->add_flag("--json", sh.json_out, "JSON output");

  auto* graph = app.add_subcommand("graph", "Print the q-factorization graph");
  poly_arg(graph);
  auto* json_flag = graph->add_flag("--json", sh.json_out, "JSON output (default)");
  auto* dot_flag = graph->add_flag("--dot", dot, "Graphviz output");
  graph->add_flag("--hasse", hasse, "Graphviz output of the Hasse diagram only")->excludes(json_flag);
  json_flag->excludes(dot_flag);

  auto* check = app.add_subcommand("check", "Validate the graph built from the given factors");
  check->add_option("--rank", sh.rank, "Rank n of A_n");
  check->add_option("poly", sh.poly, "Factors; read from stdin if absent");
  check->add_option("--graph", graph_file, "Graph JSON file ('-' for stdin) instead of a polynomial");
  check->add_option("--level", level, "prefact | pseudo | qfact")
      ->check(CLI::IsMember({"prefact", "pseudo", "qfact"}));

  auto* verdict = app.add_subcommand("verdict", "Classify the q-factorization graph");
  verdict->add_option("--rank", sh.rank, "Rank n of A_n");
  verdict->add_option("poly", sh.poly, "Factors; read from stdin if absent");
  verdict->add_option("--graph", graph_file, "Graph JSON file ('-' for stdin) instead of a polynomial");
  verdict->add_flag("--serial", serial, "Use the serial cut scan");
  verdict->add_option("--cut-cap", cut_cap, "Maximum vertex count for the cut scan");

  int ri = 0, rj = 0, rr = 0, rs = 0;
  std::vector<int> interval;
  auto* rset_cmd = app.add_subcommand("rset", "Print a reducibility set as JSON");
  rset_cmd->add_option("--rank", sh.rank, "Rank n of A_n")->required();
  rset_cmd->add_option("i", ri)->required();
  rset_cmd->add_option("j", rj)->required();
  rset_cmd->add_option("r", rr)->required();
  rset_cmd->add_option("s", rs)->required();
  rset_cmd->add_option("--interval", interval, "Restrict to the interval lo hi")->expected(2);

  std::string dual_kind;
  int shift_by = 0;
  auto* dual = app.add_subcommand("dual", "Apply a duality to a polynomial");
  dual->add_option("kind", dual_kind, "negate | sigma | star | kappa | shift")
      ->required()
      ->check(CLI::IsMember({"negate", "sigma", "star", "kappa", "shift"}));
  poly_arg(dual);
  dual->add_option("--by", shift_by, "Shift amount for 'shift'");
  dual->add_flag("--json", sh.json_out, "JSON output");

  auto* family = app.add_subcommand("family", "Generate a family example");
  family->require_subcommand(1, 1);
  bool poly_only = false;
  int count = 0;
  int family_rank = 0;
  auto* tour = family->add_subcommand("tournament", "Tournament family");
  tour->add_option("--N", count, "Number of vertices")->required();
  tour->add_option("--n", family_rank, "Rank")->required();
  tour->add_flag("--poly-only", poly_only, "Print only the polynomial");
  std::string points;
  auto* snake = family->add_subcommand("snake", "Snake given as i:m,i:m,...");
  snake->add_option("--points", points)->required();
  snake->add_option("--rank,--n", family_rank, "Rank")->required();
  snake->add_flag("--poly-only", poly_only, "Print only the polynomial");
  std::string lambda, mu;
  auto* skew = family->add_subcommand("skew", "Skew-diagram polynomial");
  skew->add_option("--lambda", lambda, "Comma-separated parts")->required();
  skew->add_option("--mu", mu, "Comma-separated parts");
  skew->add_option("--rank,--n", family_rank, "Rank")->required();
  skew->add_flag("--poly-only", poly_only, "Print only the polynomial");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    std::ostringstream err;
    const int code = app.exit(e, out, err);
    result.out = out.str();
    result.err = err.str();
    result.exit_code = code == 0 ? kSuccess : kUsage;
    return result;
  }

  auto input_text = [&]() -> std::string {
    if (!sh.poly.empty() || in == nullptr) return sh.poly;
    return read_all(*in);
  };
  auto require_rank = [&](CLI::App* sub) {
    if (sh.rank == 0) throw CLI::RequiredError::Option(1, 1, 0, "--rank");
    (void)sub;
    return DynkinA(sh.rank);
  };
  auto load_graph_file = [&]() {
    std::string text;
    if (graph_file == "-") {
      if (in == nullptr) throw Error(ErrorKind::SyntaxError, "no stdin available");
      text = read_all(*in);
    } else {
      std::ifstream f(graph_file);
      if (!f) throw Error(ErrorKind::SyntaxError, "cannot open " + graph_file);
      text = read_all(f);
    }
    try {
      return graph_from_json(json::parse(text));
    } catch (const json::exception& e) {
      throw Error(ErrorKind::SyntaxError, e.what());
    }
  };

  try {
    ClassifyOptions opts;
    opts.cut_cap = cut_cap;
    opts.parallel = !serial;

    if (*factorize) {
      const DynkinA g(sh.rank);
      const auto q = q_factorize(parse_poly(input_text(), g));
      out << (sh.json_out ? dump(poly_to_json(q)) : format_poly(q) + "\n");
    } else if (*graph) {
      const DynkinA g(sh.rank);
      const auto fg = build_graph(q_factorize(parse_poly(input_text(), g)));
      if (dot || hasse) {
        out << graph_to_dot(fg, hasse);
      } else {
        out << dump(graph_to_json(fg));
      }
    } else if (*check) {
      const FactGraph fg = graph_file.empty() ? build_graph(parse_poly(input_text(), require_rank(check)))
                                              : load_graph_file();
      const Level lv = level == "prefact" ? Level::Prefact : level == "pseudo" ? Level::Pseudo : Level::QFact;
      const auto report = validate(fg, lv);
      json j{{"ok", report.ok}, {"level", level}};
      if (!report.ok) {
        j["failed_at"] = report.failed_at == Level::Prefact  ? "prefact"
                         : report.failed_at == Level::Pseudo ? "pseudo"
                                                             : "qfact";
        j["message"] = report.message;
        if (report.witness) j["witness"] = {report.witness->first, report.witness->second};
      }
      out << dump(j);
      result.exit_code = report.ok ? kSuccess : kNotPrime;
    } else if (*verdict) {
      const FactGraph fg = graph_file.empty()
                               ? build_graph(q_factorize(parse_poly(input_text(), require_rank(verdict))))
                               : load_graph_file();
      const auto v = classify(fg, opts);
      out << dump(verdict_to_json(v, fg));
      result.exit_code = exit_code_of(v.outcome);
    } else if (*rset_cmd) {
      const DynkinA g(sh.rank);
      const RSet set = interval.empty() ? rset(g, ri, rj, rr, rs)
                                        : rset_restricted(g, ri, rj, rr, rs, g.interval(interval[0], interval[1]));
      out << json(set.members()).dump() << "\n";
    } else if (*dual) {
      const DynkinA g(sh.rank);
      const auto p = parse_poly(input_text(), g);
      DrinfeldPoly d = dual_kind == "negate"  ? dual_negate(p)
                       : dual_kind == "sigma" ? dual_sigma(p)
                       : dual_kind == "star"  ? dual_star(p)
                       : dual_kind == "kappa" ? dual_kappa(p)
                                              : shift(p, shift_by);
      out << (sh.json_out ? dump(poly_to_json(d)) : format_poly(d) + "\n");
    } else if (*family) {
      json j;
      DrinfeldPoly p(DynkinA(1));
      if (*tour) {
        p = tournament_family(count, family_rank);
      } else if (*snake) {
        const Snake s{DynkinA(family_rank), parse_points(points)};
        p = snake_to_poly(s);
        j["is_snake"] = is_snake(s);
        j["is_prime_snake"] = is_prime_snake(s);
      } else {
        const SkewShape shape{parse_int_list(lambda), mu.empty() ? std::vector<int>{} : parse_int_list(mu),
                              family_rank};
        const auto sp = skew_to_poly(shape);
        p = sp.polynomial;
        j["nu"] = skew_nu_table(shape);
        json table = json::array();
        for (const auto& row : sp.table) {
          json r = json::array();
          for (const auto& c : row) r.push_back({{"exp", c.exponent}, {"len", c.length}});
          table.push_back(r);
        }
        j["table"] = table;
      }
      if (poly_only) {
        out << format_poly(p) << "\n";
      } else {
        const auto fg = build_graph(q_factorize(p));
        j["polynomial"] = format_poly(p);
        j["graph"] = graph_to_json(fg);
        j["verdict"] = verdict_block(fg, opts);
        if (!is_connected(fg)) {
          json comps = json::array();
          for (const auto& c : connected_components(fg)) comps.push_back(verdict_block(c, opts));
          j["component_verdicts"] = comps;
        }
        out << dump(j);
      }
    }
  } catch (const CLI::ParseError& e) {
    result.err = std::string(e.what()) + "\n";
    result.exit_code = kUsage;
    return result;
  } catch (const Error& e) {
    result.err = std::string(e.what()) + "\n";
    result.exit_code = kData;
    return result;
  }
  result.out = out.str();
  return result;
}

}  // namespace qfg::cli
