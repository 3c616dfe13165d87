#include "qfg/io.hpp"

#include <cctype>
#include <charconv>
#include <sstream>

#include "qfg/error.hpp"

namespace qfg {

using nlohmann::json;

namespace {

[[noreturn]] void syntax(std::size_t pos, const std::string& what) {
  throw Error(ErrorKind::SyntaxError, "at offset " + std::to_string(pos) + ": " + what);
}

int parse_int(std::string_view text, std::size_t& pos, std::size_t base) {
  const char* first = text.data() + pos;
  const char* last = text.data() + text.size();
  int value = 0;
  auto [ptr, ec] = std::from_chars(first, last, value);
  if (ec != std::errc()) syntax(base + pos, "expected integer");
  pos = static_cast<std::size_t>(ptr - text.data());
  return value;
}

void expect(std::string_view text, std::size_t& pos, char c, std::size_t base) {
  if (pos >= text.size() || text[pos] != c) syntax(base + pos, std::string("expected '") + c + "'");
  ++pos;
}

KRFactor parse_token(std::string_view token, std::size_t base) {
  std::size_t pos = 0;
  KRFactor f;
  f.color = parse_int(token, pos, base);
  expect(token, pos, ':', base);
  f.center = parse_int(token, pos, base);
  expect(token, pos, ':', base);
  f.length = parse_int(token, pos, base);
  if (pos < token.size() && token[pos] == '@') {
    ++pos;
    f.coset = parse_int(token, pos, base);
  }
  if (pos != token.size()) syntax(base + pos, "trailing characters in token");
  return f;
}

int get_int(const json& j, const char* key, std::optional<int> fallback = std::nullopt) {
  if (!j.contains(key)) {
    if (fallback) return *fallback;
    throw Error(ErrorKind::SyntaxError, std::string("missing key \"") + key + "\"");
  }
  if (!j.at(key).is_number_integer()) {
    throw Error(ErrorKind::SyntaxError, std::string("key \"") + key + "\" must be an integer");
  }
  return j.at(key).get<int>();
}

json ids_json(const std::vector<VertexId>& ids) { return json(ids); }

}  // namespace

DrinfeldPoly parse_poly(std::string_view text, const DynkinA& rank) {
  DrinfeldPoly p(rank);
  std::size_t pos = 0;
  while (pos < text.size()) {
    while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
    if (pos >= text.size()) break;
    const std::size_t start = pos;
    while (pos < text.size() && !std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
    p.add(parse_token(text.substr(start, pos - start), start));
  }
  return p;
}

std::string format_poly(const DrinfeldPoly& p) {
  std::ostringstream os;
  bool first = true;
  for (const auto& f : p.factors()) {
    if (!first) os << ' ';
    first = false;
    os << f.color << ':' << f.center << ':' << f.length;
    if (f.coset != 0) os << '@' << f.coset;
  }
  return os.str();
}

json poly_to_json(const DrinfeldPoly& p) {
  json arr = json::array();
  for (const auto& f : p.factors()) {
    arr.push_back({{"color", f.color}, {"center", f.center}, {"length", f.length}, {"coset", f.coset}});
  }
  return arr;
}

DrinfeldPoly poly_from_json(const json& j, const DynkinA& rank) {
  if (!j.is_array()) throw Error(ErrorKind::SyntaxError, "polynomial JSON must be an array");
  DrinfeldPoly p(rank);
  for (const auto& f : j) {
    p.add({get_int(f, "color"), get_int(f, "center"), get_int(f, "length"), get_int(f, "coset", 0)});
  }
  return p;
}

json graph_to_json(const FactGraph& g) {
  json vs = json::array();
  for (const auto& v : g.vertices()) {
    vs.push_back({{"id", v.id},
                  {"color", v.color},
                  {"center", v.center},
                  {"weight", v.weight},
                  {"coset", v.coset}});
  }
  json as = json::array();
  for (const auto& a : g.arrows()) as.push_back({{"tail", a.tail}, {"head", a.head}, {"exp", a.exponent}});
  return {{"rank", g.rank().rank()}, {"vertices", vs}, {"arrows", as}};
}

FactGraph graph_from_json(const json& j) {
  if (!j.is_object()) throw Error(ErrorKind::SyntaxError, "graph JSON must be an object");
  const DynkinA rank(get_int(j, "rank"));
  std::vector<Vertex> vs;
  for (const auto& v : j.value("vertices", json::array())) {
    vs.push_back({get_int(v, "id"), get_int(v, "color"), get_int(v, "center"), get_int(v, "weight"),
                  get_int(v, "coset", 0)});
  }
  std::vector<Arrow> as;
  for (const auto& a : j.value("arrows", json::array())) {
    as.push_back({get_int(a, "tail"), get_int(a, "head"), get_int(a, "exp")});
  }
  return FactGraph(rank, std::move(vs), std::move(as));
}

std::string graph_to_dot(const FactGraph& g, bool hasse) {
  std::ostringstream os;
  os << "digraph G {\n";
  for (const auto& v : g.vertices()) {
    os << "  v" << v.id << " [label=\"" << v.weight << "/" << v.color << "\"];\n";
  }
  const auto arrows = hasse ? transitive_reduction(g) : g.arrows();
  for (const auto& a : arrows) {
    os << "  v" << a.tail << " -> v" << a.head << " [label=\"" << a.exponent << "\"];\n";
  }
  os << "}\n";
  return os.str();
}

json verdict_to_json(const Verdict& v, const FactGraph& g) {
  json out;
  out["outcome"] = std::string(to_string(v.outcome));
  if (v.certificate) out["certificate"] = std::string(to_string(*v.certificate));
  if (v.outcome == Outcome::Prime) {
    json also = json::array();
    for (auto c : prime_certificates(g)) also.push_back(std::string(to_string(c)));
    out["certified_by"] = also;
  }
  if (!v.witness.empty()) {
    json parts = json::array();
    for (const auto& p : v.witness) {
      parts.push_back({{"vertices", ids_json(p.vertices)}, {"polynomial", format_poly(p.polynomial)}});
    }
    out["witness"] = parts;
  }
  if (!v.report.empty()) {
    json cuts = json::array();
    for (const auto& c : v.report) {
      json entry{{"left", ids_json(c.cut.left)},
                 {"right", ids_json(c.cut.right)},
                 {"status", std::string(to_string(c.status))}};
      if (c.extremal) entry["extremal"] = {c.extremal->left, c.extremal->right};
      if (c.dual) {
        entry["dual"] = {{"condition", c.dual->condition},
                         {"left_base", c.dual->left_base},
                         {"right_base", c.dual->right_base}};
      }
      cuts.push_back(entry);
    }
    out["report"] = cuts;
  }
  return out;
}

}  // namespace qfg
