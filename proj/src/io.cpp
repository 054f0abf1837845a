#include "nlgraph/io.hpp"

#include <cctype>
#include <fstream>
#include <sstream>

#include <json.hpp>

#include "nlgraph/error.hpp"

namespace nlgraph {

using nlohmann::json;

namespace {

struct Line {
  std::size_t number;
  std::vector<std::string> tokens;
};

// Splits into nonblank lines of whitespace-separated tokens, comments removed.
std::vector<Line> tokenize(std::string_view text) {
  std::vector<Line> out;
  std::size_t number = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    std::size_t end = text.find('\n', pos);
    if (end == std::string_view::npos) end = text.size();
    std::string_view raw = text.substr(pos, end - pos);
    ++number;
    if (auto hash = raw.find('#'); hash != std::string_view::npos) raw = raw.substr(0, hash);
    std::istringstream is{std::string(raw)};
    Line line{number, {}};
    for (std::string tok; is >> tok;) line.tokens.push_back(tok);
    if (!line.tokens.empty()) out.push_back(std::move(line));
    pos = end + 1;
  }
  return out;
}

VertexId vertex_token(const Line& line, const std::string& tok) {
  if (!is_plain_identifier(tok)) throw ParseError(line.number, "bad identifier '" + tok + "'");
  return VertexId(tok);
}

DartId dart_token(const Line& line, const std::string& tok) {
  const std::string_view body = (!tok.empty() && tok.front() == kReverseMarker) ? std::string_view(tok).substr(1) : tok;
  if (!is_plain_identifier(body)) throw ParseError(line.number, "bad dart identifier '" + tok + "'");
  return DartId(tok);
}

void expect_arity(const Line& line, std::size_t n) {
  if (line.tokens.size() != n) {
    throw ParseError(line.number, "'" + line.tokens[0] + "' expects " + std::to_string(n - 1) + " arguments");
  }
}

Integer parse_integer(const Line& line, const std::string& tok) {
  if (tok.empty() || !std::all_of(tok.begin(), tok.end(), [](char c) { return std::isdigit(static_cast<unsigned char>(c)); })) {
    throw ParseError(line.number, "bad integer '" + tok + "'");
  }
  return Integer(tok);
}

std::string integer_string(const Integer& i) {
  std::ostringstream os;
  os << i;
  return os.str();
}

struct PendingEdge {
  std::size_t line;
  std::string name;
  VertexId from, to;
};

GraphDocument build_document(std::vector<std::pair<std::size_t, std::pair<VertexId, std::string>>> vertices,
                             std::map<VertexId, Integer> multiplicity, std::vector<PendingEdge> edges,
                             int version) {
  GraphDocument doc;
  doc.version = version;
  for (auto& [line, vl] : vertices) {
    if (doc.graph.has_vertex(vl.first)) throw ParseError(line, "duplicate vertex '" + vl.first.value + "'");
    doc.graph.add_vertex(vl.first, vl.second);
  }
  for (const auto& e : edges) {
    if (!doc.graph.has_vertex(e.from)) throw ParseError(e.line, "edge '" + e.name + "' uses undeclared vertex '" + e.from.value + "'");
    if (!doc.graph.has_vertex(e.to)) throw ParseError(e.line, "edge '" + e.name + "' uses undeclared vertex '" + e.to.value + "'");
    if (doc.graph.has_dart(forward_dart(e.name))) throw ParseError(e.line, "duplicate edge '" + e.name + "'");
    doc.graph.add_edge(e.name, e.from, e.to);
  }
  doc.multiplicity = std::move(multiplicity);
  return doc;
}

}  // namespace

bool GraphDocument::has_all_multiplicities() const {
  for (const auto& [v, l] : graph.vertices()) {
    if (!multiplicity.contains(v)) return false;
  }
  return true;
}

DivisorConfig GraphDocument::to_config() const { return make_config(graph, multiplicity); }

GraphDocument parse_graph(std::string_view text) {
  for (char c : text) {
    if (std::isspace(static_cast<unsigned char>(c))) continue;
    return c == '{' ? parse_graph_json(text) : parse_graph_text(text);
  }
  return parse_graph_text(text);
}

GraphDocument parse_graph_text(std::string_view text) {
  std::vector<std::pair<std::size_t, std::pair<VertexId, std::string>>> vertices;
  std::map<VertexId, Integer> mult;
  std::vector<PendingEdge> edges;
  int version = kFormatVersion;
  bool first = true;
  for (const Line& line : tokenize(text)) {
    const std::string& kw = line.tokens[0];
    if (kw == "nlgraph") {
      if (!first) throw ParseError(line.number, "header must come first");
      expect_arity(line, 2);
      if (line.tokens[1] != "1") throw ParseError(line.number, "unsupported format version '" + line.tokens[1] + "'");
      version = 1;
    } else if (kw == "v") {
      if (line.tokens.size() < 2) throw ParseError(line.number, "'v' expects an identifier");
      const VertexId id = vertex_token(line, line.tokens[1]);
      std::string label;
      for (std::size_t i = 2; i < line.tokens.size(); ++i) {
        const std::string& opt = line.tokens[i];
        if (opt.starts_with("label=")) {
          label = opt.substr(6);
        } else if (opt.starts_with("mult=")) {
          const Integer b = parse_integer(line, opt.substr(5));
          if (b < 1) throw ParseError(line.number, "multiplicity must be at least 1");
          mult[id] = b;
        } else {
          throw ParseError(line.number, "unknown vertex attribute '" + opt + "'");
        }
      }
      vertices.push_back({line.number, {id, label}});
    } else if (kw == "e") {
      expect_arity(line, 4);
      if (!is_plain_identifier(line.tokens[1])) throw ParseError(line.number, "bad identifier '" + line.tokens[1] + "'");
      edges.push_back({line.number, line.tokens[1], vertex_token(line, line.tokens[2]), vertex_token(line, line.tokens[3])});
    } else {
      throw ParseError(line.number, "unknown declaration '" + kw + "'");
    }
    first = false;
  }
  GraphDocument doc = build_document(std::move(vertices), std::move(mult), std::move(edges), version);
  if (doc.graph.vertex_count() == 0) throw ParseError(0, "graph declares no vertices");
  return doc;
}

GraphDocument parse_graph_json(std::string_view text) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::parse_error& e) {
    throw ParseError(0, std::string("invalid JSON: ") + e.what());
  }
  try {
    std::vector<std::pair<std::size_t, std::pair<VertexId, std::string>>> vertices;
    std::map<VertexId, Integer> mult;
    std::vector<PendingEdge> edges;
    const int version = j.value("version", kFormatVersion);
    if (version != kFormatVersion) throw ParseError(0, "unsupported format version");
    for (const auto& v : j.at("vertices")) {
      const std::string id = v.at("id").get<std::string>();
      if (!is_plain_identifier(id)) throw ParseError(0, "bad identifier '" + id + "'");
      vertices.push_back({0, {VertexId(id), v.value("label", std::string())}});
      if (v.contains("mult")) {
        const auto& m = v.at("mult");
        Integer b = m.is_string() ? Integer(m.get<std::string>()) : Integer(m.get<std::int64_t>());
        if (b < 1) throw ParseError(0, "multiplicity must be at least 1");
        mult[VertexId(id)] = b;
      }
    }
    for (const auto& e : j.value("edges", json::array())) {
      const std::string id = e.at("id").get<std::string>();
      if (!is_plain_identifier(id)) throw ParseError(0, "bad identifier '" + id + "'");
      edges.push_back({0, id, VertexId(e.at("from").get<std::string>()), VertexId(e.at("to").get<std::string>())});
    }
    GraphDocument doc = build_document(std::move(vertices), std::move(mult), std::move(edges), version);
    if (doc.graph.vertex_count() == 0) throw ParseError(0, "graph declares no vertices");
    return doc;
  } catch (const json::exception& e) {
    throw ParseError(0, std::string("malformed graph document: ") + e.what());
  }
}

namespace {

struct EdgeLine {
  std::string name;
  VertexId from, to;
};

std::vector<EdgeLine> conventional_edges(const SerreGraph& g) {
  std::vector<EdgeLine> out;
  for (const auto& [d, rec] : g.darts()) {
    if (d.value.front() == kReverseMarker) continue;
    const DartId rd = g.reverse(d);
    if (rd != conventional_reverse(d) || !is_plain_identifier(d.value)) {
      throw Error("dart '" + d.value + "' does not follow the x / ~x naming; cannot serialize");
    }
    out.push_back({d.value, g.endpoint(d), g.endpoint(rd)});
  }
  if (out.size() * 2 != g.dart_count()) throw Error("graph has darts without a plain partner; cannot serialize");
  return out;
}

}  // namespace

std::string format_graph(const SerreGraph& g, const std::map<VertexId, Integer>& multiplicity) {
  std::ostringstream os;
  os << "nlgraph " << kFormatVersion << "\n";
  for (const auto& [v, label] : g.vertices()) {
    os << "v " << v;
    if (!label.empty()) os << " label=" << label;
    if (auto it = multiplicity.find(v); it != multiplicity.end()) os << " mult=" << it->second;
    os << "\n";
  }
  for (const auto& e : conventional_edges(g)) os << "e " << e.name << ' ' << e.from << ' ' << e.to << "\n";
  return os.str();
}

std::string format_graph_json(const SerreGraph& g, const std::map<VertexId, Integer>& multiplicity) {
  json j;
  j["format"] = "nlgraph";
  j["version"] = kFormatVersion;
  j["vertices"] = json::array();
  for (const auto& [v, label] : g.vertices()) {
    json jv{{"id", v.value}};
    if (!label.empty()) jv["label"] = label;
    if (auto it = multiplicity.find(v); it != multiplicity.end()) jv["mult"] = integer_string(it->second);
    j["vertices"].push_back(jv);
  }
  j["edges"] = json::array();
  for (const auto& e : conventional_edges(g)) {
    j["edges"].push_back({{"id", e.name}, {"from", e.from.value}, {"to", e.to.value}});
  }
  return j.dump(2) + "\n";
}

std::string format_config(const DivisorConfig& cfg) { return format_graph(cfg.graph, cfg.multiplicity); }

// ---------------------------------------------------------------------------
// Scripts and certificates

namespace {

// Parses step lines starting at `i`; stops at a line whose keyword is in `stop`.
std::vector<Modification> parse_steps(const std::vector<Line>& lines, std::size_t& i,
                                      const std::vector<std::string>& stop) {
  std::vector<Modification> out;
  while (i < lines.size()) {
    const Line& line = lines[i];
    const std::string& kw = line.tokens[0];
    if (std::find(stop.begin(), stop.end(), kw) != stop.end()) break;
    if (kw == "expand") {
      expect_arity(line, 4);
      if (!is_plain_identifier(line.tokens[3])) throw ParseError(line.number, "bad edge identifier '" + line.tokens[3] + "'");
      out.push_back(Expansion{vertex_token(line, line.tokens[1]), vertex_token(line, line.tokens[2]), line.tokens[3]});
      ++i;
    } else if (kw == "subdivide") {
      expect_arity(line, 5);
      for (int k : {3, 4}) {
        if (!is_plain_identifier(line.tokens[k])) throw ParseError(line.number, "bad edge identifier '" + line.tokens[k] + "'");
      }
      out.push_back(Subdivision{dart_token(line, line.tokens[1]), vertex_token(line, line.tokens[2]), line.tokens[3],
                                line.tokens[4]});
      ++i;
    } else if (kw == "relabel") {
      expect_arity(line, 1);
      Relabeling r;
      ++i;
      for (;; ++i) {
        if (i >= lines.size()) throw ParseError(line.number, "'relabel' block without 'end'");
        const Line& inner = lines[i];
        if (inner.tokens[0] == "end") {
          expect_arity(inner, 1);
          ++i;
          break;
        }
        if (inner.tokens[0] == "vertex") {
          expect_arity(inner, 3);
          if (!r.map.vertices.emplace(vertex_token(inner, inner.tokens[1]), vertex_token(inner, inner.tokens[2])).second) {
            throw ParseError(inner.number, "vertex '" + inner.tokens[1] + "' relabeled twice");
          }
        } else if (inner.tokens[0] == "dart") {
          expect_arity(inner, 3);
          if (!r.map.darts.emplace(dart_token(inner, inner.tokens[1]), dart_token(inner, inner.tokens[2])).second) {
            throw ParseError(inner.number, "dart '" + inner.tokens[1] + "' relabeled twice");
          }
        } else {
          throw ParseError(inner.number, "expected 'vertex', 'dart' or 'end'");
        }
      }
      out.push_back(std::move(r));
    } else {
      throw ParseError(line.number, "unknown step '" + kw + "'");
    }
  }
  return out;
}

void format_map_lines(std::ostringstream& os, const GraphIsomorphism& m, const char* indent) {
  for (const auto& [a, b] : m.vertices) os << indent << "vertex " << a << ' ' << b << "\n";
  for (const auto& [a, b] : m.darts) os << indent << "dart " << a << ' ' << b << "\n";
}

void format_steps(std::ostringstream& os, const std::vector<Modification>& steps) {
  for (const auto& m : steps) {
    if (const auto* e = std::get_if<Expansion>(&m)) {
      os << "expand " << e->at << ' ' << e->new_vertex << ' ' << e->new_edge << "\n";
    } else if (const auto* s = std::get_if<Subdivision>(&m)) {
      os << "subdivide " << s->dart << ' ' << s->new_vertex << ' ' << s->first_edge << ' ' << s->second_edge << "\n";
    } else {
      os << "relabel\n";
      format_map_lines(os, std::get<Relabeling>(m).map, "  ");
      os << "end\n";
    }
  }
}

json map_json(const GraphIsomorphism& m) {
  json j{{"vertices", json::object()}, {"darts", json::object()}};
  for (const auto& [a, b] : m.vertices) j["vertices"][a.value] = b.value;
  for (const auto& [a, b] : m.darts) j["darts"][a.value] = b.value;
  return j;
}

json steps_json(const std::vector<Modification>& steps) {
  json out = json::array();
  for (const auto& m : steps) {
    if (const auto* e = std::get_if<Expansion>(&m)) {
      out.push_back({{"op", "expand"}, {"at", e->at.value}, {"new_vertex", e->new_vertex.value}, {"new_edge", e->new_edge}});
    } else if (const auto* s = std::get_if<Subdivision>(&m)) {
      out.push_back({{"op", "subdivide"},
                     {"dart", s->dart.value},
                     {"new_vertex", s->new_vertex.value},
                     {"edges", {s->first_edge, s->second_edge}}});
    } else {
      json r = map_json(std::get<Relabeling>(m).map);
      r["op"] = "relabel";
      out.push_back(r);
    }
  }
  return out;
}

GraphIsomorphism map_from_json(const json& j) {
  GraphIsomorphism m;
  for (const auto& [a, b] : j.at("vertices").items()) m.vertices.emplace(VertexId(a), VertexId(b.get<std::string>()));
  for (const auto& [a, b] : j.at("darts").items()) m.darts.emplace(DartId(a), DartId(b.get<std::string>()));
  return m;
}

std::vector<Modification> steps_from_json(const json& arr) {
  std::vector<Modification> out;
  for (const auto& s : arr) {
    const std::string op = s.at("op").get<std::string>();
    if (op == "expand") {
      out.push_back(Expansion{VertexId(s.at("at").get<std::string>()), VertexId(s.at("new_vertex").get<std::string>()),
                              s.at("new_edge").get<std::string>()});
    } else if (op == "subdivide") {
      out.push_back(Subdivision{DartId(s.at("dart").get<std::string>()), VertexId(s.at("new_vertex").get<std::string>()),
                                s.at("edges").at(0).get<std::string>(), s.at("edges").at(1).get<std::string>()});
    } else if (op == "relabel") {
      out.push_back(Relabeling{map_from_json(s)});
    } else {
      throw ParseError(0, "unknown step '" + op + "'");
    }
  }
  return out;
}

}  // namespace

std::vector<Modification> parse_script(std::string_view text) {
  const auto lines = tokenize(text);
  std::size_t i = 0;
  if (i < lines.size() && lines[i].tokens[0] == "nlgraph-script") {
    expect_arity(lines[i], 2);
    ++i;
  }
  auto steps = parse_steps(lines, i, {});
  return steps;
}

std::string format_script(const std::vector<Modification>& steps) {
  std::ostringstream os;
  os << "nlgraph-script " << kFormatVersion << "\n";
  format_steps(os, steps);
  return os.str();
}

EquivalenceCertificate parse_certificate(std::string_view text) {
  if (auto first = text.find_first_not_of(" \t\r\n"); first != std::string_view::npos && text[first] == '{') {
    try {
      const json j = json::parse(text);
      return EquivalenceCertificate{steps_from_json(j.at("seq1")), steps_from_json(j.at("seq2")), map_from_json(j.at("final"))};
    } catch (const json::exception& e) {
      throw ParseError(0, std::string("malformed certificate: ") + e.what());
    }
  }
  const auto lines = tokenize(text);
  std::size_t i = 0;
  if (i >= lines.size() || lines[i].tokens[0] != "nlgraph-certificate") {
    throw ParseError(lines.empty() ? 0 : lines[0].number, "expected 'nlgraph-certificate' header");
  }
  expect_arity(lines[i], 2);
  ++i;
  EquivalenceCertificate cert;
  auto expect = [&](const char* kw, const char* arg) {
    if (i >= lines.size()) throw ParseError(0, std::string("missing '") + kw + "'");
    const Line& line = lines[i];
    if (line.tokens[0] != kw || (arg ? line.tokens.size() != 2 || line.tokens[1] != arg : line.tokens.size() != 1)) {
      throw ParseError(line.number, std::string("expected '") + kw + (arg ? std::string(" ") + arg : "") + "'");
    }
    ++i;
  };
  expect("side", "1");
  cert.seq1 = parse_steps(lines, i, {"side"});
  expect("side", "2");
  cert.seq2 = parse_steps(lines, i, {"final"});
  expect("final", nullptr);
  for (; i < lines.size(); ++i) {
    const Line& line = lines[i];
    expect_arity(line, 3);
    if (line.tokens[0] == "vertex") {
      if (!cert.final_iso.vertices.emplace(vertex_token(line, line.tokens[1]), vertex_token(line, line.tokens[2])).second) {
        throw ParseError(line.number, "vertex mapped twice");
      }
    } else if (line.tokens[0] == "dart") {
      if (!cert.final_iso.darts.emplace(dart_token(line, line.tokens[1]), dart_token(line, line.tokens[2])).second) {
        throw ParseError(line.number, "dart mapped twice");
      }
    } else {
      throw ParseError(line.number, "expected 'vertex' or 'dart'");
    }
  }
  return cert;
}

std::string format_certificate(const EquivalenceCertificate& cert) {
  std::ostringstream os;
  os << "nlgraph-certificate " << kFormatVersion << "\n";
  os << "side 1\n";
  format_steps(os, cert.seq1);
  os << "side 2\n";
  format_steps(os, cert.seq2);
  os << "final\n";
  format_map_lines(os, cert.final_iso, "");
  return os.str();
}

std::string format_certificate_json(const EquivalenceCertificate& cert) {
  json j;
  j["format"] = "nlgraph-certificate";
  j["version"] = kFormatVersion;
  j["seq1"] = steps_json(cert.seq1);
  j["seq2"] = steps_json(cert.seq2);
  j["final"] = map_json(cert.final_iso);
  return j.dump(2) + "\n";
}

std::string format_isomorphism(const GraphIsomorphism& m) {
  std::ostringstream os;
  format_map_lines(os, m, "");
  return os.str();
}

std::vector<BlowUpStep> parse_blow_up_script(std::string_view text) {
  std::vector<BlowUpStep> out;
  for (const Line& line : tokenize(text)) {
    if (line.tokens[0] == "free") {
      expect_arity(line, 2);
      out.push_back(FreeBlowUp{vertex_token(line, line.tokens[1])});
    } else if (line.tokens[0] == "satellite") {
      expect_arity(line, 3);
      out.push_back(SatelliteBlowUp{vertex_token(line, line.tokens[1]), vertex_token(line, line.tokens[2])});
    } else {
      throw ParseError(line.number, "expected 'free' or 'satellite'");
    }
  }
  return out;
}

// ---------------------------------------------------------------------------
// Numbers and polynomials

namespace {

class PolyParser {
 public:
  explicit PolyParser(std::string_view s) : s_(s) {}

  struct Term {
    Rational coeff = 1;
    std::map<std::size_t, std::uint32_t> powers;  // 0-based variable -> exponent
  };

  std::vector<Term> parse() {
    std::vector<Term> terms;
    skip();
    bool negative = false;
    if (peek() == '+' || peek() == '-') negative = get() == '-';
    for (;;) {
      Term t = term();
      if (negative) t.coeff = -t.coeff;
      terms.push_back(std::move(t));
      skip();
      if (at_end()) break;
      const char op = get();
      if (op != '+' && op != '-') fail("expected '+' or '-'");
      negative = op == '-';
    }
    return terms;
  }

 private:
  Term term() {
    Term t;
    for (;;) {
      skip();
      if (peek() == 'x') {
        ++pos_;
        const std::size_t var = number("variable index");
        if (var == 0) fail("variables are numbered from x1");
        std::uint32_t e = 1;
        skip();
        if (peek() == '^') {
          ++pos_;
          skip();
          e = static_cast<std::uint32_t>(number("exponent"));
        }
        t.powers[var - 1] += e;
      } else if (std::isdigit(static_cast<unsigned char>(peek()))) {
        std::size_t start = pos_;
        while (std::isdigit(static_cast<unsigned char>(peek()))) ++pos_;
        std::string num(s_.substr(start, pos_ - start));
        skip();
        if (peek() == '/') {
          ++pos_;
          skip();
          start = pos_;
          while (std::isdigit(static_cast<unsigned char>(peek()))) ++pos_;
          if (start == pos_) fail("expected denominator");
          const Integer den(std::string(s_.substr(start, pos_ - start)));
          if (den == 0) fail("zero denominator");
          t.coeff *= Rational(Integer(num), den);
        } else {
          t.coeff *= Rational(Integer(num));
        }
      } else {
        fail("expected a number or a variable");
      }
      skip();
      if (peek() != '*') return t;
      ++pos_;
    }
  }

  std::size_t number(const char* what) {
    const std::size_t start = pos_;
    while (std::isdigit(static_cast<unsigned char>(peek()))) ++pos_;
    if (start == pos_) fail(std::string("expected ") + what);
    return std::stoul(std::string(s_.substr(start, pos_ - start)));
  }

  void skip() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }
  bool at_end() const { return pos_ >= s_.size(); }
  char peek() const { return at_end() ? '\0' : s_[pos_]; }
  char get() { return at_end() ? '\0' : s_[pos_++]; }
  [[noreturn]] void fail(const std::string& what) const {
    throw ParseError(0, "polynomial, column " + std::to_string(pos_ + 1) + ": " + what);
  }

  std::string_view s_;
  std::size_t pos_ = 0;
};

}  // namespace

Rational parse_rational(std::string_view text) {
  std::string s(text);
  s.erase(std::remove_if(s.begin(), s.end(), [](char c) { return std::isspace(static_cast<unsigned char>(c)); }), s.end());
  bool negative = false;
  if (!s.empty() && (s[0] == '-' || s[0] == '+')) {
    negative = s[0] == '-';
    s.erase(0, 1);
  }
  const auto slash = s.find('/');
  const std::string num = s.substr(0, slash);
  const std::string den = slash == std::string::npos ? "1" : s.substr(slash + 1);
  auto digits = [](const std::string& x) {
    return !x.empty() && std::all_of(x.begin(), x.end(), [](char c) { return std::isdigit(static_cast<unsigned char>(c)); });
  };
  if (!digits(num) || !digits(den)) throw ParseError(0, "bad rational '" + std::string(text) + "'");
  if (Integer(den) == 0) throw ParseError(0, "zero denominator in '" + std::string(text) + "'");
  const Rational q{Integer(num), Integer(den)};
  return negative ? Rational(-q) : q;
}

std::vector<Rational> parse_rational_list(std::string_view text) {
  std::vector<Rational> out;
  std::size_t pos = 0;
  for (;;) {
    const std::size_t comma = text.find(',', pos);
    out.push_back(parse_rational(text.substr(pos, comma == std::string_view::npos ? std::string_view::npos : comma - pos)));
    if (comma == std::string_view::npos) break;
    pos = comma + 1;
  }
  return out;
}

Polynomial parse_polynomial(std::string_view text, std::optional<std::size_t> arity) {
  const auto terms = PolyParser(text).parse();
  std::size_t used = 0;
  for (const auto& t : terms) {
    if (!t.powers.empty()) used = std::max(used, t.powers.rbegin()->first + 1);
  }
  const std::size_t d = arity.value_or(used);
  if (used > d) throw ParseError(0, "polynomial uses x" + std::to_string(used) + " but arity is " + std::to_string(d));
  Polynomial f(d);
  for (const auto& t : terms) {
    Exponents e(d, 0);
    for (const auto& [var, p] : t.powers) e[var] = p;
    f.add_term(e, t.coeff);
  }
  return f;
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error("cannot read '" + path + "'");
  std::ostringstream os;
  os << in.rdbuf();
  return os.str();
}

GraphDocument load_graph(const std::string& path) {
  try {
    return parse_graph(read_file(path));
  } catch (const ParseError& e) {
    throw ParseError(0, path + ": " + e.what());
  }
}

}  // namespace nlgraph
