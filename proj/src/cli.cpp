#include "nlgraph/cli.hpp"

#include <algorithm>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "nlgraph/checks/acceptance.hpp"
#include "nlgraph/error.hpp"
#include "nlgraph/graph_core.hpp"
#include "nlgraph/io.hpp"
#include "nlgraph/modifications.hpp"
#include "nlgraph/resolution.hpp"
#include "nlgraph/topo.hpp"
#include "nlgraph/valuations.hpp"

#ifndef NLGRAPH_FIXTURE_DIR
#define NLGRAPH_FIXTURE_DIR "fixtures"
#endif

namespace nlgraph::cli {

namespace {

using nlohmann::json;

struct Context {
  Context(std::istream& i, std::ostream& o, std::ostream& e) : in(i), out(o), err(e) {}

  std::istream& in;
  std::ostream& out;
  std::ostream& err;
  std::string report = "text";
  std::string fixtures;
  std::uint64_t seed = 0;
  std::optional<std::string> stdin_text;

  bool as_json() const { return report == "json"; }

  std::string fixtures_dir() const {
    if (!fixtures.empty()) return fixtures;
    if (const char* env = std::getenv("NLGRAPH_FIXTURES"); env && *env) return env;
    return NLGRAPH_FIXTURE_DIR;
  }

  std::string read(const std::string& arg) {
    if (arg == "-") {
      if (!stdin_text) {
        std::ostringstream os;
        os << in.rdbuf();
        stdin_text = os.str();
      }
      return *stdin_text;
    }
    if (!arg.empty() && arg.front() == '@') return read_file(fixtures_dir() + "/" + arg.substr(1));
    return read_file(arg);
  }

  GraphDocument graph(const std::string& arg) {
    try {
      return parse_graph(read(arg));
    } catch (const ParseError& e) {
      throw ParseError(0, arg + ": " + e.what());
    }
  }

  void emit(const json& j, const std::string& text) {
    if (as_json()) {
      out << j.dump(2) << "\n";
    } else {
      out << text;
    }
  }
};

json graph_json(const SerreGraph& g, const std::map<VertexId, Integer>& mult = {}) {
  return json::parse(format_graph_json(g, mult));
}

std::string value_string(const ExtendedRational& v) { return v.is_infinite() ? "+inf" : to_string(v.value()); }

std::string value_string(const LexValue& v) {
  if (v.is_infinite()) return "+inf";
  std::string s = "(";
  for (std::size_t i = 0; i < v.value().size(); ++i) s += (i ? ", " : "") + std::to_string(v.value()[i]);
  return s + ")";
}

std::string value_string(const Order& v) { return v.is_infinite() ? "+inf" : std::to_string(v.value()); }

json lex_json(const LexValue& v) { return v.is_infinite() ? json("+inf") : json(v.value()); }

std::vector<std::size_t> parse_spec(const std::string& text) {
  std::vector<std::size_t> out;
  std::stringstream ss(text);
  for (std::string item; std::getline(ss, item, ',');) {
    item.erase(std::remove_if(item.begin(), item.end(), ::isspace), item.end());
    if (!item.empty() && item.front() == 'x') item.erase(0, 1);
    if (item.empty() || !std::all_of(item.begin(), item.end(), ::isdigit) || std::stoul(item) == 0) {
      throw ParseError(0, "bad stage variable '" + item + "' (expected 1-based indices such as 1,2,3)");
    }
    out.push_back(std::stoul(item) - 1);
  }
  return out;
}

std::vector<Polynomial> parse_polys(const std::vector<std::string>& texts, std::size_t arity) {
  std::vector<Polynomial> out;
  for (const auto& t : texts) out.push_back(parse_polynomial(t, arity));
  return out;
}

std::vector<std::string> split_semicolons(const std::string& text) {
  std::vector<std::string> out;
  std::stringstream ss(text);
  for (std::string item; std::getline(ss, item, ';');) out.push_back(item);
  return out;
}

std::string rational_list(const std::vector<Rational>& qs) {
  std::string s;
  for (std::size_t i = 0; i < qs.size(); ++i) s += (i ? "," : "") + to_string(qs[i]);
  return s;
}

void write_text(const std::string& path, const std::string& text) {
  std::ofstream f(path, std::ios::binary);
  if (!f || !(f << text)) throw Error("cannot write '" + path + "'");
}

// ---------------------------------------------------------------------------

int cmd_validate(Context& c, const std::string& file) {
  const GraphDocument doc = c.graph(file);
  std::vector<std::string> problems;
  if (!doc.multiplicity.empty()) {
    problems = config_violations(DivisorConfig{doc.graph, doc.multiplicity});
  } else {
    problems = validate(doc.graph);
    if (problems.empty() && !is_connected(doc.graph)) problems.push_back("graph is not connected");
  }
  std::string text = problems.empty() ? "valid\n" : "invalid\n";
  for (const auto& p : problems) text += "  " + p + "\n";
  c.emit({{"command", "validate"},
          {"valid", problems.empty()},
          {"violations", problems},
          {"vertices", doc.graph.vertex_count()},
          {"edges", doc.graph.edge_count()}},
         text);
  return problems.empty() ? kYes : kNo;
}

int cmd_core(Context& c, const std::string& file) {
  const auto k = core(c.graph(file).graph);
  json j{{"command", "core"}, {"empty", !k}};
  if (k) j["graph"] = graph_json(*k);
  c.emit(j, k ? format_graph(*k) : "empty\n");
  return kYes;
}

int cmd_betti(Context& c, const std::string& file) {
  const SerreGraph g = c.graph(file).graph;
  c.emit({{"command", "betti"},
          {"betti", betti(g)},
          {"vertices", g.vertex_count()},
          {"edges", g.edge_count()},
          {"components", component_count(g)}},
         std::to_string(betti(g)) + "\n");
  return kYes;
}

int cmd_reduce(Context& c, const std::string& file) {
  const ReducedForm r = reduce(c.graph(file).graph);
  c.emit({{"command", "reduce"}, {"graph", graph_json(r.graph)}}, format_graph(r.graph));
  return kYes;
}

json map_json(const GraphIsomorphism& m) {
  json j{{"vertices", json::object()}, {"darts", json::object()}};
  for (const auto& [a, b] : m.vertices) j["vertices"][a.value] = b.value;
  for (const auto& [a, b] : m.darts) j["darts"][a.value] = b.value;
  return j;
}

int cmd_iso(Context& c, const std::string& a, const std::string& b) {
  const auto m = isomorphism(c.graph(a).graph, c.graph(b).graph);
  json j{{"command", "iso"}, {"isomorphic", m.has_value()}};
  if (m) j["map"] = map_json(*m);
  c.emit(j, m ? "isomorphic\n" + format_isomorphism(*m) : "not isomorphic\n");
  return m ? kYes : kNo;
}

int cmd_homeo(Context& c, const std::string& a, const std::string& b) {
  const bool h = homeomorphic(c.graph(a).graph, c.graph(b).graph);
  c.emit({{"command", "homeo"}, {"homeomorphic", h}}, h ? "homeomorphic\n" : "not homeomorphic\n");
  return h ? kYes : kNo;
}

int cmd_equiv(Context& c, const std::string& a, const std::string& b) {
  const SerreGraph g1 = c.graph(a).graph;
  const SerreGraph g2 = c.graph(b).graph;
  const bool e = equivalent(g1, g2);
  const bool t1 = !core(g1), t2 = !core(g2);
  std::ostringstream text;
  text << (e ? "equivalent" : "not equivalent") << "\n"
       << "betti: " << betti(g1) << " " << betti(g2) << "\n"
       << "core: " << (t1 ? "empty" : "nonempty") << " " << (t2 ? "empty" : "nonempty") << "\n";
  c.emit({{"command", "equiv"},
          {"equivalent", e},
          {"betti", {betti(g1), betti(g2)}},
          {"core_empty", {t1, t2}}},
         text.str());
  return e ? kYes : kNo;
}

int cmd_certify(Context& c, const std::string& a, const std::string& b, const std::string& out_path) {
  const auto cert = certify(c.graph(a).graph, c.graph(b).graph);
  if (!cert) {
    c.emit({{"command", "certify"}, {"equivalent", false}}, "not equivalent\n");
    return kNo;
  }
  const std::string body = c.as_json() ? format_certificate_json(*cert) : format_certificate(*cert);
  if (out_path.empty()) {
    c.out << body;
  } else {
    write_text(out_path, body);
    c.emit({{"command", "certify"},
            {"equivalent", true},
            {"steps", {cert->seq1.size(), cert->seq2.size()}},
            {"certificate", out_path}},
           "equivalent\ncertificate: " + std::to_string(cert->seq1.size()) + " + " +
               std::to_string(cert->seq2.size()) + " steps written to " + out_path + "\n");
  }
  return kYes;
}

int cmd_verify(Context& c, const std::string& a, const std::string& b, const std::string& cert_file) {
  const SerreGraph g1 = c.graph(a).graph;
  const SerreGraph g2 = c.graph(b).graph;
  EquivalenceCertificate cert;
  try {
    cert = parse_certificate(c.read(cert_file));
  } catch (const ParseError& e) {
    throw CertificateError(cert_file + ": " + e.what());
  }
  const bool ok = verify(g1, g2, cert);
  c.emit({{"command", "verify"}, {"valid", ok}}, ok ? "valid\n" : "invalid\n");
  return ok ? kYes : kNo;
}

int cmd_modify(Context& c, const std::string& file, const std::string& script, std::optional<std::size_t> random,
               const std::string& script_out) {
  const SerreGraph g = c.graph(file).graph;
  if (random.has_value() == !script.empty()) throw Error("modify needs either a script or --random N");
  ModifiedGraph result;
  if (random) {
    result = random_modifications(g, *random, c.seed);
  } else {
    result.steps = parse_script(c.read(script));
    try {
      result.graph = apply_all(g, result.steps);
    } catch (const ModificationError& e) {
      throw ModificationError(script + ": " + e.what());
    }
  }
  if (!script_out.empty()) write_text(script_out, format_script(result.steps));
  c.emit({{"command", "modify"},
          {"graph", graph_json(result.graph)},
          {"script", format_script(result.steps)},
          {"equivalent", equivalent(g, result.graph)}},
         format_graph(result.graph));
  return kYes;
}

int cmd_blowup(Context& c, const std::string& config, const std::string& script) {
  const DivisorConfig start = config == "initial" ? initial_config() : c.graph(config).to_config();
  const auto steps = parse_blow_up_script(c.read(script));
  const DivisorConfig end = apply_blow_ups(start, steps);
  c.emit({{"command", "blowup"}, {"graph", graph_json(end.graph, end.multiplicity)}}, format_config(end));
  return kYes;
}

struct ValOptions {
  std::string weights;
  std::string spec;
  std::optional<std::size_t> arity;
  bool ideal = false;
  bool normalize = false;
  std::string gens;
  std::vector<std::string> polys;
};

std::size_t spec_arity(const ValOptions& o, const std::vector<std::size_t>& stages) {
  if (o.arity) return *o.arity;
  std::size_t d = stages.empty() ? 0 : *std::max_element(stages.begin(), stages.end()) + 1;
  for (const auto& p : o.polys) d = std::max(d, parse_polynomial(p).arity());
  return d;
}

int cmd_val_eval(Context& c, const ValOptions& o) {
  if (o.weights.empty() == o.spec.empty()) throw Error("val-eval needs exactly one of --weights and --spec");
  json j{{"command", "val-eval"}};
  std::string text;
  if (!o.weights.empty()) {
    const Weights beta(parse_rational_list(o.weights));
    const auto polys = parse_polys(o.polys, beta.arity());
    if (o.normalize) {
      const auto gens = polys.empty() ? maximal_ideal(beta.arity()) : polys;
      const Weights n = normalize(beta, gens);
      j["weights"] = rational_list(n.values());
      text = rational_list(n.values()) + "\n";
    } else if (o.ideal) {
      const auto v = value_on_ideal(beta, polys);
      j["value"] = value_string(v);
      text = value_string(v) + "\n";
    } else {
      if (polys.empty()) throw Error("no polynomial given");
      j["values"] = json::array();
      for (const auto& f : polys) {
        const auto v = eval_monomial(beta, f);
        j["values"].push_back(value_string(v));
        text += value_string(v) + "\n";
      }
    }
  } else {
    if (o.normalize) throw Error("--normalize applies to monomial weights only");
    const auto stages = parse_spec(o.spec);
    const IteratedOrderSpec spec(spec_arity(o, stages), stages);
    const auto polys = parse_polys(o.polys, spec.arity());
    if (o.ideal) {
      const auto v = value_on_ideal(spec, polys);
      j["value"] = lex_json(v);
      text = value_string(v) + "\n";
    } else {
      if (polys.empty()) throw Error("no polynomial given");
      j["values"] = json::array();
      for (const auto& f : polys) {
        const auto v = eval_iterated(spec, f);
        j["values"].push_back(lex_json(v));
        text += value_string(v) + "\n";
      }
    }
  }
  c.emit(j, text);
  return kYes;
}

int cmd_val_pi(Context& c, const ValOptions& o) {
  if (o.weights.empty() == o.spec.empty()) throw Error("val-pi needs exactly one of --weights and --spec");
  if (o.polys.empty()) throw Error("no polynomial given");
  json j{{"command", "val-pi"}, {"values", json::array()}};
  std::string text;
  if (!o.weights.empty()) {
    const Weights beta(parse_rational_list(o.weights));
    const auto polys = parse_polys(o.polys, beta.arity());
    const auto gens = o.gens.empty() ? maximal_ideal(beta.arity()) : parse_polys(split_semicolons(o.gens), beta.arity());
    for (const auto& f : polys) {
      const auto v = pi_of_monomial(beta, f, gens);
      j["values"].push_back(value_string(v));
      text += value_string(v) + "\n";
    }
  } else {
    const auto stages = parse_spec(o.spec);
    const IteratedOrderSpec spec(spec_arity(o, stages), stages);
    for (const auto& f : parse_polys(o.polys, spec.arity())) {
      const auto v = pi_of_iterated(spec, f);
      j["values"].push_back(value_string(v));
      text += value_string(v) + "\n";
    }
  }
  c.emit(j, text);
  return kYes;
}

int cmd_val_retract(Context& c, const std::string& b, const std::string& s, const std::string& t) {
  const auto mult = parse_rational_list(b);
  if (mult.size() != 2) throw Error("--b expects two multiplicities");
  Integer b1, b2;
  for (int i = 0; i < 2; ++i) {
    if (denominator(mult[i]) != 1) throw Error("multiplicities must be integers");
  }
  b1 = numerator(mult[0]);
  b2 = numerator(mult[1]);
  if (s.empty() == t.empty()) throw Error("val-retract needs exactly one of --s and --t");
  if (!s.empty()) {
    const auto vals = parse_rational_list(s);
    if (vals.size() != 2) throw Error("--s expects two values");
    const Rational r = retract_to_skeleton(b1, b2, vals[0], vals[1]);
    c.emit({{"command", "val-retract"}, {"t", to_string(r)}}, to_string(r) + "\n");
  } else {
    const auto [w1, w2] = skeleton_weights(b1, b2, parse_rational(t));
    c.emit({{"command", "val-retract"}, {"weights", {to_string(w1), to_string(w2)}}},
           to_string(w1) + "," + to_string(w2) + "\n");
  }
  return kYes;
}

int cmd_val_compare(Context& c, const std::string& a, const std::string& b) {
  const MonomialComparison r = compare_monomial(Weights(parse_rational_list(a)), Weights(parse_rational_list(b)));
  const char* names[] = {"equal", "<=", ">=", "incomparable"};
  const std::string verdict = names[static_cast<int>(r.order)];
  json j{{"command", "val-compare"}, {"order", verdict}};
  std::string text = verdict + "\n";
  if (r.smaller_at) {
    j["smaller_at"] = "x" + std::to_string(*r.smaller_at + 1);
    text += "smaller on x" + std::to_string(*r.smaller_at + 1) + "\n";
  }
  if (r.larger_at) {
    j["larger_at"] = "x" + std::to_string(*r.larger_at + 1);
    text += "larger on x" + std::to_string(*r.larger_at + 1) + "\n";
  }
  c.emit(j, text);
  return kYes;
}

int cmd_corpus_check(Context& c, std::optional<int> only, bool timings) {
  checks::AcceptanceOptions options;
  options.fixtures_dir = c.fixtures_dir();
  if (c.seed != 0) options.seed = c.seed;
  std::vector<checks::CriterionResult> results;
  if (only) {
    if (*only < 1 || *only > checks::kCriterionCount) throw Error("no such criterion");
    results.push_back(checks::run_criterion(*only, options));
  } else {
    results = checks::run_acceptance(options);
  }
  bool all = true;
  json j{{"command", "corpus-check"}, {"results", json::array()}};
  std::string text;
  for (const auto& r : results) {
    all = all && r.passed;
    json jr{{"id", r.id}, {"title", r.title}, {"passed", r.passed}, {"detail", r.detail}};
    if (timings) jr["seconds"] = r.seconds;
    j["results"].push_back(jr);
    text += checks::format_result(r, timings) + "\n";
  }
  j["passed"] = all;
  c.emit(j, text);
  return all ? kYes : kNo;
}

}  // namespace

int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err) {
  Context c{in, out, err};
  CLI::App app{"Decide equivalence of resolution graphs, build certificates, and evaluate valuations.", "nlgraph"};
  app.require_subcommand(1);
  app.fallthrough();
  app.add_option("--report", c.report, "Output format")->check(CLI::IsMember({"text", "json"}));
  app.add_option("--fixtures", c.fixtures, "Fixture directory used for '@' paths and corpus-check");
  app.add_option("--seed", c.seed, "Seed for randomized commands");

  std::string a, b, third, out_path, script_out;
  std::optional<std::size_t> random;
  std::optional<int> criterion;
  bool timings = false;
  ValOptions val;

  auto* validate_cmd = app.add_subcommand("validate", "Check structural invariants (exit 0 valid, 1 invalid)");
  validate_cmd->add_option("graph", a)->required();
  auto* core_cmd = app.add_subcommand("core", "Print the core, or 'empty' for a tree");
  core_cmd->add_option("graph", a)->required();
  auto* betti_cmd = app.add_subcommand("betti", "Print the first Betti number");
  betti_cmd->add_option("graph", a)->required();
  auto* reduce_cmd = app.add_subcommand("reduce", "Print the canonical reduced form");
  reduce_cmd->add_option("graph", a)->required();

  auto pair = [&](const char* name, const char* help) {
    auto* s = app.add_subcommand(name, help);
    s->add_option("first", a)->required();
    s->add_option("second", b)->required();
    return s;
  };
  auto* iso_cmd = pair("iso", "Decide isomorphism and print the least witness");
  auto* homeo_cmd = pair("homeo", "Decide homeomorphism of the realizations");
  auto* equiv_cmd = pair("equiv", "Decide equivalence (homeomorphic cores)");
  auto* certify_cmd = pair("certify", "Print an equivalence certificate");
  certify_cmd->add_option("-o,--output", out_path, "Write the certificate to a file");
  auto* verify_cmd = pair("verify", "Check a certificate (exit 0 valid, 1 invalid, 2 malformed)");
  verify_cmd->add_option("certificate", third)->required();

  auto* modify_cmd = app.add_subcommand("modify", "Apply a modification script or random modifications");
  modify_cmd->add_option("graph", a)->required();
  modify_cmd->add_option("script", b);
  modify_cmd->add_option("--random", random, "Apply N random modifications (see --seed)");
  modify_cmd->add_option("--script-out", script_out, "Write the applied steps as a script");

  auto* blowup_cmd = app.add_subcommand("blowup", "Apply a blow-up script to a weighted dual graph");
  blowup_cmd->add_option("config", a, "Graph with mult= on every vertex, or 'initial'")->required();
  blowup_cmd->add_option("script", b)->required();

  auto val_common = [&](CLI::App* s) {
    s->add_option("--weights", val.weights, "Monomial weights, e.g. 1/2,1/3");
    s->add_option("--spec", val.spec, "Stage variables of an iterated order, e.g. 1,2,3");
    s->add_option("--arity", val.arity, "Number of variables");
    s->add_option("polynomials", val.polys, "Polynomials such as 'x1^2 - 3/2*x1*x2'");
  };
  auto* val_eval_cmd = app.add_subcommand("val-eval", "Evaluate a monomial or iterated valuation");
  val_common(val_eval_cmd);
  val_eval_cmd->add_flag("--ideal", val.ideal, "Value of the ideal generated by the polynomials");
  val_eval_cmd->add_flag("--normalize", val.normalize, "Scale weights to value 1 on the ideal (default: maximal)");
  auto* val_pi_cmd = app.add_subcommand("val-pi", "Image under the normalization map");
  val_common(val_pi_cmd);
  val_pi_cmd->add_option("--gens", val.gens, "Ideal generators separated by ';' (default: maximal ideal)");
  auto* val_retract_cmd = app.add_subcommand("val-retract", "Skeleton retraction on an edge");
  std::string rb, rs, rt;
  val_retract_cmd->add_option("--b", rb, "Multiplicities b1,b2")->required();
  val_retract_cmd->add_option("--s", rs, "Values s1,s2 on the two coordinates; prints t");
  val_retract_cmd->add_option("--t", rt, "Parameter t; prints the weights");
  auto* val_compare_cmd = app.add_subcommand("val-compare", "Compare two monomial valuations");
  val_compare_cmd->add_option("first", a)->required();
  val_compare_cmd->add_option("second", b)->required();

  auto* corpus_cmd = app.add_subcommand("corpus-check", "Run the acceptance criteria against the fixture corpus");
  corpus_cmd->add_option("--criterion", criterion, "Run a single criterion");
  corpus_cmd->add_flag("--timings", timings, "Append run times");

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kYes : kError;
  }

  try {
    if (validate_cmd->parsed()) return cmd_validate(c, a);
    if (core_cmd->parsed()) return cmd_core(c, a);
    if (betti_cmd->parsed()) return cmd_betti(c, a);
    if (reduce_cmd->parsed()) return cmd_reduce(c, a);
    if (iso_cmd->parsed()) return cmd_iso(c, a, b);
    if (homeo_cmd->parsed()) return cmd_homeo(c, a, b);
    if (equiv_cmd->parsed()) return cmd_equiv(c, a, b);
    if (certify_cmd->parsed()) return cmd_certify(c, a, b, out_path);
    if (verify_cmd->parsed()) return cmd_verify(c, a, b, third);
    if (modify_cmd->parsed()) return cmd_modify(c, a, b, random, script_out);
    if (blowup_cmd->parsed()) return cmd_blowup(c, a, b);
    if (val_eval_cmd->parsed()) return cmd_val_eval(c, val);
    if (val_pi_cmd->parsed()) return cmd_val_pi(c, val);
    if (val_retract_cmd->parsed()) return cmd_val_retract(c, rb, rs, rt);
    if (val_compare_cmd->parsed()) return cmd_val_compare(c, a, b);
    if (corpus_cmd->parsed()) return cmd_corpus_check(c, criterion, timings);
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kError;
  }
  err << "error: no command\n";
  return kError;
}

}  // namespace nlgraph::cli
