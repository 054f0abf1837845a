#pragma once

// Text and JSON formats shared by the command-line tool and the bindings.
//
// Graph text format, one declaration per line, '#' starts a comment:
//
//   nlgraph 1                      optional header with format version
//   v <id> [label=<word>] [mult=<n>]
//   e <id> <from> <to>             darts <id> (leaving from) and ~<id>
//
// Identifiers match [A-Za-z0-9_]+.

#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "nlgraph/modifications.hpp"
#include "nlgraph/polynomial.hpp"
#include "nlgraph/resolution.hpp"
#include "nlgraph/serre_graph.hpp"

namespace nlgraph {

inline constexpr int kFormatVersion = 1;

struct GraphDocument {
  int version = kFormatVersion;
  SerreGraph graph;
  std::map<VertexId, Integer> multiplicity;

  bool has_all_multiplicities() const;
  /// Throws ConfigError if multiplicities are missing or the dual-graph rules fail.
  DivisorConfig to_config() const;
};

/// Detects JSON input by a leading '{'. Throws ParseError.
GraphDocument parse_graph(std::string_view text);
GraphDocument parse_graph_text(std::string_view text);
GraphDocument parse_graph_json(std::string_view text);

/// Requires every edge to use the x / ~x dart naming; throws Error otherwise.
std::string format_graph(const SerreGraph& g, const std::map<VertexId, Integer>& multiplicity = {});
std::string format_graph_json(const SerreGraph& g, const std::map<VertexId, Integer>& multiplicity = {});
std::string format_config(const DivisorConfig& cfg);

// Modification scripts: one step per line.
//
//   expand <at> <new_vertex> <new_edge>
//   subdivide <dart> <new_vertex> <first_edge> <second_edge>
//   relabel
//     vertex <old> <new>
//     dart <old> <new>
//   end
std::vector<Modification> parse_script(std::string_view text);
std::string format_script(const std::vector<Modification>& steps);

// Certificates: "nlgraph-certificate 1", then "side 1" and "side 2" step
// blocks, then "final" followed by vertex/dart lines.
EquivalenceCertificate parse_certificate(std::string_view text);
std::string format_certificate(const EquivalenceCertificate& cert);
std::string format_certificate_json(const EquivalenceCertificate& cert);

// Blow-up scripts: "free <v>" or "satellite <u> <v>" per line.
std::vector<BlowUpStep> parse_blow_up_script(std::string_view text);

/// "p/q", "p" or "-p/q".
Rational parse_rational(std::string_view text);
/// Comma-separated rationals.
std::vector<Rational> parse_rational_list(std::string_view text);

/// Sum of terms "c*x1^a1*x2^a2"; variables are x1..xd. With no arity given
/// the largest variable index used decides it.
Polynomial parse_polynomial(std::string_view text, std::optional<std::size_t> arity = std::nullopt);

std::string format_isomorphism(const GraphIsomorphism& m);

/// Whole file contents; throws Error when the file cannot be read.
std::string read_file(const std::string& path);
GraphDocument load_graph(const std::string& path);

}  // namespace nlgraph
