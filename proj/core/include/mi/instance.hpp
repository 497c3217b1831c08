#pragma once

#include <cstdint>
#include <iosfwd>
#include <memory>
#include <stdexcept>
#include <string>
#include <variant>
#include <vector>

#include "mi/matroids.hpp"

namespace mi {

/// Lexical or structural error in an instance file.
struct ParseError : std::runtime_error {
  ParseError(const std::string& msg, int line, int col);
  int line;
  int col;
};

/// Well-formed tokens that do not describe a valid matroid pair.
struct SemanticError : std::runtime_error {
  SemanticError(const std::string& msg, int stanza);
  int stanza;  // 1-based index of the offending stanza
};

struct UniformSpec {
  int n = 0;
  int k = 0;
};
struct PartitionSpec {
  std::vector<int> class_of;
  std::vector<int> cap;
};
struct GraphicSpec {
  int num_vertices = 0;
  std::vector<std::pair<int, int>> edges;
};
struct Gf2Spec {
  std::vector<std::string> rows;  // equal-width strings of '0'/'1'
};

using MatroidSpec = std::variant<UniformSpec, PartitionSpec, GraphicSpec, Gf2Spec>;

int ground_size(const MatroidSpec& spec);
std::unique_ptr<IndependenceOracle> build_oracle(const MatroidSpec& spec);

/// Intersection instance: two matroid stanzas over the same ground set.
struct InstanceSpec {
  std::string name;
  MatroidSpec m1;
  MatroidSpec m2;

  int n() const { return ground_size(m1); }
};

/// Parses exactly two stanzas. Stanza forms (whitespace separated tokens):
///   uniform n k
///   partition n  c_0 ... c_{n-1}  cap_0 ... cap_{C-1}   (C = max class + 1)
///   graphic num_vertices num_edges  u_0 v_0 ... (elements are the edges)
///   gf2 num_rows num_cols  row_0 ... (rows as 0/1 strings; elements are columns)
/// Throws ParseError (with line/column) or SemanticError (with stanza index).
InstanceSpec parse_instance(std::istream& in, std::string name = "");
InstanceSpec parse_instance_file(const std::string& path);

/// Stanza text that parse_instance round-trips.
std::string format_instance(const InstanceSpec& inst);

/// Seeded instance generation. family selects which size fields apply:
///   bipartite-matching:    left, right, edges (distinct random pairs)
///   partition-pair:        n, classes1, classes2, max_cap
///   graphic-vs-partition:  vertices, n (edges), classes2, max_cap
///   gf2-pair:              rows, n (columns)
///   uniform-pair:          n, k1, k2
/// Same parameters and seed always produce the same instance.
struct GenParams {
  std::string family;
  std::uint64_t seed = 0;
  int left = 0, right = 0, edges = 0;
  int n = 0, classes1 = 0, classes2 = 0, max_cap = 1;
  int vertices = 0;
  int rows = 0;
  int k1 = 0, k2 = 0;
};

const std::vector<std::string>& known_families();
InstanceSpec generate_instance(const GenParams& params);

}  // namespace mi
