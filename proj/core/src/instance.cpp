#include "mi/instance.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <filesystem>
#include <fstream>
#include <numeric>
#include <optional>
#include <random>
#include <sstream>

namespace mi {

ParseError::ParseError(const std::string& msg, int line_no, int col_no)
    : std::runtime_error(msg + " (line " + std::to_string(line_no) +
                         ", column " + std::to_string(col_no) + ")"),
      line(line_no),
      col(col_no) {}

SemanticError::SemanticError(const std::string& msg, int stanza_no)
    : std::runtime_error(msg + " (stanza " + std::to_string(stanza_no) + ")"),
      stanza(stanza_no) {}

namespace {

struct Token {
  std::string text;
  int line = 0;
  int col = 0;
};

class Tokenizer {
public:
  explicit Tokenizer(std::istream& in) : in_(in) {}

  std::optional<Token> next() {
    int c = in_.get();
    while (c != EOF && std::isspace(static_cast<unsigned char>(c))) {
      advance(c);
      c = in_.get();
    }
    if (c == EOF) return std::nullopt;
    Token tok;
    tok.line = line_;
    tok.col = col_;
    while (c != EOF && !std::isspace(static_cast<unsigned char>(c))) {
      tok.text.push_back(static_cast<char>(c));
      advance(c);
      c = in_.get();
    }
    if (c != EOF) in_.unget();  // the delimiter belongs to the next call
    return tok;
  }

  int line() const { return line_; }
  int col() const { return col_; }

private:
  void advance(int c) {
    if (c == '\n') {
      ++line_;
      col_ = 1;
    } else {
      ++col_;
    }
  }

  std::istream& in_;
  int line_ = 1;
  int col_ = 1;
};

Token require(Tokenizer& tok, const char* what) {
  auto t = tok.next();
  if (!t)
    throw ParseError(std::string("expected ") + what + ", found end of input",
                     tok.line(), tok.col());
  return *t;
}

int parse_int(const Token& t, const char* what) {
  int value = 0;
  const char* begin = t.text.data();
  const char* end = begin + t.text.size();
  auto [ptr, ec] = std::from_chars(begin, end, value);
  if (ec != std::errc() || ptr != end)
    throw ParseError(std::string("expected an integer for ") + what +
                         ", found '" + t.text + "'",
                     t.line, t.col);
  return value;
}

int require_int(Tokenizer& tok, const char* what) {
  return parse_int(require(tok, what), what);
}

MatroidSpec parse_stanza(Tokenizer& tok, int stanza) {
  const Token kw = require(tok, "a stanza keyword");

  if (kw.text == "uniform") {
    UniformSpec s;
    s.n = require_int(tok, "element count");
    s.k = require_int(tok, "independence cap");
    if (s.n < 0) throw SemanticError("uniform: negative element count", stanza);
    if (s.k < 0) throw SemanticError("uniform: negative cap", stanza);
    return s;
  }

  if (kw.text == "partition") {
    PartitionSpec s;
    const int n = require_int(tok, "element count");
    if (n < 0) throw SemanticError("partition: negative element count", stanza);
    int max_class = -1;
    for (int i = 0; i < n; ++i) {
      const int c = require_int(tok, "class id");
      if (c < 0) throw SemanticError("partition: negative class id", stanza);
      max_class = std::max(max_class, c);
      s.class_of.push_back(c);
    }
    for (int c = 0; c <= max_class; ++c) {
      const int cap = require_int(tok, "class cap");
      if (cap < 0) throw SemanticError("partition: negative cap", stanza);
      s.cap.push_back(cap);
    }
    return s;
  }

  if (kw.text == "graphic") {
    GraphicSpec s;
    s.num_vertices = require_int(tok, "vertex count");
    if (s.num_vertices < 0)
      throw SemanticError("graphic: negative vertex count", stanza);
    const int ne = require_int(tok, "edge count");
    if (ne < 0) throw SemanticError("graphic: negative edge count", stanza);
    for (int i = 0; i < ne; ++i) {
      const int u = require_int(tok, "edge endpoint");
      const int v = require_int(tok, "edge endpoint");
      if (u < 0 || v < 0 || u >= s.num_vertices || v >= s.num_vertices)
        throw SemanticError("graphic: edge endpoint out of range", stanza);
      s.edges.emplace_back(u, v);
    }
    return s;
  }

  if (kw.text == "gf2") {
    Gf2Spec s;
    const int m = require_int(tok, "row count");
    if (m < 0) throw SemanticError("gf2: negative row count", stanza);
    const int n = require_int(tok, "column count");
    if (n < 0) throw SemanticError("gf2: negative column count", stanza);
    for (int i = 0; i < m; ++i) {
      const Token row = require(tok, "a row of bits");
      for (char ch : row.text)
        if (ch != '0' && ch != '1')
          throw ParseError("expected a row of '0'/'1' bits, found '" +
                               row.text + "'",
                           row.line, row.col);
      if (static_cast<int>(row.text.size()) != n)
        throw SemanticError("gf2: row width differs from the column count",
                            stanza);
      s.rows.push_back(row.text);
    }
    return s;
  }

  throw ParseError("unknown stanza kind '" + kw.text + "'", kw.line, kw.col);
}

}  // namespace

int ground_size(const MatroidSpec& spec) {
  return std::visit(
      [](const auto& s) -> int {
        using T = std::decay_t<decltype(s)>;
        if constexpr (std::is_same_v<T, UniformSpec>) {
          return s.n;
        } else if constexpr (std::is_same_v<T, PartitionSpec>) {
          return static_cast<int>(s.class_of.size());
        } else if constexpr (std::is_same_v<T, GraphicSpec>) {
          return static_cast<int>(s.edges.size());
        } else {
          return s.rows.empty() ? 0 : static_cast<int>(s.rows.front().size());
        }
      },
      spec);
}

std::unique_ptr<IndependenceOracle> build_oracle(const MatroidSpec& spec) {
  return std::visit(
      [](const auto& s) -> std::unique_ptr<IndependenceOracle> {
        using T = std::decay_t<decltype(s)>;
        if constexpr (std::is_same_v<T, UniformSpec>) {
          return std::make_unique<UniformMatroid>(s.n, s.k);
        } else if constexpr (std::is_same_v<T, PartitionSpec>) {
          return std::make_unique<PartitionMatroid>(s.class_of, s.cap);
        } else if constexpr (std::is_same_v<T, GraphicSpec>) {
          return std::make_unique<GraphicMatroid>(s.num_vertices, s.edges);
        } else {
          return std::make_unique<LinearMatroidGF2>(
              LinearMatroidGF2::from_rows(s.rows));
        }
      },
      spec);
}

InstanceSpec parse_instance(std::istream& in, std::string name) {
  Tokenizer tok(in);
  InstanceSpec inst;
  inst.name = std::move(name);
  inst.m1 = parse_stanza(tok, 1);
  inst.m2 = parse_stanza(tok, 2);
  if (auto extra = tok.next())
    throw ParseError("expected end of input, found '" + extra->text + "'",
                     extra->line, extra->col);
  if (ground_size(inst.m1) != ground_size(inst.m2))
    throw SemanticError("stanzas disagree on the ground-set size", 2);
  return inst;
}

InstanceSpec parse_instance_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open instance file: " + path);
  return parse_instance(in, std::filesystem::path(path).stem().string());
}

namespace {

void format_stanza(std::ostringstream& out, const MatroidSpec& spec) {
  std::visit(
      [&out](const auto& s) {
        using T = std::decay_t<decltype(s)>;
        if constexpr (std::is_same_v<T, UniformSpec>) {
          out << "uniform " << s.n << ' ' << s.k;
        } else if constexpr (std::is_same_v<T, PartitionSpec>) {
          out << "partition " << s.class_of.size();
          for (int c : s.class_of) out << ' ' << c;
          for (int cap : s.cap) out << ' ' << cap;
        } else if constexpr (std::is_same_v<T, GraphicSpec>) {
          out << "graphic " << s.num_vertices << ' ' << s.edges.size();
          for (auto [u, v] : s.edges) out << ' ' << u << ' ' << v;
        } else {
          const int width =
              s.rows.empty() ? 0 : static_cast<int>(s.rows.front().size());
          out << "gf2 " << s.rows.size() << ' ' << width;
          for (const auto& row : s.rows) out << ' ' << row;
        }
      },
      spec);
  out << '\n';
}

}  // namespace

std::string format_instance(const InstanceSpec& inst) {
  std::ostringstream out;
  format_stanza(out, inst.m1);
  format_stanza(out, inst.m2);
  return out.str();
}

const std::vector<std::string>& known_families() {
  static const std::vector<std::string> families{
      "bipartite-matching", "partition-pair", "graphic-vs-partition",
      "gf2-pair", "uniform-pair"};
  return families;
}

namespace {

int draw(std::mt19937_64& gen, int lo, int hi) {
  return std::uniform_int_distribution<int>(lo, hi)(gen);
}

// Caps sized to the largest class actually used, so the stanza text
// round-trips (the format derives the class count from the ids).
PartitionSpec random_partition(std::mt19937_64& gen, int n, int classes,
                               int max_cap) {
  PartitionSpec s;
  int max_class = 0;
  for (int i = 0; i < n; ++i) {
    const int c = draw(gen, 0, classes - 1);
    max_class = std::max(max_class, c);
    s.class_of.push_back(c);
  }
  for (int c = 0; c <= max_class; ++c) s.cap.push_back(draw(gen, 1, max_cap));
  return s;
}

Gf2Spec random_gf2(std::mt19937_64& gen, int rows, int cols) {
  Gf2Spec s;
  for (int i = 0; i < rows; ++i) {
    std::string row(static_cast<std::size_t>(cols), '0');
    for (int j = 0; j < cols; ++j)
      row[static_cast<std::size_t>(j)] = static_cast<char>('0' + draw(gen, 0, 1));
    s.rows.push_back(std::move(row));
  }
  return s;
}

}  // namespace

InstanceSpec generate_instance(const GenParams& params) {
  std::mt19937_64 gen(params.seed);
  InstanceSpec inst;
  inst.name = params.family + "-s" + std::to_string(params.seed);

  if (params.family == "bipartite-matching") {
    const long long pairs =
        static_cast<long long>(params.left) * params.right;
    if (params.left < 1 || params.right < 1 || params.edges < 1 ||
        params.edges > pairs)
      throw std::invalid_argument(
          "bipartite-matching: need 1 <= edges <= left*right");
    std::vector<int> codes(static_cast<std::size_t>(pairs));
    std::iota(codes.begin(), codes.end(), 0);
    std::shuffle(codes.begin(), codes.end(), gen);
    PartitionSpec a, b;
    int max_left = 0, max_right = 0;
    for (int e = 0; e < params.edges; ++e) {
      const int u = codes[static_cast<std::size_t>(e)] / params.right;
      const int v = codes[static_cast<std::size_t>(e)] % params.right;
      a.class_of.push_back(u);
      b.class_of.push_back(v);
      max_left = std::max(max_left, u);
      max_right = std::max(max_right, v);
    }
    a.cap.assign(static_cast<std::size_t>(max_left) + 1, 1);
    b.cap.assign(static_cast<std::size_t>(max_right) + 1, 1);
    inst.m1 = std::move(a);
    inst.m2 = std::move(b);
    return inst;
  }

  if (params.family == "partition-pair") {
    if (params.n < 1 || params.classes1 < 1 || params.classes2 < 1 ||
        params.max_cap < 1)
      throw std::invalid_argument("partition-pair: bad shape");
    inst.m1 = random_partition(gen, params.n, params.classes1, params.max_cap);
    inst.m2 = random_partition(gen, params.n, params.classes2, params.max_cap);
    return inst;
  }

  if (params.family == "graphic-vs-partition") {
    if (params.vertices < 2 || params.n < 1 || params.classes2 < 1 ||
        params.max_cap < 1)
      throw std::invalid_argument("graphic-vs-partition: bad shape");
    GraphicSpec g;
    g.num_vertices = params.vertices;
    for (int i = 0; i < params.n; ++i) {
      const int u = draw(gen, 0, params.vertices - 1);
      int v = u;
      while (v == u) v = draw(gen, 0, params.vertices - 1);
      g.edges.emplace_back(u, v);
    }
    inst.m1 = std::move(g);
    inst.m2 = random_partition(gen, params.n, params.classes2, params.max_cap);
    return inst;
  }

  if (params.family == "gf2-pair") {
    if (params.rows < 1 || params.n < 1)
      throw std::invalid_argument("gf2-pair: bad shape");
    inst.m1 = random_gf2(gen, params.rows, params.n);
    inst.m2 = random_gf2(gen, params.rows, params.n);
    return inst;
  }

  if (params.family == "uniform-pair") {
    if (params.n < 1 || params.k1 < 0 || params.k2 < 0 || params.k1 > params.n ||
        params.k2 > params.n)
      throw std::invalid_argument("uniform-pair: bad shape");
    inst.m1 = UniformSpec{params.n, params.k1};
    inst.m2 = UniformSpec{params.n, params.k2};
    return inst;
  }

  throw std::invalid_argument("unknown instance family: " + params.family);
}

}  // namespace mi
