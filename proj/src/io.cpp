#include "iop/io.hpp"

#include <fstream>
#include <sstream>

namespace iop {

namespace {

struct Line {
  int number;
  std::vector<std::string> tokens;
  bool blank;  // nothing at all, not even a comment
};

// Tokenized lines; an empty token list marks a blank (or comment-only) line.
std::vector<Line> tokenize(std::string_view text) {
  std::vector<Line> out;
  std::istringstream in{std::string(text)};
  std::string raw;
  int number = 0;
  while (std::getline(in, raw)) {
    ++number;
    const bool blank = raw.find_first_not_of(" \t\r") == std::string::npos;
    if (const auto hash = raw.find('#'); hash != std::string::npos) raw.erase(hash);
    std::istringstream words(raw);
    Line line{number, {}, blank};
    for (std::string w; words >> w;) line.tokens.push_back(w);
    out.push_back(std::move(line));
  }
  return out;
}

Rational number(const Line& line, const std::string& token) {
  try {
    return parse_rational(token);
  } catch (const std::exception&) {
    throw ParseError(line.number, "expected a number, got '" + token + "'");
  }
}

long long integer(const Line& line, const std::string& token) {
  const Rational r = number(line, token);
  if (!is_integral(r)) throw ParseError(line.number, "expected an integer, got '" + token + "'");
  return to_int64(numerator_of(r));
}

struct Row {
  RationalVector normal;
  Rational offset;
  std::string relation;
};

Row parse_row(const Line& line, std::optional<Eigen::Index> dim) {
  const auto& t = line.tokens;
  if (t.size() < 3) throw ParseError(line.number, "expected 'a1 ... ad <relation> b'");
  const std::string& rel = t[t.size() - 2];
  if (rel != "<=" && rel != ">=" && rel != "=")
    throw ParseError(line.number, "expected '<=', '>=' or '=' before the right-hand side");
  const auto d = static_cast<Eigen::Index>(t.size() - 2);
  if (dim && d != *dim)
    throw ParseError(line.number, "expected " + std::to_string(*dim) + " coefficients, got " + std::to_string(d));
  Row row{RationalVector(d), number(line, t.back()), rel};
  for (Eigen::Index i = 0; i < d; ++i) row.normal(i) = number(line, t[static_cast<std::size_t>(i)]);
  if (rel == ">=") {
    row.normal = -row.normal;
    row.offset = -row.offset;
    row.relation = "<=";
  }
  return row;
}

Hyperplane parse_hyperplane(const Line& line, Eigen::Index dim) {
  Row row = parse_row(line, dim);
  if (row.relation != "=") throw ParseError(line.number, "hyperplanes are written 'a1 ... ad = b'");
  try {
    return Hyperplane(row.normal, row.offset);
  } catch (const std::invalid_argument&) {
    throw ParseError(line.number, "zero normal with nonzero right-hand side describes no hyperplane");
  }
}

bool is_dim_line(const Line& line) { return !line.tokens.empty() && line.tokens[0] == "dim"; }

Eigen::Index parse_dim(const Line& line) {
  if (line.tokens.size() != 2) throw ParseError(line.number, "expected 'dim d'");
  const long long d = integer(line, line.tokens[1]);
  if (d < 1) throw ParseError(line.number, "dimension must be positive");
  return static_cast<Eigen::Index>(d);
}

Polytope polytope_from(std::span<const Line> lines, int end_line) {
  std::optional<Eigen::Index> dim;
  std::vector<Halfspace> halfspaces;
  std::vector<Hyperplane> equations;
  for (const auto& line : lines) {
    if (line.tokens.empty()) continue;
    if (!dim) {
      if (!is_dim_line(line)) throw ParseError(line.number, "polytope must start with 'dim d'");
      dim = parse_dim(line);
      continue;
    }
    Row row = parse_row(line, dim);
    if (row.relation == "<=") {
      halfspaces.push_back({row.normal, row.offset});
    } else if (row.normal.isZero()) {
      if (row.offset != 0) throw ParseError(line.number, "equation 0 = b with b nonzero");
    } else {
      equations.emplace_back(row.normal, row.offset);
    }
  }
  if (!dim) throw ParseError(end_line, "missing 'dim d'");
  return Polytope(*dim, std::move(halfspaces), std::move(equations));
}

Arrangement arrangement_from(std::span<const Line> lines, std::optional<Eigen::Index> dim, int end_line) {
  std::vector<Hyperplane> hs;
  for (const auto& line : lines) {
    if (line.tokens.empty()) continue;
    if (is_dim_line(line)) {
      if (dim || !hs.empty()) throw ParseError(line.number, "unexpected 'dim' line");
      dim = parse_dim(line);
      continue;
    }
    if (!dim) dim = static_cast<Eigen::Index>(line.tokens.size()) - 2;
    if (*dim < 1) throw ParseError(line.number, "expected 'a1 ... ad = b'");
    hs.push_back(parse_hyperplane(line, *dim));
  }
  if (!dim) throw ParseError(end_line, "empty arrangement needs a 'dim d' line");
  return Arrangement(*dim, hs);
}

int node(const Line& line, const std::string& token, int order) {
  const long long v = integer(line, token);
  if (v < 1 || v > order) throw ParseError(line.number, "node " + token + " outside 1.." + std::to_string(order));
  return static_cast<int>(v - 1);
}

template <typename Handle>
int graph_lines(std::string_view text, Handle&& handle) {
  const auto lines = tokenize(text);
  std::optional<int> order;
  for (const auto& line : lines) {
    if (line.tokens.empty()) continue;
    if (!order) {
      if (line.tokens[0] != "n" || line.tokens.size() != 2) throw ParseError(line.number, "graph must start with 'n <order>'");
      const long long n = integer(line, line.tokens[1]);
      if (n < 0) throw ParseError(line.number, "order must be nonnegative");
      order = static_cast<int>(n);
      continue;
    }
    handle(line, *order);
  }
  if (!order) throw ParseError(static_cast<int>(lines.size()), "missing 'n <order>'");
  return *order;
}

void expect_arity(const Line& line, std::size_t n) {
  if (line.tokens.size() != n) throw ParseError(line.number, "wrong number of fields for '" + line.tokens[0] + "'");
}

}  // namespace

Polytope parse_polytope(std::string_view text) {
  const auto lines = tokenize(text);
  return polytope_from(lines, static_cast<int>(lines.size()));
}

Arrangement parse_arrangement(std::string_view text) {
  const auto lines = tokenize(text);
  return arrangement_from(lines, std::nullopt, static_cast<int>(lines.size()));
}

Instance parse_instance(std::string_view text) {
  const auto lines = tokenize(text);
  const auto split = std::find_if(lines.begin(), lines.end(), [](const Line& l) {
    return l.tokens.size() == 1 && l.tokens[0] == "arrangement";
  });
  if (split == lines.end()) throw ParseError(static_cast<int>(lines.size()), "missing 'arrangement' separator line");
  const std::span<const Line> head(lines.data(), static_cast<std::size_t>(split - lines.begin()));
  const std::span<const Line> tail(&*split + 1, static_cast<std::size_t>(lines.end() - split - 1));
  Polytope p = polytope_from(head, split->number);
  Arrangement h = arrangement_from(tail, p.ambient_dim(), static_cast<int>(lines.size()));
  return {std::move(p), std::move(h)};
}

Graph parse_graph(std::string_view text) {
  Graph g;
  g.order = graph_lines(text, [&](const Line& line, int order) {
    if (line.tokens[0] != "edge") throw ParseError(line.number, "expected 'edge i j'");
    expect_arity(line, 3);
    g.edges.emplace_back(node(line, line.tokens[1], order), node(line, line.tokens[2], order));
  });
  return g;
}

SignedGraph parse_signed_graph(std::string_view text) {
  SignedGraph s;
  s.order = graph_lines(text, [&](const Line& line, int order) {
    const std::string& kind = line.tokens[0];
    if (kind == "edge") {
      expect_arity(line, 3);
      s.edges.push_back({node(line, line.tokens[1], order), node(line, line.tokens[2], order), 1});
    } else if (kind == "sedge") {
      expect_arity(line, 4);
      const std::string& sign = line.tokens[3];
      if (sign != "+" && sign != "-") throw ParseError(line.number, "edge sign must be '+' or '-'");
      s.edges.push_back({node(line, line.tokens[1], order), node(line, line.tokens[2], order), sign == "+" ? 1 : -1});
    } else if (kind == "halfedge") {
      expect_arity(line, 2);
      s.halfedges.push_back(node(line, line.tokens[1], order));
    } else if (kind == "loose") {
      expect_arity(line, 1);
      ++s.loose;
    } else {
      throw ParseError(line.number, "unknown line kind '" + kind + "'");
    }
  });
  return s;
}

LinearFormSet parse_forms(std::string_view text) {
  const auto lines = tokenize(text);
  std::vector<const Line*> rows;
  for (const auto& line : lines)
    if (!line.tokens.empty()) rows.push_back(&line);
  if (rows.empty()) throw ParseError(static_cast<int>(lines.size()), "no forms given");
  if (rows[0]->tokens[0] == "square") {
    const Line& line = *rows[0];
    if (rows.size() != 1 || line.tokens.size() > 3) throw ParseError(line.number, "expected 'square n [diagonals|wrapped]'");
    const long long n = line.tokens.size() >= 2 ? integer(line, line.tokens[1]) : 0;
    if (n < 1) throw ParseError(line.number, "square size must be positive");
    SquareLines kind = SquareLines::semi;
    if (line.tokens.size() == 3) {
      if (line.tokens[2] == "diagonals") kind = SquareLines::diagonals;
      else if (line.tokens[2] == "wrapped") kind = SquareLines::wrapped;
      else throw ParseError(line.number, "expected 'diagonals' or 'wrapped'");
    }
    return square_forms(static_cast<int>(n), kind);
  }
  const auto d = static_cast<Eigen::Index>(rows[0]->tokens.size());
  LinearFormSet f{RationalMatrix(static_cast<Eigen::Index>(rows.size()), d), {}};
  for (std::size_t r = 0; r < rows.size(); ++r) {
    const Line& line = *rows[r];
    if (static_cast<Eigen::Index>(line.tokens.size()) != d)
      throw ParseError(line.number, "expected " + std::to_string(d) + " coefficients");
    for (Eigen::Index i = 0; i < d; ++i) f.forms(static_cast<Eigen::Index>(r), i) = number(line, line.tokens[static_cast<std::size_t>(i)]);
  }
  return f;
}

SubspaceArrangement parse_subspaces(std::string_view text) {
  const auto lines = tokenize(text);
  std::optional<Eigen::Index> dim;
  std::vector<Flat> flats;
  std::vector<Hyperplane> block;
  int block_start = 0;
  auto close_block = [&]() {
    if (block.empty()) return;
    RationalMatrix a(static_cast<Eigen::Index>(block.size()), *dim);
    RationalVector b(static_cast<Eigen::Index>(block.size()));
    for (std::size_t r = 0; r < block.size(); ++r) {
      a.row(static_cast<Eigen::Index>(r)) = block[r].normal().transpose();
      b(static_cast<Eigen::Index>(r)) = block[r].offset();
    }
    auto f = Flat::from_equations(a, b);
    if (!f) throw ParseError(block_start, "inconsistent equations: the subspace is empty");
    flats.push_back(*f);
    block.clear();
  };
  for (const auto& line : lines) {
    if (line.tokens.empty()) {
      // Comment-only lines do not end a block.
      if (line.blank) close_block();
      continue;
    }
    if (is_dim_line(line)) {
      if (dim) throw ParseError(line.number, "unexpected 'dim' line");
      dim = parse_dim(line);
      continue;
    }
    if (!dim) dim = static_cast<Eigen::Index>(line.tokens.size()) - 2;
    if (block.empty()) block_start = line.number;
    block.push_back(parse_hyperplane(line, *dim));
    if (block.back().degenerate()) throw ParseError(line.number, "0 = 0 is not an equation");
  }
  close_block();
  if (!dim) throw ParseError(static_cast<int>(lines.size()), "no subspaces given");
  SubspaceArrangement a(*dim);
  for (const auto& f : flats) a.add(f);
  return a;
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error("cannot read '" + path + "'");
  std::ostringstream s;
  s << in.rdbuf();
  return s.str();
}

}  // namespace iop
