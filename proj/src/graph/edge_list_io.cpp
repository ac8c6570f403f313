#include <algorithm>
#include <cctype>
#include <charconv>
#include <string>
#include <string_view>

#include "bfly/graph.hpp"

namespace bfly {
namespace {

class LineTokenizer {
 public:
  explicit LineTokenizer(std::string_view line) : rest_(line) {}

  std::string_view next() {
    auto is_space = [](char c) { return std::isspace(static_cast<unsigned char>(c)) != 0; };
    while (!rest_.empty() && is_space(rest_.front())) rest_.remove_prefix(1);
    std::size_t n = 0;
    while (n < rest_.size() && !is_space(rest_[n])) ++n;
    auto tok = rest_.substr(0, n);
    rest_.remove_prefix(n);
    return tok;
  }

 private:
  std::string_view rest_;
};

std::uint64_t parse_unsigned(std::string_view tok, std::size_t line, const char* what) {
  if (tok.empty()) throw ParseError(line, std::string("missing ") + what);
  std::uint64_t value = 0;
  auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), value);
  if (ec == std::errc::result_out_of_range)
    throw IdOverflowError(line, std::string(what) + " '" + std::string(tok) + "' out of range");
  if (ec != std::errc() || ptr != tok.data() + tok.size())
    throw ParseError(line, std::string("malformed ") + what + " '" + std::string(tok) + "'");
  return value;
}

vertex_t checked_id(std::uint64_t id, std::size_t line) {
  if (id > kMaxVertexId)
    throw IdOverflowError(line, "vertex id " + std::to_string(id) +
                                    " exceeds the representable vertex range");
  return static_cast<vertex_t>(id);
}

bool is_blank(std::string_view line) {
  return std::all_of(line.begin(), line.end(),
                     [](char c) { return std::isspace(static_cast<unsigned char>(c)) != 0; });
}

EdgeList load_text(std::istream& in) {
  EdgeList el;
  std::uint64_t max_id = 0;
  bool any = false;
  std::string line;
  std::size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (is_blank(line)) continue;
    LineTokenizer tok(line);
    auto first = tok.next();
    if (first.front() == '#' || first.front() == '%') continue;
    auto src = checked_id(parse_unsigned(first, lineno, "source id"), lineno);
    auto dst = checked_id(parse_unsigned(tok.next(), lineno, "destination id"), lineno);
    el.edges.push_back({src, dst});
    max_id = std::max<std::uint64_t>(max_id, std::max(src, dst));
    any = true;
  }
  el.num_vertices = any ? static_cast<std::size_t>(max_id) + 1 : 0;
  return el;
}

std::string lowercase(std::string_view s) {
  std::string out(s);
  std::transform(out.begin(), out.end(), out.begin(),
                 [](unsigned char c) { return static_cast<char>(std::tolower(c)); });
  return out;
}

EdgeList load_matrix_market(std::istream& in) {
  std::string line;
  std::size_t lineno = 0;

  if (!std::getline(in, line)) return {};
  ++lineno;
  {
    LineTokenizer tok(line);
    if (lowercase(tok.next()) != "%%matrixmarket" || lowercase(tok.next()) != "matrix" ||
        lowercase(tok.next()) != "coordinate")
      throw ParseError(lineno, "expected '%%MatrixMarket matrix coordinate' header");
    auto field = lowercase(tok.next());
    if (field != "pattern" && field != "real" && field != "integer" && field != "complex")
      throw ParseError(lineno, "unsupported field '" + field + "'");
    auto symmetry = lowercase(tok.next());
    if (symmetry != "general" && symmetry != "symmetric" && symmetry != "skew-symmetric" &&
        symmetry != "hermitian")
      throw ParseError(lineno, "unsupported symmetry '" + symmetry + "'");
  }

  // Size line follows any number of comments.
  std::uint64_t rows = 0, cols = 0, nnz = 0;
  bool have_size = false;
  while (std::getline(in, line)) {
    ++lineno;
    if (is_blank(line) || line.front() == '%') continue;
    LineTokenizer tok(line);
    rows = parse_unsigned(tok.next(), lineno, "row count");
    cols = parse_unsigned(tok.next(), lineno, "column count");
    nnz = parse_unsigned(tok.next(), lineno, "entry count");
    have_size = true;
    break;
  }
  if (!have_size) throw ParseError(lineno, "missing size line");
  auto n = std::max(rows, cols);
  if (n > static_cast<std::uint64_t>(kMaxVertexId) + 1)
    throw IdOverflowError(lineno, "dimension " + std::to_string(n) +
                                      " exceeds the representable vertex range");

  EdgeList el;
  el.num_vertices = static_cast<std::size_t>(n);
  el.edges.reserve(static_cast<std::size_t>(nnz));
  while (el.edges.size() < nnz && std::getline(in, line)) {
    ++lineno;
    if (is_blank(line) || line.front() == '%') continue;
    LineTokenizer tok(line);
    auto i = parse_unsigned(tok.next(), lineno, "row index");
    auto j = parse_unsigned(tok.next(), lineno, "column index");
    if (i == 0 || j == 0 || i > rows || j > cols)
      throw ParseError(lineno, "index (" + std::to_string(i) + "," + std::to_string(j) +
                                   ") outside " + std::to_string(rows) + "x" +
                                   std::to_string(cols));
    el.edges.push_back({static_cast<vertex_t>(i - 1), static_cast<vertex_t>(j - 1)});
  }
  if (el.edges.size() < nnz)
    throw ParseError(lineno, "expected " + std::to_string(nnz) + " entries, found " +
                                 std::to_string(el.edges.size()));
  return el;
}

}  // namespace

EdgeList load_edge_list(std::istream& in, EdgeFormat format) {
  switch (format) {
    case EdgeFormat::edge_list_text:
      return load_text(in);
    case EdgeFormat::matrix_market:
      return load_matrix_market(in);
  }
  throw std::invalid_argument("unknown edge format");
}

}  // namespace bfly
