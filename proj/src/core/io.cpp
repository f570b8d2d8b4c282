#include "spansphere/io.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <fstream>
#include <sstream>

#include "spansphere/error.hpp"

namespace spansphere {

namespace {

struct Line {
  std::size_t number;
  std::vector<std::string_view> tokens;
  std::string_view comment;  // text after '#', for whole-line comments
};

// Non-blank lines split into tokens; comment-only lines keep their text.
std::vector<Line> tokenize(std::string_view text) {
  if (!text.empty() && text.back() != '\n')
    fail(Errc::ParseError, "missing trailing newline", static_cast<std::uint64_t>(std::count(text.begin(), text.end(), '\n') + 1));
  std::vector<Line> lines;
  std::size_t number = 0, pos = 0;
  while (pos < text.size()) {
    std::size_t end = text.find('\n', pos);
    std::string_view raw = text.substr(pos, end - pos);
    pos = end + 1;
    ++number;
    if (!raw.empty() && raw.back() == '\r') raw.remove_suffix(1);
    Line line{number, {}, {}};
    std::size_t hash = raw.find('#');
    std::string_view body = raw.substr(0, hash);
    std::size_t i = 0;
    while (i < body.size()) {
      while (i < body.size() && (body[i] == ' ' || body[i] == '\t')) ++i;
      std::size_t j = i;
      while (j < body.size() && body[j] != ' ' && body[j] != '\t') ++j;
      if (j > i) line.tokens.push_back(body.substr(i, j - i));
      i = j;
    }
    if (line.tokens.empty() && hash != std::string_view::npos) {
      line.comment = raw.substr(hash + 1);
      while (!line.comment.empty() && line.comment.front() == ' ') line.comment.remove_prefix(1);
    }
    lines.push_back(line);
  }
  return lines;
}

std::uint64_t to_uint(std::string_view token, std::size_t line) {
  std::uint64_t value = 0;
  auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
  if (ec != std::errc() || ptr != token.data() + token.size())
    fail(Errc::ParseError, "line " + std::to_string(line) + ": expected a non-negative integer, got '" +
                               std::string(token) + "'", line);
  return value;
}

Vertex to_vertex(std::string_view token, std::size_t line) {
  std::uint64_t v = to_uint(token, line);
  if (v > 0xFFFFFFFEull) fail(Errc::ParseError, "line " + std::to_string(line) + ": vertex index too large", line);
  return static_cast<Vertex>(v);
}

[[noreturn]] void parse_fail(std::size_t line, const std::string& msg) {
  fail(Errc::ParseError, "line " + std::to_string(line) + ": " + msg, line);
}

// Cursor over content lines (comments skipped).
class Reader {
 public:
  explicit Reader(std::string_view text) : lines_(tokenize(text)) {}

  bool done() {
    skip();
    return pos_ >= lines_.size();
  }
  const Line& peek() {
    skip();
    if (pos_ >= lines_.size()) fail(Errc::ParseError, "unexpected end of input", last_line());
    return lines_[pos_];
  }
  const Line& next() {
    const Line& l = peek();
    ++pos_;
    return l;
  }
  std::vector<std::string> comments() const {
    std::vector<std::string> out;
    for (const auto& l : lines_)
      if (!l.comment.empty()) out.emplace_back(l.comment);
    return out;
  }
  std::size_t last_line() const { return lines_.empty() ? 1 : lines_.back().number; }

 private:
  void skip() {
    while (pos_ < lines_.size() && lines_[pos_].tokens.empty()) ++pos_;
  }
  std::vector<Line> lines_;
  std::size_t pos_ = 0;
};

VertexSet row(const Line& l) {
  VertexSet out;
  for (auto t : l.tokens) out.push_back(to_vertex(t, l.number));
  return out;
}

// Header "k n" followed by edge rows until a keyword line or the end.
Hypergraph read_hypergraph(Reader& r, bool stop_at_keyword) {
  const Line& head = r.next();
  if (head.tokens.size() != 2) parse_fail(head.number, "header must be 'k n'");
  const std::uint64_t k = to_uint(head.tokens[0], head.number);
  const std::uint64_t n = to_uint(head.tokens[1], head.number);
  if (k < 1 || k > 64) parse_fail(head.number, "uniformity out of range");
  std::vector<Vertex> flat;
  while (!r.done()) {
    const Line& l = r.peek();
    if (stop_at_keyword && !l.tokens.empty() && !std::isdigit(static_cast<unsigned char>(l.tokens[0][0]))) break;
    r.next();
    if (l.tokens.size() != k) parse_fail(l.number, "expected " + std::to_string(k) + " vertices");
    for (auto t : l.tokens) {
      Vertex v = to_vertex(t, l.number);
      if (v >= n) parse_fail(l.number, "vertex " + std::to_string(v) + " is not below n = " + std::to_string(n));
      flat.push_back(v);
    }
  }
  try {
    return Hypergraph::from_flat(static_cast<int>(k), static_cast<Vertex>(n), flat);
  } catch (const Error& e) {
    parse_fail(head.number, e.detail());
  }
}

void write_comment(std::ostringstream& out, std::string_view comment) {
  std::size_t pos = 0;
  while (pos < comment.size()) {
    std::size_t end = comment.find('\n', pos);
    if (end == std::string_view::npos) end = comment.size();
    out << "# " << comment.substr(pos, end - pos) << '\n';
    pos = end + 1;
  }
}

void write_row(std::ostringstream& out, std::span<const Vertex> r) {
  for (std::size_t i = 0; i < r.size(); ++i) out << (i ? " " : "") << r[i];
  out << '\n';
}

const Line& expect_keyword(Reader& r, std::string_view keyword, std::size_t args) {
  const Line& l = r.next();
  if (l.tokens.empty() || l.tokens[0] != keyword || l.tokens.size() != args + 1)
    parse_fail(l.number, "expected '" + std::string(keyword) + "' with " + std::to_string(args) + " argument(s)");
  return l;
}

Rational rational_token(std::string_view t, std::size_t line) {
  try {
    return parse_rational(t);
  } catch (const Error&) {
    parse_fail(line, "bad rational '" + std::string(t) + "'");
  }
}

}  // namespace

std::string read_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) fail(Errc::IoError, "cannot open " + path.string());
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_file(const std::filesystem::path& path, std::string_view content) {
  if (path.has_parent_path()) std::filesystem::create_directories(path.parent_path());
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) fail(Errc::IoError, "cannot write " + path.string());
  out << content;
  if (!out) fail(Errc::IoError, "write failed for " + path.string());
}

Hypergraph parse_hypergraph(std::string_view text) {
  Reader r(text);
  if (r.done()) fail(Errc::ParseError, "missing header 'k n'", 1);
  return read_hypergraph(r, false);
}

std::string format_hypergraph(const Hypergraph& h, std::string_view comment) {
  std::ostringstream out;
  write_comment(out, comment);
  out << h.uniformity() << ' ' << h.order() << '\n';
  for (std::size_t i = 0; i < h.edge_count(); ++i) write_row(out, h.edge(i));
  return out.str();
}

SimplicialComplex parse_complex(std::string_view text) {
  Reader r(text);
  if (r.done()) fail(Errc::ParseError, "missing header 'd n'", 1);
  const Line& head = r.next();
  if (head.tokens.size() != 2) parse_fail(head.number, "header must be 'd n'");
  const std::uint64_t d = to_uint(head.tokens[0], head.number);
  const std::uint64_t n = to_uint(head.tokens[1], head.number);
  if (d > 62) parse_fail(head.number, "dimension out of range");
  std::vector<VertexSet> facets;
  while (!r.done()) {
    const Line& l = r.next();
    if (l.tokens.size() != d + 1) parse_fail(l.number, "expected " + std::to_string(d + 1) + " vertices");
    VertexSet f = row(l);
    for (Vertex v : f)
      if (v >= n) parse_fail(l.number, "vertex " + std::to_string(v) + " is not below n = " + std::to_string(n));
    facets.push_back(std::move(f));
  }
  try {
    return SimplicialComplex(static_cast<int>(d), facets);
  } catch (const Error& e) {
    parse_fail(head.number, e.detail());
  }
}

std::string format_complex(const SimplicialComplex& k, std::string_view comment) {
  std::ostringstream out;
  write_comment(out, comment);
  out << k.dim() << ' ' << k.vertex_bound() << '\n';
  for (std::size_t i = 0; i < k.facet_count(); ++i) write_row(out, k.facet(i));
  return out.str();
}

std::vector<VertexSet> parse_parts(std::string_view text) {
  Reader r(text);
  std::vector<VertexSet> parts;
  while (!r.done()) parts.push_back(make_set(row(r.next())));
  return parts;
}

std::string format_parts(const std::vector<VertexSet>& parts) {
  std::ostringstream out;
  for (const auto& p : parts) write_row(out, p);
  return out.str();
}

ChainCertificate parse_chain(std::string_view text) {
  Reader r(text);
  ChainCertificate c;
  for (const auto& comment : r.comments())
    if (comment.rfind("provenance: ", 0) == 0) {
      c.provenance = comment.substr(12);
      break;
    }
  if (r.done()) fail(Errc::ParseError, "empty chain file", 1);
  const Line& params = expect_keyword(r, "PARAMS", 4);
  c.epsilon = rational_token(params.tokens[1], params.number);
  c.gamma = rational_token(params.tokens[2], params.number);
  c.m1 = rational_token(params.tokens[3], params.number);
  c.m2 = rational_token(params.tokens[4], params.number);
  const Line& links = expect_keyword(r, "LINKS", 1);
  const std::uint64_t count = to_uint(links.tokens[1], links.number);
  std::optional<int> k;
  for (std::uint64_t i = 0; i < count; ++i) {
    expect_keyword(r, "BASE", 0);
    Hypergraph base = read_hypergraph(r, true);
    const Line& parts_line = expect_keyword(r, "PARTS", 0);
    std::vector<VertexSet> parts;
    for (Vertex x = 0; x < base.order(); ++x) {
      if (r.done()) parse_fail(parts_line.number, "missing part lines");
      const Line& l = r.peek();
      if (!std::isdigit(static_cast<unsigned char>(l.tokens[0][0]))) parse_fail(l.number, "missing part lines");
      parts.push_back(make_set(row(r.next())));
    }
    if (k && *k != base.uniformity()) parse_fail(parts_line.number, "links differ in uniformity");
    k = base.uniformity();
    try {
      c.links.emplace_back(std::move(base), std::move(parts));
    } catch (const Error& e) {
      parse_fail(parts_line.number, e.detail());
    }
  }
  const Line& shared = expect_keyword(r, "SHARED", 0);
  while (!r.done()) {
    const Line& l = r.next();
    VertexSet e = row(l);
    if (k && e.size() != static_cast<std::size_t>(*k)) parse_fail(l.number, "shared edge is not a k-set");
    k = static_cast<int>(e.size());
    c.shared_edges.push_back(std::move(e));
  }
  (void)shared;
  c.k = k.value_or(2);
  return c;
}

std::string format_chain(const ChainCertificate& c) {
  std::ostringstream out;
  if (!c.provenance.empty()) out << "# provenance: " << c.provenance << '\n';
  out << "PARAMS " << format_rational(c.epsilon) << ' ' << format_rational(c.gamma) << ' ' << format_rational(c.m1)
      << ' ' << format_rational(c.m2) << '\n';
  out << "LINKS " << c.links.size() << '\n';
  for (const auto& b : c.links) {
    out << "BASE\n" << format_hypergraph(b.base());
    out << "PARTS\n" << format_parts(b.parts());
  }
  out << "SHARED\n";
  for (const auto& e : c.shared_edges) write_row(out, e);
  return out.str();
}

}  // namespace spansphere
