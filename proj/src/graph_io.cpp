#include "dezaforge/graph_io.hpp"

#include <algorithm>
#include <charconv>
#include <optional>
#include <sstream>
#include <vector>

#include "dezaforge/error.hpp"

namespace dezaforge {

namespace {

constexpr std::size_t kShortLimit = 62;
constexpr std::size_t kMediumLimit = 258047;

bool is_space(char c) { return c == ' ' || c == '\n' || c == '\r' || c == '\t'; }

}  // namespace

std::string to_graph6(const Graph& g) {
  const std::size_t n = g.order();
  if (n > kMediumLimit) throw ShapeError("graph6 encoder supports at most 258047 vertices");
  std::string out;
  if (n <= kShortLimit) {
    out.push_back(static_cast<char>(n + 63));
  } else {
    out.push_back(static_cast<char>(126));
    for (int shift = 12; shift >= 0; shift -= 6) out.push_back(static_cast<char>(((n >> shift) & 63) + 63));
  }
  unsigned acc = 0;
  int filled = 0;
  for (std::size_t j = 1; j < n; ++j)
    for (std::size_t i = 0; i < j; ++i) {
      acc = (acc << 1) | (g.adjacent(i, j) ? 1u : 0u);
      if (++filled == 6) {
        out.push_back(static_cast<char>(acc + 63));
        acc = 0;
        filled = 0;
      }
    }
  if (filled) out.push_back(static_cast<char>((acc << (6 - filled)) + 63));
  return out;
}

Graph from_graph6(std::string_view text) {
  std::size_t pos = 0;
  constexpr std::string_view header = ">>graph6<<";
  if (text.substr(0, header.size()) == header) pos = header.size();
  std::size_t end = text.size();
  while (end > pos && is_space(text[end - 1])) --end;

  auto byte_at = [&](std::size_t p) -> unsigned {
    if (p >= end) throw ParseError("graph6 input truncated", p);
    const auto c = static_cast<unsigned char>(text[p]);
    if (c < 63 || c > 126) throw ParseError("graph6 byte outside 63..126", p);
    return c - 63u;
  };

  std::size_t n = byte_at(pos);
  ++pos;
  if (n == 63) {
    if (byte_at(pos) == 63) throw ParseError("graph6 8-byte size form is not supported", pos);
    n = 0;
    for (int i = 0; i < 3; ++i) n = (n << 6) | byte_at(pos++);
  }

  const std::size_t bits = n * (n - (n ? 1 : 0)) / 2;
  const std::size_t body = (bits + 5) / 6;
  if (end - pos != body)
    throw ParseError("graph6 body has " + std::to_string(end - pos) + " bytes, expected " + std::to_string(body),
                     end < pos + body ? end : pos + body);

  Graph g(n);
  std::size_t k = 0;
  for (std::size_t j = 1; j < n; ++j)
    for (std::size_t i = 0; i < j; ++i, ++k) {
      const unsigned chunk = byte_at(pos + k / 6);
      if ((chunk >> (5 - k % 6)) & 1u) g.add_edge(i, j);
    }
  if (bits % 6) {
    const unsigned last = byte_at(pos + body - 1);
    if (last & ((1u << (6 - bits % 6)) - 1)) throw ParseError("graph6 padding bits are not zero", pos + body - 1);
  }
  return g;
}

std::string to_edge_list(const Graph& g) {
  std::ostringstream os;
  os << "# vertices " << g.order() << '\n';
  for (std::size_t u = 0; u < g.order(); ++u)
    for (auto w : g.neighbours(u))
      if (u < w) os << u << ' ' << w << '\n';
  return os.str();
}

Graph from_edge_list(std::string_view text) {
  std::vector<std::pair<std::size_t, std::size_t>> edges;
  std::optional<std::size_t> declared;
  std::size_t max_vertex = 0;
  bool any = false;

  std::size_t line_start = 0;
  while (line_start < text.size()) {
    std::size_t line_end = text.find('\n', line_start);
    if (line_end == std::string_view::npos) line_end = text.size();
    const std::string_view line = text.substr(line_start, line_end - line_start);

    std::size_t p = 0;
    auto skip = [&] {
      while (p < line.size() && is_space(line[p])) ++p;
    };
    auto number = [&]() -> std::size_t {
      skip();
      std::size_t value = 0;
      const auto* first = line.data() + p;
      const auto [ptr, ec] = std::from_chars(first, line.data() + line.size(), value);
      if (ec != std::errc{} || ptr == first) throw ParseError("expected a vertex number", line_start + p);
      p += static_cast<std::size_t>(ptr - first);
      return value;
    };

    skip();
    if (p < line.size() && line[p] == '#') {
      constexpr std::string_view tag = "# vertices";
      if (line.substr(p, tag.size()) == tag) {
        p += tag.size();
        declared = number();
      }
    } else if (p < line.size()) {
      const auto u = number();
      const auto w = number();
      skip();
      if (p != line.size()) throw ParseError("trailing characters after edge", line_start + p);
      if (u == w) throw ParseError("loop edge", line_start);
      edges.emplace_back(u, w);
      max_vertex = std::max({max_vertex, u, w});
      any = true;
    }
    line_start = line_end + 1;
  }

  const std::size_t n = declared ? *declared : (any ? max_vertex + 1 : 0);
  if (any && max_vertex >= n) throw ParseError("edge endpoint exceeds declared vertex count", 0);
  Graph g(n);
  for (auto [u, w] : edges) g.add_edge(u, w);
  return g;
}

}  // namespace dezaforge
