#include "abound/graph6.hpp"

#include <cstdint>

#include "abound/errors.hpp"

namespace abound {

namespace {

constexpr std::string_view kHeader = ">>graph6<<";

void put_size(std::string& out, std::uint64_t n) {
  if (n <= 62) {
    out.push_back(static_cast<char>(63 + n));
  } else if (n <= 258047) {
    out.push_back('~');
    for (int shift = 12; shift >= 0; shift -= 6) out.push_back(static_cast<char>(63 + ((n >> shift) & 63)));
  } else {
    out += "~~";
    for (int shift = 30; shift >= 0; shift -= 6) out.push_back(static_cast<char>(63 + ((n >> shift) & 63)));
  }
}

int sextet(std::string_view text, std::size_t pos) {
  if (pos >= text.size()) throw Graph6Error("graph6: unexpected end of input", pos);
  unsigned char c = static_cast<unsigned char>(text[pos]);
  if (c < 63 || c > 126) throw Graph6Error("graph6: byte outside 63..126", pos);
  return c - 63;
}

}  // namespace

std::string to_graph6(const Graph& g) {
  std::string out;
  put_size(out, static_cast<std::uint64_t>(g.n()));
  int acc = 0;
  int filled = 0;
  for (int v = 1; v < g.n(); ++v) {
    for (int u = 0; u < v; ++u) {
      acc = (acc << 1) | (g.adjacent(u, v) ? 1 : 0);
      if (++filled == 6) {
        out.push_back(static_cast<char>(63 + acc));
        acc = 0;
        filled = 0;
      }
    }
  }
  if (filled > 0) out.push_back(static_cast<char>(63 + (acc << (6 - filled))));
  return out;
}

Graph from_graph6(std::string_view text) {
  std::size_t pos = 0;
  if (text.starts_with(kHeader)) pos = kHeader.size();
  if (pos >= text.size()) throw Graph6Error("graph6: empty input", pos);

  std::uint64_t n = 0;
  if (text[pos] == '~') {
    int len = 3;
    ++pos;
    if (pos < text.size() && text[pos] == '~') {
      len = 6;
      ++pos;
    }
    for (int i = 0; i < len; ++i) n = (n << 6) | static_cast<std::uint64_t>(sextet(text, pos++));
  } else {
    n = static_cast<std::uint64_t>(sextet(text, pos++));
  }
  if (n > 100000) throw Graph6Error("graph6: vertex count too large", pos - 1);

  Graph g(static_cast<int>(n));
  const std::uint64_t bits = n * (n - (n > 0 ? 1 : 0)) / 2;
  const std::size_t need = static_cast<std::size_t>((bits + 5) / 6);
  std::size_t body = pos;
  int u = 0;
  int v = 1;
  for (std::size_t b = 0; b < need; ++b) {
    int word = sextet(text, body + b);
    for (int bit = 5; bit >= 0; --bit) {
      if (v >= static_cast<int>(n)) break;
      if ((word >> bit) & 1) g.add_edge(u, v);
      if (++u == v) {
        u = 0;
        ++v;
      }
    }
  }
  if (body + need != text.size()) {
    throw Graph6Error("graph6: trailing bytes after adjacency data", body + need);
  }
  return g;
}

std::vector<Graph> read_graph6_stream(std::istream& in) {
  std::vector<Graph> out;
  std::string line;
  std::size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    while (!line.empty() && (line.back() == '\r' || line.back() == ' ')) line.pop_back();
    if (line.empty()) continue;
    try {
      out.push_back(from_graph6(line));
    } catch (const Graph6Error& e) {
      throw Graph6Error("line " + std::to_string(lineno) + ": graph6 parse failure", e.offset());
    }
  }
  return out;
}

}  // namespace abound
