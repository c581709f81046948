#include "cyclebench/graph6.hpp"

#include <cstdint>
#include <vector>

namespace cyc {

namespace {

constexpr int kBias = 63;
constexpr long kMaxShort = 62;
constexpr long kMaxMedium = 258047;    // 2^18 - 1
constexpr long kMaxLong = 68719476735;  // 2^36 - 1

void append_groups(std::string& out, std::uint64_t value, int groups) {
  for (int i = groups - 1; i >= 0; --i)
    out.push_back(static_cast<char>(((value >> (6 * i)) & 0x3f) + kBias));
}

}  // namespace

std::string encode_graph6(const Graph& g) {
  const long n = g.vertex_count();
  std::string out;
  if (n <= kMaxShort) {
    out.push_back(static_cast<char>(n + kBias));
  } else if (n <= kMaxMedium) {
    out.push_back('~');
    append_groups(out, static_cast<std::uint64_t>(n), 3);
  } else if (n <= kMaxLong) {
    out.push_back('~');
    out.push_back('~');
    append_groups(out, static_cast<std::uint64_t>(n), 6);
  } else {
    throw graph_error("graph too large for graph6");
  }
  int acc = 0, nbits = 0;
  auto push_bit = [&](int bit) {
    acc = (acc << 1) | bit;
    if (++nbits == 6) {
      out.push_back(static_cast<char>(acc + kBias));
      acc = 0;
      nbits = 0;
    }
  };
  for (int j = 1; j < n; ++j)
    for (int i = 0; i < j; ++i) push_bit(g.has_edge(i, j) ? 1 : 0);
  if (nbits > 0) out.push_back(static_cast<char>((acc << (6 - nbits)) + kBias));
  return out;
}

Graph parse_graph6(std::string_view text) {
  // strip one trailing newline, as files store one graph per line
  while (!text.empty() && (text.back() == '\n' || text.back() == '\r'))
    text.remove_suffix(1);
  if (text.empty()) throw parse_error("empty graph6 string", 0);
  if (text.substr(0, 10) == ">>graph6<<") text.remove_prefix(10);

  for (std::size_t i = 0; i < text.size(); ++i) {
    unsigned char c = static_cast<unsigned char>(text[i]);
    if (c < kBias || c > 126) throw parse_error("byte outside graph6 alphabet", i);
  }

  std::size_t pos = 0;
  auto read_groups = [&](int groups) {
    std::uint64_t v = 0;
    for (int i = 0; i < groups; ++i) {
      if (pos >= text.size()) throw parse_error("truncated length header", pos);
      v = (v << 6) | static_cast<std::uint64_t>(text[pos++] - kBias);
    }
    return v;
  };

  long n = 0;
  if (text[0] != '~') {
    n = text[pos++] - kBias;
  } else if (text.size() >= 2 && text[1] != '~') {
    ++pos;
    n = static_cast<long>(read_groups(3));
    if (n <= kMaxShort) throw parse_error("non-minimal length header", 0);
  } else {
    pos += 2;
    n = static_cast<long>(read_groups(6));
    if (n <= kMaxMedium) throw parse_error("non-minimal length header", 0);
  }

  const std::uint64_t nbits = static_cast<std::uint64_t>(n) * (n - 1) / 2;
  const std::size_t nbytes = static_cast<std::size_t>((nbits + 5) / 6);
  if (text.size() - pos < nbytes) throw parse_error("truncated adjacency data", text.size());
  if (text.size() - pos > nbytes) throw parse_error("trailing data after graph", pos + nbytes);

  std::vector<Edge> edges;
  std::uint64_t bit = 0;
  for (int j = 1; j < n; ++j) {
    for (int i = 0; i < j; ++i, ++bit) {
      int byte = text[pos + bit / 6] - kBias;
      if ((byte >> (5 - bit % 6)) & 1) edges.emplace_back(i, j);
    }
  }
  // padding bits past the triangle must be zero
  for (std::uint64_t b = nbits; b < nbytes * 6; ++b) {
    int byte = text[pos + b / 6] - kBias;
    if ((byte >> (5 - b % 6)) & 1)
      throw parse_error("nonzero padding bits", pos + static_cast<std::size_t>(b / 6));
  }
  return Graph(static_cast<int>(n), edges);
}

}  // namespace cyc
