#include "perfdiv/graph6.hpp"

#include <cstddef>

namespace perfdiv {

// Short form: one header byte n+63 (n <= 62), then the upper triangle of the
// adjacency matrix in column order x(0,1) x(0,2) x(1,2) x(0,3) ..., packed
// big-endian into 6-bit groups, each group emitted as value+63, zero-padded.

Graph parse_graph6(std::string_view line) {
  // Tolerate the conventional ">>graph6<<" file header prefix.
  constexpr std::string_view kHeader = ">>graph6<<";
  if (line.substr(0, kHeader.size()) == kHeader) line.remove_prefix(kHeader.size());
  while (!line.empty() && (line.back() == '\n' || line.back() == '\r'))
    line.remove_suffix(1);

  if (line.empty()) throw ParseError("graph6: empty line");
  const unsigned char h = static_cast<unsigned char>(line[0]);
  if (h == 126) throw ParseError("graph6: long form header (n > 62 unsupported)");
  if (h < 63 || h > 63 + kMaxVertices)
    throw ParseError("graph6: malformed header byte " + std::to_string(int{h}));
  const int n = int{h} - 63;

  const int nbits = n * (n - 1) / 2;
  const std::size_t body = static_cast<std::size_t>((nbits + 5) / 6);
  if (line.size() < 1 + body) throw ParseError("graph6: truncated bit field");
  if (line.size() > 1 + body) throw ParseError("graph6: trailing characters");

  GraphBuilder b(n);
  int t = 0;
  for (std::size_t k = 0; k < body; ++k) {
    const unsigned char c = static_cast<unsigned char>(line[1 + k]);
    if (c < 63 || c > 126)
      throw ParseError("graph6: out-of-range character at column " +
                       std::to_string(k + 2));
    const unsigned group = static_cast<unsigned>(c) - 63;
    for (int bitpos = 5; bitpos >= 0; --bitpos, ++t) {
      const bool bit = (group >> bitpos) & 1;
      if (t >= nbits) {
        if (bit) throw ParseError("graph6: non-zero padding bit");
        continue;
      }
      if (bit) {
        // t-th pair in column order: column j, row i, t = j(j-1)/2 + i.
        int j = 1;
        while ((j + 1) * j / 2 <= t) ++j;
        const int i = t - j * (j - 1) / 2;
        b.add_edge(i, j);
      }
    }
  }
  return std::move(b).build();
}

std::string write_graph6(const Graph& g) {
  const int n = g.size();
  std::string out;
  out.push_back(static_cast<char>(n + 63));

  const int nbits = n * (n - 1) / 2;
  unsigned group = 0;
  int filled = 0;
  for (int j = 1; j < n; ++j) {
    for (int i = 0; i < j; ++i) {
      group = (group << 1) | static_cast<unsigned>(g.adjacent(i, j));
      if (++filled == 6) {
        out.push_back(static_cast<char>(group + 63));
        group = 0;
        filled = 0;
      }
    }
  }
  if (nbits % 6 != 0) {
    group <<= 6 - filled;
    out.push_back(static_cast<char>(group + 63));
  }
  return out;
}

}  // namespace perfdiv
