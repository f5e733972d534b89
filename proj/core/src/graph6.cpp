#include "pdiv/graph6.hpp"

#include "pdiv/error.hpp"

namespace pdiv {

std::string encode_graph6(const Graph& g) {
  const int n = g.order();
  std::string out;
  out.push_back(static_cast<char>(63 + n));
  int acc = 0;
  int filled = 0;
  for (int j = 1; j < n; ++j) {
    for (int i = 0; i < j; ++i) {
      acc = (acc << 1) | (g.adjacent(i, j) ? 1 : 0);
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

Graph decode_graph6(std::string_view line) {
  if (!line.empty() && line.back() == '\n') line.remove_suffix(1);
  if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
  if (line.starts_with(">>graph6<<")) line.remove_prefix(10);
  if (line.empty()) throw Error(Errc::malformed_line, "empty line");
  for (char c : line) {
    if (c < 63 || c > 126) throw Error(Errc::malformed_line, "byte outside 63..126");
  }
  const int size_byte = line[0] - 63;
  if (size_byte > kMaxOrder) throw Error(Errc::unsupported_size, "graph6 size field above 62");
  const int n = size_byte;
  const long bits = static_cast<long>(n) * (n - 1) / 2;
  const long bytes = (bits + 5) / 6;
  if (static_cast<long>(line.size()) != 1 + bytes) {
    throw Error(Errc::malformed_line, "expected " + std::to_string(1 + bytes) + " bytes for n = " +
                                          std::to_string(n) + ", got " + std::to_string(line.size()));
  }
  Graph g(n);
  long k = 0;
  for (int j = 1; j < n; ++j) {
    for (int i = 0; i < j; ++i, ++k) {
      const int byte = line[1 + k / 6] - 63;
      if ((byte >> (5 - k % 6)) & 1) g.add_edge(i, j);
    }
  }
  if (bits % 6 != 0) {
    const int last = line.back() - 63;
    const int pad = static_cast<int>(6 - bits % 6);
    if ((last & ((1 << pad) - 1)) != 0) throw Error(Errc::malformed_line, "nonzero padding bits");
  }
  return g;
}

}  // namespace pdiv
