#include "gbei/graph6.hpp"

#include <array>

namespace gbei {

namespace {

constexpr std::string_view kHeader = ">>graph6<<";

int payload_length(int n) { return (n * (n - 1) / 2 + 5) / 6; }

}  // namespace

Graph graph6_decode(std::string_view line) {
  if (line.starts_with(kHeader)) line.remove_prefix(kHeader.size());
  while (!line.empty() && (line.back() == '\n' || line.back() == '\r')) {
    line.remove_suffix(1);
  }
  if (line.empty()) throw FormatError("graph6: empty line");
  for (std::size_t i = 0; i < line.size(); ++i) {
    const auto c = static_cast<unsigned char>(line[i]);
    if (c < 63 || c > 126) {
      throw FormatError("graph6: illegal character at offset " +
                        std::to_string(i));
    }
  }
  const int n = static_cast<unsigned char>(line[0]) - 63;
  if (n == 63) {
    throw FormatError("graph6: multi-byte vertex counts (n > 62) unsupported");
  }
  if (n < 1 || n > kMaxVertices) {
    throw FormatError("graph6: vertex count " + std::to_string(n) +
                      " outside supported range [1, 32]");
  }
  const int expected = payload_length(n);
  const int got = static_cast<int>(line.size()) - 1;
  if (got < expected) {
    throw FormatError("graph6: payload too short for n=" + std::to_string(n));
  }
  if (got > expected) {
    throw FormatError("graph6: trailing characters after payload");
  }

  std::array<Mask, kMaxVertices> rows{};
  int bit = 0;
  for (int j = 1; j < n; ++j) {
    for (int i = 0; i < j; ++i, ++bit) {
      const int c = static_cast<unsigned char>(line[1 + bit / 6]) - 63;
      if ((c >> (5 - bit % 6)) & 1) {
        rows[i] |= Mask{1} << j;
        rows[j] |= Mask{1} << i;
      }
    }
  }
  for (; bit % 6 != 0; ++bit) {
    const int c = static_cast<unsigned char>(line[1 + bit / 6]) - 63;
    if ((c >> (5 - bit % 6)) & 1) {
      throw FormatError("graph6: nonzero padding bits");
    }
  }
  return Graph::from_rows(n, rows.data());
}

std::string graph6_encode(const Graph& g) {
  if (!g.is_contiguous()) {
    throw DomainError("graph6 needs a contiguous labeling");
  }
  const int n = g.order();
  std::string out(1 + payload_length(n), '\0');
  out[0] = static_cast<char>(n + 63);
  int bit = 0;
  int acc = 0;
  for (int j = 1; j < n; ++j) {
    for (int i = 0; i < j; ++i) {
      acc = (acc << 1) | (g.has_edge(i, j) ? 1 : 0);
      if (++bit % 6 == 0) {
        out[bit / 6] = static_cast<char>(acc + 63);
        acc = 0;
      }
    }
  }
  if (bit % 6 != 0) {
    acc <<= 6 - bit % 6;
    out[bit / 6 + 1] = static_cast<char>(acc + 63);
  }
  return out;
}

}  // namespace gbei
