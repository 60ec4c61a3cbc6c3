#pragma once

#include <cstdint>
#include <filesystem>
#include <functional>
#include <iosfwd>
#include <map>
#include <memory>
#include <string>
#include <utility>
#include <vector>

#include "gbei/graph.hpp"

namespace gbei {

/// Inclusive integer range written "a..b" (or a single "a").
struct IntRange {
  int lo = 0;
  int hi = -1;

  static IntRange parse(const std::string& text);
  bool contains(int v) const { return lo <= v && v <= hi; }
  std::string to_string() const;
};

/// Ordered sequence of graphs, all on exactly order() vertices, stored as
/// packed adjacency rows.
class GraphStream {
 public:
  GraphStream() = default;
  explicit GraphStream(int n) : n_(n) {}

  int order() const { return n_; }
  std::size_t size() const { return n_ == 0 ? 0 : rows_.size() / n_; }
  bool empty() const { return size() == 0; }

  Graph operator[](std::size_t i) const;
  /// Requires g.order() == order() and a contiguous labeling.
  void push_back(const Graph& g);
  void reserve(std::size_t count) { rows_.reserve(count * n_); }

 private:
  int n_ = 0;
  std::vector<Mask> rows_;
};

/// Every connected graph on n vertices (2 <= n <= 10) up to isomorphism,
/// once each, as canonical representatives sorted by certificate.
GraphStream generate_connected(int n, int threads = 0);

/// Level n+1 from the connected graphs on n vertices: attach a new vertex
/// through every nonempty neighbor subset, keep the candidate only when the
/// new vertex has minimum degree among the non-cut vertices, and dedupe by
/// canonical certificate in hash-sharded sets.
GraphStream extend_connected(const GraphStream& previous, int threads = 0);

/// Reads one graph6 graph per line (blank lines skipped). All graphs must
/// share one order (expected_n when positive). With strict, disconnected
/// graphs and isomorphic duplicates are rejected. Errors name the line.
GraphStream read_graph6_stream(std::istream& in, bool strict = false,
                               int expected_n = 0);
GraphStream ingest_graph6(const std::filesystem::path& path,
                          bool strict = false, int expected_n = 0);
void write_graph6_stream(std::ostream& out, const GraphStream& stream);

/// Supplies the connected graphs on n vertices.
using StreamProvider = std::function<GraphStream(int n)>;

/// Generates levels on demand, memoizing each level.
StreamProvider generator_source(int threads = 0);

/// Uses dir/connected_<n>.g6 when present; otherwise generates the level
/// and writes the file.
StreamProvider cached_source(const std::filesystem::path& dir, int threads = 0,
                             bool strict = false);

std::filesystem::path cache_file(const std::filesystem::path& dir, int n);

struct ClassificationTable {
  /// (n, m) -> number of connected graphs on n vertices with J_{G,m} unmixed
  std::map<std::pair<int, int>, std::int64_t> counts;
  std::string source;
  std::int64_t elapsed_ms = 0;
  std::map<int, std::int64_t> graph_totals;

  /// Throws std::out_of_range for an absent cell.
  std::int64_t count(int n, int m) const { return counts.at({n, m}); }
};

struct ClassifyOptions {
  int threads = 0;
  /// Reject with the m >= 3 necessary conditions before the cutset scan.
  bool use_filters = true;
};

/// Counts unmixed J_{G,m} for m in m_range over one stream. Throws
/// DomainError on a disconnected graph. Independent of worker count and
/// stream order.
std::map<int, std::int64_t> count_unmixed(const GraphStream& stream,
                                          IntRange m_range,
                                          const ClassifyOptions& options = {});

ClassificationTable classify_table(IntRange n_range, IntRange m_range,
                                   const StreamProvider& source,
                                   std::string source_name,
                                   const ClassifyOptions& options = {});

enum class TableFormat { Csv, Json };

/// CSV: header "n,m,count", rows sorted by (m, n). JSON:
/// {"meta": {"source", "elapsed_ms", "graph_totals"}, "counts": [...]}.
void emit(const ClassificationTable& table, TableFormat format,
          std::ostream& out);
void emit(const ClassificationTable& table, TableFormat format,
          const std::filesystem::path& path);

ClassificationTable read_table_json(std::istream& in);

}  // namespace gbei
