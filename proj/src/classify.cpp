#include "gbei/classify.hpp"

#include <algorithm>
#include <array>
#include <charconv>
#include <chrono>
#include <fstream>
#include <mutex>
#include <sstream>
#include <unordered_set>

#include <json.hpp>

#include "gbei/canonical.hpp"
#include "gbei/cutset.hpp"
#include "gbei/graph6.hpp"
#include "gbei/ideal.hpp"
#include "gbei/parallel.hpp"

namespace gbei {

namespace {

int parse_int(std::string_view text, const std::string& whole) {
  int value = 0;
  const auto* end = text.data() + text.size();
  auto [ptr, ec] = std::from_chars(text.data(), end, value);
  if (ec != std::errc{} || ptr != end) {
    throw DomainError("bad integer range \"" + whole + "\"");
  }
  return value;
}

constexpr int kShards = 64;

struct ShardedKeySet {
  std::array<std::mutex, kShards> locks;
  std::array<std::unordered_set<std::uint64_t>, kShards> sets;

  static int shard_of(std::uint64_t key) {
    return static_cast<int>((key * 0x9E3779B97F4A7C15ULL) >> 58);
  }

  void insert_all(const std::vector<std::uint64_t>& keys) {
    for (std::uint64_t k : keys) {
      const int s = shard_of(k);
      std::lock_guard lock(locks[s]);
      sets[s].insert(k);
    }
  }

  std::vector<std::uint64_t> sorted() const {
    std::vector<std::uint64_t> out;
    std::size_t total = 0;
    for (const auto& s : sets) total += s.size();
    out.reserve(total);
    for (const auto& s : sets) out.insert(out.end(), s.begin(), s.end());
    std::sort(out.begin(), out.end());
    return out;
  }
};

// Whether H - w stays connected.
bool is_non_cut_vertex(const Graph& h, int w) {
  const VertexSet rest = h.active().without(w);
  if (rest.empty()) return true;
  return reachable(h, rest.lowest(), VertexSet::single(w)) == rest;
}

}  // namespace

IntRange IntRange::parse(const std::string& text) {
  const auto dots = text.find("..");
  IntRange r;
  if (dots == std::string::npos) {
    r.lo = r.hi = parse_int(text, text);
  } else {
    r.lo = parse_int(std::string_view(text).substr(0, dots), text);
    r.hi = parse_int(std::string_view(text).substr(dots + 2), text);
  }
  if (r.lo > r.hi) throw DomainError("empty range \"" + text + "\"");
  return r;
}

std::string IntRange::to_string() const {
  return std::to_string(lo) + ".." + std::to_string(hi);
}

Graph GraphStream::operator[](std::size_t i) const {
  return Graph::from_rows(n_, rows_.data() + i * n_);
}

void GraphStream::push_back(const Graph& g) {
  if (g.order() != n_ || !g.is_contiguous()) {
    throw DomainError("stream of order " + std::to_string(n_) +
                      " cannot hold " + to_string(g));
  }
  for (int v = 0; v < n_; ++v) rows_.push_back(g.row(v));
}

GraphStream extend_connected(const GraphStream& previous, int threads) {
  const int n = previous.order() + 1;
  if (previous.order() < 1 || n > 11) {
    throw DomainError("augmentation supports levels up to n = 11");
  }
  ShardedKeySet store;
  const Mask subsets = Mask{1} << (n - 1);
  const int fresh = n - 1;

  parallel_for(previous.size(), threads, 16,
               [&](std::size_t begin, std::size_t end, int) {
    std::vector<std::uint64_t> keys;
    for (std::size_t idx = begin; idx < end; ++idx) {
      const Graph parent = previous[idx];
      std::array<Mask, kMaxVertices> rows{};
      for (int v = 0; v < fresh; ++v) rows[v] = parent.row(v);
      for (Mask s = 1; s < subsets; ++s) {
        for (int v = 0; v < fresh; ++v) {
          rows[v] = parent.row(v) | (((s >> v) & 1U) << fresh);
        }
        rows[fresh] = s;
        const int d = std::popcount(s);
        const Graph h = Graph::from_rows(n, rows.data());
        bool keep = true;
        for (int w = 0; w < fresh && keep; ++w) {
          if (h.degree(w) < d && is_non_cut_vertex(h, w)) keep = false;
        }
        if (keep) keys.push_back(canonical_cert(h).small_key());
      }
    }
    store.insert_all(keys);
  });

  GraphStream out(n);
  const auto keys = store.sorted();
  out.reserve(keys.size());
  for (std::uint64_t k : keys) {
    out.push_back(CanonicalCert::from_small_key(k).graph());
  }
  return out;
}

GraphStream generate_connected(int n, int threads) {
  if (n < 2 || n > 10) {
    throw DomainError("generation supports 2 <= n <= 10, got " +
                      std::to_string(n));
  }
  GraphStream level(1);
  level.push_back(make_graph(1, {}));
  for (int k = 2; k <= n; ++k) level = extend_connected(level, threads);
  return level;
}

GraphStream read_graph6_stream(std::istream& in, bool strict, int expected_n) {
  GraphStream out(expected_n > 0 ? expected_n : 0);
  std::unordered_set<CanonicalCert, CanonicalCertHash> seen;
  std::string line;
  int line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty()) continue;
    const std::string where = "line " + std::to_string(line_no) + ": ";
    Graph g = [&] {
      try {
        return graph6_decode(line);
      } catch (const std::exception& e) {
        throw FormatError(where + e.what());
      }
    }();
    if (out.order() == 0) out = GraphStream(g.order());
    if (g.order() != out.order()) {
      throw FormatError(where + "graph has " + std::to_string(g.order()) +
                        " vertices, expected " + std::to_string(out.order()));
    }
    if (strict) {
      if (!is_connected(g)) throw FormatError(where + "graph is disconnected");
      if (!seen.insert(canonical_cert(g)).second) {
        throw FormatError(where + "graph is isomorphic to an earlier line");
      }
    }
    out.push_back(g);
  }
  if (in.bad()) throw FormatError("read failure");
  return out;
}

GraphStream ingest_graph6(const std::filesystem::path& path, bool strict,
                          int expected_n) {
  std::ifstream in(path);
  if (!in) throw FormatError("cannot open " + path.string());
  try {
    return read_graph6_stream(in, strict, expected_n);
  } catch (const FormatError& e) {
    throw FormatError(path.string() + ": " + e.what());
  }
}

void write_graph6_stream(std::ostream& out, const GraphStream& stream) {
  for (std::size_t i = 0; i < stream.size(); ++i) {
    out << graph6_encode(stream[i]) << '\n';
  }
}

StreamProvider generator_source(int threads) {
  auto levels = std::make_shared<std::map<int, GraphStream>>();
  return [levels, threads](int n) {
    if (n < 2 || n > 10) {
      throw DomainError("generation supports 2 <= n <= 10, got " +
                        std::to_string(n));
    }
    if (levels->empty()) {
      GraphStream base(1);
      base.push_back(make_graph(1, {}));
      levels->emplace(1, std::move(base));
    }
    int top = levels->rbegin()->first;
    while (top < n) {
      GraphStream next = extend_connected(levels->at(top), threads);
      levels->emplace(++top, std::move(next));
    }
    return levels->at(n);
  };
}

std::filesystem::path cache_file(const std::filesystem::path& dir, int n) {
  return dir / ("connected_" + std::to_string(n) + ".g6");
}

StreamProvider cached_source(const std::filesystem::path& dir, int threads,
                             bool strict) {
  auto generate = generator_source(threads);
  return [dir, threads, strict, generate](int n) {
    const auto file = cache_file(dir, n);
    if (std::filesystem::exists(file)) return ingest_graph6(file, strict, n);
    GraphStream level = generate(n);
    std::filesystem::create_directories(dir);
    std::ofstream out(file);
    if (!out) throw FormatError("cannot write " + file.string());
    write_graph6_stream(out, level);
    return level;
  };
}

std::map<int, std::int64_t> count_unmixed(const GraphStream& stream,
                                          IntRange m_range,
                                          const ClassifyOptions& options) {
  if (m_range.lo < 2) throw DomainError("m must be at least 2");
  const int span = m_range.hi - m_range.lo + 1;
  const int workers = resolve_threads(options.threads);
  std::vector<std::vector<std::int64_t>> partial(
      workers, std::vector<std::int64_t>(span, 0));

  parallel_for(stream.size(), workers, 256,
               [&](std::size_t begin, std::size_t end, int worker) {
    auto& mine = partial[worker];
    for (std::size_t i = begin; i < end; ++i) {
      const Graph g = stream[i];
      if (!is_connected(g)) {
        throw DomainError("stream graph " + std::to_string(i) +
                          " is disconnected: " + to_string(g));
      }
      for (int m = m_range.lo; m <= m_range.hi; ++m) {
        if (options.use_filters && m >= 3 && !unmixed_necessary_filters(g, m)) {
          continue;
        }
        if (is_unmixed(g, m)) ++mine[m - m_range.lo];
      }
    }
  });

  std::map<int, std::int64_t> out;
  for (int m = m_range.lo; m <= m_range.hi; ++m) {
    std::int64_t total = 0;
    for (const auto& p : partial) total += p[m - m_range.lo];
    out[m] = total;
  }
  return out;
}

ClassificationTable classify_table(IntRange n_range, IntRange m_range,
                                   const StreamProvider& source,
                                   std::string source_name,
                                   const ClassifyOptions& options) {
  const auto start = std::chrono::steady_clock::now();
  ClassificationTable table;
  table.source = std::move(source_name);
  for (int n = n_range.lo; n <= n_range.hi; ++n) {
    const GraphStream stream = source(n);
    table.graph_totals[n] = static_cast<std::int64_t>(stream.size());
    for (auto [m, count] : count_unmixed(stream, m_range, options)) {
      table.counts[{n, m}] = count;
    }
  }
  table.elapsed_ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                         std::chrono::steady_clock::now() - start)
                         .count();
  return table;
}

namespace {

std::vector<std::tuple<int, int, std::int64_t>> rows_by_m_then_n(
    const ClassificationTable& table) {
  std::vector<std::tuple<int, int, std::int64_t>> rows;
  for (const auto& [key, count] : table.counts) {
    rows.emplace_back(key.second, key.first, count);
  }
  std::sort(rows.begin(), rows.end());
  return rows;
}

}  // namespace

void emit(const ClassificationTable& table, TableFormat format,
          std::ostream& out) {
  const auto rows = rows_by_m_then_n(table);
  if (format == TableFormat::Csv) {
    out << "n,m,count\n";
    for (const auto& [m, n, count] : rows) {
      out << n << ',' << m << ',' << count << '\n';
    }
    return;
  }
  nlohmann::ordered_json totals = nlohmann::ordered_json::object();
  for (const auto& [n, total] : table.graph_totals) {
    totals[std::to_string(n)] = total;
  }
  nlohmann::ordered_json counts = nlohmann::ordered_json::array();
  for (const auto& [m, n, count] : rows) {
    counts.push_back({{"n", n}, {"m", m}, {"count", count}});
  }
  nlohmann::ordered_json doc;
  doc["meta"] = {{"source", table.source},
                 {"elapsed_ms", table.elapsed_ms},
                 {"graph_totals", totals}};
  doc["counts"] = counts;
  out << doc.dump(2) << '\n';
}

void emit(const ClassificationTable& table, TableFormat format,
          const std::filesystem::path& path) {
  std::ofstream out(path);
  if (!out) throw FormatError("cannot write " + path.string());
  emit(table, format, out);
  if (!out) throw FormatError("write failed for " + path.string());
}

ClassificationTable read_table_json(std::istream& in) {
  ClassificationTable table;
  try {
    const auto doc = nlohmann::json::parse(in);
    const auto& meta = doc.at("meta");
    table.source = meta.at("source").get<std::string>();
    table.elapsed_ms = meta.at("elapsed_ms").get<std::int64_t>();
    for (const auto& [key, value] : meta.at("graph_totals").items()) {
      table.graph_totals[std::stoi(key)] = value.get<std::int64_t>();
    }
    for (const auto& row : doc.at("counts")) {
      table.counts[{row.at("n").get<int>(), row.at("m").get<int>()}] =
          row.at("count").get<std::int64_t>();
    }
  } catch (const nlohmann::json::exception& e) {
    throw FormatError(std::string("table json: ") + e.what());
  }
  return table;
}

}  // namespace gbei
