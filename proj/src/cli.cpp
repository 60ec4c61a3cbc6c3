#include "gbei/cli.hpp"

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <set>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "gbei/circulant.hpp"
#include "gbei/classify.hpp"
#include "gbei/graph6.hpp"
#include "gbei/ideal.hpp"
#include "gbei/parallel.hpp"
#include "gbei/report.hpp"

namespace gbei::cli {

namespace {

using Json = nlohmann::ordered_json;

struct Options {
  std::string graph6;
  std::string edges_file;
  std::string distances;
  std::string n_text;
  int m = 0;
  int r = 0;
  std::string m_text = "3..10";
  std::string out_path;
  std::string format = "csv";
  int threads = 0;
  std::string cache_dir;
  bool strict = false;
  bool json = false;
};

std::set<int> parse_distances(const std::string& csv) {
  std::set<int> out;
  std::stringstream ss(csv);
  std::string item;
  while (std::getline(ss, item, ',')) {
    if (item.empty()) continue;
    try {
      std::size_t used = 0;
      const int d = std::stoi(item, &used);
      if (used != item.size()) throw std::invalid_argument(item);
      out.insert(d);
    } catch (const std::logic_error&) {
      throw DomainError("bad distance \"" + item + "\"");
    }
  }
  if (out.empty()) throw DomainError("empty distance list");
  return out;
}

int single_n(const Options& o) {
  const IntRange r = IntRange::parse(o.n_text);
  if (r.lo != r.hi) throw DomainError("--n must be a single value here");
  return r.lo;
}

int effective_threads(int requested) {
  if (const char* env = std::getenv("GBEI_THREADS"); env && *env) {
    try {
      return std::stoi(env);
    } catch (const std::logic_error&) {
      throw DomainError(std::string("GBEI_THREADS is not an integer: ") + env);
    }
  }
  return requested;
}

void require_connected(const Graph& g) {
  const auto comps = components(g);
  if (comps.size() == 1) return;
  std::string msg = "graph is disconnected; components:";
  for (VertexSet c : comps) msg += " " + c.to_string();
  throw DomainError(msg);
}

std::string describe_circulant(int n, const std::set<int>& d) {
  std::string s = "C_" + std::to_string(n) + "(";
  bool first = true;
  for (int x : d) {
    if (!first) s += ",";
    s += std::to_string(x);
    first = false;
  }
  return s + ")";
}

int do_analyze(const Options& o, std::ostream& out) {
  Graph g = [&] {
    if (!o.graph6.empty()) return graph6_decode(o.graph6);
    if (!o.edges_file.empty()) {
      std::ifstream in(o.edges_file);
      if (!in) throw DomainError("cannot open " + o.edges_file);
      return read_edge_list(in);
    }
    if (!o.distances.empty()) {
      return circulant(single_n(o), parse_distances(o.distances));
    }
    throw CLI::RequiredError("one of --graph6, --edges, --distances");
  }();
  require_connected(g);
  const IdealProfile profile = ideal_profile(g, o.m);
  Json doc = to_json(profile);
  if (!is_complete(g)) doc["dual_empty"] = to_json(empty_prime_isolation(g, o.m));
  out << doc.dump(2) << '\n';
  return kExitOk;
}

int do_circulant(const Options& o, std::ostream& out) {
  const int n = single_n(o);
  std::set<int> dist;
  if (!o.distances.empty()) {
    dist = parse_distances(o.distances);
  } else {
    if (o.r < 1) throw DomainError("--r must be at least 1");
    for (int k = 1; k <= o.r; ++k) dist.insert(k);
  }
  const Graph g = circulant(n, dist);
  const IdealProfile profile = ideal_profile(g, o.m);

  // A distance set {1..r} is a power cycle.
  const int r = static_cast<int>(dist.size());
  const bool power = *dist.rbegin() == r;
  std::optional<bool> closed_form;
  if (power && !power_cycle_is_complete(n, r)) {
    closed_form = power_cycle_unmixed(n, r, o.m);
  }

  if (o.json) {
    Json doc;
    doc["graph"] = describe_circulant(n, dist);
    doc["profile"] = to_json(profile);
    doc["nonempty_cutsets"] = profile.num_cutsets - 1;
    if (closed_form) {
      doc["power_cycle"] = {{"r", r}, {"closed_form_unmixed", *closed_form}};
    }
    out << doc.dump(2) << '\n';
    return kExitOk;
  }
  out << "graph=" << describe_circulant(n, dist) << '\n'
      << "n=" << profile.n << " m=" << profile.m << '\n'
      << "unmixed=" << (profile.unmixed ? "true" : "false") << '\n'
      << "nonempty_cutsets=" << profile.num_cutsets - 1 << '\n'
      << "height_empty=" << profile.height_empty
      << " min_height=" << profile.min_height
      << " max_height=" << profile.max_height << '\n'
      << "verdict=" << to_string(profile.verdict) << '\n';
  if (closed_form) {
    out << "closed_form_unmixed=" << (*closed_form ? "true" : "false") << '\n';
  }
  for (const PrimeComponent& p : profile.primes) {
    if (p.cutset.set.empty()) continue;
    out << "cutset " << p.cutset.set.to_string()
        << " c=" << p.cutset.num_components << " height=" << p.height << '\n';
  }
  return kExitOk;
}

int do_classify(const Options& o, std::ostream& out) {
  const IntRange n_range = IntRange::parse(o.n_text);
  const IntRange m_range = IntRange::parse(o.m_text);
  const int threads = effective_threads(o.threads);
  StreamProvider source;
  std::string source_name;
  if (!o.cache_dir.empty()) {
    source = cached_source(o.cache_dir, threads, o.strict);
    source_name = "cache:" + o.cache_dir;
  } else {
    source = generator_source(threads);
    source_name = "generator";
  }
  ClassifyOptions copts;
  copts.threads = threads;
  const ClassificationTable table =
      classify_table(n_range, m_range, source, source_name, copts);
  const TableFormat format =
      (o.json || o.format == "json") ? TableFormat::Json : TableFormat::Csv;
  if (o.out_path.empty()) {
    emit(table, format, out);
    return kExitOk;
  }
  emit(table, format, std::filesystem::path(o.out_path));
  if (o.json) {
    Json doc;
    doc["out"] = o.out_path;
    doc["elapsed_ms"] = table.elapsed_ms;
    out << doc.dump(2) << '\n';
  } else {
    out << "wrote " << o.out_path << '\n';
  }
  return kExitOk;
}

int do_gen(const Options& o, std::ostream& out) {
  const IntRange n_range = IntRange::parse(o.n_text);
  const int threads = effective_threads(o.threads);
  StreamProvider source = o.cache_dir.empty()
                              ? generator_source(threads)
                              : cached_source(o.cache_dir, threads, o.strict);
  std::ofstream file;
  if (!o.out_path.empty()) {
    file.open(o.out_path);
    if (!file) throw DomainError("cannot write " + o.out_path);
  }
  Json totals = Json::object();
  Json graphs = Json::object();
  for (int n = n_range.lo; n <= n_range.hi; ++n) {
    const GraphStream stream = source(n);
    totals[std::to_string(n)] = stream.size();
    if (file.is_open()) {
      write_graph6_stream(file, stream);
    } else if (o.cache_dir.empty()) {
      if (o.json) {
        Json lines = Json::array();
        for (std::size_t i = 0; i < stream.size(); ++i) {
          lines.push_back(graph6_encode(stream[i]));
        }
        graphs[std::to_string(n)] = std::move(lines);
      } else {
        write_graph6_stream(out, stream);
      }
    }
  }
  if (o.json) {
    Json doc;
    doc["graph_totals"] = totals;
    if (!graphs.empty()) doc["graphs"] = graphs;
    out << doc.dump(2) << '\n';
  } else if (file.is_open() || !o.cache_dir.empty()) {
    for (const auto& [n, total] : totals.items()) {
      out << "n=" << n << " graphs=" << total.get<std::size_t>() << '\n';
    }
  }
  return kExitOk;
}

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out,
        std::ostream& err) {
  Options o;
  CLI::App app{"Combinatorial classification of generalized binomial edge "
               "ideals J_{G,m}"};
  app.name("gbei");
  app.require_subcommand(1, 1);

  auto* analyze = app.add_subcommand("analyze", "Profile J_{G,m} for one graph");
  auto* g6 = analyze->add_option("--graph6", o.graph6, "Graph as a graph6 line");
  auto* edges = analyze->add_option("--edges", o.edges_file,
                                    "Edge-list file: \"n m\" then m lines \"u v\"");
  auto* adist = analyze->add_option("--distances", o.distances,
                                    "Circulant distances, comma separated (needs --n)");
  analyze->add_option("--n", o.n_text, "Circulant order");
  analyze->add_option("--m", o.m, "Matrix rows m >= 2")->required();
  analyze->add_flag("--json", o.json, "JSON output (always on for analyze)");
  g6->excludes(edges)->excludes(adist);
  edges->excludes(adist);
  adist->needs(analyze->get_option("--n"));

  auto* circ = app.add_subcommand("circulant", "Profile a circulant or power cycle");
  circ->add_option("--n", o.n_text, "Order")->required();
  auto* cr = circ->add_option("--r", o.r, "Power cycle exponent");
  auto* cd = circ->add_option("--distances", o.distances, "Distance set, comma separated");
  cr->excludes(cd);
  circ->add_option("--m", o.m, "Matrix rows m >= 2")->required();
  circ->add_flag("--json", o.json, "JSON output");

  auto* cls = app.add_subcommand("classify", "Count unmixed J_{G,m} over all connected graphs");
  cls->add_option("--n", o.n_text, "Vertex range a..b (2 <= a, b <= 10)")->required();
  cls->add_option("--m", o.m_text, "m range a..b")->capture_default_str();
  cls->add_option("--out", o.out_path, "Output file");
  cls->add_option("--format", o.format, "csv or json")
      ->check(CLI::IsMember({"csv", "json"}))
      ->capture_default_str();
  cls->add_option("--threads", o.threads, "Worker threads (0: all cores)");
  cls->add_option("--cache-dir", o.cache_dir, "Directory of connected_<n>.g6 files");
  cls->add_flag("--strict", o.strict, "Validate ingested graph6 files");
  cls->add_flag("--json", o.json, "JSON output");

  auto* gen = app.add_subcommand("gen", "Generate connected graphs up to isomorphism");
  gen->add_option("--n", o.n_text, "Vertex range a..b")->required();
  gen->add_option("--out", o.out_path, "Write graph6 lines to this file");
  gen->add_option("--threads", o.threads, "Worker threads (0: all cores)");
  gen->add_option("--cache-dir", o.cache_dir, "Write connected_<n>.g6 files here");
  gen->add_flag("--strict", o.strict, "Validate existing cache files");
  gen->add_flag("--json", o.json, "JSON output");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::ParseError& e) {
    app.exit(e, out, err);
    return kExitUsage;
  }

  try {
    if (analyze->parsed()) return do_analyze(o, out);
    if (circ->parsed()) return do_circulant(o, out);
    if (cls->parsed()) return do_classify(o, out);
    if (gen->parsed()) return do_gen(o, out);
  } catch (const CLI::ParseError& e) {
    err << "gbei: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::exception& e) {
    err << "gbei: " << e.what() << '\n';
    return kExitDomain;
  }
  return kExitUsage;
}

}  // namespace gbei::cli
