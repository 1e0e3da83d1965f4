#include "adiarank/graph.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <numeric>
#include <sstream>

#include "adiarank/rng.hpp"

namespace adiarank {

DirectedGraph::DirectedGraph(int n, bool allow_self_loops)
    : n_(n), allow_self_loops_(allow_self_loops) {
  if (n < 1) throw Error(ErrorCode::invalid_config, "node count must be >= 1");
}

bool DirectedGraph::add_edge(int src, int dst) {
  if (src < 0 || src >= n_ || dst < 0 || dst >= n_)
    throw Error(ErrorCode::invalid_config,
                "edge endpoint out of range: (" + std::to_string(src) + "," +
                    std::to_string(dst) + ") with n=" + std::to_string(n_));
  if (src == dst && !allow_self_loops_) return false;
  return edges_.insert({src, dst}).second;
}

bool DirectedGraph::has_edge(int src, int dst) const {
  return edges_.count({src, dst}) > 0;
}

std::vector<int> DirectedGraph::out_degrees() const {
  std::vector<int> d(n_, 0);
  for (const auto& [s, t] : edges_) d[s]++;
  return d;
}

std::vector<int> DirectedGraph::in_degrees() const {
  std::vector<int> d(n_, 0);
  for (const auto& [s, t] : edges_) d[t]++;
  return d;
}

std::vector<std::vector<int>> DirectedGraph::out_adjacency() const {
  std::vector<std::vector<int>> adj(n_);
  for (const auto& [s, t] : edges_) adj[s].push_back(t);
  return adj;
}

long DegreeHistogram::total_nodes() const {
  long total = 0;
  for (const auto& [d, c] : counts) total += c;
  return total;
}

void DegreeHistogram::merge(const DegreeHistogram& other) {
  for (const auto& [d, c] : other.counts) counts[d] += c;
}

DirectedGraph gen_preferential_attachment(const GraphModelConfig& cfg) {
  if (cfg.m < 1 || cfg.n < cfg.m)
    throw Error(ErrorCode::invalid_config,
                "preferential attachment needs n >= m >= 1");

  DirectedGraph g(cfg.n);
  auto rng = make_rng(cfg.seed);

  // One slot per unit of total (in+out) degree; sampling a slot uniformly is
  // degree-proportional attachment. Vertex 0 starts isolated, so the first
  // arrivals fall back to a uniform choice among existing vertices.
  std::vector<int> degree_slots;
  degree_slots.reserve(2 * static_cast<std::size_t>(cfg.m) * cfg.n);

  for (int v = 1; v < cfg.n; ++v) {
    std::vector<int> added;
    for (int k = 0; k < cfg.m; ++k) {
      int target;
      if (degree_slots.empty()) {
        target = static_cast<int>(
            std::uniform_int_distribution<long>(0, v - 1)(rng));
      } else {
        std::uniform_int_distribution<std::size_t> pick(
            0, degree_slots.size() - 1);
        target = degree_slots[pick(rng)];
      }
      // duplicate draws collapse; edges are new -> existing so self-loops
      // cannot arise here
      if (g.add_edge(v, target)) added.push_back(target);
    }
    for (int t : added) {
      degree_slots.push_back(v);
      degree_slots.push_back(t);
    }
  }
  return g;
}

DirectedGraph gen_copying(const GraphModelConfig& cfg) {
  if (cfg.d0 < 1)
    throw Error(ErrorCode::invalid_config, "copying model needs d0 >= 1");
  if (cfg.n < cfg.d0 + 1)
    throw Error(ErrorCode::invalid_config, "copying model needs n >= d0 + 1");
  if (cfg.p_copy < 0.0 || cfg.p_copy >= 1.0)
    throw Error(ErrorCode::invalid_config, "p_copy must be in [0, 1)");

  const int n0 = cfg.d0 + 1;  // directed d0-regular ring
  DirectedGraph g(cfg.n);
  std::vector<std::vector<int>> adj(cfg.n);
  for (int i = 0; i < n0; ++i) {
    for (int k = 1; k <= cfg.d0; ++k) {
      int t = (i + k) % n0;
      if (g.add_edge(i, t)) adj[i].push_back(t);
    }
  }

  auto rng = make_rng(cfg.seed);
  std::uniform_real_distribution<double> coin(0.0, 1.0);
  for (int v = n0; v < cfg.n; ++v) {
    std::uniform_int_distribution<int> existing(0, v - 1);
    int proto = existing(rng);
    for (int w : adj[proto]) {
      int target = (coin(rng) < cfg.p_copy) ? existing(rng) : w;
      if (g.add_edge(v, target)) adj[v].push_back(target);
    }
  }
  return g;
}

DirectedGraph complete_graph(int n, bool with_self_loops) {
  DirectedGraph g(n, with_self_loops);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      if (i != j || with_self_loops) g.add_edge(i, j);
  return g;
}

DirectedGraph reverse_graph(const DirectedGraph& g) {
  DirectedGraph r(g.num_nodes(), g.allow_self_loops());
  for (const auto& [s, t] : g.edges()) r.add_edge(t, s);
  return r;
}

DirectedGraph mix_graphs(const DirectedGraph& ga, const DirectedGraph& gb) {
  if (ga.num_nodes() != gb.num_nodes())
    throw Error(ErrorCode::size_mismatch,
                "cannot mix graphs with " + std::to_string(ga.num_nodes()) +
                    " and " + std::to_string(gb.num_nodes()) + " nodes");
  DirectedGraph m(ga.num_nodes(),
                  ga.allow_self_loops() || gb.allow_self_loops());
  for (const auto& [s, t] : ga.edges()) m.add_edge(s, t);
  for (const auto& [s, t] : gb.edges()) m.add_edge(s, t);
  return m;
}

DirectedGraph gen_mixed(const GraphModelConfig& cfg) {
  if (cfg.mix_ratio <= 0.0)
    throw Error(ErrorCode::invalid_config, "mix_ratio must be > 0");
  // In-law part with m, out-law part reversed from a denser generation so
  // that its maximum out-degree lands near mix_ratio times the in-law
  // maximum in-degree.
  GraphModelConfig a = cfg;
  a.model = GraphModel::preferential_attachment;
  a.seed = mix_seed(cfg.seed, 1);
  GraphModelConfig b = a;
  b.m = static_cast<int>(std::ceil(cfg.mix_ratio * cfg.m));
  b.m = std::min(b.m, cfg.n);
  b.seed = mix_seed(cfg.seed, 2);
  return mix_graphs(gen_preferential_attachment(a),
                    reverse_graph(gen_preferential_attachment(b)));
}

DirectedGraph generate_graph(const GraphModelConfig& cfg) {
  switch (cfg.model) {
    case GraphModel::preferential_attachment:
      return gen_preferential_attachment(cfg);
    case GraphModel::copying:
      return gen_copying(cfg);
    case GraphModel::complete:
      return complete_graph(cfg.n);
    case GraphModel::reverse_of: {
      GraphModelConfig pa = cfg;
      pa.model = GraphModel::preferential_attachment;
      return reverse_graph(gen_preferential_attachment(pa));
    }
    case GraphModel::mixed:
      return gen_mixed(cfg);
  }
  throw Error(ErrorCode::invalid_config, "unknown graph model");
}

DegreeHistogram degree_histogram(const DirectedGraph& g,
                                 DegreeHistogram::Direction dir) {
  DegreeHistogram hist;
  hist.direction = dir;
  auto degrees = dir == DegreeHistogram::Direction::in ? g.in_degrees()
                                                       : g.out_degrees();
  for (int d : degrees) hist.counts[d]++;
  return hist;
}

ExponentFit fit_degree_exponent(const DegreeHistogram& hist, int d_min) {
  std::vector<double> lx, ly;
  for (const auto& [d, c] : hist.counts) {
    if (d >= d_min && c > 0) {
      lx.push_back(std::log(static_cast<double>(d)));
      ly.push_back(std::log(static_cast<double>(c)));
    }
  }
  if (lx.size() < 3)
    throw Error(ErrorCode::insufficient_data,
                "need >= 3 distinct degrees >= " + std::to_string(d_min) +
                    ", got " + std::to_string(lx.size()));

  const double n = static_cast<double>(lx.size());
  const double mx = std::accumulate(lx.begin(), lx.end(), 0.0) / n;
  const double my = std::accumulate(ly.begin(), ly.end(), 0.0) / n;
  double sxx = 0, sxy = 0, syy = 0;
  for (std::size_t i = 0; i < lx.size(); ++i) {
    sxx += (lx[i] - mx) * (lx[i] - mx);
    sxy += (lx[i] - mx) * (ly[i] - my);
    syy += (ly[i] - my) * (ly[i] - my);
  }
  if (sxx <= 0)
    throw Error(ErrorCode::insufficient_data, "degenerate degree range");
  const double slope = sxy / sxx;
  ExponentFit fit;
  fit.exponent = -slope;
  fit.r_squared = syy > 0 ? (sxy * sxy) / (sxx * syy) : 1.0;
  return fit;
}

void write_edgelist(const DirectedGraph& g, std::ostream& out) {
  out << "n " << g.num_nodes() << "\n";
  for (const auto& [s, t] : g.edges()) out << s << " " << t << "\n";
}

void write_edgelist(const DirectedGraph& g, const std::string& path) {
  std::ofstream out(path);
  if (!out) throw Error(ErrorCode::io_error, "cannot open for write: " + path);
  write_edgelist(g, out);
  if (!out) throw Error(ErrorCode::io_error, "write failed: " + path);
}

DirectedGraph read_edgelist(std::istream& in, const std::string& name) {
  std::string line;
  long line_no = 0;
  auto fail = [&](const std::string& what) -> Error {
    return Error(ErrorCode::parse_error,
                 name + ":" + std::to_string(line_no) + ": " + what);
  };

  int n = -1;
  bool saw_self_loop = false;
  std::vector<Edge> edges;
  while (std::getline(in, line)) {
    ++line_no;
    std::string trimmed = line;
    auto first = trimmed.find_first_not_of(" \t\r");
    if (first == std::string::npos) continue;
    if (trimmed[first] == '#') continue;

    std::istringstream ls(trimmed);
    if (n < 0) {
      std::string tag;
      ls >> tag >> n;
      if (ls.fail() || tag != "n" || n < 1)
        throw fail("expected header \"n <node_count>\"");
      continue;
    }
    int src, dst;
    ls >> src >> dst;
    if (ls.fail()) throw fail("expected \"<src> <dst>\"");
    std::string extra;
    if (ls >> extra) throw fail("trailing tokens");
    if (src < 0 || src >= n || dst < 0 || dst >= n)
      throw fail("endpoint out of range [0, " + std::to_string(n) + ")");
    if (src == dst) saw_self_loop = true;
    edges.push_back({src, dst});
  }
  if (n < 0) {
    line_no = 1;
    throw fail("missing \"n <node_count>\" header");
  }
  DirectedGraph g(n, saw_self_loop);
  for (const auto& [s, t] : edges) g.add_edge(s, t);
  return g;
}

DirectedGraph read_edgelist(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorCode::io_error, "cannot open for read: " + path);
  return read_edgelist(in, path);
}

}  // namespace adiarank
