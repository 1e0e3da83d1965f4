#pragma once

#include <cstdint>
#include <iosfwd>
#include <map>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "adiarank/errors.hpp"

namespace adiarank {

using Edge = std::pair<int, int>;

// Simple directed graph: node set {0..n-1}, no duplicate edges, self-loops
// only when allowed at construction.
class DirectedGraph {
 public:
  explicit DirectedGraph(int n, bool allow_self_loops = false);

  int num_nodes() const { return n_; }
  bool allow_self_loops() const { return allow_self_loops_; }
  std::size_t num_edges() const { return edges_.size(); }

  // Returns false when the edge is dropped (duplicate, self-loop when
  // disallowed). Throws on out-of-range endpoints.
  bool add_edge(int src, int dst);
  bool has_edge(int src, int dst) const;

  // Edges in sorted (src, dst) order.
  const std::set<Edge>& edges() const { return edges_; }

  std::vector<int> out_degrees() const;
  std::vector<int> in_degrees() const;
  std::vector<std::vector<int>> out_adjacency() const;

  bool operator==(const DirectedGraph& other) const {
    return n_ == other.n_ && edges_ == other.edges_;
  }

 private:
  int n_;
  bool allow_self_loops_;
  std::set<Edge> edges_;
};

enum class GraphModel {
  preferential_attachment,
  copying,
  complete,
  reverse_of,  // edge-reversed preferential attachment
  mixed,       // in-law PA + reversed out-law PA, adjacency union
};

struct GraphModelConfig {
  GraphModel model = GraphModel::preferential_attachment;
  int n = 1;
  int m = 1;              // edges per new vertex (preferential attachment)
  double p_copy = 0.0;    // uniform-rewire probability (copying model)
  int d0 = 2;             // out-degree of the copying model's initial ring
  std::uint64_t seed = 0;
  double mix_ratio = 3.0; // out-law/in-law max-degree target (mixed model)
};

struct DegreeHistogram {
  enum class Direction { in, out };
  Direction direction = Direction::in;
  std::map<int, long> counts;  // degree -> number of nodes

  long total_nodes() const;
  void merge(const DegreeHistogram& other);
};

DirectedGraph gen_preferential_attachment(const GraphModelConfig& cfg);
DirectedGraph gen_copying(const GraphModelConfig& cfg);
DirectedGraph complete_graph(int n, bool with_self_loops = true);
DirectedGraph reverse_graph(const DirectedGraph& g);
DirectedGraph mix_graphs(const DirectedGraph& ga, const DirectedGraph& gb);
DirectedGraph gen_mixed(const GraphModelConfig& cfg);

// Dispatch on cfg.model.
DirectedGraph generate_graph(const GraphModelConfig& cfg);

DegreeHistogram degree_histogram(const DirectedGraph& g,
                                 DegreeHistogram::Direction dir);

struct ExponentFit {
  double exponent = 0.0;  // sign-flipped slope: a d^-3 law gives +3
  double r_squared = 0.0;
};

// Log-log least squares on log N(d) vs log d over degrees >= d_min with
// nonzero counts. Needs at least 3 distinct degrees.
ExponentFit fit_degree_exponent(const DegreeHistogram& hist, int d_min = 4);

// Edge-list text format: "n <count>" header, "<src> <dst>" lines, '#'
// comments, LF newlines.
void write_edgelist(const DirectedGraph& g, const std::string& path);
void write_edgelist(const DirectedGraph& g, std::ostream& out);
DirectedGraph read_edgelist(const std::string& path);
DirectedGraph read_edgelist(std::istream& in, const std::string& name = "<stream>");

}  // namespace adiarank
