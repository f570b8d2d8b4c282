#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

#include "spansphere/sets.hpp"

namespace spansphere {

class Hypergraph {
 public:
  Hypergraph() : Hypergraph(2, 0) {}
  Hypergraph(int k, Vertex n);
  Hypergraph(int k, Vertex n, const std::vector<VertexSet>& edges);
  // Edges given as a flat array of k-tuples (any order within a tuple).
  static Hypergraph from_flat(int k, Vertex n, std::span<const Vertex> flat);

  int uniformity() const noexcept { return k_; }
  Vertex order() const noexcept { return n_; }
  std::size_t edge_count() const noexcept { return edges_.size(); }
  bool empty() const noexcept { return edges_.empty(); }

  std::span<const Vertex> edge(std::size_t i) const { return edges_[i]; }
  bool has_edge(std::span<const Vertex> sorted) const { return edges_.contains(sorted); }
  std::optional<std::size_t> edge_index(std::span<const Vertex> sorted) const {
    return edges_.find(sorted);
  }
  std::vector<VertexSet> edges() const { return edges_.rows(); }
  const SetTable& table() const noexcept { return edges_; }

  friend bool operator==(const Hypergraph& a, const Hypergraph& b) {
    return a.k_ == b.k_ && a.n_ == b.n_ && a.edges_ == b.edges_;
  }

 private:
  void add_checked(std::span<const Vertex> edge);

  int k_;
  Vertex n_;
  SetTable edges_;
};

struct DegreeProfile {
  int d = 0;
  std::uint64_t delta_star_d = 0;
  std::uint64_t delta_d = 0;
  std::vector<VertexSet> supported_sets;
  std::vector<std::uint64_t> supported_degrees;
};

struct TightComponents {
  // Edge indices, each component ascending, components ordered by least edge.
  std::vector<std::vector<std::size_t>> components;
  std::vector<Vertex> isolated;
};

// K_n^(k).
Hypergraph complete_hypergraph(int k, Vertex n);

std::uint64_t degree(const Hypergraph& h, std::span<const Vertex> set);
std::uint64_t min_supported_codegree(const Hypergraph& h);
DegreeProfile min_supported_d_degree(const Hypergraph& h, int d);
std::vector<std::uint64_t> vertex_degrees(const Hypergraph& h);
std::vector<Vertex> isolated_vertices(const Hypergraph& h);

Hypergraph line_graph(const Hypergraph& h);
TightComponents tight_components(const Hypergraph& h);
bool is_tightly_connected(const Hypergraph& h);

// Relabels the listed vertices to 0..|vertices|-1 in order and keeps edges inside them.
Hypergraph induced_subgraph(const Hypergraph& h, std::span<const Vertex> vertices);
Hypergraph edge_subgraph(const Hypergraph& h, std::span<const std::size_t> edge_indices);
Hypergraph remove_edges_containing(const Hypergraph& h, std::span<const Vertex> set);
// Pairs (2-subsets) contained in some edge, lexicographic.
std::vector<VertexSet> shadow_pairs(const Hypergraph& h);

std::vector<VertexSet> dirac_connectivity_witness(const Hypergraph& h, std::span<const Vertex> e,
                                                  std::span<const Vertex> f);

}  // namespace spansphere
