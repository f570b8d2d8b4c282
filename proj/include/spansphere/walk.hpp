#pragma once

#include <optional>
#include <string>
#include <vector>

#include "spansphere/blowup.hpp"
#include "spansphere/hypergraph.hpp"

namespace spansphere {

struct TightWalk {
  int k = 0;
  std::vector<Vertex> vertices;

  std::size_t order() const noexcept { return vertices.size(); }
  std::size_t window_count() const noexcept {
    return vertices.size() >= static_cast<std::size_t>(k) ? vertices.size() - k + 1 : 0;
  }
  // Sorted vertex set of window i.
  VertexSet window(std::size_t i) const;
};

// First violation found, or nullopt when every window is an edge of h.
std::optional<std::string> validate_walk(const Hypergraph& h, const TightWalk& w);
bool walk_covers(const Hypergraph& h, const TightWalk& w);
std::vector<std::size_t> walk_multiplicities(const TightWalk& w, Vertex n);

// Splice-and-prune construction: line-graph BFS from the least edge, the
// detour x_1..x_k x_1..x_{j-1} y x_{j+1}..x_k x_1..x_k at each step, then
// leftmost repeat removal inside each segment between first appearances.
TightWalk covering_tight_walk(const Hypergraph& h);

// Greedy covering walk: extend by an unvisited edge when possible, else move
// along the shortest route to an ordered (k-1)-tuple with an unvisited extension.
TightWalk greedy_covering_walk(const Hypergraph& h);

TightWalk lift_walk_to_path(const TightWalk& w, const Blowup& b);

}  // namespace spansphere
