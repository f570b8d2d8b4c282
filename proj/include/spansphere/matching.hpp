#pragma once

#include <cstddef>
#include <utility>
#include <vector>

#include "spansphere/hypergraph.hpp"

namespace spansphere {

struct BipartiteInstance {
  std::size_t left_count = 0;
  std::size_t right_count = 0;
  std::vector<std::vector<std::size_t>> adjacency;  // left -> right
};

enum class MatchingKind { Saturating, PerfectMatching, HallViolator, NoPerfectMatching };
const char* matching_kind_name(MatchingKind kind) noexcept;

struct MatchingResult {
  MatchingKind kind = MatchingKind::NoPerfectMatching;
  // (left, right) for bipartite instances, (u, v) with u < v for graphs; sorted.
  std::vector<std::pair<std::size_t, std::size_t>> pairs;
  std::vector<std::size_t> violator;
};

// Left-saturating matching by augmenting paths, or a set of left vertices
// with fewer neighbours than members.
MatchingResult hall_matching(const BipartiteInstance& b);

// Maximum matching of a 2-uniform hypergraph (Edmonds blossom, O(V E a(V,E))).
std::vector<std::pair<std::size_t, std::size_t>> maximum_matching(const Hypergraph& g);
MatchingResult perfect_matching(const Hypergraph& g);

}  // namespace spansphere
