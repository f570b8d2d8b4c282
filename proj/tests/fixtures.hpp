#pragma once

// Seeded blow-up fixtures shared by the unit and acceptance tests.

#include <algorithm>
#include <optional>
#include <random>
#include <vector>

#include "spansphere/blowup.hpp"
#include "spansphere/hypergraph.hpp"

namespace fixture {

using spansphere::Blowup;
using spansphere::Hypergraph;
using spansphere::Vertex;
using spansphere::VertexSet;

// Consecutive host ids; sizes[x] vertices for base vertex x.
inline std::vector<VertexSet> consecutive_parts(const std::vector<std::size_t>& sizes) {
  std::vector<VertexSet> parts;
  Vertex next = 0;
  for (std::size_t s : sizes) {
    VertexSet p;
    for (std::size_t i = 0; i < s; ++i) p.push_back(next++);
    parts.push_back(p);
  }
  return parts;
}

inline Blowup complete_blowup(int k, Vertex s, std::size_t m, std::optional<Vertex> singleton = std::nullopt,
                              std::optional<Vertex> enlarged = std::nullopt) {
  std::vector<std::size_t> sizes(s, m);
  if (singleton) sizes[*singleton] = 1;
  if (enlarged) sizes[*enlarged] += 1;
  return Blowup(spansphere::complete_hypergraph(k, s), consecutive_parts(sizes));
}

// One random unused host vertex in each part of the base edge.
inline VertexSet random_transversal(const Blowup& b, std::span<const Vertex> base_edge, std::vector<bool>& used,
                                    std::mt19937_64& rng) {
  VertexSet f;
  for (Vertex x : base_edge) {
    VertexSet free;
    for (Vertex v : b.part(x))
      if (!used[v]) free.push_back(v);
    Vertex v = free[rng() % free.size()];
    used[v] = true;
    f.push_back(v);
  }
  std::sort(f.begin(), f.end());
  return f;
}

// Pairwise disjoint entry facets, one per base edge.
inline std::vector<VertexSet> random_entries(const Blowup& b, std::mt19937_64& rng) {
  std::vector<bool> used(b.host_order(), false);
  std::vector<VertexSet> out;
  for (std::size_t e = 0; e < b.base().edge_count(); ++e) out.push_back(random_transversal(b, b.base().edge(e), used, rng));
  return out;
}

struct FacetPair {
  VertexSet f1, f2;
};

// f1, f2 over two random disjoint base edges avoiding `avoid`.
inline FacetPair random_facets(const Blowup& b, std::mt19937_64& rng, std::optional<Vertex> avoid = std::nullopt) {
  const Hypergraph& r = b.base();
  std::vector<std::pair<std::size_t, std::size_t>> options;
  for (std::size_t i = 0; i < r.edge_count(); ++i)
    for (std::size_t j = 0; j < r.edge_count(); ++j) {
      if (i == j || spansphere::intersection_size(r.edge(i), r.edge(j)) != 0) continue;
      if (avoid && (std::count(r.edge(i).begin(), r.edge(i).end(), *avoid) ||
                    std::count(r.edge(j).begin(), r.edge(j).end(), *avoid)))
        continue;
      options.emplace_back(i, j);
    }
  auto [i, j] = options.at(rng() % options.size());
  std::vector<bool> used(b.host_order(), false);
  FacetPair out;
  out.f1 = random_transversal(b, r.edge(i), used, rng);
  out.f2 = random_transversal(b, r.edge(j), used, rng);
  return out;
}

// f1, f2 over two random distinct base edges that may meet, avoiding `avoid`.
inline FacetPair random_overlapping_facets(const Blowup& b, std::mt19937_64& rng, Vertex avoid) {
  const Hypergraph& r = b.base();
  std::vector<std::size_t> ok;
  for (std::size_t i = 0; i < r.edge_count(); ++i)
    if (!std::count(r.edge(i).begin(), r.edge(i).end(), avoid)) ok.push_back(i);
  const std::size_t i = ok[rng() % ok.size()];
  std::size_t j = i;
  while (j == i) j = ok[rng() % ok.size()];
  std::vector<bool> used(b.host_order(), false);
  FacetPair out;
  out.f1 = random_transversal(b, r.edge(i), used, rng);
  out.f2 = random_transversal(b, r.edge(j), used, rng);
  return out;
}

}  // namespace fixture
