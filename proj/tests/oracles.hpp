#pragma once

// Brute-force reference implementations. They share no code with the library
// beyond plain data types.

#include <algorithm>
#include <cstdint>
#include <functional>
#include <map>
#include <numeric>
#include <random>
#include <set>
#include <vector>

#include "spansphere/complex.hpp"
#include "spansphere/hypergraph.hpp"

namespace oracle {

using spansphere::Hypergraph;
using spansphere::SimplicialComplex;
using spansphere::Vertex;
using spansphere::VertexSet;

inline std::vector<VertexSet> edges(const Hypergraph& h) {
  std::vector<VertexSet> out;
  for (std::size_t i = 0; i < h.edge_count(); ++i) out.emplace_back(h.edge(i).begin(), h.edge(i).end());
  return out;
}

inline bool subset(const VertexSet& small, const VertexSet& big) {
  return std::all_of(small.begin(), small.end(),
                     [&](Vertex v) { return std::find(big.begin(), big.end(), v) != big.end(); });
}

inline std::size_t common(const VertexSet& a, const VertexSet& b) {
  std::size_t c = 0;
  for (Vertex v : a) c += std::count(b.begin(), b.end(), v);
  return c;
}

inline void subsets(Vertex n, std::size_t r, const std::function<void(const VertexSet&)>& fn) {
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << n); ++mask) {
    if (static_cast<std::size_t>(__builtin_popcountll(mask)) != r) continue;
    VertexSet s;
    for (Vertex v = 0; v < n; ++v)
      if (mask >> v & 1) s.push_back(v);
    fn(s);
  }
}

inline std::uint64_t degree(const Hypergraph& h, const VertexSet& s) {
  std::uint64_t c = 0;
  for (const auto& e : edges(h)) c += subset(s, e);
  return c;
}

// Minimum positive d-degree over all d-subsets of the vertex set; 0 when there is none.
inline std::uint64_t delta_star(const Hypergraph& h, int d) {
  std::uint64_t best = 0;
  subsets(h.order(), static_cast<std::size_t>(d), [&](const VertexSet& s) {
    std::uint64_t c = degree(h, s);
    if (c > 0 && (best == 0 || c < best)) best = c;
  });
  return best;
}

inline std::size_t isolated_count(const Hypergraph& h) {
  std::size_t c = 0;
  for (Vertex v = 0; v < h.order(); ++v) c += degree(h, {v}) == 0;
  return c;
}

// Components of the graph on edges joined when they share k-1 vertices, by repeated relaxation.
inline std::size_t tight_component_count(const Hypergraph& h) {
  auto es = edges(h);
  std::vector<std::size_t> label(es.size());
  std::iota(label.begin(), label.end(), 0);
  bool changed = true;
  while (changed) {
    changed = false;
    for (std::size_t i = 0; i < es.size(); ++i)
      for (std::size_t j = 0; j < es.size(); ++j)
        if (common(es[i], es[j]) + 1 == static_cast<std::size_t>(h.uniformity()) && label[j] < label[i]) {
          label[i] = label[j];
          changed = true;
        }
  }
  return std::set<std::size_t>(label.begin(), label.end()).size();
}

inline bool tightly_connected(const Hypergraph& h) {
  return h.edge_count() > 0 && isolated_count(h) == 0 && tight_component_count(h) == 1;
}

// Largest number of pairwise disjoint edges, by exhaustive search.
inline std::size_t matching_number(const Hypergraph& h) {
  auto es = edges(h);
  std::size_t best = 0;
  std::function<void(std::size_t, std::uint64_t, std::size_t)> rec = [&](std::size_t i, std::uint64_t used,
                                                                         std::size_t size) {
    best = std::max(best, size);
    if (i == es.size()) return;
    if (size + (es.size() - i) <= best) return;
    std::uint64_t mask = 0;
    for (Vertex v : es[i]) mask |= std::uint64_t{1} << v;
    if (!(mask & used)) rec(i + 1, used | mask, size + 1);
    rec(i + 1, used, size);
  };
  rec(0, 0, 0);
  return best;
}

inline bool has_perfect_matching(const Hypergraph& h) {
  return h.order() % h.uniformity() == 0 && matching_number(h) * h.uniformity() == h.order();
}

inline Hypergraph random_hypergraph(int k, Vertex n, double p, std::mt19937_64& rng) {
  std::bernoulli_distribution coin(p);
  std::vector<VertexSet> es;
  subsets(n, static_cast<std::size_t>(k), [&](const VertexSet& s) {
    if (coin(rng)) es.push_back(s);
  });
  return Hypergraph(k, n, es);
}

// Every face of every facet, by dimension.
inline std::vector<std::set<VertexSet>> faces(const SimplicialComplex& c) {
  std::vector<std::set<VertexSet>> out(static_cast<std::size_t>(c.dim() + 1));
  for (std::size_t i = 0; i < c.facet_count(); ++i) {
    VertexSet f(c.facet(i).begin(), c.facet(i).end());
    for (std::uint32_t mask = 1; mask < (1u << f.size()); ++mask) {
      VertexSet s;
      for (std::size_t j = 0; j < f.size(); ++j)
        if (mask >> j & 1) s.push_back(f[j]);
      out[s.size() - 1].insert(s);
    }
  }
  return out;
}

inline std::int64_t euler(const SimplicialComplex& c) {
  std::int64_t chi = 0, sign = 1;
  for (const auto& layer : faces(c)) {
    chi += sign * static_cast<std::int64_t>(layer.size());
    sign = -sign;
  }
  return chi;
}

// Every ridge in exactly two facets.
inline bool closed_pseudomanifold(const SimplicialComplex& c) {
  std::map<VertexSet, int> ridges;
  for (std::size_t i = 0; i < c.facet_count(); ++i) {
    VertexSet f(c.facet(i).begin(), c.facet(i).end());
    for (std::size_t j = 0; j < f.size(); ++j) {
      VertexSet r = f;
      r.erase(r.begin() + static_cast<std::ptrdiff_t>(j));
      ++ridges[r];
    }
  }
  return std::all_of(ridges.begin(), ridges.end(), [](const auto& p) { return p.second == 2; });
}

// Single cycle through every vertex of a 1-complex.
inline bool is_cycle(const SimplicialComplex& c) {
  if (c.dim() != 1 || c.facet_count() < 3) return false;
  std::map<Vertex, std::vector<Vertex>> adj;
  for (std::size_t i = 0; i < c.facet_count(); ++i) {
    adj[c.facet(i)[0]].push_back(c.facet(i)[1]);
    adj[c.facet(i)[1]].push_back(c.facet(i)[0]);
  }
  for (const auto& [v, nb] : adj)
    if (nb.size() != 2) return false;
  Vertex start = adj.begin()->first, prev = start, cur = adj[start][0];
  std::size_t steps = 1;
  while (cur != start) {
    Vertex next = adj[cur][0] == prev ? adj[cur][1] : adj[cur][0];
    prev = cur;
    cur = next;
    ++steps;
  }
  return steps == adj.size();
}

// Minimum positive codegree and absence of isolated vertices on an induced s-set.
inline bool dense_on(const Hypergraph& h, const VertexSet& s, std::int64_t eps_num, std::int64_t eps_den) {
  std::vector<VertexSet> inside;
  for (const auto& e : edges(h))
    if (subset(e, s)) inside.push_back(e);
  for (Vertex v : s) {
    bool found = false;
    for (const auto& e : inside) found = found || std::count(e.begin(), e.end(), v);
    if (!found) return false;
  }
  const int k = h.uniformity();
  std::uint64_t best = 0;
  std::set<VertexSet> seen;
  for (const auto& e : inside)
    for (std::size_t j = 0; j < e.size(); ++j) {
      VertexSet r = e;
      r.erase(r.begin() + static_cast<std::ptrdiff_t>(j));
      if (!seen.insert(r).second) continue;
      std::uint64_t c = 0;
      for (const auto& f : inside) c += subset(r, f);
      if (best == 0 || c < best) best = c;
    }
  (void)k;
  // 2*best >= (1 + 2 eps) |s|  <=>  2*best*den >= (den + 2 num) |s|
  return static_cast<std::int64_t>(2 * best) * eps_den >=
         (eps_den + 2 * eps_num) * static_cast<std::int64_t>(s.size());
}

inline std::size_t property_edge_count(const Hypergraph& h, int s, std::int64_t eps_num, std::int64_t eps_den) {
  std::size_t count = 0;
  subsets(h.order(), static_cast<std::size_t>(s), [&](const VertexSet& set) { count += dense_on(h, set, eps_num, eps_den); });
  return count;
}

}  // namespace oracle
