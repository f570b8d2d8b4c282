#include "spansphere/hypergraph.hpp"

#include <algorithm>
#include <numeric>
#include <string>

#include "spansphere/error.hpp"

namespace spansphere {

namespace {

struct UnionFind {
  std::vector<std::size_t> parent;
  explicit UnionFind(std::size_t n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }
  std::size_t find(std::size_t x) {
    while (parent[x] != x) {
      parent[x] = parent[parent[x]];
      x = parent[x];
    }
    return x;
  }
  void unite(std::size_t a, std::size_t b) {
    a = find(a);
    b = find(b);
    if (a == b) return;
    if (a < b)
      parent[b] = a;
    else
      parent[a] = b;
  }
};

// Groups of edges sharing each (k-1)-subset, as (flat keys, edge ids) sorted by key.
struct RidgeIndex {
  std::size_t width = 0;
  std::vector<Vertex> keys;
  std::vector<std::size_t> owner;
  std::vector<std::size_t> order;

  std::span<const Vertex> key(std::size_t slot) const { return {keys.data() + slot * width, width}; }
};

RidgeIndex build_ridge_index(const Hypergraph& h) {
  RidgeIndex idx;
  const std::size_t k = static_cast<std::size_t>(h.uniformity());
  idx.width = k - 1;
  idx.keys.reserve(h.edge_count() * k * (k - 1));
  for (std::size_t i = 0; i < h.edge_count(); ++i) {
    auto e = h.edge(i);
    for (std::size_t skip = 0; skip < k; ++skip) {
      for (std::size_t j = 0; j < k; ++j)
        if (j != skip) idx.keys.push_back(e[j]);
      idx.owner.push_back(i);
    }
  }
  idx.order.resize(idx.owner.size());
  std::iota(idx.order.begin(), idx.order.end(), 0);
  std::sort(idx.order.begin(), idx.order.end(), [&](std::size_t a, std::size_t b) {
    auto ka = idx.key(a), kb = idx.key(b);
    if (std::lexicographical_compare(ka.begin(), ka.end(), kb.begin(), kb.end())) return true;
    if (std::lexicographical_compare(kb.begin(), kb.end(), ka.begin(), ka.end())) return false;
    return idx.owner[a] < idx.owner[b];
  });
  return idx;
}

template <class Fn>
void for_each_ridge_group(const RidgeIndex& idx, Fn&& fn) {
  std::size_t i = 0;
  const std::size_t n = idx.order.size();
  std::vector<std::size_t> group;
  while (i < n) {
    std::size_t j = i + 1;
    auto ki = idx.key(idx.order[i]);
    while (j < n) {
      auto kj = idx.key(idx.order[j]);
      if (!std::equal(ki.begin(), ki.end(), kj.begin())) break;
      ++j;
    }
    group.clear();
    for (std::size_t t = i; t < j; ++t) group.push_back(idx.owner[idx.order[t]]);
    fn(ki, group);
    i = j;
  }
}

void check_vertices(const Hypergraph& h, std::span<const Vertex> set) {
  for (Vertex v : set)
    if (v >= h.order())
      fail(Errc::InvalidVertex, "vertex " + std::to_string(v) + " not below n=" + std::to_string(h.order()), v);
}

}  // namespace

Hypergraph::Hypergraph(int k, Vertex n) : k_(k), n_(n), edges_(static_cast<std::size_t>(k > 0 ? k : 0)) {
  if (k < 1) fail(Errc::BadArity, "uniformity must be positive");
}

Hypergraph::Hypergraph(int k, Vertex n, const std::vector<VertexSet>& edges) : Hypergraph(k, n) {
  for (const auto& e : edges) add_checked(e);
  edges_.canonicalize();
}

Hypergraph Hypergraph::from_flat(int k, Vertex n, std::span<const Vertex> flat) {
  Hypergraph h(k, n);
  const std::size_t w = static_cast<std::size_t>(k);
  if (flat.size() % w != 0) fail(Errc::BadArity, "flat edge array is not a multiple of k");
  for (std::size_t i = 0; i < flat.size(); i += w) h.add_checked(flat.subspan(i, w));
  h.edges_.canonicalize();
  return h;
}

void Hypergraph::add_checked(std::span<const Vertex> edge) {
  if (edge.size() != static_cast<std::size_t>(k_))
    fail(Errc::BadArity, "edge " + format_set(edge) + " does not have " + std::to_string(k_) + " vertices");
  VertexSet s = make_set(edge);
  if (s.size() != edge.size()) fail(Errc::BadArity, "edge " + format_set(edge) + " repeats a vertex");
  for (Vertex v : s)
    if (v >= n_) fail(Errc::InvalidVertex, "edge " + format_set(edge) + " uses vertex >= n", v);
  edges_.push(s);
}

Hypergraph complete_hypergraph(int k, Vertex n) {
  VertexSet all(n);
  std::iota(all.begin(), all.end(), Vertex{0});
  std::vector<Vertex> flat;
  for_each_subset(std::span<const Vertex>(all), static_cast<std::size_t>(k),
                  [&](std::span<const Vertex> e) { flat.insert(flat.end(), e.begin(), e.end()); });
  return Hypergraph::from_flat(k, n, flat);
}

std::uint64_t degree(const Hypergraph& h, std::span<const Vertex> set) {
  check_vertices(h, set);
  VertexSet s = make_set(set);
  if (s.size() > static_cast<std::size_t>(h.uniformity())) return 0;
  std::uint64_t c = 0;
  for (std::size_t i = 0; i < h.edge_count(); ++i)
    if (includes(h.edge(i), s)) ++c;
  return c;
}

DegreeProfile min_supported_d_degree(const Hypergraph& h, int d) {
  if (d < 1 || d >= h.uniformity())
    fail(Errc::BadArity, "d must satisfy 1 <= d < k, got d=" + std::to_string(d));
  DegreeProfile p;
  p.d = d;
  SetTable subsets(static_cast<std::size_t>(d));
  for (std::size_t i = 0; i < h.edge_count(); ++i)
    for_each_subset(h.edge(i), static_cast<std::size_t>(d), [&](std::span<const Vertex> s) { subsets.push(s); });
  // Count multiplicities before deduplication: sort a copy of all rows.
  std::vector<VertexSet> all = subsets.rows();
  std::sort(all.begin(), all.end());
  for (std::size_t i = 0; i < all.size();) {
    std::size_t j = i;
    while (j < all.size() && all[j] == all[i]) ++j;
    p.supported_sets.push_back(all[i]);
    p.supported_degrees.push_back(j - i);
    i = j;
  }
  if (!p.supported_degrees.empty()) {
    p.delta_star_d = *std::min_element(p.supported_degrees.begin(), p.supported_degrees.end());
    if (p.supported_sets.size() == binomial(h.order(), static_cast<std::uint64_t>(d)))
      p.delta_d = p.delta_star_d;
  }
  return p;
}

std::uint64_t min_supported_codegree(const Hypergraph& h) {
  if (h.uniformity() < 2) return h.empty() ? 0 : 1;
  return min_supported_d_degree(h, h.uniformity() - 1).delta_star_d;
}

std::vector<std::uint64_t> vertex_degrees(const Hypergraph& h) {
  std::vector<std::uint64_t> deg(h.order(), 0);
  for (Vertex v : h.table().flat()) ++deg[v];
  return deg;
}

std::vector<Vertex> isolated_vertices(const Hypergraph& h) {
  auto deg = vertex_degrees(h);
  std::vector<Vertex> out;
  for (Vertex v = 0; v < h.order(); ++v)
    if (deg[v] == 0) out.push_back(v);
  return out;
}

Hypergraph line_graph(const Hypergraph& h) {
  Hypergraph lg(2, static_cast<Vertex>(h.edge_count()));
  if (h.edge_count() < 2) return lg;
  std::vector<VertexSet> pairs;
  auto idx = build_ridge_index(h);
  for_each_ridge_group(idx, [&](std::span<const Vertex>, const std::vector<std::size_t>& g) {
    for (std::size_t a = 0; a < g.size(); ++a)
      for (std::size_t b = a + 1; b < g.size(); ++b)
        pairs.push_back({static_cast<Vertex>(g[a]), static_cast<Vertex>(g[b])});
  });
  return Hypergraph(2, static_cast<Vertex>(h.edge_count()), pairs);
}

TightComponents tight_components(const Hypergraph& h) {
  TightComponents out;
  out.isolated = isolated_vertices(h);
  if (h.empty()) return out;
  UnionFind uf(h.edge_count());
  auto idx = build_ridge_index(h);
  for_each_ridge_group(idx, [&](std::span<const Vertex>, const std::vector<std::size_t>& g) {
    for (std::size_t t = 1; t < g.size(); ++t) uf.unite(g[0], g[t]);
  });
  std::vector<std::size_t> slot(h.edge_count(), SIZE_MAX);
  for (std::size_t i = 0; i < h.edge_count(); ++i) {
    std::size_t r = uf.find(i);
    if (slot[r] == SIZE_MAX) {
      slot[r] = out.components.size();
      out.components.emplace_back();
    }
    out.components[slot[r]].push_back(i);
  }
  return out;
}

bool is_tightly_connected(const Hypergraph& h) {
  if (h.empty()) return false;
  auto tc = tight_components(h);
  return tc.isolated.empty() && tc.components.size() == 1;
}

Hypergraph induced_subgraph(const Hypergraph& h, std::span<const Vertex> vertices) {
  std::vector<std::int64_t> label(h.order(), -1);
  for (std::size_t i = 0; i < vertices.size(); ++i) {
    check_vertices(h, vertices.subspan(i, 1));
    label[vertices[i]] = static_cast<std::int64_t>(i);
  }
  std::vector<VertexSet> edges;
  for (std::size_t i = 0; i < h.edge_count(); ++i) {
    auto e = h.edge(i);
    VertexSet mapped;
    bool inside = true;
    for (Vertex v : e) {
      if (label[v] < 0) {
        inside = false;
        break;
      }
      mapped.push_back(static_cast<Vertex>(label[v]));
    }
    if (inside) edges.push_back(std::move(mapped));
  }
  return Hypergraph(h.uniformity(), static_cast<Vertex>(vertices.size()), edges);
}

Hypergraph edge_subgraph(const Hypergraph& h, std::span<const std::size_t> edge_indices) {
  std::vector<VertexSet> edges;
  for (std::size_t i : edge_indices) edges.emplace_back(h.edge(i).begin(), h.edge(i).end());
  return Hypergraph(h.uniformity(), h.order(), edges);
}

Hypergraph remove_edges_containing(const Hypergraph& h, std::span<const Vertex> set) {
  VertexSet s = make_set(set);
  std::vector<VertexSet> edges;
  for (std::size_t i = 0; i < h.edge_count(); ++i)
    if (!includes(h.edge(i), s)) edges.emplace_back(h.edge(i).begin(), h.edge(i).end());
  return Hypergraph(h.uniformity(), h.order(), edges);
}

std::vector<VertexSet> shadow_pairs(const Hypergraph& h) {
  SetTable pairs(2);
  for (std::size_t i = 0; i < h.edge_count(); ++i)
    for_each_subset(h.edge(i), 2, [&](std::span<const Vertex> p) { pairs.push(p); });
  pairs.canonicalize();
  return pairs.rows();
}

std::vector<VertexSet> dirac_connectivity_witness(const Hypergraph& h, std::span<const Vertex> e_in,
                                                  std::span<const Vertex> f_in) {
  const int k = h.uniformity();
  VertexSet e = make_set(e_in), f = make_set(f_in);
  if (!h.has_edge(e) || !h.has_edge(f)) fail(Errc::PreconditionFailed, "e and f must be edges");
  const std::uint64_t bound = (h.order() + 1 >= static_cast<Vertex>(k)) ? (h.order() - k + 1) / 2 : 0;
  if (min_supported_codegree(h) < bound)
    fail(Errc::PreconditionFailed, "supported codegree below floor((n-k+1)/2)");
  if (!isolated_vertices(h).empty()) fail(Errc::PreconditionFailed, "hypergraph has isolated vertices");

  auto neighbourhood = [&](const VertexSet& s) {
    VertexSet gamma;
    for (Vertex x = 0; x < h.order(); ++x) {
      if (std::binary_search(s.begin(), s.end(), x)) continue;
      VertexSet t = s;
      t.insert(std::upper_bound(t.begin(), t.end(), x), x);
      if (h.has_edge(t)) gamma.push_back(x);
    }
    return gamma;
  };
  auto with = [](VertexSet s, Vertex x) {
    s.insert(std::upper_bound(s.begin(), s.end(), x), x);
    return s;
  };

  std::vector<VertexSet> left{e}, right{f};
  while (intersection_size(left.back(), right.back()) < static_cast<std::size_t>(k - 1)) {
    const VertexSet& a = left.back();
    const VertexSet& b = right.back();
    VertexSet common = set_intersection(a, b);
    VertexSet only_a = set_difference(a, b), only_b = set_difference(b, a);
    VertexSet s = set_union(common, std::span<const Vertex>(only_a).first(only_a.size() - 1));
    VertexSet t = set_union(common, std::span<const Vertex>(only_b).first(only_b.size() - 1));
    VertexSet gs = neighbourhood(s), gt = neighbourhood(t);
    VertexSet gs_b = set_intersection(gs, b), gt_a = set_intersection(gt, a);
    if (!gs_b.empty()) {
      left.push_back(with(s, gs_b.front()));
    } else if (!gt_a.empty()) {
      right.push_back(with(t, gt_a.front()));
    } else {
      VertexSet both = set_intersection(gs, gt);
      if (both.empty()) fail(Errc::PreconditionFailed, "no common extension vertex; degree bound violated");
      left.push_back(with(s, both.front()));
      right.push_back(with(t, both.front()));
    }
  }
  std::vector<VertexSet> seq = left;
  for (auto it = right.rbegin(); it != right.rend(); ++it)
    if (seq.back() != *it) seq.push_back(*it);
  return seq;
}

}  // namespace spansphere
