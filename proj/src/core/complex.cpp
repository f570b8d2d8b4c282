#include "spansphere/complex.hpp"

#include <algorithm>
#include <numeric>

#include "spansphere/error.hpp"

namespace spansphere {

SimplicialComplex::SimplicialComplex(int dim, const std::vector<VertexSet>& facets)
    : dim_(dim), facets_(static_cast<std::size_t>(dim + 1)) {
  if (dim < 0) fail(Errc::WrongDim, "dimension must be non-negative");
  for (const auto& f : facets) {
    VertexSet s = make_set(f);
    if (s.size() != f.size() || s.size() != static_cast<std::size_t>(dim + 1))
      fail(Errc::WrongDim, "facet " + format_set(f) + " does not have " + std::to_string(dim + 1) + " distinct vertices");
    facets_.push(s);
  }
  facets_.canonicalize();
  finish();
}

SimplicialComplex SimplicialComplex::from_table(int dim, SetTable facets) {
  SimplicialComplex c;
  c.dim_ = dim;
  facets.canonicalize();
  c.facets_ = std::move(facets);
  c.finish();
  return c;
}

void SimplicialComplex::finish() {
  vertices_ = make_set(facets_.flat());
}

SimplicialComplex suspension(const SimplicialComplex& k) {
  if (k.empty()) fail(Errc::EmptyComplex, "suspension of an empty complex");
  const Vertex u = k.vertex_bound(), v = u + 1;
  SetTable out(static_cast<std::size_t>(k.dim() + 2));
  VertexSet row;
  for (std::size_t i = 0; i < k.facet_count(); ++i) {
    auto f = k.facet(i);
    for (Vertex apex : {u, v}) {
      row.assign(f.begin(), f.end());
      row.push_back(apex);
      out.push(row);
    }
  }
  return SimplicialComplex::from_table(k.dim() + 1, std::move(out));
}

SimplicialComplex glue(const SimplicialComplex& k, const SimplicialComplex& k2, std::span<const Vertex> facet) {
  if (k.dim() != k2.dim()) fail(Errc::DimMismatch, "glue needs equal dimensions");
  VertexSet f = make_set(facet);
  if (!k.has_facet(f) || !k2.has_facet(f)) fail(Errc::MissingFacet, format_set(f) + " is not a facet of both complexes");
  if (set_intersection(k.vertices(), k2.vertices()) != f)
    fail(Errc::BadOverlap, "vertex sets meet outside the glued facet " + format_set(f));
  SetTable out(f.size());
  for (const auto* c : {&k, &k2})
    for (std::size_t i = 0; i < c->facet_count(); ++i)
      if (!std::equal(f.begin(), f.end(), c->facet(i).begin())) out.push(c->facet(i));
  return SimplicialComplex::from_table(k.dim(), std::move(out));
}

SimplicialComplex subdivide_facet(const SimplicialComplex& k, std::span<const Vertex> triangle) {
  if (k.dim() != 2) fail(Errc::WrongDim, "subdivide_facet needs a 2-dimensional complex");
  VertexSet f = make_set(triangle);
  if (triangle.size() != 3 || f.size() != 3 || !k.has_facet(f))
    fail(Errc::MissingFacet, format_set(triangle) + " is not a facet");
  const Vertex base = k.vertex_bound();
  const Vertex u[3] = {triangle[0], triangle[1], triangle[2]};
  const Vertex v[3] = {base, base + 1, base + 2};
  SetTable out(3);
  for (std::size_t i = 0; i < k.facet_count(); ++i)
    if (!std::equal(f.begin(), f.end(), k.facet(i).begin())) out.push(k.facet(i));
  // Every choice of u_i or v_i per slot except all-u.
  for (int mask = 1; mask < 8; ++mask) {
    VertexSet row;
    for (int i = 0; i < 3; ++i) row.push_back((mask >> i) & 1 ? v[i] : u[i]);
    std::sort(row.begin(), row.end());
    out.push(row);
  }
  return SimplicialComplex::from_table(2, std::move(out));
}

SimplicialComplex relabel(const SimplicialComplex& k, const std::function<Vertex(Vertex)>& map) {
  SetTable out(static_cast<std::size_t>(k.dim() + 1));
  VertexSet row;
  for (std::size_t i = 0; i < k.facet_count(); ++i) {
    row.clear();
    for (Vertex x : k.facet(i)) row.push_back(map(x));
    std::sort(row.begin(), row.end());
    if (std::adjacent_find(row.begin(), row.end()) != row.end())
      fail(Errc::BadParams, "relabeling is not injective on a facet");
    out.push(row);
  }
  return SimplicialComplex::from_table(k.dim(), std::move(out));
}

SimplicialComplex link(const SimplicialComplex& k, Vertex v) {
  if (k.dim() == 0) fail(Errc::WrongDim, "link in a 0-dimensional complex");
  SetTable out(static_cast<std::size_t>(k.dim()));
  VertexSet row;
  for (std::size_t i = 0; i < k.facet_count(); ++i) {
    auto f = k.facet(i);
    if (!std::binary_search(f.begin(), f.end(), v)) continue;
    row.clear();
    for (Vertex x : f)
      if (x != v) row.push_back(x);
    out.push(row);
  }
  return SimplicialComplex::from_table(k.dim() - 1, std::move(out));
}

std::vector<std::uint64_t> f_vector(const SimplicialComplex& k) {
  std::vector<std::uint64_t> fv;
  for (int j = 0; j <= k.dim(); ++j) {
    SetTable faces(static_cast<std::size_t>(j + 1));
    for (std::size_t i = 0; i < k.facet_count(); ++i)
      for_each_subset(k.facet(i), static_cast<std::size_t>(j + 1), [&](std::span<const Vertex> s) { faces.push(s); });
    faces.canonicalize();
    fv.push_back(faces.size());
  }
  return fv;
}

std::int64_t euler_characteristic(const SimplicialComplex& k) {
  std::int64_t chi = 0;
  auto fv = f_vector(k);
  for (std::size_t j = 0; j < fv.size(); ++j) chi += (j % 2 == 0 ? 1 : -1) * static_cast<std::int64_t>(fv[j]);
  return chi;
}

PseudomanifoldFlags is_pseudomanifold(const SimplicialComplex& k) {
  PseudomanifoldFlags flags;
  const std::size_t n = k.facet_count();
  if (n == 0) return flags;
  if (k.dim() == 0) {
    flags.pseudomanifold = n == 2;
    flags.strongly_connected = true;
    return flags;
  }
  const std::size_t w = static_cast<std::size_t>(k.dim());
  std::vector<Vertex> keys;
  std::vector<std::size_t> owner;
  for (std::size_t i = 0; i < n; ++i) {
    auto f = k.facet(i);
    for (std::size_t skip = 0; skip <= w; ++skip) {
      for (std::size_t j = 0; j <= w; ++j)
        if (j != skip) keys.push_back(f[j]);
      owner.push_back(i);
    }
  }
  std::vector<std::size_t> order(owner.size());
  std::iota(order.begin(), order.end(), 0);
  auto key = [&](std::size_t s) { return std::span<const Vertex>(keys.data() + s * w, w); };
  std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
    auto ka = key(a), kb = key(b);
    return std::lexicographical_compare(ka.begin(), ka.end(), kb.begin(), kb.end());
  });
  std::vector<std::size_t> parent(n);
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](std::size_t x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  flags.pseudomanifold = true;
  for (std::size_t i = 0; i < order.size();) {
    std::size_t j = i + 1;
    while (j < order.size() && std::equal(key(order[i]).begin(), key(order[i]).end(), key(order[j]).begin())) ++j;
    if (j - i != 2) flags.pseudomanifold = false;
    for (std::size_t t = i + 1; t < j; ++t) {
      std::size_t a = find(owner[order[i]]), b = find(owner[order[t]]);
      if (a != b) parent[std::max(a, b)] = std::min(a, b);
    }
    i = j;
  }
  std::size_t roots = 0;
  for (std::size_t i = 0; i < n; ++i)
    if (find(i) == i) ++roots;
  flags.strongly_connected = roots == 1;
  return flags;
}

bool is_spanning_copy(const SimplicialComplex& k, int uniformity, std::span<const Vertex> host_vertices,
                      const std::function<bool(std::span<const Vertex>)>& has_edge) {
  if (k.dim() + 1 != uniformity)
    fail(Errc::DimMismatch, "complex dimension " + std::to_string(k.dim()) + " does not match uniformity " +
                                std::to_string(uniformity));
  if (!std::equal(k.vertices().begin(), k.vertices().end(), host_vertices.begin(), host_vertices.end())) return false;
  for (std::size_t i = 0; i < k.facet_count(); ++i)
    if (!has_edge(k.facet(i))) return false;
  return true;
}

bool is_spanning_copy(const SimplicialComplex& k, const Hypergraph& host) {
  VertexSet all(host.order());
  std::iota(all.begin(), all.end(), 0);
  return is_spanning_copy(k, host.uniformity(), all, [&](std::span<const Vertex> f) { return host.has_edge(f); });
}

}  // namespace spansphere
