#include "spansphere/chain.hpp"

#include <array>
#include <numeric>

#include "spansphere/error.hpp"

namespace spansphere {

namespace {

void add_block(HostInstance& h, std::string name, Vertex from, Vertex to) {
  VertexSet v;
  for (Vertex x = from; x < to; ++x) v.push_back(x);
  h.blocks.emplace_back(std::move(name), std::move(v));
}

}  // namespace

HostInstance lower_bound_codegree(int k, Vertex n) {
  if (k < 2 || n < 2 * static_cast<Vertex>(k)) fail(Errc::BadParams, "need k >= 2 and n >= 2k");
  const Vertex t = static_cast<Vertex>(k - 1);
  const Vertex rest = n - t;
  const Vertex x_end = t + (rest + 1) / 2;
  HostInstance h;
  h.k = k;
  h.n = n;
  add_block(h, "T", 0, t);
  add_block(h, "X", t, x_end);
  add_block(h, "Y", x_end, n);
  std::vector<Vertex> flat;
  VertexSet all(n);
  std::iota(all.begin(), all.end(), Vertex{0});
  for_each_subset(std::span<const Vertex>(all), static_cast<std::size_t>(k), [&](std::span<const Vertex> e) {
    bool in_x = false, in_y = false;
    for (Vertex v : e) {
      in_x |= v >= t && v < x_end;
      in_y |= v >= x_end;
    }
    if (!(in_x && in_y)) flat.insert(flat.end(), e.begin(), e.end());
  });
  h.host = Hypergraph::from_flat(k, n, flat);
  h.provenance = "lower_bound_codegree k=" + std::to_string(k) + " n=" + std::to_string(n);
  return h;
}

HostInstance lower_bound_tight_cycle(int k, Vertex n) {
  if (k < 2 || n == 0 || n % static_cast<Vertex>(k) != 0) fail(Errc::BadParams, "need k >= 2 and k | n");
  const Vertex y = n / static_cast<Vertex>(k) + 1;
  if (y >= n) fail(Errc::BadParams, "n too small for the construction");
  const Vertex x_end = n - y;
  HostInstance h;
  h.k = k;
  h.n = n;
  add_block(h, "X", 0, x_end);
  add_block(h, "Y", x_end, n);
  std::vector<Vertex> flat;
  VertexSet all(n);
  std::iota(all.begin(), all.end(), Vertex{0});
  for_each_subset(std::span<const Vertex>(all), static_cast<std::size_t>(k), [&](std::span<const Vertex> e) {
    const auto in_x = std::count_if(e.begin(), e.end(), [&](Vertex v) { return v < x_end; });
    if (in_x >= k - 1) flat.insert(flat.end(), e.begin(), e.end());
  });
  h.host = Hypergraph::from_flat(k, n, flat);
  h.provenance = "lower_bound_tight_cycle k=" + std::to_string(k) + " n=" + std::to_string(n);
  return h;
}

HostInstance lower_bound_vertex_degree(Vertex n) {
  if (n < 3 || n % 3 != 0) fail(Errc::BadParams, "need 3 | n");
  const Vertex third = n / 3;
  HostInstance h;
  h.k = 3;
  h.n = n;
  add_block(h, "X", 0, third);
  add_block(h, "Y", third, 2 * third);
  add_block(h, "Z", 2 * third, n);
  std::vector<Vertex> flat;
  VertexSet all(n);
  std::iota(all.begin(), all.end(), Vertex{0});
  for_each_subset(std::span<const Vertex>(all), 3, [&](std::span<const Vertex> e) {
    std::array<int, 3> count{};
    for (Vertex v : e) ++count[v / third];
    bool keep = false;
    for (int p = 0; p < 3; ++p) keep |= count[p] == 3 || (count[p] == 2 && count[(p + 1) % 3] == 1);
    if (keep) flat.insert(flat.end(), e.begin(), e.end());
  });
  h.host = Hypergraph::from_flat(3, n, flat);
  h.provenance = "lower_bound_vertex_degree n=" + std::to_string(n);
  return h;
}

}  // namespace spansphere
