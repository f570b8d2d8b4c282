#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "spansphere/hypergraph.hpp"
#include "spansphere/sets.hpp"

namespace spansphere {

// Pure complex given by its facets, each a sorted (dim+1)-set.
class SimplicialComplex {
 public:
  SimplicialComplex() : SimplicialComplex(0, {}) {}
  SimplicialComplex(int dim, const std::vector<VertexSet>& facets);
  static SimplicialComplex from_table(int dim, SetTable facets);

  int dim() const noexcept { return dim_; }
  std::size_t facet_count() const noexcept { return facets_.size(); }
  bool empty() const noexcept { return facets_.empty(); }
  std::span<const Vertex> facet(std::size_t i) const { return facets_[i]; }
  bool has_facet(std::span<const Vertex> sorted) const { return facets_.contains(sorted); }
  std::optional<std::size_t> facet_index(std::span<const Vertex> sorted) const { return facets_.find(sorted); }
  std::vector<VertexSet> facets() const { return facets_.rows(); }
  const SetTable& table() const noexcept { return facets_; }
  const VertexSet& vertices() const noexcept { return vertices_; }
  Vertex vertex_bound() const noexcept { return vertices_.empty() ? 0 : vertices_.back() + 1; }

  friend bool operator==(const SimplicialComplex& a, const SimplicialComplex& b) {
    return a.dim_ == b.dim_ && a.facets_ == b.facets_;
  }

 private:
  void finish();

  int dim_;
  SetTable facets_;
  VertexSet vertices_;
};

SimplicialComplex suspension(const SimplicialComplex& k);
SimplicialComplex glue(const SimplicialComplex& k, const SimplicialComplex& k2, std::span<const Vertex> facet);
// The triangle may be given in any order; fresh v_i = max+1+i pairs with its i-th vertex.
SimplicialComplex subdivide_facet(const SimplicialComplex& k, std::span<const Vertex> triangle);
SimplicialComplex relabel(const SimplicialComplex& k, const std::function<Vertex(Vertex)>& map);
SimplicialComplex link(const SimplicialComplex& k, Vertex v);

// Face counts f_0..f_dim of the downward closure.
std::vector<std::uint64_t> f_vector(const SimplicialComplex& k);
std::int64_t euler_characteristic(const SimplicialComplex& k);

struct PseudomanifoldFlags {
  bool pseudomanifold = false;
  bool strongly_connected = false;
};
PseudomanifoldFlags is_pseudomanifold(const SimplicialComplex& k);

enum class SphereLevel { FullDim1, FullDim2, LinkVerified, Shelled, PartialOnly, Rejected };
const char* sphere_level_name(SphereLevel level) noexcept;
// True for the levels that certify a sphere (everything but PartialOnly and Rejected).
bool certifies_sphere(SphereLevel level) noexcept;

struct SphereCertificate {
  SphereLevel level = SphereLevel::Rejected;
  std::int64_t euler = 0;
  bool pseudomanifold = false;
  bool strongly_connected = false;
  std::optional<std::vector<std::size_t>> shelling_order;
  std::optional<std::string> failure_reason;
};

struct SphereCheckOptions {
  std::uint64_t shelling_budget = 1'000'000;
  bool try_shelling = true;
};

SphereCertificate verify_sphere(const SimplicialComplex& k, const SphereCheckOptions& options = {});

// Shelling search on its own; nullopt when the budget runs out or no order is found.
std::optional<std::vector<std::size_t>> find_shelling(const SimplicialComplex& k, std::uint64_t budget);
// Independent checker: each new facet meets the earlier union in a nonempty
// pure (dim-1)-complex. Returns the first violation.
std::optional<std::string> check_shelling(const SimplicialComplex& k, std::span<const std::size_t> order);

bool is_spanning_copy(const SimplicialComplex& k, const Hypergraph& host);
bool is_spanning_copy(const SimplicialComplex& k, int uniformity, std::span<const Vertex> host_vertices,
                      const std::function<bool(std::span<const Vertex>)>& has_edge);

}  // namespace spansphere
