#pragma once

#include <array>
#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "spansphere/allocation.hpp"
#include "spansphere/blowup.hpp"
#include "spansphere/complex.hpp"
#include "spansphere/hypergraph.hpp"

namespace spansphere {

// A path of blow-ups F_1*, ..., F_l* covering a host; consecutive links meet in shared_edges[i].
struct ChainCertificate {
  int k = 2;
  std::vector<Blowup> links;
  std::vector<VertexSet> shared_edges;
  Rational epsilon{0};
  Rational gamma{0};
  Rational m1{1};
  Rational m2{1};
  std::string provenance;
};

// Union of the link blow-ups, without materialising its edges.
class ChainHost {
 public:
  explicit ChainHost(const ChainCertificate& c);

  int uniformity() const noexcept { return k_; }
  const VertexSet& vertices() const noexcept { return vertices_; }
  Vertex order() const noexcept { return vertices_.empty() ? 0 : vertices_.back() + 1; }
  bool has_edge(std::span<const Vertex> sorted) const;
  std::uint64_t edge_count() const;
  Hypergraph materialize(std::uint64_t max_edges) const;

 private:
  int k_;
  std::vector<Blowup> links_;
  VertexSet vertices_;
};

struct HostInstance {
  int k = 2;
  Vertex n = 0;
  std::optional<Hypergraph> host;
  std::optional<ChainCertificate> certificate;
  // Named vertex blocks of the construction (T, X, Y, ...).
  std::vector<std::pair<std::string, VertexSet>> blocks;
  std::string provenance;
};

struct ChainViolation {
  // 1..5 for the chain properties, 6 for the subgraph check.
  int property = 0;
  std::optional<std::size_t> link;
  std::string message;
};

struct ChainReport {
  std::size_t links = 0;
  std::vector<ChainViolation> violations;

  bool passed() const noexcept { return violations.empty(); }
  bool property_ok(int property) const;
  std::string to_text() const;
};

ChainReport verify_chain(const Hypergraph& host, const ChainCertificate& c);
// Host taken as the union of the links; the subgraph check is then structural only.
ChainReport verify_chain(const ChainCertificate& c);

struct ChainGenOptions {
  bool singletons = false;
};

HostInstance generate_chain_host(int k, Vertex s, std::size_t num_links, std::size_t part_size,
                                 std::uint64_t seed, const ChainGenOptions& options = {});

struct SpanningOptions {
  unsigned jobs = 1;
  bool verify = true;
  SphereCheckOptions sphere;
};

struct LinkSummary {
  VertexSet f1, f2;
  bool overlap = false;
  AllocationReport report;
};

struct SpanningResult {
  SimplicialComplex sphere;
  std::vector<LinkSummary> links;
  bool spanning = false;
  std::optional<SphereCertificate> certificate;
};

SpanningResult spanning_sphere(const ChainCertificate& c, const SpanningOptions& options = {});

// Host on T (k-1 vertices), X and Y: every k-set except those meeting both X and Y.
HostInstance lower_bound_codegree(int k, Vertex n);
// Host on X and Y with |Y| = n/k + 1: every k-set with at least k-1 vertices in X.
HostInstance lower_bound_tight_cycle(int k, Vertex n);
// 3-graph on X, Y, Z: edges of type XXY, YYZ, ZZX and all triples inside a part.
HostInstance lower_bound_vertex_degree(Vertex n);

}  // namespace spansphere
