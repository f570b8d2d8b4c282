#pragma once

#include <optional>
#include <span>
#include <string>
#include <vector>

#include "spansphere/blowup.hpp"
#include "spansphere/complex.hpp"
#include "spansphere/walk.hpp"

namespace spansphere {

// Injective map from the supported pairs of R into its edges, p ⊆ e_p.
struct PairAssignment {
  std::vector<VertexSet> pairs;   // lexicographic
  std::vector<std::size_t> edge;  // edge index per pair
};

PairAssignment assign_edges_to_pairs(const Hypergraph& r);

enum class ParityFix { None, OutsideImage, ImageEdge };
const char* parity_fix_name(ParityFix p) noexcept;

struct FillResult {
  // Indexed by edge of the base.
  std::vector<SimplicialComplex> spheres;
  std::vector<VertexSet> entry_facets;
  std::vector<std::vector<std::size_t>> shapes;  // part sizes of B_e, in base-edge vertex order
  std::vector<std::size_t> routed_pairs;         // |M_p| summed over pairs assigned to the edge
  PairAssignment assignment;
  ParityFix parity = ParityFix::None;
  std::optional<std::size_t> parity_edge;  // e* (or e_p for ImageEdge)
};

// Covers the blow-up by vertex-disjoint spheres S_e with f_e a facet of S_e.
FillResult fill_blowup(const Blowup& b, const std::vector<VertexSet>& entry);

// Violations of the FillResult invariants; empty when all hold.
std::vector<std::string> check_fill(const Blowup& b, const std::vector<VertexSet>& entry, const FillResult& result,
                                    bool certify_spheres = true);

struct BackboneWalk {
  TightWalk walk;
  std::string kind;                // "splice" or "greedy"
  std::vector<std::size_t> usage;  // host vertices per base vertex taken by the backbone sphere
};

// The covering walk (splice or greedy) with the smaller maximum per-part usage.
BackboneWalk choose_backbone_walk(const Hypergraph& r);

struct PartSizeRequirement {
  std::vector<std::size_t> per_vertex;
  std::size_t minimum = 0;
};

// Exact part size needed by allocate on a blow-up of r, including the
// singleton branch for every base vertex that can host the singleton.
PartSizeRequirement minimum_part_size(const Hypergraph& r);

struct AllocateOptions {
  bool verify = true;
  // Accept f1, f2 whose base edges meet (still distinct and host-disjoint).
  bool allow_overlap = false;
  SphereCheckOptions sphere;
};

struct AllocationReport {
  std::size_t base_vertices = 0;
  std::size_t base_edges = 0;
  std::optional<Vertex> singleton;
  std::optional<VertexSet> singleton_edge;
  std::string walk_kind;
  std::size_t walk_order = 0;
  std::size_t backbone_vertices = 0;
  std::size_t backbone_facets = 0;
  ParityFix parity = ParityFix::None;
  std::optional<std::size_t> parity_edge;
  bool parity_glue = false;
  std::size_t vertices = 0;
  std::size_t facets = 0;
  bool spanning = false;
  bool f1_facet = false;
  bool f2_facet = false;
  std::optional<SphereCertificate> certificate;

  std::string to_text() const;
};

struct AllocationResult {
  SimplicialComplex sphere;
  VertexSet f1, f2;
  AllocationReport report;
};

AllocationResult allocate(const Blowup& b, std::span<const Vertex> f1, std::span<const Vertex> f2,
                          const AllocateOptions& options = {});

}  // namespace spansphere
