#pragma once

#include <optional>
#include <string>
#include <vector>

#include "spansphere/complex.hpp"

namespace spansphere {

struct PartiteSphere {
  SimplicialComplex sphere;
  // Canonical part order: suspension 2-parts first, then the 3-part (case b), then the two ℓ-parts.
  std::vector<VertexSet> parts;
  // A transversal facet, listed in part order.
  VertexSet tracked;
};

// Spanning sphere of K_k(2,...,2,ℓ,ℓ): C_{2ℓ} then k-2 suspensions.
PartiteSphere partite_sphere_a(int k, int l, const std::optional<VertexSet>& designated = std::nullopt);
// Spanning sphere of K_k(2,...,2,3,ℓ,ℓ): case (a) for (2,ℓ-1,ℓ-1), one subdivision, k-3 suspensions.
PartiteSphere partite_sphere_b(int k, int l, const std::optional<VertexSet>& designated = std::nullopt);

struct PartiteHost {
  std::vector<VertexSet> parts;
  // One vertex per part, listed in part order.
  std::optional<VertexSet> designated;
};

enum class PartiteShape { AllTwo, TwoEll, ThreeEll };
// Shape of a part-size list, or nullopt when no construction applies.
std::optional<PartiteShape> classify_partite_shape(const std::vector<std::size_t>& sizes);
// Spanning sphere of the complete partite host, the designated transversal being a facet.
SimplicialComplex partite_host_sphere(const PartiteHost& host);

struct DoublyCoveringSphere {
  int k = 0;
  SimplicialComplex sphere;
  std::vector<std::size_t> profile;   // vertices per path position
  std::vector<std::size_t> position;  // path position of vertex id (ids are 0..N-1)
  // Indexed by path edge i, the window of positions i..i+k-1.
  std::vector<VertexSet> family_f;
  std::vector<VertexSet> family_fp;

  std::size_t path_length() const noexcept { return profile.size(); }
  std::size_t path_edges() const noexcept { return family_f.size(); }
};

DoublyCoveringSphere thin_path_sphere(int k);
DoublyCoveringSphere grow_path_sphere(const DoublyCoveringSphere& s);
DoublyCoveringSphere tight_path_blowup_sphere(int k, std::size_t l);
// Profile of tight_path_blowup_sphere(k, l) without building it.
std::vector<std::size_t> path_sphere_profile(int k, std::size_t l);

// Mechanical invariant check; empty when every invariant holds.
std::vector<std::string> check_doubly_covering(const DoublyCoveringSphere& s);
// One line per path edge: "e: i1 .. ik | f: j1 .. jk | fp: j1 .. jk".
std::string family_manifest(const DoublyCoveringSphere& s);

}  // namespace spansphere
