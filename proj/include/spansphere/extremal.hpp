#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "spansphere/blowup.hpp"
#include "spansphere/hypergraph.hpp"

namespace spansphere {

inline constexpr std::uint64_t kDefaultEnumerationBudget = 50'000'000;

struct PropertyPredicate {
  std::string name;
  Rational epsilon{0};
  int k = 2;
  std::function<bool(const Hypergraph&)> evaluator;
};

// P(eps, k): no isolated vertices and 2*delta* >= (1 + 2 eps) * order.
PropertyPredicate dense_property(const Rational& epsilon, int k);

// s-graph whose edges are the s-sets S with P(H[S]).
Hypergraph property_graph(const Hypergraph& h, const PropertyPredicate& p, int s,
                          std::uint64_t budget = kDefaultEnumerationBudget);

struct RateEstimate {
  std::uint64_t hits = 0;
  std::uint64_t trials = 0;
  Rational rate{0};
  // 95% Wilson interval.
  double lower = 0;
  double upper = 0;
};

// Fraction of random s-sets S (containing `fixed`) with H[S] in P(eps/2, k).
RateEstimate sample_property_rate(const Hypergraph& h, const Rational& epsilon, int s, std::uint64_t trials,
                                  std::uint64_t seed, const VertexSet& fixed = {});

// s disjoint b-sets, ordered by least element, all of whose transversals are edges; the
// lexicographically least such family.
std::optional<std::vector<VertexSet>> find_partite_blowup(const Hypergraph& p, std::size_t b,
                                                          std::uint64_t budget = kDefaultEnumerationBudget);

struct PigeonholeResult {
  std::size_t member = 0;
  // Host part i plays member vertex labeling[i].
  std::vector<Vertex> labeling;
  // parts[i] is a b-subset of host part i.
  std::vector<VertexSet> parts;
  std::size_t colour_class = 0;
  std::size_t colours = 0;
};

// host is k-uniform on the disjoint parts; family members are k-graphs on 0..s-1.
std::optional<PigeonholeResult> pigeonhole_blowup(const Hypergraph& host, const std::vector<VertexSet>& parts,
                                                  const std::vector<Hypergraph>& family, std::size_t b,
                                                  std::uint64_t budget = kDefaultEnumerationBudget);

}  // namespace spansphere
