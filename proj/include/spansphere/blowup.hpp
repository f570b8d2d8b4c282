#pragma once

#include <boost/rational.hpp>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "spansphere/hypergraph.hpp"

namespace spansphere {

using Rational = boost::rational<std::int64_t>;

// Accepts "p/q", integers and plain decimals such as "0.25".
Rational parse_rational(std::string_view text);
std::string format_rational(const Rational& r);

// A base hypergraph R with disjoint host vertex parts V_x; its host R* is the
// complete blow-up (every transversal of a base edge is an edge).
class Blowup {
 public:
  Blowup(Hypergraph base, std::vector<VertexSet> parts);

  const Hypergraph& base() const noexcept { return base_; }
  int uniformity() const noexcept { return base_.uniformity(); }
  const std::vector<VertexSet>& parts() const noexcept { return parts_; }
  const VertexSet& part(Vertex x) const { return parts_.at(x); }
  const VertexSet& vertices() const noexcept { return vertices_; }
  Vertex host_order() const noexcept { return vertices_.empty() ? 0 : vertices_.back() + 1; }

  std::optional<Vertex> project(Vertex v) const;
  // Base set of a host set when it is a partial transversal, else nullopt.
  std::optional<VertexSet> project_set(std::span<const Vertex> host_set) const;
  bool is_edge(std::span<const Vertex> host_set) const;

  // Base vertices whose part has exactly one vertex.
  std::vector<Vertex> singleton_parts() const;
  std::optional<Vertex> singleton() const;
  bool is_nearly_regular(const Rational& gamma, const Rational& m) const;

  std::optional<Rational> gamma;
  std::optional<Rational> m;

  // Explicit host hypergraph on 0..host_order()-1; BudgetExceeded above max_edges.
  Hypergraph materialize(std::uint64_t max_edges) const;
  std::uint64_t host_edge_count() const;

 private:
  Hypergraph base_;
  std::vector<VertexSet> parts_;
  VertexSet vertices_;
  std::vector<Vertex> owner_;  // parallel to vertices_
};

}  // namespace spansphere
