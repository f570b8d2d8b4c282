#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <random>

#include "oracles.hpp"
#include "spansphere/chain.hpp"
#include "spansphere/error.hpp"
#include "spansphere/hypergraph.hpp"
#include "spansphere/walk.hpp"

using namespace spansphere;

namespace {

Hypergraph tight_cycle(int k, Vertex n) {
  std::vector<VertexSet> es;
  for (Vertex i = 0; i < n; ++i) {
    VertexSet e;
    for (int j = 0; j < k; ++j) e.push_back((i + j) % n);
    es.push_back(make_set(e));
  }
  return Hypergraph(k, n, es);
}

Hypergraph disjoint_k4s() {
  std::vector<VertexSet> es;
  for (Vertex off : {0u, 4u})
    for (const auto& e : complete_hypergraph(3, 4).edges()) es.push_back({e[0] + off, e[1] + off, e[2] + off});
  return Hypergraph(3, 8, es);
}

void check_walk(const Hypergraph& h, const TightWalk& w) {
  CHECK_FALSE(validate_walk(h, w).has_value());
  CHECK(walk_covers(h, w));
  const double bound = std::pow(static_cast<double>(h.order()), 2.0 * h.uniformity());
  CHECK(static_cast<double>(w.order()) <= bound);
}

}  // namespace

TEST_CASE("hypergraph canonical storage") {
  Hypergraph h(3, 5, {{2, 1, 0}, {4, 3, 0}, {0, 1, 2}});
  CHECK(h.edge_count() == 2);
  CHECK(h.edges() == std::vector<VertexSet>{{0, 1, 2}, {0, 3, 4}});
  CHECK_THROWS_AS(Hypergraph(3, 4, {{0, 1, 4}}), Error);
  try {
    Hypergraph(3, 4, {{0, 1, 4}});
  } catch (const Error& e) {
    CHECK(e.code() == Errc::InvalidVertex);
  }
  try {
    Hypergraph(3, 4, {{0, 1}});
  } catch (const Error& e) {
    CHECK(e.code() == Errc::BadArity);
  }
  try {
    Hypergraph(3, 4, {{0, 1, 1}});
  } catch (const Error& e) {
    CHECK(e.code() == Errc::BadArity);
  }
}

TEST_CASE("degree") {
  Hypergraph k5 = complete_hypergraph(3, 5);
  CHECK(degree(k5, VertexSet{0, 1}) == 3);
  for (const auto& e : k5.edges()) CHECK(degree(k5, e) == 1);
  auto lb = lower_bound_codegree(3, 12);
  CHECK(degree(*lb.host, VertexSet{0, 1}) == 10);
  CHECK_THROWS_AS(degree(k5, VertexSet{0, 5}), Error);
}

TEST_CASE("supported codegree") {
  CHECK(min_supported_codegree(complete_hypergraph(3, 5)) == 3);
  CHECK(min_supported_codegree(Hypergraph(3, 6)) == 0);
  CHECK(min_supported_codegree(*lower_bound_codegree(3, 12).host) == 5);
  CHECK(min_supported_d_degree(complete_hypergraph(3, 4), 1).delta_star_d == 3);
  CHECK(min_supported_d_degree(Hypergraph(4, 6), 2).delta_star_d == 0);
  CHECK_THROWS_AS(min_supported_d_degree(complete_hypergraph(3, 4), 3), Error);
  CHECK_THROWS_AS(min_supported_d_degree(complete_hypergraph(3, 4), 0), Error);
  std::mt19937_64 rng(11);
  for (int t = 0; t < 20; ++t) {
    Hypergraph h = oracle::random_hypergraph(3, 9, 0.4, rng);
    CHECK(min_supported_d_degree(h, 1).delta_star_d == oracle::delta_star(h, 1));
    CHECK(min_supported_d_degree(h, 2).delta_star_d == min_supported_codegree(h));
    CHECK(min_supported_codegree(h) == oracle::delta_star(h, 2));
  }
}

TEST_CASE("line graph") {
  Hypergraph single(3, 3, {{0, 1, 2}});
  Hypergraph l = line_graph(single);
  CHECK(l.order() == 1);
  CHECK(l.edge_count() == 0);
  Hypergraph path(3, 4, {{0, 1, 2}, {1, 2, 3}});
  CHECK(line_graph(path).edge_count() == 1);
  CHECK(line_graph(complete_hypergraph(3, 4)) == complete_hypergraph(2, 4));
}

TEST_CASE("tight components") {
  CHECK(tight_components(disjoint_k4s()).components.size() == 2);
  CHECK(tight_components(complete_hypergraph(3, 6)).components.size() == 1);
  auto vd = lower_bound_vertex_degree(9);
  auto comps = tight_components(*vd.host);
  CHECK(comps.components.size() >= 2);
  for (const auto& c : comps.components) {
    Hypergraph sub = edge_subgraph(*vd.host, c);
    CHECK(isolated_vertices(sub).size() > 0);
  }
  CHECK(is_tightly_connected(complete_hypergraph(3, 5)));
  Hypergraph k4plus(3, 5, complete_hypergraph(3, 4).edges());
  CHECK_FALSE(is_tightly_connected(k4plus));
  CHECK_FALSE(is_tightly_connected(Hypergraph(3, 4)));
  auto lb = lower_bound_codegree(3, 12);
  Hypergraph cut = remove_edges_containing(*lb.host, VertexSet{0, 1});
  CHECK(tight_components(cut).components.size() == 2);
  CHECK_FALSE(is_tightly_connected(cut));
}

TEST_CASE("degree threshold does not force tight connectivity at n = k + 2") {
  Hypergraph h(3, 5, {{0, 1, 4}, {2, 3, 4}});
  CHECK(min_supported_codegree(h) == 1);
  CHECK(isolated_vertices(h).empty());
  CHECK_FALSE(is_tightly_connected(h));
  CHECK_FALSE(oracle::tightly_connected(h));
  CHECK_THROWS_AS(dirac_connectivity_witness(h, VertexSet{0, 1, 4}, VertexSet{2, 3, 4}), Error);
  Hypergraph h4(4, 6, {{0, 2, 3, 4}, {1, 2, 4, 5}, {1, 3, 4, 5}});
  CHECK(min_supported_codegree(h4) == 1);
  CHECK(isolated_vertices(h4).empty());
  CHECK_FALSE(is_tightly_connected(h4));
}

TEST_CASE("dirac connectivity witness") {
  Hypergraph k6 = complete_hypergraph(3, 6);
  VertexSet e{0, 1, 2}, f{3, 4, 5};
  CHECK(dirac_connectivity_witness(k6, e, e) == std::vector<VertexSet>{e});
  auto w = dirac_connectivity_witness(k6, e, f);
  CHECK(w.front() == e);
  CHECK(w.back() == f);
  CHECK(w.size() <= 5);
  for (std::size_t i = 0; i + 1 < w.size(); ++i) CHECK(intersection_size(w[i], w[i + 1]) >= 2);

  std::mt19937_64 rng(5);
  int tested = 0;
  while (tested < 3) {
    Hypergraph h = oracle::random_hypergraph(3, 9, 0.85, rng);
    if (!isolated_vertices(h).empty() || min_supported_codegree(h) < (9 - 3 + 1) / 2) continue;
    ++tested;
    std::uniform_int_distribution<std::size_t> pick(0, h.edge_count() - 1);
    for (int t = 0; t < 50; ++t) {
      VertexSet a = h.edges()[pick(rng)];
      VertexSet b = h.edges()[pick(rng)];
      auto seq = dirac_connectivity_witness(h, a, b);
      REQUIRE(!seq.empty());
      CHECK(seq.front() == a);
      CHECK(seq.back() == b);
      for (const auto& x : seq) CHECK(h.has_edge(x));
      for (std::size_t i = 0; i + 1 < seq.size(); ++i) CHECK(intersection_size(seq[i], seq[i + 1]) >= 2);
    }
  }
  Hypergraph sparse = tight_cycle(3, 9);
  try {
    dirac_connectivity_witness(sparse, VertexSet{0, 1, 2}, VertexSet{3, 4, 5});
    CHECK(false);
  } catch (const Error& err) {
    CHECK(err.code() == Errc::PreconditionFailed);
  }
}

TEST_CASE("covering tight walks") {
  Hypergraph single(3, 3, {{0, 1, 2}});
  TightWalk w = covering_tight_walk(single);
  CHECK(w.order() == 3);
  check_walk(single, w);
  check_walk(complete_hypergraph(3, 4), covering_tight_walk(complete_hypergraph(3, 4)));
  check_walk(tight_cycle(3, 7), covering_tight_walk(tight_cycle(3, 7)));
  check_walk(tight_cycle(3, 7), greedy_covering_walk(tight_cycle(3, 7)));
  check_walk(complete_hypergraph(4, 7), covering_tight_walk(complete_hypergraph(4, 7)));
  try {
    covering_tight_walk(disjoint_k4s());
    CHECK(false);
  } catch (const Error& err) {
    CHECK(err.code() == Errc::NotTightlyConnected);
  }
  TightWalk bad{3, {0, 1, 2, 1}};
  CHECK(validate_walk(single, bad).has_value());
}

TEST_CASE("lift walk to path") {
  Hypergraph k4 = complete_hypergraph(3, 4);
  TightWalk w = covering_tight_walk(k4);
  std::vector<VertexSet> parts;
  for (Vertex x = 0; x < 4; ++x) {
    VertexSet p;
    for (Vertex i = 0; i < 30; ++i) p.push_back(x * 30 + i);
    parts.push_back(p);
  }
  Blowup b(k4, parts);
  TightWalk path = lift_walk_to_path(w, b);
  CHECK(path.order() == w.order());
  CHECK(make_set(path.vertices).size() == path.order());
  for (std::size_t i = 0; i < path.order(); ++i) CHECK(*b.project(path.vertices[i]) == w.vertices[i]);
  for (std::size_t i = 0; i < path.window_count(); ++i) CHECK(b.is_edge(path.window(i)));

  Hypergraph single(3, 3, {{0, 1, 2}});
  TightWalk once{3, {0, 1, 2}};
  Blowup tiny(single, {{0}, {1}, {2}});
  CHECK(lift_walk_to_path(once, tiny).order() == 3);
  TightWalk twice{3, {0, 1, 2, 0}};
  try {
    lift_walk_to_path(twice, tiny);
    CHECK(false);
  } catch (const Error& err) {
    CHECK(err.code() == Errc::PartTooSmall);
    CHECK(err.subject() == 0);
  }
}

TEST_CASE("random hypergraph properties") {
  std::mt19937_64 rng(2024);
  for (int t = 0; t < 200; ++t) {
    const int k = t % 2 ? 4 : 3;
    std::uniform_int_distribution<Vertex> nd(static_cast<Vertex>(k + 3), 10);
    std::uniform_real_distribution<double> pd(0.2, 0.95);
    const Vertex n = nd(rng);
    Hypergraph h = oracle::random_hypergraph(k, n, pd(rng), rng);
    const std::uint64_t ds = min_supported_codegree(h);
    for (int d = 1; d < k - 1; ++d) {
      const std::uint64_t a = min_supported_d_degree(h, d).delta_star_d;
      const std::uint64_t b = min_supported_d_degree(h, d + 1).delta_star_d;
      CHECK(a * static_cast<std::uint64_t>(k - d) >= ds * b);
    }
    if (!h.empty() && isolated_vertices(h).empty() && ds >= (n - k + 1) / 2) CHECK(is_tightly_connected(h));
    CHECK(is_tightly_connected(h) == oracle::tightly_connected(h));

    Hypergraph l = line_graph(h);
    for (std::size_t i = 0; i < l.edge_count(); ++i) {
      CHECK(l.edge(i)[0] != l.edge(i)[1]);
      CHECK(intersection_size(h.edge(l.edge(i)[0]), h.edge(l.edge(i)[1])) == static_cast<std::size_t>(k - 1));
    }
    auto comps = tight_components(h);
    std::vector<int> seen(h.edge_count(), 0);
    for (const auto& c : comps.components)
      for (std::size_t e : c) ++seen[e];
    CHECK(std::all_of(seen.begin(), seen.end(), [](int c) { return c == 1; }));
    CHECK(comps.components.size() == oracle::tight_component_count(h));

    VertexSet s;
    for (Vertex v = 0; v < n; ++v)
      if (rng() % 3 == 0 && s.size() < static_cast<std::size_t>(k)) s.push_back(v);
    CHECK(degree(h, s) == oracle::degree(h, s));

    if (is_tightly_connected(h) && t % 10 == 0) check_walk(h, covering_tight_walk(h));
  }
}
