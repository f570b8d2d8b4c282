#include <doctest.h>

#include <set>

#include "oracles.hpp"
#include "spansphere/error.hpp"
#include "spansphere/spheres.hpp"

using namespace spansphere;

namespace {

// Every facet meets every part in exactly one vertex, and the parts are covered.
bool spans_partite(const SimplicialComplex& s, const std::vector<VertexSet>& parts) {
  VertexSet all;
  for (const auto& p : parts) all.insert(all.end(), p.begin(), p.end());
  if (make_set(all) != s.vertices()) return false;
  for (std::size_t i = 0; i < s.facet_count(); ++i)
    for (const auto& p : parts)
      if (intersection_size(s.facet(i), p) != 1) return false;
  return true;
}

bool certified_for(int k, SphereLevel level) {
  if (k <= 3) return level == SphereLevel::FullDim1 || level == SphereLevel::FullDim2;
  return level == SphereLevel::Shelled || level == SphereLevel::LinkVerified;
}

std::int64_t sphere_euler(int k) { return 1 + ((k - 1) % 2 == 0 ? 1 : -1); }

}  // namespace

TEST_CASE("partite sphere a") {
  auto c6 = partite_sphere_a(2, 3);
  CHECK(c6.sphere.vertices().size() == 6);
  CHECK(c6.sphere.facet_count() == 6);
  CHECK(oracle::is_cycle(c6.sphere));
  auto oct = partite_sphere_a(3, 2);
  CHECK(oct.sphere.facet_count() == 8);
  CHECK(verify_sphere(oct.sphere).level == SphereLevel::FullDim2);
  auto s4 = partite_sphere_a(4, 2);
  CHECK(s4.sphere.vertices().size() == 8);
  CHECK(s4.sphere.facet_count() == 16);
  CHECK(oracle::euler(s4.sphere) == 0);
  CHECK_THROWS_AS(partite_sphere_a(1, 3), Error);
  CHECK_THROWS_AS(partite_sphere_a(3, 1), Error);
}

TEST_CASE("partite sphere b") {
  auto b33 = partite_sphere_b(3, 3);
  CHECK(b33.sphere.vertices().size() == 9);
  CHECK(b33.sphere.facet_count() == 14);
  CHECK(oracle::euler(b33.sphere) == 2);
  auto b34 = partite_sphere_b(3, 4);
  CHECK(b34.sphere.vertices().size() == 11);
  CHECK(b34.sphere.facet_count() == 18);
  auto b43 = partite_sphere_b(4, 3);
  CHECK(b43.sphere.vertices().size() == 11);
  CHECK(b43.sphere.facet_count() == 28);
  CHECK(oracle::euler(b43.sphere) == 0);
  CHECK_THROWS_AS(partite_sphere_b(2, 3), Error);
  CHECK_THROWS_AS(partite_sphere_b(3, 2), Error);
}

TEST_CASE("partite spheres over the whole range") {
  for (int k = 2; k <= 6; ++k)
    for (int l = 2; l <= 6; ++l) {
      auto a = partite_sphere_a(k, l);
      CHECK(a.sphere.facet_count() == static_cast<std::size_t>(2 * l) << (k - 2));
      CHECK(spans_partite(a.sphere, a.parts));
      CHECK(oracle::euler(a.sphere) == sphere_euler(k));
      CHECK(a.sphere.has_facet(make_set(a.tracked)));
      if (k <= 4) CHECK(certified_for(k, verify_sphere(a.sphere).level));
      if (k >= 3 && l >= 3) {
        auto b = partite_sphere_b(k, l);
        CHECK(b.sphere.facet_count() == static_cast<std::size_t>(4 * l + 2) << (k - 3));
        CHECK(spans_partite(b.sphere, b.parts));
        CHECK(oracle::euler(b.sphere) == sphere_euler(k));
        if (k <= 4) CHECK(certified_for(k, verify_sphere(b.sphere).level));
      }
    }
}

TEST_CASE("designated transversal becomes a facet") {
  auto base = partite_sphere_a(3, 4);
  VertexSet designated;
  for (const auto& p : base.parts) designated.push_back(p.back());
  auto a = partite_sphere_a(3, 4, designated);
  CHECK(a.sphere.has_facet(make_set(designated)));
  CHECK(spans_partite(a.sphere, a.parts));
  auto bb = partite_sphere_b(4, 3);
  VertexSet d2;
  for (const auto& p : bb.parts) d2.push_back(p.back());
  auto b = partite_sphere_b(4, 3, d2);
  CHECK(b.sphere.has_facet(make_set(d2)));
}

TEST_CASE("partite host shapes") {
  CHECK(classify_partite_shape({2, 2, 2}) == PartiteShape::AllTwo);
  CHECK(classify_partite_shape({2, 5, 5}) == PartiteShape::TwoEll);
  CHECK(classify_partite_shape({3, 4, 2, 4}) == PartiteShape::ThreeEll);
  CHECK(classify_partite_shape({3, 3, 3}) == PartiteShape::ThreeEll);
  CHECK_FALSE(classify_partite_shape({2, 4, 5}).has_value());
  PartiteHost host;
  host.parts = {{10, 11, 12, 13}, {0, 1}, {20, 21, 22, 23}, {5, 6, 7}};
  host.designated = VertexSet{13, 0, 22, 7};
  SimplicialComplex s = partite_host_sphere(host);
  CHECK(spans_partite(s, host.parts));
  CHECK(s.has_facet(make_set(*host.designated)));
  CHECK(certified_for(4, verify_sphere(s).level));
}

TEST_CASE("thin path sphere") {
  auto t2 = thin_path_sphere(2);
  CHECK(t2.sphere.facet_count() == 4);
  CHECK(oracle::is_cycle(t2.sphere));
  CHECK(check_doubly_covering(t2).empty());
  auto t3 = thin_path_sphere(3);
  CHECK(t3.sphere.vertices().size() == 6);
  CHECK(verify_sphere(t3.sphere).level == SphereLevel::FullDim2);
  CHECK(t3.path_edges() == 2);
  CHECK(check_doubly_covering(t3).empty());
  auto t5 = thin_path_sphere(5);
  CHECK(t5.sphere.vertices().size() == 10);
  CHECK(t5.sphere.facet_count() == 32);
  CHECK(check_doubly_covering(t5).empty());
  CHECK_THROWS_AS(thin_path_sphere(1), Error);
}

TEST_CASE("growing path spheres") {
  auto g1 = grow_path_sphere(thin_path_sphere(3));
  CHECK(g1.sphere.vertices().size() == 9);
  CHECK(g1.profile == std::vector<std::size_t>{1, 2, 3, 2, 1});
  CHECK(g1.path_edges() == 3);
  CHECK(check_doubly_covering(g1).empty());
  auto g2 = grow_path_sphere(g1);
  CHECK(g2.profile == std::vector<std::size_t>{1, 2, 3, 3, 2, 1});
  CHECK(g2.sphere.vertices().size() == 12);
  CHECK(check_doubly_covering(g2).empty());
}

TEST_CASE("tight path blow-up spheres") {
  auto p23 = tight_path_blowup_sphere(2, 3);
  CHECK(p23.sphere.facet_count() == 4);
  CHECK(check_doubly_covering(p23).empty());
  auto p35 = tight_path_blowup_sphere(3, 5);
  CHECK(p35.sphere.vertices().size() == 9);
  CHECK(p35.profile == std::vector<std::size_t>{1, 2, 3, 2, 1});
  auto p34 = tight_path_blowup_sphere(3, 4);
  CHECK(p34.sphere.vertices().size() == 6);
  CHECK_THROWS_AS(tight_path_blowup_sphere(3, 3), Error);
  for (int k = 2; k <= 6; ++k)
    for (std::size_t l = static_cast<std::size_t>(k) + 1; l <= 12; ++l) {
      auto s = tight_path_blowup_sphere(k, l);
      CHECK(check_doubly_covering(s).empty());
      CHECK(s.profile == path_sphere_profile(k, l));
      for (std::size_t a : s.profile) CHECK(a <= static_cast<std::size_t>(k));
      CHECK(oracle::closed_pseudomanifold(s.sphere));
      if (k <= 3) CHECK(certified_for(k, verify_sphere(s.sphere).level));
    }
}

TEST_CASE("family manifest lines") {
  auto s = thin_path_sphere(2);
  std::string m = family_manifest(s);
  CHECK(std::count(m.begin(), m.end(), '\n') == 2);
  CHECK(m.find("| f: ") != std::string::npos);
  CHECK(m.find("| fp: ") != std::string::npos);
}
