#include "spansphere/spheres.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <sstream>

#include "spansphere/error.hpp"

namespace spansphere {

namespace {

PartiteSphere cycle_sphere(int l) {
  PartiteSphere out;
  const Vertex n = static_cast<Vertex>(l);
  std::vector<VertexSet> facets;
  VertexSet xs, ys;
  for (Vertex i = 0; i < n; ++i) {
    facets.push_back({i, n + i});
    facets.push_back({(i + 1) % n, n + i});
    xs.push_back(i);
    ys.push_back(n + i);
  }
  out.sphere = SimplicialComplex(1, facets);
  out.parts = {xs, ys};
  out.tracked = {0, n};
  return out;
}

void suspend_tracked(PartiteSphere& p, std::size_t insert_at) {
  const Vertex u = p.sphere.vertex_bound();
  p.sphere = suspension(p.sphere);
  p.parts.insert(p.parts.begin() + static_cast<std::ptrdiff_t>(insert_at), VertexSet{u, u + 1});
  p.tracked.insert(p.tracked.begin() + static_cast<std::ptrdiff_t>(insert_at), u);
}

void apply_designated(PartiteSphere& p, const std::optional<VertexSet>& designated) {
  if (!designated) return;
  const VertexSet& d = *designated;
  if (d.size() != p.parts.size()) fail(Errc::BadParams, "designated transversal needs one vertex per part");
  std::map<Vertex, Vertex> swap;
  for (std::size_t i = 0; i < d.size(); ++i) {
    if (!std::binary_search(p.parts[i].begin(), p.parts[i].end(), d[i]))
      fail(Errc::BadParams, "designated vertex " + std::to_string(d[i]) + " is not in part " + std::to_string(i));
    if (d[i] != p.tracked[i]) {
      swap[d[i]] = p.tracked[i];
      swap[p.tracked[i]] = d[i];
    }
  }
  p.sphere = relabel(p.sphere, [&](Vertex v) {
    auto it = swap.find(v);
    return it == swap.end() ? v : it->second;
  });
  p.tracked = d;
}

DoublyCoveringSphere canonical_order(DoublyCoveringSphere s) {
  const std::size_t n = s.position.size();
  std::vector<Vertex> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(), [&](Vertex a, Vertex b) { return s.position[a] < s.position[b]; });
  std::vector<Vertex> rename(n);
  std::vector<std::size_t> position(n);
  for (std::size_t i = 0; i < n; ++i) {
    rename[order[i]] = static_cast<Vertex>(i);
    position[i] = s.position[order[i]];
  }
  auto map_set = [&](const VertexSet& f) {
    VertexSet out;
    for (Vertex v : f) out.push_back(rename[v]);
    std::sort(out.begin(), out.end());
    return out;
  };
  s.sphere = relabel(s.sphere, [&](Vertex v) { return rename[v]; });
  for (auto& f : s.family_f) f = map_set(f);
  for (auto& f : s.family_fp) f = map_set(f);
  s.position = std::move(position);
  return s;
}

}  // namespace

PartiteSphere partite_sphere_a(int k, int l, const std::optional<VertexSet>& designated) {
  if (k < 2 || l < 2) fail(Errc::BadParams, "partite_sphere_a needs k >= 2 and l >= 2");
  PartiteSphere p = cycle_sphere(l);
  for (int j = 0; j < k - 2; ++j) suspend_tracked(p, static_cast<std::size_t>(j));
  apply_designated(p, designated);
  return p;
}

PartiteSphere partite_sphere_b(int k, int l, const std::optional<VertexSet>& designated) {
  if (k < 3 || l < 3) fail(Errc::BadParams, "partite_sphere_b needs k >= 3 and l >= 3");
  PartiteSphere p = partite_sphere_a(3, l - 1);
  // tracked = (u, x_1, y_1) in part order (2-part, X, Y)
  const Vertex base = p.sphere.vertex_bound();
  p.sphere = subdivide_facet(p.sphere, p.tracked);
  for (std::size_t i = 0; i < 3; ++i) {
    p.parts[i].push_back(base + static_cast<Vertex>(i));
    p.tracked[i] = base + static_cast<Vertex>(i);
  }
  for (int j = 0; j < k - 3; ++j) suspend_tracked(p, static_cast<std::size_t>(j));
  apply_designated(p, designated);
  return p;
}

std::optional<PartiteShape> classify_partite_shape(const std::vector<std::size_t>& sizes) {
  std::vector<std::size_t> s = sizes;
  std::sort(s.begin(), s.end());
  const std::size_t k = s.size();
  if (k < 2 || s.front() < 2) return std::nullopt;
  if (s.back() == 2) return PartiteShape::AllTwo;
  if (s[k - 1] == s[k - 2] && (k == 2 || s[k - 3] == 2)) return PartiteShape::TwoEll;
  if (k >= 3 && s[k - 1] == s[k - 2] && s[k - 3] == 3 && (k == 3 || s[k - 4] == 2)) return PartiteShape::ThreeEll;
  return std::nullopt;
}

SimplicialComplex partite_host_sphere(const PartiteHost& host) {
  const std::size_t k = host.parts.size();
  std::vector<std::size_t> sizes;
  for (const auto& p : host.parts) sizes.push_back(p.size());
  auto shape = classify_partite_shape(sizes);
  if (!shape) fail(Errc::BadParams, "part sizes do not match (2..2), (2..2,l,l) or (2..2,3,l,l)");
  if (host.designated && host.designated->size() != k)
    fail(Errc::BadParams, "designated transversal needs one vertex per part");
  const std::size_t big = *std::max_element(sizes.begin(), sizes.end());

  // host part index for each canonical part
  std::vector<std::size_t> assign;
  std::vector<bool> taken(k, false);
  auto take = [&](std::size_t size) {
    for (std::size_t i = 0; i < k; ++i)
      if (!taken[i] && sizes[i] == size) {
        taken[i] = true;
        return i;
      }
    fail(Errc::BadParams, "part size bookkeeping failed");
  };
  PartiteSphere canon;
  if (*shape == PartiteShape::AllTwo || *shape == PartiteShape::TwoEll) {
    canon = partite_sphere_a(static_cast<int>(k), static_cast<int>(big));
    std::vector<std::size_t> tail;
    if (*shape == PartiteShape::AllTwo) {
      taken[k - 2] = taken[k - 1] = true;
      tail = {k - 2, k - 1};
    } else {
      std::size_t x = take(big), y = take(big);
      tail = {x, y};
    }
    for (std::size_t i = 0; i < k; ++i)
      if (!taken[i]) assign.push_back(i);
    assign.insert(assign.end(), tail.begin(), tail.end());
  } else {
    canon = partite_sphere_b(static_cast<int>(k), static_cast<int>(big));
    std::size_t three = take(3);
    std::size_t x = take(big), y = take(big);
    for (std::size_t i = 0; i < k; ++i)
      if (!taken[i]) assign.push_back(i);
    assign.insert(assign.end(), {three, x, y});
  }

  std::map<Vertex, Vertex> map;
  for (std::size_t c = 0; c < k; ++c) {
    const std::size_t h = assign[c];
    VertexSet from = canon.parts[c];
    std::sort(from.begin(), from.end());
    from.erase(std::find(from.begin(), from.end(), canon.tracked[c]));
    from.insert(from.begin(), canon.tracked[c]);
    VertexSet to = host.parts[h];
    std::sort(to.begin(), to.end());
    Vertex lead = host.designated ? (*host.designated)[h] : to.front();
    auto it = std::find(to.begin(), to.end(), lead);
    if (it == to.end()) fail(Errc::BadParams, "designated vertex " + std::to_string(lead) + " not in its part");
    to.erase(it);
    to.insert(to.begin(), lead);
    for (std::size_t i = 0; i < from.size(); ++i) map[from[i]] = to[i];
  }
  return relabel(canon.sphere, [&](Vertex v) { return map.at(v); });
}

DoublyCoveringSphere thin_path_sphere(int k) {
  if (k < 2) fail(Errc::BadParams, "thin_path_sphere needs k >= 2");
  const Vertex kk = static_cast<Vertex>(k);
  auto u = [&](Vertex i) -> Vertex { return i == 0 ? 0 : (i == kk ? 2 * kk - 1 : 2 * i - 1); };
  auto v = [](Vertex i) -> Vertex { return 2 * i; };
  DoublyCoveringSphere s;
  s.k = k;
  std::vector<VertexSet> facets;
  for (std::uint32_t mask = 0; mask < (1u << (kk - 1)); ++mask) {
    VertexSet t;
    for (Vertex i = 1; i < kk; ++i) t.push_back((mask >> (i - 1)) & 1 ? v(i) : u(i));
    for (Vertex apex : {u(0), u(kk)}) {
      VertexSet f = t;
      f.push_back(apex);
      facets.push_back(make_set(f));
    }
  }
  s.sphere = SimplicialComplex(k - 1, facets);
  s.profile.assign(kk + 1, 2);
  s.profile.front() = s.profile.back() = 1;
  s.position.resize(2 * kk);
  s.position[u(0)] = 0;
  s.position[u(kk)] = kk;
  for (Vertex i = 1; i < kk; ++i) s.position[u(i)] = s.position[v(i)] = i;
  VertexSet f0{u(0)}, f1{u(kk)}, g0{u(0)}, g1{u(kk)};
  for (Vertex i = 1; i < kk; ++i) {
    f0.push_back(u(i));
    f1.push_back(v(i));
    g0.push_back(v(i));
    g1.push_back(u(i));
  }
  s.family_f = {make_set(f0), make_set(f1)};
  s.family_fp = {make_set(g0), make_set(g1)};
  return s;
}

DoublyCoveringSphere grow_path_sphere(const DoublyCoveringSphere& s) {
  const int k = s.k;
  if (s.family_fp.empty() || !s.sphere.has_facet(s.family_fp.front()))
    fail(Errc::MissingFamilyFacet, "the sphere lacks f'_e for the first path edge");
  DoublyCoveringSphere t = thin_path_sphere(k);
  const Vertex n = static_cast<Vertex>(s.position.size());
  const VertexSet& target = s.family_fp.front();
  auto at_position = [&](std::size_t p) {
    for (Vertex x : target)
      if (s.position[x] == p) return x;
    fail(Errc::MissingFamilyFacet, "f'_e does not project onto the first path edge");
  };

  // thin-sphere ids to merged ids; g_1 = family_f[1] of t is identified with target
  std::vector<Vertex> rename(t.position.size(), 0);
  std::vector<bool> identified(t.position.size(), false);
  for (Vertex x : t.family_f[1]) {
    rename[x] = at_position(t.position[x] - 1);
    identified[x] = true;
  }
  Vertex next = n;
  for (Vertex x = 0; x < t.position.size(); ++x)
    if (!identified[x]) rename[x] = next++;

  auto map_set = [&](const VertexSet& f) {
    VertexSet out;
    for (Vertex v : f) out.push_back(rename[v]);
    return make_set(out);
  };
  SimplicialComplex tt = relabel(t.sphere, [&](Vertex x) { return rename[x]; });

  DoublyCoveringSphere g;
  g.k = k;
  g.sphere = glue(s.sphere, tt, target);
  g.position.assign(next, 0);
  for (Vertex x = 0; x < n; ++x) g.position[x] = s.position[x] + 1;
  for (Vertex x = 0; x < t.position.size(); ++x)
    if (!identified[x]) g.position[rename[x]] = t.position[x];
  g.profile.assign(s.profile.size() + 1, 0);
  for (std::size_t p : g.position) ++g.profile[p];

  g.family_f.push_back(map_set(t.family_f[0]));
  g.family_f.insert(g.family_f.end(), s.family_f.begin(), s.family_f.end());
  g.family_fp.push_back(map_set(t.family_fp[0]));
  g.family_fp.push_back(map_set(t.family_fp[1]));
  g.family_fp.insert(g.family_fp.end(), s.family_fp.begin() + 1, s.family_fp.end());
  return canonical_order(std::move(g));
}

DoublyCoveringSphere tight_path_blowup_sphere(int k, std::size_t l) {
  if (k < 2 || l < static_cast<std::size_t>(k) + 1) fail(Errc::BadParams, "tight_path_blowup_sphere needs l >= k+1");
  DoublyCoveringSphere s = thin_path_sphere(k);
  while (s.path_length() < l) s = grow_path_sphere(s);
  return s;
}

std::vector<std::size_t> path_sphere_profile(int k, std::size_t l) {
  if (k < 2 || l < static_cast<std::size_t>(k) + 1) fail(Errc::BadParams, "path_sphere_profile needs l >= k+1");
  std::vector<std::size_t> p(static_cast<std::size_t>(k) + 1, 2);
  p.front() = p.back() = 1;
  while (p.size() < l) {
    for (int i = 0; i < k - 1; ++i) ++p[static_cast<std::size_t>(i)];
    p.insert(p.begin(), 1);
  }
  return p;
}

std::vector<std::string> check_doubly_covering(const DoublyCoveringSphere& s) {
  std::vector<std::string> bad;
  const std::size_t k = static_cast<std::size_t>(s.k);
  const std::size_t l = s.profile.size();
  if (s.sphere.dim() + 1 != s.k) bad.push_back("sphere dimension does not match k");
  if (l < k) {
    bad.push_back("path shorter than k");
    return bad;
  }
  const std::size_t edges = l - k + 1;
  if (s.family_f.size() != edges || s.family_fp.size() != edges) {
    bad.push_back("family sizes differ from the number of path edges");
    return bad;
  }
  std::vector<std::size_t> counted(l, 0);
  for (std::size_t p : s.position) {
    if (p >= l) {
      bad.push_back("vertex position outside the path");
      return bad;
    }
    ++counted[p];
  }
  if (counted != s.profile) bad.push_back("profile does not match vertex positions");
  if (s.sphere.vertices().size() != s.position.size() ||
      (!s.sphere.vertices().empty() && s.sphere.vertices().back() + 1 != s.position.size()))
    bad.push_back("vertex ids are not 0..N-1");

  auto projects_onto = [&](const VertexSet& f, std::size_t i) {
    if (f.size() != k) return false;
    std::vector<std::size_t> ps;
    for (Vertex v : f) {
      if (v >= s.position.size()) return false;
      ps.push_back(s.position[v]);
    }
    std::sort(ps.begin(), ps.end());
    for (std::size_t j = 0; j < k; ++j)
      if (ps[j] != i + j) return false;
    return true;
  };
  for (const auto* fam : {&s.family_f, &s.family_fp}) {
    const char* name = fam == &s.family_f ? "F" : "F'";
    std::vector<Vertex> all;
    for (std::size_t i = 0; i < edges; ++i) {
      const VertexSet& f = (*fam)[i];
      if (!s.sphere.has_facet(f)) bad.push_back(std::string(name) + " member " + std::to_string(i) + " is not a facet");
      if (!projects_onto(f, i))
        bad.push_back(std::string(name) + " member " + std::to_string(i) + " does not project onto its path edge");
      all.insert(all.end(), f.begin(), f.end());
    }
    std::sort(all.begin(), all.end());
    if (std::adjacent_find(all.begin(), all.end()) != all.end())
      bad.push_back(std::string(name) + " is not pairwise vertex-disjoint");
  }
  for (std::size_t i = 0; i < edges; ++i)
    if (s.family_f[i] == s.family_fp[i]) bad.push_back("f_e equals f'_e for path edge " + std::to_string(i));
  for (std::size_t i = 0; i < s.sphere.facet_count(); ++i) {
    auto f = s.sphere.facet(i);
    std::size_t lo = SIZE_MAX;
    for (Vertex v : f) lo = std::min(lo, v < s.position.size() ? s.position[v] : SIZE_MAX);
    VertexSet row(f.begin(), f.end());
    if (lo == SIZE_MAX || lo + k > l || !projects_onto(row, lo)) {
      bad.push_back("facet " + format_set(f) + " is not an edge of the path blow-up");
      break;
    }
  }
  return bad;
}

std::string family_manifest(const DoublyCoveringSphere& s) {
  std::ostringstream out;
  const std::size_t k = static_cast<std::size_t>(s.k);
  auto write = [&](const VertexSet& f) {
    for (std::size_t j = 0; j < f.size(); ++j) out << (j ? " " : "") << f[j];
  };
  for (std::size_t i = 0; i < s.family_f.size(); ++i) {
    out << "e:";
    for (std::size_t j = 0; j < k; ++j) out << ' ' << i + j;
    out << " | f: ";
    write(s.family_f[i]);
    out << " | fp: ";
    write(s.family_fp[i]);
    out << '\n';
  }
  return out.str();
}

}  // namespace spansphere
