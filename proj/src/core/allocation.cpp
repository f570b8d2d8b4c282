#include "spansphere/allocation.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <sstream>

#include "spansphere/error.hpp"
#include "spansphere/matching.hpp"
#include "spansphere/spheres.hpp"

namespace spansphere {

namespace {

void require_degree(const Hypergraph& r, Errc code, const std::string& what) {
  if (!isolated_vertices(r).empty()) fail(code, what + " has isolated vertices");
  const std::uint64_t d = min_supported_codegree(r);
  if (2 * d <= r.order())
    fail(code, what + ": 2*supported codegree " + std::to_string(2 * d) + " is not above " + std::to_string(r.order()));
}

std::string format_pairs(const std::vector<VertexSet>& pairs, const std::vector<std::size_t>& which) {
  std::string out;
  for (std::size_t i = 0; i < which.size(); ++i) out += (i ? " " : "") + format_set(pairs[which[i]]);
  return out;
}

std::vector<std::size_t> usage_of(const TightWalk& w, Vertex n) {
  std::vector<std::size_t> usage(n, 0);
  auto profile = path_sphere_profile(w.k, w.order());
  for (std::size_t i = 0; i < w.order(); ++i) usage[w.vertices[i]] += profile[i];
  return usage;
}

std::vector<std::size_t> need_of(const Hypergraph& r) {
  auto usage = choose_backbone_walk(r).usage;
  auto deg = vertex_degrees(r);
  for (Vertex x = 0; x < r.order(); ++x) usage[x] += deg[x] + 1;
  return usage;
}

}  // namespace

const char* parity_fix_name(ParityFix p) noexcept {
  switch (p) {
    case ParityFix::None: return "None";
    case ParityFix::OutsideImage: return "OutsideImage";
    case ParityFix::ImageEdge: return "ImageEdge";
  }
  return "Unknown";
}

PairAssignment assign_edges_to_pairs(const Hypergraph& r) {
  PairAssignment a;
  a.pairs = shadow_pairs(r);
  BipartiteInstance bi;
  bi.left_count = a.pairs.size();
  bi.right_count = r.edge_count();
  bi.adjacency.resize(a.pairs.size());
  for (std::size_t e = 0; e < r.edge_count(); ++e)
    for_each_subset(r.edge(e), 2, [&](std::span<const Vertex> p) {
      auto it = std::lower_bound(a.pairs.begin(), a.pairs.end(), VertexSet(p.begin(), p.end()));
      bi.adjacency[static_cast<std::size_t>(it - a.pairs.begin())].push_back(e);
    });
  MatchingResult m = hall_matching(bi);
  if (m.kind != MatchingKind::Saturating) {
    std::size_t neighbours = 0;
    std::vector<bool> seen(bi.right_count, false);
    for (std::size_t l : m.violator)
      for (std::size_t e : bi.adjacency[l])
        if (!seen[e]) {
          seen[e] = true;
          ++neighbours;
        }
    fail(Errc::HallFailure, "pairs " + format_pairs(a.pairs, m.violator) + " lie in only " +
                                std::to_string(neighbours) + " edges");
  }
  a.edge.assign(a.pairs.size(), 0);
  for (auto [l, e] : m.pairs) a.edge[l] = e;
  return a;
}

FillResult fill_blowup(const Blowup& b, const std::vector<VertexSet>& entry_in) {
  const Hypergraph& r = b.base();
  const std::size_t k = static_cast<std::size_t>(r.uniformity());
  const std::size_t edges = r.edge_count();
  if (entry_in.size() != edges) fail(Errc::PreconditionFailed, "one entry facet per base edge is required");
  require_degree(r, Errc::PreconditionFailed, "base");
  auto deg = vertex_degrees(r);
  for (Vertex x = 0; x < r.order(); ++x)
    if (b.part(x).size() < 2 * deg[x])
      fail(Errc::PartTooSmall,
           "part " + std::to_string(x) + " has " + std::to_string(b.part(x).size()) + " vertices, needs " +
               std::to_string(2 * deg[x]),
           x);
  if (!b.singleton_parts().empty()) fail(Errc::PreconditionFailed, "filling needs a blow-up without singleton parts");

  std::vector<char> used(b.host_order(), 0);
  std::vector<VertexSet> entry(edges);
  for (std::size_t e = 0; e < edges; ++e) {
    entry[e] = make_set(entry_in[e]);
    auto p = b.project_set(entry[e]);
    if (entry[e].size() != k || !p || !std::equal(p->begin(), p->end(), r.edge(e).begin()))
      fail(Errc::PreconditionFailed, "entry facet " + format_set(entry[e]) + " does not project onto edge " +
                                         format_set(r.edge(e)));
    for (Vertex v : entry[e]) {
      if (used[v]) fail(Errc::PreconditionFailed, "entry facets share vertex " + std::to_string(v));
      used[v] = 1;
    }
  }
  std::vector<std::size_t> cursor(r.order(), 0);
  auto take = [&](Vertex x) {
    const VertexSet& part = b.part(x);
    while (cursor[x] < part.size() && used[part[cursor[x]]]) ++cursor[x];
    if (cursor[x] >= part.size()) fail(Errc::PartTooSmall, "part " + std::to_string(x) + " is exhausted", x);
    used[part[cursor[x]]] = 1;
    return part[cursor[x]];
  };

  std::vector<VertexSet> members(edges);
  for (std::size_t e = 0; e < edges; ++e) {
    members[e] = entry[e];
    for (Vertex x : r.edge(e)) members[e].push_back(take(x));
  }

  FillResult res;
  res.assignment = assign_edges_to_pairs(r);
  const PairAssignment& as = res.assignment;
  std::size_t uncovered = 0;
  for (Vertex v : b.vertices())
    if (!used[v]) ++uncovered;
  if (uncovered % 2 == 1) {
    std::vector<bool> in_image(edges, false);
    for (std::size_t e : as.edge) in_image[e] = true;
    auto star = std::find(in_image.begin(), in_image.end(), false);
    if (star != in_image.end()) {
      const std::size_t e = static_cast<std::size_t>(star - in_image.begin());
      if (k < 3) fail(Errc::ParityFixImpossible, "parity fix needs three parts per edge");
      for (std::size_t j = 0; j < 3; ++j) members[e].push_back(take(r.edge(e)[j]));
      res.parity = ParityFix::OutsideImage;
      res.parity_edge = e;
    } else if (k >= 3) {
      const VertexSet& p = as.pairs.front();
      const std::size_t e = as.edge.front();
      Vertex third = set_difference(r.edge(e), p).front();
      members[e].push_back(take(p[0]));
      members[e].push_back(take(p[1]));
      members[e].push_back(take(third));
      res.parity = ParityFix::ImageEdge;
      res.parity_edge = e;
    } else {
      fail(Errc::ParityFixImpossible, "odd number of uncovered vertices and no edge outside the pair assignment");
    }
  }

  VertexSet free;
  for (Vertex v : b.vertices())
    if (!used[v]) free.push_back(v);
  std::vector<Vertex> base_of(free.size());
  for (std::size_t i = 0; i < free.size(); ++i) base_of[i] = *b.project(free[i]);
  std::vector<Vertex> flat;
  for (std::size_t i = 0; i < free.size(); ++i)
    for (std::size_t j = i + 1; j < free.size(); ++j) {
      Vertex x = base_of[i], y = base_of[j];
      if (x == y) continue;
      VertexSet p{std::min(x, y), std::max(x, y)};
      if (std::binary_search(as.pairs.begin(), as.pairs.end(), p)) {
        flat.push_back(static_cast<Vertex>(i));
        flat.push_back(static_cast<Vertex>(j));
      }
    }
  Hypergraph f = Hypergraph::from_flat(2, static_cast<Vertex>(free.size()), flat);
  MatchingResult pm = perfect_matching(f);
  if (pm.kind != MatchingKind::PerfectMatching)
    fail(Errc::NoPerfectMatching, "leftover graph on " + std::to_string(free.size()) + " vertices has a maximum matching of " +
                                      std::to_string(pm.pairs.size()) + " pairs");
  res.routed_pairs.assign(edges, 0);
  for (auto [i, j] : pm.pairs) {
    Vertex x = base_of[i], y = base_of[j];
    VertexSet p{std::min(x, y), std::max(x, y)};
    std::size_t idx = static_cast<std::size_t>(std::lower_bound(as.pairs.begin(), as.pairs.end(), p) - as.pairs.begin());
    std::size_t e = as.edge[idx];
    members[e].push_back(free[i]);
    members[e].push_back(free[j]);
    ++res.routed_pairs[e];
  }

  res.spheres.reserve(edges);
  for (std::size_t e = 0; e < edges; ++e) {
    auto edge = r.edge(e);
    PartiteHost host;
    host.parts.assign(k, {});
    VertexSet designated(k);
    for (Vertex v : members[e]) {
      std::size_t slot = static_cast<std::size_t>(std::lower_bound(edge.begin(), edge.end(), *b.project(v)) - edge.begin());
      host.parts[slot].push_back(v);
    }
    for (Vertex v : entry[e])
      designated[static_cast<std::size_t>(std::lower_bound(edge.begin(), edge.end(), *b.project(v)) - edge.begin())] = v;
    host.designated = designated;
    std::vector<std::size_t> sizes;
    for (auto& p : host.parts) {
      std::sort(p.begin(), p.end());
      sizes.push_back(p.size());
    }
    res.shapes.push_back(sizes);
    res.spheres.push_back(partite_host_sphere(host));
  }
  res.entry_facets = std::move(entry);
  return res;
}

std::vector<std::string> check_fill(const Blowup& b, const std::vector<VertexSet>& entry, const FillResult& res,
                                    bool certify_spheres) {
  std::vector<std::string> bad;
  const Hypergraph& r = b.base();
  const std::size_t edges = r.edge_count();
  if (res.spheres.size() != edges || entry.size() != edges) {
    bad.push_back("result does not have one sphere per base edge");
    return bad;
  }
  std::vector<Vertex> all;
  for (const auto& s : res.spheres) all.insert(all.end(), s.vertices().begin(), s.vertices().end());
  std::sort(all.begin(), all.end());
  if (std::adjacent_find(all.begin(), all.end()) != all.end()) bad.push_back("sphere vertex sets are not disjoint");
  if (make_set(all) != b.vertices()) bad.push_back("sphere vertex sets do not cover the blow-up");
  for (std::size_t e = 0; e < edges; ++e) {
    const auto& s = res.spheres[e];
    const std::string tag = "edge " + format_set(r.edge(e)) + ": ";
    if (!s.has_facet(make_set(entry[e]))) bad.push_back(tag + "entry facet is not a facet of S_e");
    for (std::size_t i = 0; i < s.facet_count(); ++i) {
      auto p = b.project_set(s.facet(i));
      if (!p || !std::equal(p->begin(), p->end(), r.edge(e).begin())) {
        bad.push_back(tag + "facet " + format_set(s.facet(i)) + " does not project onto the edge");
        break;
      }
    }
    std::vector<std::size_t> sizes = res.shapes[e];
    auto shape = classify_partite_shape(sizes);
    std::sort(sizes.begin(), sizes.end());
    const std::size_t routed = res.routed_pairs.empty() ? 0 : res.routed_pairs[e];
    const bool parity_here = res.parity_edge && *res.parity_edge == e;
    if (!shape) {
      bad.push_back(tag + "shape outside the case table");
    } else if (parity_here && res.parity == ParityFix::OutsideImage) {
      if (*shape != PartiteShape::ThreeEll || sizes.back() != 3 || routed != 0)
        bad.push_back(tag + "e* shape is not (2,..,2,3,3,3)");
    } else if (parity_here && res.parity == ParityFix::ImageEdge) {
      if (*shape != PartiteShape::ThreeEll || sizes.back() != 3 + routed)
        bad.push_back(tag + "parity edge shape is not (2,..,2,3,l,l) with l = 3 + |M_p|");
    } else if (routed > 0) {
      if (*shape != PartiteShape::TwoEll || sizes.back() != 2 + routed)
        bad.push_back(tag + "shape is not (2,..,2,l,l) with l = 2 + |M_p|");
    } else if (*shape != PartiteShape::AllTwo) {
      bad.push_back(tag + "shape is not (2,..,2)");
    }
    if (certify_spheres && !certifies_sphere(verify_sphere(s).level)) bad.push_back(tag + "S_e is not certified");
  }
  return bad;
}

BackboneWalk choose_backbone_walk(const Hypergraph& r) {
  if (r.edge_count() < 2) fail(Errc::PreconditionFailed, "the backbone needs at least two base edges");
  BackboneWalk best;
  std::size_t best_max = SIZE_MAX;
  for (const char* kind : {"splice", "greedy"}) {
    TightWalk w = std::string(kind) == "splice" ? covering_tight_walk(r) : greedy_covering_walk(r);
    auto usage = usage_of(w, r.order());
    std::size_t mx = *std::max_element(usage.begin(), usage.end());
    if (mx < best_max) {
      best_max = mx;
      best = BackboneWalk{std::move(w), kind, std::move(usage)};
    }
  }
  return best;
}

PartSizeRequirement minimum_part_size(const Hypergraph& r) {
  PartSizeRequirement req;
  req.per_vertex = need_of(r);
  for (Vertex x = 0; x < r.order(); ++x) {
    VertexSet keep;
    for (Vertex y = 0; y < r.order(); ++y)
      if (y != x) keep.push_back(y);
    Hypergraph reduced = induced_subgraph(r, keep);
    if (reduced.edge_count() < 2 || !isolated_vertices(reduced).empty() ||
        2 * min_supported_codegree(reduced) <= reduced.order() || !is_tightly_connected(reduced))
      continue;
    auto need = need_of(reduced);
    for (std::size_t i = 0; i < keep.size(); ++i)
      req.per_vertex[keep[i]] = std::max(req.per_vertex[keep[i]], need[i] + 2);
  }
  req.minimum = *std::max_element(req.per_vertex.begin(), req.per_vertex.end());
  return req;
}

std::string AllocationReport::to_text() const {
  std::ostringstream out;
  out << "base_vertices: " << base_vertices << '\n';
  out << "base_edges: " << base_edges << '\n';
  out << "singleton: " << (singleton ? std::to_string(*singleton) : std::string("none")) << '\n';
  if (singleton_edge) out << "singleton_edge: " << format_set(*singleton_edge) << '\n';
  out << "walk: " << walk_kind << " order " << walk_order << '\n';
  out << "backbone_vertices: " << backbone_vertices << '\n';
  out << "backbone_facets: " << backbone_facets << '\n';
  out << "parity_fix: " << parity_fix_name(parity);
  if (parity_edge) out << " edge " << *parity_edge;
  out << '\n';
  out << "parity_glue: " << (parity_glue ? "yes" : "no") << '\n';
  out << "sphere_vertices: " << vertices << '\n';
  out << "sphere_facets: " << facets << '\n';
  out << "spanning: " << (spanning ? "yes" : "no") << '\n';
  out << "f1_facet: " << (f1_facet ? "yes" : "no") << '\n';
  out << "f2_facet: " << (f2_facet ? "yes" : "no") << '\n';
  if (certificate) {
    out << "certificate: " << sphere_level_name(certificate->level) << '\n';
    out << "euler: " << certificate->euler << '\n';
    if (certificate->failure_reason) out << "failure: " << *certificate->failure_reason << '\n';
  }
  return out.str();
}

AllocationResult allocate(const Blowup& b, std::span<const Vertex> f1_in, std::span<const Vertex> f2_in,
                          const AllocateOptions& options) {
  const Hypergraph& r = b.base();
  const int k = r.uniformity();
  const std::size_t kk = static_cast<std::size_t>(k);
  const Vertex s = r.order();
  AllocationResult out;
  out.f1 = make_set(f1_in);
  out.f2 = make_set(f2_in);
  auto base_edge = [&](const VertexSet& f, const char* name) {
    auto p = b.project_set(f);
    if (f.size() != kk || !p || !r.has_edge(*p))
      fail(Errc::PreconditionFailed, std::string(name) + " " + format_set(f) + " is not an edge of the blow-up");
    return *p;
  };
  const VertexSet e1 = base_edge(out.f1, "f1"), e2 = base_edge(out.f2, "f2");
  if (options.allow_overlap) {
    if (e1 == e2) fail(Errc::PreconditionFailed, "f1 and f2 project onto the same base edge");
    if (intersection_size(out.f1, out.f2) != 0) fail(Errc::PreconditionFailed, "f1 and f2 share a vertex");
  } else if (intersection_size(e1, e2) != 0) {
    fail(Errc::PreconditionFailed, "phi(f1) and phi(f2) intersect");
  }
  auto singles = b.singleton_parts();
  if (singles.size() > 1) fail(Errc::PreconditionFailed, "more than one singleton part");
  if (b.gamma && b.m && !b.is_nearly_regular(*b.gamma, *b.m))
    fail(Errc::PreconditionFailed, "blow-up is not nearly-regular for its declared parameters");
  require_degree(r, Errc::PreconditionFailed, "base");
  const VertexSet banned = set_union(e1, e2);
  const VertexSet taken = set_union(out.f1, out.f2);
  auto is_taken = [&](Vertex v) { return std::binary_search(taken.begin(), taken.end(), v); };
  auto least_free = [&](Vertex x, std::size_t count) {
    VertexSet got;
    for (Vertex v : b.part(x))
      if (got.size() < count && !is_taken(v)) got.push_back(v);
    return got;
  };
  std::optional<Vertex> xv;
  if (!singles.empty()) xv = singles.front();
  if (xv && std::binary_search(banned.begin(), banned.end(), *xv))
    fail(Errc::PreconditionFailed, "the singleton part meets phi(f1) or phi(f2)");

  AllocationReport& rep = out.report;
  rep.base_vertices = s;
  rep.base_edges = r.edge_count();
  rep.singleton = xv;

  const Vertex host_n = b.host_order();
  std::vector<char> removed(host_n, 0);
  std::optional<SimplicialComplex> s_prime;
  std::optional<VertexSet> f3, e3;
  Hypergraph rr = r;
  VertexSet orig(s);
  std::iota(orig.begin(), orig.end(), 0);

  if (xv) {
    // First pass keeps e and u away from phi(f1), phi(f2); the second only avoids f1, f2 themselves.
    for (int pass = 0; pass < 2 && !s_prime; ++pass) {
      for (std::size_t i = 0; i < r.edge_count() && !s_prime; ++i) {
        auto e = r.edge(i);
        if (!std::binary_search(e.begin(), e.end(), *xv)) continue;
        if (pass == 0 && intersection_size(e, banned) != 0) continue;
        VertexSet rest;
        for (Vertex z : e)
          if (z != *xv) rest.push_back(z);
        if (std::any_of(rest.begin(), rest.end(), [&](Vertex z) { return least_free(z, 2).size() < 2; })) continue;
        for (Vertex y = 0; y < s && !s_prime; ++y) {
          if (std::binary_search(e.begin(), e.end(), y)) continue;
          if (pass == 0 && std::binary_search(banned.begin(), banned.end(), y)) continue;
          VertexSet ep = rest;
          ep.push_back(y);
          std::sort(ep.begin(), ep.end());
          if (!r.has_edge(ep) || ep == e1 || ep == e2) continue;
          VertexSet uy = least_free(y, 1);
          if (uy.empty()) continue;
          const Vertex v = b.part(*xv).front(), u = uy.front();
          PartiteHost host;
          VertexSet designated;
          host.parts.push_back(make_set(VertexSet{u, v}));
          designated.push_back(u);
          for (Vertex z : rest) {
            VertexSet two = least_free(z, 2);
            host.parts.push_back(two);
            designated.push_back(two[0]);
            removed[two[1]] = 1;
          }
          removed[v] = 1;
          host.designated = designated;
          s_prime = partite_host_sphere(host);
          f3 = make_set(designated);
          e3 = ep;
          rep.singleton_edge = VertexSet(e.begin(), e.end());
        }
      }
    }
    if (!s_prime)
      fail(Errc::SingletonUnresolvable, "no edge through the singleton part admits a replacement vertex", *xv);
    orig.erase(std::find(orig.begin(), orig.end(), *xv));
    rr = induced_subgraph(r, orig);
    require_degree(rr, Errc::ReducedDegreeFailure, "base without the singleton vertex");
  } else {
    for (int pass = 0; pass < 2 && !f3; ++pass)
      for (std::size_t i = 0; i < r.edge_count(); ++i) {
        auto e = r.edge(i);
        VertexSet ev(e.begin(), e.end());
        if (ev == e1 || ev == e2) continue;
        if (pass == 0 && intersection_size(e, banned) != 0) continue;
        VertexSet f;
        for (Vertex x : e) {
          VertexSet one = least_free(x, 1);
          if (one.empty()) break;
          f.push_back(one.front());
        }
        if (f.size() != kk) continue;
        f3 = make_set(f);
        e3 = ev;
        break;
      }
  }
  std::vector<std::int64_t> reduced_id(s, -1);
  for (std::size_t i = 0; i < orig.size(); ++i) reduced_id[orig[i]] = static_cast<std::int64_t>(i);
  auto to_reduced = [&](const VertexSet& e) {
    VertexSet out_set;
    for (Vertex x : e) out_set.push_back(static_cast<Vertex>(reduced_id[x]));
    return out_set;
  };

  // Backbone: covering walk, lifted into the blow-up as a doubly covering sphere.
  BackboneWalk bw = choose_backbone_walk(rr);
  const auto& w = bw.walk.vertices;
  rep.walk_kind = bw.kind;
  rep.walk_order = w.size();
  DoublyCoveringSphere d = tight_path_blowup_sphere(k, w.size());
  std::vector<std::size_t> cursor(s, 0);
  std::vector<Vertex> host_of(d.position.size());
  for (std::size_t id = 0; id < d.position.size(); ++id) {
    const Vertex x = orig[w[d.position[id]]];
    const VertexSet& part = b.part(x);
    while (cursor[x] < part.size() && removed[part[cursor[x]]]) ++cursor[x];
    if (cursor[x] >= part.size())
      fail(Errc::PartTooSmall, "part " + std::to_string(x) + " is too small for the backbone sphere", x);
    host_of[id] = part[cursor[x]++];
  }
  auto map_facet = [&](const VertexSet& f) {
    VertexSet m;
    for (Vertex v : f) m.push_back(host_of[v]);
    return make_set(m);
  };
  const std::size_t re = rr.edge_count();
  std::vector<VertexSet> fe(re), fpe(re);
  std::vector<bool> chosen_window(w.size(), false);
  {
    std::vector<bool> done(re, false);
    for (std::size_t i = 0; i + kk <= w.size(); ++i) {
      VertexSet win(w.begin() + static_cast<std::ptrdiff_t>(i), w.begin() + static_cast<std::ptrdiff_t>(i + kk));
      std::sort(win.begin(), win.end());
      std::size_t j = *rr.edge_index(win);
      if (done[j]) continue;
      done[j] = true;
      chosen_window[i] = true;
      fe[j] = map_facet(d.family_f[i]);
      fpe[j] = map_facet(d.family_fp[i]);
    }
  }
  SimplicialComplex backbone = relabel(d.sphere, [&](Vertex v) { return host_of[v]; });

  // Part-preserving bijection sending f'_{phi(f)} to f for f = f1, f2, f3.
  std::map<Vertex, Vertex> swap;
  {
    std::vector<std::pair<VertexSet, VertexSet>> constraints{{out.f1, e1}, {out.f2, e2}};
    if (f3) constraints.emplace_back(*f3, *e3);
    std::map<Vertex, Vertex> inverse;
    for (const auto& [g, e] : constraints) {
      const VertexSet& h = fpe[*rr.edge_index(to_reduced(e))];
      for (Vertex a : h) {
        Vertex x = *b.project(a);
        Vertex t = *std::find_if(g.begin(), g.end(), [&](Vertex c) { return *b.project(c) == x; });
        if (swap.contains(a) || inverse.contains(t))
          fail(Errc::PreconditionFailed, "prescribed facets cannot be realised by one relabelling");
        swap[a] = t;
        inverse[t] = a;
      }
    }
    // Close the partial map into a permutation of each part.
    std::map<Vertex, std::pair<VertexSet, VertexSet>> open;
    for (auto [t, a] : inverse)
      if (!swap.contains(t)) open[*b.project(t)].first.push_back(t);
    for (auto [a, t] : swap)
      if (!inverse.contains(a)) open[*b.project(a)].second.push_back(a);
    for (auto& [x, lists] : open)
      for (std::size_t i = 0; i < lists.first.size(); ++i) swap[lists.first[i]] = lists.second[i];
  }
  auto pi = [&](Vertex v) {
    auto it = swap.find(v);
    return it == swap.end() ? v : it->second;
  };
  auto map_set = [&](const VertexSet& f) {
    VertexSet m;
    for (Vertex v : f) m.push_back(pi(v));
    return make_set(m);
  };
  backbone = relabel(backbone, pi);
  for (auto& f : fe) f = map_set(f);
  for (auto& f : fpe) f = map_set(f);
  for (auto& h : host_of) h = pi(h);
  rep.backbone_vertices = backbone.vertices().size();
  rep.backbone_facets = backbone.facet_count();

  // The blow-up left for filling: drop S' leftovers and V(S) outside the entry facets.
  std::vector<char> in_pool(host_n, 0);
  for (Vertex v : b.vertices())
    if (!removed[v]) in_pool[v] = 1;
  std::vector<char> entry_vertex(host_n, 0);
  for (const auto& f : fe)
    for (Vertex v : f) entry_vertex[v] = 1;
  for (Vertex v : backbone.vertices())
    if (!entry_vertex[v]) in_pool[v] = 0;

  if (k == 2) {
    std::size_t pool = 0;
    for (Vertex v : b.vertices()) pool += in_pool[v];
    if ((pool - 2 * kk * re) % 2 == 1) {
      bool glued = false;
      for (std::size_t i = 0; i + kk <= w.size() && !glued; ++i) {
        for (const auto* fam : {&d.family_fp, &d.family_f}) {
          if (glued) break;
          if (fam == &d.family_f && chosen_window[i]) continue;
          VertexSet g = map_set(map_facet((*fam)[i]));
          if (g == out.f1 || g == out.f2 || (f3 && g == *f3) || !backbone.has_facet(g)) continue;
          if (std::find(fe.begin(), fe.end(), g) != fe.end()) continue;
          Vertex a = *b.project(g[0]), c0 = *b.project(g[1]);
          for (Vertex c : orig) {
            if (c == a || c == c0) continue;
            if (!r.has_edge(make_set(VertexSet{a, c})) || !r.has_edge(make_set(VertexSet{c0, c}))) continue;
            auto it = std::find_if(b.part(c).begin(), b.part(c).end(),
                                   [&](Vertex v) { return in_pool[v] && !entry_vertex[v]; });
            if (it == b.part(c).end()) continue;
            SimplicialComplex tri(1, {g, make_set(VertexSet{g[0], *it}), make_set(VertexSet{g[1], *it})});
            backbone = glue(backbone, tri, g);
            in_pool[*it] = 0;
            glued = true;
            break;
          }
        }
      }
      if (!glued) fail(Errc::ParityFixImpossible, "no backbone edge admits a parity triangle");
      rep.parity_glue = true;
    }
  }

  std::vector<VertexSet> pool_parts(rr.order());
  for (std::size_t j = 0; j < rr.order(); ++j) {
    for (Vertex v : b.part(orig[j]))
      if (in_pool[v]) pool_parts[j].push_back(v);
    if (pool_parts[j].empty()) fail(Errc::PartTooSmall, "part " + std::to_string(orig[j]) + " is exhausted", orig[j]);
  }
  Blowup tilde(rr, pool_parts);
  FillResult fill;
  try {
    fill = fill_blowup(tilde, fe);
  } catch (const Error& err) {
    if (err.code() == Errc::PartTooSmall && err.subject())
      fail(Errc::PartTooSmall, err.detail(), orig[static_cast<std::size_t>(*err.subject())]);
    throw;
  }
  rep.parity = fill.parity;
  rep.parity_edge = fill.parity_edge;

  SimplicialComplex result = backbone;
  for (std::size_t j = 0; j < re; ++j) result = glue(result, fill.spheres[j], fe[j]);
  if (s_prime) result = glue(result, *s_prime, *f3);

  out.sphere = std::move(result);
  rep.vertices = out.sphere.vertices().size();
  rep.facets = out.sphere.facet_count();
  rep.spanning = is_spanning_copy(out.sphere, k, b.vertices(), [&](std::span<const Vertex> f) { return b.is_edge(f); });
  rep.f1_facet = out.sphere.has_facet(out.f1);
  rep.f2_facet = out.sphere.has_facet(out.f2);
  if (options.verify) rep.certificate = verify_sphere(out.sphere, options.sphere);
  return out;
}

}  // namespace spansphere
