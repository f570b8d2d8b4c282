#include "spansphere/chain.hpp"

#include <algorithm>
#include <atomic>
#include <exception>
#include <numeric>
#include <random>
#include <sstream>
#include <thread>

#include "spansphere/error.hpp"

namespace spansphere {

namespace {

constexpr std::uint64_t kTransversalBudget = 50'000'000;

Rational to_rational(std::uint64_t v) { return Rational(static_cast<std::int64_t>(v)); }

// Every partite transversal of every base edge, in odometer order; stops when fn returns false.
template <class Fn>
bool for_each_transversal(const Blowup& b, std::span<const Vertex> e, Fn&& fn) {
  const std::size_t k = e.size();
  std::vector<std::size_t> idx(k, 0);
  VertexSet t(k);
  while (true) {
    for (std::size_t j = 0; j < k; ++j) t[j] = b.part(e[j])[idx[j]];
    VertexSet sorted = t;
    std::sort(sorted.begin(), sorted.end());
    if (!fn(std::span<const Vertex>(sorted))) return false;
    std::size_t j = k;
    while (j > 0) {
      --j;
      if (++idx[j] < b.part(e[j]).size()) break;
      idx[j] = 0;
      if (j == 0) return true;
    }
  }
}

void check_links(const ChainCertificate& c, const VertexSet& host_vertices, ChainReport& rep) {
  auto add = [&](int property, std::optional<std::size_t> link, std::string msg) {
    rep.violations.push_back({property, link, std::move(msg)});
  };
  const std::size_t l = c.links.size();
  rep.links = l;
  if (l == 0) add(3, std::nullopt, "certificate has no links");

  for (std::size_t i = 0; i < l; ++i) {
    const Blowup& b = c.links[i];
    const Hypergraph& f = b.base();
    if (f.uniformity() != c.k) {
      add(1, i, "base is " + std::to_string(f.uniformity()) + "-uniform");
      continue;
    }
    if (!isolated_vertices(f).empty()) add(1, i, "base has isolated vertices");
    const Rational lhs = to_rational(2 * min_supported_codegree(f));
    const Rational rhs = (Rational(1) + c.epsilon) * to_rational(f.order());
    if (lhs < rhs) add(1, i, "2*delta* = " + format_rational(lhs) + " < (1+eps)*|V(F)| = " + format_rational(rhs));
  }

  // (2): some m* in [m1, m2] with every non-exempt part in [(1-g)m*, (1+g)m*].
  if (c.gamma < Rational(0) || c.m1 > c.m2)
    add(2, std::nullopt, "declared gamma or [m1, m2] is invalid");
  for (std::size_t i = 0; i < l; ++i) {
    std::vector<std::size_t> sizes;
    for (const auto& p : c.links[i].parts()) sizes.push_back(p.size());
    std::sort(sizes.begin(), sizes.end());
    if (!sizes.empty() && sizes.front() == 1) sizes.erase(sizes.begin());
    if (sizes.empty()) continue;
    const Rational a = to_rational(sizes.front()), big = to_rational(sizes.back());
    Rational lo = std::max(c.m1, big / (Rational(1) + c.gamma));
    Rational hi = c.m2;
    if (c.gamma < Rational(1)) hi = std::min(hi, a / (Rational(1) - c.gamma));
    if (lo > hi)
      add(2, i, "part sizes " + std::to_string(sizes.front()) + ".." + std::to_string(sizes.back()) +
                    " fit no m* in [" + format_rational(c.m1) + ", " + format_rational(c.m2) + "]");
  }

  VertexSet all;
  for (const auto& b : c.links) all = set_union(all, b.vertices());
  if (all != host_vertices)
    add(3, std::nullopt,
        "links cover " + std::to_string(all.size()) + " vertices, host has " + std::to_string(host_vertices.size()));

  for (std::size_t i = 0; i < l; ++i)
    for (std::size_t j = i + 2; j < l; ++j)
      if (intersection_size(c.links[i].vertices(), c.links[j].vertices()) != 0)
        add(4, i, "links " + std::to_string(i) + " and " + std::to_string(j) + " share vertices");

  if (l > 0 && c.shared_edges.size() != l - 1)
    add(5, std::nullopt, std::to_string(c.shared_edges.size()) + " shared edges for " + std::to_string(l) + " links");
  for (std::size_t i = 0; i + 1 < l && i < c.shared_edges.size(); ++i) {
    const VertexSet shared = make_set(c.shared_edges[i]);
    const VertexSet meet = set_intersection(c.links[i].vertices(), c.links[i + 1].vertices());
    if (shared.size() != static_cast<std::size_t>(c.k)) add(5, i, "shared set " + format_set(shared) + " is not a k-set");
    if (meet != shared)
      add(5, i, "links meet in " + format_set(meet) + ", certificate lists " + format_set(shared));
    for (std::size_t side = 0; side < 2; ++side) {
      const Blowup& b = c.links[i + side];
      auto p = b.project_set(shared);
      if (!p || p->size() != shared.size() || !b.base().has_edge(*p))
        add(5, i, "shared set " + format_set(shared) + " is not a transversal of a base edge in link " +
                      std::to_string(i + side));
      for (Vertex v : shared) {
        auto x = b.project(v);
        if (x && b.part(*x).size() == 1)
          add(5, i, "shared set meets the singleton part of link " + std::to_string(i + side));
      }
    }
  }
}

std::optional<VertexSet> least_transversal(const Blowup& b, std::span<const Vertex> e, const VertexSet& avoid) {
  VertexSet t;
  for (Vertex x : e) {
    auto it = std::find_if(b.part(x).begin(), b.part(x).end(),
                           [&](Vertex v) { return !std::binary_search(avoid.begin(), avoid.end(), v); });
    if (it == b.part(x).end()) return std::nullopt;
    t.push_back(*it);
  }
  return make_set(t);
}

// Lexicographically least blow-up edge avoiding `taken`, preferring base edges disjoint from phi(taken).
std::pair<VertexSet, bool> free_facet(const Blowup& b, const VertexSet& taken) {
  const Hypergraph& r = b.base();
  auto single = b.singleton();
  auto taken_base = b.project_set(taken).value_or(VertexSet{});
  for (int pass = 0; pass < 2; ++pass) {
    std::optional<VertexSet> best;
    for (std::size_t i = 0; i < r.edge_count(); ++i) {
      auto e = r.edge(i);
      if (single && std::binary_search(e.begin(), e.end(), *single)) continue;
      VertexSet ev(e.begin(), e.end());
      if (pass == 0 && intersection_size(ev, taken_base) != 0) continue;
      if (pass == 1 && ev == taken_base) continue;
      auto t = least_transversal(b, e, taken);
      if (t && (!best || *t < *best)) best = t;
    }
    if (best) return {*best, pass == 1};
  }
  fail(Errc::PreconditionFailed, "no free facet for the end of the chain");
}

}  // namespace

ChainHost::ChainHost(const ChainCertificate& c) : k_(c.k), links_(c.links) {
  for (const auto& b : links_) vertices_ = set_union(vertices_, b.vertices());
}

bool ChainHost::has_edge(std::span<const Vertex> sorted) const {
  if (sorted.size() != static_cast<std::size_t>(k_)) return false;
  return std::any_of(links_.begin(), links_.end(), [&](const Blowup& b) { return b.is_edge(sorted); });
}

std::uint64_t ChainHost::edge_count() const {
  std::uint64_t total = 0;
  VertexSet earlier;
  for (std::size_t j = 0; j < links_.size(); ++j) {
    total += links_[j].host_edge_count();
    const VertexSet meet = set_intersection(links_[j].vertices(), earlier);
    if (binomial(meet.size(), static_cast<std::size_t>(k_)) > kTransversalBudget)
      fail(Errc::BudgetExceeded, "link overlap too large to count edges");
    for_each_subset(std::span<const Vertex>(meet), static_cast<std::size_t>(k_), [&](std::span<const Vertex> e) {
      if (!links_[j].is_edge(e)) return;
      for (std::size_t i = 0; i < j; ++i)
        if (links_[i].is_edge(e)) {
          --total;
          return;
        }
    });
    earlier = set_union(earlier, links_[j].vertices());
  }
  return total;
}

Hypergraph ChainHost::materialize(std::uint64_t max_edges) const {
  const std::uint64_t count = edge_count();
  if (count > max_edges)
    fail(Errc::BudgetExceeded, "host has " + std::to_string(count) + " edges, limit " + std::to_string(max_edges));
  std::vector<Vertex> flat;
  flat.reserve(static_cast<std::size_t>(count) * static_cast<std::size_t>(k_));
  for (std::size_t j = 0; j < links_.size(); ++j) {
    const Blowup& b = links_[j];
    for (std::size_t e = 0; e < b.base().edge_count(); ++e)
      for_each_transversal(b, b.base().edge(e), [&](std::span<const Vertex> t) {
        bool seen = false;
        for (std::size_t i = 0; i < j && !seen; ++i) seen = links_[i].is_edge(t);
        if (!seen) flat.insert(flat.end(), t.begin(), t.end());
        return true;
      });
  }
  return Hypergraph::from_flat(k_, order(), flat);
}

bool ChainReport::property_ok(int property) const {
  return std::none_of(violations.begin(), violations.end(),
                      [&](const ChainViolation& v) { return v.property == property; });
}

std::string ChainReport::to_text() const {
  std::ostringstream out;
  out << "links: " << links << '\n';
  for (int p = 1; p <= 6; ++p)
    out << "property " << p << ": " << (property_ok(p) ? "pass" : "FAIL") << '\n';
  for (const auto& v : violations) {
    out << "violation " << v.property;
    if (v.link) out << " link " << *v.link;
    out << ": " << v.message << '\n';
  }
  out << "result: " << (passed() ? "PASS" : "FAIL") << '\n';
  return out.str();
}

ChainReport verify_chain(const Hypergraph& host, const ChainCertificate& c) {
  ChainReport rep;
  VertexSet vertices(host.order());
  std::iota(vertices.begin(), vertices.end(), Vertex{0});
  check_links(c, vertices, rep);
  if (host.uniformity() != c.k) {
    rep.violations.push_back({6, std::nullopt, "host uniformity differs from the certificate"});
    return rep;
  }
  std::uint64_t budget = kTransversalBudget;
  for (std::size_t i = 0; i < c.links.size(); ++i) {
    const Blowup& b = c.links[i];
    if (b.base().uniformity() != c.k) continue;
    for (std::size_t e = 0; e < b.base().edge_count(); ++e) {
      bool whole = for_each_transversal(b, b.base().edge(e), [&](std::span<const Vertex> t) {
        if (budget-- == 0) fail(Errc::BudgetExceeded, "too many link transversals to check");
        if (host.has_edge(t)) return true;
        rep.violations.push_back({6, i, "transversal " + format_set(VertexSet(t.begin(), t.end())) + " is not a host edge"});
        return false;
      });
      if (!whole) break;
    }
  }
  return rep;
}

ChainReport verify_chain(const ChainCertificate& c) {
  ChainReport rep;
  ChainHost host(c);
  check_links(c, host.vertices(), rep);
  return rep;
}

HostInstance generate_chain_host(int k, Vertex s, std::size_t num_links, std::size_t part_size, std::uint64_t seed,
                                 const ChainGenOptions& options) {
  if (k < 2 || s < static_cast<Vertex>(k) + 2) fail(Errc::BadParams, "need k >= 2 and s >= k + 2");
  if (num_links == 0) fail(Errc::BadParams, "need at least one link");
  const std::size_t kk = static_cast<std::size_t>(k);
  Hypergraph base = complete_hypergraph(k, s);
  const std::size_t minimum = minimum_part_size(base).minimum;
  if (part_size < minimum)
    fail(Errc::BadParams, "part size " + std::to_string(part_size) + " is below the minimum " + std::to_string(minimum));

  std::vector<std::optional<Vertex>> single(num_links);
  for (std::size_t i = 0; i < num_links; ++i) {
    const std::size_t neighbours = (i > 0) + (i + 1 < num_links);
    if (options.singletons && s - 1 >= neighbours * kk && s >= 2 * kk) single[i] = s - 1;
  }
  auto least_edge = [&](std::optional<Vertex> avoid, const VertexSet& disjoint_from) {
    std::optional<VertexSet> fallback;
    for (std::size_t e = 0; e < base.edge_count(); ++e) {
      VertexSet ev(base.edge(e).begin(), base.edge(e).end());
      if (avoid && std::binary_search(ev.begin(), ev.end(), *avoid)) continue;
      if (ev == disjoint_from) continue;
      if (intersection_size(ev, disjoint_from) == 0) return ev;
      if (!fallback) fallback = ev;
    }
    return *fallback;
  };
  std::vector<VertexSet> in_edge(num_links), out_edge(num_links);
  for (std::size_t i = 0; i + 1 < num_links; ++i) {
    out_edge[i] = least_edge(single[i], in_edge[i]);
    in_edge[i + 1] = least_edge(single[i + 1], {});
  }

  // Host ids before the seeded relabelling; the outgoing shared vertex of a part is its last vertex.
  Vertex next = 0;
  std::vector<std::vector<VertexSet>> parts(num_links, std::vector<VertexSet>(s));
  for (std::size_t i = 0; i < num_links; ++i)
    for (Vertex x = 0; x < s; ++x) {
      VertexSet& p = parts[i][x];
      if (i > 0) {
        auto it = std::find(in_edge[i].begin(), in_edge[i].end(), x);
        if (it != in_edge[i].end()) p.push_back(parts[i - 1][out_edge[i - 1][static_cast<std::size_t>(it - in_edge[i].begin())]].back());
      }
      const std::size_t size = single[i] == x ? 1 : part_size;
      while (p.size() < size) p.push_back(next++);
    }
  std::vector<VertexSet> shared(num_links - 1);
  for (std::size_t i = 0; i + 1 < num_links; ++i)
    for (Vertex x : out_edge[i]) shared[i].push_back(parts[i][x].back());

  std::vector<Vertex> perm(next);
  std::iota(perm.begin(), perm.end(), Vertex{0});
  std::mt19937_64 rng(seed);
  for (std::size_t i = perm.size(); i > 1; --i) std::swap(perm[i - 1], perm[rng() % i]);
  auto relabel_set = [&](VertexSet& v) {
    for (Vertex& x : v) x = perm[x];
    std::sort(v.begin(), v.end());
  };

  ChainCertificate c;
  c.k = k;
  for (std::size_t i = 0; i < num_links; ++i) {
    for (auto& p : parts[i]) relabel_set(p);
    c.links.emplace_back(base, parts[i]);
  }
  for (auto& e : shared) relabel_set(e);
  c.shared_edges = shared;
  const std::int64_t slack = 2 * static_cast<std::int64_t>(min_supported_codegree(base)) - static_cast<std::int64_t>(s);
  c.epsilon = Rational(std::max<std::int64_t>(slack, 0), static_cast<std::int64_t>(s));
  c.gamma = Rational(0);
  c.m1 = c.m2 = Rational(static_cast<std::int64_t>(part_size));
  std::ostringstream prov;
  prov << "generate_chain_host k=" << k << " s=" << s << " links=" << num_links << " part_size=" << part_size
       << " seed=" << seed << " singletons=" << (options.singletons ? 1 : 0);
  c.provenance = prov.str();

  HostInstance h;
  h.k = k;
  h.n = next;
  h.provenance = c.provenance;
  h.certificate = std::move(c);
  return h;
}

SpanningResult spanning_sphere(const ChainCertificate& c, const SpanningOptions& options) {
  const std::size_t l = c.links.size();
  if (l == 0) fail(Errc::PreconditionFailed, "chain has no links");
  if (c.shared_edges.size() != l - 1) fail(Errc::PreconditionFailed, "chain needs one shared edge per consecutive pair");

  std::vector<std::optional<AllocationResult>> results(l);
  std::vector<LinkSummary> summaries(l);
  std::vector<std::exception_ptr> errors(l);
  auto solve = [&](std::size_t i) {
    try {
      const Blowup& b = c.links[i];
      std::optional<VertexSet> f1, f2;
      if (i > 0) f1 = make_set(c.shared_edges[i - 1]);
      if (i + 1 < l) f2 = make_set(c.shared_edges[i]);
      bool overlap = false;
      if (!f1 && !f2) {
        f1 = free_facet(b, {}).first;
      }
      if (!f1) {
        auto [f, o] = free_facet(b, *f2);
        f1 = f;
        overlap = o;
      } else if (!f2) {
        auto [f, o] = free_facet(b, *f1);
        f2 = f;
        overlap = o;
      } else {
        auto p1 = b.project_set(*f1), p2 = b.project_set(*f2);
        overlap = p1 && p2 && intersection_size(*p1, *p2) != 0;
      }
      AllocateOptions ao;
      ao.verify = false;
      ao.allow_overlap = overlap;
      results[i] = allocate(b, *f1, *f2, ao);
      summaries[i] = LinkSummary{*f1, *f2, overlap, results[i]->report};
    } catch (const Error& e) {
      errors[i] = std::make_exception_ptr(Error(e.code(), "link " + std::to_string(i) + ": " + e.detail(), i));
    } catch (...) {
      errors[i] = std::current_exception();
    }
  };
  const unsigned jobs = std::max(1u, std::min<unsigned>(options.jobs, static_cast<unsigned>(l)));
  if (jobs == 1) {
    for (std::size_t i = 0; i < l; ++i) solve(i);
  } else {
    std::atomic<std::size_t> cursor{0};
    std::vector<std::thread> pool;
    for (unsigned t = 0; t < jobs; ++t)
      pool.emplace_back([&] {
        for (std::size_t i = cursor++; i < l; i = cursor++) solve(i);
      });
    for (auto& th : pool) th.join();
  }
  for (auto& e : errors)
    if (e) std::rethrow_exception(e);

  SpanningResult out;
  out.sphere = std::move(results[0]->sphere);
  for (std::size_t i = 1; i < l; ++i) out.sphere = glue(out.sphere, results[i]->sphere, make_set(c.shared_edges[i - 1]));
  out.links = std::move(summaries);
  ChainHost host(c);
  out.spanning = is_spanning_copy(out.sphere, c.k, host.vertices(),
                                  [&](std::span<const Vertex> f) { return host.has_edge(f); });
  if (options.verify) out.certificate = verify_sphere(out.sphere, options.sphere);
  return out;
}

}  // namespace spansphere
