#include "spansphere/extremal.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <numeric>
#include <random>

#include "spansphere/error.hpp"

namespace spansphere {

namespace {

Hypergraph induced_on(const Hypergraph& h, std::span<const Vertex> set) {
  const std::size_t k = static_cast<std::size_t>(h.uniformity());
  if (binomial(set.size(), k) > h.edge_count()) return induced_subgraph(h, set);
  VertexSet pos(set.size());
  std::iota(pos.begin(), pos.end(), Vertex{0});
  std::vector<Vertex> flat;
  VertexSet actual(k);
  for_each_subset(std::span<const Vertex>(pos), k, [&](std::span<const Vertex> sub) {
    for (std::size_t i = 0; i < k; ++i) actual[i] = set[sub[i]];
    std::sort(actual.begin(), actual.end());
    if (h.has_edge(actual)) flat.insert(flat.end(), sub.begin(), sub.end());
  });
  return Hypergraph::from_flat(h.uniformity(), static_cast<Vertex>(set.size()), flat);
}

class BlowupSearch {
 public:
  BlowupSearch(const Hypergraph& p, std::size_t b, std::uint64_t budget)
      : p_(p), s_(static_cast<std::size_t>(p.uniformity())), b_(b), budget_(budget), shadows_(s_ + 1) {
    for (std::size_t j = 1; j < s_; ++j) {
      shadows_[j] = SetTable(j);
      for (std::size_t e = 0; e < p.edge_count(); ++e)
        for_each_subset(p.edge(e), j, [&](std::span<const Vertex> sub) { shadows_[j].push(sub); });
      shadows_[j].canonicalize();
    }
    used_.assign(p.order(), 0);
  }

  std::optional<std::vector<VertexSet>> run() {
    if (search(0, std::nullopt)) return chosen_;
    return std::nullopt;
  }

 private:
  bool contains(std::size_t level, const VertexSet& set) const {
    return level == s_ ? p_.has_edge(set) : shadows_[level].contains(set);
  }

  // Does v extend every current partial transversal to a set of the next level?
  bool viable(Vertex v) const {
    const std::size_t level = chosen_.size() + 1;
    VertexSet t;
    for (const auto& partial : partials_) {
      t = partial;
      t.insert(std::upper_bound(t.begin(), t.end(), v), v);
      if (!contains(level, t)) return false;
    }
    return true;
  }

  bool search(std::size_t level, std::optional<Vertex> prev_min) {
    if (level == s_) return true;
    VertexSet candidates;
    for (Vertex v = prev_min ? *prev_min + 1 : 0; v < p_.order(); ++v)
      if (!used_[v] && viable(v)) candidates.push_back(v);
    if (candidates.size() < b_) return false;
    return choose(level, candidates, 0, {});
  }

  bool choose(std::size_t level, const VertexSet& candidates, std::size_t from, VertexSet part) {
    if (part.size() == b_) {
      if (++nodes_ > budget_) fail(Errc::BudgetExceeded, "partite blow-up search exceeded its budget");
      auto saved = partials_;
      std::vector<VertexSet> next;
      for (const auto& t : partials_)
        for (Vertex v : part) {
          VertexSet u = t;
          u.insert(std::upper_bound(u.begin(), u.end(), v), v);
          next.push_back(std::move(u));
        }
      partials_ = std::move(next);
      for (Vertex v : part) used_[v] = 1;
      chosen_.push_back(part);
      if (search(level + 1, part.front())) return true;
      chosen_.pop_back();
      for (Vertex v : part) used_[v] = 0;
      partials_ = std::move(saved);
      return false;
    }
    const std::size_t need = b_ - part.size();
    for (std::size_t i = from; i + need <= candidates.size(); ++i) {
      part.push_back(candidates[i]);
      if (choose(level, candidates, i + 1, part)) return true;
      part.pop_back();
    }
    return false;
  }

  const Hypergraph& p_;
  std::size_t s_;
  std::size_t b_;
  std::uint64_t budget_;
  std::uint64_t nodes_ = 0;
  std::vector<SetTable> shadows_;
  std::vector<char> used_;
  std::vector<VertexSet> chosen_;
  std::vector<VertexSet> partials_{VertexSet{}};
};

// Least (member, labeling) such that mapping vertex i to labeling[i] turns `g` into the member.
std::optional<std::pair<std::size_t, std::vector<Vertex>>> identify(const Hypergraph& g,
                                                                    const std::vector<Hypergraph>& family) {
  const Vertex s = g.order();
  const std::size_t k = static_cast<std::size_t>(g.uniformity());
  for (std::size_t m = 0; m < family.size(); ++m) {
    if (family[m].edge_count() != g.edge_count()) continue;
    std::vector<Vertex> sigma(s);
    std::iota(sigma.begin(), sigma.end(), Vertex{0});
    do {
      bool same = true;
      VertexSet e(k);
      for (std::size_t i = 0; i < g.edge_count() && same; ++i) {
        for (std::size_t j = 0; j < k; ++j) e[j] = sigma[g.edge(i)[j]];
        std::sort(e.begin(), e.end());
        same = family[m].has_edge(e);
      }
      if (same) return std::make_pair(m, sigma);
    } while (std::next_permutation(sigma.begin(), sigma.end()));
  }
  return std::nullopt;
}

}  // namespace

PropertyPredicate dense_property(const Rational& epsilon, int k) {
  PropertyPredicate p;
  p.name = "P(" + format_rational(epsilon) + "," + std::to_string(k) + ")";
  p.epsilon = epsilon;
  p.k = k;
  p.evaluator = [epsilon](const Hypergraph& g) {
    if (!isolated_vertices(g).empty()) return false;
    const Rational lhs(2 * static_cast<std::int64_t>(min_supported_codegree(g)));
    return lhs >= (Rational(1) + Rational(2) * epsilon) * Rational(static_cast<std::int64_t>(g.order()));
  };
  return p;
}

Hypergraph property_graph(const Hypergraph& h, const PropertyPredicate& p, int s, std::uint64_t budget) {
  if (s < h.uniformity() || static_cast<Vertex>(s) > h.order())
    fail(Errc::BadParams, "need k <= s <= n for the property graph");
  const std::uint64_t count = binomial(h.order(), static_cast<std::size_t>(s));
  if (count > budget)
    fail(Errc::BudgetExceeded, std::to_string(count) + " subsets exceed the budget " + std::to_string(budget));
  VertexSet all(h.order());
  std::iota(all.begin(), all.end(), Vertex{0});
  std::vector<Vertex> flat;
  for_each_subset(std::span<const Vertex>(all), static_cast<std::size_t>(s), [&](std::span<const Vertex> set) {
    if (p.evaluator(induced_on(h, set))) flat.insert(flat.end(), set.begin(), set.end());
  });
  return Hypergraph::from_flat(s, h.order(), flat);
}

RateEstimate sample_property_rate(const Hypergraph& h, const Rational& epsilon, int s, std::uint64_t trials,
                                  std::uint64_t seed, const VertexSet& fixed) {
  if (trials == 0) fail(Errc::BadParams, "need at least one trial");
  const VertexSet base = make_set(fixed);
  if (s < h.uniformity() || static_cast<Vertex>(s) > h.order() || base.size() > static_cast<std::size_t>(s))
    fail(Errc::BadParams, "need k <= s <= n and |T| <= s");
  for (Vertex v : base)
    if (v >= h.order()) fail(Errc::InvalidVertex, "fixed vertex " + std::to_string(v) + " is out of range");
  VertexSet rest;
  for (Vertex v = 0; v < h.order(); ++v)
    if (!std::binary_search(base.begin(), base.end(), v)) rest.push_back(v);
  const std::size_t draw = static_cast<std::size_t>(s) - base.size();
  const PropertyPredicate p = dense_property(epsilon / Rational(2), h.uniformity());
  std::mt19937_64 rng(seed);
  RateEstimate out;
  out.trials = trials;
  for (std::uint64_t t = 0; t < trials; ++t) {
    for (std::size_t i = 0; i < draw; ++i) std::swap(rest[i], rest[i + rng() % (rest.size() - i)]);
    VertexSet set = base;
    set.insert(set.end(), rest.begin(), rest.begin() + static_cast<std::ptrdiff_t>(draw));
    std::sort(set.begin(), set.end());
    if (p.evaluator(induced_on(h, set))) ++out.hits;
  }
  out.rate = Rational(static_cast<std::int64_t>(out.hits), static_cast<std::int64_t>(trials));
  const double n = static_cast<double>(trials), phat = static_cast<double>(out.hits) / n, z = 1.96;
  const double denom = 1 + z * z / n;
  const double centre = (phat + z * z / (2 * n)) / denom;
  const double half = z * std::sqrt(phat * (1 - phat) / n + z * z / (4 * n * n)) / denom;
  out.lower = std::max(0.0, centre - half);
  out.upper = std::min(1.0, centre + half);
  return out;
}

std::optional<std::vector<VertexSet>> find_partite_blowup(const Hypergraph& p, std::size_t b, std::uint64_t budget) {
  if (b == 0) fail(Errc::BadParams, "blow-up parts need at least one vertex");
  if (p.edge_count() == 0) return std::nullopt;
  return BlowupSearch(p, b, budget).run();
}

std::optional<PigeonholeResult> pigeonhole_blowup(const Hypergraph& host, const std::vector<VertexSet>& parts,
                                                  const std::vector<Hypergraph>& family, std::size_t b,
                                                  std::uint64_t budget) {
  const std::size_t s = parts.size();
  const int k = host.uniformity();
  if (s < static_cast<std::size_t>(k)) fail(Errc::BadParams, "need at least k parts");
  for (const auto& m : family)
    if (m.order() != s || m.uniformity() != k) fail(Errc::BadParams, "family members must be k-graphs on the parts");
  VertexSet seen;
  std::uint64_t total = 1;
  for (const auto& part : parts) {
    if (part.empty()) fail(Errc::BadParams, "empty part");
    for (Vertex v : part)
      if (v >= host.order()) fail(Errc::InvalidVertex, "part vertex " + std::to_string(v) + " is out of range");
    seen = set_union(seen, make_set(part));
    total *= part.size();
    if (total > budget) fail(Errc::BudgetExceeded, "too many transversals");
  }
  std::size_t sizes = 0;
  for (const auto& part : parts) sizes += part.size();
  if (seen.size() != sizes) fail(Errc::BadParams, "parts are not disjoint");

  using Colour = std::pair<std::size_t, std::vector<Vertex>>;
  std::map<Colour, std::vector<VertexSet>> classes;
  std::map<std::vector<Vertex>, Colour> cache;
  std::vector<std::size_t> idx(s, 0);
  VertexSet t(s);
  while (true) {
    for (std::size_t i = 0; i < s; ++i) t[i] = parts[i][idx[i]];
    Hypergraph labelled = induced_on(host, t);
    std::vector<Vertex> key;
    for (std::size_t e = 0; e < labelled.edge_count(); ++e)
      key.insert(key.end(), labelled.edge(e).begin(), labelled.edge(e).end());
    auto it = cache.find(key);
    if (it == cache.end()) {
      auto colour = identify(labelled, family);
      if (!colour)
        fail(Errc::HypothesisFailed, "transversal " + format_set(make_set(t)) + " induces no family member");
      it = cache.emplace(key, *colour).first;
    }
    classes[it->second].push_back(make_set(t));
    std::size_t j = s;
    bool done = false;
    while (true) {
      --j;
      if (++idx[j] < parts[j].size()) break;
      idx[j] = 0;
      if (j == 0) {
        done = true;
        break;
      }
    }
    if (done) break;
  }

  std::vector<const std::pair<const Colour, std::vector<VertexSet>>*> order;
  for (const auto& entry : classes) order.push_back(&entry);
  std::stable_sort(order.begin(), order.end(), [](auto* a, auto* c) { return a->second.size() > c->second.size(); });
  std::vector<Vertex> owner(host.order(), 0);
  for (std::size_t i = 0; i < s; ++i)
    for (Vertex v : parts[i]) owner[v] = static_cast<Vertex>(i);
  for (const auto* entry : order) {
    std::vector<Vertex> flat;
    for (const auto& e : entry->second) flat.insert(flat.end(), e.begin(), e.end());
    Hypergraph cls = Hypergraph::from_flat(static_cast<int>(s), host.order(), flat);
    auto found = find_partite_blowup(cls, b, budget);
    if (!found) continue;
    PigeonholeResult out;
    out.member = entry->first.first;
    out.labeling = entry->first.second;
    out.parts.assign(s, {});
    for (auto& x : *found) out.parts[owner[x.front()]] = x;
    out.colour_class = entry->second.size();
    out.colours = classes.size();
    return out;
  }
  return std::nullopt;
}

}  // namespace spansphere
