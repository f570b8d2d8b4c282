#include "spansphere/matching.hpp"

#include <algorithm>
#include <boost/graph/adjacency_list.hpp>
#include <boost/graph/max_cardinality_matching.hpp>

#include "spansphere/error.hpp"

namespace spansphere {

namespace {

constexpr std::size_t kNone = SIZE_MAX;

bool augment(const BipartiteInstance& b, std::size_t u, std::vector<std::size_t>& match_right,
             std::vector<bool>& visited) {
  for (std::size_t r : b.adjacency[u]) {
    if (visited[r]) continue;
    visited[r] = true;
    if (match_right[r] == kNone || augment(b, match_right[r], match_right, visited)) {
      match_right[r] = u;
      return true;
    }
  }
  return false;
}

}  // namespace

const char* matching_kind_name(MatchingKind kind) noexcept {
  switch (kind) {
    case MatchingKind::Saturating: return "Saturating";
    case MatchingKind::PerfectMatching: return "PerfectMatching";
    case MatchingKind::HallViolator: return "HallViolator";
    case MatchingKind::NoPerfectMatching: return "NoPerfectMatching";
  }
  return "Unknown";
}

MatchingResult hall_matching(const BipartiteInstance& input) {
  BipartiteInstance b = input;
  b.adjacency.resize(b.left_count);
  for (auto& adj : b.adjacency) {
    std::sort(adj.begin(), adj.end());
    adj.erase(std::unique(adj.begin(), adj.end()), adj.end());
    for (std::size_t r : adj)
      if (r >= b.right_count) fail(Errc::BadParams, "adjacency target outside the right side", r);
  }
  std::vector<std::size_t> match_right(b.right_count, kNone);
  std::optional<std::size_t> unmatched;
  for (std::size_t u = 0; u < b.left_count; ++u) {
    std::vector<bool> visited(b.right_count, false);
    if (!augment(b, u, match_right, visited) && !unmatched) unmatched = u;
  }
  MatchingResult res;
  for (std::size_t r = 0; r < b.right_count; ++r)
    if (match_right[r] != kNone) res.pairs.emplace_back(match_right[r], r);
  std::sort(res.pairs.begin(), res.pairs.end());
  if (!unmatched) {
    res.kind = MatchingKind::Saturating;
    return res;
  }
  // Left vertices reachable from the unmatched one by alternating paths.
  res.kind = MatchingKind::HallViolator;
  std::vector<bool> in_left(b.left_count, false), in_right(b.right_count, false);
  std::vector<std::size_t> stack{*unmatched};
  in_left[*unmatched] = true;
  while (!stack.empty()) {
    std::size_t u = stack.back();
    stack.pop_back();
    for (std::size_t r : b.adjacency[u]) {
      if (in_right[r]) continue;
      in_right[r] = true;
      std::size_t w = match_right[r];
      if (w != kNone && !in_left[w]) {
        in_left[w] = true;
        stack.push_back(w);
      }
    }
  }
  for (std::size_t u = 0; u < b.left_count; ++u)
    if (in_left[u]) res.violator.push_back(u);
  return res;
}

std::vector<std::pair<std::size_t, std::size_t>> maximum_matching(const Hypergraph& g) {
  if (g.uniformity() != 2) fail(Errc::BadArity, "matching needs a 2-uniform hypergraph");
  using Graph = boost::adjacency_list<boost::vecS, boost::vecS, boost::undirectedS>;
  Graph bg(g.order());
  for (std::size_t i = 0; i < g.edge_count(); ++i) boost::add_edge(g.edge(i)[0], g.edge(i)[1], bg);
  std::vector<boost::graph_traits<Graph>::vertex_descriptor> mate(g.order());
  boost::edmonds_maximum_cardinality_matching(bg, &mate[0]);
  std::vector<std::pair<std::size_t, std::size_t>> pairs;
  const auto null = boost::graph_traits<Graph>::null_vertex();
  for (std::size_t v = 0; v < g.order(); ++v)
    if (mate[v] != null && v < mate[v]) pairs.emplace_back(v, mate[v]);
  return pairs;
}

MatchingResult perfect_matching(const Hypergraph& g) {
  MatchingResult res;
  res.pairs = maximum_matching(g);
  res.kind = res.pairs.size() * 2 == g.order() ? MatchingKind::PerfectMatching : MatchingKind::NoPerfectMatching;
  return res;
}

}  // namespace spansphere
