#include "spansphere/walk.hpp"

#include <algorithm>
#include <deque>
#include <tuple>
#include <map>
#include <unordered_map>

#include "spansphere/error.hpp"

namespace spansphere {

namespace {

struct VecHash {
  std::size_t operator()(const std::vector<Vertex>& v) const noexcept {
    std::size_t h = 1469598103934665603ull;
    for (Vertex x : v) h = (h ^ x) * 1099511628211ull;
    return h;
  }
};

std::vector<Vertex> ordered_window(const std::vector<Vertex>& w, std::size_t i, std::size_t k) {
  return {w.begin() + static_cast<std::ptrdiff_t>(i), w.begin() + static_cast<std::ptrdiff_t>(i + k)};
}

std::vector<Vertex> sorted_window(const std::vector<Vertex>& w, std::size_t i, std::size_t k) {
  auto s = ordered_window(w, i, k);
  std::sort(s.begin(), s.end());
  return s;
}

// One pass of the pruning rule; returns false when nothing was removed.
bool prune_once(std::vector<Vertex>& w, std::size_t k) {
  const std::size_t windows = w.size() - k + 1;
  std::unordered_map<std::vector<Vertex>, std::size_t, VecHash> first;
  std::vector<std::size_t> starts;
  for (std::size_t i = 0; i < windows; ++i)
    if (first.emplace(sorted_window(w, i, k), i).second) starts.push_back(i);
  std::size_t keep = starts.back() + k;
  bool changed = false;
  if (keep < w.size()) {
    w.resize(keep);
    changed = true;
  }
  const std::size_t total = w.size() - k + 1;
  starts.push_back(total);
  for (std::size_t s = 0; s + 1 < starts.size(); ++s) {
    std::unordered_map<std::vector<Vertex>, std::size_t, VecHash> last;
    for (std::size_t i = starts[s]; i < starts[s + 1]; ++i) last[ordered_window(w, i, k)] = i;
    for (std::size_t a = starts[s]; a < starts[s + 1]; ++a) {
      std::size_t b = last[ordered_window(w, a, k)];
      if (b > a) {
        w.erase(w.begin() + static_cast<std::ptrdiff_t>(a), w.begin() + static_cast<std::ptrdiff_t>(b));
        return true;
      }
    }
  }
  return changed;
}

}  // namespace

VertexSet TightWalk::window(std::size_t i) const {
  return sorted_window(vertices, i, static_cast<std::size_t>(k));
}

std::optional<std::string> validate_walk(const Hypergraph& h, const TightWalk& w) {
  if (w.k != h.uniformity()) return "walk uniformity differs from host";
  if (w.vertices.size() < static_cast<std::size_t>(w.k)) return "walk shorter than k";
  for (std::size_t i = 0; i < w.window_count(); ++i) {
    VertexSet s = w.window(i);
    if (std::adjacent_find(s.begin(), s.end()) != s.end())
      return "window " + std::to_string(i) + " repeats a vertex";
    if (!h.has_edge(s)) return "window " + std::to_string(i) + " " + format_set(s) + " is not an edge";
  }
  return std::nullopt;
}

bool walk_covers(const Hypergraph& h, const TightWalk& w) {
  if (validate_walk(h, w)) return false;
  std::vector<bool> seen(h.edge_count(), false);
  for (std::size_t i = 0; i < w.window_count(); ++i) seen[*h.edge_index(w.window(i))] = true;
  return std::all_of(seen.begin(), seen.end(), [](bool b) { return b; });
}

std::vector<std::size_t> walk_multiplicities(const TightWalk& w, Vertex n) {
  std::vector<std::size_t> m(n, 0);
  for (Vertex v : w.vertices)
    if (v < n) ++m[v];
  return m;
}

TightWalk covering_tight_walk(const Hypergraph& h) {
  if (!is_tightly_connected(h)) fail(Errc::NotTightlyConnected, "covering walk needs a tightly connected host");
  const std::size_t k = static_cast<std::size_t>(h.uniformity());
  Hypergraph lg = line_graph(h);
  std::vector<std::vector<std::size_t>> adj(h.edge_count());
  for (std::size_t i = 0; i < lg.edge_count(); ++i) {
    auto p = lg.edge(i);
    adj[p[0]].push_back(p[1]);
    adj[p[1]].push_back(p[0]);
  }
  for (auto& a : adj) std::sort(a.begin(), a.end());

  std::vector<Vertex> w(h.edge(0).begin(), h.edge(0).end());
  std::vector<bool> seen(h.edge_count(), false);
  std::deque<std::size_t> queue{0};
  seen[0] = true;
  while (!queue.empty()) {
    std::size_t u = queue.front();
    queue.pop_front();
    auto e = h.edge(u);
    for (std::size_t v : adj[u]) {
      if (seen[v]) continue;
      seen[v] = true;
      queue.push_back(v);
      auto f = h.edge(v);
      std::size_t p = 0;
      while (!std::equal(e.begin(), e.end(), sorted_window(w, p, k).begin())) ++p;
      std::vector<Vertex> x = ordered_window(w, p, k);
      std::size_t j = 0;
      while (std::binary_search(f.begin(), f.end(), x[j])) ++j;
      Vertex y = set_difference(f, e).front();
      std::vector<Vertex> detour = x;
      detour.insert(detour.end(), x.begin(), x.begin() + static_cast<std::ptrdiff_t>(j));
      detour.push_back(y);
      detour.insert(detour.end(), x.begin() + static_cast<std::ptrdiff_t>(j + 1), x.end());
      detour.insert(detour.end(), x.begin(), x.end());
      std::vector<Vertex> next(w.begin(), w.begin() + static_cast<std::ptrdiff_t>(p));
      next.insert(next.end(), detour.begin(), detour.end());
      next.insert(next.end(), w.begin() + static_cast<std::ptrdiff_t>(p + k), w.end());
      w = std::move(next);
    }
  }
  while (prune_once(w, k)) {
  }
  return TightWalk{h.uniformity(), std::move(w)};
}

TightWalk greedy_covering_walk(const Hypergraph& h) {
  if (!is_tightly_connected(h)) fail(Errc::NotTightlyConnected, "covering walk needs a tightly connected host");
  const std::size_t k = static_cast<std::size_t>(h.uniformity());
  std::vector<bool> visited(h.edge_count(), false);
  std::size_t remaining = h.edge_count();
  std::vector<std::size_t> mult(h.order(), 0);
  std::vector<Vertex> w(h.edge(0).begin(), h.edge(0).end());
  for (Vertex v : w) ++mult[v];
  visited[0] = true;
  --remaining;

  using State = std::vector<Vertex>;
  auto edge_of = [&](const State& s, Vertex y) -> std::optional<std::size_t> {
    if (std::find(s.begin(), s.end(), y) != s.end()) return std::nullopt;
    State t = s;
    t.push_back(y);
    std::sort(t.begin(), t.end());
    return h.edge_index(t);
  };
  auto shift = [](const State& s, Vertex y) {
    State t(s.begin() + 1, s.end());
    t.push_back(y);
    return t;
  };
  auto has_fresh = [&](const State& s, std::optional<std::size_t> exclude) {
    for (Vertex y = 0; y < h.order(); ++y) {
      auto e = edge_of(s, y);
      if (e && !visited[*e] && e != exclude) return true;
    }
    return false;
  };
  auto append = [&](Vertex y) {
    w.push_back(y);
    ++mult[y];
    auto e = h.edge_index(sorted_window(w, w.size() - k, k));
    if (!visited[*e]) {
      visited[*e] = true;
      --remaining;
    }
  };

  while (remaining > 0) {
    State st(w.end() - static_cast<std::ptrdiff_t>(k - 1), w.end());
    std::optional<Vertex> best;
    std::tuple<int, std::size_t, Vertex> best_key{};
    for (Vertex y = 0; y < h.order(); ++y) {
      auto e = edge_of(st, y);
      if (!e || visited[*e]) continue;
      int dead_end = has_fresh(shift(st, y), e) ? 0 : 1;
      std::tuple<int, std::size_t, Vertex> key{dead_end, mult[y], y};
      if (!best || key < best_key) {
        best = y;
        best_key = key;
      }
    }
    if (best) {
      append(*best);
      continue;
    }
    std::map<State, std::pair<State, Vertex>> prev;
    std::deque<State> queue{st};
    prev.emplace(st, std::make_pair(State{}, Vertex{0}));
    std::optional<State> goal;
    while (!queue.empty()) {
      State s = queue.front();
      queue.pop_front();
      if (has_fresh(s, std::nullopt)) {
        goal = s;
        break;
      }
      for (Vertex y = 0; y < h.order(); ++y) {
        if (!edge_of(s, y)) continue;
        State t = shift(s, y);
        if (prev.emplace(t, std::make_pair(s, y)).second) queue.push_back(t);
      }
    }
    if (!goal) fail(Errc::NotTightlyConnected, "no route to an unvisited edge");
    std::vector<Vertex> route;
    for (State s = *goal; s != st; s = prev[s].first) route.push_back(prev[s].second);
    for (auto it = route.rbegin(); it != route.rend(); ++it) append(*it);
  }
  return TightWalk{h.uniformity(), std::move(w)};
}

TightWalk lift_walk_to_path(const TightWalk& w, const Blowup& b) {
  if (w.k != b.uniformity()) fail(Errc::BadArity, "walk and blow-up uniformity differ");
  if (auto bad = validate_walk(b.base(), w)) fail(Errc::PreconditionFailed, "walk invalid in base: " + *bad);
  std::vector<std::size_t> used(b.base().order(), 0);
  TightWalk out{w.k, {}};
  for (Vertex x : w.vertices) {
    const auto& part = b.part(x);
    if (used[x] >= part.size())
      fail(Errc::PartTooSmall,
           "part " + std::to_string(x) + " has " + std::to_string(part.size()) + " vertices, walk needs more", x);
    out.vertices.push_back(part[used[x]++]);
  }
  return out;
}

}  // namespace spansphere
