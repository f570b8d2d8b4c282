#include <algorithm>
#include <deque>
#include <unordered_set>

#include "spansphere/complex.hpp"
#include "spansphere/error.hpp"

namespace spansphere {

namespace {

struct FaceKey {
  std::uint64_t lo = 0, hi = 0;
  bool operator==(const FaceKey&) const = default;
};

struct FaceKeyHash {
  std::size_t operator()(const FaceKey& k) const noexcept {
    return std::hash<std::uint64_t>{}(k.lo * 0x9E3779B97F4A7C15ull ^ (k.hi + 0x632BE59BD9B4E019ull));
  }
};

// Packs up to 8 dense vertex ids below 2^16 (plus one for the empty slot).
FaceKey pack(std::span<const Vertex> dense) {
  FaceKey key;
  for (std::size_t i = 0; i < dense.size(); ++i) {
    std::uint64_t v = static_cast<std::uint64_t>(dense[i]) + 1;
    if (i < 4)
      key.lo |= v << (16 * i);
    else
      key.hi |= v << (16 * (i - 4));
  }
  return key;
}

class ShellingSearch {
 public:
  explicit ShellingSearch(const SimplicialComplex& k) : k_(k), width_(static_cast<std::size_t>(k.dim() + 1)) {
    const auto& verts = k.vertices();
    dense_.resize(k.facet_count() * width_);
    for (std::size_t i = 0; i < k.facet_count(); ++i) {
      auto f = k.facet(i);
      for (std::size_t j = 0; j < width_; ++j)
        dense_[i * width_ + j] =
            static_cast<Vertex>(std::lower_bound(verts.begin(), verts.end(), f[j]) - verts.begin());
    }
    // ridge neighbours: for facet i and omitted slot j, the facet across that ridge
    std::vector<std::pair<FaceKey, std::size_t>> ridges;
    VertexSet r;
    for (std::size_t i = 0; i < k.facet_count(); ++i)
      for (std::size_t j = 0; j < width_; ++j) ridges.emplace_back(pack(ridge(i, j, r)), i * width_ + j);
    std::sort(ridges.begin(), ridges.end(), [](const auto& a, const auto& b) {
      return std::tie(a.first.hi, a.first.lo, a.second) < std::tie(b.first.hi, b.first.lo, b.second);
    });
    across_.assign(k.facet_count() * width_, SIZE_MAX);
    for (std::size_t i = 0; i + 1 < ridges.size(); ++i)
      if (ridges[i].first == ridges[i + 1].first) {
        across_[ridges[i].second] = ridges[i + 1].second / width_;
        across_[ridges[i + 1].second] = ridges[i].second / width_;
      }
  }

  std::optional<std::vector<std::size_t>> run(std::uint64_t budget) {
    const std::size_t n = k_.facet_count();
    std::uint64_t spent = 0;
    for (std::size_t attempt = 0; attempt < 2 * n && spent < budget; ++attempt) {
      const bool lifo = attempt % 2 == 1;
      const std::size_t start = attempt / 2;
      faces_.clear();
      placed_.assign(n, false);
      std::vector<std::size_t> order;
      std::deque<std::size_t> work;
      auto place = [&](std::size_t f) {
        placed_[f] = true;
        order.push_back(f);
        add_faces(f);
        for (std::size_t j = 0; j < width_; ++j) {
          std::size_t g = across_[f * width_ + j];
          if (g != SIZE_MAX && !placed_[g]) work.push_back(g);
        }
      };
      place(start);
      while (!work.empty() && spent < budget) {
        std::size_t f;
        if (lifo) {
          f = work.back();
          work.pop_back();
        } else {
          f = work.front();
          work.pop_front();
        }
        if (placed_[f]) continue;
        ++spent;
        if (valid(f)) place(f);
      }
      if (order.size() == n) return order;
    }
    return std::nullopt;
  }

 private:
  std::span<const Vertex> ridge(std::size_t f, std::size_t skip, VertexSet& buf) const {
    buf.clear();
    for (std::size_t j = 0; j < width_; ++j)
      if (j != skip) buf.push_back(dense_[f * width_ + j]);
    return buf;
  }

  void add_faces(std::size_t f) {
    std::span<const Vertex> row(dense_.data() + f * width_, width_);
    for (std::size_t r = 1; r <= width_; ++r)
      for_each_subset(row, r, [&](std::span<const Vertex> s) { faces_.insert(pack(s)); });
  }

  bool valid(std::size_t f) const {
    VertexSet res;
    for (std::size_t j = 0; j < width_; ++j) {
      std::size_t g = across_[f * width_ + j];
      if (g != SIZE_MAX && placed_[g]) res.push_back(dense_[f * width_ + j]);
    }
    if (res.empty()) return false;
    return !faces_.contains(pack(res));
  }

  const SimplicialComplex& k_;
  std::size_t width_;
  std::vector<Vertex> dense_;
  std::vector<std::size_t> across_;
  std::vector<bool> placed_;
  std::unordered_set<FaceKey, FaceKeyHash> faces_;
};

bool is_single_cycle(const SimplicialComplex& c) {
  if (c.dim() != 1 || c.empty()) return false;
  auto flags = is_pseudomanifold(c);
  return flags.pseudomanifold && flags.strongly_connected;
}

}  // namespace

const char* sphere_level_name(SphereLevel level) noexcept {
  switch (level) {
    case SphereLevel::FullDim1: return "FullDim1";
    case SphereLevel::FullDim2: return "FullDim2";
    case SphereLevel::LinkVerified: return "LinkVerified";
    case SphereLevel::Shelled: return "Shelled";
    case SphereLevel::PartialOnly: return "PartialOnly";
    case SphereLevel::Rejected: return "Rejected";
  }
  return "Unknown";
}

bool certifies_sphere(SphereLevel level) noexcept {
  return level != SphereLevel::PartialOnly && level != SphereLevel::Rejected;
}

std::optional<std::vector<std::size_t>> find_shelling(const SimplicialComplex& k, std::uint64_t budget) {
  if (k.empty()) return std::nullopt;
  if (k.dim() + 1 > 8 || k.vertices().size() >= 0xFFFF) return std::nullopt;
  if (k.dim() == 0) {
    std::vector<std::size_t> order(k.facet_count());
    for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
    return order;
  }
  ShellingSearch search(k);
  return search.run(budget);
}

std::optional<std::string> check_shelling(const SimplicialComplex& k, std::span<const std::size_t> order) {
  const std::size_t n = k.facet_count();
  if (order.size() != n) return "order has " + std::to_string(order.size()) + " entries, complex has " + std::to_string(n);
  std::vector<bool> seen(n, false);
  for (std::size_t i : order) {
    if (i >= n || seen[i]) return "order is not a permutation of the facets";
    seen[i] = true;
  }
  const std::size_t width = static_cast<std::size_t>(k.dim() + 1);
  for (std::size_t j = 1; j < n; ++j) {
    auto f = k.facet(order[j]);
    std::vector<VertexSet> common;
    for (std::size_t r = 1; r <= width; ++r)
      for_each_subset(f, r, [&](std::span<const Vertex> g) {
        for (std::size_t i = 0; i < j; ++i)
          if (includes(k.facet(order[i]), g)) {
            common.emplace_back(g.begin(), g.end());
            return;
          }
      });
    if (common.empty()) {
      if (k.dim() == 0) continue;
      return "facet at position " + std::to_string(j) + " meets the earlier facets in nothing";
    }
    for (const auto& g : common) {
      bool maximal = std::none_of(common.begin(), common.end(),
                                  [&](const VertexSet& h) { return h.size() > g.size() && includes(h, g); });
      if (maximal && g.size() != width - 1)
        return "facet at position " + std::to_string(j) + " meets the earlier facets in a maximal face " +
               format_set(g) + " of the wrong dimension";
    }
  }
  return std::nullopt;
}

SphereCertificate verify_sphere(const SimplicialComplex& k, const SphereCheckOptions& options) {
  SphereCertificate cert;
  if (k.empty()) {
    cert.failure_reason = "empty complex";
    return cert;
  }
  const int d = k.dim();
  cert.euler = euler_characteristic(k);
  auto flags = is_pseudomanifold(k);
  cert.pseudomanifold = flags.pseudomanifold;
  cert.strongly_connected = flags.strongly_connected;
  const std::int64_t expected = 1 + (d % 2 == 0 ? 1 : -1);

  if (!flags.pseudomanifold) {
    cert.failure_reason = d == 0 ? "a 0-sphere has exactly two points"
                                 : "some (d-1)-face does not lie in exactly two facets";
    return cert;
  }
  if (!flags.strongly_connected) {
    cert.failure_reason = "facet adjacency graph is disconnected";
    return cert;
  }
  if (cert.euler != expected) {
    cert.failure_reason = "Euler characteristic " + std::to_string(cert.euler) + " differs from " + std::to_string(expected);
    return cert;
  }
  if (d == 0) {
    cert.level = SphereLevel::Shelled;
    cert.shelling_order = std::vector<std::size_t>{0, 1};
    return cert;
  }
  if (d == 1) {
    cert.level = SphereLevel::FullDim1;
    return cert;
  }
  if (d == 2) {
    for (Vertex v : k.vertices()) {
      if (!is_single_cycle(link(k, v))) {
        cert.level = SphereLevel::Rejected;
        cert.failure_reason = "link of vertex " + std::to_string(v) + " is not a single cycle";
        return cert;
      }
    }
    cert.level = SphereLevel::FullDim2;
    return cert;
  }
  if (options.try_shelling) {
    if (auto order = find_shelling(k, options.shelling_budget)) {
      cert.level = SphereLevel::Shelled;
      cert.shelling_order = std::move(order);
      return cert;
    }
  }
  SphereCheckOptions inner = options;
  inner.try_shelling = false;
  for (Vertex v : k.vertices()) {
    auto lc = verify_sphere(link(k, v), inner);
    if (!certifies_sphere(lc.level)) {
      std::string why = "link of vertex " + std::to_string(v) + " is " + sphere_level_name(lc.level);
      if (lc.failure_reason) why += " (" + *lc.failure_reason + ")";
      cert.level = (d == 3 && lc.level == SphereLevel::Rejected) ? SphereLevel::Rejected : SphereLevel::PartialOnly;
      cert.failure_reason = why;
      return cert;
    }
  }
  cert.level = SphereLevel::LinkVerified;
  return cert;
}

}  // namespace spansphere
