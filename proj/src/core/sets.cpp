#include "spansphere/sets.hpp"

#include <algorithm>
#include <numeric>

namespace spansphere {

VertexSet make_set(std::span<const Vertex> vertices) {
  VertexSet s(vertices.begin(), vertices.end());
  std::sort(s.begin(), s.end());
  s.erase(std::unique(s.begin(), s.end()), s.end());
  return s;
}

bool is_sorted_set(std::span<const Vertex> vertices) {
  for (std::size_t i = 1; i < vertices.size(); ++i)
    if (vertices[i - 1] >= vertices[i]) return false;
  return true;
}

bool includes(std::span<const Vertex> super, std::span<const Vertex> sub) {
  return std::includes(super.begin(), super.end(), sub.begin(), sub.end());
}

std::size_t intersection_size(std::span<const Vertex> a, std::span<const Vertex> b) {
  std::size_t i = 0, j = 0, c = 0;
  while (i < a.size() && j < b.size()) {
    if (a[i] < b[j]) {
      ++i;
    } else if (b[j] < a[i]) {
      ++j;
    } else {
      ++c;
      ++i;
      ++j;
    }
  }
  return c;
}

VertexSet set_union(std::span<const Vertex> a, std::span<const Vertex> b) {
  VertexSet out;
  std::set_union(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
  return out;
}

VertexSet set_difference(std::span<const Vertex> a, std::span<const Vertex> b) {
  VertexSet out;
  std::set_difference(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
  return out;
}

VertexSet set_intersection(std::span<const Vertex> a, std::span<const Vertex> b) {
  VertexSet out;
  std::set_intersection(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
  return out;
}

std::string format_set(std::span<const Vertex> s) {
  std::string out = "{";
  for (std::size_t i = 0; i < s.size(); ++i) {
    if (i) out += ',';
    out += std::to_string(s[i]);
  }
  out += '}';
  return out;
}

std::uint64_t binomial(std::uint64_t n, std::uint64_t r) {
  if (r > n) return 0;
  r = std::min(r, n - r);
  unsigned __int128 acc = 1;
  for (std::uint64_t i = 1; i <= r; ++i) {
    acc = acc * (n - r + i) / i;
    if (acc > UINT64_MAX) return UINT64_MAX;
  }
  return static_cast<std::uint64_t>(acc);
}

void SetTable::push(std::span<const Vertex> row) {
  data_.insert(data_.end(), row.begin(), row.end());
  ++rows_;
}

void SetTable::canonicalize() {
  const std::size_t n = size();
  if (width_ == 0) {
    rows_ = std::min<std::size_t>(rows_, 1);
    return;
  }
  std::vector<std::size_t> order(n);
  std::iota(order.begin(), order.end(), 0);
  auto less = [&](std::size_t a, std::size_t b) {
    return std::lexicographical_compare(data_.begin() + a * width_, data_.begin() + (a + 1) * width_,
                                        data_.begin() + b * width_, data_.begin() + (b + 1) * width_);
  };
  auto equal = [&](std::size_t a, std::size_t b) {
    return std::equal(data_.begin() + a * width_, data_.begin() + (a + 1) * width_,
                      data_.begin() + b * width_);
  };
  std::sort(order.begin(), order.end(), less);
  order.erase(std::unique(order.begin(), order.end(), equal), order.end());
  std::vector<Vertex> out;
  out.reserve(order.size() * width_);
  for (std::size_t r : order)
    out.insert(out.end(), data_.begin() + r * width_, data_.begin() + (r + 1) * width_);
  data_ = std::move(out);
  rows_ = order.size();
}

std::optional<std::size_t> SetTable::find(std::span<const Vertex> row) const {
  if (row.size() != width_) return std::nullopt;
  std::size_t lo = 0, hi = size();
  while (lo < hi) {
    std::size_t mid = (lo + hi) / 2;
    auto r = (*this)[mid];
    if (std::lexicographical_compare(r.begin(), r.end(), row.begin(), row.end()))
      lo = mid + 1;
    else
      hi = mid;
  }
  if (lo < size()) {
    auto r = (*this)[lo];
    if (std::equal(r.begin(), r.end(), row.begin())) return lo;
  }
  return std::nullopt;
}

std::vector<VertexSet> SetTable::rows() const {
  std::vector<VertexSet> out;
  out.reserve(size());
  for (std::size_t i = 0; i < size(); ++i) out.emplace_back((*this)[i].begin(), (*this)[i].end());
  return out;
}

}  // namespace spansphere
