#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace spansphere {

using Vertex = std::uint32_t;
using VertexSet = std::vector<Vertex>;

// Sorted, duplicate-free copy.
VertexSet make_set(std::span<const Vertex> vertices);
bool is_sorted_set(std::span<const Vertex> vertices);
bool includes(std::span<const Vertex> super, std::span<const Vertex> sub);
std::size_t intersection_size(std::span<const Vertex> a, std::span<const Vertex> b);
VertexSet set_union(std::span<const Vertex> a, std::span<const Vertex> b);
VertexSet set_difference(std::span<const Vertex> a, std::span<const Vertex> b);
VertexSet set_intersection(std::span<const Vertex> a, std::span<const Vertex> b);
std::string format_set(std::span<const Vertex> s);

std::uint64_t binomial(std::uint64_t n, std::uint64_t r);

// Calls fn(subset) for every r-subset of the sorted set, in lexicographic order.
template <class Fn>
void for_each_subset(std::span<const Vertex> set, std::size_t r, Fn&& fn) {
  const std::size_t n = set.size();
  if (r > n) return;
  std::vector<std::size_t> idx(r);
  for (std::size_t i = 0; i < r; ++i) idx[i] = i;
  VertexSet sub(r);
  while (true) {
    for (std::size_t i = 0; i < r; ++i) sub[i] = set[idx[i]];
    fn(std::span<const Vertex>(sub));
    std::size_t i = r;
    while (i > 0 && idx[i - 1] == n - r + i - 1) --i;
    if (i == 0) return;
    ++idx[i - 1];
    for (std::size_t j = i; j < r; ++j) idx[j] = idx[j - 1] + 1;
  }
}

// Lexicographically ordered table of equal-width sorted rows, stored flat.
class SetTable {
 public:
  SetTable() = default;
  explicit SetTable(std::size_t width) : width_(width) {}

  std::size_t width() const noexcept { return width_; }
  std::size_t size() const noexcept { return width_ == 0 ? rows_ : data_.size() / width_; }
  bool empty() const noexcept { return size() == 0; }

  std::span<const Vertex> operator[](std::size_t i) const {
    return {data_.data() + i * width_, width_};
  }
  const std::vector<Vertex>& flat() const noexcept { return data_; }

  // Appends a row; call canonicalize() before lookups.
  void push(std::span<const Vertex> row);
  void canonicalize();

  std::optional<std::size_t> find(std::span<const Vertex> row) const;
  bool contains(std::span<const Vertex> row) const { return find(row).has_value(); }
  std::vector<VertexSet> rows() const;

  friend bool operator==(const SetTable& a, const SetTable& b) {
    return a.width_ == b.width_ && a.size() == b.size() && a.data_ == b.data_;
  }

 private:
  std::size_t width_ = 0;
  std::size_t rows_ = 0;
  std::vector<Vertex> data_;
};

}  // namespace spansphere
