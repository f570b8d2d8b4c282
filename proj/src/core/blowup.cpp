#include "spansphere/blowup.hpp"

#include <algorithm>
#include <charconv>
#include <numeric>

#include "spansphere/error.hpp"

namespace spansphere {

namespace {

std::int64_t parse_int(std::string_view s) {
  std::int64_t v = 0;
  auto res = std::from_chars(s.data(), s.data() + s.size(), v);
  if (res.ec != std::errc() || res.ptr != s.data() + s.size())
    fail(Errc::ParseError, "not an integer: '" + std::string(s) + "'");
  return v;
}

}  // namespace

Rational parse_rational(std::string_view text) {
  if (text.empty()) fail(Errc::ParseError, "empty rational");
  if (auto slash = text.find('/'); slash != std::string_view::npos) {
    std::int64_t p = parse_int(text.substr(0, slash));
    std::int64_t q = parse_int(text.substr(slash + 1));
    if (q == 0) fail(Errc::ParseError, "zero denominator in '" + std::string(text) + "'");
    return Rational(p, q);
  }
  if (auto dot = text.find('.'); dot != std::string_view::npos) {
    std::string_view whole = text.substr(0, dot), frac = text.substr(dot + 1);
    if (frac.size() > 15) fail(Errc::ParseError, "too many decimals in '" + std::string(text) + "'");
    bool negative = !whole.empty() && whole.front() == '-';
    std::int64_t w = whole.empty() || whole == "-" ? 0 : parse_int(whole);
    std::int64_t f = frac.empty() ? 0 : parse_int(frac);
    std::int64_t scale = 1;
    for (std::size_t i = 0; i < frac.size(); ++i) scale *= 10;
    Rational r(std::abs(w) * scale + f, scale);
    return negative ? -r : r;
  }
  return Rational(parse_int(text));
}

std::string format_rational(const Rational& r) {
  return std::to_string(r.numerator()) + "/" + std::to_string(r.denominator());
}

Blowup::Blowup(Hypergraph base, std::vector<VertexSet> parts) : base_(std::move(base)), parts_(std::move(parts)) {
  if (parts_.size() != base_.order())
    fail(Errc::BadParams, "blow-up needs one part per base vertex (" + std::to_string(base_.order()) +
                              "), got " + std::to_string(parts_.size()));
  std::vector<std::pair<Vertex, Vertex>> pairs;
  for (Vertex x = 0; x < parts_.size(); ++x) {
    parts_[x] = make_set(parts_[x]);
    if (parts_[x].empty()) fail(Errc::BadParams, "part " + std::to_string(x) + " is empty", x);
    for (Vertex v : parts_[x]) pairs.emplace_back(v, x);
  }
  std::sort(pairs.begin(), pairs.end());
  for (std::size_t i = 1; i < pairs.size(); ++i)
    if (pairs[i].first == pairs[i - 1].first)
      fail(Errc::BadParams, "host vertex " + std::to_string(pairs[i].first) + " lies in two parts", pairs[i].first);
  vertices_.reserve(pairs.size());
  owner_.reserve(pairs.size());
  for (auto& [v, x] : pairs) {
    vertices_.push_back(v);
    owner_.push_back(x);
  }
}

std::optional<Vertex> Blowup::project(Vertex v) const {
  auto it = std::lower_bound(vertices_.begin(), vertices_.end(), v);
  if (it == vertices_.end() || *it != v) return std::nullopt;
  return owner_[static_cast<std::size_t>(it - vertices_.begin())];
}

std::optional<VertexSet> Blowup::project_set(std::span<const Vertex> host_set) const {
  VertexSet out;
  for (Vertex v : host_set) {
    auto x = project(v);
    if (!x) return std::nullopt;
    out.push_back(*x);
  }
  std::sort(out.begin(), out.end());
  if (std::adjacent_find(out.begin(), out.end()) != out.end()) return std::nullopt;
  return out;
}

bool Blowup::is_edge(std::span<const Vertex> host_set) const {
  if (host_set.size() != static_cast<std::size_t>(uniformity())) return false;
  auto p = project_set(host_set);
  return p && base_.has_edge(*p);
}

std::vector<Vertex> Blowup::singleton_parts() const {
  std::vector<Vertex> out;
  for (Vertex x = 0; x < parts_.size(); ++x)
    if (parts_[x].size() == 1) out.push_back(x);
  return out;
}

std::optional<Vertex> Blowup::singleton() const {
  auto s = singleton_parts();
  if (s.empty()) return std::nullopt;
  return s.front();
}

bool Blowup::is_nearly_regular(const Rational& g, const Rational& mm) const {
  std::size_t singles = 0;
  for (const auto& p : parts_) {
    if (p.size() == 1) {
      ++singles;
      continue;
    }
    Rational size(static_cast<std::int64_t>(p.size()));
    if (size < (Rational(1) - g) * mm || size > (Rational(1) + g) * mm) return false;
  }
  return singles <= 1;
}

std::uint64_t Blowup::host_edge_count() const {
  std::uint64_t total = 0;
  for (std::size_t i = 0; i < base_.edge_count(); ++i) {
    std::uint64_t prod = 1;
    for (Vertex x : base_.edge(i)) prod *= parts_[x].size();
    total += prod;
  }
  return total;
}

Hypergraph Blowup::materialize(std::uint64_t max_edges) const {
  if (host_edge_count() > max_edges)
    fail(Errc::BudgetExceeded, "blow-up host has " + std::to_string(host_edge_count()) + " edges");
  const std::size_t k = static_cast<std::size_t>(uniformity());
  std::vector<Vertex> flat;
  for (std::size_t i = 0; i < base_.edge_count(); ++i) {
    auto e = base_.edge(i);
    std::vector<std::size_t> idx(k, 0);
    bool more = true;
    while (more) {
      for (std::size_t j = 0; j < k; ++j) flat.push_back(parts_[e[j]][idx[j]]);
      more = false;
      for (std::size_t j = k; j-- > 0;) {
        if (++idx[j] < parts_[e[j]].size()) {
          more = true;
          break;
        }
        idx[j] = 0;
      }
    }
  }
  return Hypergraph::from_flat(uniformity(), host_order(), flat);
}

}  // namespace spansphere
