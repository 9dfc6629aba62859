#include "reglab/vertex_set.hpp"

#include "reglab/errors.hpp"

#include <algorithm>

namespace reglab {

VertexSet VertexSet::full(std::size_t universe) {
  VertexSet s(universe);
  for (std::size_t i = 0; i < universe; ++i) s.insert(static_cast<int>(i));
  return s;
}

VertexSet VertexSet::of(std::size_t universe, std::span<const int> vs) {
  VertexSet s(universe);
  for (int v : vs) {
    if (v < 0 || static_cast<std::size_t>(v) >= universe)
      throw DomainError("vertex " + std::to_string(v) + " out of range (n=" + std::to_string(universe) + ")");
    s.insert(v);
  }
  return s;
}

VertexSet VertexSet::range(std::size_t universe, int lo, int hi) {
  VertexSet s(universe);
  for (int v = lo; v < hi; ++v) s.insert(v);
  return s;
}

std::size_t VertexSet::size() const {
  std::size_t c = 0;
  for (auto x : w_) c += __builtin_popcountll(x);
  return c;
}

bool VertexSet::empty() const {
  return std::all_of(w_.begin(), w_.end(), [](std::uint64_t x) { return x == 0; });
}

int VertexSet::first() const {
  for (std::size_t i = 0; i < w_.size(); ++i)
    if (w_[i]) return static_cast<int>(i * 64 + __builtin_ctzll(w_[i]));
  return -1;
}

std::vector<int> VertexSet::to_vector() const {
  std::vector<int> out;
  for_each([&](int v) { out.push_back(v); });
  return out;
}

bool VertexSet::intersects(const VertexSet& o) const {
  for (std::size_t i = 0; i < std::min(w_.size(), o.w_.size()); ++i)
    if (w_[i] & o.w_[i]) return true;
  return false;
}

bool VertexSet::subset_of(const VertexSet& o) const {
  for (std::size_t i = 0; i < w_.size(); ++i) {
    std::uint64_t other = i < o.w_.size() ? o.w_[i] : 0;
    if (w_[i] & ~other) return false;
  }
  return true;
}

std::size_t VertexSet::intersection_size(const VertexSet& o) const {
  std::size_t c = 0;
  for (std::size_t i = 0; i < std::min(w_.size(), o.w_.size()); ++i) c += __builtin_popcountll(w_[i] & o.w_[i]);
  return c;
}

static void check_universe(const VertexSet& a, const VertexSet& b) {
  if (a.universe() != b.universe()) throw DomainError("vertex sets over different universes");
}

VertexSet& VertexSet::operator&=(const VertexSet& o) {
  check_universe(*this, o);
  for (std::size_t i = 0; i < w_.size(); ++i) w_[i] &= o.w_[i];
  return *this;
}
VertexSet& VertexSet::operator|=(const VertexSet& o) {
  check_universe(*this, o);
  for (std::size_t i = 0; i < w_.size(); ++i) w_[i] |= o.w_[i];
  return *this;
}
VertexSet& VertexSet::operator-=(const VertexSet& o) {
  check_universe(*this, o);
  for (std::size_t i = 0; i < w_.size(); ++i) w_[i] &= ~o.w_[i];
  return *this;
}
VertexSet& VertexSet::operator^=(const VertexSet& o) {
  check_universe(*this, o);
  for (std::size_t i = 0; i < w_.size(); ++i) w_[i] ^= o.w_[i];
  return *this;
}

bool operator<(const VertexSet& a, const VertexSet& b) {
  auto x = a.to_vector(), y = b.to_vector();
  return std::lexicographical_compare(x.begin(), x.end(), y.begin(), y.end());
}

std::string VertexSet::str() const {
  std::string s = "{";
  bool first = true;
  for_each([&](int v) {
    if (!first) s += ",";
    s += std::to_string(v);
    first = false;
  });
  return s + "}";
}

}  // namespace reglab
