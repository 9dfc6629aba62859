#pragma once

#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <span>
#include <string>
#include <vector>

namespace reglab {

// Fixed-universe bitset over vertices 0..n-1.
class VertexSet {
 public:
  VertexSet() = default;
  explicit VertexSet(std::size_t universe) : n_(universe), w_((universe + 63) / 64, 0) {}
  static VertexSet full(std::size_t universe);
  static VertexSet of(std::size_t universe, std::span<const int> vs);
  static VertexSet of(std::size_t universe, std::initializer_list<int> vs) {
    return of(universe, std::span<const int>(vs.begin(), vs.size()));
  }
  static VertexSet range(std::size_t universe, int lo, int hi);  // [lo, hi)

  std::size_t universe() const { return n_; }
  void insert(int v) { w_[v >> 6] |= std::uint64_t{1} << (v & 63); }
  void erase(int v) { w_[v >> 6] &= ~(std::uint64_t{1} << (v & 63)); }
  bool contains(int v) const {
    return v >= 0 && static_cast<std::size_t>(v) < n_ && (w_[v >> 6] >> (v & 63) & 1);
  }
  std::size_t size() const;
  bool empty() const;
  int first() const;  // -1 if empty
  std::vector<int> to_vector() const;
  template <class F>
  void for_each(F&& f) const {
    for (std::size_t i = 0; i < w_.size(); ++i)
      for (std::uint64_t x = w_[i]; x; x &= x - 1) f(static_cast<int>(i * 64 + __builtin_ctzll(x)));
  }

  bool intersects(const VertexSet& o) const;
  bool subset_of(const VertexSet& o) const;
  std::size_t intersection_size(const VertexSet& o) const;

  VertexSet& operator&=(const VertexSet& o);
  VertexSet& operator|=(const VertexSet& o);
  VertexSet& operator-=(const VertexSet& o);
  VertexSet& operator^=(const VertexSet& o);
  friend VertexSet operator&(VertexSet a, const VertexSet& b) { return a &= b; }
  friend VertexSet operator|(VertexSet a, const VertexSet& b) { return a |= b; }
  friend VertexSet operator-(VertexSet a, const VertexSet& b) { return a -= b; }
  friend VertexSet operator^(VertexSet a, const VertexSet& b) { return a ^= b; }
  friend bool operator==(const VertexSet&, const VertexSet&) = default;
  // orders by sorted element list, lexicographically
  friend bool operator<(const VertexSet& a, const VertexSet& b);

  const std::vector<std::uint64_t>& words() const { return w_; }
  std::string str() const;

 private:
  std::size_t n_ = 0;
  std::vector<std::uint64_t> w_;
};

}  // namespace reglab
