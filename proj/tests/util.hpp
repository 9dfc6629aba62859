#pragma once

#include "oracles.hpp"
#include "reglab/graph.hpp"

#include <doctest.h>

#include <vector>

inline reglab::VertexSet vs(std::size_t n, std::initializer_list<int> v) { return reglab::VertexSet::of(n, v); }

inline std::vector<oracle::Set> sets_of(const reglab::Partition& p) {
  std::vector<oracle::Set> out;
  for (const auto& s : p.parts()) out.push_back(s.to_vector());
  return out;
}

inline reglab::Graph complete_graph(int n) {
  std::vector<reglab::Edge2> e;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) e.push_back({i, j});
  return reglab::Graph(n, e);
}

inline reglab::Graph path_graph(int n) {
  std::vector<reglab::Edge2> e;
  for (int i = 0; i + 1 < n; ++i) e.push_back({i, i + 1});
  return reglab::Graph(n, e);
}

inline reglab::Rational R(long long p, long long q = 1) { return reglab::Rational(p, q); }
