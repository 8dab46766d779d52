#pragma once

#include <bit>
#include <cstdint>
#include <span>
#include <vector>

namespace sigfrac {

using Vertex = int;
using VertexMask = std::uint64_t;

inline constexpr VertexMask bit(int i) noexcept { return VertexMask{1} << i; }

inline constexpr VertexMask low_bits(int n) noexcept {
  return n >= 64 ? ~VertexMask{0} : (VertexMask{1} << n) - 1;
}

inline int popcount(VertexMask m) noexcept { return std::popcount(m); }

template <typename F>
inline void for_each_bit(VertexMask m, F&& f) {
  while (m) {
    f(std::countr_zero(m));
    m &= m - 1;
  }
}

inline VertexMask mask_of(std::span<const Vertex> vertices) {
  VertexMask m = 0;
  for (Vertex v : vertices) m |= bit(v);
  return m;
}

inline std::vector<Vertex> vertices_of(VertexMask m) {
  std::vector<Vertex> out;
  out.reserve(static_cast<std::size_t>(popcount(m)));
  for_each_bit(m, [&](int v) { out.push_back(v); });
  return out;
}

}  // namespace sigfrac
