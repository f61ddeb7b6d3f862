#pragma once

#include <bit>
#include <compare>
#include <cstdint>
#include <functional>
#include <initializer_list>
#include <vector>

namespace fideal {

// Largest ambient vertex count a VertexSubset can represent.
inline constexpr int kMaxAmbient = 63;

// Default ceiling on the ambient size accepted by constructors and by
// anything that sweeps all 2^n subsets.
inline constexpr int kDefaultAmbientLimit = 24;

/// A subset of the vertex set {1..n}. Doubles as a face of a simplicial
/// complex and as the support of a square-free monomial. Vertex v is stored
/// at bit v-1, so the set {1,2} has numeric value 3.
class VertexSubset {
 public:
  constexpr VertexSubset() = default;
  constexpr explicit VertexSubset(std::uint64_t bits) : bits_(bits) {}
  VertexSubset(std::initializer_list<int> vertices) {
    for (int v : vertices) bits_ |= bit_of(v);
  }

  static VertexSubset from_vertices(const std::vector<int>& vertices) {
    VertexSubset s;
    for (int v : vertices) s.bits_ |= bit_of(v);
    return s;
  }

  // {1..n}
  static constexpr VertexSubset full(int n) {
    return VertexSubset(n >= 64 ? ~std::uint64_t{0}
                                : (std::uint64_t{1} << n) - 1);
  }

  constexpr std::uint64_t bits() const { return bits_; }
  constexpr int size() const { return std::popcount(bits_); }
  constexpr bool empty() const { return bits_ == 0; }
  constexpr bool contains(int v) const { return (bits_ & bit_of(v)) != 0; }

  // Largest vertex index present, 0 for the empty set.
  constexpr int max_vertex() const { return 64 - std::countl_zero(bits_); }

  constexpr bool is_subset_of(VertexSubset other) const {
    return (bits_ & ~other.bits_) == 0;
  }
  constexpr bool intersects(VertexSubset other) const {
    return (bits_ & other.bits_) != 0;
  }

  constexpr VertexSubset operator|(VertexSubset o) const {
    return VertexSubset(bits_ | o.bits_);
  }
  constexpr VertexSubset operator&(VertexSubset o) const {
    return VertexSubset(bits_ & o.bits_);
  }
  constexpr VertexSubset without(VertexSubset o) const {
    return VertexSubset(bits_ & ~o.bits_);
  }
  constexpr VertexSubset complement(int n) const { return full(n).without(*this); }

  VertexSubset& operator|=(VertexSubset o) {
    bits_ |= o.bits_;
    return *this;
  }

  // Ascending 1-based vertex indices.
  std::vector<int> vertices() const {
    std::vector<int> out;
    out.reserve(static_cast<std::size_t>(size()));
    for (std::uint64_t b = bits_; b != 0; b &= b - 1) {
      out.push_back(std::countr_zero(b) + 1);
    }
    return out;
  }

  constexpr bool operator==(const VertexSubset&) const = default;

 private:
  static constexpr std::uint64_t bit_of(int v) {
    return (v >= 1 && v <= 64) ? (std::uint64_t{1} << (v - 1)) : 0;
  }

  std::uint64_t bits_ = 0;
};

// Canonical order: by cardinality, then by numeric bit value.
struct CanonicalLess {
  constexpr bool operator()(VertexSubset a, VertexSubset b) const {
    if (a.size() != b.size()) return a.size() < b.size();
    return a.bits() < b.bits();
  }
};

}  // namespace fideal

template <>
struct std::hash<fideal::VertexSubset> {
  std::size_t operator()(fideal::VertexSubset s) const noexcept {
    return std::hash<std::uint64_t>{}(s.bits());
  }
};
