#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "fideal/vertex_subset.hpp"

namespace fideal {

/// Inclusion-minimal elements of `subsets`, deduplicated and sorted in
/// canonical order. Throws kEmptyGenerator if any input subset is empty.
std::vector<VertexSubset> minimalize(std::span<const VertexSubset> subsets);

/// A square-free monomial ideal in x_1..x_n, held as the supports of its
/// minimal generators. Immutable once built; the generating set is always a
/// canonically sorted antichain of nonempty subsets of {1..n}.
class Ideal {
 public:
  /// Validates and minimalizes. Errors: kAmbientTooLarge when n exceeds
  /// `ambient_limit`, kEmptyIdeal for an empty list, kEmptyGenerator for an
  /// empty generator (the unit ideal), kIndexOutOfRange for a vertex > n.
  static Ideal from_generators(int n, std::vector<VertexSubset> generators,
                               int ambient_limit = kDefaultAmbientLimit);

  int n() const { return n_; }
  std::span<const VertexSubset> generators() const { return generators_; }
  std::size_t size() const { return generators_.size(); }

  bool operator==(const Ideal&) const = default;

 private:
  Ideal(int n, std::vector<VertexSubset> generators)
      : n_(n), generators_(std::move(generators)) {}

  int n_;
  std::vector<VertexSubset> generators_;
};

struct IdealStats {
  std::size_t m = 0;
  int degree = 0;
  VertexSubset support;
  // Set to d iff every generator has cardinality d and support = {1..n}.
  std::optional<int> pure_of_degree;
};

IdealStats stats(const Ideal& ideal);

/// Whether the square-free monomial with support `s` lies in the ideal.
bool contains_monomial(const Ideal& ideal, VertexSubset s);

/// Reads either the text form `n=3; x1*x2, x2*x3` or the JSON form
/// `{"n": 3, "generators": [[1,2],[2,3]]}`. The first non-blank character
/// decides which. Parse errors carry a line/column position.
Ideal parse_ideal(std::string_view text,
                  int ambient_limit = kDefaultAmbientLimit);

/// Canonical text form, accepted back by parse_ideal.
std::string to_text(const Ideal& ideal);

}  // namespace fideal
