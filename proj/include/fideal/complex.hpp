#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "fideal/ideal.hpp"
#include "fideal/vertex_subset.hpp"

namespace fideal {

/// A simplicial complex on the ambient vertex set {1..n}, stored by its
/// facets. Ambient vertices need not be faces. The complex whose only face
/// is the empty set is stored as the single facet {}; the facet list is
/// never empty.
class SimplicialComplex {
 public:
  /// The complex generated by `faces`: keeps the inclusion-maximal ones in
  /// canonical order. An empty list gives the complex {{}}.
  static SimplicialComplex from_faces(int n, std::vector<VertexSubset> faces);

  int n() const { return n_; }
  std::span<const VertexSubset> facets() const { return facets_; }
  bool is_void_of_vertices() const { return facets_.front().empty(); }
  bool contains_face(VertexSubset s) const;

  bool operator==(const SimplicialComplex&) const = default;

 private:
  SimplicialComplex(int n, std::vector<VertexSubset> facets)
      : n_(n), facets_(std::move(facets)) {}

  int n_;
  std::vector<VertexSubset> facets_;
};

/// Face counts by dimension, (f_0, ..., f_d). Empty for the complex {{}}.
/// Comparison is strict: vectors of different lengths are never equal.
class FVector {
 public:
  FVector() = default;
  explicit FVector(std::vector<std::uint64_t> counts) : counts_(std::move(counts)) {}

  std::span<const std::uint64_t> counts() const { return counts_; }
  std::size_t size() const { return counts_.size(); }
  int dimension() const { return static_cast<int>(counts_.size()) - 1; }

  // f_i, reading entries past the end as zero.
  std::uint64_t at_or_zero(int i) const {
    return (i >= 0 && static_cast<std::size_t>(i) < counts_.size())
               ? counts_[static_cast<std::size_t>(i)]
               : 0;
  }

  std::string to_string() const;  // "(4,3)"

  bool operator==(const FVector&) const = default;

 private:
  std::vector<std::uint64_t> counts_;
};

/// Facets are the generator supports.
SimplicialComplex facet_complex(const Ideal& ideal);

/// Faces are the subsets s of {1..n} with s not in the ideal. Built from the
/// minimal vertex covers of the generator hypergraph: facets are their
/// complements.
SimplicialComplex nonface_complex(const Ideal& ideal);

/// Exact face counts. Throws kAmbientTooLarge when n exceeds the limit.
FVector f_vector(const SimplicialComplex& complex,
                 int ambient_limit = kDefaultAmbientLimit);

/// Largest facet cardinality minus one; -1 for {{}}.
int dimension(const SimplicialComplex& complex);

/// Inverse of facet_complex. Throws kDegenerateComplex on {{}}.
Ideal facet_ideal(const SimplicialComplex& complex,
                  int ambient_limit = kDefaultAmbientLimit);

/// Stanley-Reisner ideal: generated by the minimal non-faces. Throws
/// kEmptyIdeal when the complex is the full simplex on {1..n}.
Ideal nonface_ideal(const SimplicialComplex& complex,
                    int ambient_limit = kDefaultAmbientLimit);

}  // namespace fideal
