#include "fideal/complex.hpp"

#include <algorithm>
#include <bit>
#include <limits>

#include "fideal/error.hpp"
#include "fideal/hypergraph.hpp"

namespace fideal {
namespace {

std::vector<VertexSubset> maximal_elements(std::vector<VertexSubset> sets) {
  std::sort(sets.begin(), sets.end(), CanonicalLess{});
  sets.erase(std::unique(sets.begin(), sets.end()), sets.end());
  std::vector<VertexSubset> kept;
  // Walk from largest to smallest: a proper superset is always seen first.
  for (auto it = sets.rbegin(); it != sets.rend(); ++it) {
    const VertexSubset s = *it;
    bool dominated = std::any_of(kept.begin(), kept.end(),
                                 [s](VertexSubset k) { return s.is_subset_of(k); });
    if (!dominated) kept.push_back(s);
  }
  std::sort(kept.begin(), kept.end(), CanonicalLess{});
  return kept;
}

void check_ambient(int n, int ambient_limit) {
  const int limit = std::min(ambient_limit, kMaxAmbient);
  if (n > limit) {
    throw Error(ErrorCode::kAmbientTooLarge,
                "ambient size " + std::to_string(n) + " exceeds limit " +
                    std::to_string(limit));
  }
}

// Marks every subset of {1..n} that lies under some facet, then tallies by
// cardinality. Cost n * 2^n.
std::vector<std::uint64_t> count_by_sweep(const SimplicialComplex& c) {
  const int n = c.n();
  const std::size_t total = std::size_t{1} << n;
  std::vector<std::uint8_t> is_face(total, 0);
  for (VertexSubset f : c.facets()) is_face[f.bits()] = 1;
  for (int bit = 0; bit < n; ++bit) {
    const std::size_t mask = std::size_t{1} << bit;
    for (std::size_t s = 0; s < total; ++s) {
      if ((s & mask) != 0 && is_face[s] != 0) is_face[s ^ mask] = 1;
    }
  }
  std::vector<std::uint64_t> by_size(static_cast<std::size_t>(n) + 1, 0);
  for (std::size_t s = 1; s < total; ++s) {
    if (is_face[s] != 0) ++by_size[static_cast<std::size_t>(std::popcount(s))];
  }
  return by_size;
}

// Counts each face at the first facet (in canonical order) containing it:
// a subset of facet i is new iff it escapes every F_i & F_j with j < i.
std::vector<std::uint64_t> count_by_facets(const SimplicialComplex& c) {
  std::vector<std::uint64_t> by_size(static_cast<std::size_t>(c.n()) + 1, 0);
  const auto facets = c.facets();
  for (std::size_t i = 0; i < facets.size(); ++i) {
    const std::uint64_t f = facets[i].bits();
    std::vector<VertexSubset> overlaps;
    for (std::size_t j = 0; j < i; ++j) overlaps.push_back(facets[i] & facets[j]);
    overlaps = maximal_elements(std::move(overlaps));
    // Enumerate the nonempty submasks of f.
    for (std::uint64_t s = f; s != 0; s = (s - 1) & f) {
      const VertexSubset face(s);
      bool seen = std::any_of(overlaps.begin(), overlaps.end(),
                              [face](VertexSubset o) { return face.is_subset_of(o); });
      if (!seen) ++by_size[static_cast<std::size_t>(face.size())];
    }
  }
  return by_size;
}

}  // namespace

SimplicialComplex SimplicialComplex::from_faces(int n,
                                                std::vector<VertexSubset> faces) {
  if (n < 1 || n > kMaxAmbient) {
    throw Error(ErrorCode::kInvalidArgument,
                "ambient size must lie in 1.." + std::to_string(kMaxAmbient));
  }
  for (VertexSubset f : faces) {
    if (f.max_vertex() > n) {
      throw Error(ErrorCode::kIndexOutOfRange,
                  "vertex " + std::to_string(f.max_vertex()) +
                      " outside 1.." + std::to_string(n));
    }
  }
  if (faces.empty()) faces.push_back(VertexSubset{});
  return SimplicialComplex(n, maximal_elements(std::move(faces)));
}

bool SimplicialComplex::contains_face(VertexSubset s) const {
  return std::any_of(facets_.begin(), facets_.end(),
                     [s](VertexSubset f) { return s.is_subset_of(f); });
}

std::string FVector::to_string() const {
  std::string out = "(";
  for (std::size_t i = 0; i < counts_.size(); ++i) {
    if (i > 0) out += ',';
    out += std::to_string(counts_[i]);
  }
  return out + ")";
}

SimplicialComplex facet_complex(const Ideal& ideal) {
  const auto gens = ideal.generators();
  return SimplicialComplex::from_faces(ideal.n(), {gens.begin(), gens.end()});
}

SimplicialComplex nonface_complex(const Ideal& ideal) {
  std::vector<VertexSubset> facets;
  for (VertexSubset cover : minimal_transversals(ideal.generators())) {
    facets.push_back(cover.complement(ideal.n()));
  }
  return SimplicialComplex::from_faces(ideal.n(), std::move(facets));
}

FVector f_vector(const SimplicialComplex& complex, int ambient_limit) {
  check_ambient(complex.n(), ambient_limit);
  const int dim = dimension(complex);
  if (dim < 0) return FVector{};

  // Per-facet enumeration costs about sum_i 2^|F_i| * i; the sweep n * 2^n.
  const double sweep_cost = static_cast<double>(complex.n()) *
                            static_cast<double>(std::uint64_t{1} << complex.n());
  double facet_cost = 0;
  const auto facets = complex.facets();
  for (std::size_t i = 0; i < facets.size(); ++i) {
    facet_cost += static_cast<double>(std::uint64_t{1} << facets[i].size()) *
                  static_cast<double>(i + 1);
  }
  auto by_size = facet_cost < sweep_cost ? count_by_facets(complex)
                                         : count_by_sweep(complex);
  // by_size[k] counts faces of dimension k-1.
  return FVector(std::vector<std::uint64_t>(
      by_size.begin() + 1, by_size.begin() + 1 + (dim + 1)));
}

int dimension(const SimplicialComplex& complex) {
  int largest = 0;
  for (VertexSubset f : complex.facets()) largest = std::max(largest, f.size());
  return largest - 1;
}

Ideal facet_ideal(const SimplicialComplex& complex, int ambient_limit) {
  if (complex.is_void_of_vertices()) {
    throw Error(ErrorCode::kDegenerateComplex,
                "the complex {{}} has no facet ideal");
  }
  const auto facets = complex.facets();
  return Ideal::from_generators(complex.n(), {facets.begin(), facets.end()},
                                ambient_limit);
}

Ideal nonface_ideal(const SimplicialComplex& complex, int ambient_limit) {
  // s is a non-face iff it meets the complement of every facet.
  std::vector<VertexSubset> complements;
  for (VertexSubset f : complex.facets()) {
    complements.push_back(f.complement(complex.n()));
  }
  auto minimal_nonfaces = minimal_transversals(complements);
  if (minimal_nonfaces.empty()) {
    throw Error(ErrorCode::kEmptyIdeal,
                "the full simplex on 1.." + std::to_string(complex.n()) +
                    " has no non-faces");
  }
  return Ideal::from_generators(complex.n(), std::move(minimal_nonfaces),
                                ambient_limit);
}

}  // namespace fideal
