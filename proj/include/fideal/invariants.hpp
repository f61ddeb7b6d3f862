#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "fideal/complex.hpp"
#include "fideal/ideal.hpp"

namespace fideal {

/// Minimal vertex covers of the generator hypergraph, i.e. the supports of
/// the minimal primes of the ideal.
struct PrimeDecomposition {
  std::vector<VertexSubset> covers;  // canonical order, never empty
  int height = 0;                    // smallest cover cardinality
  bool unmixed = false;              // all covers share one cardinality
};

PrimeDecomposition minimal_vertex_covers(const Ideal& ideal);

int height(const Ideal& ideal);

/// C(n, k) for small arguments; 0 when k is out of range.
std::uint64_t binomial(int n, int k);

/// Checks C(n,d) = f_{d-1}(facet complex) + f_{d-1}(non-face complex).
/// Throws kNotPure unless the ideal is pure of some degree d.
bool check_lemma_binomial(const Ideal& ideal);

/// Evaluates both sides of
///   dim(facet complex) == dim(non-face complex)  <=>  height + degree == n
/// independently and returns whether the biconditional holds.
bool check_lemma_dimension(const Ideal& ideal);

struct FIdealVerdict {
  bool f_ideal = false;
  FVector f_facet;
  FVector f_nonface;
};

/// f-vector of the facet complex versus that of the non-face complex.
FIdealVerdict is_f_ideal(const Ideal& ideal,
                         int ambient_limit = kDefaultAmbientLimit);

/// Classification of a pure degree-2 ideal against the three conditions
///   (i)   unmixed with height n-2
///   (ii)  C(n,2) even
///   (iii) m = C(n,2)/2
/// next to the f-ideal verdict from the definition. On any other input the
/// three conditions are left empty and only the verdict is meaningful.
struct TheoremReport {
  bool pure_degree2 = false;
  std::optional<bool> cond_unmixed_height;
  std::optional<bool> cond_binomial_even;
  std::optional<bool> cond_generator_count;
  bool f_ideal = false;
  FVector f_facet;
  FVector f_nonface;
  int height = 0;
  bool unmixed = false;

  // (i) and (ii) and (iii); false when not applicable.
  bool conjunction() const {
    return cond_unmixed_height.value_or(false) &&
           cond_binomial_even.value_or(false) &&
           cond_generator_count.value_or(false);
  }
  // The characterization holds for this ideal (vacuous if not pure degree 2).
  bool consistent() const { return !pure_degree2 || conjunction() == f_ideal; }
};

TheoremReport theorem_classify(const Ideal& ideal,
                               int ambient_limit = kDefaultAmbientLimit);

}  // namespace fideal
