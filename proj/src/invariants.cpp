#include "fideal/invariants.hpp"

#include <algorithm>
#include <numeric>

#include "fideal/error.hpp"
#include "fideal/hypergraph.hpp"

namespace fideal {

PrimeDecomposition minimal_vertex_covers(const Ideal& ideal) {
  PrimeDecomposition out;
  out.covers = minimal_transversals(ideal.generators());
  // Canonical order puts the smallest covers first.
  out.height = out.covers.front().size();
  out.unmixed = out.covers.back().size() == out.height;
  return out;
}

int height(const Ideal& ideal) { return minimal_vertex_covers(ideal).height; }

std::uint64_t binomial(int n, int k) {
  if (k < 0 || n < 0 || k > n) return 0;
  k = std::min(k, n - k);
  std::uint64_t r = 1;
  for (int i = 1; i <= k; ++i) {
    // r * (n-k+i) / i is exact; dividing by the gcd first avoids overflow.
    const auto top = static_cast<std::uint64_t>(n - k + i);
    const auto g = std::gcd(r, static_cast<std::uint64_t>(i));
    r = (r / g) * (top / (static_cast<std::uint64_t>(i) / g));
  }
  return r;
}

bool check_lemma_binomial(const Ideal& ideal) {
  const auto st = stats(ideal);
  if (!st.pure_of_degree) {
    throw Error(ErrorCode::kNotPure,
                "the binomial identity needs a pure ideal: " + to_text(ideal));
  }
  const int d = *st.pure_of_degree;
  const auto verdict = is_f_ideal(ideal, kMaxAmbient);
  return binomial(ideal.n(), d) ==
         verdict.f_facet.at_or_zero(d - 1) + verdict.f_nonface.at_or_zero(d - 1);
}

bool check_lemma_dimension(const Ideal& ideal) {
  const bool dims_equal =
      dimension(facet_complex(ideal)) == dimension(nonface_complex(ideal));
  const bool sum_is_n = height(ideal) + stats(ideal).degree == ideal.n();
  return dims_equal == sum_is_n;
}

FIdealVerdict is_f_ideal(const Ideal& ideal, int ambient_limit) {
  FIdealVerdict out;
  out.f_facet = f_vector(facet_complex(ideal), ambient_limit);
  out.f_nonface = f_vector(nonface_complex(ideal), ambient_limit);
  out.f_ideal = out.f_facet == out.f_nonface;
  return out;
}

TheoremReport theorem_classify(const Ideal& ideal, int ambient_limit) {
  TheoremReport r;
  const auto st = stats(ideal);
  const auto primes = minimal_vertex_covers(ideal);
  const auto verdict = is_f_ideal(ideal, ambient_limit);
  r.f_ideal = verdict.f_ideal;
  r.f_facet = verdict.f_facet;
  r.f_nonface = verdict.f_nonface;
  r.height = primes.height;
  r.unmixed = primes.unmixed;
  r.pure_degree2 = st.pure_of_degree == 2;
  if (r.pure_degree2) {
    const int n = ideal.n();
    const std::uint64_t pairs = binomial(n, 2);
    r.cond_unmixed_height = primes.unmixed && primes.height == n - 2;
    r.cond_binomial_even = pairs % 2 == 0;
    r.cond_generator_count = 2 * st.m == pairs;
  }
  return r;
}

}  // namespace fideal
