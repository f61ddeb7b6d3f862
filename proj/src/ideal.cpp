#include "fideal/ideal.hpp"

#include <algorithm>

#include "fideal/error.hpp"

namespace fideal {

std::string_view to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::kParse: return "ParseError";
    case ErrorCode::kIndexOutOfRange: return "IndexOutOfRange";
    case ErrorCode::kEmptyIdeal: return "EmptyIdeal";
    case ErrorCode::kEmptyGenerator: return "EmptyGenerator";
    case ErrorCode::kAmbientTooLarge: return "AmbientTooLarge";
    case ErrorCode::kDegenerateComplex: return "DegenerateComplex";
    case ErrorCode::kNotPure: return "NotPure";
    case ErrorCode::kInvalidArgument: return "InvalidArgument";
    case ErrorCode::kIo: return "IoError";
  }
  return "Error";
}

std::vector<VertexSubset> minimalize(std::span<const VertexSubset> subsets) {
  std::vector<VertexSubset> sorted(subsets.begin(), subsets.end());
  if (std::any_of(sorted.begin(), sorted.end(),
                  [](VertexSubset s) { return s.empty(); })) {
    throw Error(ErrorCode::kEmptyGenerator, "generator with empty support");
  }
  std::sort(sorted.begin(), sorted.end(), CanonicalLess{});
  sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());

  // Any proper subset of s sorts before s, so one forward pass suffices.
  std::vector<VertexSubset> kept;
  for (VertexSubset s : sorted) {
    bool dominated = std::any_of(kept.begin(), kept.end(),
                                 [s](VertexSubset k) { return k.is_subset_of(s); });
    if (!dominated) kept.push_back(s);
  }
  return kept;
}

Ideal Ideal::from_generators(int n, std::vector<VertexSubset> generators,
                             int ambient_limit) {
  if (n < 1) {
    throw Error(ErrorCode::kInvalidArgument,
                "ambient size must be positive, got " + std::to_string(n));
  }
  if (n > std::min(ambient_limit, kMaxAmbient)) {
    throw Error(ErrorCode::kAmbientTooLarge,
                "ambient size " + std::to_string(n) + " exceeds limit " +
                    std::to_string(std::min(ambient_limit, kMaxAmbient)));
  }
  if (generators.empty()) {
    throw Error(ErrorCode::kEmptyIdeal, "ideal has no generators");
  }
  for (VertexSubset g : generators) {
    if (g.max_vertex() > n) {
      throw Error(ErrorCode::kIndexOutOfRange,
                  "variable x" + std::to_string(g.max_vertex()) +
                      " outside x1..x" + std::to_string(n));
    }
  }
  return Ideal(n, minimalize(generators));
}

IdealStats stats(const Ideal& ideal) {
  IdealStats out;
  out.m = ideal.size();
  bool same_degree = true;
  const int first = ideal.generators().front().size();
  for (VertexSubset g : ideal.generators()) {
    out.degree = std::max(out.degree, g.size());
    out.support |= g;
    same_degree = same_degree && g.size() == first;
  }
  if (same_degree && out.support == VertexSubset::full(ideal.n())) {
    out.pure_of_degree = first;
  }
  return out;
}

bool contains_monomial(const Ideal& ideal, VertexSubset s) {
  for (VertexSubset g : ideal.generators()) {
    if (g.is_subset_of(s)) return true;
  }
  return false;
}

std::string to_text(const Ideal& ideal) {
  std::string out = "n=" + std::to_string(ideal.n()) + ";";
  bool first_gen = true;
  for (VertexSubset g : ideal.generators()) {
    out += first_gen ? " " : ", ";
    first_gen = false;
    bool first_var = true;
    for (int v : g.vertices()) {
      if (!first_var) out += '*';
      first_var = false;
      out += 'x';
      out += std::to_string(v);
    }
  }
  return out;
}

}  // namespace fideal
