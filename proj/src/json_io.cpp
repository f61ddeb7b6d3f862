#include "fideal/json_io.hpp"

namespace fideal {
namespace {

Json subsets_to_json(std::span<const VertexSubset> sets) {
  Json out = Json::array();
  for (VertexSubset s : sets) out.push_back(subset_to_json(s));
  return out;
}

Json optional_to_json(const std::optional<bool>& v) {
  return v ? Json(*v) : Json(nullptr);
}

}  // namespace

Json subset_to_json(VertexSubset s) {
  Json out = Json::array();
  for (int v : s.vertices()) out.push_back(v);
  return out;
}

Json to_json(const Ideal& ideal) {
  Json out;
  out["n"] = ideal.n();
  out["generators"] = subsets_to_json(ideal.generators());
  return out;
}

Json to_json(const SimplicialComplex& complex) {
  Json out;
  out["n"] = complex.n();
  out["facets"] = subsets_to_json(complex.facets());
  return out;
}

Json to_json(const FVector& f) {
  Json out = Json::array();
  for (std::uint64_t c : f.counts()) out.push_back(c);
  return out;
}

Json to_json(const PrimeDecomposition& primes) {
  Json out;
  out["covers"] = subsets_to_json(primes.covers);
  out["height"] = primes.height;
  out["unmixed"] = primes.unmixed;
  return out;
}

Json to_json(const TheoremReport& report) {
  Json out;
  out["pure_degree2"] = report.pure_degree2;
  out["cond_i"] = optional_to_json(report.cond_unmixed_height);
  out["cond_ii"] = optional_to_json(report.cond_binomial_even);
  out["cond_iii"] = optional_to_json(report.cond_generator_count);
  out["f_ideal"] = report.f_ideal;
  out["f_facet"] = to_json(report.f_facet);
  out["f_nonface"] = to_json(report.f_nonface);
  out["height"] = report.height;
  out["unmixed"] = report.unmixed;
  return out;
}

}  // namespace fideal
