#pragma once

#include <cstddef>
#include <cstdint>
#include <filesystem>
#include <functional>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "fideal/ideal.hpp"
#include "fideal/invariants.hpp"
#include "fideal/json_io.hpp"

namespace fideal {

/// Largest n for which pure degree-d ideals may be enumerated exhaustively:
/// the largest n with C(n,d) <= C(7,2) = 21 candidate generators. For d = 2
/// this is 7; for d = 3 it is 6.
int default_exhaustive_limit(int degree);

/// Calls `visit` once for every pure square-free ideal of degree d on
/// {1..n}: every nonempty family of d-subsets whose union is {1..n}. Order
/// is deterministic: the family is read off the bits of an increasing
/// counter over the d-subsets in canonical order.
///
/// Requires 3 <= n and 2 <= d < n (kInvalidArgument). Throws
/// kAmbientTooLarge when n exceeds `exhaustive_limit`, which defaults to
/// default_exhaustive_limit(d).
void for_each_pure(int n, int d, const std::function<void(const Ideal&)>& visit,
                   std::optional<int> exhaustive_limit = std::nullopt);

std::vector<Ideal> enumerate_pure(int n, int d,
                                  std::optional<int> exhaustive_limit = std::nullopt);

struct CatalogEntry {
  Ideal ideal;
  TheoremReport report;
};

/// {"ideal": {...}, "report": {...}} without a trailing newline.
std::string catalog_line(const Ideal& ideal, const TheoremReport& report);

/// Writes one catalog line per entry, in the given order. An empty span
/// still creates the (empty) file. Throws kIo with the path on failure.
void write_catalog(std::span<const CatalogEntry> entries,
                   const std::filesystem::path& path);

struct CensusOptions {
  int n = 0;
  int degree = 2;
  // Draw this many ideals uniformly at random instead of exhausting.
  std::optional<std::uint64_t> sample;
  // Required whenever `sample` is set.
  std::optional<std::uint64_t> seed;
  // 0 means one worker per hardware thread.
  unsigned threads = 0;
  std::optional<int> exhaustive_limit;
  // Ambient ceiling applied to sampled runs.
  int ambient_limit = kDefaultAmbientLimit;
  // Only examine ideals with exactly this many generators.
  std::optional<std::size_t> generator_count;
  // Write a JSONL catalog of every examined ideal here.
  std::optional<std::filesystem::path> catalog;
};

/// How often a combination of the three degree-2 conditions held, and how
/// many of those ideals were f-ideals. `conditions` reads like "i+iii".
struct ConditionSubsetTally {
  std::string conditions;
  std::uint64_t satisfied = 0;
  std::uint64_t f_ideals = 0;
};

struct CensusRow {
  int n = 0;
  int degree = 0;
  bool sampled = false;
  std::optional<std::uint64_t> seed;
  std::uint64_t total_pure = 0;
  std::uint64_t f_ideal_count = 0;
  // Cross-checks against the degree-2 characterization; only for degree 2.
  bool theorem_checked = false;
  std::uint64_t theorem_agreements = 0;
  // Text form of every ideal where the characterization disagreed with the
  // definition. Expected empty.
  std::vector<std::string> mismatches;
  // Pure ideals violating C(n,d) = f_{d-1}(facet) + f_{d-1}(non-face).
  std::uint64_t lemma_binomial_violations = 0;
  std::vector<ConditionSubsetTally> condition_subsets;
};

/// Classifies every pure ideal of the requested shape (or a seeded uniform
/// sample of them). Output, including the catalog file, is independent of
/// the worker count.
CensusRow run_census(const CensusOptions& options);

Json to_json(const CensusRow& row);

}  // namespace fideal
