#include "fideal/enumeration.hpp"

#include <algorithm>
#include <array>
#include <atomic>
#include <bit>
#include <cerrno>
#include <cstring>
#include <exception>
#include <fstream>
#include <random>
#include <thread>

#include "fideal/error.hpp"

namespace fideal {
namespace {

constexpr std::uint64_t kMasksPerChunk = std::uint64_t{1} << 12;
constexpr std::uint64_t kDrawsPerChunk = 1024;
constexpr std::size_t kChunksPerWorkerBatch = 8;

void check_shape(int n, int d) {
  if (n < 3 || d < 2 || d >= n) {
    throw Error(ErrorCode::kInvalidArgument,
                "pure ideal shape needs 3 <= n and 2 <= d < n, got n=" +
                    std::to_string(n) + " d=" + std::to_string(d));
  }
}

// The d-subsets of {1..n} in canonical order, plus helpers to turn a
// selection of them into an Ideal.
class PureSpace {
 public:
  PureSpace(int n, int d) : n_(n), full_(VertexSubset::full(n)) {
    // Same cardinality, so canonical order is numeric order.
    const std::uint64_t limit = std::uint64_t{1} << n;
    for (std::uint64_t s = (std::uint64_t{1} << d) - 1; s < limit;) {
      candidates_.push_back(VertexSubset(s));
      // Gosper's hack: next integer with the same popcount.
      const std::uint64_t c = s & (~s + 1);
      const std::uint64_t r = s + c;
      s = (((r ^ s) >> 2) / c) | r;
    }
  }

  std::size_t size() const { return candidates_.size(); }

  // Generators selected by the bits of `mask`, or nullopt when the family
  // misses a vertex.
  std::optional<Ideal> from_mask(std::uint64_t mask) const {
    std::vector<VertexSubset> gens;
    VertexSubset support;
    for (std::uint64_t b = mask; b != 0; b &= b - 1) {
      const VertexSubset g = candidates_[static_cast<std::size_t>(std::countr_zero(b))];
      gens.push_back(g);
      support |= g;
    }
    if (gens.empty() || support != full_) return std::nullopt;
    return Ideal::from_generators(n_, std::move(gens), kMaxAmbient);
  }

  // Uniform over pure ideals (with `count` generators, if given), by
  // rejection from independent fair coin flips per candidate.
  Ideal draw(std::mt19937_64& rng, std::optional<std::size_t> count) const {
    for (;;) {
      std::vector<VertexSubset> gens;
      VertexSubset support;
      std::uint64_t word = 0;
      for (std::size_t i = 0; i < candidates_.size(); ++i) {
        if (i % 64 == 0) word = rng();
        if (((word >> (i % 64)) & 1U) != 0) {
          gens.push_back(candidates_[i]);
          support |= candidates_[i];
        }
      }
      if (gens.empty() || support != full_) continue;
      if (count && gens.size() != *count) continue;
      return Ideal::from_generators(n_, std::move(gens), kMaxAmbient);
    }
  }

 private:
  int n_;
  VertexSubset full_;
  std::vector<VertexSubset> candidates_;
};

std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

std::string condition_name(unsigned subset) {
  static constexpr const char* kNames[] = {"i", "ii", "iii"};
  std::string out;
  for (unsigned c = 0; c < 3; ++c) {
    if ((subset & (1U << c)) == 0) continue;
    if (!out.empty()) out += '+';
    out += kNames[c];
  }
  return out;
}

struct Tally {
  std::uint64_t total = 0;
  std::uint64_t f_ideals = 0;
  std::uint64_t agreements = 0;
  std::uint64_t lemma_violations = 0;
  std::vector<std::string> mismatches;
  // Indexed by a bitmask over conditions (i), (ii), (iii).
  std::array<std::uint64_t, 8> satisfied{};
  std::array<std::uint64_t, 8> satisfied_f{};
  std::string catalog;

  void record(const Ideal& ideal, const TheoremReport& report, int degree,
              bool keep_lines) {
    ++total;
    if (report.f_ideal) ++f_ideals;
    const bool lemma_ok =
        binomial(ideal.n(), degree) == report.f_facet.at_or_zero(degree - 1) +
                                           report.f_nonface.at_or_zero(degree - 1);
    if (!lemma_ok) ++lemma_violations;
    if (report.pure_degree2) {
      if (report.consistent()) {
        ++agreements;
      } else {
        mismatches.push_back(to_text(ideal));
      }
      const unsigned held = (report.cond_unmixed_height.value_or(false) ? 1U : 0U) |
                            (report.cond_binomial_even.value_or(false) ? 2U : 0U) |
                            (report.cond_generator_count.value_or(false) ? 4U : 0U);
      for (unsigned s = 1; s < 8; ++s) {
        if ((held & s) != s) continue;
        ++satisfied[s];
        if (report.f_ideal) ++satisfied_f[s];
      }
    }
    if (keep_lines) {
      catalog += catalog_line(ideal, report);
      catalog += '\n';
    }
  }

  void merge(Tally&& other) {
    total += other.total;
    f_ideals += other.f_ideals;
    agreements += other.agreements;
    lemma_violations += other.lemma_violations;
    for (auto& m : other.mismatches) mismatches.push_back(std::move(m));
    for (std::size_t s = 0; s < satisfied.size(); ++s) {
      satisfied[s] += other.satisfied[s];
      satisfied_f[s] += other.satisfied_f[s];
    }
  }
};

class CatalogFile {
 public:
  explicit CatalogFile(const std::filesystem::path& path)
      : path_(path), out_(path, std::ios::binary | std::ios::trunc) {
    if (!out_) fail("cannot open");
  }

  void write(const std::string& data) {
    out_ << data;
    if (!out_) fail("cannot write");
  }

  void close() {
    out_.close();
    if (!out_) fail("cannot close");
  }

 private:
  [[noreturn]] void fail(const char* what) const {
    throw Error(ErrorCode::kIo, std::string(what) + " catalog '" +
                                    path_.string() + "': " + std::strerror(errno));
  }

  std::filesystem::path path_;
  std::ofstream out_;
};

// Runs `work(chunk)` for chunks [0, chunks) on `threads` workers and hands
// the results to `consume` in chunk order.
template <typename Work, typename Consume>
void run_chunks(std::uint64_t chunks, unsigned threads, Work work,
                Consume consume) {
  const std::uint64_t batch = std::uint64_t{threads} * kChunksPerWorkerBatch;
  for (std::uint64_t first = 0; first < chunks; first += batch) {
    const std::uint64_t count = std::min(batch, chunks - first);
    std::vector<Tally> results(static_cast<std::size_t>(count));
    std::atomic<std::uint64_t> next{0};
    std::exception_ptr failure;
    std::atomic<bool> failed{false};
    auto worker = [&] {
      for (std::uint64_t i = next++; i < count && !failed; i = next++) {
        try {
          results[static_cast<std::size_t>(i)] = work(first + i);
        } catch (...) {
          if (!failed.exchange(true)) failure = std::current_exception();
        }
      }
    };
    const unsigned spawn = static_cast<unsigned>(
        std::min<std::uint64_t>(threads, count));
    std::vector<std::jthread> pool;
    for (unsigned t = 1; t < spawn; ++t) pool.emplace_back(worker);
    worker();
    pool.clear();
    if (failure) std::rethrow_exception(failure);
    for (auto& r : results) consume(std::move(r));
  }
}

}  // namespace

int default_exhaustive_limit(int degree) {
  const std::uint64_t ceiling = binomial(7, 2);
  int n = degree;
  while (binomial(n + 1, degree) <= ceiling) ++n;
  return n;
}

void for_each_pure(int n, int d, const std::function<void(const Ideal&)>& visit,
                   std::optional<int> exhaustive_limit) {
  check_shape(n, d);
  const int limit = exhaustive_limit.value_or(default_exhaustive_limit(d));
  if (n > limit || binomial(n, d) > 62) {
    throw Error(ErrorCode::kAmbientTooLarge,
                "n=" + std::to_string(n) + " exceeds the exhaustive limit " +
                    std::to_string(limit) + " for degree " + std::to_string(d) +
                    "; use sampling");
  }
  const PureSpace space(n, d);
  const std::uint64_t end = std::uint64_t{1} << space.size();
  for (std::uint64_t mask = 1; mask < end; ++mask) {
    if (auto ideal = space.from_mask(mask)) visit(*ideal);
  }
}

std::vector<Ideal> enumerate_pure(int n, int d, std::optional<int> exhaustive_limit) {
  std::vector<Ideal> out;
  for_each_pure(n, d, [&](const Ideal& i) { out.push_back(i); }, exhaustive_limit);
  return out;
}

std::string catalog_line(const Ideal& ideal, const TheoremReport& report) {
  Json line;
  line["ideal"] = to_json(ideal);
  line["report"] = to_json(report);
  return line.dump();
}

void write_catalog(std::span<const CatalogEntry> entries,
                   const std::filesystem::path& path) {
  CatalogFile file(path);
  for (const auto& e : entries) file.write(catalog_line(e.ideal, e.report) + "\n");
  file.close();
}

CensusRow run_census(const CensusOptions& options) {
  const int n = options.n;
  const int d = options.degree;
  check_shape(n, d);
  if (options.sample && !options.seed) {
    throw Error(ErrorCode::kInvalidArgument, "sampling requires an explicit seed");
  }
  if (options.sample) {
    const int limit = std::min(options.ambient_limit, kMaxAmbient);
    if (n > limit) {
      throw Error(ErrorCode::kAmbientTooLarge,
                  "n=" + std::to_string(n) + " exceeds the ambient limit " +
                      std::to_string(limit));
    }
    if (options.generator_count &&
        (*options.generator_count == 0 ||
         *options.generator_count > binomial(n, d))) {
      throw Error(ErrorCode::kInvalidArgument,
                  "no pure ideal has the requested generator count");
    }
  } else {
    const int limit = options.exhaustive_limit.value_or(default_exhaustive_limit(d));
    if (n > limit || binomial(n, d) > 62) {
      throw Error(ErrorCode::kAmbientTooLarge,
                  "n=" + std::to_string(n) + " exceeds the exhaustive limit " +
                      std::to_string(limit) + " for degree " + std::to_string(d) +
                      "; pass a sample size and seed");
    }
  }
  const PureSpace space(n, d);

  const unsigned threads =
      options.threads != 0 ? options.threads
                           : std::max(1U, std::thread::hardware_concurrency());
  const bool keep_lines = options.catalog.has_value();
  std::optional<CatalogFile> catalog;
  if (keep_lines) catalog.emplace(*options.catalog);

  const auto classify_into = [&](Tally& t, const Ideal& ideal) {
    t.record(ideal, theorem_classify(ideal, kMaxAmbient), d, keep_lines);
  };

  std::function<Tally(std::uint64_t)> work;
  std::uint64_t chunks = 0;
  if (options.sample) {
    const std::uint64_t draws = *options.sample;
    const std::uint64_t seed = *options.seed;
    chunks = (draws + kDrawsPerChunk - 1) / kDrawsPerChunk;
    work = [&, draws, seed](std::uint64_t chunk) {
      // Each chunk owns a stream seeded from (seed, chunk), so the draws do
      // not depend on which worker runs it.
      std::mt19937_64 rng(splitmix64(seed ^ splitmix64(chunk)));
      const std::uint64_t begin = chunk * kDrawsPerChunk;
      const std::uint64_t end = std::min(draws, begin + kDrawsPerChunk);
      Tally t;
      for (std::uint64_t i = begin; i < end; ++i) {
        classify_into(t, space.draw(rng, options.generator_count));
      }
      return t;
    };
  } else {
    const std::uint64_t masks = std::uint64_t{1} << space.size();
    chunks = (masks + kMasksPerChunk - 1) / kMasksPerChunk;
    work = [&, masks](std::uint64_t chunk) {
      const std::uint64_t begin = std::max<std::uint64_t>(1, chunk * kMasksPerChunk);
      const std::uint64_t end = std::min(masks, (chunk + 1) * kMasksPerChunk);
      Tally t;
      for (std::uint64_t mask = begin; mask < end; ++mask) {
        if (options.generator_count &&
            static_cast<std::size_t>(std::popcount(mask)) != *options.generator_count) {
          continue;
        }
        if (auto ideal = space.from_mask(mask)) classify_into(t, *ideal);
      }
      return t;
    };
  }

  Tally total;
  run_chunks(chunks, threads, work, [&](Tally&& t) {
    if (catalog) catalog->write(t.catalog);
    total.merge(std::move(t));
  });
  if (catalog) catalog->close();

  CensusRow row;
  row.n = n;
  row.degree = d;
  row.sampled = options.sample.has_value();
  row.seed = options.sample ? options.seed : std::nullopt;
  row.total_pure = total.total;
  row.f_ideal_count = total.f_ideals;
  row.theorem_checked = d == 2;
  row.theorem_agreements = total.agreements;
  row.mismatches = std::move(total.mismatches);
  row.lemma_binomial_violations = total.lemma_violations;
  if (row.theorem_checked) {
    for (unsigned s = 1; s < 8; ++s) {
      row.condition_subsets.push_back(
          {condition_name(s), total.satisfied[s], total.satisfied_f[s]});
    }
  }
  return row;
}

Json to_json(const CensusRow& row) {
  Json out;
  out["n"] = row.n;
  out["degree"] = row.degree;
  out["mode"] = row.sampled ? "sampled" : "exhaustive";
  out["seed"] = row.seed ? Json(*row.seed) : Json(nullptr);
  out["total_pure"] = row.total_pure;
  out["f_ideal_count"] = row.f_ideal_count;
  out["theorem_checked"] = row.theorem_checked;
  out["theorem_agreements"] = row.theorem_agreements;
  out["mismatches"] = row.mismatches;
  out["lemma_binomial_violations"] = row.lemma_binomial_violations;
  Json subsets = Json::array();
  for (const auto& t : row.condition_subsets) {
    Json entry;
    entry["conditions"] = t.conditions;
    entry["satisfied"] = t.satisfied;
    entry["f_ideals"] = t.f_ideals;
    subsets.push_back(entry);
  }
  out["condition_subsets"] = subsets;
  out["counts_source"] = "computed by this run; no reference values exist";
  return out;
}

}  // namespace fideal
