// fideal: command-line front end.
//
// Exit status: 0 success or affirmative verdict, 1 negative verdict,
// 2 usage or input error, 3 internal invariant violation.

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <iterator>
#include <optional>
#include <sstream>
#include <string>

#include "CLI11.hpp"
#include "fideal/complex.hpp"
#include "fideal/enumeration.hpp"
#include "fideal/error.hpp"
#include "fideal/ideal.hpp"
#include "fideal/invariants.hpp"
#include "fideal/json_io.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitNegative = 1;
constexpr int kExitInput = 2;
constexpr int kExitInvariant = 3;

struct InputOptions {
  std::string inline_text;
  std::string file;
  std::string format = "text";
  int limit = fideal::kDefaultAmbientLimit;
};

struct CensusFlags {
  int n = 0;
  int degree = 2;
  std::optional<std::uint64_t> sample;
  std::optional<std::uint64_t> seed;
  unsigned threads = 0;
  std::optional<int> limit;
  std::optional<std::size_t> generators;
  std::string out;
  std::string format = "text";
};

std::string read_input(const InputOptions& in) {
  const bool has_inline = !in.inline_text.empty();
  const bool has_file = !in.file.empty();
  if (has_inline == has_file) {
    throw fideal::Error(fideal::ErrorCode::kInvalidArgument,
                        "give exactly one ideal source: an inline ideal, '-' "
                        "for standard input, or --file PATH");
  }
  if (has_inline && in.inline_text != "-") return in.inline_text;
  if (has_inline) {
    return {std::istreambuf_iterator<char>(std::cin), std::istreambuf_iterator<char>()};
  }
  std::ifstream f(in.file, std::ios::binary);
  if (!f) {
    throw fideal::Error(fideal::ErrorCode::kIo, "cannot read '" + in.file + "'");
  }
  std::ostringstream buf;
  buf << f.rdbuf();
  return buf.str();
}

std::string join_subsets(std::span<const fideal::VertexSubset> sets) {
  fideal::Json arr = fideal::Json::array();
  for (auto s : sets) arr.push_back(fideal::subset_to_json(s));
  return arr.dump();
}

std::string yes_no(bool b) { return b ? "yes" : "no"; }

std::string condition_text(const std::optional<bool>& c) {
  return c ? yes_no(*c) : "n/a";
}

int cmd_check(const InputOptions& in) {
  const auto ideal = fideal::parse_ideal(read_input(in), in.limit);
  const auto report = fideal::theorem_classify(ideal, in.limit);
  if (in.format == "json") {
    fideal::Json doc;
    doc["ideal"] = fideal::to_json(ideal);
    doc["report"] = fideal::to_json(report);
    std::cout << doc.dump(2) << '\n';
  } else {
    std::cout << "ideal:                      " << fideal::to_text(ideal) << '\n'
              << "pure of degree 2:           " << yes_no(report.pure_degree2) << '\n'
              << "(i) unmixed, height n-2:    " << condition_text(report.cond_unmixed_height)
              << " (height " << report.height << ", "
              << (report.unmixed ? "unmixed" : "mixed") << ")\n"
              << "(ii) C(n,2) even:           " << condition_text(report.cond_binomial_even) << '\n'
              << "(iii) m = C(n,2)/2:         " << condition_text(report.cond_generator_count) << '\n'
              << "f-vector, facet complex:    " << report.f_facet.to_string() << '\n'
              << "f-vector, non-face complex: " << report.f_nonface.to_string() << '\n'
              << "f-ideal:                    " << yes_no(report.f_ideal) << '\n';
  }
  if (!report.consistent()) {
    std::cerr << "fideal: invariant violation: conditions (i)-(iii) disagree "
                 "with the f-vector comparison for "
              << fideal::to_text(ideal) << '\n';
    return kExitInvariant;
  }
  return report.f_ideal ? kExitOk : kExitNegative;
}

int cmd_complexes(const InputOptions& in) {
  const auto ideal = fideal::parse_ideal(read_input(in), in.limit);
  const auto facet = fideal::facet_complex(ideal);
  const auto nonface = fideal::nonface_complex(ideal);
  if (in.format == "json") {
    fideal::Json doc;
    doc["ideal"] = fideal::to_json(ideal);
    doc["facet_complex"] = fideal::to_json(facet);
    doc["nonface_complex"] = fideal::to_json(nonface);
    std::cout << doc.dump(2) << '\n';
  } else {
    std::cout << "ideal:            " << fideal::to_text(ideal) << '\n'
              << "facet complex:    " << join_subsets(facet.facets())
              << "  dim " << fideal::dimension(facet) << '\n'
              << "non-face complex: " << join_subsets(nonface.facets())
              << "  dim " << fideal::dimension(nonface) << '\n';
  }
  return kExitOk;
}

int cmd_fvector(const InputOptions& in) {
  const auto ideal = fideal::parse_ideal(read_input(in), in.limit);
  const auto verdict = fideal::is_f_ideal(ideal, in.limit);
  if (in.format == "json") {
    fideal::Json doc;
    doc["facet"] = fideal::to_json(verdict.f_facet);
    doc["nonface"] = fideal::to_json(verdict.f_nonface);
    std::cout << doc.dump() << '\n';
  } else {
    std::cout << "facet:   " << verdict.f_facet.to_string() << '\n'
              << "nonface: " << verdict.f_nonface.to_string() << '\n';
  }
  return kExitOk;
}

int cmd_primes(const InputOptions& in) {
  const auto ideal = fideal::parse_ideal(read_input(in), in.limit);
  const auto primes = fideal::minimal_vertex_covers(ideal);
  if (in.format == "json") {
    std::cout << fideal::to_json(primes).dump() << '\n';
  } else {
    std::cout << "covers:  " << join_subsets(primes.covers) << '\n'
              << "height:  " << primes.height << '\n'
              << "unmixed: " << (primes.unmixed ? "true" : "false") << '\n';
  }
  return kExitOk;
}

int cmd_census(const CensusFlags& flags) {
  fideal::CensusOptions opts;
  opts.n = flags.n;
  opts.degree = flags.degree;
  opts.sample = flags.sample;
  opts.seed = flags.seed;
  opts.threads = flags.threads;
  opts.exhaustive_limit = flags.limit;
  opts.generator_count = flags.generators;
  if (!flags.out.empty()) opts.catalog = flags.out;
  const auto row = fideal::run_census(opts);

  if (flags.format == "json") {
    std::cout << fideal::to_json(row).dump(2) << '\n';
  } else {
    std::cout << "census n=" << row.n << " degree=" << row.degree << " ("
              << (row.sampled ? "sampled, seed " + std::to_string(*row.seed)
                              : std::string("exhaustive"))
              << ")\n"
              << "pure ideals examined:      " << row.total_pure << '\n'
              << "f-ideals:                  " << row.f_ideal_count << '\n';
    if (row.theorem_checked) {
      std::cout << "theorem agreements:        " << row.theorem_agreements << '/'
                << row.total_pure << '\n'
                << "mismatches:                " << row.mismatches.size() << '\n';
      for (const auto& m : row.mismatches) std::cout << "  " << m << '\n';
      std::cout << "condition subsets (satisfied / of which f-ideals):\n";
      for (const auto& t : row.condition_subsets) {
        std::cout << "  " << t.conditions << ": " << t.satisfied << " / "
                  << t.f_ideals << '\n';
      }
    }
    std::cout << "lemma identity violations: " << row.lemma_binomial_violations << '\n';
  }
  if (!row.mismatches.empty() || row.lemma_binomial_violations != 0) {
    std::cerr << "fideal: invariant violation in census\n";
    return kExitInvariant;
  }
  return kExitOk;
}

void add_input_options(CLI::App* cmd, InputOptions& in) {
  cmd->add_option("ideal", in.inline_text,
                  "Ideal as text (n=3; x1*x2, x2*x3) or JSON; '-' reads standard input");
  cmd->add_option("--file", in.file, "Read the ideal from a file");
  cmd->add_option("--format", in.format, "Output format")
      ->check(CLI::IsMember({"text", "json"}));
  cmd->add_option("--limit", in.limit, "Ambient vertex ceiling")
      ->check(CLI::Range(1, fideal::kMaxAmbient));
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Facet and non-face complexes of square-free monomial ideals"};
  app.require_subcommand(1);

  InputOptions in;
  auto* check = app.add_subcommand("check", "Classify an ideal and decide the f-ideal property");
  auto* complexes = app.add_subcommand("complexes", "Print the facet and non-face complexes");
  auto* fvector = app.add_subcommand("fvector", "Print the f-vectors of both complexes");
  auto* primes = app.add_subcommand("primes", "Print the minimal vertex covers, height and unmixedness");
  for (auto* cmd : {check, complexes, fvector, primes}) add_input_options(cmd, in);

  CensusFlags cf;
  auto* census = app.add_subcommand("census", "Classify every pure ideal of a given shape");
  census->add_option("--n", cf.n, "Ambient vertex count")->required();
  census->add_option("--degree", cf.degree, "Generator degree");
  census->add_option("--sample", cf.sample, "Draw this many ideals at random");
  census->add_option("--seed", cf.seed, "Seed for --sample");
  census->add_option("--threads", cf.threads, "Worker cap (0 = all cores)");
  census->add_option("--limit", cf.limit, "Exhaustive ambient ceiling override");
  census->add_option("--m", cf.generators, "Only ideals with this many generators");
  census->add_option("--out", cf.out, "Write a JSONL catalog here");
  census->add_option("--format", cf.format, "Output format")
      ->check(CLI::IsMember({"text", "json"}));

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitInput;
  }

  try {
    if (check->parsed()) return cmd_check(in);
    if (complexes->parsed()) return cmd_complexes(in);
    if (fvector->parsed()) return cmd_fvector(in);
    if (primes->parsed()) return cmd_primes(in);
    if (census->parsed()) {
      if (cf.sample && !cf.seed) {
        throw fideal::Error(fideal::ErrorCode::kInvalidArgument,
                            "--sample requires --seed");
      }
      return cmd_census(cf);
    }
  } catch (const fideal::Error& e) {
    std::cerr << "fideal: error: " << fideal::to_string(e.code());
    if (e.position()) {
      std::cerr << " at line " << e.position()->line << ", column "
                << e.position()->column;
    }
    std::cerr << ": " << e.what() << '\n';
    return kExitInput;
  }
  return kExitInput;
}
