#ifndef OCFL_CAMPAIGN_HPP
#define OCFL_CAMPAIGN_HPP

// Seeded cross-validation suites and the word samplers behind them.  A report depends only on
// the suite name, the seed and the sample count.

#include <chrono>
#include <cstdint>
#include <optional>
#include <random>
#include <string>
#include <utility>
#include <vector>

#include "ocfl/constructions.hpp"

namespace ocfl::campaign {

struct SuiteReport {
    std::string name;
    std::uint64_t seed = 0;
    std::size_t cases = 0;
    std::size_t mismatches = 0;
    /// Category label -> number of cases, in first-seen order.
    std::vector<std::pair<std::string, std::size_t>> counts;
    /// Sampling quotas that were not reached.
    std::vector<std::string> shortfalls;
    /// First disagreement, already formatted.
    std::optional<std::string> counterexample;
    std::vector<std::string> notes;

    bool ok() const { return mismatches == 0 && shortfalls.empty() && cases > 0; }
    void count(const std::string& label, std::size_t k = 1);
    std::size_t count_of(const std::string& label) const;
    void mismatch(std::string what);
};

/// One fact per line, ending with `result PASS` or `result FAIL`.
std::string format_report(const SuiteReport& r);

/// erasure, l3, exponentiation, pds, abullet, sandwich, closing, guards.
const std::vector<std::string>& suite_names();
/// Default sample count of a suite (0 for suites that are purely exhaustive).
std::size_t default_samples(const std::string& suite);
/// Throws Error for an unknown suite name.
SuiteReport run_suite(const std::string& suite, std::uint64_t seed,
                      std::optional<std::size_t> samples = std::nullopt);
/// The guards suite with an explicit sweep length (run_suite uses 8).  The sweep goes length by
/// length; past `budget` it stops and records a shortfall.
SuiteReport run_guards(std::uint64_t seed, std::size_t samples, std::size_t max_len,
                       std::optional<std::chrono::seconds> budget = std::nullopt);

// --- samplers --------------------------------------------------------------------------------

struct LabeledWord {
    LassoWord word;
    std::string label;
};

/// sup, guard, fail-R, other (over X^box for A = B2), erasers1, erasers2 (over 0 1 and erasers),
/// closing (over X_A).
const std::vector<std::string>& sampler_names();
/// Words from the named sampler, labelled by the oracle (or by the erase route for erasers*).
std::vector<LabeledWord> sample_words(const std::string& sampler, std::uint64_t seed,
                                      std::size_t count);

/// x over {0,1,~1..~n} with x in B2^(~.n): a B2 lasso with random blocks of L3 inserted stage
/// by stage.  Blocks hold at most `depth` nested pairs.
LassoWord random_exponentiated_b2(std::mt19937_64& rng, int n, int depth);

/// Oracle label of a word over X^box: sup, guard, fail-R or other.
std::string abullet_label(const AbulletSpec& spec, const LassoWord& w);

}  // namespace ocfl::campaign

#endif  // OCFL_CAMPAIGN_HPP
