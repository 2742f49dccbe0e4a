#ifndef HILALI_ASYMPTOTICS_HPP
#define HILALI_ASYMPTOTICS_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "hilali/catalog.hpp"
#include "hilali/rational.hpp"

namespace hilali {

struct TwoStageParams {
    long long n = 0;  // dim V_even
    long long m = 0;  // dim W0
    long long r = 0;  // dim W1 - dim V_even, >= 0

    long long dim_pi() const { return 2 * n + m + r; }
};

// (2n + m + r) / max((n^2+n+m^2+m+2nm+2-2r)/2, 2^r): the explicit upper
// bound on h for an elliptic two-stage space with these stage dimensions.
Rational two_stage_bound(const TwoStageParams& p);

// Word-length lower bound on dim H: (n^2+n+m^2+m+2nm+2-2r)/2 (may be <= 0,
// in which case it says nothing). Independent ingredient of the bound.
Rational word_length_lower_bound(const TwoStageParams& p);

// 2^r lower bound on dim H for elliptic two-stage spaces.
BigInt stage_exponential_lower_bound(const TwoStageParams& p);

struct CaseBounds {
    std::optional<Rational> case1;  // (5n+3m)/(n^2+m^2+2nm+2) when 2r <= n+m
    std::optional<Rational> case2;  // 5r/2^r when 2r >= n+m
};

CaseBounds case_bounds(const TwoStageParams& p);

struct ThresholdResult {
    long long n_threshold = 0;  // least N: every triple with 2n+m+r >= N has bound < eps
    std::optional<TwoStageParams> witness;  // attains bound >= eps at total N-1
    Rational witness_value;
    long long scan_limit = 0;  // totals checked exhaustively
    long long window = 64;     // extra verified totals past the analytic tail start
};

// Exhaustive scan over the finite frontier of totals, with the tail beyond
// the scan limit certified by the two-case analysis: for total t, every
// triple obeys bound <= max(50t/(4t^2+50), t/2^(t/5)) once t >= 10, and both
// expressions decrease to zero. Terminates for every eps > 0.
ThresholdResult threshold(const Rational& eps);

struct ExperimentConfig {
    std::size_t samples = 100;
    std::uint64_t seed = 0;
    RandomTwoStageParams ranges;
};

struct ExperimentRow {
    std::size_t sample_index = 0;
    std::uint64_t seed = 0;
    TwoStageParams params;
    std::size_t dim_pi = 0;
    std::size_t dim_h = 0;
    Rational h;
    Rational bound;
};

struct ExperimentResult {
    std::vector<ExperimentRow> rows;
    std::size_t failed_samples = 0;  // generation gave up within the retry budget
    std::string csv;                 // RFC-4180, header row always present
};

// Deterministic given the config: per-sample sub-seeds derive from the
// master seed and the sample index. One row per successfully generated
// elliptic two-stage model.
ExperimentResult run_experiment(const ExperimentConfig& cfg);

std::uint64_t derive_seed(std::uint64_t master, std::uint64_t index);

}  // namespace hilali

#endif
