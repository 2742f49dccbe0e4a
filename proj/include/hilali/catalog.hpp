#ifndef HILALI_CATALOG_HPP
#define HILALI_CATALOG_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "hilali/fibration.hpp"
#include "hilali/invariants.hpp"
#include "hilali/model.hpp"

namespace hilali {

// ---------------------------------------------------------------- models

SullivanModel make_sphere(long long n);                       // n >= 2
SullivanModel make_cpn(long long n);                          // n >= 1
SullivanModel make_hpn(long long n);                          // n >= 1
SullivanModel make_product(const std::vector<SullivanModel>& factors);

// Lambda(x, z, y) with deg x = even_degree, dz = x^relation_power,
// dy = 0, deg y = extra_odd_degree: the one-even/two-odd family.
// relation_power >= 2 (p = 1 would be a contractible pair, rejected).
SullivanModel make_star_type(long long even_degree, long long relation_power,
                             long long extra_odd_degree);

// ---------------------------------------------------------------- entries

struct KnownInvariants {
    std::size_t dim_pi_even = 0, dim_pi_odd = 0;
    std::size_t dim_h = 0;
    long long formal_dimension = 0;
    long long chi = 0, chi_pi = 0;
    Rational hilali;
};

struct CatalogEntry {
    std::string key;
    SullivanModel model;
    std::optional<KnownInvariants> known;
    bool formal = false;
    std::string formality_provenance;  // empty when not known formal
    std::optional<Prop5Split> split;   // odd-sphere x F0 decomposition
    bool pure = false;
    bool two_stage = false;
};

// Every named model, including the witness models used by the checks.
std::vector<CatalogEntry> catalog_models();
std::optional<CatalogEntry> catalog_model(const std::string& key);

struct FibrationEntry {
    std::string key;
    FibrationModel fibration;
    bool formal_all = false;  // F, B and X all known formal
    std::string formality_provenance;
    std::optional<Prop5Split> fiber_split;
    std::optional<Prop5Split> base_split;
};

std::vector<FibrationEntry> catalog_fibrations();
std::optional<FibrationEntry> catalog_fibration(const std::string& key);

// ---------------------------------------------------------------- scaling

// Multiplies stage-0 degrees by 3^i and re-derives stage-1 degrees from the
// transported differential (deg w' = 3^i * deg(d v') - 1). Requires a
// two-stage model whose differential is injective on stage 1. Preserves the
// Hilali quotient and homotopy dimensions; i = 0 returns the model as is.
SullivanModel degree_scale(const SullivanModel& two_stage, unsigned i);

// ------------------------------------------------- pure-model bound

struct PureBoundResult {
    BigInt literal_bound;      // 2^(odd-even) * prod ceil(d/a_i): reported only
    BigInt corrected_bound;    // 2^(odd-even) * prod (ceil(d/a_i)+1): asserted
    std::size_t dim_h;
    FibrationModel auxiliary;  // fiber generators v_i with d v_i = w_i^(ceil+1)
};

// Degree-counting bound on the cohomology of a pure elliptic model, with
// the auxiliary fibration the bound is read off from.
PureBoundResult pure_bound_and_fibration(const SullivanModel& pure_elliptic);

// ---------------------------------------------------------------- random

// Deterministic splitmix64; the standard distributions are not pinned down
// by the C++ standard, so sampling goes through this.
class Rng {
public:
    explicit Rng(std::uint64_t seed) : state_(seed) {}
    std::uint64_t next();
    std::uint64_t below(std::uint64_t n);  // uniform in [0, n)
    long long in_range(long long lo, long long hi);  // inclusive
    bool chance(std::uint64_t num, std::uint64_t den);

private:
    std::uint64_t state_;
};

struct RandomTwoStageParams {
    std::size_t n_even_max = 2;
    std::size_t m_w0_max = 2;
    std::size_t r_extra_max = 1;
    std::vector<long long> even_degrees = {2, 4};
    std::vector<long long> odd_degrees = {3, 5};
    long long power_min = 2, power_max = 3;
    unsigned retry_budget = 32;
    bool pure_only = false;  // restrict stage-1 targets to even generators
};

struct RandomTwoStage {
    SullivanModel model;
    std::size_t n = 0, m = 0, r = 0;  // dim V_even, dim W0, dim W1 - n
    unsigned retries_used = 0;
};

// Seeded, reproducible elliptic two-stage model: n closed even generators,
// m closed odd ones, and n + r stage-1 odd generators whose targets cut the
// even part down to finite dimension. Ellipticity is verified and failed
// draws are resampled with derived sub-seeds up to the retry budget.
std::optional<RandomTwoStage> random_two_stage(std::uint64_t seed,
                                               const RandomTwoStageParams& params);

}  // namespace hilali

#endif
