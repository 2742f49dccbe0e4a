#ifndef HILALI_INVARIANTS_HPP
#define HILALI_INVARIANTS_HPP

#include <optional>
#include <string>
#include <vector>

#include "hilali/cohomology.hpp"
#include "hilali/model.hpp"
#include "hilali/reduction.hpp"

namespace hilali {

// Even exponents a_i (2a_i = even generator degrees) and odd exponents b_i
// (2b_i - 1 = odd generator degrees) of a minimal model.
struct Exponents {
    std::vector<long long> even;
    std::vector<long long> odd;

    // Sum(2b_i - 1) - Sum(2a_i - 1): the formal dimension of an elliptic
    // space with these exponents.
    long long dimension_formula() const;
};

Exponents exponents_of(const SullivanModel& minimal);

enum class Ellipticity {
    elliptic,
    not_elliptic,
    undecided_at_cap,  // only possible with a user-supplied cap
};

struct EllipticityResult {
    Ellipticity status = Ellipticity::undecided_at_cap;
    long long cap_used = 0;
    long long window_start = -1;  // first degree of the vanishing window when elliptic
    long long window_length = 0;
    std::string note;

    bool is_elliptic() const { return status == Ellipticity::elliptic; }
};

// Decides finite-dimensionality of H*(Lambda V, d): reduce to the minimal
// part, then test the quotient of Lambda(V_even) by the pure images of the
// odd generators for a vanishing window of length = max even generator
// degree. A window propagates upward (every higher monomial factors through
// it), so a window means elliptic. Scanning up to formal-dimension + window
// without finding one is a sound rejection: a finite quotient embeds in the
// cohomology of the associated pure model, whose top degree is the
// dimension formula value. A smaller user cap can leave the answer
// undecided, which is reported as such, never as a silent `false`.
EllipticityResult ellipticity_check(const SullivanModel& m,
                                    std::optional<long long> user_cap = std::nullopt);

struct EllipticInvariants {
    std::size_t dim_pi_even = 0;
    std::size_t dim_pi_odd = 0;
    long long chi_pi = 0;  // dim pi_odd - dim pi_even
    long long chi = 0;
    long long formal_dimension = 0;
    std::size_t dim_h_total = 1;
    Rational hilali;  // (dim pi) / (dim H), exact
    Exponents exponents;
    BettiTable betti;

    std::size_t dim_pi_total() const { return dim_pi_even + dim_pi_odd; }
};

// Full invariant set of an elliptic model. Throws ModelError when the model
// is not elliptic (or undecided under the default cap, which cannot happen
// for actually elliptic inputs).
EllipticInvariants compute_invariants(const SullivanModel& m);

struct F0Check {
    bool is_f0 = false;
    std::optional<Rational> predicted_dim_h;  // prod b_i / a_i when F0
};

// chi > 0 detection plus the closed cohomology-dimension formula for
// positively elliptic spaces.
F0Check f0_check_and_formula(const EllipticInvariants& inv);

struct ClassPredicates {
    bool is_pure = false;
    bool is_two_stage = false;
    std::vector<std::size_t> w0;  // closed odd generators (greedy stage 0)
    std::vector<std::size_t> w1;  // remaining odd generators
};

// Structural predicates of a minimal model; the two-stage split is the
// greedy one (maximal W0 = all closed odd generators).
ClassPredicates class_predicates(const SullivanModel& minimal);

// dim pi_odd == 2 and dim pi_even == 1 (the Lambda(x,y,z) class).
bool star_type_check(const SullivanModel& m);

// Pure part of the differential: zero on even generators, even-generator
// monomials only on odd ones.
Polynomial pure_differential_of(const SullivanModel& m, std::size_t gen);

}  // namespace hilali

#endif
