#ifndef HILALI_COHOMOLOGY_HPP
#define HILALI_COHOMOLOGY_HPP

#include <map>
#include <vector>

#include "hilali/linalg.hpp"
#include "hilali/model.hpp"

namespace hilali {

// Matrix of the differential C^k -> C^{k+1} in the monomial bases of the
// two degrees: one column per degree-k monomial, one row per degree-(k+1)
// monomial.
struct CochainMatrix {
    long long degree = 0;
    std::vector<Monomial> domain_basis;    // degree k
    std::vector<Monomial> codomain_basis;  // degree k+1
    QMatrix matrix;
};

CochainMatrix cochain_matrix(const SullivanModel& m, long long degree);

// Expand a homogeneous polynomial in the listed basis. Throws if a term is
// not in the basis (wrong degree).
std::vector<Rational> coordinates(const Polynomial& p, const std::vector<Monomial>& basis);

enum class BettiStatus {
    complete,         // zero cohomology at the cap; table is trusted as-is
    nonzero_at_cap,   // cohomology persists at the cap: possible truncation
};

struct BettiTable {
    std::map<long long, std::size_t> betti;  // only nonzero entries
    long long cap = 0;
    long long formal_dimension = 0;  // max degree with nonzero Betti <= cap
    std::size_t total = 0;
    BettiStatus status = BettiStatus::complete;

    std::size_t at(long long k) const {
        auto it = betti.find(k);
        return it == betti.end() ? 0 : it->second;
    }
    long long euler_characteristic() const;
};

std::size_t betti_number(const SullivanModel& m, long long k);
BettiTable betti_table(const SullivanModel& m, long long cap);

// Poincare symmetry b_k == b_{n-k} for n = formal_dimension.
bool poincare_check(const BettiTable& t);

// Polynomials representing a basis of H^k, as cocycles of degree k that are
// independent modulo coboundaries.
std::vector<Polynomial> cohomology_representatives(const SullivanModel& m, long long k);

struct FiberRestriction {
    bool surjective = true;                    // onto H*(fiber) in all checked degrees
    std::vector<long long> failing_degrees;    // degrees where the image does not span
};

// Restriction H*(total) -> H*(fiber) for a relative model whose first
// `base_gen_count` generators span the base: base generators are sent to 0
// and the images are tested for spanning H^k(fiber) in every degree up to
// the fiber's formal dimension (`fiber_cap`).
FiberRestriction restriction_to_fiber(const SullivanModel& total, std::size_t base_gen_count,
                                      const SullivanModel& fiber, long long fiber_cap);

}  // namespace hilali

#endif
