#ifndef HILALI_FIBRATION_HPP
#define HILALI_FIBRATION_HPP

#include <optional>
#include <string>
#include <vector>

#include "hilali/invariants.hpp"
#include "hilali/model.hpp"
#include "hilali/reduction.hpp"

namespace hilali {

// Relative model of a fibration F -> X -> B: the total algebra is
// Lambda(W) tensor Lambda(V) with the base generators first, (Lambda W, d)
// a differential subalgebra, and the projection W -> 0 recovering the
// fiber differential.
struct FibrationModel {
    SullivanModel base;
    SullivanModel fiber;
    SullivanModel total;
    std::size_t base_gen_count = 0;

    std::size_t fiber_slot(std::size_t fiber_gen) const { return base_gen_count + fiber_gen; }
};

// A model with the combined generator list (base then fiber) and zero
// differential, for writing perturbation polynomials against.
SullivanModel fibration_total_shell(const SullivanModel& base, const SullivanModel& fiber);

// Assembles and validates the relative model. `perturbation[i]` is added to
// the lifted fiber differential of fiber generator i; every perturbation
// term must involve a base generator, the total differential must square to
// zero, and projecting the base away must give back the fiber differential.
FibrationModel build_fibration(const SullivanModel& base, const SullivanModel& fiber,
                               const std::vector<Polynomial>& perturbation);

// Transgression data: the linear part d0 of the total differential and the
// contraction bookkeeping it induces, cross-checked against the reduction
// of the total model.
struct TransgressionAnalysis {
    QMatrix d0;
    std::vector<ContractedPair> contracted_pairs;
    std::size_t c_fiber_odd = 0;  // dim im(d0 restricted to odd fiber generators)
    std::size_t dim_pi_even_x = 0;
    std::size_t dim_pi_odd_x = 0;
    bool pairs_all_fiber_odd_to_base_even = true;

    std::size_t dim_pi_x() const { return dim_pi_even_x + dim_pi_odd_x; }
};

TransgressionAnalysis transgression_analysis(const FibrationModel& f);

// Generator split per the odd-sphere x F0 decomposition of a formal
// elliptic space: T = odd-sphere part (closed odd generators), V = the
// positively elliptic part. Indices refer to the respective model.
struct Prop5Split {
    std::vector<std::size_t> t;
    std::vector<std::size_t> v;
};

// One checked (in)equality of the report. `asserted` distinguishes honest
// assertions from diagnostics that never affect pass/fail. For non-strict
// comparisons pass means slack >= 0; strict ones need slack > 0.
struct CheckItem {
    std::string name;
    bool applicable = true;
    bool asserted = true;
    bool strict = false;
    bool holds = true;
    Rational slack;
    std::string detail;
};

struct FibrationReport {
    EllipticInvariants fiber, base, total;
    Rational h_product;  // h(F x B) = (pi_F + pi_B) / (dim H F * dim H B)
    bool pi_trivial = false;
    bool tnhz = false;
    std::size_t contracted_pairs = 0;
    std::size_t c_tf = 0;  // dim im(d0|T_F) when a split was supplied
    bool has_splits = false;
    std::vector<CheckItem> items;

    bool all_asserted_hold() const;
    const CheckItem* find(const std::string& name) const;
};

// Runs every check of the report on an elliptic fibration.
//   formal_all: all three spaces known formal (enables the conjecture
//               assertions and, with splits, the halving bound / Eq-4
//               diagnostic).
//   fiber_split / base_split: odd-sphere x F0 decompositions, validated.
FibrationReport analyze_fibration(const FibrationModel& f, bool formal_all,
                                  const std::optional<Prop5Split>& fiber_split,
                                  const std::optional<Prop5Split>& base_split);

}  // namespace hilali

#endif
