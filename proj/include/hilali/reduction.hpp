#ifndef HILALI_REDUCTION_HPP
#define HILALI_REDUCTION_HPP

#include <map>
#include <string>
#include <vector>

#include "hilali/linalg.hpp"
#include "hilali/model.hpp"

namespace hilali {

// One contractible pair eliminated during reduction: d(source) = target up
// to a change of basis. Names refer to the original model's generators.
struct ContractedPair {
    std::size_t source_index = 0;
    std::string source_name;
    long long source_degree = 0;
    std::size_t target_index = 0;
    std::string target_name;
    long long target_degree = 0;
};

// Result of splitting off the contractible part: `minimal_part` has no
// linear differential and the same cohomology as the input. Surviving
// homotopy dimensions are the generator counts of the minimal part.
struct LinearPartReduction {
    SullivanModel minimal_part;
    std::vector<ContractedPair> pairs;
    std::map<long long, std::size_t> pi_dims;  // degree -> dim pi_k
    std::size_t dim_pi_even = 0;
    std::size_t dim_pi_odd = 0;

    std::size_t dim_pi_total() const { return dim_pi_even + dim_pi_odd; }
};

// Matrix of the linear part d0 on the generator span: entry (t, s) is the
// coefficient of generator t in the word-length-1 part of d(generator s).
QMatrix linear_part_matrix(const SullivanModel& m);

// Splits (Lambda V, d) as minimal x contractible by repeatedly cancelling a
// generator of minimal degree with nonzero linear differential against its
// target. Quotienting by such a pair is a quasi-isomorphism, so Betti
// numbers of the minimal part agree with the input's.
LinearPartReduction linear_part_reduction(const SullivanModel& m);

}  // namespace hilali

#endif
