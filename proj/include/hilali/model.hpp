#ifndef HILALI_MODEL_HPP
#define HILALI_MODEL_HPP

#include <cstdint>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "hilali/rational.hpp"

namespace hilali {

// Raised on contract violations: mixed-model operands, bad degrees,
// inconsistent differentials. Carries a human-readable reason.
class ModelError : public std::runtime_error {
public:
    explicit ModelError(const std::string& what) : std::runtime_error(what) {}
};

// One free generator of a Sullivan algebra. degree >= 2 throughout
// (simply-connected models only); parity = degree mod 2 governs commutation.
struct Generator {
    std::string name;
    long long degree = 0;
    std::size_t index = 0;

    bool is_odd() const { return degree % 2 != 0; }
};

// Commutative word in the generators, stored as a dense exponent vector
// aligned with the model's generator list. Odd generators carry exponent
// at most 1. Total degree is cached so ordering does not need the model.
class Monomial {
public:
    Monomial() = default;
    Monomial(std::vector<std::uint32_t> exps, long long degree)
        : exps_(std::move(exps)), degree_(degree) {}

    static Monomial unit(std::size_t gen_count) {
        return Monomial(std::vector<std::uint32_t>(gen_count, 0), 0);
    }

    const std::vector<std::uint32_t>& exponents() const { return exps_; }
    std::uint32_t exponent(std::size_t i) const { return exps_[i]; }
    long long degree() const { return degree_; }
    bool is_unit() const;

    // Graded order: by total degree, then lexicographic on the exponent
    // vector. Deterministic, used for term maps and basis layouts.
    bool operator<(const Monomial& o) const {
        if (degree_ != o.degree_) return degree_ < o.degree_;
        return exps_ < o.exps_;
    }
    bool operator==(const Monomial& o) const { return degree_ == o.degree_ && exps_ == o.exps_; }
    bool operator!=(const Monomial& o) const { return !(*this == o); }

private:
    std::vector<std::uint32_t> exps_;
    long long degree_ = 0;
};

// Finite Q-linear combination of monomials; zero coefficients are never
// stored. Tagged with the owning model's id so cross-model arithmetic is
// rejected instead of silently misinterpreting exponent slots.
class Polynomial {
public:
    Polynomial() = default;
    explicit Polynomial(std::uint64_t model_id) : model_id_(model_id) {}

    std::uint64_t model_id() const { return model_id_; }
    const std::map<Monomial, Rational>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    std::size_t term_count() const { return terms_.size(); }

    void add_term(const Monomial& m, const Rational& c);
    Rational coefficient(const Monomial& m) const;

    // Homogeneous degree if all terms share one; nullopt for 0 or mixed.
    std::optional<long long> homogeneous_degree() const;
    // Sub-polynomial of the given total degree.
    Polynomial homogeneous_part(long long degree) const;
    long long max_degree() const;  // 0 for the zero polynomial

    Polynomial operator+(const Polynomial& o) const;
    Polynomial operator-(const Polynomial& o) const;
    Polynomial scaled(const Rational& c) const;

    bool operator==(const Polynomial& o) const { return terms_ == o.terms_; }
    bool operator!=(const Polynomial& o) const { return !(*this == o); }

private:
    std::uint64_t model_id_ = 0;
    std::map<Monomial, Rational> terms_;
    void check_same_model(const Polynomial& o) const;
};

struct DSquaredReport {
    bool ok = true;
    std::size_t failing_generator = 0;  // valid when !ok
    Polynomial residue;                 // d(d(g)) for the first failure
};

// Free graded-commutative algebra on named generators with a degree +1
// differential: the pair (Lambda V, d). Immutable after construction.
class SullivanModel {
public:
    // Differentials may be left empty (treated as zero) and are validated:
    // homogeneous of degree deg(g)+1, only this model's generators.
    SullivanModel(std::vector<Generator> generators, std::vector<Polynomial> differentials);

    static SullivanModel build(const std::vector<std::pair<std::string, long long>>& gens);

    std::uint64_t id() const { return id_; }
    std::size_t generator_count() const { return gens_.size(); }
    const std::vector<Generator>& generators() const { return gens_; }
    const Generator& generator(std::size_t i) const { return gens_.at(i); }
    const Polynomial& differential_of(std::size_t i) const { return diff_.at(i); }
    std::optional<std::size_t> find_generator(const std::string& name) const;

    // --- polynomial construction -------------------------------------
    Polynomial zero() const { return Polynomial(id_); }
    Polynomial one() const;
    Polynomial generator_poly(std::size_t i) const;
    Polynomial monomial_poly(const Monomial& m, const Rational& c) const;
    Monomial make_monomial(const std::vector<std::uint32_t>& exps) const;

    // --- graded-commutative arithmetic --------------------------------
    // Koszul signs: x*y = (-1)^{deg x deg y} y*x; odd squares vanish.
    Polynomial multiply(const Polynomial& p, const Polynomial& q) const;
    Polynomial power(const Polynomial& p, unsigned long k) const;

    // Derivation extension of d: d(ab) = da*b + (-1)^{deg a} a*db.
    Polynomial apply_differential(const Polynomial& p) const;

    DSquaredReport check_d_squared() const;

    // All monomials of exactly the given degree, graded-lex order by
    // generator index (higher power of earlier generators first).
    std::vector<Monomial> monomial_basis(long long degree) const;

    // Differential with terms involving the listed generators deleted
    // (projection to the quotient by that generator ideal).
    Polynomial project_out(const Polynomial& p, const std::vector<bool>& kill) const;

    // Substitute: each generator i maps to images[i] (a polynomial of this
    // model or of `target`); extends as an algebra map. Signs follow from
    // multiplication. Images must match degrees.
    Polynomial substitute(const Polynomial& p, const SullivanModel& target,
                          const std::vector<Polynomial>& images) const;

    void require_own(const Polynomial& p, const char* where) const;

private:
    std::uint64_t id_;
    std::vector<Generator> gens_;
    std::vector<Polynomial> diff_;

    Polynomial multiply_monomials(const Monomial& a, const Monomial& b) const;
    void basis_recurse(long long remaining, std::size_t gen_i, std::vector<std::uint32_t>& exps,
                       std::vector<Monomial>& out) const;
};

}  // namespace hilali

#endif
