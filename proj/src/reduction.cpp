#include "hilali/reduction.hpp"

#include <algorithm>
#include <optional>

namespace hilali {

namespace {

// word length = total exponent sum
std::size_t word_length(const Monomial& m) {
    std::size_t w = 0;
    for (auto e : m.exponents()) w += e;
    return w;
}

// index of the generator in a word-length-1 monomial
std::size_t linear_generator(const Monomial& m) {
    for (std::size_t g = 0; g < m.exponents().size(); ++g)
        if (m.exponent(g)) return g;
    throw ModelError("not a linear monomial");
}

struct LinearTerm {
    std::size_t gen;
    Rational coef;
};

std::vector<LinearTerm> linear_terms(const Polynomial& p) {
    std::vector<LinearTerm> out;
    for (const auto& [m, c] : p.terms())
        if (word_length(m) == 1) out.push_back({linear_generator(m), c});
    return out;
}

}  // namespace

QMatrix linear_part_matrix(const SullivanModel& m) {
    const std::size_t n = m.generator_count();
    QMatrix d0(n, n);
    for (std::size_t s = 0; s < n; ++s)
        for (const auto& t : linear_terms(m.differential_of(s))) d0.at(t.gen, s) = t.coef;
    return d0;
}

LinearPartReduction linear_part_reduction(const SullivanModel& input) {
    // Track which original generator each current slot descends from, for
    // reporting pairs in the input's terms.
    SullivanModel current = input;
    std::vector<std::size_t> origin(input.generator_count());
    for (std::size_t i = 0; i < origin.size(); ++i) origin[i] = i;

    std::vector<ContractedPair> pairs;

    for (;;) {
        // pick the lowest-degree generator with a linear differential
        std::optional<std::size_t> u;
        for (std::size_t i = 0; i < current.generator_count(); ++i) {
            if (linear_terms(current.differential_of(i)).empty()) continue;
            if (!u || current.generator(i).degree < current.generator(*u).degree) u = i;
        }
        if (!u) break;

        const Polynomial du = current.differential_of(*u);
        std::vector<LinearTerm> lts = linear_terms(du);
        std::size_t v = lts.front().gen;
        Rational lambda = lts.front().coef;
        for (const auto& t : lts)
            if (t.gen < v) {
                v = t.gen;
                lambda = t.coef;
            }

        // v now denotes v_hat := d(u); the old v reads back as
        // (v_hat - (du - lambda*v)) / lambda. Neither du nor the remainder
        // mentions u or v (degree arithmetic rules them out).
        Polynomial remainder = du - current.generator_poly(v).scaled(lambda);
        Polynomial v_expr = (current.generator_poly(v) - remainder).scaled(lambda.inverse());

        std::vector<Polynomial> images(current.generator_count());
        for (std::size_t i = 0; i < current.generator_count(); ++i)
            images[i] = (i == v) ? v_expr : current.generator_poly(i);

        // rebuild without u and v, projecting the pair away
        std::vector<bool> kill(current.generator_count(), false);
        kill[*u] = kill[v] = true;

        std::vector<Generator> kept_gens;
        std::vector<std::size_t> kept_slots;
        std::vector<std::size_t> next_origin;
        for (std::size_t i = 0; i < current.generator_count(); ++i) {
            if (kill[i]) continue;
            Generator g = current.generator(i);
            g.index = kept_gens.size();
            kept_gens.push_back(g);
            kept_slots.push_back(i);
            next_origin.push_back(origin[i]);
        }

        pairs.push_back(ContractedPair{
            origin[*u], input.generator(origin[*u]).name, input.generator(origin[*u]).degree,
            origin[v], input.generator(origin[v]).name, input.generator(origin[v]).degree});

        SullivanModel next(kept_gens, {});
        std::vector<Polynomial> next_diffs;
        next_diffs.reserve(kept_gens.size());
        for (std::size_t slot : kept_slots) {
            Polynomial d = current.substitute(current.differential_of(slot), current, images);
            d = current.project_out(d, kill);
            // re-index into the smaller generator list
            Polynomial re = next.zero();
            for (const auto& [mono, coef] : d.terms()) {
                std::vector<std::uint32_t> e(kept_gens.size(), 0);
                for (std::size_t j = 0; j < kept_slots.size(); ++j)
                    e[j] = mono.exponent(kept_slots[j]);
                re.add_term(next.make_monomial(e), coef);
            }
            next_diffs.push_back(re);
        }
        current = SullivanModel(kept_gens, next_diffs);
        origin = next_origin;

        DSquaredReport rep = current.check_d_squared();
        if (!rep.ok)
            throw ModelError("reduction produced d^2 != 0 at generator '" +
                             current.generator(rep.failing_generator).name + "'");
    }

    LinearPartReduction out{current, std::move(pairs), {}, 0, 0};
    for (const auto& g : out.minimal_part.generators()) {
        out.pi_dims[g.degree] += 1;
        if (g.is_odd())
            ++out.dim_pi_odd;
        else
            ++out.dim_pi_even;
    }
    return out;
}

}  // namespace hilali
