#include "hilali/model.hpp"

#include <atomic>

namespace hilali {

namespace {
std::atomic<std::uint64_t> g_next_model_id{1};
}

bool Monomial::is_unit() const {
    for (auto e : exps_)
        if (e) return false;
    return true;
}

void Polynomial::check_same_model(const Polynomial& o) const {
    if (model_id_ != o.model_id_)
        throw ModelError("polynomial operands belong to different models");
}

void Polynomial::add_term(const Monomial& m, const Rational& c) {
    if (c.is_zero()) return;
    auto it = terms_.find(m);
    if (it == terms_.end()) {
        terms_.emplace(m, c);
        return;
    }
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
}

Rational Polynomial::coefficient(const Monomial& m) const {
    auto it = terms_.find(m);
    return it == terms_.end() ? Rational() : it->second;
}

std::optional<long long> Polynomial::homogeneous_degree() const {
    if (terms_.empty()) return std::nullopt;
    long long d = terms_.begin()->first.degree();
    for (const auto& [m, c] : terms_)
        if (m.degree() != d) return std::nullopt;
    return d;
}

Polynomial Polynomial::homogeneous_part(long long degree) const {
    Polynomial r(model_id_);
    for (const auto& [m, c] : terms_)
        if (m.degree() == degree) r.terms_.emplace(m, c);
    return r;
}

long long Polynomial::max_degree() const {
    return terms_.empty() ? 0 : terms_.rbegin()->first.degree();
}

Polynomial Polynomial::operator+(const Polynomial& o) const {
    check_same_model(o);
    Polynomial r = *this;
    for (const auto& [m, c] : o.terms_) r.add_term(m, c);
    return r;
}

Polynomial Polynomial::operator-(const Polynomial& o) const {
    check_same_model(o);
    Polynomial r = *this;
    for (const auto& [m, c] : o.terms_) r.add_term(m, -c);
    return r;
}

Polynomial Polynomial::scaled(const Rational& c) const {
    Polynomial r(model_id_);
    if (c.is_zero()) return r;
    for (const auto& [m, k] : terms_) r.terms_.emplace(m, k * c);
    return r;
}

SullivanModel::SullivanModel(std::vector<Generator> generators,
                             std::vector<Polynomial> differentials)
    : id_(g_next_model_id.fetch_add(1)), gens_(std::move(generators)) {
    for (std::size_t i = 0; i < gens_.size(); ++i) {
        if (gens_[i].degree < 2)
            throw ModelError("generator '" + gens_[i].name + "' has degree " +
                             std::to_string(gens_[i].degree) + "; simply-connected models need degree >= 2");
        gens_[i].index = i;
    }
    diff_.resize(gens_.size(), Polynomial(id_));
    if (differentials.size() > gens_.size())
        throw ModelError("more differentials than generators");
    for (std::size_t i = 0; i < differentials.size(); ++i) {
        Polynomial& d = diff_[i];
        d = Polynomial(id_);
        for (const auto& [m, c] : differentials[i].terms()) {
            if (m.exponents().size() != gens_.size())
                throw ModelError("differential of '" + gens_[i].name +
                                 "' mentions generators outside this model");
            // re-derive the degree against our generator list
            long long deg = 0;
            for (std::size_t g = 0; g < gens_.size(); ++g) {
                if (m.exponent(g) > 1 && gens_[g].is_odd())
                    throw ModelError("odd generator '" + gens_[g].name + "' squared");
                deg += static_cast<long long>(m.exponent(g)) * gens_[g].degree;
            }
            if (deg != gens_[i].degree + 1)
                throw ModelError("differential of '" + gens_[i].name +
                                 "' is not homogeneous of degree " +
                                 std::to_string(gens_[i].degree + 1));
            d.add_term(Monomial(m.exponents(), deg), c);
        }
    }
}

SullivanModel SullivanModel::build(const std::vector<std::pair<std::string, long long>>& gens) {
    std::vector<Generator> gs;
    gs.reserve(gens.size());
    for (const auto& [name, deg] : gens) gs.push_back(Generator{name, deg, gs.size()});
    return SullivanModel(std::move(gs), {});
}

std::optional<std::size_t> SullivanModel::find_generator(const std::string& name) const {
    for (const auto& g : gens_)
        if (g.name == name) return g.index;
    return std::nullopt;
}

Polynomial SullivanModel::one() const {
    Polynomial p(id_);
    p.add_term(Monomial::unit(gens_.size()), Rational(1));
    return p;
}

Polynomial SullivanModel::generator_poly(std::size_t i) const {
    std::vector<std::uint32_t> e(gens_.size(), 0);
    e[i] = 1;
    Polynomial p(id_);
    p.add_term(Monomial(std::move(e), gens_[i].degree), Rational(1));
    return p;
}

Monomial SullivanModel::make_monomial(const std::vector<std::uint32_t>& exps) const {
    if (exps.size() != gens_.size()) throw ModelError("exponent vector length mismatch");
    long long deg = 0;
    for (std::size_t g = 0; g < gens_.size(); ++g) {
        if (exps[g] > 1 && gens_[g].is_odd())
            throw ModelError("odd generator '" + gens_[g].name + "' squared");
        deg += static_cast<long long>(exps[g]) * gens_[g].degree;
    }
    return Monomial(exps, deg);
}

Polynomial SullivanModel::monomial_poly(const Monomial& m, const Rational& c) const {
    Polynomial p(id_);
    p.add_term(m, c);
    return p;
}

void SullivanModel::require_own(const Polynomial& p, const char* where) const {
    if (p.model_id() != id_)
        throw ModelError(std::string(where) + ": operand belongs to a different model");
}

// Product of two monomials with the Koszul sign: each odd generator of `b`
// moves left past every odd generator of `a` with a larger index.
Polynomial SullivanModel::multiply_monomials(const Monomial& a, const Monomial& b) const {
    Polynomial out(id_);
    std::vector<std::uint32_t> e(gens_.size());
    long long inversions = 0;
    long long b_odd_seen = 0;  // odd gens of b with index < current position
    // Count pairs (i in odd(a), j in odd(b)) with index(j) < index(i):
    // scan indices ascending, accumulate odd-b occurrences seen so far.
    for (std::size_t g = 0; g < gens_.size(); ++g) {
        std::uint32_t ea = a.exponent(g), eb = b.exponent(g);
        if (gens_[g].is_odd()) {
            if (ea && eb) return out;  // odd square: zero
            if (ea) inversions += b_odd_seen;
            if (eb) ++b_odd_seen;
        }
        e[g] = ea + eb;
    }
    Monomial m(std::move(e), a.degree() + b.degree());
    out.add_term(m, (inversions % 2 == 0) ? Rational(1) : Rational(-1));
    return out;
}

Polynomial SullivanModel::multiply(const Polynomial& p, const Polynomial& q) const {
    require_own(p, "multiply");
    require_own(q, "multiply");
    Polynomial out(id_);
    for (const auto& [ma, ca] : p.terms()) {
        for (const auto& [mb, cb] : q.terms()) {
            Polynomial t = multiply_monomials(ma, mb);
            for (const auto& [m, s] : t.terms()) out.add_term(m, ca * cb * s);
        }
    }
    return out;
}

Polynomial SullivanModel::power(const Polynomial& p, unsigned long k) const {
    Polynomial r = one();
    for (unsigned long i = 0; i < k; ++i) r = multiply(r, p);
    return r;
}

Polynomial SullivanModel::apply_differential(const Polynomial& p) const {
    require_own(p, "apply_differential");
    Polynomial out(id_);
    for (const auto& [m, c] : p.terms()) {
        // d over the factors of m in index order; the sign for position i is
        // (-1)^(degree of the prefix before generator i).
        long long prefix_deg = 0;
        for (std::size_t g = 0; g < gens_.size(); ++g) {
            std::uint32_t e = m.exponent(g);
            if (e == 0) continue;
            const Polynomial& dg = diff_[g];
            if (!dg.is_zero()) {
                // rest = m with one factor of g removed
                std::vector<std::uint32_t> rest = m.exponents();
                rest[g] -= 1;
                Monomial rest_m(rest, m.degree() - gens_[g].degree);
                // prefix sign, times the multiplicity e
                Rational coef = c * Rational(static_cast<long long>(e));
                if (prefix_deg % 2 != 0) coef = -coef;
                // dg lands where g was: prefix * dg * suffix. Splitting m as
                // prefix*(g^e)*suffix and using that even g commute freely,
                // prefix * dg * g^{e-1} * suffix = multiply(dg-at-slot, rest)
                // with the Koszul sign of moving dg past the prefix already
                // accounted by prefix_deg, and dg past g^{e-1}*suffix handled
                // by multiply. For odd g the prefix below position g has the
                // recorded degree, so this is exact.
                Polynomial prefix_part(id_);
                {
                    std::vector<std::uint32_t> pre = m.exponents();
                    for (std::size_t h = g; h < gens_.size(); ++h) pre[h] = 0;
                    long long pre_deg = 0;
                    for (std::size_t h = 0; h < g; ++h)
                        pre_deg += static_cast<long long>(pre[h]) * gens_[h].degree;
                    prefix_part.add_term(Monomial(pre, pre_deg), Rational(1));
                }
                Polynomial suffix_part(id_);
                {
                    std::vector<std::uint32_t> suf = m.exponents();
                    for (std::size_t h = 0; h < g; ++h) suf[h] = 0;
                    suf[g] = e - 1;
                    long long suf_deg = 0;
                    for (std::size_t h = 0; h < gens_.size(); ++h)
                        suf_deg += static_cast<long long>(suf[h]) * gens_[h].degree;
                    suffix_part.add_term(Monomial(suf, suf_deg), Rational(1));
                }
                Polynomial piece = multiply(multiply(prefix_part, dg), suffix_part);
                for (const auto& [mm, cc] : piece.terms()) out.add_term(mm, cc * coef);
            }
            prefix_deg += static_cast<long long>(e) * gens_[g].degree;
        }
    }
    return out;
}

DSquaredReport SullivanModel::check_d_squared() const {
    DSquaredReport rep;
    for (std::size_t i = 0; i < gens_.size(); ++i) {
        Polynomial dd = apply_differential(diff_[i]);
        if (!dd.is_zero()) {
            rep.ok = false;
            rep.failing_generator = i;
            rep.residue = dd;
            return rep;
        }
    }
    rep.residue = zero();
    return rep;
}

void SullivanModel::basis_recurse(long long remaining, std::size_t gen_i,
                                  std::vector<std::uint32_t>& exps,
                                  std::vector<Monomial>& out) const {
    if (remaining == 0) {
        long long deg = 0;
        for (std::size_t g = 0; g < gens_.size(); ++g)
            deg += static_cast<long long>(exps[g]) * gens_[g].degree;
        out.emplace_back(exps, deg);
        return;
    }
    if (gen_i >= gens_.size()) return;
    long long d = gens_[gen_i].degree;
    std::uint32_t max_e = gens_[gen_i].is_odd() ? 1 : static_cast<std::uint32_t>(remaining / d);
    if (static_cast<long long>(max_e) * d > remaining)
        max_e = static_cast<std::uint32_t>(remaining / d);
    for (std::uint32_t e = max_e + 1; e-- > 0;) {
        if (static_cast<long long>(e) * d > remaining) continue;
        exps[gen_i] = e;
        basis_recurse(remaining - static_cast<long long>(e) * d, gen_i + 1, exps, out);
    }
    exps[gen_i] = 0;
}

std::vector<Monomial> SullivanModel::monomial_basis(long long degree) const {
    std::vector<Monomial> out;
    if (degree < 0) return out;
    if (degree == 0) {
        out.push_back(Monomial::unit(gens_.size()));
        return out;
    }
    std::vector<std::uint32_t> exps(gens_.size(), 0);
    basis_recurse(degree, 0, exps, out);
    return out;
}

Polynomial SullivanModel::project_out(const Polynomial& p, const std::vector<bool>& kill) const {
    require_own(p, "project_out");
    Polynomial out(id_);
    for (const auto& [m, c] : p.terms()) {
        bool hit = false;
        for (std::size_t g = 0; g < gens_.size(); ++g)
            if (m.exponent(g) && kill[g]) {
                hit = true;
                break;
            }
        if (!hit) out.add_term(m, c);
    }
    return out;
}

Polynomial SullivanModel::substitute(const Polynomial& p, const SullivanModel& target,
                                     const std::vector<Polynomial>& images) const {
    require_own(p, "substitute");
    if (images.size() != gens_.size())
        throw ModelError("substitute: one image per generator required");
    Polynomial out = target.zero();
    for (const auto& [m, c] : p.terms()) {
        Polynomial term = target.one();
        for (std::size_t g = 0; g < gens_.size(); ++g) {
            for (std::uint32_t e = 0; e < m.exponent(g); ++e)
                term = target.multiply(term, images[g]);
        }
        out = out + term.scaled(c);
    }
    return out;
}

}  // namespace hilali
