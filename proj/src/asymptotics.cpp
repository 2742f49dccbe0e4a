#include "hilali/asymptotics.hpp"

#include <algorithm>
#include <stdexcept>

#include "hilali/invariants.hpp"

namespace hilali {

Rational word_length_lower_bound(const TwoStageParams& p) {
    long long n = p.n, m = p.m, r = p.r;
    return Rational(n * n + n + m * m + m + 2 * n * m + 2 - 2 * r, 2);
}

BigInt stage_exponential_lower_bound(const TwoStageParams& p) {
    return BigInt::pow(BigInt(2), static_cast<unsigned long>(p.r));
}

Rational two_stage_bound(const TwoStageParams& p) {
    if (p.n < 0 || p.m < 0 || p.r < 0) throw std::invalid_argument("negative stage dimensions");
    Rational word = word_length_lower_bound(p);
    Rational expo(stage_exponential_lower_bound(p));
    Rational denom = std::max(word, expo);
    // 2^r >= 1, so the denominator is always positive
    return Rational(p.dim_pi()) / denom;
}

CaseBounds case_bounds(const TwoStageParams& p) {
    CaseBounds out;
    long long n = p.n, m = p.m, r = p.r;
    if (2 * r <= n + m)
        out.case1 = Rational(5 * n + 3 * m, n * n + m * m + 2 * n * m + 2);
    if (2 * r >= n + m)
        out.case2 = Rational(5 * r) / Rational(stage_exponential_lower_bound(p));
    return out;
}

namespace {

// max of the bound over all triples with 2n + m + r == total
Rational frontier_max(long long total, TwoStageParams* arg) {
    Rational best(0);
    bool first = true;
    for (long long n = 0; 2 * n <= total; ++n) {
        for (long long m = 0; 2 * n + m <= total; ++m) {
            TwoStageParams p{n, m, total - 2 * n - m};
            Rational b = two_stage_bound(p);
            if (first || b > best) {
                best = b;
                if (arg) *arg = p;
                first = false;
            }
        }
    }
    return best;
}

// Certified tail estimate, non-increasing for t >= 10 and tending to zero:
//   bound <= max( 50t / (4t^2 + 50), (5 floor(t/5) + 4) / 2^floor(t/5) ).
// Case split on 2r vs n+m:
//   2r <= n+m: numerator <= (5n+3m)/2 <= 5s/2 and the word-length arm of
//              the denominator is >= (s^2+2)/2 for s = n+m >= 2t/5; the
//              quotient 5s/(s^2+2) decreases for s >= 2.
//   2r >= n+m: numerator <= 5r and the 2^r arm applies with r >= t/5;
//              5r/2^r decreases for r >= 2, and within each block of five
//              totals the block maximum (5k+4)/2^k is used so the whole
//              estimate is monotone across t.
Rational tail_bound(long long t) {
    Rational poly(50 * t, 4 * t * t + 50);
    long long k = t / 5;
    BigInt pow2 = BigInt::pow(BigInt(2), static_cast<unsigned long>(k));
    Rational expo = Rational(5 * k + 4) / Rational(pow2);
    return std::max(poly, expo);
}

}  // namespace

ThresholdResult threshold(const Rational& eps) {
    if (!(eps > Rational(0))) throw std::invalid_argument("threshold: eps must be positive");

    ThresholdResult res;

    // find where the analytic tail falls below eps for good
    long long tail_start = 10;
    while (!(tail_bound(tail_start) < eps)) {
        ++tail_start;
        if (tail_start > 100000)
            throw std::runtime_error("threshold: tail search ran away");  // unreachable
    }

    // exhaustively check all totals up to tail_start + window
    long long limit = tail_start + res.window;
    res.scan_limit = limit;
    long long last_violation = -1;
    TwoStageParams last_arg{0, 0, 0};
    for (long long t = 0; t <= limit; ++t) {
        TwoStageParams arg{0, 0, 0};
        Rational mx = frontier_max(t, &arg);
        if (!(mx < eps)) {
            last_violation = t;
            last_arg = arg;
        }
    }
    res.n_threshold = last_violation + 1;
    if (last_violation >= 0) {
        res.witness = last_arg;
        res.witness_value = two_stage_bound(last_arg);
    }
    return res;
}

std::uint64_t derive_seed(std::uint64_t master, std::uint64_t index) {
    Rng rng(master ^ (0xA3EC647659359ACDULL * (index + 1)));
    return rng.next();
}

namespace {

std::string csv_escape(const std::string& s) {
    bool quote = s.find_first_of(",\"\r\n") != std::string::npos;
    if (!quote) return s;
    std::string out = "\"";
    for (char c : s) {
        if (c == '"') out += "\"\"";
        else out.push_back(c);
    }
    out += "\"";
    return out;
}

}  // namespace

ExperimentResult run_experiment(const ExperimentConfig& cfg) {
    ExperimentResult out;
    std::string csv =
        "sample_index,seed,n,m,r,dim_pi,dim_H,h_exact,h_decimal,bound_exact,bound_decimal\r\n";

    for (std::size_t i = 0; i < cfg.samples; ++i) {
        std::uint64_t sub = derive_seed(cfg.seed, i);
        std::optional<RandomTwoStage> sample = random_two_stage(sub, cfg.ranges);
        if (!sample) {
            ++out.failed_samples;
            continue;
        }
        EllipticInvariants inv = compute_invariants(sample->model);
        TwoStageParams p{static_cast<long long>(sample->n), static_cast<long long>(sample->m),
                         static_cast<long long>(sample->r)};
        ExperimentRow row{i,
                          sub,
                          p,
                          inv.dim_pi_total(),
                          inv.dim_h_total,
                          inv.hilali,
                          two_stage_bound(p)};
        csv += std::to_string(row.sample_index) + "," + std::to_string(row.seed) + "," +
               std::to_string(p.n) + "," + std::to_string(p.m) + "," + std::to_string(p.r) + "," +
               std::to_string(row.dim_pi) + "," + std::to_string(row.dim_h) + "," +
               csv_escape(row.h.to_string()) + "," + row.h.to_decimal_string(6) + "," +
               csv_escape(row.bound.to_string()) + "," + row.bound.to_decimal_string(6) + "\r\n";
        out.rows.push_back(std::move(row));
    }
    out.csv = std::move(csv);
    return out;
}

}  // namespace hilali
