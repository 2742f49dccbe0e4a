#include "hilali/report.hpp"

namespace hilali {

using nlohmann::json;

json fraction_json(const Rational& r) {
    return json{{"num", r.num().to_string()}, {"den", r.den().to_string()}};
}

const char* ellipticity_name(Ellipticity e) {
    switch (e) {
        case Ellipticity::elliptic: return "elliptic";
        case Ellipticity::not_elliptic: return "not_elliptic";
        case Ellipticity::undecided_at_cap: return "undecided_at_cap";
    }
    return "?";
}

json invariants_json(const EllipticInvariants& inv) {
    json betti = json::object();
    for (const auto& [k, b] : inv.betti.betti) betti[std::to_string(k)] = b;
    return json{{"dim_pi", inv.dim_pi_total()},
                {"dim_pi_even", inv.dim_pi_even},
                {"dim_pi_odd", inv.dim_pi_odd},
                {"chi", inv.chi},
                {"chi_pi", inv.chi_pi},
                {"formal_dimension", inv.formal_dimension},
                {"dim_H", inv.dim_h_total},
                {"h", fraction_json(inv.hilali)},
                {"h_decimal", inv.hilali.to_decimal_string(6)},
                {"exponents", json{{"even", inv.exponents.even}, {"odd", inv.exponents.odd}}},
                {"betti", betti}};
}

json ellipticity_json(const EllipticityResult& e) {
    json out{{"status", ellipticity_name(e.status)}, {"cap_used", e.cap_used}};
    if (e.status == Ellipticity::elliptic && e.window_start >= 0) {
        out["window_start"] = e.window_start;
        out["window_length"] = e.window_length;
    }
    if (!e.note.empty()) out["note"] = e.note;
    return out;
}

json fibration_report_json(const FibrationReport& rep) {
    json checks = json::array();
    for (const auto& it : rep.items) {
        checks.push_back(json{{"name", it.name},
                              {"applicable", it.applicable},
                              {"asserted", it.asserted},
                              {"strict", it.strict},
                              {"holds", it.holds},
                              {"slack", fraction_json(it.slack)},
                              {"detail", it.detail}});
    }
    json out{{"fiber", invariants_json(rep.fiber)},
             {"base", invariants_json(rep.base)},
             {"total", invariants_json(rep.total)},
             {"h_product", fraction_json(rep.h_product)},
             {"flags", json{{"pi_trivial", rep.pi_trivial}, {"tnhz", rep.tnhz}}},
             {"contracted_pairs", rep.contracted_pairs},
             {"checks", checks},
             {"pass", rep.all_asserted_hold()}};
    if (rep.has_splits) out["c_tf"] = rep.c_tf;
    return out;
}

json two_stage_bound_json(const TwoStageParams& p) {
    CaseBounds cb = case_bounds(p);
    json out{{"n", p.n},
             {"m", p.m},
             {"r", p.r},
             {"dim_pi", p.dim_pi()},
             {"bound", fraction_json(two_stage_bound(p))},
             {"bound_decimal", two_stage_bound(p).to_decimal_string(6)},
             {"word_length_lower_bound", fraction_json(word_length_lower_bound(p))},
             {"stage_exponential_lower_bound", stage_exponential_lower_bound(p).to_string()}};
    if (cb.case1) out["case1"] = fraction_json(*cb.case1);
    if (cb.case2) out["case2"] = fraction_json(*cb.case2);
    return out;
}

json threshold_json(const ThresholdResult& t, const Rational& eps) {
    json out{{"epsilon", fraction_json(eps)},
             {"N", t.n_threshold},
             {"scan_limit", t.scan_limit},
             {"window", t.window}};
    if (t.witness) {
        out["witness"] = json{{"n", t.witness->n},
                              {"m", t.witness->m},
                              {"r", t.witness->r},
                              {"total", t.witness->dim_pi()},
                              {"bound", fraction_json(t.witness_value)}};
    }
    return out;
}

}  // namespace hilali
