#ifndef HILALI_REPORT_HPP
#define HILALI_REPORT_HPP

#include <json.hpp>

#include "hilali/asymptotics.hpp"
#include "hilali/fibration.hpp"
#include "hilali/invariants.hpp"

namespace hilali {

// Exact fractions serialize as {"num": "...", "den": "..."} strings; the
// optional decimal fields are convenience only.
nlohmann::json fraction_json(const Rational& r);

nlohmann::json invariants_json(const EllipticInvariants& inv);
nlohmann::json fibration_report_json(const FibrationReport& rep);
nlohmann::json ellipticity_json(const EllipticityResult& e);
nlohmann::json two_stage_bound_json(const TwoStageParams& p);
nlohmann::json threshold_json(const ThresholdResult& t, const Rational& eps);

const char* ellipticity_name(Ellipticity e);

}  // namespace hilali

#endif
