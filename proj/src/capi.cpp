#include "hilali.h"

#include <cctype>
#include <cstring>
#include <new>
#include <optional>
#include <string>

#include <json.hpp>

#include "hilali/asymptotics.hpp"
#include "hilali/catalog.hpp"
#include "hilali/dsl.hpp"
#include "hilali/fibration.hpp"
#include "hilali/report.hpp"

using nlohmann::json;

struct hilali_model {
    hilali::SullivanModel model;
    std::string name;
};

struct hilali_fibration {
    hilali::FibrationModel fibration;
    bool formal_all;
    std::optional<hilali::Prop5Split> fiber_split;
    std::optional<hilali::Prop5Split> base_split;
};

namespace {

char* dup_string(const std::string& s) {
    char* out = new (std::nothrow) char[s.size() + 1];
    if (out) std::memcpy(out, s.c_str(), s.size() + 1);
    return out;
}

void set_err(char** err, const std::string& msg) {
    if (err) *err = dup_string(msg);
}

// Uniform exception mapping for every entry point.
template <class F>
hilali_status guarded(char** err, F&& f) {
    try {
        return f();
    } catch (const hilali::ParseError& e) {
        set_err(err, e.what());
        return e.semantic ? HILALI_ERROR_INVALID : HILALI_ERROR_PARSE;
    } catch (const hilali::ModelError& e) {
        set_err(err, e.what());
        return HILALI_ERROR_INVALID;
    } catch (const nlohmann::json::exception& e) {
        set_err(err, e.what());
        return HILALI_ERROR_PARSE;
    } catch (const std::invalid_argument& e) {
        set_err(err, e.what());
        return HILALI_ERROR_USAGE;
    } catch (const std::exception& e) {
        set_err(err, e.what());
        return HILALI_ERROR_INTERNAL;
    }
}

std::string dump(const json& j) { return j.dump(2); }

}  // namespace

extern "C" {

const char* hilali_status_name(hilali_status s) {
    switch (s) {
        case HILALI_OK: return "ok";
        case HILALI_ERROR_PARSE: return "parse_error";
        case HILALI_ERROR_INVALID: return "invalid";
        case HILALI_ERROR_USAGE: return "usage_error";
        case HILALI_ERROR_INTERNAL: return "internal_error";
    }
    return "?";
}

void hilali_string_free(char* s) { delete[] s; }

hilali_status hilali_model_from_dsl(const char* text, hilali_model** out, char** err) {
    if (!text || !out) {
        set_err(err, "null argument");
        return HILALI_ERROR_USAGE;
    }
    return guarded(err, [&] {
        hilali::ParsedModel pm = hilali::parse_model(text);
        *out = new hilali_model{std::move(pm.model), std::move(pm.name)};
        return HILALI_OK;
    });
}

hilali_status hilali_model_from_catalog(const char* key, hilali_model** out, char** err) {
    if (!key || !out) {
        set_err(err, "null argument");
        return HILALI_ERROR_USAGE;
    }
    return guarded(err, [&] {
        auto entry = hilali::catalog_model(key);
        if (!entry) {
            set_err(err, "unknown catalog model '" + std::string(key) + "'");
            return HILALI_ERROR_USAGE;
        }
        *out = new hilali_model{std::move(entry->model), entry->key};
        return HILALI_OK;
    });
}

void hilali_model_free(hilali_model* m) { delete m; }

hilali_status hilali_model_print_dsl(const hilali_model* m, const char* name, char** out) {
    if (!m || !out) return HILALI_ERROR_USAGE;
    return guarded(nullptr, [&] {
        std::string n = name ? name : (m->name.empty() ? "model" : m->name);
        // catalog keys contain ':' and ',': regularize into an identifier
        for (char& c : n)
            if (!std::isalnum(static_cast<unsigned char>(c)) && c != '_') c = '_';
        *out = dup_string(hilali::print_model(m->model, n));
        return HILALI_OK;
    });
}

hilali_status hilali_model_validate_json(const hilali_model* m, long cap, char** out) {
    if (!m || !out) return HILALI_ERROR_USAGE;
    return guarded(nullptr, [&] {
        json j;
        hilali::DSquaredReport d2 = m->model.check_d_squared();
        j["d_squared"] = d2.ok;
        if (!d2.ok) {
            j["failing_generator"] = m->model.generator(d2.failing_generator).name;
            j["residue"] = hilali::print_polynomial(d2.residue, m->model);
        } else {
            std::optional<long long> user_cap;
            if (cap >= 0) user_cap = cap;
            j["ellipticity"] = hilali::ellipticity_json(hilali::ellipticity_check(m->model, user_cap));
        }
        *out = dup_string(dump(j));
        return HILALI_OK;
    });
}

hilali_status hilali_model_invariants_json(const hilali_model* m, char** out, char** err) {
    if (!m || !out) {
        set_err(err, "null argument");
        return HILALI_ERROR_USAGE;
    }
    return guarded(err, [&] {
        hilali::EllipticInvariants inv = hilali::compute_invariants(m->model);
        json j = hilali::invariants_json(inv);
        j["model"] = m->name;
        *out = dup_string(dump(j));
        return HILALI_OK;
    });
}

hilali_status hilali_model_scale(const hilali_model* m, unsigned i, hilali_model** out,
                                 char** err) {
    if (!m || !out) {
        set_err(err, "null argument");
        return HILALI_ERROR_USAGE;
    }
    return guarded(err, [&] {
        *out = new hilali_model{hilali::degree_scale(m->model, i),
                                m->name + "_scaled_" + std::to_string(i)};
        return HILALI_OK;
    });
}

hilali_status hilali_catalog_models_json(char** out) {
    if (!out) return HILALI_ERROR_USAGE;
    return guarded(nullptr, [&] {
        json arr = json::array();
        for (const auto& e : hilali::catalog_models()) {
            json j{{"key", e.key},
                   {"formal", e.formal},
                   {"pure", e.pure},
                   {"two_stage", e.two_stage}};
            if (!e.formality_provenance.empty()) j["formality"] = e.formality_provenance;
            arr.push_back(j);
        }
        *out = dup_string(dump(arr));
        return HILALI_OK;
    });
}

hilali_status hilali_catalog_fibrations_json(char** out) {
    if (!out) return HILALI_ERROR_USAGE;
    return guarded(nullptr, [&] {
        json arr = json::array();
        for (const auto& e : hilali::catalog_fibrations())
            arr.push_back(json{{"key", e.key}, {"formal_all", e.formal_all}});
        *out = dup_string(dump(arr));
        return HILALI_OK;
    });
}

hilali_status hilali_fibration_from_catalog(const char* key, hilali_fibration** out, char** err) {
    if (!key || !out) {
        set_err(err, "null argument");
        return HILALI_ERROR_USAGE;
    }
    return guarded(err, [&] {
        auto e = hilali::catalog_fibration(key);
        if (!e) {
            set_err(err, "unknown catalog fibration '" + std::string(key) + "'");
            return HILALI_ERROR_USAGE;
        }
        *out = new hilali_fibration{std::move(e->fibration), e->formal_all, e->fiber_split,
                                    e->base_split};
        return HILALI_OK;
    });
}

hilali_status hilali_fibration_build(const char* base_dsl, const char* fiber_dsl,
                                     const char* perturbation, hilali_fibration** out,
                                     char** err) {
    if (!base_dsl || !fiber_dsl || !out) {
        set_err(err, "null argument");
        return HILALI_ERROR_USAGE;
    }
    return guarded(err, [&] {
        hilali::ParsedModel base = hilali::parse_model(base_dsl);
        hilali::ParsedModel fiber = hilali::parse_model(fiber_dsl);
        hilali::SullivanModel shell = hilali::fibration_total_shell(base.model, fiber.model);
        std::vector<hilali::Polynomial> pert(fiber.model.generator_count(), shell.zero());
        if (perturbation)
            pert = hilali::parse_perturbation(perturbation, shell, base.model.generator_count());
        hilali::FibrationModel f = hilali::build_fibration(base.model, fiber.model, pert);
        *out = new hilali_fibration{std::move(f), false, std::nullopt, std::nullopt};
        return HILALI_OK;
    });
}

void hilali_fibration_free(hilali_fibration* f) { delete f; }

hilali_status hilali_fibration_report_json(const hilali_fibration* f, char** out, char** err) {
    if (!f || !out) {
        set_err(err, "null argument");
        return HILALI_ERROR_USAGE;
    }
    return guarded(err, [&] {
        hilali::FibrationReport rep =
            hilali::analyze_fibration(f->fibration, f->formal_all, f->fiber_split, f->base_split);
        *out = dup_string(dump(hilali::fibration_report_json(rep)));
        return HILALI_OK;
    });
}

hilali_status hilali_two_stage_bound_json(long n, long m, long r, char** out, char** err) {
    if (!out) {
        set_err(err, "null argument");
        return HILALI_ERROR_USAGE;
    }
    return guarded(err, [&] {
        *out = dup_string(dump(hilali::two_stage_bound_json(hilali::TwoStageParams{n, m, r})));
        return HILALI_OK;
    });
}

hilali_status hilali_threshold_json(const char* eps, char** out, char** err) {
    if (!eps || !out) {
        set_err(err, "null argument");
        return HILALI_ERROR_USAGE;
    }
    return guarded(err, [&] {
        hilali::Rational e = hilali::Rational::from_string(eps);
        hilali::ThresholdResult t = hilali::threshold(e);
        *out = dup_string(dump(hilali::threshold_json(t, e)));
        return HILALI_OK;
    });
}

hilali_status hilali_experiment_csv(const char* config, char** out, char** err) {
    if (!out) {
        set_err(err, "null argument");
        return HILALI_ERROR_USAGE;
    }
    return guarded(err, [&] {
        hilali::ExperimentConfig cfg;
        if (config && *config) {
            json j = json::parse(config);
            cfg.samples = j.value("samples", cfg.samples);
            cfg.seed = j.value("seed", cfg.seed);
            if (j.contains("ranges")) {
                const json& r = j["ranges"];
                cfg.ranges.n_even_max = r.value("n_max", cfg.ranges.n_even_max);
                cfg.ranges.m_w0_max = r.value("m_max", cfg.ranges.m_w0_max);
                cfg.ranges.r_extra_max = r.value("r_max", cfg.ranges.r_extra_max);
                if (r.contains("even_degrees"))
                    cfg.ranges.even_degrees = r["even_degrees"].get<std::vector<long long>>();
                if (r.contains("odd_degrees"))
                    cfg.ranges.odd_degrees = r["odd_degrees"].get<std::vector<long long>>();
                cfg.ranges.power_min = r.value("power_min", cfg.ranges.power_min);
                cfg.ranges.power_max = r.value("power_max", cfg.ranges.power_max);
                cfg.ranges.retry_budget = r.value("retry_budget", cfg.ranges.retry_budget);
                cfg.ranges.pure_only = r.value("pure", cfg.ranges.pure_only);
            }
        }
        for (long long d : cfg.ranges.even_degrees)
            if (d < 2 || d % 2 != 0) throw std::invalid_argument("even_degrees must be even, >= 2");
        for (long long d : cfg.ranges.odd_degrees)
            if (d < 3 || d % 2 == 0) throw std::invalid_argument("odd_degrees must be odd, >= 3");
        if (cfg.ranges.power_min < 2) throw std::invalid_argument("power_min must be >= 2");
        hilali::ExperimentResult res = hilali::run_experiment(cfg);
        *out = dup_string(res.csv);
        return HILALI_OK;
    });
}

}  // extern "C"
