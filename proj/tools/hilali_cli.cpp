// Command-line front end. Links the shared C API only; presentation (flag
// parsing, file IO, human-readable rendering of the JSON reports) lives
// here, computation in the library.

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "hilali.h"

using nlohmann::json;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitCheckFailed = 1;
constexpr int kExitUsage = 2;

struct CString {
    char* p = nullptr;
    ~CString() { hilali_string_free(p); }
    std::string str() const { return p ? p : ""; }
};

int fail_usage(const CString& err, hilali_status st) {
    std::cerr << "error (" << hilali_status_name(st) << "): " << err.str() << "\n";
    return kExitUsage;
}

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::runtime_error("cannot open '" + path + "'");
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

// model references: catalog:KEY or a file path
hilali_status load_model(const std::string& ref, hilali_model** out, CString& err) {
    if (ref.rfind("catalog:", 0) == 0)
        return hilali_model_from_catalog(ref.substr(8).c_str(), out, &err.p);
    std::string text;
    try {
        text = read_file(ref);
    } catch (const std::exception& e) {
        err.p = nullptr;
        std::cerr << "error: " << e.what() << "\n";
        return HILALI_ERROR_USAGE;
    }
    return hilali_model_from_dsl(text.c_str(), out, &err.p);
}

std::string frac(const json& f) {
    std::string s = f.at("num").get<std::string>();
    if (f.at("den").get<std::string>() != "1") s += "/" + f.at("den").get<std::string>();
    return s;
}

void print_invariants_human(const json& j) {
    std::cout << "model:            " << j.value("model", std::string("-")) << "\n";
    std::cout << "dim pi:           " << j["dim_pi"] << "  (even " << j["dim_pi_even"] << ", odd "
              << j["dim_pi_odd"] << ")\n";
    std::cout << "chi_pi:           " << j["chi_pi"] << "\n";
    std::cout << "chi:              " << j["chi"] << "\n";
    std::cout << "formal dimension: " << j["formal_dimension"] << "\n";
    std::cout << "dim H:            " << j["dim_H"] << "\n";
    std::cout << "h:                " << frac(j["h"]) << "  (~" << j["h_decimal"].get<std::string>()
              << ")\n";
    std::cout << "exponents even:   [";
    bool first = true;
    for (const auto& a : j["exponents"]["even"]) {
        if (!first) std::cout << ", ";
        std::cout << a;
        first = false;
    }
    std::cout << "]\nexponents odd:    [";
    first = true;
    for (const auto& b : j["exponents"]["odd"]) {
        if (!first) std::cout << ", ";
        std::cout << b;
        first = false;
    }
    std::cout << "]\nbetti:            ";
    first = true;
    for (auto it = j["betti"].begin(); it != j["betti"].end(); ++it) {
        if (!first) std::cout << ", ";
        std::cout << "b" << it.key() << "=" << it.value();
        first = false;
    }
    std::cout << "\n";
}

int print_report_human(const json& j) {
    auto line = [&](const char* label, const json& inv) {
        std::cout << label << ": dim pi " << inv["dim_pi"] << ", dim H " << inv["dim_H"] << ", h "
                  << frac(inv["h"]) << ", formal dim " << inv["formal_dimension"] << "\n";
    };
    line("fiber", j["fiber"]);
    line("base ", j["base"]);
    line("total", j["total"]);
    std::cout << "h(F x B) = " << frac(j["h_product"]) << "\n";
    std::cout << "flags: pi_trivial=" << (j["flags"]["pi_trivial"].get<bool>() ? "yes" : "no")
              << " tnhz=" << (j["flags"]["tnhz"].get<bool>() ? "yes" : "no")
              << " contracted_pairs=" << j["contracted_pairs"] << "\n";
    if (j.contains("c_tf")) std::cout << "c (dim im d0|T_F) = " << j["c_tf"] << "\n";
    for (const auto& c : j["checks"]) {
        std::string status;
        if (!c["applicable"].get<bool>())
            status = "n/a  ";
        else if (!c["asserted"].get<bool>())
            status = c["holds"].get<bool>() ? "diag+" : "diag-";
        else
            status = c["holds"].get<bool>() ? "pass " : "FAIL ";
        std::cout << "  [" << status << "] " << c["name"].get<std::string>() << "  slack "
                  << frac(c["slack"]) << "\n";
    }
    bool pass = j["pass"].get<bool>();
    std::cout << (pass ? "PASS" : "FAIL") << "\n";
    return pass ? kExitOk : kExitCheckFailed;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact rational-homotopy computations for finite Sullivan models"};
    app.require_subcommand(1);

    // ------------------------------------------------------------ validate
    auto* validate = app.add_subcommand("validate", "check d^2 = 0 and decide ellipticity");
    std::string v_ref;
    long v_cap = -1;
    bool v_json = false;
    validate->add_option("model", v_ref, "catalog:KEY or model file")->required();
    validate->add_option("--cap", v_cap, "degree cap for the ellipticity scan");
    validate->add_flag("--json", v_json, "emit JSON");

    // ---------------------------------------------------------- invariants
    auto* invariants = app.add_subcommand("invariants", "invariants of an elliptic model");
    std::string i_ref;
    bool i_json = false;
    invariants->add_option("model", i_ref, "catalog:KEY or model file")->required();
    invariants->add_flag("--json", i_json, "emit JSON");

    // ------------------------------------------------------ fibration-check
    auto* fib = app.add_subcommand("fibration-check", "evaluate the fibration inequality report");
    std::string f_ref, f_base, f_fiber, f_perturb;
    bool f_json = false;
    fib->add_option("fibration", f_ref, "catalog:KEY (omit when using --base/--fiber)");
    fib->add_option("--base", f_base, "base model file");
    fib->add_option("--fiber", f_fiber, "fiber model file");
    fib->add_option("--perturb", f_perturb, "perturbation file (optional)");
    fib->add_flag("--json", f_json, "emit JSON");

    // ------------------------------------------------------------ construct
    auto* construct = app.add_subcommand("construct", "emit a catalog model as a model document");
    std::string c_ref;
    unsigned c_scale = 0;
    bool c_list = false;
    construct->add_option("model", c_ref, "catalog:KEY");
    construct->add_option("--scale", c_scale, "apply degree scaling by 3^i");
    construct->add_flag("--list", c_list, "list catalog keys");

    // ---------------------------------------------------------------- bound
    auto* bound = app.add_subcommand("bound", "two-stage bound and threshold search");
    std::string b_params, b_threshold;
    bool b_json = false;
    bound->add_option("--params", b_params, "n,m,r");
    bound->add_option("--threshold", b_threshold, "epsilon as a fraction, e.g. 1/4");
    bound->add_flag("--json", b_json, "emit JSON");

    // ----------------------------------------------------------- experiment
    auto* experiment = app.add_subcommand("experiment", "random two-stage sampling, CSV output");
    std::size_t e_samples = 100;
    std::uint64_t e_seed = 0;
    std::string e_csv;
    std::size_t e_nmax = 2, e_mmax = 2, e_rmax = 1;
    long long e_pmin = 2, e_pmax = 3;
    bool e_pure = false;
    experiment->add_option("--samples", e_samples, "number of samples");
    experiment->add_option("--seed", e_seed, "master seed");
    experiment->add_option("--csv", e_csv, "output path (default: stdout)");
    experiment->add_option("--max-n", e_nmax, "max dim V_even");
    experiment->add_option("--max-m", e_mmax, "max dim W0");
    experiment->add_option("--max-r", e_rmax, "max dim W1 - dim V_even");
    experiment->add_option("--power-min", e_pmin, "min relation power");
    experiment->add_option("--power-max", e_pmax, "max relation power");
    experiment->add_flag("--pure", e_pure, "restrict targets to even generators");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int rc = app.exit(e);
        return rc == 0 ? kExitOk : kExitUsage;
    }

    if (validate->parsed()) {
        hilali_model* m = nullptr;
        CString err;
        hilali_status st = load_model(v_ref, &m, err);
        if (st == HILALI_ERROR_INVALID) {
            // syntactically fine but d^2 or homogeneity failed: that is the
            // very thing validate checks
            if (v_json)
                std::cout << json{{"valid", false}, {"reason", err.str()}}.dump(2) << "\n";
            else
                std::cout << "invalid: " << err.str() << "\n";
            return kExitCheckFailed;
        }
        if (st != HILALI_OK) return fail_usage(err, st);
        CString out;
        st = hilali_model_validate_json(m, v_cap, &out.p);
        hilali_model_free(m);
        if (st != HILALI_OK) return fail_usage(out, st);
        json j = json::parse(out.str());
        if (v_json) {
            std::cout << j.dump(2) << "\n";
        } else {
            std::cout << "d^2 = 0: " << (j["d_squared"].get<bool>() ? "yes" : "no") << "\n";
            if (j.contains("ellipticity")) {
                std::cout << "ellipticity: " << j["ellipticity"]["status"].get<std::string>()
                          << " (cap " << j["ellipticity"]["cap_used"] << ")\n";
                if (j["ellipticity"].contains("note"))
                    std::cout << "note: " << j["ellipticity"]["note"].get<std::string>() << "\n";
            }
        }
        return kExitOk;
    }

    if (invariants->parsed()) {
        hilali_model* m = nullptr;
        CString err;
        hilali_status st = load_model(i_ref, &m, err);
        if (st != HILALI_OK) return fail_usage(err, st);
        CString out, ierr;
        st = hilali_model_invariants_json(m, &out.p, &ierr.p);
        hilali_model_free(m);
        if (st == HILALI_ERROR_INVALID) {
            std::cerr << "check failed: " << ierr.str() << "\n";
            return kExitCheckFailed;
        }
        if (st != HILALI_OK) return fail_usage(ierr, st);
        json j = json::parse(out.str());
        if (i_json)
            std::cout << j.dump(2) << "\n";
        else
            print_invariants_human(j);
        return kExitOk;
    }

    if (fib->parsed()) {
        hilali_fibration* f = nullptr;
        CString err;
        hilali_status st;
        if (!f_ref.empty()) {
            if (f_ref.rfind("catalog:", 0) != 0) {
                std::cerr << "error: fibration reference must be catalog:KEY\n";
                return kExitUsage;
            }
            st = hilali_fibration_from_catalog(f_ref.substr(8).c_str(), &f, &err.p);
        } else if (!f_base.empty() && !f_fiber.empty()) {
            try {
                std::string base = read_file(f_base);
                std::string fiber = read_file(f_fiber);
                std::string pert;
                if (!f_perturb.empty()) pert = read_file(f_perturb);
                st = hilali_fibration_build(base.c_str(), fiber.c_str(),
                                            f_perturb.empty() ? nullptr : pert.c_str(), &f,
                                            &err.p);
            } catch (const std::exception& e) {
                std::cerr << "error: " << e.what() << "\n";
                return kExitUsage;
            }
        } else {
            std::cerr << "error: give catalog:KEY or both --base and --fiber\n";
            return kExitUsage;
        }
        if (st != HILALI_OK) return fail_usage(err, st);
        CString out, rerr;
        st = hilali_fibration_report_json(f, &out.p, &rerr.p);
        hilali_fibration_free(f);
        if (st != HILALI_OK) return fail_usage(rerr, st);
        json j = json::parse(out.str());
        if (f_json) {
            std::cout << j.dump(2) << "\n";
            return j["pass"].get<bool>() ? kExitOk : kExitCheckFailed;
        }
        return print_report_human(j);
    }

    if (construct->parsed()) {
        if (c_list) {
            CString models, fibs;
            hilali_catalog_models_json(&models.p);
            hilali_catalog_fibrations_json(&fibs.p);
            std::cout << "models:\n";
            for (const auto& e : json::parse(models.str()))
                std::cout << "  catalog:" << e["key"].get<std::string>() << "\n";
            std::cout << "fibrations:\n";
            for (const auto& e : json::parse(fibs.str()))
                std::cout << "  catalog:" << e["key"].get<std::string>() << "\n";
            return kExitOk;
        }
        if (c_ref.empty()) {
            std::cerr << "error: give catalog:KEY or --list\n";
            return kExitUsage;
        }
        hilali_model* m = nullptr;
        CString err;
        hilali_status st = load_model(c_ref, &m, err);
        if (st != HILALI_OK) return fail_usage(err, st);
        if (c_scale > 0) {
            hilali_model* scaled = nullptr;
            CString serr;
            st = hilali_model_scale(m, c_scale, &scaled, &serr.p);
            hilali_model_free(m);
            if (st == HILALI_ERROR_INVALID) {
                std::cerr << "check failed: " << serr.str() << "\n";
                return kExitCheckFailed;
            }
            if (st != HILALI_OK) return fail_usage(serr, st);
            m = scaled;
        }
        CString out;
        st = hilali_model_print_dsl(m, nullptr, &out.p);
        hilali_model_free(m);
        if (st != HILALI_OK) return kExitUsage;
        std::cout << out.str();
        return kExitOk;
    }

    if (bound->parsed()) {
        if (!b_params.empty()) {
            long n, m, r;
            if (std::sscanf(b_params.c_str(), "%ld,%ld,%ld", &n, &m, &r) != 3) {
                std::cerr << "error: --params expects n,m,r\n";
                return kExitUsage;
            }
            CString out, err;
            hilali_status st = hilali_two_stage_bound_json(n, m, r, &out.p, &err.p);
            if (st != HILALI_OK) return fail_usage(err, st);
            json j = json::parse(out.str());
            if (b_json) {
                std::cout << j.dump(2) << "\n";
            } else {
                std::cout << "bound(n=" << n << ", m=" << m << ", r=" << r
                          << ") = " << frac(j["bound"]) << "  (~"
                          << j["bound_decimal"].get<std::string>() << ")\n";
                if (j.contains("case1")) std::cout << "case 1: " << frac(j["case1"]) << "\n";
                if (j.contains("case2")) std::cout << "case 2: " << frac(j["case2"]) << "\n";
            }
            return kExitOk;
        }
        if (!b_threshold.empty()) {
            CString out, err;
            hilali_status st = hilali_threshold_json(b_threshold.c_str(), &out.p, &err.p);
            if (st != HILALI_OK) return fail_usage(err, st);
            json j = json::parse(out.str());
            if (b_json) {
                std::cout << j.dump(2) << "\n";
            } else {
                std::cout << "N = " << j["N"] << " for epsilon = " << frac(j["epsilon"]) << "\n";
                if (j.contains("witness"))
                    std::cout << "witness at total " << j["witness"]["total"] << ": (n,m,r) = ("
                              << j["witness"]["n"] << "," << j["witness"]["m"] << ","
                              << j["witness"]["r"] << ") with bound " << frac(j["witness"]["bound"])
                              << "\n";
                std::cout << "totals checked exhaustively: 0.." << j["scan_limit"] << "\n";
            }
            return kExitOk;
        }
        std::cerr << "error: give --params n,m,r or --threshold EPS\n";
        return kExitUsage;
    }

    if (experiment->parsed()) {
        json ranges{{"n_max", e_nmax}, {"m_max", e_mmax}, {"r_max", e_rmax},
                    {"power_min", e_pmin}, {"power_max", e_pmax}, {"pure", e_pure}};
        if (const char* budget = std::getenv("HILALI_RETRY_BUDGET")) {
            try {
                ranges["retry_budget"] = std::stoul(budget);
            } catch (...) {
                std::cerr << "error: HILALI_RETRY_BUDGET must be a number\n";
                return kExitUsage;
            }
        }
        json cfg{{"samples", e_samples}, {"seed", e_seed}, {"ranges", ranges}};
        CString out, err;
        hilali_status st = hilali_experiment_csv(cfg.dump().c_str(), &out.p, &err.p);
        if (st != HILALI_OK) return fail_usage(err, st);
        if (e_csv.empty()) {
            std::cout << out.str();
        } else {
            std::ofstream f(e_csv, std::ios::binary);
            if (!f) {
                std::cerr << "error: cannot write '" << e_csv << "'\n";
                return kExitUsage;
            }
            f << out.str();
        }
        return kExitOk;
    }

    return kExitUsage;
}
