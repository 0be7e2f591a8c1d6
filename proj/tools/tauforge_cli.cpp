// Copyright 2026 the tauforge authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "tauforge/checks.hpp"

namespace {

constexpr int kExitPass = 0;
constexpr int kExitFail = 1;
constexpr int kExitUsage = 2;

tauforge::Poly load_tau_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw tauforge::error("cannot open tau file '" + path + "'");
    std::ostringstream buf;
    std::string line;
    while (std::getline(in, line)) {
        // Skip the optional `staircase k = <k>` header and comments.
        if (line.rfind("staircase", 0) == 0 || line.rfind("#", 0) == 0) continue;
        buf << line << "\n";
    }
    std::string text = buf.str();
    if (text.find_first_not_of(" \t\r\n") == std::string::npos)
        throw tauforge::error("tau file '" + path + "' is empty");
    return tauforge::Poly::parse(text);
}

void emit_reports(const std::vector<tauforge::IdentityReport>& reports, bool as_json) {
    if (as_json) {
        nlohmann::json arr = nlohmann::json::array();
        for (auto& r : reports) arr.push_back(r.to_json());
        std::cout << arr.dump(2) << "\n";
    } else {
        for (auto& r : reports) std::cout << r.text_line() << "\n";
    }
}

bool all_passed(const std::vector<tauforge::IdentityReport>& reports) {
    for (auto& r : reports)
        if (!r.passed()) return false;
    return true;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"tauforge: exact verification of KdV tau-function identities"};
    app.set_config("--config", "", "flat key = value configuration file");
    app.require_subcommand(1);

    tauforge::RunConfig cfg;
    bool as_json = false;

    // gen-tau -----------------------------------------------------------
    int gen_k = 1;
    auto* gen = app.add_subcommand("gen-tau", "generate and certify a staircase tau polynomial");
    gen->add_option("k", gen_k, "staircase index (>= 1)")->required()->check(CLI::PositiveNumber);

    // check --------------------------------------------------------------
    std::string check_name, tau_file;
    auto* check = app.add_subcommand("check", "run one identity check");
    check->add_option("name", check_name, "check name")
        ->required()
        ->check(CLI::IsMember(tauforge::check_names()));
    check->add_option("--tau", cfg.staircase_k, "staircase tau index")->check(CLI::PositiveNumber)
        ->envname("TAUFORGE_TAU");
    check->add_option("--tau-file", tau_file, "file with a tau polynomial in canonical text form");
    check->add_flag("--json", as_json, "emit JSON reports");
    check->add_option("--seed", cfg.seed, "RNG seed")->envname("TAUFORGE_SEED");
    check->add_option("--trials", cfg.trials, "random point check trials")->check(CLI::PositiveNumber);
    check->add_option("--tolerance", cfg.tolerance, "numeric tolerance")->check(CLI::PositiveNumber)
        ->envname("TAUFORGE_TOLERANCE");
    check->add_option("--points", cfg.theta_points, "points per nome for theta sweeps");
    check->add_option("--sine-points", cfg.sine_points, "points for the sine sweep");
    check->add_option("--q", cfg.theta_qs, "theta nomes to sweep");
    check->add_option("--max-n", cfg.generated_max_n, "highest generated identity order");
    bool plain_theta = false;
    check->add_flag("--plain-theta-args", plain_theta, "use sin((2n+1)v) instead of sin((2n+1)pi v)");

    // report-suite ---------------------------------------------------------
    std::string json_out, suite_tau_file;
    auto* suite = app.add_subcommand("report-suite", "run the full acceptance matrix");
    suite->add_option("--tau-file", suite_tau_file, "additionally check a tau polynomial from a file");
    suite->add_option("--max-k", cfg.max_k, "largest staircase index")->check(CLI::PositiveNumber)
        ->envname("TAUFORGE_MAX_K");
    suite->add_flag("--json", as_json, "emit the aggregate JSON document");
    suite->add_option("--json-out", json_out, "also write the aggregate JSON to a file");
    suite->add_option("--seed", cfg.seed, "RNG seed")->envname("TAUFORGE_SEED");
    suite->add_option("--trials", cfg.trials, "random point check trials")->check(CLI::PositiveNumber);
    suite->add_option("--parallel", cfg.parallelism, "worker threads (0 = all cores)")
        ->envname("TAUFORGE_PARALLEL");
    suite->add_option("--points", cfg.theta_points, "points per nome for theta sweeps");
    suite->add_option("--sine-points", cfg.sine_points, "points for the sine sweep");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kExitUsage;
    }

    try {
        if (gen->parsed()) {
            tauforge::TauPoly tau = tauforge::staircase_tau(gen_k);
            std::cout << tau.poly().str() << "\n";
            std::cerr << "certified: staircase k = " << gen_k
                      << ", fay residual = 0, weight = " << gen_k * (gen_k + 1) / 2 << "\n";
            return kExitPass;
        }
        if (check->parsed()) {
            if (plain_theta) cfg.theta_convention = tauforge::ThetaConvention::Plain;
            if (!tau_file.empty()) {
                cfg.explicit_tau = load_tau_file(tau_file);
                cfg.tau_label = tau_file;
            }
            auto reports = tauforge::run_check(check_name, cfg);
            emit_reports(reports, as_json);
            return all_passed(reports) ? kExitPass : kExitFail;
        }
        if (suite->parsed()) {
            if (!suite_tau_file.empty()) {
                try {
                    cfg.explicit_tau = load_tau_file(suite_tau_file);
                    cfg.tau_label = suite_tau_file;
                } catch (const tauforge::error& e) {
                    // A corrupt tau file becomes an error entry, not a crash.
                    tauforge::IdentityReport rep;
                    rep.check = "tau-file";
                    rep.tau_id = suite_tau_file;
                    rep.status = "error";
                    rep.note = e.what();
                    nlohmann::json doc = tauforge::suite_to_json(cfg, {rep});
                    if (!json_out.empty()) std::ofstream(json_out) << doc.dump(2) << "\n";
                    if (as_json) std::cout << doc.dump(2) << "\n";
                    else std::cout << rep.text_line() << "\n";
                    return kExitFail;
                }
            }
            auto reports = tauforge::run_suite(cfg);
            nlohmann::json doc = tauforge::suite_to_json(cfg, reports);
            if (!json_out.empty()) {
                std::ofstream out(json_out);
                out << doc.dump(2) << "\n";
            }
            if (as_json) std::cout << doc.dump(2) << "\n";
            else emit_reports(reports, false);
            return doc["passed"].get<bool>() ? kExitPass : kExitFail;
        }
    } catch (const tauforge::error& e) {
        std::cerr << "error: " << e.what() << "\n";
        // Configuration problems (bad files, bad names) are usage errors;
        // identity failures are reported through the normal path above.
        return kExitUsage;
    }
    return kExitUsage;
}
