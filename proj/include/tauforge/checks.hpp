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

#pragma once

#include <algorithm>
#include <atomic>
#include <chrono>
#include <functional>
#include <thread>
#include <vector>

#include "tauforge/identities.hpp"
#include "tauforge/product_identity.hpp"
#include "tauforge/random_check.hpp"
#include "tauforge/report.hpp"
#include "tauforge/tau.hpp"
#include "tauforge/theta.hpp"
#include "tauforge/wave.hpp"

namespace tauforge {

struct RunConfig {
    // Tau selection: staircase index, or an explicit polynomial.
    int staircase_k = 1;
    std::optional<Poly> explicit_tau;
    std::string tau_label;

    double tolerance = 1e-9;
    std::uint64_t seed = 20260823;
    int trials = 20;            // random_point_check confirmations
    int theta_points = 100;
    int sine_points = 1000;
    std::vector<double> theta_qs = {0.05, 0.1, 0.3};
    ThetaConvention theta_convention = ThetaConvention::ScaledByPi;
    int max_k = 3;              // suite: staircase taus 1..max_k
    int generated_max_n = 3;    // suite: product identities 2..generated_max_n
    int parallelism = 0;        // 0 = hardware concurrency
};

inline const std::vector<std::string>& check_names() {
    static const std::vector<std::string> names = {
        "fay", "diff-fay", "lemma22", "cubic-i", "cubic-ii", "seventh", "generated",
        "lemma23", "sturm", "ft", "theta-fay", "theta-cubic", "theta-degenerate", "sine"};
    return names;
}

namespace detail {

inline TauPoly select_tau(const RunConfig& cfg, std::string& label) {
    if (cfg.explicit_tau) {
        label = cfg.tau_label.empty() ? "file" : cfg.tau_label;
        // Explicit taus are deliberately not pre-certified: failing the
        // identity checks is exactly what a bad tau file should do.
        return TauPoly::unchecked(*cfg.explicit_tau);
    }
    label = "staircase-" + std::to_string(cfg.staircase_k);
    return staircase_tau(cfg.staircase_k);
}

class Stopwatch {
  public:
    Stopwatch() : start_(std::chrono::steady_clock::now()) {}
    double ms() const {
        return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start_).count();
    }

  private:
    std::chrono::steady_clock::time_point start_;
};

inline void finish_exact(IdentityReport& rep, const Poly& residual, const RunConfig& cfg) {
    rep.residual_terms = static_cast<long long>(residual.term_count());
    rep.status = residual.is_zero() ? "pass" : "fail";
    auto rc = random_point_check(residual, cfg.seed, cfg.trials);
    rep.params["random_check"] =
        rc.probably_zero() ? "probably_zero" : "nonzero_hit@" + std::to_string(rc.hit_trial);
    // Exact and sampled answers must agree.
    if (residual.is_zero() != rc.probably_zero()) rep.status = "error";
}

} // namespace detail

// ---------------------------------------------------------------------------
// One report per (check, tau/parameter) combination, deterministic order.
// ---------------------------------------------------------------------------

inline std::vector<IdentityReport> run_check(const std::string& name, const RunConfig& cfg) {
    std::vector<IdentityReport> out;
    detail::Stopwatch clock;

    auto base = [&](const std::string& check, const std::string& tau_id) {
        IdentityReport r;
        r.check = check;
        r.tau_id = tau_id;
        r.seed = cfg.seed;
        return r;
    };

    if (name == "theta-fay" || name == "theta-cubic" || name == "theta-degenerate" || name == "sine") {
        IdentityReport rep = base(name, "");
        double tol = cfg.tolerance;
        SweepResult sw;
        if (name == "theta-fay") {
            tol = std::min(tol, 1e-9);
            sw = sweep_theta_fay(cfg.theta_qs, cfg.theta_points, cfg.seed, cfg.theta_convention);
        } else if (name == "theta-cubic") {
            tol = std::min(tol, 1e-8);
            sw = sweep_theta_cubic(cfg.theta_qs, cfg.theta_points, cfg.seed, cfg.theta_convention);
            rep.note = "conjecture-check";
        } else if (name == "theta-degenerate") {
            tol = std::min(tol, 1e-8);
            sw = sweep_theta_degenerate(cfg.theta_qs, cfg.theta_points, cfg.seed, cfg.theta_convention);
            rep.note = "conjecture-check";
        } else {
            tol = std::min(tol, 1e-11);
            sw = sweep_sine(cfg.sine_points, cfg.seed);
        }
        rep.params["points"] = sw.rows.size();
        rep.params["max_residual"] = sw.max_residual;
        rep.params["tolerance"] = tol;
        rep.params["skipped_degenerate"] = sw.skipped_degenerate;
        rep.status = sw.max_residual < tol ? "pass" : "fail";
        rep.elapsed_ms = clock.ms();
        out.push_back(rep);
        return out;
    }

    std::string tau_id;
    TauPoly tau = detail::select_tau(cfg, tau_id);

    if (name == "fay") {
        IdentityReport rep = base(name, tau_id);
        detail::finish_exact(rep, fay_residual(tau.poly()), cfg);
        rep.elapsed_ms = clock.ms();
        out.push_back(rep);
    } else if (name == "diff-fay") {
        IdentityReport rep = base(name, tau_id);
        detail::finish_exact(rep, diff_fay_residual(tau), cfg);
        rep.elapsed_ms = clock.ms();
        out.push_back(rep);
    } else if (name == "lemma22") {
        for (int v = 1; v <= 8; ++v) {
            detail::Stopwatch c2;
            IdentityReport rep = base(name, tau_id);
            rep.params["variant"] = v;
            detail::finish_exact(rep, lemma22_residual(tau, v), cfg);
            rep.elapsed_ms = c2.ms();
            out.push_back(rep);
        }
    } else if (name == "cubic-i" || name == "cubic-ii" || name == "seventh") {
        IdentityReport rep = base(name, tau_id);
        IdentitySides sides = name == "cubic-i"    ? cubic_i_sides(tau)
                              : name == "cubic-ii" ? cubic_ii_sides(tau)
                                                   : seventh_order_sides(tau);
        rep.lhs_terms = static_cast<long long>(sides.lhs.term_count());
        rep.rhs_terms = static_cast<long long>(sides.rhs.term_count());
        detail::finish_exact(rep, sides.residual(), cfg);
        if (name == "seventh")
            rep.note = "printed z1^2*z3^3*z4^2 term has odd z-degree; derivation gives z1^2*z3^2*z4^2";
        rep.elapsed_ms = clock.ms();
        out.push_back(rep);
    } else if (name == "generated") {
        for (int n = 2; n <= cfg.generated_max_n; ++n) {
            detail::Stopwatch c2;
            IdentityReport rep = base(name, tau_id);
            rep.params["n"] = n;
            auto exprs = generate_product_identity(n, std::max(4, cfg.generated_max_n));
            VerifyResult vr = verify_identity(exprs, tau);
            rep.lhs_terms = static_cast<long long>(vr.lhs.num().term_count());
            rep.rhs_terms = static_cast<long long>(vr.rhs.num().term_count());
            Poly residual = (vr.lhs - vr.rhs).num();
            rep.residual_terms = static_cast<long long>(residual.term_count());
            rep.status = vr.pass ? "pass" : "fail";
            auto rc = random_point_check(residual, cfg.seed, cfg.trials);
            rep.params["random_check"] =
                rc.probably_zero() ? "probably_zero" : "nonzero_hit@" + std::to_string(rc.hit_trial);
            rep.elapsed_ms = c2.ms();
            out.push_back(rep);
        }
    } else if (name == "lemma23") {
        for (int v = 1; v <= 4; ++v) {
            detail::Stopwatch c2;
            IdentityReport rep = base(name, tau_id);
            rep.params["variant"] = v;
            auto wr = lemma23_residual(tau, v);
            rep.status = wr.pass() ? "pass" : "fail";
            rep.params["key_match"] = wr.key_match;
            rep.params["mantissa_match"] = wr.mantissa_match;
            rep.elapsed_ms = c2.ms();
            out.push_back(rep);
        }
    } else if (name == "sturm") {
        for (bool star : {false, true}) {
            detail::Stopwatch c2;
            IdentityReport rep = base(name, tau_id);
            rep.params["wave"] = star ? "psi*" : "psi";
            detail::finish_exact(rep, sturm_liouville_residual(tau, 1, star), cfg);
            rep.elapsed_ms = c2.ms();
            out.push_back(rep);
        }
    } else if (name == "ft") {
        IdentityReport rep = base(name, tau_id);
        auto ft = faddeev_takhtajan_check(tau);
        rep.status = ft.pass() ? "pass" : "fail";
        rep.params["w_eq_w1"] = ft.w_eq_w1;
        rep.params["w_eq_w2"] = ft.w_eq_w2;
        rep.residual_terms = static_cast<long long>((ft.w - ft.w1).num().term_count() +
                                                    (ft.w - ft.w2).num().term_count());
        rep.elapsed_ms = clock.ms();
        out.push_back(rep);
    } else {
        throw error("unknown check '" + name + "'");
    }
    return out;
}

// ---------------------------------------------------------------------------
// Full suite: every check crossed with staircase taus up to max_k.  The
// heavyweight entries (seventh-order sides, lemma23, sturm) stop at k = 2,
// matching the identities' documented coverage; everything exact must pass.
// Entries may run concurrently; reports are ordered by (check, tau, params).
// ---------------------------------------------------------------------------

inline std::vector<IdentityReport> run_suite(const RunConfig& cfg) {
    struct Job {
        std::string check;
        int k;              // 0 = no tau
        bool explicit_tau = false;
    };
    std::vector<Job> jobs;
    for (int k = 1; k <= cfg.max_k; ++k)
        for (const char* c : {"fay", "diff-fay", "lemma22", "cubic-i", "cubic-ii", "ft"})
            jobs.push_back({c, k});
    for (int k = 1; k <= std::min(cfg.max_k, 2); ++k)
        for (const char* c : {"seventh", "lemma23", "sturm"})
            jobs.push_back({c, k});
    jobs.push_back({"generated", 1});
    for (const char* c : {"theta-fay", "theta-cubic", "theta-degenerate", "sine"}) jobs.push_back({c, 0});
    if (cfg.explicit_tau)
        for (const char* c : {"fay", "diff-fay", "cubic-i", "cubic-ii"}) jobs.push_back({c, 0, true});

    unsigned degree = cfg.parallelism > 0 ? static_cast<unsigned>(cfg.parallelism)
                                          : std::max(1u, std::thread::hardware_concurrency());
    std::vector<std::vector<IdentityReport>> results(jobs.size());
    std::atomic<std::size_t> next{0};
    auto worker = [&]() {
        while (true) {
            std::size_t i = next.fetch_add(1);
            if (i >= jobs.size()) break;
            RunConfig local = cfg;
            local.staircase_k = jobs[i].k > 0 ? jobs[i].k : 1;
            if (!jobs[i].explicit_tau) local.explicit_tau.reset();
            try {
                results[i] = run_check(jobs[i].check, local);
            } catch (const error& e) {
                IdentityReport rep;
                rep.check = jobs[i].check;
                rep.tau_id = jobs[i].explicit_tau ? cfg.tau_label : "staircase-" + std::to_string(local.staircase_k);
                rep.status = "error";
                rep.note = e.what();
                rep.seed = cfg.seed;
                results[i] = {rep};
            }
        }
    };
    std::vector<std::thread> pool;
    for (unsigned i = 0; i < std::min<std::size_t>(degree, jobs.size()); ++i) pool.emplace_back(worker);
    for (auto& t : pool) t.join();

    std::vector<IdentityReport> out;
    for (auto& r : results) out.insert(out.end(), r.begin(), r.end());
    std::stable_sort(out.begin(), out.end(), [](const IdentityReport& a, const IdentityReport& b) {
        if (a.check != b.check) return a.check < b.check;
        if (a.tau_id != b.tau_id) return a.tau_id < b.tau_id;
        return a.params.dump() < b.params.dump();
    });
    return out;
}

inline nlohmann::json suite_to_json(const RunConfig& cfg, const std::vector<IdentityReport>& reports) {
    nlohmann::json j;
    j["config"] = {
        {"max_k", cfg.max_k},
        {"seed", cfg.seed},
        {"trials", cfg.trials},
        {"tolerance", cfg.tolerance},
        {"theta_points", cfg.theta_points},
        {"sine_points", cfg.sine_points},
        {"theta_qs", cfg.theta_qs},
    };
    bool all = true;
    nlohmann::json arr = nlohmann::json::array();
    for (auto& r : reports) {
        arr.push_back(r.to_json());
        if (!r.passed()) all = false;
    }
    j["reports"] = arr;
    j["passed"] = all;
    return j;
}

} // namespace tauforge
