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

#include <cmath>
#include <complex>
#include <random>
#include <string>
#include <vector>

#include "tauforge/rational.hpp"

namespace tauforge {

using Complex = std::complex<double>;

// Two argument normalizations of the odd Jacobi theta series: the default
// takes sin((2n+1) pi v) so the zeros sit on the integers; the plain form
// takes sin((2n+1) v). The identities hold in either convention.
enum class ThetaConvention { ScaledByPi, Plain };

struct ThetaParams {
    Complex q{0.1, 0.0};
    int max_terms = 64;
    double tail_tolerance = 1e-16;
    ThetaConvention convention = ThetaConvention::ScaledByPi;
};

inline double theta_arg_scale(ThetaConvention c) {
    return c == ThetaConvention::ScaledByPi ? 3.14159265358979323846 : 1.0;
}

inline void require_nome(const ThetaParams& p) {
    if (!(std::abs(p.q) < 1.0)) throw error("theta nome must satisfy |q| < 1");
}

// theta11(v) = 2 sum_{n>=0} (-1)^n q^{(n+1/2)^2} sin((2n+1) s v),
// truncated once the term magnitude bound drops below tail_tolerance.
inline Complex theta11(Complex v, const ThetaParams& p) {
    require_nome(p);
    double s = theta_arg_scale(p.convention);
    Complex acc = 0.0;
    double absq = std::abs(p.q);
    for (int n = 0; n < p.max_terms; ++n) {
        double m = 2.0 * n + 1.0;
        Complex qp = std::pow(p.q, (n + 0.5) * (n + 0.5));
        Complex term = (n % 2 ? -1.0 : 1.0) * qp * std::sin(m * s * v);
        acc += term;
        // sin grows at most like exp(|Im arg|); for the real sweeps used
        // here the q-power bound is the controlling factor.
        double bound = std::pow(absq, (n + 1.5) * (n + 1.5)) * std::exp(std::abs(std::imag(v)) * (m + 2.0) * s);
        if (bound < p.tail_tolerance) break;
    }
    Complex r = 2.0 * acc;
    if (!std::isfinite(r.real()) || !std::isfinite(r.imag())) throw error("theta series overflow");
    return r;
}

// d/dv of the series above.
inline Complex theta11_derivative(Complex v, const ThetaParams& p) {
    require_nome(p);
    double s = theta_arg_scale(p.convention);
    Complex acc = 0.0;
    double absq = std::abs(p.q);
    for (int n = 0; n < p.max_terms; ++n) {
        double m = 2.0 * n + 1.0;
        Complex qp = std::pow(p.q, (n + 0.5) * (n + 0.5));
        acc += (n % 2 ? -1.0 : 1.0) * qp * m * s * std::cos(m * s * v);
        double bound = std::pow(absq, (n + 1.5) * (n + 1.5)) * (m + 2.0) * s *
                       std::exp(std::abs(std::imag(v)) * (m + 2.0) * s);
        if (bound < p.tail_tolerance) break;
    }
    return 2.0 * acc;
}

namespace detail {

// Relative residual of sum(lhs terms) - sum(rhs terms), normalized by the
// largest individual product so cancellation between large terms is
// measured against their own scale.
inline double relative_residual(const std::vector<Complex>& lhs, const std::vector<Complex>& rhs) {
    Complex l = 0.0, r = 0.0;
    double biggest = 0.0;
    for (Complex t : lhs) { l += t; biggest = std::max(biggest, std::abs(t)); }
    for (Complex t : rhs) { r += t; biggest = std::max(biggest, std::abs(t)); }
    if (biggest < 1e-280) throw error("degenerate point");
    return std::abs(l - r) / biggest;
}

} // namespace detail

// Genus-1 Fay: the three four-theta products sum to zero.
inline double theta_fay_g1_residual(Complex x, Complex z0, Complex z1, Complex z2, Complex z3,
                                    const ThetaParams& p) {
    auto t = [&](Complex v) { return theta11(v, p); };
    std::vector<Complex> terms = {
        t(z0 - z1) * t(z2 - z3) * t(x + z0 + z1) * t(x + z2 + z3),
        t(z0 - z2) * t(z3 - z1) * t(x + z0 + z2) * t(x + z3 + z1),
        t(z0 - z3) * t(z1 - z2) * t(x + z0 + z3) * t(x + z1 + z2),
    };
    return detail::relative_residual(terms, {});
}

// The conjectural cubic theta identity:
//   theta(z2-z1)[theta(x+z1+z2) theta(x-z1) theta(x-z2)
//                - theta(x-z1-z2) theta(x+z1) theta(x+z2)]
// = theta(z1+z2)[theta(x+z1-z2) theta(x-z1) theta(x+z2)
//                - theta(x-z1+z2) theta(x+z1) theta(x-z2)]
inline double theta_cubic_residual(Complex x, Complex z1, Complex z2, const ThetaParams& p) {
    auto t = [&](Complex v) { return theta11(v, p); };
    std::vector<Complex> lhs = {
        t(z2 - z1) * t(x + z1 + z2) * t(x - z1) * t(x - z2),
        -t(z2 - z1) * t(x - z1 - z2) * t(x + z1) * t(x + z2),
    };
    std::vector<Complex> rhs = {
        t(z1 + z2) * t(x + z1 - z2) * t(x - z1) * t(x + z2),
        -t(z1 + z2) * t(x - z1 + z2) * t(x + z1) * t(x - z2),
    };
    return detail::relative_residual(lhs, rhs);
}

// Degenerate (z1 = z2 = z) elliptic form:
//   theta'(0)[theta(x+2z) theta^2(x-z) - theta(x-2z) theta^2(x+z)]
// = theta(2z)[theta(x-z) W(theta(x), theta(x+z))
//             + theta(x+z) W(theta(x), theta(x-z))]
inline double theta_cubic_degenerate_residual(Complex x, Complex z, const ThetaParams& p) {
    auto t = [&](Complex v) { return theta11(v, p); };
    auto dt = [&](Complex v) { return theta11_derivative(v, p); };
    Complex d0 = dt(0.0);
    auto wr = [&](Complex a, Complex b) { return t(a) * dt(b) - dt(a) * t(b); };
    std::vector<Complex> lhs = {
        d0 * t(x + 2.0 * z) * t(x - z) * t(x - z),
        -d0 * t(x - 2.0 * z) * t(x + z) * t(x + z),
    };
    std::vector<Complex> rhs = {
        t(2.0 * z) * t(x - z) * wr(x, x + z),
        t(2.0 * z) * t(x + z) * wr(x, x - z),
    };
    return detail::relative_residual(lhs, rhs);
}

// The trigonometric cubic identity; exact, so the residual is absolute.
inline double sine_cubic_residual(double x, double z1, double z2) {
    auto s = [](double v) { return std::sin(v); };
    double lhs = s(z2 - z1) * (s(x + z1 + z2) * s(x - z1) * s(x - z2) -
                               s(x - z1 - z2) * s(x + z1) * s(x + z2));
    double rhs = s(z1 + z2) * (s(x + z1 - z2) * s(x - z1) * s(x + z2) -
                               s(x - z1 + z2) * s(x + z1) * s(x - z2));
    return std::abs(lhs - rhs);
}

// ---------------------------------------------------------------------------
// Batch sweeps. Sampling is uniform over [0.05, 0.95] per argument (away
// from the theta zeros on the integers), driven by a seeded mt19937_64 so
// runs are reproducible.
// ---------------------------------------------------------------------------

struct SweepRow {
    std::string check;
    double q;
    std::vector<double> point;
    double residual;
};

struct SweepResult {
    std::vector<SweepRow> rows;
    double max_residual = 0.0;
    int skipped_degenerate = 0;
};

template <typename ResidualFn>
SweepResult sweep(const std::string& name, int args, ResidualFn f, const std::vector<double>& qs,
                  int points, std::uint64_t seed, ThetaConvention conv = ThetaConvention::ScaledByPi) {
    SweepResult res;
    std::mt19937_64 rng(seed);
    std::uniform_real_distribution<double> box(0.05, 0.95);
    for (double q : qs) {
        ThetaParams p;
        p.q = q;
        p.convention = conv;
        for (int i = 0; i < points; ++i) {
            std::vector<double> pt(args);
            for (double& v : pt) v = box(rng);
            try {
                double r = f(pt, p);
                res.rows.push_back({name, q, pt, r});
                res.max_residual = std::max(res.max_residual, r);
            } catch (const error&) {
                ++res.skipped_degenerate;
            }
        }
    }
    return res;
}

inline SweepResult sweep_theta_fay(const std::vector<double>& qs, int points, std::uint64_t seed,
                                   ThetaConvention conv = ThetaConvention::ScaledByPi) {
    return sweep("theta-fay", 5,
                 [](const std::vector<double>& a, const ThetaParams& p) {
                     return theta_fay_g1_residual(a[0], a[1], a[2], a[3], a[4], p);
                 },
                 qs, points, seed, conv);
}

inline SweepResult sweep_theta_cubic(const std::vector<double>& qs, int points, std::uint64_t seed,
                                     ThetaConvention conv = ThetaConvention::ScaledByPi) {
    return sweep("theta-cubic", 3,
                 [](const std::vector<double>& a, const ThetaParams& p) {
                     return theta_cubic_residual(a[0], a[1], a[2], p);
                 },
                 qs, points, seed, conv);
}

inline SweepResult sweep_theta_degenerate(const std::vector<double>& qs, int points, std::uint64_t seed,
                                          ThetaConvention conv = ThetaConvention::ScaledByPi) {
    return sweep("theta-degenerate", 2,
                 [](const std::vector<double>& a, const ThetaParams& p) {
                     return theta_cubic_degenerate_residual(a[0], a[1], p);
                 },
                 qs, points, seed, conv);
}

inline SweepResult sweep_sine(int points, std::uint64_t seed) {
    SweepResult res;
    std::mt19937_64 rng(seed);
    std::uniform_real_distribution<double> box(-3.0, 3.0);
    for (int i = 0; i < points; ++i) {
        std::vector<double> pt = {box(rng), box(rng), box(rng)};
        double r = sine_cubic_residual(pt[0], pt[1], pt[2]);
        res.rows.push_back({"sine", 0.0, pt, r});
        res.max_residual = std::max(res.max_residual, r);
    }
    return res;
}

} // namespace tauforge
