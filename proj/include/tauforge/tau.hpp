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

#include <optional>
#include <vector>

#include "tauforge/rational_function.hpp"

namespace tauforge {

// ---------------------------------------------------------------------------
// Miwa shifts
// ---------------------------------------------------------------------------

struct ShiftSpec {
    int sign;  // +1 or -1
    VarId var; // shift or inverse-shift variable
};

// t_k -> t_k + sign*mult*z^k/k simultaneously for every time variable in
// p's support. The shift variable must be fresh with respect to p.
inline Poly miwa_shift(const Poly& p, int sign, VarId z, int mult = 1) {
    if (sign != 1 && sign != -1) throw error("miwa shift sign must be +1 or -1");
    if (p.depends_on(z)) throw error("miwa shift variable " + z.name() + " collides with the polynomial's support");
    Poly r = p;
    for (VarId v : p.variables()) {
        if (!v.is_time()) continue;
        int k = v.index;
        Poly repl = Poly::variable(v) +
                    Poly::variable(z, k) * Rational(sign * mult, k);
        r = r.substitute(v, repl);
    }
    return r;
}

inline Poly miwa_shift(const Poly& p, const ShiftSpec& spec) {
    return miwa_shift(p, spec.sign, spec.var);
}

// ---------------------------------------------------------------------------
// Fay residual: the left side of the four-parameter quadratic identity,
// zero exactly when tau satisfies it.
// ---------------------------------------------------------------------------

inline Poly fay_residual(const Poly& tau, VarId z0, VarId z1, VarId z2, VarId z3) {
    if (z0 == z1 || z0 == z2 || z0 == z3 || z1 == z2 || z1 == z3 || z2 == z3)
        throw error("fay residual needs four distinct shift variables");
    auto sh2 = [&](VarId a, VarId b) { return miwa_shift(miwa_shift(tau, +1, a), +1, b); };
    auto zz = [](VarId a) { return Poly::variable(a); };
    Poly r;
    r += (zz(z0) - zz(z1)) * (zz(z2) - zz(z3)) * sh2(z0, z1) * sh2(z2, z3);
    r += (zz(z0) - zz(z2)) * (zz(z3) - zz(z1)) * sh2(z0, z2) * sh2(z3, z1);
    r += (zz(z0) - zz(z3)) * (zz(z1) - zz(z2)) * sh2(z0, z3) * sh2(z1, z2);
    return r;
}

inline Poly fay_residual(const Poly& tau) {
    return fay_residual(tau, VarId::shift(1), VarId::shift(2), VarId::shift(3), VarId::shift(4));
}

// ---------------------------------------------------------------------------
// KdV reduction check
// ---------------------------------------------------------------------------

struct KdvReport {
    bool pass = false;
    std::optional<int> failing_even_index; // set when an even-time derivative survives
    bool evenness_ok = false;              // tau(t-[z]) == tau(t+[-z])
};

inline KdvReport is_kdv_tau(const Poly& p) {
    KdvReport rep;
    for (VarId v : p.variables()) {
        if (v.kind == VarKind::EvenTime && !p.derivative(v).is_zero()) {
            rep.failing_even_index = v.index;
            return rep;
        }
    }
    // tau(t-[z]) must equal tau(t+[z]) with z -> -z.
    VarId z = VarId::shift(991); // fresh by construction; user taus use small indices
    Poly minus = miwa_shift(p, -1, z);
    Poly plus_negated = miwa_shift(p, +1, z).substitute(z, -Poly::variable(z));
    rep.evenness_ok = (minus == plus_negated);
    rep.pass = rep.evenness_ok;
    return rep;
}

// ---------------------------------------------------------------------------
// Certified tau polynomials
// ---------------------------------------------------------------------------

// A polynomial in odd times only whose Fay residual vanishes identically.
class TauPoly {
  public:
    const Poly& poly() const { return poly_; }
    std::optional<int> staircase_index() const { return staircase_index_; }
    const Rational& normalization() const { return normalization_; }
    bool certified() const { return certified_; }

    // Highest odd time index in the support (1 for constants, so x-shifts
    // always make sense).
    int max_odd_time() const {
        int m = 1;
        for (VarId v : poly_.variables())
            if (v.kind == VarKind::OddTime) m = std::max(m, v.index);
        return m;
    }

    static TauPoly certify(const Poly& p) {
        if (p.is_zero()) throw error("zero polynomial is not a tau function");
        for (VarId v : p.variables())
            if (v.is_time() && v.kind != VarKind::OddTime)
                throw error("tau candidate depends on even time t" + std::to_string(v.index));
        if (!fay_residual(p).is_zero()) throw error("tau candidate fails the Fay identity");
        TauPoly t;
        t.poly_ = p;
        t.certified_ = true;
        return t;
    }

    // Bypasses certification; for negative controls and candidate probing.
    static TauPoly unchecked(const Poly& p) {
        TauPoly t;
        t.poly_ = p;
        t.certified_ = false;
        return t;
    }

    friend TauPoly staircase_tau(int k);

    std::string str() const {
        std::string s;
        if (staircase_index_) s += "staircase k = " + std::to_string(*staircase_index_) + "\n";
        s += poly_.str();
        return s;
    }

  private:
    Poly poly_;
    std::optional<int> staircase_index_;
    Rational normalization_ = 1;
    bool certified_ = false;
};

// ---------------------------------------------------------------------------
// Complete homogeneous pieces h_n of exp(sum_k t_k z^k), polynomials in
// t1..t_cutoff. h_0 = 1 and n*h_n = sum_{k<=min(n,cutoff)} k*t_k*h_{n-k}.
// ---------------------------------------------------------------------------

inline Poly elementary_schur(int n, int cutoff) {
    if (cutoff < 1) throw error("cutoff must be at least 1");
    if (n < 0) return Poly();
    std::vector<Poly> h(n + 1);
    h[0] = Poly::constant(1);
    for (int m = 1; m <= n; ++m) {
        Poly acc;
        for (int k = 1; k <= std::min(m, cutoff); ++k)
            acc += Poly::variable(VarId::time(k)) * Rational(k) * h[m - k];
        h[m] = acc * Rational(1, m);
    }
    return h[n];
}

namespace detail {

// Cofactor determinant; the matrices here are tiny (k x k with k <= 6).
inline Poly poly_det(const std::vector<std::vector<Poly>>& a) {
    std::size_t n = a.size();
    if (n == 1) return a[0][0];
    Poly det;
    for (std::size_t i = 0; i < n; ++i) {
        if (a[i][0].is_zero()) continue;
        std::vector<std::vector<Poly>> minor;
        minor.reserve(n - 1);
        for (std::size_t r = 0; r < n; ++r) {
            if (r == i) continue;
            minor.emplace_back(a[r].begin() + 1, a[r].end());
        }
        Poly cof = a[i][0] * poly_det(minor);
        if (i % 2) det -= cof;
        else det += cof;
    }
    return det;
}

} // namespace detail

// Jacobi-Trudi determinant for the staircase partition (k, k-1, ..., 1),
// even times carried through the construction and verified to cancel,
// coefficients scaled to coprime integers with positive leading term.
inline TauPoly staircase_tau(int k) {
    if (k < 1) throw error("staircase index must be positive");
    int cutoff = 2 * k - 1;
    std::vector<std::vector<Poly>> m(k, std::vector<Poly>(k));
    for (int i = 1; i <= k; ++i) {
        int lambda_i = k - i + 1;
        for (int j = 1; j <= k; ++j) m[i - 1][j - 1] = elementary_schur(lambda_i - i + j, cutoff);
    }
    Poly det = detail::poly_det(m);
    for (VarId v : det.variables())
        if (v.kind == VarKind::EvenTime)
            throw error("staircase construction failed: even time survives in k = " + std::to_string(k));
    Rational c = det.content();
    if (c == 0) throw error("staircase determinant vanished");
    Poly scaled = det * (Rational(1) / c);
    TauPoly t = TauPoly::certify(scaled);
    t.staircase_index_ = k;
    t.normalization_ = Rational(1) / c;
    return t;
}

// ---------------------------------------------------------------------------
// KdV potential u = 2 (d/dx)^2 ln tau = 2 (tau_xx tau - tau_x^2) / tau^2
// ---------------------------------------------------------------------------

inline RationalFunction u_potential(const TauPoly& tau) {
    const Poly& t = tau.poly();
    VarId x = VarId::time(1);
    Poly tx = t.derivative(x);
    Poly txx = tx.derivative(x);
    return {Rational(2) * (txx * t - tx * tx), t * t};
}

} // namespace tauforge
