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

#include <array>
#include <utility>

#include "tauforge/tau.hpp"

namespace tauforge {

// W(f, g) := f g' - f' g with respect to v (default x = t1).
inline Poly wronskian(const Poly& f, const Poly& g, VarId v = VarId::time(1)) {
    return f * g.derivative(v) - f.derivative(v) * g;
}

// Both residuals of the product rule
//   W(f1 f2, g1 g2) = f1 g1 W(f2, g2) + f2 g2 W(f1, g1)
//                   = f1 g2 W(f2, g1) + f2 g1 W(f1, g2);
// each is identically zero for arbitrary inputs.
inline std::pair<Poly, Poly> product_rule_residual(const Poly& f1, const Poly& f2,
                                                   const Poly& g1, const Poly& g2) {
    Poly w = wronskian(f1 * f2, g1 * g2);
    Poly aligned = f1 * g1 * wronskian(f2, g2) + f2 * g2 * wronskian(f1, g1);
    Poly crossed = f1 * g2 * wronskian(f2, g1) + f2 * g1 * wronskian(f1, g2);
    return {w - aligned, w - crossed};
}

// ---------------------------------------------------------------------------
// Differential Fay, cleared of its (1/z2 - 1/z1) prefactor by multiplying
// through by z1 z2:
//   z1 z2 W(tau(t+[z1]), tau(t+[z2]))
//     - (z1 - z2) [tau(t+[z1]) tau(t+[z2]) - tau(t) tau(t+[z1]+[z2])]
// ---------------------------------------------------------------------------

inline Poly diff_fay_residual(const TauPoly& tau, VarId z1 = VarId::shift(1), VarId z2 = VarId::shift(2)) {
    const Poly& t = tau.poly();
    Poly p1 = miwa_shift(t, +1, z1);
    Poly p2 = miwa_shift(t, +1, z2);
    Poly p12 = miwa_shift(p1, +1, z2);
    Poly zz1 = Poly::variable(z1), zz2 = Poly::variable(z2);
    return zz1 * zz2 * wronskian(p1, p2) - (zz1 - zz2) * (p1 * p2 - t * p12);
}

// ---------------------------------------------------------------------------
// The eight Wronskian expressions for KdV taus. Variants 1-4 pair two
// shifted taus, variants 5-8 pair a doubly shifted tau with tau(t).
// Residuals are z1 z2-cleared; zero on pass.
// ---------------------------------------------------------------------------

inline Poly lemma22_residual(const TauPoly& tau, int variant,
                             VarId z1 = VarId::shift(1), VarId z2 = VarId::shift(2)) {
    if (variant < 1 || variant > 8) throw error("lemma22 variant must be in 1..8");
    const Poly& t = tau.poly();
    auto sh = [&](int s, VarId z) { return miwa_shift(t, s, z); };
    auto sh2 = [&](int s1, int s2) { return miwa_shift(miwa_shift(t, s1, z1), s2, z2); };
    Poly zz1 = Poly::variable(z1), zz2 = Poly::variable(z2);
    // Cleared prefactors: (1/z2 - 1/z1) z1 z2 = z1 - z2, (1/z2 + 1/z1) z1 z2 = z1 + z2.
    Poly dm = zz1 - zz2, dp = zz1 + zz2;

    Poly lhs, pref, a, b;
    switch (variant) {
        case 1: a = sh(+1, z1); b = sh(+1, z2); pref = dm;  lhs = a * b - t * sh2(+1, +1); break;
        case 2: a = sh(-1, z1); b = sh(-1, z2); pref = -dm; lhs = a * b - t * sh2(-1, -1); break;
        case 3: a = sh(-1, z1); b = sh(+1, z2); pref = dp;  lhs = a * b - t * sh2(-1, +1); break;
        case 4: a = sh(+1, z1); b = sh(-1, z2); pref = -dp; lhs = a * b - t * sh2(+1, -1); break;
        case 5: a = sh2(+1, -1); b = t; pref = dm;  lhs = a * t - sh(+1, z1) * sh(-1, z2); break;
        case 6: a = sh2(-1, +1); b = t; pref = -dm; lhs = a * t - sh(-1, z1) * sh(+1, z2); break;
        case 7: a = sh2(-1, -1); b = t; pref = dp;  lhs = a * t - sh(-1, z1) * sh(-1, z2); break;
        case 8: a = sh2(+1, +1); b = t; pref = -dp; lhs = a * t - sh(+1, z1) * sh(+1, z2); break;
    }
    return zz1 * zz2 * wronskian(a, b) - pref * lhs;
}

// ---------------------------------------------------------------------------
// Identity sides
// ---------------------------------------------------------------------------

struct IdentitySides {
    Poly lhs, rhs;
    Poly residual() const { return lhs - rhs; }
    bool pass() const { return residual().is_zero(); }
};

// Cubic identity (i):
//   (z2-z1)[tau(t+[z1]+[z2]) tau(t-[z1]) tau(t-[z2])
//           - tau(t-[z1]-[z2]) tau(t+[z1]) tau(t+[z2])]
// = (z2+z1)[tau(t+[z1]-[z2]) tau(t-[z1]) tau(t+[z2])
//           - tau(t-[z1]+[z2]) tau(t+[z1]) tau(t-[z2])]
inline IdentitySides cubic_i_sides(const TauPoly& tau,
                                   VarId z1 = VarId::shift(1), VarId z2 = VarId::shift(2)) {
    const Poly& t = tau.poly();
    auto sh = [&](int s, VarId z) { return miwa_shift(t, s, z); };
    auto sh2 = [&](int s1, int s2) { return miwa_shift(miwa_shift(t, s1, z1), s2, z2); };
    Poly zz1 = Poly::variable(z1), zz2 = Poly::variable(z2);
    IdentitySides s;
    s.lhs = (zz2 - zz1) * (sh2(+1, +1) * sh(-1, z1) * sh(-1, z2) - sh2(-1, -1) * sh(+1, z1) * sh(+1, z2));
    s.rhs = (zz2 + zz1) * (sh2(+1, -1) * sh(-1, z1) * sh(+1, z2) - sh2(-1, +1) * sh(+1, z1) * sh(-1, z2));
    return s;
}

// Cubic identity (ii):
//   tau(t+2[z]) tau^2(t-[z]) - tau(t-2[z]) tau^2(t+[z])
// = 2 sum_k z^{2k+1} [tau(t-[z]) W_{2k+1}(tau, tau(t+[z]))
//                     + tau(t+[z]) W_{2k+1}(tau, tau(t-[z]))]
// The sum stops at the tau's highest odd time: shifted taus contain no
// higher odd times, so every later W_{2k+1} vanishes identically.
inline IdentitySides cubic_ii_sides(const TauPoly& tau, VarId z = VarId::shift(1)) {
    const Poly& t = tau.poly();
    Poly plus = miwa_shift(t, +1, z);
    Poly minus = miwa_shift(t, -1, z);
    Poly plus2 = miwa_shift(t, +1, z, 2);
    Poly minus2 = miwa_shift(t, -1, z, 2);
    IdentitySides s;
    s.lhs = plus2 * minus * minus - minus2 * plus * plus;
    Poly sum;
    int m = tau.max_odd_time();
    for (int odd = 1; odd <= m; odd += 2) {
        VarId v = VarId::time(odd);
        sum += Poly::variable(z, odd) *
               (minus * wronskian(t, plus, v) + plus * wronskian(t, minus, v));
    }
    s.rhs = Rational(2) * sum;
    return s;
}

// ---------------------------------------------------------------------------
// Seventh-order identity. Each group term is
//   (1/z_j - 1/z_i) tau(t+[z_a]) tau(t-[z_a]) tau(t+[z_b]) tau(t-[z_b])
//   [tau(t+[z_i]) tau(t+[z_j]) tau(t-[z_i]-[z_j])
//    - tau(t-[z_i]) tau(t-[z_j]) tau(t+[z_i]+[z_j])];
// the bracket vanishes at z_i = 0 and z_j = 0, so the prefactor folds in
// by exact division and both sides are genuine polynomials.
// ---------------------------------------------------------------------------

inline IdentitySides seventh_order_sides(const TauPoly& tau,
                                         std::array<VarId, 4> z = {VarId::shift(1), VarId::shift(2),
                                                                   VarId::shift(3), VarId::shift(4)}) {
    const Poly& t = tau.poly();
    auto sh = [&](int s, VarId v) { return miwa_shift(t, s, v); };

    auto group_term = [&](int i, int j, int a, int b) {
        VarId zi = z[i - 1], zj = z[j - 1], za = z[a - 1], zb = z[b - 1];
        Poly bracket = sh(+1, zi) * sh(+1, zj) * miwa_shift(miwa_shift(t, -1, zi), -1, zj) -
                       sh(-1, zi) * sh(-1, zj) * miwa_shift(miwa_shift(t, +1, zi), +1, zj);
        // (1/z_j - 1/z_i) * bracket = (z_i - z_j) * bracket / (z_i z_j)
        Poly cleared = bracket.exact_div(Monomial::var(zi) * Monomial::var(zj));
        Poly pref = Poly::variable(zi) - Poly::variable(zj);
        Poly spectators = sh(+1, za) * sh(-1, za) * sh(+1, zb) * sh(-1, zb);
        return pref * cleared * spectators;
    };

    IdentitySides s;
    s.lhs = group_term(3, 4, 1, 2) + group_term(1, 2, 3, 4);
    s.rhs = group_term(3, 2, 1, 4) + group_term(1, 4, 2, 3);
    return s;
}

} // namespace tauforge
