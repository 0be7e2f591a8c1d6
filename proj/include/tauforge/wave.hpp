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

#include <map>

#include "tauforge/identities.hpp"

namespace tauforge {

// ---------------------------------------------------------------------------
// Wave functions.  Inverse Miwa shifts [z^-1] are carried through fresh
// variables w_i with the semantic relation z_i w_i = 1, so everything stays
// inside the polynomial / rational-function kernel.  Exponential prefactors
// exp(sum_i e_i E(z_i)), E(z_i) = sum over the tau's odd times of
// t_{2k+1} z_i^{2k+1}, are never expanded: they live in an integer ledger
// whose x-derivative contributes e_i z_i.
// ---------------------------------------------------------------------------

// Formal exponent ledger: shift index i -> integer multiple of E(z_i).
struct ExpKey {
    std::map<int, int> coeff;

    static ExpKey zero() { return {}; }
    static ExpKey single(int index, int e) {
        ExpKey k;
        if (e != 0) k.coeff[index] = e;
        return k;
    }

    ExpKey operator+(const ExpKey& o) const {
        ExpKey r = *this;
        for (auto& [i, e] : o.coeff) {
            r.coeff[i] += e;
            if (r.coeff[i] == 0) r.coeff.erase(i);
        }
        return r;
    }
    ExpKey operator-() const {
        ExpKey r;
        for (auto& [i, e] : coeff) r.coeff[i] = -e;
        return r;
    }
    bool operator==(const ExpKey& o) const { return coeff == o.coeff; }
    bool is_zero() const { return coeff.empty(); }

    // d/dx of the exponent: sum_i e_i z_i, with z_i = 1/w_i.
    RationalFunction x_derivative() const {
        RationalFunction s;
        for (auto& [i, e] : coeff)
            s += RationalFunction(Poly(e), Poly::variable(VarId::inv_shift(i)));
        return s;
    }

    std::string str() const {
        std::string s = "exp[";
        bool first = true;
        for (auto& [i, e] : coeff) {
            if (!first) s += ",";
            s += std::to_string(i) + ":" + std::to_string(e);
            first = false;
        }
        return s + "]";
    }
};

// exp(key) * mantissa, with the mantissa a rational function in odd times
// and inverse-shift variables.
struct ExpTauFunction {
    ExpKey key;
    RationalFunction mantissa;

    ExpTauFunction operator*(const ExpTauFunction& o) const {
        return {key + o.key, mantissa * o.mantissa};
    }

    std::string str() const { return key.str() + " * " + mantissa.str(); }
};

// z_i as a rational function of w_i.
inline RationalFunction spectral_z(int index) {
    return {Poly(1), Poly::variable(VarId::inv_shift(index))};
}

// psi  = exp(+E(z_i)) tau(t-[w_i]) / tau(t)
// psi* = exp(-E(z_i)) tau(t+[w_i]) / tau(t)
inline ExpTauFunction make_wave(const TauPoly& tau, int index, bool star) {
    const Poly& t = tau.poly();
    VarId w = VarId::inv_shift(index);
    int sign = star ? +1 : -1; // sign of the Miwa shift in the mantissa
    ExpTauFunction f;
    f.key = ExpKey::single(index, star ? -1 : +1);
    f.mantissa = RationalFunction(miwa_shift(t, sign, w), t);
    return f;
}

// W(exp(A) f, exp(B) g) = exp(A+B) [W(f, g) + (B' - A') f g] with A', B'
// the x-derivatives of the exponents.
inline ExpTauFunction wave_wronskian(const ExpTauFunction& a, const ExpTauFunction& b) {
    VarId x = VarId::time(1);
    RationalFunction w = a.mantissa * b.mantissa.derivative(x) - a.mantissa.derivative(x) * b.mantissa;
    RationalFunction rate = b.key.x_derivative() - a.key.x_derivative();
    return {a.key + b.key, w + rate * a.mantissa * b.mantissa};
}

// ---------------------------------------------------------------------------
// Closed forms for the wave-function Wronskians (variants i..iv) and the
// residual comparison against wave_wronskian.
// ---------------------------------------------------------------------------

struct WaveWronskianReport {
    bool key_match = false;
    bool mantissa_match = false;
    bool pass() const { return key_match && mantissa_match; }
};

inline ExpTauFunction lemma23_closed_form(const TauPoly& tau, int variant, int i1 = 1, int i2 = 2) {
    if (variant < 1 || variant > 4) throw error("lemma23 variant must be in 1..4");
    const Poly& t = tau.poly();
    VarId w1 = VarId::inv_shift(i1), w2 = VarId::inv_shift(i2);
    RationalFunction zz1 = spectral_z(i1), zz2 = spectral_z(i2);
    // Prefactor signs follow from the exponential and quotient Wronskian
    // rules together with the KdV Wronskian formulas under W(f,g) = fg'-f'g;
    // e.g. W(psi1, psi2) = (z2-z1) exp(E1+E2) tau(t-[w1]-[w2])/tau(t).
    ExpTauFunction f;
    switch (variant) {
        case 1:
            f.key = ExpKey::single(i1, +1) + ExpKey::single(i2, +1);
            f.mantissa = (zz2 - zz1) * RationalFunction(miwa_shift(miwa_shift(t, -1, w1), -1, w2), t);
            break;
        case 2:
            f.key = ExpKey::single(i1, -1) + ExpKey::single(i2, -1);
            f.mantissa = (zz1 - zz2) * RationalFunction(miwa_shift(miwa_shift(t, +1, w1), +1, w2), t);
            break;
        case 3:
            f.key = ExpKey::single(i1, +1) + ExpKey::single(i2, -1);
            f.mantissa = -(zz1 + zz2) * RationalFunction(miwa_shift(miwa_shift(t, -1, w1), +1, w2), t);
            break;
        case 4:
            f.key = ExpKey::single(i1, -1) + ExpKey::single(i2, +1);
            f.mantissa = (zz1 + zz2) * RationalFunction(miwa_shift(miwa_shift(t, +1, w1), -1, w2), t);
            break;
    }
    return f;
}

inline WaveWronskianReport lemma23_residual(const TauPoly& tau, int variant, int i1 = 1, int i2 = 2) {
    ExpTauFunction a, b;
    switch (variant) {
        case 1: a = make_wave(tau, i1, false); b = make_wave(tau, i2, false); break;
        case 2: a = make_wave(tau, i1, true);  b = make_wave(tau, i2, true);  break;
        case 3: a = make_wave(tau, i1, false); b = make_wave(tau, i2, true);  break;
        case 4: a = make_wave(tau, i1, true);  b = make_wave(tau, i2, false); break;
        default: throw error("lemma23 variant must be in 1..4");
    }
    ExpTauFunction lhs = wave_wronskian(a, b);
    ExpTauFunction rhs = lemma23_closed_form(tau, variant, i1, i2);
    WaveWronskianReport rep;
    rep.key_match = (lhs.key == rhs.key);
    rep.mantissa_match = lhs.mantissa.equals(rhs.mantissa);
    return rep;
}

// ---------------------------------------------------------------------------
// Sturm-Liouville residual.  With psi = exp(s E(z)) phi the equation
// (d/dx^2 + u) psi = z^2 psi conjugates to phi'' + 2 s z phi' + u phi = 0;
// the returned polynomial is that expression's numerator.
// ---------------------------------------------------------------------------

inline Poly sturm_liouville_residual(const TauPoly& tau, int index, bool star) {
    ExpTauFunction psi = make_wave(tau, index, star);
    VarId x = VarId::time(1);
    RationalFunction phi = psi.mantissa;
    RationalFunction phi1 = phi.derivative(x);
    RationalFunction phi2 = phi1.derivative(x);
    RationalFunction sz = psi.key.x_derivative(); // s * z as rational function of w
    RationalFunction res = phi2 + RationalFunction(2) * sz * phi1 + u_potential(tau) * phi;
    return res.num();
}

// ---------------------------------------------------------------------------
// Faddeev-Takhtajan identity: the Wronskian of the two squared-solution
// products equals both x-derivative expressions built from two-solution
// Wronskians.  All exponentials cancel, so the three quantities are plain
// rational functions.
// ---------------------------------------------------------------------------

struct FaddeevTakhtajanReport {
    bool w_eq_w1 = false;
    bool w_eq_w2 = false;
    bool pass() const { return w_eq_w1 && w_eq_w2; }
    RationalFunction w, w1, w2;
};

inline FaddeevTakhtajanReport faddeev_takhtajan_check(const TauPoly& tau, int i1 = 1, int i2 = 2) {
    if (i1 == i2) throw error("degenerate spectral pair");
    VarId x = VarId::time(1);
    ExpTauFunction p1 = make_wave(tau, i1, false), p1s = make_wave(tau, i1, true);
    ExpTauFunction p2 = make_wave(tau, i2, false), p2s = make_wave(tau, i2, true);

    ExpTauFunction q1 = p1 * p1s, q2 = p2 * p2s; // zero keys
    if (!q1.key.is_zero() || !q2.key.is_zero()) throw error("squared-solution keys failed to cancel");

    FaddeevTakhtajanReport rep;
    rep.w = q1.mantissa * q2.mantissa.derivative(x) - q1.mantissa.derivative(x) * q2.mantissa;

    RationalFunction zz1 = spectral_z(i1), zz2 = spectral_z(i2);
    RationalFunction inv = RationalFunction(-1) / (zz1 * zz1 - zz2 * zz2);

    ExpTauFunction wpp = wave_wronskian(p1, p2);
    ExpTauFunction wss = wave_wronskian(p1s, p2s);
    ExpTauFunction prod1 = wpp * wss;
    if (!prod1.key.is_zero()) throw error("wronskian product keys failed to cancel");
    rep.w1 = inv * prod1.mantissa.derivative(x);

    ExpTauFunction wps = wave_wronskian(p1, p2s);
    ExpTauFunction wsp = wave_wronskian(p1s, p2);
    ExpTauFunction prod2 = wps * wsp;
    if (!prod2.key.is_zero()) throw error("wronskian product keys failed to cancel");
    rep.w2 = inv * prod2.mantissa.derivative(x);

    rep.w_eq_w1 = rep.w.equals(rep.w1);
    rep.w_eq_w2 = rep.w.equals(rep.w2);
    return rep;
}

} // namespace tauforge
