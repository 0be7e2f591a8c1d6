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

#include <catch2/catch_amalgamated.hpp>

#include "tauforge/tau.hpp"

using namespace tauforge;

namespace {
Poly P(const std::string& s) { return Poly::parse(s); }
} // namespace

TEST_CASE("complete homogeneous pieces") {
    CHECK(elementary_schur(0, 3) == P("1"));
    CHECK(elementary_schur(1, 3) == P("t1"));
    CHECK(elementary_schur(2, 3) == P("1/2*t1^2 + t2"));
    CHECK(elementary_schur(3, 3) == P("1/6*t1^3 + t1*t2 + t3"));
    CHECK(elementary_schur(-1, 3).is_zero());
    // The cutoff caps which times appear.
    CHECK_FALSE(elementary_schur(3, 1).depends_on(VarId::time(3)));
}

TEST_CASE("miwa shift") {
    VarId z1 = VarId::shift(1);
    CHECK(miwa_shift(P("t1"), +1, z1) == P("t1 + z1"));
    CHECK(miwa_shift(P("t1"), -1, z1) == P("t1 - z1"));
    CHECK(miwa_shift(P("t3"), +1, z1) == P("t3 + 1/3*z1^3"));
    CHECK(miwa_shift(P("t1"), +1, z1, 2) == P("t1 + 2*z1"));
    // tau_3 shifted: the z1^3 contributions of t1^3 and -3*t3 cancel.
    Poly shifted = miwa_shift(P("t1^3 - 3*t3"), +1, z1);
    CHECK(shifted == P("t1^3 + 3*t1^2*z1 + 3*t1*z1^2 - 3*t3"));
    // Shift and inverse shift cancel.
    Poly p = P("t1^3 - 3*t3 + t1*t5");
    Poly once = miwa_shift(p, +1, z1);
    VarId t1 = VarId::time(1), t3 = VarId::time(3), t5 = VarId::time(5);
    Poly back = once.substitute(t1, P("t1 - z1"))
                    .substitute(t3, P("t3 - 1/3*z1^3"))
                    .substitute(t5, P("t5 - 1/5*z1^5"));
    CHECK(back == p);
    // Colliding shift variable is rejected.
    CHECK_THROWS_AS(miwa_shift(P("t1 + z1"), +1, z1), error);
    CHECK_THROWS_AS(miwa_shift(P("t1"), 2, z1), error);
}

TEST_CASE("staircase taus") {
    CHECK(staircase_tau(1).poly() == P("t1"));
    CHECK(staircase_tau(2).poly() == P("t1^3 - 3*t3"));
    CHECK(staircase_tau(3).poly() == P("t1^6 - 15*t1^3*t3 + 45*t1*t5 - 45*t3^2"));
    CHECK_THROWS_AS(staircase_tau(0), error);
    for (int k = 1; k <= 4; ++k) {
        TauPoly tau = staircase_tau(k);
        CHECK(tau.certified());
        CHECK(tau.staircase_index() == k);
        // Degree k(k+1)/2 under weight deg t_j = j, and weighted homogeneous.
        int w = 0;
        CHECK(tau.poly().is_weighted_homogeneous(default_weight, &w));
        CHECK(w == k * (k + 1) / 2);
        // Coprime integer coefficients, positive leading term.
        CHECK(tau.poly().content() == 1);
        // Odd times only.
        for (VarId v : tau.poly().variables()) CHECK(v.kind == VarKind::OddTime);
    }
}

TEST_CASE("fay residual") {
    CHECK(fay_residual(P("1")).is_zero());
    CHECK(fay_residual(P("t1")).is_zero());
    CHECK(fay_residual(P("t1^3 - 3*t3")).is_zero());
    CHECK_FALSE(fay_residual(P("t1^3 - 4*t3")).is_zero());
    CHECK_FALSE(fay_residual(P("t1^2")).is_zero());

    // t1^3 - a*t3 satisfies Fay exactly at a = 3: the symbolic residual
    // with a free parameter vanishes after a := 3 and only then.
    Poly sym = fay_residual(P("t1^3 - a1*t3"));
    VarId a1 = VarId::param(1);
    CHECK(sym.substitute(a1, P("3")).is_zero());
    for (int a : {1, 2, 4}) CHECK_FALSE(sym.substitute(a1, Poly(a)).is_zero());

    // Quadratic scaling: fay_residual(c*tau) = c^2 fay_residual(tau).
    Poly base = fay_residual(P("t1^2 + t3"));
    CHECK(fay_residual(P("5*t1^2 + 5*t3")) == base * Rational(25));

    // Invariance under a cyclic rotation of (z1, z2, z3): the identity's
    // three terms permute among themselves.
    VarId z1 = VarId::shift(1), z2 = VarId::shift(2), z3 = VarId::shift(3), z4 = VarId::shift(4);
    Poly p = P("t1^2 - t3");
    CHECK(fay_residual(p, z1, z3, z4, z2) == fay_residual(p, z1, z2, z3, z4));
    CHECK_THROWS_AS(fay_residual(p, z1, z1, z2, z3), error);
}

TEST_CASE("KdV reduction check") {
    CHECK(is_kdv_tau(P("t1")).pass);
    CHECK(is_kdv_tau(P("t1^3 - 3*t3")).pass);
    // Even-time dependence is refused and identifies the failing index.
    KdvReport bad = is_kdv_tau(P("t1 + t2"));
    CHECK_FALSE(bad.pass);
    CHECK(bad.failing_even_index == 2);
    // The t2 contributions of h2*h1 and h3 cancel: the combination is the
    // degree-3 staircase tau up to scale, and the reduction check passes.
    Poly h2h1 = elementary_schur(2, 3) * elementary_schur(1, 3) - elementary_schur(3, 3);
    CHECK(h2h1 == P("1/3*t1^3 - t3"));
    CHECK(is_kdv_tau(h2h1).pass);
    // h2 alone keeps its t2 dependence and is refused.
    CHECK_FALSE(is_kdv_tau(elementary_schur(2, 3)).pass);
}

TEST_CASE("tau certification") {
    CHECK_THROWS_AS(TauPoly::certify(P("0")), error);
    CHECK_THROWS_AS(TauPoly::certify(P("t1 + t2")), error);
    CHECK_THROWS_AS(TauPoly::certify(P("t1^2")), error);
    TauPoly ok = TauPoly::certify(P("t1^3 - 3*t3"));
    CHECK(ok.certified());
    CHECK(ok.max_odd_time() == 3);
    TauPoly raw = TauPoly::unchecked(P("t1^2"));
    CHECK_FALSE(raw.certified());
    CHECK(TauPoly::certify(P("7")).max_odd_time() == 1);
}
