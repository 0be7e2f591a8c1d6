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

#include "tauforge/identities.hpp"

using namespace tauforge;

namespace {
Poly P(const std::string& s) { return Poly::parse(s); }
} // namespace

TEST_CASE("wronskian basics") {
    VarId t1 = VarId::time(1);
    // W(f, g) = f g' - f' g.
    CHECK(wronskian(P("t1"), P("t1^2")) == P("t1^2"));
    CHECK(wronskian(P("t1 + z1"), P("t1 + z2")) == P("z1 - z2"));
    CHECK(wronskian(P("t1"), P("t1")).is_zero());
    // Antisymmetry and bilinearity.
    Poly f = P("t1^2 + t3"), g = P("t1^3 - 3*t3"), h = P("t1 - 1");
    CHECK(wronskian(f, g) == -wronskian(g, f));
    CHECK(wronskian(f + h, g) == wronskian(f, g) + wronskian(h, g));
    CHECK(wronskian(f * Rational(3), g) == wronskian(f, g) * Rational(3));
    // Other differentiation variable.
    CHECK(wronskian(P("t3"), P("t3^2"), VarId::time(3)) == P("t3^2"));
    CHECK(wronskian(f, g, VarId::time(5)).is_zero());
}

TEST_CASE("wronskian product rule") {
    Poly f1 = P("t1 + 1"), f2 = P("t1^2 - t3"), g1 = P("t1*t3"), g2 = P("t1^3 + 2");
    auto [aligned, crossed] = product_rule_residual(f1, f2, g1, g2);
    CHECK(aligned.is_zero());
    CHECK(crossed.is_zero());
    // Also with shifted staircase taus as the four factors.
    Poly tau = P("t1^3 - 3*t3");
    VarId z1 = VarId::shift(1), z2 = VarId::shift(2);
    auto [a2, c2] = product_rule_residual(miwa_shift(tau, +1, z1), miwa_shift(tau, -1, z1),
                                          miwa_shift(tau, +1, z2), miwa_shift(tau, -1, z2));
    CHECK(a2.is_zero());
    CHECK(c2.is_zero());
}

TEST_CASE("differential Fay") {
    for (int k = 1; k <= 3; ++k) CHECK(diff_fay_residual(staircase_tau(k)).is_zero());
    CHECK(diff_fay_residual(TauPoly::unchecked(P("1"))).is_zero());
    CHECK_FALSE(diff_fay_residual(TauPoly::unchecked(P("t1^3 - 4*t3"))).is_zero());
}

TEST_CASE("eight Wronskian variants") {
    for (int k = 1; k <= 3; ++k) {
        TauPoly tau = staircase_tau(k);
        for (int v = 1; v <= 8; ++v) {
            INFO("k=" << k << " variant=" << v);
            CHECK(lemma22_residual(tau, v).is_zero());
        }
    }
    CHECK_THROWS_AS(lemma22_residual(staircase_tau(1), 0), error);
    CHECK_THROWS_AS(lemma22_residual(staircase_tau(1), 9), error);
    // Negative control: a non-tau fails some variant.
    TauPoly bad = TauPoly::unchecked(P("t1^3 - 4*t3"));
    bool some_fail = false;
    for (int v = 1; v <= 8; ++v)
        if (!lemma22_residual(bad, v).is_zero()) some_fail = true;
    CHECK(some_fail);
}

TEST_CASE("cubic identity (i) golden values") {
    IdentitySides s1 = cubic_i_sides(staircase_tau(1));
    Poly golden1 = P("2*z1*z2^3 - 2*z1^3*z2");
    CHECK(s1.lhs == golden1);
    CHECK(s1.rhs == golden1);
    CHECK(s1.pass());

    IdentitySides s3 = cubic_i_sides(staircase_tau(2));
    Poly golden3 = P("6*(z1*z2^3 - z1^3*z2)*t1^6 + 36*(z1^5*z2 - z1*z2^5)*t1^4"
                     " + 126*(z1*z2^3 - z1^3*z2)*t1^3*t3"
                     " + 54*(z1^3*z2^5 - z1^5*z2^3)*t1^2"
                     " + 54*(z1^5*z2 - z1*z2^5)*t1*t3"
                     " + 54*(z1*z2^3 - z1^3*z2)*t3^2");
    CHECK(s3.lhs == golden3);
    CHECK(s3.rhs == golden3);
}

TEST_CASE("cubic identity (ii) golden values") {
    IdentitySides s1 = cubic_ii_sides(staircase_tau(1));
    CHECK(s1.lhs == P("4*z1^3"));
    CHECK(s1.rhs == P("4*z1^3"));

    IdentitySides s3 = cubic_ii_sides(staircase_tau(2));
    Poly golden3 = P("12*z1^3*t1^6 - 144*z1^5*t1^4 + 252*z1^3*t1^3*t3"
                     " + 108*z1^7*t1^2 - 216*z1^5*t1*t3 + 108*z1^3*t3^2");
    CHECK(s3.lhs == golden3);
    CHECK(s3.rhs == golden3);
    CHECK(cubic_ii_sides(staircase_tau(3)).pass());
}

TEST_CASE("cubic identity (ii) agrees with the z2-derivative specialization") {
    // d/dz2 tau(t+[z1]-[z2]) at z1 = z2 = z equals
    // -sum_k z^{2k} d/dt_{2k+1} tau(t), which is the mechanism behind the
    // odd-Wronskian sum on the right side of (ii).
    Poly tau = staircase_tau(2).poly();
    VarId z1 = VarId::shift(1), z2 = VarId::shift(2), z = VarId::shift(3);
    Poly shifted = miwa_shift(miwa_shift(tau, +1, z1), -1, z2);
    Poly lhs = shifted.derivative(z2).substitute(z1, Poly::variable(z)).substitute(z2, Poly::variable(z));
    Poly rhs;
    for (int odd = 1; odd <= 3; odd += 2)
        rhs -= Poly::variable(z, odd - 1) * tau.derivative(VarId::time(odd));
    CHECK(lhs == rhs);
}

TEST_CASE("seventh-order identity") {
    IdentitySides s1 = seventh_order_sides(staircase_tau(1));
    CHECK(s1.pass());
    // Independently derived value; the term 2*z1^2*z3^2*z4^2 replaces a
    // transcription with an odd z3-degree, which no side of this identity
    // can contain (every term is even in each z).
    Poly golden1 = P("-2*z1^2*t1^4 + 2*z2^2*t1^4 - 2*z3^2*t1^4 + 2*z4^2*t1^4"
                     " + 4*z1^2*z3^2*t1^2 - 4*z2^2*z4^2*t1^2"
                     " - 2*z1^2*z2^2*z3^2 + 2*z1^2*z2^2*z4^2"
                     " - 2*z1^2*z3^2*z4^2 + 2*z2^2*z3^2*z4^2");
    CHECK(s1.lhs == golden1);
    CHECK(s1.rhs == golden1);
    // Every exponent of every z variable is even on both sides.
    for (auto& [m, c] : s1.lhs.terms())
        for (auto& [v, e] : m.entries())
            if (v.kind == VarKind::Shift) CHECK(e % 2 == 0);

    IdentitySides s3 = seventh_order_sides(staircase_tau(2));
    CHECK(s3.pass());
    CHECK(s3.lhs.term_count() > 250);
    CHECK(s3.rhs.term_count() > 250);
}

TEST_CASE("scale invariance of the cubic and seventh-order checks") {
    // tau -> 5 tau scales the cubic sides by 5^3 and the seventh-order
    // sides by 5^7; pass/fail is unchanged.
    TauPoly tau = staircase_tau(2);
    TauPoly scaled = TauPoly::certify(tau.poly() * Rational(5));
    IdentitySides a = cubic_i_sides(tau), b = cubic_i_sides(scaled);
    CHECK(b.lhs == a.lhs * Rational(125));
    CHECK(b.pass());
    IdentitySides c = seventh_order_sides(staircase_tau(1));
    IdentitySides d = seventh_order_sides(TauPoly::certify(P("5*t1")));
    CHECK(d.lhs == c.lhs * Rational(78125));
    CHECK(d.pass());
}

TEST_CASE("relabeling invariance") {
    // Swapping the two shift parameters of cubic (i) negates both sides.
    TauPoly tau = staircase_tau(2);
    VarId z1 = VarId::shift(1), z2 = VarId::shift(2);
    IdentitySides fwd = cubic_i_sides(tau, z1, z2);
    IdentitySides rev = cubic_i_sides(tau, z2, z1);
    CHECK(rev.lhs == -fwd.lhs);
    CHECK(rev.rhs == -fwd.rhs);
    // diff-fay under fresh names is the old residual relabeled.
    VarId z7 = VarId::shift(7), z8 = VarId::shift(8);
    Poly named = diff_fay_residual(tau, z7, z8);
    CHECK(named.is_zero());
}

TEST_CASE("lemma22 collapses correctly at z1 = z2") {
    // Variant 1 residual is a polynomial identity in z1, z2, so it stays
    // zero under the substitution z2 := z1.
    TauPoly tau = staircase_tau(2);
    Poly r = lemma22_residual(tau, 1);
    CHECK(r.substitute(VarId::shift(2), Poly::variable(VarId::shift(1))).is_zero());
}
