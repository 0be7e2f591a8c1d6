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

#include "tauforge/random_check.hpp"
#include "tauforge/tau.hpp"
#include "tauforge/theta.hpp"

using namespace tauforge;

namespace {
constexpr std::uint64_t kSeed = 20260823;
} // namespace

TEST_CASE("theta series basics") {
    ThetaParams p;
    p.q = 0.1;
    CHECK(std::abs(theta11(0.0, p)) < 1e-15);
    // Odd function.
    Complex v{0.31, 0.0};
    CHECK(std::abs(theta11(v, p) + theta11(-v, p)) < 1e-14);
    // Quasi-periodicity v -> v + 1 flips the sign (pi-scaled convention).
    CHECK(std::abs(theta11(v + 1.0, p) + theta11(v, p)) < 1e-13);
    // Derivative consistency with a central difference.
    double h = 1e-6;
    Complex fd = (theta11(v + h, p) - theta11(v - h, p)) / (2.0 * h);
    CHECK(std::abs(theta11_derivative(v, p) - fd) < 1e-7);
    // Reversed-order summation oracle: adding the first 8 terms backwards
    // reproduces the forward truncation to full precision.
    Complex fwd = theta11(v, p);
    Complex rev = 0.0;
    for (int n = 7; n >= 0; --n) {
        double m = 2.0 * n + 1.0;
        rev += (n % 2 ? -1.0 : 1.0) * std::pow(Complex(p.q), (n + 0.5) * (n + 0.5)) *
               std::sin(m * 3.14159265358979323846 * v);
    }
    CHECK(std::abs(fwd - 2.0 * rev) < 1e-15);
    // Nome domain is enforced.
    ThetaParams badq;
    badq.q = 1.5;
    CHECK_THROWS_AS(theta11(v, badq), error);
}

TEST_CASE("plain argument convention") {
    ThetaParams p;
    p.q = 0.1;
    p.convention = ThetaConvention::Plain;
    Complex v{0.31, 0.0};
    // In the plain convention the period is pi, not 1.
    CHECK(std::abs(theta11(v + 3.14159265358979323846, p) + theta11(v, p)) < 1e-13);
    SweepResult sw = sweep_theta_fay({0.1}, 25, kSeed, ThetaConvention::Plain);
    CHECK(sw.max_residual < 1e-9);
}

TEST_CASE("theta identity sweeps stay under tolerance") {
    std::vector<double> qs = {0.05, 0.1, 0.3};
    CHECK(sweep_theta_fay(qs, 100, kSeed).max_residual < 1e-9);
    CHECK(sweep_theta_cubic(qs, 100, kSeed).max_residual < 1e-8);
    CHECK(sweep_theta_degenerate(qs, 100, kSeed).max_residual < 1e-8);
    CHECK(sweep_sine(1000, kSeed).max_residual < 1e-11);
}

TEST_CASE("corrupted identity is detected at order one") {
    // Breaking one sign in the cubic identity must produce O(1) residuals,
    // showing the sweeps measure the identity and not mere smallness.
    ThetaParams p;
    p.q = 0.1;
    auto t = [&](Complex v) { return theta11(v, p); };
    Complex x{0.37, 0.0}, z1{0.21, 0.0}, z2{0.55, 0.0};
    std::vector<Complex> lhs = {
        t(z2 - z1) * t(x + z1 + z2) * t(x - z1) * t(x - z2),
        t(z2 - z1) * t(x - z1 - z2) * t(x + z1) * t(x + z2), // sign flipped
    };
    std::vector<Complex> rhs = {
        t(z1 + z2) * t(x + z1 - z2) * t(x - z1) * t(x + z2),
        -t(z1 + z2) * t(x - z1 + z2) * t(x + z1) * t(x - z2),
    };
    CHECK(detail::relative_residual(lhs, rhs) > 1e-3);
    CHECK(theta_cubic_residual(x, z1, z2, p) < 1e-12);
}

TEST_CASE("degenerate form is the z2 -> z1 limit") {
    ThetaParams p;
    p.q = 0.1;
    Complex x{0.37, 0.0}, z{0.21, 0.0};
    // The two-parameter identity approaches the degenerate one: both
    // residuals are tiny at nearly equal arguments.
    CHECK(theta_cubic_residual(x, z, z + Complex(1e-7, 0.0), p) < 1e-8);
    CHECK(theta_cubic_degenerate_residual(x, z, p) < 1e-12);
}

TEST_CASE("random point check") {
    // Residual of a true identity: probably zero.
    Poly zero_poly = fay_residual(staircase_tau(2).poly());
    auto rep = random_point_check(zero_poly, kSeed, 20);
    CHECK(rep.probably_zero());
    CHECK(rep.trials_evaluated == 20);

    // A wrong tau is caught within the first few trials.
    Poly bad = fay_residual(Poly::parse("t1^3 - 2*t3"));
    auto hit = random_point_check(bad, kSeed, 20);
    CHECK(hit.status == RandomCheckReport::Status::NonzeroHit);
    CHECK(hit.hit_trial >= 1);
    CHECK(hit.hit_trial <= 3);

    // Identical seeds give identical outcomes; exact path agrees.
    auto hit2 = random_point_check(bad, kSeed, 20);
    CHECK(hit2.hit_trial == hit.hit_trial);
    auto exact = random_point_check(bad, kSeed, 20, /*use_modular_fast_path=*/false);
    CHECK(exact.status == RandomCheckReport::Status::NonzeroHit);

    CHECK(random_point_check(Poly(), kSeed, 5).probably_zero());
    CHECK(random_point_check(Poly(7), kSeed, 5).status == RandomCheckReport::Status::NonzeroHit);
    CHECK_THROWS_AS(random_point_check(Poly(), kSeed, 0), error);

    // Rational-function overload counts singular draws instead of failing.
    RationalFunction f(Poly::parse("t1^2 - t3^2"), Poly::parse("t1 - t3"));
    auto rf = random_point_check(f - RationalFunction(Poly::parse("t1 + t3")), kSeed, 10);
    CHECK(rf.probably_zero());
}
