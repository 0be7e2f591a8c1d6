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

#include <cstdint>
#include <random>

#include "tauforge/rational_function.hpp"

namespace tauforge {

// ---------------------------------------------------------------------------
// Randomized polynomial identity testing. Points are drawn from a fixed,
// documented distribution: numerators uniform in [-99, 99], denominators
// uniform in [1, 32]. A nonzero value is a certificate that the input is
// not identically zero; all-zero trials report "probably zero" with the
// usual Schwartz-Zippel caveat.
// ---------------------------------------------------------------------------

struct RandomCheckReport {
    enum class Status { ProbablyZero, NonzeroHit, AllPointsSingular };
    Status status = Status::ProbablyZero;
    int trials_requested = 0;
    int trials_evaluated = 0;
    int hit_trial = -1; // 1-based trial index of the first nonzero value
    std::uint64_t seed = 0;

    bool probably_zero() const { return status == Status::ProbablyZero; }
};

namespace detail {

inline Rational random_rational(std::mt19937_64& rng) {
    std::uniform_int_distribution<int> num(-99, 99);
    std::uniform_int_distribution<int> den(1, 32);
    return Rational(num(rng), den(rng));
}

// Modular fast path for plain polynomials: evaluation mod a 61-bit prime
// at uniformly random residues. A nonzero residue certifies a nonzero
// polynomial; coefficients whose denominators vanish mod p force the exact
// path instead.
constexpr std::uint64_t kModulus = (std::uint64_t(1) << 61) - 1;

inline std::uint64_t mulmod(std::uint64_t a, std::uint64_t b) {
    return static_cast<std::uint64_t>((static_cast<unsigned __int128>(a) * b) % kModulus);
}

inline std::uint64_t powmod(std::uint64_t a, std::uint64_t e) {
    std::uint64_t r = 1;
    while (e) {
        if (e & 1) r = mulmod(r, a);
        a = mulmod(a, a);
        e >>= 1;
    }
    return r;
}

inline std::uint64_t invmod(std::uint64_t a) { return powmod(a % kModulus, kModulus - 2); }

inline std::uint64_t rational_mod(const Rational& r) {
    Int p(kModulus);
    Int num = rat_num(r) % p;
    if (num < 0) num += p;
    Int den = rat_den(r) % p;
    if (den == 0) throw singular_point_error();
    return mulmod(num.convert_to<std::uint64_t>(), invmod(den.convert_to<std::uint64_t>()));
}

inline bool poly_nonzero_mod(const Poly& p, std::mt19937_64& rng) {
    std::map<VarId, std::uint64_t> point;
    for (VarId v : p.variables()) point[v] = rng() % kModulus;
    std::uint64_t acc = 0;
    for (auto& [m, c] : p.terms()) {
        std::uint64_t t = rational_mod(c);
        for (auto& [v, e] : m.entries()) t = mulmod(t, powmod(point[v], e));
        acc = (acc + t) % kModulus;
    }
    return acc != 0;
}

} // namespace detail

inline RandomCheckReport random_point_check(const Poly& p, std::uint64_t seed, int trials,
                                            bool use_modular_fast_path = true) {
    if (trials < 1) throw error("random_point_check needs at least one trial");
    RandomCheckReport rep;
    rep.trials_requested = trials;
    rep.seed = seed;
    std::mt19937_64 rng(seed);
    for (int i = 1; i <= trials; ++i) {
        bool nonzero;
        if (use_modular_fast_path) {
            try {
                nonzero = detail::poly_nonzero_mod(p, rng);
            } catch (const singular_point_error&) {
                nonzero = false; // denominator hit the modulus; fall through to exact
                std::map<VarId, Rational> pt;
                for (VarId v : p.variables()) pt[v] = detail::random_rational(rng);
                nonzero = p.eval(pt) != 0;
            }
        } else {
            std::map<VarId, Rational> pt;
            for (VarId v : p.variables()) pt[v] = detail::random_rational(rng);
            nonzero = p.eval(pt) != 0;
        }
        ++rep.trials_evaluated;
        if (nonzero) {
            rep.status = RandomCheckReport::Status::NonzeroHit;
            rep.hit_trial = i;
            return rep;
        }
    }
    rep.status = RandomCheckReport::Status::ProbablyZero;
    return rep;
}

inline RandomCheckReport random_point_check(const RationalFunction& f, std::uint64_t seed, int trials) {
    if (trials < 1) throw error("random_point_check needs at least one trial");
    RandomCheckReport rep;
    rep.trials_requested = trials;
    rep.seed = seed;
    std::mt19937_64 rng(seed);
    int singular = 0;
    for (int i = 1; i <= trials; ++i) {
        std::map<VarId, Rational> pt;
        for (VarId v : f.num().variables()) pt[v] = detail::random_rational(rng);
        for (VarId v : f.den().variables())
            if (!pt.count(v)) pt[v] = detail::random_rational(rng);
        try {
            Rational val = f.eval(pt);
            ++rep.trials_evaluated;
            if (val != 0) {
                rep.status = RandomCheckReport::Status::NonzeroHit;
                rep.hit_trial = i;
                return rep;
            }
        } catch (const singular_point_error&) {
            ++singular;
        }
    }
    rep.status = rep.trials_evaluated == 0 ? RandomCheckReport::Status::AllPointsSingular
                                           : RandomCheckReport::Status::ProbablyZero;
    return rep;
}

} // namespace tauforge
