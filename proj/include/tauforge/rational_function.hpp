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

#include "tauforge/poly.hpp"

namespace tauforge {

// Quotient of two polynomials. Common monomial factors and the rational
// content of the denominator are cancelled on construction; beyond that,
// equality is decided by cross-multiplication, which is all that exact
// zero-testing needs. The denominator's leading coefficient is positive.
class RationalFunction {
  public:
    RationalFunction() : num_(), den_(Poly::constant(1)) {}
    RationalFunction(const Poly& p) : num_(p), den_(Poly::constant(1)) {}
    RationalFunction(int c) : RationalFunction(Poly(c)) {}
    RationalFunction(const Poly& num, const Poly& den) : num_(num), den_(den) {
        if (den_.is_zero()) throw error("zero denominator");
        normalize();
    }

    const Poly& num() const { return num_; }
    const Poly& den() const { return den_; }
    bool is_zero() const { return num_.is_zero(); }

    bool equals(const RationalFunction& o) const {
        return (num_ * o.den_ - o.num_ * den_).is_zero();
    }
    bool operator==(const RationalFunction& o) const { return equals(o); }

    RationalFunction operator-() const { return make_raw(-num_, den_); }

    RationalFunction operator+(const RationalFunction& o) const {
        return {num_ * o.den_ + o.num_ * den_, den_ * o.den_};
    }
    RationalFunction operator-(const RationalFunction& o) const {
        return {num_ * o.den_ - o.num_ * den_, den_ * o.den_};
    }
    RationalFunction operator*(const RationalFunction& o) const {
        return {num_ * o.num_, den_ * o.den_};
    }
    RationalFunction operator/(const RationalFunction& o) const {
        if (o.num_.is_zero()) throw error("division by zero rational function");
        return {num_ * o.den_, den_ * o.num_};
    }
    RationalFunction& operator+=(const RationalFunction& o) { return *this = *this + o; }
    RationalFunction& operator-=(const RationalFunction& o) { return *this = *this - o; }
    RationalFunction& operator*=(const RationalFunction& o) { return *this = *this * o; }

    RationalFunction derivative(VarId v) const {
        return {num_.derivative(v) * den_ - num_ * den_.derivative(v), den_ * den_};
    }

    Rational eval(const std::map<VarId, Rational>& point) const {
        Rational d = den_.eval(point);
        if (d == 0) throw singular_point_error();
        return num_.eval(point) / d;
    }

    std::string str() const { return "(" + num_.str() + ")/(" + den_.str() + ")"; }

  private:
    static RationalFunction make_raw(const Poly& n, const Poly& d) {
        RationalFunction r;
        r.num_ = n;
        r.den_ = d;
        return r;
    }

    void normalize() {
        if (num_.is_zero()) {
            den_ = Poly::constant(1);
            return;
        }
        Monomial g = Monomial::gcd(monomial_content(num_), monomial_content(den_));
        if (!g.is_one()) {
            num_ = num_.exact_div(g);
            den_ = den_.exact_div(g);
        }
        Rational c = den_.content();
        if (c != 1) {
            Rational inv = Rational(1) / c;
            num_ = num_ * inv;
            den_ = den_ * inv;
        }
    }

    static Monomial monomial_content(const Poly& p) {
        bool first = true;
        Monomial g;
        for (auto& [m, c] : p.terms()) {
            g = first ? m : Monomial::gcd(g, m);
            first = false;
            if (g.is_one()) break;
        }
        return g;
    }

    Poly num_, den_;
};

} // namespace tauforge
