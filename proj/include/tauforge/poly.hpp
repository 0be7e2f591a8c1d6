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
#include <cctype>
#include <compare>
#include <complex>
#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "tauforge/rational.hpp"

namespace tauforge {

// ---------------------------------------------------------------------------
// Variables
// ---------------------------------------------------------------------------

// Variable kinds, in the order that fixes the total order on variables.
// Time variables come first (t1 is the most significant variable in the
// monomial order), then shift parameters z_i, inverse-shift parameters w_i
// and free rational parameters a_i.
enum class VarKind : std::uint8_t {
    OddTime = 0,
    EvenTime = 1,
    Shift = 2,
    InvShift = 3,
    Param = 4,
};

struct VarId {
    VarKind kind;
    int index; // positive

    auto operator<=>(const VarId&) const = default;

    static VarId time(int k) {
        if (k < 1) throw error("time index must be positive");
        return {k % 2 == 1 ? VarKind::OddTime : VarKind::EvenTime, k};
    }
    static VarId shift(int i) { return {VarKind::Shift, i}; }
    static VarId inv_shift(int i) { return {VarKind::InvShift, i}; }
    static VarId param(int i) { return {VarKind::Param, i}; }

    bool is_time() const { return kind == VarKind::OddTime || kind == VarKind::EvenTime; }

    std::string name() const {
        switch (kind) {
            case VarKind::OddTime:
            case VarKind::EvenTime: return "t" + std::to_string(index);
            case VarKind::Shift: return "z" + std::to_string(index);
            case VarKind::InvShift: return "w" + std::to_string(index);
            case VarKind::Param: return "a" + std::to_string(index);
        }
        return "?";
    }
};

// ---------------------------------------------------------------------------
// Monomials
// ---------------------------------------------------------------------------

// A power product. Entries are sorted by VarId and never carry zero
// exponents, so the representation is canonical.
class Monomial {
  public:
    using Entry = std::pair<VarId, int>;

    Monomial() = default;
    static Monomial var(VarId v, int e = 1) {
        Monomial m;
        if (e < 0) throw error("negative exponent");
        if (e > 0) m.entries_.push_back({v, e});
        return m;
    }

    bool is_one() const { return entries_.empty(); }
    int degree() const {
        int d = 0;
        for (auto& [v, e] : entries_) d += e;
        return d;
    }
    int exponent_of(VarId v) const {
        for (auto& [w, e] : entries_)
            if (w == v) return e;
        return 0;
    }
    const std::vector<Entry>& entries() const { return entries_; }

    Monomial operator*(const Monomial& o) const {
        Monomial r;
        r.entries_.reserve(entries_.size() + o.entries_.size());
        auto a = entries_.begin(), b = o.entries_.begin();
        while (a != entries_.end() || b != o.entries_.end()) {
            if (b == o.entries_.end() || (a != entries_.end() && a->first < b->first))
                r.entries_.push_back(*a++);
            else if (a == entries_.end() || b->first < a->first)
                r.entries_.push_back(*b++);
            else {
                r.entries_.push_back({a->first, a->second + b->second});
                ++a, ++b;
            }
        }
        return r;
    }

    // Exact quotient, or nullopt when o does not divide *this.
    std::optional<Monomial> divided_by(const Monomial& o) const {
        Monomial r;
        auto a = entries_.begin();
        auto b = o.entries_.begin();
        while (b != o.entries_.end()) {
            while (a != entries_.end() && a->first < b->first) r.entries_.push_back(*a++);
            if (a == entries_.end() || a->first != b->first || a->second < b->second)
                return std::nullopt;
            if (a->second > b->second) r.entries_.push_back({a->first, a->second - b->second});
            ++a, ++b;
        }
        while (a != entries_.end()) r.entries_.push_back(*a++);
        return r;
    }

    // Componentwise minimum; the gcd of two power products.
    static Monomial gcd(const Monomial& x, const Monomial& y) {
        Monomial r;
        auto a = x.entries_.begin(), b = y.entries_.begin();
        while (a != x.entries_.end() && b != y.entries_.end()) {
            if (a->first < b->first) ++a;
            else if (b->first < a->first) ++b;
            else {
                r.entries_.push_back({a->first, std::min(a->second, b->second)});
                ++a, ++b;
            }
        }
        return r;
    }

    bool operator==(const Monomial& o) const { return entries_ == o.entries_; }

    // Graded lexicographic: higher total degree first, ties broken
    // lexicographically with t1 the most significant variable.
    static std::strong_ordering cmp(const Monomial& x, const Monomial& y) {
        if (auto c = x.degree() <=> y.degree(); c != 0) return c;
        auto a = x.entries_.begin(), b = y.entries_.begin();
        while (a != x.entries_.end() && b != y.entries_.end()) {
            if (a->first < b->first) return std::strong_ordering::greater;
            if (b->first < a->first) return std::strong_ordering::less;
            if (auto c = a->second <=> b->second; c != 0) return c;
            ++a, ++b;
        }
        if (a != x.entries_.end()) return std::strong_ordering::greater;
        if (b != y.entries_.end()) return std::strong_ordering::less;
        return std::strong_ordering::equal;
    }

  private:
    std::vector<Entry> entries_;
};

struct GrlexDescending {
    bool operator()(const Monomial& a, const Monomial& b) const {
        return Monomial::cmp(a, b) == std::strong_ordering::greater;
    }
};

// ---------------------------------------------------------------------------
// Polynomials
// ---------------------------------------------------------------------------

using Complex = std::complex<double>;

// Sparse multivariate polynomial with exact rational coefficients.
// Terms are kept in descending graded-lex order and no zero coefficient is
// ever stored, so equal polynomials have identical representations.
class Poly {
  public:
    using TermMap = std::map<Monomial, Rational, GrlexDescending>;

    Poly() = default;
    Poly(int c) { *this = constant(Rational(c)); }
    Poly(const Rational& c) { *this = constant(c); }

    static Poly constant(const Rational& c) {
        Poly p;
        if (c != 0) p.terms_[Monomial()] = c;
        return p;
    }
    static Poly variable(VarId v, int e = 1) { return term(Rational(1), Monomial::var(v, e)); }
    static Poly term(const Rational& c, const Monomial& m) {
        Poly p;
        if (c != 0) p.terms_[m] = c;
        return p;
    }

    const TermMap& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    std::size_t term_count() const { return terms_.size(); }

    bool operator==(const Poly& o) const { return terms_ == o.terms_; }

    Poly operator-() const {
        Poly r;
        for (auto& [m, c] : terms_) r.terms_[m] = -c;
        return r;
    }

    Poly& operator+=(const Poly& o) {
        for (auto& [m, c] : o.terms_) add_term(m, c);
        return *this;
    }
    Poly& operator-=(const Poly& o) {
        for (auto& [m, c] : o.terms_) add_term(m, -c);
        return *this;
    }
    Poly operator+(const Poly& o) const { Poly r = *this; return r += o; }
    Poly operator-(const Poly& o) const { Poly r = *this; return r -= o; }

    Poly operator*(const Poly& o) const {
        Poly r;
        for (auto& [ma, ca] : terms_)
            for (auto& [mb, cb] : o.terms_) r.add_term(ma * mb, ca * cb);
        return r;
    }
    Poly& operator*=(const Poly& o) { return *this = *this * o; }

    Poly operator*(const Rational& c) const {
        Poly r;
        if (c == 0) return r;
        for (auto& [m, k] : terms_) r.terms_[m] = k * c;
        return r;
    }
    friend Poly operator*(const Rational& c, const Poly& p) { return p * c; }

    Poly pow(int e) const {
        if (e < 0) throw error("negative power of a polynomial");
        Poly r = constant(1);
        Poly base = *this;
        while (e > 0) {
            if (e & 1) r = r * base;
            base = e > 1 ? base * base : base;
            e >>= 1;
        }
        return r;
    }

    Poly derivative(VarId v) const {
        Poly r;
        for (auto& [m, c] : terms_) {
            int e = m.exponent_of(v);
            if (e == 0) continue;
            auto q = m.divided_by(Monomial::var(v)).value();
            r.add_term(q, c * e);
        }
        return r;
    }

    // Composition p[v := q], exact. Horner evaluation over the powers of v.
    Poly substitute(VarId v, const Poly& q) const {
        std::map<int, Poly> by_exp; // exponent of v -> cofactor
        int emax = 0;
        for (auto& [m, c] : terms_) {
            int e = m.exponent_of(v);
            emax = std::max(emax, e);
            Monomial rest = e ? m.divided_by(Monomial::var(v, e)).value() : m;
            by_exp[e].add_term(rest, c);
        }
        Poly r;
        for (int e = emax; e >= 0; --e) {
            r = r * q;
            auto it = by_exp.find(e);
            if (it != by_exp.end()) r += it->second;
        }
        return r;
    }

    Rational eval(const std::map<VarId, Rational>& point) const {
        Rational r = 0;
        for (auto& [m, c] : terms_) {
            Rational t = c;
            for (auto& [v, e] : m.entries()) {
                auto it = point.find(v);
                if (it == point.end()) throw error("unassigned variable " + v.name());
                Rational p = 1;
                for (int i = 0; i < e; ++i) p *= it->second;
                t *= p;
            }
            r += t;
        }
        return r;
    }

    Complex eval(const std::map<VarId, Complex>& point) const {
        Complex r = 0;
        for (auto& [m, c] : terms_) {
            Complex t = to_double(c);
            for (auto& [v, e] : m.entries()) {
                auto it = point.find(v);
                if (it == point.end()) throw error("unassigned variable " + v.name());
                t *= std::pow(it->second, e);
            }
            r += t;
        }
        return r;
    }

    std::set<VarId> variables() const {
        std::set<VarId> s;
        for (auto& [m, c] : terms_)
            for (auto& [v, e] : m.entries()) s.insert(v);
        return s;
    }

    bool depends_on(VarId v) const {
        for (auto& [m, c] : terms_)
            if (m.exponent_of(v) != 0) return true;
        return false;
    }

    // Max weighted monomial degree; weight(v) supplies per-variable weights.
    int weighted_degree(const std::function<int(VarId)>& weight) const {
        if (terms_.empty()) return 0;
        int best = 0;
        bool first = true;
        for (auto& [m, c] : terms_) {
            int d = 0;
            for (auto& [v, e] : m.entries()) d += weight(v) * e;
            if (first || d > best) best = d, first = false;
        }
        return best;
    }

    bool is_weighted_homogeneous(const std::function<int(VarId)>& weight, int* w_out = nullptr) const {
        std::optional<int> w;
        for (auto& [m, c] : terms_) {
            int d = 0;
            for (auto& [v, e] : m.entries()) d += weight(v) * e;
            if (!w) w = d;
            else if (*w != d) return false;
        }
        if (w && w_out) *w_out = *w;
        return true;
    }

    // Exact quotient by m; throws unless every term is divisible.
    Poly exact_div(const Monomial& m) const {
        Poly r;
        for (auto& [mm, c] : terms_) {
            auto q = mm.divided_by(m);
            if (!q) throw error("inexact monomial division");
            r.terms_[*q] = c;
        }
        return r;
    }

    Rational leading_coefficient() const {
        if (terms_.empty()) return 0;
        return terms_.begin()->second;
    }

    // gcd of numerators / lcm of denominators over all coefficients,
    // signed by the leading coefficient; p / content(p) has coprime
    // integer coefficients with positive leading coefficient.
    Rational content() const {
        if (terms_.empty()) return 0;
        Int g = 0, l = 1;
        for (auto& [m, c] : terms_) {
            g = boost::multiprecision::gcd(g, rat_num(c) < 0 ? Int(-rat_num(c)) : rat_num(c));
            l = boost::multiprecision::lcm(l, rat_den(c));
        }
        Rational r(g, l);
        if (leading_coefficient() < 0) r = -r;
        return r;
    }

    std::string str() const;

    static Poly parse(const std::string& text);

  private:
    void add_term(const Monomial& m, const Rational& c) {
        if (c == 0) return;
        auto [it, inserted] = terms_.try_emplace(m, c);
        if (!inserted) {
            it->second += c;
            if (it->second == 0) terms_.erase(it);
        }
    }

    TermMap terms_;
};

// ---------------------------------------------------------------------------
// Canonical text form: descending graded-lex terms, `a/b` coefficients,
// `*` products, `^` powers.  Example: `t1^3 - 3*t3`.
// ---------------------------------------------------------------------------

inline std::string Poly::str() const {
    if (terms_.empty()) return "0";
    std::string out;
    bool first = true;
    for (auto& [m, c] : terms_) {
        Rational a = c;
        if (first) {
            if (a < 0) { out += "-"; a = -a; }
        } else {
            out += a < 0 ? " - " : " + ";
            if (a < 0) a = -a;
        }
        first = false;
        std::string vars;
        for (auto& [v, e] : m.entries()) {
            if (!vars.empty()) vars += "*";
            vars += v.name();
            if (e > 1) vars += "^" + std::to_string(e);
        }
        if (vars.empty()) out += to_string(a);
        else if (a == 1) out += vars;
        else out += to_string(a) + "*" + vars;
    }
    return out;
}

namespace detail {

class PolyParser {
  public:
    explicit PolyParser(const std::string& s) : s_(s) {}

    Poly parse() {
        Poly p = parse_sum();
        skip_ws();
        if (pos_ != s_.size()) throw error("unexpected character in polynomial at offset " + std::to_string(pos_));
        return p;
    }

  private:
    Poly parse_sum() {
        skip_ws();
        int sign = 1;
        if (peek() == '-') { sign = -1; ++pos_; }
        else if (peek() == '+') ++pos_;
        Poly p = parse_term() * Rational(sign);
        while (true) {
            skip_ws();
            char c = peek();
            if (c == '+' || c == '-') {
                ++pos_;
                p += parse_term() * Rational(c == '-' ? -1 : 1);
            } else break;
        }
        return p;
    }

    Poly parse_term() {
        Poly p = parse_factor();
        while (true) {
            skip_ws();
            if (peek() == '*') {
                ++pos_;
                p = p * parse_factor();
            } else break;
        }
        return p;
    }

    Poly parse_factor() {
        skip_ws();
        char c = peek();
        if (c == '(') {
            ++pos_;
            Poly p = parse_sum();
            skip_ws();
            if (peek() != ')') throw error("missing ')'");
            ++pos_;
            return maybe_power(p);
        }
        if (std::isdigit(static_cast<unsigned char>(c))) {
            Int num = parse_int();
            skip_ws();
            if (peek() == '/') {
                ++pos_;
                Int den = parse_int();
                if (den == 0) throw error("zero denominator in coefficient");
                return Poly::constant(Rational(num, den));
            }
            return maybe_power(Poly::constant(Rational(num)));
        }
        if (std::isalpha(static_cast<unsigned char>(c))) return maybe_power(parse_var());
        throw error("unexpected character in polynomial at offset " + std::to_string(pos_));
    }

    Poly maybe_power(Poly p) {
        skip_ws();
        if (peek() == '^') {
            ++pos_;
            skip_ws();
            Int e = parse_int();
            if (e < 0 || e > 10000) throw error("exponent out of range");
            return p.pow(e.convert_to<int>());
        }
        return p;
    }

    Poly parse_var() {
        char letter = s_[pos_++];
        int idx = 1;
        if (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) {
            Int i = parse_int();
            if (i < 1 || i > 1000000) throw error("variable index out of range");
            idx = i.convert_to<int>();
        }
        switch (letter) {
            case 't': return Poly::variable(VarId::time(idx));
            case 'z': return Poly::variable(VarId::shift(idx));
            case 'w': return Poly::variable(VarId::inv_shift(idx));
            case 'a': return Poly::variable(VarId::param(idx));
            default: throw error(std::string("unknown variable letter '") + letter + "'");
        }
    }

    Int parse_int() {
        skip_ws();
        std::size_t start = pos_;
        while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
        if (pos_ == start) throw error("expected integer at offset " + std::to_string(start));
        return Int(s_.substr(start, pos_ - start));
    }

    char peek() const { return pos_ < s_.size() ? s_[pos_] : '\0'; }
    void skip_ws() {
        while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    }

    const std::string& s_;
    std::size_t pos_ = 0;
};

} // namespace detail

inline Poly Poly::parse(const std::string& text) { return detail::PolyParser(text).parse(); }

// Default weight for the homogeneity checks of this domain: deg t_k = k,
// every shift-like parameter counts 1.
inline int default_weight(VarId v) { return v.is_time() ? v.index : 1; }

} // namespace tauforge
