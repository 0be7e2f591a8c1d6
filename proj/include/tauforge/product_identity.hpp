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
#include <memory>
#include <vector>

#include "tauforge/identities.hpp"

namespace tauforge {

// ---------------------------------------------------------------------------
// Expression trees for the order-(2^n - 1) identity family.  A leaf is a
// net Miwa shift tau(t + sum_i s_i [z_i]); scalars are rational functions
// of the shift parameters.  Trees are produced by expanding the Wronskian
// of two tau-pair products with the product rule and closing the innermost
// two-tau Wronskians with the KdV Wronskian formulas.
// ---------------------------------------------------------------------------

// Net shift applied to tau: shift index -> signed multiplicity.
using TauShift = std::map<int, int>;

struct IdentityExpr {
    enum class Kind { Leaf, Scalar, Sum, Product };

    Kind kind = Kind::Leaf;
    TauShift shift;                   // Leaf
    Poly scalar_num, scalar_den;      // Scalar, polynomials in z variables
    std::vector<IdentityExpr> kids;   // Sum / Product

    static IdentityExpr leaf(TauShift s) {
        IdentityExpr e;
        e.kind = Kind::Leaf;
        e.shift = std::move(s);
        return e;
    }
    static IdentityExpr scalar(Poly num, Poly den) {
        IdentityExpr e;
        e.kind = Kind::Scalar;
        e.scalar_num = std::move(num);
        e.scalar_den = std::move(den);
        return e;
    }
    static IdentityExpr sum(std::vector<IdentityExpr> kids) {
        IdentityExpr e;
        e.kind = Kind::Sum;
        e.kids = std::move(kids);
        return e;
    }
    static IdentityExpr product(std::vector<IdentityExpr> kids) {
        IdentityExpr e;
        e.kind = Kind::Product;
        e.kids = std::move(kids);
        return e;
    }
};

namespace detail {

// An atom during construction: tau(t + sign [z_index]).
struct Atom {
    int index;
    int sign;
    TauShift as_shift() const { return {{index, sign}}; }
};

// W(tau(t+a[z_i]), tau(t+b[z_j])) for a KdV tau closes to
//   (b/z_j - a/z_i) [tau(t+a[z_i]) tau(t+b[z_j]) - tau(t) tau(t+a[z_i]+b[z_j])].
// The four sign cases are exactly the four Wronskian formulas.
inline IdentityExpr closed_wronskian(const Atom& f, const Atom& g) {
    Poly zi = Poly::variable(VarId::shift(f.index));
    Poly zj = Poly::variable(VarId::shift(g.index));
    Poly num = Rational(g.sign) * zi - Rational(f.sign) * zj;
    Poly den = zi * zj;
    TauShift both = f.as_shift();
    both[g.index] += g.sign;
    if (both[g.index] == 0) both.erase(g.index);
    IdentityExpr direct = IdentityExpr::product({IdentityExpr::leaf(f.as_shift()), IdentityExpr::leaf(g.as_shift())});
    IdentityExpr folded = IdentityExpr::product(
        {IdentityExpr::scalar(Poly(-1), Poly(1)), IdentityExpr::leaf(TauShift{}), IdentityExpr::leaf(both)});
    return IdentityExpr::product(
        {IdentityExpr::scalar(num, den), IdentityExpr::sum({direct, folded})});
}

inline IdentityExpr product_of_atoms(const std::vector<Atom>& atoms) {
    std::vector<IdentityExpr> kids;
    kids.reserve(atoms.size());
    for (const Atom& a : atoms) kids.push_back(IdentityExpr::leaf(a.as_shift()));
    return IdentityExpr::product(std::move(kids));
}

// Expand W(prod F, prod G). `crossed` swaps the pairing at this level only;
// deeper levels stay aligned, which is the convention that recovers the
// printed n = 3 grouping.
inline IdentityExpr expand_wronskian(const std::vector<Atom>& f, const std::vector<Atom>& g, bool crossed) {
    if (f.size() == 1) return closed_wronskian(f[0], g[0]);
    std::size_t h = f.size() / 2;
    std::vector<Atom> f1(f.begin(), f.begin() + h), f2(f.begin() + h, f.end());
    std::vector<Atom> g1(g.begin(), g.begin() + h), g2(g.begin() + h, g.end());
    if (crossed) std::swap(g1, g2);
    // W(F1 F2, G1 G2) = F1 G1 W(F2, G2) + F2 G2 W(F1, G1)
    IdentityExpr t1 = IdentityExpr::product(
        {product_of_atoms(f1), product_of_atoms(g1), expand_wronskian(f2, g2, false)});
    IdentityExpr t2 = IdentityExpr::product(
        {product_of_atoms(f2), product_of_atoms(g2), expand_wronskian(f1, g1, false)});
    return IdentityExpr::sum({t1, t2});
}

} // namespace detail

// Number of shift parameters used by generate_product_identity(n).
inline int product_identity_param_count(int n) { return 1 << (n - 1); }

// The two expansion routes of
//   W(prod_{i odd} tau(t+[z_i]) tau(t-[z_i]), prod_{i even} ...)
// over 2^{n-1} parameters; their equality is the order-(2^n - 1) identity.
inline std::pair<IdentityExpr, IdentityExpr> generate_product_identity(int n, int max_n = 4) {
    if (n < 2) throw error("product identity needs n >= 2");
    if (n > max_n) throw error("product identity order limit exceeded");
    int params = product_identity_param_count(n);
    std::vector<detail::Atom> left, right;
    for (int i = 1; i <= params; ++i) {
        auto& side = (i % 2 == 1) ? left : right;
        side.push_back({i, +1});
        side.push_back({i, -1});
    }
    return {detail::expand_wronskian(left, right, false),
            detail::expand_wronskian(left, right, true)};
}

// ---------------------------------------------------------------------------
// Evaluation against a concrete tau
// ---------------------------------------------------------------------------

class IdentityExprEvaluator {
  public:
    explicit IdentityExprEvaluator(const TauPoly& tau) : tau_(tau) {}

    RationalFunction eval(const IdentityExpr& e) {
        switch (e.kind) {
            case IdentityExpr::Kind::Leaf: return RationalFunction(shifted(e.shift));
            case IdentityExpr::Kind::Scalar: return {e.scalar_num, e.scalar_den};
            case IdentityExpr::Kind::Sum: {
                RationalFunction r;
                for (auto& k : e.kids) r += eval(k);
                return r;
            }
            case IdentityExpr::Kind::Product: {
                RationalFunction r(1);
                for (auto& k : e.kids) r *= eval(k);
                return r;
            }
        }
        throw error("corrupt identity expression");
    }

  private:
    const Poly& shifted(const TauShift& s) {
        auto it = cache_.find(s);
        if (it != cache_.end()) return it->second;
        Poly p = tau_.poly();
        for (auto& [idx, mult] : s) {
            if (mult == 0) continue;
            p = miwa_shift(p, mult > 0 ? +1 : -1, VarId::shift(idx), std::abs(mult));
        }
        return cache_.emplace(s, std::move(p)).first->second;
    }

    const TauPoly& tau_;
    std::map<TauShift, Poly> cache_;
};

struct VerifyResult {
    bool pass = false;
    RationalFunction lhs, rhs;
};

// Evaluates both trees symbolically against tau; pass iff their difference
// is the zero rational function.
inline VerifyResult verify_identity(const std::pair<IdentityExpr, IdentityExpr>& exprs, const TauPoly& tau) {
    IdentityExprEvaluator ev(tau);
    VerifyResult r;
    r.lhs = ev.eval(exprs.first);
    r.rhs = ev.eval(exprs.second);
    r.pass = r.lhs.equals(r.rhs);
    return r;
}

} // namespace tauforge
