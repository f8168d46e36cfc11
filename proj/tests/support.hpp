#pragma once

// Test-only generators and independent oracles. Nothing here calls into the
// elimination or dualization code paths it is used to check.

#include <ostream>
#include <random>
#include <vector>

#include "pcdual/pcdual.hpp"

namespace pcdual {

// gtest failure messages
inline void PrintTo(const Polynomial& p, std::ostream* os) { *os << to_string(p); }

}  // namespace pcdual

namespace pcdual::testing {

using Rng = std::mt19937_64;

inline Polynomial P(std::string_view s) { return parse_polynomial(s); }

inline Rational random_rational(Rng& rng, int lo, int hi, int max_den = 1) {
    std::uniform_int_distribution<int> num(lo, hi);
    std::uniform_int_distribution<int> den(1, max_den);
    return make_rational(num(rng), den(rng));
}

/// Up to max_terms random terms of total degree <= max_degree in `vars`, integer coefficients in [lo, hi].
inline Polynomial random_polynomial(Rng& rng, std::span<const Var> vars, int max_terms, int max_degree, int lo = -9,
                                    int hi = 9) {
    std::uniform_int_distribution<int> terms(0, max_terms);
    std::uniform_int_distribution<int> var_pick(0, static_cast<int>(vars.size()) - 1);
    std::uniform_int_distribution<int> deg(0, max_degree);
    std::uniform_int_distribution<int> coef(lo, hi);
    Polynomial p;
    const int n = terms(rng);
    for (int t = 0; t < n; ++t) {
        Monomial m;
        const int d = deg(rng);
        for (int k = 0; k < d; ++k) {
            const Var v = vars[static_cast<std::size_t>(var_pick(rng))];
            m.set_exponent(v, m.exponent(v) + 1);
        }
        p.add_term(m, coef(rng));
    }
    return p;
}

/// Every monomial x1^i x2^j with i + j <= n gets a random nonzero coefficient.
inline Polynomial random_dense_curve(Rng& rng, unsigned n, int lo = -5, int hi = 5) {
    std::uniform_int_distribution<int> coef(lo, hi);
    Polynomial p;
    for (unsigned i = 0; i <= n; ++i)
        for (unsigned j = 0; i + j <= n; ++j) {
            int c = 0;
            while (c == 0) c = coef(rng);
            Monomial m = Monomial::of(Var::x1, i) * Monomial::of(Var::x2, j);
            p.add_term(m, c);
        }
    return p;
}

/// Linear form a*x1 + b*x2 with (a, b) != (0, 0).
struct LinearFactor {
    long a;
    long b;
};

inline Polynomial as_polynomial(const LinearFactor& l) {
    return Polynomial(l.a) * Polynomial::variable(Var::x1) + Polynomial(l.b) * Polynomial::variable(Var::x2);
}

inline Polynomial product(const std::vector<LinearFactor>& fs) {
    Polynomial p(1);
    for (const auto& f : fs) p *= as_polynomial(f);
    return p;
}

/// Two linear factors share a projective root iff their 2x2 determinant vanishes.
inline bool share_root(const LinearFactor& l, const LinearFactor& m) { return l.a * m.b - l.b * m.a == 0; }

/// Resultant of products of linear forms, by multiplicativity alone:
/// Res(prod L_i, prod M_j) = prod_{i,j} Res(L_i, M_j), and for the row layout
/// (coefficient of x1 first) Res(a x1 + b x2, c x1 + d x2) = a d - b c.
inline Integer product_resultant(const std::vector<LinearFactor>& f, const std::vector<LinearFactor>& g) {
    Integer r = 1;
    for (const auto& l : f)
        for (const auto& m : g) r *= Integer(l.a * m.b - l.b * m.a);
    return r;
}

inline std::vector<LinearFactor> random_factors(Rng& rng, int count, int lo = -4, int hi = 4) {
    std::uniform_int_distribution<long> d(lo, hi);
    std::vector<LinearFactor> out;
    while (static_cast<int>(out.size()) < count) {
        LinearFactor l{d(rng), d(rng)};
        if (l.a != 0 || l.b != 0) out.push_back(l);
    }
    return out;
}

/// Tangent line x2 = m x1 + b to f = 0 at p, from the gradient.
struct TangentLine {
    double m;
    double b;
};

inline TangentLine tangent_at(const Polynomial& f, PlanePoint p) {
    const double fx = evaluate_float(partial_derivative(f, Var::x1), {{Var::x1, p.x}, {Var::x2, p.y}});
    const double fy = evaluate_float(partial_derivative(f, Var::x2), {{Var::x1, p.x}, {Var::x2, p.y}});
    const double m = -fx / fy;
    return {m, p.y - m * p.x};
}

/// Intersection of line p1 p2 with line q1 q2.
inline PlanePoint intersect(PlanePoint p1, PlanePoint p2, PlanePoint q1, PlanePoint q2) {
    const double a11 = p2.x - p1.x, a12 = -(q2.x - q1.x);
    const double a21 = p2.y - p1.y, a22 = -(q2.y - q1.y);
    const double r1 = q1.x - p1.x, r2 = q1.y - p1.y;
    const double det = a11 * a22 - a12 * a21;
    const double t = (r1 * a22 - a12 * r2) / det;
    return {p1.x + t * (p2.x - p1.x), p1.y + t * (p2.y - p1.y)};
}

/// Do g and h agree up to a nonzero rational factor?
inline bool proportional(const Polynomial& g, const Polynomial& h) {
    if (g.is_zero() || h.is_zero()) return g.is_zero() && h.is_zero();
    const Rational s = h.leading_coefficient() / g.leading_coefficient();
    return s * g == h;
}

}  // namespace pcdual::testing
