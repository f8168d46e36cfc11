#pragma once

#include <cstddef>
#include <string>
#include <utility>
#include <vector>

#include "error.hpp"
#include "polynomial.hpp"

namespace pcdual {

/// Binary form sum_i coeffs[i] * x1^i * x2^(n-i) with coefficients in the
/// (eta, xi, psi)-ring.
struct BinaryForm {
    std::vector<Polynomial> coeffs;

    std::size_t degree() const { return coeffs.size() - 1; }

    friend bool operator==(const BinaryForm&, const BinaryForm&) = default;
};

/// Dense square matrix of polynomials, row-major.
class PolyMatrix {
public:
    PolyMatrix() = default;
    explicit PolyMatrix(std::size_t size) : size_(size), entries_(size * size) {}

    PolyMatrix(std::initializer_list<std::initializer_list<Polynomial>> rows) : PolyMatrix(rows.size()) {
        std::size_t i = 0;
        for (const auto& row : rows) {
            if (row.size() != size_) throw InvalidArgument("matrix must be square");
            std::size_t j = 0;
            for (const auto& e : row) (*this)(i, j++) = e;
            ++i;
        }
    }

    std::size_t size() const { return size_; }

    Polynomial& operator()(std::size_t i, std::size_t j) { return entries_[i * size_ + j]; }
    const Polynomial& operator()(std::size_t i, std::size_t j) const { return entries_[i * size_ + j]; }

    void swap_rows(std::size_t a, std::size_t b) {
        for (std::size_t j = 0; j < size_; ++j) std::swap((*this)(a, j), (*this)(b, j));
    }

    friend bool operator==(const PolyMatrix&, const PolyMatrix&) = default;

private:
    std::size_t size_ = 0;
    std::vector<Polynomial> entries_;
};

/// Reads p as a form in (x1, x2): index i holds the coefficient of x1^i x2^(n-i).
inline BinaryForm as_binary_form(const Polynomial& p) {
    if (p.is_zero()) throw InvalidArgument("binary form must have a nonzero coefficient");
    const VarSet allowed = var_set({Var::x1, Var::x2, Var::eta, Var::xi, Var::psi});
    if ((p.variables() & ~allowed).any())
        throw InvalidArgument("binary form coefficients may only use eta, xi, psi");

    auto form_degree = [](const Monomial& m) { return m.exponent(Var::x1) + m.exponent(Var::x2); };
    const auto n = form_degree(p.leading_monomial());
    BinaryForm f;
    f.coeffs.resize(n + 1);
    for (const auto& [m, c] : p.terms()) {
        if (form_degree(m) != n) throw InvalidArgument("polynomial is not homogeneous in (x1, x2)");
        Monomial rest = m;
        rest.set_exponent(Var::x1, 0);
        rest.set_exponent(Var::x2, 0);
        f.coeffs[m.exponent(Var::x1)].add_term(rest, c);
    }
    return f;
}

/// m shifted rows of F's coefficients followed by n shifted rows of G's.
/// Each row runs from the x1^n coefficient down to the x2^n coefficient.
inline PolyMatrix sylvester_matrix(const BinaryForm& f, const BinaryForm& g) {
    const std::size_t n = f.degree();
    const std::size_t m = g.degree();
    if (n == 0 || m == 0) throw InvalidArgument("Sylvester matrix needs forms of degree >= 1");
    PolyMatrix s(n + m);
    for (std::size_t r = 0; r < m; ++r)
        for (std::size_t i = 0; i <= n; ++i) s(r, r + i) = f.coeffs[n - i];
    for (std::size_t r = 0; r < n; ++r)
        for (std::size_t j = 0; j <= m; ++j) s(m + r, r + j) = g.coeffs[m - j];
    return s;
}

/// Laplace expansion along the first row. Factorial cost; meant for small sizes.
inline Polynomial determinant_cofactor(const PolyMatrix& a) {
    const std::size_t n = a.size();
    if (n == 0) return Polynomial(1);
    if (n == 1) return a(0, 0);
    if (n == 2) return a(0, 0) * a(1, 1) - a(0, 1) * a(1, 0);
    Polynomial det;
    for (std::size_t col = 0; col < n; ++col) {
        if (a(0, col).is_zero()) continue;
        PolyMatrix minor(n - 1);
        for (std::size_t i = 1; i < n; ++i)
            for (std::size_t j = 0, mj = 0; j < n; ++j)
                if (j != col) minor(i - 1, mj++) = a(i, j);
        Polynomial term = a(0, col) * determinant_cofactor(minor);
        if (col % 2 == 0)
            det += term;
        else
            det -= term;
    }
    return det;
}

/// Fraction-free Bareiss elimination over Q[vars]. Every division by the
/// previous pivot is exact. Pivot: first row at or below k with a nonzero entry.
inline Polynomial determinant_bareiss(PolyMatrix a) {
    const std::size_t n = a.size();
    if (n == 0) return Polynomial(1);
    bool negate = false;
    Polynomial prev(1);
    for (std::size_t k = 0; k + 1 < n; ++k) {
        if (a(k, k).is_zero()) {
            std::size_t p = k + 1;
            while (p < n && a(p, k).is_zero()) ++p;
            if (p == n) return {};
            a.swap_rows(k, p);
            negate = !negate;
        }
        for (std::size_t i = k + 1; i < n; ++i) {
            for (std::size_t j = k + 1; j < n; ++j) {
                Polynomial num = a(k, k) * a(i, j) - a(i, k) * a(k, j);
                a(i, j) = divide_exact(num, prev);
            }
            a(i, k) = Polynomial();
        }
        prev = a(k, k);
    }
    Polynomial det = a(n - 1, n - 1);
    return negate ? -det : det;
}

inline Polynomial determinant(const PolyMatrix& a) {
    return a.size() <= 3 ? determinant_cofactor(a) : determinant_bareiss(a);
}

inline Polynomial resultant(const BinaryForm& f, const BinaryForm& g) {
    return determinant(sylvester_matrix(f, g));
}

}  // namespace pcdual
