#pragma once

#include <algorithm>
#include <array>
#include <cmath>
#include <cstdint>
#include <limits>
#include <map>
#include <numeric>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "error.hpp"
#include "rational.hpp"
#include "var.hpp"

namespace pcdual {

/// Exponent vector over the fixed registry. A zero entry means "variable absent".
class Monomial {
public:
    using Exponent = std::uint32_t;

    constexpr Monomial() = default;

    static Monomial of(Var v, Exponent e = 1) {
        Monomial m;
        m.exps_[index(v)] = e;
        return m;
    }

    Exponent exponent(Var v) const { return exps_[index(v)]; }
    void set_exponent(Var v, Exponent e) { exps_[index(v)] = e; }

    Exponent degree() const { return std::accumulate(exps_.begin(), exps_.end(), Exponent{0}); }

    bool is_one() const { return degree() == 0; }

    VarSet variables() const {
        VarSet s;
        for (std::size_t i = 0; i < kVarCount; ++i)
            if (exps_[i] != 0) s.set(i);
        return s;
    }

    bool divides(const Monomial& other) const {
        for (std::size_t i = 0; i < kVarCount; ++i)
            if (exps_[i] > other.exps_[i]) return false;
        return true;
    }

    /// Requires `divisor.divides(*this)`.
    Monomial quotient(const Monomial& divisor) const {
        Monomial q;
        for (std::size_t i = 0; i < kVarCount; ++i) q.exps_[i] = exps_[i] - divisor.exps_[i];
        return q;
    }

    friend Monomial operator*(const Monomial& a, const Monomial& b) {
        Monomial m;
        for (std::size_t i = 0; i < kVarCount; ++i) m.exps_[i] = a.exps_[i] + b.exps_[i];
        return m;
    }

    const std::array<Exponent, kVarCount>& exponents() const { return exps_; }

    friend bool operator==(const Monomial&, const Monomial&) = default;

private:
    std::array<Exponent, kVarCount> exps_{};
};

/// Graded lexicographic order: higher total degree first, ties broken by the
/// exponent of the lowest-indexed variable (x1 before x2 before ... before y).
struct GrlexOrder {
    bool operator()(const Monomial& a, const Monomial& b) const {
        const auto da = a.degree(), db = b.degree();
        if (da != db) return da > db;
        return a.exponents() > b.exponents();
    }
};

/// Sparse polynomial over Q in the registry variables. No zero coefficients are
/// stored; iteration follows GrlexOrder, so the first term is the leading one.
class Polynomial {
public:
    using TermMap = std::map<Monomial, Rational, GrlexOrder>;

    Polynomial() = default;
    Polynomial(const Rational& c) { add_term(Monomial{}, c); }  // NOLINT(google-explicit-constructor)
    Polynomial(long c) : Polynomial(Rational(c)) {}              // NOLINT(google-explicit-constructor)
    Polynomial(int c) : Polynomial(Rational(c)) {}               // NOLINT(google-explicit-constructor)

    static Polynomial variable(Var v) { return term(Rational(1), Monomial::of(v)); }

    static Polynomial term(const Rational& c, const Monomial& m) {
        Polynomial p;
        p.add_term(m, c);
        return p;
    }

    bool is_zero() const { return terms_.empty(); }
    bool is_constant() const { return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first.is_one()); }
    std::size_t size() const { return terms_.size(); }
    const TermMap& terms() const { return terms_; }

    Rational coefficient(const Monomial& m) const {
        auto it = terms_.find(m);
        return it == terms_.end() ? Rational(0) : it->second;
    }

    /// Requires a nonzero polynomial.
    const Monomial& leading_monomial() const { return terms_.begin()->first; }
    const Rational& leading_coefficient() const { return terms_.begin()->second; }

    VarSet variables() const {
        VarSet s;
        for (const auto& [m, c] : terms_) s |= m.variables();
        return s;
    }

    bool contains(Var v) const { return variables().test(index(v)); }

    /// Adds c*m in place, dropping the term if it cancels.
    void add_term(const Monomial& m, const Rational& c) {
        if (c == 0) return;
        auto [it, inserted] = terms_.try_emplace(m, c);
        if (!inserted) {
            it->second += c;
            if (it->second == 0) terms_.erase(it);
        }
    }

    Polynomial& operator+=(const Polynomial& q) {
        for (const auto& [m, c] : q.terms_) add_term(m, c);
        return *this;
    }

    Polynomial& operator-=(const Polynomial& q) {
        for (const auto& [m, c] : q.terms_) add_term(m, -c);
        return *this;
    }

    Polynomial& operator*=(const Polynomial& q) { return *this = *this * q; }

    friend Polynomial operator+(Polynomial p, const Polynomial& q) { return p += q; }
    friend Polynomial operator-(Polynomial p, const Polynomial& q) { return p -= q; }

    friend Polynomial operator-(Polynomial p) {
        for (auto& [m, c] : p.terms_) c = -c;
        return p;
    }

    friend Polynomial operator*(const Polynomial& p, const Polynomial& q) {
        Polynomial r;
        for (const auto& [mp, cp] : p.terms_)
            for (const auto& [mq, cq] : q.terms_) r.add_term(mp * mq, cp * cq);
        return r;
    }

    friend Polynomial operator*(const Rational& s, Polynomial p) {
        if (s == 0) return {};
        for (auto& [m, c] : p.terms_) c *= s;
        return p;
    }

    friend bool operator==(const Polynomial& p, const Polynomial& q) { return p.terms_ == q.terms_; }

private:
    TermMap terms_;
};

inline Polynomial add(const Polynomial& p, const Polynomial& q) { return p + q; }
inline Polynomial mul(const Polynomial& p, const Polynomial& q) { return p * q; }

inline Polynomial pow(const Polynomial& p, unsigned e) {
    Polynomial result(1);
    Polynomial base = p;
    while (e != 0) {
        if (e & 1U) result *= base;
        e >>= 1U;
        if (e != 0) base *= base;
    }
    return result;
}

inline Polynomial partial_derivative(const Polynomial& p, Var v) {
    Polynomial d;
    for (const auto& [m, c] : p.terms()) {
        const auto e = m.exponent(v);
        if (e == 0) continue;
        Monomial dm = m;
        dm.set_exponent(v, e - 1);
        d.add_term(dm, c * e);
    }
    return d;
}

/// Throws InvalidArgument on the zero polynomial.
inline unsigned total_degree(const Polynomial& p) {
    if (p.is_zero()) throw InvalidArgument("total degree of the zero polynomial is undefined");
    return p.leading_monomial().degree();
}

inline bool is_homogeneous(const Polynomial& p) {
    if (p.is_zero()) return true;
    const auto n = p.leading_monomial().degree();
    return std::all_of(p.terms().begin(), p.terms().end(),
                       [n](const auto& t) { return t.first.degree() == n; });
}

/// Multiplies every term by new_var^(n - deg(term)), n the total degree of p.
inline Polynomial homogenize(const Polynomial& p, Var new_var) {
    if (p.is_zero()) throw InvalidArgument("cannot homogenize the zero polynomial");
    if (p.contains(new_var))
        throw InvalidArgument("homogenizing variable " + std::string(name(new_var)) + " already occurs");
    const auto n = total_degree(p);
    Polynomial h;
    for (const auto& [m, c] : p.terms()) {
        Monomial hm = m;
        hm.set_exponent(new_var, n - m.degree());
        h.add_term(hm, c);
    }
    return h;
}

/// Sets v = 1.
inline Polynomial dehomogenize(const Polynomial& p, Var v) {
    Polynomial d;
    for (const auto& [m, c] : p.terms()) {
        Monomial dm = m;
        dm.set_exponent(v, 0);
        d.add_term(dm, c);
    }
    return d;
}

using Bindings = std::map<Var, Polynomial>;

/// Simultaneous substitution; unbound variables are kept as they are.
inline Polynomial substitute(const Polynomial& p, const Bindings& bindings) {
    // powers[v][e] = binding(v)^e, built on demand
    std::array<std::vector<Polynomial>, kVarCount> powers;
    auto power_of = [&](Var v, unsigned e) -> const Polynomial& {
        auto& table = powers[index(v)];
        if (table.empty()) {
            auto it = bindings.find(v);
            table.emplace_back(1);
            table.push_back(it == bindings.end() ? Polynomial::variable(v) : it->second);
        }
        while (table.size() <= e) table.push_back(table.back() * table[1]);
        return table[e];
    };

    Polynomial result;
    for (const auto& [m, c] : p.terms()) {
        Polynomial t(c);
        for (Var v : kAllVars) {
            const auto e = m.exponent(v);
            if (e != 0) t *= power_of(v, e);
        }
        result += t;
    }
    return result;
}

struct ContentSplit {
    Rational content;
    Polynomial primitive;
};

/// p = content * primitive, with primitive having coprime integer coefficients
/// and a positive leading coefficient. Throws on the zero polynomial.
inline ContentSplit content_and_primitive(const Polynomial& p) {
    if (p.is_zero()) throw InvalidArgument("content of the zero polynomial is undefined");
    Integer num_gcd = 0;
    Integer den_lcm = 1;
    for (const auto& [m, c] : p.terms()) {
        num_gcd = gcd(num_gcd, Integer(c.get_num()));
        den_lcm = lcm(den_lcm, Integer(c.get_den()));
    }
    Rational content = make_rational(num_gcd, den_lcm);
    if (p.leading_coefficient() < 0) content = -content;
    Rational inverse = 1 / content;
    return {content, inverse * p};
}

inline Polynomial primitive_part(const Polynomial& p) { return content_and_primitive(p).primitive; }

struct VariablePowerSplit {
    unsigned power = 0;
    Polynomial quotient;
};

/// Largest k with v^k | p; returns k and p / v^k. Throws on the zero polynomial.
inline VariablePowerSplit divide_out_variable_power(const Polynomial& p, Var v) {
    if (p.is_zero()) throw InvalidArgument("cannot divide out a power from the zero polynomial");
    unsigned k = std::numeric_limits<unsigned>::max();
    for (const auto& [m, c] : p.terms()) k = std::min<unsigned>(k, m.exponent(v));
    if (k == 0) return {0, p};
    Polynomial q;
    for (const auto& [m, c] : p.terms()) {
        Monomial qm = m;
        qm.set_exponent(v, m.exponent(v) - k);
        q.add_term(qm, c);
    }
    return {k, q};
}

/// Exact multivariate division. Throws InvalidArgument if q does not divide p.
inline Polynomial divide_exact(const Polynomial& p, const Polynomial& q) {
    if (q.is_zero()) throw InvalidArgument("division by the zero polynomial");
    if (q.is_constant()) return (1 / q.leading_coefficient()) * p;
    const Monomial& lm = q.leading_monomial();
    const Rational lc_inv = 1 / q.leading_coefficient();
    Polynomial remainder = p;
    Polynomial quotient;
    while (!remainder.is_zero()) {
        const Monomial& rm = remainder.leading_monomial();
        if (!lm.divides(rm)) throw InvalidArgument("inexact polynomial division");
        const Monomial tm = rm.quotient(lm);
        const Rational tc = remainder.leading_coefficient() * lc_inv;
        quotient.add_term(tm, tc);
        for (const auto& [m, c] : q.terms()) remainder.add_term(m * tm, -c * tc);
    }
    return quotient;
}

using ExactPoint = std::map<Var, Rational>;
using FloatPoint = std::map<Var, double>;

inline Rational evaluate_exact(const Polynomial& p, const ExactPoint& point) {
    std::array<const Rational*, kVarCount> values{};
    for (const auto& [v, r] : point) values[index(v)] = &r;
    Rational sum = 0;
    for (const auto& [m, c] : p.terms()) {
        Rational t = c;
        for (Var v : kAllVars) {
            const auto e = m.exponent(v);
            if (e == 0) continue;
            if (values[index(v)] == nullptr)
                throw InvalidArgument("unbound variable " + std::string(name(v)));
            Rational pw;
            mpz_pow_ui(pw.get_num_mpz_t(), values[index(v)]->get_num_mpz_t(), e);
            mpz_pow_ui(pw.get_den_mpz_t(), values[index(v)]->get_den_mpz_t(), e);
            t *= pw;
        }
        sum += t;
    }
    return sum;
}

/// Double-precision image of a polynomial, built once and evaluated many times.
/// Terms are summed in canonical order so results are bit-reproducible.
class FloatPolynomial {
public:
    using Values = std::array<double, kVarCount>;

    FloatPolynomial() = default;

    explicit FloatPolynomial(const Polynomial& p) : vars_(p.variables()) {
        terms_.reserve(p.size());
        for (const auto& [m, c] : p.terms()) {
            terms_.push_back({c.get_d(), m.exponents()});
            for (std::size_t i = 0; i < kVarCount; ++i) max_exp_[i] = std::max(max_exp_[i], m.exponents()[i]);
        }
        for (std::size_t i = 0; i < kVarCount; ++i) {
            offset_[i] = table_size_;
            if (max_exp_[i] != 0) table_size_ += max_exp_[i] + 1;
        }
    }

    VarSet variables() const { return vars_; }

    double operator()(const Values& at) const {
        double sum = 0.0;
        walk(at, [&](double t) { sum += t; });
        return sum;
    }

    /// Largest |term| at the point; the natural magnitude for relative residuals.
    double max_term(const Values& at) const {
        double mx = 0.0;
        walk(at, [&](double t) { mx = std::max(mx, std::abs(t)); });
        return mx;
    }

    double abs_sum(const Values& at) const {
        double s = 0.0;
        walk(at, [&](double t) { s += std::abs(t); });
        return s;
    }

private:
    struct Term {
        double coeff;
        std::array<Monomial::Exponent, kVarCount> exps;
    };

    template <typename Visit>
    void walk(const Values& at, Visit&& visit) const {
        // pw[offset_[i] + e] = at[i]^e
        std::vector<double> pw(table_size_);
        for (std::size_t i = 0; i < kVarCount; ++i) {
            if (max_exp_[i] == 0) continue;
            double* row = pw.data() + offset_[i];
            row[0] = 1.0;
            for (std::size_t e = 1; e <= max_exp_[i]; ++e) row[e] = row[e - 1] * at[i];
        }
        for (const auto& t : terms_) {
            double v = t.coeff;
            for (std::size_t i = 0; i < kVarCount; ++i)
                if (t.exps[i] != 0) v *= pw[offset_[i] + t.exps[i]];
            visit(v);
        }
    }

    VarSet vars_;
    std::vector<Term> terms_;
    std::array<Monomial::Exponent, kVarCount> max_exp_{};
    std::array<std::size_t, kVarCount> offset_{};
    std::size_t table_size_ = 0;
};

inline double evaluate_float(const Polynomial& p, const FloatPoint& point) {
    FloatPolynomial::Values values{};
    VarSet bound;
    for (const auto& [v, x] : point) {
        values[index(v)] = x;
        bound.set(index(v));
    }
    const VarSet missing = p.variables() & ~bound;
    if (missing.any()) {
        for (Var v : kAllVars)
            if (missing.test(index(v))) throw InvalidArgument("unbound variable " + std::string(name(v)));
    }
    return FloatPolynomial(p)(values);
}

}  // namespace pcdual
