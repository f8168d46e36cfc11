#pragma once

#include <algorithm>
#include <array>
#include <cmath>
#include <cstddef>
#include <span>
#include <string>
#include <vector>

#include "elimination.hpp"
#include "error.hpp"
#include "polynomial.hpp"

namespace pcdual {

/// Numeric thresholds shared by sampling, the pointwise image and verification.
struct Tolerances {
    double on_curve_rel = 1e-12;  ///< |f| <= on_curve_rel * (1 + sum of |terms|)
    double singular = 1e-9;       ///< minimum gradient norm of a kept sample
    double denominator = 1e-9;    ///< minimum |f_x1 + f_x2| for a finite image
    double oracle = 1e-6;         ///< verify_duality pass threshold
};

inline constexpr Tolerances kDefaultTolerances{};

/// Planar algebraic curve f(x1, x2) = 0. Irreducibility is the caller's promise.
class ImplicitCurve {
public:
    explicit ImplicitCurve(Polynomial f) : f_(std::move(f)) {
        if (f_.is_zero()) throw InvalidArgument("curve polynomial must be nonzero");
        if ((f_.variables() & ~var_set({Var::x1, Var::x2})).any())
            throw InvalidArgument("curve polynomial may only use x1 and x2");
        degree_ = total_degree(f_);
        if (degree_ < 1) throw InvalidArgument("curve polynomial must have degree >= 1");
    }

    const Polynomial& polynomial() const { return f_; }
    unsigned degree() const { return degree_; }

private:
    Polynomial f_;
    unsigned degree_ = 0;
};

/// Parallel-coordinates image g(x, y) = 0, normalized to a primitive polynomial
/// with positive leading coefficient (grlex, x before y).
struct DualCurve {
    Polynomial g;
    unsigned source_degree = 0;
    unsigned psi_power_removed = 0;
    unsigned eta_power_removed = 0;
    unsigned xi_power_removed = 0;

    unsigned degree() const { return total_degree(g); }
};

/// Every intermediate of the elimination, kept for inspection and tests.
struct DualTrace {
    Polynomial homogenized;        // F(x1, x2, x3)
    Polynomial on_tangent_planes;  // F(psi x1, psi x2, -(eta x1 + xi x2))
    BinaryForm d_x1;
    BinaryForm d_x2;
    Polynomial resultant;          // R(eta, xi, psi)
    Polynomial reduced;            // R' after cancelling monomial factors and content
    DualCurve dual;
};

inline DualTrace dual_curve_trace(const ImplicitCurve& c) {
    if (c.degree() < 2) throw InvalidArgument("dual_curve requires degree >= 2 (lines dualize to points)");
    const auto var = Polynomial::variable;

    DualTrace t;
    t.homogenized = homogenize(c.polynomial(), Var::x3);

    // Lines of the cone through (x1, x2, 1), rescaled by psi so no division occurs.
    t.on_tangent_planes = substitute(t.homogenized, {
        {Var::x1, var(Var::psi) * var(Var::x1)},
        {Var::x2, var(Var::psi) * var(Var::x2)},
        {Var::x3, -(var(Var::eta) * var(Var::x1) + var(Var::xi) * var(Var::x2))},
    });

    const Polynomial a = partial_derivative(t.on_tangent_planes, Var::x1);
    const Polynomial b = partial_derivative(t.on_tangent_planes, Var::x2);
    if (a.is_zero() || b.is_zero())
        throw DegenerateInput("degenerate input: a partial derivative vanished identically (reducible curve)");
    t.d_x1 = as_binary_form(a);
    t.d_x2 = as_binary_form(b);

    t.resultant = resultant(t.d_x1, t.d_x2);
    if (t.resultant.is_zero())
        throw DegenerateInput(
            "degenerate input: resultant vanished identically (reducible curve or common factor of partials)");

    auto [k, no_psi] = divide_out_variable_power(t.resultant, Var::psi);
    auto [a_pow, no_eta] = divide_out_variable_power(no_psi, Var::eta);
    auto [b_pow, no_xi] = divide_out_variable_power(no_eta, Var::xi);
    t.reduced = primitive_part(no_xi);
    if (t.reduced.is_constant())
        throw DegenerateInput("degenerate input: resultant reduced to a constant (curve has no proper dual)");

    Polynomial g = substitute(t.reduced, {
        {Var::eta, Polynomial(1) - var(Var::x)},
        {Var::xi, var(Var::x)},
        {Var::psi, -var(Var::y)},
    });
    if (g.is_zero() || g.is_constant())
        throw DegenerateInput("degenerate input: dual has no finite points");

    t.dual = DualCurve{primitive_part(g), c.degree(), k, a_pow, b_pow};
    return t;
}

inline DualCurve dual_curve(const ImplicitCurve& c) { return dual_curve_trace(c).dual; }

/// Symmetric conic matrix ((A1, A4, A5), (A4, A2, A6), (A5, A6, A3)) of
/// A1 u^2 + 2 A4 u v + 2 A5 u + A2 v^2 + 2 A6 v + A3.
class ConicMatrix {
public:
    /// Coefficients in the order A1..A6.
    explicit ConicMatrix(std::array<Rational, 6> a) : a_(std::move(a)) {
        if (a_[0] == 0 && a_[1] == 0 && a_[3] == 0)
            throw InvalidArgument("not a conic: A1, A2 and A4 are all zero");
    }

    /// Reads a degree-2 polynomial in (u, v).
    static ConicMatrix from_polynomial(const Polynomial& p, Var u, Var v) {
        if ((p.variables() & ~var_set({u, v})).any())
            throw InvalidArgument("conic polynomial uses variables other than the two given");
        if (!p.is_zero() && total_degree(p) > 2) throw InvalidArgument("conic polynomial has degree > 2");
        const Rational half(1, 2);
        auto coef = [&](Monomial m) { return p.coefficient(m); };
        return ConicMatrix({
            coef(Monomial::of(u, 2)),
            coef(Monomial::of(v, 2)),
            coef(Monomial{}),
            half * coef(Monomial::of(u) * Monomial::of(v)),
            half * coef(Monomial::of(u)),
            half * coef(Monomial::of(v)),
        });
    }

    /// A(1)..A(6), 1-based to match the usual naming.
    const Rational& A(int i) const { return a_.at(static_cast<std::size_t>(i - 1)); }
    const std::array<Rational, 6>& coefficients() const { return a_; }

    Rational entry(std::size_t i, std::size_t j) const {
        static constexpr std::array<std::array<int, 3>, 3> layout{{{1, 4, 5}, {4, 2, 6}, {5, 6, 3}}};
        return A(layout.at(i).at(j));
    }

    Rational determinant() const {
        const auto& [a1, a2, a3, a4, a5, a6] = a_;
        return a1 * (a2 * a3 - a6 * a6) - a4 * (a4 * a3 - a6 * a5) + a5 * (a4 * a6 - a2 * a5);
    }

    Polynomial to_polynomial(Var u, Var v) const {
        const auto pu = Polynomial::variable(u);
        const auto pv = Polynomial::variable(v);
        return A(1) * (pu * pu) + Rational(2 * A(4)) * (pu * pv) + Rational(2 * A(5)) * pu + A(2) * (pv * pv) +
               Rational(2 * A(6)) * pv + Polynomial(A(3));
    }

    friend bool operator==(const ConicMatrix&, const ConicMatrix&) = default;

private:
    std::array<Rational, 6> a_;
};

/// Closed-form dual conic in (x, y).
inline ConicMatrix conic_dual_matrix(const ConicMatrix& m) {
    const auto& [A1, A2, A3, A4, A5, A6] = m.coefficients();
    return ConicMatrix({
        Rational(A3 * (A1 + A2 + 2 * A4) - (A5 + A6) * (A5 + A6)),
        Rational(A1 * A2 - A4 * A4),
        Rational(A2 * A3 - A6 * A6),
        Rational(A6 * (A1 + A4) - A5 * (A2 + A4)),
        Rational(A6 * A6 + A5 * A6 - A3 * (A2 + A4)),
        Rational(A2 * A5 - A4 * A6),
    });
}

template <typename T>
struct BasicPoint {
    T x{};
    T y{};

    friend bool operator==(const BasicPoint&, const BasicPoint&) = default;
};

using PlanePoint = BasicPoint<double>;

/// Rectangle in the source plane.
struct Window {
    double xmin = -3.0;
    double xmax = 3.0;
    double ymin = -3.0;
    double ymax = 3.0;
};

namespace detail {

inline FloatPolynomial::Values source_values(PlanePoint p) {
    FloatPolynomial::Values v{};
    v[index(Var::x1)] = p.x;
    v[index(Var::x2)] = p.y;
    return v;
}

/// f and its gradient in double precision.
struct CurveField {
    explicit CurveField(const ImplicitCurve& c)
        : f(c.polynomial()),
          fx(partial_derivative(c.polynomial(), Var::x1)),
          fy(partial_derivative(c.polynomial(), Var::x2)) {}

    double on_curve_tolerance(PlanePoint p, const Tolerances& tol) const {
        return tol.on_curve_rel * (1.0 + f.abs_sum(source_values(p)));
    }

    FloatPolynomial f, fx, fy;
};

}  // namespace detail

/// Image of the tangent at p: x = d f_x2 / (f_x1 + f_x2),
/// y = (x1 f_x1 + x2 f_x2) / (f_x1 + f_x2).
inline PlanePoint point_image_on_dual(const ImplicitCurve& c, PlanePoint p, double spacing = 1.0,
                                      const Tolerances& tol = kDefaultTolerances) {
    const detail::CurveField field(c);
    const auto at = detail::source_values(p);
    if (std::abs(field.f(at)) > field.on_curve_tolerance(p, tol))
        throw InvalidArgument("point is not on the curve");
    const double f1 = field.fx(at);
    const double f2 = field.fy(at);
    const double den = f1 + f2;
    if (std::abs(den) < tol.denominator) throw IdealPoint("slope-1 tangent maps to ideal point");
    return {spacing * f2 / den, (p.x * f1 + p.y * f2) / den};
}

/// Point where the images of all points of x2 = m x1 + b meet, axes d apart.
inline PlanePoint line_dual_point(double m, double b, double spacing = 1.0) {
    if (m == 1.0) throw IdealPoint("slope-1 line maps to ideal point");
    return {spacing / (1.0 - m), b / (1.0 - m)};
}

/// Polygonal line of a point of R^n: vertex i at ((i - 1) d, c_i).
template <typename T>
std::vector<BasicPoint<T>> point_to_polyline(std::span<const T> coords, const T& spacing) {
    if (coords.size() < 2) throw InvalidArgument("a polygonal line needs at least two coordinates");
    if (!(spacing > T(0))) throw InvalidArgument("axis spacing must be positive");
    std::vector<BasicPoint<T>> out;
    out.reserve(coords.size());
    for (std::size_t i = 0; i < coords.size(); ++i) out.push_back({T(static_cast<long>(i)) * spacing, coords[i]});
    return out;
}

struct CurveSamples {
    std::vector<PlanePoint> points;
    std::vector<PlanePoint> gradients;  ///< (df/dx1, df/dx2) at the matching point

    std::size_t size() const { return points.size(); }
    bool empty() const { return points.empty(); }
};

namespace detail {

/// f restricted to one scan line, as a univariate polynomial in the free coordinate.
class LineRestriction {
public:
    LineRestriction(const Polynomial& f, Var free, Var fixed, double fixed_value) {
        for (const auto& [m, c] : f.terms()) {
            const auto e = m.exponent(free);
            if (coeffs_.size() <= e) coeffs_.resize(e + 1, 0.0);
            coeffs_[e] += c.get_d() * std::pow(fixed_value, static_cast<int>(m.exponent(fixed)));
        }
    }

    double operator()(double t) const {
        double acc = 0.0;
        for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * t + *it;
        return acc;
    }

private:
    std::vector<double> coeffs_;
};

inline double bisect(const LineRestriction& g, double lo, double hi, double glo) {
    for (int i = 0; i < 200; ++i) {
        const double mid = 0.5 * (lo + hi);
        if (mid <= lo || mid >= hi) break;
        const double gm = g(mid);
        if (gm == 0.0) return mid;
        if ((gm < 0) == (glo < 0)) {
            lo = mid;
            glo = gm;
        } else {
            hi = mid;
        }
    }
    return 0.5 * (lo + hi);
}

/// Up to five damped Newton steps along the gradient. Returns false if the
/// point cannot be brought within tolerance.
inline bool refine(const CurveField& field, PlanePoint& p, const Tolerances& tol) {
    auto value = [&](PlanePoint q) { return field.f(source_values(q)); };
    double fv = value(p);
    for (int step = 0; step < 5 && std::abs(fv) > field.on_curve_tolerance(p, tol); ++step) {
        const auto at = source_values(p);
        const double gx = field.fx(at);
        const double gy = field.fy(at);
        const double g2 = gx * gx + gy * gy;
        if (g2 == 0.0) return false;
        double damping = 1.0;
        bool improved = false;
        for (int h = 0; h < 8; ++h, damping *= 0.5) {
            const PlanePoint q{p.x - damping * fv * gx / g2, p.y - damping * fv * gy / g2};
            const double fq = value(q);
            if (std::abs(fq) < std::abs(fv)) {
                p = q;
                fv = fq;
                improved = true;
                break;
            }
        }
        if (!improved) break;
    }
    return std::abs(fv) <= field.on_curve_tolerance(p, tol);
}

struct ScanResult {
    std::vector<PlanePoint> points;
    std::vector<PlanePoint> gradients;
};

/// Roots of f on lines.size() horizontal and vertical scan lines, each
/// sampled at `lines + 1` nodes.
inline ScanResult scan(const ImplicitCurve& c, const CurveField& field, const Window& w, std::size_t lines,
                       const Tolerances& tol) {
    ScanResult out;
    auto keep = [&](PlanePoint p) {
        if (!refine(field, p, tol)) return;
        const auto at = source_values(p);
        const PlanePoint grad{field.fx(at), field.fy(at)};
        if (std::hypot(grad.x, grad.y) < tol.singular) return;
        out.points.push_back(p);
        out.gradients.push_back(grad);
    };

    auto scan_line = [&](Var free, Var fixed, double fixed_value, double lo, double hi, bool horizontal) {
        const LineRestriction g(c.polynomial(), free, fixed, fixed_value);
        auto to_point = [&](double t) { return horizontal ? PlanePoint{t, fixed_value} : PlanePoint{fixed_value, t}; };
        const double step = (hi - lo) / static_cast<double>(lines);
        double t_prev = lo;
        double g_prev = g(t_prev);
        if (g_prev == 0.0) keep(to_point(t_prev));
        for (std::size_t i = 1; i <= lines; ++i) {
            const double t = i == lines ? hi : lo + static_cast<double>(i) * step;
            const double gt = g(t);
            if (gt == 0.0)
                keep(to_point(t));
            else if (g_prev != 0.0 && (gt < 0) != (g_prev < 0))
                keep(to_point(bisect(g, t_prev, t, g_prev)));
            t_prev = t;
            g_prev = gt;
        }
    };

    const double dy = (w.ymax - w.ymin) / static_cast<double>(lines);
    for (std::size_t j = 0; j <= lines; ++j)
        scan_line(Var::x1, Var::x2, j == lines ? w.ymax : w.ymin + static_cast<double>(j) * dy, w.xmin, w.xmax, true);
    const double dx = (w.xmax - w.xmin) / static_cast<double>(lines);
    for (std::size_t j = 0; j <= lines; ++j)
        scan_line(Var::x2, Var::x1, j == lines ? w.xmax : w.xmin + static_cast<double>(j) * dx, w.ymin, w.ymax, false);
    return out;
}

}  // namespace detail

/// Points on f = 0 inside the window, found on horizontal and vertical scan
/// lines, bisected, then Newton-refined. Singular points are dropped. The scan
/// resolution doubles until there are at least 4 * target_count candidates
/// (or the resolution cap is hit); target_count of them are then picked at an
/// even stride. Deterministic.
inline CurveSamples sample_curve(const ImplicitCurve& c, const Window& w, std::size_t target_count,
                                 const Tolerances& tol = kDefaultTolerances) {
    if (!(w.xmin < w.xmax) || !(w.ymin < w.ymax)) throw InvalidArgument("sampling window is empty");
    if (target_count < 1) throw InvalidArgument("target_count must be >= 1");

    constexpr std::size_t kMaxLines = 2048;
    const detail::CurveField field(c);
    std::size_t lines = 64;
    while (lines < target_count) lines *= 2;
    detail::ScanResult found = detail::scan(c, field, w, lines, tol);
    while (found.points.size() < 4 * target_count && lines < kMaxLines) {
        lines *= 2;
        found = detail::scan(c, field, w, lines, tol);
    }

    CurveSamples s;
    const std::size_t total = found.points.size();
    const std::size_t take = std::min(total, target_count);
    s.points.reserve(take);
    s.gradients.reserve(take);
    for (std::size_t i = 0; i < take; ++i) {
        const std::size_t k = i * total / take;
        s.points.push_back(found.points[k]);
        s.gradients.push_back(found.gradients[k]);
    }
    return s;
}

struct DualityReport {
    double max_residual = 0.0;
    std::size_t tested = 0;
    std::size_t skipped = 0;
};

/// Scale-relative value of g at q: |g| / (1 + max |term|).
inline double relative_residual(const FloatPolynomial& g, PlanePoint q) {
    FloatPolynomial::Values v{};
    v[index(Var::x)] = q.x;
    v[index(Var::y)] = q.y;
    return std::abs(g(v)) / (1.0 + g.max_term(v));
}

/// Maps each sample through point_image_on_dual and measures how well the
/// candidate dual vanishes there. Throws NoVerifiableSamples if nothing could be tested.
inline DualityReport verify_duality(const ImplicitCurve& c, const Polynomial& g, const CurveSamples& samples,
                                    const Tolerances& tol = kDefaultTolerances) {
    if ((g.variables() & ~var_set({Var::x, Var::y})).any())
        throw InvalidArgument("dual polynomial may only use x and y");
    const FloatPolynomial gf(g);
    DualityReport r;
    for (const auto& p : samples.points) {
        PlanePoint q;
        try {
            q = point_image_on_dual(c, p, 1.0, tol);
        } catch (const IdealPoint&) {
            ++r.skipped;
            continue;
        }
        ++r.tested;
        r.max_residual = std::max(r.max_residual, relative_residual(gf, q));
    }
    if (r.tested == 0) throw NoVerifiableSamples("no verifiable samples");
    return r;
}

inline DualityReport verify_duality(const ImplicitCurve& c, const DualCurve& d, const CurveSamples& samples,
                                    const Tolerances& tol = kDefaultTolerances) {
    return verify_duality(c, d.g, samples, tol);
}

}  // namespace pcdual
