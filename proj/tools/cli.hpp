#pragma once

// Command-line front end. `run` is kept separate from main() so the test
// suite can drive it in-process with string streams.

#include <CLI11.hpp>

#include <algorithm>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <iterator>
#include <sstream>
#include <string>
#include <vector>

#include "pcdual/pcdual.hpp"

namespace pcdual::cli {

enum ExitCode : int {
    kOk = 0,
    kCheckFailed = 1,
    kUsage = 2,  // also: malformed polynomial or rational
    kDegenerate = 3,
    kDegreeTooLow = 4,
    kNoSamples = 5,
    kUnwritable = 6,
};

struct Options {
    std::string window = "-3,3,-3,3";
    int grid = 256;
    std::size_t samples = 100;
    std::string out;
    double spacing = 1.0;
};

namespace detail {

inline Window parse_window(const std::string& text) {
    std::vector<double> v;
    std::stringstream ss(text);
    std::string part;
    while (std::getline(ss, part, ',')) {
        try {
            std::size_t used = 0;
            v.push_back(std::stod(part, &used));
            if (used != part.size()) throw std::invalid_argument(part);
        } catch (const std::exception&) {
            throw InvalidArgument("--window expects XMIN,XMAX,YMIN,YMAX");
        }
    }
    if (v.size() != 4) throw InvalidArgument("--window expects XMIN,XMAX,YMIN,YMAX");
    Window w{v[0], v[1], v[2], v[3]};
    if (!(w.xmin < w.xmax) || !(w.ymin < w.ymax)) throw InvalidArgument("--window must satisfy XMIN<XMAX, YMIN<YMAX");
    return w;
}

inline Rational parse_rational(std::string_view text) {
    const Polynomial p = parse_polynomial(text);
    if (!p.is_constant()) throw InvalidArgument("expected a rational number, got '" + std::string(text) + "'");
    return p.is_zero() ? Rational(0) : p.leading_coefficient();
}

/// Polynomial text from the argument, or every non-comment line of `in` when the argument is "-".
inline std::vector<Polynomial> read_polynomials(const std::string& arg, std::istream& in) {
    if (arg != "-") return {parse_polynomial(arg)};
    const std::string text{std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
    auto polys = parse_polynomial_lines(text);
    if (polys.empty()) throw InvalidArgument("no polynomial on standard input");
    return polys;
}

inline ImplicitCurve curve_of_degree_two_or_more(const Polynomial& p, int& code) {
    ImplicitCurve c(p);
    if (c.degree() < 2) {
        code = kDegreeTooLow;
        throw InvalidArgument("degree " + std::to_string(c.degree()) + " < 2: lines dualize to points");
    }
    return c;
}

inline std::string format_double(double v, const char* fmt) {
    char buf[64];
    std::snprintf(buf, sizeof buf, fmt, v);
    return buf;
}

inline int write_output(const std::string& path, const std::string& data, std::ostream& out, std::ostream& err) {
    if (path.empty() || path == "-") {
        out << data;
        return kOk;
    }
    std::ofstream f(path, std::ios::binary);
    if (!f || !(f << data) || !f.flush()) {
        err << "error: cannot write " << path << "\n";
        return kUnwritable;
    }
    out << "out: " << path << "\n";
    return kOk;
}

}  // namespace detail

inline int cmd_dual(const std::string& poly, std::istream& in, std::ostream& out, std::ostream& err) {
    int code = kUsage;
    try {
        const auto polys = detail::read_polynomials(poly, in);
        std::string report;
        for (std::size_t i = 0; i < polys.size(); ++i) {
            code = kUsage;
            const ImplicitCurve c = detail::curve_of_degree_two_or_more(polys[i], code);
            code = kDegenerate;
            const DualCurve d = dual_curve(c);
            if (i != 0) report += "\n";
            report += "dual: " + to_string(d.g) + "\n";
            report += "source_degree: " + std::to_string(d.source_degree) + "\n";
            report += "dual_degree: " + std::to_string(d.degree()) + "\n";
            report += "psi_power: " + std::to_string(d.psi_power_removed) + "\n";
        }
        out << report;
        return kOk;
    } catch (const Error& e) {
        err << "error: " << e.what() << "\n";
        return code;
    }
}

inline int cmd_conic_dual(const std::vector<std::string>& coeffs, std::ostream& out, std::ostream& err) {
    try {
        if (coeffs.size() != 6) throw InvalidArgument("conic-dual expects six coefficients A1..A6");
        std::array<Rational, 6> a;
        for (std::size_t i = 0; i < 6; ++i) a[i] = detail::parse_rational(coeffs[i]);
        const ConicMatrix dual = conic_dual_matrix(ConicMatrix(a));
        for (int i = 1; i <= 6; ++i) out << "a" << i << ": " << to_string(dual.A(i)) << "\n";
        out << "dual: " << to_string(dual.to_polynomial(Var::x, Var::y)) << "\n";
        return kOk;
    } catch (const Error& e) {
        err << "error: " << e.what() << "\n";
        return kUsage;
    }
}

inline int cmd_verify(const std::string& poly, const Options& opt, std::istream& in, std::ostream& out,
                      std::ostream& err) {
    int code = kUsage;
    try {
        const Window w = detail::parse_window(opt.window);
        if (opt.samples < 1) throw InvalidArgument("--samples must be >= 1");
        const ImplicitCurve c = detail::curve_of_degree_two_or_more(detail::read_polynomials(poly, in).front(), code);
        code = kDegenerate;
        const DualCurve d = dual_curve(c);
        code = kNoSamples;
        const DualityReport r = verify_duality(c, d, sample_curve(c, w, opt.samples));
        out << "max_residual: " << detail::format_double(r.max_residual, "%.6e") << "\n";
        out << "tested: " << r.tested << "\n";
        out << "skipped: " << r.skipped << "\n";
        return r.max_residual < kDefaultTolerances.oracle ? kOk : kCheckFailed;
    } catch (const Error& e) {
        err << "error: " << e.what() << "\n";
        return code;
    }
}

inline int cmd_plot(const std::string& poly, const Options& opt, std::istream& in, std::ostream& out,
                    std::ostream& err) {
    int code = kUsage;
    std::string svg;
    try {
        const Window w = detail::parse_window(opt.window);
        if (!(opt.spacing > 0)) throw InvalidArgument("--spacing must be positive");
        const ImplicitCurve c = detail::curve_of_degree_two_or_more(detail::read_polynomials(poly, in).front(), code);
        code = kDegenerate;
        const DualCurve d = dual_curve(c);
        code = kUsage;
        const Viewport vp{w.xmin, w.xmax, w.ymin, w.ymax, 400, 400};
        const std::vector<PlaneScene> panels{source_scene(c, vp, opt.grid), dual_scene(d, vp, opt.grid, opt.spacing)};
        svg = render_svg(panels);
    } catch (const Error& e) {
        err << "error: " << e.what() << "\n";
        return code;
    }
    return detail::write_output(opt.out, svg, out, err);
}

inline int cmd_plot_envelope(const std::string& poly, const Options& opt, std::istream& in, std::ostream& out,
                             std::ostream& err) {
    std::string svg;
    try {
        const Window w = detail::parse_window(opt.window);
        const ImplicitCurve c(detail::read_polynomials(poly, in).front());
        const Viewport vp{w.xmin, w.xmax, w.ymin, w.ymax, 400, 400};
        svg = render_svg(envelope_scene(c, opt.samples, vp, opt.spacing));
    } catch (const Error& e) {
        err << "error: " << e.what() << "\n";
        return kUsage;
    }
    return detail::write_output(opt.out, svg, out, err);
}

inline int cmd_eval(const std::string& poly, const std::vector<std::string>& bindings, std::istream& in,
                    std::ostream& out, std::ostream& err) {
    try {
        const Polynomial p = detail::read_polynomials(poly, in).front();
        ExactPoint at;
        for (const auto& b : bindings) {
            const auto eq = b.find('=');
            const auto v = eq == std::string::npos ? std::nullopt : var_from_name(b.substr(0, eq));
            if (!v) throw InvalidArgument("binding must look like VAR=VALUE, got '" + b + "'");
            at[*v] = detail::parse_rational(std::string_view(b).substr(eq + 1));
        }
        out << "value: " << to_string(evaluate_exact(p, at)) << "\n";
        return kOk;
    } catch (const Error& e) {
        err << "error: " << e.what() << "\n";
        return kUsage;
    }
}

/// args excludes the program name.
inline int run(std::vector<std::string> args, std::istream& in, std::ostream& out, std::ostream& err) {
    CLI::App app{"Parallel-coordinates duals of planar algebraic curves", "pcdual"};
    app.require_subcommand(1);

    Options opt;
    std::string poly;
    std::vector<std::string> rest;

    auto add_poly = [&](CLI::App* sub) {
        sub->add_option("poly", poly, "polynomial in x1, x2 (\"-\" reads standard input)")->required();
    };
    auto add_window = [&](CLI::App* sub) {
        sub->add_option("--window", opt.window, "XMIN,XMAX,YMIN,YMAX")->capture_default_str();
    };
    auto add_samples = [&](CLI::App* sub) {
        sub->add_option("--samples", opt.samples, "number of curve samples")->capture_default_str();
    };
    auto add_out = [&](CLI::App* sub) { sub->add_option("--out", opt.out, "output file (default stdout)"); };
    auto add_spacing = [&](CLI::App* sub) {
        sub->add_option("--spacing", opt.spacing, "distance between the parallel axes")->capture_default_str();
    };

    auto* dual = app.add_subcommand("dual", "print the canonical dual polynomial");
    add_poly(dual);

    auto* conic = app.add_subcommand("conic-dual", "closed-form dual of the conic with coefficients A1..A6");
    conic->add_option("coeffs", rest, "A1 A2 A3 A4 A5 A6")->required()->expected(6);

    auto* verify = app.add_subcommand("verify", "check the dual pointwise against sampled tangents");
    add_poly(verify);
    add_window(verify);
    add_samples(verify);

    auto* plot = app.add_subcommand("plot", "source and dual curves as a two-panel SVG");
    add_poly(plot);
    add_window(plot);
    plot->add_option("--grid", opt.grid, "marching-squares grid size")->capture_default_str();
    add_samples(plot);
    add_out(plot);
    add_spacing(plot);

    auto* envelope = app.add_subcommand("plot-envelope", "dual lines of sampled points as SVG");
    add_poly(envelope);
    add_window(envelope);
    envelope->add_option("--grid", opt.grid, "unused; accepted for symmetry with plot");
    add_samples(envelope);
    add_out(envelope);
    add_spacing(envelope);

    auto* eval = app.add_subcommand("eval", "evaluate a polynomial exactly");
    add_poly(eval);
    eval->add_option("bindings", rest, "VAR=VALUE pairs");

    std::reverse(args.begin(), args.end());
    try {
        app.parse(args);
    } catch (const CLI::Error& e) {
        return app.exit(e, out, err) == 0 ? kOk : kUsage;
    }

    if (dual->parsed()) return cmd_dual(poly, in, out, err);
    if (conic->parsed()) return cmd_conic_dual(rest, out, err);
    if (verify->parsed()) return cmd_verify(poly, opt, in, out, err);
    if (plot->parsed()) return cmd_plot(poly, opt, in, out, err);
    if (envelope->parsed()) return cmd_plot_envelope(poly, opt, in, out, err);
    return cmd_eval(poly, rest, in, out, err);
}

}  // namespace pcdual::cli
