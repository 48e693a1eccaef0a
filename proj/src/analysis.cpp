#include "arrcalc/analysis.hpp"

#include <Eigen/Dense>
#include <Eigen/Eigenvalues>

#include <algorithm>
#include <cmath>

#include "arrcalc/error.hpp"
#include "arrcalc/formulas.hpp"

namespace arrcalc {

namespace {

using Cplx = std::complex<double>;

RatPoly derivative(const RatPoly& p) {
    if (p.degree() <= 0) return RatPoly();
    std::vector<Rat> c(p.degree());
    for (int i = 1; i <= p.degree(); ++i) c[i - 1] = p[i] * Rat(i);
    return RatPoly(std::move(c));
}

RatPoly make_monic(const RatPoly& p) {
    if (p.is_zero()) return p;
    return p.scaled(Rat(1) / p[p.degree()]);
}

// remainder of num mod den (den nonzero)
RatPoly poly_rem(RatPoly num, const RatPoly& den) {
    int dn = den.degree();
    while (!num.is_zero() && num.degree() >= dn) {
        Rat c = num[num.degree()] / den[dn];
        num = num - (den * RatPoly::monomial(num.degree() - dn, c));
    }
    return num;
}

RatPoly poly_gcd(RatPoly a, RatPoly b) {
    while (!b.is_zero()) {
        RatPoly r = poly_rem(a, b);
        a = b;
        b = make_monic(r);
    }
    return make_monic(a);
}

// Yun decomposition: p = prod factors[i].first ^ factors[i].second with
// square-free factors.
std::vector<std::pair<RatPoly, int>> square_free(const RatPoly& p) {
    std::vector<std::pair<RatPoly, int>> out;
    RatPoly w = make_monic(p);
    if (w.degree() <= 0) return out;
    RatPoly d = poly_gcd(w, derivative(w));
    RatPoly b = exact_div(w, d);
    RatPoly c = exact_div(derivative(w), d);
    RatPoly z = c - derivative(b);
    int mult = 1;
    while (b.degree() > 0) {
        RatPoly a = poly_gcd(b, z);
        if (a.degree() > 0) out.emplace_back(a, mult);
        b = exact_div(b, a);
        c = exact_div(z, a);
        z = c - derivative(b);
        ++mult;
    }
    return out;
}

std::vector<Cplx> roots_of_squarefree(const RatPoly& f) {
    int d = f.degree();
    std::vector<Cplx> roots;
    if (d <= 0) return roots;
    std::vector<double> c(d + 1);
    for (int i = 0; i <= d; ++i) c[i] = f[i].get_d();
    if (d == 1) {
        roots.push_back(Cplx(-c[0] / c[1], 0.0));
        return roots;
    }
    if (d == 2) {
        Cplx disc = Cplx(c[1] * c[1] - 4.0 * c[2] * c[0], 0.0);
        Cplx s = std::sqrt(disc);
        roots.push_back((-c[1] - s) / (2.0 * c[2]));
        roots.push_back((-c[1] + s) / (2.0 * c[2]));
        return roots;
    }
    // companion matrix of the monic normalization
    Eigen::MatrixXd m = Eigen::MatrixXd::Zero(d, d);
    for (int i = 0; i < d; ++i) m(i, d - 1) = -c[i] / c[d];
    for (int i = 1; i < d; ++i) m(i, i - 1) = 1.0;
    Eigen::EigenSolver<Eigen::MatrixXd> solver(m);
    require(solver.info() == Eigen::Success, errc::no_convergence,
            "eigenvalue iteration failed");
    for (int i = 0; i < d; ++i) roots.push_back(solver.eigenvalues()[i]);

    // Newton polish against the exact coefficients
    auto eval = [&](Cplx z, Cplx& deriv) {
        Cplx v = 0.0, dv = 0.0;
        for (int i = d; i >= 0; --i) {
            dv = dv * z + v;
            v = v * z + c[i];
        }
        deriv = dv;
        return v;
    };
    for (auto& z : roots) {
        for (int it = 0; it < 16; ++it) {
            Cplx dv;
            Cplx v = eval(z, dv);
            if (std::abs(dv) == 0.0) break;
            Cplx step = v / dv;
            z -= step;
            if (std::abs(step) < 1e-15 * std::max(1.0, std::abs(z))) break;
        }
    }

    // residual guard on the square-free factor
    double scale = 0.0;
    for (int i = 0; i <= d; ++i) scale = std::max(scale, std::fabs(c[i]));
    for (const auto& z : roots) {
        Cplx dv;
        double resid = std::abs(eval(z, dv));
        double bound = 1e-10 * scale * std::pow(std::max(1.0, std::abs(z)), d);
        require(resid <= bound, errc::no_convergence, "root residual too large");
    }
    return roots;
}

}  // namespace

IntPoly cleared_denominators(const RatPoly& p) {
    Int l = 1;
    for (const auto& v : p.coeffs()) {
        Int den = v.get_den();
        l = l / gcd(l, den) * den;
    }
    return p.scaled(Rat(l)).to_int("denominator-cleared polynomial");
}

std::vector<std::complex<double>> poly_roots(const IntPoly& p) {
    require(!p.is_zero(), errc::invalid_argument, "the zero polynomial has no root list");
    std::vector<Cplx> roots;
    // exact zero roots first
    int low = 0;
    while (p[low] == 0) ++low;
    for (int i = 0; i < low; ++i) roots.emplace_back(0.0, 0.0);
    std::vector<Int> rest(p.coeffs().begin() + low, p.coeffs().end());
    RatPoly reduced{IntPoly(std::move(rest))};

    for (const auto& [factor, mult] : square_free(reduced)) {
        std::vector<Cplx> fr = roots_of_squarefree(factor);
        for (int rep = 0; rep < mult; ++rep) roots.insert(roots.end(), fr.begin(), fr.end());
    }
    std::sort(roots.begin(), roots.end(), [](const Cplx& a, const Cplx& b) {
        if (a.real() != b.real()) return a.real() < b.real();
        return a.imag() < b.imag();
    });
    return roots;
}

RiemannReport verify_riemann(Family family, int n, long a, long b, double tol, int threads) {
    require(family == Family::A || family == Family::B || family == Family::C ||
                family == Family::D || family == Family::BC,
            errc::invalid_argument, "the conjecture covers the five root-system families");
    require(a >= 0 && b >= a && (a != 0 || b != 0), errc::invalid_argument,
            "need 0 <= a <= b, not both zero");

    RiemannReport report;
    report.spec = FamilySpec{family, n, -a + 1, b};
    report.tol = tol;
    report.l = rank_of(report.spec);

    FormulaResult formula = chi_interval(report.spec, threads);
    report.chi = formula.chi;
    if (family == Family::A) {
        require(report.chi[0] == 0, errc::assertion_failed, "A-type chi must vanish at 0");
        std::vector<Int> c(report.chi.coeffs().begin() + 1, report.chi.coeffs().end());
        report.chi_essential = IntPoly(std::move(c));
    } else {
        report.chi_essential = report.chi;
    }
    require(report.chi_essential.degree() == report.l, errc::assertion_failed,
            "chi degree does not match the rank");
    require(report.chi_essential.leading() == 1, errc::assertion_failed,
            "chi must be monic");

    Arrangement arr = build(report.spec);
    report.h = static_cast<long>(dedup_count(arr));
    report.target = Rat(Int(report.h), Int(report.l));
    report.target.canonicalize();

    // sum of roots = h, exactly, from the subleading coefficient
    require(report.chi_essential[report.l - 1] == -Int(report.h), errc::assertion_failed,
            "sum of roots differs from the hyperplane count for " + format_spec(report.spec));

    report.roots = poly_roots(report.chi_essential);
    double target = report.target.get_d();
    double dev = 0.0;
    for (const auto& z : report.roots)
        dev = std::max(dev, std::fabs(z.real() - target));
    report.max_re_deviation = dev;
    report.pass = dev < tol;
    return report;
}

Lemma51Result lemma51_numeric_check(const ShiftExpr& g, const IntPoly& f, double r,
                                    double tol) {
    Lemma51Result result;
    require(!g.is_zero() && g.degree() >= 1, errc::invalid_argument,
            "g must have positive degree");
    require(!f.is_zero(), errc::invalid_argument, "f must be nonzero");

    for (const auto& z : poly_roots(cleared_denominators(g.as_poly()))) {
        if (std::fabs(std::abs(z) - 1.0) > tol) {
            result.status = Lemma51Status::precondition_g;
            return result;
        }
    }
    for (const auto& z : poly_roots(f)) {
        if (std::fabs(z.real() - r) > tol) {
            result.status = Lemma51Status::precondition_f;
            return result;
        }
    }

    IntPoly image = cleared_denominators(apply_shift(g, f));
    double expect = r + g.degree() / 2.0;
    double dev = 0.0;
    for (const auto& z : poly_roots(image)) dev = std::max(dev, std::fabs(z.real() - expect));
    result.max_deviation = dev;
    result.status = dev <= tol ? Lemma51Status::ok : Lemma51Status::fails_conclusion;
    return result;
}

Int region_count(const IntPoly& chi, int n) {
    Int v = chi.eval(Int(-1));
    return n % 2 == 0 ? v : -v;
}

Int linial_regions_closed(Family family, int n) {
    auto binom = [](unsigned long a, unsigned long k) {
        Int r;
        mpz_bin_uiui(r.get_mpz_t(), a, k);
        return r;
    };
    auto power = [](long base, int e) {
        Int r;
        mpz_ui_pow_ui(r.get_mpz_t(), static_cast<unsigned long>(base),
                      static_cast<unsigned long>(e));
        return r;
    };
    switch (family) {
        case Family::A: {
            require(n >= 2, errc::invalid_argument, "family A requires n >= 2");
            Int acc = 0;
            for (int k = 0; k <= n; ++k) acc += binom(n, k) * power(k + 1, n - 1);
            Int den = power(2, n);
            require(acc % den == 0, errc::assertion_failed, "region sum must divide exactly");
            return acc / den;
        }
        case Family::B:
        case Family::C: {
            require(n >= 1, errc::invalid_argument, "need n >= 1");
            Int acc = 0;
            for (int k = 0; k <= n - 1; ++k) acc += binom(n - 1, k) * power(k + 1, n);
            return 2 * acc;
        }
        case Family::D: {
            require(n >= 2, errc::invalid_argument, "family D requires n >= 2");
            Int acc = 0;
            for (int k = 0; k <= n - 2; ++k) acc += binom(n - 2, k) * power(k + 1, n);
            return 4 * acc;
        }
        case Family::BC: {
            require(n >= 1, errc::invalid_argument, "need n >= 1");
            Int acc = 0;
            for (int k = 0; k <= n; ++k) acc += binom(n, k) * power(k + 1, n);
            return acc;
        }
        default:
            fail(errc::invalid_argument, "no closed region count for this family");
    }
}

}  // namespace arrcalc
