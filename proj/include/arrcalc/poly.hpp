#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

namespace arrcalc {

using Int = mpz_class;
using Rat = mpq_class;

/// Dense univariate polynomial with arbitrary-precision integer coefficients.
/// Index i holds the coefficient of the i-th power; the zero polynomial is the
/// empty coefficient vector and reports degree() == -1.
class IntPoly {
public:
    IntPoly() = default;
    explicit IntPoly(std::vector<Int> coeffs) : c_(std::move(coeffs)) { trim(); }

    static IntPoly zero() { return IntPoly(); }
    static IntPoly constant(Int v);
    static IntPoly monomial(int power, Int coeff = 1);
    /// 1 + y + ... + y^(a-1); a = 0 gives the zero polynomial.
    static IntPoly phi(long a);
    /// y^lo + y^(lo+1) + ... + y^hi; empty range gives zero.
    static IntPoly segment(long lo, long hi);
    /// (alpha*j + beta)^n expanded as a polynomial in j.
    static IntPoly linear_power(long alpha, long beta, int n);

    bool is_zero() const { return c_.empty(); }
    int degree() const { return static_cast<int>(c_.size()) - 1; }
    const std::vector<Int>& coeffs() const { return c_; }
    /// Coefficient of the k-th power (zero outside the stored range).
    const Int& operator[](int k) const;
    const Int& leading() const;

    IntPoly operator+(const IntPoly& o) const;
    IntPoly operator-(const IntPoly& o) const;
    IntPoly operator*(const IntPoly& o) const;
    IntPoly operator-() const;
    bool operator==(const IntPoly& o) const { return c_ == o.c_; }
    bool operator!=(const IntPoly& o) const { return c_ != o.c_; }

    IntPoly scaled(const Int& s) const;
    /// Multiply by y^k.
    IntPoly shifted_up(int k) const;
    IntPoly pow(int e) const;

    Int eval(const Int& x) const;
    double eval_double(double x) const;

    std::string to_string(const std::string& var = "q") const;

private:
    void trim();
    std::vector<Int> c_;
};

/// Dense univariate polynomial with exact rational coefficients. Used for
/// interpolation and for operator prefactors; final results convert back to
/// IntPoly with an integrality assertion.
class RatPoly {
public:
    RatPoly() = default;
    explicit RatPoly(std::vector<Rat> coeffs) : c_(std::move(coeffs)) { trim(); }
    RatPoly(const IntPoly& p);

    static RatPoly monomial(int power, Rat coeff = Rat(1));

    bool is_zero() const { return c_.empty(); }
    int degree() const { return static_cast<int>(c_.size()) - 1; }
    const std::vector<Rat>& coeffs() const { return c_; }
    const Rat& operator[](int k) const;

    RatPoly operator+(const RatPoly& o) const;
    RatPoly operator-(const RatPoly& o) const;
    RatPoly operator*(const RatPoly& o) const;
    bool operator==(const RatPoly& o) const { return c_ == o.c_; }

    RatPoly scaled(const Rat& s) const;
    Rat eval(const Rat& x) const;

    bool is_integral() const;
    /// Conversion with exactness check; throws errc::assertion_failed if any
    /// coefficient has a nontrivial denominator.
    IntPoly to_int(const std::string& what = "polynomial") const;

    /// The polynomial f(y - k).
    RatPoly composed_shift(long k) const;

private:
    void trim();
    std::vector<Rat> c_;
};

/// A polynomial in the shift operator S, (Sf)(y) = f(y-1), with exact rational
/// coefficients. Scalar prefactors of the closed-form expressions are absorbed
/// here so that the final application asserts integrality in one place.
class ShiftExpr {
public:
    ShiftExpr() : c_{Rat(1)} {}
    explicit ShiftExpr(std::vector<Rat> coeffs) : c_(std::move(coeffs)) { trim(); }

    static ShiftExpr identity() { return ShiftExpr(); }
    static ShiftExpr shift(int k);  // S^k
    /// 1 + S^step + S^(2*step) + ... (`terms` summands); terms = 0 gives zero.
    static ShiftExpr geometric(long terms, int step);
    static ShiftExpr from_poly(const IntPoly& p);

    bool is_zero() const { return c_.empty(); }
    int degree() const { return static_cast<int>(c_.size()) - 1; }
    const std::vector<Rat>& coeffs() const { return c_; }
    const Rat& operator[](int k) const;

    ShiftExpr operator*(const ShiftExpr& o) const;
    ShiftExpr operator+(const ShiftExpr& o) const;
    ShiftExpr operator-(const ShiftExpr& o) const;
    bool operator==(const ShiftExpr& o) const { return c_ == o.c_; }

    ShiftExpr pow(int e) const;
    ShiftExpr scaled(const Rat& s) const;

    /// Treat the operator itself as a polynomial (needed for root conditions
    /// and exact division).
    RatPoly as_poly() const;

private:
    void trim();
    std::vector<Rat> c_;
};

/// Sum_k g_k f(y-k), computed exactly. Degree never increases.
RatPoly apply_shift(const ShiftExpr& g, const RatPoly& f);
RatPoly apply_shift(const ShiftExpr& g, const IntPoly& f);

/// Residue-class piece of phi_a(y)^n acting on f: sum over k = i (mod a) of
/// c_k f(y-k), where the c_k are the coefficients of phi_a(y)^n. Requires
/// deg f < n; the result is independent of i and equals
/// (1/a) * phi_a(S)^n f.
RatPoly sigma_class(long a, int n, long i, const RatPoly& f);

/// Coefficient of y^k in prefactor(y) * sum_{j>=0} jpoly(j) y^(a*j).
Int series_coeff(const IntPoly& prefactor, const IntPoly& jpoly, long a, long k);

/// f_k(y) = sum over s,t >= 0 with 2s+t <= k of y^(s+t)
///        = 1 + 2y + 3y^2 + ... + 2y^(k-1) + y^k.
/// k = -1 gives the zero polynomial.
IntPoly f_poly(long k);

/// Exact quotient; throws errc::assertion_failed on a nonzero remainder.
RatPoly exact_div(const RatPoly& num, const RatPoly& den);
ShiftExpr exact_div(const ShiftExpr& num, const ShiftExpr& den);

/// Unique integer polynomial of degree <= expected_degree through the points.
/// Any surplus points act as held-out validation; a mismatch or a non-integer
/// coefficient throws errc::assertion_failed.
IntPoly lagrange_interpolate(const std::vector<std::pair<long, Int>>& points,
                             int expected_degree);

}  // namespace arrcalc
