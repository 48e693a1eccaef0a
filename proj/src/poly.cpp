#include "arrcalc/poly.hpp"

#include <algorithm>
#include <sstream>

#include "arrcalc/error.hpp"

namespace arrcalc {

namespace {
const Int kZeroInt = 0;
const Rat kZeroRat = 0;

Int binomial(unsigned long n, unsigned long k) {
    Int r;
    mpz_bin_uiui(r.get_mpz_t(), n, k);
    return r;
}
}  // namespace

// ---------------------------------------------------------------- IntPoly

void IntPoly::trim() {
    while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

IntPoly IntPoly::constant(Int v) {
    std::vector<Int> c;
    if (v != 0) c.push_back(std::move(v));
    return IntPoly(std::move(c));
}

IntPoly IntPoly::monomial(int power, Int coeff) {
    require(power >= 0, errc::invalid_argument, "monomial power must be nonnegative");
    std::vector<Int> c(power + 1, Int(0));
    c[power] = std::move(coeff);
    return IntPoly(std::move(c));
}

IntPoly IntPoly::phi(long a) {
    require(a >= 0, errc::invalid_argument, "phi requires a >= 0");
    return IntPoly(std::vector<Int>(a, Int(1)));
}

IntPoly IntPoly::segment(long lo, long hi) {
    if (lo > hi) return IntPoly();
    require(lo >= 0, errc::invalid_argument, "segment requires lo >= 0");
    std::vector<Int> c(hi + 1, Int(0));
    for (long i = lo; i <= hi; ++i) c[i] = 1;
    return IntPoly(std::move(c));
}

IntPoly IntPoly::linear_power(long alpha, long beta, int n) {
    require(n >= 0, errc::invalid_argument, "linear_power requires n >= 0");
    // (alpha j + beta)^n = sum_t C(n,t) alpha^t beta^(n-t) j^t
    std::vector<Int> c(n + 1, Int(0));
    Int a(alpha), b(beta);
    for (int t = 0; t <= n; ++t) {
        Int term = binomial(n, t);
        for (int u = 0; u < t; ++u) term *= a;
        for (int u = 0; u < n - t; ++u) term *= b;
        c[t] = term;
    }
    return IntPoly(std::move(c));
}

const Int& IntPoly::operator[](int k) const {
    if (k < 0 || k >= static_cast<int>(c_.size())) return kZeroInt;
    return c_[k];
}

const Int& IntPoly::leading() const {
    require(!c_.empty(), errc::invalid_argument, "zero polynomial has no leading coefficient");
    return c_.back();
}

IntPoly IntPoly::operator+(const IntPoly& o) const {
    std::vector<Int> c(std::max(c_.size(), o.c_.size()), Int(0));
    for (size_t i = 0; i < c_.size(); ++i) c[i] += c_[i];
    for (size_t i = 0; i < o.c_.size(); ++i) c[i] += o.c_[i];
    return IntPoly(std::move(c));
}

IntPoly IntPoly::operator-(const IntPoly& o) const {
    std::vector<Int> c(std::max(c_.size(), o.c_.size()), Int(0));
    for (size_t i = 0; i < c_.size(); ++i) c[i] += c_[i];
    for (size_t i = 0; i < o.c_.size(); ++i) c[i] -= o.c_[i];
    return IntPoly(std::move(c));
}

IntPoly IntPoly::operator*(const IntPoly& o) const {
    if (is_zero() || o.is_zero()) return IntPoly();
    std::vector<Int> c(c_.size() + o.c_.size() - 1, Int(0));
    for (size_t i = 0; i < c_.size(); ++i)
        for (size_t j = 0; j < o.c_.size(); ++j) c[i + j] += c_[i] * o.c_[j];
    return IntPoly(std::move(c));
}

IntPoly IntPoly::operator-() const {
    std::vector<Int> c(c_);
    for (auto& v : c) v = -v;
    return IntPoly(std::move(c));
}

IntPoly IntPoly::scaled(const Int& s) const {
    std::vector<Int> c(c_);
    for (auto& v : c) v *= s;
    return IntPoly(std::move(c));
}

IntPoly IntPoly::shifted_up(int k) const {
    if (is_zero()) return IntPoly();
    require(k >= 0, errc::invalid_argument, "shifted_up requires k >= 0");
    std::vector<Int> c(c_.size() + k, Int(0));
    for (size_t i = 0; i < c_.size(); ++i) c[i + k] = c_[i];
    return IntPoly(std::move(c));
}

IntPoly IntPoly::pow(int e) const {
    require(e >= 0, errc::invalid_argument, "pow requires e >= 0");
    IntPoly r = IntPoly::constant(1);
    for (int i = 0; i < e; ++i) r = r * *this;
    return r;
}

Int IntPoly::eval(const Int& x) const {
    Int v = 0;
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) v = v * x + *it;
    return v;
}

double IntPoly::eval_double(double x) const {
    double v = 0;
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) v = v * x + it->get_d();
    return v;
}

std::string IntPoly::to_string(const std::string& var) const {
    if (is_zero()) return "0";
    std::ostringstream out;
    bool first = true;
    for (int k = degree(); k >= 0; --k) {
        const Int& v = c_[k];
        if (v == 0) continue;
        Int mag = abs(v);
        if (first) {
            if (v < 0) out << "-";
            first = false;
        } else {
            out << (v < 0 ? " - " : " + ");
        }
        if (k == 0 || mag != 1) out << mag.get_str();
        if (k > 0) {
            out << var;
            if (k > 1) out << "^" << k;
        }
    }
    return out.str();
}

// ---------------------------------------------------------------- RatPoly

void RatPoly::trim() {
    while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

RatPoly::RatPoly(const IntPoly& p) {
    c_.reserve(p.coeffs().size());
    for (const auto& v : p.coeffs()) c_.emplace_back(v);
}

RatPoly RatPoly::monomial(int power, Rat coeff) {
    require(power >= 0, errc::invalid_argument, "monomial power must be nonnegative");
    std::vector<Rat> c(power + 1, Rat(0));
    c[power] = std::move(coeff);
    return RatPoly(std::move(c));
}

const Rat& RatPoly::operator[](int k) const {
    if (k < 0 || k >= static_cast<int>(c_.size())) return kZeroRat;
    return c_[k];
}

RatPoly RatPoly::operator+(const RatPoly& o) const {
    std::vector<Rat> c(std::max(c_.size(), o.c_.size()), Rat(0));
    for (size_t i = 0; i < c_.size(); ++i) c[i] += c_[i];
    for (size_t i = 0; i < o.c_.size(); ++i) c[i] += o.c_[i];
    return RatPoly(std::move(c));
}

RatPoly RatPoly::operator-(const RatPoly& o) const {
    std::vector<Rat> c(std::max(c_.size(), o.c_.size()), Rat(0));
    for (size_t i = 0; i < c_.size(); ++i) c[i] += c_[i];
    for (size_t i = 0; i < o.c_.size(); ++i) c[i] -= o.c_[i];
    return RatPoly(std::move(c));
}

RatPoly RatPoly::operator*(const RatPoly& o) const {
    if (is_zero() || o.is_zero()) return RatPoly();
    std::vector<Rat> c(c_.size() + o.c_.size() - 1, Rat(0));
    for (size_t i = 0; i < c_.size(); ++i)
        for (size_t j = 0; j < o.c_.size(); ++j) c[i + j] += c_[i] * o.c_[j];
    return RatPoly(std::move(c));
}

RatPoly RatPoly::scaled(const Rat& s) const {
    std::vector<Rat> c(c_);
    for (auto& v : c) v *= s;
    return RatPoly(std::move(c));
}

Rat RatPoly::eval(const Rat& x) const {
    Rat v = 0;
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) v = v * x + *it;
    return v;
}

bool RatPoly::is_integral() const {
    for (const auto& v : c_)
        if (v.get_den() != 1) return false;
    return true;
}

IntPoly RatPoly::to_int(const std::string& what) const {
    std::vector<Int> c;
    c.reserve(c_.size());
    for (const auto& v : c_) {
        if (v.get_den() != 1)
            fail(errc::assertion_failed,
                 what + " has non-integer coefficient " + v.get_str());
        c.push_back(v.get_num());
    }
    return IntPoly(std::move(c));
}

RatPoly RatPoly::composed_shift(long k) const {
    if (is_zero() || k == 0) return *this;
    // f(y-k) = sum_j c_j sum_t C(j,t) (-k)^(j-t) y^t
    int d = degree();
    std::vector<Rat> out(d + 1, Rat(0));
    Int mk(-k);
    for (int j = 0; j <= d; ++j) {
        if (c_[j] == 0) continue;
        Int p = 1;  // (-k)^(j-t), built from t = j downward
        for (int t = j; t >= 0; --t) {
            out[t] += c_[j] * Rat(binomial(j, t) * p);
            p *= mk;
        }
    }
    return RatPoly(std::move(out));
}

// ---------------------------------------------------------------- ShiftExpr

void ShiftExpr::trim() {
    while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

ShiftExpr ShiftExpr::shift(int k) {
    require(k >= 0, errc::invalid_argument, "shift power must be nonnegative");
    std::vector<Rat> c(k + 1, Rat(0));
    c[k] = 1;
    return ShiftExpr(std::move(c));
}

ShiftExpr ShiftExpr::geometric(long terms, int step) {
    require(terms >= 0 && step >= 1, errc::invalid_argument, "bad geometric operator");
    if (terms == 0) return ShiftExpr(std::vector<Rat>{});
    std::vector<Rat> c((terms - 1) * step + 1, Rat(0));
    for (long i = 0; i < terms; ++i) c[i * step] = 1;
    return ShiftExpr(std::move(c));
}

ShiftExpr ShiftExpr::from_poly(const IntPoly& p) {
    std::vector<Rat> c;
    c.reserve(p.coeffs().size());
    for (const auto& v : p.coeffs()) c.emplace_back(v);
    return ShiftExpr(std::move(c));
}

const Rat& ShiftExpr::operator[](int k) const {
    if (k < 0 || k >= static_cast<int>(c_.size())) return kZeroRat;
    return c_[k];
}

ShiftExpr ShiftExpr::operator*(const ShiftExpr& o) const {
    RatPoly p = as_poly() * o.as_poly();
    return ShiftExpr(p.coeffs());
}

ShiftExpr ShiftExpr::operator+(const ShiftExpr& o) const {
    RatPoly p = as_poly() + o.as_poly();
    return ShiftExpr(p.coeffs());
}

ShiftExpr ShiftExpr::operator-(const ShiftExpr& o) const {
    RatPoly p = as_poly() - o.as_poly();
    return ShiftExpr(p.coeffs());
}

ShiftExpr ShiftExpr::pow(int e) const {
    require(e >= 0, errc::invalid_argument, "pow requires e >= 0");
    ShiftExpr r = ShiftExpr::identity();
    for (int i = 0; i < e; ++i) r = r * *this;
    return r;
}

ShiftExpr ShiftExpr::scaled(const Rat& s) const {
    std::vector<Rat> c(c_);
    for (auto& v : c) v *= s;
    return ShiftExpr(std::move(c));
}

RatPoly ShiftExpr::as_poly() const { return RatPoly(c_); }

// ---------------------------------------------------------------- free ops

RatPoly apply_shift(const ShiftExpr& g, const RatPoly& f) {
    RatPoly acc;
    for (int k = 0; k <= g.degree(); ++k) {
        if (g[k] == 0) continue;
        acc = acc + f.composed_shift(k).scaled(g[k]);
    }
    return acc;
}

RatPoly apply_shift(const ShiftExpr& g, const IntPoly& f) {
    return apply_shift(g, RatPoly(f));
}

RatPoly sigma_class(long a, int n, long i, const RatPoly& f) {
    require(a >= 1 && n >= 1, errc::invalid_argument, "sigma_class requires a, n >= 1");
    require(i >= 0 && i < a, errc::invalid_argument, "residue out of range");
    require(f.degree() < n, errc::invalid_argument,
            "sigma_class requires deg f < n; independence of the residue class "
            "is not guaranteed otherwise");
    IntPoly c = IntPoly::phi(a).pow(n);
    RatPoly acc;
    for (int k = 0; k <= c.degree(); ++k) {
        if (k % a != i || c[k] == 0) continue;
        acc = acc + f.composed_shift(k).scaled(Rat(c[k]));
    }
    return acc;
}

Int series_coeff(const IntPoly& prefactor, const IntPoly& jpoly, long a, long k) {
    require(a >= 1, errc::invalid_argument, "series step must be positive");
    require(k >= 0, errc::invalid_argument, "series exponent must be nonnegative");
    Int acc = 0;
    for (long j = 0; a * j <= k; ++j) acc += jpoly.eval(Int(j)) * prefactor[k - a * j];
    return acc;
}

IntPoly f_poly(long k) {
    require(k >= -1, errc::invalid_argument, "f_poly requires k >= -1");
    if (k == -1) return IntPoly();
    // coefficient of y^m counts pairs (s,t) with s+t = m, 2s+t <= k
    std::vector<Int> c(k + 1, Int(0));
    for (long m = 0; m <= k; ++m) c[m] = std::min(m, k - m) + 1;
    return IntPoly(std::move(c));
}

RatPoly exact_div(const RatPoly& num, const RatPoly& den) {
    require(!den.is_zero(), errc::invalid_argument, "division by the zero polynomial");
    std::vector<Rat> rem(num.coeffs());
    int dn = den.degree();
    int dq = num.degree() - dn;
    if (num.is_zero()) return RatPoly();
    require(dq >= 0, errc::assertion_failed, "exact_div: nonzero remainder");
    std::vector<Rat> quot(dq + 1, Rat(0));
    for (int i = dq; i >= 0; --i) {
        Rat c = rem[i + dn] / den[dn];
        quot[i] = c;
        if (c == 0) continue;
        for (int j = 0; j <= dn; ++j) rem[i + j] -= c * den[j];
    }
    for (const auto& v : rem)
        if (v != 0) fail(errc::assertion_failed, "exact_div: nonzero remainder");
    return RatPoly(std::move(quot));
}

ShiftExpr exact_div(const ShiftExpr& num, const ShiftExpr& den) {
    return ShiftExpr(exact_div(num.as_poly(), den.as_poly()).coeffs());
}

IntPoly lagrange_interpolate(const std::vector<std::pair<long, Int>>& points,
                             int expected_degree) {
    require(expected_degree >= 0, errc::invalid_argument, "degree must be nonnegative");
    require(static_cast<int>(points.size()) >= expected_degree + 1, errc::invalid_argument,
            "not enough interpolation points");
    for (size_t i = 0; i < points.size(); ++i)
        for (size_t j = i + 1; j < points.size(); ++j)
            require(points[i].first != points[j].first, errc::invalid_argument,
                    "interpolation abscissas must be distinct");

    // Newton form on the first expected_degree+1 points.
    int m = expected_degree + 1;
    std::vector<Rat> dd(m);
    for (int i = 0; i < m; ++i) dd[i] = Rat(points[i].second);
    for (int level = 1; level < m; ++level)
        for (int i = m - 1; i >= level; --i)
            dd[i] = (dd[i] - dd[i - 1]) / Rat(points[i].first - points[i - level].first);

    RatPoly result;
    RatPoly basis(std::vector<Rat>{Rat(1)});
    for (int i = 0; i < m; ++i) {
        result = result + basis.scaled(dd[i]);
        basis = basis * RatPoly(std::vector<Rat>{Rat(-points[i].first), Rat(1)});
    }

    for (size_t i = m; i < points.size(); ++i) {
        if (result.eval(Rat(points[i].first)) != points[i].second)
            fail(errc::assertion_failed,
                 "interpolation: held-out point mismatch at abscissa " +
                     std::to_string(points[i].first));
    }
    return result.to_int("interpolated polynomial");
}

}  // namespace arrcalc
