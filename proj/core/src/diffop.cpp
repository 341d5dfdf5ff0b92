#include "oddref/diffop.hpp"

#include "oddref/error.hpp"

#include <algorithm>
#include <iterator>

namespace oddref {

namespace {

// p / (u - r) for a root r of p.
DensePoly divide_linear(const DensePoly& p, const Rational& r)
{
    const auto& c = p.coeffs();
    std::vector<Rational> q(c.size() - 1);
    Rational carry;
    for (std::size_t k = c.size() - 1; k > 0; --k) {
        carry = c[k] + carry * r;
        q[k - 1] = carry;
    }
    return DensePoly(std::move(q));
}

DensePoly expand(const std::vector<Rational>& roots)
{
    DensePoly out = DensePoly::constant(1);
    for (const auto& r : roots)
        out = out * DensePoly::linear_root(r);
    return out;
}

}  // namespace

RatFuncDense RatFuncDense::assemble(DensePoly num, std::vector<Rational> roots, DensePoly rest)
{
    if (num.is_zero())
        return {};
    std::sort(roots.begin(), roots.end());
    std::vector<Rational> kept;
    kept.reserve(roots.size());
    for (std::size_t i = 0; i < roots.size();) {
        std::size_t j = i;
        while (j < roots.size() && roots[j] == roots[i])
            ++j;
        std::size_t left = j - i;
        while (left > 0 && num.degree() >= 1 && num.eval(roots[i]).is_zero()) {
            num = divide_linear(num, roots[i]);
            --left;
        }
        kept.insert(kept.end(), left, roots[i]);
        i = j;
    }
    if (rest.degree() >= 1) {
        const DensePoly g = gcd(num, rest);
        if (g.degree() >= 1) {
            num = divmod(num, g).quotient;
            rest = divmod(rest, g).quotient;
        }
    }
    RatFuncDense out;
    out.den_ = expand(kept) * rest;
    out.num_ = std::move(num);
    out.den_roots_ = std::move(kept);
    out.den_rest_ = std::move(rest);
    return out;
}

RatFuncDense::RatFuncDense(DensePoly num, DensePoly den)
{
    if (den.is_zero())
        throw Error(ErrorKind::DivideByZero, "rational function with zero denominator");
    const Rational lead = den.leading();
    if (lead != Rational(1)) {
        num *= Rational(1) / lead;
        den *= Rational(1) / lead;
    }
    auto split = extract_rational_roots(den);
    *this = assemble(std::move(num), split.roots.roots(), split.cofactor.monic());
}

RatFuncDense RatFuncDense::from(const RatB& r)
{
    return assemble(r.num().to_dense(), r.den().roots(), DensePoly::constant(1));
}

RatFuncDense RatFuncDense::shifted(const Rational& a) const
{
    RatFuncDense out;
    out.num_ = shift(num_, a);
    out.den_ = shift(den_, a);
    out.den_roots_.reserve(den_roots_.size());
    for (const auto& r : den_roots_)
        out.den_roots_.push_back(r - a);
    out.den_rest_ = shift(den_rest_, a);
    return out;
}

RatFuncDense operator+(const RatFuncDense& a, const RatFuncDense& b)
{
    if (a.is_zero())
        return b;
    if (b.is_zero())
        return a;
    std::vector<Rational> roots, extra_a, extra_b;
    std::set_union(a.den_roots_.begin(), a.den_roots_.end(), b.den_roots_.begin(), b.den_roots_.end(),
                   std::back_inserter(roots));
    std::set_difference(roots.begin(), roots.end(), a.den_roots_.begin(), a.den_roots_.end(),
                        std::back_inserter(extra_a));
    std::set_difference(roots.begin(), roots.end(), b.den_roots_.begin(), b.den_roots_.end(),
                        std::back_inserter(extra_b));
    DensePoly rest = a.den_rest_;
    DensePoly scale_a = expand(extra_a), scale_b = expand(extra_b);
    if (a.den_rest_ != b.den_rest_) {
        const DensePoly g = gcd(a.den_rest_, b.den_rest_);
        const DensePoly only_b = divmod(b.den_rest_, g).quotient;
        scale_a = scale_a * only_b;
        scale_b = scale_b * divmod(a.den_rest_, g).quotient;
        rest = rest * only_b;
    }
    return RatFuncDense::assemble(a.num_ * scale_a + b.num_ * scale_b, std::move(roots), std::move(rest));
}

RatFuncDense RatFuncDense::operator-() const
{
    RatFuncDense out = *this;
    out.num_ = -out.num_;
    return out;
}

RatFuncDense operator-(const RatFuncDense& a, const RatFuncDense& b) { return a + (-b); }

RatFuncDense operator*(const RatFuncDense& a, const RatFuncDense& b)
{
    if (a.is_zero() || b.is_zero())
        return {};
    std::vector<Rational> roots = a.den_roots_;
    roots.insert(roots.end(), b.den_roots_.begin(), b.den_roots_.end());
    return RatFuncDense::assemble(a.num_ * b.num_, std::move(roots), a.den_rest_ * b.den_rest_);
}

std::string RatFuncDense::to_string() const
{
    if (den_.degree() == 0)
        return num_.to_string();
    return "(" + num_.to_string() + ")/(" + den_.to_string() + ")";
}

// ---------------------------------------------------------------- ShiftOpSeries

ShiftOpSeries::ShiftOpSeries(int order) : order_(order), coeffs_(order + 1)
{
    if (order < 0)
        throw Error(ErrorKind::OrderMismatch, "truncation order must be nonnegative");
    coeffs_[0] = Rational(1);
}

ShiftOpSeries::ShiftOpSeries(int order, std::vector<RatFuncDense> coeffs) : order_(order), coeffs_(std::move(coeffs))
{
    if (order < 0)
        throw Error(ErrorKind::OrderMismatch, "truncation order must be nonnegative");
    coeffs_.resize(order + 1);
}

ShiftOpSeries ShiftOpSeries::with_coeff(int r, RatFuncDense c) const
{
    ShiftOpSeries out = *this;
    out.coeffs_.at(r) = std::move(c);
    return out;
}

ShiftOpSeries operator*(const ShiftOpSeries& a, const ShiftOpSeries& b)
{
    if (a.order_ != b.order_)
        throw Error(ErrorKind::OrderMismatch, "orders " + std::to_string(a.order_) + " and " +
                                                  std::to_string(b.order_) + " differ");
    const int order = a.order_;
    std::vector<RatFuncDense> out(order + 1);
    for (int r = 0; r <= order; ++r) {
        if (a.coeffs_[r].is_zero())
            continue;
        for (int t = 0; r + t <= order; ++t) {
            if (b.coeffs_[t].is_zero())
                continue;
            // a_r(u) D^r b_t(u) D^t = a_r(u) b_t(u - r) D^{r+t}
            out[r + t] = out[r + t] + a.coeffs_[r] * b.coeffs_[t].shifted(Rational(-r));
        }
    }
    return ShiftOpSeries(order, std::move(out));
}

ShiftOpSeries sos_linear_factor(const RatFuncDense& a, int order)
{
    ShiftOpSeries out(order);
    if (order >= 1)
        out = out.with_coeff(1, -a);
    return out;
}

ShiftOpSeries sos_inverse_factor(const RatFuncDense& a, int order)
{
    std::vector<RatFuncDense> coeffs(order + 1);
    coeffs[0] = Rational(1);
    for (int r = 1; r <= order; ++r)
        coeffs[r] = coeffs[r - 1] * a.shifted(Rational(-(r - 1)));
    return ShiftOpSeries(order, std::move(coeffs));
}

ShiftOpSeries build_operator(const ParitySeq& s, const LWeight& zeta, const std::vector<DensePoly>& y, int order)
{
    if (zeta.parity() != s)
        throw Error(ErrorKind::ParityMismatch, "zeta parity " + zeta.parity().to_string() + " vs " + s.to_string());
    if (static_cast<int>(y.size()) != s.node_count())
        throw Error(ErrorKind::InvalidLWeight, "expected " + std::to_string(s.node_count()) + " Bethe polynomials");
    const auto y_at = [&](int i) { return i <= 0 || i >= s.size() ? DensePoly::constant(1) : y[i - 1]; };

    ShiftOpSeries result(order);
    for (int i = 1; i <= s.size(); ++i) {
        const Rational si(s.signs()[i - 1]);
        const DensePoly prev = y_at(i - 1);
        const DensePoly cur = y_at(i);
        const RatFuncDense ratio(shift(prev, si) * shift(cur, -si), prev * cur);
        const RatFuncDense a = RatFuncDense::from(zeta.components()[i - 1]) * ratio;
        result = result * (si == Rational(1) ? sos_linear_factor(a, order) : sos_inverse_factor(a, order));
    }
    return result;
}

ShiftOpSeries build_operator(const BAESystem& sys, int order)
{
    return build_operator(sys.parity(), sys.zeta(), sys.y(), order);
}

SeriesComparison sos_compare(const ShiftOpSeries& a, const ShiftOpSeries& b)
{
    if (a.order() != b.order())
        throw Error(ErrorKind::OrderMismatch, "orders " + std::to_string(a.order()) + " and " +
                                                  std::to_string(b.order()) + " differ");
    for (int r = 0; r <= a.order(); ++r)
        if (!(a[r] == b[r]))
            return {false, a.order(), r};
    return {true, a.order(), std::nullopt};
}

bool sos_eq(const ShiftOpSeries& a, const ShiftOpSeries& b) { return sos_compare(a, b).equal; }

}  // namespace oddref
