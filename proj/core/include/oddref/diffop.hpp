#pragma once

#include "oddref/bethe.hpp"
#include "oddref/polynomial.hpp"

#include <optional>
#include <string>
#include <vector>

namespace oddref {

/// Reduced rational function num/den with monic den.
class RatFuncDense {
public:
    RatFuncDense() : den_(DensePoly::constant(1)), den_rest_(DensePoly::constant(1)) {}
    RatFuncDense(const Rational& c)  // NOLINT
        : num_(DensePoly::constant(c)), den_(DensePoly::constant(1)), den_rest_(DensePoly::constant(1))
    {
    }
    /// Reduces by the gcd; throws DivideByZero for a zero denominator.
    RatFuncDense(DensePoly num, DensePoly den);
    static RatFuncDense from(const RatB& r);

    const DensePoly& num() const { return num_; }
    const DensePoly& den() const { return den_; }
    bool is_zero() const { return num_.is_zero(); }

    /// f(u + a).
    RatFuncDense shifted(const Rational& a) const;

    friend RatFuncDense operator+(const RatFuncDense& a, const RatFuncDense& b);
    friend RatFuncDense operator-(const RatFuncDense& a, const RatFuncDense& b);
    friend RatFuncDense operator*(const RatFuncDense& a, const RatFuncDense& b);
    RatFuncDense operator-() const;
    friend bool operator==(const RatFuncDense& a, const RatFuncDense& b) { return a.num_ == b.num_ && a.den_ == b.den_; }

    std::string to_string() const;

private:
    // The denominator is kept split as prod (u - r) over den_roots_ (sorted) times den_rest_,
    // which has no rational roots. Cancelling a linear factor is then an evaluation and a
    // synthetic division, and a gcd is only needed against den_rest_.
    static RatFuncDense assemble(DensePoly num, std::vector<Rational> roots, DensePoly rest);

    DensePoly num_;
    DensePoly den_;
    std::vector<Rational> den_roots_;
    DensePoly den_rest_;
};

/// sum_{r=0}^{R} c_r(u) D^r modulo D^{R+1}, where D f(u) = f(u - 1) D.
class ShiftOpSeries {
public:
    /// The identity operator at truncation order R.
    explicit ShiftOpSeries(int order);
    ShiftOpSeries(int order, std::vector<RatFuncDense> coeffs);

    int order() const { return order_; }
    const std::vector<RatFuncDense>& coeffs() const { return coeffs_; }
    const RatFuncDense& operator[](int r) const { return coeffs_.at(r); }
    ShiftOpSeries with_coeff(int r, RatFuncDense c) const;

    /// Throws OrderMismatch for different truncation orders.
    friend ShiftOpSeries operator*(const ShiftOpSeries& a, const ShiftOpSeries& b);
    friend bool operator==(const ShiftOpSeries&, const ShiftOpSeries&) = default;

private:
    int order_;
    std::vector<RatFuncDense> coeffs_;
};

/// 1 - A(u) D.
ShiftOpSeries sos_linear_factor(const RatFuncDense& a, int order);

/// (1 - A(u) D)^{-1} = sum_r A(u) A(u-1) ... A(u-r+1) D^r.
ShiftOpSeries sos_inverse_factor(const RatFuncDense& a, int order);

/// Ordered product over i = 1..m+n of (1 - A_i(u) D)^{s_i} with
/// A_i = zeta_i(u) y_{i-1}(u+s_i) y_i(u-s_i) / (y_{i-1}(u) y_i(u)), y_0 = y_{m+n} = 1.
ShiftOpSeries build_operator(const ParitySeq& s, const LWeight& zeta, const std::vector<DensePoly>& y, int order);
ShiftOpSeries build_operator(const BAESystem& sys, int order);

struct SeriesComparison {
    bool equal;
    int order;                          ///< truncation order at which the claim was checked
    std::optional<int> first_mismatch;  ///< lowest r with differing coefficients
};

/// Coefficientwise comparison. Throws OrderMismatch for different orders.
SeriesComparison sos_compare(const ShiftOpSeries& a, const ShiftOpSeries& b);
bool sos_eq(const ShiftOpSeries& a, const ShiftOpSeries& b);

}  // namespace oddref
