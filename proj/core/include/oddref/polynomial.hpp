#pragma once

#include "oddref/rational.hpp"

#include <compare>
#include <initializer_list>
#include <ostream>
#include <string>
#include <utility>
#include <vector>

namespace oddref {

class DensePoly;

/// Monic polynomial in u stored as the multiset of its roots: prod (u - r).
/// The empty multiset is the constant 1.
class FactoredPoly {
public:
    FactoredPoly() = default;
    FactoredPoly(std::initializer_list<Rational> roots);
    explicit FactoredPoly(std::vector<Rational> roots);

    /// Roots in ascending order, repeated according to multiplicity.
    const std::vector<Rational>& roots() const { return roots_; }
    std::size_t degree() const { return roots_.size(); }
    bool is_one() const { return roots_.empty(); }

    /// Sum of the roots (minus the subleading coefficient).
    Rational root_sum() const;
    Rational eval(const Rational& x) const;
    DensePoly to_dense() const;

    std::string to_string() const;

    friend bool operator==(const FactoredPoly&, const FactoredPoly&) = default;
    friend std::strong_ordering operator<=>(const FactoredPoly& a, const FactoredPoly& b);

private:
    std::vector<Rational> roots_;
};

/// Multiset union: the product of the polynomials.
FactoredPoly operator*(const FactoredPoly& p, const FactoredPoly& q);
/// p(u + a): every root r becomes r - a.
FactoredPoly shift(const FactoredPoly& p, const Rational& a);
/// Multiset intersection.
FactoredPoly gcd(const FactoredPoly& p, const FactoredPoly& q);
/// Multiset difference p - q. Throws NotDivisible unless q's roots are contained in p's.
FactoredPoly exact_div(const FactoredPoly& p, const FactoredPoly& q);
/// Removes the common factor: returns (p / gcd, q / gcd).
std::pair<FactoredPoly, FactoredPoly> cancel_common(const FactoredPoly& p, const FactoredPoly& q);

std::ostream& operator<<(std::ostream& os, const FactoredPoly& p);

/// Polynomial in u with rational coefficients, lowest degree first.
/// The zero polynomial has no coefficients; otherwise the last coefficient is nonzero.
class DensePoly {
public:
    DensePoly() = default;
    DensePoly(std::initializer_list<Rational> coeffs);
    explicit DensePoly(std::vector<Rational> coeffs);

    static DensePoly constant(const Rational& c);
    /// The monomial c * u^k.
    static DensePoly monomial(const Rational& c, std::size_t k);
    /// The linear polynomial u - r.
    static DensePoly linear_root(const Rational& r);

    const std::vector<Rational>& coeffs() const { return coeffs_; }
    bool is_zero() const { return coeffs_.empty(); }
    /// Degree; -1 for the zero polynomial.
    int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
    Rational coeff(std::size_t k) const;
    Rational leading() const;
    bool is_monic() const { return !is_zero() && coeffs_.back() == Rational(1); }
    /// Divides by the leading coefficient. Zero stays zero.
    DensePoly monic() const;

    Rational eval(const Rational& x) const;

    DensePoly operator-() const;
    DensePoly& operator+=(const DensePoly& rhs);
    DensePoly& operator-=(const DensePoly& rhs);
    DensePoly& operator*=(const Rational& c);

    friend DensePoly operator+(DensePoly a, const DensePoly& b) { return a += b; }
    friend DensePoly operator-(DensePoly a, const DensePoly& b) { return a -= b; }
    friend DensePoly operator*(const DensePoly& a, const DensePoly& b);
    friend DensePoly operator*(DensePoly a, const Rational& c) { return a *= c; }
    friend DensePoly operator*(const Rational& c, DensePoly a) { return a *= c; }

    friend bool operator==(const DensePoly&, const DensePoly&) = default;

    std::string to_string() const;

private:
    void trim();
    std::vector<Rational> coeffs_;
};

/// p(u + a), by Taylor shift.
DensePoly shift(const DensePoly& p, const Rational& a);

struct DivMod {
    DensePoly quotient;
    DensePoly remainder;
};

/// Euclidean division. Throws DivideByZero when the divisor is zero.
DivMod divmod(const DensePoly& p, const DensePoly& q);
bool divides(const DensePoly& d, const DensePoly& p);
/// Monic gcd (zero only if both arguments are zero).
DensePoly gcd(const DensePoly& p, const DensePoly& q);

struct RationalRoots {
    FactoredPoly roots;  ///< rational roots found, with multiplicity
    DensePoly cofactor;  ///< p / prod (u - r); has no rational roots
};

/// Splits off every rational root of a nonzero polynomial.
RationalRoots extract_rational_roots(const DensePoly& p);

struct Factorization {
    Rational leading;
    FactoredPoly roots;
};

/// Full factorization over the rationals. Throws NotSplitOverRationals when an
/// irreducible factor of degree >= 2 remains, DivideByZero for p = 0.
Factorization rational_factorization(const DensePoly& p);

std::ostream& operator<<(std::ostream& os, const DensePoly& p);

}  // namespace oddref
