#pragma once

#include "oddref/parity.hpp"
#include "oddref/polynomial.hpp"

#include <compare>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace oddref {

/// Reduced rational function num(u)/den(u) with monic numerator and denominator of equal
/// degree, i.e. an element of 1 + u^{-1} Q[[u^{-1}]].
class RatB {
public:
    RatB() = default;
    /// Cancels common roots. Throws InvalidLWeight if the degrees differ.
    RatB(const FactoredPoly& num, const FactoredPoly& den);

    const FactoredPoly& num() const { return num_; }
    const FactoredPoly& den() const { return den_; }
    bool is_one() const { return num_.is_one() && den_.is_one(); }
    std::size_t degree() const { return num_.degree(); }

    RatB inverse() const;
    /// f(u + a).
    RatB shifted(const Rational& a) const;
    /// Coefficient of u^{-1} in the expansion at infinity.
    Rational first_coefficient() const;
    /// Value at a point. Throws PoleAtEvaluation when the denominator vanishes.
    Rational eval(const Rational& t) const;

    friend RatB operator*(const RatB& a, const RatB& b);
    friend RatB operator/(const RatB& a, const RatB& b);
    friend bool operator==(const RatB&, const RatB&) = default;
    friend std::strong_ordering operator<=>(const RatB& a, const RatB& b);

    std::string to_string() const;

private:
    struct Reduced {};
    RatB(FactoredPoly num, FactoredPoly den, Reduced) : num_(std::move(num)), den_(std::move(den)) {}

    FactoredPoly num_;
    FactoredPoly den_;
};

/// Tuple (zeta_1(u), ..., zeta_{m+n}(u)) attached to a parity sequence.
class LWeight {
public:
    LWeight(ParitySeq parity, std::vector<RatB> components);
    static LWeight unit(const ParitySeq& parity);

    const ParitySeq& parity() const { return parity_; }
    const std::vector<RatB>& components() const { return components_; }
    const RatB& operator[](Position j) const;
    int size() const { return parity_.size(); }
    bool is_unit() const;

    LWeight inverse() const;
    /// Same components reinterpreted over another parity sequence of equal length.
    LWeight with_parity(ParitySeq parity) const;
    LWeight with_component(Position j, RatB value) const;

    LWeight& operator*=(const LWeight& rhs);
    LWeight& operator/=(const LWeight& rhs);
    friend LWeight operator*(LWeight a, const LWeight& b) { return a *= b; }
    friend LWeight operator/(LWeight a, const LWeight& b) { return a /= b; }
    friend bool operator==(const LWeight&, const LWeight&) = default;
    friend std::strong_ordering operator<=>(const LWeight& a, const LWeight& b);

    std::string to_string() const;

private:
    ParitySeq parity_;
    std::vector<RatB> components_;
};

/// Finitely supported integer combination of l-weights over one parity sequence.
class QChar {
public:
    using Terms = std::map<LWeight, std::int64_t>;

    explicit QChar(ParitySeq parity) : parity_(std::move(parity)) {}
    static QChar single(const LWeight& z, std::int64_t mult = 1);

    const ParitySeq& parity() const { return parity_; }
    const Terms& terms() const { return terms_; }
    bool empty() const { return terms_.empty(); }
    std::size_t term_count() const { return terms_.size(); }
    std::int64_t multiplicity(const LWeight& z) const;

    /// Adds mult copies of [z]; zero multiplicities are dropped. Throws ParityMismatch.
    void add(const LWeight& z, std::int64_t mult = 1);
    /// Sum of multiplicities.
    std::int64_t dimension() const;

    QChar& operator+=(const QChar& rhs);
    QChar& operator-=(const QChar& rhs);
    friend QChar operator+(QChar a, const QChar& b) { return a += b; }
    friend QChar operator-(QChar a, const QChar& b) { return a -= b; }
    /// Product in the group ring Z[B].
    friend QChar operator*(const QChar& a, const QChar& b);
    friend QChar operator*(std::int64_t c, const QChar& a);
    friend bool operator==(const QChar&, const QChar&) = default;

private:
    ParitySeq parity_;
    Terms terms_;
};

/// A^s_{i,a}: component j is (u - a)/(u - a - (alpha_i, epsilon_j)).
LWeight simple_lroot(const ParitySeq& s, Node i, const Rational& a);

/// X_{i,a}: component i is (1 + (u + a + kappa_i)^{-1})^{s_i}, all others 1.
LWeight xfactor(const ParitySeq& s, Position i, const Rational& a);

/// gl-weight with coordinates s_j * zeta_{j,1}.
GlWeight varpi(const LWeight& z);

struct CoprimeRatio {
    FactoredPoly phi;
    FactoredPoly psi;
    std::size_t k() const { return phi.degree(); }
};

/// Coprime monic phi, psi with phi/psi = zeta_i / zeta_{i+1}.
CoprimeRatio coprime_ratio(const LWeight& z, Node i);

/// Monic g with num/den = g(u + shift)/g(u), if one exists. shift is +1 or -1.
std::optional<FactoredPoly> shift_ladder_solve(const FactoredPoly& num, const FactoredPoly& den, int shift);

/// Finite-dimensionality criterion for the standard parity sequence.
/// Throws NotStandardParity for any other sequence.
bool finite_dim_check(const LWeight& z);

}  // namespace oddref
