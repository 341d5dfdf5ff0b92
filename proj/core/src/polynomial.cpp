#include "oddref/polynomial.hpp"

#include "oddref/error.hpp"

#include <algorithm>
#include <optional>
#include <sstream>

namespace oddref {

// ---------------------------------------------------------------- FactoredPoly

FactoredPoly::FactoredPoly(std::initializer_list<Rational> roots) : roots_(roots)
{
    std::sort(roots_.begin(), roots_.end());
}

FactoredPoly::FactoredPoly(std::vector<Rational> roots) : roots_(std::move(roots))
{
    std::sort(roots_.begin(), roots_.end());
}

Rational FactoredPoly::root_sum() const
{
    Rational sum;
    for (const auto& r : roots_)
        sum += r;
    return sum;
}

Rational FactoredPoly::eval(const Rational& x) const
{
    Rational value(1);
    for (const auto& r : roots_)
        value *= x - r;
    return value;
}

DensePoly FactoredPoly::to_dense() const
{
    std::vector<Rational> c{Rational(1)};
    for (const auto& r : roots_) {
        // multiply by (u - r)
        std::vector<Rational> next(c.size() + 1);
        for (std::size_t k = 0; k < c.size(); ++k) {
            next[k + 1] += c[k];
            next[k] -= c[k] * r;
        }
        c = std::move(next);
    }
    return DensePoly(std::move(c));
}

namespace {

std::string linear_factor(const Rational& r)
{
    if (r.is_zero())
        return "u";
    if (r.sign() > 0)
        return "u-" + r.to_string();
    return "u+" + (-r).to_string();
}

}  // namespace

std::string FactoredPoly::to_string() const
{
    if (roots_.empty())
        return "1";
    const bool single = roots_.size() == 1;
    std::string out;
    for (std::size_t i = 0; i < roots_.size();) {
        std::size_t j = i;
        while (j < roots_.size() && roots_[j] == roots_[i])
            ++j;
        const std::string f = linear_factor(roots_[i]);
        out += roots_[i].is_zero() || (single && j - i == 1) ? f : "(" + f + ")";
        if (j - i > 1)
            out += "^" + std::to_string(j - i);
        i = j;
    }
    return out;
}

std::strong_ordering operator<=>(const FactoredPoly& a, const FactoredPoly& b)
{
    return std::lexicographical_compare_three_way(a.roots_.begin(), a.roots_.end(), b.roots_.begin(),
                                                  b.roots_.end());
}

FactoredPoly operator*(const FactoredPoly& p, const FactoredPoly& q)
{
    std::vector<Rational> out;
    out.reserve(p.degree() + q.degree());
    std::merge(p.roots().begin(), p.roots().end(), q.roots().begin(), q.roots().end(),
               std::back_inserter(out));
    return FactoredPoly(std::move(out));
}

FactoredPoly shift(const FactoredPoly& p, const Rational& a)
{
    if (a.is_zero())
        return p;
    std::vector<Rational> out;
    out.reserve(p.degree());
    for (const auto& r : p.roots())
        out.push_back(r - a);
    return FactoredPoly(std::move(out));
}

FactoredPoly gcd(const FactoredPoly& p, const FactoredPoly& q)
{
    std::vector<Rational> out;
    std::set_intersection(p.roots().begin(), p.roots().end(), q.roots().begin(), q.roots().end(),
                          std::back_inserter(out));
    return FactoredPoly(std::move(out));
}

FactoredPoly exact_div(const FactoredPoly& p, const FactoredPoly& q)
{
    if (!std::includes(p.roots().begin(), p.roots().end(), q.roots().begin(), q.roots().end()))
        throw Error(ErrorKind::NotDivisible, q.to_string() + " does not divide " + p.to_string());
    std::vector<Rational> out;
    std::set_difference(p.roots().begin(), p.roots().end(), q.roots().begin(), q.roots().end(),
                        std::back_inserter(out));
    return FactoredPoly(std::move(out));
}

std::pair<FactoredPoly, FactoredPoly> cancel_common(const FactoredPoly& p, const FactoredPoly& q)
{
    std::vector<Rational> a;
    std::vector<Rational> b;
    auto i = p.roots().begin();
    auto j = q.roots().begin();
    while (i != p.roots().end() && j != q.roots().end()) {
        if (*i < *j)
            a.push_back(*i++);
        else if (*j < *i)
            b.push_back(*j++);
        else {
            ++i;
            ++j;
        }
    }
    a.insert(a.end(), i, p.roots().end());
    b.insert(b.end(), j, q.roots().end());
    return {FactoredPoly(std::move(a)), FactoredPoly(std::move(b))};
}

std::ostream& operator<<(std::ostream& os, const FactoredPoly& p) { return os << p.to_string(); }

// ------------------------------------------------------------------ DensePoly

DensePoly::DensePoly(std::initializer_list<Rational> coeffs) : coeffs_(coeffs) { trim(); }

DensePoly::DensePoly(std::vector<Rational> coeffs) : coeffs_(std::move(coeffs)) { trim(); }

DensePoly DensePoly::constant(const Rational& c) { return DensePoly({c}); }

DensePoly DensePoly::monomial(const Rational& c, std::size_t k)
{
    std::vector<Rational> v(k + 1);
    v[k] = c;
    return DensePoly(std::move(v));
}

DensePoly DensePoly::linear_root(const Rational& r) { return DensePoly({-r, Rational(1)}); }

void DensePoly::trim()
{
    while (!coeffs_.empty() && coeffs_.back().is_zero())
        coeffs_.pop_back();
}

Rational DensePoly::coeff(std::size_t k) const { return k < coeffs_.size() ? coeffs_[k] : Rational(); }

Rational DensePoly::leading() const { return coeffs_.empty() ? Rational() : coeffs_.back(); }

DensePoly DensePoly::monic() const
{
    if (is_zero() || is_monic())
        return *this;
    DensePoly out = *this;
    const Rational lead = leading();
    for (auto& c : out.coeffs_)
        c /= lead;
    return out;
}

Rational DensePoly::eval(const Rational& x) const
{
    Rational value;
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) {
        value *= x;
        value += *it;
    }
    return value;
}

DensePoly DensePoly::operator-() const
{
    DensePoly out = *this;
    for (auto& c : out.coeffs_)
        c = -c;
    return out;
}

DensePoly& DensePoly::operator+=(const DensePoly& rhs)
{
    if (rhs.coeffs_.size() > coeffs_.size())
        coeffs_.resize(rhs.coeffs_.size());
    for (std::size_t k = 0; k < rhs.coeffs_.size(); ++k)
        coeffs_[k] += rhs.coeffs_[k];
    trim();
    return *this;
}

DensePoly& DensePoly::operator-=(const DensePoly& rhs)
{
    if (rhs.coeffs_.size() > coeffs_.size())
        coeffs_.resize(rhs.coeffs_.size());
    for (std::size_t k = 0; k < rhs.coeffs_.size(); ++k)
        coeffs_[k] -= rhs.coeffs_[k];
    trim();
    return *this;
}

DensePoly& DensePoly::operator*=(const Rational& c)
{
    if (c.is_zero()) {
        coeffs_.clear();
        return *this;
    }
    for (auto& x : coeffs_)
        x *= c;
    return *this;
}

DensePoly operator*(const DensePoly& a, const DensePoly& b)
{
    if (a.is_zero() || b.is_zero())
        return {};
    std::vector<Rational> out(a.coeffs_.size() + b.coeffs_.size() - 1);
    for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
        if (a.coeffs_[i].is_zero())
            continue;
        for (std::size_t j = 0; j < b.coeffs_.size(); ++j)
            out[i + j] += a.coeffs_[i] * b.coeffs_[j];
    }
    return DensePoly(std::move(out));
}

std::string DensePoly::to_string() const
{
    if (coeffs_.empty())
        return "0";
    std::ostringstream os;
    bool first = true;
    for (int k = degree(); k >= 0; --k) {
        const Rational& c = coeffs_[k];
        if (c.is_zero())
            continue;
        Rational mag = c.sign() < 0 ? -c : c;
        if (first)
            os << (c.sign() < 0 ? "-" : "");
        else
            os << (c.sign() < 0 ? " - " : " + ");
        first = false;
        const bool unit = mag == Rational(1);
        if (k == 0 || !unit)
            os << (mag.is_integer() || k == 0 ? mag.to_string() : "(" + mag.to_string() + ")");
        if (k >= 1)
            os << "u";
        if (k >= 2)
            os << "^" << k;
    }
    return os.str();
}

DensePoly shift(const DensePoly& p, const Rational& a)
{
    if (a.is_zero() || p.degree() <= 0)
        return p;
    // Horner in the ring: result = result * (u + a) + c_k
    const auto& c = p.coeffs();
    std::vector<Rational> out{c.back()};
    for (int k = p.degree() - 1; k >= 0; --k) {
        std::vector<Rational> next(out.size() + 1);
        for (std::size_t i = 0; i < out.size(); ++i) {
            next[i + 1] += out[i];
            next[i] += out[i] * a;
        }
        next[0] += c[k];
        out = std::move(next);
    }
    return DensePoly(std::move(out));
}

DivMod divmod(const DensePoly& p, const DensePoly& q)
{
    if (q.is_zero())
        throw Error(ErrorKind::DivideByZero, "polynomial division by zero");
    if (p.degree() < q.degree())
        return {DensePoly(), p};
    std::vector<Rational> rem = p.coeffs();
    const int dq = q.degree();
    const Rational lead = q.leading();
    std::vector<Rational> quot(p.degree() - dq + 1);
    for (int k = p.degree(); k >= dq; --k) {
        if (rem[k].is_zero())
            continue;
        const Rational f = rem[k] / lead;
        quot[k - dq] = f;
        for (int j = 0; j <= dq; ++j)
            rem[k - dq + j] -= f * q.coeffs()[j];
    }
    rem.resize(dq);
    return {DensePoly(std::move(quot)), DensePoly(std::move(rem))};
}

bool divides(const DensePoly& d, const DensePoly& p) { return divmod(p, d).remainder.is_zero(); }

DensePoly gcd(const DensePoly& p, const DensePoly& q)
{
    DensePoly a = p;
    DensePoly b = q;
    while (!b.is_zero()) {
        DensePoly r = divmod(a, b).remainder;
        a = std::move(b);
        b = r.monic();
    }
    return a.monic();
}

// ----------------------------------------------------------- rational roots

namespace {

/// Primitive integer coefficient vector proportional to p.
std::vector<mpz_class> primitive_integer(const DensePoly& p)
{
    mpz_class l = 1;
    for (const auto& c : p.coeffs())
        mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), c.denominator().get_mpz_t());
    std::vector<mpz_class> a;
    a.reserve(p.coeffs().size());
    mpz_class g = 0;
    for (const auto& c : p.coeffs()) {
        mpz_class v = c.numerator() * (l / c.denominator());
        mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), v.get_mpz_t());
        a.push_back(std::move(v));
    }
    if (g != 0 && g != 1)
        for (auto& v : a)
            v /= g;
    return a;
}

std::vector<mpz_class> divisors(mpz_class n)
{
    n = abs(n);
    std::vector<std::pair<mpz_class, int>> primes;
    for (mpz_class d = 2; d * d <= n; ++d) {
        if (mpz_divisible_p(n.get_mpz_t(), d.get_mpz_t())) {
            int e = 0;
            while (mpz_divisible_p(n.get_mpz_t(), d.get_mpz_t())) {
                n /= d;
                ++e;
            }
            primes.emplace_back(d, e);
        }
    }
    if (n > 1)
        primes.emplace_back(n, 1);
    std::vector<mpz_class> out{mpz_class(1)};
    for (const auto& [prime, e] : primes) {
        const std::size_t base = out.size();
        mpz_class pw = 1;
        for (int k = 1; k <= e; ++k) {
            pw *= prime;
            for (std::size_t i = 0; i < base; ++i)
                out.push_back(out[i] * pw);
        }
    }
    return out;
}

bool is_root(const std::vector<mpz_class>& a, const mpz_class& num, const mpz_class& den)
{
    // Homogenized evaluation: sum a_k num^k den^(n-k) == 0
    const std::size_t n = a.size() - 1;
    mpz_class acc = 0;
    mpz_class den_pow = 1;
    std::vector<mpz_class> num_pows(n + 1);
    num_pows[0] = 1;
    for (std::size_t k = 1; k <= n; ++k)
        num_pows[k] = num_pows[k - 1] * num;
    for (std::size_t k = n + 1; k-- > 0;) {
        acc += a[k] * num_pows[k] * den_pow;
        den_pow *= den;
    }
    return acc == 0;
}

std::optional<Rational> find_rational_root(const DensePoly& p)
{
    if (p.coeff(0).is_zero())
        return Rational(0);
    if (p.degree() == 1)
        return -p.coeff(0) / p.coeff(1);
    const auto a = primitive_integer(p);
    if (p.degree() == 2) {
        mpz_class disc = a[1] * a[1] - 4 * a[2] * a[0];
        if (disc < 0 || !mpz_perfect_square_p(disc.get_mpz_t()))
            return std::nullopt;
        mpz_class root = sqrt(disc);
        return Rational(mpq_class(-a[1] + root, 2 * a[2]));
    }
    const auto ps = divisors(a.front());
    const auto qs = divisors(a.back());
    for (const auto& q : qs) {
        for (const auto& num : ps) {
            mpz_class g;
            mpz_gcd(g.get_mpz_t(), num.get_mpz_t(), q.get_mpz_t());
            if (g != 1)
                continue;
            if (is_root(a, num, q))
                return Rational(mpq_class(num, q));
            mpz_class neg = -num;
            if (is_root(a, neg, q))
                return Rational(mpq_class(neg, q));
        }
    }
    return std::nullopt;
}

}  // namespace

RationalRoots extract_rational_roots(const DensePoly& p)
{
    if (p.is_zero())
        throw Error(ErrorKind::DivideByZero, "rational roots of the zero polynomial");
    std::vector<Rational> roots;
    DensePoly rest = p;
    while (rest.degree() >= 1) {
        const auto r = find_rational_root(rest);
        if (!r)
            break;
        do {
            rest = divmod(rest, DensePoly::linear_root(*r)).quotient;
            roots.push_back(*r);
        } while (rest.degree() >= 1 && rest.eval(*r).is_zero());
    }
    return {FactoredPoly(std::move(roots)), rest};
}

Factorization rational_factorization(const DensePoly& p)
{
    auto [roots, cofactor] = extract_rational_roots(p);
    if (cofactor.degree() >= 1)
        throw Error(ErrorKind::NotSplitOverRationals,
                    p.to_string() + " has the irreducible factor " + cofactor.monic().to_string());
    return {cofactor.leading(), std::move(roots)};
}

std::ostream& operator<<(std::ostream& os, const DensePoly& p) { return os << p.to_string(); }

}  // namespace oddref
