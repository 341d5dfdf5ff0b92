#pragma once

// Independent reference computations for the test suites. Nothing here calls the
// library routine it is meant to check.

#include "oddref/bethe.hpp"
#include "oddref/lweight.hpp"
#include "oddref/parity.hpp"
#include "oddref/polynomial.hpp"
#include "oddref/tableaux.hpp"

#include <algorithm>
#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <random>
#include <vector>

namespace oracle {

using oddref::DensePoly;
using oddref::FactoredPoly;
using oddref::LWeight;
using oddref::ParitySeq;
using oddref::Partition;
using oddref::Rational;

// ---------------------------------------------------------------- polynomials

/// Coefficients of prod (u - r), lowest first, by repeated multiplication by a linear factor.
inline std::vector<Rational> expand(const std::vector<Rational>& roots)
{
    std::vector<Rational> c{Rational(1)};
    for (const auto& r : roots) {
        std::vector<Rational> next(c.size() + 1);
        for (std::size_t k = 0; k < c.size(); ++k) {
            next[k + 1] += c[k];
            next[k] -= r * c[k];
        }
        c = std::move(next);
    }
    return c;
}

inline Rational horner(const std::vector<Rational>& c, const Rational& x)
{
    Rational v;
    for (auto it = c.rbegin(); it != c.rend(); ++it)
        v = v * x + *it;
    return v;
}

inline Rational eval_roots(const std::vector<Rational>& roots, const Rational& x)
{
    Rational v(1);
    for (const auto& r : roots)
        v *= x - r;
    return v;
}

/// Value of a reduced rational function component num/den at t (den(t) must be nonzero).
inline Rational eval_ratb(const oddref::RatB& f, const Rational& t)
{
    return eval_roots(f.num().roots(), t) / eval_roots(f.den().roots(), t);
}

/// Sorted multiset comparison of root lists.
inline bool same_multiset(std::vector<Rational> a, std::vector<Rational> b)
{
    std::sort(a.begin(), a.end());
    std::sort(b.begin(), b.end());
    return a == b;
}

/// Monic g with roots drawn from `pool` (with repetition, degree <= max_degree) such that
/// g(u+s) den(u) = g(u) num(u) as root multisets.
inline std::optional<std::vector<Rational>> brute_shift_ladder(const std::vector<Rational>& num,
                                                               const std::vector<Rational>& den, int s,
                                                               const std::vector<Rational>& pool,
                                                               int max_degree)
{
    std::vector<Rational> g;
    std::optional<std::vector<Rational>> found;
    std::function<void(std::size_t, int)> rec = [&](std::size_t from, int left) {
        if (found)
            return;
        std::vector<Rational> lhs = den;
        std::vector<Rational> rhs = num;
        for (const auto& r : g) {
            lhs.push_back(r - Rational(s));
            rhs.push_back(r);
        }
        if (same_multiset(lhs, rhs)) {
            found = g;
            return;
        }
        if (left == 0)
            return;
        for (std::size_t k = from; k < pool.size(); ++k) {
            g.push_back(pool[k]);
            rec(k, left - 1);
            g.pop_back();
        }
    };
    rec(0, max_degree);
    return found;
}

// ------------------------------------------------------------------ tableaux

/// Letter rank in the order <^s is the position itself; a position is barred iff s = -1.
inline bool brute_semistandard(const ParitySeq& s, const oddref::SkewDiagram& d, const std::vector<int>& filling)
{
    const auto cells = oddref::skew_cells(d);
    std::map<std::pair<int, int>, int> at;
    for (std::size_t k = 0; k < cells.size(); ++k)
        at[{cells[k].row, cells[k].col}] = filling[k];
    for (const auto& [rc, v] : at) {
        const auto [r, c] = rc;
        const bool barred = s.signs()[v - 1] < 0;
        if (auto it = at.find({r, c + 1}); it != at.end()) {
            if (it->second < v || (barred && it->second == v))
                return false;
        }
        if (auto it = at.find({r + 1, c}); it != at.end()) {
            if (it->second < v || (!barred && it->second == v))
                return false;
        }
    }
    return true;
}

/// All semi-standard fillings by exhaustive search over (m+n)^cells assignments,
/// in row-major lexicographic order.
inline std::vector<std::vector<int>> brute_ssyt(const ParitySeq& s, const oddref::SkewDiagram& d)
{
    const int cells = d.cell_count();
    const int letters = s.size();
    std::vector<std::vector<int>> out;
    std::vector<int> f(cells, 1);
    while (true) {
        if (brute_semistandard(s, d, f))
            out.push_back(f);
        int k = cells - 1;
        while (k >= 0 && f[k] == letters)
            f[k--] = 1;
        if (k < 0)
            break;
        ++f[k];
    }
    return out;
}

/// Hook length formula n! / prod hooks.
inline std::uint64_t hook_length_syt(const Partition& lambda)
{
    const Partition conj = lambda.conjugate();
    const int n = lambda.size();
    // accumulate n! / prod(hooks) as an exact rational to avoid overflow ordering issues
    Rational v(1);
    for (int k = 2; k <= n; ++k)
        v *= Rational(k);
    for (int i = 1; i <= lambda.length(); ++i)
        for (int j = 1; j <= lambda.part(i); ++j)
            v /= Rational(lambda.part(i) - j + conj.part(j) - i + 1);
    return static_cast<std::uint64_t>(v.floor_int());
}

// ---------------------------------------------------------------- random data

struct Gen {
    std::mt19937_64 rng;
    explicit Gen(std::uint64_t seed) : rng(seed) {}

    int uniform(int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng); }
    bool coin() { return uniform(0, 1) == 1; }

    /// Rational with small numerator and denominator in {1, 2, 3}.
    Rational small_rational(int bound = 6)
    {
        return Rational(uniform(-bound, bound), uniform(1, 3));
    }

    std::vector<Rational> roots(int count, int bound = 6)
    {
        std::vector<Rational> out;
        for (int k = 0; k < count; ++k)
            out.push_back(small_rational(bound));
        return out;
    }

    /// `count` pairwise distinct rationals that avoid the values in `avoid`.
    std::vector<Rational> distinct_roots(int count, std::vector<Rational> avoid = {}, int bound = 12)
    {
        std::vector<Rational> out;
        while (static_cast<int>(out.size()) < count) {
            const Rational r = small_rational(bound);
            if (std::find(avoid.begin(), avoid.end(), r) != avoid.end())
                continue;
            avoid.push_back(r);
            out.push_back(r);
        }
        return out;
    }

    oddref::RatB ratb(int degree, int bound = 6)
    {
        return {FactoredPoly(roots(degree, bound)), FactoredPoly(roots(degree, bound))};
    }

    LWeight lweight(const ParitySeq& s, int max_degree = 3)
    {
        std::vector<oddref::RatB> comps;
        for (int j = 0; j < s.size(); ++j)
            comps.push_back(ratb(uniform(0, max_degree)));
        return {s, std::move(comps)};
    }

    ParitySeq parity(int m, int n)
    {
        std::vector<int> signs(m, 1);
        signs.insert(signs.end(), n, -1);
        std::shuffle(signs.begin(), signs.end(), rng);
        return ParitySeq(signs);
    }

    /// Random sequence of the given length with both signs present.
    ParitySeq mixed_parity(int size)
    {
        const int m = uniform(1, size - 1);
        return parity(m, size - m);
    }

    DensePoly monic(int degree, int bound = 4)
    {
        std::vector<Rational> c;
        for (int k = 0; k < degree; ++k)
            c.push_back(small_rational(bound));
        c.push_back(Rational(1));
        return DensePoly(c);
    }
};

}  // namespace oracle
