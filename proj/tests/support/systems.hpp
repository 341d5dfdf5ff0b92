#pragma once

// Random Bethe systems that satisfy the divisibility condition at a chosen odd node.

#include "oracles.hpp"

#include "oddref/bethe.hpp"

namespace oracle {

/// Removes common elements from two root lists (multiset cancellation).
inline void cancel(std::vector<Rational>& a, std::vector<Rational>& b)
{
    for (auto it = a.begin(); it != a.end();) {
        const auto hit = std::find(b.begin(), b.end(), *it);
        if (hit == b.end()) {
            ++it;
            continue;
        }
        b.erase(hit);
        it = a.erase(it);
    }
}

/// phi y_{i-1}(u+s_i) y_{i+1}(u) - psi y_{i-1}(u) y_{i+1}(u-s_{i+1}), assembled directly
/// from the components of zeta with phi, psi coprime.
inline DensePoly reproduction_poly(const oddref::ParitySeq& s, const oddref::LWeight& zeta,
                                   const std::vector<DensePoly>& y, int i)
{
    const auto y_at = [&](int j) { return j <= 0 || j >= s.size() ? DensePoly{1} : y[j - 1]; };
    const Rational si(s.signs()[i - 1]);
    const Rational snext(s.signs()[i]);
    // zeta_i / zeta_{i+1} = (num_i den_{i+1}) / (den_i num_{i+1})
    const auto& zi = zeta.components()[i - 1];
    const auto& zn = zeta.components()[i];
    std::vector<Rational> top = zi.num().roots(), bottom = zi.den().roots();
    top.insert(top.end(), zn.den().roots().begin(), zn.den().roots().end());
    bottom.insert(bottom.end(), zn.num().roots().begin(), zn.num().roots().end());
    cancel(top, bottom);
    const DensePoly phi(expand(top));
    const DensePoly psi(expand(bottom));
    return phi * oddref::shift(y_at(i - 1), si) * y_at(i + 1) - psi * y_at(i - 1) * oddref::shift(y_at(i + 1), -snext);
}

struct GeneratedSystem {
    oddref::BAESystem system;
    int node;
};

/// Monic polynomial with `degree` rational roots.
inline DensePoly split_monic(Gen& gen, int degree)
{
    return DensePoly(expand(gen.roots(degree, 4)));
}

/// A system over s with y_i a product of a random subset of the rational roots of P_i,
/// where i is a random odd node. Retries until P_i is nonzero.
inline GeneratedSystem divisible_system(Gen& gen, const oddref::ParitySeq& s, int max_degree = 2)
{
    std::vector<int> odd;
    for (int i = 1; i < s.size(); ++i)
        if (s.signs()[i - 1] != s.signs()[i])
            odd.push_back(i);
    const int node = odd.at(gen.uniform(0, static_cast<int>(odd.size()) - 1));
    while (true) {
        const oddref::LWeight zeta = gen.lweight(s, max_degree);
        std::vector<DensePoly> y;
        for (int j = 1; j < s.size(); ++j)
            y.push_back(split_monic(gen, gen.uniform(0, max_degree)));
        const DensePoly p = reproduction_poly(s, zeta, y, node);
        if (p.is_zero())
            continue;
        const auto roots = oddref::extract_rational_roots(p).roots.roots();
        std::vector<Rational> chosen;
        for (const auto& r : roots)
            if (gen.coin())
                chosen.push_back(r);
        y[node - 1] = DensePoly(expand(chosen));
        return {oddref::BAESystem(s, zeta, y), node};
    }
}

}  // namespace oracle
