#include "oddref/qchar11.hpp"

#include "oddref/error.hpp"
#include "oddref/reflection.hpp"

#include <algorithm>

namespace oddref {

namespace {

void require_gl11(const ParitySeq& s)
{
    if (s.size() != 2 || s.m() != 1)
        throw Error(ErrorKind::WrongRank, "gl(1|1) q-characters need m = n = 1, got parity " + s.to_string());
}

/// s_1 * zeta_{1,1}, the quantity raised by exactly one per simple l-root.
Rational height(const LWeight& z)
{
    return Rational(z.parity().signs()[0]) * z.components()[0].first_coefficient();
}

/// Character of L(top) over the swapped parity:
/// sum over J of [reflect(top) * (psi_J(u)/psi_J(u - s_1), psi_J(u)/psi_J(u - s_1))].
QChar reflected_block(const LWeight& top)
{
    const auto psi = coprime_ratio(top, Node(1)).psi;
    const auto& roots = psi.roots();
    const Rational back(-top.parity().signs()[0]);
    const LWeight head = reflect(top, Node(1));
    QChar out(head.parity());
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << roots.size()); ++mask) {
        std::vector<Rational> subset;
        for (std::size_t b = 0; b < roots.size(); ++b)
            if (mask >> b & 1U)
                subset.push_back(roots[b]);
        const FactoredPoly psi_j(std::move(subset));
        const RatB factor(psi_j, shift(psi_j, back));
        out.add(LWeight(head.parity(), {head.components()[0] * factor, head.components()[1] * factor}));
    }
    return out;
}

}  // namespace

QChar qchar_gl11(const LWeight& z)
{
    const ParitySeq& s = z.parity();
    require_gl11(s);
    const auto phi = coprime_ratio(z, Node(1)).phi;
    const auto& roots = phi.roots();
    const std::size_t k = roots.size();
    if (k >= 63)
        throw Error(ErrorKind::IndexOutOfRange, "phi has too many roots for subset enumeration");
    const Rational back(-s.signs()[0]);

    QChar out(s);
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << k); ++mask) {
        std::vector<Rational> subset;
        for (std::size_t b = 0; b < k; ++b)
            if (mask >> b & 1U)
                subset.push_back(roots[b]);
        const FactoredPoly phi_j(std::move(subset));
        const RatB factor(shift(phi_j, back), phi_j);
        out.add(LWeight(s, {z.components()[0] * factor, z.components()[1] * factor}));
    }
    return out;
}

bool qchar_gl11_has_collisions(const LWeight& z)
{
    require_gl11(z.parity());
    const auto phi = coprime_ratio(z, Node(1)).phi;
    const auto& roots = phi.roots();
    return std::adjacent_find(roots.begin(), roots.end()) != roots.end();
}

std::int64_t qchar_dim(const QChar& q) { return q.dimension(); }

const LWeight& varpi_maximal_term(const QChar& q)
{
    const LWeight* best = nullptr;
    Rational best_height;
    for (const auto& [z, mult] : q.terms()) {
        const Rational h = height(z);
        if (best == nullptr || h > best_height) {
            best = &z;
            best_height = h;
        }
    }
    if (best == nullptr)
        throw Error(ErrorKind::IndexOutOfRange, "empty q-character has no maximal term");
    return *best;
}

QChar qchar_reflect_gl11(const QChar& q)
{
    const ParitySeq& s = q.parity();
    require_gl11(s);
    for (const auto& [z, mult] : q.terms())
        if (mult < 0)
            throw Error(ErrorKind::NegativeMultiplicity,
                        "input has multiplicity " + std::to_string(mult) + " at " + z.to_string());

    QChar remaining = q;
    QChar out(s.swap_at(Node(1)));
    const std::int64_t budget = q.dimension();
    for (std::int64_t iteration = 0; !remaining.empty(); ++iteration) {
        if (iteration >= budget)
            throw Error(ErrorKind::NonTermination, "reflection algorithm exceeded its iteration bound");
        const LWeight top = varpi_maximal_term(remaining);
        const std::int64_t a = remaining.multiplicity(top);
        remaining -= a * qchar_gl11(top);
        for (const auto& [z, mult] : remaining.terms())
            if (mult < 0)
                throw Error(ErrorKind::NegativeMultiplicity,
                            "peeling L" + top.to_string() + " leaves multiplicity " + std::to_string(mult) +
                                " at " + z.to_string() + "; input is not a character");
        out += a * reflected_block(top);
    }
    return out;
}

}  // namespace oddref
