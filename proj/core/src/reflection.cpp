#include "oddref/reflection.hpp"

#include "oddref/error.hpp"

namespace oddref {

LWeight reflect(const LWeight& z, Node i)
{
    const ParitySeq& s = z.parity();
    const ParitySeq swapped = s.swap_at(i);
    const auto [phi, psi] = coprime_ratio(z, i);
    const Rational back(-s.signs()[i.value - 1]);  // u -> u - s_i

    const RatB psi_ratio(shift(psi, back), psi);
    const RatB phi_ratio(shift(phi, back), phi);

    std::vector<RatB> comps = z.components();
    comps[i.value - 1] = z.components()[i.value] * psi_ratio;
    comps[i.value] = z.components()[i.value - 1] * phi_ratio;
    return LWeight(swapped, std::move(comps));
}

LWeight reflect_path(const LWeight& z, const std::vector<Node>& path)
{
    LWeight current = z;
    for (std::size_t step = 0; step < path.size(); ++step) {
        try {
            current = reflect(current, path[step]);
        } catch (const Error& e) {
            throw Error(e.kind(), "step " + std::to_string(step + 1) + ": " + e.what());
        }
    }
    return current;
}

std::vector<Node> canonical_path(const ParitySeq& from, const ParitySeq& target)
{
    if (from.size() != target.size() || from.m() != target.m())
        throw Error(ErrorKind::IncompatibleCounts, "cannot connect " + from.to_string() + " and " +
                                                       target.to_string() + " by odd reflections");
    std::vector<Node> path;
    std::vector<int> current = from.signs();
    const auto& goal = target.signs();
    // Bubble sort: at the leftmost mismatch k, carry the nearest sign the target needs
    // at k leftwards one adjacent swap at a time.
    for (std::size_t k = 0; k < current.size(); ++k) {
        if (current[k] == goal[k])
            continue;
        std::size_t j = k + 1;
        while (current[j] != goal[k])
            ++j;
        for (; j > k; --j) {
            std::swap(current[j - 1], current[j]);
            path.emplace_back(static_cast<int>(j));
        }
    }
    return path;
}

LWeight reflect_to(const LWeight& z, const ParitySeq& target)
{
    return reflect_path(z, canonical_path(z.parity(), target));
}

}  // namespace oddref
