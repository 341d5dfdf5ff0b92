#include "oddref/bethe.hpp"

#include "oddref/error.hpp"
#include "oddref/reflection.hpp"

namespace oddref {

BAESystem::BAESystem(ParitySeq parity, LWeight zeta, std::vector<DensePoly> y)
    : parity_(std::move(parity)), zeta_(std::move(zeta)), y_(std::move(y))
{
    if (zeta_.parity() != parity_)
        throw Error(ErrorKind::ParityMismatch,
                    "zeta has parity " + zeta_.parity().to_string() + ", system has " + parity_.to_string());
    if (static_cast<int>(y_.size()) != parity_.node_count())
        throw Error(ErrorKind::InvalidLWeight, "expected " + std::to_string(parity_.node_count()) +
                                                   " Bethe polynomials, got " + std::to_string(y_.size()));
    for (std::size_t k = 0; k < y_.size(); ++k)
        if (!y_[k].is_monic())
            throw Error(ErrorKind::InvalidLWeight,
                        "y_" + std::to_string(k + 1) + " = " + y_[k].to_string() + " is not monic");
}

DensePoly BAESystem::y_at(int i) const
{
    if (i <= 0 || i >= parity_.size())
        return DensePoly::constant(1);
    return y_[i - 1];
}

namespace {

Rational eval_nonzero(const DensePoly& p, const Rational& x, const std::string& label)
{
    const Rational v = p.eval(x);
    if (v.is_zero())
        throw Error(ErrorKind::PoleAtEvaluation, label + " vanishes at " + x.to_string());
    return v;
}

}  // namespace

Rational bae_residual(const BAESystem& sys, Node i, const Rational& t)
{
    check_node(sys.parity(), i);
    const int n = i.value;
    const Rational si(sys.parity().signs()[n - 1]);
    const Rational sn(sys.parity().signs()[n]);
    const auto [phi, psi] = coprime_ratio(sys.zeta(), i);
    const DensePoly prev = sys.y_at(n - 1);
    const DensePoly cur = sys.y_at(n);
    const DensePoly next = sys.y_at(n + 1);

    const std::string idx = std::to_string(n);
    const Rational zeta_den = psi.eval(t);
    if (zeta_den.is_zero())
        throw Error(ErrorKind::PoleAtEvaluation, "zeta_" + idx + "/zeta_" + std::to_string(n + 1) +
                                                     " has a pole at " + t.to_string());
    Rational value = phi.eval(t) / zeta_den;
    value *= prev.eval(t + si) / eval_nonzero(prev, t, "y_" + std::to_string(n - 1) + "(t)");
    value *= cur.eval(t - si) / eval_nonzero(cur, t + sn, "y_" + idx + "(t+s_" + std::to_string(n + 1) + ")");
    value *= next.eval(t) /
             eval_nonzero(next, t - sn, "y_" + std::to_string(n + 1) + "(t-s_" + std::to_string(n + 1) + ")");
    return value - Rational(1);
}

DensePoly reproduction_polynomial(const BAESystem& sys, Node i)
{
    if (!sys.parity().is_odd(i))
        throw Error(ErrorKind::SameParity, "node " + std::to_string(i.value) + " of " +
                                               sys.parity().to_string() + " is even");
    const int n = i.value;
    const Rational si(sys.parity().signs()[n - 1]);
    const Rational sn(sys.parity().signs()[n]);
    const auto [phi, psi] = coprime_ratio(sys.zeta(), i);
    const DensePoly prev = sys.y_at(n - 1);
    const DensePoly next = sys.y_at(n + 1);
    return phi.to_dense() * shift(prev, si) * next - psi.to_dense() * prev * shift(next, -sn);
}

bool bae_divisibility(const BAESystem& sys, Node i)
{
    const DensePoly p = reproduction_polynomial(sys, i);
    return divides(sys.y_at(i.value), p);
}

BAESystem fermionic_reproduce(const BAESystem& sys, Node i)
{
    const DensePoly p = reproduction_polynomial(sys, i);
    if (p.is_zero())
        throw Error(ErrorKind::DegenerateReproduction,
                    "P_" + std::to_string(i.value) + " vanishes identically; the reproduced polynomial is undefined");
    const auto [quotient, remainder] = divmod(p, sys.y_at(i.value));
    if (!remainder.is_zero())
        throw Error(ErrorKind::NotASolution, "y_" + std::to_string(i.value) + " = " +
                                                 sys.y_at(i.value).to_string() + " does not divide P_" +
                                                 std::to_string(i.value) + " = " + p.to_string());
    const Rational si(sys.parity().signs()[i.value - 1]);
    auto y = sys.y();
    y[i.value - 1] = shift(quotient, -si).monic();
    LWeight zeta = reflect(sys.zeta(), i);
    ParitySeq parity = zeta.parity();
    return BAESystem(std::move(parity), std::move(zeta), std::move(y));
}

}  // namespace oddref
