#pragma once

#include "oddref/lweight.hpp"
#include "oddref/polynomial.hpp"

#include <vector>

namespace oddref {

/// Candidate Bethe ansatz solution: parity, l-weight and monic y_1..y_{m+n-1}.
/// y_0 = y_{m+n} = 1 implicitly.
class BAESystem {
public:
    /// Throws ParityMismatch if zeta's parity differs, InvalidLWeight if the number of
    /// polynomials is not m+n-1 or one of them is not monic.
    BAESystem(ParitySeq parity, LWeight zeta, std::vector<DensePoly> y);

    const ParitySeq& parity() const { return parity_; }
    const LWeight& zeta() const { return zeta_; }
    const std::vector<DensePoly>& y() const { return y_; }
    /// y_i for 0 <= i <= m+n, including the implicit constant ends.
    DensePoly y_at(int i) const;

    friend bool operator==(const BAESystem&, const BAESystem&) = default;

private:
    ParitySeq parity_;
    LWeight zeta_;
    std::vector<DensePoly> y_;
};

/// Left side of the Bethe ansatz equation at node i evaluated at t, minus 1.
/// Throws PoleAtEvaluation naming the factor that vanished.
Rational bae_residual(const BAESystem& sys, Node i, const Rational& t);

/// P_i(u) = phi_i(u) y_{i-1}(u+s_i) y_{i+1}(u) - psi_i(u) y_{i-1}(u) y_{i+1}(u-s_{i+1}).
/// Throws SameParity at even nodes.
DensePoly reproduction_polynomial(const BAESystem& sys, Node i);

/// y_i divides P_i. Throws SameParity at even nodes.
bool bae_divisibility(const BAESystem& sys, Node i);

/// Fermionic reproduction at an odd node: y~_i(u) is P_i(u - s_i)/y_i(u - s_i) made monic,
/// zeta is reflected and the parity swapped. Throws NotASolution if y_i does not divide P_i,
/// DegenerateReproduction if P_i = 0.
BAESystem fermionic_reproduce(const BAESystem& sys, Node i);

}  // namespace oddref
