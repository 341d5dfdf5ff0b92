#include "oddref/lweight.hpp"

#include "oddref/error.hpp"

#include <algorithm>

namespace oddref {

// ----------------------------------------------------------------------- RatB

RatB::RatB(const FactoredPoly& num, const FactoredPoly& den)
{
    auto [a, b] = cancel_common(num, den);
    if (a.degree() != b.degree())
        throw Error(ErrorKind::InvalidLWeight, "component " + a.to_string() + " / " + b.to_string() +
                                                   " has unequal numerator and denominator degrees");
    num_ = std::move(a);
    den_ = std::move(b);
}

RatB RatB::inverse() const { return RatB(den_, num_, Reduced{}); }

RatB RatB::shifted(const Rational& a) const { return RatB(shift(num_, a), shift(den_, a), Reduced{}); }

Rational RatB::first_coefficient() const { return den_.root_sum() - num_.root_sum(); }

Rational RatB::eval(const Rational& t) const
{
    const Rational d = den_.eval(t);
    if (d.is_zero())
        throw Error(ErrorKind::PoleAtEvaluation, to_string() + " has a pole at u = " + t.to_string());
    return num_.eval(t) / d;
}

RatB operator*(const RatB& a, const RatB& b)
{
    if (a.is_one())
        return b;
    if (b.is_one())
        return a;
    return RatB(a.num_ * b.num_, a.den_ * b.den_);
}

RatB operator/(const RatB& a, const RatB& b) { return a * b.inverse(); }

std::strong_ordering operator<=>(const RatB& a, const RatB& b)
{
    if (auto c = a.num_ <=> b.num_; c != 0)
        return c;
    return a.den_ <=> b.den_;
}

std::string RatB::to_string() const
{
    if (is_one())
        return "1";
    // parenthesize a bare sum such as u+1
    const auto wrap = [](const FactoredPoly& p) {
        const std::string t = p.to_string();
        return p.degree() == 1 && t != "u" ? "(" + t + ")" : t;
    };
    return wrap(num_) + "/" + wrap(den_);
}

// -------------------------------------------------------------------- LWeight

LWeight::LWeight(ParitySeq parity, std::vector<RatB> components)
    : parity_(std::move(parity)), components_(std::move(components))
{
    if (static_cast<int>(components_.size()) != parity_.size())
        throw Error(ErrorKind::InvalidLWeight,
                    "l-weight has " + std::to_string(components_.size()) + " components but parity " +
                        parity_.to_string() + " has length " + std::to_string(parity_.size()));
}

LWeight LWeight::unit(const ParitySeq& parity) { return LWeight(parity, std::vector<RatB>(parity.size())); }

const RatB& LWeight::operator[](Position j) const
{
    check_position(parity_, j);
    return components_[j.value - 1];
}

bool LWeight::is_unit() const
{
    return std::all_of(components_.begin(), components_.end(), [](const RatB& c) { return c.is_one(); });
}

LWeight LWeight::inverse() const
{
    LWeight out = *this;
    for (auto& c : out.components_)
        c = c.inverse();
    return out;
}

LWeight LWeight::with_parity(ParitySeq parity) const
{
    return LWeight(std::move(parity), components_);
}

LWeight LWeight::with_component(Position j, RatB value) const
{
    check_position(parity_, j);
    LWeight out = *this;
    out.components_[j.value - 1] = std::move(value);
    return out;
}

namespace {

void require_same_parity(const ParitySeq& a, const ParitySeq& b)
{
    if (a != b)
        throw Error(ErrorKind::ParityMismatch, "parity " + a.to_string() + " vs " + b.to_string());
}

}  // namespace

LWeight& LWeight::operator*=(const LWeight& rhs)
{
    require_same_parity(parity_, rhs.parity_);
    for (std::size_t j = 0; j < components_.size(); ++j)
        components_[j] = components_[j] * rhs.components_[j];
    return *this;
}

LWeight& LWeight::operator/=(const LWeight& rhs)
{
    require_same_parity(parity_, rhs.parity_);
    for (std::size_t j = 0; j < components_.size(); ++j)
        components_[j] = components_[j] / rhs.components_[j];
    return *this;
}

std::strong_ordering operator<=>(const LWeight& a, const LWeight& b)
{
    if (auto c = a.parity_ <=> b.parity_; c != 0)
        return c;
    return std::lexicographical_compare_three_way(a.components_.begin(), a.components_.end(),
                                                  b.components_.begin(), b.components_.end());
}

std::string LWeight::to_string() const
{
    std::string out = "(";
    for (std::size_t j = 0; j < components_.size(); ++j)
        out += (j ? ", " : "") + components_[j].to_string();
    return out + ")";
}

// ---------------------------------------------------------------------- QChar

QChar QChar::single(const LWeight& z, std::int64_t mult)
{
    QChar q(z.parity());
    q.add(z, mult);
    return q;
}

std::int64_t QChar::multiplicity(const LWeight& z) const
{
    const auto it = terms_.find(z);
    return it == terms_.end() ? 0 : it->second;
}

void QChar::add(const LWeight& z, std::int64_t mult)
{
    require_same_parity(parity_, z.parity());
    if (mult == 0)
        return;
    auto [it, inserted] = terms_.try_emplace(z, mult);
    if (!inserted) {
        it->second += mult;
        if (it->second == 0)
            terms_.erase(it);
    }
}

std::int64_t QChar::dimension() const
{
    std::int64_t total = 0;
    for (const auto& [z, mult] : terms_)
        total += mult;
    return total;
}

QChar& QChar::operator+=(const QChar& rhs)
{
    require_same_parity(parity_, rhs.parity_);
    for (const auto& [z, mult] : rhs.terms_)
        add(z, mult);
    return *this;
}

QChar& QChar::operator-=(const QChar& rhs)
{
    require_same_parity(parity_, rhs.parity_);
    for (const auto& [z, mult] : rhs.terms_)
        add(z, -mult);
    return *this;
}

QChar operator*(const QChar& a, const QChar& b)
{
    require_same_parity(a.parity_, b.parity_);
    QChar out(a.parity_);
    for (const auto& [x, mx] : a.terms_)
        for (const auto& [y, my] : b.terms_)
            out.add(x * y, mx * my);
    return out;
}

QChar operator*(std::int64_t c, const QChar& a)
{
    QChar out(a.parity_);
    if (c == 0)
        return out;
    out.terms_ = a.terms_;
    for (auto& [z, mult] : out.terms_)
        mult *= c;
    return out;
}

// ----------------------------------------------------------------- operations

LWeight simple_lroot(const ParitySeq& s, Node i, const Rational& a)
{
    check_node(s, i);
    std::vector<RatB> comps(s.size());
    for (int j = 1; j <= s.size(); ++j) {
        const int pair = alpha_pair(s, i, Position(j));
        if (pair != 0)
            comps[j - 1] = RatB(FactoredPoly{a}, FactoredPoly{a + Rational(pair)});
    }
    return LWeight(s, std::move(comps));
}

LWeight xfactor(const ParitySeq& s, Position i, const Rational& a)
{
    check_position(s, i);
    const Rational shift = a + Rational(kappa(s)[i.value - 1]);
    // 1 + 1/(u + shift) = (u + shift + 1)/(u + shift)
    RatB factor(FactoredPoly{-(shift + Rational(1))}, FactoredPoly{-shift});
    if (s[i] == -1)
        factor = factor.inverse();
    return LWeight::unit(s).with_component(i, std::move(factor));
}

GlWeight varpi(const LWeight& z)
{
    GlWeight w = GlWeight::zero(z.size());
    for (int j = 0; j < z.size(); ++j)
        w.coords[j] = Rational(z.parity().signs()[j]) * z.components()[j].first_coefficient();
    return w;
}

CoprimeRatio coprime_ratio(const LWeight& z, Node i)
{
    check_node(z.parity(), i);
    const RatB ratio = z.components()[i.value - 1] / z.components()[i.value];
    return {ratio.num(), ratio.den()};
}

std::optional<FactoredPoly> shift_ladder_solve(const FactoredPoly& num, const FactoredPoly& den, int shift)
{
    if (shift != 1 && shift != -1)
        throw Error(ErrorKind::IndexOutOfRange, "shift must be +1 or -1");
    // Net multiplicity e(t) = nu(t) - delta(t) at root base + t, per residue class mod Z.
    std::map<Rational, std::map<std::int64_t, int>> classes;
    for (const auto& r : num.roots())
        classes[r.frac()][r.floor_int()] += 1;
    for (const auto& r : den.roots())
        classes[r.frac()][r.floor_int()] -= 1;

    std::vector<Rational> g_roots;
    for (const auto& [base, net] : classes) {
        if (net.empty())
            continue;
        // shift = +1: gamma(t) = sum_{j<t} e(j); shift = -1: gamma(t) = sum_{j>t} e(j).
        // gamma is constant between consecutive support points.
        std::vector<std::pair<std::int64_t, int>> points(net.begin(), net.end());
        if (shift == -1)
            std::reverse(points.begin(), points.end());
        long gamma = 0;
        for (std::size_t k = 0; k < points.size(); ++k) {
            gamma += points[k].second;
            if (gamma < 0)
                return std::nullopt;
            if (gamma == 0 || k + 1 == points.size())
                continue;
            const std::int64_t from = points[k].first + shift;
            const std::int64_t to = points[k + 1].first;
            for (std::int64_t t = from;; t += shift) {
                for (long c = 0; c < gamma; ++c)
                    g_roots.push_back(base + Rational(static_cast<long>(t)));
                if (t == to)
                    break;
            }
        }
        if (gamma != 0)
            return std::nullopt;
    }
    return FactoredPoly(std::move(g_roots));
}

bool finite_dim_check(const LWeight& z)
{
    const ParitySeq& s = z.parity();
    if (!s.is_standard())
        throw Error(ErrorKind::NotStandardParity,
                    "finiteness criterion needs the standard parity sequence, got " + s.to_string());
    for (int i = 1; i <= s.node_count(); ++i) {
        if (i == s.m())
            continue;  // phi/psi of equal degree always qualifies
        const auto [phi, psi] = coprime_ratio(z, Node(i));
        if (!shift_ladder_solve(phi, psi, s.signs()[i - 1]))
            return false;
    }
    return true;
}

}  // namespace oddref
