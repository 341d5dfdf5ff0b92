#include "checks.hpp"
#include "oddref/reflection.hpp"
#include "oracles.hpp"

using namespace oddref;

namespace {

Rational q(long p, long d = 1) { return Rational(p, d); }
const RatB one;

struct Planted {
    LWeight z;
    std::vector<Rational> phi;
    std::vector<Rational> psi;
};

// z with zeta_i / zeta_{i+1} = phi / psi for chosen coprime phi, psi.
Planted planted(oracle::Gen& gen, const ParitySeq& s, Node i, int k)
{
    const auto phi = gen.distinct_roots(k);
    const auto psi = gen.distinct_roots(k, phi);
    LWeight z = gen.lweight(s);
    const RatB next = z[Position(i.value + 1)];
    z = z.with_component(Position(i.value), next * RatB(FactoredPoly(phi), FactoredPoly(psi)));
    return {z, phi, psi};
}

std::vector<Rational> shifted(const std::vector<Rational>& roots, const Rational& a)
{
    // roots of p(u + a)
    std::vector<Rational> out;
    for (const auto& r : roots)
        out.push_back(r - a);
    return out;
}

ParitySeq random_odd_setting(oracle::Gen& gen, Node& node)
{
    while (true) {
        const ParitySeq s = gen.mixed_parity(gen.uniform(2, 6));
        std::vector<int> odd;
        for (int i = 1; i < s.size(); ++i)
            if (s.is_odd(Node(i)))
                odd.push_back(i);
        if (odd.empty())
            continue;
        node = Node(odd[gen.uniform(0, static_cast<int>(odd.size()) - 1)]);
        return s;
    }
}

}  // namespace

TEST_CASE("gl(1|1) example")
{
    const ParitySeq s({1, -1});
    const LWeight z(s, {RatB({-1}, {0}), one});
    const LWeight r = reflect(z, Node(1));
    CHECK(r.parity() == ParitySeq({-1, 1}));
    CHECK(r == LWeight(ParitySeq({-1, 1}), {RatB({1}, {0}), one}));
    CHECK(reflect(r, Node(1)) == z);
}

TEST_CASE("k = 0 swaps the two components")
{
    const ParitySeq s({1, -1, 1});
    const RatB c({q(1, 2)}, {3});
    const RatB other({5}, {-5});
    const LWeight z(s, {c, c, other});
    const LWeight r = reflect(z, Node(1));
    CHECK(r[Position(1)] == c);
    CHECK(r[Position(2)] == c);
    CHECK(r[Position(3)] == other);
}

TEST_CASE("other components untouched and errors")
{
    oracle::Gen gen(23);
    const ParitySeq s({1, 1, -1});
    const LWeight z = gen.lweight(s);
    CHECK(reflect(z, Node(2))[Position(1)] == z[Position(1)]);
    CHECK_ERROR_KIND(reflect(z, Node(1)), ErrorKind::SameParity);
    CHECK_ERROR_KIND(reflect(z, Node(3)), ErrorKind::IndexOutOfRange);
}

TEST_CASE("reflection matches the transition rule pointwise")
{
    oracle::Gen gen(29);
    for (int trial = 0; trial < 100; ++trial) {
        Node i(1);
        const ParitySeq s = random_odd_setting(gen, i);
        const int k = gen.uniform(0, 4);
        const Planted p = planted(gen, s, i, k);
        const LWeight r = reflect(p.z, i);
        const Rational si(s[Position(i.value)]);
        // z~_i = z_{i+1} psi(u - s_i)/psi(u), z~_{i+1} = z_i phi(u - s_i)/phi(u)
        const auto psi_sh = shifted(p.psi, -si);
        const auto phi_sh = shifted(p.phi, -si);
        for (int probe = 0; probe < 3; ++probe) {
            const Rational t = q(1000 + gen.uniform(0, 500), 13);
            CHECK(oracle::eval_ratb(r[Position(i.value)], t) ==
                  oracle::eval_ratb(p.z[Position(i.value + 1)], t) * oracle::eval_roots(psi_sh, t) /
                      oracle::eval_roots(p.psi, t));
            CHECK(oracle::eval_ratb(r[Position(i.value + 1)], t) ==
                  oracle::eval_ratb(p.z[Position(i.value)], t) * oracle::eval_roots(phi_sh, t) /
                      oracle::eval_roots(p.phi, t));
        }
        for (int j = 1; j <= s.size(); ++j)
            if (j != i.value && j != i.value + 1)
                CHECK(r[Position(j)] == p.z[Position(j)]);
    }
}

TEST_CASE("double reflection is the identity")
{
    oracle::Gen gen(31);
    for (int trial = 0; trial < 200; ++trial) {
        Node i(1);
        const ParitySeq s = random_odd_setting(gen, i);
        const LWeight z = planted(gen, s, i, gen.uniform(0, 6)).z;
        CHECK(reflect(reflect(z, i), i) == z);
        CHECK(reflect_path(z, {i, i}) == z);
    }
}

TEST_CASE("weight drops by k alpha_i")
{
    oracle::Gen gen(37);
    for (int trial = 0; trial < 100; ++trial) {
        Node i(1);
        const ParitySeq s = random_odd_setting(gen, i);
        const int k = gen.uniform(0, 5);
        const LWeight z = planted(gen, s, i, k).z;
        GlWeight after = varpi(reflect(z, i));
        // coordinates are indexed by position; the reflected sequence has entries i, i+1 exchanged
        std::swap(after.coords[i.value - 1], after.coords[i.value]);
        CHECK(after == varpi(z) - Rational(k) * GlWeight::simple_root(s.size(), i));
    }
}

TEST_CASE("reflections at distant nodes commute")
{
    oracle::Gen gen(41);
    int checked = 0;
    for (int trial = 0; trial < 400 && checked < 60; ++trial) {
        const ParitySeq s = gen.mixed_parity(gen.uniform(4, 6));
        const int i = gen.uniform(1, s.size() - 1);
        const int j = gen.uniform(1, s.size() - 1);
        if (std::abs(i - j) < 2 || !s.is_odd(Node(i)) || !s.is_odd(Node(j)))
            continue;
        const LWeight z = gen.lweight(s);
        CHECK(reflect(reflect(z, Node(i)), Node(j)) == reflect(reflect(z, Node(j)), Node(i)));
        ++checked;
    }
    CHECK(checked > 20);
}

TEST_CASE("paths")
{
    oracle::Gen gen(43);
    const ParitySeq s({1, -1});
    const LWeight z = gen.lweight(s);
    CHECK(reflect_path(z, {}) == z);
    CHECK(reflect_to(z, s) == z);
    CHECK(reflect_to(z, ParitySeq({-1, 1})) == reflect(z, Node(1)));
    CHECK(reflect_to(reflect_to(z, ParitySeq({-1, 1})), s) == z);
    CHECK_ERROR_KIND(reflect_to(z, ParitySeq({1, 1})), ErrorKind::IncompatibleCounts);
    CHECK_ERROR_KIND(reflect_to(z, ParitySeq({1, -1, 1})), ErrorKind::IncompatibleCounts);

    try {
        reflect_path(LWeight::unit(ParitySeq({1, -1, -1})), {Node(1), Node(1), Node(2)});
        FAIL("expected SameParity");
    } catch (const Error& e) {
        CHECK(e.kind() == ErrorKind::SameParity);
        CHECK(std::string(e.what()).find("step 3") != std::string::npos);
    }

    for (int m = 0; m <= 3; ++m)
        for (int n = 0; n <= 3; ++n) {
            if (m + n == 0)
                continue;
            const auto all = ParitySeq::all(m, n);
            for (const auto& from : all)
                for (const auto& to : all) {
                    ParitySeq cur = from;
                    for (Node step : canonical_path(from, to))
                        cur = cur.swap_at(step);
                    CHECK(cur == to);
                }
        }
}

TEST_CASE("round trip through every parity")
{
    oracle::Gen gen(47);
    const auto all = ParitySeq::all(2, 2);
    for (int trial = 0; trial < 20; ++trial) {
        const LWeight z = gen.lweight(ParitySeq::standard(2, 2));
        for (const auto& target : all)
            CHECK(reflect_to(reflect_to(z, target), z.parity()) == z);
    }
}
