#include "checks.hpp"
#include "oddref/parity.hpp"
#include "oracles.hpp"

using namespace oddref;

namespace {

std::vector<Rational> coords(std::initializer_list<int> v) { return {v.begin(), v.end()}; }

}  // namespace

TEST_CASE("parsing and counts")
{
    const ParitySeq s = ParitySeq::parse("+--++");
    CHECK(s.m() == 3);
    CHECK(s.n() == 2);
    CHECK(s.to_string() == "+--++");
    CHECK(ParitySeq::parse("+\xE2\x88\x92") == ParitySeq({1, -1}));
    CHECK_ERROR_KIND(ParitySeq::parse(""), ErrorKind::InvalidParity);
    CHECK_ERROR_KIND(ParitySeq::parse("+x"), ErrorKind::InvalidParity);
    CHECK_ERROR_KIND(ParitySeq({1, 0}), ErrorKind::InvalidParity);
    CHECK(ParitySeq::standard(2, 1) == ParitySeq({1, 1, -1}));
    CHECK(ParitySeq::all(2, 2).size() == 6);
    CHECK(ParitySeq::all(3, 0).size() == 1);
}

TEST_CASE("swap_at")
{
    CHECK(ParitySeq({1, -1}).swap_at(Node(1)) == ParitySeq({-1, 1}));
    CHECK(ParitySeq({1, -1, -1, 1, 1}).swap_at(Node(3)) == ParitySeq({1, -1, 1, -1, 1}));
    CHECK_ERROR_KIND(ParitySeq({1, 1, -1}).swap_at(Node(1)), ErrorKind::SameParity);
    CHECK_ERROR_KIND(ParitySeq({1, -1}).swap_at(Node(2)), ErrorKind::IndexOutOfRange);
    for (int m = 0; m <= 3; ++m)
        for (int n = 0; n <= 3; ++n) {
            if (m + n == 0)
                continue;
            for (const auto& s : ParitySeq::all(m, n))
                for (int i = 1; i < s.size(); ++i)
                    if (s.is_odd(Node(i)))
                        CHECK(s.swap_at(Node(i)).swap_at(Node(i)) == s);
        }
}

TEST_CASE("kappa")
{
    CHECK(kappa(ParitySeq({1, -1})) == std::vector<int>{0, 0});
    CHECK(kappa(ParitySeq({1, 1, -1, -1})) == std::vector<int>{0, 1, 1, 0});
    CHECK(kappa(ParitySeq({-1, 1})) == std::vector<int>{-1, -1});
    for (const auto& s : ParitySeq::all(3, 3)) {
        const auto k = kappa(s);
        for (int i = 1; i < s.size(); ++i) {
            const int step = k[i] - k[i - 1];
            CHECK((step == 0 || step == s.signs()[i]));
        }
    }
}

TEST_CASE("alpha_pair")
{
    const ParitySeq s({1, -1});
    CHECK(alpha_pair(s, Node(1), Position(1)) == 1);
    CHECK(alpha_pair(s, Node(1), Position(2)) == 1);
    CHECK(alpha_pair(ParitySeq({1, 1, 1}), Node(1), Position(3)) == 0);
    CHECK(alpha_pair(ParitySeq({1, 1, 1}), Node(1), Position(2)) == -1);
}

TEST_CASE("alphabet order")
{
    const auto a = alphabet_order(ParitySeq({1, -1, -1, 1, 1}));
    const std::vector<Letter> expected{{false, 1}, {true, 1}, {true, 2}, {false, 2}, {false, 3}};
    CHECK(a == expected);
    CHECK(alphabet_order(ParitySeq({-1, 1})) == std::vector<Letter>{{true, 1}, {false, 1}});
    for (const auto& s : ParitySeq::all(3, 2)) {
        int next_plain = 1, next_barred = 1;
        for (const auto& l : alphabet_order(s))
            CHECK(l.index == (l.barred ? next_barred++ : next_plain++));
        CHECK(next_plain == 4);
        CHECK(next_barred == 3);
    }
}

TEST_CASE("partitions")
{
    const Partition p = Partition::parse("5,3,3");
    CHECK(p.size() == 11);
    CHECK(p.conjugate() == Partition({3, 3, 3, 1, 1}));
    CHECK(p.conjugate().conjugate() == p);
    CHECK(Partition::parse("") == Partition());
    CHECK(Partition({2, 1, 0, 0}) == Partition({2, 1}));
    CHECK_ERROR_KIND(Partition({1, 2}), ErrorKind::InvalidPartition);
    CHECK_ERROR_KIND(Partition::parse("2,x"), ErrorKind::InvalidPartition);
    CHECK(Partition::all_of(5).size() == 7);
    CHECK(Partition::all_of(0).size() == 1);
}

TEST_CASE("hook test")
{
    CHECK_FALSE(is_hook(Partition({2, 2}), 1, 1));
    CHECK(is_hook(Partition({5, 1, 1, 1}), 1, 1));
    CHECK(is_hook(Partition(), 0, 0));
    CHECK(is_hook(Partition(), 3, 2));
}

TEST_CASE("hook weight")
{
    const ParitySeq std21 = ParitySeq::standard(2, 1);
    CHECK(hook_weight(std21, Partition({3, 1})).coords == coords({3, 1, 0}));
    CHECK(hook_weight(ParitySeq({1, -1}), Partition({1})).coords == coords({1, 0}));
    CHECK(hook_weight(ParitySeq({-1, 1}), Partition({1})).coords == coords({1, 0}));
    CHECK_ERROR_KIND(hook_weight(ParitySeq({1, -1}), Partition({2, 2})), ErrorKind::NotHook);

    // standard s with at most m rows reproduces lambda
    for (int l = 0; l <= 6; ++l)
        for (const auto& lambda : Partition::all_of(l)) {
            if (lambda.length() > 3)
                continue;
            std::vector<Rational> expected;
            for (int i = 1; i <= 3; ++i)
                expected.push_back(lambda.part(i));
            expected.push_back(0);
            expected.push_back(0);
            CHECK(hook_weight(ParitySeq::standard(3, 2), lambda).coords == expected);
        }

    // total size is preserved for every parity (the weight has |lambda| boxes)
    for (const auto& s : ParitySeq::all(2, 2))
        for (int l = 0; l <= 6; ++l)
            for (const auto& lambda : Partition::all_of(l)) {
                if (!is_hook(lambda, 2, 2))
                    continue;
                Rational total;
                for (const auto& c : hook_weight(s, lambda).coords)
                    total += c;
                CHECK(total == Rational(l));
            }
}

TEST_CASE("weight order")
{
    const GlWeight nu(coords({1, 0, 2}));
    const GlWeight a1 = GlWeight::simple_root(3, Node(1));
    CHECK(weight_leq(nu, nu));
    CHECK(weight_leq(nu, nu + a1));
    CHECK_FALSE(weight_leq(nu, nu - a1));
    CHECK(weight_leq(nu, nu + a1 + GlWeight::simple_root(3, Node(2))));
    CHECK_FALSE(weight_leq(nu, nu + Rational(1, 2) * a1));
}
