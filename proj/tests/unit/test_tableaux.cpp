#include "checks.hpp"
#include "oddref/qchar11.hpp"
#include "oddref/tableaux.hpp"
#include "oracles.hpp"

#include <set>

using namespace oddref;

namespace {

Rational q(long p, long d = 1) { return Rational(p, d); }
const RatB one;

// all (outer, inner) pairs with outer of size <= max_cells, inner contained in outer
std::vector<SkewDiagram> small_shapes(int max_outer)
{
    std::vector<SkewDiagram> out;
    for (int l = 0; l <= max_outer; ++l)
        for (const auto& lambda : Partition::all_of(l))
            for (int k = 0; k <= l; ++k)
                for (const auto& mu : Partition::all_of(k)) {
                    bool inside = mu.length() <= lambda.length();
                    for (int i = 1; inside && i <= mu.length(); ++i)
                        inside = mu.part(i) <= lambda.part(i);
                    if (inside)
                        out.emplace_back(lambda, mu);
                }
    return out;
}

std::vector<ParitySeq> parities_up_to(int size)
{
    std::vector<ParitySeq> out;
    for (int total = 1; total <= size; ++total)
        for (int m = 0; m <= total; ++m)
            for (const auto& s : ParitySeq::all(m, total - m))
                out.push_back(s);
    return out;
}

}  // namespace

TEST_CASE("skew cells and contents")
{
    const SkewDiagram d(Partition({5, 3, 3, 3, 3}), Partition({3, 3, 2, 2}));
    const auto cells = skew_cells(d);
    std::vector<int> contents;
    for (const auto& c : cells)
        contents.push_back(c.content);
    CHECK(contents == std::vector<int>{3, 4, 0, -1, -4, -3, -2});
    CHECK(cells.front() == Cell{1, 4, 3});
    CHECK(cells.back() == Cell{5, 3, -2});
    CHECK(skew_cells(SkewDiagram(Partition({2, 1}), Partition({2, 1}))).empty());
    CHECK(skew_cells(SkewDiagram(Partition({2}), Partition({1}))) == std::vector<Cell>{{1, 2, 1}});
    CHECK_ERROR_KIND(SkewDiagram(Partition({1}), Partition({2})), ErrorKind::NotContained);
    CHECK_ERROR_KIND(SkewDiagram(Partition({2}), Partition({1, 1})), ErrorKind::NotContained);
}

TEST_CASE("enumeration examples")
{
    for (const auto& s : {ParitySeq({1, -1}), ParitySeq({-1, 1})})
        CHECK(enumerate_ssyt(s, SkewDiagram(Partition({1}))).size() == 2);
    CHECK(enumerate_ssyt(ParitySeq({1}), SkewDiagram(Partition({2, 2}))).empty());
    CHECK(count_ssyt(ParitySeq({-1}), SkewDiagram(Partition({2}))) == 0);
    CHECK(count_ssyt(ParitySeq({-1}), SkewDiagram(Partition({1, 1, 1}))) == 1);

    const ParitySeq s({1, -1, 1, -1});
    const SkewDiagram d(Partition({5, 3, 3, 3, 3}), Partition({3, 3, 2, 2}));
    const std::vector<int> filling{1, 1, 2, 2, 2, 3, 4};
    const auto all = enumerate_ssyt(s, d);
    bool found = false;
    for (const auto& t : all)
        found = found || t.entries == filling;
    CHECK(found);
    const STableau t{d, filling};
    CHECK(is_semistandard(s, t));
    CHECK(t.at(1, 4) == 1);
    CHECK(t.at(5, 3) == 4);
    CHECK_ERROR_KIND(t.at(1, 1), ErrorKind::IndexOutOfRange);
    CHECK_FALSE(is_semistandard(s, STableau{d, {1, 1, 1, 1, 2, 3, 4}}));  // unbarred 1 repeated in a column
    CHECK(count_ssyt(s, d) == all.size());
}

TEST_CASE("enumeration matches exhaustive search")
{
    for (const auto& d : small_shapes(5)) {
        if (d.cell_count() > 5)
            continue;
        for (const auto& s : parities_up_to(3)) {
            const auto expected = oracle::brute_ssyt(s, d);
            std::vector<std::vector<int>> got;
            for (const auto& t : enumerate_ssyt(s, d))
                got.push_back(t.entries);
            CHECK(got == expected);
            for (const auto& t : enumerate_ssyt(s, d))
                CHECK(is_semistandard(s, t));
        }
    }
}

TEST_CASE("enumeration cap")
{
    const ParitySeq s = ParitySeq::standard(2, 2);
    const SkewDiagram d(Partition({3, 2}));
    const auto n = count_ssyt(s, d);
    CHECK(enumerate_ssyt(s, d, n).size() == n);
    CHECK_ERROR_KIND(enumerate_ssyt(s, d, n - 1), ErrorKind::TooManyTableaux);
}

TEST_CASE("tableau l-weights")
{
    const ParitySeq s({1, -1});
    CHECK(tableau_lweight(s, STableau{SkewDiagram(Partition({1}), Partition({1})), {}}).is_unit());
    CHECK(tableau_lweight(s, STableau{SkewDiagram(Partition({1})), {1}}) == LWeight(s, {RatB({-1}, {0}), one}));
    CHECK(tableau_lweight(s, STableau{SkewDiagram(Partition({1})), {2}}) == LWeight(s, {one, RatB({0}, {-1})}));
}

TEST_CASE("skew q-character")
{
    const ParitySeq s({1, -1});
    const QChar c = skew_qchar(s, SkewDiagram(Partition({1})));
    CHECK(c == qchar_gl11(LWeight(s, {RatB({-1}, {0}), one})));
    CHECK(skew_qchar(s, SkewDiagram(Partition({2, 1}), Partition({2, 1}))) == QChar::single(LWeight::unit(s)));

    // gl(1|1): the character of any shape is a sum of irreducible ones, so the reflection
    // algorithm must accept it and preserve its dimension
    for (const auto& d : small_shapes(4)) {
        const QChar sc = skew_qchar(s, d);
        CHECK(static_cast<std::uint64_t>(sc.dimension()) == count_ssyt(s, d));
        const QChar r = qchar_reflect_gl11(sc);
        CHECK(r.dimension() == sc.dimension());
        CHECK(r == skew_qchar(ParitySeq({-1, 1}), d));
    }
}

TEST_CASE("thinness, central series and parity independence")
{
    for (const auto& d : small_shapes(4)) {
        const auto cells = skew_cells(d);
        for (int total = 1; total <= 4; ++total)
            for (int m = 0; m <= total; ++m) {
                std::optional<std::uint64_t> count;
                for (const auto& s : ParitySeq::all(m, total - m)) {
                    const auto tableaux = enumerate_ssyt(s, d);
                    if (count)
                        CHECK(*count == tableaux.size());
                    count = tableaux.size();

                    std::set<LWeight> seen;
                    const auto k = kappa(s);
                    for (const auto& t : tableaux) {
                        const LWeight z = tableau_lweight(s, t);
                        CHECK(seen.insert(z).second);
                        // prod_i zeta_i(u - kappa_i)^{s_i} = prod_cells (u+c+1)/(u+c), pointwise
                        for (const Rational x : {q(97, 7), q(-53, 3)}) {
                            Rational lhs(1), rhs(1);
                            for (int i = 1; i <= s.size(); ++i) {
                                const Rational v = oracle::eval_ratb(z[Position(i)], x - Rational(k[i - 1]));
                                lhs *= s.signs()[i - 1] > 0 ? v : Rational(1) / v;
                            }
                            for (const auto& c : cells)
                                rhs *= (x + Rational(c.content + 1)) / (x + Rational(c.content));
                            CHECK(lhs == rhs);
                        }
                    }
                }
            }
    }
}

TEST_CASE("row-major-minimal tableau carries the highest weight")
{
    for (const auto& d : small_shapes(4))
        for (const auto& s : parities_up_to(3)) {
            const auto tableaux = enumerate_ssyt(s, d);
            if (tableaux.empty())
                continue;
            const GlWeight top = varpi(tableau_lweight(s, tableaux.front()));
            for (const auto& t : tableaux)
                CHECK(weight_leq(varpi(tableau_lweight(s, t)), top));
        }
}

TEST_CASE("standard tableaux")
{
    CHECK(count_syt(Partition({1})) == 1);
    CHECK(count_syt(Partition({2, 1})) == 2);
    CHECK(count_syt(Partition({2, 2})) == 2);
    CHECK(count_syt(Partition()) == 1);
    for (int l = 0; l <= 12; ++l)
        for (const auto& lambda : Partition::all_of(l))
            CHECK(count_syt(lambda) == oracle::hook_length_syt(lambda));
}

TEST_CASE("Schur-Sergeev count for small cases")
{
    for (const auto& [m, n, lmax] : std::vector<std::tuple<int, int, int>>{{1, 1, 5}, {2, 1, 4}, {1, 2, 4}}) {
        for (const auto& s : ParitySeq::all(m, n))
            for (int l = 0; l <= lmax; ++l) {
                std::uint64_t total = 0;
                for (const auto& lambda : Partition::all_of(l))
                    if (is_hook(lambda, m, n))
                        total += count_ssyt(s, SkewDiagram(lambda)) * count_syt(lambda);
                std::uint64_t expected = 1;
                for (int k = 0; k < l; ++k)
                    expected *= static_cast<std::uint64_t>(m + n);
                CHECK(total == expected);
            }
    }
}

TEST_CASE("hook pairs")
{
    const SkewDiagram d(Partition({3, 2, 2}), Partition({1}));
    CHECK(is_hook_pair(d, 1, 2, 1, 0));
    CHECK_FALSE(is_hook_pair(d, 1, 1, 1, 0));
}
