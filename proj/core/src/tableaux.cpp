#include "oddref/tableaux.hpp"

#include "oddref/error.hpp"

#include <map>

namespace oddref {

SkewDiagram::SkewDiagram(Partition outer, Partition inner) : outer_(std::move(outer)), inner_(std::move(inner))
{
    for (int i = 1; i <= inner_.length(); ++i)
        if (inner_.part(i) > outer_.part(i))
            throw Error(ErrorKind::NotContained,
                        "(" + inner_.to_string() + ") is not contained in (" + outer_.to_string() + ")");
}

bool SkewDiagram::contains(int row, int col) const
{
    return row >= 1 && col > inner_.part(row) && col <= outer_.part(row);
}

std::string SkewDiagram::to_string() const
{
    return "(" + outer_.to_string() + ")/(" + inner_.to_string() + ")";
}

std::vector<Cell> skew_cells(const SkewDiagram& d)
{
    std::vector<Cell> cells;
    for (int i = 1; i <= d.outer().length(); ++i)
        for (int j = d.inner().part(i) + 1; j <= d.outer().part(i); ++j)
            cells.push_back({i, j, j - i});
    return cells;
}

int STableau::at(int row, int col) const
{
    const auto cells = skew_cells(diagram);
    for (std::size_t k = 0; k < cells.size(); ++k)
        if (cells[k].row == row && cells[k].col == col)
            return entries.at(k);
    throw Error(ErrorKind::IndexOutOfRange,
                "cell (" + std::to_string(row) + "," + std::to_string(col) + ") outside " + diagram.to_string());
}

namespace {

struct Neighbours {
    std::vector<int> left;  // index of the cell to the left, or -1
    std::vector<int> up;    // index of the cell above, or -1
};

Neighbours neighbours(const std::vector<Cell>& cells)
{
    std::map<std::pair<int, int>, int> index;
    for (std::size_t k = 0; k < cells.size(); ++k)
        index[{cells[k].row, cells[k].col}] = static_cast<int>(k);
    Neighbours nb{std::vector<int>(cells.size(), -1), std::vector<int>(cells.size(), -1)};
    for (std::size_t k = 0; k < cells.size(); ++k) {
        if (auto it = index.find({cells[k].row, cells[k].col - 1}); it != index.end())
            nb.left[k] = it->second;
        if (auto it = index.find({cells[k].row - 1, cells[k].col}); it != index.end())
            nb.up[k] = it->second;
    }
    return nb;
}

}  // namespace

bool is_semistandard(const ParitySeq& s, const STableau& t)
{
    const auto cells = skew_cells(t.diagram);
    if (t.entries.size() != cells.size())
        return false;
    for (int e : t.entries)
        if (e < 1 || e > s.size())
            return false;
    const auto nb = neighbours(cells);
    for (std::size_t k = 0; k < cells.size(); ++k) {
        const int e = t.entries[k];
        if (nb.left[k] >= 0) {
            const int l = t.entries[nb.left[k]];
            if (l > e || (l == e && s.signs()[e - 1] == -1))
                return false;
        }
        if (nb.up[k] >= 0) {
            const int a = t.entries[nb.up[k]];
            if (a > e || (a == e && s.signs()[e - 1] == 1))
                return false;
        }
    }
    return true;
}

std::uint64_t for_each_ssyt(const ParitySeq& s, const SkewDiagram& d,
                            const std::function<void(std::span<const int>)>& visit)
{
    const auto cells = skew_cells(d);
    const int n_cells = static_cast<int>(cells.size());
    const int letters = s.size();
    const auto& sg = s.signs();
    if (n_cells == 0) {
        visit({});
        return 1;
    }
    const auto nb = neighbours(cells);
    std::vector<int> entries(cells.size(), 0);

    // Smallest admissible entry at cell k given its filled neighbours.
    auto lower_bound = [&](int k) {
        int lo = 1;
        if (nb.left[k] >= 0) {
            const int l = entries[nb.left[k]];
            lo = std::max(lo, sg[l - 1] == -1 ? l + 1 : l);
        }
        if (nb.up[k] >= 0) {
            const int a = entries[nb.up[k]];
            lo = std::max(lo, sg[a - 1] == 1 ? a + 1 : a);
        }
        return lo;
    };

    std::uint64_t count = 0;
    int k = 0;
    entries[0] = lower_bound(0) - 1;
    while (k >= 0) {
        ++entries[k];
        if (entries[k] > letters) {
            --k;
            continue;
        }
        if (k + 1 == n_cells) {
            ++count;
            visit(entries);
            continue;
        }
        ++k;
        entries[k] = lower_bound(k) - 1;
    }
    return count;
}

std::uint64_t count_ssyt(const ParitySeq& s, const SkewDiagram& d)
{
    return for_each_ssyt(s, d, [](std::span<const int>) {});
}

namespace {

struct CapExceeded {};

}  // namespace

std::vector<STableau> enumerate_ssyt(const ParitySeq& s, const SkewDiagram& d, std::uint64_t cap)
{
    std::vector<STableau> out;
    try {
        for_each_ssyt(s, d, [&](std::span<const int> entries) {
            if (out.size() >= cap)
                throw CapExceeded{};
            out.push_back({d, std::vector<int>(entries.begin(), entries.end())});
        });
    } catch (const CapExceeded&) {
        throw Error(ErrorKind::TooManyTableaux,
                    d.to_string() + " has more than " + std::to_string(cap) + " tableaux for parity " + s.to_string());
    }
    return out;
}

LWeight tableau_lweight(const ParitySeq& s, std::span<const Cell> cells, std::span<const int> entries)
{
    const auto kap = kappa(s);
    std::vector<std::vector<Rational>> num(s.size());
    std::vector<std::vector<Rational>> den(s.size());
    for (std::size_t k = 0; k < cells.size(); ++k) {
        const int pos = entries[k] - 1;
        const long shift = cells[k].content + kap[pos];
        // (u + shift + 1)/(u + shift), inverted for barred letters
        Rational top(-(shift + 1));
        Rational bottom(-shift);
        if (s.signs()[pos] == 1) {
            num[pos].push_back(std::move(top));
            den[pos].push_back(std::move(bottom));
        } else {
            num[pos].push_back(std::move(bottom));
            den[pos].push_back(std::move(top));
        }
    }
    std::vector<RatB> comps;
    comps.reserve(s.size());
    for (int j = 0; j < s.size(); ++j)
        comps.emplace_back(FactoredPoly(std::move(num[j])), FactoredPoly(std::move(den[j])));
    return LWeight(s, std::move(comps));
}

LWeight tableau_lweight(const ParitySeq& s, const STableau& t)
{
    const auto cells = skew_cells(t.diagram);
    return tableau_lweight(s, cells, t.entries);
}

QChar skew_qchar(const ParitySeq& s, const SkewDiagram& d, std::uint64_t cap)
{
    const auto cells = skew_cells(d);
    QChar out(s);
    std::uint64_t seen = 0;
    for_each_ssyt(s, d, [&](std::span<const int> entries) {
        if (++seen > cap)
            throw Error(ErrorKind::TooManyTableaux,
                        d.to_string() + " has more than " + std::to_string(cap) + " tableaux");
        out.add(tableau_lweight(s, cells, entries));
    });
    return out;
}

bool is_hook_pair(const SkewDiagram& d, int m_outer, int n_outer, int m_inner, int n_inner)
{
    return is_hook(d.outer(), m_outer, n_outer) && is_hook(d.inner(), m_inner, n_inner);
}

namespace {

std::uint64_t count_syt_rec(const std::vector<int>& parts, std::map<std::vector<int>, std::uint64_t>& memo)
{
    if (parts.empty())
        return 1;
    if (auto it = memo.find(parts); it != memo.end())
        return it->second;
    // The largest entry sits in a removable corner.
    std::uint64_t total = 0;
    for (std::size_t i = 0; i < parts.size(); ++i) {
        if (i + 1 < parts.size() && parts[i + 1] == parts[i])
            continue;
        auto smaller = parts;
        if (--smaller[i] == 0)
            smaller.pop_back();
        total += count_syt_rec(smaller, memo);
    }
    memo.emplace(parts, total);
    return total;
}

}  // namespace

std::uint64_t count_syt(const Partition& lambda)
{
    std::map<std::vector<int>, std::uint64_t> memo;
    return count_syt_rec(lambda.parts(), memo);
}

}  // namespace oddref
