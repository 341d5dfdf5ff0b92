#pragma once

#include "oddref/lweight.hpp"
#include "oddref/parity.hpp"

#include <cstdint>
#include <functional>
#include <span>
#include <vector>

namespace oddref {

/// Skew Young diagram lambda/mu: cells (i, j) with mu_i < j <= lambda_i.
class SkewDiagram {
public:
    /// Throws NotContained unless mu_i <= lambda_i for all i.
    SkewDiagram(Partition outer, Partition inner);
    explicit SkewDiagram(Partition outer) : SkewDiagram(std::move(outer), Partition()) {}

    const Partition& outer() const { return outer_; }
    const Partition& inner() const { return inner_; }
    int cell_count() const { return outer_.size() - inner_.size(); }
    bool contains(int row, int col) const;
    std::string to_string() const;

private:
    Partition outer_;
    Partition inner_;
};

struct Cell {
    int row;
    int col;
    int content;  ///< col - row
    friend bool operator==(const Cell&, const Cell&) = default;
};

/// Cells in row-major order.
std::vector<Cell> skew_cells(const SkewDiagram& d);

/// Filling of a skew diagram by positions 1..m+n (the letters a_1..a_{m+n}).
struct STableau {
    SkewDiagram diagram;
    std::vector<int> entries;  ///< aligned with skew_cells(diagram)

    /// Entry at (row, col); throws IndexOutOfRange outside the diagram.
    int at(int row, int col) const;
};

/// Semi-standard w.r.t. <^s: weakly increasing along rows and columns, unbarred letters
/// strictly increasing along columns, barred letters strictly increasing along rows.
bool is_semistandard(const ParitySeq& s, const STableau& t);

constexpr std::uint64_t default_tableau_cap = 1'000'000;

/// Calls visit(entries) for every semi-standard s-tableau of shape d, in row-major
/// lexicographic order. Returns the number visited.
std::uint64_t for_each_ssyt(const ParitySeq& s, const SkewDiagram& d,
                            const std::function<void(std::span<const int>)>& visit);

/// Number of semi-standard s-tableaux of shape d.
std::uint64_t count_ssyt(const ParitySeq& s, const SkewDiagram& d);

/// All semi-standard s-tableaux of shape d in row-major lexicographic order.
/// Throws TooManyTableaux when more than `cap` exist.
std::vector<STableau> enumerate_ssyt(const ParitySeq& s, const SkewDiagram& d,
                                     std::uint64_t cap = default_tableau_cap);

/// Product of X_{T(i,j), c(i,j)} over the cells.
LWeight tableau_lweight(const ParitySeq& s, const STableau& t);
LWeight tableau_lweight(const ParitySeq& s, std::span<const Cell> cells, std::span<const int> entries);

/// Sum of [tableau_lweight] over all semi-standard s-tableaux of shape d.
QChar skew_qchar(const ParitySeq& s, const SkewDiagram& d, std::uint64_t cap = default_tableau_cap);

/// lambda is an (m_outer|n_outer)-hook and mu an (m_inner|n_inner)-hook.
bool is_hook_pair(const SkewDiagram& d, int m_outer, int n_outer, int m_inner, int n_inner);

/// Number of standard Young tableaux of shape lambda, by recursive corner removal.
std::uint64_t count_syt(const Partition& lambda);

}  // namespace oddref
