#pragma once

#include "oddref/rational.hpp"

#include <compare>
#include <string>
#include <string_view>
#include <vector>

namespace oddref {

/// Index of a simple root alpha_i, 1 <= i <= m+n-1.
struct Node {
    int value;
    explicit constexpr Node(int v) : value(v) {}
    friend constexpr auto operator<=>(Node, Node) = default;
};

/// Index of a basis vector epsilon_j, 1 <= j <= m+n.
struct Position {
    int value;
    explicit constexpr Position(int v) : value(v) {}
    friend constexpr auto operator<=>(Position, Position) = default;
};

/// Sequence of signs s_1..s_{m+n}; +1 occurs m times and -1 occurs n times.
class ParitySeq {
public:
    explicit ParitySeq(std::vector<int> signs);

    /// Parses a string of '+' and '-' (the Unicode minus U+2212 is also accepted).
    static ParitySeq parse(std::string_view text);
    /// (1,...,1,-1,...,-1).
    static ParitySeq standard(int m, int n);
    /// Every sequence with m plus signs and n minus signs, in lexicographic order ('+' first).
    static std::vector<ParitySeq> all(int m, int n);

    int size() const { return static_cast<int>(signs_.size()); }
    int m() const { return m_; }
    int n() const { return size() - m_; }
    int operator[](Position j) const;
    const std::vector<int>& signs() const { return signs_; }
    int node_count() const { return size() - 1; }

    bool is_standard() const;
    bool is_odd(Node i) const;

    /// Exchanges s_i and s_{i+1}. Throws SameParity when they agree.
    ParitySeq swap_at(Node i) const;

    std::string to_string() const;

    friend bool operator==(const ParitySeq&, const ParitySeq&) = default;
    friend auto operator<=>(const ParitySeq&, const ParitySeq&) = default;

private:
    std::vector<int> signs_;
    int m_ = 0;
};

void check_node(const ParitySeq& s, Node i);
void check_position(const ParitySeq& s, Position j);

/// kappa_1 = 0 (s_1 = 1) or -1 (s_1 = -1); kappa_i = kappa_{i-1} + s_i if s_i = s_{i-1},
/// kappa_{i-1} otherwise. Element k-1 holds kappa_k.
std::vector<int> kappa(const ParitySeq& s);

/// (alpha_i, epsilon_j) = s_i delta_{ij} - s_{i+1} delta_{i+1,j}.
int alpha_pair(const ParitySeq& s, Node i, Position j);

/// Letter of the alphabet {1..m, 1bar..nbar}.
struct Letter {
    bool barred;
    int index;  ///< 1-based within its kind
    std::string to_string() const;
    friend bool operator==(const Letter&, const Letter&) = default;
};

/// (a_1, ..., a_{m+n}): the letters listed in the total order <^s.
std::vector<Letter> alphabet_order(const ParitySeq& s);

/// Weakly decreasing sequence of positive parts.
class Partition {
public:
    Partition() = default;
    explicit Partition(std::vector<int> parts);
    /// Comma separated parts; the empty string is the empty partition.
    static Partition parse(std::string_view text);
    /// All partitions of l, in reverse lexicographic order.
    static std::vector<Partition> all_of(int l);

    const std::vector<int>& parts() const { return parts_; }
    /// lambda_i with 1-based i; zero beyond the length.
    int part(int i) const;
    int length() const { return static_cast<int>(parts_.size()); }
    int size() const;
    Partition conjugate() const;
    std::string to_string() const;

    friend bool operator==(const Partition&, const Partition&) = default;
    friend auto operator<=>(const Partition&, const Partition&) = default;

private:
    std::vector<int> parts_;
};

/// lambda_{m+1} <= n.
bool is_hook(const Partition& lambda, int m, int n);

/// Weight sum_j c_j epsilon_j of gl(m|n).
struct GlWeight {
    std::vector<Rational> coords;

    GlWeight() = default;
    explicit GlWeight(std::vector<Rational> c) : coords(std::move(c)) {}
    static GlWeight zero(int size) { return GlWeight(std::vector<Rational>(size)); }
    /// alpha_i = epsilon_i - epsilon_{i+1} in a space of the given dimension.
    static GlWeight simple_root(int size, Node i);

    int size() const { return static_cast<int>(coords.size()); }
    GlWeight& operator+=(const GlWeight& rhs);
    GlWeight& operator-=(const GlWeight& rhs);
    friend GlWeight operator+(GlWeight a, const GlWeight& b) { return a += b; }
    friend GlWeight operator-(GlWeight a, const GlWeight& b) { return a -= b; }
    friend GlWeight operator*(const Rational& c, GlWeight w);
    friend bool operator==(const GlWeight&, const GlWeight&) = default;
    std::string to_string() const;
};

/// lambda^s for an (m|n)-hook partition. Throws NotHook otherwise.
GlWeight hook_weight(const ParitySeq& s, const Partition& lambda);

/// nu <= mu: mu - nu is a nonnegative integer combination of simple roots.
bool weight_leq(const GlWeight& nu, const GlWeight& mu);

}  // namespace oddref
