#include "oddref/parity.hpp"

#include "oddref/error.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

namespace oddref {

ParitySeq::ParitySeq(std::vector<int> signs) : signs_(std::move(signs))
{
    if (signs_.empty())
        throw Error(ErrorKind::InvalidParity, "parity sequence must be nonempty");
    for (int s : signs_) {
        if (s != 1 && s != -1)
            throw Error(ErrorKind::InvalidParity, "parity entries must be +1 or -1");
        if (s == 1)
            ++m_;
    }
}

ParitySeq ParitySeq::parse(std::string_view text)
{
    constexpr std::string_view unicode_minus = "\xE2\x88\x92";
    std::vector<int> signs;
    for (std::size_t k = 0; k < text.size();) {
        if (text[k] == '+') {
            signs.push_back(1);
            ++k;
        } else if (text[k] == '-') {
            signs.push_back(-1);
            ++k;
        } else if (text.substr(k).starts_with(unicode_minus)) {
            signs.push_back(-1);
            k += unicode_minus.size();
        } else {
            throw Error(ErrorKind::InvalidParity,
                        "parity string '" + std::string(text) + "' may only contain '+' and '-'");
        }
    }
    return ParitySeq(std::move(signs));
}

ParitySeq ParitySeq::standard(int m, int n)
{
    std::vector<int> signs(m, 1);
    signs.insert(signs.end(), n, -1);
    return ParitySeq(std::move(signs));
}

std::vector<ParitySeq> ParitySeq::all(int m, int n)
{
    // Start from the lexicographically largest arrangement with '+' = 1 first.
    std::vector<int> signs(m, 1);
    signs.insert(signs.end(), n, -1);
    std::vector<ParitySeq> out;
    do {
        out.emplace_back(signs);
    } while (std::prev_permutation(signs.begin(), signs.end()));
    return out;
}

int ParitySeq::operator[](Position j) const
{
    check_position(*this, j);
    return signs_[j.value - 1];
}

bool ParitySeq::is_standard() const
{
    return std::is_sorted(signs_.begin(), signs_.end(), std::greater<>());
}

bool ParitySeq::is_odd(Node i) const
{
    check_node(*this, i);
    return signs_[i.value - 1] != signs_[i.value];
}

ParitySeq ParitySeq::swap_at(Node i) const
{
    if (!is_odd(i))
        throw Error(ErrorKind::SameParity, "s_" + std::to_string(i.value) + " = s_" +
                                               std::to_string(i.value + 1) + " in " + to_string());
    auto signs = signs_;
    std::swap(signs[i.value - 1], signs[i.value]);
    return ParitySeq(std::move(signs));
}

std::string ParitySeq::to_string() const
{
    std::string out;
    for (int s : signs_)
        out += s == 1 ? '+' : '-';
    return out;
}

void check_node(const ParitySeq& s, Node i)
{
    if (i.value < 1 || i.value > s.node_count())
        throw Error(ErrorKind::IndexOutOfRange, "node " + std::to_string(i.value) +
                                                    " outside 1.." + std::to_string(s.node_count()));
}

void check_position(const ParitySeq& s, Position j)
{
    if (j.value < 1 || j.value > s.size())
        throw Error(ErrorKind::IndexOutOfRange,
                    "position " + std::to_string(j.value) + " outside 1.." + std::to_string(s.size()));
}

std::vector<int> kappa(const ParitySeq& s)
{
    const auto& sg = s.signs();
    std::vector<int> k(sg.size());
    k[0] = sg[0] == 1 ? 0 : -1;
    for (std::size_t i = 1; i < sg.size(); ++i)
        k[i] = sg[i] == sg[i - 1] ? k[i - 1] + sg[i] : k[i - 1];
    return k;
}

int alpha_pair(const ParitySeq& s, Node i, Position j)
{
    check_node(s, i);
    check_position(s, j);
    int value = 0;
    if (j.value == i.value)
        value += s.signs()[i.value - 1];
    if (j.value == i.value + 1)
        value -= s.signs()[i.value];
    return value;
}

std::string Letter::to_string() const
{
    // combining overline marks barred letters
    return std::to_string(index) + (barred ? "\xCC\x84" : "");
}

std::vector<Letter> alphabet_order(const ParitySeq& s)
{
    std::vector<Letter> out;
    int unbarred = 0;
    int barred = 0;
    for (int sign : s.signs())
        out.push_back(sign == 1 ? Letter{false, ++unbarred} : Letter{true, ++barred});
    return out;
}

// ------------------------------------------------------------------ Partition

Partition::Partition(std::vector<int> parts) : parts_(std::move(parts))
{
    while (!parts_.empty() && parts_.back() == 0)
        parts_.pop_back();
    for (std::size_t i = 0; i < parts_.size(); ++i) {
        if (parts_[i] < 0)
            throw Error(ErrorKind::InvalidPartition, "negative part in partition");
        if (i > 0 && parts_[i] > parts_[i - 1])
            throw Error(ErrorKind::InvalidPartition, "partition parts must be weakly decreasing");
    }
}

Partition Partition::parse(std::string_view text)
{
    std::vector<int> parts;
    std::string token;
    std::istringstream is{std::string(text)};
    while (std::getline(is, token, ',')) {
        token.erase(std::remove_if(token.begin(), token.end(), ::isspace), token.end());
        if (token.empty())
            continue;
        if (!std::all_of(token.begin(), token.end(), ::isdigit) || token.size() > 6)
            throw Error(ErrorKind::InvalidPartition, "bad partition part '" + token + "'");
        parts.push_back(std::stoi(token));
    }
    return Partition(std::move(parts));
}

namespace {

void partitions_rec(int remaining, int max_part, std::vector<int>& current, std::vector<Partition>& out)
{
    if (remaining == 0) {
        out.emplace_back(current);
        return;
    }
    for (int p = std::min(remaining, max_part); p >= 1; --p) {
        current.push_back(p);
        partitions_rec(remaining - p, p, current, out);
        current.pop_back();
    }
}

}  // namespace

std::vector<Partition> Partition::all_of(int l)
{
    std::vector<Partition> out;
    std::vector<int> current;
    partitions_rec(l, l, current, out);
    return out;
}

int Partition::part(int i) const
{
    return i >= 1 && i <= length() ? parts_[i - 1] : 0;
}

int Partition::size() const { return std::accumulate(parts_.begin(), parts_.end(), 0); }

Partition Partition::conjugate() const
{
    std::vector<int> out(parts_.empty() ? 0 : parts_.front(), 0);
    for (int p : parts_)
        for (int j = 0; j < p; ++j)
            ++out[j];
    return Partition(std::move(out));
}

std::string Partition::to_string() const
{
    std::string out;
    for (std::size_t i = 0; i < parts_.size(); ++i)
        out += (i ? "," : "") + std::to_string(parts_[i]);
    return out;
}

bool is_hook(const Partition& lambda, int m, int n) { return lambda.part(m + 1) <= n; }

// ------------------------------------------------------------------- GlWeight

GlWeight GlWeight::simple_root(int size, Node i)
{
    GlWeight w = zero(size);
    w.coords.at(i.value - 1) = 1;
    w.coords.at(i.value) = -1;
    return w;
}

GlWeight& GlWeight::operator+=(const GlWeight& rhs)
{
    for (std::size_t k = 0; k < coords.size(); ++k)
        coords[k] += rhs.coords.at(k);
    return *this;
}

GlWeight& GlWeight::operator-=(const GlWeight& rhs)
{
    for (std::size_t k = 0; k < coords.size(); ++k)
        coords[k] -= rhs.coords.at(k);
    return *this;
}

GlWeight operator*(const Rational& c, GlWeight w)
{
    for (auto& x : w.coords)
        x *= c;
    return w;
}

std::string GlWeight::to_string() const
{
    std::string out = "(";
    for (std::size_t k = 0; k < coords.size(); ++k)
        out += (k ? ", " : "") + coords[k].to_string();
    return out + ")";
}

GlWeight hook_weight(const ParitySeq& s, const Partition& lambda)
{
    if (!is_hook(lambda, s.m(), s.n()))
        throw Error(ErrorKind::NotHook, "(" + lambda.to_string() + ") is not a (" + std::to_string(s.m()) +
                                            "|" + std::to_string(s.n()) + ")-hook partition");
    const Partition conj = lambda.conjugate();
    GlWeight w = GlWeight::zero(s.size());
    int plus_seen = 0;
    int minus_seen = 0;
    for (int pos = 1; pos <= s.size(); ++pos) {
        if (s.signs()[pos - 1] == 1) {
            // i-th plus sign: a_i = minus signs before it; a_i + i = pos
            const int i = ++plus_seen;
            w.coords[pos - 1] += std::max(lambda.part(i) - minus_seen, 0);
        } else {
            const int j = ++minus_seen;
            w.coords[pos - 1] += std::max(conj.part(j) - plus_seen, 0);
        }
    }
    return w;
}

bool weight_leq(const GlWeight& nu, const GlWeight& mu)
{
    if (nu.size() != mu.size())
        throw Error(ErrorKind::IndexOutOfRange, "weights of different dimension");
    Rational partial;
    for (int k = 0; k < mu.size(); ++k) {
        partial += mu.coords[k] - nu.coords[k];
        if (k + 1 < mu.size() && (partial.sign() < 0 || !partial.is_integer()))
            return false;
    }
    return partial.is_zero();
}

}  // namespace oddref
