#ifndef QWEINGARTEN_DIAGRAMS_HPP
#define QWEINGARTEN_DIAGRAMS_HPP

#include <compare>
#include <cstddef>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace qweingarten {

// Thrown when a request would exceed a configured size guard. Enumeration
// never truncates silently.
class ResourceLimitError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

struct EnumerationLimits {
    int max_half_size = 10;
};

class ColorWord;

/*
 * A non-crossing pair partition of {1, ..., 2k}, i.e. a Temperley-Lieb
 * diagram in Frobenius form. Stored as the partner array: partner(i) is the
 * point joined to i by a string. Points are 1-based.
 *
 * Pairings compare lexicographically on the partner array, which is the
 * canonical order used to index Gram and Weingarten matrices.
 */
class Pairing {
public:
    // the empty pairing on zero points
    Pairing() = default;

    // Validates the involution and non-crossing invariants; throws
    // std::invalid_argument on violation.
    explicit Pairing(std::vector<int> partners);

    // Builds a pairing from its strings (a, b), 1-based.
    static Pairing from_strings(std::span<const std::pair<int, int>> strings);

    std::size_t num_points() const { return partner_.size(); }
    int half_size() const { return static_cast<int>(partner_.size() / 2); }

    int partner(int point) const { return partner_[static_cast<std::size_t>(point - 1)]; }
    std::span<const int> partners() const { return partner_; }

    // strings (a, b) with a < b, ordered by a
    std::vector<std::pair<int, int>> strings() const;

    std::string to_string() const;

    friend auto operator<=>(const Pairing&, const Pairing&) = default;
    friend bool operator==(const Pairing&, const Pairing&) = default;

private:
    struct Unchecked {};
    Pairing(std::vector<int> partner, Unchecked) : partner_(std::move(partner)) {}
    friend std::vector<Pairing> enumerate_pairings(int, const EnumerationLimits&);
    friend std::vector<Pairing> enumerate_colored_pairings(const ColorWord&,
                                                           const EnumerationLimits&);

    std::vector<int> partner_;
};

enum class Color : char { alpha = 'a', beta = 'b' };

/// A word over {alpha, beta}. On the command line alpha is 'a' and beta 'b'.
class ColorWord {
public:
    ColorWord() = default;
    explicit ColorWord(std::vector<Color> letters) : letters_(std::move(letters)) {}

    // Parses letters 'a'/'b'; throws std::invalid_argument on anything else.
    static ColorWord parse(std::string_view text);
    static ColorWord all_alpha(std::size_t length);
    // (alpha beta)^k
    static ColorWord alternating(int k);

    std::size_t length() const { return letters_.size(); }
    bool empty() const { return letters_.empty(); }
    Color operator[](std::size_t i) const { return letters_[i]; }
    std::span<const Color> letters() const { return letters_; }

    std::size_t count(Color c) const;
    bool balanced() const { return count(Color::alpha) == count(Color::beta); }

    std::string to_string() const;

    friend auto operator<=>(const ColorWord&, const ColorWord&) = default;
    friend bool operator==(const ColorWord&, const ColorWord&) = default;

private:
    std::vector<Color> letters_;
};

/// Row or column multi-index of a monomial; entries are 1-based.
class MultiIndex {
public:
    MultiIndex() = default;
    explicit MultiIndex(std::vector<int> entries) : entries_(std::move(entries)) {}

    // comma-separated positive integers, e.g. "1,2,2,1"
    static MultiIndex parse(std::string_view text);
    static MultiIndex constant(std::size_t length, int value);

    std::size_t length() const { return entries_.size(); }
    int operator[](std::size_t i) const { return entries_[i]; }
    std::span<const int> entries() const { return entries_; }

    // throws std::out_of_range unless every entry lies in [1, n]
    void check_range(int n) const;

    std::string to_string() const;

    friend bool operator==(const MultiIndex&, const MultiIndex&) = default;

private:
    std::vector<int> entries_;
};

// All non-crossing pairings of 2k points in canonical order; exactly C_k.
std::vector<Pairing> enumerate_pairings(int k, const EnumerationLimits& limits = {});

// D(a): non-crossing pairings of the letters of `word` where every string
// joins an alpha to a beta. Empty when the word is unbalanced.
std::vector<Pairing> enumerate_colored_pairings(const ColorWord& word,
                                                const EnumerationLimits& limits = {});

// Number of closed loops in the superposition of p and q.
int loop_count(const Pairing& p, const Pairing& q);

// k - loop_count(p, q); a metric on D(k).
int loop_distance(const Pairing& p, const Pairing& q);

// true iff every string of p joins two equal entries of `index`.
bool delta_symbol(const Pairing& p, const MultiIndex& index);

// true iff p and q share all strings but two each. Distance-one pairs are
// expected to be exactly these; kept separate from loop_distance so the
// characterization can be tested rather than assumed.
bool differ_in_two_strings(const Pairing& p, const Pairing& q);

} // namespace qweingarten

#endif
