#include "qweingarten/diagrams.hpp"

#include <algorithm>
#include <charconv>
#include <numeric>
#include <sstream>

namespace qweingarten {

namespace {

class DisjointSet {
public:
    explicit DisjointSet(std::size_t size) : parent_(size), rank_(size, 0) {
        std::iota(parent_.begin(), parent_.end(), std::size_t{0});
    }

    std::size_t find(std::size_t x) {
        while (parent_[x] != x) {
            parent_[x] = parent_[parent_[x]];
            x = parent_[x];
        }
        return x;
    }

    void unite(std::size_t a, std::size_t b) {
        a = find(a);
        b = find(b);
        if (a == b) {
            return;
        }
        if (rank_[a] < rank_[b]) {
            std::swap(a, b);
        }
        parent_[b] = a;
        if (rank_[a] == rank_[b]) {
            ++rank_[a];
        }
    }

private:
    std::vector<std::size_t> parent_;
    std::vector<int> rank_;
};

struct Interval {
    int lo; // first point, 0-based
    int hi; // one past the last point
};

// Fills the pending intervals by matching the first point of the last one to
// each admissible later point, then recursing on the enclosed and trailing
// sub-intervals. `admissible(a, b)` filters strings (a, b), 0-based.
template <class Admissible, class Emit>
void match_intervals(std::vector<int>& partner, std::vector<Interval>& pending,
                     const Admissible& admissible, const Emit& emit) {
    if (pending.empty()) {
        emit(partner);
        return;
    }
    Interval top = pending.back();
    pending.pop_back();
    if (top.lo == top.hi) {
        match_intervals(partner, pending, admissible, emit);
    } else {
        for (int b = top.lo + 1; b < top.hi; b += 2) {
            if (!admissible(top.lo, b)) {
                continue;
            }
            partner[static_cast<std::size_t>(top.lo)] = b + 1;
            partner[static_cast<std::size_t>(b)] = top.lo + 1;
            std::size_t depth = pending.size();
            pending.push_back({b + 1, top.hi});
            pending.push_back({top.lo + 1, b});
            match_intervals(partner, pending, admissible, emit);
            pending.resize(depth);
        }
    }
    pending.push_back(top);
}

void check_guard(int k, const EnumerationLimits& limits) {
    if (k > limits.max_half_size) {
        throw ResourceLimitError("pairing enumeration: half-size " + std::to_string(k) +
                                 " exceeds the configured limit " +
                                 std::to_string(limits.max_half_size));
    }
}

} // namespace

Pairing::Pairing(std::vector<int> partners) : partner_(std::move(partners)) {
    const int size = static_cast<int>(partner_.size());
    if (size % 2 != 0) {
        throw std::invalid_argument("pairing: odd number of points");
    }
    for (int i = 1; i <= size; ++i) {
        int j = partner(i);
        if (j < 1 || j > size) {
            throw std::invalid_argument("pairing: partner out of range at point " +
                                        std::to_string(i));
        }
        if (j == i) {
            throw std::invalid_argument("pairing: fixed point " + std::to_string(i));
        }
        if (partner(j) != i) {
            throw std::invalid_argument("pairing: not an involution at point " +
                                        std::to_string(i));
        }
    }
    // a < b < c < d with (a, c) and (b, d) both strings
    for (int a = 1; a <= size; ++a) {
        int c = partner(a);
        if (c < a) {
            continue;
        }
        for (int b = a + 1; b < c; ++b) {
            int d = partner(b);
            if (d > c || d < a) {
                throw std::invalid_argument("pairing: strings (" + std::to_string(a) + "," +
                                            std::to_string(c) + ") and (" +
                                            std::to_string(std::min(b, d)) + "," +
                                            std::to_string(std::max(b, d)) + ") cross");
            }
        }
    }
}

Pairing Pairing::from_strings(std::span<const std::pair<int, int>> strings) {
    std::vector<int> partner(2 * strings.size(), 0);
    const int size = static_cast<int>(partner.size());
    for (auto [a, b] : strings) {
        if (a < 1 || b < 1 || a > size || b > size) {
            throw std::invalid_argument("pairing: string endpoint out of range");
        }
        auto& pa = partner[static_cast<std::size_t>(a - 1)];
        auto& pb = partner[static_cast<std::size_t>(b - 1)];
        if (pa != 0 || pb != 0) {
            throw std::invalid_argument("pairing: point used by two strings");
        }
        pa = b;
        pb = a;
    }
    return Pairing(std::move(partner));
}

std::vector<std::pair<int, int>> Pairing::strings() const {
    std::vector<std::pair<int, int>> out;
    out.reserve(partner_.size() / 2);
    for (int i = 1; i <= static_cast<int>(partner_.size()); ++i) {
        if (partner(i) > i) {
            out.emplace_back(i, partner(i));
        }
    }
    return out;
}

std::string Pairing::to_string() const {
    std::ostringstream out;
    out << '{';
    bool first = true;
    for (auto [a, b] : strings()) {
        if (!first) {
            out << ',';
        }
        first = false;
        out << '(' << a << ',' << b << ')';
    }
    out << '}';
    return out.str();
}

ColorWord ColorWord::parse(std::string_view text) {
    std::vector<Color> letters;
    letters.reserve(text.size());
    for (char c : text) {
        switch (c) {
        case 'a':
            letters.push_back(Color::alpha);
            break;
        case 'b':
            letters.push_back(Color::beta);
            break;
        default:
            throw std::invalid_argument(std::string("color word: unexpected letter '") + c +
                                        "' (expected 'a' or 'b')");
        }
    }
    return ColorWord(std::move(letters));
}

ColorWord ColorWord::all_alpha(std::size_t length) {
    return ColorWord(std::vector<Color>(length, Color::alpha));
}

ColorWord ColorWord::alternating(int k) {
    std::vector<Color> letters;
    for (int i = 0; i < k; ++i) {
        letters.push_back(Color::alpha);
        letters.push_back(Color::beta);
    }
    return ColorWord(std::move(letters));
}

std::size_t ColorWord::count(Color c) const {
    return static_cast<std::size_t>(std::count(letters_.begin(), letters_.end(), c));
}

std::string ColorWord::to_string() const {
    std::string out;
    for (Color c : letters_) {
        out.push_back(static_cast<char>(c));
    }
    return out;
}

MultiIndex MultiIndex::parse(std::string_view text) {
    std::vector<int> entries;
    if (text.empty()) {
        return MultiIndex();
    }
    std::size_t start = 0;
    while (true) {
        std::size_t comma = text.find(',', start);
        std::string_view field = text.substr(start, comma == std::string_view::npos
                                                        ? std::string_view::npos
                                                        : comma - start);
        int value = 0;
        auto [ptr, ec] = std::from_chars(field.data(), field.data() + field.size(), value);
        if (field.empty() || ec != std::errc() || ptr != field.data() + field.size()) {
            throw std::invalid_argument("multi-index: malformed entry '" + std::string(field) +
                                        "'");
        }
        if (value < 1) {
            throw std::invalid_argument("multi-index: entries are 1-based, got " +
                                        std::to_string(value));
        }
        entries.push_back(value);
        if (comma == std::string_view::npos) {
            break;
        }
        start = comma + 1;
    }
    return MultiIndex(std::move(entries));
}

MultiIndex MultiIndex::constant(std::size_t length, int value) {
    return MultiIndex(std::vector<int>(length, value));
}

void MultiIndex::check_range(int n) const {
    for (std::size_t t = 0; t < entries_.size(); ++t) {
        if (entries_[t] < 1 || entries_[t] > n) {
            throw std::out_of_range("multi-index entry " + std::to_string(entries_[t]) +
                                    " at position " + std::to_string(t + 1) +
                                    " outside [1, " + std::to_string(n) + "]");
        }
    }
}

std::string MultiIndex::to_string() const {
    std::string out;
    for (std::size_t t = 0; t < entries_.size(); ++t) {
        if (t) {
            out.push_back(',');
        }
        out += std::to_string(entries_[t]);
    }
    return out;
}

std::vector<Pairing> enumerate_pairings(int k, const EnumerationLimits& limits) {
    if (k < 0) {
        throw std::invalid_argument("enumerate_pairings: negative half-size");
    }
    check_guard(k, limits);

    std::vector<Pairing> out;
    std::vector<int> partner(static_cast<std::size_t>(2 * k), 0);
    std::vector<Interval> pending{{0, 2 * k}};
    match_intervals(
        partner, pending, [](int, int) { return true; },
        [&](const std::vector<int>& filled) { out.push_back(Pairing(filled, Pairing::Unchecked{})); });
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<Pairing> enumerate_colored_pairings(const ColorWord& word,
                                                const EnumerationLimits& limits) {
    if (!word.balanced()) {
        return {};
    }
    const int size = static_cast<int>(word.length());
    check_guard(size / 2, limits);

    // prefix[i] = #alpha - #beta among the first i letters; an interval can
    // only be filled when it is balanced
    std::vector<int> prefix(static_cast<std::size_t>(size) + 1, 0);
    for (int i = 0; i < size; ++i) {
        prefix[static_cast<std::size_t>(i) + 1] =
            prefix[static_cast<std::size_t>(i)] + (word[static_cast<std::size_t>(i)] == Color::alpha ? 1 : -1);
    }
    auto admissible = [&](int a, int b) {
        auto ua = static_cast<std::size_t>(a);
        auto ub = static_cast<std::size_t>(b);
        return word[ua] != word[ub] && prefix[ub] == prefix[ua + 1];
    };

    std::vector<Pairing> out;
    std::vector<int> partner(static_cast<std::size_t>(size), 0);
    std::vector<Interval> pending{{0, size}};
    match_intervals(partner, pending, admissible, [&](const std::vector<int>& filled) {
        out.push_back(Pairing(filled, Pairing::Unchecked{}));
    });
    std::sort(out.begin(), out.end());
    return out;
}

int loop_count(const Pairing& p, const Pairing& q) {
    if (p.num_points() != q.num_points()) {
        throw std::invalid_argument("loop_count: pairings on " + std::to_string(p.num_points()) +
                                    " and " + std::to_string(q.num_points()) + " points");
    }
    const std::size_t size = p.num_points();
    DisjointSet components(size);
    for (std::size_t i = 0; i < size; ++i) {
        components.unite(i, static_cast<std::size_t>(p.partners()[i] - 1));
        components.unite(i, static_cast<std::size_t>(q.partners()[i] - 1));
    }
    int loops = 0;
    for (std::size_t i = 0; i < size; ++i) {
        if (components.find(i) == i) {
            ++loops;
        }
    }
    return loops;
}

int loop_distance(const Pairing& p, const Pairing& q) {
    return p.half_size() - loop_count(p, q);
}

bool delta_symbol(const Pairing& p, const MultiIndex& index) {
    if (index.length() != p.num_points()) {
        throw std::invalid_argument("delta_symbol: index of length " +
                                    std::to_string(index.length()) + " for a pairing on " +
                                    std::to_string(p.num_points()) + " points");
    }
    for (auto [a, b] : p.strings()) {
        if (index[static_cast<std::size_t>(a - 1)] != index[static_cast<std::size_t>(b - 1)]) {
            return false;
        }
    }
    return true;
}

bool differ_in_two_strings(const Pairing& p, const Pairing& q) {
    if (p.num_points() != q.num_points()) {
        throw std::invalid_argument("differ_in_two_strings: size mismatch");
    }
    int unmatched = 0;
    for (auto [a, b] : p.strings()) {
        if (q.partner(a) != b) {
            ++unmatched;
        }
    }
    return unmatched == 2;
}

} // namespace qweingarten
