#include "qweingarten/oracles.hpp"

#include <algorithm>
#include <deque>
#include <stdexcept>

namespace qweingarten::oracles {

namespace {

void extend_matchings(std::vector<int>& partner, std::vector<std::vector<int>>& out) {
    auto first_free = std::find(partner.begin(), partner.end(), 0);
    if (first_free == partner.end()) {
        out.push_back(partner);
        return;
    }
    int a = static_cast<int>(first_free - partner.begin());
    for (int b = a + 1; b < static_cast<int>(partner.size()); ++b) {
        if (partner[static_cast<std::size_t>(b)] != 0) {
            continue;
        }
        partner[static_cast<std::size_t>(a)] = b + 1;
        partner[static_cast<std::size_t>(b)] = a + 1;
        extend_matchings(partner, out);
        partner[static_cast<std::size_t>(a)] = 0;
        partner[static_cast<std::size_t>(b)] = 0;
    }
}

bool crosses(const std::vector<int>& partner) {
    const int size = static_cast<int>(partner.size());
    for (int a = 1; a <= size; ++a) {
        for (int b = a + 1; b <= size; ++b) {
            int c = partner[static_cast<std::size_t>(a - 1)];
            int d = partner[static_cast<std::size_t>(b - 1)];
            if (a < b && b < c && c < d) {
                return true;
            }
        }
    }
    return false;
}

} // namespace

BigInt catalan_number(unsigned k) {
    BigInt binomial;
    mpz_bin_uiui(binomial.get_mpz_t(), 2 * k, k);
    return binomial / (k + 1);
}

MomentSequence semicircle_moments(unsigned max_power) {
    MomentSequence out{MomentLabel::semicircle, {}};
    for (unsigned power = 0; power <= max_power; ++power) {
        out.values.push_back(power % 2 ? BigRational(0) : BigRational(catalan_number(power / 2)));
    }
    return out;
}

MomentSequence uniform01_moments(unsigned max_k) {
    MomentSequence out{MomentLabel::uniform01, {}};
    for (unsigned k = 0; k <= max_k; ++k) {
        out.values.emplace_back(1, k + 1);
    }
    return out;
}

std::vector<std::vector<int>> all_matchings(unsigned k) {
    std::vector<int> partner(2 * k, 0);
    std::vector<std::vector<int>> out;
    extend_matchings(partner, out);
    return out;
}

std::vector<std::vector<int>> brute_force_pairings(unsigned k) {
    std::vector<std::vector<int>> out;
    for (auto& m : all_matchings(k)) {
        if (!crosses(m)) {
            out.push_back(std::move(m));
        }
    }
    std::sort(out.begin(), out.end());
    return out;
}

BigInt circular_star_moments(const ColorWord& word) {
    if (word.length() > 14) {
        throw std::length_error("circular_star_moments: word longer than 14 letters");
    }
    if (word.length() % 2) {
        return 0;
    }
    BigInt count = 0;
    for (const auto& m : all_matchings(static_cast<unsigned>(word.length() / 2))) {
        if (crosses(m)) {
            continue;
        }
        bool colored = true;
        for (std::size_t i = 0; i < m.size(); ++i) {
            if (word[i] == word[static_cast<std::size_t>(m[i] - 1)]) {
                colored = false;
                break;
            }
        }
        if (colored) {
            ++count;
        }
    }
    return count;
}

int brute_force_loops(const Pairing& p, const Pairing& q) {
    if (p.num_points() != q.num_points()) {
        throw std::invalid_argument("brute_force_loops: size mismatch");
    }
    const int size = static_cast<int>(p.num_points());
    std::vector<bool> seen(static_cast<std::size_t>(size) + 1, false);
    int loops = 0;
    for (int start = 1; start <= size; ++start) {
        if (seen[static_cast<std::size_t>(start)]) {
            continue;
        }
        ++loops;
        int x = start;
        do {
            seen[static_cast<std::size_t>(x)] = true;
            int y = p.partner(x);
            seen[static_cast<std::size_t>(y)] = true;
            x = q.partner(y);
        } while (x != start);
    }
    return loops;
}

std::vector<IndexPath> breadth_first_paths(unsigned k, std::size_t from, std::size_t to,
                                           int max_distance) {
    std::vector<Pairing> nodes;
    for (auto& m : brute_force_pairings(k)) {
        nodes.emplace_back(std::move(m));
    }
    const std::size_t size = nodes.size();
    std::vector<int> distance(size * size);
    for (std::size_t a = 0; a < size; ++a) {
        for (std::size_t b = 0; b < size; ++b) {
            distance[a * size + b] = static_cast<int>(k) - brute_force_loops(nodes[a], nodes[b]);
        }
    }

    // each step costs at least 1, so no path is longer than max_distance
    std::vector<IndexPath> out;
    std::deque<IndexPath> frontier{IndexPath{{from}, 0}};
    while (!frontier.empty()) {
        IndexPath path = std::move(frontier.front());
        frontier.pop_front();
        if (path.nodes.back() == to) {
            out.push_back(path);
        }
        for (std::size_t next = 0; next < size; ++next) {
            std::size_t last = path.nodes.back();
            if (next == last) {
                continue;
            }
            int d = path.distance + distance[last * size + next];
            if (d > max_distance) {
                continue;
            }
            IndexPath longer = path;
            longer.nodes.push_back(next);
            longer.distance = d;
            frontier.push_back(std::move(longer));
        }
    }
    return out;
}

std::vector<BigRational> inverse_2x2(const BigRational& a, const BigRational& b,
                                     const BigRational& c, const BigRational& d) {
    BigRational det = a * d - b * c;
    if (sgn(det) == 0) {
        throw std::domain_error("inverse_2x2: singular");
    }
    return {d / det, -b / det, -c / det, a / det};
}

} // namespace qweingarten::oracles
