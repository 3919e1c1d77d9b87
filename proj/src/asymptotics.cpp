#include "qweingarten/asymptotics.hpp"

#include <algorithm>
#include <array>
#include <stdexcept>

namespace qweingarten {

namespace {

// ways[d][parity][v]: paths from `source` to v of distance d and length
// parity (0 even, 1 odd)
using WaysTable = std::vector<std::array<std::vector<BigInt>, 2>>;

WaysTable path_counts_from(const DistanceMatrix& distances, std::size_t source, int max_d) {
    const std::size_t size = distances.size();
    WaysTable ways(static_cast<std::size_t>(max_d) + 1);
    for (auto& by_parity : ways) {
        by_parity[0].assign(size, 0);
        by_parity[1].assign(size, 0);
    }
    ways[0][0][source] = 1;
    for (int d = 1; d <= max_d; ++d) {
        auto& here = ways[static_cast<std::size_t>(d)];
        for (std::size_t v = 0; v < size; ++v) {
            for (std::size_t u = 0; u < size; ++u) {
                int step = distances(u, v);
                if (u == v || step > d) {
                    continue;
                }
                const auto& before = ways[static_cast<std::size_t>(d - step)];
                here[0][v] += before[1][u];
                here[1][v] += before[0][u];
            }
        }
    }
    return ways;
}

void check_order(int order) {
    if (order < 0) {
        throw std::invalid_argument("expansion order must be non-negative");
    }
}

} // namespace

DistanceMatrix::DistanceMatrix(int k, const EnumerationLimits& limits)
    : k_(k), basis_(enumerate_pairings(k, limits)) {
    const std::size_t size = basis_.size();
    distances_.assign(size * size, 0);
    for (std::size_t p = 0; p < size; ++p) {
        for (std::size_t q = p + 1; q < size; ++q) {
            int d = loop_distance(basis_[p], basis_[q]);
            distances_[p * size + q] = d;
            distances_[q * size + p] = d;
        }
    }
}

std::size_t DistanceMatrix::index_of(const Pairing& p) const {
    auto it = std::lower_bound(basis_.begin(), basis_.end(), p);
    if (it == basis_.end() || *it != p) {
        throw std::invalid_argument("pairing " + p.to_string() + " is not in D(" +
                                    std::to_string(k_) + ")");
    }
    return static_cast<std::size_t>(it - basis_.begin());
}

std::vector<DiagramPath> enumerate_paths(int k, const Pairing& p, const Pairing& q,
                                         int max_distance, const PathLimits& limits) {
    check_order(max_distance);
    DistanceMatrix distances(k, limits.diagrams);
    const std::size_t source = distances.index_of(p);
    const std::size_t target = distances.index_of(q);

    std::vector<DiagramPath> out;
    std::vector<std::size_t> stack{source};

    // depth-first; a branch survives only if it can still reach the target
    // within budget (triangle inequality)
    auto visit = [&](auto&& self, int so_far) -> void {
        std::size_t current = stack.back();
        if (current == target) {
            if (out.size() >= limits.max_paths) {
                throw ResourceLimitError("path enumeration exceeds " +
                                         std::to_string(limits.max_paths) + " paths");
            }
            DiagramPath path;
            path.distance = so_far;
            for (std::size_t node : stack) {
                path.nodes.push_back(distances.basis()[node]);
            }
            out.push_back(std::move(path));
        }
        for (std::size_t next = 0; next < distances.size(); ++next) {
            if (next == current) {
                continue;
            }
            int reached = so_far + distances(current, next);
            if (reached + distances(next, target) > max_distance) {
                continue;
            }
            stack.push_back(next);
            self(self, reached);
            stack.pop_back();
        }
    };
    if (distances(source, target) <= max_distance) {
        visit(visit, 0);
    }
    return out;
}

PathCountTable::PathCountTable(int k, int max_distance, const EnumerationLimits& limits)
    : distances_(k, limits), max_d_(max_distance) {
    check_order(max_distance);
    const std::size_t size = distances_.size();
    const std::size_t slots = size * size * (static_cast<std::size_t>(max_d_) + 1);
    even_.assign(slots, 0);
    odd_.assign(slots, 0);
    for (std::size_t p = 0; p < size; ++p) {
        WaysTable ways = path_counts_from(distances_, p, max_d_);
        for (std::size_t q = 0; q < size; ++q) {
            for (int d = 0; d <= max_d_; ++d) {
                even_[slot(p, q, d)] = ways[static_cast<std::size_t>(d)][0][q];
                odd_[slot(p, q, d)] = ways[static_cast<std::size_t>(d)][1][q];
            }
        }
    }
}

std::size_t PathCountTable::slot(std::size_t p, std::size_t q, int d) const {
    if (d < 0 || d > max_d_) {
        throw std::out_of_range("path count distance " + std::to_string(d) + " outside [0, " +
                                std::to_string(max_d_) + "]");
    }
    const std::size_t size = distances_.size();
    return (p * size + q) * (static_cast<std::size_t>(max_d_) + 1) + static_cast<std::size_t>(d);
}

BigInt PathCountTable::total_even(int d) const {
    BigInt total = 0;
    for (std::size_t p = 0; p < distances_.size(); ++p) {
        for (std::size_t q = 0; q < distances_.size(); ++q) {
            total += even(p, q, d);
        }
    }
    return total;
}

BigInt PathCountTable::total_odd(int d) const {
    BigInt total = 0;
    for (std::size_t p = 0; p < distances_.size(); ++p) {
        for (std::size_t q = 0; q < distances_.size(); ++q) {
            total += odd(p, q, d);
        }
    }
    return total;
}

InverseNSeries weingarten_series(int k, const Pairing& p, const Pairing& q, int order,
                                 const EnumerationLimits& limits) {
    check_order(order);
    DistanceMatrix distances(k, limits);
    const std::size_t source = distances.index_of(p);
    const std::size_t target = distances.index_of(q);
    WaysTable ways = path_counts_from(distances, source, order);
    InverseNSeries out(static_cast<std::size_t>(order));
    for (int d = 0; d <= order; ++d) {
        const auto& at = ways[static_cast<std::size_t>(d)];
        out[static_cast<std::size_t>(d)] = BigRational(at[0][target] - at[1][target]);
    }
    return out;
}

InverseNSeries moment_series(int k, int order, const EnumerationLimits& limits) {
    PathCountTable table(k, order, limits);
    InverseNSeries out(static_cast<std::size_t>(order));
    for (int d = 0; d <= order; ++d) {
        out[static_cast<std::size_t>(d)] = BigRational(table.total_even(d) - table.total_odd(d));
    }
    return out;
}

BigInt neighbor_count(int k, const EnumerationLimits& limits) {
    DistanceMatrix distances(k, limits);
    BigInt count = 0;
    for (std::size_t p = 0; p < distances.size(); ++p) {
        for (std::size_t q = 0; q < distances.size(); ++q) {
            if (distances(p, q) == 1) {
                ++count;
            }
        }
    }
    return count;
}

PowerSeries sqrt_one_minus_four_z_squared(std::size_t order) {
    // coefficient of z^{2m} is binom(1/2, m) (-4)^m
    PowerSeries out(order);
    BigRational term = 1;
    const BigRational half(1, 2);
    for (std::size_t m = 0; 2 * m <= order; ++m) {
        if (m > 0) {
            term *= (half - static_cast<unsigned long>(m - 1));
            term /= static_cast<unsigned long>(m);
            term *= -4;
        }
        out[2 * m] = term;
    }
    return out;
}

PowerSeries catalan_generating_series(std::size_t order) {
    PowerSeries one_plus_root = PowerSeries::constant(1, order) + sqrt_one_minus_four_z_squared(order);
    return BigRational(2) * one_plus_root.reciprocal();
}

PowerSeries neighbor_generating_series(std::size_t order) {
    PowerSeries root = sqrt_one_minus_four_z_squared(order);
    PowerSeries one_plus_root = PowerSeries::constant(1, order) + root;
    PowerSeries denominator = one_plus_root.pow(4) * root;
    return (BigRational(32) * denominator.reciprocal()).shifted(4).truncated(order);
}

PowerSeries neighbor_series_from_catalan(std::size_t order) {
    // C' loses one order, so start one higher
    PowerSeries c_high = catalan_generating_series(order + 1);
    PowerSeries c = c_high.truncated(order);
    PowerSeries z_dc = c_high.derivative().shifted(1).truncated(order);
    PowerSeries n = BigRational(2) * c.pow(3) * (c + z_dc);
    return n.shifted(4).truncated(order);
}

StieltjesSeries stieltjes_series(std::size_t z_order, bool include_second_order) {
    if (z_order % 2 != 0) {
        throw std::invalid_argument("stieltjes_series: z order must be even");
    }
    StieltjesSeries out;
    out.z_order = z_order;
    out.second_order = include_second_order;
    PowerSeries leading = catalan_generating_series(z_order);
    PowerSeries correction =
        include_second_order ? neighbor_generating_series(z_order) : PowerSeries(z_order);
    const std::size_t n_order = include_second_order ? 1 : 0;
    for (std::size_t m = 0; m <= z_order; ++m) {
        InverseNSeries coefficient(n_order);
        coefficient[0] = leading[m];
        if (include_second_order) {
            // distance-one paths have odd length, hence the minus sign
            coefficient[1] = -correction[m];
        }
        out.coefficients.push_back(std::move(coefficient));
    }
    return out;
}

} // namespace qweingarten
