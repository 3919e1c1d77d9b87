#ifndef QWEINGARTEN_SERIES_HPP
#define QWEINGARTEN_SERIES_HPP

#include "qweingarten/rational.hpp"

#include <algorithm>
#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

namespace qweingarten {

/*
 * Truncated formal power series with exact rational coefficients.
 *
 * A series of order D stores exactly D + 1 coefficients c_0..c_D and stands
 * for sum c_d x^d + O(x^{D+1}). Binary operations return the minimum of the
 * operand orders and never read past either truncation.
 *
 * The tag only distinguishes the variable at the type level, so a series in
 * 1/n cannot be multiplied into a series in z by accident.
 */
template <class Variable>
class TruncatedSeries {
public:
    explicit TruncatedSeries(std::size_t order = 0) : coefficients_(order + 1) {}

    TruncatedSeries(std::vector<BigRational> coefficients, std::size_t order)
        : coefficients_(std::move(coefficients)) {
        if (coefficients_.size() > order + 1) {
            throw std::invalid_argument("series: more coefficients than the truncation order");
        }
        coefficients_.resize(order + 1);
    }

    static TruncatedSeries constant(const BigRational& value, std::size_t order) {
        TruncatedSeries out(order);
        out.coefficients_[0] = value;
        return out;
    }

    // x^power, or the zero series when power exceeds the order
    static TruncatedSeries monomial(std::size_t power, std::size_t order,
                                    const BigRational& coefficient = 1) {
        TruncatedSeries out(order);
        if (power <= order) {
            out.coefficients_[power] = coefficient;
        }
        return out;
    }

    std::size_t order() const { return coefficients_.size() - 1; }
    const std::vector<BigRational>& coefficients() const { return coefficients_; }
    const BigRational& operator[](std::size_t d) const { return coefficients_.at(d); }
    BigRational& operator[](std::size_t d) { return coefficients_.at(d); }

    TruncatedSeries truncated(std::size_t order) const {
        if (order > this->order()) {
            throw std::invalid_argument("series: cannot raise the truncation order");
        }
        return TruncatedSeries(
            std::vector<BigRational>(coefficients_.begin(),
                                     coefficients_.begin() + static_cast<std::ptrdiff_t>(order + 1)),
            order);
    }

    BigRational evaluate(const BigRational& x) const {
        BigRational out = 0;
        for (auto it = coefficients_.rbegin(); it != coefficients_.rend(); ++it) {
            out = out * x + *it;
        }
        return out;
    }

    // d/dx; loses one order of precision
    TruncatedSeries derivative() const {
        if (order() == 0) {
            throw std::invalid_argument("series: derivative of an order-0 series is unknown");
        }
        TruncatedSeries out(order() - 1);
        for (std::size_t d = 1; d <= order(); ++d) {
            out.coefficients_[d - 1] = coefficients_[d] * static_cast<unsigned long>(d);
        }
        return out;
    }

    // multiplication by x^shift; gains `shift` orders
    TruncatedSeries shifted(std::size_t shift) const {
        TruncatedSeries out(order() + shift);
        std::copy(coefficients_.begin(), coefficients_.end(),
                  out.coefficients_.begin() + static_cast<std::ptrdiff_t>(shift));
        return out;
    }

    // 1 / this; requires a nonzero constant term
    TruncatedSeries reciprocal() const {
        if (sgn(coefficients_[0]) == 0) {
            throw std::domain_error("series: reciprocal of a series with zero constant term");
        }
        TruncatedSeries out(order());
        BigRational inv0 = 1 / coefficients_[0];
        out.coefficients_[0] = inv0;
        for (std::size_t d = 1; d <= order(); ++d) {
            BigRational acc = 0;
            for (std::size_t t = 1; t <= d; ++t) {
                acc += coefficients_[t] * out.coefficients_[d - t];
            }
            out.coefficients_[d] = -acc * inv0;
        }
        return out;
    }

    TruncatedSeries pow(unsigned exponent) const {
        TruncatedSeries out = constant(1, order());
        for (unsigned t = 0; t < exponent; ++t) {
            out *= *this;
        }
        return out;
    }

    TruncatedSeries& operator+=(const TruncatedSeries& other) {
        clip(other.order());
        for (std::size_t d = 0; d <= order(); ++d) {
            coefficients_[d] += other.coefficients_[d];
        }
        return *this;
    }

    TruncatedSeries& operator-=(const TruncatedSeries& other) {
        clip(other.order());
        for (std::size_t d = 0; d <= order(); ++d) {
            coefficients_[d] -= other.coefficients_[d];
        }
        return *this;
    }

    TruncatedSeries& operator*=(const TruncatedSeries& other) {
        std::size_t order = std::min(this->order(), other.order());
        std::vector<BigRational> out(order + 1);
        for (std::size_t s = 0; s <= order; ++s) {
            if (sgn(coefficients_[s]) == 0) {
                continue;
            }
            for (std::size_t t = 0; s + t <= order; ++t) {
                out[s + t] += coefficients_[s] * other.coefficients_[t];
            }
        }
        coefficients_ = std::move(out);
        return *this;
    }

    TruncatedSeries& operator*=(const BigRational& scalar) {
        for (auto& c : coefficients_) {
            c *= scalar;
        }
        return *this;
    }

    friend TruncatedSeries operator+(TruncatedSeries a, const TruncatedSeries& b) { return a += b; }
    friend TruncatedSeries operator-(TruncatedSeries a, const TruncatedSeries& b) { return a -= b; }
    friend TruncatedSeries operator*(TruncatedSeries a, const TruncatedSeries& b) { return a *= b; }
    friend TruncatedSeries operator*(TruncatedSeries a, const BigRational& s) { return a *= s; }
    friend TruncatedSeries operator*(const BigRational& s, TruncatedSeries a) { return a *= s; }
    friend TruncatedSeries operator-(TruncatedSeries a) { return a *= BigRational(-1); }

    friend bool operator==(const TruncatedSeries&, const TruncatedSeries&) = default;

private:
    void clip(std::size_t order) {
        if (order < this->order()) {
            coefficients_.resize(order + 1);
        }
    }

    std::vector<BigRational> coefficients_;
};

struct InverseNVariable {};
struct FormalZVariable {};

// Series in n^{-1}: coefficient d multiplies n^{-d}.
using InverseNSeries = TruncatedSeries<InverseNVariable>;
// Series in a formal variable z.
using PowerSeries = TruncatedSeries<FormalZVariable>;

// Value of the truncated series at a concrete n.
inline BigRational evaluate_at_n(const InverseNSeries& series, const BigInt& n) {
    if (n == 0) {
        throw std::domain_error("series in 1/n evaluated at n = 0");
    }
    BigRational x(BigInt(1), n);
    x.canonicalize();
    return series.evaluate(x);
}

template <class Variable>
std::string to_string(const TruncatedSeries<Variable>& series) {
    std::string out = "[";
    for (std::size_t d = 0; d <= series.order(); ++d) {
        if (d) {
            out += ", ";
        }
        out += to_string(series[d]);
    }
    return out + "]";
}

} // namespace qweingarten

#endif
