#ifndef QWEINGARTEN_POLY_HPP
#define QWEINGARTEN_POLY_HPP

#include "qweingarten/matrix.hpp"
#include "qweingarten/rational.hpp"

#include <cstddef>
#include <string>
#include <vector>

namespace qweingarten {

// Integer polynomial in n; coefficient t multiplies n^t. Trailing zeros are
// trimmed, so the zero polynomial has no coefficients.
class PolyInN {
public:
    PolyInN() = default;
    explicit PolyInN(std::vector<BigInt> coefficients);

    static PolyInN monomial(std::size_t power, const BigInt& coefficient = 1);

    // -1 for the zero polynomial
    int degree() const { return static_cast<int>(coefficients_.size()) - 1; }
    const std::vector<BigInt>& coefficients() const { return coefficients_; }
    BigInt coefficient(std::size_t power) const;

    BigInt evaluate(const BigInt& n) const;

    std::string to_string() const;

    PolyInN& operator+=(const PolyInN& other);
    friend PolyInN operator+(PolyInN a, const PolyInN& b) { return a += b; }
    friend PolyInN operator*(const PolyInN& a, const PolyInN& b);
    friend bool operator==(const PolyInN&, const PolyInN&) = default;

private:
    void trim();

    std::vector<BigInt> coefficients_;
};

// Dense square-or-rectangular matrix of PolyInN. Supports products and
// evaluation at an integer n; symbolic inversion is deliberately absent.
class PolyMatrix {
public:
    PolyMatrix() = default;
    PolyMatrix(std::size_t rows, std::size_t cols, std::string basis = {});

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    const std::string& basis() const { return basis_; }

    PolyInN& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
    const PolyInN& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

    RationalMatrix evaluate(const BigInt& n) const;

    friend bool operator==(const PolyMatrix&, const PolyMatrix&) = default;

private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::string basis_;
    std::vector<PolyInN> data_;
};

PolyMatrix operator*(const PolyMatrix& a, const PolyMatrix& b);

} // namespace qweingarten

#endif
