#ifndef QWEINGARTEN_MATRIX_HPP
#define QWEINGARTEN_MATRIX_HPP

#include "qweingarten/rational.hpp"

#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

namespace qweingarten {

class SingularMatrixError : public std::runtime_error {
public:
    SingularMatrixError(std::size_t pivot_step, std::size_t dimension);

    // elimination column at which no nonzero pivot was found (0-based)
    std::size_t pivot_step() const { return pivot_step_; }

private:
    std::size_t pivot_step_;
};

/*
 * Dense row-major matrix of exact rationals.
 *
 * `basis` names the diagram list the rows and columns are indexed by (e.g.
 * "orthogonal:3" for D(3)). Products and traces between matrices with
 * different non-empty bases are rejected.
 */
class RationalMatrix {
public:
    RationalMatrix() = default;
    RationalMatrix(std::size_t rows, std::size_t cols, std::string basis = {});

    static RationalMatrix identity(std::size_t size, std::string basis = {});

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    bool square() const { return rows_ == cols_; }
    const std::string& basis() const { return basis_; }

    BigRational& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
    const BigRational& operator()(std::size_t r, std::size_t c) const {
        return data_[r * cols_ + c];
    }

    const std::vector<BigRational>& data() const { return data_; }

    bool is_symmetric() const;

    friend bool operator==(const RationalMatrix&, const RationalMatrix&) = default;

private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::string basis_;
    std::vector<BigRational> data_;
};

RationalMatrix operator*(const RationalMatrix& a, const RationalMatrix& b);

// Exact inverse by Gauss-Jordan elimination; the pivot is the first nonzero
// entry at or below the diagonal. Throws SingularMatrixError.
RationalMatrix invert(const RationalMatrix& m);

// Tr(a b) = sum over (p, q) of a(p, q) b(q, p), without forming a b.
BigRational trace_product(const RationalMatrix& a, const RationalMatrix& b);

// Sum of all entries.
BigRational entry_sum(const RationalMatrix& m);

} // namespace qweingarten

#endif
