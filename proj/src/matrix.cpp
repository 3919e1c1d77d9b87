#include "qweingarten/matrix.hpp"

#include <utility>

namespace qweingarten {

namespace {

void check_same_basis(const RationalMatrix& a, const RationalMatrix& b, const char* what) {
    if (!a.basis().empty() && !b.basis().empty() && a.basis() != b.basis()) {
        throw std::invalid_argument(std::string(what) + ": basis mismatch ('" + a.basis() +
                                    "' vs '" + b.basis() + "')");
    }
}

} // namespace

SingularMatrixError::SingularMatrixError(std::size_t pivot_step, std::size_t dimension)
    : std::runtime_error("singular matrix: no nonzero pivot in column " +
                         std::to_string(pivot_step) + " of " + std::to_string(dimension) +
                         " (rank deficient)"),
      pivot_step_(pivot_step) {}

RationalMatrix::RationalMatrix(std::size_t rows, std::size_t cols, std::string basis)
    : rows_(rows), cols_(cols), basis_(std::move(basis)), data_(rows * cols) {}

RationalMatrix RationalMatrix::identity(std::size_t size, std::string basis) {
    RationalMatrix out(size, size, std::move(basis));
    for (std::size_t i = 0; i < size; ++i) {
        out(i, i) = 1;
    }
    return out;
}

bool RationalMatrix::is_symmetric() const {
    if (!square()) {
        return false;
    }
    for (std::size_t r = 0; r < rows_; ++r) {
        for (std::size_t c = r + 1; c < cols_; ++c) {
            if ((*this)(r, c) != (*this)(c, r)) {
                return false;
            }
        }
    }
    return true;
}

RationalMatrix operator*(const RationalMatrix& a, const RationalMatrix& b) {
    if (a.cols() != b.rows()) {
        throw std::invalid_argument("matrix product: dimension mismatch");
    }
    check_same_basis(a, b, "matrix product");
    RationalMatrix out(a.rows(), b.cols(), a.basis().empty() ? b.basis() : a.basis());
    BigRational term;
    for (std::size_t r = 0; r < a.rows(); ++r) {
        for (std::size_t t = 0; t < a.cols(); ++t) {
            const BigRational& left = a(r, t);
            if (sgn(left) == 0) {
                continue;
            }
            for (std::size_t c = 0; c < b.cols(); ++c) {
                term = left * b(t, c);
                out(r, c) += term;
            }
        }
    }
    return out;
}

RationalMatrix invert(const RationalMatrix& m) {
    if (!m.square()) {
        throw std::invalid_argument("invert: matrix is " + std::to_string(m.rows()) + "x" +
                                    std::to_string(m.cols()));
    }
    const std::size_t size = m.rows();
    RationalMatrix work = m;
    RationalMatrix inverse = RationalMatrix::identity(size, m.basis());
    BigRational factor;
    BigRational term;

    for (std::size_t col = 0; col < size; ++col) {
        std::size_t pivot = col;
        while (pivot < size && sgn(work(pivot, col)) == 0) {
            ++pivot;
        }
        if (pivot == size) {
            throw SingularMatrixError(col, size);
        }
        if (pivot != col) {
            for (std::size_t c = 0; c < size; ++c) {
                std::swap(work(pivot, c), work(col, c));
                std::swap(inverse(pivot, c), inverse(col, c));
            }
        }

        BigRational scale = 1 / work(col, col);
        for (std::size_t c = col; c < size; ++c) {
            work(col, c) *= scale;
        }
        for (std::size_t c = 0; c < size; ++c) {
            inverse(col, c) *= scale;
        }

        for (std::size_t r = 0; r < size; ++r) {
            if (r == col || sgn(work(r, col)) == 0) {
                continue;
            }
            factor = work(r, col);
            for (std::size_t c = col; c < size; ++c) {
                term = factor * work(col, c);
                work(r, c) -= term;
            }
            for (std::size_t c = 0; c < size; ++c) {
                if (sgn(inverse(col, c)) != 0) {
                    term = factor * inverse(col, c);
                    inverse(r, c) -= term;
                }
            }
        }
    }
    return inverse;
}

BigRational trace_product(const RationalMatrix& a, const RationalMatrix& b) {
    if (!a.square() || !b.square() || a.rows() != b.rows()) {
        throw std::invalid_argument("trace_product: incompatible dimensions " +
                                    std::to_string(a.rows()) + "x" + std::to_string(a.cols()) +
                                    " and " + std::to_string(b.rows()) + "x" +
                                    std::to_string(b.cols()));
    }
    if (a.basis() != b.basis()) {
        throw std::invalid_argument("trace_product: basis mismatch ('" + a.basis() + "' vs '" +
                                    b.basis() + "')");
    }
    BigRational total = 0;
    BigRational term;
    for (std::size_t p = 0; p < a.rows(); ++p) {
        for (std::size_t q = 0; q < a.cols(); ++q) {
            term = a(p, q) * b(q, p);
            total += term;
        }
    }
    return total;
}

BigRational entry_sum(const RationalMatrix& m) {
    BigRational total = 0;
    for (const auto& entry : m.data()) {
        total += entry;
    }
    return total;
}

} // namespace qweingarten
