#include "qweingarten/poly.hpp"

#include <sstream>
#include <stdexcept>

namespace qweingarten {

PolyInN::PolyInN(std::vector<BigInt> coefficients) : coefficients_(std::move(coefficients)) {
    trim();
}

PolyInN PolyInN::monomial(std::size_t power, const BigInt& coefficient) {
    std::vector<BigInt> coefficients(power + 1, 0);
    coefficients[power] = coefficient;
    return PolyInN(std::move(coefficients));
}

BigInt PolyInN::coefficient(std::size_t power) const {
    return power < coefficients_.size() ? coefficients_[power] : BigInt(0);
}

BigInt PolyInN::evaluate(const BigInt& n) const {
    // Horner
    BigInt out = 0;
    for (auto it = coefficients_.rbegin(); it != coefficients_.rend(); ++it) {
        out = out * n + *it;
    }
    return out;
}

std::string PolyInN::to_string() const {
    if (coefficients_.empty()) {
        return "0";
    }
    std::ostringstream out;
    bool first = true;
    for (std::size_t t = coefficients_.size(); t-- > 0;) {
        const BigInt& c = coefficients_[t];
        if (c == 0) {
            continue;
        }
        if (!first) {
            out << (sgn(c) < 0 ? " - " : " + ");
        } else if (sgn(c) < 0) {
            out << '-';
        }
        first = false;
        BigInt magnitude = abs(c);
        if (t == 0 || magnitude != 1) {
            out << magnitude.get_str();
        }
        if (t >= 1) {
            out << 'n';
        }
        if (t >= 2) {
            out << '^' << t;
        }
    }
    return out.str();
}

PolyInN& PolyInN::operator+=(const PolyInN& other) {
    if (other.coefficients_.size() > coefficients_.size()) {
        coefficients_.resize(other.coefficients_.size(), 0);
    }
    for (std::size_t t = 0; t < other.coefficients_.size(); ++t) {
        coefficients_[t] += other.coefficients_[t];
    }
    trim();
    return *this;
}

PolyInN operator*(const PolyInN& a, const PolyInN& b) {
    if (a.coefficients_.empty() || b.coefficients_.empty()) {
        return PolyInN();
    }
    std::vector<BigInt> out(a.coefficients_.size() + b.coefficients_.size() - 1, 0);
    for (std::size_t s = 0; s < a.coefficients_.size(); ++s) {
        for (std::size_t t = 0; t < b.coefficients_.size(); ++t) {
            out[s + t] += a.coefficients_[s] * b.coefficients_[t];
        }
    }
    return PolyInN(std::move(out));
}

void PolyInN::trim() {
    while (!coefficients_.empty() && coefficients_.back() == 0) {
        coefficients_.pop_back();
    }
}

PolyMatrix::PolyMatrix(std::size_t rows, std::size_t cols, std::string basis)
    : rows_(rows), cols_(cols), basis_(std::move(basis)), data_(rows * cols) {}

RationalMatrix PolyMatrix::evaluate(const BigInt& n) const {
    RationalMatrix out(rows_, cols_, basis_);
    for (std::size_t r = 0; r < rows_; ++r) {
        for (std::size_t c = 0; c < cols_; ++c) {
            out(r, c) = BigRational((*this)(r, c).evaluate(n));
        }
    }
    return out;
}

PolyMatrix operator*(const PolyMatrix& a, const PolyMatrix& b) {
    if (a.cols() != b.rows()) {
        throw std::invalid_argument("polynomial matrix product: dimension mismatch");
    }
    if (!a.basis().empty() && !b.basis().empty() && a.basis() != b.basis()) {
        throw std::invalid_argument("polynomial matrix product: basis mismatch");
    }
    PolyMatrix out(a.rows(), b.cols(), a.basis().empty() ? b.basis() : a.basis());
    for (std::size_t r = 0; r < a.rows(); ++r) {
        for (std::size_t t = 0; t < a.cols(); ++t) {
            for (std::size_t c = 0; c < b.cols(); ++c) {
                out(r, c) += a(r, t) * b(t, c);
            }
        }
    }
    return out;
}

} // namespace qweingarten
