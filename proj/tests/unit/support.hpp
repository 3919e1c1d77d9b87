#ifndef QWEINGARTEN_TEST_SUPPORT_HPP
#define QWEINGARTEN_TEST_SUPPORT_HPP

#include "qweingarten/rational.hpp"

// mpq_class(a, b) does not reduce; comparisons need canonical form
inline qweingarten::BigRational frac(long num, long den) {
    qweingarten::BigRational out(num, den);
    out.canonicalize();
    return out;
}

#endif
