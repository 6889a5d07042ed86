#include "skh/burau.hpp"

#include <cstdlib>
#include <stdexcept>

namespace skh {

PolyMatrix burau_generator(int strands, int index, int sign) {
    if (index < 1 || index > strands - 1) throw std::invalid_argument("generator index out of range");
    if (sign != 1 && sign != -1) throw std::invalid_argument("sign must be +1 or -1");
    PolyMatrix m = PolyMatrix::identity(strands);
    int a = index - 1;
    if (sign > 0) {
        m.at(a, a) = LaurentPolynomial(1) - LaurentPolynomial::t();
        m.at(a, a + 1) = LaurentPolynomial::t();
        m.at(a + 1, a) = LaurentPolynomial(1);
        m.at(a + 1, a + 1) = LaurentPolynomial();
    } else {
        m.at(a, a) = LaurentPolynomial();
        m.at(a, a + 1) = LaurentPolynomial(1);
        m.at(a + 1, a) = LaurentPolynomial::t(-1);
        m.at(a + 1, a + 1) = LaurentPolynomial(1) - LaurentPolynomial::t(-1);
    }
    return m;
}

PolyMatrix burau_matrix(const BraidWord& w) {
    PolyMatrix m = PolyMatrix::identity(w.strands());
    for (int l : w.letters()) m = m * burau_generator(w.strands(), std::abs(l), l > 0 ? 1 : -1);
    return m;
}

LaurentPolynomial burau_trace(const BraidWord& w) { return burau_matrix(w).trace(); }

PolyMatrix burau_sigma1_power(int strands, int k) {
    if (strands < 2) throw std::invalid_argument("need at least 2 strands");
    if (k < 1) throw std::invalid_argument("power must be positive");
    auto alt_sum = [](int lo, int hi, bool shift_sign) {
        // sum_{m=lo}^{hi} (-1)^(m + (shift_sign ? 1 : 0)) t^m
        LaurentPolynomial s;
        for (int m = lo; m <= hi; ++m) {
            int sign = ((m + (shift_sign ? 1 : 0)) % 2 == 0) ? 1 : -1;
            s += LaurentPolynomial::monomial(sign, 0, m);
        }
        return s;
    };
    PolyMatrix m = PolyMatrix::identity(strands);
    m.at(0, 0) = alt_sum(0, k, false);
    m.at(0, 1) = alt_sum(1, k, true);
    m.at(1, 0) = alt_sum(0, k - 1, false);
    m.at(1, 1) = alt_sum(1, k - 1, true);
    return m;
}

}  // namespace skh
