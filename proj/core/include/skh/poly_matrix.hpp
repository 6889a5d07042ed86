#pragma once

// Dense matrices over the Laurent ring, plus plain integer matrices for
// evaluated results.  Sizes here are small (strand counts and state-block
// dimensions), so no attempt is made at sparse representations.

#include "skh/laurent.hpp"

#include <vector>

namespace skh {

class PolyMatrix {
public:
    PolyMatrix() = default;
    PolyMatrix(int rows, int cols);
    static PolyMatrix identity(int n);

    int rows() const { return rows_; }
    int cols() const { return cols_; }
    LaurentPolynomial& at(int r, int c) { return data_[static_cast<std::size_t>(r) * cols_ + c]; }
    const LaurentPolynomial& at(int r, int c) const {
        return data_[static_cast<std::size_t>(r) * cols_ + c];
    }

    PolyMatrix operator*(const PolyMatrix& o) const;
    PolyMatrix operator+(const PolyMatrix& o) const;
    bool operator==(const PolyMatrix& o) const;
    bool operator!=(const PolyMatrix& o) const { return !(*this == o); }

    PolyMatrix scaled(const LaurentPolynomial& s) const;
    PolyMatrix substituted(Var v, const Monomial& r) const;
    LaurentPolynomial trace() const;

    // Cofactor expansion; fine for the strand-count sizes used here.
    LaurentPolynomial determinant() const;

    // d * this * d^-1 for a diagonal d whose diagonal entries are nonzero
    // monomials.  Coefficient divisions must be exact, otherwise throws.
    PolyMatrix conjugated_by_diagonal(const PolyMatrix& d) const;

    // One line per row: "[p, p, p]".
    std::string str() const;

private:
    int rows_ = 0, cols_ = 0;
    std::vector<LaurentPolynomial> data_;
};

struct IntMatrix {
    int rows = 0, cols = 0;
    std::vector<Int> data;

    IntMatrix() = default;
    IntMatrix(int r, int c) : rows(r), cols(c), data(static_cast<std::size_t>(r) * c) {}
    Int& at(int r, int c) { return data[static_cast<std::size_t>(r) * cols + c]; }
    const Int& at(int r, int c) const { return data[static_cast<std::size_t>(r) * cols + c]; }
    bool operator==(const IntMatrix& o) const = default;
    std::string str() const;
};

// Entrywise exact evaluation at t = value (matrix must not involve q);
// throws if any entry fails to evaluate to an integer.
IntMatrix evaluate_at_t(const PolyMatrix& m, const Int& value);

}  // namespace skh
