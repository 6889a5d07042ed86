#include "skh/poly_matrix.hpp"

#include <sstream>
#include <stdexcept>

namespace skh {

PolyMatrix::PolyMatrix(int rows, int cols)
    : rows_(rows), cols_(cols), data_(static_cast<std::size_t>(rows) * cols) {
    if (rows < 0 || cols < 0) throw std::invalid_argument("negative matrix size");
}

PolyMatrix PolyMatrix::identity(int n) {
    PolyMatrix m(n, n);
    for (int i = 0; i < n; ++i) m.at(i, i) = LaurentPolynomial(1);
    return m;
}

PolyMatrix PolyMatrix::operator*(const PolyMatrix& o) const {
    if (cols_ != o.rows_) throw std::invalid_argument("matrix size mismatch in product");
    PolyMatrix r(rows_, o.cols_);
    for (int i = 0; i < rows_; ++i)
        for (int k = 0; k < cols_; ++k) {
            const LaurentPolynomial& a = at(i, k);
            if (a.is_zero()) continue;
            for (int j = 0; j < o.cols_; ++j) {
                if (o.at(k, j).is_zero()) continue;
                r.at(i, j) += a * o.at(k, j);
            }
        }
    return r;
}

PolyMatrix PolyMatrix::operator+(const PolyMatrix& o) const {
    if (rows_ != o.rows_ || cols_ != o.cols_)
        throw std::invalid_argument("matrix size mismatch in sum");
    PolyMatrix r(rows_, cols_);
    for (std::size_t i = 0; i < data_.size(); ++i) r.data_[i] = data_[i] + o.data_[i];
    return r;
}

bool PolyMatrix::operator==(const PolyMatrix& o) const {
    return rows_ == o.rows_ && cols_ == o.cols_ && data_ == o.data_;
}

PolyMatrix PolyMatrix::scaled(const LaurentPolynomial& s) const {
    PolyMatrix r(rows_, cols_);
    for (std::size_t i = 0; i < data_.size(); ++i) r.data_[i] = data_[i] * s;
    return r;
}

PolyMatrix PolyMatrix::substituted(Var v, const Monomial& repl) const {
    PolyMatrix r(rows_, cols_);
    for (std::size_t i = 0; i < data_.size(); ++i) r.data_[i] = data_[i].substituted(v, repl);
    return r;
}

LaurentPolynomial PolyMatrix::trace() const {
    if (rows_ != cols_) throw std::invalid_argument("trace of non-square matrix");
    LaurentPolynomial s;
    for (int i = 0; i < rows_; ++i) s += at(i, i);
    return s;
}

LaurentPolynomial PolyMatrix::determinant() const {
    if (rows_ != cols_) throw std::invalid_argument("determinant of non-square matrix");
    if (rows_ == 0) return LaurentPolynomial(1);
    if (rows_ == 1) return at(0, 0);
    LaurentPolynomial det;
    for (int c = 0; c < cols_; ++c) {
        if (at(0, c).is_zero()) continue;
        PolyMatrix minor(rows_ - 1, cols_ - 1);
        for (int i = 1; i < rows_; ++i) {
            int jc = 0;
            for (int j = 0; j < cols_; ++j) {
                if (j == c) continue;
                minor.at(i - 1, jc++) = at(i, j);
            }
        }
        LaurentPolynomial term = at(0, c) * minor.determinant();
        if (c % 2) det -= term;
        else det += term;
    }
    return det;
}

namespace {

Monomial single_term(const LaurentPolynomial& p) {
    if (p.terms().size() != 1) throw std::invalid_argument("diagonal entry is not a monomial");
    const auto& [e, c] = *p.terms().begin();
    return Monomial{c, e.first, e.second};
}

}  // namespace

PolyMatrix PolyMatrix::conjugated_by_diagonal(const PolyMatrix& d) const {
    if (rows_ != cols_) throw std::invalid_argument("conjugation of non-square matrix");
    if (d.rows_ != rows_ || d.cols_ != cols_)
        throw std::invalid_argument("conjugator size mismatch");
    std::vector<Monomial> diag;
    for (int i = 0; i < rows_; ++i) {
        for (int j = 0; j < cols_; ++j)
            if (i != j && !d.at(i, j).is_zero())
                throw std::invalid_argument("conjugator is not diagonal");
        diag.push_back(single_term(d.at(i, i)));
    }
    PolyMatrix r(rows_, cols_);
    for (int i = 0; i < rows_; ++i)
        for (int j = 0; j < cols_; ++j) {
            if (at(i, j).is_zero()) continue;
            // entry -> (d_i / d_j) * entry, with exact coefficient division
            LaurentPolynomial num =
                LaurentPolynomial::monomial(diag[i].coeff,
                                            checked_add(diag[i].q_exp, -diag[j].q_exp),
                                            checked_add(diag[i].t_exp, -diag[j].t_exp)) *
                at(i, j);
            LaurentPolynomial out;
            for (const auto& [e, c] : num.terms()) {
                Int quot, rem;
                boost::multiprecision::divide_qr(c, diag[j].coeff, quot, rem);
                if (rem != 0)
                    throw std::domain_error("inexact coefficient division in conjugation");
                out += LaurentPolynomial::monomial(quot, e.first, e.second);
            }
            r.at(i, j) = out;
        }
    return r;
}

std::string PolyMatrix::str() const {
    std::ostringstream os;
    for (int i = 0; i < rows_; ++i) {
        os << '[';
        for (int j = 0; j < cols_; ++j) {
            if (j) os << ", ";
            os << at(i, j).str();
        }
        os << ']';
        if (i + 1 < rows_) os << '\n';
    }
    return os.str();
}

std::string IntMatrix::str() const {
    std::ostringstream os;
    for (int i = 0; i < rows; ++i) {
        os << '[';
        for (int j = 0; j < cols; ++j) {
            if (j) os << ", ";
            os << at(i, j);
        }
        os << ']';
        if (i + 1 < rows) os << '\n';
    }
    return os.str();
}

IntMatrix evaluate_at_t(const PolyMatrix& m, const Int& value) {
    IntMatrix r(m.rows(), m.cols());
    for (int i = 0; i < m.rows(); ++i)
        for (int j = 0; j < m.cols(); ++j) r.at(i, j) = m.at(i, j).evaluate_at_t(value);
    return r;
}

}  // namespace skh
