#pragma once

// Exact Laurent polynomials with integer coefficients in up to two
// variables, q and t.  Coefficients are arbitrary precision, exponents are
// machine integers with overflow checks.  A polynomial is kept canonical at
// all times: no zero coefficient is ever stored, so equality is equality of
// the underlying term maps.

#include <boost/multiprecision/cpp_int.hpp>

#include <map>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>

namespace skh {

using Int = boost::multiprecision::cpp_int;

enum class Var { q, t };

// A single term c * q^q_exp * t^t_exp, used as substitution payload.
struct Monomial {
    Int coeff;
    int q_exp = 0;
    int t_exp = 0;
};

inline int checked_add(int a, int b) {
    long long r = static_cast<long long>(a) + b;
    if (r < -2147483647LL || r > 2147483647LL)
        throw std::overflow_error("exponent overflow");
    return static_cast<int>(r);
}

inline int checked_mul(int a, int b) {
    long long r = static_cast<long long>(a) * b;
    if (r < -2147483647LL || r > 2147483647LL)
        throw std::overflow_error("exponent overflow");
    return static_cast<int>(r);
}

class LaurentPolynomial {
public:
    // exponent pair (q, t); map ordering = lexicographic = canonical term order
    using Exponents = std::pair<int, int>;
    using Terms = std::map<Exponents, Int>;

    LaurentPolynomial() = default;
    LaurentPolynomial(Int c);        // constant
    LaurentPolynomial(long c) : LaurentPolynomial(Int(c)) {}
    LaurentPolynomial(int c) : LaurentPolynomial(Int(c)) {}

    static LaurentPolynomial monomial(Int c, int q_exp, int t_exp);
    static LaurentPolynomial q(int e = 1) { return monomial(1, e, 0); }
    static LaurentPolynomial t(int e = 1) { return monomial(1, 0, e); }

    // Inverse of str(); accepts the canonical rendering plus benign
    // variations (extra spaces, omitted '*').
    static LaurentPolynomial parse(std::string_view text);

    bool is_zero() const { return terms_.empty(); }
    const Terms& terms() const { return terms_; }
    Int coefficient(int q_exp, int t_exp) const;

    LaurentPolynomial& operator+=(const LaurentPolynomial& o);
    LaurentPolynomial& operator-=(const LaurentPolynomial& o);
    LaurentPolynomial& operator*=(const LaurentPolynomial& o);
    friend LaurentPolynomial operator+(LaurentPolynomial a, const LaurentPolynomial& b) { return a += b; }
    friend LaurentPolynomial operator-(LaurentPolynomial a, const LaurentPolynomial& b) { return a -= b; }
    friend LaurentPolynomial operator*(const LaurentPolynomial& a, const LaurentPolynomial& b);
    LaurentPolynomial operator-() const;
    bool operator==(const LaurentPolynomial& o) const { return terms_ == o.terms_; }
    bool operator!=(const LaurentPolynomial& o) const { return terms_ != o.terms_; }

    // Replace every occurrence of v by the monomial r.  Exact: a negative
    // exponent of v requires |r.coeff| == 1, otherwise this throws.
    LaurentPolynomial substituted(Var v, const Monomial& r) const;

    // The terms whose exponent of v equals e (exponent kept in place).
    LaurentPolynomial part(Var v, int e) const;

    // Exact evaluation at t = value for a polynomial not involving q.
    // value must be nonzero; throws if the result is not an integer.
    Int evaluate_at_t(const Int& value) const;

    bool involves(Var v) const;
    // Extreme exponent of v over all terms; polynomial must be nonzero.
    int min_exponent(Var v) const;
    int max_exponent(Var v) const;

    // Canonical rendering, terms in ascending (q,t) exponent order,
    // e.g. "-t^-3 + 2*t^-2 - 4*t^-1 + 6 - 5*t + 3*t^2 - 2*t^3 + t^4".
    std::string str() const;

private:
    void add_term(const Exponents& e, const Int& c);
    Terms terms_;
};

}  // namespace skh
