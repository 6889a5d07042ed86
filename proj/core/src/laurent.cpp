#include "skh/laurent.hpp"

#include <cctype>
#include <cstdlib>
#include <sstream>

namespace skh {

LaurentPolynomial::LaurentPolynomial(Int c) {
    if (c != 0) terms_[{0, 0}] = std::move(c);
}

LaurentPolynomial LaurentPolynomial::monomial(Int c, int q_exp, int t_exp) {
    LaurentPolynomial p;
    if (c != 0) p.terms_[{q_exp, t_exp}] = std::move(c);
    return p;
}

Int LaurentPolynomial::coefficient(int q_exp, int t_exp) const {
    auto it = terms_.find({q_exp, t_exp});
    return it == terms_.end() ? Int(0) : it->second;
}

void LaurentPolynomial::add_term(const Exponents& e, const Int& c) {
    auto it = terms_.find(e);
    if (it == terms_.end()) {
        if (c != 0) terms_.emplace(e, c);
        return;
    }
    it->second += c;
    if (it->second == 0) terms_.erase(it);
}

LaurentPolynomial& LaurentPolynomial::operator+=(const LaurentPolynomial& o) {
    for (const auto& [e, c] : o.terms_) add_term(e, c);
    return *this;
}

LaurentPolynomial& LaurentPolynomial::operator-=(const LaurentPolynomial& o) {
    for (const auto& [e, c] : o.terms_) add_term(e, -c);
    return *this;
}

LaurentPolynomial operator*(const LaurentPolynomial& a, const LaurentPolynomial& b) {
    LaurentPolynomial r;
    for (const auto& [ea, ca] : a.terms_)
        for (const auto& [eb, cb] : b.terms_)
            r.add_term({checked_add(ea.first, eb.first), checked_add(ea.second, eb.second)},
                       ca * cb);
    return r;
}

LaurentPolynomial& LaurentPolynomial::operator*=(const LaurentPolynomial& o) {
    *this = *this * o;
    return *this;
}

LaurentPolynomial LaurentPolynomial::operator-() const {
    LaurentPolynomial r;
    for (const auto& [e, c] : terms_) r.terms_[e] = -c;
    return r;
}

LaurentPolynomial LaurentPolynomial::substituted(Var v, const Monomial& r) const {
    if (r.coeff == 0) throw std::invalid_argument("substitution by zero monomial");
    LaurentPolynomial out;
    for (const auto& [e, c] : terms_) {
        int ev = (v == Var::q) ? e.first : e.second;
        int keep = (v == Var::q) ? e.second : e.first;
        Int f;
        if (ev >= 0) {
            f = 1;
            for (int m = 0; m < ev; ++m) f *= r.coeff;
        } else {
            if (r.coeff != 1 && r.coeff != -1)
                throw std::domain_error("negative exponent needs a unit coefficient");
            f = (r.coeff == -1 && (ev % 2)) ? -1 : 1;
        }
        int nq = checked_mul(r.q_exp, ev);
        int nt = checked_mul(r.t_exp, ev);
        Exponents ne = (v == Var::q) ? Exponents{nq, checked_add(nt, keep)}
                                     : Exponents{checked_add(nq, keep), nt};
        out.add_term(ne, c * f);
    }
    return out;
}

LaurentPolynomial LaurentPolynomial::part(Var v, int e) const {
    LaurentPolynomial out;
    for (const auto& [ex, c] : terms_)
        if (((v == Var::q) ? ex.first : ex.second) == e) out.terms_[ex] = c;
    return out;
}

Int LaurentPolynomial::evaluate_at_t(const Int& value) const {
    if (value == 0) throw std::domain_error("evaluation at t = 0");
    if (involves(Var::q)) throw std::domain_error("polynomial involves q");
    if (terms_.empty()) return 0;
    int lo = min_exponent(Var::t);
    if (lo > 0) lo = 0;
    Int num = 0;
    for (const auto& [e, c] : terms_) {
        Int p = 1;
        for (int m = 0; m < e.second - lo; ++m) p *= value;
        num += c * p;
    }
    Int den = 1;
    for (int m = 0; m < -lo; ++m) den *= value;
    Int quot, rem;
    boost::multiprecision::divide_qr(num, den, quot, rem);
    if (rem != 0) throw std::domain_error("evaluation is not an integer");
    return quot;
}

bool LaurentPolynomial::involves(Var v) const {
    for (const auto& [e, c] : terms_)
        if (((v == Var::q) ? e.first : e.second) != 0) return true;
    return false;
}

int LaurentPolynomial::min_exponent(Var v) const {
    if (terms_.empty()) throw std::domain_error("zero polynomial has no exponents");
    bool first = true;
    int best = 0;
    for (const auto& [e, c] : terms_) {
        int ev = (v == Var::q) ? e.first : e.second;
        if (first || ev < best) best = ev;
        first = false;
    }
    return best;
}

int LaurentPolynomial::max_exponent(Var v) const {
    if (terms_.empty()) throw std::domain_error("zero polynomial has no exponents");
    bool first = true;
    int best = 0;
    for (const auto& [e, c] : terms_) {
        int ev = (v == Var::q) ? e.first : e.second;
        if (first || ev > best) best = ev;
        first = false;
    }
    return best;
}

std::string LaurentPolynomial::str() const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [e, c] : terms_) {
        bool neg = c < 0;
        if (first) {
            if (neg) os << '-';
        } else {
            os << (neg ? " - " : " + ");
        }
        first = false;
        Int mag = neg ? Int(-c) : c;
        std::string vars;
        if (e.first != 0) {
            vars += 'q';
            if (e.first != 1) vars += '^' + std::to_string(e.first);
        }
        if (e.second != 0) {
            if (!vars.empty()) vars += '*';
            vars += 't';
            if (e.second != 1) vars += '^' + std::to_string(e.second);
        }
        if (vars.empty()) {
            os << mag;
        } else {
            if (mag != 1) os << mag << '*';
            os << vars;
        }
    }
    return os.str();
}

namespace {

struct Cursor {
    std::string_view s;
    std::size_t i = 0;
    void skip_ws() {
        while (i < s.size() && std::isspace(static_cast<unsigned char>(s[i]))) ++i;
    }
    bool done() {
        skip_ws();
        return i >= s.size();
    }
    char peek() {
        skip_ws();
        return i < s.size() ? s[i] : '\0';
    }
    [[noreturn]] void fail(const std::string& what) {
        throw std::invalid_argument("polynomial parse error at position " + std::to_string(i) +
                                    ": " + what);
    }
};

int parse_int(Cursor& c) {
    c.skip_ws();
    std::size_t start = c.i;
    if (c.i < c.s.size() && (c.s[c.i] == '-' || c.s[c.i] == '+')) ++c.i;
    std::size_t digits = c.i;
    while (c.i < c.s.size() && std::isdigit(static_cast<unsigned char>(c.s[c.i]))) ++c.i;
    if (c.i == digits) c.fail("expected integer");
    long long v = std::strtoll(std::string(c.s.substr(start, c.i - start)).c_str(), nullptr, 10);
    if (v < -2147483647LL || v > 2147483647LL) c.fail("exponent out of range");
    return static_cast<int>(v);
}

Int parse_coeff(Cursor& c) {
    c.skip_ws();
    std::size_t start = c.i;
    while (c.i < c.s.size() && std::isdigit(static_cast<unsigned char>(c.s[c.i]))) ++c.i;
    return Int(std::string(c.s.substr(start, c.i - start)));
}

}  // namespace

LaurentPolynomial LaurentPolynomial::parse(std::string_view text) {
    Cursor c{text};
    LaurentPolynomial out;
    if (c.done()) c.fail("empty input");
    bool first = true;
    while (!c.done()) {
        int sign = 1;
        char p = c.peek();
        if (p == '+' || p == '-') {
            sign = (p == '-') ? -1 : 1;
            ++c.i;
        } else if (!first) {
            c.fail("expected '+' or '-'");
        }
        c.skip_ws();
        Int coeff = 1;
        bool saw_number = false;
        if (c.i < c.s.size() && std::isdigit(static_cast<unsigned char>(c.s[c.i]))) {
            coeff = parse_coeff(c);
            saw_number = true;
        }
        int q_exp = 0, t_exp = 0;
        bool saw_var = false;
        for (;;) {
            std::size_t save = c.i;
            c.skip_ws();
            bool star = false;
            if (c.i < c.s.size() && c.s[c.i] == '*') {
                star = true;
                ++c.i;
                c.skip_ws();
            }
            if (c.i < c.s.size() && (c.s[c.i] == 'q' || c.s[c.i] == 't')) {
                char v = c.s[c.i];
                ++c.i;
                int e = 1;
                if (c.i < c.s.size() && c.s[c.i] == '^') {
                    ++c.i;
                    e = parse_int(c);
                }
                if (v == 'q') q_exp = checked_add(q_exp, e);
                else t_exp = checked_add(t_exp, e);
                saw_var = true;
            } else {
                if (star) c.fail("expected variable after '*'");
                c.i = save;
                break;
            }
        }
        if (!saw_number && !saw_var) c.fail("expected term");
        out.add_term({q_exp, t_exp}, sign * coeff);
        first = false;
    }
    return out;
}

}  // namespace skh
