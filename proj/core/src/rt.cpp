#include "skh/rt.hpp"

#include "skh/burau.hpp"

#include <bit>
#include <cstdlib>
#include <sstream>
#include <stdexcept>
#include <unordered_map>

namespace skh {

namespace {

constexpr int kMaxStrands = 20;

void check_strands(int n) {
    if (n < 1 || n > kMaxStrands)
        throw std::invalid_argument("strand count out of range for the state basis");
}

}  // namespace

int state_weight(std::uint32_t mask, int strands) {
    return 2 * std::popcount(mask) - strands;
}

std::vector<std::uint32_t> block_states(int strands, int k) {
    check_strands(strands);
    if (std::abs(k) > strands || (k + strands) % 2 != 0)
        throw std::invalid_argument("invalid weight for this strand count");
    std::vector<std::uint32_t> out;
    for (std::uint32_t s = 0; s < (1u << strands); ++s)
        if (state_weight(s, strands) == k) out.push_back(s);
    return out;
}

std::string state_string(std::uint32_t mask, int strands) {
    std::string s;
    for (int pos = 0; pos < strands; ++pos)
        s += ((mask >> (strands - 1 - pos)) & 1) ? 'u' : 'd';
    return s;
}

RTMatrix::RTMatrix(int strands) : strands_(strands) { check_strands(strands); }

RTMatrix RTMatrix::identity(int strands) {
    RTMatrix m(strands);
    for (std::uint32_t s = 0; s < (1u << strands); ++s)
        m.entries_[{s, s}] = LaurentPolynomial(1);
    return m;
}

void RTMatrix::set(std::uint32_t row, std::uint32_t col, LaurentPolynomial value) {
    if (row >= (1u << strands_) || col >= (1u << strands_))
        throw std::invalid_argument("state out of range");
    if (value.is_zero()) {
        entries_.erase({row, col});
        return;
    }
    if (std::popcount(row) != std::popcount(col))
        throw std::invalid_argument("entry would break block diagonality");
    entries_[{row, col}] = std::move(value);
}

LaurentPolynomial RTMatrix::entry(std::uint32_t row, std::uint32_t col) const {
    auto it = entries_.find({row, col});
    return it == entries_.end() ? LaurentPolynomial() : it->second;
}

RTMatrix RTMatrix::operator*(const RTMatrix& o) const {
    if (strands_ != o.strands_) throw std::invalid_argument("strand count mismatch");
    std::unordered_map<std::uint32_t, std::vector<const std::pair<const std::pair<std::uint32_t, std::uint32_t>, LaurentPolynomial>*>>
        by_row;
    for (const auto& e : o.entries_) by_row[e.first.first].push_back(&e);
    RTMatrix r(strands_);
    for (const auto& [ab, ca] : entries_) {
        auto it = by_row.find(ab.second);
        if (it == by_row.end()) continue;
        for (const auto* e : it->second) {
            auto key = std::pair<std::uint32_t, std::uint32_t>{ab.first, e->first.second};
            auto slot = r.entries_.find(key);
            if (slot == r.entries_.end())
                r.entries_.emplace(key, ca * e->second);
            else
                slot->second += ca * e->second;
        }
    }
    for (auto it = r.entries_.begin(); it != r.entries_.end();)
        it = it->second.is_zero() ? r.entries_.erase(it) : std::next(it);
    return r;
}

bool RTMatrix::operator==(const RTMatrix& o) const {
    return strands_ == o.strands_ && entries_ == o.entries_;
}

PolyMatrix RTMatrix::block(int k) const {
    std::vector<std::uint32_t> states = block_states(strands_, k);
    std::unordered_map<std::uint32_t, int> idx;
    for (int a = 0; a < static_cast<int>(states.size()); ++a) idx[states[a]] = a;
    PolyMatrix b(static_cast<int>(states.size()), static_cast<int>(states.size()));
    for (const auto& [rc, val] : entries_) {
        auto r = idx.find(rc.first);
        if (r == idx.end()) continue;
        b.at(r->second, idx.at(rc.second)) = val;
    }
    return b;
}

std::string RTMatrix::dump_blocks() const {
    std::ostringstream os;
    for (int k = -strands_; k <= strands_; k += 2) {
        auto states = block_states(strands_, k);
        os << "k = " << k << "  basis:";
        for (auto s : states) os << ' ' << state_string(s, strands_);
        os << '\n' << block(k).str() << '\n';
    }
    return os.str();
}

RTMatrix cap_cup(int strands, int i) {
    check_strands(strands);
    if (i < 1 || i > strands - 1) throw std::invalid_argument("position out of range");
    RTMatrix m(strands);
    const int bit_a = strands - i;       // position i-1 (0-based i-1)
    const int bit_b = strands - 1 - i;   // position i
    const std::uint32_t pair_mask = (1u << bit_a) | (1u << bit_b);
    for (std::uint32_t rest = 0; rest < (1u << strands); ++rest) {
        if (rest & pair_mask) continue;
        const std::uint32_t du = rest | (1u << bit_b);  // down at i-1, up at i
        const std::uint32_t ud = rest | (1u << bit_a);
        m.set(du, du, LaurentPolynomial::q());
        m.set(du, ud, LaurentPolynomial(1));
        m.set(ud, du, LaurentPolynomial(1));
        m.set(ud, ud, LaurentPolynomial::q(-1));
    }
    return m;
}

namespace {

RTMatrix rt_scaled(const RTMatrix& m, const LaurentPolynomial& s) {
    RTMatrix r(m.strands());
    for (const auto& [rc, val] : m.entries()) r.set(rc.first, rc.second, val * s);
    return r;
}

RTMatrix rt_sum(const RTMatrix& a, const RTMatrix& b) {
    RTMatrix r(a.strands());
    for (const auto& [rc, val] : a.entries()) r.set(rc.first, rc.second, val);
    for (const auto& [rc, val] : b.entries())
        r.set(rc.first, rc.second, r.entry(rc.first, rc.second) + val);
    return r;
}

}  // namespace

RTMatrix rt_generator(int strands, int i, int sign) {
    if (sign != 1 && sign != -1) throw std::invalid_argument("sign must be +1 or -1");
    RTMatrix e = cap_cup(strands, i);
    RTMatrix id = RTMatrix::identity(strands);
    if (sign > 0) return rt_sum(id, rt_scaled(e, -LaurentPolynomial::q()));
    return rt_sum(e, rt_scaled(id, -LaurentPolynomial::q()));
}

RTMatrix rt_matrix(const BraidWord& w) {
    RTMatrix m = RTMatrix::identity(w.strands());
    for (int l : w.letters()) m = m * rt_generator(w.strands(), std::abs(l), l > 0 ? 1 : -1);
    return m;
}

LaurentPolynomial chi_via_rt(const BraidWord& w) {
    const int n = w.strands();
    RTMatrix m = rt_matrix(w);
    LaurentPolynomial sum;
    for (int k = -n; k <= n; k += 2)
        sum += LaurentPolynomial::monomial(1, k, k) * m.block(k).trace();
    const int nm = w.n_minus();
    return LaurentPolynomial::monomial(nm % 2 ? -1 : 1, w.n_plus() - 2 * nm, 0) * sum;
}

PolyMatrix top_block_closed_form(int strands, int i, int sign) {
    check_strands(strands);
    if (i < 1 || i > strands - 1) throw std::invalid_argument("position out of range");
    if (sign != 1 && sign != -1) throw std::invalid_argument("sign must be +1 or -1");
    // Basis of the k = n-2 block: the state with its single down arrow at
    // position p has basis index p.
    const int n = strands;
    PolyMatrix m(n, n);
    const int a = i - 1, b = i;
    if (sign > 0) {
        for (int p = 0; p < n; ++p) m.at(p, p) = LaurentPolynomial(1);
        m.at(a, a) = LaurentPolynomial(1) - LaurentPolynomial::q(2);
        m.at(a, b) = -LaurentPolynomial::q();
        m.at(b, a) = -LaurentPolynomial::q();
        m.at(b, b) = LaurentPolynomial();
    } else {
        for (int p = 0; p < n; ++p) m.at(p, p) = -LaurentPolynomial::q();
        m.at(a, a) = LaurentPolynomial();
        m.at(a, b) = LaurentPolynomial(1);
        m.at(b, a) = LaurentPolynomial(1);
        m.at(b, b) = LaurentPolynomial::q(-1) - LaurentPolynomial::q();
    }
    return m;
}

PolyMatrix burau_conjugator(int strands) {
    PolyMatrix d(strands, strands);
    for (int m = 1; m <= strands; ++m)
        d.at(m - 1, m - 1) = LaurentPolynomial::monomial((m % 2) ? 1 : -1, -m, 0);
    return d;
}

LaurentPolynomial chi_top_via_burau(const BraidWord& w) {
    const int n = w.strands();
    LaurentPolynomial tr_q = burau_trace(w).substituted(Var::t, Monomial{1, 2, 0});
    return LaurentPolynomial::monomial(1, checked_add(n - 2, w.exponent_sum()), n - 2) * tr_q;
}

}  // namespace skh
