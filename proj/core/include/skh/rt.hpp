#pragma once

// Diagrammatic quantum-sl2 matrices for braid diagrams, acting on the
// 2^n orientation states of n strand endpoints.  A state assigns each
// position an arrow, up or down; its weight k is #up - #down.  All matrices
// here are block diagonal with respect to k.
//
// State encoding: bit (n-1-pos) of the mask is 1 when position pos (counted
// from the left) carries an up arrow.  Ascending mask order then equals the
// canonical basis order: lexicographic, reading left to right, with down
// before up.  For n=3, k=1 that is {duu, udu, uud}.

#include "skh/braid.hpp"
#include "skh/poly_matrix.hpp"

#include <cstdint>
#include <map>
#include <vector>

namespace skh {

int state_weight(std::uint32_t mask, int strands);             // #up - #down
std::vector<std::uint32_t> block_states(int strands, int k);   // ascending
std::string state_string(std::uint32_t mask, int strands);     // e.g. "duu"

class RTMatrix {
public:
    explicit RTMatrix(int strands);
    static RTMatrix identity(int strands);

    int strands() const { return strands_; }

    // Stores value at (row, col); both states must have the same weight
    // unless the value is zero.
    void set(std::uint32_t row, std::uint32_t col, LaurentPolynomial value);
    LaurentPolynomial entry(std::uint32_t row, std::uint32_t col) const;

    RTMatrix operator*(const RTMatrix& o) const;
    bool operator==(const RTMatrix& o) const;

    // Dense weight-k block in canonical basis order; k must satisfy
    // |k| <= n and k == n (mod 2).
    PolyMatrix block(int k) const;

    // All blocks, smallest k first, each with its basis states listed.
    std::string dump_blocks() const;

    const std::map<std::pair<std::uint32_t, std::uint32_t>, LaurentPolynomial>& entries() const {
        return entries_;
    }

private:
    int strands_;
    std::map<std::pair<std::uint32_t, std::uint32_t>, LaurentPolynomial> entries_;
};

// The single cap-cup (1-resolution) diagram at positions (i, i+1),
// 1 <= i <= n-1.  Nonzero only between states that agree away from the two
// positions and read du or ud there:
//   (du,du) = q   (du,ud) = 1   (ud,du) = 1   (ud,ud) = q^-1 .
RTMatrix cap_cup(int strands, int i);

// Crossing matrix: positive crossings resolve as identity - q * cap_cup,
// negative ones as cap_cup - q * identity.
RTMatrix rt_generator(int strands, int i, int sign);

// Left-to-right product over the word's letters.
RTMatrix rt_matrix(const BraidWord& w);

// Graded Euler characteristic of the annular closure homology:
//   (-1)^{n_-} q^{n_+ - 2 n_-} sum_k (qt)^k tr( block_k ) .
LaurentPolynomial chi_via_rt(const BraidWord& w);

// The k = n-2 block of rt_generator(strands, i, sign) written down directly
// (2x2 block at basis rows i, i+1 plus a constant diagonal); serves as an
// independent cross-check of the diagrammatic construction.
PolyMatrix top_block_closed_form(int strands, int i, int sign);

// Diagonal matrix with entries (-1)^{m+1} q^{-m}, m = 1..n.  Conjugating
// the q^{-+1}-factored top block by it yields the Burau generator at t=q^2.
PolyMatrix burau_conjugator(int strands);

// The k = n-2 level of the graded Euler characteristic computed through the
// Burau trace:  (qt)^{n-2} q^{n_+ - n_-} tr( burau_matrix(w) at t=q^2 ).
LaurentPolynomial chi_top_via_burau(const BraidWord& w);

}  // namespace skh
