#pragma once

// Incremental GF(2) row reduction over bit-packed rows (64 columns per
// word).  Rows are fed one at a time; the object keeps a row-echelon basis
// and reports the running rank, so the full matrix never needs to be held.

#include <cstdint>
#include <vector>

namespace skh {

class Gf2Echelon {
public:
    explicit Gf2Echelon(std::size_t cols);

    std::size_t cols() const { return cols_; }
    std::size_t words_per_row() const { return words_; }
    int rank() const { return rank_; }

    // Reduces `row` (clobbering it) against the basis; if anything is left,
    // the remainder joins the basis.  Returns true when the rank grew.
    bool insert(std::vector<std::uint64_t>& row);

private:
    std::size_t cols_, words_;
    int rank_ = 0;
    std::vector<std::vector<std::uint64_t>> basis_;
    std::vector<std::int32_t> row_with_pivot_;  // per column, index into basis_ or -1
};

}  // namespace skh
