#include "skh/gf2.hpp"

#include <bit>
#include <stdexcept>

namespace skh {

Gf2Echelon::Gf2Echelon(std::size_t cols)
    : cols_(cols), words_((cols + 63) / 64), row_with_pivot_(cols, -1) {}

bool Gf2Echelon::insert(std::vector<std::uint64_t>& row) {
    if (row.size() != words_) throw std::invalid_argument("row width mismatch");
    for (std::size_t w = 0; w < words_; ++w) {
        while (row[w]) {
            const std::size_t col = w * 64 + static_cast<std::size_t>(std::countr_zero(row[w]));
            const std::int32_t other = row_with_pivot_[col];
            if (other < 0) {
                row_with_pivot_[col] = static_cast<std::int32_t>(basis_.size());
                basis_.push_back(row);
                ++rank_;
                return true;
            }
            const std::vector<std::uint64_t>& b = basis_[static_cast<std::size_t>(other)];
            for (std::size_t x = w; x < words_; ++x) row[x] ^= b[x];
        }
    }
    return false;
}

}  // namespace skh
