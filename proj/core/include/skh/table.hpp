#pragma once

// Homology dimension tables graded by (homological degree i, quantum degree
// j, annular degree k).

#include "skh/laurent.hpp"

#include <array>
#include <cstdint>
#include <map>
#include <string>

namespace skh {

struct TriGradedTable {
    // (i, j, k) -> dimension; zero dimensions are never stored.
    std::map<std::array<int, 3>, std::int64_t> dims;

    bool operator==(const TriGradedTable& o) const = default;

    // One "i j k dim" line per entry, ascending in (i, j, k).
    std::string str() const;
};

// sum over entries of (-1)^i dim q^j t^k.
LaurentPolynomial euler_characteristic(const TriGradedTable& table);

}  // namespace skh
