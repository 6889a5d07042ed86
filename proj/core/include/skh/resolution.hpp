#pragma once

// Complete resolutions of an annular braid closure diagram.
//
// The braid box has n marked points on each of the m+1 horizontal levels;
// node (level, pos) gets index level*n + pos.  The slab between levels l and
// l+1 holds the l-th letter.  A crossing resolves either to two through
// strands or to a cap-cup turnback joining the two points on each side of
// the slab; a positive letter turns back in its 1-smoothing, a negative one
// in its 0-smoothing.  Closure arcs join (m, p) back around the annulus to
// (0, p).  Circles are the components of the resulting 2-regular graph,
// listed by their smallest node.  Each circle's winding number is the signed
// count of closure-arc traversals (top-to-bottom = +1) along one pass around
// the circle; a circle is trivial in the annulus exactly when it is 0, and
// embeddedness forces |winding| <= 1.

#include "skh/braid.hpp"

#include <cstdint>
#include <vector>

namespace skh {

struct Circle {
    int winding = 0;
    bool trivial() const { return winding == 0; }
};

struct Resolution {
    std::vector<Circle> circles;
    std::vector<std::int16_t> circle_of_node;  // size (m+1)*n
};

// vertex_bits: bit l is the chosen smoothing of the l-th letter.
Resolution resolve(const BraidWord& w, std::uint32_t vertex_bits);

}  // namespace skh
