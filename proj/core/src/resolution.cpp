#include "skh/resolution.hpp"

#include <cstdlib>
#include <stdexcept>

namespace skh {

namespace {

// Half-edge bookkeeping: each node has an "above" side (toward smaller
// levels / the closure when level 0) and a "below" side.  partner_* give,
// for each node, the node reached by leaving through that side, the side of
// arrival, and a +-1 tag when the step runs along a closure arc.
struct Pairing {
    std::vector<std::int32_t> to_node[2];
    std::vector<std::int8_t> to_side[2];
    std::vector<std::int8_t> tag[2];

    explicit Pairing(int nodes) {
        for (int s = 0; s < 2; ++s) {
            to_node[s].assign(nodes, -1);
            to_side[s].assign(nodes, -1);
            tag[s].assign(nodes, 0);
        }
    }
    void link(int n1, int s1, int n2, int s2, int closure_tag = 0) {
        to_node[s1][n1] = n2;
        to_side[s1][n1] = static_cast<std::int8_t>(s2);
        tag[s1][n1] = static_cast<std::int8_t>(closure_tag);
        to_node[s2][n2] = n1;
        to_side[s2][n2] = static_cast<std::int8_t>(s1);
        tag[s2][n2] = static_cast<std::int8_t>(-closure_tag);
    }
};

constexpr int kAbove = 0;
constexpr int kBelow = 1;

}  // namespace

Resolution resolve(const BraidWord& w, std::uint32_t vertex_bits) {
    const int n = w.strands();
    const int m = w.length();
    if (m > 31) throw std::invalid_argument("word too long for a resolution cube");
    if (m < 32 && (vertex_bits >> m) != 0)
        throw std::invalid_argument("vertex bits out of range");
    const int nodes = (m + 1) * n;
    auto node = [n](int level, int pos) { return level * n + pos; };

    Pairing pr(nodes);
    for (int l = 0; l < m; ++l) {
        const int letter = w.letters()[l];
        const int a = std::abs(letter) - 1, b = std::abs(letter);
        const bool chose_one = (vertex_bits >> l) & 1;
        const bool turnback = (letter > 0) ? chose_one : !chose_one;
        for (int p = 0; p < n; ++p) {
            if (turnback && (p == a || p == b)) continue;
            pr.link(node(l, p), kBelow, node(l + 1, p), kAbove);
        }
        if (turnback) {
            pr.link(node(l, a), kBelow, node(l, b), kBelow);
            pr.link(node(l + 1, a), kAbove, node(l + 1, b), kAbove);
        }
    }
    for (int p = 0; p < n; ++p)
        pr.link(node(0, p), kAbove, node(m, p), kBelow, +1);

    Resolution res;
    res.circle_of_node.assign(nodes, -1);
    for (int start = 0; start < nodes; ++start) {
        if (res.circle_of_node[start] >= 0) continue;
        const auto id = static_cast<std::int16_t>(res.circles.size());
        int winding = 0;
        int cur = start, side = kBelow;  // leave the start node downward
        do {
            res.circle_of_node[cur] = id;
            const int nxt = pr.to_node[side][cur];
            winding += pr.tag[side][cur];
            side = 1 - pr.to_side[side][cur];  // pass through to the other side
            cur = nxt;
        } while (cur != start || side != kBelow);
        if (winding < -1 || winding > 1)
            throw std::logic_error("embedded circle with |winding| > 1");
        res.circles.push_back(Circle{winding});
    }
    return res;
}

}  // namespace skh
