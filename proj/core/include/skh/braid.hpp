#pragma once

// Braid words in Artin generator notation.  A word on n strands is a list
// of nonzero letters, letter i meaning sigma_i and -i meaning sigma_i^-1,
// with 1 <= |i| <= n-1.  Text form is "n: l1 l2 ... lm".

#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace skh {

class BraidWord {
public:
    BraidWord(int strands, std::vector<int> letters);

    int strands() const { return strands_; }
    const std::vector<int>& letters() const { return letters_; }
    int length() const { return static_cast<int>(letters_.size()); }

    int n_plus() const;
    int n_minus() const;
    int exponent_sum() const { return n_plus() - n_minus(); }

    bool operator==(const BraidWord& o) const = default;
    std::string str() const;

private:
    int strands_;
    std::vector<int> letters_;
};

BraidWord parse_braid(std::string_view text);

BraidWord concat(const BraidWord& a, const BraidWord& b);

// g w g^-1 for a single generator letter g (signed).
BraidWord conjugate_by_generator(const BraidWord& w, int letter);

BraidWord inverse(const BraidWord& w);

// Birman-Menasco exchange move.  After a cyclic left rotation by `offset`
// the word must read P s Q s^-1 where s is sigma_{n-1}^{+-1} and P, Q only
// use generators of index <= n-2; the two occurrences of sigma_{n-1} have
// their signs flipped and the result is rotated back to the caller's frame.
// Applying the move twice at the same offset returns the original word.
BraidWord exchange_move(const BraidWord& w, int offset);

// 4-strand pair whose closures are related by an axis-preserving mutation:
// sigma_1^k A and sigma_1^k B with B the exchange-moved partner of A.
std::pair<BraidWord, BraidWord> morton_pair(int k);

// 5-strand mutant pair sigma_1^k X sigma_1^-k Y  /  sigma_1^k X sigma_1^-k Z.
std::pair<BraidWord, BraidWord> menasco_pair(int k);

// The two fixed 4-strand flype pairs (closures of knot types 7_2 and
// 10_132); within each pair the words share their exponent sum.
std::vector<std::pair<BraidWord, BraidWord>> flype_pairs();

}  // namespace skh
