#include "skh/braid.hpp"

#include <algorithm>
#include <cstdlib>
#include <sstream>
#include <stdexcept>

namespace skh {

BraidWord::BraidWord(int strands, std::vector<int> letters)
    : strands_(strands), letters_(std::move(letters)) {
    if (strands_ < 1) throw std::invalid_argument("strand count must be at least 1");
    for (int l : letters_)
        if (l == 0 || std::abs(l) > strands_ - 1)
            throw std::invalid_argument("letter " + std::to_string(l) + " out of range for " +
                                        std::to_string(strands_) + " strands");
}

int BraidWord::n_plus() const {
    return static_cast<int>(std::count_if(letters_.begin(), letters_.end(),
                                          [](int l) { return l > 0; }));
}

int BraidWord::n_minus() const {
    return static_cast<int>(std::count_if(letters_.begin(), letters_.end(),
                                          [](int l) { return l < 0; }));
}

std::string BraidWord::str() const {
    std::ostringstream os;
    os << strands_ << ':';
    for (int l : letters_) os << ' ' << l;
    return os.str();
}

BraidWord parse_braid(std::string_view text) {
    auto colon = text.find(':');
    if (colon == std::string_view::npos)
        throw std::invalid_argument("braid word needs the form \"n: l1 l2 ...\"");
    int strands = 0;
    {
        std::istringstream is{std::string(text.substr(0, colon))};
        if (!(is >> strands)) throw std::invalid_argument("bad strand count");
        std::string rest;
        if (is >> rest) throw std::invalid_argument("bad strand count");
    }
    std::vector<int> letters;
    std::istringstream is{std::string(text.substr(colon + 1))};
    std::string tok;
    while (is >> tok) {
        std::size_t used = 0;
        int v;
        try {
            v = std::stoi(tok, &used);
        } catch (const std::exception&) {
            throw std::invalid_argument("bad letter \"" + tok + "\"");
        }
        if (used != tok.size()) throw std::invalid_argument("bad letter \"" + tok + "\"");
        letters.push_back(v);
    }
    return BraidWord(strands, std::move(letters));
}

BraidWord concat(const BraidWord& a, const BraidWord& b) {
    if (a.strands() != b.strands())
        throw std::invalid_argument("strand count mismatch in concatenation");
    std::vector<int> letters = a.letters();
    letters.insert(letters.end(), b.letters().begin(), b.letters().end());
    return BraidWord(a.strands(), std::move(letters));
}

BraidWord conjugate_by_generator(const BraidWord& w, int letter) {
    if (letter == 0 || std::abs(letter) > w.strands() - 1)
        throw std::invalid_argument("conjugating letter out of range");
    std::vector<int> letters;
    letters.reserve(w.length() + 2);
    letters.push_back(letter);
    letters.insert(letters.end(), w.letters().begin(), w.letters().end());
    letters.push_back(-letter);
    return BraidWord(w.strands(), std::move(letters));
}

BraidWord inverse(const BraidWord& w) {
    std::vector<int> letters(w.letters().rbegin(), w.letters().rend());
    for (int& l : letters) l = -l;
    return BraidWord(w.strands(), std::move(letters));
}

BraidWord exchange_move(const BraidWord& w, int offset) {
    const int n = w.strands();
    const int m = w.length();
    if (n < 2 || m < 2) throw std::invalid_argument("word too short for an exchange move");
    int off = ((offset % m) + m) % m;
    std::vector<int> r(w.letters().begin() + off, w.letters().end());
    r.insert(r.end(), w.letters().begin(), w.letters().begin() + off);

    const int top = n - 1;
    std::vector<int> pos;
    for (int idx = 0; idx < m; ++idx)
        if (std::abs(r[idx]) == top) pos.push_back(idx);
    if (pos.size() != 2 || pos[1] != m - 1 || r[pos[0]] != -r[pos[1]])
        throw std::invalid_argument(
            "word is not of the form P s Q s^-1 in the top generator at this offset");
    r[pos[0]] = -r[pos[0]];
    r[pos[1]] = -r[pos[1]];

    std::vector<int> back(r.begin() + (m - off), r.end());
    back.insert(back.end(), r.begin(), r.begin() + (m - off));
    return BraidWord(n, std::move(back));
}

namespace {

const std::vector<int> kMortonA = {-2, -2, 3, -2, -1, 2, 2, 2, -3, 2, 1};
const std::vector<int> kMortonB = {-2, -2, -3, -2, -1, 2, 2, 2, 3, 2, 1};
const std::vector<int> kMenascoX = {-2, 3, 2, -3, 2};
const std::vector<int> kMenascoY = {-4, -2, 3, -2, -3, 2, 4};
const std::vector<int> kMenascoZ = {4, -2, 3, -2, -3, 2, -4};

std::vector<int> with_sigma1_prefix(int k, const std::vector<int>& tail) {
    std::vector<int> letters(k, 1);
    letters.insert(letters.end(), tail.begin(), tail.end());
    return letters;
}

}  // namespace

std::pair<BraidWord, BraidWord> morton_pair(int k) {
    if (k < 0) throw std::invalid_argument("negative twist count");
    return {BraidWord(4, with_sigma1_prefix(k, kMortonA)),
            BraidWord(4, with_sigma1_prefix(k, kMortonB))};
}

std::pair<BraidWord, BraidWord> menasco_pair(int k) {
    if (k < 0) throw std::invalid_argument("negative twist count");
    std::vector<int> head(k, 1);
    head.insert(head.end(), kMenascoX.begin(), kMenascoX.end());
    head.insert(head.end(), static_cast<std::size_t>(k), -1);
    std::vector<int> wy = head, wz = head;
    wy.insert(wy.end(), kMenascoY.begin(), kMenascoY.end());
    wz.insert(wz.end(), kMenascoZ.begin(), kMenascoZ.end());
    return {BraidWord(5, std::move(wy)), BraidWord(5, std::move(wz))};
}

std::vector<std::pair<BraidWord, BraidWord>> flype_pairs() {
    return {
        {BraidWord(4, {3, 3, 2, 2, -3, 1, 1, 2, -1}),
         BraidWord(4, {3, 3, 2, 2, -3, -1, 2, 1, 1})},
        {BraidWord(4, {3, -2, -2, 3, 3, 2, -3, -1, 2, 1, 1}),
         BraidWord(4, {3, -2, -2, 3, 3, 2, -3, 1, 1, 2, -1})},
    };
}

}  // namespace skh
