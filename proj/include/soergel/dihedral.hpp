#ifndef SOERGEL_DIHEDRAL_HPP
#define SOERGEL_DIHEDRAL_HPP

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "soergel/bipoly.hpp"
#include "soergel/common.hpp"

namespace soergel {

enum class Letter : std::uint8_t { s = 0, t = 1 };

inline Letter other(Letter u) { return u == Letter::s ? Letter::t : Letter::s; }
inline char letter_char(Letter u) { return u == Letter::s ? 's' : 't'; }

// Element of the rank-two Coxeter group: the universal (infinite dihedral)
// group when m == 0, the finite dihedral group of order 2m when m >= 2.
// Every element is an alternating word, stored as (first letter, length).
// In the finite group the longest element has both alternating spellings;
// the canonical representative stores first = s, so equality is structural.
class GroupElem {
public:
    static GroupElem identity(int m = 0) { return GroupElem(m, 0, Letter::s); }
    static GroupElem make(int m, Letter first, int len);
    static GroupElem letter(int m, Letter u) { return make(m, u, 1); }

    int group_m() const { return m_; }
    bool is_universal() const { return m_ == 0; }
    bool is_identity() const { return len_ == 0; }
    int length() const { return len_; }
    Letter first() const { return first_; }
    Letter letter_at(int i) const; // 0-based position in the alternating word
    Letter last() const { return letter_at(len_ - 1); }

    GroupElem operator*(const GroupElem& o) const;
    GroupElem times(Letter u) const { return *this * letter(m_, u); }
    GroupElem inverse() const;

    bool operator==(const GroupElem& o) const {
        return m_ == o.m_ && len_ == o.len_ && (len_ == 0 || first_ == o.first_);
    }
    bool operator!=(const GroupElem& o) const { return !(*this == o); }
    bool operator<(const GroupElem& o) const;

    std::string str() const;

private:
    GroupElem(int m, int len, Letter first) : m_(m), len_(len), first_(first) {}

    int m_;
    int len_;
    Letter first_;
};

using LetterWord = std::vector<Letter>;
using BitVector = std::vector<std::uint8_t>;

LetterWord parse_word(const std::string& src);
std::string word_str(const LetterWord& w);
GroupElem word_product(const LetterWord& w, int m = 0);
bool word_is_reduced_expression(const LetterWord& w); // no adjacent equal letters

BitVector parse_bits(const std::string& src);
std::string bits_str(const BitVector& e);
BitVector bits_from_index(std::size_t index, std::size_t len); // bit i of index -> position i
std::size_t bits_to_index(const BitVector& e);

// Product of the selected letters of w, in the group tagged by m.
GroupElem evaluate_word(const LetterWord& w, const BitVector& e, int m = 0);

// Rank-two Bruhat order: g <= w iff g = w or l(g) < l(w).
bool bruhat_leq(const GroupElem& g, const GroupElem& w);

// All reflections of the universal group of length <= L, i.e. all elements
// of odd length <= L, ordered by (length, first letter).
std::vector<GroupElem> reflections_up_to(int L);

// Coordinates (a, b) of the positive root gamma = a*alpha_s + b*alpha_t
// whose reflection is refl; refl must be universal of odd length.
std::pair<BiPoly, BiPoly> root_coordinates(const GroupElem& refl);

GroupElem project(const GroupElem& universal_elem, int m);
GroupElem lift_r(const GroupElem& finite_elem);

LetterWord subsequence(const LetterWord& w, const BitVector& keep);

// The alternating word (first, other, first, ...) of the given length.
LetterWord alternating_word(Letter first, int len);

} // namespace soergel

#endif
