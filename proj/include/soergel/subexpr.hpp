#ifndef SOERGEL_SUBEXPR_HPP
#define SOERGEL_SUBEXPR_HPP

#include <map>
#include <utility>
#include <vector>

#include "soergel/symalg.hpp"

namespace soergel {

// The image prefix(alpha_u) is +/- a positive root; returns the sign and
// the root's reflection prefix * u * prefix^{-1}. prefix must be universal.
std::pair<bool, GroupElem> prefix_root(const GroupElem& prefix, Letter u);

// All e with w^e = g, in the group tagged by g. Guarded at length 20.
std::vector<BitVector> enumerate_matching(const LetterWord& w, const GroupElem& g);

// a^w(g) as the literal sum over matching subexpressions of the products
// of prefix-twisted 1/alpha factors. g must be universal; the realization
// supplies the root linears (universal or specialized).
QElem a_value_bruteforce(const RealizationPtr& r, const LetterWord& w, const GroupElem& g);

// Same sum, for every g at once (one enumeration pass per word).
std::map<GroupElem, QElem> a_value_bruteforce_all(const RealizationPtr& r, const LetterWord& w);

// k_g^w: zero for non-reduced words or g not below the word's product;
// otherwise the two-colored binomial selected by the s_1 g comparison.
BiPoly k_coefficient(const LetterWord& w, const GroupElem& g);

// X_g^w = { positive roots alpha with s_alpha g <= w }, as the sorted list
// of their reflections. Both elements universal.
std::vector<GroupElem> x_set(const GroupElem& g, const GroupElem& w);

// Closed form of a^w(g): specialize(k_g^w) over the X-set roots.
QElem a_value_closed(const RealizationPtr& r, const LetterWord& w, const GroupElem& g);

// pi_w = prod_i (s_1 ... s_{i-1})(alpha_{s_i}).
RPoly pi_product(const Realization& r, const LetterWord& w);

// zeta_w(e) = prod_i (s_1^{e_1} ... s_{i-1}^{e_{i-1}})(alpha_{s_i}).
RPoly zeta_product(const Realization& r, const LetterWord& w, const BitVector& e);

// zeta_w(e) in factored form: overall sign and the multiset of positive
// root reflections. Independent of the realization.
std::pair<int, std::vector<GroupElem>> zeta_factored(const LetterWord& w, const BitVector& e);

// xi = [m-1]_X specialized when m is even, 1 when m is odd.
CoefElem xi(const Realization& r);

} // namespace soergel

#endif
