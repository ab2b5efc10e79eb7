#ifndef SOERGEL_BIMODULE_HPP
#define SOERGEL_BIMODULE_HPP

#include <vector>

#include "soergel/subexpr.hpp"

namespace soergel {

// Element of the localized Bott-Samuelson bimodule (B_w)_Q: one QElem per
// bit vector e, the Q_{w^e}-coordinate. Component index encodes e with
// bit j = e_{j+1}; right multiplication twists component e by w^e.
struct Localized {
    RealizationPtr r;
    LetterWord word;
    std::vector<QElem> comps; // size 1 << word.size()

    std::size_t size() const { return comps.size(); }
};

Localized localized_zero(const RealizationPtr& r, const LetterWord& w);

// Coordinates of the tensor p_0 (x) p_1 (x) ... (x) p_l over the word
// s_1 ... s_l: component e is
//   prod_{i=1..l} (s_1^{e_1}...s_{i-1}^{e_{i-1}})(p_{i-1} / alpha_{s_i})
//   * (s_1^{e_1}...s_l^{e_l})(p_l).
Localized embed_tensor(const RealizationPtr& r, const LetterWord& w, const std::vector<RPoly>& slots);

// b_w = (1 (x) 1) (x) ... (x) (1 (x) 1): all slots 1.
Localized b_element(const RealizationPtr& r, const LetterWord& w);

Localized left_mul(const Localized& x, const RPoly& p);
Localized right_mul(const Localized& x, const RPoly& p);
Localized lz_add(const Localized& a, const Localized& b);
Localized lz_sub(const Localized& a, const Localized& b);
bool lz_equal(const Localized& a, const Localized& b);

// Whether x lies in the (unlocalized) Bott-Samuelson bimodule, by the
// recursive criterion: split on the last letter u into (m1, m2) and test
// m1 * alpha_u and m1 - m2; base case is polynomiality. Requires a
// Demazure-certified realization.
bool membership(const Localized& x);

// The candidate morphisms on localizations: component f of phi(x) is
// (pi_x / zeta_y(f)) * sum of input components e with x^e = y^f in W;
// psi swaps the roles of the two alternating words.
Localized phi_apply(const Localized& x);
Localized psi_apply(const Localized& y);

struct GeneratorImageReport {
    bool phi_ok = false;
    bool psi_ok = false;
};

// Does phi fix b_x and psi fix b_y (componentwise, semantic equality)?
GeneratorImageReport phi_on_generator_check(const RealizationPtr& r);

// Right-hand side of the D-operator expansion:
//   sum_c a^{w^(c)}(r(g)) * g(D^{(c_l)}_{s_l}(p_l ... p_2 D^{(c_1)}_{s_1}(p_1)...))
// with D^(0) = demazure and D^(1) = the reflection action.
QElem d_expansion(const RealizationPtr& r, const LetterWord& w, const std::vector<RPoly>& ps,
                  const GroupElem& g_finite);

// Localized coordinates of the one-colored generator morphisms.
Localized unit_dot(const RealizationPtr& r, Letter u, const RPoly& p);
QElem counit_dot(const Localized& x);
Localized split_morphism(const Localized& x);
Localized merge_morphism(const Localized& x);

// The alternating words of length m for a finite realization.
LetterWord x_word(const Realization& r);
LetterWord y_word(const Realization& r);

} // namespace soergel

#endif
