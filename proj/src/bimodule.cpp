#include "soergel/bimodule.hpp"

#include <algorithm>

namespace soergel {

namespace {

void require_finite(const Realization& r, const char* what) {
    if (r.is_universal()) throw SoergelError(std::string(what) + ": finite realization required");
}

void check_word_size(const Localized& x) {
    if (x.comps.size() != (std::size_t{1} << x.word.size()))
        throw InternalError("localized component count mismatch");
}

} // namespace

LetterWord x_word(const Realization& r) {
    require_finite(r, "x_word");
    return alternating_word(Letter::s, r.m);
}

LetterWord y_word(const Realization& r) {
    require_finite(r, "y_word");
    return alternating_word(Letter::t, r.m);
}

Localized localized_zero(const RealizationPtr& r, const LetterWord& w) {
    Localized x{r, w, {}};
    x.comps.assign(std::size_t{1} << w.size(), QElem::zero(r));
    return x;
}

Localized embed_tensor(const RealizationPtr& r, const LetterWord& w, const std::vector<RPoly>& slots) {
    if (slots.size() != w.size() + 1) throw SoergelError("embed_tensor: need l+1 slots");
    const std::size_t l = w.size();
    Localized out{r, w, {}};
    out.comps.reserve(std::size_t{1} << l);
    for (std::size_t idx = 0; idx < (std::size_t{1} << l); ++idx) {
        GroupElem prefix = GroupElem::identity(0);
        int sign = 1;
        std::vector<GroupElem> roots;
        roots.reserve(l);
        RPoly num = RPoly::constant(r->rank, CoefElem::one(r->coef));
        for (std::size_t i = 0; i < l; ++i) {
            num = num * act(*r, prefix, slots[i]);
            auto [positive, refl] = prefix_root(prefix, w[i]);
            if (!positive) sign = -sign;
            roots.push_back(refl);
            if ((idx >> i) & 1u) prefix = prefix.times(w[i]);
        }
        num = num * act(*r, prefix, slots[l]);
        if (sign < 0) num = -num;
        out.comps.emplace_back(r, std::move(num), std::move(roots));
    }
    return out;
}

Localized b_element(const RealizationPtr& r, const LetterWord& w) {
    std::vector<RPoly> slots(w.size() + 1, RPoly::constant(r->rank, CoefElem::one(r->coef)));
    return embed_tensor(r, w, slots);
}

Localized left_mul(const Localized& x, const RPoly& p) {
    Localized out{x.r, x.word, {}};
    out.comps.reserve(x.comps.size());
    for (const QElem& q : x.comps) out.comps.push_back(q_scale(q, p));
    return out;
}

Localized right_mul(const Localized& x, const RPoly& p) {
    check_word_size(x);
    Localized out{x.r, x.word, {}};
    out.comps.reserve(x.comps.size());
    for (std::size_t idx = 0; idx < x.comps.size(); ++idx) {
        BitVector e = bits_from_index(idx, x.word.size());
        out.comps.push_back(q_scale(x.comps[idx], act_selected(*x.r, x.word, e, p)));
    }
    return out;
}

namespace {

void require_compatible(const Localized& a, const Localized& b) {
    if (a.word != b.word || a.comps.size() != b.comps.size())
        throw SoergelError("localized word mismatch");
    if (a.r != b.r && !a.r->same_ring(*b.r)) throw SoergelError("realization mismatch");
}

} // namespace

Localized lz_add(const Localized& a, const Localized& b) {
    require_compatible(a, b);
    Localized out{a.r, a.word, {}};
    out.comps.reserve(a.comps.size());
    for (std::size_t i = 0; i < a.comps.size(); ++i) out.comps.push_back(q_add(a.comps[i], b.comps[i]));
    return out;
}

Localized lz_sub(const Localized& a, const Localized& b) {
    require_compatible(a, b);
    Localized out{a.r, a.word, {}};
    out.comps.reserve(a.comps.size());
    for (std::size_t i = 0; i < a.comps.size(); ++i) out.comps.push_back(q_sub(a.comps[i], b.comps[i]));
    return out;
}

bool lz_equal(const Localized& a, const Localized& b) {
    require_compatible(a, b);
    for (std::size_t i = 0; i < a.comps.size(); ++i)
        if (!q_equal(a.comps[i], b.comps[i])) return false;
    return true;
}

namespace {

bool membership_rec(const RealizationPtr& r, const LetterWord& word, std::vector<QElem> comps) {
    if (word.empty()) return is_polynomial(comps[0]).has_value();
    LetterWord v(word.begin(), word.end() - 1);
    const Letter u = word.back();
    const std::size_t half = comps.size() / 2;

    // m1: last bit 0, m2: last bit 1.
    std::vector<QElem> m1(comps.begin(), comps.begin() + static_cast<std::ptrdiff_t>(half));
    std::vector<QElem> m2(comps.begin() + static_cast<std::ptrdiff_t>(half), comps.end());

    RPoly alpha_u = RPoly::linear(r->alpha(u));
    std::vector<QElem> m1_alpha;
    m1_alpha.reserve(half);
    for (std::size_t idx = 0; idx < half; ++idx) {
        BitVector f = bits_from_index(idx, v.size());
        m1_alpha.push_back(q_scale(m1[idx], act_selected(*r, v, f, alpha_u)));
    }
    if (!membership_rec(r, v, std::move(m1_alpha))) return false;

    std::vector<QElem> diff;
    diff.reserve(half);
    for (std::size_t idx = 0; idx < half; ++idx) diff.push_back(q_sub(m1[idx], m2[idx]));
    return membership_rec(r, v, std::move(diff));
}

} // namespace

bool membership(const Localized& x) {
    check_word_size(x);
    if (!x.r->demazure_certified) throw SoergelError("demazure certificate required");
    return membership_rec(x.r, x.word, x.comps);
}

namespace {

// Shared core of phi and psi: sum input components over the fibers of
// src^e = dst^f in W, scaled by pi_src / zeta_dst(f).
Localized transport(const Localized& input, const LetterWord& src, const LetterWord& dst) {
    const RealizationPtr& r = input.r;
    require_finite(*r, "morphism");
    if (input.word != src) throw SoergelError("word mismatch");
    const int m = r->m;
    const std::size_t n = std::size_t{1} << src.size();

    std::vector<GroupElem> src_elems, dst_elems;
    src_elems.reserve(n);
    dst_elems.reserve(n);
    for (std::size_t idx = 0; idx < n; ++idx) {
        BitVector e = bits_from_index(idx, src.size());
        src_elems.push_back(evaluate_word(src, e, m));
        dst_elems.push_back(evaluate_word(dst, e, m));
    }

    auto [pi_sign, pi_roots] = zeta_factored(src, BitVector(src.size(), 1));
    RPoly pi_poly = root_product(*r, pi_roots);
    if (pi_sign < 0) pi_poly = -pi_poly; // reduced word: sign is +1

    Localized out{r, dst, {}};
    out.comps.reserve(n);
    for (std::size_t f = 0; f < n; ++f) {
        QElem sum = QElem::zero(r);
        for (std::size_t e = 0; e < n; ++e)
            if (src_elems[e] == dst_elems[f]) sum = q_add(sum, input.comps[e]);
        auto [zsign, zroots] = zeta_factored(dst, bits_from_index(f, dst.size()));
        QElem coeff(r, zsign < 0 ? -pi_poly : pi_poly, zroots);
        out.comps.push_back(q_mul(coeff, sum));
    }
    return out;
}

} // namespace

Localized phi_apply(const Localized& x) { return transport(x, x_word(*x.r), y_word(*x.r)); }

Localized psi_apply(const Localized& y) { return transport(y, y_word(*y.r), x_word(*y.r)); }

GeneratorImageReport phi_on_generator_check(const RealizationPtr& r) {
    require_finite(*r, "phi_on_generator_check");
    GeneratorImageReport rep;
    Localized bx = b_element(r, x_word(*r));
    Localized by = b_element(r, y_word(*r));
    rep.phi_ok = lz_equal(phi_apply(bx), by);
    rep.psi_ok = lz_equal(psi_apply(by), bx);
    return rep;
}

QElem d_expansion(const RealizationPtr& r, const LetterWord& w, const std::vector<RPoly>& ps,
                  const GroupElem& g_finite) {
    require_finite(*r, "d_expansion");
    if (ps.size() != w.size()) throw SoergelError("d_expansion: one polynomial per letter required");
    if (static_cast<int>(w.size()) > r->m) throw SoergelError("d_expansion: word longer than m");
    const std::size_t l = w.size();
    GroupElem g_lift = lift_r(g_finite);

    QElem total = QElem::zero(r);
    for (std::size_t c = 0; c < (std::size_t{1} << l); ++c) {
        // Chain D^{(c_l)}(p_l ... D^{(c_1)}(p_1) ...).
        RPoly chain = RPoly::constant(r->rank, CoefElem::one(r->coef));
        for (std::size_t i = 0; i < l; ++i) {
            chain = ps[i] * chain;
            chain = ((c >> i) & 1u) ? act(*r, w[i], chain) : demazure(*r, w[i], chain);
        }
        if (chain.is_zero()) continue;
        BitVector keep = bits_from_index(c, l);
        QElem a = a_value_closed(r, subsequence(w, keep), g_lift);
        if (a.num_is_zero()) continue;
        total = q_add(total, q_scale(a, act(*r, g_finite, chain)));
    }
    return total;
}

Localized unit_dot(const RealizationPtr& r, Letter u, const RPoly& p) {
    if (!r->delta(u)) throw SoergelError("delta_u required for unit_dot");
    Localized out{r, LetterWord{u}, {}};
    out.comps.push_back(QElem::from_rpoly(r, p));
    out.comps.push_back(QElem::zero(r));
    return out;
}

QElem counit_dot(const Localized& x) {
    check_word_size(x);
    if (x.word.size() != 1) throw SoergelError("counit_dot: single-letter word required");
    return q_scale(x.comps[0], RPoly::linear(x.r->alpha(x.word[0])));
}

Localized split_morphism(const Localized& x) {
    check_word_size(x);
    if (x.word.size() != 1) throw SoergelError("split: single-letter word required");
    const Letter u = x.word[0];
    const GroupElem refl = GroupElem::letter(0, u);
    Localized out{x.r, LetterWord{u, u}, {}};
    out.comps.resize(4, QElem::zero(x.r));
    // Components indexed by (e1, e2): bit0 = e1, bit1 = e2.
    out.comps[0] = q_div_root(x.comps[0], refl);          // (0,0)
    out.comps[2] = q_div_root(x.comps[1], refl);          // (0,1)
    out.comps[1] = q_neg(q_div_root(x.comps[1], refl));   // (1,0)
    out.comps[3] = q_neg(q_div_root(x.comps[0], refl));   // (1,1)
    return out;
}

Localized merge_morphism(const Localized& x) {
    check_word_size(x);
    if (x.word.size() != 2 || x.word[0] != x.word[1])
        throw SoergelError("merge: word (u,u) required");
    Localized out{x.r, LetterWord{x.word[0]}, {}};
    out.comps.push_back(q_add(x.comps[0], x.comps[3])); // (0,0) + (1,1)
    out.comps.push_back(q_add(x.comps[2], x.comps[1])); // (0,1) + (1,0)
    return out;
}

} // namespace soergel
