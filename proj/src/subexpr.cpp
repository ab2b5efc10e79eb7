#include "soergel/subexpr.hpp"

#include <algorithm>

#include "soergel/qnum.hpp"

namespace soergel {

namespace {

constexpr int kBruteForceGuard = 20;

void check_guard(const LetterWord& w) {
    if (static_cast<int>(w.size()) > kBruteForceGuard)
        throw SoergelError("word too long for subexpression enumeration (guard 20)");
}

} // namespace

std::pair<bool, GroupElem> prefix_root(const GroupElem& prefix, Letter u) {
    if (!prefix.is_universal()) throw SoergelError("prefix_root: universal element required");
    GroupElem ul = GroupElem::letter(0, u);
    bool positive = (prefix * ul).length() > prefix.length();
    GroupElem refl = prefix * ul * prefix.inverse();
    return {positive, refl};
}

std::vector<BitVector> enumerate_matching(const LetterWord& w, const GroupElem& g) {
    check_guard(w);
    std::vector<BitVector> out;
    const std::size_t l = w.size();
    for (std::size_t idx = 0; idx < (std::size_t{1} << l); ++idx) {
        BitVector e = bits_from_index(idx, l);
        if (evaluate_word(w, e, g.group_m()) == g) out.push_back(std::move(e));
    }
    return out;
}

namespace {

// One subexpression's contribution in factored form.
struct FactoredTerm {
    int sign = 1;
    std::vector<GroupElem> roots; // sorted
};

// Walk every e once; call sink(final_element, term).
template <typename Sink>
void for_each_term(const LetterWord& w, Sink&& sink) {
    check_guard(w);
    const std::size_t l = w.size();
    for (std::size_t idx = 0; idx < (std::size_t{1} << l); ++idx) {
        GroupElem prefix = GroupElem::identity(0);
        FactoredTerm term;
        term.roots.reserve(l);
        for (std::size_t i = 0; i < l; ++i) {
            auto [positive, refl] = prefix_root(prefix, w[i]);
            if (!positive) term.sign = -term.sign;
            term.roots.push_back(refl);
            if ((idx >> i) & 1u) prefix = prefix.times(w[i]);
        }
        std::sort(term.roots.begin(), term.roots.end());
        sink(prefix, std::move(term));
    }
}

// Sum a bucket of factored terms into one QElem. Terms with identical
// multisets are merged first so only distinct denominators hit the
// polynomial arithmetic.
QElem sum_terms(const RealizationPtr& r, std::vector<FactoredTerm> terms) {
    std::sort(terms.begin(), terms.end(), [](const FactoredTerm& a, const FactoredTerm& b) {
        return std::lexicographical_compare(a.roots.begin(), a.roots.end(), b.roots.begin(),
                                            b.roots.end());
    });
    QElem acc = QElem::zero(r);
    std::size_t i = 0;
    while (i < terms.size()) {
        std::size_t j = i;
        long long count = 0;
        while (j < terms.size() && terms[j].roots == terms[i].roots) {
            count += terms[j].sign;
            ++j;
        }
        if (count != 0) {
            RPoly num = RPoly::from_int(r->rank, r->coef, Int(count));
            acc = q_add(acc, QElem(r, std::move(num), terms[i].roots));
        }
        i = j;
    }
    return acc;
}

} // namespace

QElem a_value_bruteforce(const RealizationPtr& r, const LetterWord& w, const GroupElem& g) {
    if (!g.is_universal()) throw SoergelError("a_value: universal g required");
    std::vector<FactoredTerm> bucket;
    for_each_term(w, [&](const GroupElem& final_elem, FactoredTerm&& term) {
        if (final_elem == g) bucket.push_back(std::move(term));
    });
    return sum_terms(r, std::move(bucket));
}

std::map<GroupElem, QElem> a_value_bruteforce_all(const RealizationPtr& r, const LetterWord& w) {
    std::map<GroupElem, std::vector<FactoredTerm>> buckets;
    for_each_term(w, [&](const GroupElem& final_elem, FactoredTerm&& term) {
        buckets[final_elem].push_back(std::move(term));
    });
    std::map<GroupElem, QElem> out;
    for (auto& [g, terms] : buckets) out.emplace(g, sum_terms(r, std::move(terms)));
    return out;
}

BiPoly k_coefficient(const LetterWord& w, const GroupElem& g) {
    if (!g.is_universal()) throw SoergelError("k_coefficient: universal g required");
    if (!word_is_reduced_expression(w)) return BiPoly::zero();
    GroupElem wprod = word_product(w, 0);
    if (!bruhat_leq(g, wprod)) return BiPoly::zero();
    const int l = static_cast<int>(w.size());
    if (l == 0) return g.is_identity() ? BiPoly::constant(1) : BiPoly::zero();
    Color z = (w[0] == Letter::s) ? Color::X : Color::Y;
    GroupElem s1g = GroupElem::letter(0, w[0]) * g;
    int arg;
    if (s1g.length() > g.length())
        arg = l - g.length() - 1;
    else
        arg = l - g.length();
    if (arg < 0) throw InternalError("k_coefficient: negative floor argument");
    return two_color_binomial(l - 1, arg / 2, sigma_power(z, l - 1));
}

std::vector<GroupElem> x_set(const GroupElem& g, const GroupElem& w) {
    if (!g.is_universal() || !w.is_universal()) throw SoergelError("x_set: universal elements required");
    std::vector<GroupElem> out;
    for (const GroupElem& refl : reflections_up_to(g.length() + w.length() + 1))
        if (bruhat_leq(refl * g, w)) out.push_back(refl);
    std::sort(out.begin(), out.end());
    return out;
}

QElem a_value_closed(const RealizationPtr& r, const LetterWord& w, const GroupElem& g) {
    BiPoly k = k_coefficient(w, g);
    RPoly num = RPoly::constant(r->rank, specialize(k, *r));
    return QElem(r, std::move(num), x_set(g, word_product(w, 0)));
}

RPoly pi_product(const Realization& r, const LetterWord& w) {
    BitVector all_ones(w.size(), 1);
    return zeta_product(r, w, all_ones);
}

RPoly zeta_product(const Realization& r, const LetterWord& w, const BitVector& e) {
    if (w.size() != e.size()) throw SoergelError("length mismatch");
    RPoly out = RPoly::constant(r.rank, CoefElem::one(r.coef));
    GroupElem prefix = GroupElem::identity(r.m);
    for (std::size_t i = 0; i < w.size(); ++i) {
        out = out * act(r, prefix, RPoly::linear(r.alpha(w[i])));
        if (e[i]) prefix = prefix.times(w[i]);
    }
    return out;
}

std::pair<int, std::vector<GroupElem>> zeta_factored(const LetterWord& w, const BitVector& e) {
    if (w.size() != e.size()) throw SoergelError("length mismatch");
    int sign = 1;
    std::vector<GroupElem> roots;
    roots.reserve(w.size());
    GroupElem prefix = GroupElem::identity(0);
    for (std::size_t i = 0; i < w.size(); ++i) {
        auto [positive, refl] = prefix_root(prefix, w[i]);
        if (!positive) sign = -sign;
        roots.push_back(refl);
        if (e[i]) prefix = prefix.times(w[i]);
    }
    std::sort(roots.begin(), roots.end());
    return {sign, std::move(roots)};
}

CoefElem xi(const Realization& r) {
    if (r.is_universal()) throw SoergelError("xi undefined for universal realization");
    if (r.m % 2 == 0) return specialize(two_color_quantum(r.m - 1, Color::X), r);
    return CoefElem::one(r.coef);
}

} // namespace soergel
