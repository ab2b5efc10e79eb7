#ifndef SOERGEL_SYMALG_HPP
#define SOERGEL_SYMALG_HPP

#include <optional>
#include <string>
#include <vector>

#include "soergel/realization.hpp"

namespace soergel {

// Element of R = Sym(V) = Coef[v_1, ..., v_rank]: sorted sparse terms in
// descending graded lex, no zero coefficients. Equality is structural.
class RPoly {
public:
    struct Term {
        std::vector<int> exps;
        CoefElem c;
    };

    RPoly(int rank, DescrPtr d) : rank_(rank), d_(std::move(d)) {}

    static RPoly zero(int rank, DescrPtr d) { return RPoly(rank, std::move(d)); }
    static RPoly constant(int rank, const CoefElem& c);
    static RPoly from_int(int rank, const DescrPtr& d, const Int& v);
    static RPoly generator(int rank, const DescrPtr& d, int i);
    // The linear form sum_i coords[i] * v_i.
    static RPoly linear(const std::vector<CoefElem>& coords);
    static RPoly from_sorted(int rank, DescrPtr d, std::vector<Term> terms);

    int rank() const { return rank_; }
    const DescrPtr& descriptor() const { return d_; }
    const std::vector<Term>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    bool is_one() const;
    int total_degree() const; // -1 for the zero polynomial

    RPoly operator+(const RPoly& o) const;
    RPoly operator-(const RPoly& o) const;
    RPoly operator*(const RPoly& o) const;
    RPoly operator-() const;
    RPoly scaled(const CoefElem& c) const;

    bool operator==(const RPoly& o) const;
    bool operator!=(const RPoly& o) const { return !(*this == o); }

    std::string str() const;
    std::string str(const std::vector<std::string>& varnames) const;

    // Ascending comparison of exponent vectors in graded lex.
    static bool mono_less(const std::vector<int>& a, const std::vector<int>& b);

private:
    int rank_;
    DescrPtr d_;
    std::vector<Term> terms_;
};

// Ring automorphism given by the reflection u, applied to p. Group
// elements act letter by letter along their alternating word.
RPoly act(const Realization& r, Letter u, const RPoly& p);
RPoly act(const Realization& r, const GroupElem& g, const RPoly& p);
// Action of w^e = s_1^{e_1} ... s_l^{e_l}.
RPoly act_selected(const Realization& r, const LetterWord& w, const BitVector& e, const RPoly& p);

// Demazure operator del_u(p) = (p - u(p)) / alpha_u, computed division
// free via the twisted Leibniz rule.
RPoly demazure(const Realization& r, Letter u, const RPoly& p);

// Element of the localized ring: an RPoly numerator over a multiset of
// positive-root factors, each recorded by its universal reflection. The
// representation is unreduced; equality is by cross-multiplication.
class QElem {
public:
    QElem(RealizationPtr r, RPoly num, std::vector<GroupElem> den_reflections);

    static QElem from_rpoly(RealizationPtr r, RPoly num);
    static QElem zero(const RealizationPtr& r);
    static QElem one(const RealizationPtr& r);

    const RealizationPtr& realization() const { return r_; }
    const RPoly& num() const { return num_; }
    const std::vector<GroupElem>& den() const { return den_; }
    bool num_is_zero() const { return num_.is_zero(); }

    std::string str() const;

private:
    RealizationPtr r_;
    RPoly num_;
    std::vector<GroupElem> den_; // sorted ascending

    friend QElem q_add(const QElem&, const QElem&);
    friend QElem q_mul(const QElem&, const QElem&);
    friend QElem q_neg(const QElem&);
    friend bool q_equal(const QElem&, const QElem&);
    friend std::optional<RPoly> is_polynomial(const QElem&);
};

QElem q_add(const QElem& a, const QElem& b);
QElem q_sub(const QElem& a, const QElem& b);
QElem q_mul(const QElem& a, const QElem& b);
QElem q_neg(const QElem& a);
QElem q_arith(RingOp op, const QElem& a, const QElem& b);
QElem q_scale(const QElem& a, const RPoly& p);
QElem q_div_root(const QElem& a, const GroupElem& refl);
bool q_equal(const QElem& a, const QElem& b);
bool q_is_zero(const QElem& a);

// The RPoly equal to a when every denominator factor divides out: exact
// multivariate division over Frac(Coef) by each root factor in turn, then
// an integrality check on all remaining coefficients.
std::optional<RPoly> is_polynomial(const QElem& a);

// Product of the root linears of a reflection multiset, as an RPoly.
RPoly root_product(const Realization& r, const std::vector<GroupElem>& refls);

std::vector<std::string> default_varnames(const Realization& r);

} // namespace soergel

#endif
