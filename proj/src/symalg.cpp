#include "soergel/symalg.hpp"

#include <algorithm>
#include <map>
#include <sstream>

namespace soergel {

// --- RPoly ----------------------------------------------------------------

bool RPoly::mono_less(const std::vector<int>& a, const std::vector<int>& b) {
    int da = 0, db = 0;
    for (int e : a) da += e;
    for (int e : b) db += e;
    if (da != db) return da < db;
    return std::lexicographical_compare(a.begin(), a.end(), b.begin(), b.end());
}

RPoly RPoly::constant(int rank, const CoefElem& c) {
    RPoly p(rank, c.descriptor());
    if (!c.is_zero()) p.terms_.push_back({std::vector<int>(static_cast<std::size_t>(rank), 0), c});
    return p;
}

RPoly RPoly::from_int(int rank, const DescrPtr& d, const Int& v) {
    return constant(rank, CoefElem::from_int(d, v));
}

RPoly RPoly::generator(int rank, const DescrPtr& d, int i) {
    if (i < 0 || i >= rank) throw SoergelError("generator index out of range");
    RPoly p(rank, d);
    std::vector<int> e(static_cast<std::size_t>(rank), 0);
    e[static_cast<std::size_t>(i)] = 1;
    p.terms_.push_back({std::move(e), CoefElem::one(d)});
    return p;
}

RPoly RPoly::linear(const std::vector<CoefElem>& coords) {
    if (coords.empty()) throw SoergelError("linear: empty coordinates");
    const int rank = static_cast<int>(coords.size());
    RPoly p(rank, coords[0].descriptor());
    for (int i = 0; i < rank; ++i) {
        if (coords[static_cast<std::size_t>(i)].is_zero()) continue;
        std::vector<int> e(static_cast<std::size_t>(rank), 0);
        e[static_cast<std::size_t>(i)] = 1;
        p.terms_.push_back({std::move(e), coords[static_cast<std::size_t>(i)]});
    }
    // generator order equals descending graded lex for distinct variables
    return p;
}

RPoly RPoly::from_sorted(int rank, DescrPtr d, std::vector<Term> terms) {
    RPoly p(rank, std::move(d));
    p.terms_ = std::move(terms);
    return p;
}

bool RPoly::is_one() const {
    if (terms_.size() != 1 || !terms_[0].c.is_one()) return false;
    for (int e : terms_[0].exps)
        if (e != 0) return false;
    return true;
}

int RPoly::total_degree() const {
    if (terms_.empty()) return -1;
    int d = 0;
    for (int e : terms_.front().exps) d += e;
    return d;
}

RPoly RPoly::operator+(const RPoly& o) const {
    if (rank_ != o.rank_) throw SoergelError("rank mismatch");
    std::vector<Term> out;
    out.reserve(terms_.size() + o.terms_.size());
    std::size_t i = 0, j = 0;
    while (i < terms_.size() && j < o.terms_.size()) {
        const Term& a = terms_[i];
        const Term& b = o.terms_[j];
        if (a.exps == b.exps) {
            CoefElem c = a.c + b.c;
            if (!c.is_zero()) out.push_back({a.exps, std::move(c)});
            ++i;
            ++j;
        } else if (mono_less(b.exps, a.exps)) {
            out.push_back(a);
            ++i;
        } else {
            out.push_back(b);
            ++j;
        }
    }
    for (; i < terms_.size(); ++i) out.push_back(terms_[i]);
    for (; j < o.terms_.size(); ++j) out.push_back(o.terms_[j]);
    return from_sorted(rank_, d_, std::move(out));
}

RPoly RPoly::operator-() const {
    RPoly p(*this);
    for (Term& t : p.terms_) t.c = -t.c;
    return p;
}

RPoly RPoly::operator-(const RPoly& o) const { return *this + (-o); }

RPoly RPoly::scaled(const CoefElem& c) const {
    if (c.is_zero()) return zero(rank_, d_);
    RPoly p(*this);
    std::vector<Term> out;
    out.reserve(p.terms_.size());
    for (Term& t : p.terms_) {
        CoefElem v = t.c * c;
        if (!v.is_zero()) out.push_back({std::move(t.exps), std::move(v)});
    }
    p.terms_ = std::move(out);
    return p;
}

RPoly RPoly::operator*(const RPoly& o) const {
    if (rank_ != o.rank_) throw SoergelError("rank mismatch");
    if (terms_.empty() || o.terms_.empty()) return zero(rank_, d_);
    auto cmp = [](const std::vector<int>& a, const std::vector<int>& b) { return mono_less(a, b); };
    std::map<std::vector<int>, CoefElem, decltype(cmp)> acc(cmp);
    for (const Term& a : terms_)
        for (const Term& b : o.terms_) {
            std::vector<int> e(a.exps);
            for (std::size_t k = 0; k < e.size(); ++k) e[k] += b.exps[k];
            CoefElem c = a.c * b.c;
            auto it = acc.find(e);
            if (it == acc.end())
                acc.emplace(std::move(e), std::move(c));
            else
                it->second = it->second + c;
        }
    std::vector<Term> out;
    out.reserve(acc.size());
    for (auto it = acc.rbegin(); it != acc.rend(); ++it)
        if (!it->second.is_zero()) out.push_back({it->first, it->second});
    return from_sorted(rank_, d_, std::move(out));
}

bool RPoly::operator==(const RPoly& o) const {
    if (rank_ != o.rank_ || terms_.size() != o.terms_.size()) return false;
    for (std::size_t i = 0; i < terms_.size(); ++i)
        if (terms_[i].exps != o.terms_[i].exps || terms_[i].c != o.terms_[i].c) return false;
    return true;
}

std::string RPoly::str() const {
    std::vector<std::string> names;
    for (int i = 0; i < rank_; ++i) names.push_back("v" + std::to_string(i + 1));
    return str(names);
}

std::string RPoly::str(const std::vector<std::string>& names) const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const Term& t : terms_) {
        std::string cs = t.c.str();
        // Multi-term coefficients keep their sign inside parentheses;
        // single-term ones contribute it to the summand.
        bool multi = cs.find(' ') != std::string::npos;
        bool neg = !multi && cs[0] == '-';
        if (neg) cs = cs.substr(1);
        if (first) {
            if (neg) os << "-";
        } else {
            os << (neg ? " - " : " + ");
        }
        first = false;
        bool has_var = false;
        for (int e : t.exps)
            if (e > 0) has_var = true;
        if (!has_var) {
            // A lone constant term needs no parentheses.
            os << (multi && terms_.size() > 1 ? "(" + cs + ")" : cs);
            continue;
        }
        bool coef_shown = false;
        if (multi) {
            os << "(" << cs << ")";
            coef_shown = true;
        } else if (cs != "1") {
            os << cs;
            coef_shown = true;
        }
        bool first_var = true;
        for (std::size_t i = 0; i < t.exps.size(); ++i) {
            if (t.exps[i] == 0) continue;
            if (coef_shown || !first_var) os << "*";
            os << names[i];
            if (t.exps[i] > 1) os << "^" << t.exps[i];
            first_var = false;
            coef_shown = true;
        }
    }
    return os.str();
}

std::vector<std::string> default_varnames(const Realization& r) {
    if (r.is_universal()) return {"a_s", "a_t"};
    std::vector<std::string> names;
    for (int i = 0; i < r.rank; ++i) names.push_back("v" + std::to_string(i + 1));
    return names;
}

// --- action and Demazure ----------------------------------------------------

RPoly act(const Realization& r, Letter u, const RPoly& p) {
    const auto& alpha = r.alpha(u);
    const auto& cov = r.covector(u);
    // Images of the generators under the reflection.
    std::vector<RPoly> images;
    images.reserve(static_cast<std::size_t>(r.rank));
    RPoly alpha_lin = RPoly::linear(alpha);
    for (int j = 0; j < r.rank; ++j) {
        RPoly img = RPoly::generator(r.rank, p.descriptor(), j) -
                    alpha_lin.scaled(cov[static_cast<std::size_t>(j)]);
        images.push_back(std::move(img));
    }
    RPoly out = RPoly::zero(p.rank(), p.descriptor());
    for (const RPoly::Term& t : p.terms()) {
        RPoly term = RPoly::constant(p.rank(), t.c);
        for (std::size_t j = 0; j < t.exps.size(); ++j)
            for (int k = 0; k < t.exps[j]; ++k) term = term * images[j];
        out = out + term;
    }
    return out;
}

RPoly act(const Realization& r, const GroupElem& g, const RPoly& p) {
    // g = u_1 ... u_k applied outside-in: apply u_k first.
    RPoly out = p;
    for (int i = g.length() - 1; i >= 0; --i) out = act(r, g.letter_at(i), out);
    return out;
}

RPoly act_selected(const Realization& r, const LetterWord& w, const BitVector& e, const RPoly& p) {
    if (w.size() != e.size()) throw SoergelError("length mismatch");
    RPoly out = p;
    for (std::size_t i = w.size(); i-- > 0;)
        if (e[i]) out = act(r, w[i], out);
    return out;
}

namespace {

// del_u on a single monomial via del(v*m) = <cov,v>*m + u(v)*del(m).
RPoly demazure_monomial(const Realization& r, Letter u, const std::vector<int>& exps,
                        const DescrPtr& d) {
    const int rank = static_cast<int>(exps.size());
    int j = 0;
    while (j < rank && exps[static_cast<std::size_t>(j)] == 0) ++j;
    if (j == rank) return RPoly::zero(rank, d);
    std::vector<int> rest(exps);
    --rest[static_cast<std::size_t>(j)];
    RPoly rest_poly = RPoly::from_sorted(rank, d, {{rest, CoefElem::one(d)}});
    RPoly first = rest_poly.scaled(r.covector(u)[static_cast<std::size_t>(j)]);
    RPoly v_image = act(r, u, RPoly::generator(rank, d, j));
    RPoly second = v_image * demazure_monomial(r, u, rest, d);
    return first + second;
}

} // namespace

RPoly demazure(const Realization& r, Letter u, const RPoly& p) {
    RPoly out = RPoly::zero(p.rank(), p.descriptor());
    for (const RPoly::Term& t : p.terms())
        out = out + demazure_monomial(r, u, t.exps, p.descriptor()).scaled(t.c);
    return out;
}

// --- QElem ------------------------------------------------------------------

QElem::QElem(RealizationPtr r, RPoly num, std::vector<GroupElem> den)
    : r_(std::move(r)), num_(std::move(num)), den_(std::move(den)) {
    std::sort(den_.begin(), den_.end());
}

QElem QElem::from_rpoly(RealizationPtr r, RPoly num) { return QElem(std::move(r), std::move(num), {}); }

QElem QElem::zero(const RealizationPtr& r) {
    return from_rpoly(r, RPoly::zero(r->rank, r->coef));
}

QElem QElem::one(const RealizationPtr& r) {
    return from_rpoly(r, RPoly::constant(r->rank, CoefElem::one(r->coef)));
}

RPoly root_product(const Realization& r, const std::vector<GroupElem>& refls) {
    RPoly out = RPoly::constant(r.rank, CoefElem::one(r.coef));
    for (const GroupElem& refl : refls) out = out * RPoly::linear(r.root_linear(refl));
    return out;
}

namespace {

// Multiset difference a \ b on sorted vectors.
std::vector<GroupElem> ms_diff(const std::vector<GroupElem>& a, const std::vector<GroupElem>& b) {
    std::vector<GroupElem> out;
    std::size_t i = 0, j = 0;
    while (i < a.size() && j < b.size()) {
        if (a[i] == b[j]) {
            ++i;
            ++j;
        } else if (a[i] < b[j]) {
            out.push_back(a[i++]);
        } else {
            ++j;
        }
    }
    for (; i < a.size(); ++i) out.push_back(a[i]);
    return out;
}

std::vector<GroupElem> ms_union_max(const std::vector<GroupElem>& a, const std::vector<GroupElem>& b) {
    std::vector<GroupElem> out;
    std::size_t i = 0, j = 0;
    while (i < a.size() || j < b.size()) {
        if (j == b.size() || (i < a.size() && a[i] < b[j])) out.push_back(a[i++]);
        else if (i == a.size() || b[j] < a[i]) out.push_back(b[j++]);
        else {
            out.push_back(a[i]);
            ++i;
            ++j;
        }
    }
    return out;
}

std::vector<GroupElem> ms_concat(std::vector<GroupElem> a, const std::vector<GroupElem>& b) {
    a.insert(a.end(), b.begin(), b.end());
    std::sort(a.begin(), a.end());
    return a;
}

void require_same_realization(const QElem& a, const QElem& b) {
    if (a.realization() != b.realization() && !a.realization()->same_ring(*b.realization()))
        throw SoergelError("realization mismatch");
}

} // namespace

QElem q_add(const QElem& a, const QElem& b) {
    require_same_realization(a, b);
    std::vector<GroupElem> den = ms_union_max(a.den_, b.den_);
    RPoly num = a.num_ * root_product(*a.r_, ms_diff(den, a.den_)) +
                b.num_ * root_product(*a.r_, ms_diff(den, b.den_));
    return QElem(a.r_, std::move(num), std::move(den));
}

QElem q_neg(const QElem& a) { return QElem(a.realization(), -a.num(), a.den()); }

QElem q_sub(const QElem& a, const QElem& b) { return q_add(a, q_neg(b)); }

QElem q_mul(const QElem& a, const QElem& b) {
    require_same_realization(a, b);
    return QElem(a.realization(), a.num() * b.num(), ms_concat(a.den(), b.den()));
}

QElem q_arith(RingOp op, const QElem& a, const QElem& b) {
    switch (op) {
    case RingOp::add: return q_add(a, b);
    case RingOp::mul: return q_mul(a, b);
    case RingOp::sub: return q_sub(a, b);
    case RingOp::neg: return q_neg(a);
    }
    throw InternalError("bad op");
}

QElem q_scale(const QElem& a, const RPoly& p) {
    return QElem(a.realization(), a.num() * p, a.den());
}

QElem q_div_root(const QElem& a, const GroupElem& refl) {
    std::vector<GroupElem> den = a.den();
    den.push_back(refl);
    return QElem(a.realization(), a.num(), std::move(den));
}

bool q_equal(const QElem& a, const QElem& b) {
    require_same_realization(a, b);
    std::vector<GroupElem> a_only = ms_diff(a.den_, b.den_);
    std::vector<GroupElem> b_only = ms_diff(b.den_, a.den_);
    return a.num_ * root_product(*a.r_, b_only) == b.num_ * root_product(*a.r_, a_only);
}

bool q_is_zero(const QElem& a) { return a.num_is_zero(); }

std::string QElem::str() const {
    std::string out = num_.str(default_varnames(*r_));
    if (!den_.empty()) {
        out = "(" + out + ") / ";
        out += root_product(*r_, den_).str(default_varnames(*r_));
    }
    return out;
}

// --- exact division and the membership base case ------------------------------

namespace {

using Terms = std::vector<RPoly::Term>; // descending graded lex

// out -= c * x^shift * divisor, keeping descending order.
void terms_axpy(Terms& out, const CoefElem& c, const std::vector<int>& shift, const Terms& divisor) {
    Terms prod;
    prod.reserve(divisor.size());
    for (const RPoly::Term& t : divisor) {
        std::vector<int> e(t.exps);
        for (std::size_t k = 0; k < e.size(); ++k) e[k] += shift[k];
        prod.push_back({std::move(e), -(t.c * c)});
    }
    Terms merged;
    merged.reserve(out.size() + prod.size());
    std::size_t i = 0, j = 0;
    while (i < out.size() && j < prod.size()) {
        if (out[i].exps == prod[j].exps) {
            CoefElem v = out[i].c + prod[j].c;
            if (!v.is_zero()) merged.push_back({out[i].exps, std::move(v)});
            ++i;
            ++j;
        } else if (RPoly::mono_less(prod[j].exps, out[i].exps)) {
            merged.push_back(std::move(out[i++]));
        } else {
            merged.push_back(std::move(prod[j++]));
        }
    }
    for (; i < out.size(); ++i) merged.push_back(std::move(out[i]));
    for (; j < prod.size(); ++j) merged.push_back(std::move(prod[j]));
    out = std::move(merged);
}

// Exact division by a linear form, entirely in Coef. When the quotient
// lies in Coef[v] the leading coefficient divides exactly at every step;
// a step that fails (monomial or coefficient) certifies that the full
// fraction is not in R, because clearing a factor can never remove a
// denominator introduced earlier.
std::optional<Terms> terms_divide_linear(const Terms& num, const std::vector<CoefElem>& coords) {
    const std::size_t rank = coords.size();
    std::size_t lead = rank;
    for (std::size_t j = 0; j < rank; ++j)
        if (!coords[j].is_zero()) {
            lead = j;
            break;
        }
    if (lead == rank) return std::nullopt; // zero divisor polynomial
    Terms divisor;
    for (std::size_t j = lead; j < rank; ++j) {
        if (coords[j].is_zero()) continue;
        std::vector<int> e(rank, 0);
        e[j] = 1;
        divisor.push_back({std::move(e), coords[j]});
    }
    const CoefElem& lead_c = divisor.front().c;
    const CoefKind kind = lead_c.descriptor()->kind();
    // For prime fields and monic quotients, lead^{-1} = adj / adj_den with
    // adj in Coef and adj_den a positive integer; computed once per factor.
    CoefElem adj = CoefElem::one(lead_c.descriptor());
    Int adj_den = 1;
    if (kind == CoefKind::prime_field || kind == CoefKind::quotient) {
        FracElem inv = FracElem::of(CoefElem::one(lead_c.descriptor()), lead_c);
        adj = inv.num();
        adj_den = (kind == CoefKind::quotient) ? inv.den().as_coords()[0] : Int(1);
    }
    Terms rem = num;
    Terms quot;
    while (!rem.empty()) {
        const RPoly::Term& lt = rem.front();
        if (lt.exps[lead] < 1) return std::nullopt;
        std::vector<int> shift(lt.exps);
        --shift[lead];
        std::optional<CoefElem> qc;
        switch (kind) {
        case CoefKind::integers:
            if (lt.c.as_int() % lead_c.as_int() != 0) return std::nullopt;
            qc = CoefElem::from_int(lt.c.descriptor(), lt.c.as_int() / lead_c.as_int());
            break;
        case CoefKind::prime_field: qc = lt.c * adj; break;
        case CoefKind::quotient: {
            CoefElem scaled = lt.c * adj;
            std::vector<Int> coords = scaled.as_coords();
            for (Int& v : coords) {
                if (v % adj_den != 0) return std::nullopt;
                v /= adj_den;
            }
            qc = CoefElem::from_coords(lt.c.descriptor(), std::move(coords));
            break;
        }
        case CoefKind::bivariate_integers:
            qc = FracElem::of(lt.c, lead_c).is_integral();
            break;
        }
        if (!qc) return std::nullopt;
        terms_axpy(rem, *qc, shift, divisor);
        quot.push_back({std::move(shift), std::move(*qc)});
    }
    std::sort(quot.begin(), quot.end(), [](const RPoly::Term& a, const RPoly::Term& b) {
        return RPoly::mono_less(b.exps, a.exps);
    });
    return quot;
}

} // namespace

std::optional<RPoly> is_polynomial(const QElem& a) {
    Terms cur = a.num().terms();
    for (const GroupElem& refl : a.den()) {
        auto next = terms_divide_linear(cur, a.realization()->root_linear(refl));
        if (!next) return std::nullopt;
        cur = std::move(*next);
    }
    return RPoly::from_sorted(a.num().rank(), a.num().descriptor(), std::move(cur));
}

} // namespace soergel
