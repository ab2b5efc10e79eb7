#include "soergel/bipoly.hpp"

#include <algorithm>
#include <map>
#include <sstream>

namespace soergel {

bool BiPoly::term_less(const Term& a, const Term& b) {
    int da = a.ex + a.ey, db = b.ex + b.ey;
    if (da != db) return da < db;
    return a.ex < b.ex;
}

BiPoly BiPoly::constant(Int c) {
    BiPoly p;
    if (c != 0) p.terms_.push_back({0, 0, std::move(c)});
    return p;
}

BiPoly BiPoly::var_x() { return monomial(1, 0, 1); }
BiPoly BiPoly::var_y() { return monomial(0, 1, 1); }

BiPoly BiPoly::monomial(int ex, int ey, Int c) {
    BiPoly p;
    if (c != 0) p.terms_.push_back({ex, ey, std::move(c)});
    return p;
}

BiPoly BiPoly::from_sorted(std::vector<Term> terms) {
    BiPoly p;
    p.terms_ = std::move(terms);
    return p;
}

bool BiPoly::is_one() const {
    return terms_.size() == 1 && terms_[0].ex == 0 && terms_[0].ey == 0 && terms_[0].c == 1;
}

int BiPoly::total_degree() const {
    if (terms_.empty()) return -1;
    return terms_.front().ex + terms_.front().ey;
}

BiPoly BiPoly::operator+(const BiPoly& o) const {
    std::vector<Term> out;
    out.reserve(terms_.size() + o.terms_.size());
    std::size_t i = 0, j = 0;
    while (i < terms_.size() && j < o.terms_.size()) {
        const Term& a = terms_[i];
        const Term& b = o.terms_[j];
        if (a.ex == b.ex && a.ey == b.ey) {
            Int c = a.c + b.c;
            if (c != 0) out.push_back({a.ex, a.ey, std::move(c)});
            ++i;
            ++j;
        } else if (term_less(b, a)) {
            out.push_back(a);
            ++i;
        } else {
            out.push_back(b);
            ++j;
        }
    }
    for (; i < terms_.size(); ++i) out.push_back(terms_[i]);
    for (; j < o.terms_.size(); ++j) out.push_back(o.terms_[j]);
    return from_sorted(std::move(out));
}

BiPoly BiPoly::operator-() const {
    BiPoly p(*this);
    for (Term& t : p.terms_) t.c = -t.c;
    return p;
}

BiPoly BiPoly::operator-(const BiPoly& o) const { return *this + (-o); }

BiPoly BiPoly::scaled(const Int& k) const {
    if (k == 0) return BiPoly();
    BiPoly p(*this);
    for (Term& t : p.terms_) t.c *= k;
    return p;
}

BiPoly BiPoly::operator*(const BiPoly& o) const {
    if (terms_.empty() || o.terms_.empty()) return BiPoly();
    // Accumulate into a map keyed by exponent pair; ascending map order is
    // reversed into the descending storage order at the end.
    std::map<std::pair<int, int>, Int> acc;
    for (const Term& a : terms_)
        for (const Term& b : o.terms_) {
            Int& slot = acc[{a.ex + b.ex, a.ey + b.ey}];
            slot += a.c * b.c;
        }
    std::vector<Term> out;
    out.reserve(acc.size());
    for (auto& [k, c] : acc)
        if (c != 0) out.push_back({k.first, k.second, std::move(c)});
    std::sort(out.begin(), out.end(), [](const Term& a, const Term& b) { return term_less(b, a); });
    return from_sorted(std::move(out));
}

bool BiPoly::operator==(const BiPoly& o) const {
    if (terms_.size() != o.terms_.size()) return false;
    for (std::size_t i = 0; i < terms_.size(); ++i)
        if (terms_[i].ex != o.terms_[i].ex || terms_[i].ey != o.terms_[i].ey ||
            terms_[i].c != o.terms_[i].c)
            return false;
    return true;
}

std::optional<BiPoly> BiPoly::divide_exact(const BiPoly& divisor) const {
    if (divisor.is_zero()) return std::nullopt;
    BiPoly rem(*this);
    std::vector<Term> quot;
    const Term& lead = divisor.terms_.front();
    while (!rem.is_zero()) {
        const Term& lt = rem.terms_.front();
        if (lt.ex < lead.ex || lt.ey < lead.ey) return std::nullopt;
        if (lt.c % lead.c != 0) return std::nullopt;
        Term q{lt.ex - lead.ex, lt.ey - lead.ey, lt.c / lead.c};
        rem = rem - divisor * monomial(q.ex, q.ey, q.c);
        quot.push_back(std::move(q));
    }
    std::sort(quot.begin(), quot.end(), [](const Term& a, const Term& b) { return term_less(b, a); });
    return from_sorted(std::move(quot));
}

Int BiPoly::eval(const Int& x, const Int& y) const {
    Int acc = 0;
    for (const Term& t : terms_) {
        Int v = t.c;
        for (int i = 0; i < t.ex; ++i) v *= x;
        for (int i = 0; i < t.ey; ++i) v *= y;
        acc += v;
    }
    return acc;
}

std::string BiPoly::str() const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const Term& t : terms_) {
        Int c = t.c;
        if (first) {
            if (c < 0) {
                os << "-";
                c = -c;
            }
        } else {
            os << (c < 0 ? " - " : " + ");
            if (c < 0) c = -c;
        }
        first = false;
        bool has_var = t.ex > 0 || t.ey > 0;
        if (c != 1 || !has_var) {
            os << c;
            if (has_var) os << "*";
        }
        if (t.ex > 0) {
            os << "X";
            if (t.ex > 1) os << "^" << t.ex;
        }
        if (t.ey > 0) {
            if (t.ex > 0) os << "*";
            os << "Y";
            if (t.ey > 1) os << "^" << t.ey;
        }
    }
    return os.str();
}

} // namespace soergel
