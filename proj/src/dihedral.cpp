#include "soergel/dihedral.hpp"

#include "soergel/qnum.hpp"

namespace soergel {

GroupElem GroupElem::make(int m, Letter first, int len) {
    if (len < 0) throw SoergelError("negative word length");
    if (m != 0) {
        if (m < 2) throw SoergelError("finite dihedral group needs m >= 2");
        // Wrap an alternating word of arbitrary length into the canonical
        // range 0..m: alternating(f, l) = alternating(sigma(f), 2m - l) for
        // m < l < 2m, and the length-2m word is the identity.
        len %= 2 * m;
        if (len > m) {
            first = other(first);
            len = 2 * m - len;
        }
        if (len == m) first = Letter::s;
    }
    return GroupElem(m, len, len == 0 ? Letter::s : first);
}

Letter GroupElem::letter_at(int i) const {
    if (i < 0 || i >= len_) throw InternalError("letter_at out of range");
    return (i % 2 == 0) ? first_ : other(first_);
}

GroupElem GroupElem::operator*(const GroupElem& o) const {
    if (m_ != o.m_) throw SoergelError("group mismatch");
    // Multiply the universal lifts, cancelling at the junction, then wrap.
    int la = len_, lb = o.len_;
    Letter fa = first_, fb = o.first_;
    while (la > 0 && lb > 0) {
        Letter last_a = (la % 2 == 1) ? fa : other(fa);
        if (last_a != fb) break;
        --la;
        --lb;
        fb = other(fb);
    }
    if (la == 0) return make(m_, fb, lb);
    return make(m_, fa, la + lb);
}

GroupElem GroupElem::inverse() const {
    if (len_ == 0) return *this;
    return make(m_, last(), len_);
}

bool GroupElem::operator<(const GroupElem& o) const {
    if (m_ != o.m_) return m_ < o.m_;
    if (len_ != o.len_) return len_ < o.len_;
    if (len_ == 0) return false;
    return static_cast<int>(first_) < static_cast<int>(o.first_);
}

std::string GroupElem::str() const {
    if (len_ == 0) return "e";
    std::string out;
    for (int i = 0; i < len_; ++i) out.push_back(letter_char(letter_at(i)));
    return out;
}

LetterWord parse_word(const std::string& src) {
    LetterWord w;
    if (src == "e" || src == "-") return w;
    for (char c : src) {
        if (c == 's') w.push_back(Letter::s);
        else if (c == 't') w.push_back(Letter::t);
        else throw SoergelError(std::string("bad letter '") + c + "' in word");
    }
    return w;
}

std::string word_str(const LetterWord& w) {
    if (w.empty()) return "e";
    std::string out;
    for (Letter u : w) out.push_back(letter_char(u));
    return out;
}

GroupElem word_product(const LetterWord& w, int m) {
    GroupElem g = GroupElem::identity(m);
    for (Letter u : w) g = g.times(u);
    return g;
}

bool word_is_reduced_expression(const LetterWord& w) {
    for (std::size_t i = 1; i < w.size(); ++i)
        if (w[i] == w[i - 1]) return false;
    return true;
}

BitVector parse_bits(const std::string& src) {
    BitVector e;
    if (src == "-") return e;
    for (char c : src) {
        if (c == '0') e.push_back(0);
        else if (c == '1') e.push_back(1);
        else throw SoergelError(std::string("bad bit '") + c + "'");
    }
    return e;
}

std::string bits_str(const BitVector& e) {
    std::string out;
    for (auto b : e) out.push_back(b ? '1' : '0');
    return out;
}

BitVector bits_from_index(std::size_t index, std::size_t len) {
    BitVector e(len, 0);
    for (std::size_t i = 0; i < len; ++i) e[i] = (index >> i) & 1u;
    return e;
}

std::size_t bits_to_index(const BitVector& e) {
    std::size_t idx = 0;
    for (std::size_t i = 0; i < e.size(); ++i)
        if (e[i]) idx |= (std::size_t{1} << i);
    return idx;
}

GroupElem evaluate_word(const LetterWord& w, const BitVector& e, int m) {
    if (w.size() != e.size()) throw SoergelError("length mismatch");
    GroupElem g = GroupElem::identity(m);
    for (std::size_t i = 0; i < w.size(); ++i)
        if (e[i]) g = g.times(w[i]);
    return g;
}

bool bruhat_leq(const GroupElem& g, const GroupElem& w) {
    if (g.group_m() != w.group_m()) throw SoergelError("group mismatch");
    return g == w || g.length() < w.length();
}

std::vector<GroupElem> reflections_up_to(int L) {
    std::vector<GroupElem> out;
    for (int len = 1; len <= L; len += 2) {
        out.push_back(GroupElem::make(0, Letter::s, len));
        out.push_back(GroupElem::make(0, Letter::t, len));
    }
    return out;
}

std::pair<BiPoly, BiPoly> root_coordinates(const GroupElem& refl) {
    if (!refl.is_universal() || refl.length() % 2 == 0)
        throw SoergelError("root_coordinates: universal odd-length element required");
    const int l = refl.length();
    if (refl.first() == Letter::t) {
        // s * refl is longer: gamma = [(l-1)/2]_X alpha_s + [(l+1)/2]_Y alpha_t.
        return {two_color_quantum((l - 1) / 2, Color::X), two_color_quantum((l + 1) / 2, Color::Y)};
    }
    // refl starts (and ends) with s, so t * refl is longer.
    return {two_color_quantum((l + 1) / 2, Color::X), two_color_quantum((l - 1) / 2, Color::Y)};
}

GroupElem project(const GroupElem& g, int m) {
    if (!g.is_universal()) throw SoergelError("project: universal element required");
    return GroupElem::make(m, g.is_identity() ? Letter::s : g.first(), g.length());
}

GroupElem lift_r(const GroupElem& g) {
    if (g.is_universal()) return g;
    // Below the longest element the reduced word lifts as is; the longest
    // element lifts to the alternating word starting with s.
    return GroupElem::make(0, g.is_identity() ? Letter::s : g.first(), g.length());
}

LetterWord subsequence(const LetterWord& w, const BitVector& keep) {
    if (w.size() != keep.size()) throw SoergelError("length mismatch");
    LetterWord out;
    for (std::size_t i = 0; i < w.size(); ++i)
        if (keep[i]) out.push_back(w[i]);
    return out;
}

LetterWord alternating_word(Letter first, int len) {
    LetterWord w;
    w.reserve(static_cast<std::size_t>(len));
    for (int i = 0; i < len; ++i) w.push_back(i % 2 == 0 ? first : other(first));
    return w;
}

} // namespace soergel
