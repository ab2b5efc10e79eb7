#include <doctest.h>

#include <set>

#include "soergel/dihedral.hpp"
#include "soergel/qnum.hpp"

using namespace soergel;

namespace {

GroupElem U(const std::string& w) { return word_product(parse_word(w), 0); }
GroupElem F(int m, const std::string& w) { return word_product(parse_word(w), m); }

std::vector<GroupElem> all_elements(int m, int max_len) {
    std::vector<GroupElem> out;
    out.push_back(GroupElem::identity(m));
    int cap = (m == 0) ? max_len : m;
    std::set<std::string> seen{"e"};
    for (int len = 1; len <= cap; ++len)
        for (Letter f : {Letter::s, Letter::t}) {
            GroupElem g = GroupElem::make(m, f, len);
            if (seen.insert(g.str()).second) out.push_back(g);
        }
    return out;
}

} // namespace

TEST_CASE("multiplication and canonical forms") {
    CHECK((U("s") * U("s")).is_identity());
    CHECK((U("st") * U("ts")).is_identity());
    CHECK(F(3, "sts") == F(3, "tst")); // both are the longest element
    CHECK(F(3, "sts").str() == "sts");
    CHECK(U("sts") * U("t") == U("stst"));
    CHECK_THROWS_AS(U("s") * F(3, "s"), SoergelError);

    // Wrapping: stst in the finite group with m = 3 is ts.
    CHECK(project(U("stst"), 3).str() == "ts");
    CHECK(project(U("ststst"), 3).is_identity());
}

TEST_CASE("group laws exhaustively") {
    // Universal window length <= 6 and all finite groups with m <= 6.
    for (int m : {0, 2, 3, 4, 5, 6}) {
        auto elems = all_elements(m, 6);
        for (const GroupElem& a : elems) {
            CHECK((a * a.inverse()).is_identity());
            CHECK((a.inverse() * a).is_identity());
            for (const GroupElem& b : elems)
                for (const GroupElem& c : elems) CHECK((a * b) * c == a * (b * c));
        }
    }
}

TEST_CASE("evaluate_word") {
    LetterWord w = parse_word("sts");
    CHECK(evaluate_word(w, {1, 0, 1}, 0).is_identity());
    CHECK(evaluate_word(w, {1, 1, 1}, 0) == U("sts"));
    CHECK(evaluate_word(w, {0, 0, 1}, 0) == U("s"));
    CHECK_THROWS_AS(evaluate_word(w, {1, 0}, 0), SoergelError);
}

TEST_CASE("bruhat order") {
    CHECK(bruhat_leq(GroupElem::identity(0), U("ststst")));
    CHECK(bruhat_leq(U("s"), U("ts")));
    CHECK_FALSE(bruhat_leq(U("st"), U("ts")));
    CHECK(bruhat_leq(U("st"), U("st")));

    // Partial order axioms, exhaustively on finite groups.
    for (int m : {2, 3, 4, 5, 6}) {
        auto elems = all_elements(m, 0);
        for (const GroupElem& a : elems) {
            CHECK(bruhat_leq(a, a));
            for (const GroupElem& b : elems) {
                if (bruhat_leq(a, b) && bruhat_leq(b, a)) CHECK(a == b);
                for (const GroupElem& c : elems)
                    if (bruhat_leq(a, b) && bruhat_leq(b, c)) CHECK(bruhat_leq(a, c));
            }
        }
    }
}

TEST_CASE("property Z in the length-8 window") {
    auto elems = all_elements(0, 8);
    for (const GroupElem& w : elems)
        for (Letter u : {Letter::s, Letter::t}) {
            GroupElem wu = w.times(u);
            if (wu.length() < w.length()) continue;
            for (const GroupElem& g : elems) {
                if (bruhat_leq(g, w)) CHECK(bruhat_leq(g.times(u), wu));
                bool lhs = bruhat_leq(g.times(u), wu);
                bool rhs = bruhat_leq(g, w) || bruhat_leq(g.times(u), w);
                CHECK(lhs == rhs);
            }
        }
}

TEST_CASE("reflections") {
    auto r1 = reflections_up_to(1);
    REQUIRE(r1.size() == 2);
    CHECK(r1[0] == U("s"));
    CHECK(r1[1] == U("t"));
    CHECK(reflections_up_to(2) == r1);
    auto r3 = reflections_up_to(3);
    REQUIRE(r3.size() == 4);
    CHECK(r3[2] == U("sts"));
    CHECK(r3[3] == U("tst"));
}

TEST_CASE("root coordinates") {
    auto [a1, b1] = root_coordinates(U("s"));
    CHECK(a1 == BiPoly::constant(1));
    CHECK(b1.is_zero());
    auto [a2, b2] = root_coordinates(U("sts"));
    CHECK(a2 == BiPoly::var_x());
    CHECK(b2 == BiPoly::constant(1));
    auto [a3, b3] = root_coordinates(U("tst"));
    CHECK(a3 == BiPoly::constant(1));
    CHECK(b3 == BiPoly::var_y());
    CHECK_THROWS_AS(root_coordinates(U("st")), SoergelError);
}

TEST_CASE("project and lift") {
    CHECK(project(GroupElem::identity(0), 4).is_identity());
    CHECK(project(U("sts"), 3) == F(3, "sts"));
    CHECK(lift_r(GroupElem::identity(3)).is_identity());
    CHECK(lift_r(F(4, "ts")) == U("ts"));
    // The longest element of the m = 4 group lifts to the s-alternating word.
    CHECK(lift_r(F(4, "tsts")) == U("stst"));

    // lift_r is a section of project below the longest element.
    for (int m : {2, 3, 4, 5}) {
        for (int len = 0; len < m; ++len)
            for (Letter f : {Letter::s, Letter::t}) {
                GroupElem u = GroupElem::make(0, f, len);
                CHECK(lift_r(project(u, m)) == u);
            }
    }
}

TEST_CASE("subsequence") {
    LetterWord w = parse_word("sts");
    CHECK(subsequence(w, {1, 1, 1}) == w);
    CHECK(subsequence(w, {0, 0, 0}).empty());
    CHECK(subsequence(parse_word("stst"), {1, 0, 0, 1}) == parse_word("st"));
    CHECK_THROWS_AS(subsequence(w, {1, 0}), SoergelError);
}

TEST_CASE("word and bit parsing round-trips") {
    CHECK(word_str(parse_word("stst")) == "stst");
    CHECK(word_str({}) == "e");
    CHECK(bits_str(parse_bits("0101")) == "0101");
    CHECK(bits_to_index(parse_bits("101")) == 5);
    CHECK(bits_str(bits_from_index(5, 3)) == "101");
}
