#include <doctest.h>

#include "soergel/json_io.hpp"
#include "soergel/qnum.hpp"
#include "soergel/realization.hpp"

using namespace soergel;

namespace {

BiPoly X() { return BiPoly::var_x(); }
BiPoly Y() { return BiPoly::var_y(); }
BiPoly C(long long v) { return BiPoly::constant(v); }

} // namespace

TEST_CASE("small quantum numbers") {
    CHECK(two_color_quantum(0, Color::X).is_zero());
    CHECK(two_color_quantum(0, Color::Y).is_zero());
    CHECK(two_color_quantum(1, Color::X) == C(1));
    CHECK(two_color_quantum(2, Color::X) == X());
    CHECK(two_color_quantum(2, Color::Y) == Y());
    CHECK(two_color_quantum(3, Color::X) == X() * Y() - C(1));
    CHECK(two_color_quantum(4, Color::X) == X() * X() * Y() - C(2) * X());
}

TEST_CASE("sigma") {
    CHECK(sigma_power(Color::X, 1) == Color::Y);
    CHECK(sigma_power(Color::X, 2) == Color::X);
    CHECK(sigma_power(Color::Y, -3) == Color::X);
    CHECK(sigma_power(Color::Y, 0) == Color::Y);
}

TEST_CASE("binomial basics") {
    for (int m = 0; m <= 8; ++m) {
        CHECK(two_color_binomial(m, 0, Color::X) == C(1));
        if (m >= 1) CHECK(two_color_binomial(m, 1, Color::Y) == two_color_quantum(m, Color::Y));
    }
    BiPoly expect = (X() * Y() - C(1)) * (X() * Y() - C(2));
    CHECK(two_color_binomial(4, 2, Color::X) == expect);
    CHECK_THROWS_AS(two_color_binomial(3, 4, Color::X), SoergelError);
}

TEST_CASE("parity and shift up to 30") {
    for (int n = 0; n <= 30; ++n) {
        if (n % 2 == 1) {
            CHECK(two_color_quantum(n, Color::X) == two_color_quantum(n, Color::Y));
        } else {
            auto qx = two_color_quantum(n, Color::X).divide_exact(X());
            auto qy = two_color_quantum(n, Color::Y).divide_exact(Y());
            REQUIRE(qx.has_value());
            REQUIRE(qy.has_value());
            CHECK(*qx == *qy);
        }
        for (Color z : {Color::X, Color::Y})
            CHECK(two_color_quantum(n, z) == two_color_quantum(n, sigma_power(z, n)));
    }
}

TEST_CASE("specialization") {
    auto z = CoefDescriptor::integers();
    CoefElem one = CoefElem::from_int(z, 1);
    CoefElem two = CoefElem::from_int(z, 2);
    CHECK(specialize_xy(two_color_quantum(4, Color::X), one, two).is_zero());
    CHECK(specialize_xy(two_color_quantum(3, Color::X), one, one).is_zero());
    CHECK(specialize_xy(C(1), two, two) == one);

    // Universal specialization is the identity embedding.
    RealizationPtr univ = universal_realization();
    CHECK(specialize(two_color_quantum(5, Color::X), *univ) ==
          CoefElem::from_bipoly(CoefDescriptor::bivariate(), two_color_quantum(5, Color::X)));
}

TEST_CASE("assumption check on catalog realizations") {
    auto a2 = load_catalog_realization("a2");
    AssumptionReport rep = assumption_check(*a2);
    CHECK(rep.holds);
    CHECK(rep.cond2);
    CHECK(rep.cond3);
    CHECK(rep.even_balanced);
    CHECK(rep.witnesses.empty());

    auto m4 = load_catalog_realization("m4-degenerate");
    rep = assumption_check(*m4);
    CHECK_FALSE(rep.holds);
    CHECK_FALSE(rep.cond2);
    CHECK_FALSE(rep.cond3);
    CHECK_FALSE(rep.even_balanced);
    REQUIRE(rep.witnesses.size() == 2); // k = 2 for both colors
    for (const auto& w : rep.witnesses) {
        CHECK(w.k == 2);
        CHECK(w.value == CoefElem::from_int(m4->coef, 2));
    }

    auto f2 = load_catalog_realization("m4-degenerate-f2");
    rep = assumption_check(*f2);
    CHECK(rep.holds);
    CHECK(rep.cond2);
    CHECK(rep.cond3);
    CHECK(rep.even_balanced);

    RealizationPtr univ = universal_realization();
    CHECK_THROWS_AS(assumption_check(*univ), SoergelError);
}

TEST_CASE("assumption conditions agree across the catalog") {
    for (const std::string& name : catalog_names()) {
        auto r = load_catalog_realization(name);
        if (r->is_universal()) continue;
        AssumptionReport rep = assumption_check(*r);
        CHECK(rep.holds == rep.cond2);
        CHECK(rep.holds == rep.cond3);
    }
}

namespace {

// 2x2 matrices of the action on span(alpha_s, alpha_t) in root coordinates.
struct Mat2 {
    CoefElem a, b, c, d; // [[a, b], [c, d]]
    bool operator==(const Mat2& o) const { return a == o.a && b == o.b && c == o.c && d == o.d; }
};

Mat2 mat_mul(const Mat2& p, const Mat2& q) {
    return {p.a * q.a + p.b * q.c, p.a * q.b + p.b * q.d, p.c * q.a + p.d * q.c,
            p.c * q.b + p.d * q.d};
}

} // namespace

TEST_CASE("faithful span action implies the assumption") {
    for (const std::string& name : catalog_names()) {
        auto r = load_catalog_realization(name);
        if (r->is_universal()) continue;
        CoefElem zero = CoefElem::zero(r->coef), one = CoefElem::one(r->coef);
        Mat2 ms{-one, r->X, zero, one};
        Mat2 mt{one, zero, r->Y, -one};
        // All 2m elements as alternating products; the two spellings of the
        // longest element coincide, keep one.
        std::vector<Mat2> elems;
        for (Letter first : {Letter::s, Letter::t})
            for (int len = 1; len <= r->m; ++len) {
                if (len == r->m && first == Letter::t) continue;
                Mat2 acc{one, zero, zero, one};
                Letter cur = first;
                for (int i = 0; i < len; ++i) {
                    acc = mat_mul(acc, cur == Letter::s ? ms : mt);
                    cur = other(cur);
                }
                elems.push_back(acc);
            }
        elems.push_back({one, zero, zero, one});
        bool distinct = true;
        for (std::size_t i = 0; i < elems.size() && distinct; ++i)
            for (std::size_t j = i + 1; j < elems.size(); ++j)
                if (elems[i] == elems[j]) {
                    distinct = false;
                    break;
                }
        if (distinct) CHECK(assumption_check(*r).holds);
    }
}

TEST_CASE("values at X = Y = 2 count the index") {
    // [n](2,2) = n for both colors; the standard nonvanishing witness.
    for (int n = 0; n <= 30; ++n)
        for (Color z : {Color::X, Color::Y})
            CHECK(two_color_quantum(n, z).eval(2, 2) == n);
}
