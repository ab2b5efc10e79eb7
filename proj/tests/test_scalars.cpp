#include <doctest.h>

#include "soergel/scalars.hpp"

using namespace soergel;

namespace {

CoefElem random_elem(SplitMix64& rng, const DescrPtr& d) {
    switch (d->kind()) {
    case CoefKind::integers: return CoefElem::from_int(d, Int(rng.range(-50, 50)));
    case CoefKind::prime_field: return CoefElem::from_int(d, Int(rng.range(0, 100)));
    case CoefKind::quotient: {
        std::vector<Int> coords;
        for (int i = 0; i < d->degree(); ++i) coords.push_back(Int(rng.range(-20, 20)));
        return CoefElem::from_coords(d, std::move(coords));
    }
    case CoefKind::bivariate_integers: {
        BiPoly p;
        int terms = static_cast<int>(rng.below(4));
        for (int i = 0; i < terms; ++i)
            p = p + BiPoly::monomial(static_cast<int>(rng.below(3)), static_cast<int>(rng.below(3)),
                                     Int(rng.range(-5, 5)));
        return CoefElem::from_bipoly(d, std::move(p));
    }
    }
    throw std::logic_error("bad kind");
}

std::vector<DescrPtr> all_descriptors() {
    return {CoefDescriptor::integers(), CoefDescriptor::prime_field(2),
            CoefDescriptor::prime_field(5), CoefDescriptor::quotient({-1, -1, 1}),
            CoefDescriptor::bivariate()};
}

} // namespace

TEST_CASE("descriptor construction and validation") {
    CHECK(CoefDescriptor::integers()->kind() == CoefKind::integers);
    CHECK(CoefDescriptor::prime_field(2)->p() == 2);
    CHECK_THROWS_AS(CoefDescriptor::prime_field(4), SoergelError);
    CHECK_THROWS_AS(CoefDescriptor::prime_field(1), SoergelError);
    CHECK(is_prime(1000000007));
    CHECK_FALSE(is_prime(Int("1000000007") * 1000000007));
    CHECK(CoefDescriptor::quotient({-1, -1, 1})->degree() == 2);
    CHECK_THROWS_AS(CoefDescriptor::quotient({5}), SoergelError);
    CHECK_THROWS_AS(CoefDescriptor::quotient({1, 2}), SoergelError); // not monic
}

TEST_CASE("coef arithmetic examples") {
    auto z = CoefDescriptor::integers();
    CHECK(coef_arith(RingOp::add, CoefElem::from_int(z, 2), CoefElem::from_int(z, 3)) ==
          CoefElem::from_int(z, 5));

    auto f2 = CoefDescriptor::prime_field(2);
    CHECK(coef_arith(RingOp::add, CoefElem::one(f2), CoefElem::one(f2)).is_zero());

    // In Z[t]/(t^2 - t - 1): t * (t - 1) = t^2 - t = 1.
    auto q = CoefDescriptor::quotient({-1, -1, 1});
    CoefElem t = CoefElem::from_coords(q, {0, 1});
    CoefElem t_minus_1 = CoefElem::from_coords(q, {-1, 1});
    CHECK(t * t_minus_1 == CoefElem::one(q));

    auto f5 = CoefDescriptor::prime_field(5);
    CHECK_THROWS_AS(coef_arith(RingOp::add, CoefElem::one(z), CoefElem::one(f5)), SoergelError);
}

TEST_CASE("fraction inversion") {
    auto z = CoefDescriptor::integers();
    FracElem half = frac_invert(FracElem::from_coef(CoefElem::from_int(z, 2)));
    CHECK(half == FracElem::of(CoefElem::one(z), CoefElem::from_int(z, 2)));
    CHECK_FALSE(half.is_integral().has_value());

    auto q = CoefDescriptor::quotient({-1, -1, 1});
    CoefElem t = CoefElem::from_coords(q, {0, 1});
    FracElem tinv = frac_invert(FracElem::from_coef(t));
    CHECK(tinv.is_integral().has_value());
    CHECK(*tinv.is_integral() == CoefElem::from_coords(q, {-1, 1})); // t - 1

    auto f5 = CoefDescriptor::prime_field(5);
    FracElem three_inv = frac_invert(FracElem::from_coef(CoefElem::from_int(f5, 3)));
    CHECK(*three_inv.is_integral() == CoefElem::from_int(f5, 2));

    CHECK_THROWS_WITH_AS(frac_invert(FracElem::from_coef(CoefElem::zero(z))), "division by zero",
                         SoergelError);
}

TEST_CASE("non-irreducible modulus is caught lazily") {
    // t^2 - 1 = (t-1)(t+1): constructing the descriptor is fine, inverting
    // a zero divisor is not.
    auto q = CoefDescriptor::quotient({-1, 0, 1});
    CoefElem tm1 = CoefElem::from_coords(q, {-1, 1});
    CHECK_THROWS_WITH_AS(FracElem::of(CoefElem::one(q), tm1), "modulus not irreducible",
                         SoergelError);
}

TEST_CASE("is_integral examples") {
    auto z = CoefDescriptor::integers();
    FracElem f = FracElem::of(CoefElem::from_int(z, 4), CoefElem::from_int(z, 2));
    REQUIRE(f.is_integral().has_value());
    CHECK(*f.is_integral() == CoefElem::from_int(z, 2));
    CHECK_FALSE(FracElem::of(CoefElem::one(z), CoefElem::from_int(z, 2)).is_integral().has_value());

    auto q = CoefDescriptor::quotient({-1, -1, 1});
    CoefElem tp1 = CoefElem::from_coords(q, {1, 1});
    CHECK(*FracElem::from_coef(tp1).is_integral() == tp1);
}

TEST_CASE("ring axioms on random samples") {
    for (const DescrPtr& d : all_descriptors()) {
        SplitMix64 rng(0xC0FFEE);
        for (int i = 0; i < 200; ++i) {
            CoefElem a = random_elem(rng, d), b = random_elem(rng, d), c = random_elem(rng, d);
            CHECK((a + b) + c == a + (b + c));
            CHECK((a * b) * c == a * (b * c));
            CHECK(a * (b + c) == a * b + a * c);
            CHECK(a * b == b * a);
            CHECK(a + b == b + a);
            CHECK((a - a).is_zero());
        }
    }
}

TEST_CASE("domain property: no zero divisors in samples") {
    for (const DescrPtr& d : all_descriptors()) {
        SplitMix64 rng(0xD0D0);
        int checked = 0;
        while (checked < 1000) {
            CoefElem a = random_elem(rng, d), b = random_elem(rng, d);
            if (a.is_zero() || b.is_zero()) continue;
            ++checked;
            CHECK_FALSE((a * b).is_zero());
        }
    }
}

TEST_CASE("fraction field axioms and inverse law") {
    for (const DescrPtr& d : all_descriptors()) {
        SplitMix64 rng(0xFEED);
        int checked = 0;
        while (checked < 100) {
            CoefElem a = random_elem(rng, d);
            CoefElem b = random_elem(rng, d);
            if (a.is_zero() || b.is_zero()) continue;
            ++checked;
            FracElem f = FracElem::of(a, b);
            FracElem prod = f * frac_invert(f);
            CHECK(prod == FracElem::from_coef(CoefElem::one(d)));
            CHECK(f + (-f) == FracElem::from_coef(CoefElem::zero(d)));
        }
    }
}

TEST_CASE("bivariate fraction equality is semantic") {
    auto d = CoefDescriptor::bivariate();
    CoefElem x = CoefElem::from_bipoly(d, BiPoly::var_x());
    CoefElem xy = CoefElem::from_bipoly(d, BiPoly::var_x() * BiPoly::var_y());
    CoefElem y = CoefElem::from_bipoly(d, BiPoly::var_y());
    CHECK(FracElem::of(xy, x) == FracElem::from_coef(y));
    CHECK(*FracElem::of(xy, x).is_integral() == y);
    CHECK_FALSE(FracElem::of(x, y).is_integral().has_value());
}

TEST_CASE("bipoly division and rendering") {
    BiPoly p = (BiPoly::var_x() * BiPoly::var_y() - BiPoly::constant(1)) *
               (BiPoly::var_x() * BiPoly::var_y() - BiPoly::constant(2));
    auto q = p.divide_exact(BiPoly::var_x() * BiPoly::var_y() - BiPoly::constant(1));
    REQUIRE(q.has_value());
    CHECK(*q == BiPoly::var_x() * BiPoly::var_y() - BiPoly::constant(2));
    CHECK_FALSE(p.divide_exact(BiPoly::var_x()).has_value());
    BiPoly r = BiPoly::monomial(2, 1, 1) - BiPoly::monomial(1, 0, 2);
    CHECK(r.str() == "X^2*Y - 2*X");
    CHECK(BiPoly::zero().str() == "0");
}
