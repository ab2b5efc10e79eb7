#ifndef SOERGEL_BIPOLY_HPP
#define SOERGEL_BIPOLY_HPP

#include <optional>
#include <string>
#include <vector>

#include "soergel/common.hpp"

namespace soergel {

// Element of Z[X,Y]: sorted sparse term list, no zero coefficients.
// Term order is graded lex with X ranked above Y; terms are stored
// descending so the leading term comes first. Equality is structural.
class BiPoly {
public:
    struct Term {
        int ex = 0;
        int ey = 0;
        Int c;
    };

    BiPoly() = default;

    static BiPoly zero() { return BiPoly(); }
    static BiPoly constant(Int c);
    static BiPoly var_x();
    static BiPoly var_y();
    static BiPoly monomial(int ex, int ey, Int c);

    bool is_zero() const { return terms_.empty(); }
    bool is_one() const;
    const std::vector<Term>& terms() const { return terms_; }
    int total_degree() const;

    BiPoly operator+(const BiPoly& o) const;
    BiPoly operator-(const BiPoly& o) const;
    BiPoly operator*(const BiPoly& o) const;
    BiPoly operator-() const;
    BiPoly scaled(const Int& k) const;

    bool operator==(const BiPoly& o) const;
    bool operator!=(const BiPoly& o) const { return !(*this == o); }

    // Exact division in Z[X,Y]; empty when the quotient does not exist
    // as an integer polynomial.
    std::optional<BiPoly> divide_exact(const BiPoly& divisor) const;

    // Value at integer points, used by small sanity checks.
    Int eval(const Int& x, const Int& y) const;

    // Rendering: descending graded lex, e.g. "X^2*Y - 2*X".
    std::string str() const;

    // Terms must arrive sorted descending with nonzero coefficients.
    static BiPoly from_sorted(std::vector<Term> terms);

private:
    std::vector<Term> terms_;

    static bool term_less(const Term& a, const Term& b);
    void normalize(std::vector<Term>&& raw);
};

} // namespace soergel

#endif
