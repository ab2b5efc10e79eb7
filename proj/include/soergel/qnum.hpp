#ifndef SOERGEL_QNUM_HPP
#define SOERGEL_QNUM_HPP

#include <string>
#include <vector>

#include "soergel/bipoly.hpp"
#include "soergel/scalars.hpp"

namespace soergel {

class Realization;

// The two colors of the two-colored calculus; sigma swaps them.
enum class Color : std::uint8_t { X = 0, Y = 1 };

inline char color_char(Color c) { return c == Color::X ? 'X' : 'Y'; }
Color parse_color(const std::string& src);

Color sigma_power(Color c, long long k);

// [n]_c in Z[X,Y]:
//   [0] = 0, [1] = 1,
//   [n+1]_X = X [n]_Y - [n-1]_X,  [n+1]_Y = Y [n]_X - [n-1]_Y.
// Results are memoized; the table is guarded for concurrent use.
BiPoly two_color_quantum(int n, Color c);

// [m choose n]_c = ([m]_c [m-1]_c ... [m-n+1]_c) / ([n]_c ... [1]_c),
// computed by exact division. A nonzero remainder is an arithmetic bug
// and raises InternalError("binomial integrality violated").
BiPoly two_color_binomial(int m, int n, Color c);

// Image of p under X -> X(r), Y -> Y(r) in the realization's coefficient
// ring. For the universal realization this is the identity.
CoefElem specialize(const BiPoly& p, const Realization& r);
CoefElem specialize_xy(const BiPoly& p, const CoefElem& x, const CoefElem& y);

struct AssumptionWitness {
    int k;
    Color color;
    CoefElem value;
};

// Report for the vanishing assumption and its equivalent forms:
//   cond1: [m choose k]_Z = 0 for 1 <= k <= m-1, both colors
//   cond2: [m-1 choose k]_Z = prod_{i=1..k} [m-1]_{sigma^{i-1}(Z)} for
//          0 <= k <= m-1, both colors
//   cond3: even-balanced and the cond2 identity for 0 <= k <= (m-1)/2
// holds mirrors cond1; witnesses list every failing (k, color) of cond1.
struct AssumptionReport {
    bool holds = false;
    std::vector<AssumptionWitness> witnesses;
    bool cond2 = false;
    bool cond3 = false;
    bool even_balanced = false;
};

AssumptionReport assumption_check(const Realization& r);

} // namespace soergel

#endif
