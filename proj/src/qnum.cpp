#include "soergel/qnum.hpp"

#include <mutex>

#include "soergel/realization.hpp"

namespace soergel {

Color parse_color(const std::string& src) {
    if (src == "X" || src == "x") return Color::X;
    if (src == "Y" || src == "y") return Color::Y;
    throw SoergelError("bad color '" + src + "' (expected X or Y)");
}

Color sigma_power(Color c, long long k) {
    bool flip = (k % 2) != 0;
    return flip ? (c == Color::X ? Color::Y : Color::X) : c;
}

namespace {

std::mutex qnum_mu;
std::vector<BiPoly> qnum_table[2]; // indexed by Color

} // namespace

BiPoly two_color_quantum(int n, Color c) {
    if (n < 0) throw SoergelError("two_color_quantum: n must be nonnegative");
    std::lock_guard<std::mutex> lock(qnum_mu);
    auto& tx = qnum_table[0];
    auto& ty = qnum_table[1];
    if (tx.empty()) {
        tx = {BiPoly::zero(), BiPoly::constant(1)};
        ty = tx;
    }
    while (static_cast<int>(tx.size()) <= n) {
        int k = static_cast<int>(tx.size()); // building [k] from [k-1], [k-2]
        tx.push_back(BiPoly::var_x() * ty[static_cast<std::size_t>(k - 1)] - tx[static_cast<std::size_t>(k - 2)]);
        ty.push_back(BiPoly::var_y() * tx[static_cast<std::size_t>(k - 1)] - ty[static_cast<std::size_t>(k - 2)]);
    }
    return (c == Color::X ? tx : ty)[static_cast<std::size_t>(n)];
}

BiPoly two_color_binomial(int m, int n, Color c) {
    if (n < 0 || n > m) throw SoergelError("two_color_binomial: need 0 <= n <= m");
    BiPoly num = BiPoly::constant(1);
    BiPoly den = BiPoly::constant(1);
    for (int i = 0; i < n; ++i) {
        num = num * two_color_quantum(m - i, c);
        den = den * two_color_quantum(n - i, c);
    }
    auto q = num.divide_exact(den);
    if (!q) throw InternalError("binomial integrality violated");
    return *q;
}

CoefElem specialize_xy(const BiPoly& p, const CoefElem& x, const CoefElem& y) {
    const DescrPtr& d = x.descriptor();
    CoefElem acc = CoefElem::zero(d);
    for (const BiPoly::Term& t : p.terms()) {
        CoefElem v = CoefElem::from_int(d, t.c);
        v = v * x.pow(static_cast<unsigned>(t.ex));
        v = v * y.pow(static_cast<unsigned>(t.ey));
        acc = acc + v;
    }
    return acc;
}

CoefElem specialize(const BiPoly& p, const Realization& r) {
    return specialize_xy(p, r.X, r.Y);
}

AssumptionReport assumption_check(const Realization& r) {
    if (r.is_universal()) throw SoergelError("assumption undefined for universal realization");
    const int m = r.m;
    AssumptionReport rep;

    rep.holds = true;
    for (int k = 1; k <= m - 1; ++k)
        for (Color c : {Color::X, Color::Y}) {
            CoefElem v = specialize(two_color_binomial(m, k, c), r);
            if (!v.is_zero()) {
                rep.holds = false;
                rep.witnesses.push_back({k, c, v});
            }
        }

    // prod_{i=1..k} [m-1]_{sigma^{i-1}(Z)} in the specialized ring.
    auto product_rhs = [&](int k, Color z) {
        CoefElem acc = CoefElem::one(r.coef);
        for (int i = 1; i <= k; ++i)
            acc = acc * specialize(two_color_quantum(m - 1, sigma_power(z, i - 1)), r);
        return acc;
    };

    rep.cond2 = true;
    for (int k = 0; k <= m - 1 && rep.cond2; ++k)
        for (Color c : {Color::X, Color::Y})
            if (specialize(two_color_binomial(m - 1, k, c), r) != product_rhs(k, c)) {
                rep.cond2 = false;
                break;
            }

    CoefElem one = CoefElem::one(r.coef);
    rep.even_balanced = specialize(two_color_quantum(m - 1, Color::X), r) == one &&
                        specialize(two_color_quantum(m - 1, Color::Y), r) == one;
    rep.cond3 = rep.even_balanced;
    for (int k = 0; 2 * k <= m - 1 && rep.cond3; ++k)
        for (Color c : {Color::X, Color::Y})
            if (specialize(two_color_binomial(m - 1, k, c), r) != product_rhs(k, c)) {
                rep.cond3 = false;
                break;
            }

    return rep;
}

} // namespace soergel
