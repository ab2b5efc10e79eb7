#include "soergel/realization.hpp"

#include "soergel/qnum.hpp"

namespace soergel {

CoefElem pairing(const std::vector<CoefElem>& covector, const std::vector<CoefElem>& vec) {
    if (covector.size() != vec.size() || covector.empty())
        throw SoergelError("pairing: rank mismatch");
    CoefElem acc = covector[0] * vec[0];
    for (std::size_t i = 1; i < covector.size(); ++i) acc = acc + covector[i] * vec[i];
    return acc;
}

namespace {

using Matrix = std::vector<std::vector<CoefElem>>; // row-major, square

Matrix identity_matrix(const DescrPtr& d, int n) {
    Matrix m(static_cast<std::size_t>(n),
             std::vector<CoefElem>(static_cast<std::size_t>(n), CoefElem::zero(d)));
    for (int i = 0; i < n; ++i) m[static_cast<std::size_t>(i)][static_cast<std::size_t>(i)] = CoefElem::one(d);
    return m;
}

// Matrix of the reflection v -> v - <cov, v> alpha on the standard basis.
Matrix reflection_matrix(const DescrPtr& d, const std::vector<CoefElem>& alpha,
                         const std::vector<CoefElem>& cov) {
    const int n = static_cast<int>(alpha.size());
    Matrix m = identity_matrix(d, n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            auto& cell = m[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)];
            cell = cell - cov[static_cast<std::size_t>(j)] * alpha[static_cast<std::size_t>(i)];
        }
    return m;
}

Matrix mat_mul(const Matrix& a, const Matrix& b, const DescrPtr& d) {
    const std::size_t n = a.size();
    Matrix out(n, std::vector<CoefElem>(n, CoefElem::zero(d)));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t k = 0; k < n; ++k)
            for (std::size_t j = 0; j < n; ++j)
                out[i][j] = out[i][j] + a[i][k] * b[k][j];
    return out;
}

bool all_zero(const std::vector<CoefElem>& v) {
    for (const CoefElem& c : v)
        if (!c.is_zero()) return false;
    return true;
}

} // namespace

bool Realization::same_ring(const Realization& o) const {
    if (this == &o) return true;
    return m == o.m && rank == o.rank && *coef == *o.coef && alpha_s == o.alpha_s &&
           alpha_t == o.alpha_t && covector_s == o.covector_s && covector_t == o.covector_t;
}

std::vector<CoefElem> Realization::root_linear(const GroupElem& refl) const {
    {
        std::lock_guard<std::mutex> lock(cache_mu_);
        auto it = root_cache_.find(refl);
        if (it != root_cache_.end()) return it->second;
    }
    auto [a, b] = root_coordinates(refl);
    CoefElem ca = specialize(a, *this);
    CoefElem cb = specialize(b, *this);
    std::vector<CoefElem> out;
    out.reserve(alpha_s.size());
    for (std::size_t i = 0; i < alpha_s.size(); ++i)
        out.push_back(ca * alpha_s[i] + cb * alpha_t[i]);
    std::lock_guard<std::mutex> lock(cache_mu_);
    root_cache_.emplace(refl, out);
    return out;
}

RealizationPtr universal_realization() {
    RealizationConfig cfg;
    cfg.m = 0;
    cfg.name = "universal";
    return validate_realization(cfg);
}

RealizationPtr validate_realization(const RealizationConfig& cfg) {
    RealizationConfig c = cfg;
    if (c.m == 0) {
        // Universal realization: every field is forced.
        DescrPtr d = CoefDescriptor::bivariate();
        if (c.coef && *c.coef != *d)
            throw SoergelError("universal realization requires bivariate_integers coefficients");
        c.coef = d;
        CoefElem zero = CoefElem::zero(d), one = CoefElem::one(d);
        CoefElem x = CoefElem::from_bipoly(d, BiPoly::var_x());
        CoefElem y = CoefElem::from_bipoly(d, BiPoly::var_y());
        CoefElem two = CoefElem::from_int(d, 2);
        auto want = [&](std::vector<CoefElem>& dst, std::vector<CoefElem> v, const char* field) {
            if (!dst.empty() && dst != v)
                throw SoergelError(std::string("universal realization: fixed field ") + field +
                                   " has wrong value");
            dst = std::move(v);
        };
        if (c.rank == 0) c.rank = 2;
        if (c.rank != 2) throw SoergelError("universal realization has rank 2");
        want(c.alpha_s, {one, zero}, "alpha_s");
        want(c.alpha_t, {zero, one}, "alpha_t");
        want(c.covector_s, {two, -x}, "covector_s");
        want(c.covector_t, {-y, two}, "covector_t");
        if (c.delta_s || c.delta_t)
            throw SoergelError("universal realization admits no Demazure certificate");
    }

    if (c.m != 0 && c.m < 2) throw SoergelError("m must be >= 2 or universal");
    if (!c.coef) throw SoergelError("missing coefficient descriptor");
    if (c.rank < 1) throw SoergelError("rank must be >= 1");
    auto check_len = [&](const std::vector<CoefElem>& v, const char* field) {
        if (static_cast<int>(v.size()) != c.rank)
            throw SoergelError(std::string(field) + ": wrong length");
        for (const CoefElem& e : v)
            if (*e.descriptor() != *c.coef)
                throw SoergelError(std::string(field) + ": descriptor mismatch");
    };
    check_len(c.alpha_s, "alpha_s");
    check_len(c.alpha_t, "alpha_t");
    check_len(c.covector_s, "covector_s");
    check_len(c.covector_t, "covector_t");
    if (c.delta_s) check_len(*c.delta_s, "delta_s");
    if (c.delta_t) check_len(*c.delta_t, "delta_t");

    if (all_zero(c.alpha_s) || all_zero(c.alpha_t)) throw SoergelError("alpha is zero");

    CoefElem two = CoefElem::from_int(c.coef, 2);
    if (pairing(c.covector_s, c.alpha_s) != two || pairing(c.covector_t, c.alpha_t) != two)
        throw SoergelError("pairing not 2");

    CoefElem x = -pairing(c.covector_s, c.alpha_t);
    CoefElem y = -pairing(c.covector_t, c.alpha_s);

    auto r = std::make_shared<Realization>(x, y);
    r->m = c.m;
    r->coef = c.coef;
    r->rank = c.rank;
    r->alpha_s = c.alpha_s;
    r->alpha_t = c.alpha_t;
    r->covector_s = c.covector_s;
    r->covector_t = c.covector_t;
    r->name = c.name;

    if (c.m != 0) {
        if (!specialize(two_color_quantum(c.m, Color::X), *r).is_zero() ||
            !specialize(two_color_quantum(c.m, Color::Y), *r).is_zero())
            throw SoergelError("quantum m not zero");
        // The reflection assignment must actually define an action of the
        // finite group, i.e. (st)^m = 1 on V.
        Matrix ms = reflection_matrix(c.coef, c.alpha_s, c.covector_s);
        Matrix mt = reflection_matrix(c.coef, c.alpha_t, c.covector_t);
        Matrix st = mat_mul(ms, mt, c.coef);
        Matrix acc = identity_matrix(c.coef, c.rank);
        for (int i = 0; i < c.m; ++i) acc = mat_mul(acc, st, c.coef);
        if (acc != identity_matrix(c.coef, c.rank))
            throw SoergelError("group order not respected");
    }

    CoefElem one = CoefElem::one(c.coef);
    if (c.delta_s) {
        if (pairing(c.covector_s, *c.delta_s) != one) throw SoergelError("delta pairing not 1");
        r->delta_s = c.delta_s;
    }
    if (c.delta_t) {
        if (pairing(c.covector_t, *c.delta_t) != one) throw SoergelError("delta pairing not 1");
        r->delta_t = c.delta_t;
    }
    r->demazure_certified = c.delta_s.has_value() && c.delta_t.has_value();
    return r;
}

} // namespace soergel
