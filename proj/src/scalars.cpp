#include "soergel/scalars.hpp"

#include <algorithm>
#include <sstream>

namespace soergel {

namespace {

// --- integer helpers ---------------------------------------------------

Int int_gcd(Int a, Int b) {
    if (a < 0) a = -a;
    if (b < 0) b = -b;
    while (b != 0) {
        Int r = a % b;
        a = b;
        b = r;
    }
    return a;
}

Int mod_floor(const Int& a, const Int& p) {
    Int r = a % p;
    if (r < 0) r += p;
    return r;
}

Int inv_mod_prime(const Int& a, const Int& p) {
    // Extended Euclid; a nonzero mod p, p prime.
    Int r0 = p, r1 = mod_floor(a, p), t0 = 0, t1 = 1;
    while (r1 != 0) {
        Int q = r0 / r1;
        Int r2 = r0 - q * r1;
        Int t2 = t0 - q * t1;
        r0 = r1;
        r1 = r2;
        t0 = t1;
        t1 = t2;
    }
    return mod_floor(t0, p);
}

// --- ascending integer polynomials mod a monic modulus -----------------

void trim(std::vector<Int>& v) {
    while (!v.empty() && v.back() == 0) v.pop_back();
}

// Reduce v modulo the monic modulus f, in place.
void reduce_mod(std::vector<Int>& v, const std::vector<Int>& f) {
    const int df = static_cast<int>(f.size()) - 1;
    trim(v);
    while (static_cast<int>(v.size()) - 1 >= df) {
        Int lead = v.back();
        int shift = static_cast<int>(v.size()) - 1 - df;
        for (int i = 0; i <= df; ++i) v[static_cast<std::size_t>(i + shift)] -= lead * f[static_cast<std::size_t>(i)];
        trim(v);
    }
}

std::vector<Int> poly_mul_mod(const std::vector<Int>& a, const std::vector<Int>& b,
                              const std::vector<Int>& f) {
    if (a.empty() || b.empty()) return {};
    std::vector<Int> out(a.size() + b.size() - 1, Int(0));
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = 0; j < b.size(); ++j) out[i + j] += a[i] * b[j];
    reduce_mod(out, f);
    return out;
}

// --- rational polynomials, ascending, for quotient-field inversion -----

using QPoly = std::vector<Rat>;

void qtrim(QPoly& v) {
    while (!v.empty() && v.back() == 0) v.pop_back();
}

QPoly qsub(const QPoly& a, const QPoly& b) {
    QPoly out(std::max(a.size(), b.size()), Rat(0));
    for (std::size_t i = 0; i < a.size(); ++i) out[i] += a[i];
    for (std::size_t i = 0; i < b.size(); ++i) out[i] -= b[i];
    qtrim(out);
    return out;
}

QPoly qmul(const QPoly& a, const QPoly& b) {
    if (a.empty() || b.empty()) return {};
    QPoly out(a.size() + b.size() - 1, Rat(0));
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = 0; j < b.size(); ++j) out[i + j] += a[i] * b[j];
    qtrim(out);
    return out;
}

// Quotient of Euclidean division a / b over Q[t]; b nonzero.
QPoly qdiv(QPoly a, const QPoly& b) {
    QPoly q;
    if (a.size() < b.size()) return q;
    q.assign(a.size() - b.size() + 1, Rat(0));
    while (a.size() >= b.size() && !a.empty()) {
        Rat c = a.back() / b.back();
        std::size_t shift = a.size() - b.size();
        q[shift] = c;
        for (std::size_t i = 0; i < b.size(); ++i) a[i + shift] -= c * b[i];
        qtrim(a);
        if (a.size() < b.size()) break;
    }
    return q;
}

// Inverse of a modulo f over Q; empty when gcd(a, f) is non-constant.
std::optional<QPoly> qpoly_inv_mod(QPoly a, const QPoly& f) {
    qtrim(a);
    QPoly r0 = f, r1 = a, t0, t1 = {Rat(1)};
    while (!r1.empty()) {
        QPoly q = qdiv(r0, r1);
        QPoly r2 = qsub(r0, qmul(q, r1));
        QPoly t2 = qsub(t0, qmul(q, t1));
        r0 = std::move(r1);
        r1 = std::move(r2);
        t0 = std::move(t1);
        t1 = std::move(t2);
    }
    if (r0.size() != 1) return std::nullopt;
    Rat lead = r0[0];
    for (Rat& c : t0) c /= lead;
    return t0;
}

} // namespace

// --- CoefDescriptor -----------------------------------------------------

bool is_prime(const Int& n) {
    if (n < 2) return false;
    for (int q : {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37}) {
        if (n == q) return true;
        if (n % q == 0) return false;
    }
    // Miller-Rabin with the fixed base set, deterministic far beyond any
    // characteristic this library will meet.
    Int d = n - 1;
    unsigned r = 0;
    while (d % 2 == 0) {
        d /= 2;
        ++r;
    }
    for (int a : {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37}) {
        Int x = boost::multiprecision::powm(Int(a), d, n);
        if (x == 1 || x == n - 1) continue;
        bool witness = true;
        for (unsigned i = 1; i < r; ++i) {
            x = x * x % n;
            if (x == n - 1) {
                witness = false;
                break;
            }
        }
        if (witness) return false;
    }
    return true;
}

DescrPtr CoefDescriptor::integers() {
    static DescrPtr d(new CoefDescriptor(CoefKind::integers, 0, {}));
    return d;
}

DescrPtr CoefDescriptor::prime_field(const Int& p) {
    if (!is_prime(p)) throw SoergelError("prime_field: p is not prime: " + p.str());
    return DescrPtr(new CoefDescriptor(CoefKind::prime_field, p, {}));
}

DescrPtr CoefDescriptor::quotient(std::vector<Int> modulus) {
    trim(modulus);
    if (modulus.size() < 2) throw SoergelError("quotient: modulus must have degree >= 1");
    if (modulus.back() != 1) throw SoergelError("quotient: modulus must be monic");
    return DescrPtr(new CoefDescriptor(CoefKind::quotient, 0, std::move(modulus)));
}

DescrPtr CoefDescriptor::bivariate() {
    static DescrPtr d(new CoefDescriptor(CoefKind::bivariate_integers, 0, {}));
    return d;
}

bool CoefDescriptor::operator==(const CoefDescriptor& o) const {
    return kind_ == o.kind_ && p_ == o.p_ && modulus_ == o.modulus_;
}

std::string CoefDescriptor::str() const {
    switch (kind_) {
    case CoefKind::integers: return "Z";
    case CoefKind::prime_field: return "F_" + p_.str();
    case CoefKind::quotient: {
        std::ostringstream os;
        os << "Z[t]/(";
        bool first = true;
        for (int i = static_cast<int>(modulus_.size()) - 1; i >= 0; --i) {
            const Int& c = modulus_[static_cast<std::size_t>(i)];
            if (c == 0) continue;
            if (!first) os << (c > 0 ? " + " : " - ");
            Int a = (!first && c < 0) ? Int(-c) : c;
            if (i == 0 || a != 1) os << a;
            if (i > 0) {
                if (a != 1) os << "*";
                os << "t";
                if (i > 1) os << "^" << i;
            }
            first = false;
        }
        os << ")";
        return os.str();
    }
    case CoefKind::bivariate_integers: return "Z[X,Y]";
    }
    return "?";
}

// --- CoefElem ------------------------------------------------------------

void CoefElem::require_same(const CoefElem& o) const {
    if (d_ != o.d_ && *d_ != *o.d_) throw SoergelError("descriptor mismatch");
}

CoefElem CoefElem::from_int(const DescrPtr& d, const Int& v) {
    switch (d->kind()) {
    case CoefKind::integers: return CoefElem(d, v);
    case CoefKind::prime_field: return CoefElem(d, mod_floor(v, d->p()));
    case CoefKind::quotient: {
        std::vector<Int> coords(static_cast<std::size_t>(d->degree()), Int(0));
        coords[0] = v;
        return CoefElem(d, std::move(coords));
    }
    case CoefKind::bivariate_integers: return CoefElem(d, BiPoly::constant(v));
    }
    throw InternalError("bad kind");
}

CoefElem CoefElem::from_coords(const DescrPtr& d, std::vector<Int> coords) {
    if (d->kind() != CoefKind::quotient) throw SoergelError("from_coords: quotient kind required");
    reduce_mod(coords, d->modulus());
    coords.resize(static_cast<std::size_t>(d->degree()), Int(0));
    return CoefElem(d, std::move(coords));
}

CoefElem CoefElem::from_bipoly(const DescrPtr& d, BiPoly p) {
    if (d->kind() != CoefKind::bivariate_integers)
        throw SoergelError("from_bipoly: bivariate kind required");
    return CoefElem(d, std::move(p));
}

bool CoefElem::is_zero() const {
    switch (d_->kind()) {
    case CoefKind::integers:
    case CoefKind::prime_field: return as_int() == 0;
    case CoefKind::quotient: {
        for (const Int& c : as_coords())
            if (c != 0) return false;
        return true;
    }
    case CoefKind::bivariate_integers: return as_bipoly().is_zero();
    }
    return false;
}

bool CoefElem::is_one() const { return *this == one(d_); }

CoefElem CoefElem::operator+(const CoefElem& o) const {
    require_same(o);
    switch (d_->kind()) {
    case CoefKind::integers: return CoefElem(d_, as_int() + o.as_int());
    case CoefKind::prime_field: return CoefElem(d_, mod_floor(as_int() + o.as_int(), d_->p()));
    case CoefKind::quotient: {
        std::vector<Int> v = as_coords();
        for (std::size_t i = 0; i < v.size(); ++i) v[i] += o.as_coords()[i];
        return CoefElem(d_, std::move(v));
    }
    case CoefKind::bivariate_integers: return CoefElem(d_, as_bipoly() + o.as_bipoly());
    }
    throw InternalError("bad kind");
}

CoefElem CoefElem::operator-() const {
    switch (d_->kind()) {
    case CoefKind::integers: return CoefElem(d_, -as_int());
    case CoefKind::prime_field: return CoefElem(d_, mod_floor(-as_int(), d_->p()));
    case CoefKind::quotient: {
        std::vector<Int> v = as_coords();
        for (Int& c : v) c = -c;
        return CoefElem(d_, std::move(v));
    }
    case CoefKind::bivariate_integers: return CoefElem(d_, -as_bipoly());
    }
    throw InternalError("bad kind");
}

CoefElem CoefElem::operator-(const CoefElem& o) const { return *this + (-o); }

CoefElem CoefElem::operator*(const CoefElem& o) const {
    require_same(o);
    switch (d_->kind()) {
    case CoefKind::integers: return CoefElem(d_, as_int() * o.as_int());
    case CoefKind::prime_field: return CoefElem(d_, mod_floor(as_int() * o.as_int(), d_->p()));
    case CoefKind::quotient: {
        std::vector<Int> v = poly_mul_mod(as_coords(), o.as_coords(), d_->modulus());
        v.resize(static_cast<std::size_t>(d_->degree()), Int(0));
        return CoefElem(d_, std::move(v));
    }
    case CoefKind::bivariate_integers: return CoefElem(d_, as_bipoly() * o.as_bipoly());
    }
    throw InternalError("bad kind");
}

bool CoefElem::operator==(const CoefElem& o) const {
    if (d_ != o.d_ && *d_ != *o.d_) return false;
    return v_ == o.v_;
}

CoefElem CoefElem::pow(unsigned k) const {
    CoefElem acc = one(d_);
    for (unsigned i = 0; i < k; ++i) acc = acc * *this;
    return acc;
}

std::string CoefElem::str() const {
    switch (d_->kind()) {
    case CoefKind::integers:
    case CoefKind::prime_field: return as_int().str();
    case CoefKind::quotient: {
        const std::vector<Int>& v = as_coords();
        std::ostringstream os;
        bool first = true;
        for (int i = static_cast<int>(v.size()) - 1; i >= 0; --i) {
            const Int& c = v[static_cast<std::size_t>(i)];
            if (c == 0) continue;
            Int a = c;
            if (first) {
                if (a < 0) {
                    os << "-";
                    a = -a;
                }
            } else {
                os << (a < 0 ? " - " : " + ");
                if (a < 0) a = -a;
            }
            first = false;
            if (i == 0 || a != 1) os << a;
            if (i > 0) {
                if (a != 1) os << "*";
                os << "t";
                if (i > 1) os << "^" << i;
            }
        }
        if (first) return "0";
        return os.str();
    }
    case CoefKind::bivariate_integers: return as_bipoly().str();
    }
    return "?";
}

CoefElem coef_arith(RingOp op, const CoefElem& a, const CoefElem& b) {
    switch (op) {
    case RingOp::add: return a + b;
    case RingOp::mul: return a * b;
    case RingOp::sub: return a - b;
    case RingOp::neg: return -a;
    }
    throw InternalError("bad op");
}

// --- FracElem ------------------------------------------------------------

FracElem FracElem::from_coef(const CoefElem& c) {
    FracElem f(c, CoefElem::one(c.descriptor()));
    f.normalize();
    return f;
}

FracElem FracElem::of(const CoefElem& num, const CoefElem& den) {
    if (num.descriptor() != den.descriptor() && *num.descriptor() != *den.descriptor())
        throw SoergelError("descriptor mismatch");
    if (den.is_zero()) throw SoergelError("division by zero");
    FracElem f(num, den);
    f.normalize();
    return f;
}

void FracElem::normalize() {
    const DescrPtr& d = num_.descriptor();
    switch (d->kind()) {
    case CoefKind::integers: {
        Int n = num_.as_int(), m = den_.as_int();
        Int g = int_gcd(n, m);
        if (g != 0) {
            n /= g;
            m /= g;
        }
        if (m < 0) {
            n = -n;
            m = -m;
        }
        num_ = CoefElem::from_int(d, n);
        den_ = CoefElem::from_int(d, m);
        return;
    }
    case CoefKind::prime_field: {
        Int inv = inv_mod_prime(den_.as_int(), d->p());
        num_ = CoefElem::from_int(d, mod_floor(num_.as_int() * inv, d->p()));
        den_ = CoefElem::one(d);
        return;
    }
    case CoefKind::quotient: {
        // Canonical form: integer-primitive numerator over a positive
        // integer denominator, obtained from num * den^{-1} over Q[t]/(f).
        QPoly f;
        for (const Int& c : d->modulus()) f.push_back(Rat(c));
        QPoly denq;
        for (const Int& c : den_.as_coords()) denq.push_back(Rat(c));
        auto inv = qpoly_inv_mod(denq, f);
        if (!inv) throw SoergelError("modulus not irreducible");
        QPoly numq;
        for (const Int& c : num_.as_coords()) numq.push_back(Rat(c));
        QPoly q = qmul(numq, *inv);
        // reduce mod f over Q
        while (q.size() >= f.size()) {
            Rat lead = q.back();
            std::size_t shift = q.size() - f.size();
            for (std::size_t i = 0; i < f.size(); ++i) q[i + shift] -= lead * f[i];
            qtrim(q);
        }
        Int D = 1;
        for (const Rat& c : q) D = D / int_gcd(D, denominator(c)) * denominator(c);
        std::vector<Int> coords(static_cast<std::size_t>(d->degree()), Int(0));
        for (std::size_t i = 0; i < q.size(); ++i) coords[i] = numerator(q[i]) * (D / denominator(q[i]));
        num_ = CoefElem::from_coords(d, std::move(coords));
        den_ = CoefElem::from_int(d, D);
        return;
    }
    case CoefKind::bivariate_integers: {
        // No polynomial gcd: strip integer content and fix the sign of the
        // denominator's leading coefficient. Equality stays semantic.
        Int g = 0;
        for (const auto& t : num_.as_bipoly().terms()) g = int_gcd(g, t.c);
        for (const auto& t : den_.as_bipoly().terms()) g = int_gcd(g, t.c);
        if (g > 1) {
            num_ = CoefElem::from_bipoly(d, *num_.as_bipoly().divide_exact(BiPoly::constant(g)));
            den_ = CoefElem::from_bipoly(d, *den_.as_bipoly().divide_exact(BiPoly::constant(g)));
        }
        if (den_.as_bipoly().terms().front().c < 0) {
            num_ = -num_;
            den_ = -den_;
        }
        return;
    }
    }
}

FracElem FracElem::operator+(const FracElem& o) const {
    return of(num_ * o.den_ + o.num_ * den_, den_ * o.den_);
}

FracElem FracElem::operator-(const FracElem& o) const { return *this + (-o); }

FracElem FracElem::operator*(const FracElem& o) const {
    return of(num_ * o.num_, den_ * o.den_);
}

FracElem FracElem::operator-() const {
    FracElem f(-num_, den_);
    return f;
}

bool FracElem::operator==(const FracElem& o) const {
    if (descriptor()->kind() == CoefKind::bivariate_integers)
        return num_ * o.den_ == o.num_ * den_;
    return num_ == o.num_ && den_ == o.den_;
}

FracElem FracElem::invert() const {
    if (is_zero()) throw SoergelError("division by zero");
    return of(den_, num_);
}

FracElem frac_invert(const FracElem& a) { return a.invert(); }

std::optional<CoefElem> FracElem::is_integral() const {
    const DescrPtr& d = descriptor();
    switch (d->kind()) {
    case CoefKind::integers:
    case CoefKind::quotient:
        if (den_.is_one()) return num_;
        return std::nullopt;
    case CoefKind::prime_field: return num_;
    case CoefKind::bivariate_integers: {
        auto q = num_.as_bipoly().divide_exact(den_.as_bipoly());
        if (!q) return std::nullopt;
        return CoefElem::from_bipoly(d, std::move(*q));
    }
    }
    return std::nullopt;
}

std::string FracElem::str() const {
    if (den_.is_one()) return num_.str();
    return "(" + num_.str() + ")/(" + den_.str() + ")";
}

} // namespace soergel
