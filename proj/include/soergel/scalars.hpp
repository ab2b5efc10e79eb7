#ifndef SOERGEL_SCALARS_HPP
#define SOERGEL_SCALARS_HPP

#include <memory>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "soergel/bipoly.hpp"
#include "soergel/common.hpp"

namespace soergel {

// Coefficient rings. Every ring here is an integral domain:
//   integers            Z
//   prime_field(p)      F_p, p prime (checked at construction)
//   quotient(f)         Z[t]/(f), f monic of degree >= 1; irreducibility is
//                       enforced lazily, the first inversion that exposes a
//                       zero divisor throws "modulus not irreducible"
//   bivariate_integers  Z[X,Y], the coefficient ring of the universal
//                       realization
enum class CoefKind { integers, prime_field, quotient, bivariate_integers };

class CoefDescriptor;
using DescrPtr = std::shared_ptr<const CoefDescriptor>;

class CoefDescriptor {
public:
    static DescrPtr integers();
    static DescrPtr prime_field(const Int& p);
    static DescrPtr quotient(std::vector<Int> modulus_ascending);
    static DescrPtr bivariate();

    CoefKind kind() const { return kind_; }
    const Int& p() const { return p_; }
    // Ascending coefficients, constant term first; leading coefficient 1.
    const std::vector<Int>& modulus() const { return modulus_; }
    int degree() const { return static_cast<int>(modulus_.size()) - 1; }

    bool operator==(const CoefDescriptor& o) const;
    bool operator!=(const CoefDescriptor& o) const { return !(*this == o); }
    std::string str() const;

private:
    CoefDescriptor(CoefKind k, Int p, std::vector<Int> modulus)
        : kind_(k), p_(std::move(p)), modulus_(std::move(modulus)) {}

    CoefKind kind_;
    Int p_;
    std::vector<Int> modulus_;
};

bool is_prime(const Int& n);

// Ring element with a canonical payload: equality of elements is equality
// of payloads. Payload by kind: integer; residue in [0,p); coefficient
// vector of length deg(modulus); BiPoly.
class CoefElem {
public:
    static CoefElem from_int(const DescrPtr& d, const Int& v);
    static CoefElem from_coords(const DescrPtr& d, std::vector<Int> coords);
    static CoefElem from_bipoly(const DescrPtr& d, BiPoly p);
    static CoefElem zero(const DescrPtr& d) { return from_int(d, 0); }
    static CoefElem one(const DescrPtr& d) { return from_int(d, 1); }

    const DescrPtr& descriptor() const { return d_; }
    bool is_zero() const;
    bool is_one() const;

    CoefElem operator+(const CoefElem& o) const;
    CoefElem operator-(const CoefElem& o) const;
    CoefElem operator*(const CoefElem& o) const;
    CoefElem operator-() const;
    bool operator==(const CoefElem& o) const;
    bool operator!=(const CoefElem& o) const { return !(*this == o); }

    CoefElem pow(unsigned k) const;

    // Payload accessors; the variant alternative is fixed by the kind.
    const Int& as_int() const { return std::get<Int>(v_); }
    const std::vector<Int>& as_coords() const { return std::get<std::vector<Int>>(v_); }
    const BiPoly& as_bipoly() const { return std::get<BiPoly>(v_); }

    std::string str() const;

private:
    CoefElem(DescrPtr d, std::variant<Int, std::vector<Int>, BiPoly> v)
        : d_(std::move(d)), v_(std::move(v)) {}

    void require_same(const CoefElem& o) const;

    DescrPtr d_;
    std::variant<Int, std::vector<Int>, BiPoly> v_;
};

enum class RingOp { add, mul, neg, sub };
CoefElem coef_arith(RingOp op, const CoefElem& a, const CoefElem& b);

// Element of Frac(Coef). Representation is a num/den pair of ring
// elements; kinds with a canonical reduced form (integers, prime fields,
// monic quotients) are normalized eagerly so equality is structural, the
// bivariate kind compares by cross-multiplication.
class FracElem {
public:
    static FracElem from_coef(const CoefElem& c);
    static FracElem of(const CoefElem& num, const CoefElem& den);

    const DescrPtr& descriptor() const { return num_.descriptor(); }
    const CoefElem& num() const { return num_; }
    const CoefElem& den() const { return den_; }

    bool is_zero() const { return num_.is_zero(); }

    FracElem operator+(const FracElem& o) const;
    FracElem operator-(const FracElem& o) const;
    FracElem operator*(const FracElem& o) const;
    FracElem operator-() const;
    bool operator==(const FracElem& o) const;
    bool operator!=(const FracElem& o) const { return !(*this == o); }

    FracElem invert() const;

    // The ring element equal to this fraction when it lies in Coef.
    std::optional<CoefElem> is_integral() const;

    std::string str() const;

private:
    FracElem(CoefElem num, CoefElem den) : num_(std::move(num)), den_(std::move(den)) {}
    void normalize();

    CoefElem num_;
    CoefElem den_;
};

FracElem frac_invert(const FracElem& a);

} // namespace soergel

#endif
