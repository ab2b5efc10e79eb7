#ifndef SOERGEL_REALIZATION_HPP
#define SOERGEL_REALIZATION_HPP

#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <string>
#include <vector>

#include "soergel/dihedral.hpp"
#include "soergel/scalars.hpp"

namespace soergel {

// Raw realization data as read from a config file; validate_realization
// turns it into a Realization or reports the violated invariant by name.
struct RealizationConfig {
    int m = 0; // 0 means universal
    DescrPtr coef;
    int rank = 0;
    std::vector<CoefElem> alpha_s, alpha_t;
    std::vector<CoefElem> covector_s, covector_t;
    std::optional<std::vector<CoefElem>> delta_s, delta_t;
    std::string name; // optional, for messages
};

// A validated rank-two realization: the free module Coef^rank with simple
// roots alpha_s, alpha_t, coroots (covectors), optional Demazure
// certificates delta_u with <alpha_u^vee, delta_u> = 1, and the derived
// scalars X = -<alpha_s^vee, alpha_t>, Y = -<alpha_t^vee, alpha_s>.
class Realization {
public:
    int m = 0; // 0 means universal
    DescrPtr coef;
    int rank = 0;
    std::vector<CoefElem> alpha_s, alpha_t;
    std::vector<CoefElem> covector_s, covector_t;
    std::optional<std::vector<CoefElem>> delta_s, delta_t;
    CoefElem X, Y;
    bool demazure_certified = false;
    std::string name;

    bool is_universal() const { return m == 0; }

    const std::vector<CoefElem>& alpha(Letter u) const {
        return u == Letter::s ? alpha_s : alpha_t;
    }
    const std::vector<CoefElem>& covector(Letter u) const {
        return u == Letter::s ? covector_s : covector_t;
    }
    const std::optional<std::vector<CoefElem>>& delta(Letter u) const {
        return u == Letter::s ? delta_s : delta_t;
    }

    // Coordinates of the image in V of the positive root attached to a
    // universal reflection: specialize its (a, b) quantum-number
    // coordinates and form a*alpha_s + b*alpha_t. Cached per reflection.
    std::vector<CoefElem> root_linear(const GroupElem& refl) const;

    bool same_ring(const Realization& o) const;

    Realization(CoefElem x, CoefElem y) : X(std::move(x)), Y(std::move(y)) {}

private:
    mutable std::map<GroupElem, std::vector<CoefElem>> root_cache_;
    mutable std::mutex cache_mu_;
};

using RealizationPtr = std::shared_ptr<const Realization>;

// Checks every invariant and fills the derived fields. Error messages by
// invariant: "pairing not 2", "quantum m not zero", "delta pairing not 1",
// "alpha is zero", "group order not respected".
RealizationPtr validate_realization(const RealizationConfig& cfg);

// The universal realization: Coef = Z[X,Y], rank 2, alpha's the standard
// basis, covectors (2, -X) and (-Y, 2).
RealizationPtr universal_realization();

CoefElem pairing(const std::vector<CoefElem>& covector, const std::vector<CoefElem>& vec);

} // namespace soergel

#endif
