#ifndef SOERGEL_SUITES_HPP
#define SOERGEL_SUITES_HPP

#include <cstdint>
#include <string>
#include <vector>

#include "soergel/bimodule.hpp"
#include "soergel/qnum.hpp"

namespace soergel {

struct CaseFailure {
    std::string case_id;
    std::string expected;
    std::string actual;
};

// Result of a verification sweep. status is "pass" exactly when failures
// is empty; failures are sorted by case id so reports do not depend on
// scheduling.
struct Report {
    std::string command;
    std::string status = "pass";
    long cases_run = 0;
    std::vector<CaseFailure> failures;
    long elapsed_ms = 0;

    bool passed() const { return status == "pass"; }
    void fail(std::string case_id, std::string expected, std::string actual);
    void finish(); // sorts failures, sets status
};

// Quantum-number identity suite: parity/shift, the product and difference
// identities, both binomial recursions, and the cross-multiplied
// two-parameter binomial identity (bounded by max_binom).
Report verify_quantum(int max_n = 20, int max_binom = 12);

// Brute-force a^w(g) against k_g^w / prod X_g^w over the universal
// realization, for every word of length <= max_len and every g in range.
Report verify_theorem(int max_len = 8, int num_threads = 0);

// Specialization suite on a finite realization: the pi_y relation, the
// pi_x / X-set ratio formula, integrality of pi_x * a^w(1), and the
// [k][m-1] = [m-k] identity.
Report verify_specialization(const RealizationPtr& r);

// Equivalence of the three conditions of the vanishing assumption.
Report verify_assumption(const RealizationPtr& r);

// Morphism suite: phi/psi fix the standard generators (with the failing
// binomial witnesses reported when they do not), agreement with the
// assumption, and, on certified realizations, membership of phi/psi
// images of seeded random tensors plus the D-expansion cross-check.
Report verify_morphism(const RealizationPtr& r, int trials = 50, int degree = 2,
                       std::uint64_t seed = 1, int oracle_trials = 20, int num_threads = 0);

// Deterministic random polynomial of total degree <= degree with small
// coefficients, driven by the shared fixed PRNG.
RPoly random_rpoly(SplitMix64& rng, const Realization& r, int degree);

} // namespace soergel

#endif
