#pragma once

#include "gl2rep/report.hpp"

namespace gl2rep {

/// One top-level verification with its runtime budget.
struct SuiteCriterion {
    std::string name;
    Report report;
    double seconds = 0.0;
    double limit_seconds = 0.0;
    bool pass() const { return report.all_pass() && seconds < limit_seconds; }
};

/// Degree caps for the sweeping criteria; the defaults are the pinned
/// acceptance ranges.
struct SuiteOptions {
    int d_characters = 16;
    int d_closure = 12;
    int d_irreducible = 8;
};

/// The ten top-level verifications, in fixed order, each timed against its
/// budget: Hopf axioms, refined characters, orbit-block closure, block
/// irreducibility, the first-order bracket table, the adjoint comparisons,
/// the symmetric-square dichotomy, the quotient lemmas, the finite-ring
/// point oracles, and the characteristic-two subcomodule.
std::vector<SuiteCriterion> run_acceptance_suite(const SuiteOptions& opts = {});

}  // namespace gl2rep
