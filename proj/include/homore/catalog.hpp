#pragma once

#include <string>
#include <vector>

#include "homore/homcheck.hpp"
#include "homore/ore.hpp"

namespace homore {

enum class FamilyKind { QuantumPlane, Enveloping, Weyl };

std::string family_name(FamilyKind kind);

// One member of a hom-associative family: the realized star context together
// with its parameters and generator metadata.
//
//   quantum plane: sigma(Y) = qY, delta = 0,      alpha_k(Y) = kY,   X*Y = kq Y*X
//   enveloping:    sigma = id,    delta = Y d/dY, alpha_k(Y) = kY,   X*Y - Y*X = kY
//   Weyl:          sigma = id,    delta = d/dY,   alpha_k(Y) = Y+k,  X*Y - Y*X = 1
struct FamilySpec {
    FamilyKind kind;
    Scalar k;
    Scalar q;  // quantum plane only; 1 elsewhere
    OreContext ctx;
    std::string relation;
};

// q, k nonzero; any common scalar ring.
FamilySpec make_quantum_plane(const Scalar& q, const Scalar& k);
// k nonzero.
FamilySpec make_enveloping(const Scalar& k);
// any k; k = 0 is the associative Weyl algebra.
FamilySpec make_weyl(const Scalar& k);

// The same families with formal parameters: quantum plane over Q[k,q], the
// others over Q[k].
FamilySpec symbolic_quantum_plane();
FamilySpec symbolic_enveloping();
FamilySpec symbolic_weyl();

// Exact check of the family's commutation relation
// (X*Y = kq Y*X / X*Y - Y*X = kY / X*Y - Y*X = 1).
Report check_commutation_relation(const FamilySpec& family);

// Same context with the multiplication mode replaced (plain/star).
OreContext with_mode(const OreContext& ctx, MulMode mode);

// Does the endomorphism Y -> candidate commute with the family's sigma and
// delta on monomials up to deg_y? Truncated mirror of the families'
// twisting-map classifications.
struct ClassifierVerdict {
    bool commutes;
    Report sigma_report;
    Report delta_report;
};
ClassifierVerdict endomorphism_classifier(const FamilySpec& family,
                                          const Polynomial& candidate_alpha_image,
                                          std::size_t deg_y);

// One step of the hom-Weyl simplicity reduction and the full trace from a
// nonzero element down to 1. Every intermediate element is recorded so each
// commutator step can be re-verified independently.
struct ReductionStep {
    enum class Kind { CommutatorWithX, CommutatorWithY, ScaleToOne };
    Kind kind;
    OrePoly result;
};

struct ReductionTrace {
    explicit ReductionTrace(const Ring& ring)
        : start(ring),
          final_element(ring),
          regeneration_preimage(ring),
          regeneration_product(ring) {}

    OrePoly start;
    std::vector<ReductionStep> steps;
    OrePoly final_element;       // always 1 on success
    std::size_t x_steps = 0;
    std::size_t y_steps = 0;
    // regeneration: 1 * (coefficients shifted Y -> Y-k) recovers the start
    OrePoly regeneration_preimage;
    OrePoly regeneration_product;
    bool regeneration_ok = false;
};

// Executes the commutator descent in the hom-associative Weyl algebra over Q:
// [X, .] until every coefficient is scalar, [., Y] until X-degree 0, then one
// scaling step a^{-1} * (.) reaching exactly 1. Throws on p = 0, on
// non-rational scalars, or when max_steps is exceeded.
ReductionTrace simplicity_reduce(const Rational& k, const OrePoly& p, std::size_t max_steps);

}  // namespace homore
