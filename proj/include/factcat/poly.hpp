#pragma once

#include "factcat/factorize.hpp"

namespace factcat::poly {

/// A span A <- E -> B whose left leg comes with a chosen right adjoint
/// (left_leg ⊣ the stored right adjoint) and whose right leg is a
/// groupoid fibration. Evaluation composes the right leg after the
/// right adjoint of the left leg.
struct Polynomial {
    CatPtr source;                      // A
    CatPtr total;                       // E
    CatPtr target;                      // B
    FinFunctor left_leg;                // j_* : E -> A
    Adjunction left_adjoint_witness;    // j_* ⊣ j with j : A -> E
    FinFunctor right_leg;               // p : E -> B
};

/// Structural problems, witness mismatches, triangle-identity failures,
/// and a non-fibration right leg; empty means valid.
std::vector<std::string> validate_polynomial(const Polynomial& p);

/// Adjoint assembly during composition produced inconsistent data —
/// an internal invariant violation, not a mathematical verdict.
struct WitnessFailure : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct DetectionReport {
    gpd::TriBool value = gpd::TriBool::Unknown;
    std::string note;
};

/// Yes iff the (ultimate, groupoid fibration) factorization of f exists
/// within the bound and its ultimate factor is a right adjoint. A
/// certified infinite fibrewise fundamental groupoid refutes finite
/// realizability of the middle and reports No with a note.
DetectionReport is_abstract_polynomial_functor(const FinFunctor& f, std::size_t bound = 10000);

/// A = E = B with identity legs and the identity adjunction.
Polynomial identity_polynomial(const CatPtr& a);

/// The associated functor p ∘ j : A -> B.
FinFunctor eval_polynomial(const Polynomial& p);

/// The polynomial carried by a functor with a Yes detection verdict:
/// middle from the (ultimate, groupoid fibration) factorization, witness
/// from the computed left adjoint of the ultimate factor.
Polynomial polynomial_of(const FinFunctor& f, std::size_t bound = 10000);

/// Span composition: pseudopullback of P1's right leg against P2's left
/// leg; the new right leg is P2's right leg after the pullback
/// projection, the new witness composes the projection's computed right
/// adjoint with P1's witness. The distributivity comparison
/// (projection ∘ computed adjoint ≅ P2's stored adjoint ∘ P1's right
/// leg) is verified.
Polynomial compose_polynomials(const Polynomial& p1, const Polynomial& p2,
                               std::size_t guard = 20000);

}   // namespace factcat::poly
