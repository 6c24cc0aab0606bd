#pragma once

#include "factcat/fib.hpp"

#include <variant>

namespace factcat::factorize {

/// f ≅ right ∘ left through the middle category, with the invertible
/// comparison 2-cell.
struct Factorization {
    FinFunctor input;           // f : A -> B
    FinFunctor left;            // j : A -> E
    CatPtr mid;                 // E
    FinFunctor right;           // p : E -> B
    NatTransform comparison;    // invertible, right∘left ⇒ f
};

/// The fibrewise fundamental groupoid did not materialize within the
/// bound; carries the certificate or the exhaustion note.
struct BoundExceeded {
    gpd::NormalizationResult normalization;
};

using UltimateOutcome = std::variant<Factorization, BoundExceeded>;

/// (final, discrete fibration): middle objects are pairs (b, connected
/// component of b/f).
Factorization comprehensive_factorize(const FinFunctor& f);

/// (ultimate, groupoid fibration): middle is B/f with the fibrewise
/// morphisms inverted and normalized.
UltimateOutcome ultimate_factorize(const FinFunctor& f, std::size_t bound = 10000);

enum class Side { Left, Right };

/// Class membership is invariant under composition with an equivalence:
/// compares the class verdict of f with that of the composite of f and w.
/// Side selects the class (Left = ultimate, Right = groupoid fibration).
bool check_fs0(const FinFunctor& f, const FinFunctor& w, Side side);

/// Bipullback orthogonality of (e, m) with m a groupoid fibration,
/// decided on cores of the hom-category comparison.
bool check_fs1(const FinFunctor& e, const FinFunctor& m, std::size_t guard = 20000);

struct ReflectionWitness {
    FinFunctor w;         // B -> dom q
    NatTransform psi;     // 1_B ⇒ q∘w, invertible
    NatTransform sigma;   // f ⇒ w∘j, invertible
};

/// Factor (f, φ) : j -> q through B for ultimate j and a groupoid
/// fibration q; the result satisfies ψ_{ja} = q(σ_a)∘φ⁻¹_a, and every
/// other witness is uniquely isomorphic to it (verified exhaustively).
ReflectionWitness reflect_to_gfib(const FinFunctor& j, const FinFunctor& q, const FinFunctor& f,
                                  const NatTransform& phi, std::size_t bound = 20000);

}   // namespace factcat::factorize
