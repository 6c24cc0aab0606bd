#pragma once

#include "factcat/constructions.hpp"
#include "factcat/gpd.hpp"

namespace factcat::fib {

struct FibrationReport {
    bool verdict = false;
    std::vector<std::string> witnesses;   // nonempty whenever verdict is false

    explicit operator bool() const { return verdict; }
};

/// Is χ cartesian for p: for every test object k the hom-set square into
/// the pullback is a bijection?
bool is_cartesian(const FinFunctor& p, const Name& chi);

/// Lifts of every β : b -> pe up to an iso b ≅ pe', plus every morphism
/// cartesian.
FibrationReport is_groupoid_fibration(const FinFunctor& p);

/// Unique strict lifts into each object.
FibrationReport is_discrete_fibration(const FinFunctor& p);

/// Dual lifting class, decided on the opposite functor.
FibrationReport is_opfibration_gfib(const FinFunctor& p);

/// Every b/j nonempty and connected.
FibrationReport is_final(const FinFunctor& j);

struct UltimacyReport {
    gpd::TriBool value = gpd::TriBool::Unknown;
    std::vector<std::string> witnesses;   // per-object reasons for No/Unknown
};

/// Is π₁(b/j) trivial for every b? A certified nontrivial fibre refutes
/// regardless of other objects; otherwise any Unknown makes the whole
/// verdict Unknown.
UltimacyReport is_ultimate(const FinFunctor& j, std::size_t bound = 10000);

/// The pseudofibre E_b: pseudopullback of b : 1 -> B along p.
CatPtr pseudofibre(const FinFunctor& p, const Name& b);

/// b/j as a category (apex of the comma of b : 1 -> B with j).
CatPtr under_comma(const Name& b, const FinFunctor& j);

}   // namespace factcat::fib
