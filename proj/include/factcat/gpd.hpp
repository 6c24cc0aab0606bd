#pragma once

#include "factcat/coset.hpp"
#include "factcat/fincat.hpp"
#include "factcat/rewrite.hpp"

namespace factcat::gpd {

/// A category presentation: generating graph, a set of generators to be
/// formally inverted, and relations between composable generator paths
/// (diagrammatic order). Relation words use generators only.
struct PresentedCategory {
    std::vector<Name> objects;
    std::map<Name, MorInfo> generators;
    std::set<Name> inverted;
    std::vector<std::pair<rewrite::Word, rewrite::Word>> relations;
};

std::vector<std::string> validate_presentation(const PresentedCategory& p);

enum class TriBool { Yes, No, Unknown };

struct EffortCounters {
    std::size_t rules_added = 0;
    std::size_t cosets_defined = 0;
};

/// A completed rewriting system together with a composable generator loop
/// all of whose iterates are irreducible — a proof that the presented
/// category has infinitely many morphisms.
struct InfiniteCertificate {
    std::vector<rewrite::Rule> rules;
    std::vector<Name> cycle;
};

struct NormalizationResult {
    enum class Status { Finite, InfiniteDetected, Unknown };
    Status status = Status::Unknown;

    // Finite:
    CatPtr category;
    std::map<Name, Name> gen_images;            // generator -> morphism
    std::map<Name, rewrite::Word> words;        // morphism -> representing path
    std::map<Name, Name> inverse_letter;        // formal inverse -> generator

    std::optional<InfiniteCertificate> certificate;   // InfiniteDetected
    EffortCounters effort;
    std::string note;                                 // Unknown: what ran out
};

/// Present c with a chosen class of morphisms freely inverted. Generators
/// are the non-identity morphisms; relations come from the composition
/// table with identity-redundant rows omitted.
PresentedCategory localize(const CatPtr& c, const std::set<Name>& w);

/// The fundamental-groupoid presentation: everything inverted.
PresentedCategory pi1(const CatPtr& a);

/// Decide the presented category, spending at most `bound` units of effort
/// across Knuth–Bendix completion and coset enumeration.
NormalizationResult normalize(const PresentedCategory& p, std::size_t bound = 10000);

/// The quotient C -> n.category for n = normalize(localize(C, W)).
FinFunctor quotient_functor(const CatPtr& c, const NormalizationResult& n);

/// The functor n.category -> d determined by generator images; inverse
/// letters are sent to inverses, so each inverted generator must land on
/// an invertible of d.
FinFunctor induced_functor(const NormalizationResult& n, const CatPtr& d,
                           const std::map<Name, Name>& ob, const std::map<Name, Name>& gen_mor);

struct Pi1Triviality {
    TriBool value = TriBool::Unknown;
    std::string reason;
    EffortCounters effort;
};

/// Is the fundamental groupoid of a equivalent to the terminal category?
Pi1Triviality is_trivial_pi1(const CatPtr& a, std::size_t bound = 10000);

/// Equivalence of finite groupoids: matching components with isomorphic
/// vertex groups. Throws NotAGroupoid.
bool groupoid_equiv(const CatPtr& g, const CatPtr& h);

}   // namespace factcat::gpd
