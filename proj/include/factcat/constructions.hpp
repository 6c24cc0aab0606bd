#pragma once

#include "factcat/fincat.hpp"

#include <array>

namespace factcat {

/// A comma (or isocomma) square: apex with projections s, t and the
/// 2-cell λ : f∘s ⇒ g∘t. For pseudopullbacks every component of λ is
/// invertible.
struct CommaCone {
    CatPtr apex;
    FinFunctor left_leg;    // s : apex -> dom f
    FinFunctor right_leg;   // t : apex -> dom g
    NatTransform cell;      // λ
    bool iso_flag = false;

    // decompositions of the canonical names, kept so later constructions
    // can address comma data without parsing
    std::map<Name, std::array<Name, 3>> obj_parts;          // (a, β, b)
    std::map<Name, std::pair<Name, Name>> mor_parts;        // (u, v)
};

/// Canonical comma object / morphism naming, shared by every construction
/// that builds comma-shaped categories.
Name comma_obj_name(const Name& a, const Name& beta, const Name& b);
Name comma_mor_name(const Name& u, const Name& v, const Name& src, const Name& tgt);

/// Object names of comma apexes are "(a|β|b)"; morphisms are "(u|v)" with
/// source and target appended when needed for uniqueness.
CommaCone comma(const FinFunctor& f, const FinFunctor& g);
CommaCone pseudopullback(const FinFunctor& f, const FinFunctor& g);

/// E² = 1_E/1_E with the two projections cached as left_leg = dom,
/// right_leg = cod.
CommaCone arrow_category(const CatPtr& e);

/// Slice b/B for an object b, i.e. comma(const_b, id).
CommaCone under_slice(const CatPtr& b_cat, const Name& b);
/// B/p = comma(id_B, p).
CommaCone over_comma_of(const FinFunctor& p);

struct CoreResult {
    CatPtr core;            // wide subcategory of invertibles
    FinFunctor inclusion;
};
CoreResult core(const CatPtr& a);

CatPtr opposite(const CatPtr& a);
FinFunctor opposite(const FinFunctor& f);

/// Pseudofunctor base^op -> Gpd. action[β] : value[tgt β] -> value[src β].
/// comp[{β₂,β₁}] : action[β₁]∘action[β₂] ⇒ action[β₂∘β₁] and
/// unit[b] : id ⇒ action[id_b] are the coherence isos; when absent they
/// default to identities (a strict functor).
struct PseudofunctorData {
    CatPtr base;
    std::map<Name, CatPtr> value;
    std::map<Name, FinFunctor> action;
    std::map<std::pair<Name, Name>, NatTransform> comp;
    std::map<Name, NatTransform> unit;

    const FinFunctor& act(const Name& beta) const;
    /// Component of comp[{β₂,β₁}] at object x of value[tgt β₂]; identity
    /// when no coherence cell is stored.
    Name comp_at(const Name& beta2, const Name& beta1, const Name& x) const;
    Name unit_at(const Name& b, const Name& x) const;
};

std::vector<std::string> validate_pseudofunctor(const PseudofunctorData& t);

struct GrothResult {
    CatPtr total;
    FinFunctor projection;   // the groupoid fibration total -> base
};
GrothResult groth(const PseudofunctorData& t);

/// The canonical comparison r : E² -> B/p for p : E -> B.
FinFunctor canonical_r(const FinFunctor& p);

/// p² : E² -> B², the action of p on arrow categories.
FinFunctor arrow_functor(const FinFunctor& p);

/// υf : υ(dom f) -> υ(cod f), the restriction to cores.
FinFunctor core_restrict(const FinFunctor& f);

/// Mediating functor for the 1-dimensional universal property of a comma
/// or isocomma cone: given a competing cone over the same cospan, the
/// unique functor into the apex commuting strictly with both legs and the
/// cell, or nullopt if none exists. `unique` is cleared when several
/// mediators exist.
std::optional<FinFunctor> mediating_functor(const CommaCone& cone, const FinFunctor& f,
                                            const FinFunctor& g, const CommaCone& competing,
                                            bool* unique = nullptr);

}   // namespace factcat
