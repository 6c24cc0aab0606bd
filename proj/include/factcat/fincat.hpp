#pragma once

#include <map>
#include <memory>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace factcat {

using Name = std::string;

/// Thrown when an enumeration would exceed the caller-supplied size guard.
struct GuardExceeded : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct NotAGroupoid : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct MorInfo {
    Name src;
    Name tgt;
    bool operator==(const MorInfo&) const = default;
};

/// A finite category: explicit object and morphism sets with a total
/// composition table. Identities are stored explicitly and named
/// "id_<object>"; the table includes identity rows. All containers are
/// ordered so iteration (and hence every downstream output) is
/// deterministic.
struct FinCat {
    std::vector<Name> objects;                       // sorted, unique
    std::map<Name, MorInfo> morphisms;               // name -> src/tgt
    std::map<Name, Name> identity;                   // object -> identity morphism
    std::map<std::pair<Name, Name>, Name> table;     // (g, f) -> g∘f

    bool operator==(const FinCat&) const = default;

    bool has_object(const Name& x) const;
    bool has_morphism(const Name& m) const;
    const MorInfo& mor(const Name& m) const;
    const Name& src(const Name& m) const { return mor(m).src; }
    const Name& tgt(const Name& m) const { return mor(m).tgt; }
    const Name& id_of(const Name& x) const;
    bool is_id(const Name& m) const;

    /// g∘f with src(g) = tgt(f). Throws if the pair is not composable.
    const Name& compose(const Name& g, const Name& f) const;

    std::vector<Name> hom(const Name& a, const Name& b) const;

    bool is_invertible(const Name& m) const;
    std::optional<Name> inverse(const Name& m) const;
    bool is_groupoid() const;

    bool isomorphic_objects(const Name& a, const Name& b) const;

    /// Connected components of the object set under zigzags of morphisms.
    std::vector<std::vector<Name>> components() const;
};

using CatPtr = std::shared_ptr<const FinCat>;

CatPtr make_cat(FinCat c);

/// Incremental construction helper. add_object creates the identity
/// morphism; identity rows of the table are filled in build().
class FinCatBuilder {
public:
    FinCatBuilder& add_object(const Name& x);
    FinCatBuilder& add_morphism(const Name& m, const Name& src, const Name& tgt);
    FinCatBuilder& set_compose(const Name& g, const Name& f, const Name& gf);
    /// Finishes the category. When `check` is set, throws on invariant
    /// violations (use validate_category for a non-throwing report).
    FinCat build(bool check = true) const;
    CatPtr build_ptr(bool check = true) const;

private:
    FinCat cat_;
};

struct FinFunctor {
    CatPtr dom;
    CatPtr cod;
    std::map<Name, Name> ob;    // objects(dom) -> objects(cod)
    std::map<Name, Name> mor;   // morphisms(dom) -> morphisms(cod), identities included

    const Name& on_ob(const Name& x) const;
    const Name& on_mor(const Name& m) const;
    bool operator==(const FinFunctor& o) const;
};

struct NatTransform {
    FinFunctor dom;   // F
    FinFunctor cod;   // G, parallel to F
    std::map<Name, Name> components;   // object of dom cat -> morphism of cod cat

    const Name& at(const Name& x) const;
};

/// left ⊣ right with unit : 1 ⇒ right∘left and counit : left∘right ⇒ 1.
struct Adjunction {
    FinFunctor left;
    FinFunctor right;
    NatTransform unit;
    NatTransform counit;
};

bool same_cat(const CatPtr& a, const CatPtr& b);

// ---- validation ----

std::vector<std::string> validate_category(const FinCat& c);
std::vector<std::string> validate_functor(const FinFunctor& f);
std::vector<std::string> validate_nat(const NatTransform& t);
std::vector<std::string> validate_adjunction(const Adjunction& adj);

// ---- functor and transform algebra ----

FinFunctor identity_functor(const CatPtr& c);
FinFunctor constant_functor(const CatPtr& dom, const CatPtr& cod, const Name& obj);
FinFunctor compose_functors(const FinFunctor& g, const FinFunctor& f);   // g∘f

NatTransform identity_nat(const FinFunctor& f);
NatTransform vcompose(const NatTransform& beta, const NatTransform& alpha);   // β·α
NatTransform whisker_left(const FinFunctor& h, const NatTransform& alpha);    // hα
NatTransform whisker_right(const NatTransform& alpha, const FinFunctor& h);   // αh
bool is_natural(const NatTransform& t);
bool is_iso_nat(const NatTransform& t);
NatTransform invert_nat(const NatTransform& t);

// ---- decision procedures ----

bool is_fully_faithful(const FinFunctor& f);
bool is_essentially_surjective(const FinFunctor& f);
bool is_equivalence(const FinFunctor& f);

std::optional<Adjunction> compute_left_adjoint(const FinFunctor& j);
std::optional<Adjunction> compute_right_adjoint(const FinFunctor& n);

/// Some invertible F ⇒ G, or nullopt; exhaustive over component choices,
/// first hit in lexicographic component order.
std::optional<NatTransform> nat_iso_exists(const FinFunctor& f, const FinFunctor& g);

// ---- functor categories ----

/// Canonical printable encodings; used as object/morphism names of [A,X].
Name canonical_functor_name(const FinFunctor& f);
Name canonical_nat_name(const NatTransform& t);

struct FunctorCategory {
    CatPtr cat;
    std::map<Name, FinFunctor> obj_functors;
    std::map<Name, NatTransform> mor_transforms;
};

FunctorCategory functor_category(const CatPtr& a, const CatPtr& x, std::size_t guard = 20000);
FunctorCategory inverting_subcategory(const CatPtr& a, const CatPtr& x, std::size_t guard = 20000);

std::vector<FinFunctor> all_functors(const CatPtr& a, const CatPtr& x, std::size_t guard = 20000);
std::vector<NatTransform> all_transforms(const FinFunctor& f, const FinFunctor& g,
                                         std::size_t guard = 20000);

/// Full subcategory on the given objects (names kept).
CatPtr full_subcategory(const CatPtr& c, const std::set<Name>& objects);

}   // namespace factcat
