#include "factcat/poly.hpp"

#include "factcat/constructions.hpp"

namespace factcat::poly {

std::vector<std::string> validate_polynomial(const Polynomial& p) {
    std::vector<std::string> errs;
    for (auto& e : validate_functor(p.left_leg)) errs.push_back("left leg: " + e);
    for (auto& e : validate_functor(p.right_leg)) errs.push_back("right leg: " + e);
    if (!errs.empty()) return errs;
    if (!same_cat(p.left_leg.dom, p.total) || !same_cat(p.right_leg.dom, p.total))
        errs.push_back("legs do not share the total category");
    if (!same_cat(p.left_leg.cod, p.source)) errs.push_back("left leg does not land in the source");
    if (!same_cat(p.right_leg.cod, p.target))
        errs.push_back("right leg does not land in the target");
    if (!(p.left_adjoint_witness.left == p.left_leg))
        errs.push_back("witness left adjoint differs from the left leg");
    for (auto& e : validate_adjunction(p.left_adjoint_witness)) errs.push_back("witness: " + e);
    if (!errs.empty()) return errs;
    if (!fib::is_groupoid_fibration(p.right_leg).verdict)
        errs.push_back("right leg is not a groupoid fibration");
    return errs;
}

DetectionReport is_abstract_polynomial_functor(const FinFunctor& f, std::size_t bound) {
    DetectionReport rep;
    auto outcome = factorize::ultimate_factorize(f, bound);
    if (const auto* exceeded = std::get_if<factorize::BoundExceeded>(&outcome)) {
        const auto& n = exceeded->normalization;
        if (n.status == gpd::NormalizationResult::Status::InfiniteDetected) {
            rep.value = gpd::TriBool::No;
            rep.note = "middle category not finitely realizable: certified infinite "
                       "fibrewise fundamental groupoid";
        } else {
            rep.value = gpd::TriBool::Unknown;
            rep.note = n.note;
        }
        return rep;
    }
    const auto& fact = std::get<factorize::Factorization>(outcome);
    if (compute_left_adjoint(fact.left)) {
        rep.value = gpd::TriBool::Yes;
    } else {
        rep.value = gpd::TriBool::No;
        rep.note = "ultimate factor has no left adjoint";
    }
    return rep;
}

Polynomial identity_polynomial(const CatPtr& a) {
    Polynomial p;
    p.source = p.total = p.target = a;
    p.left_leg = identity_functor(a);
    p.right_leg = identity_functor(a);
    p.left_adjoint_witness.left = p.left_leg;
    p.left_adjoint_witness.right = p.left_leg;
    p.left_adjoint_witness.unit = identity_nat(p.left_leg);
    p.left_adjoint_witness.counit = identity_nat(p.left_leg);
    return p;
}

FinFunctor eval_polynomial(const Polynomial& p) {
    return compose_functors(p.right_leg, p.left_adjoint_witness.right);
}

Polynomial polynomial_of(const FinFunctor& f, std::size_t bound) {
    auto outcome = factorize::ultimate_factorize(f, bound);
    const auto* fact = std::get_if<factorize::Factorization>(&outcome);
    if (!fact) throw std::invalid_argument("polynomial_of: middle category did not materialize");
    auto adj = compute_left_adjoint(fact->left);
    if (!adj) throw std::invalid_argument("polynomial_of: ultimate factor has no left adjoint");
    Polynomial p;
    p.source = f.dom;
    p.total = fact->mid;
    p.target = f.cod;
    p.left_leg = adj->left;
    p.left_adjoint_witness = *adj;
    p.right_leg = fact->right;
    return p;
}

Polynomial compose_polynomials(const Polynomial& p1, const Polynomial& p2, std::size_t guard) {
    if (!same_cat(p1.target, p2.source))
        throw std::invalid_argument("compose_polynomials: middles do not meet");
    // pull p1's fibration back against p2's left leg
    auto cone = pseudopullback(p1.right_leg, p2.left_leg);
    if (cone.apex->morphisms.size() > guard)
        throw GuardExceeded("compose_polynomials: pullback exceeds guard");
    const FinFunctor& to_e1 = cone.left_leg;    // P -> E1, the new span's spine
    const FinFunctor& to_e2 = cone.right_leg;   // P -> E2, pullback of p1's fibration

    auto spine = compute_right_adjoint(to_e1);
    if (!spine) throw WitnessFailure("compose_polynomials: pullback projection has no right adjoint");

    // distributivity comparison: the pulled-back fibration after the
    // computed adjoint agrees with p2's stored adjoint after p1's fibration
    if (!nat_iso_exists(compose_functors(to_e2, spine->right),
                        compose_functors(p2.left_adjoint_witness.right, p1.right_leg)))
        throw WitnessFailure("compose_polynomials: distributivity comparison not invertible");

    const Adjunction& a1 = p1.left_adjoint_witness;   // j_* ⊣ j
    const Adjunction& a2 = *spine;                    // to_e1 ⊣ k

    Polynomial out;
    out.source = p1.source;
    out.total = cone.apex;
    out.target = p2.target;
    out.left_leg = compose_functors(p1.left_leg, to_e1);
    out.right_leg = compose_functors(p2.right_leg, to_e2);

    Adjunction w;
    w.left = out.left_leg;
    w.right = compose_functors(a2.right, a1.right);
    // unit: 1_P ⇒ (k∘j)∘(j_*∘to_e1), pasted from the two units
    w.unit = vcompose(whisker_right(whisker_left(a2.right, a1.unit), to_e1), a2.unit);
    w.unit.dom = identity_functor(cone.apex);
    w.unit.cod = compose_functors(w.right, w.left);
    // counit: (j_*∘to_e1)∘(k∘j) ⇒ 1, pasted from the two counits
    w.counit = vcompose(a1.counit, whisker_right(whisker_left(p1.left_leg, a2.counit), a1.right));
    w.counit.dom = compose_functors(w.left, w.right);
    w.counit.cod = identity_functor(p1.source);
    out.left_adjoint_witness = w;

    auto errs = validate_polynomial(out);
    if (!errs.empty()) throw WitnessFailure("compose_polynomials: " + errs.front());
    return out;
}

}   // namespace factcat::poly
