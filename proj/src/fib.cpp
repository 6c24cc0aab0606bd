#include "factcat/fib.hpp"

#include "factcat/fixtures.hpp"

namespace factcat::fib {

bool is_cartesian(const FinFunctor& p, const Name& chi) {
    const FinCat& E = *p.dom;
    const FinCat& B = *p.cod;
    const Name& esrc = E.src(chi);   // χ : e' -> e
    const Name& etgt = E.tgt(chi);
    const Name& pchi = p.on_mor(chi);
    for (const auto& k : E.objects) {
        for (const auto& gamma : B.hom(p.on_ob(k), p.on_ob(esrc))) {
            for (const auto& mu : E.hom(k, etgt)) {
                if (p.on_mor(mu) != B.compose(pchi, gamma)) continue;
                std::size_t lifts = 0;
                for (const auto& lam : E.hom(k, esrc))
                    if (E.compose(chi, lam) == mu && p.on_mor(lam) == gamma) ++lifts;
                if (lifts != 1) return false;
            }
        }
    }
    return true;
}

FibrationReport is_groupoid_fibration(const FinFunctor& p) {
    const FinCat& E = *p.dom;
    const FinCat& B = *p.cod;
    FibrationReport rep;
    rep.verdict = true;
    // (i) every β : b -> pe lifts after an iso b ≅ pe'
    for (const auto& e : E.objects) {
        const Name& pe = p.on_ob(e);
        for (const auto& b : B.objects) {
            for (const auto& beta : B.hom(b, pe)) {
                bool lifted = false;
                for (const auto& [chi, info] : E.morphisms) {
                    if (info.tgt != e || lifted) continue;
                    for (const auto& theta : B.hom(b, p.on_ob(info.src))) {
                        if (!B.is_invertible(theta)) continue;
                        if (B.compose(p.on_mor(chi), theta) == beta) {
                            lifted = true;
                            break;
                        }
                    }
                }
                if (!lifted) {
                    rep.verdict = false;
                    rep.witnesses.push_back("no lift of " + beta + " into " + e);
                }
            }
        }
    }
    // (ii) every morphism of E is cartesian
    for (const auto& [chi, info] : E.morphisms) {
        (void)info;
        if (!is_cartesian(p, chi)) {
            rep.verdict = false;
            rep.witnesses.push_back("non-cartesian morphism " + chi);
        }
    }
    return rep;
}

FibrationReport is_discrete_fibration(const FinFunctor& p) {
    const FinCat& E = *p.dom;
    const FinCat& B = *p.cod;
    FibrationReport rep;
    rep.verdict = true;
    for (const auto& e : E.objects) {
        const Name& pe = p.on_ob(e);
        for (const auto& [beta, binfo] : B.morphisms) {
            if (binfo.tgt != pe) continue;
            std::size_t lifts = 0;
            for (const auto& [chi, info] : E.morphisms)
                if (info.tgt == e && p.on_mor(chi) == beta) ++lifts;
            if (lifts != 1) {
                rep.verdict = false;
                rep.witnesses.push_back(std::to_string(lifts) + " lifts of " + beta + " into " + e);
            }
        }
    }
    return rep;
}

FibrationReport is_opfibration_gfib(const FinFunctor& p) {
    return is_groupoid_fibration(opposite(p));
}

CatPtr under_comma(const Name& b, const FinFunctor& j) {
    return comma(constant_functor(fixtures::terminal(), j.cod, b), j).apex;
}

FibrationReport is_final(const FinFunctor& j) {
    FibrationReport rep;
    rep.verdict = true;
    for (const auto& b : j.cod->objects) {
        auto slice = under_comma(b, j);
        if (slice->objects.empty()) {
            rep.verdict = false;
            rep.witnesses.push_back(b + "/j is empty");
        } else if (slice->components().size() > 1) {
            rep.verdict = false;
            rep.witnesses.push_back(b + "/j is disconnected");
        }
    }
    return rep;
}

UltimacyReport is_ultimate(const FinFunctor& j, std::size_t bound) {
    UltimacyReport rep;
    rep.value = gpd::TriBool::Yes;
    for (const auto& b : j.cod->objects) {
        auto t = gpd::is_trivial_pi1(under_comma(b, j), bound);
        if (t.value == gpd::TriBool::Yes) continue;
        rep.witnesses.push_back(b + "/j: " + t.reason);
        if (t.value == gpd::TriBool::No)
            rep.value = gpd::TriBool::No;   // a certified failure dominates
        else if (rep.value != gpd::TriBool::No)
            rep.value = gpd::TriBool::Unknown;
    }
    return rep;
}

CatPtr pseudofibre(const FinFunctor& p, const Name& b) {
    return pseudopullback(constant_functor(fixtures::terminal(), p.cod, b), p).apex;
}

}   // namespace factcat::fib
