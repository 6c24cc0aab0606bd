#include "factcat/factorize.hpp"

#include "factcat/fixtures.hpp"

#include <algorithm>

namespace factcat::factorize {

namespace {

NatTransform identity_comparison(const FinFunctor& pj, const FinFunctor& f) {
    NatTransform c;
    c.dom = pj;
    c.cod = f;
    for (const auto& a : f.dom->objects) c.components[a] = f.cod->id_of(f.on_ob(a));
    if (!is_natural(c) || !is_iso_nat(c))
        throw std::logic_error("factorization comparison is not an iso 2-cell");
    return c;
}

}   // namespace

Factorization comprehensive_factorize(const FinFunctor& f) {
    const CatPtr& A = f.dom;
    const CatPtr& B = f.cod;

    // per object b: the comma b/f, its components keyed by representative
    std::map<Name, CommaCone> slices;
    std::map<Name, std::map<Name, Name>> comp_of;   // b -> (comma object -> rep)
    std::map<Name, std::vector<Name>> reps;         // b -> sorted reps
    for (const auto& b : B->objects) {
        auto cone = comma(constant_functor(fixtures::terminal(), B, b), f);
        for (const auto& comp : cone.apex->components()) {
            Name rep = *std::min_element(comp.begin(), comp.end());
            for (const auto& o : comp) comp_of[b][o] = rep;
            reps[b].push_back(rep);
        }
        std::sort(reps[b].begin(), reps[b].end());
        slices.emplace(b, std::move(cone));
    }

    auto obj_name = [](const Name& b, const Name& rep) { return "(" + b + "|" + rep + ")"; };
    // transport a component of b'/f backwards along β : b -> b'
    auto pull = [&](const Name& beta, const Name& rep) -> Name {
        const Name& b = B->src(beta);
        const Name& bp = B->tgt(beta);
        const auto& parts = slices.at(bp).obj_parts.at(rep);   // (*, β0, a)
        Name pulled = comma_obj_name("*", B->compose(parts[1], beta), parts[2]);
        return comp_of.at(b).at(pulled);
    };
    auto mor_name = [](const Name& beta, const Name& rep) { return "(" + beta + "|" + rep + ")"; };

    FinCatBuilder bld;
    std::map<Name, Name> beta_of;   // E morphism -> underlying B morphism
    for (const auto& b : B->objects)
        for (const auto& rep : reps.at(b)) bld.add_object(obj_name(b, rep));
    for (const auto& [beta, info] : B->morphisms) {
        if (B->is_id(beta)) continue;
        for (const auto& rep : reps.at(info.tgt)) {
            bld.add_morphism(mor_name(beta, rep), obj_name(info.src, pull(beta, rep)),
                             obj_name(info.tgt, rep));
            beta_of[mor_name(beta, rep)] = beta;
        }
    }
    for (const auto& [b1, i1] : B->morphisms) {
        if (B->is_id(b1)) continue;
        for (const auto& [b2, i2] : B->morphisms) {
            if (B->is_id(b2) || i2.src != i1.tgt) continue;
            const Name& b21 = B->compose(b2, b1);
            for (const auto& rep : reps.at(i2.tgt)) {
                Name gf = B->is_id(b21) ? "id_" + obj_name(i1.src, rep) : mor_name(b21, rep);
                bld.set_compose(mor_name(b2, rep), mor_name(b1, pull(b2, rep)), gf);
            }
        }
    }
    CatPtr E = bld.build_ptr();

    FinFunctor p;
    p.dom = E;
    p.cod = B;
    for (const auto& b : B->objects)
        for (const auto& rep : reps.at(b)) p.ob[obj_name(b, rep)] = b;
    for (const auto& [m, info] : E->morphisms) {
        if (E->is_id(m))
            p.mor[m] = B->id_of(p.ob.at(info.src));
        else
            p.mor[m] = beta_of.at(m);
    }

    FinFunctor j;
    j.dom = A;
    j.cod = E;
    for (const auto& a : A->objects) {
        const Name& fa = f.on_ob(a);
        Name unit = comma_obj_name("*", B->id_of(fa), a);
        j.ob[a] = obj_name(fa, comp_of.at(fa).at(unit));
    }
    for (const auto& [al, info] : A->morphisms) {
        const Name& beta = f.on_mor(al);
        if (B->is_id(beta))
            j.mor[al] = E->id_of(j.ob.at(info.src));   // same component along α
        else
            j.mor[al] = mor_name(beta, comp_of.at(f.on_ob(info.tgt))
                                           .at(comma_obj_name("*", B->id_of(f.on_ob(info.tgt)),
                                                              info.tgt)));
    }

    for (const auto* fn : {&p, &j}) {
        auto errs = validate_functor(*fn);
        if (!errs.empty()) throw std::logic_error("comprehensive factor invalid: " + errs.front());
    }
    if (!fib::is_discrete_fibration(p).verdict)
        throw std::logic_error("comprehensive right factor is not a discrete fibration");
    if (!fib::is_final(j).verdict)
        throw std::logic_error("comprehensive left factor is not final");

    Factorization out;
    out.input = f;
    out.left = j;
    out.mid = E;
    out.right = p;
    out.comparison = identity_comparison(compose_functors(p, j), f);
    return out;
}

UltimateOutcome ultimate_factorize(const FinFunctor& f, std::size_t bound) {
    const CatPtr& A = f.dom;
    const CatPtr& B = f.cod;
    auto cone = comma(identity_functor(B), f);   // B/f

    std::set<Name> fibrewise;
    for (const auto& [m, uv] : cone.mor_parts)
        if (B->is_id(uv.first)) fibrewise.insert(m);

    auto n = gpd::normalize(gpd::localize(cone.apex, fibrewise), bound);
    if (n.status != gpd::NormalizationResult::Status::Finite) return BoundExceeded{std::move(n)};

    auto nq = gpd::quotient_functor(cone.apex, n);

    std::map<Name, Name> pob, pgen;
    for (const auto& [o, parts] : cone.obj_parts) pob[o] = parts[0];
    for (const auto& [m, uv] : cone.mor_parts) pgen[m] = uv.first;
    FinFunctor p = gpd::induced_functor(n, B, pob, pgen);

    FinFunctor i;   // A -> B/f, a ↦ (fa, id, a)
    i.dom = A;
    i.cod = cone.apex;
    for (const auto& a : A->objects)
        i.ob[a] = comma_obj_name(f.on_ob(a), B->id_of(f.on_ob(a)), a);
    for (const auto& [al, info] : A->morphisms) {
        if (A->is_id(al)) {
            i.mor[al] = cone.apex->id_of(i.ob.at(info.src));
            continue;
        }
        i.mor[al] = comma_mor_name(f.on_mor(al), al, i.ob.at(info.src), i.ob.at(info.tgt));
    }

    FinFunctor j = compose_functors(nq, i);
    for (const auto* fn : {&p, &i, &j}) {
        auto errs = validate_functor(*fn);
        if (!errs.empty()) throw std::logic_error("ultimate factor invalid: " + errs.front());
    }
    if (!fib::is_groupoid_fibration(p).verdict)
        throw std::logic_error("ultimate right factor is not a groupoid fibration");

    Factorization out;
    out.input = f;
    out.left = j;
    out.mid = n.category;
    out.right = p;
    out.comparison = identity_comparison(compose_functors(p, j), f);
    return out;
}

bool check_fs0(const FinFunctor& f, const FinFunctor& w, Side side) {
    if (!is_equivalence(w)) throw std::invalid_argument("check_fs0: w is not an equivalence");
    FinFunctor comp;
    if (same_cat(w.cod, f.dom))
        comp = compose_functors(f, w);
    else if (same_cat(f.cod, w.dom))
        comp = compose_functors(w, f);
    else
        throw std::invalid_argument("check_fs0: f and w do not compose");
    if (side == Side::Right)
        return fib::is_groupoid_fibration(f).verdict == fib::is_groupoid_fibration(comp).verdict;
    return fib::is_ultimate(f).value == fib::is_ultimate(comp).value;
}

namespace {

// name of a transform inside an enumerated functor category
Name nat_name_in(const NatTransform& t) {
    bool all_id = true;
    for (const auto& [x, c] : t.components)
        if (!t.dom.cod->is_id(c)) all_id = false;
    if (all_id) return "id_" + canonical_functor_name(t.dom);
    return canonical_nat_name(t);
}

}   // namespace

bool check_fs1(const FinFunctor& e, const FinFunctor& m, std::size_t guard) {
    if (!fib::is_groupoid_fibration(m).verdict)
        throw std::invalid_argument("check_fs1: m is not a groupoid fibration");
    const CatPtr& X = e.dom;
    const CatPtr& Y = e.cod;
    const CatPtr& Acat = m.dom;
    const CatPtr& Bcat = m.cod;

    auto YA = functor_category(Y, Acat, guard);
    auto XA = functor_category(X, Acat, guard);
    auto YB = functor_category(Y, Bcat, guard);
    auto XB = functor_category(X, Bcat, guard);

    FinFunctor post_m;   // [X,A] -> [X,B], F ↦ m∘F
    post_m.dom = XA.cat;
    post_m.cod = XB.cat;
    for (const auto& [nm, F] : XA.obj_functors)
        post_m.ob[nm] = canonical_functor_name(compose_functors(m, F));
    for (const auto& [nm, t] : XA.mor_transforms)
        post_m.mor[nm] = nat_name_in(whisker_left(m, t));

    FinFunctor pre_e;   // [Y,B] -> [X,B], G ↦ G∘e
    pre_e.dom = YB.cat;
    pre_e.cod = XB.cat;
    for (const auto& [nm, G] : YB.obj_functors)
        pre_e.ob[nm] = canonical_functor_name(compose_functors(G, e));
    for (const auto& [nm, t] : YB.mor_transforms) pre_e.mor[nm] = nat_name_in(whisker_right(t, e));

    for (const auto* fn : {&post_m, &pre_e}) {
        auto errs = validate_functor(*fn);
        if (!errs.empty()) throw std::logic_error("check_fs1 square invalid: " + errs.front());
    }

    auto pb = pseudopullback(post_m, pre_e);

    FinFunctor c;   // [Y,A] -> pspb, h ↦ (h∘e, id, m∘h)
    c.dom = YA.cat;
    c.cod = pb.apex;
    for (const auto& [nm, h] : YA.obj_functors) {
        Name n1 = canonical_functor_name(compose_functors(h, e));
        Name n2 = canonical_functor_name(compose_functors(m, h));
        c.ob[nm] = comma_obj_name(n1, "id_" + post_m.ob.at(n1), n2);
    }
    for (const auto& [nm, t] : YA.mor_transforms) {
        Name isrc = c.ob.at(YA.cat->src(nm));
        Name itgt = c.ob.at(YA.cat->tgt(nm));
        Name u = nat_name_in(whisker_right(t, e));
        Name v = nat_name_in(whisker_left(m, t));
        if (isrc == itgt && XA.cat->is_id(u) && YB.cat->is_id(v))
            c.mor[nm] = "id_" + isrc;
        else
            c.mor[nm] = comma_mor_name(u, v, isrc, itgt);
    }
    auto errs = validate_functor(c);
    if (!errs.empty()) throw std::logic_error("check_fs1 comparison invalid: " + errs.front());

    return is_equivalence(core_restrict(c));
}

ReflectionWitness reflect_to_gfib(const FinFunctor& j, const FinFunctor& q, const FinFunctor& f,
                                  const NatTransform& phi, std::size_t bound) {
    if (!fib::is_groupoid_fibration(q).verdict)
        throw std::invalid_argument("reflect_to_gfib: q is not a groupoid fibration");
    if (fib::is_ultimate(j, bound).value == gpd::TriBool::No)
        throw std::invalid_argument("reflect_to_gfib: j is certified not ultimate");
    if (!is_iso_nat(phi)) throw std::invalid_argument("reflect_to_gfib: φ is not invertible");

    const CatPtr& A = j.dom;
    const CatPtr& B = j.cod;
    const CatPtr& E = q.dom;
    auto phi_inv = invert_nat(phi);   // j ⇒ q∘f

    std::vector<ReflectionWitness> found;
    for (const auto& w : all_functors(B, E, bound)) {
        auto qw = compose_functors(q, w);
        for (const auto& psi : all_transforms(identity_functor(B), qw, bound)) {
            if (!is_iso_nat(psi)) continue;
            for (const auto& sigma : all_transforms(f, compose_functors(w, j), bound)) {
                if (!is_iso_nat(sigma)) continue;
                bool ok = true;
                for (const auto& a : A->objects) {
                    if (psi.at(j.on_ob(a)) !=
                        B->compose(q.on_mor(sigma.at(a)), phi_inv.at(a))) {
                        ok = false;
                        break;
                    }
                }
                if (ok) found.push_back(ReflectionWitness{w, psi, sigma});
            }
        }
    }
    if (found.empty())
        throw std::runtime_error("reflect_to_gfib: no witness within the search bound");

    // every alternative witness must be uniquely isomorphic to the first
    const auto& first = found.front();
    for (const auto& other : found) {
        std::size_t taus = 0;
        for (const auto& tau : all_transforms(first.w, other.w, bound)) {
            if (!is_iso_nat(tau)) continue;
            bool ok = true;
            for (const auto& b : B->objects)
                if (B->compose(q.on_mor(tau.at(b)), first.psi.at(b)) != other.psi.at(b)) ok = false;
            for (const auto& a : A->objects)
                if (E->compose(tau.at(j.on_ob(a)), first.sigma.at(a)) != other.sigma.at(a))
                    ok = false;
            if (ok) ++taus;
        }
        if (taus != 1)
            throw std::logic_error("reflect_to_gfib: witness not unique up to unique iso");
    }
    return first;
}

}   // namespace factcat::factorize
