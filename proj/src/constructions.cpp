#include "factcat/constructions.hpp"

#include <algorithm>

namespace factcat {

Name comma_obj_name(const Name& a, const Name& beta, const Name& b) {
    return "(" + a + "|" + beta + "|" + b + ")";
}

Name comma_mor_name(const Name& u, const Name& v, const Name& src, const Name& tgt) {
    return "(" + u + "|" + v + "):" + src + ">" + tgt;
}

namespace {

CatPtr make_terminal() {
    return FinCatBuilder{}.add_object("*").build_ptr();
}

CommaCone comma_impl(const FinFunctor& f, const FinFunctor& g, bool iso_only) {
    if (!same_cat(f.cod, g.cod))
        throw std::invalid_argument("comma requires a cospan (equal codomains)");
    const FinCat& A = *f.dom;
    const FinCat& B = *g.dom;
    const FinCat& C = *f.cod;

    CommaCone cone;
    cone.iso_flag = iso_only;

    FinCatBuilder bld;
    for (const auto& a : A.objects)
        for (const auto& b : B.objects)
            for (const auto& beta : C.hom(f.on_ob(a), g.on_ob(b))) {
                if (iso_only && !C.is_invertible(beta)) continue;
                Name n = comma_obj_name(a, beta, b);
                bld.add_object(n);
                cone.obj_parts[n] = {a, beta, b};
            }

    // morphisms (u, v) with g(v)∘β = β'∘f(u)
    std::map<Name, MorInfo> bounds;
    for (const auto& [n1, p1] : cone.obj_parts)
        for (const auto& [n2, p2] : cone.obj_parts) {
            for (const auto& u : A.hom(p1[0], p2[0]))
                for (const auto& v : B.hom(p1[2], p2[2])) {
                    if (C.compose(g.on_mor(v), p1[1]) != C.compose(p2[1], f.on_mor(u))) continue;
                    if (n1 == n2 && A.is_id(u) && B.is_id(v)) {
                        cone.mor_parts["id_" + n1] = {u, v};
                        bounds["id_" + n1] = {n1, n1};
                        continue;
                    }
                    Name mn = comma_mor_name(u, v, n1, n2);
                    bld.add_morphism(mn, n1, n2);
                    cone.mor_parts[mn] = {u, v};
                    bounds[mn] = {n1, n2};
                }
        }

    auto mor_name = [&](const Name& u, const Name& v, const Name& s, const Name& t) -> Name {
        if (s == t && A.is_id(u) && B.is_id(v)) return "id_" + s;
        return comma_mor_name(u, v, s, t);
    };
    for (const auto& [m2, uv2] : cone.mor_parts)
        for (const auto& [m1, uv1] : cone.mor_parts) {
            if (bounds.at(m2).src != bounds.at(m1).tgt) continue;
            if (m1.rfind("id_", 0) == 0 || m2.rfind("id_", 0) == 0) continue;
            Name cu = A.compose(uv2.first, uv1.first);
            Name cv = B.compose(uv2.second, uv1.second);
            bld.set_compose(m2, m1, mor_name(cu, cv, bounds.at(m1).src, bounds.at(m2).tgt));
        }
    cone.apex = bld.build_ptr();

    cone.left_leg.dom = cone.apex;
    cone.left_leg.cod = f.dom;
    cone.right_leg.dom = cone.apex;
    cone.right_leg.cod = g.dom;
    for (const auto& [n, p] : cone.obj_parts) {
        cone.left_leg.ob[n] = p[0];
        cone.right_leg.ob[n] = p[2];
    }
    for (const auto& [mn, uv] : cone.mor_parts) {
        cone.left_leg.mor[mn] = uv.first;
        cone.right_leg.mor[mn] = uv.second;
    }
    cone.cell.dom = compose_functors(f, cone.left_leg);
    cone.cell.cod = compose_functors(g, cone.right_leg);
    for (const auto& [n, p] : cone.obj_parts) cone.cell.components[n] = p[1];
    return cone;
}

}   // namespace

CommaCone comma(const FinFunctor& f, const FinFunctor& g) { return comma_impl(f, g, false); }

CommaCone pseudopullback(const FinFunctor& f, const FinFunctor& g) {
    return comma_impl(f, g, true);
}

CommaCone arrow_category(const CatPtr& e) {
    auto id = identity_functor(e);
    return comma(id, id);
}

CommaCone under_slice(const CatPtr& b_cat, const Name& b) {
    auto one = make_terminal();
    return comma(constant_functor(one, b_cat, b), identity_functor(b_cat));
}

CommaCone over_comma_of(const FinFunctor& p) {
    return comma(identity_functor(p.cod), p);
}

CoreResult core(const CatPtr& a) {
    FinCat sub;
    sub.objects = a->objects;
    for (const auto& [m, info] : a->morphisms)
        if (a->is_invertible(m)) sub.morphisms[m] = info;
    sub.identity = a->identity;
    for (const auto& [key, gf] : a->table)
        if (sub.morphisms.count(key.first) && sub.morphisms.count(key.second)) sub.table[key] = gf;
    CoreResult out;
    out.core = make_cat(std::move(sub));
    out.inclusion.dom = out.core;
    out.inclusion.cod = a;
    for (const auto& x : out.core->objects) out.inclusion.ob[x] = x;
    for (const auto& [m, info] : out.core->morphisms) {
        (void)info;
        out.inclusion.mor[m] = m;
    }
    return out;
}

CatPtr opposite(const CatPtr& a) {
    FinCat op;
    op.objects = a->objects;
    for (const auto& [m, info] : a->morphisms) op.morphisms[m] = {info.tgt, info.src};
    op.identity = a->identity;
    for (const auto& [key, gf] : a->table) op.table[{key.second, key.first}] = gf;
    return make_cat(std::move(op));
}

FinFunctor opposite(const FinFunctor& f) {
    FinFunctor g;
    g.dom = opposite(f.dom);
    g.cod = opposite(f.cod);
    g.ob = f.ob;
    g.mor = f.mor;
    return g;
}

// ---- pseudofunctors and the Grothendieck construction ----

const FinFunctor& PseudofunctorData::act(const Name& beta) const {
    auto it = action.find(beta);
    if (it == action.end()) throw std::out_of_range("pseudofunctor action missing at " + beta);
    return it->second;
}

Name PseudofunctorData::comp_at(const Name& beta2, const Name& beta1, const Name& x) const {
    auto it = comp.find({beta2, beta1});
    if (it != comp.end()) return it->second.at(x);
    return value.at(base->src(beta1))->id_of(act(beta1).on_ob(act(beta2).on_ob(x)));
}

Name PseudofunctorData::unit_at(const Name& b, const Name& x) const {
    auto it = unit.find(b);
    if (it != unit.end()) return it->second.at(x);
    return value.at(b)->id_of(x);
}

std::vector<std::string> validate_pseudofunctor(const PseudofunctorData& t) {
    std::vector<std::string> errs;
    if (!t.base) return {"missing base"};
    for (auto e : validate_category(*t.base)) errs.push_back("base: " + e);
    for (const auto& b : t.base->objects) {
        auto it = t.value.find(b);
        if (it == t.value.end()) {
            errs.push_back("value missing at " + b);
            continue;
        }
        for (auto e : validate_category(*it->second)) errs.push_back("value at " + b + ": " + e);
        if (!it->second->is_groupoid()) errs.push_back("value at " + b + " is not a groupoid");
    }
    if (!errs.empty()) return errs;
    for (const auto& [m, info] : t.base->morphisms) {
        auto it = t.action.find(m);
        if (it == t.action.end()) {
            errs.push_back("action missing at " + m);
            continue;
        }
        if (!same_cat(it->second.dom, t.value.at(info.tgt)) ||
            !same_cat(it->second.cod, t.value.at(info.src)))
            errs.push_back("action at " + m + " has wrong dom/cod (must be contravariant)");
        for (auto e : validate_functor(it->second)) errs.push_back("action at " + m + ": " + e);
    }
    if (!errs.empty()) return errs;

    auto comp_nat = [&](const Name& b2, const Name& b1) -> NatTransform {
        auto it = t.comp.find({b2, b1});
        if (it != t.comp.end()) return it->second;
        NatTransform n;
        n.dom = compose_functors(t.act(b1), t.act(b2));
        n.cod = t.act(t.base->compose(b2, b1));
        for (const auto& x : n.dom.dom->objects)
            n.components[x] = n.dom.cod->id_of(n.dom.on_ob(x));
        return n;
    };

    for (const auto& [b2, i2] : t.base->morphisms)
        for (const auto& [b1, i1] : t.base->morphisms) {
            if (i2.src != i1.tgt) continue;
            auto n = comp_nat(b2, b1);
            if (!(n.dom == compose_functors(t.act(b1), t.act(b2))) ||
                !(n.cod == t.act(t.base->compose(b2, b1)))) {
                errs.push_back("coherence cell at (" + b2 + "," + b1 + ") has wrong boundary");
                continue;
            }
            if (!is_iso_nat(n))
                errs.push_back("coherence cell at (" + b2 + "," + b1 + ") is not a natural iso");
        }
    if (!errs.empty()) return errs;

    // associativity cocycle
    for (const auto& [b3, i3] : t.base->morphisms)
        for (const auto& [b2, i2] : t.base->morphisms) {
            if (i3.src != i2.tgt) continue;
            for (const auto& [b1, i1] : t.base->morphisms) {
                if (i2.src != i1.tgt) continue;
                const Name b32 = t.base->compose(b3, b2);
                const Name b21 = t.base->compose(b2, b1);
                const FinCat& fibre = *t.value.at(i1.src);
                for (const auto& x : t.act(b3).dom->objects) {
                    // route 1: whiskered γ(b2,b1) then γ(b3, b2∘b1)
                    Name r1 = fibre.compose(t.comp_at(b3, b21, x),
                                            t.comp_at(b2, b1, t.act(b3).on_ob(x)));
                    // route 2: T(b1) of γ(b3,b2) then γ(b3∘b2, b1)
                    Name r2 = fibre.compose(t.comp_at(b32, b1, x),
                                            t.act(b1).on_mor(t.comp_at(b3, b2, x)));
                    if (r1 != r2) {
                        errs.push_back("associativity coherence fails at (" + b3 + "," + b2 + "," +
                                       b1 + ") object " + x);
                    }
                }
            }
        }

    // unit coherence
    for (const auto& [m, info] : t.base->morphisms) {
        const FinCat& fibre = *t.value.at(info.src);
        for (const auto& x : t.act(m).dom->objects) {
            Name lhs = fibre.compose(t.comp_at(m, t.base->id_of(info.src), x),
                                     t.unit_at(info.src, t.act(m).on_ob(x)));
            if (lhs != fibre.id_of(t.act(m).on_ob(x)))
                errs.push_back("right unit coherence fails at " + m + " object " + x);
            Name rhs = fibre.compose(t.comp_at(t.base->id_of(info.tgt), m, x),
                                     t.act(m).on_mor(t.unit_at(info.tgt, x)));
            if (rhs != fibre.id_of(t.act(m).on_ob(x)))
                errs.push_back("left unit coherence fails at " + m + " object " + x);
        }
    }
    return errs;
}

GrothResult groth(const PseudofunctorData& t) {
    auto errs = validate_pseudofunctor(t);
    if (!errs.empty()) throw std::invalid_argument("invalid pseudofunctor: " + errs.front());
    const FinCat& B = *t.base;

    struct GObj {
        Name b, x;
    };
    std::map<Name, GObj> objs;
    FinCatBuilder bld;
    for (const auto& b : B.objects)
        for (const auto& x : t.value.at(b)->objects) {
            Name n = comma_obj_name(b, "", x);   // "(b||x)"
            bld.add_object(n);
            objs[n] = {b, x};
        }

    // morphism (β : b -> b', ξ : x -> T(β)(x')); the identity of (b,x) is
    // (id_b, unit_b(x))
    auto is_identity_pair = [&](const GObj& s, const GObj& tg, const Name& beta, const Name& xi) {
        return s.b == tg.b && s.x == tg.x && beta == B.id_of(s.b) && xi == t.unit_at(s.b, s.x);
    };
    std::map<Name, std::pair<Name, Name>> mors;   // name -> (β, ξ)
    std::map<Name, std::pair<Name, Name>> mbounds;
    auto mor_name = [&](const Name& beta, const Name& xi, const Name& sn, const Name& tn) -> Name {
        const GObj& s = objs.at(sn);
        const GObj& tg = objs.at(tn);
        if (is_identity_pair(s, tg, beta, xi)) return "id_" + sn;
        return comma_mor_name(beta, xi, sn, tn);
    };
    for (const auto& [sn, s] : objs)
        for (const auto& [tn, tg] : objs)
            for (const auto& beta : B.hom(s.b, tg.b))
                for (const auto& xi :
                     t.value.at(s.b)->hom(s.x, t.act(beta).on_ob(tg.x))) {
                    Name mn = mor_name(beta, xi, sn, tn);
                    if (mn.rfind("id_", 0) != 0) bld.add_morphism(mn, sn, tn);
                    mors[mn] = {beta, xi};
                    mbounds[mn] = {sn, tn};
                }

    for (const auto& [m2, p2] : mors)
        for (const auto& [m1, p1] : mors) {
            if (mbounds.at(m2).first != mbounds.at(m1).second) continue;
            if (m1.rfind("id_", 0) == 0 || m2.rfind("id_", 0) == 0) continue;
            const GObj& s = objs.at(mbounds.at(m1).first);
            const GObj& tg = objs.at(mbounds.at(m2).second);
            const FinCat& fibre = *t.value.at(s.b);
            Name beta = B.compose(p2.first, p1.first);
            Name xi = fibre.compose(t.comp_at(p2.first, p1.first, tg.x),
                                    fibre.compose(t.act(p1.first).on_mor(p2.second), p1.second));
            bld.set_compose(m2, m1,
                            mor_name(beta, xi, mbounds.at(m1).first, mbounds.at(m2).second));
        }

    GrothResult out;
    out.total = bld.build_ptr();
    out.projection.dom = out.total;
    out.projection.cod = t.base;
    for (const auto& [n, o] : objs) out.projection.ob[n] = o.b;
    for (const auto& [mn, p] : mors) out.projection.mor[mn] = p.first;
    auto ferrs = validate_functor(out.projection);
    if (!ferrs.empty())
        throw std::logic_error("groth produced an invalid projection: " + ferrs.front());
    return out;
}

FinFunctor canonical_r(const FinFunctor& p) {
    const FinCat& E = *p.dom;
    auto arrows = arrow_category(p.dom);
    auto slice = over_comma_of(p);

    FinFunctor r;
    r.dom = arrows.apex;
    r.cod = slice.apex;
    for (const auto& [n, parts] : arrows.obj_parts) {
        // (e'|χ|e) ↦ (p e', p χ, e)
        r.ob[n] = comma_obj_name(p.on_ob(parts[0]), p.on_mor(parts[1]), parts[2]);
    }
    for (const auto& [mn, uv] : arrows.mor_parts) {
        Name isrc = r.ob.at(arrows.apex->src(mn));
        Name itgt = r.ob.at(arrows.apex->tgt(mn));
        Name pu = p.on_mor(uv.first);
        Name v = uv.second;
        Name image;
        if (isrc == itgt && p.cod->is_id(pu) && E.is_id(v))
            image = "id_" + isrc;
        else
            image = comma_mor_name(pu, v, isrc, itgt);
        r.mor[mn] = image;
    }
    auto errs = validate_functor(r);
    if (!errs.empty()) throw std::logic_error("canonical_r invalid: " + errs.front());
    return r;
}

FinFunctor arrow_functor(const FinFunctor& p) {
    auto de = arrow_category(p.dom);
    auto db = arrow_category(p.cod);
    FinFunctor f;
    f.dom = de.apex;
    f.cod = db.apex;
    for (const auto& [n, parts] : de.obj_parts)
        f.ob[n] = comma_obj_name(p.on_ob(parts[0]), p.on_mor(parts[1]), p.on_ob(parts[2]));
    for (const auto& [mn, uv] : de.mor_parts) {
        Name isrc = f.ob.at(de.apex->src(mn));
        Name itgt = f.ob.at(de.apex->tgt(mn));
        Name pu = p.on_mor(uv.first);
        Name pv = p.on_mor(uv.second);
        if (isrc == itgt && p.cod->is_id(pu) && p.cod->is_id(pv))
            f.mor[mn] = "id_" + isrc;
        else
            f.mor[mn] = comma_mor_name(pu, pv, isrc, itgt);
    }
    auto errs = validate_functor(f);
    if (!errs.empty()) throw std::logic_error("arrow_functor invalid: " + errs.front());
    return f;
}

FinFunctor core_restrict(const FinFunctor& f) {
    auto cd = core(f.dom);
    auto cc = core(f.cod);
    FinFunctor g;
    g.dom = cd.core;
    g.cod = cc.core;
    for (const auto& o : cd.core->objects) g.ob[o] = f.on_ob(o);
    for (const auto& [m, info] : cd.core->morphisms) {
        (void)info;
        g.mor[m] = f.on_mor(m);   // functors preserve invertibility
    }
    auto errs = validate_functor(g);
    if (!errs.empty()) throw std::logic_error("core_restrict invalid: " + errs.front());
    return g;
}

std::optional<FinFunctor> mediating_functor(const CommaCone& cone, const FinFunctor& f,
                                            const FinFunctor& g, const CommaCone& competing,
                                            bool* unique) {
    if (unique) *unique = true;   // strict mediators are forced pointwise
    const FinCat& K = *competing.apex;
    FinFunctor h;
    h.dom = competing.apex;
    h.cod = cone.apex;
    for (const auto& k : K.objects) {
        Name n = comma_obj_name(competing.left_leg.on_ob(k), competing.cell.at(k),
                                competing.right_leg.on_ob(k));
        if (!cone.apex->has_object(n)) return std::nullopt;
        h.ob[k] = n;
    }
    for (const auto& [m, info] : K.morphisms) {
        Name u = competing.left_leg.on_mor(m);
        Name v = competing.right_leg.on_mor(m);
        Name isrc = h.ob.at(info.src);
        Name itgt = h.ob.at(info.tgt);
        Name image;
        if (isrc == itgt && f.dom->is_id(u) && g.dom->is_id(v))
            image = "id_" + isrc;
        else
            image = comma_mor_name(u, v, isrc, itgt);
        if (!cone.apex->has_morphism(image)) return std::nullopt;
        h.mor[m] = image;
    }
    if (!validate_functor(h).empty()) return std::nullopt;
    return h;
}

}   // namespace factcat
