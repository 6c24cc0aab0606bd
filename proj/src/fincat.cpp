#include "factcat/fincat.hpp"

#include <algorithm>
#include <functional>
#include <sstream>
#include <tuple>

namespace factcat {

// ---- FinCat ----

bool FinCat::has_object(const Name& x) const {
    return std::binary_search(objects.begin(), objects.end(), x) ||
           std::find(objects.begin(), objects.end(), x) != objects.end();
}

bool FinCat::has_morphism(const Name& m) const { return morphisms.count(m) > 0; }

const MorInfo& FinCat::mor(const Name& m) const {
    auto it = morphisms.find(m);
    if (it == morphisms.end()) throw std::out_of_range("no morphism named " + m);
    return it->second;
}

const Name& FinCat::id_of(const Name& x) const {
    auto it = identity.find(x);
    if (it == identity.end()) throw std::out_of_range("no identity for object " + x);
    return it->second;
}

bool FinCat::is_id(const Name& m) const {
    const auto& info = mor(m);
    return info.src == info.tgt && id_of(info.src) == m;
}

const Name& FinCat::compose(const Name& g, const Name& f) const {
    auto it = table.find({g, f});
    if (it == table.end())
        throw std::out_of_range("composition undefined for (" + g + ", " + f + ")");
    return it->second;
}

std::vector<Name> FinCat::hom(const Name& a, const Name& b) const {
    std::vector<Name> out;
    for (const auto& [m, info] : morphisms)
        if (info.src == a && info.tgt == b) out.push_back(m);
    return out;
}

bool FinCat::is_invertible(const Name& m) const { return inverse(m).has_value(); }

std::optional<Name> FinCat::inverse(const Name& m) const {
    const auto& info = mor(m);
    for (const auto& n : hom(info.tgt, info.src)) {
        if (compose(n, m) == id_of(info.src) && compose(m, n) == id_of(info.tgt))
            return n;
    }
    return std::nullopt;
}

bool FinCat::is_groupoid() const {
    for (const auto& [m, info] : morphisms) {
        (void)info;
        if (!is_invertible(m)) return false;
    }
    return true;
}

bool FinCat::isomorphic_objects(const Name& a, const Name& b) const {
    for (const auto& m : hom(a, b))
        if (is_invertible(m)) return true;
    return false;
}

std::vector<std::vector<Name>> FinCat::components() const {
    std::map<Name, Name> parent;
    for (const auto& x : objects) parent[x] = x;
    std::function<Name(const Name&)> find = [&](const Name& x) -> Name {
        Name r = x;
        while (parent[r] != r) r = parent[r];
        return r;
    };
    for (const auto& [m, info] : morphisms) {
        (void)m;
        Name ra = find(info.src), rb = find(info.tgt);
        if (ra != rb) parent[std::max(ra, rb)] = std::min(ra, rb);
    }
    std::map<Name, std::vector<Name>> groups;
    for (const auto& x : objects) groups[find(x)].push_back(x);
    std::vector<std::vector<Name>> out;
    for (auto& [r, g] : groups) {
        (void)r;
        out.push_back(std::move(g));
    }
    return out;
}

CatPtr make_cat(FinCat c) { return std::make_shared<const FinCat>(std::move(c)); }

// ---- builder ----

FinCatBuilder& FinCatBuilder::add_object(const Name& x) {
    cat_.objects.push_back(x);
    Name id = "id_" + x;
    cat_.morphisms[id] = MorInfo{x, x};
    cat_.identity[x] = id;
    return *this;
}

FinCatBuilder& FinCatBuilder::add_morphism(const Name& m, const Name& src, const Name& tgt) {
    cat_.morphisms[m] = MorInfo{src, tgt};
    return *this;
}

FinCatBuilder& FinCatBuilder::set_compose(const Name& g, const Name& f, const Name& gf) {
    cat_.table[{g, f}] = gf;
    return *this;
}

FinCat FinCatBuilder::build(bool check) const {
    FinCat c = cat_;
    std::sort(c.objects.begin(), c.objects.end());
    c.objects.erase(std::unique(c.objects.begin(), c.objects.end()), c.objects.end());
    // identity rows
    for (const auto& [m, info] : c.morphisms) {
        c.table[{c.identity.at(info.tgt), m}] = m;
        c.table[{m, c.identity.at(info.src)}] = m;
    }
    if (check) {
        auto errs = validate_category(c);
        if (!errs.empty()) throw std::invalid_argument("invalid category: " + errs.front());
    }
    return c;
}

CatPtr FinCatBuilder::build_ptr(bool check) const { return make_cat(build(check)); }

// ---- FinFunctor / NatTransform ----

const Name& FinFunctor::on_ob(const Name& x) const {
    auto it = ob.find(x);
    if (it == ob.end()) throw std::out_of_range("functor undefined on object " + x);
    return it->second;
}

const Name& FinFunctor::on_mor(const Name& m) const {
    auto it = mor.find(m);
    if (it == mor.end()) throw std::out_of_range("functor undefined on morphism " + m);
    return it->second;
}

bool FinFunctor::operator==(const FinFunctor& o) const {
    return same_cat(dom, o.dom) && same_cat(cod, o.cod) && ob == o.ob && mor == o.mor;
}

const Name& NatTransform::at(const Name& x) const {
    auto it = components.find(x);
    if (it == components.end()) throw std::out_of_range("no component at object " + x);
    return it->second;
}

bool same_cat(const CatPtr& a, const CatPtr& b) {
    if (a == b) return true;
    if (!a || !b) return false;
    return *a == *b;
}

// ---- validation ----

std::vector<std::string> validate_category(const FinCat& c) {
    std::vector<std::string> errs;
    std::set<Name> obset(c.objects.begin(), c.objects.end());
    if (obset.size() != c.objects.size()) errs.push_back("duplicate object names");
    for (const auto& [m, info] : c.morphisms) {
        (void)m;
        if (!obset.count(info.src)) errs.push_back("morphism " + m + " has unknown src " + info.src);
        if (!obset.count(info.tgt)) errs.push_back("morphism " + m + " has unknown tgt " + info.tgt);
    }
    for (const auto& x : c.objects) {
        auto it = c.identity.find(x);
        if (it == c.identity.end()) {
            errs.push_back("object " + x + " has no identity");
            continue;
        }
        auto mit = c.morphisms.find(it->second);
        if (mit == c.morphisms.end() || mit->second.src != x || mit->second.tgt != x)
            errs.push_back("identity of " + x + " is not an endomorphism of " + x);
    }
    if (!errs.empty()) return errs;   // later laws presuppose well-formed data

    // totality and boundary of composition
    for (const auto& [g, gi] : c.morphisms) {
        for (const auto& [f, fi] : c.morphisms) {
            if (gi.src != fi.tgt) continue;
            auto it = c.table.find({g, f});
            if (it == c.table.end()) {
                errs.push_back("composition missing for (" + g + ", " + f + ")");
                continue;
            }
            auto ci = c.morphisms.find(it->second);
            if (ci == c.morphisms.end()) {
                errs.push_back("composite of (" + g + ", " + f + ") is not a morphism");
                continue;
            }
            if (ci->second.src != fi.src || ci->second.tgt != gi.tgt)
                errs.push_back("composite of (" + g + ", " + f + ") has wrong boundary");
        }
    }
    if (!errs.empty()) return errs;

    // unit laws
    for (const auto& [m, info] : c.morphisms) {
        if (c.compose(c.identity.at(info.tgt), m) != m)
            errs.push_back("unit law fails for (" + c.identity.at(info.tgt) + ", " + m + ")");
        if (c.compose(m, c.identity.at(info.src)) != m)
            errs.push_back("unit law fails for (" + m + ", " + c.identity.at(info.src) + ")");
    }

    // associativity
    for (const auto& [h, hi] : c.morphisms) {
        for (const auto& [g, gi] : c.morphisms) {
            if (hi.src != gi.tgt) continue;
            for (const auto& [f, fi] : c.morphisms) {
                if (gi.src != fi.tgt) continue;
                if (c.compose(h, c.compose(g, f)) != c.compose(c.compose(h, g), f))
                    errs.push_back("associativity fails for (" + h + ", " + g + ", " + f + ")");
            }
        }
    }
    return errs;
}

std::vector<std::string> validate_functor(const FinFunctor& f) {
    std::vector<std::string> errs;
    if (!f.dom || !f.cod) return {"functor missing dom or cod"};
    const FinCat& A = *f.dom;
    const FinCat& X = *f.cod;
    for (const auto& a : A.objects) {
        auto it = f.ob.find(a);
        if (it == f.ob.end()) {
            errs.push_back("object map undefined at " + a);
        } else if (!X.has_object(it->second)) {
            errs.push_back("object map sends " + a + " outside the codomain");
        }
    }
    if (!errs.empty()) return errs;
    for (const auto& [m, info] : A.morphisms) {
        auto it = f.mor.find(m);
        if (it == f.mor.end()) {
            errs.push_back("morphism map undefined at " + m);
            continue;
        }
        if (!X.has_morphism(it->second)) {
            errs.push_back("morphism map sends " + m + " outside the codomain");
            continue;
        }
        const auto& im = X.mor(it->second);
        if (im.src != f.ob.at(info.src) || im.tgt != f.ob.at(info.tgt))
            errs.push_back("src/tgt not preserved at " + m);
    }
    if (!errs.empty()) return errs;
    for (const auto& a : A.objects) {
        if (f.mor.at(A.id_of(a)) != X.id_of(f.ob.at(a)))
            errs.push_back("identity not preserved at " + a);
    }
    for (const auto& [key, gf] : A.table) {
        const auto& [g, m] = key;
        if (X.compose(f.mor.at(g), f.mor.at(m)) != f.mor.at(gf))
            errs.push_back("composition not preserved at (" + g + ", " + m + ")");
    }
    return errs;
}

std::vector<std::string> validate_nat(const NatTransform& t) {
    std::vector<std::string> errs;
    if (!same_cat(t.dom.dom, t.cod.dom) || !same_cat(t.dom.cod, t.cod.cod))
        return {"transform between non-parallel functors"};
    const FinCat& A = *t.dom.dom;
    const FinCat& X = *t.dom.cod;
    for (const auto& a : A.objects) {
        auto it = t.components.find(a);
        if (it == t.components.end()) {
            errs.push_back("component missing at " + a);
            continue;
        }
        const auto& info = X.mor(it->second);
        if (info.src != t.dom.on_ob(a) || info.tgt != t.cod.on_ob(a))
            errs.push_back("component at " + a + " has wrong boundary");
    }
    if (!errs.empty()) return errs;
    for (const auto& [m, info] : A.morphisms) {
        if (X.compose(t.at(info.tgt), t.dom.on_mor(m)) !=
            X.compose(t.cod.on_mor(m), t.at(info.src)))
            errs.push_back("naturality fails at " + m);
    }
    return errs;
}

std::vector<std::string> validate_adjunction(const Adjunction& adj) {
    std::vector<std::string> errs;
    const FinFunctor& L = adj.left;    // L : B -> A
    const FinFunctor& R = adj.right;   // R : A -> B
    if (!same_cat(L.dom, R.cod) || !same_cat(L.cod, R.dom))
        return {"adjunction functors are not opposed"};
    for (auto e : validate_nat(adj.unit)) errs.push_back("unit: " + e);
    for (auto e : validate_nat(adj.counit)) errs.push_back("counit: " + e);
    if (!errs.empty()) return errs;
    const FinCat& A = *L.cod;
    const FinCat& B = *L.dom;
    // triangle identities, by table lookup
    for (const auto& b : B.objects) {
        // εL · Lη = 1_L
        const Name lb = L.on_ob(b);
        const Name lhs = A.compose(adj.counit.at(lb), L.on_mor(adj.unit.at(b)));
        if (lhs != A.id_of(lb)) errs.push_back("triangle identity (counit∘L)·(L∘unit) fails at " + b);
    }
    for (const auto& a : A.objects) {
        // Rε · ηR = 1_R
        const Name ra = R.on_ob(a);
        const Name lhs = B.compose(R.on_mor(adj.counit.at(a)), adj.unit.at(ra));
        if (lhs != B.id_of(ra)) errs.push_back("triangle identity (R∘counit)·(unit∘R) fails at " + a);
    }
    return errs;
}

// ---- functor and transform algebra ----

FinFunctor identity_functor(const CatPtr& c) {
    FinFunctor f;
    f.dom = f.cod = c;
    for (const auto& x : c->objects) f.ob[x] = x;
    for (const auto& [m, info] : c->morphisms) {
        (void)info;
        f.mor[m] = m;
    }
    return f;
}

FinFunctor constant_functor(const CatPtr& dom, const CatPtr& cod, const Name& obj) {
    FinFunctor f;
    f.dom = dom;
    f.cod = cod;
    for (const auto& x : dom->objects) f.ob[x] = obj;
    for (const auto& [m, info] : dom->morphisms) {
        (void)info;
        f.mor[m] = cod->id_of(obj);
    }
    return f;
}

FinFunctor compose_functors(const FinFunctor& g, const FinFunctor& f) {
    if (!same_cat(f.cod, g.dom)) throw std::invalid_argument("functors not composable");
    FinFunctor h;
    h.dom = f.dom;
    h.cod = g.cod;
    for (const auto& [a, fa] : f.ob) h.ob[a] = g.on_ob(fa);
    for (const auto& [m, fm] : f.mor) h.mor[m] = g.on_mor(fm);
    return h;
}

NatTransform identity_nat(const FinFunctor& f) {
    NatTransform t;
    t.dom = t.cod = f;
    for (const auto& x : f.dom->objects) t.components[x] = f.cod->id_of(f.on_ob(x));
    return t;
}

NatTransform vcompose(const NatTransform& beta, const NatTransform& alpha) {
    NatTransform t;
    t.dom = alpha.dom;
    t.cod = beta.cod;
    const FinCat& X = *alpha.dom.cod;
    for (const auto& x : alpha.dom.dom->objects)
        t.components[x] = X.compose(beta.at(x), alpha.at(x));
    return t;
}

NatTransform whisker_left(const FinFunctor& h, const NatTransform& alpha) {
    NatTransform t;
    t.dom = compose_functors(h, alpha.dom);
    t.cod = compose_functors(h, alpha.cod);
    for (const auto& [x, c] : alpha.components) t.components[x] = h.on_mor(c);
    return t;
}

NatTransform whisker_right(const NatTransform& alpha, const FinFunctor& h) {
    NatTransform t;
    t.dom = compose_functors(alpha.dom, h);
    t.cod = compose_functors(alpha.cod, h);
    for (const auto& x : h.dom->objects) t.components[x] = alpha.at(h.on_ob(x));
    return t;
}

bool is_natural(const NatTransform& t) { return validate_nat(t).empty(); }

bool is_iso_nat(const NatTransform& t) {
    if (!is_natural(t)) return false;
    for (const auto& [x, c] : t.components) {
        (void)x;
        if (!t.dom.cod->is_invertible(c)) return false;
    }
    return true;
}

NatTransform invert_nat(const NatTransform& t) {
    NatTransform r;
    r.dom = t.cod;
    r.cod = t.dom;
    for (const auto& [x, c] : t.components) {
        auto inv = t.dom.cod->inverse(c);
        if (!inv) throw std::invalid_argument("transform is not invertible at " + x);
        r.components[x] = *inv;
    }
    return r;
}

// ---- decision procedures ----

bool is_fully_faithful(const FinFunctor& f) {
    const FinCat& A = *f.dom;
    const FinCat& X = *f.cod;
    for (const auto& a : A.objects) {
        for (const auto& b : A.objects) {
            auto source = A.hom(a, b);
            auto target = X.hom(f.on_ob(a), f.on_ob(b));
            std::set<Name> image;
            for (const auto& m : source) image.insert(f.on_mor(m));
            if (image.size() != source.size()) return false;        // not faithful
            if (image.size() != target.size()) return false;        // not full
        }
    }
    return true;
}

bool is_essentially_surjective(const FinFunctor& f) {
    const FinCat& X = *f.cod;
    for (const auto& x : X.objects) {
        bool hit = false;
        for (const auto& [a, fa] : f.ob) {
            (void)a;
            if (X.isomorphic_objects(fa, x)) {
                hit = true;
                break;
            }
        }
        if (!hit) return false;
    }
    return true;
}

bool is_equivalence(const FinFunctor& f) {
    return is_fully_faithful(f) && is_essentially_surjective(f);
}

namespace {

// Objects of the comma b/j for j : A -> B, as pairs (a, β : b -> j a).
struct CommaObj {
    Name a;
    Name beta;
    bool operator<(const CommaObj& o) const { return std::tie(a, beta) < std::tie(o.a, o.beta); }
};

std::vector<CommaObj> under_comma(const FinFunctor& j, const Name& b) {
    std::vector<CommaObj> out;
    for (const auto& a : j.dom->objects)
        for (const auto& beta : j.cod->hom(b, j.on_ob(a))) out.push_back({a, beta});
    return out;
}

// Morphisms (a,β) -> (a',β') are u : a -> a' with j(u)∘β = β'.
std::vector<Name> under_comma_hom(const FinFunctor& j, const CommaObj& x, const CommaObj& y) {
    std::vector<Name> out;
    for (const auto& u : j.dom->hom(x.a, y.a))
        if (j.cod->compose(j.on_mor(u), x.beta) == y.beta) out.push_back(u);
    return out;
}

std::optional<CommaObj> initial_of_under_comma(const FinFunctor& j, const Name& b) {
    auto objs = under_comma(j, b);
    for (const auto& cand : objs) {
        bool ok = true;
        for (const auto& other : objs) {
            if (under_comma_hom(j, cand, other).size() != 1) {
                ok = false;
                break;
            }
        }
        if (ok) return cand;
    }
    return std::nullopt;
}

// Objects of n/b for n : A -> B, as pairs (a, β : n a -> b).
std::vector<CommaObj> over_comma(const FinFunctor& n, const Name& b) {
    std::vector<CommaObj> out;
    for (const auto& a : n.dom->objects)
        for (const auto& beta : n.cod->hom(n.on_ob(a), b)) out.push_back({a, beta});
    return out;
}

// Morphisms (a,β) -> (a',β') are u : a -> a' with β'∘n(u) = β.
std::vector<Name> over_comma_hom(const FinFunctor& n, const CommaObj& x, const CommaObj& y) {
    std::vector<Name> out;
    for (const auto& u : n.dom->hom(x.a, y.a))
        if (n.cod->compose(y.beta, n.on_mor(u)) == x.beta) out.push_back(u);
    return out;
}

std::optional<CommaObj> terminal_of_over_comma(const FinFunctor& n, const Name& b) {
    auto objs = over_comma(n, b);
    for (const auto& cand : objs) {
        bool ok = true;
        for (const auto& other : objs) {
            if (over_comma_hom(n, other, cand).size() != 1) {
                ok = false;
                break;
            }
        }
        if (ok) return cand;
    }
    return std::nullopt;
}

}   // namespace

std::optional<Adjunction> compute_left_adjoint(const FinFunctor& j) {
    const FinCat& A = *j.dom;
    const FinCat& B = *j.cod;
    // a left adjoint exists iff every b/j has an initial object
    std::map<Name, CommaObj> initials;
    for (const auto& b : B.objects) {
        auto init = initial_of_under_comma(j, b);
        if (!init) return std::nullopt;
        initials[b] = *init;
    }
    FinFunctor k;   // B -> A
    k.dom = j.cod;
    k.cod = j.dom;
    for (const auto& b : B.objects) k.ob[b] = initials.at(b).a;
    for (const auto& [g, info] : B.morphisms) {
        // k(γ) is the unique u with j(u)∘η_src = η_tgt∘γ
        const CommaObj& i0 = initials.at(info.src);
        const CommaObj i1{initials.at(info.tgt).a, B.compose(initials.at(info.tgt).beta, g)};
        auto us = under_comma_hom(j, i0, i1);
        if (us.size() != 1) return std::nullopt;
        k.mor[g] = us.front();
    }
    if (!validate_functor(k).empty()) return std::nullopt;

    Adjunction adj;
    adj.left = k;
    adj.right = j;
    adj.unit.dom = identity_functor(j.cod);
    adj.unit.cod = compose_functors(j, k);
    for (const auto& b : B.objects) adj.unit.components[b] = initials.at(b).beta;
    adj.counit.dom = compose_functors(k, j);
    adj.counit.cod = identity_functor(j.dom);
    for (const auto& a : A.objects) {
        const Name ja = j.on_ob(a);
        auto us = under_comma_hom(j, initials.at(ja), CommaObj{a, B.id_of(ja)});
        if (us.size() != 1) return std::nullopt;
        adj.counit.components[a] = us.front();
    }
    if (!validate_adjunction(adj).empty()) return std::nullopt;
    return adj;
}

std::optional<Adjunction> compute_right_adjoint(const FinFunctor& n) {
    const FinCat& A = *n.dom;
    const FinCat& B = *n.cod;
    // a right adjoint exists iff every n/b has a terminal object
    std::map<Name, CommaObj> terminals;
    for (const auto& b : B.objects) {
        auto term = terminal_of_over_comma(n, b);
        if (!term) return std::nullopt;
        terminals[b] = *term;
    }
    FinFunctor r;   // B -> A
    r.dom = n.cod;
    r.cod = n.dom;
    for (const auto& b : B.objects) r.ob[b] = terminals.at(b).a;
    for (const auto& [g, info] : B.morphisms) {
        // r(γ) is the unique u with ε_tgt∘n(u) = γ∘ε_src
        const CommaObj s0{terminals.at(info.src).a, B.compose(g, terminals.at(info.src).beta)};
        auto us = over_comma_hom(n, s0, terminals.at(info.tgt));
        if (us.size() != 1) return std::nullopt;
        r.mor[g] = us.front();
    }
    if (!validate_functor(r).empty()) return std::nullopt;

    Adjunction adj;
    adj.left = n;
    adj.right = r;
    adj.counit.dom = compose_functors(n, r);
    adj.counit.cod = identity_functor(n.cod);
    for (const auto& b : B.objects) adj.counit.components[b] = terminals.at(b).beta;
    adj.unit.dom = identity_functor(n.dom);
    adj.unit.cod = compose_functors(r, n);
    for (const auto& a : A.objects) {
        const Name na = n.on_ob(a);
        auto us = over_comma_hom(n, CommaObj{a, B.id_of(na)}, terminals.at(na));
        if (us.size() != 1) return std::nullopt;
        adj.unit.components[a] = us.front();
    }
    if (!validate_adjunction(adj).empty()) return std::nullopt;
    return adj;
}

std::optional<NatTransform> nat_iso_exists(const FinFunctor& f, const FinFunctor& g) {
    if (!same_cat(f.dom, g.dom) || !same_cat(f.cod, g.cod))
        throw std::invalid_argument("nat_iso_exists requires parallel functors");
    const FinCat& A = *f.dom;
    const FinCat& X = *f.cod;
    std::vector<Name> obs = A.objects;
    std::vector<std::vector<Name>> choices;
    for (const auto& a : obs) {
        std::vector<Name> invs;
        for (const auto& m : X.hom(f.on_ob(a), g.on_ob(a)))
            if (X.is_invertible(m)) invs.push_back(m);
        if (invs.empty()) return std::nullopt;
        choices.push_back(std::move(invs));
    }
    std::map<Name, Name> comp;
    std::function<std::optional<NatTransform>(std::size_t)> go =
        [&](std::size_t i) -> std::optional<NatTransform> {
        if (i == obs.size()) {
            NatTransform t;
            t.dom = f;
            t.cod = g;
            t.components = comp;
            if (is_natural(t)) return t;
            return std::nullopt;
        }
        for (const auto& c : choices[i]) {
            comp[obs[i]] = c;
            // prune: naturality for morphisms with both endpoints assigned
            bool ok = true;
            for (const auto& [m, info] : A.morphisms) {
                auto si = comp.find(info.src);
                auto ti = comp.find(info.tgt);
                if (si == comp.end() || ti == comp.end()) continue;
                if (X.compose(ti->second, f.on_mor(m)) != X.compose(g.on_mor(m), si->second)) {
                    ok = false;
                    break;
                }
            }
            if (ok) {
                if (auto r = go(i + 1)) return r;
            }
        }
        comp.erase(obs[i]);
        return std::nullopt;
    };
    return go(0);
}

// ---- functor categories ----

Name canonical_functor_name(const FinFunctor& f) {
    std::ostringstream os;
    os << "F{";
    bool first = true;
    for (const auto& [a, fa] : f.ob) {
        if (!first) os << ",";
        first = false;
        os << a << ">" << fa;
    }
    os << "|";
    first = true;
    for (const auto& [m, fm] : f.mor) {
        if (f.dom->is_id(m)) continue;
        if (!first) os << ",";
        first = false;
        os << m << ">" << fm;
    }
    os << "}";
    return os.str();
}

Name canonical_nat_name(const NatTransform& t) {
    std::ostringstream os;
    os << "N{" << canonical_functor_name(t.dom) << "=>" << canonical_functor_name(t.cod) << "|";
    bool first = true;
    for (const auto& [a, c] : t.components) {
        if (!first) os << ",";
        first = false;
        os << a << ">" << c;
    }
    os << "}";
    return os.str();
}

std::vector<FinFunctor> all_functors(const CatPtr& a, const CatPtr& x, std::size_t guard) {
    const FinCat& A = *a;
    const FinCat& X = *x;
    std::vector<FinFunctor> out;
    if (A.objects.empty()) {
        FinFunctor f;
        f.dom = a;
        f.cod = x;
        out.push_back(f);
        return out;
    }
    if (X.objects.empty()) return out;

    std::vector<Name> nonid;
    for (const auto& [m, info] : A.morphisms) {
        (void)info;
        if (!A.is_id(m)) nonid.push_back(m);
    }

    std::size_t steps = 0;
    std::map<Name, Name> obmap, mormap;
    std::function<void(std::size_t)> assign_mor;
    std::function<void(std::size_t)> assign_ob = [&](std::size_t i) {
        if (i == A.objects.size()) {
            assign_mor(0);
            return;
        }
        for (const auto& ox : X.objects) {
            obmap[A.objects[i]] = ox;
            assign_ob(i + 1);
        }
        obmap.erase(A.objects[i]);
    };
    assign_mor = [&](std::size_t i) {
        if (++steps > guard * 64) throw GuardExceeded("functor enumeration exceeded guard");
        if (i == nonid.size()) {
            FinFunctor f;
            f.dom = a;
            f.cod = x;
            f.ob = obmap;
            f.mor = mormap;
            for (const auto& o : A.objects) f.mor[A.id_of(o)] = X.id_of(obmap.at(o));
            if (validate_functor(f).empty()) {
                out.push_back(std::move(f));
                if (out.size() > guard) throw GuardExceeded("functor category exceeds guard");
            }
            return;
        }
        const Name& m = nonid[i];
        const auto& info = A.mor(m);
        for (const auto& c : X.hom(obmap.at(info.src), obmap.at(info.tgt))) {
            mormap[m] = c;
            // prune: any fully assigned composition must agree
            bool ok = true;
            for (const auto& [key, gf] : A.table) {
                const auto& [g, f2] = key;
                if (A.is_id(g) || A.is_id(f2)) continue;
                auto gi = mormap.find(g);
                auto fi = mormap.find(f2);
                if (gi == mormap.end() || fi == mormap.end()) continue;
                Name comp = X.compose(gi->second, fi->second);
                if (A.is_id(gf)) {
                    if (comp != X.id_of(obmap.at(A.mor(gf).src))) ok = false;
                } else {
                    auto ci = mormap.find(gf);
                    if (ci != mormap.end() && comp != ci->second) ok = false;
                }
                if (!ok) break;
            }
            if (ok) assign_mor(i + 1);
        }
        mormap.erase(m);
    };
    assign_ob(0);
    return out;
}

std::vector<NatTransform> all_transforms(const FinFunctor& f, const FinFunctor& g,
                                         std::size_t guard) {
    const FinCat& A = *f.dom;
    const FinCat& X = *f.cod;
    std::vector<NatTransform> out;
    std::map<Name, Name> comp;
    std::size_t steps = 0;
    std::function<void(std::size_t)> go = [&](std::size_t i) {
        if (++steps > guard * 64) throw GuardExceeded("transform enumeration exceeded guard");
        if (i == A.objects.size()) {
            NatTransform t;
            t.dom = f;
            t.cod = g;
            t.components = comp;
            if (is_natural(t)) out.push_back(std::move(t));
            return;
        }
        const Name& a = A.objects[i];
        for (const auto& c : X.hom(f.on_ob(a), g.on_ob(a))) {
            comp[a] = c;
            bool ok = true;
            for (const auto& [m, info] : A.morphisms) {
                auto si = comp.find(info.src);
                auto ti = comp.find(info.tgt);
                if (si == comp.end() || ti == comp.end()) continue;
                if (X.compose(ti->second, f.on_mor(m)) != X.compose(g.on_mor(m), si->second)) {
                    ok = false;
                    break;
                }
            }
            if (ok) go(i + 1);
        }
        comp.erase(a);
    };
    go(0);
    return out;
}

FunctorCategory functor_category(const CatPtr& a, const CatPtr& x, std::size_t guard) {
    FunctorCategory fc;
    auto functors = all_functors(a, x, guard);
    for (auto& f : functors) fc.obj_functors[canonical_functor_name(f)] = f;

    FinCatBuilder b;
    for (const auto& [n, f] : fc.obj_functors) {
        (void)f;
        b.add_object(n);
    }
    std::size_t morcount = 0;
    for (const auto& [nf, f] : fc.obj_functors) {
        for (const auto& [ng, g] : fc.obj_functors) {
            for (auto& t : all_transforms(f, g, guard)) {
                bool ident = (nf == ng);
                if (ident)
                    for (const auto& [o, c] : t.components)
                        if (!x->is_id(c)) {
                            ident = false;
                            break;
                        }
                Name tn = ident ? "id_" + nf : canonical_nat_name(t);
                if (!ident) b.add_morphism(tn, nf, ng);
                fc.mor_transforms[tn] = std::move(t);
                if (++morcount > guard)
                    throw GuardExceeded("functor category morphism count exceeds guard");
            }
        }
    }
    // composition is componentwise
    for (const auto& [tn, t] : fc.mor_transforms) {
        for (const auto& [sn, s] : fc.mor_transforms) {
            if (!(t.dom == s.cod)) continue;
            auto comp = vcompose(t, s);
            bool ident = (comp.dom == comp.cod);
            if (ident)
                for (const auto& [o, c] : comp.components)
                    if (!x->is_id(c)) {
                        ident = false;
                        break;
                    }
            Name cn = ident ? "id_" + canonical_functor_name(comp.dom) : canonical_nat_name(comp);
            b.set_compose(tn, sn, cn);
        }
    }
    fc.cat = b.build_ptr();
    return fc;
}

FunctorCategory inverting_subcategory(const CatPtr& a, const CatPtr& x, std::size_t guard) {
    FunctorCategory full = functor_category(a, x, guard);
    std::set<Name> keep;
    for (const auto& [n, f] : full.obj_functors) {
        bool inverts = true;
        for (const auto& [m, fm] : f.mor) {
            (void)m;
            if (!x->is_invertible(fm)) {
                inverts = false;
                break;
            }
        }
        if (inverts) keep.insert(n);
    }
    FunctorCategory sub;
    sub.cat = full_subcategory(full.cat, keep);
    for (const auto& n : keep) sub.obj_functors[n] = full.obj_functors.at(n);
    for (const auto& [tn, t] : full.mor_transforms) {
        if (keep.count(canonical_functor_name(t.dom)) && keep.count(canonical_functor_name(t.cod)))
            sub.mor_transforms[tn] = t;
    }
    return sub;
}

CatPtr full_subcategory(const CatPtr& c, const std::set<Name>& objects) {
    FinCat sub;
    for (const auto& x : c->objects)
        if (objects.count(x)) sub.objects.push_back(x);
    for (const auto& [m, info] : c->morphisms)
        if (objects.count(info.src) && objects.count(info.tgt)) sub.morphisms[m] = info;
    for (const auto& x : sub.objects) sub.identity[x] = c->identity.at(x);
    for (const auto& [key, gf] : c->table)
        if (sub.morphisms.count(key.first) && sub.morphisms.count(key.second)) sub.table[key] = gf;
    return make_cat(std::move(sub));
}

}   // namespace factcat
