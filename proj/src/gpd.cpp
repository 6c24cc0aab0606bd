#include "factcat/gpd.hpp"

#include <algorithm>
#include <cstdint>
#include <cstdlib>
#include <deque>
#include <functional>

namespace factcat::gpd {

namespace {

std::string render_word(const rewrite::Word& w) {
    std::string s;
    for (const auto& l : w.letters) {
        if (!s.empty()) s += "*";
        s += l;
    }
    return s;
}

}   // namespace

std::vector<std::string> validate_presentation(const PresentedCategory& p) {
    std::vector<std::string> errs;
    std::set<Name> objs(p.objects.begin(), p.objects.end());
    if (objs.size() != p.objects.size()) errs.push_back("duplicate objects");
    for (const auto& [g, info] : p.generators) {
        if (!objs.count(info.src) || !objs.count(info.tgt))
            errs.push_back("generator " + g + ": endpoint is not an object");
        if (g.rfind("id_", 0) == 0) errs.push_back("generator " + g + ": reserved identity name");
    }
    for (const auto& g : p.inverted)
        if (!p.generators.count(g)) errs.push_back("inverted " + g + " is not a generator");
    auto check_word = [&](const rewrite::Word& w, const char* side) {
        Name at = w.src;
        if (!objs.count(w.src) || !objs.count(w.tgt)) {
            errs.push_back(std::string("relation ") + side + ": endpoint is not an object");
            return;
        }
        for (const auto& l : w.letters) {
            auto it = p.generators.find(l);
            if (it == p.generators.end()) {
                errs.push_back(std::string("relation ") + side + ": unknown letter " + l);
                return;
            }
            if (it->second.src != at) {
                errs.push_back(std::string("relation ") + side + ": word is not composable at " + l);
                return;
            }
            at = it->second.tgt;
        }
        if (at != w.tgt) errs.push_back(std::string("relation ") + side + ": target mismatch");
    };
    for (const auto& [u, v] : p.relations) {
        check_word(u, "lhs");
        check_word(v, "rhs");
        if (u.src != v.src || u.tgt != v.tgt) errs.push_back("relation sides are not parallel");
    }
    return errs;
}

PresentedCategory localize(const CatPtr& c, const std::set<Name>& w) {
    PresentedCategory p;
    p.objects = c->objects;
    for (const auto& [m, info] : c->morphisms)
        if (!c->is_id(m)) p.generators.emplace(m, info);
    for (const auto& m : w) {
        if (!c->has_morphism(m)) throw std::invalid_argument("localize: unknown morphism " + m);
        if (!c->is_id(m)) p.inverted.insert(m);
    }
    for (const auto& [pair, h] : c->table) {
        const auto& [g, f] = pair;
        if (c->is_id(g) || c->is_id(f)) continue;   // identity rows are built in
        rewrite::Word lhs{c->src(f), c->tgt(g), {f, g}};
        rewrite::Word rhs{c->src(f), c->tgt(g), {}};
        if (!c->is_id(h)) rhs.letters = {h};
        p.relations.emplace_back(std::move(lhs), std::move(rhs));
    }
    return p;
}

PresentedCategory pi1(const CatPtr& a) {
    std::set<Name> all;
    for (const auto& [m, info] : a->morphisms) {
        (void)info;
        all.insert(m);
    }
    return localize(a, all);
}

// ---- finite reconstruction from a confluent rewriting system ----

namespace {

struct WordKey {
    Name src;
    std::vector<Name> letters;
    auto operator<=>(const WordKey&) const = default;
};

bool build_from_rewriting(const PresentedCategory& p, const rewrite::Alphabet& alphabet,
                          const std::vector<rewrite::Rule>& rules,
                          const std::map<Name, Name>& inverse_letter, std::size_t cap,
                          NormalizationResult& res) {
    auto nf = rewrite::normal_forms(alphabet, rules, p.objects, cap);
    if (nf.status == rewrite::NormalFormLanguage::Status::Infinite) {
        res.status = NormalizationResult::Status::InfiniteDetected;
        res.certificate = InfiniteCertificate{rules, nf.cycle};
        return true;
    }
    if (nf.status == rewrite::NormalFormLanguage::Status::TooMany) {
        res.status = NormalizationResult::Status::Unknown;
        res.note = "normal-form count exceeds the bound";
        return true;
    }

    std::sort(nf.words.begin(), nf.words.end(), [](const rewrite::Word& a, const rewrite::Word& b) {
        if (a.src != b.src) return a.src < b.src;
        return rewrite::shortlex_cmp(a, b) < 0;
    });

    FinCatBuilder builder;
    for (const auto& o : p.objects) builder.add_object(o);
    std::map<WordKey, Name> name_of;
    std::set<Name> used;
    for (const auto& o : p.objects) used.insert("id_" + o);
    for (const auto& w : nf.words) {
        if (w.letters.empty()) {
            name_of[{w.src, {}}] = "id_" + w.src;
            continue;
        }
        Name nm = render_word(w);
        int k = 2;
        while (used.count(nm)) nm = render_word(w) + "#" + std::to_string(k++);
        used.insert(nm);
        name_of[{w.src, w.letters}] = nm;
        builder.add_morphism(nm, w.src, w.tgt);
        res.words.emplace(nm, w);
    }
    for (const auto& f : nf.words) {
        if (f.letters.empty()) continue;
        for (const auto& g : nf.words) {
            if (g.letters.empty() || f.tgt != g.src) continue;
            auto gf = rewrite::reduce(rewrite::concat(f, g), rules);
            builder.set_compose(name_of.at({g.src, g.letters}), name_of.at({f.src, f.letters}),
                                name_of.at({gf.src, gf.letters}));
        }
    }
    res.category = builder.build_ptr();
    for (const auto& [g, info] : p.generators) {
        rewrite::Word w{info.src, info.tgt, {g}};
        auto r = rewrite::reduce(w, rules);
        res.gen_images[g] = name_of.at({r.src, r.letters});
    }
    res.inverse_letter = inverse_letter;
    res.status = NormalizationResult::Status::Finite;
    return true;
}

// ---- groupoid reconstruction via coset enumeration ----

struct TCComponent {
    std::vector<Name> objs;
    std::vector<Name> gens;                      // sorted; 1-based indexing
    std::map<Name, std::size_t> gidx;
    std::map<Name, std::vector<int>> tree_path;  // root -> object, signed indices
    std::set<Name> tree_edges;
    coset::ToddCoxeter tc;

    TCComponent(const PresentedCategory& p, std::vector<Name> objects)
        : objs(std::move(objects)), tc(coset::GroupPresentation{}) {
        std::set<Name> here(objs.begin(), objs.end());
        for (const auto& [g, info] : p.generators)
            if (here.count(info.src)) gens.push_back(g);
        std::sort(gens.begin(), gens.end());
        for (std::size_t i = 0; i < gens.size(); ++i) gidx[gens[i]] = i + 1;

        // spanning tree by breadth-first search from the least object
        std::deque<Name> q{objs.front()};
        tree_path[objs.front()] = {};
        while (!q.empty()) {
            Name o = q.front();
            q.pop_front();
            for (const auto& g : gens) {
                const auto& info = p.generators.at(g);
                if (info.src == o && !tree_path.count(info.tgt)) {
                    auto path = tree_path.at(o);
                    path.push_back(static_cast<int>(gidx.at(g)));
                    tree_path[info.tgt] = std::move(path);
                    tree_edges.insert(g);
                    q.push_back(info.tgt);
                } else if (info.tgt == o && !tree_path.count(info.src)) {
                    auto path = tree_path.at(o);
                    path.push_back(-static_cast<int>(gidx.at(g)));
                    tree_path[info.src] = std::move(path);
                    tree_edges.insert(g);
                    q.push_back(info.src);
                }
            }
        }

        coset::GroupPresentation gp;
        gp.ngens = gens.size();
        for (const auto& g : tree_edges) gp.relators.push_back({static_cast<int>(gidx.at(g))});
        for (const auto& [u, v] : p.relations) {
            if (!here.count(u.src)) continue;
            std::vector<int> rel;
            for (const auto& l : u.letters) rel.push_back(static_cast<int>(gidx.at(l)));
            for (auto it = v.letters.rbegin(); it != v.letters.rend(); ++it)
                rel.push_back(-static_cast<int>(gidx.at(*it)));
            gp.relators.push_back(std::move(rel));
        }
        tc = coset::ToddCoxeter(std::move(gp));
    }

    std::size_t eval(const std::vector<int>& word) const {
        std::size_t c = 0;
        for (int s : word) c = tc.apply(c, s);
        return c;
    }
};

Name tc_mor_name(const Name& a, std::size_t e, const Name& b) {
    return "(" + a + "|g" + std::to_string(e) + "|" + b + ")";
}

bool build_from_cosets(const PresentedCategory& p, std::vector<TCComponent>& comps,
                       const std::map<Name, Name>& inverse_letter, std::size_t cap,
                       NormalizationResult& res) {
    std::size_t total = 0;
    for (const auto& c : comps) total += c.objs.size() * c.objs.size() * c.tc.order();
    if (total > cap) {
        res.status = NormalizationResult::Status::Unknown;
        res.note = "groupoid size exceeds the bound";
        return true;
    }

    std::map<Name, Name> letter_of;   // +g and -g as letters
    for (const auto& [il, g] : inverse_letter) letter_of["-" + g] = il;

    FinCatBuilder builder;
    for (const auto& o : p.objects) builder.add_object(o);
    auto name_of = [&](const Name& a, std::size_t e, const Name& b) -> Name {
        if (a == b && e == 0) return "id_" + a;
        return tc_mor_name(a, e, b);
    };
    for (const auto& c : comps) {
        std::size_t n = c.tc.order();
        for (const auto& a : c.objs)
            for (const auto& b : c.objs)
                for (std::size_t e = 0; e < n; ++e) {
                    if (a == b && e == 0) continue;
                    Name nm = tc_mor_name(a, e, b);
                    builder.add_morphism(nm, a, b);
                    // representing path: back along a's tree branch, the
                    // element's word at the root, then out to b
                    rewrite::Word w{a, b, {}};
                    const auto& ta = c.tree_path.at(a);
                    for (auto it = ta.rbegin(); it != ta.rend(); ++it) {
                        const Name& g = c.gens[static_cast<std::size_t>(std::abs(*it)) - 1];
                        w.letters.push_back(*it > 0 ? letter_of.at("-" + g) : g);
                    }
                    for (int s : c.tc.rep(e)) {
                        const Name& g = c.gens[static_cast<std::size_t>(std::abs(s)) - 1];
                        w.letters.push_back(s > 0 ? g : letter_of.at("-" + g));
                    }
                    for (int s : c.tree_path.at(b)) {
                        const Name& g = c.gens[static_cast<std::size_t>(std::abs(s)) - 1];
                        w.letters.push_back(s > 0 ? g : letter_of.at("-" + g));
                    }
                    res.words.emplace(nm, std::move(w));
                }
        // composition: (a,e1,b) then (b,e2,c) is (a, e1·e2, c)
        for (const auto& a : c.objs)
            for (const auto& b : c.objs)
                for (const auto& d : c.objs)
                    for (std::size_t e1 = 0; e1 < n; ++e1)
                        for (std::size_t e2 = 0; e2 < n; ++e2) {
                            if ((a == b && e1 == 0) || (b == d && e2 == 0)) continue;
                            builder.set_compose(name_of(b, e2, d), name_of(a, e1, b),
                                                name_of(a, c.tc.mul(e1, e2), d));
                        }
    }
    res.category = builder.build_ptr();
    for (const auto& c : comps)
        for (const auto& g : c.gens) {
            const auto& info = p.generators.at(g);
            std::vector<int> loop = c.tree_path.at(info.src);
            loop.push_back(static_cast<int>(c.gidx.at(g)));
            for (auto it = c.tree_path.at(info.tgt).rbegin(); it != c.tree_path.at(info.tgt).rend();
                 ++it)
                loop.push_back(-*it);
            res.gen_images[g] = name_of(info.src, c.eval(loop), info.tgt);
        }
    res.inverse_letter = inverse_letter;
    res.status = NormalizationResult::Status::Finite;
    return true;
}

}   // namespace

NormalizationResult normalize(const PresentedCategory& p, std::size_t bound) {
    auto errs = validate_presentation(p);
    if (!errs.empty()) throw std::invalid_argument("normalize: " + errs.front());

    NormalizationResult res;

    rewrite::Alphabet alphabet(p.generators.begin(), p.generators.end());
    std::map<Name, Name> inverse_letter;   // formal inverse -> generator
    std::vector<std::pair<rewrite::Word, rewrite::Word>> equations = p.relations;
    for (const auto& g : p.inverted) {
        Name il = "~" + g;
        while (alphabet.count(il)) il = "~" + il;
        const auto& info = p.generators.at(g);
        alphabet[il] = MorInfo{info.tgt, info.src};
        inverse_letter[il] = g;
        equations.push_back({rewrite::Word{info.src, info.src, {g, il}},
                             rewrite::Word{info.src, info.src, {}}});
        equations.push_back({rewrite::Word{info.tgt, info.tgt, {il, g}},
                             rewrite::Word{info.tgt, info.tgt, {}}});
    }

    rewrite::KnuthBendix kb(alphabet, std::move(equations));

    // coset enumeration only decides full localizations (all generators
    // inverted), where the quotient is a groupoid
    bool tc_applicable = p.inverted.size() == p.generators.size();
    std::vector<TCComponent> comps;
    if (tc_applicable) {
        std::map<Name, std::size_t> comp_of;
        std::vector<std::vector<Name>> groups;
        for (const auto& o : p.objects)
            if (!comp_of.count(o)) {
                std::vector<Name> grp{o};
                comp_of[o] = groups.size();
                std::deque<Name> q{o};
                while (!q.empty()) {
                    Name x = q.front();
                    q.pop_front();
                    for (const auto& [g, info] : p.generators) {
                        (void)g;
                        Name other;
                        if (info.src == x)
                            other = info.tgt;
                        else if (info.tgt == x)
                            other = info.src;
                        else
                            continue;
                        if (!comp_of.count(other)) {
                            comp_of[other] = groups.size();
                            grp.push_back(other);
                            q.push_back(other);
                        }
                    }
                }
                std::sort(grp.begin(), grp.end());
                groups.push_back(std::move(grp));
            }
        for (auto& g : groups) comps.emplace_back(p, std::move(g));
    }

    const std::size_t cap = std::min<std::size_t>(bound, 1000);
    std::size_t budget = bound;
    while (budget > 0) {
        std::size_t chunk = std::min<std::size_t>(64, budget);
        std::size_t spent = chunk;
        bool kb_done = kb.run(chunk);
        budget -= spent - chunk;
        res.effort.rules_added = kb.rules_added();
        if (kb_done) {
            build_from_rewriting(p, alphabet, kb.rules(), inverse_letter, cap, res);
            return res;
        }
        if (tc_applicable && budget > 0) {
            chunk = std::min<std::size_t>(64, budget);
            spent = chunk;
            bool all_closed = true;
            for (auto& c : comps) {
                if (!c.tc.run(chunk)) all_closed = false;
                if (chunk == 0) break;
            }
            budget -= spent - chunk;
            res.effort.cosets_defined = 0;
            for (const auto& c : comps) res.effort.cosets_defined += c.tc.cosets_defined();
            if (all_closed) {
                build_from_cosets(p, comps, inverse_letter, cap, res);
                return res;
            }
        }
    }
    res.status = NormalizationResult::Status::Unknown;
    res.note = "normalization budget exhausted";
    return res;
}

FinFunctor quotient_functor(const CatPtr& c, const NormalizationResult& n) {
    if (n.status != NormalizationResult::Status::Finite)
        throw std::invalid_argument("quotient_functor: normalization is not Finite");
    FinFunctor q;
    q.dom = c;
    q.cod = n.category;
    for (const auto& o : c->objects) q.ob[o] = o;
    for (const auto& [m, info] : c->morphisms) {
        (void)info;
        if (c->is_id(m))
            q.mor[m] = n.category->id_of(c->src(m));
        else
            q.mor[m] = n.gen_images.at(m);
    }
    return q;
}

FinFunctor induced_functor(const NormalizationResult& n, const CatPtr& d,
                           const std::map<Name, Name>& ob, const std::map<Name, Name>& gen_mor) {
    if (n.status != NormalizationResult::Status::Finite)
        throw std::invalid_argument("induced_functor: normalization is not Finite");
    FinFunctor f;
    f.dom = n.category;
    f.cod = d;
    f.ob = ob;
    auto letter_image = [&](const Name& l) -> Name {
        auto it = n.inverse_letter.find(l);
        if (it == n.inverse_letter.end()) return gen_mor.at(l);
        auto inv = d->inverse(gen_mor.at(it->second));
        if (!inv)
            throw std::invalid_argument("induced_functor: image of inverted generator " +
                                        it->second + " is not invertible");
        return *inv;
    };
    for (const auto& [m, info] : n.category->morphisms) {
        (void)info;
        if (n.category->is_id(m)) {
            f.mor[m] = d->id_of(ob.at(n.category->src(m)));
            continue;
        }
        const auto& w = n.words.at(m);
        Name img = d->id_of(ob.at(w.src));
        for (const auto& l : w.letters) img = d->compose(letter_image(l), img);
        f.mor[m] = img;
    }
    return f;
}

Pi1Triviality is_trivial_pi1(const CatPtr& a, std::size_t bound) {
    Pi1Triviality out;
    if (a->objects.empty()) {
        out.value = TriBool::No;
        out.reason = "empty category";
        return out;
    }
    auto comps = a->components();
    if (comps.size() > 1) {
        out.value = TriBool::No;
        out.reason = "disconnected: " + std::to_string(comps.size()) + " components";
        return out;
    }
    auto n = normalize(pi1(a), bound);
    out.effort = n.effort;
    switch (n.status) {
        case NormalizationResult::Status::InfiniteDetected:
            out.value = TriBool::No;
            out.reason = "infinite fundamental groupoid certified";
            return out;
        case NormalizationResult::Status::Unknown:
            out.value = TriBool::Unknown;
            out.reason = n.note;
            return out;
        case NormalizationResult::Status::Finite:
            break;
    }
    for (const auto& o : n.category->objects) {
        auto endos = n.category->hom(o, o);
        if (endos.size() > 1) {
            out.value = TriBool::No;
            out.reason = "vertex group of order " + std::to_string(endos.size()) + " at " + o;
            return out;
        }
    }
    out.value = TriBool::Yes;
    out.reason = "fundamental groupoid is contractible";
    return out;
}

namespace {

using MultTable = std::vector<std::vector<std::size_t>>;

// vertex group multiplication table at the least object of a component;
// element 0 is the identity
MultTable vertex_table(const CatPtr& g, const std::vector<Name>& comp) {
    Name base = *std::min_element(comp.begin(), comp.end());
    auto elems = g->hom(base, base);
    auto idit = std::find(elems.begin(), elems.end(), g->id_of(base));
    std::iter_swap(elems.begin(), idit);
    std::map<Name, std::size_t> idx;
    for (std::size_t i = 0; i < elems.size(); ++i) idx[elems[i]] = i;
    MultTable t(elems.size(), std::vector<std::size_t>(elems.size()));
    for (std::size_t i = 0; i < elems.size(); ++i)
        for (std::size_t j = 0; j < elems.size(); ++j)
            t[i][j] = idx.at(g->compose(elems[i], elems[j]));
    return t;
}

bool group_iso(const MultTable& a, const MultTable& b) {
    const std::size_t n = a.size();
    if (b.size() != n) return false;
    std::vector<std::size_t> p(n, SIZE_MAX);
    std::vector<bool> used(n, false);
    p[0] = 0;
    used[0] = true;
    std::function<bool(std::size_t)> go = [&](std::size_t i) -> bool {
        if (i == n) return true;
        for (std::size_t v = 1; v < n; ++v) {
            if (used[v]) continue;
            p[i] = v;
            used[v] = true;
            bool ok = true;
            for (std::size_t j = 0; j <= i && ok; ++j) {
                if (p[a[i][j]] != SIZE_MAX && p[a[i][j]] != b[v][p[j]]) ok = false;
                if (p[a[j][i]] != SIZE_MAX && p[a[j][i]] != b[p[j]][v]) ok = false;
            }
            // full check once every element is placed
            if (ok && i == n - 1)
                for (std::size_t x = 0; x < n && ok; ++x)
                    for (std::size_t y = 0; y < n && ok; ++y) ok = p[a[x][y]] == b[p[x]][p[y]];
            if (ok && go(i + 1)) return true;
            used[v] = false;
            p[i] = SIZE_MAX;
        }
        return false;
    };
    return n == 1 || go(1);
}

}   // namespace

bool groupoid_equiv(const CatPtr& g, const CatPtr& h) {
    if (!g->is_groupoid()) throw NotAGroupoid("groupoid_equiv: first argument");
    if (!h->is_groupoid()) throw NotAGroupoid("groupoid_equiv: second argument");
    auto gc = g->components();
    auto hc = h->components();
    if (gc.size() != hc.size()) return false;
    std::vector<MultTable> gt, ht;
    gt.reserve(gc.size());
    ht.reserve(hc.size());
    for (const auto& c : gc) gt.push_back(vertex_table(g, c));
    for (const auto& c : hc) ht.push_back(vertex_table(h, c));
    std::vector<bool> matched(ht.size(), false);
    for (const auto& t : gt) {
        bool found = false;
        for (std::size_t j = 0; j < ht.size() && !found; ++j) {
            if (matched[j]) continue;
            if (group_iso(t, ht[j])) {
                matched[j] = true;
                found = true;
            }
        }
        if (!found) return false;
    }
    return true;
}

}   // namespace factcat::gpd
