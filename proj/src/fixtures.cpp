#include "factcat/fixtures.hpp"

namespace factcat::fixtures {

CatPtr empty_cat() {
    static CatPtr c = FinCatBuilder{}.build_ptr();
    return c;
}

CatPtr terminal() {
    static CatPtr c = FinCatBuilder{}.add_object("*").build_ptr();
    return c;
}

CatPtr discrete2() {
    static CatPtr c = FinCatBuilder{}.add_object("0").add_object("1").build_ptr();
    return c;
}

CatPtr walking_arrow() {
    static CatPtr c = FinCatBuilder{}
                          .add_object("0")
                          .add_object("1")
                          .add_morphism("a", "0", "1")
                          .build_ptr();
    return c;
}

CatPtr walking_iso() {
    static CatPtr c = FinCatBuilder{}
                          .add_object("x")
                          .add_object("y")
                          .add_morphism("u", "x", "y")
                          .add_morphism("v", "y", "x")
                          .set_compose("v", "u", "id_x")
                          .set_compose("u", "v", "id_y")
                          .build_ptr();
    return c;
}

CatPtr bc2() {
    static CatPtr c = FinCatBuilder{}
                          .add_object("*")
                          .add_morphism("g", "*", "*")
                          .set_compose("g", "g", "id_*")
                          .build_ptr();
    return c;
}

CatPtr bc3() {
    static CatPtr c = FinCatBuilder{}
                          .add_object("*")
                          .add_morphism("g", "*", "*")
                          .add_morphism("h", "*", "*")   // h = g²
                          .set_compose("g", "g", "h")
                          .set_compose("g", "h", "id_*")
                          .set_compose("h", "g", "id_*")
                          .set_compose("h", "h", "g")
                          .build_ptr();
    return c;
}

CatPtr pseudocircle() {
    static CatPtr c = FinCatBuilder{}
                          .add_object("a")
                          .add_object("b")
                          .add_object("c")
                          .add_object("d")
                          .add_morphism("ac", "a", "c")
                          .add_morphism("ad", "a", "d")
                          .add_morphism("bc", "b", "c")
                          .add_morphism("bd", "b", "d")
                          .build_ptr();
    return c;
}

CatPtr chain3() {
    static CatPtr c = FinCatBuilder{}
                          .add_object("0")
                          .add_object("1")
                          .add_object("2")
                          .add_morphism("f01", "0", "1")
                          .add_morphism("f12", "1", "2")
                          .add_morphism("f02", "0", "2")
                          .set_compose("f12", "f01", "f02")
                          .build_ptr();
    return c;
}

CatPtr parallel_pair() {
    static CatPtr c = FinCatBuilder{}
                          .add_object("0")
                          .add_object("1")
                          .add_morphism("s", "0", "1")
                          .add_morphism("t", "0", "1")
                          .build_ptr();
    return c;
}

ProductResult product(const CatPtr& a, const CatPtr& b) {
    auto pair = [](const Name& x, const Name& y) { return "(" + x + "," + y + ")"; };
    FinCat p;
    FinCatBuilder bld;
    for (const auto& x : a->objects)
        for (const auto& y : b->objects) bld.add_object(pair(x, y));
    auto morname = [&](const Name& f, const Name& g) -> Name {
        if (a->is_id(f) && b->is_id(g)) return "id_" + pair(a->src(f), b->src(g));
        return pair(f, g);
    };
    for (const auto& [f, fi] : a->morphisms)
        for (const auto& [g, gi] : b->morphisms) {
            if (a->is_id(f) && b->is_id(g)) continue;
            bld.add_morphism(pair(f, g), pair(fi.src, gi.src), pair(fi.tgt, gi.tgt));
        }
    for (const auto& [f2, f2i] : a->morphisms)
        for (const auto& [f1, f1i] : a->morphisms) {
            if (f2i.src != f1i.tgt) continue;
            for (const auto& [g2, g2i] : b->morphisms)
                for (const auto& [g1, g1i] : b->morphisms) {
                    if (g2i.src != g1i.tgt) continue;
                    bld.set_compose(morname(f2, g2), morname(f1, g1),
                                    morname(a->compose(f2, f1), b->compose(g2, g1)));
                }
        }
    ProductResult out;
    out.cat = bld.build_ptr();
    out.proj1.dom = out.cat;
    out.proj1.cod = a;
    out.proj2.dom = out.cat;
    out.proj2.cod = b;
    for (const auto& x : a->objects)
        for (const auto& y : b->objects) {
            out.proj1.ob[pair(x, y)] = x;
            out.proj2.ob[pair(x, y)] = y;
        }
    for (const auto& [f, fi] : a->morphisms)
        for (const auto& [g, gi] : b->morphisms) {
            (void)fi;
            (void)gi;
            out.proj1.mor[morname(f, g)] = f;
            out.proj2.mor[morname(f, g)] = g;
        }
    return out;
}

}   // namespace factcat::fixtures
