#include "doctest.h"

#include "factcat/fincat.hpp"
#include "factcat/fixtures.hpp"

using namespace factcat;
namespace fx = factcat::fixtures;

TEST_CASE("validate_category accepts the standard fixtures") {
    for (const auto& c : {fx::empty_cat(), fx::terminal(), fx::discrete2(), fx::walking_arrow(),
                          fx::walking_iso(), fx::bc2(), fx::bc3(), fx::pseudocircle(), fx::chain3(),
                          fx::parallel_pair()}) {
        CHECK(validate_category(*c).empty());
    }
}

TEST_CASE("validate_category reports a broken unit law") {
    FinCat bad = *fx::walking_arrow();
    bad.table[{"a", "id_0"}] = "id_1";   // redirect a∘id_0
    auto errs = validate_category(bad);
    REQUIRE(!errs.empty());
    bool found = false;
    for (const auto& e : errs)
        if (e.find("a") != std::string::npos && e.find("id_0") != std::string::npos) found = true;
    CHECK(found);
}

TEST_CASE("validate_functor") {
    auto a2 = fx::walking_arrow();
    CHECK(validate_functor(identity_functor(a2)).empty());
    CHECK(validate_functor(constant_functor(a2, fx::terminal(), "*")).empty());

    FinFunctor bad = identity_functor(a2);
    bad.mor["a"] = "id_0";   // tgt mismatch
    auto errs = validate_functor(bad);
    REQUIRE(!errs.empty());
    CHECK(errs.front().find("src/tgt") != std::string::npos);
}

TEST_CASE("is_equivalence") {
    auto a2 = fx::walking_arrow();
    auto bc2 = fx::bc2();
    CHECK(is_equivalence(identity_functor(bc2)));
    // A2 -> 1 is not full after transport: hom(1,0) is empty upstream
    CHECK_FALSE(is_equivalence(constant_functor(a2, fx::terminal(), "*")));
    // one object into the indiscrete two-object groupoid
    auto iso = fx::walking_iso();
    FinFunctor incl = constant_functor(fx::terminal(), iso, "x");
    CHECK(is_equivalence(incl));
}

TEST_CASE("compute_left_adjoint") {
    auto a2 = fx::walking_arrow();
    auto one = fx::terminal();

    auto idadj = compute_left_adjoint(identity_functor(a2));
    REQUIRE(idadj.has_value());
    CHECK(validate_adjunction(*idadj).empty());

    // 1 -> A2 picking 1 has left adjoint the collapse A2 -> 1
    FinFunctor j1 = constant_functor(one, a2, "1");
    auto adj = compute_left_adjoint(j1);
    REQUIRE(adj.has_value());
    CHECK(adj->left.ob.at("0") == "*");
    CHECK(validate_adjunction(*adj).empty());

    // 1 -> A2 picking 0: 1/j is empty
    FinFunctor j0 = constant_functor(one, a2, "0");
    CHECK_FALSE(compute_left_adjoint(j0).has_value());
}

TEST_CASE("compute_right_adjoint") {
    auto a2 = fx::walking_arrow();
    auto one = fx::terminal();

    auto idadj = compute_right_adjoint(identity_functor(a2));
    REQUIRE(idadj.has_value());

    // collapse A2 -> 1: right adjoint picks the terminal object 1
    FinFunctor bang = constant_functor(a2, one, "*");
    auto adj = compute_right_adjoint(bang);
    REQUIRE(adj.has_value());
    CHECK(adj->right.ob.at("*") == "1");
    CHECK(validate_adjunction(*adj).empty());

    // inclusion of discrete 2 into A2: no right adjoint
    FinFunctor incl;
    incl.dom = fx::discrete2();
    incl.cod = a2;
    incl.ob = {{"0", "0"}, {"1", "1"}};
    incl.mor = {{"id_0", "id_0"}, {"id_1", "id_1"}};
    REQUIRE(validate_functor(incl).empty());
    CHECK_FALSE(compute_right_adjoint(incl).has_value());
}

TEST_CASE("left adjoint implies nonempty connected commas") {
    // property: compute_left_adjoint(j) != None  =>  every b/j nonempty
    auto a2 = fx::walking_arrow();
    auto one = fx::terminal();
    std::vector<FinFunctor> js = {identity_functor(a2), constant_functor(one, a2, "1"),
                                  constant_functor(one, a2, "0"),
                                  constant_functor(a2, one, "*")};
    for (const auto& j : js) {
        auto adj = compute_left_adjoint(j);
        if (!adj) continue;
        for (const auto& b : j.cod->objects) {
            bool nonempty = false;
            for (const auto& a : j.dom->objects)
                if (!j.cod->hom(b, j.on_ob(a)).empty()) nonempty = true;
            CHECK(nonempty);
        }
    }
}

TEST_CASE("functor_category sizes") {
    auto one = fx::terminal();
    auto a2 = fx::walking_arrow();
    auto bc2 = fx::bc2();

    // [1, X] ≅ X
    auto fc1 = functor_category(one, a2);
    CHECK(fc1.cat->objects.size() == 2);
    CHECK(fc1.cat->morphisms.size() == 3);

    // [A2, A2] has 3 objects: const0, const1, id
    auto fc2 = functor_category(a2, a2);
    CHECK(fc2.cat->objects.size() == 3);

    // [A2, BC2]: a functor from A2 is a choice of morphism of BC2
    auto fc3 = functor_category(a2, bc2);
    CHECK(fc3.cat->objects.size() == 2);
}

TEST_CASE("functor_category(1, X) isomorphic to X") {
    for (const auto& x : {fx::walking_arrow(), fx::bc2(), fx::walking_iso()}) {
        auto fc = functor_category(fx::terminal(), x);
        CHECK(fc.cat->objects.size() == x->objects.size());
        CHECK(fc.cat->morphisms.size() == x->morphisms.size());
        // hom-set sizes transport along evaluation
        for (const auto& [nf, f] : fc.obj_functors)
            for (const auto& [ng, g] : fc.obj_functors)
                CHECK(fc.cat->hom(nf, ng).size() ==
                      x->hom(f.on_ob("*"), g.on_ob("*")).size());
    }
}

TEST_CASE("inverting_subcategory") {
    auto a2 = fx::walking_arrow();
    auto bc2 = fx::bc2();
    // [A2, BC2]_≅ is all of [A2, BC2]
    CHECK(inverting_subcategory(a2, bc2).cat->objects.size() == 2);
    // [A2, A2]_≅ drops the identity functor
    CHECK(inverting_subcategory(a2, a2).cat->objects.size() == 2);
    // [1, X]_≅ ≅ X
    CHECK(inverting_subcategory(fx::terminal(), a2).cat->objects.size() == 2);
}

TEST_CASE("functor_category guard") {
    auto p4 = fx::pseudocircle();
    CHECK_THROWS_AS(functor_category(p4, p4, 2), GuardExceeded);
}

TEST_CASE("nat_iso_exists") {
    auto bc2 = fx::bc2();
    auto a2 = fx::walking_arrow();
    auto id = identity_functor(bc2);
    auto found = nat_iso_exists(id, id);
    REQUIRE(found.has_value());
    CHECK(is_iso_nat(*found));

    // const0 vs id on A2: component at 1 would need an inverse of a
    CHECK_FALSE(nat_iso_exists(constant_functor(a2, a2, "0"), identity_functor(a2)).has_value());

    // two points of the indiscrete groupoid are connected by a unique iso
    auto iso = fx::walking_iso();
    auto fx1 = constant_functor(fx::terminal(), iso, "x");
    auto fy = constant_functor(fx::terminal(), iso, "y");
    auto t = nat_iso_exists(fx1, fy);
    REQUIRE(t.has_value());
    CHECK(t->at("*") == "u");
}

TEST_CASE("adjunction triangle composites are identities") {
    auto a2 = fx::walking_arrow();
    FinFunctor j1 = constant_functor(fx::terminal(), a2, "1");
    auto adj = compute_left_adjoint(j1);
    REQUIRE(adj.has_value());
    auto lt = vcompose(whisker_right(adj->counit, adj->left),
                       whisker_left(adj->left, adj->unit));
    auto rt = vcompose(whisker_left(adj->right, adj->counit),
                       whisker_right(adj->unit, adj->right));
    for (const auto& [x, c] : lt.components) CHECK(lt.dom.cod->is_id(c));
    for (const auto& [x, c] : rt.components) CHECK(rt.dom.cod->is_id(c));
}
