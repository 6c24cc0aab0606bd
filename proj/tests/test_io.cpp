#include "doctest.h"

#include "factcat/constructions.hpp"
#include "factcat/fixtures.hpp"
#include "factcat/io.hpp"

#include <cstdio>
#include <fstream>

using namespace factcat;
namespace fx = factcat::fixtures;

TEST_CASE("category round trip preserves the category exactly") {
    for (const auto& c : {fx::terminal(), fx::walking_arrow(), fx::walking_iso(), fx::bc2(),
                          fx::bc3(), fx::pseudocircle(), fx::chain3(), fx::parallel_pair()}) {
        auto j = io::category_to_json(*c);
        auto back = io::category_from_json(j);
        CHECK(*back == *c);
        // canonical text is a fixed point of parse∘dump
        auto text = io::canonical_dump(j);
        CHECK(io::canonical_dump(io::json::parse(text)) == text);
    }
}

TEST_CASE("the empty category survives a round trip") {
    auto j = io::category_to_json(*fx::empty_cat());
    CHECK(*io::category_from_json(j) == *fx::empty_cat());
}

TEST_CASE("functor round trip with embedded categories") {
    auto f = constant_functor(fx::walking_arrow(), fx::bc2(), "*");
    auto j = io::functor_to_json(f);
    auto back = io::functor_from_json(j);
    CHECK(back.ob == f.ob);
    CHECK(back.mor == f.mor);
    CHECK(*back.dom == *f.dom);
    CHECK(*back.cod == *f.cod);
}

TEST_CASE("functor files may link their categories by path") {
    auto dir = std::filesystem::temp_directory_path() / "factcat_io_test";
    std::filesystem::create_directories(dir);
    io::save_json(dir / "a2.json", io::category_to_json(*fx::walking_arrow()));
    io::save_json(dir / "one.json", io::category_to_json(*fx::terminal()));
    auto f = constant_functor(fx::walking_arrow(), fx::terminal(), "*");
    auto j = io::functor_to_json(f);
    j["dom"] = {{"path", "a2.json"}};
    j["cod"] = {{"path", "one.json"}};
    io::save_json(dir / "f.json", j);
    auto back = io::functor_from_json(io::load_json(dir / "f.json"), dir);
    CHECK(back.ob == f.ob);
    CHECK(*back.dom == *fx::walking_arrow());
    std::filesystem::remove_all(dir);
}

TEST_CASE("pseudofunctor round trip keeps coherence cells") {
    PseudofunctorData z4;   // Z/4 cocycle over the one-object Z/2
    z4.base = fx::bc2();
    z4.value["*"] = fx::bc2();
    for (const auto& [m, info] : z4.base->morphisms) {
        (void)info;
        z4.action[m] = identity_functor(fx::bc2());
    }
    NatTransform gamma;
    gamma.dom = compose_functors(z4.action.at("g"), z4.action.at("g"));
    gamma.cod = z4.action.at("id_*");
    gamma.components["*"] = "g";
    z4.comp[{"g", "g"}] = gamma;

    auto j = io::pseudofunctor_to_json(z4);
    auto back = io::pseudofunctor_from_json(j);
    CHECK(*back.base == *z4.base);
    CHECK(*back.value.at("*") == *z4.value.at("*"));
    CHECK(back.act("g") == z4.act("g"));
    CHECK(back.comp_at("g", "g", "*") == "g");
    CHECK(groth(back).total->morphisms.size() == groth(z4).total->morphisms.size());
}

TEST_CASE("polynomial round trip revalidates the witness") {
    auto f = constant_functor(fx::bc2(), fx::terminal(), "*");
    auto p = poly::polynomial_of(f);
    auto j = io::polynomial_to_json(p);
    auto back = io::polynomial_from_json(j);
    CHECK(poly::validate_polynomial(back).empty());
    CHECK(back.left_leg.ob == p.left_leg.ob);
    CHECK(back.right_leg.mor == p.right_leg.mor);
    CHECK(nat_iso_exists(poly::eval_polynomial(back), f).has_value());
}

TEST_CASE("dot export lists objects and marks invertible morphisms") {
    auto dot = io::to_dot(*fx::walking_iso(), "I");
    CHECK(dot.find("digraph \"I\"") != std::string::npos);
    CHECK(dot.find("\"x\";") != std::string::npos);
    CHECK(dot.find("dir=both") != std::string::npos);
    auto arrow = io::to_dot(*fx::walking_arrow());
    CHECK(arrow.find("dir=both") == std::string::npos);
    CHECK(arrow.find("\"0\" -> \"1\"") != std::string::npos);
    // identity morphisms never appear as edges
    CHECK(arrow.find("id_0") == std::string::npos);
}

TEST_CASE("manifest parsing and verdict vocabulary") {
    io::json j = {
        {"kind", "manifest"},
        {"version", 1},
        {"entries",
         {{{"path", "a2.json"}, {"kind", "category"}},
          {{"path", "f.json"}, {"kind", "functor"}, {"expect", {{"gfib", "yes"}}}}}},
    };
    auto m = io::manifest_from_json(j);
    REQUIRE(m.entries.size() == 2);
    CHECK(m.entries[1].expect.at("gfib") == "yes");

    j["entries"][1]["expect"]["gfib"] = "maybe";
    CHECK_THROWS_AS((void)io::manifest_from_json(j), io::MalformedInput);
}

TEST_CASE("malformed documents are rejected with MalformedInput") {
    CHECK_THROWS_AS((void)io::category_from_json(io::json{{"kind", "functor"}, {"version", 1}}),
                    io::MalformedInput);
    CHECK_THROWS_AS((void)io::category_from_json(io::json{{"kind", "category"}}),
                    io::MalformedInput);
    // a composition triple naming a missing morphism
    io::json bad = io::category_to_json(*fx::walking_arrow());
    bad["compose"].push_back({"ghost", "f01", "f01"});
    CHECK_THROWS_AS((void)io::category_from_json(bad), io::MalformedInput);
    CHECK_THROWS_AS((void)io::load_json("/nonexistent/file.json"), io::MalformedInput);
}
