// Regenerates the bundled fixtures corpus. Usage: gen_fixtures <dir>
#include "factcat/constructions.hpp"
#include "factcat/fixtures.hpp"
#include "factcat/io.hpp"

#include <iostream>

using namespace factcat;
using io::json;
namespace fx = factcat::fixtures;

namespace {

std::filesystem::path dir;
json manifest_entries = json::array();

void put_category(const std::string& name, const CatPtr& c,
                  const std::map<std::string, std::string>& expect) {
    io::save_json(dir / (name + ".json"), io::category_to_json(*c));
    json e{{"path", name + ".json"}, {"kind", "category"}};
    if (!expect.empty()) e["expect"] = expect;
    manifest_entries.push_back(e);
}

/// Functor file with path-linked dom/cod; the categories must already
/// have been written under the given names.
void put_functor(const std::string& name, const FinFunctor& f, const std::string& dom_name,
                 const std::string& cod_name, const std::map<std::string, std::string>& expect) {
    json j = io::functor_to_json(f);
    j["dom"] = {{"path", dom_name + ".json"}};
    j["cod"] = {{"path", cod_name + ".json"}};
    io::save_json(dir / (name + ".json"), j);
    json e{{"path", name + ".json"}, {"kind", "functor"}};
    if (!expect.empty()) e["expect"] = expect;
    manifest_entries.push_back(e);
}

}   // namespace

int main(int argc, char** argv) {
    if (argc != 2) {
        std::cerr << "usage: gen_fixtures <dir>\n";
        return 1;
    }
    dir = argv[1];
    std::filesystem::create_directories(dir);

    auto one = fx::terminal();
    auto a2 = fx::walking_arrow();
    auto iso = fx::walking_iso();
    auto bc2 = fx::bc2();
    auto bc3 = fx::bc3();
    auto p4 = fx::pseudocircle();
    auto chain3 = fx::chain3();
    auto pp = fx::parallel_pair();
    auto disc2 = fx::discrete2();
    auto a2xbc2 = fx::product(a2, bc2);
    auto a2xa2 = fx::product(a2, a2);
    auto arrow_bc2 = arrow_category(bc2);

    // ---- categories ----
    put_category("empty", fx::empty_cat(), {{"groupoid", "true"}, {"trivial_pi1", "no"}});
    put_category("one", one, {{"groupoid", "true"}, {"trivial_pi1", "yes"}});
    put_category("disc2", disc2, {{"groupoid", "true"}, {"trivial_pi1", "no"}});
    put_category("a2", a2, {{"groupoid", "false"}, {"trivial_pi1", "yes"}});
    put_category("iso", iso, {{"groupoid", "true"}, {"trivial_pi1", "yes"}});
    put_category("bc2", bc2, {{"groupoid", "true"}, {"trivial_pi1", "no"}});
    put_category("bc3", bc3, {{"groupoid", "true"}, {"trivial_pi1", "no"}});
    put_category("p4", p4, {{"groupoid", "false"}, {"trivial_pi1", "no"}});
    put_category("chain3", chain3, {{"groupoid", "false"}, {"trivial_pi1", "yes"}});
    put_category("parallel_pair", pp, {{"groupoid", "false"}, {"trivial_pi1", "no"}});
    put_category("a2xbc2", a2xbc2.cat, {{"groupoid", "false"}, {"trivial_pi1", "no"}});
    put_category("a2xa2", a2xa2.cat, {{"groupoid", "false"}, {"trivial_pi1", "yes"}});
    put_category("arrow_bc2", arrow_bc2.apex, {{"groupoid", "true"}, {"trivial_pi1", "no"}});

    // ---- functors ----
    auto to_1 = [&](const CatPtr& c) { return constant_functor(c, one, "*"); };

    put_functor("id_a2", identity_functor(a2), "a2", "a2",
                {{"gfib", "true"}, {"equiv", "true"}, {"ultimate", "yes"}});
    put_functor("id_bc2", identity_functor(bc2), "bc2", "bc2",
                {{"gfib", "true"}, {"equiv", "true"}});
    put_functor("id_one", identity_functor(one), "one", "one",
                {{"gfib", "true"}, {"dfib", "true"}});
    put_functor("id_p4", identity_functor(p4), "p4", "p4", {{"ultimate", "yes"}});
    put_functor("a2_to_1", to_1(a2), "a2", "one",
                {{"gfib", "false"}, {"final", "true"}, {"ultimate", "yes"}});
    put_functor("bc2_to_1", to_1(bc2), "bc2", "one",
                {{"gfib", "true"}, {"final", "true"}, {"ultimate", "no"}});
    put_functor("bc3_to_1", to_1(bc3), "bc3", "one", {{"gfib", "true"}, {"ultimate", "no"}});
    put_functor("p4_to_1", to_1(p4), "p4", "one",
                {{"gfib", "false"}, {"final", "true"}, {"ultimate", "no"}});
    put_functor("iso_to_1", to_1(iso), "iso", "one",
                {{"gfib", "true"}, {"equiv", "true"}, {"ultimate", "yes"}});
    put_functor("chain3_to_1", to_1(chain3), "chain3", "one",
                {{"final", "true"}, {"ultimate", "yes"}});
    put_functor("disc2_to_1", to_1(disc2), "disc2", "one",
                {{"gfib", "true"}, {"final", "false"}, {"ultimate", "no"}});
    put_functor("parallel_pair_to_1", to_1(pp), "parallel_pair", "one", {{"final", "true"}});
    put_functor("pick0", constant_functor(one, a2, "0"), "one", "a2",
                {{"gfib", "true"}, {"final", "false"}, {"ultimate", "no"}});
    put_functor("pick1", constant_functor(one, a2, "1"), "one", "a2",
                {{"gfib", "false"}, {"final", "true"}, {"ultimate", "yes"}, {"radj", "false"}});
    {
        FinFunctor incl{disc2, a2, {{"0", "0"}, {"1", "1"}}, {}};
        for (const auto& [m, info] : disc2->morphisms)
            incl.mor[m] = a2->id_of(incl.ob.at(info.src));
        put_functor("disc2_to_a2", incl, "disc2", "a2",
                    {{"gfib", "false"}, {"dfib", "false"}, {"final", "false"}});
    }
    {
        FinFunctor q{a2, iso, {{"0", "x"}, {"1", "y"}}, {}};
        q.mor["id_0"] = "id_x";
        q.mor["id_1"] = "id_y";
        q.mor["a"] = "u";
        put_functor("a2_to_iso", q, "a2", "iso",
                    {{"gfib", "false"}, {"equiv", "false"}, {"ultimate", "yes"}});
    }
    put_functor("one_to_bc2", constant_functor(one, bc2, "*"), "one", "bc2",
                {{"gfib", "true"}, {"final", "false"}, {"ultimate", "no"}});
    put_functor("proj1_a2xbc2", a2xbc2.proj1, "a2xbc2", "a2", {{"gfib", "true"}});
    put_functor("proj2_a2xbc2", a2xbc2.proj2, "a2xbc2", "bc2", {{"gfib", "false"}});
    put_functor("proj1_a2xa2", a2xa2.proj1, "a2xa2", "a2", {{"ultimate", "yes"}});
    put_functor("proj2_a2xa2", a2xa2.proj2, "a2xa2", "a2", {});
    {
        FinFunctor diag{a2, a2xa2.cat, {}, {}};
        for (const auto& x : a2->objects) diag.ob[x] = "(" + x + "," + x + ")";
        for (const auto& [m, info] : a2->morphisms) {
            (void)info;
            diag.mor[m] = a2->is_id(m) ? a2xa2.cat->id_of(diag.ob.at(a2->src(m)))
                                       : "(" + m + "," + m + ")";
        }
        put_functor("diag_a2", diag, "a2", "a2xa2", {{"gfib", "false"}});
    }
    {
        FinFunctor incl{a2, chain3, {{"0", "0"}, {"1", "1"}}, {}};
        incl.mor["id_0"] = "id_0";
        incl.mor["id_1"] = "id_1";
        incl.mor["a"] = "f01";
        put_functor("a2_into_chain3", incl, "a2", "chain3", {{"final", "false"}});
    }
    {
        FinFunctor f{iso, bc2, {{"x", "*"}, {"y", "*"}}, {}};
        f.mor["id_x"] = "id_*";
        f.mor["id_y"] = "id_*";
        f.mor["u"] = "g";
        f.mor["v"] = "g";
        put_functor("iso_to_bc2", f, "iso", "bc2", {{"gfib", "true"}, {"equiv", "false"}});
    }
    {
        FinFunctor swap{disc2, disc2, {{"0", "1"}, {"1", "0"}}, {}};
        swap.mor["id_0"] = "id_1";
        swap.mor["id_1"] = "id_0";
        put_functor("swap_disc2", swap, "disc2", "disc2", {{"equiv", "true"}});
    }
    {
        FinFunctor sq{bc3, bc3, {{"*", "*"}}, {}};
        sq.mor["id_*"] = "id_*";
        sq.mor["g"] = "h";
        sq.mor["h"] = "g";
        put_functor("bc3_square", sq, "bc3", "bc3", {{"equiv", "true"}, {"gfib", "true"}});
    }
    put_functor("arrow_bc2_dom", arrow_bc2.left_leg, "arrow_bc2", "bc2", {{"gfib", "true"}});

    json manifest{{"kind", "manifest"}, {"version", 1}, {"entries", manifest_entries}};
    io::save_json(dir / "manifest.json", manifest);
    std::cout << "wrote " << manifest_entries.size() << " fixtures to " << dir.string() << "\n";
    return 0;
}
