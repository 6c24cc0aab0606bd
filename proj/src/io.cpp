#include "factcat/io.hpp"

#include <fstream>

namespace factcat::io {

namespace {

const json& field(const json& j, const char* key) {
    auto it = j.find(key);
    if (it == j.end()) throw MalformedInput(std::string("missing field \"") + key + "\"");
    return *it;
}

void expect_kind(const json& j, const char* kind) {
    if (!j.is_object()) throw MalformedInput("document is not a JSON object");
    if (field(j, "kind") != kind)
        throw MalformedInput(std::string("expected kind \"") + kind + "\", got " +
                             field(j, "kind").dump());
    if (!field(j, "version").is_number_integer())
        throw MalformedInput("version must be an integer");
}

std::map<Name, Name> name_map(const json& j) {
    if (!j.is_object()) throw MalformedInput("expected an object of name pairs");
    std::map<Name, Name> out;
    for (const auto& [k, v] : j.items()) {
        if (!v.is_string()) throw MalformedInput("map values must be strings");
        out[k] = v.get<Name>();
    }
    return out;
}

json map_to_json(const std::map<Name, Name>& m) {
    json out = json::object();
    for (const auto& [k, v] : m) out[k] = v;
    return out;
}

/// dom/cod of a functor document: embedded category or {"path": ...}.
CatPtr linked_category(const json& j, const std::filesystem::path& base_dir) {
    if (j.is_object() && j.contains("path")) {
        auto p = std::filesystem::path(field(j, "path").get<std::string>());
        if (p.is_relative()) p = base_dir / p;
        return category_from_json(load_json(p));
    }
    return category_from_json(j);
}

/// Object/morphism maps without implicit identity entries.
json functor_maps_to_json(const FinFunctor& f) {
    json out = json::object();
    out["ob"] = map_to_json(f.ob);
    json mor = json::object();
    for (const auto& [m, im] : f.mor)
        if (!f.dom->is_id(m)) mor[m] = im;
    out["mor"] = mor;
    return out;
}

FinFunctor functor_from_maps(const json& j, CatPtr dom, CatPtr cod) {
    FinFunctor f;
    f.dom = std::move(dom);
    f.cod = std::move(cod);
    f.ob = name_map(field(j, "ob"));
    f.mor = name_map(field(j, "mor"));
    for (const auto& x : f.dom->objects) {
        auto it = f.ob.find(x);
        if (it == f.ob.end()) throw MalformedInput("functor misses object " + x);
        if (!f.cod->has_object(it->second))
            throw MalformedInput("functor image object " + it->second + " does not exist");
        f.mor[f.dom->id_of(x)] = f.cod->id_of(it->second);
    }
    auto errs = validate_functor(f);
    if (!errs.empty()) throw MalformedInput("invalid functor: " + errs.front());
    return f;
}

}   // namespace

json category_to_json(const FinCat& c) {
    json j;
    j["kind"] = "category";
    j["version"] = 1;
    j["objects"] = c.objects;
    json mors = json::array();
    for (const auto& [m, info] : c.morphisms)
        if (!c.is_id(m)) mors.push_back({{"name", m}, {"src", info.src}, {"tgt", info.tgt}});
    j["morphisms"] = mors;
    json comp = json::array();
    for (const auto& [pair, gf] : c.table)
        if (!c.is_id(pair.first) && !c.is_id(pair.second))
            comp.push_back({pair.first, pair.second, gf});
    j["compose"] = comp;
    return j;
}

CatPtr category_from_json(const json& j) {
    expect_kind(j, "category");
    FinCatBuilder b;
    std::set<Name> declared;
    for (const auto& o : field(j, "objects")) {
        if (!o.is_string()) throw MalformedInput("object names must be strings");
        b.add_object(o.get<Name>());
        declared.insert("id_" + o.get<Name>());
    }
    for (const auto& m : field(j, "morphisms")) {
        b.add_morphism(field(m, "name").get<Name>(), field(m, "src").get<Name>(),
                       field(m, "tgt").get<Name>());
        declared.insert(field(m, "name").get<Name>());
    }
    for (const auto& t : field(j, "compose")) {
        if (!t.is_array() || t.size() != 3)
            throw MalformedInput("compose entries must be triples [g, f, gf]");
        for (const auto& n : t)
            if (!n.is_string() || !declared.count(n.get<Name>()))
                throw MalformedInput("compose triple names unknown morphism " + n.dump());
        b.set_compose(t[0].get<Name>(), t[1].get<Name>(), t[2].get<Name>());
    }
    try {
        return b.build_ptr(true);
    } catch (const std::exception& e) {
        throw MalformedInput(std::string("invalid category: ") + e.what());
    }
}

json functor_to_json(const FinFunctor& f) {
    json j = functor_maps_to_json(f);
    j["kind"] = "functor";
    j["version"] = 1;
    j["dom"] = category_to_json(*f.dom);
    j["cod"] = category_to_json(*f.cod);
    return j;
}

FinFunctor functor_from_json(const json& j, const std::filesystem::path& base_dir) {
    expect_kind(j, "functor");
    auto dom = linked_category(field(j, "dom"), base_dir);
    auto cod = linked_category(field(j, "cod"), base_dir);
    return functor_from_maps(j, std::move(dom), std::move(cod));
}

json nat_to_json(const NatTransform& t) {
    json j;
    j["components"] = map_to_json(t.components);
    return j;
}

json pseudofunctor_to_json(const PseudofunctorData& t) {
    json j;
    j["kind"] = "pseudofunctor";
    j["version"] = 1;
    j["base"] = category_to_json(*t.base);
    json value = json::object();
    for (const auto& [b, c] : t.value) value[b] = category_to_json(*c);
    j["value"] = value;
    json action = json::object();
    for (const auto& [beta, f] : t.action) action[beta] = functor_maps_to_json(f);
    j["action"] = action;
    json comp = json::array();
    for (const auto& [key, cell] : t.comp)
        comp.push_back({{"after", key.first},
                        {"before", key.second},
                        {"components", map_to_json(cell.components)}});
    j["comp"] = comp;
    json unit = json::object();
    for (const auto& [b, cell] : t.unit) unit[b] = map_to_json(cell.components);
    j["unit"] = unit;
    return j;
}

PseudofunctorData pseudofunctor_from_json(const json& j, const std::filesystem::path&) {
    expect_kind(j, "pseudofunctor");
    PseudofunctorData t;
    t.base = category_from_json(field(j, "base"));
    for (const auto& [b, cj] : field(j, "value").items()) t.value[b] = category_from_json(cj);
    for (const auto& b : t.base->objects)
        if (!t.value.count(b)) throw MalformedInput("pseudofunctor misses a value at " + b);
    for (const auto& [beta, fj] : field(j, "action").items()) {
        if (!t.base->has_morphism(beta))
            throw MalformedInput("action at unknown morphism " + beta);
        const auto& info = t.base->mor(beta);
        t.action[beta] = functor_from_maps(fj, t.value.at(info.tgt), t.value.at(info.src));
    }
    if (j.contains("comp"))
        for (const auto& cj : j["comp"]) {
            Name b2 = field(cj, "after").get<Name>();
            Name b1 = field(cj, "before").get<Name>();
            NatTransform cell;
            cell.dom = compose_functors(t.act(b1), t.act(b2));
            cell.cod = t.act(t.base->compose(b2, b1));
            cell.components = name_map(field(cj, "components"));
            t.comp[{b2, b1}] = std::move(cell);
        }
    if (j.contains("unit"))
        for (const auto& [b, uj] : j["unit"].items()) {
            NatTransform cell;
            cell.dom = identity_functor(t.value.at(b));
            cell.cod = t.act(t.base->id_of(b));
            cell.components = name_map(uj);
            t.unit[b] = std::move(cell);
        }
    auto errs = validate_pseudofunctor(t);
    if (!errs.empty()) throw MalformedInput("invalid pseudofunctor: " + errs.front());
    return t;
}

json polynomial_to_json(const poly::Polynomial& p) {
    json j;
    j["kind"] = "polynomial";
    j["version"] = 1;
    j["source"] = category_to_json(*p.source);
    j["total"] = category_to_json(*p.total);
    j["target"] = category_to_json(*p.target);
    j["left_leg"] = functor_maps_to_json(p.left_leg);
    j["right_leg"] = functor_maps_to_json(p.right_leg);
    json w;
    w["right"] = functor_maps_to_json(p.left_adjoint_witness.right);
    w["unit"] = map_to_json(p.left_adjoint_witness.unit.components);
    w["counit"] = map_to_json(p.left_adjoint_witness.counit.components);
    j["witness"] = w;
    return j;
}

poly::Polynomial polynomial_from_json(const json& j, const std::filesystem::path&) {
    expect_kind(j, "polynomial");
    poly::Polynomial p;
    p.source = category_from_json(field(j, "source"));
    p.total = category_from_json(field(j, "total"));
    p.target = category_from_json(field(j, "target"));
    p.left_leg = functor_from_maps(field(j, "left_leg"), p.total, p.source);
    p.right_leg = functor_from_maps(field(j, "right_leg"), p.total, p.target);
    const json& w = field(j, "witness");
    Adjunction adj;
    adj.left = p.left_leg;
    adj.right = functor_from_maps(field(w, "right"), p.source, p.total);
    adj.unit.dom = identity_functor(p.total);
    adj.unit.cod = compose_functors(adj.right, adj.left);
    adj.unit.components = name_map(field(w, "unit"));
    adj.counit.dom = compose_functors(adj.left, adj.right);
    adj.counit.cod = identity_functor(p.source);
    adj.counit.components = name_map(field(w, "counit"));
    p.left_adjoint_witness = std::move(adj);
    auto errs = poly::validate_polynomial(p);
    if (!errs.empty()) throw MalformedInput("invalid polynomial: " + errs.front());
    return p;
}

std::string canonical_dump(const json& j) { return j.dump(2) + "\n"; }

json load_json(const std::filesystem::path& file) {
    std::ifstream in(file);
    if (!in) throw MalformedInput("cannot open " + file.string());
    try {
        return json::parse(in);
    } catch (const json::parse_error& e) {
        throw MalformedInput(file.string() + ": " + e.what());
    }
}

void save_json(const std::filesystem::path& file, const json& j) {
    std::ofstream out(file, std::ios::binary);
    if (!out) throw std::runtime_error("cannot write " + file.string());
    out << canonical_dump(j);
}

namespace {
std::string dot_escape(const std::string& s) {
    std::string out;
    for (char c : s) {
        if (c == '"' || c == '\\') out.push_back('\\');
        out.push_back(c);
    }
    return out;
}
}   // namespace

std::string to_dot(const FinCat& c, const std::string& graph_name) {
    std::string out = "digraph \"" + dot_escape(graph_name) + "\" {\n";
    for (const auto& o : c.objects) out += "  \"" + dot_escape(o) + "\";\n";
    for (const auto& [m, info] : c.morphisms) {
        if (c.is_id(m)) continue;
        out += "  \"" + dot_escape(info.src) + "\" -> \"" + dot_escape(info.tgt) +
               "\" [label=\"" + dot_escape(m) + "\"";
        if (c.is_invertible(m)) out += ", dir=both";
        out += "];\n";
    }
    out += "}\n";
    return out;
}

CorpusManifest manifest_from_json(const json& j) {
    expect_kind(j, "manifest");
    CorpusManifest m;
    static const std::set<std::string> kinds = {"category", "functor", "pseudofunctor",
                                               "polynomial"};
    static const std::set<std::string> verdicts = {"yes", "no", "unknown", "true", "false"};
    for (const auto& ej : field(j, "entries")) {
        ManifestEntry e;
        e.path = field(ej, "path").get<std::string>();
        e.kind = field(ej, "kind").get<std::string>();
        if (!kinds.count(e.kind)) throw MalformedInput("unknown entry kind " + e.kind);
        if (ej.contains("expect"))
            for (const auto& [check, v] : ej["expect"].items()) {
                if (!v.is_string() || !verdicts.count(v.get<std::string>()))
                    throw MalformedInput("bad expected verdict for " + check);
                e.expect[check] = v.get<std::string>();
            }
        m.entries.push_back(std::move(e));
    }
    return m;
}

}   // namespace factcat::io
