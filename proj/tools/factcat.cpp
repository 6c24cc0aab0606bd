#include "factcat/fib.hpp"
#include "factcat/io.hpp"

#include <CLI11.hpp>

#include <cstdlib>
#include <iostream>

using namespace factcat;
using io::json;

namespace {

// exit codes: 0 success/Yes, 1 No/false, 2 Unknown/guard or bound
// exhausted, 3 malformed input
constexpr int kYes = 0;
constexpr int kNo = 1;
constexpr int kUnknown = 2;
constexpr int kMalformed = 3;

int from_tri(gpd::TriBool t) {
    switch (t) {
        case gpd::TriBool::Yes: return kYes;
        case gpd::TriBool::No: return kNo;
        default: return kUnknown;
    }
}

std::string verdict_name(int code) {
    switch (code) {
        case kYes: return "yes";
        case kNo: return "no";
        case kUnknown: return "unknown";
        default: return "malformed";
    }
}

void emit(const json& j, const std::string& out_file) {
    if (out_file.empty())
        std::cout << io::canonical_dump(j);
    else
        io::save_json(out_file, j);
}

void emit_text(const std::string& text, const std::string& out_file) {
    if (out_file.empty()) {
        std::cout << text;
    } else {
        std::ofstream f(out_file, std::ios::binary);
        if (!f) throw std::runtime_error("cannot write " + out_file);
        f << text;
    }
}

FinFunctor load_functor(const std::string& path) {
    return io::functor_from_json(io::load_json(path),
                                 std::filesystem::path(path).parent_path());
}

CatPtr load_category(const std::string& path) {
    return io::category_from_json(io::load_json(path));
}

json fibration_json(const fib::FibrationReport& r) {
    return json{{"verdict", r.verdict}, {"witnesses", r.witnesses}};
}

/// Shared by `check` and `verify`: run one named decision procedure and
/// return (exit code, report).
std::pair<int, json> run_check(const std::string& what, const FinFunctor& f,
                               const std::string& morphism, std::size_t bound,
                               std::size_t guard) {
    (void)guard;
    if (what == "gfib") {
        auto r = fib::is_groupoid_fibration(f);
        return {r.verdict ? kYes : kNo, fibration_json(r)};
    }
    if (what == "dfib") {
        auto r = fib::is_discrete_fibration(f);
        return {r.verdict ? kYes : kNo, fibration_json(r)};
    }
    if (what == "opfib") {
        auto r = fib::is_opfibration_gfib(f);
        return {r.verdict ? kYes : kNo, fibration_json(r)};
    }
    if (what == "final") {
        auto r = fib::is_final(f);
        return {r.verdict ? kYes : kNo, fibration_json(r)};
    }
    if (what == "ultimate") {
        auto r = fib::is_ultimate(f, bound);
        return {from_tri(r.value),
                json{{"verdict", verdict_name(from_tri(r.value))}, {"witnesses", r.witnesses}}};
    }
    if (what == "equiv") {
        bool v = is_equivalence(f);
        return {v ? kYes : kNo, json{{"verdict", v}}};
    }
    if (what == "radj") {
        bool v = compute_right_adjoint(f).has_value();
        return {v ? kYes : kNo, json{{"verdict", v}}};
    }
    if (what == "ladj") {
        bool v = compute_left_adjoint(f).has_value();
        return {v ? kYes : kNo, json{{"verdict", v}}};
    }
    if (what == "cartesian") {
        if (morphism.empty()) throw io::MalformedInput("cartesian needs --morphism");
        if (!f.dom->has_morphism(morphism))
            throw io::MalformedInput("no morphism named " + morphism);
        bool v = fib::is_cartesian(f, morphism);
        return {v ? kYes : kNo, json{{"verdict", v}, {"morphism", morphism}}};
    }
    throw io::MalformedInput("unknown check " + what);
}

json factorization_json(const std::string& system, const factorize::Factorization& fact) {
    json j;
    j["kind"] = "factorization";
    j["system"] = system;
    j["left"] = io::functor_to_json(fact.left);
    j["mid"] = io::category_to_json(*fact.mid);
    j["right"] = io::functor_to_json(fact.right);
    j["comparison"] = io::nat_to_json(fact.comparison);
    return j;
}

void write_factorization_dir(const std::string& dir, const json& j) {
    std::filesystem::create_directories(dir);
    auto d = std::filesystem::path(dir);
    io::save_json(d / "left.json", j.at("left"));
    io::save_json(d / "mid.json", j.at("mid"));
    io::save_json(d / "right.json", j.at("right"));
    io::save_json(d / "comparison.json", j.at("comparison"));
}

json normalization_report(const gpd::NormalizationResult& n) {
    json j;
    j["kind"] = "report";
    switch (n.status) {
        case gpd::NormalizationResult::Status::Finite: j["status"] = "finite"; break;
        case gpd::NormalizationResult::Status::InfiniteDetected: j["status"] = "infinite"; break;
        default: j["status"] = "unknown"; break;
    }
    if (n.certificate) j["cycle"] = n.certificate->cycle;
    if (!n.note.empty()) j["note"] = n.note;
    j["effort"] = {{"rules_added", n.effort.rules_added},
                   {"cosets_defined", n.effort.cosets_defined}};
    return j;
}

int run_verify(const std::string& manifest_path, std::size_t bound, std::size_t guard,
               const std::string& out_file) {
    auto base = std::filesystem::path(manifest_path).parent_path();
    auto manifest = io::manifest_from_json(io::load_json(manifest_path));
    json report = json::array();
    int severity = 0;
    for (const auto& entry : manifest.entries) {
        json ej;
        ej["path"] = entry.path;
        ej["kind"] = entry.kind;
        int entry_code = 0;
        try {
            auto path = base / entry.path;
            auto doc = io::load_json(path);
            json results = json::object();
            if (entry.kind == "category") {
                auto c = io::category_from_json(doc);
                for (const auto& [check, want] : entry.expect) {
                    std::string got;
                    if (check == "groupoid") {
                        got = c->is_groupoid() ? "true" : "false";
                    } else if (check == "trivial_pi1") {
                        got = verdict_name(from_tri(gpd::is_trivial_pi1(c, bound).value));
                    } else {
                        throw io::MalformedInput("unknown category check " + check);
                    }
                    results[check] = got;
                    if (got != want) entry_code = std::max(entry_code, got == "unknown" ? 2 : 1);
                }
            } else if (entry.kind == "functor") {
                auto f = io::functor_from_json(doc, path.parent_path());
                for (const auto& [check, want] : entry.expect) {
                    auto [code, rep] = run_check(check, f, "", bound, guard);
                    (void)rep;
                    std::string got = rep.contains("verdict") && rep["verdict"].is_boolean()
                                          ? (rep["verdict"].get<bool>() ? "true" : "false")
                                          : verdict_name(code);
                    results[check] = got;
                    if (got != want) entry_code = std::max(entry_code, got == "unknown" ? 2 : 1);
                }
            } else if (entry.kind == "pseudofunctor") {
                auto t = io::pseudofunctor_from_json(doc, path.parent_path());
                for (const auto& [check, want] : entry.expect) {
                    if (check != "gfib")
                        throw io::MalformedInput("unknown pseudofunctor check " + check);
                    bool v = fib::is_groupoid_fibration(groth(t).projection).verdict;
                    std::string got = v ? "true" : "false";
                    results[check] = got;
                    if (got != want) entry_code = std::max(entry_code, 1);
                }
            } else {   // polynomial
                auto p = io::polynomial_from_json(doc, path.parent_path());
                for (const auto& [check, want] : entry.expect) {
                    if (check != "valid")
                        throw io::MalformedInput("unknown polynomial check " + check);
                    std::string got = poly::validate_polynomial(p).empty() ? "true" : "false";
                    results[check] = got;
                    if (got != want) entry_code = std::max(entry_code, 1);
                }
            }
            ej["results"] = results;
        } catch (const io::MalformedInput& e) {
            ej["error"] = e.what();
            entry_code = kMalformed;
        } catch (const GuardExceeded& e) {
            ej["error"] = e.what();
            entry_code = kUnknown;
        }
        ej["exit"] = entry_code;
        severity = std::max(severity, entry_code);
        report.push_back(std::move(ej));
    }
    emit(json{{"kind", "verify_report"}, {"entries", report}, {"exit", severity}}, out_file);
    return severity;
}

}   // namespace

int main(int argc, char** argv) {
    CLI::App app{"factcat: finite-category factorization toolkit"};
    app.require_subcommand(1);

    std::size_t bound = 10000;
    if (const char* env = std::getenv("FACTCAT_BOUND")) bound = std::strtoull(env, nullptr, 10);
    std::size_t guard = 20000;
    app.add_option("--bound", bound, "normalization effort bound");
    app.add_option("--guard", guard, "enumeration size guard");

    std::string file, out_file, left, right, cat, object, morphism, pseudofunctor, system,
        functor, first, second, poly_file, corpus, what;

    auto* validate = app.add_subcommand("validate", "validate a JSON document");
    validate->add_option("file", file)->required();

    auto* construct = app.add_subcommand("construct", "build a derived category");
    construct->add_option("what", what, "comma|pspb|arrow|core|slice|groth")->required();
    construct->add_option("--left", left);
    construct->add_option("--right", right);
    construct->add_option("--cat", cat);
    construct->add_option("--object", object);
    construct->add_option("--pseudofunctor", pseudofunctor);
    construct->add_option("--out", out_file);

    auto* check = app.add_subcommand("check", "decide a property of a functor");
    check->add_option("what", what,
                      "gfib|dfib|opfib|final|ultimate|radj|ladj|equiv|cartesian")
        ->required();
    check->add_option("--functor", functor)->required();
    check->add_option("--morphism", morphism);
    check->add_option("--out", out_file);

    auto* pi1cmd = app.add_subcommand("pi1", "fundamental groupoid of a category");
    pi1cmd->add_option("cat", cat)->required();
    pi1cmd->add_option("--out", out_file);

    auto* factorize_cmd = app.add_subcommand("factorize", "factor a functor");
    factorize_cmd->add_option("--system", system, "comprehensive|ultimate")->required();
    factorize_cmd->add_option("--functor", functor)->required();
    factorize_cmd->add_option("--out", out_file, "output directory");

    auto* fs1 = app.add_subcommand("fs1", "bipullback orthogonality of a (left, right) pair");
    fs1->add_option("--left", left)->required();
    fs1->add_option("--right", right)->required();

    auto* polycmd = app.add_subcommand("poly", "abstract polynomial operations");
    polycmd->add_option("what", what, "compose|eval|detect")->required();
    polycmd->add_option("--first", first);
    polycmd->add_option("--second", second);
    polycmd->add_option("--poly", poly_file);
    polycmd->add_option("--functor", functor);
    polycmd->add_option("--out", out_file);

    auto* exportcmd = app.add_subcommand("export", "export a category");
    exportcmd->add_option("format", what, "dot")->required();
    exportcmd->add_option("cat", cat)->required();
    exportcmd->add_option("--out", out_file);

    auto* verify = app.add_subcommand("verify", "run a corpus manifest");
    verify->add_option("--corpus", corpus)->required();
    verify->add_option("--out", out_file);

    CLI11_PARSE(app, argc, argv);

    try {
        if (app.got_subcommand(validate)) {
            auto doc = io::load_json(file);
            auto base = std::filesystem::path(file).parent_path();
            if (!doc.is_object() || !doc.contains("kind"))
                throw io::MalformedInput("document has no kind");
            std::string kind = doc["kind"].get<std::string>();
            if (kind == "category")
                (void)io::category_from_json(doc);
            else if (kind == "functor")
                (void)io::functor_from_json(doc, base);
            else if (kind == "pseudofunctor")
                (void)io::pseudofunctor_from_json(doc, base);
            else if (kind == "polynomial")
                (void)io::polynomial_from_json(doc, base);
            else if (kind == "manifest")
                (void)io::manifest_from_json(doc);
            else
                throw io::MalformedInput("unknown kind " + kind);
            std::cout << "ok " << kind << "\n";
            return kYes;
        }

        if (app.got_subcommand(construct)) {
            CatPtr result;
            if (what == "comma" || what == "pspb") {
                if (left.empty() || right.empty())
                    throw io::MalformedInput(what + " needs --left and --right");
                auto f = load_functor(left);
                auto g = load_functor(right);
                result = (what == "comma" ? comma(f, g) : pseudopullback(f, g)).apex;
            } else if (what == "arrow") {
                result = arrow_category(load_category(cat)).apex;
            } else if (what == "core") {
                result = core(load_category(cat)).core;
            } else if (what == "slice") {
                if (object.empty()) throw io::MalformedInput("slice needs --object");
                result = under_slice(load_category(cat), object).apex;
            } else if (what == "groth") {
                auto t = io::pseudofunctor_from_json(
                    io::load_json(pseudofunctor),
                    std::filesystem::path(pseudofunctor).parent_path());
                emit(io::functor_to_json(groth(t).projection), out_file);
                return kYes;
            } else {
                throw io::MalformedInput("unknown construction " + what);
            }
            emit(io::category_to_json(*result), out_file);
            return kYes;
        }

        if (app.got_subcommand(check)) {
            auto f = load_functor(functor);
            auto [code, rep] = run_check(what, f, morphism, bound, guard);
            emit(rep, out_file);
            return code;
        }

        if (app.got_subcommand(pi1cmd)) {
            auto n = gpd::normalize(gpd::pi1(load_category(cat)), bound);
            if (n.status == gpd::NormalizationResult::Status::Finite) {
                emit(io::category_to_json(*n.category), out_file);
                return kYes;
            }
            emit(normalization_report(n), out_file);
            return kUnknown;
        }

        if (app.got_subcommand(factorize_cmd)) {
            auto f = load_functor(functor);
            json j;
            if (system == "comprehensive") {
                j = factorization_json(system, factorize::comprehensive_factorize(f));
            } else if (system == "ultimate") {
                auto outcome = factorize::ultimate_factorize(f, bound);
                if (const auto* exceeded = std::get_if<factorize::BoundExceeded>(&outcome)) {
                    emit(normalization_report(exceeded->normalization), "");
                    return kUnknown;
                }
                j = factorization_json(system, std::get<factorize::Factorization>(outcome));
            } else {
                throw io::MalformedInput("unknown system " + system);
            }
            if (out_file.empty())
                std::cout << io::canonical_dump(j);
            else
                write_factorization_dir(out_file, j);
            return kYes;
        }

        if (app.got_subcommand(fs1)) {
            bool v = factorize::check_fs1(load_functor(left), load_functor(right), guard);
            std::cout << (v ? "true" : "false") << "\n";
            return v ? kYes : kNo;
        }

        if (app.got_subcommand(polycmd)) {
            if (what == "compose") {
                auto p1 = io::polynomial_from_json(io::load_json(first));
                auto p2 = io::polynomial_from_json(io::load_json(second));
                emit(io::polynomial_to_json(poly::compose_polynomials(p1, p2, guard)), out_file);
                return kYes;
            }
            if (what == "eval") {
                auto p = io::polynomial_from_json(io::load_json(poly_file));
                emit(io::functor_to_json(poly::eval_polynomial(p)), out_file);
                return kYes;
            }
            if (what == "detect") {
                auto rep = poly::is_abstract_polynomial_functor(load_functor(functor), bound);
                int code = from_tri(rep.value);
                emit(json{{"verdict", verdict_name(code)}, {"note", rep.note}}, out_file);
                return code;
            }
            throw io::MalformedInput("unknown poly operation " + what);
        }

        if (app.got_subcommand(exportcmd)) {
            if (what != "dot") throw io::MalformedInput("unknown export format " + what);
            auto c = load_category(cat);
            emit_text(io::to_dot(*c, std::filesystem::path(cat).stem().string()), out_file);
            return kYes;
        }

        if (app.got_subcommand(verify)) return run_verify(corpus, bound, guard, out_file);
    } catch (const io::MalformedInput& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kMalformed;
    } catch (const GuardExceeded& e) {
        std::cerr << "guard exceeded: " << e.what() << "\n";
        return kUnknown;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kMalformed;
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return kMalformed;
    }
    return kMalformed;
}
