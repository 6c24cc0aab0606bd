#pragma once

#include "factcat/constructions.hpp"
#include "factcat/poly.hpp"

#include <json.hpp>

#include <filesystem>

namespace factcat::io {

using json = nlohmann::json;

/// Schema violations, unknown kinds, or unreadable files. Distinct from
/// mathematical No/Unknown verdicts so the CLI can map it to exit 3.
struct MalformedInput : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Every serialized document is a JSON object with "kind" and "version".
// Categories list objects, non-identity morphisms, and composition
// triples [g, f, g∘f] over non-identity pairs; identities are implicit
// and named id_<object>. Functor files embed their dom/cod or link them
// with {"path": ...} relative to the file's directory.

json category_to_json(const FinCat& c);
CatPtr category_from_json(const json& j);

json functor_to_json(const FinFunctor& f);
FinFunctor functor_from_json(const json& j, const std::filesystem::path& base_dir = {});

json pseudofunctor_to_json(const PseudofunctorData& t);
PseudofunctorData pseudofunctor_from_json(const json& j,
                                          const std::filesystem::path& base_dir = {});

json polynomial_to_json(const poly::Polynomial& p);
poly::Polynomial polynomial_from_json(const json& j, const std::filesystem::path& base_dir = {});

json nat_to_json(const NatTransform& t);

/// Canonical text form: sorted keys, two-space indent, UTF-8, trailing LF.
std::string canonical_dump(const json& j);

json load_json(const std::filesystem::path& file);
void save_json(const std::filesystem::path& file, const json& j);

/// One node per object, one labelled edge per non-identity morphism;
/// invertible morphisms are rendered with dir=both.
std::string to_dot(const FinCat& c, const std::string& graph_name = "category");

struct ManifestEntry {
    std::string path;
    std::string kind;                            // category|functor|pseudofunctor|polynomial
    std::map<std::string, std::string> expect;   // check name -> yes|no|unknown|true|false
};

struct CorpusManifest {
    std::vector<ManifestEntry> entries;
};

CorpusManifest manifest_from_json(const json& j);

}   // namespace factcat::io
