#pragma once

// Catalog manifests: a JSON list of manifold rows, optionally pointing at
// CGF files, and the cross-check that runs over them.
//
//   {"rows": [{"name": "S^4", "chi": 2, "rank_m": 0, "known_genus": 0,
//              "source": "...", "cgf_path": "sphere4.cgf",
//              "betti": [1, 0, 0, 0, 1]}, ...]}
//
// `cgf_path` is resolved relative to the manifest's directory.

#include <filesystem>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "json.hpp"

#include "crystal/catalog.hpp"
#include "crystal/certificate.hpp"
#include "crystal/cgf.hpp"
#include "crystal/error.hpp"

namespace crystal {

namespace detail {

template <class T>
T manifest_field(const nlohmann::json& row, const char* key, std::size_t index)
{
    if (!row.contains(key)) {
        throw Error(ErrorKind::ParseError, "manifest row " + std::to_string(index) + " lacks '" + key + "'");
    }
    try {
        return row.at(key).get<T>();
    } catch (const nlohmann::json::exception&) {
        throw Error(ErrorKind::ParseError,
                    "manifest row " + std::to_string(index) + " has a malformed '" + key + "'");
    }
}

} // namespace detail

/// Parses manifest text. Graphs are loaded from `base_dir`.
inline std::vector<CatalogEntry> parse_manifest(const std::string& text, const std::filesystem::path& base_dir)
{
    nlohmann::json doc;
    try {
        doc = nlohmann::json::parse(text);
    } catch (const nlohmann::json::parse_error& e) {
        throw Error(ErrorKind::ParseError, std::string("manifest is not valid JSON: ") + e.what());
    }
    if (!doc.is_object() || !doc.contains("rows") || !doc["rows"].is_array()) {
        throw Error(ErrorKind::ParseError, "manifest needs a top-level \"rows\" array");
    }
    std::vector<CatalogEntry> entries;
    std::size_t index = 0;
    for (const auto& row : doc["rows"]) {
        if (!row.is_object()) {
            throw Error(ErrorKind::ParseError, "manifest row " + std::to_string(index) + " is not an object");
        }
        CatalogEntry e;
        e.name = detail::manifest_field<std::string>(row, "name", index);
        e.chi = detail::manifest_field<std::int64_t>(row, "chi", index);
        e.rank_m = detail::manifest_field<std::int64_t>(row, "rank_m", index);
        e.known_genus = detail::manifest_field<std::int64_t>(row, "known_genus", index);
        e.source = row.contains("source") ? detail::manifest_field<std::string>(row, "source", index) : "";
        if (row.contains("betti")) {
            const auto b = detail::manifest_field<std::vector<std::int64_t>>(row, "betti", index);
            if (b.size() != 5) {
                throw Error(ErrorKind::ParseError,
                            "manifest row " + std::to_string(index) + " needs five Betti numbers");
            }
            BettiVector betti;
            std::copy(b.begin(), b.end(), betti.b.begin());
            e.betti = betti;
        }
        if (row.contains("cgf_path")) {
            e.cgf_path = detail::manifest_field<std::string>(row, "cgf_path", index);
            e.graph = load_cgf((base_dir / *e.cgf_path).string());
        }
        entries.push_back(std::move(e));
        ++index;
    }
    return entries;
}

inline std::vector<CatalogEntry> load_manifest(const std::string& path)
{
    return parse_manifest(read_text_file(path), std::filesystem::path(path).parent_path());
}

struct CatalogRowCheck {
    std::string name;
    bool genus_formula_holds = false; // known_genus = 2 chi + 5 m - 4
    bool has_graph = false;
    // The remaining fields are meaningful only when has_graph.
    bool chi_matches = false;
    bool manifold_verified = false;
    bool vertex_identity_holds = false;
    bool gagliardi_holds = false;
    bool rank_consistent = false;
    bool certified = false;
    bool certificate_genus_matches = false;
    std::string diagnostic;

    [[nodiscard]] bool passed() const noexcept
    {
        return genus_formula_holds &&
               (!has_graph || (chi_matches && manifold_verified && vertex_identity_holds && gagliardi_holds &&
                               rank_consistent && certified && certificate_genus_matches));
    }
};

inline CatalogRowCheck check_catalog_row(const CatalogEntry& entry)
{
    CatalogRowCheck r;
    r.name = entry.name;
    r.genus_formula_holds = entry.known_genus == genus_lower_bound(entry.chi, entry.rank_m);
    if (!entry.graph) {
        return r;
    }
    r.has_graph = true;
    const auto& g = *entry.graph;
    try {
        detail::require_dim(g, 4);
        r.chi_matches = euler_characteristic(g) == entry.chi;
        r.manifold_verified = manifold_check(g).verdict == ManifoldVerdict::Verified;
        r.gagliardi_holds = gagliardi_relation_check(g).holds;
        r.vertex_identity_holds = vertex_identity_check(g).holds;
        validate_rank(g, entry.rank_m);
        r.rank_consistent = true;
        const auto cert = genus_certificate(g, entry.rank_m, entry.betti);
        r.certified = cert.has_value();
        r.certificate_genus_matches = cert && entry.known_genus && cert->genus == *entry.known_genus;
    } catch (const Error& e) {
        r.diagnostic = e.what();
    } catch (const std::logic_error& e) {
        r.diagnostic = e.what();
    }
    return r;
}

inline std::vector<CatalogRowCheck> verify_catalog(const std::vector<CatalogEntry>& entries)
{
    std::vector<CatalogRowCheck> out;
    for (const auto& e : entries) {
        out.push_back(check_catalog_row(e));
    }
    return out;
}

} // namespace crystal
