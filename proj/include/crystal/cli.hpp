#pragma once

// Command-line front end. `run` is the whole program minus process plumbing,
// so tests can drive it with string streams.
//
// Exit codes: 0 every check passed, 1 some check failed, 2 input error.

#include <algorithm>
#include <charconv>
#include <fstream>
#include <functional>
#include <optional>
#include <ostream>
#include <stdexcept>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "crystal/catalog.hpp"
#include "crystal/certificate.hpp"
#include "crystal/cgf.hpp"
#include "crystal/enumerator.hpp"
#include "crystal/error.hpp"
#include "crystal/manifest.hpp"
#include "crystal/report.hpp"

namespace crystal::cli {

inline constexpr int kPass = 0;
inline constexpr int kCheckFailed = 1;
inline constexpr int kInputError = 2;

/// "B0,B1,B2,B3,B4" with non-negative integers.
inline BettiVector parse_betti(const std::string& text)
{
    BettiVector betti;
    std::size_t k = 0;
    std::size_t start = 0;
    while (true) {
        const auto comma = text.find(',', start);
        const auto field = text.substr(start, comma == std::string::npos ? std::string::npos : comma - start);
        std::int64_t value = 0;
        const auto [ptr, ec] = std::from_chars(field.data(), field.data() + field.size(), value);
        if (k == 5 || field.empty() || ec != std::errc{} || ptr != field.data() + field.size()) {
            throw Error(ErrorKind::ConfigInvalid, "--betti expects five comma-separated integers, got '" + text + "'");
        }
        betti.b[k++] = value;
        if (comma == std::string::npos) {
            break;
        }
        start = comma + 1;
    }
    if (k != 5) {
        throw Error(ErrorKind::ConfigInvalid, "--betti expects five comma-separated integers, got '" + text + "'");
    }
    crystal::validate_betti(betti);
    return betti;
}

namespace detail {

using report::ordered_json;

struct Options {
    std::string format = "json";
    std::string file;
    std::string file2;
    std::optional<std::int64_t> rank;
    std::optional<std::string> betti;
    unsigned jobs = 1;
    Vertex v1 = 0;
    Vertex v2 = 0;
    std::optional<std::string> output;
    std::size_t vertices = 0;
    int dim = 4;
    bool allow_uncontracted = false;
    bool allow_nonspherical = false;
    bool bipartite = false;
    std::optional<std::size_t> max_results;
    std::uint64_t seed = 0;
};

inline void emit(std::ostream& out, const Options& o, const ordered_json& j)
{
    if (o.format == "text") {
        out << report::to_text(j);
    } else {
        out << j.dump(2) << "\n";
    }
}

inline std::optional<BettiVector> betti_of(const Options& o)
{
    return o.betti ? std::optional<BettiVector>(parse_betti(*o.betti)) : std::nullopt;
}

inline int cmd_info(const Options& o, std::ostream& out)
{
    const auto g = load_cgf(o.file);
    emit(out, o, report::info_json(g, betti_of(o), o.rank));
    return kPass;
}

inline int cmd_genus(const Options& o, std::ostream& out)
{
    const auto g = load_cgf(o.file);
    auto j = report::genus_json(regular_genus(g, o.jobs));
    if (o.rank) {
        j["classification"] = report::classification_json(classify(g, *o.rank));
        j["certificate"] = report::certificate_json(genus_certificate(g, *o.rank, betti_of(o)));
    } else {
        j["classification"] = nullptr;
        j["certificate"] = nullptr;
    }
    emit(out, o, j);
    return kPass;
}

inline int cmd_check(const Options& o, std::ostream& out)
{
    const auto g = load_cgf(o.file);
    const auto betti = betti_of(o);
    const auto classification = classify(g, *o.rank);
    const auto cert = genus_certificate(g, *o.rank, betti);
    ordered_json j;
    j["classification"] = report::classification_json(classification);
    j["certificate"] = report::certificate_json(cert);
    emit(out, o, j);
    return cert ? kPass : kCheckFailed;
}

inline int cmd_sum(const Options& o, std::ostream& out)
{
    const auto g1 = load_cgf(o.file);
    const auto g2 = load_cgf(o.file2);
    const auto text = to_cgf(connected_sum(g1, o.v1, g2, o.v2));
    if (o.output) {
        std::ofstream file(*o.output, std::ios::binary);
        if (!(file << text)) {
            throw Error(ErrorKind::ParseError, "cannot write '" + *o.output + "'");
        }
    } else {
        out << text;
    }
    return kPass;
}

/// Runs one check; a graph that is not a closed-manifold crystallization fails
/// the check rather than aborting the command.
inline bool run_check(ordered_json& checks, const char* name, const std::function<ordered_json()>& body)
{
    ordered_json j;
    try {
        j = body();
    } catch (const Error& e) {
        if (e.kind() != ErrorKind::NotAManifoldCrystallization && e.kind() != ErrorKind::NotContracted) {
            throw;
        }
        j = {{"pass", false}, {"error", e.what()}};
    }
    checks[name] = j;
    return j["pass"].get<bool>();
}

inline int cmd_verify(const Options& o, std::ostream& out)
{
    const auto g = load_cgf(o.file);
    crystal::detail::require_dim(g, 4);
    const auto betti = betti_of(o);
    // Without --rank, b1 is the smallest rank the Betti numbers allow.
    const std::int64_t rank = o.rank.value_or(betti ? betti->b[1] : 0);
    if (o.rank && is_contracted(g)) {
        validate_rank(g, rank);
    }

    ordered_json checks = ordered_json::object();
    bool all = true;
    all &= run_check(checks, "gagliardi_relation", [&] {
        const auto r = gagliardi_relation_check(g);
        ordered_json residuals = ordered_json::object();
        for (const auto& t : r.triples) {
            residuals[t.triple.to_string()] = t.residual;
        }
        return ordered_json{{"pass", r.holds}, {"residuals", residuals}};
    });
    all &= run_check(checks, "dehn_sommerville", [&] {
        const auto r = dehn_sommerville_check(g);
        return ordered_json{{"pass", r.holds},
                            {"residual_edges", r.residual_edges},
                            {"residual_facets", r.residual_facets}};
    });
    all &= run_check(checks, "vertex_identity", [&] {
        const auto r = vertex_identity_check(g);
        return ordered_json{{"pass", r.holds},
                            {"num_vertices", r.num_vertices},
                            {"predicted", r.predicted},
                            {"triple_residue_sum", r.triple_residue_sum}};
    });
    all &= run_check(checks, "rho_identity", [&] {
        const auto r = rho_identity_check(g);
        ordered_json residuals = ordered_json::object();
        for (const auto& [eps, res] : r.residuals) {
            residuals[eps.to_string()] = res;
        }
        return ordered_json{{"pass", r.holds}, {"residuals_times_two", residuals}};
    });
    all &= run_check(checks, "linear_system", [&] {
        auto j = report::linear_system_json(verify_linear_system(g, rank));
        ordered_json wrapped{{"pass", j["passed"]}};
        j.erase("passed");
        wrapped.update(j);
        return wrapped;
    });
    all &= run_check(checks, "h_vector_sum", [&] {
        const auto h = h_vector(g);
        std::int64_t sum = 0;
        for (auto x : h.h) {
            sum += x;
        }
        const auto nu = static_cast<std::int64_t>(g.num_vertices());
        return ordered_json{{"pass", sum == nu}, {"sum", sum}, {"num_vertices", nu}};
    });
    if (betti) {
        all &= run_check(checks, "novik_swartz", [&] {
            auto j = report::novik_swartz_json(novik_swartz_check(g, *betti, rank));
            ordered_json wrapped{{"pass", j["bound_holds"]}};
            wrapped.update(j);
            return wrapped;
        });
    }
    ordered_json j{{"rank", rank}, {"all_pass", all}, {"checks", checks}};
    emit(out, o, j);
    return all ? kPass : kCheckFailed;
}

inline int cmd_enumerate(const Options& o, std::ostream& out)
{
    SearchConfig config;
    config.dim = o.dim;
    config.vertices = o.vertices;
    config.require_contracted = !o.allow_uncontracted;
    config.require_level3_spheres = !o.allow_nonspherical;
    config.require_bipartite = o.bipartite;
    config.max_results = o.max_results;
    config.jobs = o.jobs;
    bool first = true;
    enumerate(config, [&](const EnumeratedGraph& e) {
        if (o.format == "json") {
            out << report::enumerated_json(e).dump() << "\n";
        } else {
            out << (first ? "" : "\n") << to_cgf(e.graph);
        }
        first = false;
        out.flush();
        return true;
    });
    return kPass;
}

inline int cmd_verify_catalog(const Options& o, std::ostream& out)
{
    const auto entries = load_manifest(o.file);
    const auto results = verify_catalog(entries);
    ordered_json rows = ordered_json::array();
    bool all = true;
    for (std::size_t i = 0; i < entries.size(); ++i) {
        const auto& r = results[i];
        all &= r.passed();
        ordered_json row{{"name", r.name},
                         {"pass", r.passed()},
                         {"genus_formula_holds", r.genus_formula_holds},
                         {"has_graph", r.has_graph}};
        if (r.has_graph) {
            row["chi_matches"] = r.chi_matches;
            row["manifold_verified"] = r.manifold_verified;
            row["vertex_identity_holds"] = r.vertex_identity_holds;
            row["gagliardi_holds"] = r.gagliardi_holds;
            row["rank_consistent"] = r.rank_consistent;
            row["certified"] = r.certified;
            row["certificate_genus_matches"] = r.certificate_genus_matches;
            row["diagnostic"] = r.diagnostic;
        }
        rows.push_back(std::move(row));
    }
    emit(out, o, ordered_json{{"all_pass", all}, {"rows", rows}});
    return all ? kPass : kCheckFailed;
}

inline int cmd_random(const Options& o, std::ostream& out)
{
    out << to_cgf(random_colored_graph(o.dim, o.vertices, o.seed));
    return kPass;
}

} // namespace detail

/// Parses `args` (without the program name), runs the command and returns
/// the exit code. Reports go to `out`, diagnostics to `err`.
inline int run(std::vector<std::string> args, std::ostream& out, std::ostream& err)
{
    detail::Options o;
    CLI::App app{"Crystallizations of closed PL 4-manifolds: invariants, regular genus, certificates"};
    app.name("crystal");
    app.require_subcommand(1, 1);

    auto format = [&](CLI::App* sub) {
        sub->add_option("--format", o.format, "json (default) or text")->check(CLI::IsMember({"json", "text"}));
    };
    auto file = [&](CLI::App* sub) { sub->add_option("file", o.file, "CGF file")->required(); };
    auto rank = [&](CLI::App* sub, bool required) {
        auto* opt = sub->add_option("--rank", o.rank, "rank m of the fundamental group");
        if (required) {
            opt->required();
        }
    };
    auto betti = [&](CLI::App* sub) { sub->add_option("--betti", o.betti, "Betti numbers B0,B1,B2,B3,B4"); };
    auto jobs = [&](CLI::App* sub) {
        sub->add_option("--jobs", o.jobs, "worker threads")->check(CLI::PositiveNumber);
    };

    std::vector<std::pair<CLI::App*, std::function<int(const detail::Options&, std::ostream&)>>> commands;

    auto* info = app.add_subcommand("info", "residue counts, f- and h-vectors, Euler characteristic");
    file(info);
    rank(info, false);
    betti(info);
    format(info);
    commands.emplace_back(info, detail::cmd_info);

    auto* genus = app.add_subcommand("genus", "rho for every cyclic permutation and the regular genus");
    file(genus);
    rank(genus, false);
    betti(genus);
    jobs(genus);
    format(genus);
    commands.emplace_back(genus, detail::cmd_genus);

    auto* check = app.add_subcommand("check", "classification and genus certificate at a given rank");
    file(check);
    rank(check, true);
    betti(check);
    format(check);
    commands.emplace_back(check, detail::cmd_check);

    auto* sum = app.add_subcommand("sum", "connected sum of two graphs, written as CGF");
    sum->add_option("file1", o.file, "first CGF file")->required();
    sum->add_option("file2", o.file2, "second CGF file")->required();
    sum->add_option("--v1", o.v1, "vertex removed from the first graph");
    sum->add_option("--v2", o.v2, "vertex removed from the second graph");
    sum->add_option("-o,--output", o.output, "write here instead of stdout");
    commands.emplace_back(sum, detail::cmd_sum);

    auto* verify = app.add_subcommand("verify", "run every identity check (exit 1 if any fails)");
    file(verify);
    rank(verify, false);
    betti(verify);
    format(verify);
    commands.emplace_back(verify, detail::cmd_verify);

    auto* enumerate = app.add_subcommand("enumerate", "census of small colored graphs");
    enumerate->add_option("--vertices", o.vertices, "number of vertices")->required();
    enumerate->add_option("--dim", o.dim, "dimension (colors = dim + 1)");
    enumerate->add_flag("--allow-uncontracted", o.allow_uncontracted, "drop the contractedness filter");
    enumerate->add_flag("--allow-nonspherical", o.allow_nonspherical, "drop the 3-residue sphere filter");
    enumerate->add_flag("--bipartite", o.bipartite, "keep bipartite graphs only");
    enumerate->add_option("--max", o.max_results, "stop after this many graphs")->check(CLI::PositiveNumber);
    jobs(enumerate);
    enumerate->add_option("--format", o.format, "text (CGF blocks, default) or json (JSON lines)")
        ->check(CLI::IsMember({"json", "text"}));
    commands.emplace_back(enumerate, detail::cmd_enumerate);

    auto* catalog = app.add_subcommand("verify-catalog", "cross-check every row of a catalog manifest");
    catalog->add_option("manifest", o.file, "manifest JSON")->required();
    format(catalog);
    commands.emplace_back(catalog, detail::cmd_verify_catalog);

    auto* random = app.add_subcommand("random", "seeded random colored graph, written as CGF");
    random->add_option("--dim", o.dim, "dimension")->required();
    random->add_option("--vertices", o.vertices, "number of vertices")->required();
    random->add_option("--seed", o.seed, "random seed")->required();
    commands.emplace_back(random, detail::cmd_random);

    std::reverse(args.begin(), args.end());
    try {
        app.parse(args);
    } catch (const CLI::CallForHelp&) {
        const auto parsed = app.get_subcommands();
        out << (parsed.empty() ? app.help() : parsed.front()->help());
        return kPass;
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.get_name() << ": " << e.what() << "\n";
        return kInputError;
    }
    if (enumerate->parsed() && enumerate->count("--format") == 0) {
        o.format = "text";
    }

    try {
        for (const auto& [sub, body] : commands) {
            if (sub->parsed()) {
                return body(o, out);
            }
        }
    } catch (const Error& e) {
        err << "error: " << e.what() << "\n";
        return kInputError;
    } catch (const std::logic_error& e) {
        err << "error: internal consistency check failed: " << e.what() << "\n";
        return kCheckFailed;
    }
    return kInputError;
}

} // namespace crystal::cli
