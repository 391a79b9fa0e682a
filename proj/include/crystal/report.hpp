#pragma once

// JSON views of the library's results. Field names are stable; see
// docs/report-schema.md.

#include <optional>
#include <string>

#include "json.hpp"

#include "crystal/certificate.hpp"
#include "crystal/colored_graph.hpp"
#include "crystal/complex.hpp"
#include "crystal/enumerator.hpp"
#include "crystal/genus.hpp"
#include "crystal/linear_system.hpp"

namespace crystal::report {

using nlohmann::ordered_json;

inline std::string rational_string(const Rational& r)
{
    return r.denominator() == 1 ? std::to_string(r.numerator())
                                : std::to_string(r.numerator()) + "/" + std::to_string(r.denominator());
}

inline ordered_json residue_json(const Residue& r)
{
    return {{"colors", r.colors.colors()}, {"vertices", r.vertices}};
}

inline ordered_json manifold_json(const ManifoldStatus& s)
{
    ordered_json j{{"verdict", std::string(to_string(s.verdict))}, {"diagnostic", s.diagnostic}};
    j["witness"] = s.witness ? residue_json(*s.witness) : ordered_json(nullptr);
    return j;
}

inline ordered_json novik_swartz_json(const NovikSwartzResult& r)
{
    return {{"bound_holds", r.bound_holds},
            {"equality", r.equality},
            {"vertex_bound_triggered", r.vertex_bound_triggered},
            {"weighted_betti_sum", r.weighted_betti_sum},
            {"num_vertices", r.num_vertices},
            {"vertex_bound", r.vertex_bound}};
}

/// f_vector, h_vector, euler_characteristic, dehn_sommerville,
/// manifold_status, novik_swartz.
inline ordered_json complex_json(const ColoredGraph& graph, const std::optional<BettiVector>& betti = std::nullopt,
                                 std::optional<std::int64_t> rank = std::nullopt)
{
    const auto fv = f_vector(graph);
    ordered_json j;
    j["f_vector"] = fv.f;
    j["h_vector"] = h_vector(fv).h;
    j["euler_characteristic"] = euler_characteristic(fv);
    if (graph.dim() == 4) {
        const auto ds = dehn_sommerville_check(fv);
        j["dehn_sommerville"] = {{"holds", ds.holds},
                                 {"residual_edges", ds.residual_edges},
                                 {"residual_facets", ds.residual_facets}};
    } else {
        j["dehn_sommerville"] = nullptr;
    }
    j["manifold_status"] = graph.dim() <= 4 ? manifold_json(manifold_check(graph)) : ordered_json(nullptr);
    if (betti && graph.dim() == 4) {
        j["novik_swartz"] = novik_swartz_json(novik_swartz_check(graph, *betti, rank.value_or(betti->b[1])));
    } else {
        j["novik_swartz"] = nullptr;
    }
    return j;
}

inline ordered_json info_json(const ColoredGraph& graph, const std::optional<BettiVector>& betti = std::nullopt,
                              std::optional<std::int64_t> rank = std::nullopt)
{
    ordered_json j;
    j["dim"] = graph.dim();
    j["vertices"] = graph.num_vertices();
    j["contracted"] = is_contracted(graph);
    j["orientable"] = is_bipartite(graph);
    ordered_json counts = ordered_json::object();
    for (int k = 0; k <= graph.num_colors(); ++k) {
        for (ColorSet s : subsets_of_size(graph.dim(), k)) {
            counts[s.to_string()] = residue_count(graph, s);
        }
    }
    j["residue_counts"] = std::move(counts);
    j.update(complex_json(graph, betti, rank));
    return j;
}

inline ordered_json classification_json(const Classification& c)
{
    ordered_json j{{"kind", std::string(to_string(c.kind))}, {"rank", c.rank}};
    j["witness_order"] = c.witness_order ? ordered_json(c.witness_order->to_string()) : ordered_json(nullptr);
    j["witness_relabeling"] = c.witness_relabeling ? ordered_json(*c.witness_relabeling) : ordered_json(nullptr);
    j["genus_order"] = c.genus_order ? ordered_json(c.genus_order->to_string()) : ordered_json(nullptr);
    return j;
}

inline ordered_json certificate_json(const std::optional<Certificate>& c)
{
    if (!c) {
        return nullptr;
    }
    ordered_json routes = ordered_json::array();
    for (auto r : c->routes) {
        routes.push_back(std::string(to_string(r)));
    }
    return {{"route", std::string(to_string(c->route))},
            {"routes", routes},
            {"genus", c->genus},
            {"euler_characteristic", c->euler_characteristic},
            {"rank", c->rank},
            {"manifold_status", std::string(to_string(c->manifold))}};
}

inline ordered_json linear_system_json(const LinearSystemRecord& r)
{
    ordered_json j{{"passed", r.passed()},
                   {"inverse_matches_reference", r.inverse_matches_reference},
                   {"product_is_identity", r.product_is_identity},
                   {"system_holds", r.system_holds},
                   {"b_splits", r.b_splits},
                   {"vertex_split", r.vertex_split},
                   {"solution_holds", r.solution_holds},
                   {"table_matches_reference", r.table_matches_reference},
                   {"table_pattern_holds", r.table_pattern_holds},
                   {"collapse_holds", r.collapse_holds},
                   {"expansion_holds", r.expansion_holds},
                   {"corrected_formula_holds", r.corrected_formula_holds},
                   {"third_coefficient_holds", r.third_coefficient_holds},
                   {"rank", r.rank},
                   {"p_bar", r.p_bar},
                   {"q", r.q}};
    ordered_json rows = ordered_json::object();
    for (const auto& row : r.coefficient_table) {
        ordered_json coeffs = ordered_json::array();
        for (const auto& c : row.coefficients) {
            coeffs.push_back(rational_string(c));
        }
        rows[row.permutation.to_string()] = coeffs;
    }
    j["coefficient_table"] = std::move(rows);
    return j;
}

inline ordered_json genus_json(const GenusReport& report)
{
    ordered_json by_perm = ordered_json::object();
    for (const auto& e : report.entries) {
        by_perm[e.permutation.to_string()] = {{"chi", e.chi}, {"rho_times_two", e.rho_times_two}};
    }
    return {{"rho_by_permutation", by_perm},
            {"regular_genus_times_two", report.regular_genus_times_two},
            {"argmin_permutation", report.argmin.to_string()},
            {"orientable", report.orientable}};
}

inline ordered_json enumerated_json(const EnumeratedGraph& e)
{
    ordered_json j{{"canonical_form", e.form.hex()},
                   {"dim", e.graph.dim()},
                   {"vertices", e.graph.num_vertices()},
                   {"contracted", is_contracted(e.graph)},
                   {"orientable", is_bipartite(e.graph)},
                   {"euler_characteristic", euler_characteristic(e.graph)}};
    j["manifold_status"] = e.manifold ? ordered_json(std::string(to_string(*e.manifold))) : ordered_json(nullptr);
    j["regular_genus_times_two"] = regular_genus(e.graph).regular_genus_times_two;
    ordered_json matchings = ordered_json::array();
    for (Color c = 0; c <= e.graph.dim(); ++c) {
        auto m = e.graph.matching(c);
        matchings.push_back(std::vector<Vertex>(m.begin(), m.end()));
    }
    j["matchings"] = std::move(matchings);
    return j;
}

namespace detail {

inline void flatten(const ordered_json& j, const std::string& path, std::string& out)
{
    if (j.is_object() && !j.empty()) {
        for (const auto& [key, value] : j.items()) {
            flatten(value, path.empty() ? key : path + "." + key, out);
        }
    } else if (j.is_array() && !j.empty() && (j.front().is_object() || j.front().is_array())) {
        for (std::size_t i = 0; i < j.size(); ++i) {
            flatten(j[i], path + "[" + std::to_string(i) + "]", out);
        }
    } else {
        out += path + ": " + (j.is_string() ? j.get<std::string>() : j.dump()) + "\n";
    }
}

} // namespace detail

/// One "path: value" line per JSON leaf.
inline std::string to_text(const ordered_json& j)
{
    std::string out;
    detail::flatten(j, "", out);
    return out;
}

} // namespace crystal::report
