#pragma once

#include <algorithm>
#include <cstdint>
#include <limits>
#include <map>
#include <optional>
#include <string>
#include <thread>
#include <vector>

#include "crystal/colored_graph.hpp"
#include "crystal/complex.hpp"
#include "crystal/cyclic_permutation.hpp"
#include "crystal/error.hpp"

namespace crystal {

/// Regular-embedding data for one cyclic permutation. Genus values are
/// half-integers for non-bipartite graphs, so they are kept doubled.
struct RhoEntry {
    CyclicPermutation permutation;
    std::int64_t chi = 0;           // Euler characteristic of the embedding surface
    std::int64_t rho_times_two = 0; // 2 - chi
};

namespace detail {

inline void require_same_dim(const ColoredGraph& graph, const CyclicPermutation& eps)
{
    if (eps.dim() != graph.dim()) {
        throw Error(ErrorKind::DimMismatch, "permutation of dimension " + std::to_string(eps.dim()) +
                                                " used on a graph of dimension " + std::to_string(graph.dim()));
    }
}

inline RhoEntry rho_from_pair_counts(const CyclicPermutation& eps, std::size_t nu,
                                     const std::map<std::uint32_t, std::int64_t>& pair_counts)
{
    const auto d = static_cast<std::int64_t>(eps.dim());
    std::int64_t chi = (1 - d) * static_cast<std::int64_t>(nu) / 2;
    for (ColorSet p : eps.consecutive_pairs()) {
        chi += pair_counts.at(p.mask());
    }
    return RhoEntry{eps, chi, 2 - chi};
}

inline std::map<std::uint32_t, std::int64_t> pair_counts(const ColoredGraph& graph, unsigned jobs)
{
    const auto pairs = subsets_of_size(graph.dim(), 2);
    std::vector<std::int64_t> counts(pairs.size());
    jobs = std::clamp<unsigned>(jobs, 1, static_cast<unsigned>(pairs.size()));
    if (jobs == 1) {
        for (std::size_t i = 0; i < pairs.size(); ++i) {
            counts[i] = static_cast<std::int64_t>(residue_count(graph, pairs[i]));
        }
    } else {
        std::vector<std::jthread> workers;
        for (unsigned w = 0; w < jobs; ++w) {
            workers.emplace_back([&, w] {
                for (std::size_t i = w; i < pairs.size(); i += jobs) {
                    counts[i] = static_cast<std::int64_t>(residue_count(graph, pairs[i]));
                }
            });
        }
    }
    std::map<std::uint32_t, std::int64_t> out;
    for (std::size_t i = 0; i < pairs.size(); ++i) {
        out[pairs[i].mask()] = counts[i];
    }
    return out;
}

} // namespace detail

inline RhoEntry rho_eps(const ColoredGraph& graph, const CyclicPermutation& eps)
{
    detail::require_same_dim(graph, eps);
    std::map<std::uint32_t, std::int64_t> counts;
    for (ColorSet p : eps.consecutive_pairs()) {
        counts[p.mask()] = static_cast<std::int64_t>(residue_count(graph, p));
    }
    return detail::rho_from_pair_counts(eps, graph.num_vertices(), counts);
}

struct GenusReport {
    std::vector<RhoEntry> entries; // canonical permutation order
    std::int64_t regular_genus_times_two = 0;
    CyclicPermutation argmin{std::vector<Color>{0, 1, 2}};
    bool orientable = false;
};

/// Minimum of rho over all cyclic permutations. `jobs` > 1 spreads the
/// bicolored residue counts over worker threads; the result does not depend
/// on it.
inline GenusReport regular_genus(const ColoredGraph& graph, unsigned jobs = 1)
{
    const auto counts = detail::pair_counts(graph, jobs);
    GenusReport report;
    report.orientable = is_bipartite(graph);
    report.regular_genus_times_two = std::numeric_limits<std::int64_t>::max();
    for (const auto& eps : cyclic_permutations(graph.dim())) {
        auto entry = detail::rho_from_pair_counts(eps, graph.num_vertices(), counts);
        if (entry.rho_times_two < report.regular_genus_times_two) {
            report.regular_genus_times_two = entry.rho_times_two;
            report.argmin = eps;
        }
        report.entries.push_back(std::move(entry));
    }
    return report;
}

// ---------------------------------------------------------------------------

struct TripleResidual {
    ColorSet triple;
    std::int64_t residual = 0; // 2 g_ijk - (g_ij + g_ik + g_jk - nu/2)
};

struct GagliardiResult {
    bool holds = false;
    std::vector<TripleResidual> triples;
};

/// 2 g_ijk = g_ij + g_ik + g_jk - nu/2 for every color triple.
inline GagliardiResult gagliardi_relation_check(const ColoredGraph& graph)
{
    if (graph.dim() < 3) {
        throw Error(ErrorKind::UnsupportedDimension, "triple relation needs d >= 3");
    }
    const auto half_nu = static_cast<std::int64_t>(graph.num_vertices()) / 2;
    GagliardiResult r;
    r.holds = true;
    for (ColorSet t : subsets_of_size(graph.dim(), 3)) {
        const auto c = t.colors();
        const auto lhs = 2 * static_cast<std::int64_t>(residue_count(graph, t));
        const auto rhs = static_cast<std::int64_t>(residue_count(graph, ColorSet{c[0], c[1]}) +
                                                   residue_count(graph, ColorSet{c[0], c[2]}) +
                                                   residue_count(graph, ColorSet{c[1], c[2]})) -
                         half_nu;
        r.triples.push_back({t, lhs - rhs});
        r.holds = r.holds && lhs == rhs;
    }
    return r;
}

/// min over triples of g_ijk - 1; bounds the rank of the fundamental group.
inline std::int64_t rank_upper_bound(const ColoredGraph& graph)
{
    detail::require_dim(graph, 4);
    if (!is_contracted(graph)) {
        throw Error(ErrorKind::NotContracted, "rank bound requires a contracted graph");
    }
    std::int64_t best = std::numeric_limits<std::int64_t>::max();
    for (ColorSet t : subsets_of_size(4, 3)) {
        best = std::min(best, static_cast<std::int64_t>(residue_count(graph, t)) - 1);
    }
    return best;
}

/// Throws RankInconsistent unless 0 <= rank_m <= rank_upper_bound(graph).
inline void validate_rank(const ColoredGraph& graph, std::int64_t rank_m)
{
    const auto bound = rank_upper_bound(graph);
    if (rank_m < 0 || rank_m > bound) {
        throw Error(ErrorKind::RankInconsistent, "rank " + std::to_string(rank_m) + " is outside [0, " +
                                                     std::to_string(bound) + "] allowed by the triple residues");
    }
}

/// 2 chi + 5 m - 4: the lower bound for the regular genus of a closed 4-manifold.
constexpr std::int64_t genus_lower_bound(std::int64_t chi, std::int64_t rank_m) noexcept
{
    return 2 * chi + 5 * rank_m - 4;
}

// ---------------------------------------------------------------------------
// Classification

enum class CrystallizationClass { Simple, SemiSimple, WeakSemiSimple, None };

inline std::string_view to_string(CrystallizationClass c) noexcept
{
    switch (c) {
    case CrystallizationClass::Simple: return "Simple";
    case CrystallizationClass::SemiSimple: return "SemiSimple";
    case CrystallizationClass::WeakSemiSimple: return "WeakSemiSimple";
    case CrystallizationClass::None: return "None";
    }
    return "Unknown";
}

struct Classification {
    CrystallizationClass kind = CrystallizationClass::None;
    std::int64_t rank = 0;
    /// Cyclic order whose five consecutive triples all have m+1 residues.
    std::optional<CyclicPermutation> witness_order;
    /// Renames witness_order[i] to i; the relabelled graph has
    /// g_{i,i+1,i+2} = m+1 for all i mod 5.
    std::optional<ColorPermutation> witness_relabeling;
    /// The cyclic order whose skip triples are the witness's consecutive
    /// triples; its rho attains 2 chi + 5 m - 4.
    std::optional<CyclicPermutation> genus_order;
};

/// The labelled predicate: g_{i,i+1,i+2} = m+1 for i in Z_5, colors as given.
inline bool is_weak_semi_simple_labeled(const ColoredGraph& graph, std::int64_t rank_m)
{
    detail::require_dim(graph, 4);
    for (ColorSet t : CyclicPermutation({0, 1, 2, 3, 4}).consecutive_triples()) {
        if (static_cast<std::int64_t>(residue_count(graph, t)) != rank_m + 1) {
            return false;
        }
    }
    return true;
}

/// Detection is closed under color relabelling: all twelve cyclic classes
/// are tried, and the first one (canonical order) is reported as witness.
inline Classification classify(const ColoredGraph& graph, std::int64_t rank_m)
{
    detail::require_dim(graph, 4);
    validate_rank(graph, rank_m);

    std::map<std::uint32_t, std::int64_t> triple;
    bool all_at_rank = true;
    for (ColorSet t : subsets_of_size(4, 3)) {
        triple[t.mask()] = static_cast<std::int64_t>(residue_count(graph, t));
        all_at_rank = all_at_rank && triple[t.mask()] == rank_m + 1;
    }

    Classification out;
    out.rank = rank_m;
    for (const auto& delta : cyclic_permutations(4)) {
        const auto cons = delta.consecutive_triples();
        const bool ok = std::all_of(cons.begin(), cons.end(),
                                    [&](ColorSet t) { return triple.at(t.mask()) == rank_m + 1; });
        if (!ok) {
            continue;
        }
        ColorPermutation relabeling(5);
        for (int i = 0; i < 5; ++i) {
            relabeling[static_cast<std::size_t>(delta.at(i))] = i;
        }
        out.witness_order = delta;
        out.witness_relabeling = relabeling;
        out.genus_order = CyclicPermutation({delta.at(0), delta.at(3), delta.at(1), delta.at(4), delta.at(2)});
        break;
    }

    if (all_at_rank && rank_m == 0) {
        out.kind = CrystallizationClass::Simple;
    } else if (all_at_rank) {
        out.kind = CrystallizationClass::SemiSimple;
    } else if (out.witness_order) {
        out.kind = CrystallizationClass::WeakSemiSimple;
    } else {
        out.kind = CrystallizationClass::None;
    }
    return out;
}

} // namespace crystal

namespace crystal {

struct RhoIdentityResult {
    bool holds = false;
    std::int64_t euler_characteristic = 0;
    /// 2 rho_eps - 2 (2 chi - 9 + sum of skip-triple residue counts), per permutation.
    std::vector<std::pair<CyclicPermutation, std::int64_t>> residuals;
};

/// rho_eps = 2 chi - 9 + sum_i g_{e_i, e_{i+2}, e_{i+4}} for every cyclic
/// permutation: the genus formula with the rank eliminated.
inline RhoIdentityResult rho_identity_check(const ColoredGraph& graph)
{
    detail::require_dim(graph, 4);
    detail::require_crystallization(graph);
    RhoIdentityResult r;
    r.euler_characteristic = euler_characteristic(graph);
    r.holds = true;
    for (const auto& eps : cyclic_permutations(4)) {
        std::int64_t skip = 0;
        for (ColorSet s : eps.skip_triples()) {
            skip += static_cast<std::int64_t>(residue_count(graph, s));
        }
        const auto residual = rho_eps(graph, eps).rho_times_two - 2 * (2 * r.euler_characteristic - 9 + skip);
        r.holds = r.holds && residual == 0;
        r.residuals.emplace_back(eps, residual);
    }
    return r;
}

} // namespace crystal
