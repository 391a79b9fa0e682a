#pragma once

#include <array>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "crystal/colored_graph.hpp"
#include "crystal/error.hpp"

namespace crystal {

/// Face counts f_0 ... f_d of the simplicial cell-complex of a colored graph.
struct FVector {
    std::vector<std::int64_t> f;

    [[nodiscard]] int dim() const noexcept { return static_cast<int>(f.size()) - 1; }
    [[nodiscard]] std::int64_t operator[](std::size_t i) const { return f.at(i); }

    friend bool operator==(const FVector&, const FVector&) = default;
};

/// h_0 ... h_{d+1}.
struct HVector {
    std::vector<std::int64_t> h;

    [[nodiscard]] std::int64_t operator[](std::size_t i) const { return h.at(i); }

    friend bool operator==(const HVector&, const HVector&) = default;
};

/// Betti numbers b_0 ... b_4 over some field. Supplied by the caller.
struct BettiVector {
    std::array<std::int64_t, 5> b{};

    [[nodiscard]] std::int64_t alternating_sum() const noexcept { return b[0] - b[1] + b[2] - b[3] + b[4]; }
    friend bool operator==(const BettiVector&, const BettiVector&) = default;
};

namespace detail {

inline void require_dim(const ColoredGraph& graph, int dim)
{
    if (graph.dim() != dim) {
        throw Error(ErrorKind::UnsupportedDimension,
                    "operation requires dimension " + std::to_string(dim) + ", graph has " + std::to_string(graph.dim()));
    }
}

inline std::int64_t binomial(std::int64_t n, std::int64_t k)
{
    if (k < 0 || k > n) {
        return 0;
    }
    std::int64_t r = 1;
    for (std::int64_t i = 1; i <= k; ++i) {
        r = r * (n - k + i) / i;
    }
    return r;
}

} // namespace detail

/// The i-simplices of the complex correspond to the residues of the
/// complementary d-i colors, summed over all (i+1)-subsets of colors.
inline FVector f_vector(const ColoredGraph& graph)
{
    const int d = graph.dim();
    FVector out{std::vector<std::int64_t>(static_cast<std::size_t>(d) + 1, 0)};
    for (int j = 0; j <= d; ++j) {
        for (ColorSet s : subsets_of_size(d, j + 1)) {
            out.f[static_cast<std::size_t>(j)] +=
                static_cast<std::int64_t>(residue_count(graph, s.complement(d)));
        }
    }
    return out;
}

inline std::int64_t euler_characteristic(const FVector& fv)
{
    std::int64_t chi = 0;
    for (std::size_t i = 0; i < fv.f.size(); ++i) {
        chi += (i % 2 == 0 ? 1 : -1) * fv.f[i];
    }
    return chi;
}

inline std::int64_t euler_characteristic(const ColoredGraph& graph)
{
    return euler_characteristic(f_vector(graph));
}

/// The three 4-dimensional Dehn-Sommerville relations. The first one only
/// defines chi; `holds` refers to the two homogeneous ones.
struct DehnSommervilleResult {
    bool holds = false;
    std::int64_t euler_characteristic = 0;
    std::int64_t residual_edges = 0;  // 2f1 - 3f2 + 4f3 - 5f4
    std::int64_t residual_facets = 0; // 2f3 - 5f4
};

inline DehnSommervilleResult dehn_sommerville_check(const FVector& fv)
{
    if (fv.dim() != 4) {
        throw Error(ErrorKind::UnsupportedDimension, "Dehn-Sommerville relations are implemented for dimension 4");
    }
    DehnSommervilleResult r;
    r.euler_characteristic = euler_characteristic(fv);
    r.residual_edges = 2 * fv[1] - 3 * fv[2] + 4 * fv[3] - 5 * fv[4];
    r.residual_facets = 2 * fv[3] - 5 * fv[4];
    r.holds = r.residual_edges == 0 && r.residual_facets == 0;
    return r;
}

inline DehnSommervilleResult dehn_sommerville_check(const ColoredGraph& graph)
{
    detail::require_dim(graph, 4);
    return dehn_sommerville_check(f_vector(graph));
}

/// Expansion of sum_i h_i x^{d+1-i} = sum_i f_{i-1} (x-1)^{d+1-i} with f_{-1} = 1.
inline HVector h_vector(const FVector& fv)
{
    const std::int64_t n = fv.dim() + 1;
    auto f_shifted = [&](std::int64_t i) { return i == 0 ? std::int64_t{1} : fv[static_cast<std::size_t>(i - 1)]; };
    HVector out{std::vector<std::int64_t>(static_cast<std::size_t>(n) + 1, 0)};
    for (std::int64_t k = 0; k <= n; ++k) {
        std::int64_t hk = 0;
        for (std::int64_t i = 0; i <= k; ++i) {
            const std::int64_t sign = (k - i) % 2 == 0 ? 1 : -1;
            hk += sign * detail::binomial(n - i, k - i) * f_shifted(i);
        }
        out.h[static_cast<std::size_t>(k)] = hk;
    }
    return out;
}

inline HVector h_vector(const ColoredGraph& graph)
{
    return h_vector(f_vector(graph));
}

// ---------------------------------------------------------------------------
// Manifold condition

enum class ManifoldVerdict { Verified, Unverified, NotManifold };

inline std::string_view to_string(ManifoldVerdict v) noexcept
{
    switch (v) {
    case ManifoldVerdict::Verified: return "Verified";
    case ManifoldVerdict::Unverified: return "Unverified";
    case ManifoldVerdict::NotManifold: return "NotManifold";
    }
    return "Unknown";
}

struct ManifoldStatus {
    ManifoldVerdict verdict = ManifoldVerdict::Unverified;
    std::optional<Residue> witness;
    std::string diagnostic;
};

namespace detail {

/// Lazily computed component labels, keyed by color mask.
class ResidueCache {
public:
    explicit ResidueCache(const ColoredGraph& graph) : graph_(graph) {}

    const ComponentLabels& labels(ColorSet colors)
    {
        auto it = cache_.find(colors.mask());
        if (it == cache_.end()) {
            it = cache_.emplace(colors.mask(), component_labels(graph_, colors)).first;
        }
        return it->second;
    }

    /// For each component of `outer`, the number of components of `inner`
    /// (a subset of outer) that it contains.
    std::vector<std::int64_t> nested_counts(ColorSet outer, ColorSet inner)
    {
        const auto& out_labels = labels(outer);
        const auto& in_labels = labels(inner);
        std::vector<std::int64_t> counts(out_labels.count, 0);
        std::vector<bool> seen(in_labels.count, false);
        for (Vertex v = 0; v < graph_.num_vertices(); ++v) {
            if (!seen[in_labels.label[v]]) {
                seen[in_labels.label[v]] = true;
                ++counts[out_labels.label[v]];
            }
        }
        return counts;
    }

    std::vector<std::int64_t> component_sizes(ColorSet colors)
    {
        const auto& l = labels(colors);
        std::vector<std::int64_t> sizes(l.count, 0);
        for (auto lab : l.label) {
            ++sizes[lab];
        }
        return sizes;
    }

    Residue residue(ColorSet colors, std::uint32_t component)
    {
        const auto& l = labels(colors);
        Residue r{colors, {}};
        for (Vertex v = 0; v < graph_.num_vertices(); ++v) {
            if (l.label[v] == component) {
                r.vertices.push_back(v);
            }
        }
        return r;
    }

private:
    const ColoredGraph& graph_;
    std::map<std::uint32_t, ComponentLabels> cache_;
};

/// Index of the first 3-colored residue whose surface is not a sphere.
/// A 3-colored component with n vertices has Euler characteristic
/// g_ij + g_ik + g_jk - n/2.
inline std::optional<Residue> first_nonspherical_triple(const ColoredGraph& graph, ResidueCache& cache)
{
    for (ColorSet triple : subsets_of_size(graph.dim(), 3)) {
        auto sizes = cache.component_sizes(triple);
        std::vector<std::int64_t> chi(sizes.size(), 0);
        for (std::size_t k = 0; k < sizes.size(); ++k) {
            chi[k] = -sizes[k] / 2;
        }
        for (ColorSet pair : subsets_of_size(graph.dim(), 2)) {
            if (!pair.is_subset_of(triple)) {
                continue;
            }
            auto counts = cache.nested_counts(triple, pair);
            for (std::size_t k = 0; k < counts.size(); ++k) {
                chi[k] += counts[k];
            }
        }
        for (std::size_t k = 0; k < chi.size(); ++k) {
            if (chi[k] != 2) {
                return cache.residue(triple, static_cast<std::uint32_t>(k));
            }
        }
    }
    return std::nullopt;
}

/// First 4-colored residue admitting no genus-zero regular embedding.
/// For a 4-colored component with n vertices and cyclic color order
/// (a,b,c,d), the embedding surface has Euler characteristic
/// g_ab + g_bc + g_cd + g_da - n.
inline std::optional<Residue> first_positive_genus_quadruple(const ColoredGraph& graph, ResidueCache& cache)
{
    for (ColorSet quad : subsets_of_size(graph.dim(), 4)) {
        const auto c = quad.colors();
        auto sizes = cache.component_sizes(quad);
        auto pair_counts = [&](Color x, Color y) { return cache.nested_counts(quad, ColorSet{x, y}); };
        const std::array<std::array<Color, 4>, 3> orders{{
            {c[0], c[1], c[2], c[3]},
            {c[0], c[1], c[3], c[2]},
            {c[0], c[2], c[1], c[3]},
        }};
        std::vector<bool> sphere(sizes.size(), false);
        for (const auto& o : orders) {
            std::vector<std::int64_t> chi(sizes.size());
            for (std::size_t k = 0; k < sizes.size(); ++k) {
                chi[k] = -sizes[k];
            }
            for (int i = 0; i < 4; ++i) {
                auto counts = pair_counts(o[static_cast<std::size_t>(i)], o[static_cast<std::size_t>((i + 1) % 4)]);
                for (std::size_t k = 0; k < counts.size(); ++k) {
                    chi[k] += counts[k];
                }
            }
            for (std::size_t k = 0; k < chi.size(); ++k) {
                sphere[k] = sphere[k] || chi[k] == 2;
            }
        }
        for (std::size_t k = 0; k < sphere.size(); ++k) {
            if (!sphere[k]) {
                return cache.residue(quad, static_cast<std::uint32_t>(k));
            }
        }
    }
    return std::nullopt;
}

} // namespace detail

/**
 * Decides whether the complex of a graph is a closed PL manifold, as far as
 * decidable cheap conditions allow.
 *
 * NotManifold: some 3-colored residue is not a 2-sphere.
 * Verified: additionally every 4-colored residue has regular genus zero and
 * therefore represents the 3-sphere.
 * Unverified: 3-residues are spheres but some 4-residue has positive genus
 * (it may still be a sphere).
 *
 * Dimensions 2 (always a surface), 3 and 4 are supported.
 */
inline ManifoldStatus manifold_check(const ColoredGraph& graph)
{
    if (graph.dim() > 4) {
        throw Error(ErrorKind::UnsupportedDimension, "manifold check is implemented for dimensions 2..4");
    }
    ManifoldStatus status;
    if (graph.dim() == 2) {
        status.verdict = ManifoldVerdict::Verified;
        return status;
    }
    detail::ResidueCache cache(graph);
    if (auto bad = detail::first_nonspherical_triple(graph, cache)) {
        status.verdict = ManifoldVerdict::NotManifold;
        status.diagnostic = "residue on colors " + bad->colors.to_string() + " containing vertex " +
                            std::to_string(bad->vertices.front()) + " is not a 2-sphere";
        status.witness = std::move(bad);
        return status;
    }
    if (graph.dim() == 3) {
        status.verdict = ManifoldVerdict::Verified;
        return status;
    }
    if (auto open = detail::first_positive_genus_quadruple(graph, cache)) {
        status.verdict = ManifoldVerdict::Unverified;
        status.diagnostic = "residue on colors " + open->colors.to_string() + " containing vertex " +
                            std::to_string(open->vertices.front()) + " has no genus-zero regular embedding";
        status.witness = std::move(open);
        return status;
    }
    status.verdict = ManifoldVerdict::Verified;
    return status;
}

namespace detail {

/// Contracted and not refuted as a manifold: the standing hypothesis of the
/// counting identities below.
inline void require_crystallization(const ColoredGraph& graph)
{
    if (!is_contracted(graph)) {
        throw Error(ErrorKind::NotAManifoldCrystallization, "graph is not contracted");
    }
    auto status = manifold_check(graph);
    if (status.verdict == ManifoldVerdict::NotManifold) {
        throw Error(ErrorKind::NotAManifoldCrystallization, status.diagnostic);
    }
}

} // namespace detail

struct VertexIdentityResult {
    bool holds = false;
    std::int64_t num_vertices = 0;
    std::int64_t euler_characteristic = 0;
    std::int64_t triple_residue_sum = 0;
    std::int64_t predicted = 0; // 6 chi + 2 sum g_ijk - 30
};

/// nu = 6 chi + 2 sum_{i<j<k} g_ijk - 30 for crystallizations of closed 4-manifolds.
inline VertexIdentityResult vertex_identity_check(const ColoredGraph& graph)
{
    detail::require_dim(graph, 4);
    detail::require_crystallization(graph);
    VertexIdentityResult r;
    r.num_vertices = static_cast<std::int64_t>(graph.num_vertices());
    r.euler_characteristic = euler_characteristic(graph);
    for (ColorSet t : subsets_of_size(4, 3)) {
        r.triple_residue_sum += static_cast<std::int64_t>(residue_count(graph, t));
    }
    r.predicted = 6 * r.euler_characteristic + 2 * r.triple_residue_sum - 30;
    r.holds = r.predicted == r.num_vertices;
    return r;
}

struct NovikSwartzResult {
    bool bound_holds = false;            // b0 + 4b1 + 6b2 + 4b3 + b4 <= nu
    bool equality = false;               // ... with equality
    bool vertex_bound_triggered = false; // nu <= 6 chi + 10 (2m - 1)
    std::int64_t weighted_betti_sum = 0;
    std::int64_t num_vertices = 0;
    std::int64_t vertex_bound = 0;
};

inline void validate_betti(const BettiVector& betti)
{
    for (auto b : betti.b) {
        if (b < 0) {
            throw Error(ErrorKind::ConfigInvalid, "Betti numbers must be non-negative");
        }
    }
    if (betti.b[0] < 1) {
        throw Error(ErrorKind::ConfigInvalid, "b0 must be at least 1");
    }
}

/// Aggregate Novik-Swartz bound on the number of facets together with the
/// vertex-count hypothesis it feeds.
inline NovikSwartzResult novik_swartz_check(const ColoredGraph& graph, const BettiVector& betti, std::int64_t rank_m)
{
    detail::require_dim(graph, 4);
    validate_betti(betti);
    const auto chi = euler_characteristic(graph);
    if (betti.alternating_sum() != chi) {
        throw Error(ErrorKind::BettiEulerMismatch, "alternating Betti sum " + std::to_string(betti.alternating_sum()) +
                                                       " differs from Euler characteristic " + std::to_string(chi));
    }
    if (betti.b[0] != betti.b[4] || betti.b[1] != betti.b[3]) {
        throw Error(ErrorKind::BettiNotSymmetric, "Betti numbers of a closed orientable 4-manifold satisfy "
                                                  "b0 = b4 and b1 = b3");
    }
    if (rank_m < betti.b[1]) {
        throw Error(ErrorKind::RankTooSmall, "rank " + std::to_string(rank_m) + " is smaller than b1 = " +
                                                 std::to_string(betti.b[1]));
    }
    const auto& b = betti.b;
    NovikSwartzResult r;
    r.num_vertices = static_cast<std::int64_t>(graph.num_vertices());
    r.weighted_betti_sum = b[0] + 4 * b[1] + 6 * b[2] + 4 * b[3] + b[4];
    r.bound_holds = r.weighted_betti_sum <= r.num_vertices;
    r.equality = r.weighted_betti_sum == r.num_vertices;
    r.vertex_bound = 6 * chi + 10 * (2 * rank_m - 1);
    r.vertex_bound_triggered = r.num_vertices <= r.vertex_bound;
    return r;
}

} // namespace crystal
