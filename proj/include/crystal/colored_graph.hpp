#pragma once

#include <algorithm>
#include <cstdint>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "crystal/color_set.hpp"
#include "crystal/error.hpp"
#include "crystal/union_find.hpp"

namespace crystal {

using Vertex = std::uint32_t;

/// Unvalidated graph data as read from a file or assembled by a generator.
/// matchings[c][v] is the color-c neighbour of v.
struct RawGraph {
    int dim = 0;
    std::size_t num_vertices = 0;
    std::vector<std::vector<Vertex>> matchings;
};

/**
 * A (d+1)-regular properly edge-colored multigraph, stored as one
 * fixed-point-free involution per color on the vertex set {0, ..., nu-1}.
 *
 * Instances only come out of validate() (or operations built on it), so every
 * ColoredGraph satisfies: each matching is a fixed-point-free involution, the
 * vertex count is even and positive, and the graph on all colors is connected.
 * Graphs are immutable.
 */
class ColoredGraph {
public:
    [[nodiscard]] int dim() const noexcept { return dim_; }
    [[nodiscard]] int num_colors() const noexcept { return dim_ + 1; }
    [[nodiscard]] std::size_t num_vertices() const noexcept { return matchings_.empty() ? 0 : matchings_[0].size(); }
    [[nodiscard]] ColorSet all_colors() const noexcept { return ColorSet::full(dim_); }

    [[nodiscard]] Vertex partner(Color c, Vertex v) const
    {
        return matchings_[static_cast<std::size_t>(c)][v];
    }

    [[nodiscard]] std::span<const Vertex> matching(Color c) const
    {
        return matchings_[static_cast<std::size_t>(c)];
    }

    [[nodiscard]] RawGraph raw() const { return RawGraph{dim_, num_vertices(), matchings_}; }

    friend bool operator==(const ColoredGraph&, const ColoredGraph&) = default;

    friend ColoredGraph validate(RawGraph raw);

private:
    ColoredGraph(int dim, std::vector<std::vector<Vertex>> matchings)
        : dim_(dim), matchings_(std::move(matchings))
    {
    }

    int dim_;
    std::vector<std::vector<Vertex>> matchings_;
};

namespace detail {

inline void require_colors(const ColoredGraph& graph, ColorSet colors)
{
    if (!colors.fits(graph.dim())) {
        throw Error(ErrorKind::ColorOutOfRange,
                    "color set " + colors.to_string() + " is not contained in {0.." + std::to_string(graph.dim()) + "}");
    }
}

inline void require_vertex(const ColoredGraph& graph, Vertex v)
{
    if (v >= graph.num_vertices()) {
        throw Error(ErrorKind::VertexOutOfRange, "vertex " + std::to_string(v) + " is not in a graph with " +
                                                     std::to_string(graph.num_vertices()) + " vertices");
    }
}

inline DisjointSets components_of(const ColoredGraph& graph, ColorSet colors)
{
    DisjointSets sets(graph.num_vertices());
    for (Color c : colors.colors()) {
        auto m = graph.matching(c);
        for (Vertex v = 0; v < m.size(); ++v) {
            if (m[v] > v) {
                sets.unite(v, m[v]);
            }
        }
    }
    return sets;
}

} // namespace detail

/// Checks every structural condition and returns the immutable graph.
inline ColoredGraph validate(RawGraph raw)
{
    if (raw.dim < 2 || raw.dim > kMaxDim) {
        throw Error(ErrorKind::BadColorCount, "dimension " + std::to_string(raw.dim) + " is outside [2, " +
                                                  std::to_string(kMaxDim) + "]");
    }
    if (raw.matchings.size() != static_cast<std::size_t>(raw.dim) + 1) {
        throw Error(ErrorKind::BadColorCount, "expected " + std::to_string(raw.dim + 1) + " color classes, got " +
                                                  std::to_string(raw.matchings.size()));
    }
    const std::size_t nu = raw.num_vertices;
    if (nu == 0 || nu % 2 != 0) {
        throw Error(ErrorKind::OddVertexCount, "vertex count must be positive and even, got " + std::to_string(nu));
    }
    if (nu > std::size_t{0xFFFFFFFF}) {
        throw Error(ErrorKind::VertexOutOfRange, "vertex count exceeds 32-bit indices");
    }
    for (std::size_t c = 0; c < raw.matchings.size(); ++c) {
        const auto& m = raw.matchings[c];
        if (m.size() != nu) {
            throw Error(ErrorKind::VertexOutOfRange, "color " + std::to_string(c) + " lists " +
                                                         std::to_string(m.size()) + " entries for " +
                                                         std::to_string(nu) + " vertices");
        }
        for (std::size_t v = 0; v < nu; ++v) {
            if (m[v] >= nu) {
                throw Error(ErrorKind::VertexOutOfRange, "color " + std::to_string(c) + " maps vertex " +
                                                             std::to_string(v) + " to " + std::to_string(m[v]));
            }
        }
        for (std::size_t v = 0; v < nu; ++v) {
            if (m[v] == v) {
                throw Error(ErrorKind::FixedPoint,
                            "color " + std::to_string(c) + " maps vertex " + std::to_string(v) + " to itself");
            }
            if (m[m[v]] != v) {
                throw Error(ErrorKind::NotInvolution, "color " + std::to_string(c) + " maps " + std::to_string(v) +
                                                          " -> " + std::to_string(m[v]) + " -> " +
                                                          std::to_string(m[m[v]]));
            }
        }
    }
    ColoredGraph graph(raw.dim, std::move(raw.matchings));
    if (detail::components_of(graph, graph.all_colors()).components() != 1) {
        throw Error(ErrorKind::Disconnected, "the graph on all colors is not connected");
    }
    return graph;
}

/// Number of connected components of the subgraph restricted to `colors`.
/// The empty color set yields the vertex count (isolated vertices).
inline std::size_t residue_count(const ColoredGraph& graph, ColorSet colors)
{
    detail::require_colors(graph, colors);
    return detail::components_of(graph, colors).components();
}

/// Component index of every vertex in the subgraph restricted to `colors`.
/// Components are numbered by ascending minimal vertex.
struct ComponentLabels {
    std::vector<std::uint32_t> label;
    std::size_t count = 0;
};

inline ComponentLabels component_labels(const ColoredGraph& graph, ColorSet colors)
{
    detail::require_colors(graph, colors);
    auto sets = detail::components_of(graph, colors);
    const std::size_t nu = graph.num_vertices();
    constexpr auto unset = ~std::uint32_t{0};
    std::vector<std::uint32_t> root_label(nu, unset);
    ComponentLabels out;
    out.label.resize(nu);
    for (Vertex v = 0; v < nu; ++v) {
        auto r = sets.find(v);
        if (root_label[r] == unset) {
            root_label[r] = static_cast<std::uint32_t>(out.count++);
        }
        out.label[v] = root_label[r];
    }
    return out;
}

/// One connected component of the subgraph restricted to a color set.
struct Residue {
    ColorSet colors;
    std::vector<Vertex> vertices; // ascending

    friend bool operator==(const Residue&, const Residue&) = default;
};

/// Components in ascending order of their minimal vertex.
inline std::vector<Residue> residues(const ColoredGraph& graph, ColorSet colors)
{
    auto labels = component_labels(graph, colors);
    std::vector<Residue> out(labels.count, Residue{colors, {}});
    for (Vertex v = 0; v < graph.num_vertices(); ++v) {
        out[labels.label[v]].vertices.push_back(v);
    }
    return out;
}

/// Residue counts for every color subset, indexed by mask.
inline std::vector<std::size_t> all_residue_counts(const ColoredGraph& graph)
{
    const std::uint32_t subsets = std::uint32_t{1} << graph.num_colors();
    std::vector<std::size_t> out(subsets);
    for (std::uint32_t mask = 0; mask < subsets; ++mask) {
        out[mask] = residue_count(graph, ColorSet::from_mask(mask));
    }
    return out;
}

/// True iff deleting any single color class leaves a connected graph.
inline bool is_contracted(const ColoredGraph& graph)
{
    for (Color c = 0; c <= graph.dim(); ++c) {
        if (residue_count(graph, ColorSet{c}.complement(graph.dim())) != 1) {
            return false;
        }
    }
    return true;
}

/// Bipartite graphs are exactly the ones whose complex is orientable.
inline bool is_bipartite(const ColoredGraph& graph)
{
    const std::size_t nu = graph.num_vertices();
    std::vector<int> side(nu, -1);
    std::vector<Vertex> stack{0};
    side[0] = 0;
    while (!stack.empty()) {
        Vertex v = stack.back();
        stack.pop_back();
        for (Color c = 0; c <= graph.dim(); ++c) {
            Vertex w = graph.partner(c, v);
            if (side[w] < 0) {
                side[w] = 1 - side[v];
                stack.push_back(w);
            } else if (side[w] == side[v]) {
                return false;
            }
        }
    }
    return true;
}

/**
 * Graph connected sum with respect to v1 and v2: both vertices are removed
 * and, for each color j, the former color-j neighbours of v1 and v2 are
 * joined by a new color-j edge.
 *
 * Surviving vertices of g1 come first in their original order, followed by
 * those of g2.
 */
inline ColoredGraph connected_sum(const ColoredGraph& g1, Vertex v1, const ColoredGraph& g2, Vertex v2)
{
    if (g1.dim() != g2.dim()) {
        throw Error(ErrorKind::DimMismatch, "cannot sum graphs of dimension " + std::to_string(g1.dim()) + " and " +
                                                std::to_string(g2.dim()));
    }
    detail::require_vertex(g1, v1);
    detail::require_vertex(g2, v2);

    const std::size_t n1 = g1.num_vertices();
    const std::size_t n2 = g2.num_vertices();
    auto map1 = [&](Vertex v) { return static_cast<Vertex>(v < v1 ? v : v - 1); };
    auto map2 = [&](Vertex v) { return static_cast<Vertex>((n1 - 1) + (v < v2 ? v : v - 1)); };

    RawGraph raw{g1.dim(), n1 + n2 - 2, {}};
    raw.matchings.assign(static_cast<std::size_t>(g1.num_colors()), std::vector<Vertex>(raw.num_vertices));
    for (Color c = 0; c <= g1.dim(); ++c) {
        auto& m = raw.matchings[static_cast<std::size_t>(c)];
        const Vertex u1 = g1.partner(c, v1);
        const Vertex u2 = g2.partner(c, v2);
        for (Vertex v = 0; v < n1; ++v) {
            if (v != v1) {
                m[map1(v)] = v == u1 ? map2(u2) : map1(g1.partner(c, v));
            }
        }
        for (Vertex v = 0; v < n2; ++v) {
            if (v != v2) {
                m[map2(v)] = v == u2 ? map1(u1) : map2(g2.partner(c, v));
            }
        }
    }
    return validate(std::move(raw));
}

/// A bijection on {0, ..., d}: color c is renamed to perm[c].
using ColorPermutation = std::vector<Color>;

inline void require_permutation(const ColorPermutation& perm, int dim)
{
    if (perm.size() != static_cast<std::size_t>(dim) + 1) {
        throw Error(ErrorKind::NotAPermutation, "expected " + std::to_string(dim + 1) + " entries, got " +
                                                    std::to_string(perm.size()));
    }
    std::vector<bool> seen(perm.size(), false);
    for (Color c : perm) {
        if (c < 0 || c > dim || seen[static_cast<std::size_t>(c)]) {
            throw Error(ErrorKind::NotAPermutation, "entry " + std::to_string(c) + " repeated or out of range");
        }
        seen[static_cast<std::size_t>(c)] = true;
    }
}

inline ColorPermutation inverse(const ColorPermutation& perm)
{
    ColorPermutation inv(perm.size());
    for (std::size_t c = 0; c < perm.size(); ++c) {
        inv[static_cast<std::size_t>(perm[c])] = static_cast<Color>(c);
    }
    return inv;
}

inline ColorSet apply(const ColorPermutation& perm, ColorSet colors)
{
    ColorSet out;
    for (Color c : colors.colors()) {
        out.insert(perm.at(static_cast<std::size_t>(c)));
    }
    return out;
}

/// Renames every color c to perm[c]; residue counts move along with the colors.
inline ColoredGraph relabel(const ColoredGraph& graph, const ColorPermutation& perm)
{
    require_permutation(perm, graph.dim());
    RawGraph raw = graph.raw();
    for (Color c = 0; c <= graph.dim(); ++c) {
        auto m = graph.matching(c);
        raw.matchings[static_cast<std::size_t>(perm[static_cast<std::size_t>(c)])].assign(m.begin(), m.end());
    }
    return validate(std::move(raw));
}

} // namespace crystal
