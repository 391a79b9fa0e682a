#pragma once

#include <cstdint>
#include <limits>
#include <numeric>
#include <optional>
#include <random>
#include <string>
#include <utility>
#include <vector>

#include "crystal/colored_graph.hpp"
#include "crystal/complex.hpp"
#include "crystal/error.hpp"
#include "crystal/genus.hpp"

namespace crystal {

/// The unique graph on two vertices: every color joins them. Represents the
/// d-sphere.
inline ColoredGraph sphere(int d)
{
    RawGraph raw{d, 2, {}};
    raw.matchings.assign(static_cast<std::size_t>(d) + 1, std::vector<Vertex>{1, 0});
    return validate(std::move(raw));
}

/// k-fold iterated connected sum G # G # ... # G, always joining at vertex 0
/// of the running sum and vertex 0 of the next copy.
inline ColoredGraph sum_power(const ColoredGraph& graph, int k)
{
    if (k < 1) {
        throw Error(ErrorKind::ConfigInvalid, "sum_power needs k >= 1");
    }
    ColoredGraph acc = graph;
    for (int i = 1; i < k; ++i) {
        acc = connected_sum(acc, 0, graph, 0);
    }
    return acc;
}

namespace detail {

/// Uniform integer in [0, n) from the raw 64-bit stream; avoids
/// std::uniform_int_distribution so sequences agree across standard libraries.
inline std::uint64_t uniform_below(std::mt19937_64& rng, std::uint64_t n)
{
    const std::uint64_t limit = std::numeric_limits<std::uint64_t>::max() - std::numeric_limits<std::uint64_t>::max() % n;
    std::uint64_t x = 0;
    do {
        x = rng();
    } while (x >= limit);
    return x % n;
}

inline std::vector<Vertex> random_perfect_matching(std::mt19937_64& rng, std::size_t nu)
{
    std::vector<Vertex> order(nu);
    std::iota(order.begin(), order.end(), Vertex{0});
    for (std::size_t i = nu - 1; i > 0; --i) {
        std::swap(order[i], order[uniform_below(rng, i + 1)]);
    }
    std::vector<Vertex> m(nu);
    for (std::size_t i = 0; i < nu; i += 2) {
        m[order[i]] = order[i + 1];
        m[order[i + 1]] = order[i];
    }
    return m;
}

} // namespace detail

/// d+1 independent uniform perfect matchings on nu vertices, redrawn until the
/// graph is connected. Deterministic in (d, nu, seed). Neither contractedness
/// nor manifoldness is implied.
inline ColoredGraph random_colored_graph(int d, std::size_t nu, std::uint64_t seed)
{
    if (d < 2 || d > kMaxDim) {
        throw Error(ErrorKind::BadColorCount, "dimension out of range");
    }
    if (nu < 2 || nu % 2 != 0) {
        throw Error(ErrorKind::OddVertexCount, "vertex count must be even and at least 2");
    }
    std::mt19937_64 rng(seed);
    while (true) {
        RawGraph raw{d, nu, {}};
        for (int c = 0; c <= d; ++c) {
            raw.matchings.push_back(detail::random_perfect_matching(rng, nu));
        }
        try {
            return validate(std::move(raw));
        } catch (const Error& e) {
            if (e.kind() != ErrorKind::Disconnected) {
                throw;
            }
        }
    }
}

// ---------------------------------------------------------------------------

struct CatalogEntry {
    std::string name;
    std::optional<ColoredGraph> graph;
    std::int64_t chi = 0;
    std::int64_t rank_m = 0;
    std::optional<std::int64_t> known_genus;
    std::string source;
    std::optional<std::string> cgf_path;
    std::optional<BettiVector> betti; // rational Betti numbers, orientable rows only
};

/// Manifolds known to attain 2 chi + 5 m - 4. Only the 4-sphere carries a
/// graph; the other rows accept externally supplied crystallizations.
inline std::vector<CatalogEntry> reference_table()
{
    const std::string cls = "weak semi-simple class; genus = 2chi + 5m - 4";
    auto row = [&](std::string name, std::int64_t chi, std::int64_t m, std::optional<BettiVector> betti,
                   std::string source) {
        return CatalogEntry{std::move(name), std::nullopt, chi, m, genus_lower_bound(chi, m), std::move(source),
                            std::nullopt, betti};
    };
    std::vector<CatalogEntry> rows;
    rows.push_back(row("S^4", 2, 0, BettiVector{{1, 0, 0, 0, 1}}, "standard 2-vertex crystallization"));
    rows.back().graph = sphere(4);
    rows.push_back(row("CP^2", 3, 0, BettiVector{{1, 0, 1, 0, 1}}, cls));
    rows.push_back(row("S^2xS^2", 4, 0, BettiVector{{1, 0, 2, 0, 1}}, cls));
    rows.push_back(row("RP^4", 1, 1, std::nullopt, cls));
    rows.push_back(row("RP^2xS^2", 2, 1, std::nullopt, cls + "; genus 5 from a known crystallization"));
    rows.push_back(row("S^3-bundle over S^1", 0, 1, std::nullopt, cls));
    rows.push_back(row("(S^2xS^1)_f mapping torus", 0, 2, std::nullopt,
                       cls + "; genus 6 from a known crystallization"));
    rows.push_back(row("K3", 24, 0, BettiVector{{1, 0, 22, 0, 1}}, cls));
    return rows;
}

} // namespace crystal
