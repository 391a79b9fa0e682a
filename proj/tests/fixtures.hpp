#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "crystal/catalog.hpp"
#include "crystal/colored_graph.hpp"
#include "crystal/complex.hpp"

namespace fixtures {

using crystal::ColoredGraph;
using crystal::RawGraph;
using crystal::Vertex;

/// Colors 1..4 pair 0-1 and 2-3, color 0 pairs 0-2 and 1-3. Connected but
/// not contracted: dropping color 0 leaves two components.
inline ColoredGraph uncontracted4()
{
    const std::vector<Vertex> a{1, 0, 3, 2};
    const std::vector<Vertex> b{2, 3, 0, 1};
    return crystal::validate(RawGraph{4, 4, {b, a, a, a, a}});
}

/// A 4-vertex crystallization of S^4: colors 0,1,2 pair 0-1 and 2-3, colors
/// 3,4 pair 0-2 and 1-3. The triple {0,1,2} has two residues, every other
/// triple one, so it is weak semi-simple at m = 0 but not semi-simple.
inline ColoredGraph split4()
{
    const std::vector<Vertex> a{1, 0, 3, 2};
    const std::vector<Vertex> b{2, 3, 0, 1};
    return crystal::validate(RawGraph{4, 4, {a, a, a, b, b}});
}

/// Three copies of split4 relabelled so that their doubled triples are
/// {0,1,2}, {0,1,3} and {0,1,4}, summed at vertex 0. Still the 4-sphere, but
/// those three triples cannot all be skip triples of one cyclic order, so no
/// order is weak semi-simple at m = 0.
inline ColoredGraph no_weak_order8()
{
    const auto base = split4();
    const auto b = crystal::relabel(base, {0, 1, 3, 2, 4});
    const auto c = crystal::relabel(base, {0, 1, 4, 3, 2});
    return crystal::connected_sum(crystal::connected_sum(base, 0, b, 0), 0, c, 0);
}

struct Seeded {
    std::uint64_t seed;
    ColoredGraph graph;
};

/// Seeded random 5-colored graphs on 4, 6 or 8 vertices that are contracted
/// and manifold-Verified, in a fixed order.
inline std::vector<Seeded> random_crystallizations(std::size_t wanted)
{
    std::vector<Seeded> out;
    for (std::uint64_t seed = 0; out.size() < wanted && seed < 100000; ++seed) {
        const std::size_t nu = 4 + 2 * (seed % 3);
        auto g = crystal::random_colored_graph(4, nu, seed);
        if (crystal::is_contracted(g) &&
            crystal::manifold_check(g).verdict == crystal::ManifoldVerdict::Verified) {
            out.push_back({seed, std::move(g)});
        }
    }
    return out;
}

/// The identity corpus: sphere(4), its sum powers k <= 5, catalog graphs,
/// the split 4-vertex sphere and 50 seeded random crystallizations.
struct Named {
    std::string name;
    ColoredGraph graph;
};

inline std::vector<Named> identity_corpus()
{
    std::vector<Named> out;
    const auto s = crystal::sphere(4);
    out.push_back({"sphere(4)", s});
    for (int k = 1; k <= 5; ++k) {
        out.push_back({"sum_power(sphere(4), " + std::to_string(k) + ")", crystal::sum_power(s, k)});
    }
    for (const auto& row : crystal::reference_table()) {
        if (row.graph) {
            out.push_back({"catalog " + row.name, *row.graph});
        }
    }
    const auto sp = split4();
    for (int k = 1; k <= 5; ++k) {
        out.push_back({"sum_power(split4, " + std::to_string(k) + ")", crystal::sum_power(sp, k)});
    }
    for (auto& r : random_crystallizations(50)) {
        out.push_back({"random seed " + std::to_string(r.seed), std::move(r.graph)});
    }
    return out;
}

} // namespace fixtures
