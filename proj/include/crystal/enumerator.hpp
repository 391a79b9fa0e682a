#pragma once

#include <algorithm>
#include <cstdint>
#include <array>
#include <functional>
#include <limits>
#include <map>
#include <optional>
#include <set>
#include <thread>
#include <vector>

#include "crystal/canonical_form.hpp"
#include "crystal/colored_graph.hpp"
#include "crystal/complex.hpp"
#include "crystal/error.hpp"

namespace crystal {

struct SearchConfig {
    int dim = 4;
    std::size_t vertices = 2;
    bool require_contracted = true;
    bool require_level3_spheres = true; // every 3-colored residue is a 2-sphere
    bool require_bipartite = false;
    std::optional<std::size_t> max_results;
    unsigned jobs = 1;
};

struct EnumeratedGraph {
    ColoredGraph graph;
    CanonicalForm form;
    std::optional<ManifoldVerdict> manifold; // dimensions 2..4 only
};

inline void validate_config(const SearchConfig& config)
{
    if (config.dim < 2 || config.dim > 8) {
        throw Error(ErrorKind::ConfigInvalid, "enumeration supports dimensions 2..8");
    }
    if (config.vertices < 2 || config.vertices % 2 != 0) {
        throw Error(ErrorKind::ConfigInvalid, "vertex count must be even and at least 2");
    }
    if (config.vertices > 64) {
        throw Error(ErrorKind::ConfigInvalid, "vertex count above 64 is out of reach");
    }
    if (config.require_level3_spheres && config.dim < 3) {
        throw Error(ErrorKind::ConfigInvalid, "the 3-residue sphere filter needs dimension >= 3");
    }
    if (config.jobs == 0) {
        throw Error(ErrorKind::ConfigInvalid, "jobs must be positive");
    }
    if (config.max_results && *config.max_results == 0) {
        throw Error(ErrorKind::ConfigInvalid, "max results must be positive");
    }
}

/// All perfect matchings of {0, ..., n-1} in lexicographic order of their
/// partner tables; the first is 0-1, 2-3, ...
inline std::vector<std::vector<Vertex>> perfect_matchings(std::size_t n)
{
    std::vector<std::vector<Vertex>> out;
    constexpr auto unset = ~Vertex{0};
    std::vector<Vertex> m(n, unset);
    auto rec = [&](auto&& self) -> void {
        auto first = std::find(m.begin(), m.end(), unset);
        if (first == m.end()) {
            out.push_back(m);
            return;
        }
        const auto u = static_cast<Vertex>(first - m.begin());
        for (auto w = static_cast<Vertex>(u + 1); w < n; ++w) {
            if (m[w] != unset) {
                continue;
            }
            m[u] = w;
            m[w] = u;
            self(self);
            m[u] = m[w] = unset;
        }
    };
    rec(rec);
    return out;
}

namespace detail {

/// Partial assignment of matchings to colors 0..k, searched depth-first.
class PartialSearch {
public:
    using Key = std::vector<std::size_t>;
    using Visit = std::function<bool(const Key&, RawGraph&&)>; // false stops the search

    PartialSearch(const SearchConfig& config, const std::vector<std::vector<Vertex>>& matchings)
        : config_(config), matchings_(matchings)
    {
        raw_.dim = config.dim;
        raw_.num_vertices = config.vertices;
        raw_.matchings.push_back(matchings_.front());
    }

    /// Explores the subtrees whose color-1 index is congruent to `worker` mod `stride`.
    void run(unsigned worker, unsigned stride, const Visit& visit)
    {
        for (std::size_t i = worker; i < matchings_.size(); i += stride) {
            if (!descend(i, visit)) {
                return;
            }
        }
    }

private:
    bool descend(std::size_t index, const Visit& visit)
    {
        raw_.matchings.push_back(matchings_[index]);
        key_.push_back(index);
        bool keep_going = true;
        if (admissible()) {
            if (static_cast<int>(raw_.matchings.size()) == config_.dim + 1) {
                if (leaf_ok()) {
                    RawGraph copy = raw_;
                    keep_going = visit(key_, std::move(copy));
                }
            } else {
                for (std::size_t i = 0; i < matchings_.size() && keep_going; ++i) {
                    keep_going = descend(i, visit);
                }
            }
        }
        raw_.matchings.pop_back();
        key_.pop_back();
        return keep_going;
    }

    std::size_t components(ColorSet colors) const
    {
        DisjointSets sets(raw_.num_vertices);
        for (Color c : colors.colors()) {
            const auto& m = raw_.matchings[static_cast<std::size_t>(c)];
            for (Vertex v = 0; v < m.size(); ++v) {
                if (m[v] > v) {
                    sets.unite(v, m[v]);
                }
            }
        }
        return sets.components();
    }

    /// Every component of the 3-colored residue has Euler characteristic 2.
    bool triple_is_spherical(Color a, Color b, Color c) const
    {
        const std::size_t nu = raw_.num_vertices;
        DisjointSets whole(nu);
        const std::array<Color, 3> cs{a, b, c};
        for (Color x : cs) {
            const auto& m = raw_.matchings[static_cast<std::size_t>(x)];
            for (Vertex v = 0; v < nu; ++v) {
                whole.unite(v, m[v]);
            }
        }
        // Twice the Euler characteristic, accumulated at each component root:
        // -n for the vertices, +2 per bicolored cycle.
        std::vector<std::int64_t> twice_chi(nu, 0);
        for (Vertex v = 0; v < nu; ++v) {
            twice_chi[whole.find(v)] -= 1;
        }
        const std::array<std::array<Color, 2>, 3> pairs{{{a, b}, {a, c}, {b, c}}};
        for (const auto& p : pairs) {
            DisjointSets sets(nu);
            const auto& m0 = raw_.matchings[static_cast<std::size_t>(p[0])];
            const auto& m1 = raw_.matchings[static_cast<std::size_t>(p[1])];
            for (Vertex v = 0; v < nu; ++v) {
                sets.unite(v, m0[v]);
                sets.unite(v, m1[v]);
            }
            for (Vertex v = 0; v < nu; ++v) {
                if (sets.find(v) == v) {
                    twice_chi[whole.find(v)] += 2;
                }
            }
        }
        for (Vertex v = 0; v < nu; ++v) {
            if (whole.find(v) == v && twice_chi[v] != 4) {
                return false;
            }
        }
        return true;
    }

    bool bipartite() const
    {
        const std::size_t nu = raw_.num_vertices;
        std::vector<int> side(nu, -1);
        for (Vertex s = 0; s < nu; ++s) {
            if (side[s] >= 0) {
                continue;
            }
            side[s] = 0;
            std::vector<Vertex> stack{s};
            while (!stack.empty()) {
                const Vertex v = stack.back();
                stack.pop_back();
                for (const auto& m : raw_.matchings) {
                    const Vertex w = m[v];
                    if (side[w] < 0) {
                        side[w] = 1 - side[v];
                        stack.push_back(w);
                    } else if (side[w] == side[v]) {
                        return false;
                    }
                }
            }
        }
        return true;
    }

    /// Conditions that can only get worse as more colors are added.
    bool admissible() const
    {
        const auto top = static_cast<Color>(raw_.matchings.size()) - 1;
        if (config_.require_bipartite && !bipartite()) {
            return false;
        }
        if (config_.require_level3_spheres) {
            for (Color a = 0; a < top; ++a) {
                for (Color b = a + 1; b < top; ++b) {
                    if (!triple_is_spherical(a, b, top)) {
                        return false;
                    }
                }
            }
        }
        // With colors 0..d-1 placed, the residue missing color d is final.
        if (config_.require_contracted && top == config_.dim - 1 &&
            components(ColorSet::full(config_.dim - 1)) != 1) {
            return false;
        }
        return true;
    }

    bool leaf_ok() const
    {
        if (components(ColorSet::full(config_.dim)) != 1) {
            return false;
        }
        if (config_.require_contracted) {
            for (Color c = 0; c < config_.dim; ++c) {
                if (components(ColorSet{c}.complement(config_.dim)) != 1) {
                    return false;
                }
            }
        }
        return true;
    }

    const SearchConfig& config_;
    const std::vector<std::vector<Vertex>>& matchings_;
    RawGraph raw_;
    Key key_;
};

inline EnumeratedGraph make_result(RawGraph&& raw)
{
    auto graph = validate(std::move(raw));
    auto form = canonical_form(graph);
    std::optional<ManifoldVerdict> verdict;
    if (graph.dim() <= 4) {
        verdict = manifold_check(graph).verdict;
    }
    return EnumeratedGraph{std::move(graph), std::move(form), verdict};
}

} // namespace detail

/**
 * Exhaustive search for colored graphs on `config.vertices` vertices, one per
 * vertex-relabelling class (colors fixed).
 *
 * Color 0 is pinned to the pairing 0-1, 2-3, ..., which loses no class since
 * any perfect matching can be renamed into it. The remaining matchings are
 * chosen in lexicographic order with pruning; a class is reported at its
 * first occurrence in that order, so the output does not depend on
 * `config.jobs`. Work is split statically by the color-1 matching.
 *
 * The sink is called once per class, in order; returning false stops early.
 */
inline void enumerate(const SearchConfig& config, const std::function<bool(const EnumeratedGraph&)>& sink)
{
    validate_config(config);
    const auto matchings = perfect_matchings(config.vertices);
    const std::size_t limit = config.max_results.value_or(std::numeric_limits<std::size_t>::max());

    if (config.jobs == 1) {
        std::set<CanonicalForm> seen;
        std::size_t emitted = 0;
        detail::PartialSearch search(config, matchings);
        search.run(0, 1, [&](const detail::PartialSearch::Key&, RawGraph&& raw) {
            auto result = detail::make_result(std::move(raw));
            if (!seen.insert(result.form).second) {
                return true;
            }
            ++emitted;
            return sink(result) && emitted < limit;
        });
        return;
    }

    // Each worker keeps the first occurrence of every class in its own
    // subtrees; the merge keeps the globally smallest enumeration key.
    using Found = std::map<CanonicalForm, std::pair<detail::PartialSearch::Key, EnumeratedGraph>>;
    std::vector<Found> found(config.jobs);
    {
        std::vector<std::jthread> workers;
        for (unsigned w = 0; w < config.jobs; ++w) {
            workers.emplace_back([&, w] {
                detail::PartialSearch search(config, matchings);
                search.run(w, config.jobs, [&](const detail::PartialSearch::Key& key, RawGraph&& raw) {
                    auto result = detail::make_result(std::move(raw));
                    found[w].try_emplace(result.form, key, std::move(result));
                    return true;
                });
            });
        }
    }
    Found merged;
    for (auto& part : found) {
        for (auto& [form, entry] : part) {
            auto it = merged.find(form);
            if (it == merged.end()) {
                merged.emplace(form, std::move(entry));
            } else if (entry.first < it->second.first) {
                it->second = std::move(entry);
            }
        }
    }
    std::vector<std::pair<detail::PartialSearch::Key, EnumeratedGraph>> ordered;
    for (auto& [form, entry] : merged) {
        ordered.push_back(std::move(entry));
    }
    std::sort(ordered.begin(), ordered.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
    std::size_t emitted = 0;
    for (const auto& [key, result] : ordered) {
        if (emitted++ >= limit || !sink(result)) {
            return;
        }
    }
}

inline std::vector<EnumeratedGraph> enumerate_all(const SearchConfig& config)
{
    std::vector<EnumeratedGraph> out;
    enumerate(config, [&](const EnumeratedGraph& g) {
        out.push_back(g);
        return true;
    });
    return out;
}

} // namespace crystal
