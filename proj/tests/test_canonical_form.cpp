#include "catch_amalgamated.hpp"

#include <numeric>
#include <random>

#include "crystal/canonical_form.hpp"
#include "crystal/catalog.hpp"

#include "fixtures.hpp"
#include "oracles.hpp"

using namespace crystal;

namespace {

ColoredGraph rename_vertices(const ColoredGraph& g, const std::vector<Vertex>& p)
{
    RawGraph raw{g.dim(), g.num_vertices(), {}};
    for (Color c = 0; c <= g.dim(); ++c) {
        std::vector<Vertex> m(g.num_vertices());
        for (Vertex v = 0; v < g.num_vertices(); ++v) {
            m[p[v]] = p[g.partner(c, v)];
        }
        raw.matchings.push_back(std::move(m));
    }
    return validate(std::move(raw));
}

std::vector<Vertex> random_renaming(std::size_t n, std::uint64_t seed)
{
    std::vector<Vertex> p(n);
    std::iota(p.begin(), p.end(), Vertex{0});
    std::mt19937_64 rng(seed);
    std::shuffle(p.begin(), p.end(), rng);
    return p;
}

} // namespace

TEST_CASE("sphere form is invariant under the vertex swap")
{
    const auto s = sphere(4);
    CHECK(canonical_form(s) == canonical_form(rename_vertices(s, {1, 0})));
    CHECK_FALSE(canonical_form(s) == canonical_form(fixtures::uncontracted4()));
    CHECK(canonical_form(s).bytes.size() == 5 + 4 * 10);
    CHECK(canonical_form(s).hex().substr(0, 10) == "0400000002");
}

TEST_CASE("forms are invariant under random vertex renamings")
{
    for (std::uint64_t seed = 0; seed < 100; ++seed) {
        const auto g = random_colored_graph(4, 2 + 2 * (seed % 25), seed);
        const auto form = canonical_form(g);
        for (std::uint64_t k = 0; k < 3; ++k) {
            const auto h = rename_vertices(g, random_renaming(g.num_vertices(), seed * 7 + k));
            REQUIRE(canonical_form(h) == form);
        }
    }
}

TEST_CASE("canonicalization is idempotent")
{
    for (std::uint64_t seed = 0; seed < 20; ++seed) {
        const auto g = random_colored_graph(4, 16, seed);
        const auto form = canonical_form(g);
        // Decode the table and canonicalize again.
        const auto& b = form.bytes;
        auto u32 = [&](std::size_t at) {
            return (std::uint32_t(static_cast<unsigned char>(b[at])) << 24) |
                   (std::uint32_t(static_cast<unsigned char>(b[at + 1])) << 16) |
                   (std::uint32_t(static_cast<unsigned char>(b[at + 2])) << 8) |
                   std::uint32_t(static_cast<unsigned char>(b[at + 3]));
        };
        const std::size_t nu = u32(1);
        RawGraph raw{static_cast<int>(b[0]), nu, std::vector<std::vector<Vertex>>(5, std::vector<Vertex>(nu))};
        for (std::size_t v = 0; v < nu; ++v) {
            for (std::size_t c = 0; c < 5; ++c) {
                raw.matchings[c][v] = u32(5 + 4 * (v * 5 + c));
            }
        }
        const auto canon = validate(raw);
        CHECK(canonical_form(canon) == form);
    }
}

TEST_CASE("forms separate exactly the orbits on small graphs")
{
    // Every graph on 4 vertices, compared against brute-force orbit minima.
    const auto inv = oracle::involutions(4);
    std::vector<ColoredGraph> graphs;
    for (std::size_t code = 0; code < 243; ++code) {
        RawGraph raw{4, 4, {}};
        std::size_t x = code;
        for (int c = 0; c < 5; ++c, x /= 3) {
            raw.matchings.push_back(inv[x % 3]);
        }
        try {
            graphs.push_back(validate(raw));
        } catch (const Error&) {
        }
    }
    for (const auto& a : graphs) {
        for (const auto& b : graphs) {
            const bool same_orbit = oracle::orbit_min(oracle::table_of(a)) == oracle::orbit_min(oracle::table_of(b));
            REQUIRE((canonical_form(a) == canonical_form(b)) == same_orbit);
        }
    }
}

TEST_CASE("colors are not permuted")
{
    const auto g = fixtures::split4();
    const auto h = relabel(g, {4, 1, 2, 3, 0});
    CHECK_FALSE(canonical_form(g) == canonical_form(h));
}
