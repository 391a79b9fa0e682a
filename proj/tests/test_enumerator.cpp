#include "catch_amalgamated.hpp"

#include <set>

#include "crystal/canonical_form.hpp"
#include "crystal/catalog.hpp"
#include "crystal/enumerator.hpp"
#include "crystal/genus.hpp"

#include "oracles.hpp"

using namespace crystal;

namespace {

std::set<oracle::Table> orbit_set(const std::vector<EnumeratedGraph>& graphs)
{
    std::set<oracle::Table> out;
    for (const auto& e : graphs) {
        out.insert(oracle::orbit_min(oracle::table_of(e.graph)));
    }
    return out;
}

SearchConfig config(int dim, std::size_t nu, bool contracted = true, bool spherical = true, bool bipartite = false)
{
    SearchConfig c;
    c.dim = dim;
    c.vertices = nu;
    c.require_contracted = contracted;
    c.require_level3_spheres = spherical;
    c.require_bipartite = bipartite;
    return c;
}

void check_against_oracle(int dim, std::size_t nu, bool contracted, bool spherical, bool bipartite)
{
    INFO("dim " << dim << " nu " << nu << " contracted " << contracted << " spherical " << spherical
                << " bipartite " << bipartite);
    const auto got = enumerate_all(config(dim, nu, contracted, spherical, bipartite));
    const auto expected = oracle::brute_force_census(dim, nu, {contracted, spherical, bipartite});
    CHECK(got.size() == expected.size());
    CHECK(orbit_set(got) == expected);
}

} // namespace

TEST_CASE("perfect matchings")
{
    CHECK(perfect_matchings(2).size() == 1);
    CHECK(perfect_matchings(4).size() == 3);
    CHECK(perfect_matchings(6).size() == 15);
    CHECK(perfect_matchings(8).size() == 105);
    CHECK(perfect_matchings(6).front() == std::vector<Vertex>{1, 0, 3, 2, 5, 4});
    CHECK(perfect_matchings(6) == oracle::involutions(6));
}

TEST_CASE("two vertices give exactly the sphere")
{
    const auto four = enumerate_all(config(4, 2));
    REQUIRE(four.size() == 1);
    CHECK(four.front().graph == sphere(4));
    CHECK(four.front().form == canonical_form(sphere(4)));
    CHECK(four.front().manifold == ManifoldVerdict::Verified);
    const auto three = enumerate_all(config(3, 2));
    REQUIRE(three.size() == 1);
    CHECK(three.front().graph == sphere(3));
}

TEST_CASE("census matches brute force at four vertices")
{
    for (bool contracted : {true, false}) {
        for (bool spherical : {true, false}) {
            for (bool bipartite : {false, true}) {
                check_against_oracle(4, 4, contracted, spherical, bipartite);
            }
        }
    }
    check_against_oracle(3, 4, true, true, false);
    check_against_oracle(2, 4, true, false, false);
}

TEST_CASE("census matches brute force in dimension 3 at six vertices")
{
    check_against_oracle(3, 6, true, true, false);
    check_against_oracle(3, 6, false, false, false);
}

TEST_CASE("emitted graphs pass every enabled filter")
{
    const auto graphs = enumerate_all(config(4, 6));
    CHECK_FALSE(graphs.empty());
    std::set<CanonicalForm> forms;
    for (const auto& e : graphs) {
        CHECK(validate(e.graph.raw()) == e.graph);
        CHECK(is_contracted(e.graph));
        CHECK(gagliardi_relation_check(e.graph).holds);
        CHECK(oracle::triples_spherical(e.graph));
        CHECK(e.form == canonical_form(e.graph));
        CHECK(e.manifold == manifold_check(e.graph).verdict);
        CHECK(forms.insert(e.form).second);
        auto m = e.graph.matching(0);
        CHECK(std::vector<Vertex>(m.begin(), m.end()) == perfect_matchings(6).front());
    }
    for (const auto& e : enumerate_all([] {
             auto c = config(4, 6);
             c.require_bipartite = true;
             return c;
         }())) {
        CHECK(is_bipartite(e.graph));
    }
}

TEST_CASE("output does not depend on the worker count")
{
    auto c = config(4, 6);
    const auto one = enumerate_all(c);
    for (unsigned jobs : {2u, 3u, 8u}) {
        c.jobs = jobs;
        const auto many = enumerate_all(c);
        REQUIRE(many.size() == one.size());
        for (std::size_t i = 0; i < one.size(); ++i) {
            CHECK(many[i].graph == one[i].graph);
        }
    }
}

TEST_CASE("max results and early stop")
{
    auto c = config(4, 6);
    const auto all = enumerate_all(c);
    REQUIRE(all.size() > 3);
    c.max_results = 3;
    const auto some = enumerate_all(c);
    REQUIRE(some.size() == 3);
    for (std::size_t i = 0; i < 3; ++i) {
        CHECK(some[i].graph == all[i].graph);
    }
    c.jobs = 4;
    const auto some_parallel = enumerate_all(c);
    REQUIRE(some_parallel.size() == 3);
    CHECK(some_parallel[2].graph == all[2].graph);

    std::size_t seen = 0;
    enumerate(config(4, 6), [&](const EnumeratedGraph&) { return ++seen < 2; });
    CHECK(seen == 2);
}

TEST_CASE("invalid configurations")
{
    auto bad = [](SearchConfig c) {
        try {
            validate_config(c);
        } catch (const Error& e) {
            return e.kind() == ErrorKind::ConfigInvalid;
        }
        return false;
    };
    CHECK(bad(config(4, 3)));
    CHECK(bad(config(4, 0)));
    CHECK(bad(config(1, 2)));
    CHECK(bad(config(2, 2, true, true)));
    auto c = config(4, 2);
    c.jobs = 0;
    CHECK(bad(c));
    c = config(4, 2);
    c.max_results = 0;
    CHECK(bad(c));
    CHECK_FALSE(bad(config(4, 2)));
}
