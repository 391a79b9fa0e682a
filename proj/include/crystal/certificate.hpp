#pragma once

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "crystal/colored_graph.hpp"
#include "crystal/complex.hpp"
#include "crystal/genus.hpp"

namespace crystal {

/// Ways a graph can certify G(M) = 2 chi + 5 m - 4.
enum class CertificateRoute {
    WeakSemiSimple,      // some cyclic order has all consecutive triples at m+1
    VertexBound,         // nu <= 6 chi + 20 m - 6
    NovikSwartzEquality, // Betti data attains the aggregate Novik-Swartz bound
};

inline std::string_view to_string(CertificateRoute r) noexcept
{
    switch (r) {
    case CertificateRoute::WeakSemiSimple: return "WeakSemiSimple";
    case CertificateRoute::VertexBound: return "VertexBound";
    case CertificateRoute::NovikSwartzEquality: return "NovikSwartzEquality";
    }
    return "Unknown";
}

struct Certificate {
    CertificateRoute route = CertificateRoute::WeakSemiSimple; // first successful route
    std::vector<CertificateRoute> routes;                      // all successful routes
    std::int64_t genus = 0;                                    // 2 chi + 5 m - 4
    std::int64_t euler_characteristic = 0;
    std::int64_t rank = 0;
    ManifoldVerdict manifold = ManifoldVerdict::Unverified;
    Classification classification;
};

/**
 * Issues a certificate that the manifold represented by `graph` has regular
 * genus 2 chi + 5 m - 4, or returns nullopt when no route applies. A missing
 * certificate means "undetermined", not "the bound is not attained".
 *
 * The routes are nested: the vertex bound forces at most two triples above
 * m+1, which always leaves a weak semi-simple cyclic order, and Novik-Swartz
 * equality forces the vertex bound. Both implications are asserted.
 */
inline std::optional<Certificate> genus_certificate(const ColoredGraph& graph, std::int64_t rank_m,
                                                    const std::optional<BettiVector>& betti = std::nullopt)
{
    detail::require_dim(graph, 4);
    detail::require_crystallization(graph);
    validate_rank(graph, rank_m);

    Certificate cert;
    cert.rank = rank_m;
    cert.euler_characteristic = euler_characteristic(graph);
    cert.genus = genus_lower_bound(cert.euler_characteristic, rank_m);
    cert.manifold = manifold_check(graph).verdict;
    cert.classification = classify(graph, rank_m);

    const auto nu = static_cast<std::int64_t>(graph.num_vertices());
    const bool weak = cert.classification.kind != CrystallizationClass::None;
    const bool vertex_bound = nu <= 6 * cert.euler_characteristic + 20 * rank_m - 6;
    bool novik_swartz = false;
    if (betti) {
        novik_swartz = novik_swartz_check(graph, *betti, rank_m).equality;
    }

    if (vertex_bound && !weak) {
        throw std::logic_error("vertex bound holds but no weak semi-simple cyclic order exists");
    }
    if (novik_swartz && !vertex_bound) {
        throw std::logic_error("Novik-Swartz equality holds but the vertex bound does not");
    }

    if (weak) {
        cert.routes.push_back(CertificateRoute::WeakSemiSimple);
    }
    if (vertex_bound) {
        cert.routes.push_back(CertificateRoute::VertexBound);
    }
    if (novik_swartz) {
        cert.routes.push_back(CertificateRoute::NovikSwartzEquality);
    }
    if (cert.routes.empty()) {
        return std::nullopt;
    }
    cert.route = cert.routes.front();

    const auto report = regular_genus(graph);
    if (report.regular_genus_times_two != 2 * cert.genus) {
        throw std::logic_error("certified genus " + std::to_string(cert.genus) +
                               " differs from the graph's regular genus");
    }
    return cert;
}

struct AdditivityReport {
    Certificate first;
    Certificate second;
    Certificate sum;
    ColoredGraph sum_graph;
    bool additive = false; // G(sum) = G(first) + G(second)
    bool sum_weak_semi_simple = false;
};

namespace detail {

inline Certificate require_certificate(const ColoredGraph& graph, std::int64_t rank_m, const char* which)
{
    auto cert = genus_certificate(graph, rank_m);
    if (!cert) {
        throw Error(ErrorKind::NotCertified,
                    std::string(which) + " graph has no genus certificate at rank " + std::to_string(rank_m));
    }
    return *cert;
}

} // namespace detail

/// Builds the connected sum of two certified graphs and certifies it at
/// m1 + m2. Each summand is first relabelled by its weak semi-simple witness so
/// that both share the standard consecutive triples, and the sum is taken at
/// vertex 0 of each.
inline AdditivityReport additivity_check(const ColoredGraph& g1, std::int64_t m1, const ColoredGraph& g2,
                                         std::int64_t m2)
{
    auto c1 = detail::require_certificate(g1, m1, "first");
    auto c2 = detail::require_certificate(g2, m2, "second");
    const auto h1 = relabel(g1, *c1.classification.witness_relabeling);
    const auto h2 = relabel(g2, *c2.classification.witness_relabeling);
    auto sum_graph = connected_sum(h1, 0, h2, 0);
    auto c = detail::require_certificate(sum_graph, m1 + m2, "sum");
    AdditivityReport r{c1, c2, c, std::move(sum_graph), false, false};
    r.additive = c.genus == c1.genus + c2.genus;
    r.sum_weak_semi_simple = is_weak_semi_simple_labeled(r.sum_graph, m1 + m2);
    return r;
}

} // namespace crystal
