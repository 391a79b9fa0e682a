#pragma once

#include <algorithm>
#include <compare>
#include <cstdint>
#include <string>
#include <vector>

#include "crystal/colored_graph.hpp"

namespace crystal {

/// Byte string identifying a colored graph up to vertex renaming (colors
/// fixed). Byte order is chosen so that lexicographic comparison of forms
/// matches numeric comparison of the underlying tables.
struct CanonicalForm {
    std::string bytes;

    [[nodiscard]] std::string hex() const
    {
        static constexpr char digits[] = "0123456789abcdef";
        std::string out;
        out.reserve(bytes.size() * 2);
        for (unsigned char ch : bytes) {
            out += digits[ch >> 4];
            out += digits[ch & 0xF];
        }
        return out;
    }

    friend bool operator==(const CanonicalForm&, const CanonicalForm&) = default;
    friend auto operator<=>(const CanonicalForm&, const CanonicalForm&) = default;
};

namespace detail {

inline void put_u32(std::string& out, std::uint32_t x)
{
    for (int shift = 24; shift >= 0; shift -= 8) {
        out += static_cast<char>((x >> shift) & 0xFF);
    }
}

/// Lengths of the bicolored cycles through each vertex, one per color pair.
/// Preserved by every color-respecting isomorphism.
inline std::vector<std::vector<std::uint32_t>> cycle_signatures(const ColoredGraph& graph)
{
    const std::size_t nu = graph.num_vertices();
    std::vector<std::vector<std::uint32_t>> sig(nu);
    for (Color a = 0; a <= graph.dim(); ++a) {
        for (Color b = a + 1; b <= graph.dim(); ++b) {
            auto labels = component_labels(graph, ColorSet{a, b});
            std::vector<std::uint32_t> size(labels.count, 0);
            for (auto l : labels.label) {
                ++size[l];
            }
            for (Vertex v = 0; v < nu; ++v) {
                sig[v].push_back(size[labels.label[v]]);
            }
        }
    }
    return sig;
}

} // namespace detail

/**
 * Canonical form by individualization and propagation.
 *
 * Fixing the image of one vertex determines a color-respecting relabelling
 * completely: a breadth-first walk that visits neighbours in color order
 * numbers every vertex. The form is the smallest resulting matching table
 * over all admissible roots. Roots are restricted to the vertices with the
 * smallest cycle signature, and a root is abandoned as soon as its partial
 * table exceeds the best one found so far.
 */
inline CanonicalForm canonical_form(const ColoredGraph& graph)
{
    const std::size_t nu = graph.num_vertices();
    const auto ncolors = static_cast<std::size_t>(graph.num_colors());

    const auto sig = detail::cycle_signatures(graph);
    const auto& min_sig = *std::min_element(sig.begin(), sig.end());

    constexpr auto unset = ~std::uint32_t{0};
    std::vector<std::uint32_t> best;
    std::vector<std::uint32_t> table(nu * ncolors);
    std::vector<std::uint32_t> label(nu);
    std::vector<Vertex> order(nu);

    for (Vertex root = 0; root < nu; ++root) {
        if (sig[root] != min_sig) {
            continue;
        }
        std::fill(label.begin(), label.end(), unset);
        label[root] = 0;
        order[0] = root;
        std::uint32_t next = 1;
        // -1: still tied with best, 1: already smaller.
        int state = best.empty() ? 1 : -1;
        bool abandoned = false;
        std::size_t pos = 0;
        for (std::size_t k = 0; k < nu && !abandoned; ++k) {
            const Vertex u = order[k];
            for (Color c = 0; c <= graph.dim(); ++c, ++pos) {
                const Vertex w = graph.partner(c, u);
                if (label[w] == unset) {
                    label[w] = next;
                    order[next++] = w;
                }
                table[pos] = label[w];
                if (state < 0) {
                    if (table[pos] > best[pos]) {
                        abandoned = true;
                        break;
                    }
                    if (table[pos] < best[pos]) {
                        state = 1;
                    }
                }
            }
        }
        if (!abandoned && state > 0) {
            best = table;
        }
    }

    CanonicalForm form;
    form.bytes.reserve(5 + 4 * best.size());
    form.bytes += static_cast<char>(graph.dim());
    detail::put_u32(form.bytes, static_cast<std::uint32_t>(nu));
    for (auto x : best) {
        detail::put_u32(form.bytes, x);
    }
    return form;
}

} // namespace crystal
