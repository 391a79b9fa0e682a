#pragma once

#include <algorithm>
#include <numeric>
#include <string>
#include <vector>

#include "crystal/color_set.hpp"
#include "crystal/error.hpp"

namespace crystal {

/**
 * A cyclic arrangement of the colors {0, ..., d}, taken up to rotation and
 * reflection. The stored representative ends with d and has its first entry
 * smaller than its second-to-last one.
 */
class CyclicPermutation {
public:
    /// Canonicalizes any arrangement of {0, ..., d}.
    explicit CyclicPermutation(std::vector<Color> arrangement) : order_(canonicalize(std::move(arrangement))) {}

    [[nodiscard]] int dim() const noexcept { return static_cast<int>(order_.size()) - 1; }
    [[nodiscard]] const std::vector<Color>& order() const noexcept { return order_; }

    /// Entry at position i, indices taken modulo d+1.
    [[nodiscard]] Color at(long i) const noexcept
    {
        const long n = static_cast<long>(order_.size());
        return order_[static_cast<std::size_t>(((i % n) + n) % n)];
    }

    /// {e_i, e_{i+1}} for every i.
    [[nodiscard]] std::vector<ColorSet> consecutive_pairs() const
    {
        std::vector<ColorSet> out;
        for (long i = 0; i <= dim(); ++i) {
            out.push_back(ColorSet{at(i), at(i + 1)});
        }
        return out;
    }

    /// {e_i, e_{i+1}, e_{i+2}} for every i.
    [[nodiscard]] std::vector<ColorSet> consecutive_triples() const
    {
        std::vector<ColorSet> out;
        for (long i = 0; i <= dim(); ++i) {
            out.push_back(ColorSet{at(i), at(i + 1), at(i + 2)});
        }
        return out;
    }

    /// {e_i, e_{i+2}, e_{i+4}} for every i. For d = 4 these are exactly the
    /// five triples that are not consecutive.
    [[nodiscard]] std::vector<ColorSet> skip_triples() const
    {
        std::vector<ColorSet> out;
        for (long i = 0; i <= dim(); ++i) {
            out.push_back(ColorSet{at(i), at(i + 2), at(i + 4)});
        }
        return out;
    }

    /// "(0,1,2,3,4)"
    [[nodiscard]] std::string to_string() const
    {
        std::string s = "(";
        for (std::size_t i = 0; i < order_.size(); ++i) {
            s += (i ? "," : "") + std::to_string(order_[i]);
        }
        return s + ")";
    }

    friend bool operator==(const CyclicPermutation&, const CyclicPermutation&) = default;
    friend auto operator<=>(const CyclicPermutation&, const CyclicPermutation&) = default;

    static std::vector<Color> canonicalize(std::vector<Color> e)
    {
        const int d = static_cast<int>(e.size()) - 1;
        if (d < 2) {
            throw Error(ErrorKind::NotAPermutation, "a cyclic permutation needs at least three colors");
        }
        std::vector<Color> sorted = e;
        std::sort(sorted.begin(), sorted.end());
        for (int i = 0; i <= d; ++i) {
            if (sorted[static_cast<std::size_t>(i)] != i) {
                throw Error(ErrorKind::NotAPermutation, "not an arrangement of {0.." + std::to_string(d) + "}");
            }
        }
        auto top = std::find(e.begin(), e.end(), d);
        std::rotate(e.begin(), top + 1, e.end());
        if (e.front() > e[static_cast<std::size_t>(d - 1)]) {
            std::reverse(e.begin(), e.end() - 1);
        }
        return e;
    }

private:
    std::vector<Color> order_;
};

/// All d!/2 canonical cyclic permutations of {0, ..., d}, in lexicographic order.
inline std::vector<CyclicPermutation> cyclic_permutations(int d)
{
    if (d < 2) {
        throw Error(ErrorKind::BadColorCount, "cyclic permutations need d >= 2");
    }
    std::vector<Color> head(static_cast<std::size_t>(d));
    std::iota(head.begin(), head.end(), 0);
    std::vector<CyclicPermutation> out;
    do {
        if (head.front() < head.back()) {
            std::vector<Color> e = head;
            e.push_back(d);
            out.emplace_back(std::move(e));
        }
    } while (std::next_permutation(head.begin(), head.end()));
    return out;
}

} // namespace crystal
