#pragma once

#include <bit>
#include <cstdint>
#include <initializer_list>
#include <string>
#include <vector>

#include "crystal/error.hpp"

namespace crystal {

using Color = int;

/// Largest supported dimension; color sets are stored as 32-bit masks.
inline constexpr int kMaxDim = 30;

/// A subset of the color set {0, ..., d}, stored as a bit mask.
/// Iteration and printing always use ascending color order.
class ColorSet {
public:
    constexpr ColorSet() = default;

    ColorSet(std::initializer_list<Color> colors)
    {
        for (Color c : colors) {
            insert(c);
        }
    }

    static constexpr ColorSet from_mask(std::uint32_t mask) noexcept
    {
        ColorSet s;
        s.mask_ = mask;
        return s;
    }

    /// All colors {0, ..., d}.
    static constexpr ColorSet full(int dim) noexcept
    {
        return from_mask(dim >= 31 ? ~std::uint32_t{0} : (std::uint32_t{1} << (dim + 1)) - 1);
    }

    void insert(Color c)
    {
        if (c < 0 || c > kMaxDim) {
            throw Error(ErrorKind::ColorOutOfRange, "color " + std::to_string(c) + " is outside [0, " +
                                                        std::to_string(kMaxDim) + "]");
        }
        mask_ |= std::uint32_t{1} << c;
    }

    [[nodiscard]] constexpr bool contains(Color c) const noexcept
    {
        return c >= 0 && c <= kMaxDim && ((mask_ >> c) & 1U) != 0;
    }

    [[nodiscard]] constexpr std::uint32_t mask() const noexcept { return mask_; }
    [[nodiscard]] constexpr int size() const noexcept { return std::popcount(mask_); }
    [[nodiscard]] constexpr bool empty() const noexcept { return mask_ == 0; }

    [[nodiscard]] constexpr bool is_subset_of(ColorSet other) const noexcept
    {
        return (mask_ & ~other.mask_) == 0;
    }

    /// True iff every color lies in {0, ..., dim}.
    [[nodiscard]] constexpr bool fits(int dim) const noexcept { return is_subset_of(full(dim)); }

    /// Complement inside {0, ..., dim}.
    [[nodiscard]] constexpr ColorSet complement(int dim) const noexcept
    {
        return from_mask(full(dim).mask_ & ~mask_);
    }

    [[nodiscard]] std::vector<Color> colors() const
    {
        std::vector<Color> out;
        out.reserve(static_cast<std::size_t>(size()));
        for (std::uint32_t m = mask_; m != 0; m &= m - 1) {
            out.push_back(std::countr_zero(m));
        }
        return out;
    }

    /// "{0,1,2}"
    [[nodiscard]] std::string to_string() const
    {
        std::string s = "{";
        bool first = true;
        for (Color c : colors()) {
            if (!first) {
                s += ',';
            }
            s += std::to_string(c);
            first = false;
        }
        return s + "}";
    }

    friend constexpr ColorSet operator|(ColorSet a, ColorSet b) noexcept
    {
        return from_mask(a.mask_ | b.mask_);
    }
    friend constexpr ColorSet operator&(ColorSet a, ColorSet b) noexcept
    {
        return from_mask(a.mask_ & b.mask_);
    }
    friend constexpr bool operator==(ColorSet, ColorSet) noexcept = default;
    friend constexpr auto operator<=>(ColorSet, ColorSet) noexcept = default;

private:
    std::uint32_t mask_ = 0;
};

/// All subsets of {0, ..., dim} with exactly k elements, ascending in
/// lexicographic order of their sorted color lists.
inline std::vector<ColorSet> subsets_of_size(int dim, int k)
{
    std::vector<ColorSet> out;
    std::vector<Color> pick;
    auto rec = [&](auto&& self, Color next) -> void {
        if (static_cast<int>(pick.size()) == k) {
            ColorSet s;
            for (Color c : pick) {
                s.insert(c);
            }
            out.push_back(s);
            return;
        }
        for (Color c = next; c <= dim; ++c) {
            pick.push_back(c);
            self(self, c + 1);
            pick.pop_back();
        }
    };
    if (k >= 0 && k <= dim + 1) {
        rec(rec, 0);
    }
    return out;
}

} // namespace crystal
