#pragma once

#include <bit>
#include <cstdint>
#include <functional>

namespace dsmt {

inline constexpr int kMaxFrameSize = 6;

/// Bit set of Venn-diagram parts for a frame of size n.
///
/// The part "exactly the hypotheses in S and no others" (S a non-empty subset
/// of {1..n}, encoded as a bit set over hypothesis indices) occupies bit S-1.
/// For n = 3 this gives the order <1>,<2>,<12>,<3>,<13>,<23>,<123>.
class PartMask {
  public:
    constexpr PartMask() = default;
    constexpr explicit PartMask(std::uint64_t bits) : bits_{bits} {}

    /// Every part of a frame of size n.
    static constexpr PartMask all(int n) {
        return PartMask{n >= 6 ? ~std::uint64_t{0} >> 1 : (std::uint64_t{1} << ((1u << n) - 1)) - 1};
    }

    /// The single part whose hypothesis set is `subset` (bit i-1 = θ_i).
    static constexpr PartMask part(std::uint32_t subset) { return PartMask{std::uint64_t{1} << (subset - 1)}; }

    [[nodiscard]] constexpr std::uint64_t bits() const { return bits_; }
    [[nodiscard]] constexpr bool empty() const { return bits_ == 0; }
    [[nodiscard]] constexpr int count() const { return std::popcount(bits_); }
    [[nodiscard]] constexpr bool contains_part(std::uint32_t subset) const { return (bits_ >> (subset - 1)) & 1u; }

    /// a.subset_of(b) iff every part of a is a part of b.
    [[nodiscard]] constexpr bool subset_of(PartMask o) const { return (bits_ & ~o.bits_) == 0; }

    constexpr PartMask operator&(PartMask o) const { return PartMask{bits_ & o.bits_}; }
    constexpr PartMask operator|(PartMask o) const { return PartMask{bits_ | o.bits_}; }
    /// Parts of *this that are not in o.
    constexpr PartMask minus(PartMask o) const { return PartMask{bits_ & ~o.bits_}; }
    constexpr PartMask& operator&=(PartMask o) {
        bits_ &= o.bits_;
        return *this;
    }
    constexpr PartMask& operator|=(PartMask o) {
        bits_ |= o.bits_;
        return *this;
    }

    constexpr bool operator==(const PartMask&) const = default;

    /// Lattice enumeration order: part count first, then the raw bit pattern.
    constexpr bool operator<(PartMask o) const {
        const int a = count(), b = o.count();
        return a != b ? a < b : bits_ < o.bits_;
    }

  private:
    std::uint64_t bits_{0};
};

/// Mask of every part contained in hypothesis θ_index (1-based).
constexpr PartMask singleton_parts(int n, int index) {
    std::uint64_t bits = 0;
    const std::uint32_t top = 1u << n;
    for (std::uint32_t s = 1; s < top; ++s) {
        if ((s >> (index - 1)) & 1u) bits |= std::uint64_t{1} << (s - 1);
    }
    return PartMask{bits};
}

} // namespace dsmt

template <>
struct std::hash<dsmt::PartMask> {
    std::size_t operator()(dsmt::PartMask m) const noexcept { return std::hash<std::uint64_t>{}(m.bits()); }
};
