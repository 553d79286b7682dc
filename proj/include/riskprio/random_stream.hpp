#pragma once

#include <array>
#include <cstdint>
#include <string_view>

namespace riskprio {

// Philox4x32-10 block cipher (Salmon et al., SC'11). Stateless: the same
// (counter, key) always yields the same four words.
std::array<std::uint32_t, 4> philox4x32_10(std::array<std::uint32_t, 4> counter,
                                            std::array<std::uint32_t, 2> key);

// Identifies one independent source of randomness inside a scenario: an
// activity's duration or a single risk.
enum class SourceKind : std::uint32_t { activity = 1, risk = 2 };

std::uint64_t source_key(SourceKind kind, std::string_view id);

// Uniform variates for one (seed, source, iteration) cell. Variate k is a
// pure function of (seed, source, iteration, k), so draws never shift when
// other sources are added or removed, or when iterations run out of order.
class SubstreamCell {
public:
    SubstreamCell(std::uint64_t seed, std::uint64_t source, std::uint32_t iteration)
        : seed_(seed), source_(source), iteration_(iteration) {}

    // Double in [0, 1) with 53 random bits; k < 2^31.
    double uniform(std::uint32_t k) const;

private:
    std::uint64_t seed_;
    std::uint64_t source_;
    std::uint32_t iteration_;
};

}  // namespace riskprio
