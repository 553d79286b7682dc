#include "riskprio/random_stream.hpp"

namespace riskprio {

namespace {

constexpr std::uint32_t kMul0 = 0xD2511F53u;
constexpr std::uint32_t kMul1 = 0xCD9E8D57u;
constexpr std::uint32_t kWeyl0 = 0x9E3779B9u;
constexpr std::uint32_t kWeyl1 = 0xBB67AE85u;

inline void mulhilo(std::uint32_t a, std::uint32_t b, std::uint32_t& hi, std::uint32_t& lo) {
    const std::uint64_t product = static_cast<std::uint64_t>(a) * b;
    hi = static_cast<std::uint32_t>(product >> 32);
    lo = static_cast<std::uint32_t>(product);
}

}  // namespace

std::array<std::uint32_t, 4> philox4x32_10(std::array<std::uint32_t, 4> ctr,
                                            std::array<std::uint32_t, 2> key) {
    for (int round = 0; round < 10; ++round) {
        std::uint32_t hi0, lo0, hi1, lo1;
        mulhilo(kMul0, ctr[0], hi0, lo0);
        mulhilo(kMul1, ctr[2], hi1, lo1);
        ctr = {hi1 ^ ctr[1] ^ key[0], lo1, hi0 ^ ctr[3] ^ key[1], lo0};
        key[0] += kWeyl0;
        key[1] += kWeyl1;
    }
    return ctr;
}

std::uint64_t source_key(SourceKind kind, std::string_view id) {
    // FNV-1a over the id, then the kind folded into the top bits.
    std::uint64_t h = 0xcbf29ce484222325ull;
    for (unsigned char c : id) {
        h ^= c;
        h *= 0x100000001b3ull;
    }
    return h ^ (static_cast<std::uint64_t>(kind) << 60);
}

double SubstreamCell::uniform(std::uint32_t k) const {
    // Each Philox block holds two 53-bit variates.
    const std::uint32_t block = k / 2;
    const auto out = philox4x32_10(
        {iteration_, block, static_cast<std::uint32_t>(source_), static_cast<std::uint32_t>(source_ >> 32)},
        {static_cast<std::uint32_t>(seed_), static_cast<std::uint32_t>(seed_ >> 32)});
    const std::size_t w = (k % 2) * 2;
    const std::uint64_t bits = (static_cast<std::uint64_t>(out[w]) << 32 | out[w + 1]) >> 11;
    return static_cast<double>(bits) * 0x1.0p-53;
}

}  // namespace riskprio
