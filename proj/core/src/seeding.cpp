#include "fournet/seeding.hpp"

namespace fournet {

std::uint64_t mix64(std::uint64_t x) noexcept {
    x += 0x9e3779b97f4a7c15ULL;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
    return x ^ (x >> 31);
}

std::uint64_t derive_seed(std::uint64_t base, std::uint64_t stream, std::uint64_t index) noexcept {
    std::uint64_t h = mix64(base);
    h = mix64(h ^ stream);
    h = mix64(h ^ index);
    return h;
}

} // namespace fournet
