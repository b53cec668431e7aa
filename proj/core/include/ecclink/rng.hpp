#pragma once

#include <cstdint>

namespace ecclink {

// splitmix64 finalizer. Stateless, used to spread seeds.
inline std::uint64_t mix64(std::uint64_t x) {
    x += 0x9e3779b97f4a7c15ull;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ull;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebull;
    return x ^ (x >> 31);
}

// Deterministic per-work-item seed from a master seed and up to two indices,
// so results do not depend on the order work items run in.
inline std::uint64_t derive_seed(std::uint64_t master, std::uint64_t a, std::uint64_t b = 0) {
    return mix64(mix64(master ^ mix64(a)) ^ mix64(b + 0x5851f42d4c957f2dull));
}

}  // namespace ecclink
