#include "galedim/rng.hpp"

namespace galedim {

uint64_t splitmix64(uint64_t x) {
    x += 0x9e3779b97f4a7c15ull;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ull;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebull;
    return x ^ (x >> 31);
}

uint64_t derive_seed(uint64_t seed, uint64_t stream) {
    return splitmix64(seed + stream * 0x9e3779b97f4a7c15ull);
}

uint64_t BitSampler::next_index(uint64_t n) {
    if (n == 0) throw DomainError("next_index needs n > 0");
    uint64_t limit = UINT64_MAX - UINT64_MAX % n;
    for (;;) {
        uint64_t v = gen_();
        if (v < limit) return v % n;
    }
}

}  // namespace galedim
