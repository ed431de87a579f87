#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "galedim/bits.hpp"

namespace galedim {

// LZ78 parse. Each complete phrase extends an earlier phrase (0 = the empty
// phrase) by one bit; a trailing partial phrase repeats an earlier one.
struct Lz78Code {
    struct Phrase {
        uint64_t prev;
        uint8_t bit;
    };
    std::vector<Phrase> phrases;
    std::optional<uint64_t> partial;
    uint64_t source_length = 0;

    uint64_t phrase_count() const { return phrases.size() + (partial ? 1 : 0); }
    uint64_t code_bits() const;
};

// Code length charged for c phrases: sum_{j=1..c} (ceil(log2 j) + 1).
uint64_t lz78_code_bits_for_count(uint64_t c);

Lz78Code lz78_compress(const Bits& w);
Bits lz78_decompress(const Lz78Code& code);

// Code lengths of the greedy parse sampled while reading one prefix; the
// parse of every shorter prefix is a prefix of the same parse, so one pass
// serves all checkpoints.
struct CompressionTrace {
    std::size_t n = 0;
    std::vector<std::pair<std::size_t, uint64_t>> samples;  // (m, code bits at m)
};

// Geometric checkpoints from 256 with ratio 1.1, clipped to n, plus n itself.
std::vector<std::size_t> default_checkpoints(std::size_t n);

// checkpoints must be sorted, in [1, n].
CompressionTrace compress_trace(const Bits& prefix, const std::vector<std::size_t>& checkpoints);

// min/max of code_bits/m over the checkpoints inside [ceil(n/2), n]. These
// are upper-bound surrogates for dimension and strong dimension.
struct DimEstimates {
    double lower = 0;
    double upper = 0;
    std::size_t window_lo = 0;
    std::size_t window_hi = 0;
};

// prefix length must be >= 1024.  window_lo_override = 0 means the default
// window [ceil(n/2), n].
DimEstimates dim_estimates(const Bits& prefix, const std::vector<std::size_t>& checkpoints);
DimEstimates dim_estimates(const CompressionTrace& trace, std::size_t window_lo_override = 0);

}  // namespace galedim
