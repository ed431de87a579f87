#include "galedim/lz78.hpp"

#include <algorithm>
#include <array>
#include <cmath>

#include "galedim/errors.hpp"

namespace galedim {

uint64_t lz78_code_bits_for_count(uint64_t c) {
    // ceil(log2 j) is constant (= t) on j in [2^(t-1)+1, 2^t]; sum blockwise.
    uint64_t bits = c;  // the +1 per phrase
    uint64_t t = 1;
    uint64_t lo = 2;  // j = 1 contributes ceil(log2 1) = 0
    while (lo <= c) {
        uint64_t hi = std::min(c, uint64_t{1} << t);
        bits += t * (hi - lo + 1);
        lo = hi + 1;
        ++t;
    }
    return bits;
}

uint64_t Lz78Code::code_bits() const { return lz78_code_bits_for_count(phrase_count()); }

namespace {

struct Trie {
    // children[node] = {child on 0, child on 1}; 0 = root = empty phrase.
    std::vector<std::array<uint64_t, 2>> children{{0, 0}};

    uint64_t step(uint64_t node, uint8_t b) const { return children[node][b]; }
    uint64_t add(uint64_t node, uint8_t b) {
        children.push_back({0, 0});
        uint64_t fresh = children.size() - 1;
        children[node][b] = fresh;
        return fresh;
    }
};

}  // namespace

Lz78Code lz78_compress(const Bits& w) {
    Lz78Code code;
    code.source_length = w.size();
    Trie trie;
    uint64_t node = 0;
    for (uint8_t b : w) {
        uint64_t next = trie.step(node, b);
        if (next != 0) {
            node = next;
        } else {
            code.phrases.push_back({node, b});
            trie.add(node, b);
            node = 0;
        }
    }
    if (node != 0) code.partial = node;
    return code;
}

Bits lz78_decompress(const Lz78Code& code) {
    // phrase_bits[j] = the full string of phrase j, phrase 0 empty.
    std::vector<Bits> phrase_bits(1);
    Bits out;
    out.reserve(code.source_length);
    for (const auto& ph : code.phrases) {
        if (ph.prev >= phrase_bits.size()) throw StructureError("phrase refers forward");
        Bits full = phrase_bits[ph.prev];
        full.push_back(ph.bit);
        out.insert(out.end(), full.begin(), full.end());
        phrase_bits.push_back(std::move(full));
    }
    if (code.partial) {
        if (*code.partial >= phrase_bits.size()) throw StructureError("phrase refers forward");
        const Bits& full = phrase_bits[*code.partial];
        out.insert(out.end(), full.begin(), full.end());
    }
    return out;
}

std::vector<std::size_t> default_checkpoints(std::size_t n) {
    std::vector<std::size_t> cps;
    double m = 256;
    while (static_cast<std::size_t>(m) < n) {
        std::size_t mi = static_cast<std::size_t>(m);
        if (mi >= 1 && (cps.empty() || mi > cps.back())) cps.push_back(mi);
        m *= 1.1;
    }
    if (n >= 1 && (cps.empty() || cps.back() != n)) cps.push_back(n);
    return cps;
}

CompressionTrace compress_trace(const Bits& prefix, const std::vector<std::size_t>& checkpoints) {
    for (std::size_t i = 0; i < checkpoints.size(); ++i) {
        if (checkpoints[i] < 1 || checkpoints[i] > prefix.size())
            throw DomainError("checkpoint outside [1, n]");
        if (i && checkpoints[i] <= checkpoints[i - 1])
            throw DomainError("checkpoints must be strictly increasing");
    }

    CompressionTrace trace;
    trace.n = prefix.size();
    trace.samples.reserve(checkpoints.size());

    Trie trie;
    uint64_t node = 0, complete = 0;
    std::size_t next_cp = 0;
    for (std::size_t i = 0; i < prefix.size(); ++i) {
        uint8_t b = prefix[i];
        uint64_t next = trie.step(node, b);
        if (next != 0) {
            node = next;
        } else {
            ++complete;
            trie.add(node, b);
            node = 0;
        }
        while (next_cp < checkpoints.size() && checkpoints[next_cp] == i + 1) {
            uint64_t c = complete + (node != 0 ? 1 : 0);
            trace.samples.emplace_back(i + 1, lz78_code_bits_for_count(c));
            ++next_cp;
        }
    }
    return trace;
}

DimEstimates dim_estimates(const CompressionTrace& trace, std::size_t window_lo_override) {
    DimEstimates est;
    est.window_lo = window_lo_override == 0 ? window_start(trace.n) : window_lo_override;
    est.window_hi = trace.n;
    est.lower = 2.0;
    est.upper = 0.0;
    bool any = false;
    for (const auto& [m, bits] : trace.samples) {
        if (m < est.window_lo) continue;
        double r = static_cast<double>(bits) / static_cast<double>(m);
        est.lower = std::min(est.lower, r);
        est.upper = std::max(est.upper, r);
        any = true;
    }
    if (!any) throw DomainError("no checkpoint falls inside the window");
    return est;
}

DimEstimates dim_estimates(const Bits& prefix, const std::vector<std::size_t>& checkpoints) {
    if (prefix.size() < 1024) throw DomainError("dimension estimates need at least 1024 bits");
    return dim_estimates(compress_trace(prefix, checkpoints));
}

}  // namespace galedim
