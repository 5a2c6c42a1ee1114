#pragma once

#include <bit>
#include <complex>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace cranq {

using cxd = std::complex<double>;

inline std::uint64_t binomial(int n, int k) {
    if (k < 0 || k > n) return 0;
    if (k > n - k) k = n - k;
    std::uint64_t r = 1;
    for (int i = 1; i <= k; ++i) {
        r = r * static_cast<std::uint64_t>(n - k + i) / static_cast<std::uint64_t>(i);
    }
    return r;
}

inline int parity_of(std::uint32_t bits) { return std::popcount(bits) & 1; }

/// All 2m-bit words with `particles` set bits, ascending. Used for
/// fixed-N reduction domains and the exact-diagonalization basis.
inline std::vector<std::uint32_t> fixed_n_indices(int qubits, int particles) {
    if (qubits < 0 || qubits > 30 || particles < 0 || particles > qubits) {
        throw std::invalid_argument("fixed_n_indices: bad (qubits, particles)");
    }
    std::vector<std::uint32_t> out;
    out.reserve(binomial(qubits, particles));
    const std::uint32_t limit = 1u << qubits;
    if (particles == 0) {
        out.push_back(0);
        return out;
    }
    std::uint32_t v = (1u << particles) - 1;
    while (v < limit) {
        out.push_back(v);
        // Gosper's hack: next word with the same popcount
        std::uint32_t c = v & (0u - v);
        std::uint32_t r = v + c;
        if (r == 0) break;
        v = (((r ^ v) >> 2) / c) | r;
    }
    return out;
}

}  // namespace cranq
