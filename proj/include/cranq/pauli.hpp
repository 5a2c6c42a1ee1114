#pragma once

#include <Eigen/Dense>
#include <algorithm>
#include <cstdint>
#include <cstdio>
#include <map>
#include <string>
#include <vector>

#include "cranq/common.hpp"
#include "cranq/fermion.hpp"

namespace cranq {

/// One Pauli string in symplectic form: the operator is the literal tensor
/// product with X where x-bit only, Z where z-bit only, Y where both.
struct PauliTerm {
    std::uint32_t x = 0;
    std::uint32_t z = 0;
    cxd coeff{0.0, 0.0};
};

inline constexpr double kPauliPruneThreshold = 1e-12;

namespace detail {

/// Phase of the literal product P(x1,z1) P(x2,z2) = i^g P(x1^x2, z1^z2).
inline int pauli_mult_phase(std::uint32_t x1, std::uint32_t z1, std::uint32_t x2, std::uint32_t z2) {
    const std::uint32_t X1 = x1 & ~z1, Y1 = x1 & z1, Z1 = ~x1 & z1;
    const std::uint32_t X2 = x2 & ~z2, Y2 = x2 & z2, Z2 = ~x2 & z2;
    int g = std::popcount(X1 & Y2) - std::popcount(X1 & Z2) - std::popcount(Y1 & X2) +
            std::popcount(Y1 & Z2) + std::popcount(Z1 & X2) - std::popcount(Z1 & Y2);
    return ((g % 4) + 4) % 4;
}

inline cxd i_power(int g) {
    switch (g & 3) {
        case 0: return {1.0, 0.0};
        case 1: return {0.0, 1.0};
        case 2: return {-1.0, 0.0};
        default: return {0.0, -1.0};
    }
}

}  // namespace detail

/// Weighted sum of Pauli strings on `n_qubits` qubits, canonically sorted
/// by (z, x), like terms merged, |coeff| < 1e-12 pruned.
struct PauliSum {
    int n_qubits = 0;
    std::vector<PauliTerm> terms;

    PauliSum() = default;
    explicit PauliSum(int nq) : n_qubits(nq) {}

    static PauliSum from_terms(int nq, std::vector<PauliTerm> raw) {
        std::map<std::pair<std::uint32_t, std::uint32_t>, cxd> merged;
        for (const auto& t : raw) merged[{t.z, t.x}] += t.coeff;
        PauliSum out(nq);
        for (const auto& [zx, c] : merged) {
            if (std::abs(c) >= kPauliPruneThreshold) out.terms.push_back({zx.second, zx.first, c});
        }
        return out;
    }

    PauliSum operator+(const PauliSum& o) const {
        std::vector<PauliTerm> all = terms;
        all.insert(all.end(), o.terms.begin(), o.terms.end());
        return from_terms(n_qubits, std::move(all));
    }

    PauliSum scaled(cxd f) const {
        PauliSum out(n_qubits);
        out.terms = terms;
        for (auto& t : out.terms) t.coeff *= f;
        return out;
    }

    PauliSum operator*(const PauliSum& o) const {
        std::vector<PauliTerm> prod;
        prod.reserve(terms.size() * o.terms.size());
        for (const auto& a : terms) {
            for (const auto& b : o.terms) {
                const int g = detail::pauli_mult_phase(a.x, a.z, b.x, b.z);
                prod.push_back({a.x ^ b.x, a.z ^ b.z, a.coeff * b.coeff * detail::i_power(g)});
            }
        }
        return from_terms(n_qubits, std::move(prod));
    }

    double max_abs_coeff() const {
        double m = 0.0;
        for (const auto& t : terms) m = std::max(m, std::abs(t.coeff));
        return m;
    }

    double max_abs_imag() const {
        double m = 0.0;
        for (const auto& t : terms) m = std::max(m, std::abs(t.coeff.imag()));
        return m;
    }
};

inline PauliSum commutator(const PauliSum& a, const PauliSum& b) {
    return a * b + (b * a).scaled(-1.0);
}

/// Jordan-Wigner image of a fermionic operator:
/// a_p -> Z_0..Z_{p-1} (X_p + iY_p)/2, a_p† the conjugate.
inline PauliSum jordan_wigner(const FermionOperator& op, int qubit_count) {
    if (qubit_count < 1 || qubit_count > 30) throw std::invalid_argument("jordan_wigner: bad qubit_count");
    std::vector<PauliTerm> acc;
    for (const auto& term : op.terms) {
        // running product, ordered left to right as written
        std::vector<PauliTerm> prod{{0u, 0u, term.coeff}};
        for (const auto& f : term.factors) {
            if (f.index >= qubit_count) throw std::out_of_range("jordan_wigner: index out of range");
            const std::uint32_t bit = 1u << f.index;
            const std::uint32_t chain = bit - 1;
            const PauliTerm x_part{bit, chain, {0.5, 0.0}};
            const PauliTerm y_part{bit, chain | bit, f.creation ? cxd{0.0, -0.5} : cxd{0.0, 0.5}};
            std::vector<PauliTerm> next;
            next.reserve(prod.size() * 2);
            for (const auto& a : prod) {
                for (const auto& b : {x_part, y_part}) {
                    const int g = detail::pauli_mult_phase(a.x, a.z, b.x, b.z);
                    next.push_back({a.x ^ b.x, a.z ^ b.z, a.coeff * b.coeff * detail::i_power(g)});
                }
            }
            prod = std::move(next);
        }
        acc.insert(acc.end(), prod.begin(), prod.end());
    }
    return PauliSum::from_terms(qubit_count, std::move(acc));
}

/// Dense matrix of a PauliSum; test/oracle support only.
inline Eigen::MatrixXcd pauli_matrix(const PauliSum& op, int qubit_count) {
    if (qubit_count < 1 || qubit_count > 10) throw std::invalid_argument("pauli_matrix: qubit_count too large");
    const std::size_t dim = std::size_t{1} << qubit_count;
    Eigen::MatrixXcd mat = Eigen::MatrixXcd::Zero(dim, dim);
    for (const auto& t : op.terms) {
        const cxd pref = t.coeff * detail::i_power(std::popcount(t.x & t.z));
        for (std::size_t n = 0; n < dim; ++n) {
            const double sign = (std::popcount(static_cast<std::uint32_t>(n) & t.z) & 1) ? -1.0 : 1.0;
            mat(n ^ t.x, n) += pref * sign;
        }
    }
    return mat;
}

inline std::string pauli_word(const PauliTerm& t, int n_qubits) {
    std::string w(n_qubits, 'I');
    for (int q = 0; q < n_qubits; ++q) {
        const bool xb = (t.x >> q) & 1, zb = (t.z >> q) & 1;
        if (xb && zb) w[q] = 'Y';
        else if (xb) w[q] = 'X';
        else if (zb) w[q] = 'Z';
    }
    return w;
}

/// Debug dump, one "coefficient pauli_word" line per term.
inline std::string to_text(const PauliSum& op) {
    std::string out;
    char buf[96];
    for (const auto& t : op.terms) {
        std::snprintf(buf, sizeof(buf), "%+.12g%+.12gi %s\n", t.coeff.real(), t.coeff.imag(),
                      pauli_word(t, op.n_qubits).c_str());
        out += buf;
    }
    return out;
}

}  // namespace cranq
