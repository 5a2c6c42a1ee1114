#pragma once

#include <cmath>
#include <cstdint>
#include <vector>

#include "cranq/active_space.hpp"
#include "cranq/common.hpp"
#include "cranq/pauli.hpp"

namespace cranq {

/// Dense amplitude array over 2^n computational basis states. Bit p of a
/// basis index is the occupation of spin orbital / qubit p.
struct StateVector {
    int n_qubits = 0;
    std::vector<cxd> amp;

    StateVector() = default;
    explicit StateVector(int nq) : n_qubits(nq) {
        if (nq < 1 || nq > 20) throw std::invalid_argument("StateVector: qubit count out of [1,20]");
        amp.assign(std::size_t{1} << nq, cxd{0.0, 0.0});
    }

    std::size_t dim() const { return amp.size(); }

    double norm() const {
        double s = 0.0;
        for (const auto& a : amp) s += std::norm(a);
        return std::sqrt(s);
    }

    void set_basis_state(std::uint32_t index) {
        std::fill(amp.begin(), amp.end(), cxd{0.0, 0.0});
        amp[index] = 1.0;
    }
};

/// Reference determinant: qubits (2k, 2k+1) occupied for the lowest
/// n_act/2 levels.
inline StateVector prepare_reference(int n_qubits, int n_act) {
    if (n_act % 2 != 0 || n_act <= 0 || n_act > n_qubits)
        throw std::invalid_argument("prepare_reference: bad n_act");
    StateVector sv(n_qubits);
    sv.set_basis_state((1u << n_act) - 1u);
    return sv;
}

inline StateVector prepare_reference(const ActiveSpace& active) {
    return prepare_reference(2 * active.m, active.n_act);
}

namespace detail {

inline std::uint32_t between_mask(int p, int q) {
    const int lo = std::min(p, q), hi = std::max(p, q);
    std::uint32_t m = 0;
    for (int i = lo + 1; i < hi; ++i) m |= 1u << i;
    return m;
}

/// Core of exp[(phi/2)(a_p† a_q - a_q† a_p)] on one (n, n^flip) pair,
/// where n has q occupied and p empty. s is the JW parity between p, q.
inline void single_rotate(std::vector<cxd>& amp, std::uint32_t n, std::uint32_t partner, double c, double s_sin) {
    const cxd an = amp[n], ap = amp[partner];
    amp[n] = c * an - s_sin * ap;
    amp[partner] = s_sin * an + c * ap;
}

}  // namespace detail

/// Exact U_S(phi) = exp[(phi/2)(a_p† a_q - a_q† a_p)].
inline void apply_single_excitation(StateVector& sv, int p, int q, double phi) {
    if (p == q) throw std::invalid_argument("apply_single_excitation: p == q");
    if (p < 0 || q < 0 || p >= sv.n_qubits || q >= sv.n_qubits)
        throw std::out_of_range("apply_single_excitation: index out of range");
    const std::uint32_t bp = 1u << p, bq = 1u << q, flip = bp | bq;
    const std::uint32_t between = detail::between_mask(p, q);
    const double c = std::cos(0.5 * phi), s = std::sin(0.5 * phi);
    const std::uint32_t dim = static_cast<std::uint32_t>(sv.dim());
    for (std::uint32_t n = 0; n < dim; ++n) {
        if ((n & bq) && !(n & bp)) {
            const double sgn = (std::popcount(n & between) & 1) ? -1.0 : 1.0;
            detail::single_rotate(sv.amp, n, n ^ flip, c, sgn * s);
        }
    }
}

/// Exact pair transfer U_D(theta) between levels l -> k, generator
/// a_{2k}† a_{2k+1}† a_{2l} a_{2l+1} - h.c. (the (k+, k-, l-, l+) index
/// order). Inter-pair JW parity cancels, so the rotation sign is fixed.
inline void apply_pair_excitation(StateVector& sv, int k, int l, double theta) {
    if (k == l) throw std::invalid_argument("apply_pair_excitation: k == l");
    const int qmax = std::max(2 * k + 1, 2 * l + 1);
    if (k < 0 || l < 0 || qmax >= sv.n_qubits) throw std::out_of_range("apply_pair_excitation: index out of range");
    const std::uint32_t mk = 3u << (2 * k), ml = 3u << (2 * l), flip = mk | ml;
    const double c = std::cos(0.5 * theta), s = std::sin(0.5 * theta);
    const std::uint32_t dim = static_cast<std::uint32_t>(sv.dim());
    for (std::uint32_t n = 0; n < dim; ++n) {
        if ((n & ml) == ml && (n & mk) == 0) {
            const std::uint32_t np = n ^ flip;
            const cxd an = sv.amp[n], ak = sv.amp[np];
            sv.amp[n] = c * an + s * ak;
            sv.amp[np] = -s * an + c * ak;
        }
    }
}

/// <psi| op |psi> for a general (possibly non-Hermitian) PauliSum.
inline cxd expectation_complex(const StateVector& sv, const PauliSum& op) {
    if (op.n_qubits != sv.n_qubits) throw std::invalid_argument("expectation: qubit count mismatch");
    cxd total{0.0, 0.0};
    const std::uint32_t dim = static_cast<std::uint32_t>(sv.dim());
    for (const auto& t : op.terms) {
        const cxd pref = t.coeff * detail::i_power(std::popcount(t.x & t.z));
        cxd acc{0.0, 0.0};
        for (std::uint32_t n = 0; n < dim; ++n) {
            const double sign = (std::popcount(n & t.z) & 1) ? -1.0 : 1.0;
            acc += std::conj(sv.amp[n ^ t.x]) * (sign * sv.amp[n]);
        }
        total += pref * acc;
    }
    return total;
}

/// <psi| op |psi> for a Hermitian PauliSum (real coefficients required).
inline double expectation(const StateVector& sv, const PauliSum& op) {
    if (op.max_abs_imag() > 1e-10) throw std::invalid_argument("expectation: non-Hermitian operator");
    const cxd v = expectation_complex(sv, op);
    if (std::abs(v.imag()) > 1e-10) throw std::runtime_error("expectation: imaginary residue too large");
    return v.real();
}

/// Expectation evaluator precompiled from a Hermitian PauliSum: diagonal
/// terms are folded into a per-index profile, off-diagonal terms grouped
/// by X-mask with per-group sign tables when the group's Z support is
/// compact. The reduction domain may be restricted to a fixed-N index set
/// when the state provably has no support elsewhere.
class CompiledPauli {
  public:
    CompiledPauli() = default;

    explicit CompiledPauli(const PauliSum& op) : nq_(op.n_qubits) {
        std::vector<PauliTerm> diag;
        std::map<std::uint32_t, std::vector<std::pair<std::uint32_t, cxd>>> by_x;
        for (const auto& t : op.terms) {
            if (t.x == 0) {
                diag.push_back(t);
            } else {
                by_x[t.x].emplace_back(t.z, t.coeff * detail::i_power(std::popcount(t.x & t.z)));
            }
        }
        diag_profile_.assign(std::size_t{1} << nq_, 0.0);
        for (std::uint32_t n = 0; n < diag_profile_.size(); ++n) {
            double d = 0.0;
            for (const auto& t : diag) {
                d += ((std::popcount(n & t.z) & 1) ? -t.coeff.real() : t.coeff.real());
            }
            diag_profile_[n] = d;
        }
        for (auto& [x, zc] : by_x) {
            Group g;
            g.x = x;
            g.zc = std::move(zc);
            std::uint32_t zu = 0;
            for (const auto& [z, c] : g.zc) zu |= z;
            if (g.zc.size() >= 4 && std::popcount(zu) <= 8) {
                g.use_table = true;
                for (int b = 0; b < 32; ++b)
                    if ((zu >> b) & 1) g.zu_bits.push_back(b);
                const std::size_t tsize = std::size_t{1} << g.zu_bits.size();
                g.table.assign(tsize, cxd{0.0, 0.0});
                for (std::size_t key = 0; key < tsize; ++key) {
                    std::uint32_t n = 0;
                    for (std::size_t i = 0; i < g.zu_bits.size(); ++i)
                        if ((key >> i) & 1) n |= 1u << g.zu_bits[i];
                    cxd v{0.0, 0.0};
                    for (const auto& [z, c] : g.zc) v += ((std::popcount(n & z) & 1) ? -c : c);
                    g.table[key] = v;
                }
            }
            groups_.push_back(std::move(g));
        }
    }

    /// domain = nullptr sweeps all indices; otherwise only the given ones.
    double evaluate(const StateVector& sv, const std::vector<std::uint32_t>* domain = nullptr) const {
        double e_diag = 0.0;
        cxd e_off{0.0, 0.0};
        auto visit = [&](std::uint32_t n) {
            e_diag += std::norm(sv.amp[n]) * diag_profile_[n];
            for (const auto& g : groups_) {
                const cxd cross = std::conj(sv.amp[n ^ g.x]) * sv.amp[n];
                if (g.use_table) {
                    std::size_t key = 0;
                    for (std::size_t i = 0; i < g.zu_bits.size(); ++i)
                        key |= static_cast<std::size_t>((n >> g.zu_bits[i]) & 1u) << i;
                    e_off += cross * g.table[key];
                } else {
                    cxd s{0.0, 0.0};
                    for (const auto& [z, c] : g.zc) s += ((std::popcount(n & z) & 1) ? -c : c);
                    e_off += cross * s;
                }
            }
        };
        if (domain) {
            for (std::uint32_t n : *domain) visit(n);
        } else {
            for (std::uint32_t n = 0; n < (1u << nq_); ++n) visit(n);
        }
        return e_diag + e_off.real();
    }

    int n_qubits() const { return nq_; }

  private:
    struct Group {
        std::uint32_t x = 0;
        std::vector<std::pair<std::uint32_t, cxd>> zc;
        bool use_table = false;
        std::vector<int> zu_bits;
        std::vector<cxd> table;
    };
    int nq_ = 0;
    std::vector<double> diag_profile_;
    std::vector<Group> groups_;
};

namespace detail {

/// Sector-restricted gate kernels for states supported on a fixed-N
/// domain (both rotation partners stay inside the domain).
inline void apply_single_sector(StateVector& sv, int p, int q, double phi,
                                const std::vector<std::uint32_t>& domain) {
    const std::uint32_t bp = 1u << p, bq = 1u << q, flip = bp | bq;
    const std::uint32_t between = between_mask(p, q);
    const double c = std::cos(0.5 * phi), s = std::sin(0.5 * phi);
    for (std::uint32_t n : domain) {
        if ((n & bq) && !(n & bp)) {
            const double sgn = (std::popcount(n & between) & 1) ? -1.0 : 1.0;
            single_rotate(sv.amp, n, n ^ flip, c, sgn * s);
        }
    }
}

inline void apply_pair_sector(StateVector& sv, int k, int l, double theta,
                              const std::vector<std::uint32_t>& domain) {
    const std::uint32_t mk = 3u << (2 * k), ml = 3u << (2 * l), flip = mk | ml;
    const double c = std::cos(0.5 * theta), s = std::sin(0.5 * theta);
    for (std::uint32_t n : domain) {
        if ((n & ml) == ml && (n & mk) == 0) {
            const std::uint32_t np = n ^ flip;
            const cxd an = sv.amp[n], ak = sv.amp[np];
            sv.amp[n] = c * an + s * ak;
            sv.amp[np] = -s * an + c * ak;
        }
    }
}

}  // namespace detail

}  // namespace cranq
