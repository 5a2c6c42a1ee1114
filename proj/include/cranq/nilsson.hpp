#pragma once

#include <Eigen/Dense>
#include <algorithm>
#include <array>
#include <cmath>
#include <cstdio>
#include <stdexcept>
#include <string>
#include <vector>

#include "cranq/angular.hpp"
#include "cranq/common.hpp"

namespace cranq {

/// Shell-dependent parameters of the deformed-oscillator single-particle
/// Hamiltonian: h(delta) = h0(delta) - kappa*hw0*[2 l.s + mu*(l^2 - <l^2>_N)].
struct NilssonParams {
    std::array<double, 8> kappa_by_shell{};
    std::array<double, 8> mu_by_shell{};
    double hbar_omega0 = 0.0;  // MeV

    static NilssonParams defaults(double hbar_omega0_mev) {
        NilssonParams p;
        p.kappa_by_shell = {0.05, 0.05, 0.05, 0.05, 0.05, 0.0637, 0.0637, 0.06};
        p.mu_by_shell = {0.0, 0.0, 0.0, 0.35, 0.625, 0.600, 0.600, 0.54};
        p.hbar_omega0 = hbar_omega0_mev;
        p.validate();
        return p;
    }

    void validate() const {
        if (!(hbar_omega0 > 0.0)) throw std::invalid_argument("NilssonParams: hbar_omega0 must be > 0");
    }
};

/// hw0 = coeff * A^(-1/3), same for both species.
inline double hbar_omega0_for_mass(int mass_number, double coeff = 41.0) {
    if (mass_number <= 0) throw std::invalid_argument("hbar_omega0_for_mass: A must be positive");
    return coeff * std::pow(static_cast<double>(mass_number), -1.0 / 3.0);
}

/// Volume-conserving frequency: omega0 * (1 - 4/3 d^2 - 16/27 d^3)^(-1/6).
inline double volume_conserving_omega(double omega0, double delta) {
    const double f = 1.0 - (4.0 / 3.0) * delta * delta - (16.0 / 27.0) * delta * delta * delta;
    if (!(f > 0.0)) throw std::domain_error("volume_conserving_omega: deformation out of range");
    return omega0 * std::pow(f, -1.0 / 6.0);
}

/// Spherical-oscillator basis state |N l Lambda Sigma>. Sigma is stored
/// doubled (+1 or -1); Omega = Lambda + Sigma/2 is implied.
struct SphericalBasisState {
    int N = 0;
    int l = 0;
    int Lambda = 0;
    int two_Sigma = 1;  // +1 or -1

    int two_Omega() const { return 2 * Lambda + two_Sigma; }
    int parity() const { return (N % 2 == 0) ? +1 : -1; }

    bool operator==(const SphericalBasisState& o) const {
        return N == o.N && l == o.l && Lambda == o.Lambda && two_Sigma == o.two_Sigma;
    }
};

/// Enumerates all |N l Lambda Sigma> with N <= n_max, ordered
/// lexicographically by (N, l, Lambda, Sigma).
inline std::vector<SphericalBasisState> build_spherical_basis(int n_max) {
    if (n_max < 0 || n_max > 7) throw std::invalid_argument("build_spherical_basis: n_max out of [0,7]");
    std::vector<SphericalBasisState> basis;
    for (int N = 0; N <= n_max; ++N) {
        for (int l = N % 2; l <= N; l += 2) {
            for (int Lambda = -l; Lambda <= l; ++Lambda) {
                for (int two_Sigma : {-1, +1}) {
                    basis.push_back({N, l, Lambda, two_Sigma});
                }
            }
        }
    }
    return basis;
}

/// Asymptotic Nilsson label Omega[N n_z Lambda].
struct AsymptoticLabel {
    int two_Omega = 1;
    int N = 0;
    int n_z = 0;
    int Lambda = 0;

    std::string str() const {
        char buf[32];
        std::snprintf(buf, sizeof(buf), "%d/2[%d%d%d]", two_Omega, N, n_z, Lambda);
        return buf;
    }
};

/// One doubly degenerate deformed orbital: the stored eigenvector is the
/// Omega > 0 member of the Kramers pair, expanded over `states` (all of
/// which share two_Omega = two_omega and the level parity).
struct NilssonLevel {
    double energy = 0.0;  // MeV
    int two_omega = 1;    // 2|Omega|
    int parity = +1;
    std::vector<SphericalBasisState> states;
    std::vector<double> coeffs;
    AsymptoticLabel label;
};

namespace detail {

/// Within-shell radial integral <N l' | r^2 | N l> in oscillator units.
inline double radial_r2_same_shell(int N, int lp, int l) {
    if (lp == l) return N + 1.5;
    const int lo = std::min(l, lp);
    if (std::abs(lp - l) == 2) return std::sqrt(static_cast<double>((N - lo) * (N + lo + 3)));
    return 0.0;
}

/// <N l' Lambda | r^2 Y_20 | N l Lambda>, within one major shell.
inline double quad_element(int N, int lp, int l, int Lambda) {
    return radial_r2_same_shell(N, lp, l) * y20_element(lp, l, Lambda);
}

/// Time reversal T = exp(-i pi j_y) K on a basis state with real
/// coefficients: |l Lambda Sigma> -> phase * |l -Lambda -Sigma>,
/// phase = (-1)^(l - Lambda) * sign(Sigma).
inline double time_reversal_phase(const SphericalBasisState& s) {
    const double orb = ((s.l - s.Lambda) % 2 == 0) ? 1.0 : -1.0;
    return (s.two_Sigma > 0) ? orb : -orb;
}

inline SphericalBasisState time_reversed(const SphericalBasisState& s) {
    return {s.N, s.l, -s.Lambda, -s.two_Sigma};
}

/// Single-particle <a|j_x|b> in the spherical basis, j_x = l_x + s_x.
/// Nonzero only within one (N, l) and for |Delta Omega| = 1.
inline double jx_sp_element(const SphericalBasisState& a, const SphericalBasisState& b) {
    if (a.N != b.N || a.l != b.l) return 0.0;
    const double l = a.l;
    if (a.two_Sigma == b.two_Sigma) {
        if (a.Lambda == b.Lambda + 1) return 0.5 * std::sqrt(l * (l + 1.0) - b.Lambda * (b.Lambda + 1.0));
        if (a.Lambda == b.Lambda - 1) return 0.5 * std::sqrt(l * (l + 1.0) - b.Lambda * (b.Lambda - 1.0));
        return 0.0;
    }
    if (a.Lambda == b.Lambda) return 0.5;
    return 0.0;
}

struct Block {
    int N;
    int two_Omega;  // > 0
    std::vector<SphericalBasisState> states;
};

inline std::vector<Block> positive_omega_blocks(int n_max) {
    std::vector<Block> blocks;
    for (int N = 0; N <= n_max; ++N) {
        for (int two_Omega = 1; two_Omega <= 2 * N + 1; two_Omega += 2) {
            Block b{N, two_Omega, {}};
            for (int l = N % 2; l <= N; l += 2) {
                for (int two_Sigma : {+1, -1}) {
                    const int twoL = two_Omega - two_Sigma;
                    if (twoL % 2 != 0) continue;
                    const int Lambda = twoL / 2;
                    if (Lambda < -l || Lambda > l) continue;
                    b.states.push_back({N, l, Lambda, two_Sigma});
                }
            }
            std::sort(b.states.begin(), b.states.end(), [](const auto& x, const auto& y) {
                if (x.l != y.l) return x.l < y.l;
                if (x.Lambda != y.Lambda) return x.Lambda < y.Lambda;
                return x.two_Sigma < y.two_Sigma;
            });
            if (!b.states.empty()) blocks.push_back(std::move(b));
        }
    }
    return blocks;
}

/// Assigns Omega[N n_z Lambda] by largest overlap with the cylindrical
/// basis at the evaluation deformation. The cylindrical states are the
/// eigenvectors of the within-shell quadrupole (eigenvalue 3 n_z - N in
/// units of sqrt(5/16pi)), so no separate bracket table is needed.
inline AsymptoticLabel assign_label(const Block& blk, const Eigen::VectorXd& vec) {
    const int n = static_cast<int>(blk.states.size());
    double best = -1.0;
    AsymptoticLabel lab{blk.two_Omega, blk.N, 0, 0};
    for (int two_Sigma : {+1, -1}) {
        const int twoL = blk.two_Omega - two_Sigma;
        if (twoL % 2 != 0) continue;
        const int Lambda = twoL / 2;
        // l values available for this (N, Lambda)
        std::vector<int> ls, rows;
        for (int i = 0; i < n; ++i) {
            if (blk.states[i].Lambda == Lambda && blk.states[i].two_Sigma == two_Sigma) {
                ls.push_back(blk.states[i].l);
                rows.push_back(i);
            }
        }
        if (ls.empty()) continue;
        const int d = static_cast<int>(ls.size());
        Eigen::MatrixXd q(d, d);
        for (int i = 0; i < d; ++i)
            for (int j = 0; j < d; ++j) q(i, j) = quad_element(blk.N, ls[i], ls[j], Lambda);
        Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(q);
        const double unit = std::sqrt(5.0 / (16.0 * M_PI));
        for (int c = 0; c < d; ++c) {
            const int n_z = static_cast<int>(std::lround((es.eigenvalues()(c) / unit + blk.N) / 3.0));
            double ov = 0.0;
            for (int i = 0; i < d; ++i) ov += vec(rows[i]) * es.eigenvectors()(i, c);
            const double p = ov * ov;
            if (p > best + 1e-12 ||
                (std::abs(p - best) <= 1e-12 && (Lambda < lab.Lambda || (Lambda == lab.Lambda && n_z > lab.n_z)))) {
                best = p;
                lab.n_z = n_z;
                lab.Lambda = Lambda;
            }
        }
    }
    return lab;
}

}  // namespace detail

/// Diagonalizes the Nilsson Hamiltonian per (N, Omega) block (parity is
/// fixed by N; Delta-N = 2 quadrupole coupling is neglected) and returns
/// the Kramers levels sorted by energy.
inline std::vector<NilssonLevel> diagonalize(const NilssonParams& params, double delta, int n_max) {
    params.validate();
    if (!(std::abs(delta) <= 0.5)) throw std::invalid_argument("diagonalize: |delta| must be <= 0.5");
    if (n_max < 0 || n_max > 7) throw std::invalid_argument("diagonalize: n_max out of [0,7]");

    const double hw0 = params.hbar_omega0;
    const double hwt = volume_conserving_omega(hw0, delta);
    const double c_quad = -delta * hwt * (4.0 / 3.0) * std::sqrt(M_PI / 5.0);

    std::vector<NilssonLevel> levels;
    for (const auto& blk : detail::positive_omega_blocks(n_max)) {
        const int n = static_cast<int>(blk.states.size());
        const double kappa = params.kappa_by_shell[blk.N];
        const double mu = params.mu_by_shell[blk.N];
        const double l2_shell_avg = 0.5 * blk.N * (blk.N + 3.0);

        Eigen::MatrixXd h = Eigen::MatrixXd::Zero(n, n);
        for (int i = 0; i < n; ++i) {
            const auto& si = blk.states[i];
            h(i, i) = hwt * (blk.N + 1.5) + c_quad * detail::quad_element(blk.N, si.l, si.l, si.Lambda) -
                      kappa * hw0 * (si.Lambda * si.two_Sigma + mu * (si.l * (si.l + 1.0) - l2_shell_avg));
            for (int j = i + 1; j < n; ++j) {
                const auto& sj = blk.states[j];
                double v = 0.0;
                if (si.two_Sigma == sj.two_Sigma && si.Lambda == sj.Lambda && std::abs(si.l - sj.l) == 2) {
                    v = c_quad * detail::quad_element(blk.N, si.l, sj.l, si.Lambda);
                } else if (si.l == sj.l && si.two_Sigma != sj.two_Sigma && std::abs(si.Lambda - sj.Lambda) == 1) {
                    // 2 l.s between (Lambda, up) and (Lambda+1, down)
                    const int Lup = (si.two_Sigma > 0) ? si.Lambda : sj.Lambda;
                    v = -kappa * hw0 * std::sqrt(si.l * (si.l + 1.0) - Lup * (Lup + 1.0));
                }
                h(i, j) = v;
                h(j, i) = v;
            }
        }
        if (!h.allFinite()) throw std::runtime_error("diagonalize: non-finite matrix entry");

        Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(h);
        if (es.info() != Eigen::Success) throw std::runtime_error("diagonalize: eigensolver failure");

        for (int c = 0; c < n; ++c) {
            NilssonLevel lvl;
            lvl.energy = es.eigenvalues()(c);
            lvl.two_omega = blk.two_Omega;
            lvl.parity = (blk.N % 2 == 0) ? +1 : -1;
            lvl.states = blk.states;
            Eigen::VectorXd v = es.eigenvectors().col(c);
            int imax = 0;
            for (int i = 1; i < n; ++i)
                if (std::abs(v(i)) > std::abs(v(imax))) imax = i;
            if (v(imax) < 0.0) v = -v;
            lvl.coeffs.assign(v.data(), v.data() + n);
            lvl.label = detail::assign_label(blk, v);
            levels.push_back(std::move(lvl));
        }
    }

    std::sort(levels.begin(), levels.end(), [](const NilssonLevel& a, const NilssonLevel& b) {
        if (a.energy != b.energy) return a.energy < b.energy;
        if (a.label.N != b.label.N) return a.label.N < b.label.N;
        return a.two_omega < b.two_omega;
    });
    return levels;
}

/// Intrinsic-frame j_x over the spin-orbital set {k+, k-} of the given
/// levels, in units of hbar. Spin orbital 2k is the stored Omega > 0
/// eigenvector of level k, 2k+1 its time-reversed partner. Real symmetric
/// by construction; couplings require |Omega_a - Omega_b| = 1 so the only
/// (+,-) cross terms run through Omega = 1/2 levels.
inline Eigen::MatrixXd jx_matrix(const std::vector<NilssonLevel>& levels) {
    const int m = static_cast<int>(levels.size());
    auto level_vec = [&](int k, bool reversed) {
        std::vector<std::pair<SphericalBasisState, double>> v;
        const auto& lvl = levels[k];
        v.reserve(lvl.states.size());
        for (std::size_t i = 0; i < lvl.states.size(); ++i) {
            if (lvl.coeffs[i] == 0.0) continue;
            if (reversed) {
                v.emplace_back(detail::time_reversed(lvl.states[i]),
                               lvl.coeffs[i] * detail::time_reversal_phase(lvl.states[i]));
            } else {
                v.emplace_back(lvl.states[i], lvl.coeffs[i]);
            }
        }
        return v;
    };
    auto elem = [&](const auto& va, const auto& vb) {
        double s = 0.0;
        for (const auto& [sa, ca] : va)
            for (const auto& [sb, cb] : vb) s += ca * cb * detail::jx_sp_element(sa, sb);
        return s;
    };

    Eigen::MatrixXd jx = Eigen::MatrixXd::Zero(2 * m, 2 * m);
    std::vector<std::vector<std::pair<SphericalBasisState, double>>> plus(m), minus(m);
    for (int k = 0; k < m; ++k) {
        plus[k] = level_vec(k, false);
        minus[k] = level_vec(k, true);
    }
    for (int a = 0; a < 2 * m; ++a) {
        const auto& va = (a % 2 == 0) ? plus[a / 2] : minus[a / 2];
        for (int b = a; b < 2 * m; ++b) {
            const auto& vb = (b % 2 == 0) ? plus[b / 2] : minus[b / 2];
            const double v = elem(va, vb);
            jx(a, b) = v;
            jx(b, a) = v;
        }
    }
    if (!jx.allFinite() || (jx - jx.transpose()).cwiseAbs().maxCoeff() > 1e-12) {
        throw std::runtime_error("jx_matrix: non-Hermitian result");
    }
    return jx;
}

/// Debug export: index, energy_MeV, two_omega, parity, label.
inline std::string levels_to_csv(const std::vector<NilssonLevel>& levels) {
    std::string out = "index,energy_MeV,two_omega,parity,label\n";
    char buf[128];
    for (std::size_t i = 0; i < levels.size(); ++i) {
        std::snprintf(buf, sizeof(buf), "%zu,%.12g,%d,%d,%s\n", i, levels[i].energy, levels[i].two_omega,
                      levels[i].parity, levels[i].label.str().c_str());
        out += buf;
    }
    return out;
}

}  // namespace cranq
