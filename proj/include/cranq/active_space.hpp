#pragma once

#include <stdexcept>
#include <vector>

#include "cranq/nilsson.hpp"

namespace cranq {

enum class Species { proton, neutron };

inline const char* species_name(Species s) { return s == Species::proton ? "proton" : "neutron"; }

/// M-orbital window around the Fermi surface. Orbital k occupies spin
/// orbitals (2k, 2k+1) = (k+, k-); levels are energy-ordered.
struct ActiveSpace {
    std::vector<NilssonLevel> levels;
    int n_act = 0;
    double lambda_f = 0.0;  // MeV
    Species species = Species::proton;
    int m = 0;

    void validate() const {
        if (m != static_cast<int>(levels.size())) throw std::invalid_argument("ActiveSpace: m mismatch");
        if (n_act % 2 != 0 || n_act <= 0 || n_act > 2 * m) throw std::invalid_argument("ActiveSpace: bad n_act");
    }
};

/// Chemical potential: midpoint between the highest occupied and lowest
/// unoccupied window level at reference filling; top energy if the window
/// is fully occupied.
inline double recenter_lambda(ActiveSpace& active) {
    active.validate();
    const int occ = active.n_act / 2;
    double lf;
    if (occ == active.m) {
        lf = active.levels.back().energy;
    } else {
        lf = 0.5 * (active.levels[occ - 1].energy + active.levels[occ].energy);
    }
    active.lambda_f = lf;
    return lf;
}

/// Selects the m levels nearest the naive Fermi level, split as evenly as
/// possible between occupied and unoccupied at the reference filling
/// (occupied side biased when m is odd), and sets n_act and lambda_f.
inline ActiveSpace select_window(const std::vector<NilssonLevel>& spectrum, int particle_count, int m,
                                 Species species) {
    if (particle_count % 2 != 0 || particle_count <= 0)
        throw std::invalid_argument("select_window: particle_count must be positive even");
    if (m < 2) throw std::invalid_argument("select_window: m must be >= 2");
    const int total = static_cast<int>(spectrum.size());
    if (total < m) throw std::invalid_argument("select_window: spectrum smaller than window");

    const int fermi = particle_count / 2;  // occupied levels at reference filling
    int occ = (m + 1) / 2;
    int unocc = m - occ;
    if (occ > fermi) {
        occ = fermi;
        unocc = m - occ;
    }
    if (unocc > total - fermi) {
        unocc = total - fermi;
        occ = m - unocc;
    }
    if (occ < 1 || occ > fermi || unocc < 1 || unocc > total - fermi)
        throw std::out_of_range("select_window: window would extend past spectrum bounds");

    ActiveSpace active;
    active.species = species;
    active.m = m;
    active.n_act = 2 * occ;
    active.levels.assign(spectrum.begin() + (fermi - occ), spectrum.begin() + (fermi + unocc));
    recenter_lambda(active);
    return active;
}

}  // namespace cranq
