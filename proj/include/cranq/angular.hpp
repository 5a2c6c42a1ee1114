#pragma once

#include <cmath>
#include <stdexcept>

namespace cranq {

/// Clebsch-Gordan coefficient <j1 m1 j2 m2 | j3 m3> for integer angular
/// momenta (all we need: orbital l coupled to the rank-2 quadrupole field).
/// Racah's closed form evaluated in extended precision.
inline double clebsch_gordan(int j1, int m1, int j2, int m2, int j3, int m3) {
    if (m1 + m2 != m3) return 0.0;
    if (j3 < std::abs(j1 - j2) || j3 > j1 + j2) return 0.0;
    if (std::abs(m1) > j1 || std::abs(m2) > j2 || std::abs(m3) > j3) return 0.0;

    auto lfact = [](int n) -> long double { return std::lgammal(static_cast<long double>(n) + 1.0L); };

    const long double pref =
        0.5L * (std::logl(2.0L * j3 + 1.0L) + lfact(j1 + j2 - j3) + lfact(j1 - j2 + j3) +
                lfact(-j1 + j2 + j3) - lfact(j1 + j2 + j3 + 1) + lfact(j1 + m1) + lfact(j1 - m1) +
                lfact(j2 + m2) + lfact(j2 - m2) + lfact(j3 + m3) + lfact(j3 - m3));

    long double sum = 0.0L;
    const int kmin = std::max({0, j2 - j3 - m1, j1 - j3 + m2});
    const int kmax = std::min({j1 + j2 - j3, j1 - m1, j2 + m2});
    for (int k = kmin; k <= kmax; ++k) {
        const long double lg = lfact(k) + lfact(j1 + j2 - j3 - k) + lfact(j1 - m1 - k) +
                               lfact(j2 + m2 - k) + lfact(j3 - j2 + m1 + k) + lfact(j3 - j1 - m2 + k);
        const long double term = std::expl(pref - lg);
        sum += (k % 2 == 0) ? term : -term;
    }
    return static_cast<double>(sum);
}

/// <l' Lambda | Y_20 | l Lambda> angular matrix element (Condon-Shortley).
inline double y20_element(int lp, int l, int Lambda) {
    if (std::abs(Lambda) > l || std::abs(Lambda) > lp) return 0.0;
    const double pref = std::sqrt(5.0 * (2.0 * l + 1.0) / (4.0 * M_PI * (2.0 * lp + 1.0)));
    return pref * clebsch_gordan(l, Lambda, 2, 0, lp, Lambda) * clebsch_gordan(l, 0, 2, 0, lp, 0);
}

}  // namespace cranq
