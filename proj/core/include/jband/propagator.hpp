// propagator.hpp: site-to-site exciton transfer under phonon dephasing.
//
// With a single phonon frequency and band-averaged couplings the reduced
// Green-function result is
//
//     P_n0(t) = J_n(c t)^2 exp(-a^2) exp(-b^2 t)
//
// The dispersive term a only removes weight once (it traps the exciton on
// its initial site); the resonance term b damps coherent transfer at a
// constant rate. exp(-a^2) is kept as is, so an a > 0 profile sums to less
// than one already at t = 0.

#pragma once

#include "jband/params.hpp"

namespace jband {

// Probability of finding the exciton at site n at time t, having started at 0.
double transfer_probability(int n, double t, const ModelParams& p);

// transfer_probability over make_window(p.n_sites).
OccupationProfile occupation_profile(double t, const ModelParams& p);

// Probability mass still inside the window.
double window_survival(double t, const ModelParams& p);

struct DispersionParams {
    double delta_e{1.0};  // on-site excitation energy, > 0
    double d_shift{0.0};  // dispersive site shift D
    double v{0.0};        // nearest-neighbour transfer energy, any sign
};

// Delta_E + D + 2 V cos(k)
double exciton_energy(double k, const DispersionParams& dp);

struct DipolePair {
    double mu_i{1.0};
    double mu_j{1.0};
    double d{1.0};  // separation, > 0
};

// mu_i mu_j / d^3 (unit prefactor)
double dipole_coupling(const DipolePair& pair);

}  // namespace jband
