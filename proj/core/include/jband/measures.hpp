// measures.hpp: entanglement diagnostics of a single-excitation profile.
//
// All entropies are in nats.

#pragma once

#include "jband/params.hpp"

#include <span>
#include <vector>

namespace jband {

// Binary entropy -u ln u - (1-u) ln(1-u) of the two-level reduced density
// matrix diag(1-u, u) at one site; 0 ln 0 = 0.
double site_entropy(double u);

// Per-site entropy of a fully extended state, u_n = 1/N:
// (1/N) ln N - (1 - 1/N) ln(1 - 1/N).
double extended_state_entropy(int n_sites);

struct EntropyReport {
    double total{0.0};         // sum_n S_n
    double average{0.0};       // total / N
    double extended_ref{0.0};  // extended_state_entropy(N)
};

EntropyReport entropy_report(const OccupationProfile& profile);

// Inverse participation ratio of the renormalized weights u_n / sum u.
// Lies in [1, N]; insensitive to a uniform rescale of u.
double ipr(std::span<const double> u);
double ipr(const OccupationProfile& profile);

struct ConcurrenceReport {
    double zeta{1.0};
    double avg_concurrence{0.0};  // 2 (zeta - 1) / (N (N - 1))
    double scaled{0.0};           // avg_concurrence * N / 2
};

ConcurrenceReport average_concurrence(double zeta, int n_sites);

// (sum |rho_mn|)^2 / (N sum |rho_mn|^2)
double coherence_size(const AggregateDensityMatrix& rho);

// Empirical coherence size 2.16 (c^2 / (b^2 t_k))^(1/3) without any cap.
double spano_coherence_size(double c, double b, double t_k);
// Same, capped at the aggregate size p.n_sites.
double spano_coherence_size(const ModelParams& p);

// 4 pi c, the coherence size at an exciton-phonon resonance.
double resonance_coherence_size(double c);

struct ConcurrencePoint {
    int n_sites{0};
    double concurrence{0.0};
};

// <C>(N) with zeta taken as the empirical coherence size at each N.
// p.n_sites is ignored; sizes supplies the aggregate sizes.
std::vector<ConcurrencePoint> concurrence_vs_size_curve(const ModelParams& p, std::span<const int> sizes);

}  // namespace jband
