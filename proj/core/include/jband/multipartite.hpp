// multipartite.hpp: geometric entanglement of permutation-symmetric states,
// the one-/two-exciton entropy ratios, third-order susceptibility scaling and
// the two-branch two-exciton diagonalization.
//
// The symmetric state S(N, M) has M sites in the ground state and N - M
// excited. Its maximal overlap with a product state is
//
//     Lambda(N, M)^2 = C(N, M) (M/N)^M ((N-M)/N)^(N-M)
//
// and the geometric measure is E(N, M) = -ln Lambda^2. Everything is
// evaluated in log space through lgamma, so N in the millions stays finite.

#pragma once

namespace jband {

struct SymmetricState {
    int n{1};  // monomers, >= 1
    int m{0};  // ground-state slots, 0 <= m <= n
};

double lambda_max(SymmetricState s);

// -ln Lambda(N, M)^2 >= 0; symmetric under M -> N - M.
double geometric_entropy(SymmetricState s);

struct ZetaRatios {
    double zeta1{0.0};  // E(N, 1) / E(N, N/2)
    double zeta2{0.0};  // E(N, 2) / E(N, N/2)
};

// N >= 4. Odd N normalizes by E(N, (N-1)/2), which equals E(N, (N+1)/2).
ZetaRatios zeta_ratios(int n);

struct SusceptibilityParams {
    double mu{1.0};       // monomer transition dipole
    double gamma{0.5};    // damping rate, > 0
    double delta_e{3.0};  // excitation energy, > 0
    double omega{1.0};    // driving frequency, > 0 and != delta_e
};

// E(N, 1) E(N, 2), i.e. |chi3| / N with the constant prefactor stripped.
// Increases with N toward 2 - ln 2.
double chi3_reduced(int n);

// N mu^2 E(N,1) E(N,2) / (2 Gamma |omega^2 - delta_e^2|), hbar = 1, N >= 4.
double chi3_magnitude(int n, const SusceptibilityParams& sp);

struct TwoBranchHamiltonian {
    double e1{0.0};
    double e2{0.0};
    double t_coupling{0.0};
};

struct TwoExcitonEigen {
    double e_a{0.0};   // lower eigenvalue
    double e_b{0.0};   // upper eigenvalue
    double beta{0.0};  // mixing angle in (-pi/4, pi/4], tan 2beta = 2T / (e1 - e2)
};

// Eigenvalues and rotation angle of [[e1, T], [T, e2]]. beta = pi/4 exactly
// for e1 == e2 with T != 0 and beta = 0 for T == 0.
TwoExcitonEigen two_exciton_diagonalize(const TwoBranchHamiltonian& h);

// Nearest-neighbour T_k = 2 v cos k.
double coupling_sum_nn(double v, double k);

}  // namespace jband
