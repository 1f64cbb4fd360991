#include "jband/multipartite.hpp"

#include "jband/params.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <string>

namespace jband {

namespace {

void check_state(SymmetricState s) {
    if (s.n < 1) {
        throw DomainError("symmetric state needs N >= 1");
    }
    if (s.m < 0 || s.m > s.n) {
        throw DomainError("symmetric state needs 0 <= M <= N (got M=" + std::to_string(s.m) + ")");
    }
}

// k ln(k / n), with 0 ln 0 = 0
double weighted_log_fraction(int k, int n) {
    return k == 0 ? 0.0 : k * std::log(static_cast<double>(k) / n);
}

}  // namespace

double geometric_entropy(SymmetricState s) {
    check_state(s);
    // Evaluate on the canonical representative so E(N, M) == E(N, N-M) bit for bit.
    const int lo = std::min(s.m, s.n - s.m);
    const int hi = s.n - lo;
    if (lo == 0) {
        return 0.0;
    }
    const double log_binomial = std::lgamma(s.n + 1.0) - std::lgamma(lo + 1.0) - std::lgamma(hi + 1.0);
    const double log_lambda_sq = log_binomial + weighted_log_fraction(lo, s.n) + weighted_log_fraction(hi, s.n);
    return std::max(0.0, -log_lambda_sq);
}

double lambda_max(SymmetricState s) { return std::exp(-0.5 * geometric_entropy(s)); }

ZetaRatios zeta_ratios(int n) {
    if (n < 4) {
        throw DomainError("zeta ratios need N >= 4");
    }
    // n / 2 is (N-1)/2 for odd N
    const double norm = geometric_entropy({n, n / 2});
    return {geometric_entropy({n, 1}) / norm, geometric_entropy({n, 2}) / norm};
}

double chi3_reduced(int n) {
    if (n < 4) {
        throw DomainError("chi3 needs N >= 4");
    }
    return geometric_entropy({n, 1}) * geometric_entropy({n, 2});
}

double chi3_magnitude(int n, const SusceptibilityParams& sp) {
    if (!(sp.gamma > 0.0)) {
        throw DomainError("gamma must be positive");
    }
    if (!(sp.delta_e > 0.0)) {
        throw DomainError("delta_e must be positive");
    }
    if (!(sp.omega > 0.0)) {
        throw DomainError("omega must be positive");
    }
    const double detuning = std::abs(sp.omega * sp.omega - sp.delta_e * sp.delta_e);
    if (detuning == 0.0) {
        throw DomainError("omega == delta_e is a resonant singularity");
    }
    return n * sp.mu * sp.mu * chi3_reduced(n) / (2.0 * sp.gamma * detuning);
}

TwoExcitonEigen two_exciton_diagonalize(const TwoBranchHamiltonian& h) {
    if (!std::isfinite(h.e1) || !std::isfinite(h.e2) || !std::isfinite(h.t_coupling)) {
        throw DomainError("two-branch Hamiltonian entries must be finite");
    }
    const double mean = 0.5 * (h.e1 + h.e2);
    const double half_gap = 0.5 * (h.e1 - h.e2);
    const double radius = std::hypot(half_gap, h.t_coupling);

    TwoExcitonEigen out;
    out.e_a = mean - radius;
    out.e_b = mean + radius;

    if (h.t_coupling == 0.0) {
        out.beta = 0.0;
    } else if (half_gap == 0.0) {
        out.beta = std::numbers::pi / 4.0;
    } else {
        // atan keeps 2beta in (-pi/2, pi/2)
        out.beta = 0.5 * std::atan(h.t_coupling / half_gap);
    }
    return out;
}

double coupling_sum_nn(double v, double k) {
    if (!std::isfinite(k)) {
        throw DomainError("wavevector must be finite");
    }
    return 2.0 * v * std::cos(k);
}

}  // namespace jband
