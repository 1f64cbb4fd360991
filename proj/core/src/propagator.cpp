#include "jband/propagator.hpp"

#include "jband/bessel.hpp"

#include <algorithm>
#include <cmath>
#include <cstdlib>

namespace jband {

namespace {

void check_time(double t) {
    if (!std::isfinite(t) || t < 0.0) {
        throw DomainError("time must be finite and >= 0");
    }
}

double dephasing(double t, const ModelParams& p) { return std::exp(-p.a * p.a) * std::exp(-p.b * p.b * t); }

}  // namespace

double transfer_probability(int n, double t, const ModelParams& p) {
    validate_params(p);
    check_time(t);
    const double j = bessel_j(n, p.c * t);
    return j * j * dephasing(t, p);
}

OccupationProfile occupation_profile(double t, const ModelParams& p) {
    validate_params(p);
    check_time(t);
    const SiteWindow window = make_window(p.n_sites);
    const std::vector<double> row = bessel_j_row(window.max_distance(), p.c * t);
    const double damp = dephasing(t, p);

    std::vector<double> u;
    u.reserve(static_cast<std::size_t>(window.size()));
    for (int n = window.first(); n <= window.last(); ++n) {
        // J_{-n}^2 = J_n^2
        const double j = row[static_cast<std::size_t>(std::abs(n))];
        u.push_back(std::min(1.0, j * j * damp));
    }
    return OccupationProfile(window, std::move(u), t);
}

double window_survival(double t, const ModelParams& p) { return occupation_profile(t, p).total(); }

double exciton_energy(double k, const DispersionParams& dp) {
    if (!std::isfinite(k)) {
        throw DomainError("wavevector must be finite");
    }
    if (!(dp.delta_e > 0.0)) {
        throw DomainError("delta_e must be positive");
    }
    return dp.delta_e + dp.d_shift + 2.0 * dp.v * std::cos(k);
}

double dipole_coupling(const DipolePair& pair) {
    if (!(pair.d > 0.0) || !std::isfinite(pair.d)) {
        throw DomainError("dipole separation d must be positive");
    }
    return pair.mu_i * pair.mu_j / (pair.d * pair.d * pair.d);
}

}  // namespace jband
