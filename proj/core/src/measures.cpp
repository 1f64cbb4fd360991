#include "jband/measures.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

namespace jband {

namespace {

double x_log_x(double x) { return x > 0.0 ? x * std::log(x) : 0.0; }

}  // namespace

double site_entropy(double u) {
    if (!(u >= 0.0 && u <= 1.0)) {
        throw DomainError("site occupation must lie in [0, 1]");
    }
    return -x_log_x(u) - x_log_x(1.0 - u);
}

double extended_state_entropy(int n_sites) {
    if (n_sites < 1) {
        throw DomainError("N must be >= 1");
    }
    const double inv = 1.0 / n_sites;
    return inv * std::log(static_cast<double>(n_sites)) - x_log_x(1.0 - inv);
}

EntropyReport entropy_report(const OccupationProfile& profile) {
    EntropyReport r;
    for (double u : profile.occupations()) {
        r.total += site_entropy(u);
    }
    const int n = profile.window().size();
    r.average = r.total / n;
    r.extended_ref = extended_state_entropy(n);
    return r;
}

double ipr(std::span<const double> u) {
    double sum = 0.0;
    for (double v : u) {
        if (!(v >= 0.0) || !std::isfinite(v)) {
            throw DomainError("ipr: weights must be finite and nonnegative");
        }
        sum += v;
    }
    if (!(sum > 0.0)) {
        throw DomainError("ipr: profile carries no probability");
    }
    double sq = 0.0;
    for (double v : u) {
        const double w = v / sum;
        sq += w * w;
    }
    // rounding can push 1/sq a hair outside [1, N]
    return std::clamp(1.0 / sq, 1.0, static_cast<double>(u.size()));
}

double ipr(const OccupationProfile& profile) { return ipr(profile.occupations()); }

ConcurrenceReport average_concurrence(double zeta, int n_sites) {
    if (n_sites < 2) {
        throw DomainError("N must be >= 2");
    }
    if (!(zeta >= 1.0 && zeta <= n_sites)) {
        throw DomainError("zeta must lie in [1, N]");
    }
    const double n = n_sites;
    ConcurrenceReport r;
    r.zeta = zeta;
    r.avg_concurrence = 2.0 * (zeta - 1.0) / (n * (n - 1.0));
    r.scaled = (zeta - 1.0) / (n - 1.0);
    return r;
}

double coherence_size(const AggregateDensityMatrix& rho) {
    double sum = 0.0;
    double sum_sq = 0.0;
    for (double v : rho.entries()) {
        sum += v;
        sum_sq += v * v;
    }
    if (!(sum_sq > 0.0)) {
        throw DomainError("coherence_size: zero density matrix");
    }
    return sum * sum / (rho.dim() * sum_sq);
}

double spano_coherence_size(double c, double b, double t_k) {
    if (!(c > 0.0) || !std::isfinite(c)) {
        throw DomainError("c must be positive");
    }
    if (!(b > 0.0) || !std::isfinite(b)) {
        throw DomainError("b must be positive (the relation diverges at b = 0; use N_c = N)");
    }
    if (!(t_k > 0.0) || !std::isfinite(t_k)) {
        throw DomainError("t_k must be positive");
    }
    return 2.16 * std::cbrt(c * c / (b * b * t_k));
}

double spano_coherence_size(const ModelParams& p) {
    validate_params(p);
    return std::min(spano_coherence_size(p.c, p.b, p.t_k), static_cast<double>(p.n_sites));
}

double resonance_coherence_size(double c) {
    if (!(c > 0.0) || !std::isfinite(c)) {
        throw DomainError("c must be positive");
    }
    return 4.0 * std::numbers::pi * c;
}

std::vector<ConcurrencePoint> concurrence_vs_size_curve(const ModelParams& p, std::span<const int> sizes) {
    std::vector<ConcurrencePoint> curve;
    curve.reserve(sizes.size());
    for (int n : sizes) {
        ModelParams at = p;
        at.n_sites = n;
        // below one coherently coupled monomer the state is simply localized
        const double zeta = std::max(1.0, spano_coherence_size(at));
        curve.push_back({n, average_concurrence(zeta, n).avg_concurrence});
    }
    return curve;
}

}  // namespace jband
