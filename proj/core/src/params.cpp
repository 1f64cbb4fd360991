#include "jband/params.hpp"

#include <cmath>
#include <numeric>
#include <string>

namespace jband {

ConfigError::ConfigError(const std::string& what, int line)
    : std::runtime_error(line > 0 ? "line " + std::to_string(line) + ": " + what : what), line_(line) {}

ModelParams validate_params(const ModelParams& p) {
    if (!std::isfinite(p.a) || p.a < 0.0) {
        throw DomainError("a must be a finite value >= 0");
    }
    if (!std::isfinite(p.b) || p.b < 0.0) {
        throw DomainError("b must be a finite value >= 0");
    }
    if (!std::isfinite(p.c) || p.c <= 0.0) {
        throw DomainError("c must be positive");
    }
    if (!std::isfinite(p.t_k) || p.t_k <= 0.0) {
        throw DomainError("t_k must be positive");
    }
    if (p.n_sites < 2) {
        throw DomainError("N must be >= 2");
    }
    return p;
}

SiteWindow::SiteWindow(int n_sites) : n_sites_(n_sites), first_(-(n_sites / 2)) {
    if (n_sites < 2) {
        throw DomainError("N must be >= 2");
    }
}

std::vector<int> SiteWindow::indices() const {
    std::vector<int> out(static_cast<std::size_t>(n_sites_));
    std::iota(out.begin(), out.end(), first_);
    return out;
}

SiteWindow make_window(int n_sites) { return SiteWindow(n_sites); }

OccupationProfile::OccupationProfile(SiteWindow window, std::vector<double> u, double t)
    : window_(window), u_(std::move(u)), t_(t) {
    if (u_.size() != static_cast<std::size_t>(window_.size())) {
        throw DomainError("occupation profile length does not match its window");
    }
    double sum = 0.0;
    for (double v : u_) {
        if (!(v >= 0.0 && v <= 1.0)) {
            throw DomainError("occupation probabilities must lie in [0, 1]");
        }
        sum += v;
    }
    if (sum > 1.0 + kOccupationSlack) {
        throw DomainError("occupation probabilities sum above 1");
    }
}

double OccupationProfile::at(int site) const {
    if (!window_.contains(site)) {
        throw DomainError("site " + std::to_string(site) + " is outside the window");
    }
    return u_[static_cast<std::size_t>(site - window_.first())];
}

double OccupationProfile::total() const noexcept { return std::accumulate(u_.begin(), u_.end(), 0.0); }

AggregateDensityMatrix::AggregateDensityMatrix(int dim, std::vector<double> entries)
    : dim_(dim), entries_(std::move(entries)) {
    if (dim < 1) {
        throw DomainError("density matrix dimension must be >= 1");
    }
    if (entries_.size() != static_cast<std::size_t>(dim) * static_cast<std::size_t>(dim)) {
        throw DomainError("density matrix must have dim*dim entries");
    }
    double trace = 0.0;
    for (int m = 0; m < dim_; ++m) {
        trace += (*this)(m, m);
        for (int n = 0; n < dim_; ++n) {
            const double v = (*this)(m, n);
            if (!std::isfinite(v) || v < 0.0) {
                throw DomainError("density matrix magnitudes must be finite and nonnegative");
            }
            if (v != (*this)(n, m)) {
                throw DomainError("density matrix magnitudes must be symmetric");
            }
        }
    }
    if (trace > 1.0 + kOccupationSlack) {
        throw DomainError("density matrix trace exceeds 1");
    }
}

AggregateDensityMatrix AggregateDensityMatrix::localized(int dim) {
    std::vector<double> e(static_cast<std::size_t>(dim) * static_cast<std::size_t>(dim), 0.0);
    for (int m = 0; m < dim; ++m) {
        e[static_cast<std::size_t>(m * dim + m)] = 1.0 / dim;
    }
    return AggregateDensityMatrix(dim, std::move(e));
}

AggregateDensityMatrix AggregateDensityMatrix::delocalized(int dim) {
    return AggregateDensityMatrix(dim, std::vector<double>(static_cast<std::size_t>(dim) * static_cast<std::size_t>(dim), 1.0 / dim));
}

}  // namespace jband
