// params.hpp: model parameters, site windows, occupation profiles and the
// error types shared by the rest of the library.

#pragma once

#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace jband {

// A physical quantity left its domain (c <= 0, N < 2, negative time, ...).
class DomainError : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

// Malformed or inconsistent run configuration. line() is 0 when the problem
// is not tied to a particular line.
class ConfigError : public std::runtime_error {
public:
    explicit ConfigError(const std::string& what, int line = 0);
    int line() const noexcept { return line_; }

private:
    int line_;
};

class IoError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Slack allowed on the in-window probability sum; dynamics never add weight.
inline constexpr double kOccupationSlack = 1e-9;

// Dimensionless model parameters. Time is measured in inverse phonon
// frequencies, so a, b, c and t_k are all pure numbers:
//   a   = chi(q) / (hbar w)       dispersive (on-site) exciton-phonon coupling
//   b   = F(k,q) / (hbar w)       resonance (transfer) exciton-phonon coupling
//   c   = 2V / (hbar w)           transfer rate
//   t_k = k_B T / (hbar w)        temperature
struct ModelParams {
    double a{0.0};
    double b{0.0};
    double c{1.0};
    double t_k{1.0};
    int n_sites{2};

    bool operator==(const ModelParams&) const = default;
};

// Returns p unchanged or throws DomainError naming the offending field.
ModelParams validate_params(const ModelParams& p);

// Contiguous block of site indices centred on the initially excited site 0.
// Odd N covers [-(N-1)/2, (N-1)/2]; even N covers [-N/2, N/2 - 1].
class SiteWindow {
public:
    explicit SiteWindow(int n_sites);

    int size() const noexcept { return n_sites_; }
    int first() const noexcept { return first_; }
    int last() const noexcept { return first_ + n_sites_ - 1; }
    bool contains(int site) const noexcept { return site >= first() && site <= last(); }
    // Largest |n| over the window.
    int max_distance() const noexcept { return -first_ > last() ? -first_ : last(); }
    std::vector<int> indices() const;

    bool operator==(const SiteWindow&) const = default;

private:
    int n_sites_;
    int first_;
};

SiteWindow make_window(int n_sites);

// Per-site occupation probabilities at one instant. Element i belongs to site
// window.first() + i.
class OccupationProfile {
public:
    OccupationProfile(SiteWindow window, std::vector<double> u, double t);

    const SiteWindow& window() const noexcept { return window_; }
    std::span<const double> occupations() const noexcept { return u_; }
    double time() const noexcept { return t_; }
    double at(int site) const;
    double total() const noexcept;

private:
    SiteWindow window_;
    std::vector<double> u_;
    double t_;
};

// N x N magnitudes |rho_mn| of the site-basis exciton density matrix.
class AggregateDensityMatrix {
public:
    // entries in row-major order; must be nonnegative, symmetric, trace <= 1.
    AggregateDensityMatrix(int dim, std::vector<double> entries);

    // rho_mn = delta_mn / N
    static AggregateDensityMatrix localized(int dim);
    // rho_mn = 1 / N
    static AggregateDensityMatrix delocalized(int dim);

    int dim() const noexcept { return dim_; }
    double operator()(int m, int n) const noexcept { return entries_[static_cast<std::size_t>(m * dim_ + n)]; }
    std::span<const double> entries() const noexcept { return entries_; }

private:
    int dim_;
    std::vector<double> entries_;
};

}  // namespace jband
