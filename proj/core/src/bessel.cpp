#include "jband/bessel.hpp"

#include "jband/params.hpp"

#include <cmath>
#include <cstdlib>

namespace jband {

namespace {

constexpr double kRescaleAbove = 1e100;
constexpr double kRescaleBy = 1e-100;
// Below this the recurrence coefficient 2k/x can overflow; two series terms
// are already exact to well below double precision there.
constexpr double kTinyArgument = 1e-8;

void check_argument(double x) {
    if (!std::isfinite(x)) {
        throw DomainError("Bessel argument must be finite");
    }
    if (x < 0.0) {
        throw DomainError("Bessel argument must be >= 0");
    }
}

}  // namespace

std::vector<double> bessel_j_row(int n_max, double x) {
    check_argument(x);
    if (n_max < 0) {
        throw DomainError("bessel_j_row: n_max must be >= 0");
    }
    std::vector<double> row(static_cast<std::size_t>(n_max) + 1, 0.0);
    if (x == 0.0) {
        row[0] = 1.0;
        return row;
    }
    if (x < kTinyArgument) {
        const double half = 0.5 * x;
        for (int k = 0; k <= n_max; ++k) {
            const double lead = std::exp(k * std::log(half) - std::lgamma(k + 1.0));
            row[static_cast<std::size_t>(k)] = lead * (1.0 - half * half / (k + 1.0));
        }
        return row;
    }

    const int start = n_max + static_cast<int>(std::ceil(1.5 * x)) + 40;

    // j_above = J_{k+1}, j_here = J_k (unnormalized), walking k downward.
    double j_above = 0.0;
    double j_here = 1e-30;
    // sum of squares weighted 2 for k >= 1, 1 for k = 0
    double norm = 0.0;
    for (int k = start; k >= 1; --k) {
        if (k <= n_max) {
            row[static_cast<std::size_t>(k)] = j_here;
        }
        norm += 2.0 * j_here * j_here;
        const double j_below = (2.0 * k / x) * j_here - j_above;
        j_above = j_here;
        j_here = j_below;
        if (std::abs(j_here) > kRescaleAbove) {
            j_here *= kRescaleBy;
            j_above *= kRescaleBy;
            norm *= kRescaleBy * kRescaleBy;
            for (int i = k; i <= n_max; ++i) {
                row[static_cast<std::size_t>(i)] *= kRescaleBy;
            }
        }
    }
    row[0] = j_here;
    norm += j_here * j_here;

    // J_start(x) > 0 for start > x, so the proportionality constant is positive.
    const double scale = 1.0 / std::sqrt(norm);
    for (double& v : row) {
        v *= scale;
    }
    return row;
}

double bessel_j(int n, double x) {
    check_argument(x);
    const int order = std::abs(n);
    const double value = bessel_j_row(order, x)[static_cast<std::size_t>(order)];
    return (n < 0 && (order % 2) != 0) ? -value : value;
}

}  // namespace jband
