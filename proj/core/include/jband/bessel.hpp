// bessel.hpp: Bessel functions of the first kind at integer order.
//
// Values come from Miller's downward recurrence
//     J_{k-1}(x) = (2k / x) J_k(x) - J_{k+1}(x)
// started well above both n_max and x, then normalized with the closure
// identity J_0^2 + 2 sum_{k>=1} J_k^2 = 1. Normalizing on squares keeps every
// term positive, which avoids the cancellation the alternating
// J_0 + 2 sum J_{2k} = 1 normalization suffers at large x.
//
// Absolute accuracy is 1e-10 or better for |n| <= 2000, 0 <= x <= 1000.

#pragma once

#include <vector>

namespace jband {

// J_n(x) for integer n (any sign) and finite x >= 0.
double bessel_j(int n, double x);

// J_0(x) .. J_{n_max}(x). n_max >= 0, x finite and >= 0.
std::vector<double> bessel_j_row(int n_max, double x);

}  // namespace jband
