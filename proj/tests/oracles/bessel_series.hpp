// Test-only oracle: J_n(x) from its power series
//     J_n(x) = sum_k (-1)^k (x/2)^(2k+n) / (k! (k+n)!)
// summed in MPFR at a precision wide enough to absorb the cancellation
// between terms (the largest term grows like e^x). Independent of the
// recurrence used by the library.

#pragma once

#include <mpfr.h>

#include <cmath>
#include <cstdlib>

namespace jband::oracle {

class Mpfr {
public:
    explicit Mpfr(mpfr_prec_t prec) { mpfr_init2(v_, prec); }
    ~Mpfr() { mpfr_clear(v_); }
    Mpfr(const Mpfr&) = delete;
    Mpfr& operator=(const Mpfr&) = delete;
    mpfr_ptr get() { return v_; }

private:
    mpfr_t v_;
};

// Double-precision series; fine for x up to ~5 where cancellation is mild.
inline double bessel_series_double(int n, double x) {
    const int order = std::abs(n);
    double term = 1.0;
    for (int i = 1; i <= order; ++i) term *= 0.5 * x / i;
    double sum = 0.0;
    for (int k = 0; k < 200; ++k) {
        sum += term;
        term *= -(0.25 * x * x) / ((k + 1.0) * (k + 1.0 + order));
        if (std::abs(term) < 1e-18 * std::abs(sum) && k > x) break;
    }
    return (n < 0 && order % 2) ? -sum : sum;
}

inline double bessel_series_mpfr(int n, double x, mpfr_prec_t prec = 1100) {
    const int order = std::abs(n);
    Mpfr half_x(prec), q(prec), term(prec), sum(prec), tmp(prec);
    mpfr_set_d(half_x.get(), 0.5 * x, MPFR_RNDN);
    // q = (x/2)^2
    mpfr_sqr(q.get(), half_x.get(), MPFR_RNDN);
    // term_0 = (x/2)^n / n!
    mpfr_pow_ui(term.get(), half_x.get(), static_cast<unsigned long>(order), MPFR_RNDN);
    mpfr_fac_ui(tmp.get(), static_cast<unsigned long>(order), MPFR_RNDN);
    mpfr_div(term.get(), term.get(), tmp.get(), MPFR_RNDN);
    mpfr_set_zero(sum.get(), 1);

    for (unsigned long k = 0;; ++k) {
        mpfr_add(sum.get(), sum.get(), term.get(), MPFR_RNDN);
        mpfr_mul(term.get(), term.get(), q.get(), MPFR_RNDN);
        mpfr_div_ui(term.get(), term.get(), (k + 1) * (k + 1 + static_cast<unsigned long>(order)), MPFR_RNDN);
        mpfr_neg(term.get(), term.get(), MPFR_RNDN);
        if (mpfr_zero_p(term.get())) break;
        // past the peak, stop once terms are negligible at double precision
        if (static_cast<double>(k) > 0.5 * x + 10.0 && mpfr_get_exp(term.get()) < -80) break;
    }
    const double value = mpfr_get_d(sum.get(), MPFR_RNDN);
    return (n < 0 && order % 2) ? -value : value;
}

}  // namespace jband::oracle
