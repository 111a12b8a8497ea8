#pragma once

namespace combclt {

// Standard normal density.
double std_normal_pdf(double x);

// Standard normal distribution function Phi(x), computed via erfc so both
// tails keep full relative accuracy.
double std_normal_cdf(double x);

// Upper tail 1 - Phi(x) without cancellation.
double std_normal_sf(double x);

// Inverse of Phi, accurate to double precision (Wichura's AS 241 rational
// approximations). p in (0,1); returns -inf/+inf at the endpoints.
double std_normal_quantile(double p);

}  // namespace combclt
