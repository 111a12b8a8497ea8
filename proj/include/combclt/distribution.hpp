#pragma once

#include <memory>
#include <optional>
#include <utility>
#include <variant>
#include <vector>

#include "combclt/rng.hpp"

namespace combclt {

struct DistributionSpec;

// Degenerate law P(X = value) = 1.
struct PointMass {
  double value = 0.0;
};

// Finitely many atoms (value, probability); probabilities sum to 1.
struct FiniteDiscrete {
  std::vector<std::pair<double, double>> atoms;
};

struct NormalSpec {
  double mean = 0.0;
  double stddev = 1.0;
};

// Density |x|^-3 for |x| > 1, zero otherwise. Mean 0, infinite variance;
// lies in the domain of attraction of the normal law.
struct ParetoCubic {};

// X = shift + scale * Y with Y drawn from *base.
struct AffineOf {
  std::shared_ptr<const DistributionSpec> base;
  double shift = 0.0;
  double scale = 1.0;
};

struct DistributionSpec {
  std::variant<PointMass, FiniteDiscrete, NormalSpec, ParetoCubic, AffineOf>
      law;
};

DistributionSpec point_mass(double value);
DistributionSpec finite_discrete(std::vector<std::pair<double, double>> atoms);
DistributionSpec normal(double mean, double stddev);
DistributionSpec pareto_cubic();
DistributionSpec affine_of(DistributionSpec base, double shift, double scale);

// Throws std::invalid_argument on malformed parameters (probabilities not
// summing to 1, stddev <= 0, scale == 0, ...).
void validate(const DistributionSpec& spec);

// E X. All built-in laws have finite means.
double mean(const DistributionSpec& spec);

// D X; throws NonintegrableMoment when the variance diverges (ParetoCubic).
double variance(const DistributionSpec& spec);

bool has_finite_variance(const DistributionSpec& spec);

// sup |X - mu| over the support; +inf for unbounded laws.
double support_radius(const DistributionSpec& spec, double mu);

// Moments of the truncated variable Xbar = (X - mu) I{|X - mu| < t}.
// alpha/beta are the tail second moment and truncated third absolute moment
// at a separate threshold (sqrt of the matrix variance), filled only when
// that threshold is supplied.
struct TruncatedMomentSet {
  double mu = 0.0;
  double t = 0.0;  // may be +inf
  double a_bar = 0.0;
  double var_bar = 0.0;
  double abs3_bar = 0.0;
  double tail = 0.0;  // P(|X - mu| >= t)
  std::optional<double> alpha;  // E (X-mu)^2 I{|X-mu| >= threshold}
  std::optional<double> beta;   // E |X-mu|^3 I{|X-mu| < threshold}
};

// Exact (closed-form or exact-sum) truncated moments; no quadrature is used
// for the built-in laws. Throws InvalidTruncation if t <= 0 and
// NonintegrableMoment if a diverging untruncated moment is requested
// (t = +inf for ParetoCubic beyond first order, or alpha for a law without
// a second moment).
TruncatedMomentSet truncated_moments(
    const DistributionSpec& spec, double mu, double t,
    std::optional<double> b_n_for_alpha_beta = std::nullopt);

// E |X - center|^3; exact for discrete laws, closed form for Normal.
// Throws NonintegrableMoment when it diverges.
double third_abs_moment_about(const DistributionSpec& spec, double center);

// One draw. ParetoCubic and Normal sample by inverse CDF so a draw consumes
// exactly one uniform; PointMass consumes none.
double sample(const DistributionSpec& spec, RngStream& rng);

}  // namespace combclt
