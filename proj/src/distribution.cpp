#include "combclt/distribution.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>
#include <string>

#include "combclt/errors.hpp"
#include "combclt/normal.hpp"

namespace combclt {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

// Moments of Z = X - mu restricted to {|Z| < t} (strict), plus the total
// probability mass of that region.
struct PartialMoments {
  double mass = 0.0;  // P(|Z| < t)
  double m1 = 0.0;    // E Z  I{|Z| < t}
  double m2 = 0.0;    // E Z^2 I{|Z| < t}
  double a3 = 0.0;    // E |Z|^3 I{|Z| < t}
};

PartialMoments partial_moments(const DistributionSpec& spec, double mu,
                               double t);
double tail_probability(const DistributionSpec& spec, double mu, double t);

// ---------------------------------------------------------------------------
// Normal

// x * phi(x) and (x^2 + 2) * phi(x) with the infinite-argument limits folded
// in (phi underflows to exact zero long before x^2 overflows matters).
double xphi(double x) {
  if (!std::isfinite(x) || std::fabs(x) > 42.0) return 0.0;
  return x * std_normal_pdf(x);
}
double x2p2phi(double x) {
  if (!std::isfinite(x) || std::fabs(x) > 42.0) return 0.0;
  return (x * x + 2.0) * std_normal_pdf(x);
}

double phi_or_zero(double x) {
  if (!std::isfinite(x)) return 0.0;
  return std_normal_pdf(x);
}

struct NormalPartials {
  double p, ez, ez2, ez3;
};

NormalPartials normal_partials(double delta, double sigma, double lo,
                               double hi) {
  const double a = (lo - delta) / sigma;
  const double b = (hi - delta) / sigma;
  const double p = std_normal_cdf(b) - std_normal_cdf(a);
  const double m1 = phi_or_zero(a) - phi_or_zero(b);
  const double m2 = p + xphi(a) - xphi(b);
  const double m3 = x2p2phi(a) - x2p2phi(b);
  const double ez = delta * p + sigma * m1;
  const double ez2 = delta * delta * p + 2.0 * delta * sigma * m1 +
                     sigma * sigma * m2;
  const double ez3 = delta * delta * delta * p +
                     3.0 * delta * delta * sigma * m1 +
                     3.0 * delta * sigma * sigma * m2 +
                     sigma * sigma * sigma * m3;
  return {p, ez, ez2, ez3};
}

PartialMoments normal_partial_moments(const NormalSpec& n, double mu,
                                      double t) {
  const double delta = n.mean - mu;
  const double sigma = n.stddev;
  PartialMoments out;
  // |Z|^3 needs the sign split at Z = 0; (-t, t) always contains 0.
  const NormalPartials neg = normal_partials(delta, sigma, -t, 0.0);
  const NormalPartials pos = normal_partials(delta, sigma, 0.0, t);
  out.mass = neg.p + pos.p;
  out.m1 = neg.ez + pos.ez;
  out.m2 = neg.ez2 + pos.ez2;
  out.a3 = pos.ez3 - neg.ez3;
  return out;
}

// ---------------------------------------------------------------------------
// ParetoCubic
//
// Density |x|^-3 on |x| > 1. Antiderivatives of (x - c)^k x^-3 on the
// positive branch:

double pareto_A0(double x) { return x == kInf ? 0.0 : -0.5 / (x * x); }
double pareto_A1(double x, double c) {
  return x == kInf ? 0.0 : -1.0 / x + 0.5 * c / (x * x);
}
double pareto_A2(double x, double c) {
  if (x == kInf) throw NonintegrableMoment("ParetoCubic second moment diverges");
  return std::log(x) + 2.0 * c / x - 0.5 * c * c / (x * x);
}
double pareto_A3(double x, double c) {
  if (x == kInf) throw NonintegrableMoment("ParetoCubic third moment diverges");
  return x - 3.0 * c * std::log(x) - 3.0 * c * c / x +
         0.5 * c * c * c / (x * x);
}

// Moments of (y - c) against y^-3 dy over (lo, hi) subset of [1, inf), with
// |y - c|^3 split at y = c.
struct BranchMoments {
  double mass = 0.0, m1 = 0.0, m2 = 0.0, a3 = 0.0;
};

BranchMoments pareto_branch(double lo, double hi, double c) {
  BranchMoments out;
  if (!(hi > lo)) return out;
  out.mass = pareto_A0(hi) - pareto_A0(lo);
  out.m1 = pareto_A1(hi, c) - pareto_A1(lo, c);
  out.m2 = pareto_A2(hi, c) - pareto_A2(lo, c);
  if (c > lo && c < hi) {
    out.a3 = (pareto_A3(hi, c) - pareto_A3(c, c)) -
             (pareto_A3(c, c) - pareto_A3(lo, c));
  } else if (c >= hi) {
    out.a3 = -(pareto_A3(hi, c) - pareto_A3(lo, c));
  } else {
    out.a3 = pareto_A3(hi, c) - pareto_A3(lo, c);
  }
  return out;
}

PartialMoments pareto_partial_moments(double mu, double t) {
  // Region {|x - mu| < t, |x| > 1} splits into a positive branch and a
  // mirrored negative branch (y = -x maps it onto [1, inf)).
  PartialMoments out;
  const double lo = mu - t;
  const double hi = mu + t;
  if (hi > 1.0) {
    const BranchMoments b = pareto_branch(std::max(1.0, lo), hi, mu);
    out.mass += b.mass;
    out.m1 += b.m1;
    out.m2 += b.m2;
    out.a3 += b.a3;
  }
  if (lo < -1.0) {
    // x in (lo, min(-1, hi)); y = -x in (max(1, -hi), -lo), Z = -(y + mu).
    const BranchMoments b =
        pareto_branch(std::max(1.0, -hi), -lo, -mu);
    out.mass += b.mass;
    out.m1 -= b.m1;
    out.m2 += b.m2;
    out.a3 += b.a3;
  }
  return out;
}

double pareto_cdf(double x) {
  if (x <= -1.0) return 0.5 / (x * x);
  if (x < 1.0) return 0.5;
  return 1.0 - 0.5 / (x * x);
}
double pareto_sf(double x) {
  if (x >= 1.0) return 0.5 / (x * x);
  if (x > -1.0) return 0.5;
  return 1.0 - 0.5 / (x * x);
}

// ---------------------------------------------------------------------------

PartialMoments discrete_partial_moments(
    const std::vector<std::pair<double, double>>& atoms, double mu, double t) {
  PartialMoments out;
  for (const auto& [value, prob] : atoms) {
    const double z = value - mu;
    if (std::fabs(z) < t) {
      out.mass += prob;
      out.m1 += prob * z;
      out.m2 += prob * z * z;
      out.a3 += prob * std::fabs(z) * z * z;
    }
  }
  return out;
}

PartialMoments partial_moments(const DistributionSpec& spec, double mu,
                               double t) {
  return std::visit(
      [&](const auto& law) -> PartialMoments {
        using T = std::decay_t<decltype(law)>;
        if constexpr (std::is_same_v<T, PointMass>) {
          return discrete_partial_moments({{law.value, 1.0}}, mu, t);
        } else if constexpr (std::is_same_v<T, FiniteDiscrete>) {
          return discrete_partial_moments(law.atoms, mu, t);
        } else if constexpr (std::is_same_v<T, NormalSpec>) {
          return normal_partial_moments(law, mu, t);
        } else if constexpr (std::is_same_v<T, ParetoCubic>) {
          if (t == kInf) {
            // First moment alone stays finite; the callers that only need
            // it go through mean() instead.
            throw NonintegrableMoment(
                "ParetoCubic: untruncated moments beyond order 1 diverge");
          }
          return pareto_partial_moments(mu, t);
        } else {
          static_assert(std::is_same_v<T, AffineOf>);
          const double k = law.scale;
          const PartialMoments base = partial_moments(
              *law.base, (mu - law.shift) / k, t / std::fabs(k));
          PartialMoments out;
          out.mass = base.mass;
          out.m1 = k * base.m1;
          out.m2 = k * k * base.m2;
          out.a3 = std::fabs(k) * k * k * base.a3;
          return out;
        }
      },
      spec.law);
}

double tail_probability(const DistributionSpec& spec, double mu, double t) {
  return std::visit(
      [&](const auto& law) -> double {
        using T = std::decay_t<decltype(law)>;
        if constexpr (std::is_same_v<T, PointMass>) {
          return std::fabs(law.value - mu) >= t ? 1.0 : 0.0;
        } else if constexpr (std::is_same_v<T, FiniteDiscrete>) {
          double p = 0.0;
          for (const auto& [value, prob] : law.atoms) {
            if (std::fabs(value - mu) >= t) p += prob;
          }
          return p;
        } else if constexpr (std::is_same_v<T, NormalSpec>) {
          if (t == kInf) return 0.0;
          const double a = (-t - (law.mean - mu)) / law.stddev;
          const double b = (t - (law.mean - mu)) / law.stddev;
          return std_normal_cdf(a) + std_normal_sf(b);
        } else if constexpr (std::is_same_v<T, ParetoCubic>) {
          if (t == kInf) return 0.0;
          return pareto_cdf(mu - t) + pareto_sf(mu + t);
        } else {
          static_assert(std::is_same_v<T, AffineOf>);
          return tail_probability(*law.base, (mu - law.shift) / law.scale,
                                  t / std::fabs(law.scale));
        }
      },
      spec.law);
}

}  // namespace

DistributionSpec point_mass(double value) { return {PointMass{value}}; }

DistributionSpec finite_discrete(
    std::vector<std::pair<double, double>> atoms) {
  DistributionSpec spec{FiniteDiscrete{std::move(atoms)}};
  validate(spec);
  return spec;
}

DistributionSpec normal(double mean, double stddev) {
  DistributionSpec spec{NormalSpec{mean, stddev}};
  validate(spec);
  return spec;
}

DistributionSpec pareto_cubic() { return {ParetoCubic{}}; }

DistributionSpec affine_of(DistributionSpec base, double shift, double scale) {
  DistributionSpec spec{AffineOf{
      std::make_shared<const DistributionSpec>(std::move(base)), shift,
      scale}};
  validate(spec);
  return spec;
}

void validate(const DistributionSpec& spec) {
  std::visit(
      [](const auto& law) {
        using T = std::decay_t<decltype(law)>;
        if constexpr (std::is_same_v<T, FiniteDiscrete>) {
          if (law.atoms.empty()) {
            throw std::invalid_argument("discrete law needs at least 1 atom");
          }
          double total = 0.0;
          for (const auto& [value, prob] : law.atoms) {
            if (!(prob >= 0.0)) {
              throw std::invalid_argument("atom probability must be >= 0");
            }
            if (!std::isfinite(value)) {
              throw std::invalid_argument("atom value must be finite");
            }
            total += prob;
          }
          if (std::fabs(total - 1.0) > 1e-12) {
            throw std::invalid_argument(
                "atom probabilities sum to " + std::to_string(total) +
                ", expected 1");
          }
        } else if constexpr (std::is_same_v<T, NormalSpec>) {
          if (!(law.stddev > 0.0)) {
            throw std::invalid_argument("normal stddev must be > 0");
          }
        } else if constexpr (std::is_same_v<T, AffineOf>) {
          if (law.scale == 0.0) {
            throw std::invalid_argument("affine scale must be nonzero");
          }
          if (!law.base) {
            throw std::invalid_argument("affine law needs a base");
          }
          validate(*law.base);
        }
      },
      spec.law);
}

double mean(const DistributionSpec& spec) {
  return std::visit(
      [](const auto& law) -> double {
        using T = std::decay_t<decltype(law)>;
        if constexpr (std::is_same_v<T, PointMass>) {
          return law.value;
        } else if constexpr (std::is_same_v<T, FiniteDiscrete>) {
          double m = 0.0;
          for (const auto& [value, prob] : law.atoms) m += prob * value;
          return m;
        } else if constexpr (std::is_same_v<T, NormalSpec>) {
          return law.mean;
        } else if constexpr (std::is_same_v<T, ParetoCubic>) {
          return 0.0;
        } else {
          return law.shift + law.scale * mean(*law.base);
        }
      },
      spec.law);
}

double variance(const DistributionSpec& spec) {
  return std::visit(
      [](const auto& law) -> double {
        using T = std::decay_t<decltype(law)>;
        if constexpr (std::is_same_v<T, PointMass>) {
          return 0.0;
        } else if constexpr (std::is_same_v<T, FiniteDiscrete>) {
          double m = 0.0, m2 = 0.0;
          for (const auto& [value, prob] : law.atoms) {
            m += prob * value;
            m2 += prob * value * value;
          }
          return std::max(0.0, m2 - m * m);
        } else if constexpr (std::is_same_v<T, NormalSpec>) {
          return law.stddev * law.stddev;
        } else if constexpr (std::is_same_v<T, ParetoCubic>) {
          throw NonintegrableMoment("ParetoCubic has infinite variance");
        } else {
          return law.scale * law.scale * variance(*law.base);
        }
      },
      spec.law);
}

bool has_finite_variance(const DistributionSpec& spec) {
  return std::visit(
      [](const auto& law) -> bool {
        using T = std::decay_t<decltype(law)>;
        if constexpr (std::is_same_v<T, ParetoCubic>) {
          return false;
        } else if constexpr (std::is_same_v<T, AffineOf>) {
          return has_finite_variance(*law.base);
        } else {
          return true;
        }
      },
      spec.law);
}

double support_radius(const DistributionSpec& spec, double mu) {
  return std::visit(
      [&](const auto& law) -> double {
        using T = std::decay_t<decltype(law)>;
        if constexpr (std::is_same_v<T, PointMass>) {
          return std::fabs(law.value - mu);
        } else if constexpr (std::is_same_v<T, FiniteDiscrete>) {
          double r = 0.0;
          for (const auto& [value, prob] : law.atoms) {
            if (prob > 0.0) r = std::max(r, std::fabs(value - mu));
          }
          return r;
        } else if constexpr (std::is_same_v<T, AffineOf>) {
          return std::fabs(law.scale) *
                 support_radius(*law.base, (mu - law.shift) / law.scale);
        } else {
          return kInf;
        }
      },
      spec.law);
}

TruncatedMomentSet truncated_moments(
    const DistributionSpec& spec, double mu, double t,
    std::optional<double> b_n_for_alpha_beta) {
  if (!(t > 0.0)) {
    throw InvalidTruncation("truncation level must be > 0, got " +
                            std::to_string(t));
  }
  validate(spec);

  TruncatedMomentSet out;
  out.mu = mu;
  out.t = t;

  const PartialMoments pm = partial_moments(spec, mu, t);
  out.a_bar = pm.m1;
  out.var_bar = std::max(0.0, pm.m2 - pm.m1 * pm.m1);
  out.abs3_bar = pm.a3;
  out.tail = tail_probability(spec, mu, t);

  if (b_n_for_alpha_beta) {
    const double threshold = std::sqrt(*b_n_for_alpha_beta);
    if (!(threshold > 0.0)) {
      throw InvalidTruncation("alpha/beta threshold must be > 0");
    }
    const PartialMoments at = partial_moments(spec, mu, threshold);
    const double delta = mean(spec) - mu;
    const double full_m2 = variance(spec) + delta * delta;  // E (X - mu)^2
    out.alpha = std::max(0.0, full_m2 - at.m2);
    out.beta = at.a3;
  }
  return out;
}

double third_abs_moment_about(const DistributionSpec& spec, double center) {
  const PartialMoments pm = partial_moments(spec, center, kInf);
  return pm.a3;
}

double sample(const DistributionSpec& spec, RngStream& rng) {
  return std::visit(
      [&](const auto& law) -> double {
        using T = std::decay_t<decltype(law)>;
        if constexpr (std::is_same_v<T, PointMass>) {
          return law.value;
        } else if constexpr (std::is_same_v<T, FiniteDiscrete>) {
          const double u = rng.next_double();
          double cum = 0.0;
          for (const auto& [value, prob] : law.atoms) {
            cum += prob;
            if (u < cum) return value;
          }
          return law.atoms.back().first;
        } else if constexpr (std::is_same_v<T, NormalSpec>) {
          return law.mean +
                 law.stddev * std_normal_quantile(rng.next_open_double());
        } else if constexpr (std::is_same_v<T, ParetoCubic>) {
          const double u = rng.next_open_double();
          if (u < 0.5) return -1.0 / std::sqrt(2.0 * u);
          return 1.0 / std::sqrt(2.0 * (1.0 - u));
        } else {
          return law.shift + law.scale * sample(*law.base, rng);
        }
      },
      spec.law);
}

}  // namespace combclt
