#include "fieldplan/generator.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "fieldplan/rng.hpp"

namespace fieldplan {

namespace {

void require(bool ok, const char* what) {
  if (!ok) throw std::invalid_argument(std::string("generate: ") + what);
}

void check_range(double lo, double hi, const char* what) {
  require(lo <= hi && std::isfinite(lo) && std::isfinite(hi), what);
}

constexpr double kSqrt2Pi = 2.5066282746310002;

double lognormal_density(double t, double mu, double sigma) {
  const double z = (std::log(t) - mu) / sigma;
  return std::exp(-0.5 * z * z) / (t * sigma * kSqrt2Pi);
}

} // namespace

Instance generate(const GenParams& params) {
  require(params.n >= 1, "n must be >= 1");
  require(params.horizon >= 1, "horizon must be >= 1");
  require(params.p_min >= 1 && params.p_min <= params.p_max, "need 1 <= p_min <= p_max");
  check_range(params.mu_min, params.mu_max, "mu range disordered");
  check_range(params.sigma_min, params.sigma_max, "sigma range disordered");
  require(params.sigma_min > 0.0, "sigma must be positive");
  check_range(params.peak_min, params.peak_max, "peak range disordered");
  check_range(params.price_min, params.price_max, "price range disordered");
  check_range(params.noise_min, params.noise_max, "noise range disordered");
  check_range(params.invest_min, params.invest_max, "invest range disordered");
  require(params.second_invest_prob >= 0.0 && params.second_invest_prob <= 1.0,
          "second_invest_prob outside [0,1]");
  check_range(params.second_invest_frac_min, params.second_invest_frac_max,
              "second investment fraction range disordered");
  require(params.budget_frac >= 0.0 && params.cap_frac >= 0.0, "fractions must be >= 0");

  Rng rng(params.seed);
  const int T = params.horizon;

  Instance instance;
  instance.horizon = T;
  instance.clusters.reserve(params.n);

  double budget_sum = 0.0; // sum over clusters of the max project cost
  double cap_sum = 0.0;    // sum over clusters of the max per-year volume

  for (int k = 0; k < params.n; ++k) {
    Cluster cluster;
    cluster.id = k;
    const int projects = static_cast<int>(rng.uniform_int(params.p_min, params.p_max));
    cluster.projects.reserve(projects);

    double max_cost = 0.0;
    double max_volume = 0.0;
    for (int i = 0; i < projects; ++i) {
      const double mu = rng.uniform(params.mu_min, params.mu_max);
      const double sigma = rng.uniform(params.sigma_min, params.sigma_max);
      const double peak = rng.uniform(params.peak_min, params.peak_max);
      const double price = rng.uniform(params.price_min, params.price_max);

      Project p;
      p.production.resize(T);
      double density_peak = 0.0;
      for (int t = 0; t < T; ++t) {
        p.production[t] = lognormal_density(t + 1.0, mu, sigma);
        density_peak = std::max(density_peak, p.production[t]);
      }
      const double scale = peak / density_peak;
      for (int t = 0; t < T; ++t) p.production[t] *= scale;

      p.revenue.resize(T);
      for (int t = 0; t < T; ++t)
        p.revenue[t] = p.production[t] * price * rng.uniform(params.noise_min, params.noise_max);

      p.cost_schedule.assign(T, 0.0);
      p.cost_schedule[0] = rng.uniform(params.invest_min, params.invest_max);
      if (rng.chance(params.second_invest_prob)) {
        const double frac = rng.uniform(params.second_invest_frac_min,
                                        params.second_invest_frac_max);
        if (T >= 2) p.cost_schedule[1] = p.cost_schedule[0] * frac;
      }

      max_cost = std::max(max_cost, p.cost_schedule[0] + (T >= 2 ? p.cost_schedule[1] : 0.0));
      for (int t = 0; t < T; ++t) max_volume = std::max(max_volume, p.production[t]);
      cluster.projects.push_back(std::move(p));
    }
    budget_sum += max_cost;
    cap_sum += max_volume;
    instance.clusters.push_back(std::move(cluster));
  }

  instance.budget = params.budget_frac * budget_sum;
  instance.cap.assign(T, params.cap_frac * cap_sum);
  return instance;
}

} // namespace fieldplan
