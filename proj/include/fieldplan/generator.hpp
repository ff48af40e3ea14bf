#pragma once

#include <cstdint>

#include "fieldplan/model.hpp"

namespace fieldplan {

// Random-instance generator parameters. Defaults reproduce the benchmark
// family: log-normal-shaped production profiles peak-scaled into
// [30,200] thousand tons, prices 4..6 million rubles per ton with 5% noise,
// first-year investments 250..1500 million rubles with a 10% chance of a
// second-year top-up of 10..50% of the first, and budget/caps set to one
// third of the per-cluster maxima.
struct GenParams {
  int n = 10;
  int p_min = 1;
  int p_max = 10;
  int horizon = 20;

  double mu_min = 1.0, mu_max = 2.0;
  double sigma_min = 1.0, sigma_max = 1.4;
  double peak_min = 30.0, peak_max = 200.0;   // thousand tons
  double price_min = 4.0, price_max = 6.0;    // million rubles per ton
  double noise_min = 0.95, noise_max = 1.05;
  double invest_min = 250.0, invest_max = 1500.0; // million rubles
  double second_invest_prob = 0.10;
  double second_invest_frac_min = 0.10, second_invest_frac_max = 0.50;
  double budget_frac = 1.0 / 3.0;
  double cap_frac = 1.0 / 3.0;

  std::uint64_t seed = 1;
};

// Builds an instance from the parameters; the result is a pure function of
// params (one mt19937_64 stream, documented draw order), so equal seeds give
// byte-identical instances on every platform.
//
//   per cluster:  project count ~ U{p_min..p_max}
//   per project:  mu, sigma, peak, price; then per-year noise (horizon
//                 draws); then the first-year investment; then the
//                 second-investment coin and, only if it hits, the fraction.
//   profile(t) proportional to the log-normal density at t, scaled so its
//   maximum over t = 1..horizon equals the peak draw.
//   revenue(t) = profile(t) * price * noise(t).
//   budget  = budget_frac * sum over clusters of max project cost;
//   cap(t)  = cap_frac * sum over clusters of max per-year production,
//             constant over the years.
//
// Throws std::invalid_argument on malformed params.
Instance generate(const GenParams& params);

} // namespace fieldplan
