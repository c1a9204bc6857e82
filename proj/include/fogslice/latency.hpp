// Copyright 2026 The fogslice Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef FOGSLICE_LATENCY_HPP_
#define FOGSLICE_LATENCY_HPP_

#include <cstddef>
#include <optional>

#include "fogslice/model.hpp"

namespace fogslice {

/// Spectral efficiency of a link in bits/s/Hz: log2(1 + h*w/sigma).
/// Base-2 log (Shannon capacity convention); isolated here so an alternate
/// convention would be a one-line change.
double spectral_efficiency(const LinkParams& link);

/// Communication delay for one task unit: d / (b * c), seconds.
/// Throws ZeroRateError when b*c == 0.
double comm_delay(double data_size_bits, double bandwidth_hz,
                  double spectral_eff);

/// M/M/1 mean sojourn time 1/(mu - lambda), seconds.
/// Throws UnstableQueueError when mu <= lambda.
double queue_delay(double service_rate, double arrival_rate);

/// Communication + queuing delay of one (base station, service) cell.
struct DelayBreakdown {
  double comm_s = 0.0;
  double queue_s = 0.0;
  double total_s = 0.0;
};

/// Response time of service n at base station s under `alloc`.
/// Propagates ZeroRateError / UnstableQueueError.
DelayBreakdown response_time(std::size_t s, std::size_t n,
                             const Allocation& alloc,
                             const Scenario& scenario);

/// Smallest integer k with Pr(Poisson(lambda) <= k) >= theta.
/// Throws DomainError unless 0 < theta < 1 and lambda >= 0.
long poisson_quantile(double theta, double lambda);

/// Sum of response times over all (s, n) cells. Dividing by S*N gives the
/// network-average latency; both have the same minimizer.
double total_objective(const Allocation& alloc, const Scenario& scenario);

/// Like total_objective but returns nullopt instead of throwing when some
/// cell has no finite delay (b*c == 0 or mu <= lambda). Used to report the
/// objective of consensus iterates that are not yet delay-evaluable.
std::optional<double> try_total_objective(const Allocation& alloc,
                                          const Scenario& scenario);

/// Worst violation of one constraint class. Negative values are margins.
struct ConstraintCheck {
  double worst_violation = -std::numeric_limits<double>::infinity();
  bool ok(double tol = 0.0) const { return worst_violation <= tol; }
};

/// Per-class feasibility of an allocation against the constraint set:
/// b >= b0 + eps, mu >= lambda + eps, t <= T̄, per-BS weighted bandwidth
/// budget, global compute budget. Violations are reported in the native
/// unit of each class (Hz, task units/s, seconds).
struct FeasibilityReport {
  ConstraintCheck min_bandwidth;
  ConstraintCheck queue_stability;
  ConstraintCheck latency_cap;
  ConstraintCheck bandwidth_budget;
  ConstraintCheck compute_budget;

  bool ok(double tol = 0.0) const;
  std::string summary() const;
};

/// Evaluates every constraint of the allocation problem. Never throws;
/// cells with unstable queues show up as infinite latency-cap violations.
/// `eps` is the closed-form slack used for the strict inequalities.
FeasibilityReport check_feasible(const Allocation& alloc,
                                 const Scenario& scenario,
                                 double eps = kStrictIneqSlack);

}  // namespace fogslice

#endif  // FOGSLICE_LATENCY_HPP_
