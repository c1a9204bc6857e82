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

#ifndef FOGSLICE_MODEL_HPP_
#define FOGSLICE_MODEL_HPP_

#include <Eigen/Dense>
#include <cstddef>
#include <string>
#include <vector>

namespace fogslice {

// Units are fixed across the whole library: bandwidth in Hz, data sizes in
// bits, arrival/service rates in task units per second, delays in seconds,
// powers in watts. Strict inequalities (b > b0, mu > lambda) are represented
// as closed constraints with this slack, in native units.
inline constexpr double kStrictIneqSlack = 1e-6;

/// One supported service type: the task-unit size and latency bound.
struct ServiceClass {
  int id = 0;
  double data_size_bits = 0.0;
  double max_latency_s = 0.0;

  bool operator==(const ServiceClass&) const = default;
};

/// Radio-link parameters of one (base station, service) pair.
struct LinkParams {
  double tx_power_w = 0.0;
  double noise_w = 0.0;
  double channel_gain = 0.0;

  bool operator==(const LinkParams&) const = default;
};

/// Per-service traffic entering one base station.
struct ServiceLoad {
  int service_id = 0;
  LinkParams link;
  double mean_arrival_rate = 0.0;  // task units / s (Poisson mean)

  bool operator==(const ServiceLoad&) const = default;
};

/// A base station: its reserved bandwidth and per-service demand.
/// `per_service` is kept aligned with Scenario::services (one entry per
/// service, same order); load_scenario reorders entries and
/// validate_scenario rejects scenarios where the correspondence is broken.
struct BaseStationSpec {
  int id = 0;
  double total_bandwidth_hz = 0.0;  // beta_s
  double min_bandwidth_hz = 0.0;    // b_0
  std::vector<ServiceLoad> per_service;

  bool operator==(const BaseStationSpec&) const = default;
};

/// A fog node. Only the aggregate capacity of a sub-region enters the
/// optimization; the list exists so gamma <= sum of capacities can be
/// checked.
struct FogNodeSpec {
  int id = 0;
  double capacity = 0.0;  // task units / s

  bool operator==(const FogNodeSpec&) const = default;
};

/// One sub-region instance: everything a solve needs.
struct Scenario {
  std::vector<ServiceClass> services;
  std::vector<BaseStationSpec> base_stations;
  std::vector<FogNodeSpec> fog_nodes;
  double gamma = 0.0;       // total compute reserved in the sub-region
  double confidence = 0.0;  // theta, strictly inside (0,1)

  std::size_t num_services() const { return services.size(); }
  std::size_t num_base_stations() const { return base_stations.size(); }
  double total_fog_capacity() const;
  double total_arrival_rate() const;

  bool operator==(const Scenario&) const = default;
};

/// The decision variables: S x N matrices of bandwidths and service rates.
struct Allocation {
  Eigen::MatrixXd bandwidth_hz;   // b_sn
  Eigen::MatrixXd service_rate;   // mu_sn

  static Allocation zeros(std::size_t num_bs, std::size_t num_services);
};

/// Outcome of validate_scenario. `violations` holds one line per broken
/// invariant; `provisioning_tight` marks scenarios whose budgets make the
/// feasible set empty (minimum-bandwidth provisioning alone exceeds some
/// beta_s, or aggregate arrivals reach gamma).
struct ValidationReport {
  std::vector<std::string> violations;
  bool provisioning_tight = false;

  bool ok() const { return violations.empty(); }
  std::string summary() const;
};

/// Checks every structural invariant a downstream solver relies on.
/// Report-style: never throws.
ValidationReport validate_scenario(const Scenario& scenario);

}  // namespace fogslice

#endif  // FOGSLICE_MODEL_HPP_
