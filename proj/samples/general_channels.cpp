// Copyright 2026 The qswitch Authors
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

// Arbitrary Pauli channels: closed forms against the density-matrix oracle,
// plus a short Monte Carlo run.

#include <cstdio>

#include "qswitch/qswitch.hpp"

int main() {
  using namespace qswitch;
  const PauliChannel d({0.7, 0.1, 0.1, 0.1});
  const PauliChannel e({0.6, 0.2, 0.1, 0.1});

  const CapacityReport r = gain_and_violation(d, e);
  std::printf("C_EC %.9f  C_EQ %.9f  C_EB %.9f\n", r.c_ec, r.c_eq, r.c_eb);
  std::printf("gain %.9f  violation %.9f\n", r.gain, r.violation);

  const OracleDeviation dev = compare_with_oracle(d, e);
  std::printf("largest closed-form vs oracle deviation: %.3e\n", dev.max());

  const MonteCarloEstimate mc = monte_carlo_switch(d, e, 200000, 1);
  std::printf("Monte Carlo: p_plus %.4f (exact %.4f), C_EQ %.4f\n", mc.p_plus(),
              compose_switch(d, e).p_plus, mc.as_oracle_result().capacity);
}
