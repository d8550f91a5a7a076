// Copyright 2026 The hyperspin Authors
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

#pragma once

// Quantum-resource measures on two-qubit X-states: EPR steering,
// concurrence / entanglement of formation, trace-norm geometric discord and
// l1-norm coherence.
//
// All functions read the evolved matrix directly; the decoherence factor is
// already inside its anti-diagonal and is never applied again here.

#include <string_view>

#include "hyperspin/production_state.hpp"

namespace hyperspin {

enum class SteeringDirection {
  AliceToBob,  // Lambda steers Lambda-bar; mixes in I/2 (x) rho_B.
  BobToAlice,  // Lambda-bar steers Lambda; mixes in rho_A (x) I/2.
};

enum class SteeringClass { NoWay, OneWayAB, OneWayBA, TwoWay };

std::string_view steering_class_slug(SteeringClass c);

struct SteeringResult {
  double s_ab = 0.0;
  double s_ba = 0.0;
  double delta_s = 0.0;
  SteeringClass steering_class = SteeringClass::NoWay;
};

struct SteeringFunctions {
  double a = 0.0;
  double b = 0.0;
  double c = 0.0;
};

/// Correlation-matrix components tr[(sigma_alpha (x) sigma_beta) rho] that
/// survive for X-states.
struct FanoBloch {
  double r11 = 0.0;
  double r22 = 0.0;
  double r33 = 0.0;
  double r03 = 0.0;
  double r30 = 0.0;
};

struct MeasureRecord {
  SteeringResult steering;
  double concurrence = 0.0;
  double eof = 0.0;
  double gqd = 0.0;
  double coherence_l1 = 0.0;
  double eta = 1.0;
  double kernel = 1.0;
};

/// (1/sqrt3) rho + (1 - 1/sqrt3) * (product of a marginal with I/2).
ComplexMat4 steering_operator(const DensityMatrix4& rho, SteeringDirection direction);

SteeringFunctions f_functions(const DensityMatrix4& rho);

/// max{0, (8/sqrt3) max(|rho14|^2 - f_a -+ f_b, |rho23|^2 - f_c -+ f_b)},
/// minus sign for Alice -> Bob.
SteeringResult steering(const DensityMatrix4& rho);

/// X-state concurrence 2 max{|rho23| - sqrt(rho11 rho44), |rho14| - sqrt(rho22 rho33), 0}.
double concurrence(const DensityMatrix4& rho);

/// |eta gamma_2| from the production parameters. Coincides with
/// concurrence() of the evolved state at eta = 1 and bounds it from above
/// for eta < 1; see docs/kernel_and_formula_notes.md.
double concurrence_closed(const HyperonChannel& ch, double phi, double eta);

/// Binary entropy -x log2 x - (1-x) log2 (1-x), with 0 log 0 = 0.
double binary_entropy(double x);

/// Entanglement of formation from a concurrence in [0, 1]. Throws DomainError.
double eof(double c);

FanoBloch fano_bloch(const DensityMatrix4& rho);

/// Schatten-1-norm geometric discord, X-state closed form.
double gqd(const DensityMatrix4& rho);

/// Sum of moduli of off-diagonal entries.
double coherence_l1(const DensityMatrix4& rho);

MeasureRecord measure_all(const DensityMatrix4& rho, double eta, double kernel);

}  // namespace hyperspin
