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

// Invariant suite shipped with the library and run by `hyperspin check`.

#include <cstddef>
#include <string>
#include <vector>

#include "hyperspin/dephasing_channel.hpp"

namespace hyperspin {

struct SuiteReport {
  std::string name;
  std::size_t checks = 0;
  std::size_t failures = 0;
  std::string first_failure;

  bool passed() const { return failures == 0; }
};

struct SelfCheckReport {
  std::vector<SuiteReport> suites;

  bool passed() const;
  std::size_t total_checks() const;
  std::size_t total_failures() const;
};

/// Runs state validity, closed-form vs numeric X-state parameters, the
/// kernel contract, closed-form evolution vs Kraus sum, measure identities
/// and the resource hierarchy. `variant` selects the kernel used by the
/// time-dependent suites.
SelfCheckReport run_self_check(KernelVariant variant = KernelVariant::Paired);

}  // namespace hyperspin
