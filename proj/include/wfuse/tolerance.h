// Copyright 2026 The wfuse Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef WFUSE_TOLERANCE_H
#define WFUSE_TOLERANCE_H

namespace wfuse {

/// Absolute tolerance for state-level comparisons (norms, amplitudes, branch sums).
inline constexpr double kDefaultTolerance = 1e-12;

/// Tolerance used when comparing against values printed to 4 decimals.
inline constexpr double kPrintedTolerance = 1e-3;

/// Tolerance for solved parameters driving a protocol to its target.
inline constexpr double kSolutionTolerance = 1e-10;

/// kDefaultTolerance unless WFUSE_TOLERANCE holds a positive number.
/// The environment is read once per process.
double tolerance();

}  // namespace wfuse

#endif
