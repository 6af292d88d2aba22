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

#ifndef WFUSE_PDBS_H
#define WFUSE_PDBS_H

#include <set>
#include <string>
#include <vector>

#include "wfuse/fock.h"

namespace wfuse {

/// Transmissivities of a polarization-dependent beam splitter.
struct PdbsParams {
    double mu = 0.5;  // H transmissivity
    double nu = 0.5;  // V transmissivity

    bool operator==(const PdbsParams &) const = default;
};

/// Throws std::invalid_argument unless 0 < mu < 1 and 0 < nu < 1.
void validate(const PdbsParams &p);

/// Interferes modes `in_a` and `in_b` on a PDBS.
///
/// Output mode c replaces `in_a` and output mode d replaces `in_b`. Per
/// polarization P with transmissivity t (mu for H, nu for V) the creation
/// operators map as
///
///     a_P -> sqrt(t) c_P + sqrt(1-t) d_P
///     b_P -> -sqrt(1-t) c_P + sqrt(t) d_P
///
/// and products are expanded with bosonic normalisation. Spectators and
/// other modes are untouched.
PolarizationState apply_pdbs(const PolarizationState &state, size_t in_a, size_t in_b, const PdbsParams &p);

/// Removes spectator `index` and appends it as a new singly occupied mode.
PolarizationState spectator_to_mode(const PolarizationState &state, size_t index);

enum class ReadingKind { Measured, Heralded };

/// Outcome at one mode. A measured mode goes through a PBS onto an H and a V
/// detector, giving photon counts per polarization. A heralded mode is a kept
/// output that was verified to hold exactly one photon, its polarization untouched.
struct ModeReading {
    size_t mode = 0;
    ReadingKind kind = ReadingKind::Measured;
    ModeOccupation counts;  // Measured only

    auto operator<=>(const ModeReading &) const = default;
};

struct DetectionPattern {
    std::vector<ModeReading> readings;  // ordered by mode

    const ModeReading &at(size_t mode) const;
    std::string str() const;

    auto operator<=>(const DetectionPattern &) const = default;
};

struct Branch {
    DetectionPattern pattern;
    /// Normalized conditional state on spectators plus heralded modes (in mode order).
    PolarizationState state;
    double probability = 0;
};

/// Enumerates every distinct detection outcome.
///
/// Modes outside `kept_modes` are measured. A kept mode holding exactly one
/// photon is heralded and survives as an output qubit; a kept mode holding
/// zero or several photons cannot serve as a qubit and is measured as well.
/// Probabilities are relative to the squared norm of `state`, so they sum to 1.
std::vector<Branch> detect(const PolarizationState &state, const std::set<size_t> &kept_modes);

/// Terms with exactly one photon in each of the two modes (sub-normalized).
PolarizationState coincidence_project(const PolarizationState &state, size_t mode_c, size_t mode_d);

}  // namespace wfuse

#endif
