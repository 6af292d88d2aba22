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

#ifndef WFUSE_PROTOCOLS_H
#define WFUSE_PROTOCOLS_H

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "wfuse/fock.h"
#include "wfuse/pdbs.h"
#include "wfuse/states.h"

namespace wfuse {

enum class TargetKind { WLike, W };

std::string to_string(TargetKind kind);

/// The target state of size n for the given kind.
PolarizationState target_state(TargetKind kind, size_t n);

struct FusionRequest {
    StateSpec left;
    StateSpec right;
    PdbsParams params;
    TargetKind target = TargetKind::WLike;
};

enum class BranchClass { Success, Recyclable, Failure };

std::string to_string(BranchClass c);

struct ClassifiedBranch {
    Branch branch;
    BranchClass classification = BranchClass::Failure;
    /// Human-readable description of the detector clicks.
    std::string label;
    /// Set for Recyclable: the sizes of the two W states left behind.
    std::optional<std::pair<size_t, size_t>> recyclable_sizes;
    /// Set for success-like branches (gauge fidelity) and recyclable ones (plain fidelity).
    std::optional<double> fidelity;
    /// True when the branch reaches the target only after flipping H <-> V on every qubit.
    bool bit_flipped = false;
};

struct ProtocolOutcome {
    ClassifiedBranch success;
    double success_probability = 0;
    double gauge_fidelity = 0;
    PolarizationState target;
    /// Every detection outcome of the run, including the success branch.
    std::vector<ClassifiedBranch> branches;
    /// Fusion only: V detected in mode c with mode d kept instead.
    std::optional<ClassifiedBranch> mirror;

    double probability_sum() const;
};

/// Fuses the last photon of `left` (input a) with the last photon of `right` (input b).
///
/// The heralding outcome is one V photon at mode d's V detector with mode c
/// kept as an output qubit; the output qubits are ordered left spectators,
/// right spectators, then mode c. Two H photons in one output mode leave
/// W_{N-1} x W_{M-1} and are classified recyclable.
ProtocolOutcome fuse(const FusionRequest &req);

/// Sub-normalized heralded output of fuse() in qubit form, skipping branch
/// enumeration. Its squared norm is the success probability.
PolarizationState fusion_heralded_state(const FusionRequest &req);

/// Two-mode input of a fusion: spectators of both states, then modes c and d.
PolarizationState fusion_input(const StateSpec &left, const StateSpec &right);

/// Same as fusion_heralded_state for an input prepared once by fusion_input().
PolarizationState fusion_heralded_state(const PolarizationState &input, const PdbsParams &params);

/// Interferes the last photon of `spec` with an H ancilla; success is one
/// photon in each output mode, both kept (qubit order: spectators, c, d).
ProtocolOutcome expand(const StateSpec &spec, const PdbsParams &params, TargetKind target);

/// Fuses |H>_a and |V>_b into a Bell pair heralded by coincidence.
ProtocolOutcome bell_from_singles(const PdbsParams &params);

/// Overlap maximised over per-qubit phases diag(1, e^{i phi}).
///
/// Both states must lie in the single-excitation sector (exactly one V per
/// term) with the same qubit count; modes are converted to qubits first.
/// There the optimum is (sum_i |a_i||b_i|)^2, normalised by both norms.
double gauge_fidelity(const PolarizationState &got, const PolarizationState &target);

/// |<target|got>|^2 normalised by both norms.
double fidelity(const PolarizationState &got, const PolarizationState &target);

}  // namespace wfuse

#endif
