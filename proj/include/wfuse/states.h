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

#ifndef WFUSE_STATES_H
#define WFUSE_STATES_H

#include <string>

#include "wfuse/fock.h"

namespace wfuse {

enum class StateKind { W, WLike, SinglePhoton };

std::string to_string(StateKind kind);

/// Description of a resource state, buildable with make_state().
struct StateSpec {
    StateKind kind = StateKind::WLike;
    size_t size = 2;
    Polarization polarization = Polarization::H;  // SinglePhoton only

    static StateSpec w(size_t n) {
        return {StateKind::W, n, Polarization::H};
    }
    static StateSpec wlike(size_t n) {
        return {StateKind::WLike, n, Polarization::H};
    }
    static StateSpec photon(Polarization p) {
        return {StateKind::SinglePhoton, 1, p};
    }
};

/// Throws std::invalid_argument when the spec violates its size constraint.
void validate(const StateSpec &spec);

/// Prototype W state on n spectator qubits: every single-V term with amplitude 1/sqrt(n).
PolarizationState w_state(size_t n);

/// The W-like state: amplitude 1/sqrt(2) on the term whose V sits in the last
/// position, 1/sqrt(2(n-1)) on each of the other n-1 single-V terms.
PolarizationState wlike_state(size_t n);

PolarizationState single_photon(Polarization p);

PolarizationState make_state(const StateSpec &spec);

}  // namespace wfuse

#endif
