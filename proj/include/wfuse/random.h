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

#ifndef WFUSE_RANDOM_H
#define WFUSE_RANDOM_H

#include <cstdint>
#include <random>

#include "wfuse/fock.h"
#include "wfuse/pdbs.h"

namespace wfuse {

/// Uniform in [0,1) from the top 53 bits; identical on every platform for a given seed.
double uniform01(std::mt19937_64 &rng);

/// Transmissivities drawn uniformly from [0.001, 0.999]^2.
PdbsParams random_params(std::mt19937_64 &rng);

/// Normalized random superposition over 1..max_terms distinct terms with
/// complex amplitudes. Every term has `spectators` spectator qubits and `modes`
/// modes; each mode holds 0..2 photons, and all terms share one photon count.
PolarizationState random_state(std::mt19937_64 &rng, size_t spectators, size_t modes, size_t max_terms);

}  // namespace wfuse

#endif
