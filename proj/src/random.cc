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

#include "wfuse/random.h"

#include <cmath>

namespace wfuse {

double uniform01(std::mt19937_64 &rng) {
    return static_cast<double>(rng() >> 11) * 0x1.0p-53;
}

PdbsParams random_params(std::mt19937_64 &rng) {
    auto draw = [&] {
        return 0.001 + 0.998 * uniform01(rng);
    };
    double mu = draw();
    double nu = draw();
    return {mu, nu};
}

PolarizationState random_state(std::mt19937_64 &rng, size_t spectators, size_t modes, size_t max_terms) {
    auto below = [&](size_t n) {
        return static_cast<size_t>(uniform01(rng) * static_cast<double>(n));
    };
    const auto mode_photons = static_cast<uint32_t>(1 + below(2 * modes));
    const size_t terms = 1 + below(max_terms);
    StateBuilder out(spectators, modes);
    for (size_t k = 0; k < terms; k++) {
        FockTerm t;
        for (size_t s = 0; s < spectators; s++) {
            t.spectators.push_back(below(2) ? Polarization::V : Polarization::H);
        }
        t.modes.resize(modes);
        // Drop photons one at a time into modes that still have room (at most 2 per mode).
        for (uint32_t placed = 0; placed < mode_photons;) {
            auto &m = t.modes[below(modes)];
            if (m.total() >= 2) {
                continue;
            }
            (below(2) ? m.v : m.h)++;
            placed++;
        }
        double re = 2 * uniform01(rng) - 1;
        double im = 2 * uniform01(rng) - 1;
        out.add(std::move(t), Amplitude{re, im});
    }
    auto state = std::move(out).build();
    return normalize(state).state;
}

}  // namespace wfuse
