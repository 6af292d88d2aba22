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

#include "wfuse/states.h"

#include <cmath>
#include <stdexcept>

namespace wfuse {

namespace {

FockTerm single_v_term(size_t n, size_t v_position) {
    FockTerm t;
    t.spectators.assign(n, Polarization::H);
    t.spectators[v_position] = Polarization::V;
    return t;
}

}  // namespace

std::string to_string(StateKind kind) {
    switch (kind) {
        case StateKind::W:
            return "W";
        case StateKind::WLike:
            return "WLike";
        case StateKind::SinglePhoton:
            return "SinglePhoton";
    }
    return "?";
}

void validate(const StateSpec &spec) {
    switch (spec.kind) {
        case StateKind::W:
        case StateKind::WLike:
            if (spec.size < 2) {
                throw std::invalid_argument(to_string(spec.kind) + " state needs size >= 2, got " +
                                            std::to_string(spec.size));
            }
            break;
        case StateKind::SinglePhoton:
            if (spec.size != 1) {
                throw std::invalid_argument("single photon spec must have size 1");
            }
            break;
    }
}

PolarizationState w_state(size_t n) {
    validate(StateSpec::w(n));
    StateBuilder out(n, 0);
    double amp = 1.0 / std::sqrt(static_cast<double>(n));
    for (size_t k = 0; k < n; k++) {
        out.add(single_v_term(n, k), amp);
    }
    return std::move(out).build();
}

PolarizationState wlike_state(size_t n) {
    validate(StateSpec::wlike(n));
    StateBuilder out(n, 0);
    double other = 1.0 / (std::sqrt(2.0) * std::sqrt(static_cast<double>(n - 1)));
    for (size_t k = 0; k + 1 < n; k++) {
        out.add(single_v_term(n, k), other);
    }
    out.add(single_v_term(n, n - 1), 1.0 / std::sqrt(2.0));
    return std::move(out).build();
}

PolarizationState single_photon(Polarization p) {
    StateBuilder out(1, 0);
    out.add(FockTerm{{p}, {}}, 1.0);
    return std::move(out).build();
}

PolarizationState make_state(const StateSpec &spec) {
    validate(spec);
    switch (spec.kind) {
        case StateKind::W:
            return w_state(spec.size);
        case StateKind::WLike:
            return wlike_state(spec.size);
        case StateKind::SinglePhoton:
            return single_photon(spec.polarization);
    }
    throw std::logic_error("unreachable");
}

}  // namespace wfuse
