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

#include "wfuse/pdbs.h"

#include <cmath>
#include <map>
#include <sstream>
#include <stdexcept>

#include "wfuse/pdbs_table.h"

namespace wfuse {

namespace {

double factorial(uint32_t n) {
    double f = 1;
    for (uint32_t k = 2; k <= n; k++) {
        f *= k;
    }
    return f;
}

double binomial(uint32_t n, uint32_t k) {
    return factorial(n) / (factorial(k) * factorial(n - k));
}

struct SplitAmplitude {
    uint32_t to_c;
    uint32_t to_d;
    double coef;
};

/// Expands (a_P)^x (b_P)^y |0> / sqrt(x! y!) over the output modes for one polarization.
std::vector<SplitAmplitude> split_one_polarization(uint32_t x, uint32_t y, double t) {
    const double ac = std::sqrt(t);
    const double ad = std::sqrt(1 - t);
    const double bc = -std::sqrt(1 - t);
    const double bd = std::sqrt(t);
    std::vector<double> by_c(x + y + 1, 0.0);
    for (uint32_t i = 0; i <= x; i++) {
        for (uint32_t j = 0; j <= y; j++) {
            by_c[i + j] += binomial(x, i) * std::pow(ac, i) * std::pow(ad, x - i) * binomial(y, j) * std::pow(bc, j) *
                           std::pow(bd, y - j);
        }
    }
    std::vector<SplitAmplitude> out;
    const double in_norm = std::sqrt(factorial(x) * factorial(y));
    for (uint32_t kc = 0; kc <= x + y; kc++) {
        uint32_t kd = x + y - kc;
        double coef = by_c[kc] * std::sqrt(factorial(kc) * factorial(kd)) / in_norm;
        if (coef != 0) {
            out.push_back({kc, kd, coef});
        }
    }
    return out;
}

}  // namespace

void validate(const PdbsParams &p) {
    auto inside = [](double t) {
        return t > 0 && t < 1;
    };
    if (!inside(p.mu) || !inside(p.nu)) {
        std::ostringstream msg;
        msg << "PDBS transmissivities must lie in (0,1), got mu=" << p.mu << " nu=" << p.nu;
        throw std::invalid_argument(msg.str());
    }
}

PolarizationState apply_pdbs(const PolarizationState &state, size_t in_a, size_t in_b, const PdbsParams &p) {
    validate(p);
    if (in_a == in_b) {
        throw std::invalid_argument("apply_pdbs: input modes must differ");
    }
    if (in_a >= state.mode_count() || in_b >= state.mode_count()) {
        throw std::invalid_argument("apply_pdbs: mode index out of range");
    }
    StateBuilder out(state.spectator_count(), state.mode_count());
    for (const auto &[term, amp] : state.terms()) {
        const auto &a = term.modes[in_a];
        const auto &b = term.modes[in_b];
        auto hs = split_one_polarization(a.h, b.h, p.mu);
        auto vs = split_one_polarization(a.v, b.v, p.nu);
        for (const auto &h : hs) {
            for (const auto &v : vs) {
                FockTerm t = term;
                t.modes[in_a] = ModeOccupation{h.to_c, v.to_c};
                t.modes[in_b] = ModeOccupation{h.to_d, v.to_d};
                out.add(std::move(t), amp * h.coef * v.coef);
            }
        }
    }
    return std::move(out).build();
}

PolarizationState spectator_to_mode(const PolarizationState &state, size_t index) {
    if (index >= state.spectator_count()) {
        throw std::invalid_argument("spectator_to_mode: index out of range");
    }
    StateBuilder out(state.spectator_count() - 1, state.mode_count() + 1);
    for (const auto &[term, amp] : state.terms()) {
        FockTerm t = term;
        Polarization moved = t.spectators[index];
        t.spectators.erase(t.spectators.begin() + static_cast<std::ptrdiff_t>(index));
        t.modes.push_back(moved == Polarization::H ? ModeOccupation{1, 0} : ModeOccupation{0, 1});
        out.add(std::move(t), amp);
    }
    return std::move(out).build();
}

const ModeReading &DetectionPattern::at(size_t mode) const {
    for (const auto &r : readings) {
        if (r.mode == mode) {
            return r;
        }
    }
    throw std::out_of_range("no reading for mode " + std::to_string(mode));
}

std::string DetectionPattern::str() const {
    std::ostringstream out;
    bool first = true;
    for (const auto &r : readings) {
        if (!first) {
            out << ' ';
        }
        first = false;
        out << "m" << r.mode << ':';
        if (r.kind == ReadingKind::Heralded) {
            out << "kept";
        } else {
            out << r.counts.h << 'H' << r.counts.v << 'V';
        }
    }
    return out.str();
}

std::vector<Branch> detect(const PolarizationState &state, const std::set<size_t> &kept_modes) {
    const double total = state.norm_sq();
    if (total == 0) {
        throw EmptyBranchError();
    }
    std::map<DetectionPattern, StateBuilder> groups;
    for (const auto &[term, amp] : state.terms()) {
        DetectionPattern pattern;
        FockTerm residual{term.spectators, {}};
        for (size_t m = 0; m < term.modes.size(); m++) {
            const auto &occ = term.modes[m];
            if (kept_modes.contains(m) && occ.total() == 1) {
                pattern.readings.push_back({m, ReadingKind::Heralded, {}});
                residual.modes.push_back(occ);
            } else {
                pattern.readings.push_back({m, ReadingKind::Measured, occ});
            }
        }
        auto it = groups.find(pattern);
        if (it == groups.end()) {
            it = groups.emplace(pattern, StateBuilder(residual.spectators.size(), residual.modes.size())).first;
        }
        it->second.add(std::move(residual), amp);
    }
    std::vector<Branch> branches;
    branches.reserve(groups.size());
    for (auto &[pattern, builder] : groups) {
        auto projected = std::move(builder).build();
        if (projected.empty()) {
            continue;
        }
        auto [conditional, n2] = normalize(projected);
        branches.push_back(Branch{pattern, std::move(conditional), n2 / total});
    }
    return branches;
}

PolarizationState coincidence_project(const PolarizationState &state, size_t mode_c, size_t mode_d) {
    return filter_terms(state, [=](const FockTerm &t) {
        return t.modes.at(mode_c).total() == 1 && t.modes.at(mode_d).total() == 1;
    });
}

}  // namespace wfuse
