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

#include "wfuse/protocols.h"

#include <cmath>
#include <numeric>
#include <stdexcept>

#include "wfuse/pdbs_table.h"

namespace wfuse {

namespace {

constexpr size_t kModeC = 0;
constexpr size_t kModeD = 1;

std::string describe(const DetectionPattern &pattern) {
    std::string out;
    for (const auto &r : pattern.readings) {
        if (!out.empty()) {
            out += ", ";
        }
        out += r.mode == kModeC ? "c" : "d";
        if (r.kind == ReadingKind::Heralded) {
            out += " kept";
        } else {
            out += ": " + std::to_string(r.counts.h) + "H " + std::to_string(r.counts.v) + "V";
        }
    }
    return out;
}

bool heralded(const DetectionPattern &p, size_t mode) {
    return p.at(mode).kind == ReadingKind::Heralded;
}

bool measured_as(const DetectionPattern &p, size_t mode, ModeOccupation counts) {
    const auto &r = p.at(mode);
    return r.kind == ReadingKind::Measured && r.counts == counts;
}

/// Moves the last qubit of a W-class resource into a fresh mode.
PolarizationState last_photon_to_mode(const StateSpec &spec) {
    auto s = make_state(spec);
    return spectator_to_mode(s, s.spectator_count() - 1);
}

void require_w_class(const StateSpec &spec, const char *role) {
    if (spec.kind == StateKind::SinglePhoton) {
        throw std::invalid_argument(std::string(role) + " input must be a W or W-like state");
    }
    validate(spec);
}

PolarizationState w_or_photon(size_t n) {
    return n == 1 ? single_photon(Polarization::V) : w_state(n);
}

ClassifiedBranch success_branch(Branch b, const PolarizationState &target, std::string label) {
    ClassifiedBranch out;
    b.state = modes_to_qubits(b.state);
    out.fidelity = gauge_fidelity(b.state, target);
    out.branch = std::move(b);
    out.classification = BranchClass::Success;
    out.label = std::move(label);
    return out;
}

ProtocolOutcome finish(std::vector<ClassifiedBranch> branches, PolarizationState target) {
    ProtocolOutcome out;
    out.target = std::move(target);
    bool found = false;
    for (const auto &b : branches) {
        if (b.classification == BranchClass::Success && !b.bit_flipped) {
            out.success = b;
            found = true;
            break;
        }
    }
    if (!found) {
        throw std::logic_error("heralding pattern never occurs for this input");
    }
    out.success_probability = out.success.branch.probability;
    out.gauge_fidelity = *out.success.fidelity;
    out.branches = std::move(branches);
    return out;
}

}  // namespace

std::string to_string(TargetKind kind) {
    return kind == TargetKind::W ? "w" : "wlike";
}

std::string to_string(BranchClass c) {
    switch (c) {
        case BranchClass::Success:
            return "success";
        case BranchClass::Recyclable:
            return "recyclable";
        case BranchClass::Failure:
            return "failure";
    }
    return "?";
}

PolarizationState target_state(TargetKind kind, size_t n) {
    return kind == TargetKind::W ? w_state(n) : wlike_state(n);
}

double ProtocolOutcome::probability_sum() const {
    return std::accumulate(branches.begin(), branches.end(), 0.0, [](double acc, const ClassifiedBranch &b) {
        return acc + b.branch.probability;
    });
}

ProtocolOutcome fuse(const FusionRequest &req) {
    require_w_class(req.left, "left");
    require_w_class(req.right, "right");
    validate(req.params);
    const size_t n = req.left.size;
    const size_t m = req.right.size;
    const auto target = target_state(req.target, n + m - 1);

    auto joint = tensor(last_photon_to_mode(req.left), last_photon_to_mode(req.right));
    auto out = apply_pdbs(joint, kModeC, kModeD, req.params);

    std::vector<ClassifiedBranch> branches;
    for (auto &b : detect(out, {kModeC})) {
        const auto &p = b.pattern;
        std::string label = describe(p);
        if (heralded(p, kModeC) && measured_as(p, kModeD, {0, 1})) {
            branches.push_back(success_branch(std::move(b), target, label));
        } else if (heralded(p, kModeC) && measured_as(p, kModeD, {1, 0}) && n == 2 && m == 2) {
            // Both spectators are single qubits, so this branch is the target with H and V exchanged.
            ClassifiedBranch cb;
            b.state = modes_to_qubits(b.state);
            cb.fidelity = gauge_fidelity(flip_spectators(b.state), target);
            cb.branch = std::move(b);
            cb.classification = BranchClass::Success;
            cb.bit_flipped = true;
            cb.label = label;
            branches.push_back(std::move(cb));
        } else if ((measured_as(p, kModeC, {2, 0}) && measured_as(p, kModeD, {0, 0})) ||
                   (measured_as(p, kModeC, {0, 0}) && measured_as(p, kModeD, {2, 0}))) {
            ClassifiedBranch cb;
            cb.fidelity = fidelity(b.state, tensor(w_or_photon(n - 1), w_or_photon(m - 1)));
            cb.branch = std::move(b);
            cb.classification = BranchClass::Recyclable;
            cb.recyclable_sizes = std::make_pair(n - 1, m - 1);
            cb.label = label;
            branches.push_back(std::move(cb));
        } else {
            ClassifiedBranch cb;
            cb.branch = std::move(b);
            cb.label = label;
            branches.push_back(std::move(cb));
        }
    }
    auto result = finish(std::move(branches), target);

    for (auto &b : detect(out, {kModeD})) {
        if (heralded(b.pattern, kModeD) && measured_as(b.pattern, kModeC, {0, 1})) {
            std::string label = describe(b.pattern);
            result.mirror = success_branch(std::move(b), target, label);
            break;
        }
    }
    return result;
}

PolarizationState fusion_input(const StateSpec &left, const StateSpec &right) {
    require_w_class(left, "left");
    require_w_class(right, "right");
    return tensor(last_photon_to_mode(left), last_photon_to_mode(right));
}

PolarizationState fusion_heralded_state(const PolarizationState &input, const PdbsParams &params) {
    auto out = apply_pdbs(input, kModeC, kModeD, params);
    StateBuilder heralded_out(out.spectator_count() + 1, 0);
    for (const auto &[term, amp] : out.terms()) {
        const auto &c = term.modes[kModeC];
        const auto &d = term.modes[kModeD];
        if (c.total() == 1 && d == ModeOccupation{0, 1}) {
            FockTerm t{term.spectators, {}};
            t.spectators.push_back(c.v == 1 ? Polarization::V : Polarization::H);
            heralded_out.add(std::move(t), amp);
        }
    }
    return std::move(heralded_out).build();
}

PolarizationState fusion_heralded_state(const FusionRequest &req) {
    return fusion_heralded_state(fusion_input(req.left, req.right), req.params);
}

ProtocolOutcome expand(const StateSpec &spec, const PdbsParams &params, TargetKind target_kind) {
    require_w_class(spec, "expanded");
    validate(params);
    const auto target = target_state(target_kind, spec.size + 1);
    auto joint = tensor(last_photon_to_mode(spec), spectator_to_mode(single_photon(Polarization::H), 0));
    auto out = apply_pdbs(joint, kModeC, kModeD, params);

    std::vector<ClassifiedBranch> branches;
    for (auto &b : detect(out, {kModeC, kModeD})) {
        std::string label = describe(b.pattern);
        if (heralded(b.pattern, kModeC) && heralded(b.pattern, kModeD)) {
            branches.push_back(success_branch(std::move(b), target, label));
        } else {
            ClassifiedBranch cb;
            cb.branch = std::move(b);
            cb.label = label;
            branches.push_back(std::move(cb));
        }
    }
    return finish(std::move(branches), target);
}

ProtocolOutcome bell_from_singles(const PdbsParams &params) {
    validate(params);
    const auto target = w_state(2);
    auto out = apply_pdbs(two_photon_input(Polarization::H, Polarization::V), kModeC, kModeD, params);
    std::vector<ClassifiedBranch> branches;
    for (auto &b : detect(out, {kModeC, kModeD})) {
        std::string label = describe(b.pattern);
        if (heralded(b.pattern, kModeC) && heralded(b.pattern, kModeD)) {
            branches.push_back(success_branch(std::move(b), target, label));
        } else {
            ClassifiedBranch cb;
            cb.branch = std::move(b);
            cb.label = label;
            branches.push_back(std::move(cb));
        }
    }
    return finish(std::move(branches), target);
}

double gauge_fidelity(const PolarizationState &got, const PolarizationState &target) {
    auto a = got.mode_count() > 0 ? modes_to_qubits(got) : got;
    auto b = target.mode_count() > 0 ? modes_to_qubits(target) : target;
    if (a.spectator_count() != b.spectator_count()) {
        throw std::invalid_argument("gauge_fidelity: qubit counts differ");
    }
    for (const auto *s : {&a, &b}) {
        for (const auto &[term, amp] : s->terms()) {
            if (term.v_count() != 1) {
                throw std::invalid_argument("gauge_fidelity: term " + term.str() + " is outside the single-excitation sector");
            }
        }
    }
    double overlap = 0;
    for (const auto &[term, amp] : a.terms()) {
        overlap += std::abs(amp) * std::abs(b.amplitude(term));
    }
    return overlap * overlap / (a.norm_sq() * b.norm_sq());
}

double fidelity(const PolarizationState &got, const PolarizationState &target) {
    return std::norm(inner_product(target, got)) / (got.norm_sq() * target.norm_sq());
}

}  // namespace wfuse
