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

#include "wfuse/fock.h"

#include <cmath>
#include <sstream>

namespace wfuse {

char to_char(Polarization p) {
    return p == Polarization::H ? 'H' : 'V';
}

Polarization flipped(Polarization p) {
    return p == Polarization::H ? Polarization::V : Polarization::H;
}

uint32_t FockTerm::photon_count() const {
    uint32_t n = static_cast<uint32_t>(spectators.size());
    for (const auto &m : modes) {
        n += m.total();
    }
    return n;
}

uint32_t FockTerm::v_count() const {
    uint32_t n = 0;
    for (auto p : spectators) {
        n += p == Polarization::V;
    }
    for (const auto &m : modes) {
        n += m.v;
    }
    return n;
}

std::string FockTerm::str() const {
    std::ostringstream out;
    out << '|';
    for (auto p : spectators) {
        out << to_char(p);
    }
    out << '>';
    for (const auto &m : modes) {
        out << '|';
        if (m.total() == 0) {
            out << '0';
        }
        for (uint32_t k = 0; k < m.h; k++) {
            out << 'H';
        }
        for (uint32_t k = 0; k < m.v; k++) {
            out << 'V';
        }
        out << '>';
    }
    return out.str();
}

FockTerm make_term(std::initializer_list<Polarization> spectators, std::initializer_list<ModeOccupation> modes) {
    return FockTerm{std::vector<Polarization>(spectators), std::vector<ModeOccupation>(modes)};
}

PolarizationState::PolarizationState(size_t spectator_count, size_t mode_count)
    : spectator_count_(spectator_count), mode_count_(mode_count) {
}

Amplitude PolarizationState::amplitude(const FockTerm &term) const {
    auto it = terms_.find(term);
    return it == terms_.end() ? Amplitude{} : it->second;
}

double PolarizationState::norm_sq() const {
    double total = 0;
    for (const auto &[term, amp] : terms_) {
        total += std::norm(amp);
    }
    return total;
}

std::string PolarizationState::str() const {
    if (terms_.empty()) {
        return "0";
    }
    std::ostringstream out;
    out.precision(6);
    bool first = true;
    for (const auto &[term, amp] : terms_) {
        if (!first) {
            out << " + ";
        }
        first = false;
        if (amp.imag() == 0) {
            out << amp.real();
        } else {
            out << '(' << amp.real() << (amp.imag() < 0 ? "" : "+") << amp.imag() << "i)";
        }
        out << term.str();
    }
    return out.str();
}

StateBuilder::StateBuilder(size_t spectator_count, size_t mode_count) : state_(spectator_count, mode_count) {
}

void StateBuilder::check_arity(const FockTerm &term) const {
    if (term.spectators.size() != state_.spectator_count_ || term.modes.size() != state_.mode_count_) {
        throw std::invalid_argument("term " + term.str() + " does not match state arity");
    }
}

StateBuilder &StateBuilder::add(const FockTerm &term, Amplitude amp) {
    check_arity(term);
    state_.terms_[term] += amp;
    return *this;
}

StateBuilder &StateBuilder::add(FockTerm &&term, Amplitude amp) {
    check_arity(term);
    state_.terms_[std::move(term)] += amp;
    return *this;
}

PolarizationState StateBuilder::build() && {
    std::erase_if(state_.terms_, [](const auto &kv) {
        return std::abs(kv.second) < kPruneAmplitude;
    });
    return std::move(state_);
}

Normalized normalize(const PolarizationState &state) {
    double n2 = state.norm_sq();
    if (state.empty() || n2 == 0) {
        throw EmptyBranchError();
    }
    return Normalized{scaled(state, 1.0 / std::sqrt(n2)), n2};
}

Amplitude inner_product(const PolarizationState &a, const PolarizationState &b) {
    if (a.spectator_count() != b.spectator_count() || a.mode_count() != b.mode_count()) {
        throw std::invalid_argument("inner_product: arity mismatch");
    }
    Amplitude total{};
    // Both maps are sorted by term; walk them in lockstep.
    auto ia = a.terms().begin();
    auto ib = b.terms().begin();
    while (ia != a.terms().end() && ib != b.terms().end()) {
        if (ia->first < ib->first) {
            ++ia;
        } else if (ib->first < ia->first) {
            ++ib;
        } else {
            total += std::conj(ia->second) * ib->second;
            ++ia;
            ++ib;
        }
    }
    return total;
}

PolarizationState tensor(const PolarizationState &a, const PolarizationState &b) {
    StateBuilder out(a.spectator_count() + b.spectator_count(), a.mode_count() + b.mode_count());
    for (const auto &[ta, aa] : a.terms()) {
        for (const auto &[tb, ab] : b.terms()) {
            FockTerm t = ta;
            t.spectators.insert(t.spectators.end(), tb.spectators.begin(), tb.spectators.end());
            t.modes.insert(t.modes.end(), tb.modes.begin(), tb.modes.end());
            out.add(std::move(t), aa * ab);
        }
    }
    return std::move(out).build();
}

PolarizationState filter_terms(const PolarizationState &state, const std::function<bool(const FockTerm &)> &keep) {
    StateBuilder out(state.spectator_count(), state.mode_count());
    for (const auto &[term, amp] : state.terms()) {
        if (keep(term)) {
            out.add(term, amp);
        }
    }
    return std::move(out).build();
}

PolarizationState scaled(const PolarizationState &state, Amplitude factor) {
    StateBuilder out(state.spectator_count(), state.mode_count());
    for (const auto &[term, amp] : state.terms()) {
        out.add(term, amp * factor);
    }
    return std::move(out).build();
}

PolarizationState with_vacuum_modes(const PolarizationState &state, size_t count) {
    StateBuilder out(state.spectator_count(), state.mode_count() + count);
    for (const auto &[term, amp] : state.terms()) {
        FockTerm t = term;
        t.modes.resize(t.modes.size() + count);
        out.add(std::move(t), amp);
    }
    return std::move(out).build();
}

PolarizationState modes_to_qubits(const PolarizationState &state) {
    StateBuilder out(state.spectator_count() + state.mode_count(), 0);
    for (const auto &[term, amp] : state.terms()) {
        FockTerm t{term.spectators, {}};
        for (const auto &m : term.modes) {
            if (m.total() != 1) {
                throw std::invalid_argument("modes_to_qubits: mode is not singly occupied in " + term.str());
            }
            t.spectators.push_back(m.v == 1 ? Polarization::V : Polarization::H);
        }
        out.add(std::move(t), amp);
    }
    return std::move(out).build();
}

PolarizationState flip_spectators(const PolarizationState &state) {
    StateBuilder out(state.spectator_count(), state.mode_count());
    for (const auto &[term, amp] : state.terms()) {
        FockTerm t = term;
        for (auto &p : t.spectators) {
            p = flipped(p);
        }
        out.add(std::move(t), amp);
    }
    return std::move(out).build();
}

}  // namespace wfuse
