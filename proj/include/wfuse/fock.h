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

#ifndef WFUSE_FOCK_H
#define WFUSE_FOCK_H

#include <compare>
#include <complex>
#include <cstdint>
#include <functional>
#include <initializer_list>
#include <map>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace wfuse {

enum class Polarization : uint8_t { H = 0, V = 1 };

char to_char(Polarization p);
Polarization flipped(Polarization p);

/// Photon occupation of one spatial mode, split by polarization.
struct ModeOccupation {
    uint32_t h = 0;
    uint32_t v = 0;

    uint32_t total() const {
        return h + v;
    }
    auto operator<=>(const ModeOccupation &) const = default;
};

/// One basis ket: a string of spectator qubits followed by a list of spatial modes.
///
/// Spectators are photons that never touch an optical element; they are
/// tracked only by polarization. Active modes carry full Fock occupations.
struct FockTerm {
    std::vector<Polarization> spectators;
    std::vector<ModeOccupation> modes;

    uint32_t photon_count() const;
    /// Number of V-polarized photons across spectators and modes.
    uint32_t v_count() const;
    std::string str() const;

    auto operator<=>(const FockTerm &) const = default;
};

FockTerm make_term(std::initializer_list<Polarization> spectators, std::initializer_list<ModeOccupation> modes = {});

using Amplitude = std::complex<double>;

/// Amplitudes smaller than this are treated as exact zeros and pruned.
inline constexpr double kPruneAmplitude = 1e-15;

/// Sparse superposition of FockTerms.
///
/// Values are immutable once built; every operation returns a new state.
/// States need not be normalized: a projected state carries its branch
/// probability as its squared norm.
class PolarizationState {
   public:
    PolarizationState() = default;
    /// Empty state with fixed arity.
    PolarizationState(size_t spectator_count, size_t mode_count);

    size_t spectator_count() const {
        return spectator_count_;
    }
    size_t mode_count() const {
        return mode_count_;
    }
    const std::map<FockTerm, Amplitude> &terms() const {
        return terms_;
    }
    size_t size() const {
        return terms_.size();
    }
    bool empty() const {
        return terms_.empty();
    }
    /// Zero when the term is absent.
    Amplitude amplitude(const FockTerm &term) const;
    double norm_sq() const;
    std::string str() const;

    bool operator==(const PolarizationState &other) const = default;

   private:
    friend class StateBuilder;
    size_t spectator_count_ = 0;
    size_t mode_count_ = 0;
    std::map<FockTerm, Amplitude> terms_;
};

/// Accumulates amplitudes term by term, then freezes them into a PolarizationState.
class StateBuilder {
   public:
    StateBuilder(size_t spectator_count, size_t mode_count);

    /// Adds `amp` to the amplitude already stored for `term`.
    /// Throws std::invalid_argument if the term arity does not match.
    StateBuilder &add(const FockTerm &term, Amplitude amp);
    StateBuilder &add(FockTerm &&term, Amplitude amp);

    PolarizationState build() &&;

   private:
    void check_arity(const FockTerm &term) const;
    PolarizationState state_;
};

/// Raised when a projection leaves nothing to normalize.
class EmptyBranchError : public std::runtime_error {
   public:
    EmptyBranchError() : std::runtime_error("empty branch") {
    }
};

struct Normalized {
    PolarizationState state;
    double norm_sq;
};

/// Rescales to unit norm and returns the input's squared norm alongside.
/// Throws EmptyBranchError for a state without terms.
Normalized normalize(const PolarizationState &state);

/// <a|b>, conjugate-linear in `a`.
Amplitude inner_product(const PolarizationState &a, const PolarizationState &b);

/// Spectators and modes of `b` are appended after those of `a`.
PolarizationState tensor(const PolarizationState &a, const PolarizationState &b);

PolarizationState filter_terms(const PolarizationState &state, const std::function<bool(const FockTerm &)> &keep);

/// Multiplies every amplitude by `factor`.
PolarizationState scaled(const PolarizationState &state, Amplitude factor);

/// Adds `count` empty modes after the existing ones.
PolarizationState with_vacuum_modes(const PolarizationState &state, size_t count);

/// Moves every singly occupied mode into the spectator list (in mode order).
/// Throws std::invalid_argument if some mode holds zero or several photons.
PolarizationState modes_to_qubits(const PolarizationState &state);

/// Applies a bit flip (H <-> V) to every spectator qubit.
PolarizationState flip_spectators(const PolarizationState &state);

}  // namespace wfuse

#endif
