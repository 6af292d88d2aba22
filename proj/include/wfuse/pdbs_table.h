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

#ifndef WFUSE_PDBS_TABLE_H
#define WFUSE_PDBS_TABLE_H

#include <array>
#include <string>
#include <vector>

#include "wfuse/fock.h"
#include "wfuse/pdbs.h"

namespace wfuse {

/// One output ket of a two-photon PDBS transformation, written in terms of
/// the (c, d) output mode occupations.
struct TableEntry {
    ModeOccupation c;
    ModeOccupation d;
    double amplitude;
    std::string label;
};

/// Literal two-photon transformation table for inputs |P>_a|Q>_b.
///
/// Written out coefficient by coefficient, independent of apply_pdbs, so it
/// can serve as an oracle. For |V>_a|H>_b the bunched coefficients are the
/// unitary ones: +sqrt(mu(1-nu)) on |0>_c|HV>_d and -sqrt((1-mu)nu) on |HV>_c|0>_d.
std::vector<TableEntry> two_photon_table(Polarization a, Polarization b, const PdbsParams &p);

/// The |V>_a|H>_b row with its bunched coefficients as commonly printed
/// (copied from the |H>_a|V>_b row). Kept to demonstrate it is not unitary.
std::vector<TableEntry> printed_vh_row(const PdbsParams &p);

/// Expands a table row into a two-mode state (no spectators).
PolarizationState table_state(const std::vector<TableEntry> &row);

/// Two-photon input |P>_a|Q>_b as a two-mode state.
PolarizationState two_photon_input(Polarization a, Polarization b);

}  // namespace wfuse

#endif
