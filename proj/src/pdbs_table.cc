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

#include "wfuse/pdbs_table.h"

#include <cmath>

namespace wfuse {

namespace {

constexpr ModeOccupation kEmpty{0, 0};
constexpr ModeOccupation kH{1, 0};
constexpr ModeOccupation kV{0, 1};
constexpr ModeOccupation kHH{2, 0};
constexpr ModeOccupation kVV{0, 2};
constexpr ModeOccupation kHV{1, 1};

}  // namespace

std::vector<TableEntry> two_photon_table(Polarization a, Polarization b, const PdbsParams &p) {
    const double mu = p.mu;
    const double nu = p.nu;
    using std::sqrt;
    if (a == Polarization::H && b == Polarization::H) {
        return {
            {kH, kH, 2 * mu - 1, "(2mu-1)|H>_c|H>_d"},
            {kEmpty, kHH, sqrt(2 * mu) * sqrt(1 - mu), "sqrt(2mu)sqrt(1-mu)|0>_c|HH>_d"},
            {kHH, kEmpty, -sqrt(2 * mu) * sqrt(1 - mu), "-sqrt(2mu)sqrt(1-mu)|HH>_c|0>_d"},
        };
    }
    if (a == Polarization::H && b == Polarization::V) {
        return {
            {kH, kV, sqrt(mu) * sqrt(nu), "sqrt(mu)sqrt(nu)|H>_c|V>_d"},
            {kV, kH, -sqrt(1 - mu) * sqrt(1 - nu), "-sqrt(1-mu)sqrt(1-nu)|V>_c|H>_d"},
            {kEmpty, kHV, sqrt(1 - mu) * sqrt(nu), "sqrt(1-mu)sqrt(nu)|0>_c|HV>_d"},
            {kHV, kEmpty, -sqrt(mu) * sqrt(1 - nu), "-sqrt(mu)sqrt(1-nu)|HV>_c|0>_d"},
        };
    }
    if (a == Polarization::V && b == Polarization::H) {
        return {
            {kV, kH, sqrt(mu) * sqrt(nu), "sqrt(mu)sqrt(nu)|V>_c|H>_d"},
            {kH, kV, -sqrt(1 - mu) * sqrt(1 - nu), "-sqrt(1-mu)sqrt(1-nu)|H>_c|V>_d"},
            {kEmpty, kHV, sqrt(mu) * sqrt(1 - nu), "sqrt(mu)sqrt(1-nu)|0>_c|VH>_d"},
            {kHV, kEmpty, -sqrt(1 - mu) * sqrt(nu), "-sqrt(1-mu)sqrt(nu)|VH>_c|0>_d"},
        };
    }
    return {
        {kV, kV, 2 * nu - 1, "(2nu-1)|V>_c|V>_d"},
        {kEmpty, kVV, sqrt(2 * nu) * sqrt(1 - nu), "sqrt(2nu)sqrt(1-nu)|0>_c|VV>_d"},
        {kVV, kEmpty, -sqrt(2 * nu) * sqrt(1 - nu), "-sqrt(2nu)sqrt(1-nu)|VV>_c|0>_d"},
    };
}

std::vector<TableEntry> printed_vh_row(const PdbsParams &p) {
    const double mu = p.mu;
    const double nu = p.nu;
    using std::sqrt;
    return {
        {kV, kH, sqrt(mu) * sqrt(nu), "sqrt(mu)sqrt(nu)|V>_c|H>_d"},
        {kH, kV, -sqrt(1 - mu) * sqrt(1 - nu), "-sqrt(1-mu)sqrt(1-nu)|H>_c|V>_d"},
        {kEmpty, kHV, sqrt(1 - mu) * sqrt(nu), "sqrt(1-mu)sqrt(nu)|0>_c|VH>_d"},
        {kHV, kEmpty, -sqrt(mu) * sqrt(1 - nu), "-sqrt(mu)sqrt(1-nu)|VH>_c|0>_d"},
    };
}

PolarizationState table_state(const std::vector<TableEntry> &row) {
    StateBuilder out(0, 2);
    for (const auto &e : row) {
        out.add(FockTerm{{}, {e.c, e.d}}, e.amplitude);
    }
    return std::move(out).build();
}

PolarizationState two_photon_input(Polarization a, Polarization b) {
    auto occ = [](Polarization p) {
        return p == Polarization::H ? kH : kV;
    };
    StateBuilder out(0, 2);
    out.add(FockTerm{{}, {occ(a), occ(b)}}, 1.0);
    return std::move(out).build();
}

}  // namespace wfuse
