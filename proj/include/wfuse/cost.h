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

#ifndef WFUSE_COST_H
#define WFUSE_COST_H

#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "wfuse/solve.h"

namespace wfuse {

enum class CostStrategy {
    /// W-like states grown from Bell pairs by W-like fusion.
    WLikeFromWLike,
    /// A final W fusion of two W-like states built by WLikeFromWLike.
    WFromWLike,
    /// Prototype W states fused into prototype W states throughout.
    WFromW,
};

enum class PairingPolicy { Balanced, Exhaustive };

std::string to_string(CostStrategy s);
std::string to_string(PairingPolicy p);

struct CostEntry {
    size_t size = 0;
    /// Expected Bell pairs consumed, in units of the Bell-pair cost.
    double cost = 0;
    /// Input sizes (n, m) with n <= m; absent for the size-2 unit.
    std::optional<std::pair<size_t, size_t>> pairing;
    std::optional<ParamSolution> params;
};

struct CostTable {
    CostStrategy strategy = CostStrategy::WLikeFromWLike;
    PairingPolicy policy = PairingPolicy::Exhaustive;
    double unit_cost = 1;
    std::map<size_t, CostEntry> entries;

    const CostEntry &at(size_t size) const;
};

/// (floor((size+1)/2), size+1-floor((size+1)/2)): the most even split.
std::pair<size_t, size_t> balanced_pairing(size_t size);

/// Costs from size 2 up to max_size via R_out = (R_n + R_m) / Ps(n, m).
///
/// Ps is the best success probability of the fusion scheme matching the
/// strategy. Balanced uses balanced_pairing(); exhaustive minimises over every
/// n + m - 1 = size with n, m >= 2. Throws NoPhysicalSolution naming the size
/// if no pairing of that size can be solved.
CostTable cost_table(CostStrategy strategy, size_t max_size, PairingPolicy policy, double unit_cost = 1.0);

struct CurvePoint {
    size_t size = 0;
    double cost_w_from_w = 0;
    double cost_w_from_wlike = 0;

    bool wlike_route_cheaper() const {
        return cost_w_from_wlike < cost_w_from_w;
    }
};

/// Both routes to a prototype W state, sizes 3..max_size.
std::vector<CurvePoint> compare_curves(size_t max_size, PairingPolicy policy = PairingPolicy::Exhaustive);

}  // namespace wfuse

#endif
