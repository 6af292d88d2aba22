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

#include "wfuse/cost.h"

#include <limits>
#include <stdexcept>
#include <tuple>

namespace wfuse {

namespace {

class BestParamsCache {
   public:
    std::optional<ParamSolution> get(SchemeKind kind, size_t n, size_t m) {
        auto key = std::make_tuple(kind, n, m);
        auto it = cache_.find(key);
        if (it != cache_.end()) {
            return it->second;
        }
        std::optional<ParamSolution> best;
        try {
            best = best_params(solve_scheme(Scheme{kind, n, m}));
        } catch (const NoPhysicalSolution &) {
        }
        cache_.emplace(key, best);
        return best;
    }

   private:
    std::map<std::tuple<SchemeKind, size_t, size_t>, std::optional<ParamSolution>> cache_;
};

/// (R_n + R_m) / Ps, dividing by the exact rational where one is known.
double fused_cost(double inputs, const ParamSolution &s) {
    if (s.exact_probability) {
        return inputs * static_cast<double>(s.exact_probability->den) / static_cast<double>(s.exact_probability->num);
    }
    return inputs / s.success_probability;
}

std::vector<std::pair<size_t, size_t>> pairings(size_t size, PairingPolicy policy) {
    if (policy == PairingPolicy::Balanced) {
        return {balanced_pairing(size)};
    }
    std::vector<std::pair<size_t, size_t>> out;
    for (size_t n = 2; n + 1 <= size; n++) {
        size_t m = size + 1 - n;
        if (m >= 2) {
            out.emplace_back(n, m);
        }
    }
    return out;
}

/// Fills `table` for sizes 3..max_size; leaf costs come from `leaves` (or the table itself when null).
void fill(CostTable &table, size_t max_size, SchemeKind kind, const CostTable *leaves, BestParamsCache &cache) {
    for (size_t size = 3; size <= max_size; size++) {
        const CostTable &source = leaves ? *leaves : table;
        std::optional<CostEntry> best;
        for (auto [n, m] : pairings(size, table.policy)) {
            auto params = cache.get(kind, n, m);
            if (!params) {
                continue;
            }
            double cost = fused_cost(source.at(n).cost + source.at(m).cost, *params);
            if (!best || cost < best->cost) {
                best = CostEntry{size, cost, std::make_pair(std::min(n, m), std::max(n, m)), params};
            }
        }
        if (!best) {
            throw NoPhysicalSolution("no physical solution for any pairing at size " + std::to_string(size));
        }
        table.entries[size] = *best;
    }
}

}  // namespace

std::string to_string(CostStrategy s) {
    switch (s) {
        case CostStrategy::WLikeFromWLike:
            return "wlike";
        case CostStrategy::WFromWLike:
            return "w-from-wlike";
        case CostStrategy::WFromW:
            return "w-from-w";
    }
    return "?";
}

std::string to_string(PairingPolicy p) {
    return p == PairingPolicy::Balanced ? "balanced" : "exhaustive";
}

const CostEntry &CostTable::at(size_t size) const {
    auto it = entries.find(size);
    if (it == entries.end()) {
        throw std::out_of_range("cost table has no entry for size " + std::to_string(size));
    }
    return it->second;
}

std::pair<size_t, size_t> balanced_pairing(size_t size) {
    size_t n = (size + 1) / 2;
    return {n, size + 1 - n};
}

CostTable cost_table(CostStrategy strategy, size_t max_size, PairingPolicy policy, double unit_cost) {
    if (max_size < 2) {
        throw std::invalid_argument("cost_table: max_size must be >= 2");
    }
    BestParamsCache cache;
    CostTable table;
    table.strategy = strategy;
    table.policy = policy;
    table.unit_cost = unit_cost;
    table.entries[2] = CostEntry{2, unit_cost, std::nullopt, std::nullopt};
    switch (strategy) {
        case CostStrategy::WLikeFromWLike:
            fill(table, max_size, SchemeKind::WLikeFusion, nullptr, cache);
            break;
        case CostStrategy::WFromW:
            fill(table, max_size, SchemeKind::WFromWFusion, nullptr, cache);
            break;
        case CostStrategy::WFromWLike: {
            auto leaves = cost_table(CostStrategy::WLikeFromWLike, max_size, policy, unit_cost);
            fill(table, max_size, SchemeKind::WFusion, &leaves, cache);
            break;
        }
    }
    return table;
}

std::vector<CurvePoint> compare_curves(size_t max_size, PairingPolicy policy) {
    if (max_size < 3) {
        throw std::invalid_argument("compare_curves: max_size must be >= 3");
    }
    auto black = cost_table(CostStrategy::WFromW, max_size, policy);
    auto red = cost_table(CostStrategy::WFromWLike, max_size, policy);
    std::vector<CurvePoint> out;
    for (size_t size = 3; size <= max_size; size++) {
        out.push_back({size, black.at(size).cost, red.at(size).cost});
    }
    return out;
}

}  // namespace wfuse
