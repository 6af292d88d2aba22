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

#ifndef WFUSE_SOLVE_H
#define WFUSE_SOLVE_H

#include <array>
#include <cstdint>
#include <functional>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "wfuse/pdbs.h"
#include "wfuse/protocols.h"

namespace wfuse {

/// Grid cells scanned for sign changes by solve_cubic. Roots closer together
/// than 1/kCubicGridCells, and roots of even multiplicity, can be missed.
inline constexpr int kCubicGridCells = 256;
inline constexpr int kMaxPolishSteps = 64;

/// Real roots strictly inside (0,1) of c3 x^3 + c2 x^2 + c1 x + c0, ascending.
///
/// Works for any degree up to three (c3 = 0 is fine). Each root is bracketed
/// by a sign change and polished with safeguarded Newton iteration.
std::vector<double> solve_cubic(double c3, double c2, double c1, double c0);

using Cubic = std::array<double, 4>;  // {c3, c2, c1, c0}

double evaluate(const Cubic &c, double x);

/// Constraint on nu for fusing W-like states of sizes n (input a) and m (input b) into a W-like state.
Cubic wlike_fusion_cubic(size_t n, size_t m);
/// Same inputs, maximally entangled W target.
Cubic w_fusion_cubic(size_t n, size_t m);
/// Constraint on mu for expanding a W-like state of size n into a W-like state.
Cubic wlike_expansion_cubic(size_t n);

/// mu fixed by nu through the equal-amplitude condition between the two inputs' terms.
double fusion_mu_from_nu(size_t n, size_t m, double nu);

enum class SchemeKind { WLikeFusion, WFusion, WLikeExpansion, WExpansion, WFromWFusion };

struct Scheme {
    SchemeKind kind = SchemeKind::WLikeFusion;
    size_t n = 2;
    size_t m = 0;  // unused for expansions

    static Scheme wlike_fusion(size_t n, size_t m) {
        return {SchemeKind::WLikeFusion, n, m};
    }
    static Scheme w_fusion(size_t n, size_t m) {
        return {SchemeKind::WFusion, n, m};
    }
    static Scheme wlike_expansion(size_t n) {
        return {SchemeKind::WLikeExpansion, n, 0};
    }
    static Scheme w_expansion(size_t n) {
        return {SchemeKind::WExpansion, n, 0};
    }
    static Scheme w_from_w_fusion(size_t n, size_t m) {
        return {SchemeKind::WFromWFusion, n, m};
    }

    bool is_fusion() const {
        return kind != SchemeKind::WLikeExpansion && kind != SchemeKind::WExpansion;
    }
    size_t output_size() const {
        return is_fusion() ? n + m - 1 : n + 1;
    }
    std::string str() const;
};

struct Rational {
    int64_t num = 0;
    int64_t den = 1;

    double value() const {
        return static_cast<double>(num) / static_cast<double>(den);
    }
};

struct ParamSolution {
    Scheme scheme;
    double nu = 0;
    double mu = 0;
    /// Closed-form success probability (simulator value where none exists).
    double success_probability = 0;
    /// Set where the closed form reduces to a rational number.
    std::optional<Rational> exact_probability;
    double simulated_probability = 0;
    double gauge_fidelity = 0;

    PdbsParams params() const {
        return {mu, nu};
    }
};

class NoPhysicalSolution : public std::runtime_error {
   public:
    explicit NoPhysicalSolution(const std::string &what) : std::runtime_error(what) {
    }
};

/// Runs the protocol behind a scheme at the given parameters.
ProtocolOutcome simulate(const Scheme &scheme, const PdbsParams &p);

/// Closed-form success probability; nullopt for schemes without one.
std::optional<double> formula_probability(const Scheme &scheme, const PdbsParams &p);

std::vector<ParamSolution> params_wlike_fusion(size_t n, size_t m);
std::vector<ParamSolution> params_w_fusion(size_t n, size_t m);
std::vector<ParamSolution> params_wlike_expansion(size_t n);
std::vector<ParamSolution> params_w_expansion(size_t n);
/// Prototype W inputs fused into a W target, solved numerically through the simulator.
std::vector<ParamSolution> params_w_from_w_fusion(size_t n, size_t m);

/// Dispatches on scheme.kind. Throws NoPhysicalSolution when nothing survives.
std::vector<ParamSolution> solve_scheme(const Scheme &scheme);

/// Highest success probability; ties (within 1e-12) go to the smaller nu.
/// Throws std::invalid_argument on an empty list.
ParamSolution best_params(const std::vector<ParamSolution> &solutions);

/// Finds every (mu, nu) in (0,1)^2 at which `heralded` matches the magnitudes of `target`.
///
/// Residuals are the squared-magnitude differences of the normalised states,
/// minimised by damped Gauss-Newton from a grid of seeds. Solutions are returned
/// sorted by nu and deduplicated.
std::vector<PdbsParams> solve_amplitude_equality(const std::function<PolarizationState(const PdbsParams &)> &heralded,
                                                 const PolarizationState &target);

struct Table1Pair {
    double nu = 0;
    double mu = 0;
};

struct Table1Row {
    size_t n = 0;
    size_t m = 0;
    ParamSolution sol1;  // larger nu
    ParamSolution sol2;  // smaller nu
    double ps_max = 0;
    /// Reference values for this row, when the row is part of the reference table.
    std::optional<Table1Pair> printed1;
    std::optional<Table1Pair> printed2;
    std::optional<double> ps_printed;
};

struct Discrepancy {
    size_t n = 0;
    size_t m = 0;
    std::string field;
    double printed = 0;
    double computed = 0;
    std::string note;
};

struct Table1 {
    std::vector<Table1Row> rows;
    std::vector<Discrepancy> discrepancies;
};

/// Rows (2,2), (2,3), (3,3), ..., (max,max) of W-like fusion parameters,
/// compared against the reference table where it has entries.
Table1 table1(size_t max_size = 10);

}  // namespace wfuse

#endif
