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

#ifndef WFUSE_CLI_H
#define WFUSE_CLI_H

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "wfuse/cost.h"
#include "wfuse/protocols.h"
#include "wfuse/report.h"

namespace wfuse {

enum ExitCode : int {
    kExitOk = 0,
    kExitUsage = 2,
    kExitNoSolution = 3,
    kExitPropertyFailure = 4,
};

struct FuseOptions {
    size_t left = 2;
    size_t right = 2;
    TargetKind target = TargetKind::WLike;
    std::optional<double> mu;
    std::optional<double> nu;
};

struct ExpandOptions {
    size_t size = 2;
    TargetKind target = TargetKind::WLike;
    std::optional<double> mu;
    std::optional<double> nu;
};

enum class CostCommand { WLike, WFromWLike, WFromW, Compare };

struct CostOptions {
    CostCommand strategy = CostCommand::WLike;
    size_t max_size = 10;
    PairingPolicy policy = PairingPolicy::Exhaustive;
};

struct OracleOptions {
    int64_t trials = 1000;
    uint64_t seed = 7;
    /// Perturbs the implementation side of the table check so the harness must report a counterexample.
    bool inject_fault = false;
};

// Each command throws std::invalid_argument on bad input and NoPhysicalSolution
// when the solver finds nothing; run_cli maps those onto exit codes.
RunReport cmd_fuse(const FuseOptions &opt);
RunReport cmd_expand(const ExpandOptions &opt);
RunReport cmd_table1(size_t max_size);
RunReport cmd_cost(const CostOptions &opt);
RunReport cmd_oracle_check(const OracleOptions &opt);

/// Parses `args` (without the program name), runs the command and writes the rendering to `out`.
int run_cli(const std::vector<std::string> &args, std::ostream &out, std::ostream &err);

}  // namespace wfuse

#endif
