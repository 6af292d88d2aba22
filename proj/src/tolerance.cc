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

#include "wfuse/tolerance.h"

#include <cstdlib>
#include <string>

namespace wfuse {

double tolerance() {
    static const double value = [] {
        const char *env = std::getenv("WFUSE_TOLERANCE");
        if (env == nullptr) {
            return kDefaultTolerance;
        }
        try {
            double v = std::stod(env);
            return v > 0 ? v : kDefaultTolerance;
        } catch (const std::exception &) {
            return kDefaultTolerance;
        }
    }();
    return value;
}

}  // namespace wfuse
