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

#include "wfuse/solve.h"

#include <algorithm>
#include <cmath>
#include <random>

#include "gtest/gtest.h"

using namespace wfuse;

TEST(solve, cubic_roots_from_factored_form) {
    std::mt19937_64 rng(21);
    std::uniform_real_distribution<double> u(0.02, 0.98);
    for (int k = 0; k < 500; k++) {
        std::vector<double> r = {u(rng), u(rng), u(rng) + 1.5};
        std::sort(r.begin(), r.begin() + 2);
        if (r[1] - r[0] < 0.01) {
            continue;
        }
        double a = u(rng) + 0.5;
        // a (x - r0)(x - r1)(x - r2)
        double c2 = -a * (r[0] + r[1] + r[2]);
        double c1 = a * (r[0] * r[1] + r[0] * r[2] + r[1] * r[2]);
        double c0 = -a * r[0] * r[1] * r[2];
        auto got = solve_cubic(a, c2, c1, c0);
        ASSERT_EQ(got.size(), 2u);
        ASSERT_NEAR(got[0], r[0], 1e-12);
        ASSERT_NEAR(got[1], r[1], 1e-12);
    }
}

TEST(solve, cubic_lower_degrees) {
    auto lin = solve_cubic(0, 0, 2, -1);
    ASSERT_EQ(lin.size(), 1u);
    ASSERT_NEAR(lin[0], 0.5, 1e-15);
    auto quad = solve_cubic(0, 1, -1, 0.21);  // (x - 0.3)(x - 0.7)
    ASSERT_EQ(quad.size(), 2u);
    ASSERT_NEAR(quad[0], 0.3, 1e-14);
    ASSERT_NEAR(quad[1], 0.7, 1e-14);
    ASSERT_TRUE(solve_cubic(0, 0, 1, 2).empty());
    ASSERT_TRUE(solve_cubic(1, 0, 0, 1).empty());
}

TEST(solve, equal_size_wlike_fusion_closed_form) {
    double lo = (3 - std::sqrt(3.0)) / 6;
    for (size_t n = 2; n <= 50; n++) {
        auto sols = params_wlike_fusion(n, n);
        ASSERT_EQ(sols.size(), 2u);
        ASSERT_NEAR(sols[0].nu, lo, 1e-12);
        ASSERT_NEAR(sols[0].mu, 1 - lo, 1e-12);
        ASSERT_NEAR(sols[1].nu, 1 - lo, 1e-12);
        ASSERT_NEAR(sols[1].mu, lo, 1e-12);
        for (const auto &s : sols) {
            ASSERT_NEAR(evaluate(wlike_fusion_cubic(n, n), s.nu), 0, 1e-12);
            ASSERT_EQ(s.exact_probability->num, 1);
            ASSERT_EQ(s.exact_probability->den, 6);
        }
    }
}

TEST(solve, w_fusion_three_three) {
    auto sols = params_w_fusion(3, 3);
    ASSERT_EQ(sols.size(), 2u);
    ASSERT_NEAR(sols[0].nu, 1.0 / 3, 1e-12);
    ASSERT_NEAR(sols[0].mu, 2.0 / 3, 1e-12);
    ASSERT_NEAR(sols[0].simulated_probability, 5.0 / 36, 1e-12);
    ASSERT_EQ(sols[0].exact_probability->num, 5);
    ASSERT_EQ(sols[0].exact_probability->den, 36);
}

TEST(solve, w_fusion_equal_sizes) {
    for (size_t n = 2; n <= 12; n++) {
        double s = 4.0 * n - 3;
        auto sols = params_w_fusion(n, n);
        ASSERT_EQ(sols.size(), 2u);
        ASSERT_NEAR(sols[0].nu, (s - std::sqrt(s)) / (2 * s), 1e-12);
        ASSERT_NEAR(sols[0].success_probability, (2.0 * n - 1) / (4 * s), 1e-12);
        ASSERT_NEAR(sols[0].simulated_probability, sols[0].success_probability, 1e-10);
    }
}

TEST(solve, wlike_expansion_two) {
    auto sols = params_wlike_expansion(2);
    ASSERT_EQ(sols.size(), 2u);
    ASSERT_NEAR(sols[0].mu, 0.6799, 1e-3);
    ASSERT_NEAR(sols[0].nu, 0.1904, 1e-3);
    ASSERT_NEAR(sols[1].mu, 0.2991, 1e-3);
    ASSERT_NEAR(sols[1].nu, 0.5398, 1e-3);
}

TEST(solve, w_expansion_closed_form) {
    for (size_t n = 2; n <= 12; n++) {
        for (const auto &s : params_w_expansion(n)) {
            ASSERT_NEAR(s.mu + s.nu, 1, 1e-12);
            ASSERT_NEAR(s.simulated_probability, s.mu * s.nu * (n + 1) / 2, 1e-10);
            ASSERT_NEAR(s.success_probability, (n + 1.0) / (2 * (n + 3)), 1e-12);
        }
    }
}

TEST(solve, every_solution_reaches_target) {
    for (size_t n = 2; n <= 12; n++) {
        for (size_t m = n; m <= 12; m++) {
            for (auto scheme : {Scheme::wlike_fusion(n, m), Scheme::w_fusion(n, m)}) {
                for (const auto &s : solve_scheme(scheme)) {
                    ASSERT_NEAR(s.gauge_fidelity, 1, 1e-10) << scheme.str();
                    ASSERT_NEAR(s.simulated_probability, s.success_probability, 1e-10) << scheme.str();
                }
            }
        }
        for (auto scheme : {Scheme::wlike_expansion(n), Scheme::w_expansion(n)}) {
            for (const auto &s : solve_scheme(scheme)) {
                ASSERT_NEAR(s.gauge_fidelity, 1, 1e-10) << scheme.str();
            }
        }
    }
}

TEST(solve, swapping_inputs_mirrors_parameters) {
    for (size_t n = 2; n <= 7; n++) {
        for (size_t m = n + 1; m <= 8; m++) {
            for (bool w : {false, true}) {
                auto a = w ? params_w_fusion(n, m) : params_wlike_fusion(n, m);
                auto b = w ? params_w_fusion(m, n) : params_wlike_fusion(m, n);
                ASSERT_EQ(a.size(), b.size());
                for (const auto &x : a) {
                    auto y = std::find_if(b.begin(), b.end(), [&](const ParamSolution &s) {
                        return std::abs(s.nu - (1 - x.nu)) < 1e-10 && std::abs(s.mu - (1 - x.mu)) < 1e-10;
                    });
                    ASSERT_NE(y, b.end()) << n << "," << m << " nu=" << x.nu;
                    ASSERT_NEAR(y->success_probability, x.success_probability, 1e-10);
                }
            }
        }
    }
}

TEST(solve, w_from_w_fusion) {
    double lo = (5 - std::sqrt(5.0)) / 10;
    for (size_t n = 2; n <= 5; n++) {
        for (size_t m = 2; m <= 5; m++) {
            auto sols = params_w_from_w_fusion(n, m);
            ASSERT_EQ(sols.size(), 2u) << n << "," << m;
            ASSERT_NEAR(sols[0].nu, lo, 1e-8);
            ASSERT_NEAR(sols[0].mu, 1 - lo, 1e-8);
            ASSERT_NEAR(sols[1].nu, 1 - lo, 1e-8);
            for (const auto &s : sols) {
                ASSERT_NEAR(s.success_probability, (n + m - 1.0) / (5.0 * n * m), 1e-10);
                ASSERT_NEAR(s.gauge_fidelity, 1, 1e-10);
            }
        }
    }
}

TEST(solve, best_params_prefers_probability_then_smaller_nu) {
    auto sols = params_wlike_fusion(3, 3);
    ASSERT_NEAR(best_params(sols).nu, (3 - std::sqrt(3.0)) / 6, 1e-12);
    auto uneven = params_wlike_fusion(2, 3);
    ASSERT_NEAR(best_params(uneven).success_probability, 0.1934, 1e-4);
    ASSERT_THROW(best_params({}), std::invalid_argument);
}

TEST(solve, rejects_small_sizes) {
    ASSERT_THROW(params_wlike_fusion(1, 3), std::invalid_argument);
    ASSERT_THROW(params_w_expansion(1), std::invalid_argument);
}

TEST(solve, table1_rows) {
    auto t = table1(10);
    ASSERT_EQ(t.rows.size(), 17u);
    for (const auto &r : t.rows) {
        ASSERT_GE(r.sol1.nu, r.sol2.nu);
        ASSERT_TRUE(r.ps_printed.has_value());
        if (r.n == 2 && r.m == 3) {
            continue;
        }
        ASSERT_NEAR(r.sol1.nu, r.printed1->nu, 1e-3) << r.n << "," << r.m;
        ASSERT_NEAR(r.sol1.mu, r.printed1->mu, 1e-3) << r.n << "," << r.m;
        ASSERT_NEAR(r.sol2.nu, r.printed2->nu, 1e-3) << r.n << "," << r.m;
        ASSERT_NEAR(r.sol2.mu, r.printed2->mu, 1e-3) << r.n << "," << r.m;
        ASSERT_NEAR(r.ps_max, *r.ps_printed, 1e-3) << r.n << "," << r.m;
    }
}

TEST(solve, table1_flags_row_two_three) {
    auto t = table1(3);
    bool nu_flag = false, ps_flag = false;
    for (const auto &d : t.discrepancies) {
        ASSERT_EQ(d.n, 2u);
        ASSERT_EQ(d.m, 3u);
        if (d.field == "sol2.nu") {
            nu_flag = true;
            ASSERT_NEAR(d.printed, 0.4890, 1e-9);
            ASSERT_GT(std::abs(evaluate(wlike_fusion_cubic(2, 3), d.printed)), 0.5);
            ASSERT_NEAR(d.computed, 0.1890, 1e-3);
        }
        if (d.field == "ps_max") {
            ps_flag = true;
            ASSERT_NEAR(d.printed, 0.1486, 1e-9);
            ASSERT_NEAR(d.computed, 0.1934, 1e-4);
        }
    }
    ASSERT_TRUE(nu_flag);
    ASSERT_TRUE(ps_flag);
}
