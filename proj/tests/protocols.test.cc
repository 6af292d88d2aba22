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

#include "wfuse/protocols.h"

#include <cmath>
#include <functional>

#include "gtest/gtest.h"
#include "wfuse/states.h"

using namespace wfuse;

namespace {

// Root of the W-like fusion constraint for N = M (independently derived).
const double kEqualNu = (3 - std::sqrt(3.0)) / 6;

const ClassifiedBranch *find_label(const ProtocolOutcome &o, const std::string &label) {
    for (const auto &b : o.branches) {
        if (b.label == label) {
            return &b;
        }
    }
    return nullptr;
}

/// Every root of f in (0,1), by bisection on a fine grid.
std::vector<double> bisect_roots(const std::function<double(double)> &f) {
    std::vector<double> roots;
    const int cells = 2000;
    for (int k = 0; k < cells; k++) {
        double lo = (k + 1e-9) / cells, hi = (k + 1) / double(cells);
        if (f(lo) * f(hi) > 0) {
            continue;
        }
        for (int it = 0; it < 200; it++) {
            double mid = (lo + hi) / 2;
            (f(lo) * f(mid) <= 0 ? hi : lo) = mid;
        }
        roots.push_back((lo + hi) / 2);
    }
    return roots;
}

}  // namespace

TEST(protocols, equal_size_wlike_fusion) {
    for (size_t n = 2; n <= 6; n++) {
        auto o = fuse({StateSpec::wlike(n), StateSpec::wlike(n), {1 - kEqualNu, kEqualNu}, TargetKind::WLike});
        ASSERT_NEAR(o.gauge_fidelity, 1, 1e-10) << n;
        ASSERT_NEAR(o.success_probability, 1.0 / 6, 1e-12) << n;
        ASSERT_NEAR(o.probability_sum(), 1, 1e-12);
        ASSERT_EQ(o.success.classification, BranchClass::Success);
        ASSERT_EQ(o.success.branch.state.spectator_count() + o.success.branch.state.mode_count(), 2 * n - 1);
    }
}

TEST(protocols, wlike_fusion_at_cubic_roots) {
    for (size_t n = 2; n <= 5; n++) {
        for (size_t m = n + 1; m <= 6; m++) {
            double N = n, M = m;
            auto roots = bisect_roots([&](double x) {
                return 4 * (N - M) * x * x * x + (-9 * N + 3 * M + 6) * x * x + (6 * N - 6) * x - (N - 1);
            });
            ASSERT_EQ(roots.size(), 2u) << n << "," << m;
            for (double nu : roots) {
                double mu = (N - 1) * (1 - nu) / ((M - 1) * nu + (N - 1) * (1 - nu));
                auto o = fuse({StateSpec::wlike(n), StateSpec::wlike(m), {mu, nu}, TargetKind::WLike});
                ASSERT_NEAR(o.gauge_fidelity, 1, 1e-10);
                ASSERT_NEAR(o.success_probability, std::pow(2 * nu - 1, 2) / 2, 1e-10);
                ASSERT_NEAR(o.probability_sum(), 1, 1e-12);
            }
        }
    }
}

TEST(protocols, heralded_state_matches_success_branch) {
    FusionRequest req{StateSpec::wlike(3), StateSpec::wlike(4), {0.3, 0.25}, TargetKind::WLike};
    auto o = fuse(req);
    auto h = fusion_heralded_state(req);
    ASSERT_NEAR(h.norm_sq(), o.success_probability, 1e-12);
    auto branch = modes_to_qubits(o.success.branch.state);
    ASSERT_NEAR(std::norm(inner_product(normalize(h).state, branch)), 1, 1e-12);
}

TEST(protocols, recyclable_branch_leaves_smaller_w_states) {
    for (size_t n : {3, 4, 5}) {
        for (size_t m : {3, 4, 5}) {
            PdbsParams p{0.35, 0.6};
            auto o = fuse({StateSpec::wlike(n), StateSpec::wlike(m), p, TargetKind::W});
            int seen = 0;
            for (const auto &b : o.branches) {
                if (b.classification != BranchClass::Recyclable) {
                    continue;
                }
                seen++;
                ASSERT_EQ(b.recyclable_sizes, std::make_pair(n - 1, m - 1));
                ASSERT_NEAR(*b.fidelity, 1, 1e-10);
                ASSERT_NEAR(b.branch.probability, p.mu * (1 - p.mu) / 2, 1e-12);
                auto expected = tensor(w_state(n - 1), w_state(m - 1));
                ASSERT_NEAR(fidelity(b.branch.state, expected), 1, 1e-10);
            }
            ASSERT_EQ(seen, 2);
        }
    }
}

TEST(protocols, bell_pair_inputs_herald_on_both_polarizations) {
    auto o = fuse({StateSpec::wlike(2), StateSpec::wlike(2), {1 - kEqualNu, kEqualNu}, TargetKind::WLike});
    const auto *h = find_label(o, "c kept, d: 1H 0V");
    ASSERT_NE(h, nullptr);
    ASSERT_TRUE(h->bit_flipped);
    ASSERT_NEAR(*h->fidelity, 1, 1e-10);
    ASSERT_NEAR(h->branch.probability, o.success_probability, 1e-12);
}

TEST(protocols, mirror_branch) {
    auto same = fuse({StateSpec::wlike(4), StateSpec::wlike(4), {1 - kEqualNu, kEqualNu}, TargetKind::WLike});
    ASSERT_TRUE(same.mirror.has_value());
    ASSERT_NEAR(*same.mirror->fidelity, 1, 1e-10);
    ASSERT_NEAR(same.mirror->branch.probability, same.success_probability, 1e-12);

    double nu = 0.1989760924;  // (3, 4) root, cubic residual < 1e-9
    double mu = 2 * (1 - nu) / (3 * nu + 2 * (1 - nu));
    auto uneven = fuse({StateSpec::wlike(3), StateSpec::wlike(4), {mu, nu}, TargetKind::WLike});
    ASSERT_NEAR(uneven.gauge_fidelity, 1, 1e-8);
    ASSERT_LT(*uneven.mirror->fidelity, 0.999);
}

TEST(protocols, wlike_expansion_at_cubic_roots) {
    for (size_t n = 2; n <= 8; n++) {
        double N = n;
        auto roots = bisect_roots([&](double x) {
            return 4 * (N - 1) * x * x * x - (3 * N - 7) * x * x - 4 * x + 1;
        });
        ASSERT_FALSE(roots.empty());
        for (double mu : roots) {
            double nu = (1 - mu) / (1 + (N - 1) * mu);
            auto o = expand(StateSpec::wlike(n), {mu, nu}, TargetKind::WLike);
            ASSERT_NEAR(o.gauge_fidelity, 1, 1e-10);
            ASSERT_NEAR(o.success_probability, (1 - mu) * (1 - nu), 1e-10);
            ASSERT_NEAR(o.probability_sum(), 1, 1e-12);
        }
    }
}

TEST(protocols, w_expansion_reaches_target) {
    for (size_t n = 2; n <= 8; n++) {
        double s = n + 3;
        double mu = (s + std::sqrt(s * (n - 1))) / (2 * s);
        auto o = expand(StateSpec::wlike(n), {mu, 1 - mu}, TargetKind::W);
        ASSERT_NEAR(o.gauge_fidelity, 1, 1e-10) << n;
        ASSERT_NEAR(o.success_probability, mu * (1 - mu) * (n + 1) / 2, 1e-10);
    }
}

TEST(protocols, bell_from_singles) {
    auto o = bell_from_singles({0.3, 0.7});
    ASSERT_NEAR(o.success_probability, 2 * 0.3 * 0.7, 1e-12);
    ASSERT_NEAR(o.gauge_fidelity, 1, 1e-12);
    ASSERT_NEAR(o.probability_sum(), 1, 1e-12);
    auto off = bell_from_singles({0.3, 0.3});
    ASSERT_LT(off.gauge_fidelity, 1 - 1e-3);
}

TEST(protocols, gauge_fidelity_ignores_local_phases) {
    StateBuilder b(3, 0);
    b.add(make_term({Polarization::V, Polarization::H, Polarization::H}), 1 / std::sqrt(3.0));
    b.add(make_term({Polarization::H, Polarization::V, Polarization::H}), Amplitude(0, 1) / std::sqrt(3.0));
    b.add(make_term({Polarization::H, Polarization::H, Polarization::V}), -1 / std::sqrt(3.0));
    auto phased = std::move(b).build();
    ASSERT_NEAR(gauge_fidelity(phased, w_state(3)), 1, 1e-12);
    ASSERT_LT(fidelity(phased, w_state(3)), 0.2);
    double overlap = (1 / std::sqrt(2.0) + 1) / std::sqrt(3.0);
    ASSERT_NEAR(gauge_fidelity(wlike_state(3), w_state(3)), overlap * overlap, 1e-12);
}

TEST(protocols, gauge_fidelity_rejects_other_sectors) {
    StateBuilder b(2, 0);
    b.add(make_term({Polarization::V, Polarization::V}), 1);
    auto vv = std::move(b).build();
    ASSERT_THROW(gauge_fidelity(vv, w_state(2)), std::invalid_argument);
    ASSERT_THROW(gauge_fidelity(w_state(3), w_state(2)), std::invalid_argument);
}

TEST(protocols, rejects_bad_inputs) {
    ASSERT_THROW(fuse({StateSpec::wlike(1), StateSpec::wlike(3), {0.5, 0.5}, TargetKind::W}), std::invalid_argument);
    ASSERT_THROW(fuse({StateSpec::wlike(3), StateSpec::wlike(3), {1.0, 0.5}, TargetKind::W}), std::invalid_argument);
    ASSERT_THROW(expand(StateSpec::photon(Polarization::H), {0.5, 0.5}, TargetKind::W), std::invalid_argument);
}
