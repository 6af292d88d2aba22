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
#include <limits>
#include <sstream>

#include "wfuse/tolerance.h"

namespace wfuse {

namespace {

double derivative(const Cubic &c, double x) {
    return (3 * c[0] * x + 2 * c[1]) * x + c[2];
}

/// Safeguarded Newton inside a sign-change bracket.
double polish_root(const Cubic &c, double lo, double hi) {
    double flo = evaluate(c, lo);
    double x = 0.5 * (lo + hi);
    for (int step = 0; step < kMaxPolishSteps; step++) {
        double fx = evaluate(c, x);
        if (fx == 0) {
            return x;
        }
        if ((fx < 0) == (flo < 0)) {
            lo = x;
            flo = fx;
        } else {
            hi = x;
        }
        double dfx = derivative(c, x);
        double next = dfx != 0 ? x - fx / dfx : lo;
        if (!(next > lo && next < hi)) {
            next = 0.5 * (lo + hi);
        }
        if (std::abs(next - x) <= 4 * std::numeric_limits<double>::epsilon() * std::abs(x)) {
            x = next;
            break;
        }
        x = next;
    }
    return x;
}

void check_sizes(size_t n, size_t m) {
    if (n < 2 || m < 2) {
        throw std::invalid_argument("fusion needs input sizes >= 2, got (" + std::to_string(n) + ", " +
                                    std::to_string(m) + ")");
    }
}

void check_size(size_t n) {
    if (n < 2) {
        throw std::invalid_argument("expansion needs input size >= 2, got " + std::to_string(n));
    }
}

ParamSolution make_solution(const Scheme &scheme, double nu, double mu, std::optional<Rational> exact = std::nullopt) {
    ParamSolution s;
    s.scheme = scheme;
    s.nu = nu;
    s.mu = mu;
    auto outcome = simulate(scheme, s.params());
    s.simulated_probability = outcome.success_probability;
    s.gauge_fidelity = outcome.gauge_fidelity;
    auto formula = formula_probability(scheme, s.params());
    s.success_probability = formula.value_or(s.simulated_probability);
    s.exact_probability = exact;
    return s;
}

std::vector<ParamSolution> fusion_from_cubic(const Scheme &scheme, const Cubic &cubic,
                                             std::optional<Rational> exact = std::nullopt) {
    std::vector<ParamSolution> out;
    for (double nu : solve_cubic(cubic[0], cubic[1], cubic[2], cubic[3])) {
        double mu = fusion_mu_from_nu(scheme.n, scheme.m, nu);
        if (mu > 0 && mu < 1) {
            out.push_back(make_solution(scheme, nu, mu, exact));
        }
    }
    return out;
}

std::vector<ParamSolution> require_some(std::vector<ParamSolution> solutions, const Scheme &scheme) {
    if (solutions.empty()) {
        throw NoPhysicalSolution("no physical solution for " + scheme.str());
    }
    std::sort(solutions.begin(), solutions.end(), [](const auto &a, const auto &b) {
        return a.nu < b.nu;
    });
    return solutions;
}

double max_abs(const std::vector<double> &v) {
    double m = 0;
    for (double x : v) {
        m = std::max(m, std::abs(x));
    }
    return m;
}

/// Squared-magnitude mismatch between normalised `got` and `target`, over the union of their terms.
std::vector<double> magnitude_residuals(const PolarizationState &got, const PolarizationState &target) {
    std::vector<double> r;
    double gn = got.norm_sq();
    double tn = target.norm_sq();
    if (gn == 0) {
        return {};
    }
    for (const auto &[term, amp] : target.terms()) {
        r.push_back(std::norm(got.amplitude(term)) / gn - std::norm(amp) / tn);
    }
    for (const auto &[term, amp] : got.terms()) {
        if (target.amplitude(term) == Amplitude{}) {
            r.push_back(std::norm(amp) / gn);
        }
    }
    return r;
}

}  // namespace

double evaluate(const Cubic &c, double x) {
    return ((c[0] * x + c[1]) * x + c[2]) * x + c[3];
}

std::vector<double> solve_cubic(double c3, double c2, double c1, double c0) {
    const Cubic c{c3, c2, c1, c0};
    std::vector<double> roots;
    double prev_x = 0;
    double prev_f = evaluate(c, prev_x);
    for (int k = 1; k <= kCubicGridCells; k++) {
        double x = static_cast<double>(k) / kCubicGridCells;
        double f = evaluate(c, x);
        if (f == 0 && k < kCubicGridCells) {
            roots.push_back(x);
        } else if ((prev_f < 0 && f > 0) || (prev_f > 0 && f < 0)) {
            roots.push_back(polish_root(c, prev_x, x));
        }
        prev_x = x;
        prev_f = f;
    }
    return roots;
}

Cubic wlike_fusion_cubic(size_t n, size_t m) {
    const double N = static_cast<double>(n);
    const double M = static_cast<double>(m);
    return {4 * (N - M), -9 * N + 3 * M + 6, 6 * N - 6, -(N - 1)};
}

Cubic w_fusion_cubic(size_t n, size_t m) {
    const double N = static_cast<double>(n);
    const double M = static_cast<double>(m);
    return {4 * (N - M), 4 * M - 8 * N + 3, 5 * N - M - 3, -(N - 1)};
}

Cubic wlike_expansion_cubic(size_t n) {
    const double N = static_cast<double>(n);
    return {4 * (N - 1), -(3 * N - 7), -4, 1};
}

double fusion_mu_from_nu(size_t n, size_t m, double nu) {
    const double a = static_cast<double>(n - 1) * (1 - nu);
    return a / (static_cast<double>(m - 1) * nu + a);
}

std::string Scheme::str() const {
    std::ostringstream out;
    switch (kind) {
        case SchemeKind::WLikeFusion:
            out << "WLikeFusion(" << n << ", " << m << ")";
            break;
        case SchemeKind::WFusion:
            out << "WFusion(" << n << ", " << m << ")";
            break;
        case SchemeKind::WLikeExpansion:
            out << "WLikeExpansion(" << n << ")";
            break;
        case SchemeKind::WExpansion:
            out << "WExpansion(" << n << ")";
            break;
        case SchemeKind::WFromWFusion:
            out << "WFromWFusion(" << n << ", " << m << ")";
            break;
    }
    return out.str();
}

ProtocolOutcome simulate(const Scheme &scheme, const PdbsParams &p) {
    switch (scheme.kind) {
        case SchemeKind::WLikeFusion:
            return fuse({StateSpec::wlike(scheme.n), StateSpec::wlike(scheme.m), p, TargetKind::WLike});
        case SchemeKind::WFusion:
            return fuse({StateSpec::wlike(scheme.n), StateSpec::wlike(scheme.m), p, TargetKind::W});
        case SchemeKind::WLikeExpansion:
            return expand(StateSpec::wlike(scheme.n), p, TargetKind::WLike);
        case SchemeKind::WExpansion:
            return expand(StateSpec::wlike(scheme.n), p, TargetKind::W);
        case SchemeKind::WFromWFusion:
            return fuse({StateSpec::w(scheme.n), StateSpec::w(scheme.m), p, TargetKind::W});
    }
    throw std::logic_error("unreachable");
}

std::optional<double> formula_probability(const Scheme &scheme, const PdbsParams &p) {
    const double two_nu = 2 * p.nu - 1;
    switch (scheme.kind) {
        case SchemeKind::WLikeFusion:
            return two_nu * two_nu / 2;
        case SchemeKind::WFusion:
            return two_nu * two_nu * static_cast<double>(scheme.n + scheme.m - 1) / 4;
        case SchemeKind::WLikeExpansion:
            return (1 - p.mu) * (1 - p.nu);
        case SchemeKind::WExpansion:
            return p.mu * p.nu * static_cast<double>(scheme.n + 1) / 2;
        case SchemeKind::WFromWFusion:
            return std::nullopt;
    }
    return std::nullopt;
}

std::vector<ParamSolution> params_wlike_fusion(size_t n, size_t m) {
    check_sizes(n, m);
    const auto scheme = Scheme::wlike_fusion(n, m);
    std::optional<Rational> exact;
    if (n == m) {
        exact = Rational{1, 6};
    }
    return require_some(fusion_from_cubic(scheme, wlike_fusion_cubic(n, m), exact), scheme);
}

std::vector<ParamSolution> params_w_fusion(size_t n, size_t m) {
    check_sizes(n, m);
    const auto scheme = Scheme::w_fusion(n, m);
    if (n != m) {
        return require_some(fusion_from_cubic(scheme, w_fusion_cubic(n, m)), scheme);
    }
    // Equal sizes: nu = [s -+ sqrt(s)] / 2s with s = 4n-3, mu = 1 - nu, (2nu-1)^2 = 1/s.
    const auto s = static_cast<int64_t>(4 * n - 3);
    const double sd = static_cast<double>(s);
    const Rational exact{static_cast<int64_t>(2 * n - 1), 4 * s};
    std::vector<ParamSolution> out;
    auto cubic_roots = solve_cubic(w_fusion_cubic(n, m)[0], w_fusion_cubic(n, m)[1], w_fusion_cubic(n, m)[2],
                                   w_fusion_cubic(n, m)[3]);
    for (double sign : {-1.0, 1.0}) {
        double nu = (sd + sign * std::sqrt(sd)) / (2 * sd);
        bool agrees = std::any_of(cubic_roots.begin(), cubic_roots.end(), [&](double r) {
            return std::abs(r - nu) < kSolutionTolerance;
        });
        if (!agrees) {
            throw std::logic_error("closed form disagrees with cubic for " + scheme.str());
        }
        out.push_back(make_solution(scheme, nu, 1 - nu, exact));
    }
    return require_some(std::move(out), scheme);
}

std::vector<ParamSolution> params_wlike_expansion(size_t n) {
    check_size(n);
    const auto scheme = Scheme::wlike_expansion(n);
    const auto c = wlike_expansion_cubic(n);
    std::vector<ParamSolution> out;
    for (double mu : solve_cubic(c[0], c[1], c[2], c[3])) {
        double nu = (1 - mu) / (1 + static_cast<double>(n - 1) * mu);
        if (nu > 0 && nu < 1) {
            out.push_back(make_solution(scheme, nu, mu));
        }
    }
    return require_some(std::move(out), scheme);
}

std::vector<ParamSolution> params_w_expansion(size_t n) {
    check_size(n);
    const auto scheme = Scheme::w_expansion(n);
    const double s = static_cast<double>(n + 3);
    const double root = std::sqrt(s * static_cast<double>(n - 1));
    // mu * nu = 1/(n+3), so Ps = (n+1) / (2(n+3)).
    const Rational exact{static_cast<int64_t>(n + 1), static_cast<int64_t>(2 * (n + 3))};
    std::vector<ParamSolution> out;
    for (double sign : {1.0, -1.0}) {
        double mu = (s + sign * root) / (2 * s);
        out.push_back(make_solution(scheme, 1 - mu, mu, exact));
    }
    return require_some(std::move(out), scheme);
}

std::vector<ParamSolution> params_w_from_w_fusion(size_t n, size_t m) {
    check_sizes(n, m);
    const auto scheme = Scheme::w_from_w_fusion(n, m);
    const auto input = fusion_input(StateSpec::w(n), StateSpec::w(m));
    auto heralded = [&input](const PdbsParams &p) {
        return fusion_heralded_state(input, p);
    };
    std::vector<ParamSolution> out;
    for (const auto &p : solve_amplitude_equality(heralded, w_state(n + m - 1))) {
        out.push_back(make_solution(scheme, p.nu, p.mu));
    }
    return require_some(std::move(out), scheme);
}

std::vector<ParamSolution> solve_scheme(const Scheme &scheme) {
    switch (scheme.kind) {
        case SchemeKind::WLikeFusion:
            return params_wlike_fusion(scheme.n, scheme.m);
        case SchemeKind::WFusion:
            return params_w_fusion(scheme.n, scheme.m);
        case SchemeKind::WLikeExpansion:
            return params_wlike_expansion(scheme.n);
        case SchemeKind::WExpansion:
            return params_w_expansion(scheme.n);
        case SchemeKind::WFromWFusion:
            return params_w_from_w_fusion(scheme.n, scheme.m);
    }
    throw std::logic_error("unreachable");
}

ParamSolution best_params(const std::vector<ParamSolution> &solutions) {
    if (solutions.empty()) {
        throw std::invalid_argument("best_params: empty solution list");
    }
    const ParamSolution *best = &solutions.front();
    for (const auto &s : solutions) {
        double diff = s.success_probability - best->success_probability;
        if (diff > kDefaultTolerance || (std::abs(diff) <= kDefaultTolerance && s.nu < best->nu)) {
            best = &s;
        }
    }
    return *best;
}

std::vector<PdbsParams> solve_amplitude_equality(const std::function<PolarizationState(const PdbsParams &)> &heralded,
                                                 const PolarizationState &target) {
    constexpr int kSeedsPerAxis = 6;
    constexpr int kMaxIterations = 60;
    constexpr double kStep = 1e-7;
    constexpr double kEdge = 1e-9;
    constexpr double kAccept = 1e-11;

    auto residuals = [&](double mu, double nu) -> std::vector<double> {
        if (!(mu > 0 && mu < 1 && nu > 0 && nu < 1)) {
            return {};
        }
        return magnitude_residuals(heralded({mu, nu}), target);
    };

    std::vector<PdbsParams> found;
    for (int i = 0; i < kSeedsPerAxis; i++) {
        for (int j = 0; j < kSeedsPerAxis; j++) {
            double mu = (i + 0.5) / kSeedsPerAxis;
            double nu = (j + 0.5) / kSeedsPerAxis;
            auto r = residuals(mu, nu);
            if (r.empty()) {
                continue;
            }
            double lambda = 1e-3;
            bool abandoned = false;
            for (int it = 0; it < kMaxIterations && max_abs(r) > 1e-15; it++) {
                // Seeds that drift onto a known root, or stall far from any root, are dropped early.
                if (std::any_of(found.begin(), found.end(), [&](const PdbsParams &p) {
                        return std::abs(p.mu - mu) < 1e-4 && std::abs(p.nu - nu) < 1e-4;
                    }) ||
                    (it >= 20 && max_abs(r) > 1e-4)) {
                    abandoned = true;
                    break;
                }
                double hm = std::min({kStep, mu - kEdge, 1 - kEdge - mu});
                double hn = std::min({kStep, nu - kEdge, 1 - kEdge - nu});
                if (hm <= 0 || hn <= 0) {
                    break;
                }
                auto rmp = residuals(mu + hm, nu);
                auto rmm = residuals(mu - hm, nu);
                auto rnp = residuals(mu, nu + hn);
                auto rnm = residuals(mu, nu - hn);
                if (rmp.size() != r.size() || rmm.size() != r.size() || rnp.size() != r.size() ||
                    rnm.size() != r.size()) {
                    break;
                }
                // Normal equations of the 2-parameter least-squares problem.
                double a11 = 0, a12 = 0, a22 = 0, g1 = 0, g2 = 0;
                for (size_t k = 0; k < r.size(); k++) {
                    double jm = (rmp[k] - rmm[k]) / (2 * hm);
                    double jn = (rnp[k] - rnm[k]) / (2 * hn);
                    a11 += jm * jm;
                    a12 += jm * jn;
                    a22 += jn * jn;
                    g1 += jm * r[k];
                    g2 += jn * r[k];
                }
                bool improved = false;
                for (int attempt = 0; attempt < 12 && !improved; attempt++) {
                    double b11 = a11 * (1 + lambda);
                    double b22 = a22 * (1 + lambda);
                    double det = b11 * b22 - a12 * a12;
                    if (det == 0) {
                        lambda *= 10;
                        continue;
                    }
                    double dmu = -(b22 * g1 - a12 * g2) / det;
                    double dnu = -(b11 * g2 - a12 * g1) / det;
                    auto rn = residuals(mu + dmu, nu + dnu);
                    if (!rn.empty() && rn.size() == r.size() && max_abs(rn) < max_abs(r)) {
                        mu += dmu;
                        nu += dnu;
                        r = std::move(rn);
                        lambda = std::max(lambda / 10, 1e-12);
                        improved = true;
                    } else {
                        lambda *= 10;
                    }
                }
                if (!improved) {
                    break;
                }
            }
            if (abandoned || max_abs(r) > kAccept) {
                continue;
            }
            bool duplicate = std::any_of(found.begin(), found.end(), [&](const PdbsParams &p) {
                return std::abs(p.mu - mu) < 1e-6 && std::abs(p.nu - nu) < 1e-6;
            });
            if (!duplicate) {
                found.push_back({mu, nu});
            }
        }
    }
    std::sort(found.begin(), found.end(), [](const PdbsParams &a, const PdbsParams &b) {
        return a.nu < b.nu;
    });
    return found;
}

namespace {

struct ReferenceRow {
    size_t n;
    size_t m;
    Table1Pair first;
    Table1Pair second;
    double ps;
};

// W-like fusion parameters (nu, mu) and maximal success probability as
// commonly tabulated, four decimals.
const std::vector<ReferenceRow> &reference_rows() {
    static const std::vector<ReferenceRow> rows = {
        {2, 2, {0.7887, 0.2113}, {0.2113, 0.7887}, 0.1667},
        {2, 3, {0.7726, 0.1283}, {0.4890, 0.6823}, 0.1486},
        {3, 3, {0.7887, 0.2113}, {0.2113, 0.7887}, 0.1667},
        {3, 4, {0.7789, 0.1598}, {0.1990, 0.7285}, 0.1812},
        {4, 4, {0.7887, 0.2113}, {0.2113, 0.7887}, 0.1667},
        {4, 5, {0.7812, 0.1735}, {0.2028, 0.7467}, 0.1767},
        {5, 5, {0.7887, 0.2113}, {0.2113, 0.7887}, 0.1667},
        {5, 6, {0.7828, 0.1816}, {0.2047, 0.7573}, 0.1744},
        {6, 6, {0.7887, 0.2113}, {0.2113, 0.7887}, 0.1667},
        {6, 7, {0.7838, 0.1868}, {0.2060, 0.7629}, 0.1729},
        {7, 7, {0.7887, 0.2113}, {0.2113, 0.7887}, 0.1667},
        {7, 8, {0.7846, 0.1906}, {0.2069, 0.7665}, 0.1718},
        {8, 8, {0.7887, 0.2113}, {0.2113, 0.7887}, 0.1667},
        {8, 9, {0.7851, 0.1932}, {0.2075, 0.7697}, 0.1711},
        {9, 9, {0.7887, 0.2113}, {0.2113, 0.7887}, 0.1667},
        {9, 10, {0.7855, 0.1953}, {0.2080, 0.7716}, 0.1705},
        {10, 10, {0.7887, 0.2113}, {0.2113, 0.7887}, 0.1667},
    };
    return rows;
}

void compare_pair(Table1 &table, const Table1Row &row, const char *name, const Table1Pair &printed,
                  const ParamSolution &computed) {
    const auto cubic = wlike_fusion_cubic(row.n, row.m);
    if (std::abs(printed.nu - computed.nu) > kPrintedTolerance) {
        std::ostringstream note;
        note.precision(4);
        note << "printed nu leaves cubic residual " << evaluate(cubic, printed.nu) << "; computed root residual "
             << evaluate(cubic, computed.nu);
        table.discrepancies.push_back({row.n, row.m, std::string(name) + ".nu", printed.nu, computed.nu, note.str()});
    }
    if (std::abs(printed.mu - computed.mu) > kPrintedTolerance) {
        table.discrepancies.push_back(
            {row.n, row.m, std::string(name) + ".mu", printed.mu, computed.mu, "printed mu off the computed root"});
    }
}

}  // namespace

Table1 table1(size_t max_size) {
    Table1 table;
    for (size_t n = 2; n <= max_size; n++) {
        for (size_t m : {n, n + 1}) {
            if (m > max_size) {
                continue;
            }
            auto sols = params_wlike_fusion(n, m);
            if (sols.size() != 2) {
                throw std::logic_error("expected two solutions for " + Scheme::wlike_fusion(n, m).str());
            }
            Table1Row row;
            row.n = n;
            row.m = m;
            row.sol1 = sols[1];
            row.sol2 = sols[0];
            row.ps_max = best_params(sols).success_probability;
            for (const auto &ref : reference_rows()) {
                if (ref.n == n && ref.m == m) {
                    row.printed1 = ref.first;
                    row.printed2 = ref.second;
                    row.ps_printed = ref.ps;
                }
            }
            if (row.ps_printed) {
                compare_pair(table, row, "sol1", *row.printed1, row.sol1);
                compare_pair(table, row, "sol2", *row.printed2, row.sol2);
                if (std::abs(*row.ps_printed - row.ps_max) > kPrintedTolerance) {
                    std::ostringstream note;
                    note.precision(4);
                    const auto &other = row.sol1.success_probability < row.sol2.success_probability ? row.sol1 : row.sol2;
                    if (std::abs(*row.ps_printed - other.success_probability) <= kPrintedTolerance) {
                        note << "printed value is the smaller-probability root (nu=" << other.nu
                             << ", Ps=" << other.success_probability << ")";
                    } else {
                        note << "printed value matches neither root";
                    }
                    note << "; maximum is at nu=" << best_params(sols).nu;
                    table.discrepancies.push_back({n, m, "ps_max", *row.ps_printed, row.ps_max, note.str()});
                }
            }
            table.rows.push_back(std::move(row));
        }
    }
    return table;
}

}  // namespace wfuse
