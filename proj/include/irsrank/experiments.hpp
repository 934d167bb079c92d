// SPDX-License-Identifier: Apache-2.0
//
// irsrank - link-level simulator for IRS-aided 2x2 LoS MIMO rank improvement
// Copyright (C) 2026 irsrank contributors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
// http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.
// ------------------------------------------------------------------------

#pragma once

#include "irsrank/channel.hpp"
#include "irsrank/config.hpp"
#include "irsrank/csv.hpp"
#include "irsrank/deployment.hpp"
#include "irsrank/parallel.hpp"
#include "irsrank/pathloss.hpp"
#include "irsrank/phase_control.hpp"
#include "irsrank/spectral.hpp"
#include "irsrank/waterfilling.hpp"

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <iostream>
#include <limits>
#include <ostream>
#include <string>
#include <vector>

// Experiment harness. Every runner produces one flat record per row; the
// CSV column subset is fixed per scenario. Sweep points and Monte Carlo
// draws run on a worker pool and land in preallocated slots, so the output
// is byte-identical for a given (config, seed) regardless of worker count.

namespace irsrank {

struct SweepRecord
{
    double sweep_value = 0.0; // N, y_u, or draw index depending on scenario
    std::string policy;       // "optimal", "random", "direct", "zero"
    long long draw = -1;      // Monte Carlo draw index; -1 for deterministic rows
    int n = 0;                // element count
    double rate = std::numeric_limits<double>::quiet_NaN();
    double rate_deploy = std::numeric_limits<double>::quiet_NaN(); // high-SNR deployment rate
    double condition_number = std::numeric_limits<double>::quiet_NaN();
    double lambda1_sq = std::numeric_limits<double>::quiet_NaN();
    double lambda2_sq = std::numeric_limits<double>::quiet_NaN();
    double p1 = std::numeric_limits<double>::quiet_NaN();
    double p2 = std::numeric_limits<double>::quiet_NaN();
    double mu = std::numeric_limits<double>::quiet_NaN();
    double beta_c = std::numeric_limits<double>::quiet_NaN();
    double beta_bu = std::numeric_limits<double>::quiet_NaN();
    double upsilon = std::numeric_limits<double>::quiet_NaN();
    double cdf = std::numeric_limits<double>::quiet_NaN();
};

namespace detail {

inline SceneConfig with_n_y(const SceneConfig &cfg, int n_y)
{
    SceneConfig c = cfg;
    c.n_y = n_y;
    return c;
}

inline SceneConfig with_n_total(const SceneConfig &cfg, int n_total)
{
    if (n_total % cfg.n_z != 0)
        throw std::invalid_argument("element count " + std::to_string(n_total)
                                    + " is not divisible by n_z = " + std::to_string(cfg.n_z));
    SceneConfig c = cfg;
    c.n_y = n_total / cfg.n_z;
    return c;
}

inline SweepRecord direct_record(const SceneConfig &cfg)
{
    SweepRecord rec;
    rec.policy = "direct";
    rec.beta_bu = beta_bu(cfg);
    rec.beta_c = 0.0;
    rec.lambda1_sq = 4.0 * rec.beta_bu;
    rec.lambda2_sq = 0.0;
    rec.condition_number = std::numeric_limits<double>::infinity();
    const RateReport rr = rate_direct(cfg);
    rec.rate = rr.rate_bps_hz;
    rec.p1 = rr.p1;
    rec.p2 = rr.p2;
    rec.mu = rr.mu;
    return rec;
}

// One full evaluation at a given element grid under the given profile.
inline SweepRecord evaluate(const SceneConfig &cfg, const ChannelSet &ch,
                            const PhaseProfile &prof, const char *policy)
{
    const SpectralResult sp = analyze(compose(ch, prof));
    const RateReport rr = waterfill(sp, cfg.p_tot_w(), cfg.noise_w());
    SweepRecord rec;
    rec.policy = policy;
    rec.n = ch.n;
    rec.rate = rr.rate_bps_hz;
    rec.condition_number = sp.condition_number;
    rec.lambda1_sq = sp.lambda1_sq;
    rec.lambda2_sq = sp.lambda2_sq;
    rec.p1 = rr.p1;
    rec.p2 = rr.p2;
    rec.mu = rr.mu;
    rec.beta_c = ch.beta_c;
    rec.beta_bu = ch.beta_bu;
    return rec;
}

inline void warn_if_outside_far_field(const SceneConfig &largest)
{
    if (!surface_far_field_ok(largest))
        std::cerr << "warning: surface dimensions are not small against the BS offsets at N = "
                  << largest.element_count()
                  << "; the aperture pathloss model is outside its validity range\n";
}

} // namespace detail

// Condition number of the optimally-phased channel per element count, plus
// one leading no-IRS row (rank-1 direct channel, condition "inf").
inline std::vector<SweepRecord> run_cond_vs_n(const SceneConfig &cfg,
                                              const std::vector<int> &n_y_list,
                                              unsigned threads = 0)
{
    cfg.validate();
    if (n_y_list.empty())
        throw std::invalid_argument("empty n_y sweep");
    detail::warn_if_outside_far_field(
        detail::with_n_y(cfg, *std::max_element(n_y_list.begin(), n_y_list.end())));

    std::vector<SweepRecord> records(n_y_list.size() + 1);
    records[0] = detail::direct_record(cfg);
    records[0].sweep_value = 0.0;
    parallel_for_indexed(n_y_list.size(), threads, [&](std::size_t k) {
        const SceneConfig c = detail::with_n_y(cfg, n_y_list[k]);
        const ChannelSet ch = build_channels(c);
        SweepRecord rec = detail::evaluate(c, ch, optimal_phases(c), "optimal");
        rec.sweep_value = c.element_count();
        records[k + 1] = std::move(rec);
    });
    return records;
}

// Waterfilled rate of the optimally-phased channel per element count, with
// the constant direct-transmission baseline repeated on every sweep point.
inline std::vector<SweepRecord> run_rate_vs_n(const SceneConfig &cfg,
                                              const std::vector<int> &n_y_list,
                                              unsigned threads = 0)
{
    cfg.validate();
    if (n_y_list.empty())
        throw std::invalid_argument("empty n_y sweep");
    detail::warn_if_outside_far_field(
        detail::with_n_y(cfg, *std::max_element(n_y_list.begin(), n_y_list.end())));

    std::vector<SweepRecord> records(2 * n_y_list.size());
    parallel_for_indexed(n_y_list.size(), threads, [&](std::size_t k) {
        const SceneConfig c = detail::with_n_y(cfg, n_y_list[k]);
        const ChannelSet ch = build_channels(c);
        SweepRecord opt = detail::evaluate(c, ch, optimal_phases(c), "optimal");
        opt.sweep_value = c.element_count();
        SweepRecord dir = detail::direct_record(c);
        dir.sweep_value = c.element_count();
        dir.n = c.element_count();
        records[2 * k] = std::move(opt);
        records[2 * k + 1] = std::move(dir);
    });
    return records;
}

// Empirical rate distribution under uniformly random phases, plus the two
// degenerate single-value distributions (optimal phases and no IRS).
// Random rows are sorted by (rate, draw) so the cdf column is nondecreasing.
inline std::vector<SweepRecord> run_rate_cdf(const SceneConfig &cfg, int n_total, int mc_draws,
                                             std::uint64_t seed, unsigned threads = 0)
{
    if (mc_draws < 1)
        throw std::invalid_argument("mc_draws must be >= 1");
    const SceneConfig c = detail::with_n_total(cfg, n_total);
    c.validate();
    const ChannelSet ch = build_channels(c);

    std::vector<SweepRecord> random_rows(static_cast<std::size_t>(mc_draws));
    parallel_for_indexed(random_rows.size(), threads, [&](std::size_t d) {
        const PhaseProfile prof = random_phases(c.element_count(), mix_seed(seed, d));
        SweepRecord rec = detail::evaluate(c, ch, prof, "random");
        rec.draw = static_cast<long long>(d);
        rec.sweep_value = static_cast<double>(d);
        random_rows[d] = std::move(rec);
    });
    std::sort(random_rows.begin(), random_rows.end(), [](const SweepRecord &a, const SweepRecord &b) {
        return a.rate != b.rate ? a.rate < b.rate : a.draw < b.draw;
    });
    for (std::size_t k = 0; k < random_rows.size(); ++k)
        random_rows[k].cdf = static_cast<double>(k + 1) / static_cast<double>(mc_draws);

    std::vector<SweepRecord> records;
    records.reserve(random_rows.size() + 2);
    SweepRecord opt = detail::evaluate(c, ch, optimal_phases(c), "optimal");
    opt.cdf = 1.0;
    SweepRecord dir = detail::direct_record(c);
    dir.n = c.element_count();
    dir.cdf = 1.0;
    records.push_back(std::move(opt));
    records.push_back(std::move(dir));
    records.insert(records.end(), std::make_move_iterator(random_rows.begin()),
                   std::make_move_iterator(random_rows.end()));
    return records;
}

// Exact waterfilled rate and high-SNR deployment rate while the UE moves
// along the y-axis. Grid points violating the pathloss model validity
// (d_bu < 10 m) are skipped and reported on stderr.
inline std::vector<SweepRecord> run_rate_vs_ue_y(const SceneConfig &cfg, int n_total, double y_lo,
                                                 double y_hi, double step, unsigned threads = 0)
{
    if (!(y_lo < y_hi))
        throw std::invalid_argument("sweep needs y_lo < y_hi");
    if (!(step > 0.0))
        throw std::invalid_argument("sweep step must be > 0");
    const SceneConfig base = detail::with_n_total(cfg, n_total);
    base.validate();

    const auto count = static_cast<std::size_t>(std::floor((y_hi - y_lo) / step + 1e-9)) + 1;
    std::vector<SweepRecord> rows(count);
    std::vector<char> valid(count, 0);
    parallel_for_indexed(count, threads, [&](std::size_t k) {
        SceneConfig c = base;
        c.ue_position[1] = y_lo + static_cast<double>(k) * step;
        if (dist_bu(c) < 10.0)
            return;
        const ChannelSet ch = build_channels(c);
        SweepRecord rec = detail::evaluate(c, ch, optimal_phases(c), "optimal");
        rec.sweep_value = c.ue_position[1];
        const DeploymentObjective obj = deployment_rate(c);
        rec.rate_deploy = obj.rate_high_snr;
        rec.upsilon = obj.upsilon;
        rows[k] = std::move(rec);
        valid[k] = 1;
    });

    std::vector<SweepRecord> records;
    records.reserve(count);
    std::size_t skipped = 0;
    for (std::size_t k = 0; k < count; ++k) {
        if (valid[k])
            records.push_back(std::move(rows[k]));
        else
            ++skipped;
    }
    if (skipped != 0)
        std::cerr << "warning: skipped " << skipped
                  << " sweep points with d_bu < 10 m (outside the pathloss model validity)\n";
    if (records.empty())
        throw std::runtime_error("no sweep point satisfies the pathloss model validity");
    return records;
}

// One full evaluation of the configured scenario: optimal phases and the
// direct baseline side by side.
inline std::vector<SweepRecord> run_single(const SceneConfig &cfg)
{
    cfg.validate();
    const ChannelSet ch = build_channels(cfg);
    SweepRecord opt = detail::evaluate(cfg, ch, optimal_phases(cfg), "optimal");
    opt.sweep_value = cfg.element_count();
    const DeploymentObjective obj = deployment_rate(cfg);
    opt.rate_deploy = obj.rate_high_snr;
    opt.upsilon = obj.upsilon;
    SweepRecord dir = detail::direct_record(cfg);
    dir.sweep_value = cfg.element_count();
    dir.n = cfg.element_count();
    dir.upsilon = obj.upsilon; // deployment geometry, independent of the policy
    return {std::move(opt), std::move(dir)};
}

inline void write_csv(std::ostream &out, Scenario scenario, const std::vector<SweepRecord> &records)
{
    const auto num = [](double v) { return csv_number(v); };
    switch (scenario) {
    case Scenario::cond_vs_n:
        csv_row(out, {"n", "policy", "condition_number", "lambda1_sq", "lambda2_sq", "beta_c",
                      "beta_bu"});
        for (const auto &r : records)
            csv_row(out, {csv_number(static_cast<long long>(r.sweep_value)), r.policy,
                          num(r.condition_number), num(r.lambda1_sq), num(r.lambda2_sq),
                          num(r.beta_c), num(r.beta_bu)});
        break;
    case Scenario::rate_vs_n:
        csv_row(out, {"n", "policy", "rate_bps_hz", "lambda1_sq", "lambda2_sq", "p1", "p2",
                      "beta_c", "beta_bu"});
        for (const auto &r : records)
            csv_row(out, {csv_number(static_cast<long long>(r.sweep_value)), r.policy, num(r.rate),
                          num(r.lambda1_sq), num(r.lambda2_sq), num(r.p1), num(r.p2), num(r.beta_c),
                          num(r.beta_bu)});
        break;
    case Scenario::rate_cdf:
        csv_row(out, {"policy", "draw", "rate_bps_hz", "cdf"});
        for (const auto &r : records)
            csv_row(out, {r.policy, csv_number(r.draw), num(r.rate), num(r.cdf)});
        break;
    case Scenario::rate_vs_ue_y:
        csv_row(out, {"y_u", "policy", "rate_bps_hz", "rate_deploy", "upsilon", "beta_c",
                      "beta_bu"});
        for (const auto &r : records)
            csv_row(out, {num(r.sweep_value), r.policy, num(r.rate), num(r.rate_deploy),
                          num(r.upsilon), num(r.beta_c), num(r.beta_bu)});
        break;
    case Scenario::single:
        csv_row(out, {"n", "policy", "rate_bps_hz", "condition_number", "lambda1_sq", "lambda2_sq",
                      "p1", "p2", "mu", "beta_c", "beta_bu", "upsilon"});
        for (const auto &r : records)
            csv_row(out, {csv_number(static_cast<long long>(r.n)), r.policy, num(r.rate),
                          num(r.condition_number), num(r.lambda1_sq), num(r.lambda2_sq), num(r.p1),
                          num(r.p2), num(r.mu), num(r.beta_c), num(r.beta_bu), num(r.upsilon)});
        break;
    }
}

namespace detail {

inline std::vector<int> resolve_n_y_list(const ExperimentSpec &ex)
{
    std::vector<int> list;
    const auto push_checked = [&](double v) {
        const int n = static_cast<int>(std::llround(v));
        if (n < 1 || std::abs(v - n) > 1e-9)
            throw ConfigError("n_y sweep values must be positive integers");
        list.push_back(n);
    };
    if (!ex.sweep_values.empty()) {
        for (double v : ex.sweep_values)
            push_checked(v);
        return list;
    }
    const double lo = std::isnan(ex.sweep_lo) ? 1.0 : ex.sweep_lo;
    const double hi = std::isnan(ex.sweep_hi) ? 100.0 : ex.sweep_hi;
    const double step = std::isnan(ex.sweep_step) ? 1.0 : ex.sweep_step;
    for (double v = lo; v <= hi + 1e-9; v += step)
        push_checked(v);
    if (list.empty())
        throw ConfigError("empty n_y sweep");
    return list;
}

} // namespace detail

// Resolves per-scenario defaults and writes the CSV for one experiment.
inline void run_experiment(const ParsedConfig &pc, std::ostream &out, unsigned threads = 0)
{
    const SceneConfig &sc = pc.scene;
    const ExperimentSpec &ex = pc.experiment;
    switch (ex.scenario) {
    case Scenario::cond_vs_n:
        write_csv(out, ex.scenario, run_cond_vs_n(sc, detail::resolve_n_y_list(ex), threads));
        break;
    case Scenario::rate_vs_n:
        write_csv(out, ex.scenario, run_rate_vs_n(sc, detail::resolve_n_y_list(ex), threads));
        break;
    case Scenario::rate_cdf: {
        const int n_total = ex.n_total != 0 ? ex.n_total : 50;
        write_csv(out, ex.scenario, run_rate_cdf(sc, n_total, ex.mc_draws, ex.seed, threads));
        break;
    }
    case Scenario::rate_vs_ue_y: {
        const int n_total = ex.n_total != 0 ? ex.n_total : 100;
        const double lo = std::isnan(ex.sweep_lo) ? -5.0 : ex.sweep_lo;
        const double hi = std::isnan(ex.sweep_hi) ? 2.0 : ex.sweep_hi;
        const double step = std::isnan(ex.sweep_step) ? 0.01 : ex.sweep_step;
        write_csv(out, ex.scenario, run_rate_vs_ue_y(sc, n_total, lo, hi, step, threads));
        break;
    }
    case Scenario::single:
        write_csv(out, ex.scenario, run_single(sc));
        break;
    }
}

} // namespace irsrank
