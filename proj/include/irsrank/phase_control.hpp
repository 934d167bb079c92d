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
#include "irsrank/geometry.hpp"
#include "irsrank/pathloss.hpp"
#include "irsrank/scene.hpp"
#include "irsrank/waterfilling.hpp"

#include <cmath>
#include <cstdint>
#include <random>
#include <stdexcept>
#include <vector>

namespace irsrank {

// How per-element phases are chosen.
struct PhasePolicy
{
    enum class Kind
    {
        optimal,    // closed-form alignment of the four compound sums
        random,     // i.i.d. uniform on [0, 2*pi), reproducible per seed
        fixed_zero, // all phases zero
        oracle      // coordinate search on the exact waterfilled rate
    };

    Kind kind = Kind::optimal;
    std::uint64_t seed = 0; // random draws
    int grid_points = 64;   // oracle grid resolution (>= 8)
    int sweeps = 3;         // oracle coordinate sweeps
};

// Closed-form phases
// phi_i = -pi (omega_ru(1,i) + omega_br(i,1) + omega_ru(2,i) + omega_br(i,2)
//              + omega_bs - omega_ue),
// which makes every summand phase of the four compound-channel entries
// independent of i (the compound channel becomes a fully aligned rank-1
// matrix with entry modulus N sqrt(beta_c)).
inline PhaseProfile optimal_phases(const SceneConfig &cfg)
{
    cfg.validate();
    const int n = cfg.element_count();
    const double obs = omega_bs(cfg);
    const double oue = omega_ue(cfg);
    PhaseProfile prof;
    prof.phases.resize(static_cast<std::size_t>(n));
    for (int i = 1; i <= n; ++i) {
        const double sum = omega_ru(1, i, cfg) + omega_br(i, 1, cfg)
                         + omega_ru(2, i, cfg) + omega_br(i, 2, cfg) + obs - oue;
        prof.phases[static_cast<std::size_t>(i - 1)] = wrap_two_pi(-std::numbers::pi * sum);
    }
    return prof;
}

// Deterministic 53-bit mapping of the generator output onto [0, 2*pi);
// std::uniform_real_distribution is implementation-defined and would break
// byte-identical CSV output across toolchains.
inline PhaseProfile random_phases(int n, std::uint64_t seed)
{
    if (n < 1)
        throw std::invalid_argument("phase count must be >= 1");
    std::mt19937_64 eng(seed);
    PhaseProfile prof;
    prof.phases.resize(static_cast<std::size_t>(n));
    for (auto &phi : prof.phases) {
        const double u = static_cast<double>(eng() >> 11) * 0x1.0p-53;
        phi = u * two_pi;
        if (phi >= two_pi)
            phi = 0.0;
    }
    return prof;
}

// splitmix64-style stream split: one independent seed per draw index.
inline std::uint64_t mix_seed(std::uint64_t seed, std::uint64_t draw_index)
{
    std::uint64_t z = seed + (draw_index + 1) * 0x9E3779B97F4A7C15ULL;
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    return z ^ (z >> 31);
}

namespace detail {

// Four-term product-sum the high-SNR rate expansion reduces to:
// |sqrt(bc) e^{j phi_c} S_11 + sqrt(bb) e^{j phi_bu}|^2 *
// |sqrt(bc) e^{j phi_c} S_22 + sqrt(bb) e^{j phi_bu} e^{j 2 pi (o_ue - o_bs)}|^2
// + |... S_12 ... e^{-j 2 pi o_bs}|^2 * |... S_21 ... e^{j 2 pi o_ue}|^2,
// with S_ls = sum_i e^{j(phi_i + 2 pi omega_ru(l,i) + 2 pi omega_br(i,s))}.
inline double objective_with_gains(const SceneConfig &cfg, const PhaseProfile &prof,
                                   double beta_c_val, double beta_bu_val)
{
    const int n = cfg.element_count();
    if (static_cast<int>(prof.phases.size()) != n)
        throw std::invalid_argument("phase profile length does not match the element count");

    cd s11{}, s12{}, s21{}, s22{};
    for (int i = 1; i <= n; ++i) {
        const double phi = prof.phases[static_cast<std::size_t>(i - 1)];
        const double ru1 = two_pi * omega_ru(1, i, cfg);
        const double ru2 = two_pi * omega_ru(2, i, cfg);
        const double br1 = two_pi * omega_br(i, 1, cfg);
        const double br2 = two_pi * omega_br(i, 2, cfg);
        s11 += std::polar(1.0, phi + ru1 + br1);
        s12 += std::polar(1.0, phi + ru1 + br2);
        s21 += std::polar(1.0, phi + ru2 + br1);
        s22 += std::polar(1.0, phi + ru2 + br2);
    }

    const double lam = cfg.wavelength();
    const cd scatter = prof.amplitude * std::sqrt(beta_c_val)
                     * std::polar(1.0, two_pi * (dist_br(cfg) + dist_ru(cfg)) / lam);
    const cd direct = std::sqrt(beta_bu_val) * std::polar(1.0, two_pi * dist_bu(cfg) / lam);
    const double obs = omega_bs(cfg);
    const double oue = omega_ue(cfg);

    const double t11 = std::norm(scatter * s11 + direct);
    const double t22 = std::norm(scatter * s22 + direct * std::polar(1.0, two_pi * (oue - obs)));
    const double t12 = std::norm(scatter * s12 + direct * std::polar(1.0, -two_pi * obs));
    const double t21 = std::norm(scatter * s21 + direct * std::polar(1.0, two_pi * oue));
    return t11 * t22 + t12 * t21;
}

} // namespace detail

inline double phase_objective(const SceneConfig &cfg, const PhaseProfile &prof)
{
    return detail::objective_with_gains(cfg, prof, beta_c(cfg), beta_bu(cfg));
}

// Brute-force validation oracle: cyclic coordinate descent on the exact
// waterfilled rate over a uniform phase grid. Keeps the current phase when
// no grid value strictly improves the rate, so every update is monotone.
inline PhaseProfile coordinate_search(const SceneConfig &cfg, int grid_points, int sweeps,
                                      std::uint64_t max_rate_evals = (1ULL << 22))
{
    if (grid_points < 8)
        throw std::invalid_argument("oracle grid must have at least 8 points");
    if (sweeps < 1)
        throw std::invalid_argument("sweep count must be >= 1");
    const int n = cfg.element_count();
    const std::uint64_t evals = static_cast<std::uint64_t>(sweeps) * n * grid_points;
    if (evals > max_rate_evals)
        throw std::runtime_error("coordinate search budget exceeded: " + std::to_string(evals)
                                 + " rate evaluations requested");

    const ChannelSet ch = build_channels(cfg);
    const double p_tot = cfg.p_tot_w();
    const double noise = cfg.noise_w();
    const auto rate_of = [&](const PhaseProfile &p) {
        return waterfill(analyze(compose(ch, p)), p_tot, noise).rate_bps_hz;
    };

    PhaseProfile prof;
    prof.phases.assign(static_cast<std::size_t>(n), 0.0);
    double best = rate_of(prof);
    for (int sweep = 0; sweep < sweeps; ++sweep) {
        for (int i = 0; i < n; ++i) {
            const double keep = prof.phases[static_cast<std::size_t>(i)];
            double best_phi = keep;
            for (int k = 0; k < grid_points; ++k) {
                const double phi = two_pi * k / grid_points;
                prof.phases[static_cast<std::size_t>(i)] = phi;
                const double r = rate_of(prof);
                if (r > best) {
                    best = r;
                    best_phi = phi;
                }
            }
            prof.phases[static_cast<std::size_t>(i)] = best_phi;
        }
    }
    return prof;
}

inline PhaseProfile make_profile(const PhasePolicy &policy, const SceneConfig &cfg)
{
    switch (policy.kind) {
    case PhasePolicy::Kind::optimal:
        return optimal_phases(cfg);
    case PhasePolicy::Kind::random:
        return random_phases(cfg.element_count(), policy.seed);
    case PhasePolicy::Kind::fixed_zero: {
        PhaseProfile prof;
        prof.phases.assign(static_cast<std::size_t>(cfg.element_count()), 0.0);
        return prof;
    }
    case PhasePolicy::Kind::oracle:
        return coordinate_search(cfg, policy.grid_points, policy.sweeps);
    }
    throw std::logic_error("unknown phase policy");
}

} // namespace irsrank
