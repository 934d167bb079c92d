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

#include <catch2/catch_amalgamated.hpp>

#include "test_support.hpp"

#include <cmath>
#include <complex>

using namespace irsrank;
using Catch::Matchers::WithinAbs;
using Catch::Matchers::WithinRel;

TEST_CASE("channel matrices satisfy their structural invariants")
{
    SceneConfig cfg;
    cfg.n_y = 6;
    cfg.n_z = 4;
    cfg.theta_t = 1.3;
    cfg.phi_t = 0.2;
    const ChannelSet ch = build_channels(cfg);

    for (const cd &v : ch.h_br)
        CHECK_THAT(std::abs(v), WithinAbs(1.0, 1e-12));
    for (const cd &v : ch.h_ru)
        CHECK_THAT(std::abs(v), WithinAbs(1.0, 1e-12));

    // direct channel: rank 1, every entry of modulus sqrt(beta_bu)
    const double scale = ch.h_bu.frobenius_sq();
    CHECK(std::abs(ch.h_bu.det()) < 1e-12 * scale);
    for (const cd &v : ch.h_bu.e)
        CHECK_THAT(std::abs(v), WithinRel(std::sqrt(ch.beta_bu), 1e-12));

    // first entry carries only the bulk propagation phase
    const cd expected = std::polar(1.0, two_pi * dist_br(cfg) / cfg.wavelength());
    CHECK(std::abs(ch.br(1, 1) - expected) < 1e-12);

    // direct-channel singular values are (2 sqrt(beta_bu), 0)
    const SpectralResult sp = analyze(ch.h_bu);
    CHECK_THAT(sp.lambda1_sq, WithinRel(4.0 * ch.beta_bu, 1e-12));
    CHECK(sp.lambda2_sq < 1e-24 * sp.lambda1_sq);
}

TEST_CASE("steering vector with zero slope is all ones")
{
    const auto a = steering(0.0);
    CHECK(a[0] == cd(1.0, 0.0));
    CHECK(a[1] == cd(1.0, 0.0));
}

TEST_CASE("zero scattered gain reduces the composition to the direct channel")
{
    SceneConfig cfg;
    cfg.n_y = 3;
    cfg.n_z = 2;
    ChannelSet ch = build_channels(cfg);
    ch.beta_c = 0.0;
    const Mat2 h = compose(ch, random_phases(ch.n, 11));
    CHECK(max_abs_diff(h, ch.h_bu) == 0.0);
}

TEST_CASE("single-element composition with zero phase")
{
    SceneConfig cfg;
    cfg.n_y = 1;
    cfg.n_z = 1;
    const ChannelSet ch = build_channels(cfg);
    PhaseProfile prof;
    prof.phases = {0.0};
    const Mat2 h = compose(ch, prof);
    // all slope terms vanish at (l=1, i=1, s=1)
    const cd expected = std::sqrt(ch.beta_c)
                            * std::polar(1.0, two_pi * (dist_br(cfg) + dist_ru(cfg)) / cfg.wavelength())
                        + ch.h_bu(0, 0);
    CHECK(std::abs(h(0, 0) - expected) < 1e-14);
}

TEST_CASE("compound entries obey the triangle bound")
{
    SceneConfig cfg;
    cfg.n_y = 7;
    cfg.n_z = 3;
    const ChannelSet ch = build_channels(cfg);
    const double bound = ch.n * std::sqrt(ch.beta_c);
    for (std::uint64_t seed = 0; seed < 32; ++seed) {
        const Mat2 h = compose(ch, random_phases(ch.n, seed));
        const Mat2 compound = h - ch.h_bu;
        for (const cd &v : compound.e)
            CHECK(std::abs(v) <= bound * (1.0 + 1e-12));
    }
}

TEST_CASE("matrix-product composition equals the explicit double sum")
{
    SceneConfig cfg;
    cfg.n_y = 4;
    cfg.n_z = 3;
    cfg.theta_t = 1.4;
    cfg.phi_t = -0.3;
    cfg.theta_r = 1.9;
    cfg.phi_r = 0.6;
    const ChannelSet ch = build_channels(cfg);
    for (std::uint64_t seed = 1; seed <= 16; ++seed) {
        const PhaseProfile prof = random_phases(ch.n, seed);
        const Mat2 direct_route = compose(ch, prof);
        const Mat2 sum_route = testsup::compose_oracle(cfg, prof);
        CHECK(max_abs_diff(direct_route, sum_route) < 1e-10);
    }
}

TEST_CASE("a common unit factor on one hop leaves the spectrum unchanged")
{
    SceneConfig cfg;
    cfg.n_y = 5;
    cfg.n_z = 2;
    const ChannelSet ch = build_channels(cfg);
    const PhaseProfile prof = random_phases(ch.n, 3);
    const SpectralResult base = analyze(compose(ch, prof));

    ChannelSet rotated = ch;
    const cd unit = std::polar(1.0, 1.234);
    for (cd &v : rotated.h_br)
        v *= unit;
    // the direct term must rotate identically for the sum to keep its spectrum
    for (cd &v : rotated.h_bu.e)
        v *= unit;
    const SpectralResult rot = analyze(compose(rotated, prof));
    CHECK_THAT(rot.lambda1_sq, WithinRel(base.lambda1_sq, 1e-12));
    CHECK_THAT(rot.lambda2_sq, WithinRel(base.lambda2_sq, 1e-12));

    // rotating one hop alone still leaves the compound-only spectrum fixed;
    // the cascade factors into an outer product, so it is rank 1 under any
    // profile and only lambda1 carries information
    ChannelSet hop = ch;
    for (cd &v : hop.h_br)
        v *= unit;
    const SpectralResult comp_base = analyze(compose(ch, prof) - ch.h_bu);
    const SpectralResult comp_rot = analyze(compose(hop, prof) - hop.h_bu);
    CHECK_THAT(comp_rot.lambda1_sq, WithinRel(comp_base.lambda1_sq, 1e-12));
    CHECK(comp_base.lambda2_sq <= 1e-12 * comp_base.lambda1_sq);
    CHECK(comp_rot.lambda2_sq <= 1e-12 * comp_rot.lambda1_sq);
}

TEST_CASE("composition validates the profile")
{
    SceneConfig cfg;
    cfg.n_y = 2;
    cfg.n_z = 2;
    const ChannelSet ch = build_channels(cfg);
    PhaseProfile prof = random_phases(3, 0); // wrong length
    CHECK_THROWS_AS(compose(ch, prof), std::invalid_argument);
    prof = random_phases(4, 0);
    prof.amplitude = 1.5;
    CHECK_THROWS_AS(compose(ch, prof), std::invalid_argument);
    prof.amplitude = 0.0;
    CHECK_THROWS_AS(compose(ch, prof), std::invalid_argument);
}

TEST_CASE("aligned phases drive every compound entry to full modulus")
{
    SceneConfig cfg;
    cfg.n_y = 5;
    cfg.n_z = 4;
    const ChannelSet ch = build_channels(cfg);
    const Mat2 h = compose(ch, optimal_phases(cfg));
    const Mat2 compound = h - ch.h_bu;
    const double full = ch.n * std::sqrt(ch.beta_c);
    for (const cd &v : compound.e)
        CHECK_THAT(std::abs(v), WithinRel(full, 1e-9));
}
