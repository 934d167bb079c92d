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

#include "irsrank/scene.hpp"

#include <charconv>
#include <cstdint>
#include <fstream>
#include <limits>
#include <numbers>
#include <sstream>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

// Scenario configs are key = value text files with [scene] and [experiment]
// sections; '#' and ';' start comments. Omitted keys keep the running-example
// defaults. Angle keys exist in radians (theta_t) and degrees (theta_t_deg).

namespace irsrank {

struct ConfigError : std::runtime_error
{
    using std::runtime_error::runtime_error;
};

enum class Scenario
{
    cond_vs_n,
    rate_vs_n,
    rate_cdf,
    rate_vs_ue_y,
    single
};

inline const char *to_string(Scenario s)
{
    switch (s) {
    case Scenario::cond_vs_n:
        return "cond-vs-n";
    case Scenario::rate_vs_n:
        return "rate-vs-n";
    case Scenario::rate_cdf:
        return "rate-cdf";
    case Scenario::rate_vs_ue_y:
        return "rate-vs-ue-y";
    case Scenario::single:
        return "single";
    }
    return "?";
}

inline Scenario scenario_from_string(std::string_view name)
{
    if (name == "cond-vs-n")
        return Scenario::cond_vs_n;
    if (name == "rate-vs-n")
        return Scenario::rate_vs_n;
    if (name == "rate-cdf")
        return Scenario::rate_cdf;
    if (name == "rate-vs-ue-y")
        return Scenario::rate_vs_ue_y;
    if (name == "single")
        return Scenario::single;
    throw ConfigError("unknown scenario '" + std::string(name) + "'");
}

struct ExperimentSpec
{
    Scenario scenario = Scenario::single;
    std::string sweep_variable;        // "n_y" or "ue_y"; empty = scenario default
    double sweep_lo = std::numeric_limits<double>::quiet_NaN();
    double sweep_hi = std::numeric_limits<double>::quiet_NaN();
    double sweep_step = std::numeric_limits<double>::quiet_NaN();
    std::vector<double> sweep_values;  // explicit list; overrides lo/hi/step
    int n_total = 0;                   // element count for rate-cdf / rate-vs-ue-y; 0 = default
    int mc_draws = 1000;               // Monte Carlo repetitions for the random policy
    std::uint64_t seed = 1;            // master seed
    std::string output_path;           // CSV destination; empty = "<scenario>.csv"
};

struct ParsedConfig
{
    SceneConfig scene;
    ExperimentSpec experiment;
};

namespace detail {

inline std::string_view trim(std::string_view s)
{
    while (!s.empty() && (s.front() == ' ' || s.front() == '\t' || s.front() == '\r'))
        s.remove_prefix(1);
    while (!s.empty() && (s.back() == ' ' || s.back() == '\t' || s.back() == '\r'))
        s.remove_suffix(1);
    return s;
}

[[noreturn]] inline void parse_fail(const std::string &origin, int line, const std::string &msg)
{
    throw ConfigError(origin + ":" + std::to_string(line) + ": " + msg);
}

inline double parse_double(std::string_view text, const std::string &origin, int line,
                           const std::string &key)
{
    const std::string_view t = trim(text);
    double value = 0.0;
    const auto *first = t.data();
    const auto *last = t.data() + t.size();
    const auto [ptr, ec] = std::from_chars(first, last, value);
    if (ec != std::errc{} || ptr != last)
        parse_fail(origin, line, "malformed number '" + std::string(t) + "' for key '" + key + "'");
    return value;
}

inline long long parse_int(std::string_view text, const std::string &origin, int line,
                           const std::string &key)
{
    const std::string_view t = trim(text);
    long long value = 0;
    const auto [ptr, ec] = std::from_chars(t.data(), t.data() + t.size(), value);
    if (ec != std::errc{} || ptr != t.data() + t.size())
        parse_fail(origin, line, "malformed integer '" + std::string(t) + "' for key '" + key + "'");
    return value;
}

inline std::uint64_t parse_u64(std::string_view text, const std::string &origin, int line,
                               const std::string &key)
{
    const std::string_view t = trim(text);
    std::uint64_t value = 0;
    const auto [ptr, ec] = std::from_chars(t.data(), t.data() + t.size(), value);
    if (ec != std::errc{} || ptr != t.data() + t.size())
        parse_fail(origin, line, "malformed unsigned integer '" + std::string(t) + "' for key '"
                                     + key + "'");
    return value;
}

inline constexpr double deg_to_rad = std::numbers::pi / 180.0;

inline bool apply_scene_key(SceneConfig &sc, const std::string &key, std::string_view value,
                            const std::string &origin, int line)
{
    const auto num = [&] { return parse_double(value, origin, line, key); };
    if (key == "bs_x")
        sc.bs_position[0] = num();
    else if (key == "bs_y")
        sc.bs_position[1] = num();
    else if (key == "bs_z")
        sc.bs_position[2] = num();
    else if (key == "ue_x")
        sc.ue_position[0] = num();
    else if (key == "ue_y")
        sc.ue_position[1] = num();
    else if (key == "ue_z")
        sc.ue_position[2] = num();
    else if (key == "irs_height")
        sc.irs_height = num();
    else if (key == "n_y")
        sc.n_y = static_cast<int>(parse_int(value, origin, line, key));
    else if (key == "n_z")
        sc.n_z = static_cast<int>(parse_int(value, origin, line, key));
    else if (key == "d_bs")
        sc.d_bs = num();
    else if (key == "d_ue")
        sc.d_ue = num();
    else if (key == "d_irs")
        sc.d_irs = num();
    else if (key == "theta_t")
        sc.theta_t = num();
    else if (key == "phi_t")
        sc.phi_t = num();
    else if (key == "theta_r")
        sc.theta_r = num();
    else if (key == "phi_r")
        sc.phi_r = num();
    else if (key == "theta_t_deg")
        sc.theta_t = num() * deg_to_rad;
    else if (key == "phi_t_deg")
        sc.phi_t = num() * deg_to_rad;
    else if (key == "theta_r_deg")
        sc.theta_r = num() * deg_to_rad;
    else if (key == "phi_r_deg")
        sc.phi_r = num() * deg_to_rad;
    else if (key == "carrier_hz")
        sc.carrier_hz = num();
    else if (key == "p_tot_dbm")
        sc.p_tot_dbm = num();
    else if (key == "noise_dbm")
        sc.noise_dbm = num();
    else if (key == "gain_tx_dbi")
        sc.gain_tx_dbi = num();
    else if (key == "gain_rx_dbi")
        sc.gain_rx_dbi = num();
    else
        return false;
    return true;
}

inline bool apply_experiment_key(ExperimentSpec &ex, const std::string &key,
                                 std::string_view value, const std::string &origin, int line)
{
    if (key == "scenario") {
        try {
            ex.scenario = scenario_from_string(trim(value));
        } catch (const ConfigError &e) {
            parse_fail(origin, line, e.what());
        }
    } else if (key == "sweep_variable") {
        ex.sweep_variable = std::string(trim(value));
    } else if (key == "sweep_lo") {
        ex.sweep_lo = parse_double(value, origin, line, key);
    } else if (key == "sweep_hi") {
        ex.sweep_hi = parse_double(value, origin, line, key);
    } else if (key == "sweep_step") {
        ex.sweep_step = parse_double(value, origin, line, key);
    } else if (key == "sweep_values") {
        ex.sweep_values.clear();
        std::string item;
        std::stringstream ss{std::string(value)};
        while (std::getline(ss, item, ','))
            ex.sweep_values.push_back(parse_double(item, origin, line, key));
        if (ex.sweep_values.empty())
            parse_fail(origin, line, "sweep_values must list at least one value");
    } else if (key == "n_total") {
        ex.n_total = static_cast<int>(parse_int(value, origin, line, key));
    } else if (key == "mc_draws") {
        ex.mc_draws = static_cast<int>(parse_int(value, origin, line, key));
    } else if (key == "seed") {
        ex.seed = parse_u64(value, origin, line, key);
    } else if (key == "output_path") {
        ex.output_path = std::string(trim(value));
    } else {
        return false;
    }
    return true;
}

} // namespace detail

inline void validate_experiment(const ParsedConfig &pc)
{
    const ExperimentSpec &ex = pc.experiment;
    if (ex.mc_draws < 1)
        throw ConfigError("mc_draws must be >= 1");
    if (!std::isnan(ex.sweep_step) && !(ex.sweep_step > 0.0))
        throw ConfigError("sweep_step must be > 0");
    if (!std::isnan(ex.sweep_lo) && !std::isnan(ex.sweep_hi) && !(ex.sweep_lo <= ex.sweep_hi))
        throw ConfigError("sweep_lo must not exceed sweep_hi");
    if (ex.n_total != 0) {
        if (ex.n_total < 1)
            throw ConfigError("n_total must be >= 1");
        if (ex.n_total % pc.scene.n_z != 0)
            throw ConfigError("n_total must be divisible by n_z (elements form an n_y x n_z grid)");
    }
    if (!ex.sweep_variable.empty()) {
        const bool n_sweep = ex.scenario == Scenario::cond_vs_n || ex.scenario == Scenario::rate_vs_n;
        if (n_sweep && ex.sweep_variable != "n_y")
            throw ConfigError("scenario '" + std::string(to_string(ex.scenario))
                              + "' sweeps n_y, not '" + ex.sweep_variable + "'");
        if (ex.scenario == Scenario::rate_vs_ue_y && ex.sweep_variable != "ue_y")
            throw ConfigError("scenario 'rate-vs-ue-y' sweeps ue_y, not '" + ex.sweep_variable + "'");
    }
}

inline ParsedConfig parse_config_text(std::string_view text, const std::string &origin)
{
    ParsedConfig pc;
    enum class Section
    {
        scene,
        experiment
    };
    Section section = Section::scene;

    int line_no = 0;
    std::size_t pos = 0;
    while (pos <= text.size()) {
        const std::size_t eol = text.find('\n', pos);
        std::string_view line = text.substr(pos, eol == std::string_view::npos ? std::string_view::npos
                                                                               : eol - pos);
        pos = eol == std::string_view::npos ? text.size() + 1 : eol + 1;
        ++line_no;

        const std::size_t comment = line.find_first_of("#;");
        if (comment != std::string_view::npos)
            line = line.substr(0, comment);
        line = detail::trim(line);
        if (line.empty())
            continue;

        if (line.front() == '[') {
            if (line.back() != ']')
                detail::parse_fail(origin, line_no, "unterminated section header");
            const std::string_view name = detail::trim(line.substr(1, line.size() - 2));
            if (name == "scene")
                section = Section::scene;
            else if (name == "experiment")
                section = Section::experiment;
            else
                detail::parse_fail(origin, line_no, "unknown section '" + std::string(name) + "'");
            continue;
        }

        const std::size_t eq = line.find('=');
        if (eq == std::string_view::npos)
            detail::parse_fail(origin, line_no, "expected 'key = value'");
        const std::string key{detail::trim(line.substr(0, eq))};
        const std::string_view value = detail::trim(line.substr(eq + 1));
        if (key.empty())
            detail::parse_fail(origin, line_no, "empty key");

        const bool handled = section == Section::scene
                                 ? detail::apply_scene_key(pc.scene, key, value, origin, line_no)
                                 : detail::apply_experiment_key(pc.experiment, key, value, origin,
                                                                line_no);
        if (!handled)
            detail::parse_fail(origin, line_no,
                               "unknown key '" + key + "' in ["
                                   + (section == Section::scene ? "scene" : "experiment") + "]");
    }

    try {
        pc.scene.validate();
    } catch (const std::invalid_argument &e) {
        throw ConfigError(origin + ": invalid scene: " + e.what());
    }
    validate_experiment(pc);
    return pc;
}

inline ParsedConfig parse_config(const std::string &path)
{
    std::ifstream in(path, std::ios::binary);
    if (!in)
        throw ConfigError("cannot open config file '" + path + "'");
    std::ostringstream buf;
    buf << in.rdbuf();
    return parse_config_text(buf.str(), path);
}

} // namespace irsrank
