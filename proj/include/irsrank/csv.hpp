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

#include <cmath>
#include <cstdio>
#include <ostream>
#include <string>
#include <vector>

namespace irsrank {

// Full double precision (17 significant digits), "." decimal separator,
// "inf"/"-inf" sentinels for unbounded values.
inline std::string csv_number(double v)
{
    if (std::isnan(v))
        return "nan";
    if (std::isinf(v))
        return v > 0.0 ? "inf" : "-inf";
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.17g", v);
    return buf;
}

inline std::string csv_number(long long v)
{
    char buf[24];
    std::snprintf(buf, sizeof(buf), "%lld", v);
    return buf;
}

// LF line endings regardless of platform.
inline void csv_row(std::ostream &out, const std::vector<std::string> &fields)
{
    for (std::size_t i = 0; i < fields.size(); ++i) {
        if (i != 0)
            out << ',';
        out << fields[i];
    }
    out << '\n';
}

} // namespace irsrank
