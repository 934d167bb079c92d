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
#include "irsrank/experiments.hpp"
#include "irsrank/geometry.hpp"
#include "irsrank/mat2.hpp"
#include "irsrank/parallel.hpp"
#include "irsrank/pathloss.hpp"
#include "irsrank/phase_control.hpp"
#include "irsrank/scene.hpp"
#include "irsrank/spectral.hpp"
#include "irsrank/waterfilling.hpp"
