// SPDX-License-Identifier: Apache-2.0
//
// panelbeam: multi-panel analog beamforming under stochastic path blockage
// Copyright (C) 2026 The panelbeam authors
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

#include "panelbeam/analytic.hpp"
#include "panelbeam/beamforming.hpp"
#include "panelbeam/channel.hpp"
#include "panelbeam/config.hpp"
#include "panelbeam/csv.hpp"
#include "panelbeam/errors.hpp"
#include "panelbeam/montecarlo.hpp"
#include "panelbeam/optimizer.hpp"
#include "panelbeam/random.hpp"
#include "panelbeam/scenario.hpp"
