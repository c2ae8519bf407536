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

#include <stdexcept>
#include <string>

namespace panelbeam
{

// Scenario parameters violate a model invariant (e.g. fewer than two paths).
class ConfigError : public std::invalid_argument
{
public:
    using std::invalid_argument::invalid_argument;
};

// Rejection sampling gave up before producing a valid draw.
class SamplingError : public std::runtime_error
{
public:
    using std::runtime_error::runtime_error;
};

// The allocation search space is larger than the configured capacity.
class CapacityError : public std::runtime_error
{
public:
    using std::runtime_error::runtime_error;
};

} // namespace panelbeam
