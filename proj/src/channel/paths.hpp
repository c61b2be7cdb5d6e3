// SPDX-License-Identifier: Apache-2.0
//
// owc - multi-user indoor optical wireless WDMA simulator
// Copyright (C) 2026 The owc authors
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

// Internal path-accumulation kernel shared by the serial and OpenMP gain matrix builders.

#include "owc/channel.hpp"

#include <vector>

namespace owc::detail
{
    // Fraction of an AP's power intercepted by each element of one element set, and the path length.
    struct Illumination
    {
        std::vector<double> power;
        std::vector<double> distance;
    };

    Illumination illuminate(const AccessPointSpec &ap, std::span<const SurfaceElement> elements);

    // Illumination of both element sets for one AP. Sets not needed at max_order stay empty.
    struct ApIllumination
    {
        Illumination first;
        Illumination second;
    };

    ApIllumination illuminate(const Scene &scene, const AccessPointSpec &ap, int max_order);

    // LOS plus reflected chains for one (AP, receiver, branch); fills four wavelength responses.
    // Returns true when the LOS path is blocked (outside the FOV or behind the emitter).
    bool accumulate_paths(const Scene &scene, const AccessPointSpec &ap, const ApIllumination &lit,
                          const Vec3 &rx, const BranchSpec &branch, const ChannelOptions &opts,
                          PerWavelength<ImpulseResponse> &out);

    // Metrics for all four wavelengths; identical responses share one computation.
    PerWavelength<ChannelMetrics> wavelength_metrics(const PerWavelength<ImpulseResponse> &irs, bool los_blocked,
                                                     const ChannelOptions &opts);

    void check_options(const ChannelOptions &opts);
    void check_users(const Scene &scene, std::span<const Vec3> users);
    GainTable empty_table(const Scene &scene, std::span<const Vec3> users);
}
