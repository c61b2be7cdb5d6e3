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

#include "owc/channel.hpp"

#include <cmath>
#include <stdexcept>

namespace owc
{
    LosContribution los_contribution(const AccessPointSpec &ap, const Vec3 &rx, const BranchSpec &branch)
    {
        const Vec3 v = rx - ap.position;
        const double d = norm(v);
        if (!(d > 0.0))
            throw std::invalid_argument("AP and receiver positions coincide.");

        LosContribution out;
        out.delay_s = d / kSpeedOfLight;

        const Vec3 u = v / d;
        const double cos_phi = dot(ap.normal, u);
        const double cos_theta = -dot(branch.normal(), u);
        if (cos_phi <= 0.0 || cos_theta <= 0.0 || cos_theta < std::cos(deg2rad(branch.fov_deg)))
            return out;

        const double m = ap.lambertian_order;
        out.gain = (m + 1.0) / (2.0 * pi * d * d) * branch.area_m2 * std::pow(cos_phi, m) * cos_theta;
        return out;
    }
}
