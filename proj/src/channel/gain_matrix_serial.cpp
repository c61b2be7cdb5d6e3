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

#include "paths.hpp"

namespace owc
{
    GainTable gain_matrix_serial(const Scene &scene, std::span<const Vec3> users, const ChannelOptions &opts)
    {
        detail::check_options(opts);
        detail::check_users(scene, users);
        GainTable table = detail::empty_table(scene, users);
        const auto branches = default_branches();
        const auto aps = scene.aps();

        for (std::size_t u = 0; u < users.size(); ++u)
            for (std::size_t b = 0; b < kNumBranches; ++b)
                for (std::size_t a = 0; a < aps.size(); ++a)
                {
                    const auto irs = impulse_responses(scene, aps[a], users[u], branches[b], opts);
                    const bool blocked = los_contribution(aps[a], users[u], branches[b]).gain == 0.0;
                    const auto metrics = detail::wavelength_metrics(irs, blocked, opts);
                    for (auto w : kWavelengths)
                        table.at(u, b, a, w) = metrics[index(w)];
                }
        return table;
    }
}
