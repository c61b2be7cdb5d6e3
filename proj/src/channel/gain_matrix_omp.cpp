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

#include <omp.h>

namespace owc
{
    GainTable gain_matrix(const Scene &scene, std::span<const Vec3> users, const ChannelOptions &opts, int threads)
    {
        detail::check_options(opts);
        detail::check_users(scene, users);
        GainTable table = detail::empty_table(scene, users);
        const auto branches = default_branches();
        const auto aps = scene.aps();
        const int n_threads = threads > 0 ? threads : omp_get_max_threads();

        // AP -> element illumination does not depend on the receiver; compute it once per AP.
        std::vector<detail::ApIllumination> lit(aps.size());
        const auto n_aps = static_cast<long>(aps.size());
#pragma omp parallel for schedule(static) num_threads(n_threads)
        for (long a = 0; a < n_aps; ++a)
            lit[a] = detail::illuminate(scene, aps[a], opts.max_order);

        // One job per (user, branch, AP) cell; each job writes only its own four entries.
        const auto n_jobs = static_cast<long>(users.size() * kNumBranches * aps.size());
#pragma omp parallel num_threads(n_threads)
        {
            PerWavelength<ImpulseResponse> irs{ImpulseResponse(opts.bin_width_s), ImpulseResponse(opts.bin_width_s),
                                               ImpulseResponse(opts.bin_width_s), ImpulseResponse(opts.bin_width_s)};
#pragma omp for schedule(dynamic)
            for (long job = 0; job < n_jobs; ++job)
            {
                const auto j = static_cast<std::size_t>(job);
                const std::size_t a = j % aps.size();
                const std::size_t b = (j / aps.size()) % kNumBranches;
                const std::size_t u = j / (aps.size() * kNumBranches);
                const bool blocked = detail::accumulate_paths(scene, aps[a], lit[a], users[u], branches[b], opts, irs);
                const auto metrics = detail::wavelength_metrics(irs, blocked, opts);
                for (auto w : kWavelengths)
                    table.at(u, b, a, w) = metrics[index(w)];
            }
        }
        return table;
    }
}
