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

#include "owc/allocator.hpp"

#include <vector>

namespace owc::detail
{
    std::vector<std::vector<Candidate>> all_candidates(const LinkEvaluator &eval, const SolverConfig &config);

    // Higher objective wins; equal objectives go to the lexicographically smaller link list.
    inline bool preferred(double score, const std::vector<Link> &links, double best_score,
                          const std::vector<Link> &best_links)
    {
        if (score != best_score)
            return score > best_score;
        return best_links.empty() || links < best_links;
    }

    inline std::uint64_t pair_bit(const Link &l) { return std::uint64_t{1} << l.ap; }

    // Slack used when comparing bounds against the incumbent, so rounding never prunes an optimum.
    inline double prune_slack(double incumbent) { return 1e-9 * (1.0 + std::abs(incumbent)); }
}
