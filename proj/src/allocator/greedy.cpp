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

#include "search.hpp"

#include <algorithm>
#include <numeric>

namespace owc
{
    Assignment solve_greedy(const LinkEvaluator &eval, const SolverConfig &config)
    {
        const auto cands = detail::all_candidates(eval, config);
        const std::size_t n = cands.size();
        Assignment out;
        if (n == 0)
            return out;

        // Users with the strongest best link choose first.
        std::vector<std::size_t> order(n);
        std::iota(order.begin(), order.end(), std::size_t{0});
        std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b)
                         { return cands[a].front().free_sinr_db > cands[b].front().free_sinr_db; });

        // owner[ap * 4 + wavelength] is the user holding that pair, or n when it is free.
        const auto key = [](const Link &l) { return l.ap * kNumWavelengths + index(l.wavelength); };
        std::vector<std::size_t> owner(eval.num_aps() * kNumWavelengths, n);
        std::vector<std::size_t> choice(n);

        // Alternating-path repair: seat u, moving earlier users to other candidates if needed.
        std::vector<char> visited;
        const auto augment = [&](auto &&self, std::size_t u) -> bool
        {
            for (std::size_t k = 0; k < cands[u].size(); ++k)
            {
                const std::size_t p = key(cands[u][k].link);
                if (visited[p])
                    continue;
                visited[p] = 1;
                if (owner[p] == n || self(self, owner[p]))
                {
                    owner[p] = u;
                    choice[u] = k;
                    return true;
                }
            }
            return false;
        };

        for (std::size_t u : order)
        {
            bool placed = false;
            for (std::size_t k = 0; k < cands[u].size() && !placed; ++k)
            {
                const std::size_t p = key(cands[u][k].link);
                if (owner[p] != n)
                    continue;
                owner[p] = u;
                choice[u] = k;
                placed = true;
            }
            if (!placed)
            {
                visited.assign(owner.size(), 0);
                if (!augment(augment, u))
                    throw InfeasibleUser("no assignment gives every user a distinct (AP, wavelength) pair");
            }
        }

        std::vector<Link> links(n);
        for (std::size_t u = 0; u < n; ++u)
            links[u] = cands[u][choice[u]].link;

        double current = objective(links, eval, config.scale);
        std::uint64_t evaluations = 1;

        // Pairwise local search: re-pick both users of a pair jointly; keep strict improvements.
        bool improved = true;
        while (improved)
        {
            improved = false;
            for (std::size_t u = 0; u < n; ++u)
                for (std::size_t v = u + 1; v < n; ++v)
                {
                    const std::size_t keep_u = choice[u], keep_v = choice[v];
                    std::size_t best_u = keep_u, best_v = keep_v;
                    double best = current;
                    for (std::size_t ku = 0; ku < cands[u].size(); ++ku)
                        for (std::size_t kv = 0; kv < cands[v].size(); ++kv)
                        {
                            if (ku == keep_u && kv == keep_v)
                                continue;
                            links[u] = cands[u][ku].link;
                            links[v] = cands[v][kv].link;
                            if (!is_feasible(links))
                                continue;
                            const double s = objective(links, eval, config.scale);
                            ++evaluations;
                            if (s > best + detail::prune_slack(best))
                            {
                                best = s;
                                best_u = ku;
                                best_v = kv;
                            }
                        }
                    choice[u] = best_u;
                    choice[v] = best_v;
                    links[u] = cands[u][best_u].link;
                    links[v] = cands[v][best_v].link;
                    if (best_u != keep_u || best_v != keep_v)
                    {
                        current = best;
                        improved = true;
                    }
                }
        }

        for (std::size_t u = 0; u < n; ++u)
            out.picks.push_back(cands[u][choice[u]]);
        out.objective = current;
        out.nodes = evaluations;
        return out;
    }
}
