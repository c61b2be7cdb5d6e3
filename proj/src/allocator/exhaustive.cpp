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

namespace owc
{
    namespace
    {
        struct Enumerator
        {
            const LinkEvaluator &eval;
            const SolverConfig &config;
            const std::vector<std::vector<Candidate>> &cands;

            std::vector<std::size_t> choice;
            std::vector<Link> links;
            ServingSets used{};

            std::vector<std::size_t> best_choice;
            std::vector<Link> best_links;
            double best = kNegInfDb;
            std::uint64_t leaves = 0;

            void run(std::size_t u)
            {
                if (u == cands.size())
                {
                    ++leaves;
                    const double s = objective(links, eval, config.scale);
                    if (s != kNegInfDb && detail::preferred(s, links, best, best_links))
                    {
                        best = s;
                        best_links = links;
                        best_choice = choice;
                    }
                    return;
                }
                for (std::size_t k = 0; k < cands[u].size(); ++k)
                {
                    const Link &l = cands[u][k].link;
                    auto &mask = used[index(l.wavelength)];
                    if (mask & detail::pair_bit(l))
                        continue;
                    mask |= detail::pair_bit(l);
                    choice[u] = k;
                    links[u] = l;
                    run(u + 1);
                    mask &= ~detail::pair_bit(l);
                }
            }
        };
    }

    Assignment solve_exhaustive(const LinkEvaluator &eval, const SolverConfig &config)
    {
        const auto cands = detail::all_candidates(eval, config);

        double space = 1.0;
        for (const auto &c : cands)
            space *= static_cast<double>(c.size());
        if (space > static_cast<double>(config.exhaustive_limit))
            throw SearchSpaceTooLarge("exhaustive search over " + std::to_string(space) + " combinations exceeds the limit");

        Enumerator e{eval, config, cands, std::vector<std::size_t>(cands.size()), std::vector<Link>(cands.size()), {}, {}, {}};
        e.run(0);

        Assignment out;
        out.nodes = e.leaves;
        if (cands.empty())
        {
            out.proven_optimal = true;
            return out;
        }
        if (e.best_links.empty())
            throw InfeasibleUser("no assignment gives every user a distinct (AP, wavelength) pair");
        for (std::size_t u = 0; u < cands.size(); ++u)
            out.picks.push_back(cands[u][e.best_choice[u]]);
        out.objective = e.best;
        out.proven_optimal = true;
        return out;
    }
}
