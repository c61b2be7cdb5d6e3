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
#include <cmath>
#include <ostream>

namespace owc
{
    std::vector<Link> Assignment::links() const
    {
        std::vector<Link> out;
        out.reserve(picks.size());
        for (const auto &c : picks)
            out.push_back(c.link);
        return out;
    }

    std::vector<Candidate> candidates(std::size_t user, const LinkEvaluator &eval, const SolverConfig &config)
    {
        if (config.max_candidates < 1)
            throw std::invalid_argument("Candidate cap must be at least 1.");
        if (user >= eval.num_users())
            throw std::invalid_argument("Unknown user " + std::to_string(user + 1) + ".");

        std::vector<std::pair<double, Candidate>> all;
        for (std::size_t a = 0; a < eval.num_aps(); ++a)
            for (std::size_t b = 0; b < kNumBranches; ++b)
                for (auto w : kWavelengths)
                {
                    const Link link{a, b, w};
                    if (!(eval.current(user, b, a, w) > 0.0))
                        continue;
                    const double s = eval.interference_free_sinr(user, link);
                    all.push_back({s, Candidate{user, link, to_db(s)}});
                }
        if (all.empty())
            throw InfeasibleUser("user " + std::to_string(user + 1) + " receives no signal from any AP on any branch");

        // Enumeration order is already (AP, branch, wavelength), so a stable sort keeps that tie-break.
        std::stable_sort(all.begin(), all.end(), [](const auto &x, const auto &y)
                         { return x.first > y.first; });
        if (all.size() > config.max_candidates)
            all.resize(config.max_candidates);

        std::vector<Candidate> out;
        out.reserve(all.size());
        for (auto &p : all)
            out.push_back(p.second);
        return out;
    }

    double user_score(double sinr_linear, ObjectiveScale scale)
    {
        if (!(sinr_linear > 0.0))
            return kNegInfDb;
        return scale == ObjectiveScale::DbSum ? 10.0 * std::log10(sinr_linear) : sinr_linear;
    }

    double objective(std::span<const Link> links, const LinkEvaluator &eval, ObjectiveScale scale)
    {
        if (links.size() != eval.num_users())
            throw std::invalid_argument("Assignment size does not match the number of users.");
        const ServingSets serving = serving_sets(links);
        double total = 0.0;
        for (std::size_t u = 0; u < links.size(); ++u)
        {
            const double s = user_score(eval.sinr_linear(u, links[u], serving), scale);
            if (s == kNegInfDb)
                return kNegInfDb;
            total += s;
        }
        return total;
    }

    bool is_feasible(std::span<const Link> links)
    {
        ServingSets used{};
        for (const auto &l : links)
        {
            auto &mask = used[index(l.wavelength)];
            if (mask & detail::pair_bit(l))
                return false;
            mask |= detail::pair_bit(l);
        }
        return true;
    }

    void write_assignment_csv(std::ostream &os, const Assignment &assignment)
    {
        os << "user,ap,branch,wavelength\n";
        for (std::size_t u = 0; u < assignment.picks.size(); ++u)
        {
            const auto &l = assignment.picks[u].link;
            os << u + 1 << ',' << l.ap + 1 << ',' << l.branch + 1 << ',' << name(l.wavelength) << '\n';
        }
    }
}

namespace owc::detail
{
    std::vector<std::vector<Candidate>> all_candidates(const LinkEvaluator &eval, const SolverConfig &config)
    {
        std::vector<std::vector<Candidate>> out;
        out.reserve(eval.num_users());
        for (std::size_t u = 0; u < eval.num_users(); ++u)
            out.push_back(candidates(u, eval, config));
        return out;
    }
}
