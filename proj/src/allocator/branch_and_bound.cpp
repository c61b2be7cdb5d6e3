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

#include <chrono>

namespace owc
{
    namespace
    {
        // Users are fixed in index order. At a node with the first `depth` users placed, the bound is
        // the SINR score each placed user gets against the co-channel set built so far, plus for every
        // unplaced user the interference-free score of its best candidate whose (AP, wavelength) pair
        // is still free. Later placements only add interferers and remove pairs, so it never underestimates.
        class BranchAndBound
        {
        public:
            BranchAndBound(const LinkEvaluator &eval, const SolverConfig &config,
                           const std::vector<std::vector<Candidate>> &cands)
                : eval_(eval), config_(config), cands_(cands), links_(cands.size()), choice_(cands.size())
            {
                free_score_.resize(cands.size());
                for (std::size_t u = 0; u < cands.size(); ++u)
                    for (const auto &c : cands[u])
                        free_score_[u].push_back(user_score(eval.interference_free_sinr(u, c.link), config.scale));
                deadline_ = std::chrono::steady_clock::now() + config.time_limit;
            }

            void seed(const Assignment &incumbent)
            {
                best_links_ = incumbent.links();
                best_ = objective(best_links_, eval_, config_.scale);
                best_choice_.clear();
                for (std::size_t u = 0; u < cands_.size(); ++u)
                    for (std::size_t k = 0; k < cands_[u].size(); ++k)
                        if (cands_[u][k].link == best_links_[u])
                            best_choice_.push_back(k);
            }

            void run() { descend(0); }

            bool timed_out() const { return timed_out_; }
            std::uint64_t nodes() const { return nodes_; }
            double best() const { return best_; }
            const std::vector<std::size_t> &best_choice() const { return best_choice_; }
            bool has_incumbent() const { return !best_links_.empty(); }

        private:
            double bound(std::size_t depth) const
            {
                double b = 0.0;
                for (std::size_t v = 0; v < depth; ++v)
                    b += user_score(eval_.sinr_linear(v, links_[v], used_), config_.scale);
                for (std::size_t v = depth; v < cands_.size(); ++v)
                {
                    double best_free = kNegInfDb;
                    for (std::size_t k = 0; k < cands_[v].size(); ++k)
                    {
                        const Link &l = cands_[v][k].link;
                        if (!(used_[index(l.wavelength)] & detail::pair_bit(l)))
                        {
                            best_free = free_score_[v][k];
                            break;
                        }
                    }
                    if (best_free == kNegInfDb)
                        return kNegInfDb;
                    b += best_free;
                }
                return b;
            }

            void descend(std::size_t depth)
            {
                if (timed_out_)
                    return;
                if ((++nodes_ & 0xfff) == 0 && std::chrono::steady_clock::now() > deadline_)
                {
                    timed_out_ = true;
                    return;
                }

                if (depth == cands_.size())
                {
                    const double s = objective(links_, eval_, config_.scale);
                    if (config_.check_bounds)
                        for (double b : path_bounds_)
                            if (b < s - detail::prune_slack(s))
                                throw std::logic_error("branch-and-bound bound below a reachable completion");
                    if (s != kNegInfDb && detail::preferred(s, links_, best_, best_links_))
                    {
                        best_ = s;
                        best_links_ = links_;
                        best_choice_ = choice_;
                    }
                    return;
                }

                const double b = bound(depth);
                if (b == kNegInfDb)
                    return;
                if (has_incumbent() && b < best_ - detail::prune_slack(best_))
                    return;

                path_bounds_.push_back(b);
                for (std::size_t k = 0; k < cands_[depth].size(); ++k)
                {
                    const Link &l = cands_[depth][k].link;
                    auto &mask = used_[index(l.wavelength)];
                    if (mask & detail::pair_bit(l))
                        continue;
                    mask |= detail::pair_bit(l);
                    links_[depth] = l;
                    choice_[depth] = k;
                    descend(depth + 1);
                    mask &= ~detail::pair_bit(l);
                    if (timed_out_)
                        break;
                }
                path_bounds_.pop_back();
            }

            const LinkEvaluator &eval_;
            const SolverConfig &config_;
            const std::vector<std::vector<Candidate>> &cands_;
            std::vector<std::vector<double>> free_score_;

            std::vector<Link> links_;
            std::vector<std::size_t> choice_;
            ServingSets used_{};
            std::vector<double> path_bounds_;

            double best_ = kNegInfDb;
            std::vector<Link> best_links_;
            std::vector<std::size_t> best_choice_;

            std::uint64_t nodes_ = 0;
            bool timed_out_ = false;
            std::chrono::steady_clock::time_point deadline_;
        };
    }

    Assignment solve_exact(const LinkEvaluator &eval, const SolverConfig &config)
    {
        const auto cands = detail::all_candidates(eval, config);
        Assignment out;
        if (cands.empty())
        {
            out.proven_optimal = true;
            return out;
        }

        BranchAndBound bnb(eval, config, cands);
        try
        {
            bnb.seed(solve_greedy(eval, config));
        }
        catch (const InfeasibleUser &)
        {
            // Greedy can strand a user whose pairs were all taken; the search may still succeed.
        }
        bnb.run();

        if (!bnb.has_incumbent())
            throw InfeasibleUser("no assignment gives every user a distinct (AP, wavelength) pair");
        for (std::size_t u = 0; u < cands.size(); ++u)
            out.picks.push_back(cands[u][bnb.best_choice()[u]]);
        out.objective = bnb.best();
        out.proven_optimal = !bnb.timed_out();
        out.nodes = bnb.nodes();
        return out;
    }
}
