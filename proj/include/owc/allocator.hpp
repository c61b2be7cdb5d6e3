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

// Resource allocation: pick one (AP, branch, wavelength) per user so that no (AP, wavelength)
// pair serves two users, maximizing the sum of user SINRs.
//
// All solvers work over the same per-user candidate lists and score complete assignments with
// objective(), so their results are directly comparable. Ties between equal objectives go to the
// lexicographically smallest list of links in user order.

#include "owc/link.hpp"

#include <chrono>
#include <cstdint>
#include <iosfwd>
#include <stdexcept>
#include <vector>

namespace owc
{
    enum class ObjectiveScale
    {
        DbSum,    // sum of 10 log10(SINR)
        LinearSum // sum of linear SINR
    };

    struct SolverConfig
    {
        ObjectiveScale scale = ObjectiveScale::DbSum;
        std::size_t max_candidates = 16;
        std::chrono::milliseconds time_limit{60'000};
        std::uint64_t exhaustive_limit = 10'000'000; // product of candidate list sizes
        bool check_bounds = false;                   // verify bound admissibility at every leaf (slow)
    };

    struct Candidate
    {
        std::size_t user = 0;
        Link link;
        double free_sinr_db = 0.0; // SINR with no co-channel users

        bool operator==(const Candidate &) const = default;
    };

    struct Assignment
    {
        std::vector<Candidate> picks; // picks[u] belongs to user u
        double objective = 0.0;
        bool proven_optimal = false;
        std::uint64_t nodes = 0; // search nodes or objective evaluations

        std::vector<Link> links() const;
    };

    class InfeasibleUser : public std::runtime_error
    {
    public:
        using std::runtime_error::runtime_error;
    };

    class SearchSpaceTooLarge : public std::runtime_error
    {
    public:
        using std::runtime_error::runtime_error;
    };

    // Positive-gain triples for one user sorted by interference-free SINR (descending), ties by
    // (AP, branch, wavelength), truncated to max_candidates. Throws InfeasibleUser when empty.
    std::vector<Candidate> candidates(std::size_t user, const LinkEvaluator &eval, const SolverConfig &config);

    // Per-user contribution on the chosen scale; -inf for a user without signal.
    double user_score(double sinr_linear, ObjectiveScale scale);

    // Sum of user scores in user order, using the exact SINR of every user.
    double objective(std::span<const Link> links, const LinkEvaluator &eval, ObjectiveScale scale);

    // True when no (AP, wavelength) pair is used twice.
    bool is_feasible(std::span<const Link> links);

    // Reference enumeration of every candidate combination.
    Assignment solve_exhaustive(const LinkEvaluator &eval, const SolverConfig &config);

    // Branch-and-bound with the interference-free bound. Returns the best incumbent with
    // proven_optimal = false when the time limit is hit.
    Assignment solve_exact(const LinkEvaluator &eval, const SolverConfig &config);

    // Best-first greedy pick followed by pairwise reassignment until no move improves the objective.
    Assignment solve_greedy(const LinkEvaluator &eval, const SolverConfig &config);

    // Columns: user, ap, branch, wavelength (1-based ids).
    void write_assignment_csv(std::ostream &os, const Assignment &assignment);
}
