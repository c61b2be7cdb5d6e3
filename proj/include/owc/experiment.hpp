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
#include "owc/channel.hpp"
#include "owc/link.hpp"
#include "owc/scene.hpp"

#include <filesystem>
#include <iosfwd>
#include <stdexcept>
#include <string>
#include <vector>

namespace owc
{
    enum class SolverMode
    {
        Exact,
        Greedy,
        Exhaustive
    };

    SolverMode parse_solver_mode(std::string_view text);
    std::string_view name(SolverMode mode);
    ObjectiveScale parse_objective(std::string_view text);

    inline constexpr double kReceiverPlaneZ = 1.0;

    // The eight user positions of the two standard layouts: scenario 1 packs the users into two
    // groups of four, scenario 2 spreads them over the room.
    std::vector<Vec3> scenario_preset(RoomId room, int scenario);

    struct ExperimentConfig
    {
        RoomSpec room = standard_room(RoomId::A);
        std::string room_label = "A";
        std::string scenario_label = "1";
        std::vector<Vec3> users;

        ChannelOptions channel;
        Discretization discretization;
        ReceiverFrontEnd frontend;
        RatePolicy rate;
        SolverConfig solver;
        SolverMode mode = SolverMode::Exact;

        std::filesystem::path out_dir = "out";
        int threads = 0;
    };

    class ConfigError : public std::invalid_argument
    {
    public:
        explicit ConfigError(std::vector<std::string> issues);
        const std::vector<std::string> &issues() const { return issues_; }

    private:
        std::vector<std::string> issues_;
    };

    // Preset room with one of its standard user layouts and default settings everywhere else.
    ExperimentConfig preset_config(RoomId room, int scenario);

    // Every invariant violation of a configuration; empty when valid.
    std::vector<std::string> check_config(const ExperimentConfig &config);

    // JSON configuration. Throws ConfigError listing every problem found.
    ExperimentConfig parse_config(std::string_view text, const std::filesystem::path &base_dir = {});
    ExperimentConfig load_config(const std::filesystem::path &path);

    // JSON file holding {"users": [[x, y, z], ...]}.
    std::vector<Vec3> load_users(const std::filesystem::path &path);

    struct RunResult
    {
        GainTable gains;
        Assignment assignment;
        std::vector<LinkReport> reports;
        std::vector<std::string> failures;

        bool ok() const { return failures.empty(); }
    };

    // Allocation and link evaluation on an existing gain table.
    RunResult allocate(const GainTable &gains, const ExperimentConfig &config);

    // Scene, gains, allocation and link reports; writes report.csv, assignment.csv, gains.csv and the
    // fig_bandwidth/fig_sinr/fig_rate data files into config.out_dir. Every file is replaced atomically.
    RunResult run_experiment(const ExperimentConfig &config, std::ostream *summary = nullptr);

    // Writes the run outputs for an allocation result (gains.csv included).
    void write_outputs(const RunResult &result, const ExperimentConfig &config);

    void print_summary(std::ostream &os, const RunResult &result, const ExperimentConfig &config);

    // Writes to a sibling temporary file, then renames over the target.
    void write_file_atomic(const std::filesystem::path &path, const std::string &contents);
}
