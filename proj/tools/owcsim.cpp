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

#include "owc/experiment.hpp"

#include <CLI11.hpp>

#include <cmath>
#include <fstream>
#include <iostream>
#include <random>
#include <sstream>

namespace
{
    using namespace owc;

    bool is_preset(const std::string &s) { return s == "A" || s == "B" || s == "C" || s == "a" || s == "b" || s == "c"; }

    // Eight users on the receiver plane, 0.25 m away from the walls, on a 1 cm grid.
    std::vector<Vec3> random_users(const RoomSpec &room, std::uint64_t seed, std::size_t count = 8)
    {
        std::mt19937_64 rng(seed);
        std::uniform_real_distribution<double> ux(0.25, room.width - 0.25), uy(0.25, room.length - 0.25);
        std::vector<Vec3> users;
        for (std::size_t i = 0; i < count; ++i)
            users.push_back({std::round(ux(rng) * 100.0) / 100.0, std::round(uy(rng) * 100.0) / 100.0, kReceiverPlaneZ});
        return users;
    }

    ExperimentConfig base_config(const std::string &room)
    {
        if (is_preset(room))
        {
            ExperimentConfig c;
            c.room = standard_room(parse_room_id(room));
            c.room_label = std::string(name(parse_room_id(room)));
            c.users.clear();
            return c;
        }
        return load_config(room);
    }

    int finish(const RunResult &result)
    {
        if (!result.ok())
        {
            for (const auto &f : result.failures)
                std::cerr << "owcsim: " << f << '\n';
            return 1;
        }
        return 0;
    }
}

int main(int argc, char **argv)
{
    CLI::App app{"Multi-user indoor optical wireless WDMA simulator"};
    app.require_subcommand(1);

    // run
    auto *run = app.add_subcommand("run", "Full pipeline: scene, gains, allocation, link reports");
    std::string room = "A", scenario, solver = "exact", objective = "db", out = "out";
    std::optional<int> order, k, threads;
    std::optional<double> element_size, time_limit;
    std::uint64_t seed = 1;
    run->add_option("--room", room, "Preset A|B|C or a JSON configuration file")->required();
    run->add_option("--scenario", scenario, "Preset layout 1|2, 'random', or a JSON users file");
    run->add_option("--order", order, "Reflection order 0, 1 or 2")->check(CLI::Range(0, 2));
    auto *solver_opt = run->add_option("--solver", solver, "exact | greedy | exhaustive")
                           ->check(CLI::IsMember({"exact", "greedy", "exhaustive"}));
    auto *out_opt = run->add_option("--out", out, "Output directory");
    run->add_option("--k", k, "Candidates kept per user")->check(CLI::PositiveNumber);
    auto *objective_opt = run->add_option("--objective", objective, "db | linear")->check(CLI::IsMember({"db", "linear"}));
    run->add_option("--element-size", element_size, "First-order element size in m (second order uses twice this)")
        ->check(CLI::PositiveNumber);
    run->add_option("--seed", seed, "Seed for --scenario random");
    run->add_option("--threads", threads, "OpenMP threads for the gain matrix");
    run->add_option("--time-limit", time_limit, "Exact solver time limit in seconds")->check(CLI::PositiveNumber);

    // solve
    auto *solve = app.add_subcommand("solve", "Allocation and link reports from an exported gains.csv");
    std::string gains_path, solve_out = "out", solve_solver = "exact", solve_objective = "db", room_label = "-", scenario_label = "-";
    std::optional<int> solve_k;
    solve->add_option("--gains", gains_path, "Gain table CSV")->required()->check(CLI::ExistingFile);
    solve->add_option("--solver", solve_solver, "exact | greedy | exhaustive")->check(CLI::IsMember({"exact", "greedy", "exhaustive"}));
    solve->add_option("--objective", solve_objective, "db | linear")->check(CLI::IsMember({"db", "linear"}));
    solve->add_option("--k", solve_k, "Candidates kept per user")->check(CLI::PositiveNumber);
    solve->add_option("--out", solve_out, "Output directory");
    solve->add_option("--room-label", room_label, "Room column value in report.csv");
    solve->add_option("--scenario-label", scenario_label, "Scenario column value in report.csv");

    // ir
    auto *ir = app.add_subcommand("ir", "Export one impulse response as CSV");
    std::string ir_room = "A", ir_wavelength = "red", ir_out;
    std::vector<double> ir_user;
    std::size_t ir_ap = 1, ir_branch = 1;
    int ir_order = 2;
    ir->add_option("--room", ir_room, "Preset A|B|C or a JSON configuration file");
    ir->add_option("--ap", ir_ap, "AP index (1-based)")->required();
    ir->add_option("--user", ir_user, "Receiver position x y z")->expected(3)->required();
    ir->add_option("--branch", ir_branch, "Branch index 1-4")->check(CLI::Range(1, 4));
    ir->add_option("--wavelength", ir_wavelength, "red | yellow | green | blue");
    ir->add_option("--order", ir_order, "Reflection order 0, 1 or 2")->check(CLI::Range(0, 2));
    ir->add_option("--out", ir_out, "Output CSV (stdout when omitted)");

    CLI11_PARSE(app, argc, argv);

    try
    {
        if (run->parsed())
        {
            ExperimentConfig c = base_config(room);
            const bool from_file = !is_preset(room);

            if (!scenario.empty())
            {
                if (scenario == "1" || scenario == "2")
                {
                    if (!is_preset(c.room_label))
                        throw std::invalid_argument("preset scenarios need a preset room");
                    c.users = scenario_preset(parse_room_id(c.room_label), std::stoi(scenario));
                    c.scenario_label = scenario;
                }
                else if (scenario == "random")
                {
                    c.users = random_users(c.room, seed);
                    c.scenario_label = "random-" + std::to_string(seed);
                }
                else
                {
                    c.users = load_users(scenario);
                    c.scenario_label = std::filesystem::path(scenario).stem().string();
                }
            }
            else if (c.users.empty())
                throw std::invalid_argument("--scenario is required unless the configuration lists users");

            if (order)
                c.channel.max_order = *order;
            if (!from_file || solver_opt->count())
                c.mode = parse_solver_mode(solver);
            if (!from_file || objective_opt->count())
                c.solver.scale = parse_objective(objective);
            if (!from_file || out_opt->count())
                c.out_dir = out;
            if (k)
                c.solver.max_candidates = static_cast<std::size_t>(*k);
            if (element_size)
                c.discretization = {*element_size, 2.0 * *element_size};
            if (threads)
                c.threads = *threads;
            if (time_limit)
                c.solver.time_limit = std::chrono::milliseconds(static_cast<long long>(*time_limit * 1000.0));

            const auto result = run_experiment(c, &std::cout);
            return finish(result);
        }

        if (solve->parsed())
        {
            std::ifstream in(gains_path);
            const GainTable gains = GainTable::read_csv(in);
            ExperimentConfig c;
            c.room_label = room_label;
            c.scenario_label = scenario_label;
            c.mode = parse_solver_mode(solve_solver);
            c.solver.scale = parse_objective(solve_objective);
            if (solve_k)
                c.solver.max_candidates = static_cast<std::size_t>(*solve_k);
            c.out_dir = solve_out;
            const auto result = allocate(gains, c);
            write_outputs(result, c);
            print_summary(std::cout, result, c);
            return finish(result);
        }

        if (ir->parsed())
        {
            ExperimentConfig c = base_config(ir_room);
            const auto w = parse_wavelength(ir_wavelength);
            if (!w)
                throw std::invalid_argument("unknown wavelength '" + ir_wavelength + "'");
            if (ir_ap < 1 || ir_ap > c.room.aps.size())
                throw std::invalid_argument("AP index out of range");
            c.channel.max_order = ir_order;
            const Scene scene = discretize(c.room, c.discretization.first_order_dx, c.discretization.second_order_dx);
            const auto branches = default_branches();
            const auto response = impulse_response(scene, c.room.aps[ir_ap - 1], {ir_user[0], ir_user[1], ir_user[2]},
                                                   branches[ir_branch - 1], *w, c.channel);
            if (ir_out.empty())
                response.write_csv(std::cout);
            else
            {
                std::ostringstream os;
                response.write_csv(os);
                write_file_atomic(ir_out, os.str());
            }
            return 0;
        }
    }
    catch (const std::exception &e)
    {
        std::cerr << "owcsim: " << e.what() << '\n';
        return 2;
    }
    return 0;
}
