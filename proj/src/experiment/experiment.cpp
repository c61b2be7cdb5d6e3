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

#include <cstdio>
#include <fstream>
#include <ostream>
#include <sstream>

namespace owc
{
    void write_file_atomic(const std::filesystem::path &path, const std::string &contents)
    {
        auto tmp = path;
        tmp += ".tmp";
        {
            std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
            if (!out)
                throw std::runtime_error("cannot write " + tmp.string());
            out << contents;
            out.flush();
            if (!out)
                throw std::runtime_error("write failed for " + tmp.string());
        }
        std::filesystem::rename(tmp, path);
    }

    RunResult allocate(const GainTable &gains, const ExperimentConfig &config)
    {
        RunResult result;
        result.gains = gains;
        const LinkEvaluator eval(result.gains, config.frontend);

        try
        {
            switch (config.mode)
            {
            case SolverMode::Exact:
                result.assignment = solve_exact(eval, config.solver);
                if (!result.assignment.proven_optimal)
                    result.failures.push_back("exact solver hit its time limit; assignment is not proven optimal");
                break;
            case SolverMode::Greedy:
                result.assignment = solve_greedy(eval, config.solver);
                break;
            case SolverMode::Exhaustive:
                result.assignment = solve_exhaustive(eval, config.solver);
                break;
            }
        }
        catch (const std::runtime_error &e)
        {
            result.failures.push_back(std::string("allocation failed: ") + e.what());
            return result;
        }

        const auto links = result.assignment.links();
        for (std::size_t u = 0; u < links.size(); ++u)
        {
            try
            {
                result.reports.push_back(link_report(u, links, result.gains, config.frontend, config.rate));
            }
            catch (const UnsupportedLink &e)
            {
                result.failures.push_back("user " + std::to_string(u + 1) + ": " + e.what());
            }
        }
        return result;
    }

    void write_outputs(const RunResult &result, const ExperimentConfig &config)
    {
        std::filesystem::create_directories(config.out_dir);
        const auto &dir = config.out_dir;

        std::ostringstream gains;
        result.gains.write_csv(gains);
        write_file_atomic(dir / "gains.csv", gains.str());

        if (!result.assignment.picks.empty())
        {
            std::ostringstream os;
            write_assignment_csv(os, result.assignment);
            write_file_atomic(dir / "assignment.csv", os.str());
        }
        else
            std::filesystem::remove(dir / "assignment.csv");

        std::ostringstream report;
        write_report_csv(report, result.reports, config.room_label, config.scenario_label);
        write_file_atomic(dir / "report.csv", report.str());

        std::ostringstream bw, sinr_os, rate;
        bw << "user,bandwidth_hz,bandwidth_capped\n";
        sinr_os << "user,sinr_db,effective_sinr_db,fec\n";
        rate << "user,rate_bps,fec\n";
        char buf[160];
        for (const auto &r : result.reports)
        {
            std::snprintf(buf, sizeof(buf), "%zu,%.6e,%d\n", r.user + 1, r.bandwidth_hz, r.bandwidth_capped ? 1 : 0);
            bw << buf;
            std::snprintf(buf, sizeof(buf), "%zu,%.6f,%.6f,%d\n", r.user + 1, r.sinr_db, r.effective_sinr_db, r.fec_engaged ? 1 : 0);
            sinr_os << buf;
            std::snprintf(buf, sizeof(buf), "%zu,%.6e,%d\n", r.user + 1, r.rate_bps, r.fec_engaged ? 1 : 0);
            rate << buf;
        }
        write_file_atomic(dir / "fig_bandwidth.csv", bw.str());
        write_file_atomic(dir / "fig_sinr.csv", sinr_os.str());
        write_file_atomic(dir / "fig_rate.csv", rate.str());
    }

    void print_summary(std::ostream &os, const RunResult &result, const ExperimentConfig &config)
    {
        char buf[200];
        os << "room " << config.room_label << ", scenario " << config.scenario_label << ", solver " << name(config.mode)
           << ", objective " << (config.solver.scale == ObjectiveScale::DbSum ? "db" : "linear") << '\n';
        std::snprintf(buf, sizeof(buf), "%4s %4s %6s %-7s %9s %10s %10s %4s\n", "user", "ap", "branch", "lambda",
                      "SINR[dB]", "B3dB[GHz]", "rate[Gb/s]", "fec");
        os << buf;
        for (const auto &r : result.reports)
        {
            std::snprintf(buf, sizeof(buf), "%4zu %4zu %6zu %-7s %9.2f %9.3f%s %10.3f %4s\n", r.user + 1, r.link.ap + 1,
                          r.link.branch + 1, std::string(name(r.link.wavelength)).c_str(), r.sinr_db,
                          r.bandwidth_hz / 1e9, r.bandwidth_capped ? "*" : " ", r.rate_bps / 1e9, r.fec_engaged ? "yes" : "no");
            os << buf;
        }
        if (!result.assignment.picks.empty())
        {
            std::snprintf(buf, sizeof(buf), "objective %.6f (%s, %llu nodes)\n", result.assignment.objective,
                          result.assignment.proven_optimal ? "proven optimal" : "heuristic",
                          static_cast<unsigned long long>(result.assignment.nodes));
            os << buf;
        }
        for (const auto &f : result.failures)
            os << "error: " << f << '\n';
    }

    RunResult run_experiment(const ExperimentConfig &config, std::ostream *summary)
    {
        if (auto issues = check_config(config); !issues.empty())
            throw ConfigError(std::move(issues));

        const Scene scene = discretize(config.room, config.discretization.first_order_dx,
                                       config.discretization.second_order_dx);
        const GainTable gains = gain_matrix(scene, config.users, config.channel, config.threads);
        RunResult result = allocate(gains, config);
        write_outputs(result, config);
        if (summary)
            print_summary(*summary, result, config);
        return result;
    }
}
