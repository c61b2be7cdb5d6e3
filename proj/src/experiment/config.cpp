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

#include <json.hpp>

#include <algorithm>
#include <cstdio>
#include <fstream>
#include <sstream>

namespace owc
{
    using nlohmann::json;

    SolverMode parse_solver_mode(std::string_view text)
    {
        if (text == "exact")
            return SolverMode::Exact;
        if (text == "greedy")
            return SolverMode::Greedy;
        if (text == "exhaustive")
            return SolverMode::Exhaustive;
        throw std::invalid_argument("Unknown solver '" + std::string(text) + "' (expected exact, greedy or exhaustive).");
    }

    std::string_view name(SolverMode mode)
    {
        switch (mode)
        {
        case SolverMode::Exact:
            return "exact";
        case SolverMode::Greedy:
            return "greedy";
        case SolverMode::Exhaustive:
            return "exhaustive";
        }
        return "?";
    }

    ObjectiveScale parse_objective(std::string_view text)
    {
        if (text == "db")
            return ObjectiveScale::DbSum;
        if (text == "linear")
            return ObjectiveScale::LinearSum;
        throw std::invalid_argument("Unknown objective '" + std::string(text) + "' (expected db or linear).");
    }

    namespace
    {
        std::string join(const std::vector<std::string> &issues)
        {
            std::string msg = "invalid configuration:";
            for (const auto &s : issues)
                msg += "\n  - " + s;
            return msg;
        }

        // Collects problems instead of stopping at the first one.
        class Reader
        {
        public:
            std::vector<std::string> issues;

            void error(const std::string &where, const std::string &what) { issues.push_back(where + ": " + what); }

            bool number(const json &j, const std::string &where, double &out)
            {
                if (!j.is_number())
                {
                    error(where, "expected a number");
                    return false;
                }
                out = j.get<double>();
                return true;
            }

            bool integer(const json &j, const std::string &where, long &out)
            {
                if (!j.is_number_integer())
                {
                    error(where, "expected an integer");
                    return false;
                }
                out = j.get<long>();
                return true;
            }

            bool string(const json &j, const std::string &where, std::string &out)
            {
                if (!j.is_string())
                {
                    error(where, "expected a string");
                    return false;
                }
                out = j.get<std::string>();
                return true;
            }

            bool vec3(const json &j, const std::string &where, Vec3 &out)
            {
                if (!j.is_array() || j.size() != 3 || !j[0].is_number() || !j[1].is_number() || !j[2].is_number())
                {
                    error(where, "expected [x, y, z]");
                    return false;
                }
                out = {j[0].get<double>(), j[1].get<double>(), j[2].get<double>()};
                return true;
            }

            // A number applies to every wavelength; an object sets named wavelengths.
            void per_wavelength(const json &j, const std::string &where, PerWavelength<double> &out)
            {
                if (j.is_number())
                {
                    out.fill(j.get<double>());
                    return;
                }
                if (!j.is_object())
                {
                    error(where, "expected a number or a {red, yellow, green, blue} object");
                    return;
                }
                for (const auto &[key, value] : j.items())
                {
                    const auto w = parse_wavelength(key);
                    if (!w)
                        error(where, "unknown wavelength '" + key + "'");
                    else
                        number(value, where + "." + key, out[index(*w)]);
                }
            }

            void unknown_keys(const json &j, const std::string &where, std::initializer_list<std::string_view> known)
            {
                for (const auto &[key, value] : j.items())
                    if (std::find(known.begin(), known.end(), key) == known.end())
                        error(where, "unknown key '" + key + "'");
            }

            void room(const json &j, ExperimentConfig &c)
            {
                if (j.is_string())
                {
                    try
                    {
                        const auto id = parse_room_id(j.get<std::string>());
                        c.room = standard_room(id);
                        c.room_label = std::string(name(id));
                    }
                    catch (const std::invalid_argument &e)
                    {
                        error("room", e.what());
                    }
                    return;
                }
                if (!j.is_object())
                {
                    error("room", "expected a preset id or an object");
                    return;
                }
                unknown_keys(j, "room", {"preset", "name", "dims", "aps", "reflectivity"});

                if (j.contains("preset"))
                    room(j["preset"], c);
                else
                {
                    c.room = RoomSpec{};
                    c.room.surfaces = default_surfaces();
                    c.room_label = "custom";
                }
                if (j.contains("name") && string(j["name"], "room.name", c.room.name) && !j.contains("preset"))
                    c.room_label = c.room.name;
                if (j.contains("dims"))
                {
                    Vec3 d;
                    if (vec3(j["dims"], "room.dims", d))
                        c.room.width = d.x, c.room.length = d.y, c.room.height = d.z;
                }
                else if (!j.contains("preset"))
                    error("room", "custom rooms need dims [width, length, height]");

                if (j.contains("aps"))
                {
                    const auto &aps = j["aps"];
                    if (!aps.is_array())
                        error("room.aps", "expected an array");
                    else
                    {
                        c.room.aps.clear();
                        for (std::size_t i = 0; i < aps.size(); ++i)
                            c.room.aps.push_back(access_point(aps[i], "room.aps[" + std::to_string(i) + "]", c.room.height));
                    }
                }
                else if (!j.contains("preset"))
                    error("room", "custom rooms need an aps list");

                if (j.contains("reflectivity"))
                    reflectivity(j["reflectivity"], c.room);
            }

            AccessPointSpec access_point(const json &j, const std::string &where, double height)
            {
                AccessPointSpec ap;
                if (j.is_array())
                {
                    vec3(j, where, ap.position);
                    return ap;
                }
                if (!j.is_object())
                {
                    error(where, "expected [x, y, z] or an object");
                    return ap;
                }
                unknown_keys(j, where, {"position", "ld_count", "lambertian_order", "ld_power"});
                if (j.contains("position"))
                {
                    if (j["position"].is_array() && j["position"].size() == 2 && j["position"][0].is_number() &&
                        j["position"][1].is_number())
                        ap.position = {j["position"][0].get<double>(), j["position"][1].get<double>(), height};
                    else
                        vec3(j["position"], where + ".position", ap.position);
                }
                else
                    error(where, "missing position");
                if (j.contains("ld_count"))
                {
                    long n = 0;
                    if (integer(j["ld_count"], where + ".ld_count", n))
                        ap.ld_count = static_cast<int>(n);
                }
                if (j.contains("lambertian_order"))
                    number(j["lambertian_order"], where + ".lambertian_order", ap.lambertian_order);
                if (j.contains("ld_power"))
                    per_wavelength(j["ld_power"], where + ".ld_power", ap.ld_power);
                return ap;
            }

            void reflectivity(const json &j, RoomSpec &room)
            {
                if (!j.is_object())
                {
                    error("room.reflectivity", "expected an object");
                    return;
                }
                for (const auto &[key, value] : j.items())
                {
                    const std::string where = "room.reflectivity." + key;
                    std::vector<SurfaceId> targets;
                    if (key == "walls")
                        targets = {SurfaceId::WallX0, SurfaceId::WallX1, SurfaceId::WallY0, SurfaceId::WallY1};
                    else
                        for (auto s : kSurfaces)
                            if (name(s) == key)
                                targets = {s};
                    if (targets.empty())
                    {
                        error("room.reflectivity", "unknown surface '" + key + "'");
                        continue;
                    }
                    PerWavelength<double> rho = room.surface(targets.front()).reflectivity;
                    per_wavelength(value, where, rho);
                    for (auto s : targets)
                        room.surfaces[index(s)].reflectivity = rho;
                }
            }

            void channel(const json &j, ExperimentConfig &c)
            {
                unknown_keys(j, "channel", {"order", "dt_ns", "dx1_m", "dx2_m", "f_cap_hz", "resolution_hz"});
                if (j.contains("order"))
                {
                    long n = 0;
                    if (integer(j["order"], "channel.order", n))
                        c.channel.max_order = static_cast<int>(n);
                }
                double dt_ns = 0.0;
                if (j.contains("dt_ns") && number(j["dt_ns"], "channel.dt_ns", dt_ns))
                    c.channel.bin_width_s = dt_ns * 1e-9;
                if (j.contains("dx1_m"))
                    number(j["dx1_m"], "channel.dx1_m", c.discretization.first_order_dx);
                if (j.contains("dx2_m"))
                    number(j["dx2_m"], "channel.dx2_m", c.discretization.second_order_dx);
                if (j.contains("f_cap_hz"))
                    number(j["f_cap_hz"], "channel.f_cap_hz", c.channel.f_cap_hz);
                if (j.contains("resolution_hz"))
                    number(j["resolution_hz"], "channel.resolution_hz", c.channel.freq_resolution_hz);
            }

            void frontend(const json &j, ExperimentConfig &c)
            {
                unknown_keys(j, "frontend", {"responsivities", "n0", "b_rx", "crosstalk"});
                if (j.contains("responsivities"))
                    per_wavelength(j["responsivities"], "frontend.responsivities", c.frontend.responsivity);
                if (j.contains("n0"))
                    number(j["n0"], "frontend.n0", c.frontend.noise_density);
                if (j.contains("b_rx"))
                    number(j["b_rx"], "frontend.b_rx", c.frontend.bandwidth_hz);
                if (j.contains("crosstalk"))
                    number(j["crosstalk"], "frontend.crosstalk", c.frontend.crosstalk);
            }

            void rate(const json &j, ExperimentConfig &c)
            {
                unknown_keys(j, "rate", {"threshold_db", "floor_db", "ook_factor", "fec_code_rate"});
                if (j.contains("threshold_db"))
                    number(j["threshold_db"], "rate.threshold_db", c.rate.threshold_db);
                if (j.contains("floor_db"))
                    number(j["floor_db"], "rate.floor_db", c.rate.floor_db);
                if (j.contains("ook_factor"))
                    number(j["ook_factor"], "rate.ook_factor", c.rate.ook_factor);
                if (j.contains("fec_code_rate"))
                    number(j["fec_code_rate"], "rate.fec_code_rate", c.rate.fec_code_rate);
            }

            void solver(const json &j, ExperimentConfig &c)
            {
                unknown_keys(j, "solver", {"mode", "k", "objective", "time_limit_s"});
                std::string s;
                if (j.contains("mode") && string(j["mode"], "solver.mode", s))
                {
                    try
                    {
                        c.mode = parse_solver_mode(s);
                    }
                    catch (const std::invalid_argument &e)
                    {
                        error("solver.mode", e.what());
                    }
                }
                if (j.contains("k"))
                {
                    long k = 0;
                    if (integer(j["k"], "solver.k", k))
                    {
                        if (k < 1)
                            error("solver.k", "candidate cap must be >= 1");
                        else
                            c.solver.max_candidates = static_cast<std::size_t>(k);
                    }
                }
                if (j.contains("objective") && string(j["objective"], "solver.objective", s))
                {
                    try
                    {
                        c.solver.scale = parse_objective(s);
                    }
                    catch (const std::invalid_argument &e)
                    {
                        error("solver.objective", e.what());
                    }
                }
                double t = 0.0;
                if (j.contains("time_limit_s") && number(j["time_limit_s"], "solver.time_limit_s", t))
                    c.solver.time_limit = std::chrono::milliseconds(static_cast<long long>(t * 1000.0));
            }
        };
    }

    ConfigError::ConfigError(std::vector<std::string> issues)
        : std::invalid_argument(join(issues)), issues_(std::move(issues))
    {
    }

    std::vector<std::string> check_config(const ExperimentConfig &c)
    {
        std::vector<std::string> issues = check_room(c.room);
        if (c.users.empty())
            issues.push_back("users: at least one user is required");
        for (std::size_t u = 0; u < c.users.size(); ++u)
        {
            const auto &p = c.users[u];
            if (!p.is_finite() || !c.room.contains(p) || p.z >= c.room.height)
            {
                char buf[128];
                std::snprintf(buf, sizeof(buf), "users: user %zu at (%g, %g, %g) lies outside the room", u + 1, p.x, p.y, p.z);
                issues.push_back(buf);
            }
        }
        if (c.channel.max_order < 0 || c.channel.max_order > 2)
            issues.push_back("channel.order: must be 0, 1 or 2");
        if (!(c.channel.bin_width_s > 0.0))
            issues.push_back("channel.dt_ns: must be positive");
        if (!(c.channel.f_cap_hz > 0.0) || !(c.channel.freq_resolution_hz > 0.0))
            issues.push_back("channel: frequency cap and resolution must be positive");
        const double min_dim = std::min({c.room.width, c.room.length, c.room.height});
        for (double dx : {c.discretization.first_order_dx, c.discretization.second_order_dx})
            if (!(dx > 0.0) || dx > min_dim)
                issues.push_back("channel: element sizes must lie in (0, smallest room dimension]");
        for (const auto &s : check_front_end(c.frontend))
            issues.push_back("frontend: " + s);
        if (!(c.rate.ook_factor > 0.0) || !(c.rate.fec_code_rate > 0.0 && c.rate.fec_code_rate <= 1.0))
            issues.push_back("rate: OOK factor must be positive and the FEC code rate in (0, 1]");
        if (!(c.rate.floor_db <= c.rate.threshold_db))
            issues.push_back("rate: FEC floor must not exceed the threshold");
        if (c.solver.max_candidates < 1)
            issues.push_back("solver.k: candidate cap must be >= 1");
        return issues;
    }

    ExperimentConfig parse_config(std::string_view text, const std::filesystem::path &base_dir)
    {
        json j;
        try
        {
            j = json::parse(text);
        }
        catch (const json::parse_error &e)
        {
            throw ConfigError({std::string("parse error: ") + e.what()});
        }
        if (!j.is_object())
            throw ConfigError({"top level must be an object"});

        ExperimentConfig c;
        c.users.clear();
        Reader r;
        r.unknown_keys(j, "config", {"room", "scenario", "users", "channel", "frontend", "rate", "solver", "out", "threads"});

        if (j.contains("room"))
            r.room(j["room"], c);
        else
            r.error("room", "missing (preset id A, B, C or a room object)");

        if (j.contains("users"))
        {
            const auto &users = j["users"];
            if (!users.is_array())
                r.error("users", "expected an array of [x, y, z]");
            else
                for (std::size_t i = 0; i < users.size(); ++i)
                {
                    Vec3 p;
                    if (r.vec3(users[i], "users[" + std::to_string(i) + "]", p))
                        c.users.push_back(p);
                }
            c.scenario_label = "custom";
        }
        else if (j.contains("scenario"))
        {
            long s = 0;
            if (r.integer(j["scenario"], "scenario", s))
            {
                if (c.room_label != "A" && c.room_label != "B" && c.room_label != "C")
                    r.error("scenario", "preset scenarios need a preset room");
                else
                {
                    try
                    {
                        c.users = scenario_preset(parse_room_id(c.room_label), static_cast<int>(s));
                        c.scenario_label = std::to_string(s);
                    }
                    catch (const std::invalid_argument &e)
                    {
                        r.error("scenario", e.what());
                    }
                }
            }
        }

        if (j.contains("channel"))
            r.channel(j["channel"], c);
        if (j.contains("frontend"))
            r.frontend(j["frontend"], c);
        if (j.contains("rate"))
            r.rate(j["rate"], c);
        if (j.contains("solver"))
            r.solver(j["solver"], c);
        std::string out;
        if (j.contains("out") && r.string(j["out"], "out", out))
            c.out_dir = base_dir.empty() ? std::filesystem::path(out) : base_dir / out;
        if (j.contains("threads"))
        {
            long t = 0;
            if (r.integer(j["threads"], "threads", t))
                c.threads = static_cast<int>(t);
        }

        auto issues = std::move(r.issues);
        for (auto &s : check_config(c))
            issues.push_back(std::move(s));
        if (!issues.empty())
            throw ConfigError(std::move(issues));
        return c;
    }

    namespace
    {
        std::string slurp(const std::filesystem::path &path)
        {
            std::ifstream in(path);
            if (!in)
                throw ConfigError({"cannot read " + path.string()});
            std::ostringstream ss;
            ss << in.rdbuf();
            return ss.str();
        }
    }

    ExperimentConfig load_config(const std::filesystem::path &path)
    {
        return parse_config(slurp(path), path.parent_path());
    }

    std::vector<Vec3> load_users(const std::filesystem::path &path)
    {
        json j;
        try
        {
            j = json::parse(slurp(path));
        }
        catch (const json::parse_error &e)
        {
            throw ConfigError({std::string("parse error: ") + e.what()});
        }
        Reader r;
        std::vector<Vec3> users;
        if (!j.is_object() || !j.contains("users") || !j["users"].is_array())
            r.error("users", "expected {\"users\": [[x, y, z], ...]}");
        else
            for (std::size_t i = 0; i < j["users"].size(); ++i)
            {
                Vec3 p;
                if (r.vec3(j["users"][i], "users[" + std::to_string(i) + "]", p))
                    users.push_back(p);
            }
        if (!r.issues.empty())
            throw ConfigError(std::move(r.issues));
        return users;
    }
}
