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


#include "owc/allocator.hpp"
#include "random_instance.hpp"

#include <doctest.h>

#include <cmath>
#include <map>
#include <set>
#include <sstream>

using namespace owc;
using owc::testing::random_table;

namespace
{
    const ReceiverFrontEnd kFe;

    void check_structure(const Assignment &a, std::size_t users)
    {
        REQUIRE(a.picks.size() == users);
        std::set<std::pair<std::size_t, Wavelength>> pairs;
        for (std::size_t u = 0; u < users; ++u)
        {
            CHECK(a.picks[u].user == u);
            CHECK(pairs.insert({a.picks[u].link.ap, a.picks[u].link.wavelength}).second);
        }
    }

    GainTable room_gains(RoomId room, const std::vector<Vec3> &users, int order = 1)
    {
        ChannelOptions o;
        o.max_order = order;
        return gain_matrix(validate(standard_room(room)), users, o);
    }

    SolverConfig small_config(std::size_t k = 8)
    {
        SolverConfig c;
        c.max_candidates = k;
        return c;
    }
}

TEST_CASE("candidate lists")
{
    std::mt19937_64 rng(11);
    const auto t = random_table(rng, 3, 4, 0.5);
    const LinkEvaluator eval(t, kFe);
    for (std::size_t u = 0; u < 3; ++u)
    {
        const auto all = candidates(u, eval, small_config(1000));
        for (std::size_t i = 0; i < all.size(); ++i)
        {
            CHECK(t.at(u, all[i].link.branch, all[i].link.ap, all[i].link.wavelength).dc_gain > 0.0);
            CHECK(all[i].user == u);
            CHECK(all[i].free_sinr_db == doctest::Approx(to_db(eval.interference_free_sinr(u, all[i].link))));
            if (i > 0)
            {
                CHECK(all[i - 1].free_sinr_db >= all[i].free_sinr_db);
                if (all[i - 1].free_sinr_db == all[i].free_sinr_db)
                    CHECK(all[i - 1].link < all[i].link);
            }
        }
        const auto top4 = candidates(u, eval, small_config(4));
        CHECK(top4.size() == std::min<std::size_t>(4, all.size()));
        CHECK(std::equal(top4.begin(), top4.end(), all.begin()));
        CHECK(candidates(u, eval, small_config(1)).size() == 1);
    }
    CHECK_THROWS_AS(candidates(0, eval, small_config(0)), std::invalid_argument);
}

TEST_CASE("corner user keeps to the nearest AP")
{
    const auto t = room_gains(RoomId::B, {{0.5, 0.5, 1}});
    const LinkEvaluator eval(t, kFe);
    const auto top = candidates(0, eval, small_config(4));
    REQUIRE(top.size() == 4);
    for (const auto &c : top)
        CHECK(c.link.ap == 0);
}

TEST_CASE("a user without signal is infeasible")
{
    std::mt19937_64 rng(3);
    auto t = random_table(rng, 2, 2);
    for (std::size_t b = 0; b < 4; ++b)
        for (std::size_t a = 0; a < 2; ++a)
            for (auto w : kWavelengths)
                t.at(1, b, a, w).dc_gain = 0.0;
    const LinkEvaluator eval(t, kFe);
    CHECK_THROWS_AS(candidates(1, eval, SolverConfig{}), InfeasibleUser);
    CHECK_THROWS_AS(solve_exact(eval, SolverConfig{}), InfeasibleUser);
    CHECK_THROWS_AS(solve_exhaustive(eval, SolverConfig{}), InfeasibleUser);
    CHECK_THROWS_AS(solve_greedy(eval, SolverConfig{}), InfeasibleUser);
}

TEST_CASE("more users than (AP, wavelength) pairs is infeasible")
{
    std::mt19937_64 rng(5);
    const auto t = random_table(rng, 5, 1, 1.0);
    const LinkEvaluator eval(t, kFe);
    CHECK_THROWS_AS(solve_exact(eval, SolverConfig{}), InfeasibleUser);
    CHECK_THROWS_AS(solve_exhaustive(eval, SolverConfig{}), InfeasibleUser);
    CHECK_THROWS_AS(solve_greedy(eval, SolverConfig{}), InfeasibleUser);
}

TEST_CASE("objective")
{
    SUBCASE("single user")
    {
        std::mt19937_64 rng(1);
        const auto t = random_table(rng, 1, 2, 0.6);
        const LinkEvaluator eval(t, kFe);
        const auto c = candidates(0, eval, SolverConfig{});
        const std::vector<Link> links = {c.front().link};
        CHECK(objective(links, eval, ObjectiveScale::DbSum) == sinr(0, links, t, kFe));
        CHECK(objective(links, eval, ObjectiveScale::LinearSum) ==
              doctest::Approx(std::pow(10.0, sinr(0, links, t, kFe) / 10.0)).epsilon(1e-12));
    }

    SUBCASE("separated wavelengths add up, shared wavelengths interfere")
    {
        // User 0 sits under AP 0, user 1 under AP 1; each also sees the other AP weakly.
        GainTable t({{0, 0, 1}, {0, 0, 1}}, {{7.2, 4.5, 2.7, 2.7}, {7.2, 4.5, 2.7, 2.7}}, "pair");
        for (auto w : kWavelengths)
        {
            t.at(0, 0, 0, w).dc_gain = 1.3e-6;
            t.at(1, 0, 1, w).dc_gain = 1.3e-6;
            t.at(0, 0, 1, w).dc_gain = 4e-7;
            t.at(1, 0, 0, w).dc_gain = 4e-7;
        }
        const LinkEvaluator eval(t, kFe);
        const std::vector<Link> split = {{0, 0, Wavelength::Red}, {1, 0, Wavelength::Yellow}};
        const std::vector<Link> shared = {{0, 0, Wavelength::Red}, {1, 0, Wavelength::Red}};
        const double isolated = to_db(eval.interference_free_sinr(0, split[0])) + to_db(eval.interference_free_sinr(1, split[1]));
        CHECK(std::abs(objective(split, eval, ObjectiveScale::DbSum) - isolated) < 0.1);
        CHECK(objective(shared, eval, ObjectiveScale::DbSum) < objective(split, eval, ObjectiveScale::DbSum));
        CHECK(objective(shared, eval, ObjectiveScale::LinearSum) < objective(split, eval, ObjectiveScale::LinearSum));
    }

    SUBCASE("a user without signal makes the score minus infinity")
    {
        GainTable t({{0, 0, 1}}, {{7.2, 4.5, 2.7, 2.7}}, "dark");
        const LinkEvaluator eval(t, kFe);
        const std::vector<Link> links = {{0, 0, Wavelength::Red}};
        CHECK(objective(links, eval, ObjectiveScale::DbSum) == kNegInfDb);
    }
}

TEST_CASE("feasibility")
{
    const std::vector<Link> ok = {{0, 0, Wavelength::Red}, {0, 1, Wavelength::Green}, {1, 0, Wavelength::Red}};
    const std::vector<Link> clash = {{0, 0, Wavelength::Red}, {0, 3, Wavelength::Red}};
    CHECK(is_feasible(ok));
    CHECK_FALSE(is_feasible(clash));
    CHECK(is_feasible(std::vector<Link>{}));
}

TEST_CASE("empty and single-user instances")
{
    GainTable empty({}, {{7.2, 4.5, 2.7, 2.7}}, "none");
    const LinkEvaluator e0(empty, kFe);
    for (const auto &a : {solve_exact(e0, SolverConfig{}), solve_exhaustive(e0, SolverConfig{}), solve_greedy(e0, SolverConfig{})})
    {
        CHECK(a.picks.empty());
        CHECK(a.objective == 0.0);
    }
    CHECK(solve_exact(e0, SolverConfig{}).proven_optimal);

    std::mt19937_64 rng(9);
    for (int i = 0; i < 20; ++i)
    {
        const auto t = random_table(rng, 1, 4, 0.4);
        const LinkEvaluator e(t, kFe);
        const auto top = candidates(0, e, SolverConfig{}).front();
        CHECK(solve_exhaustive(e, SolverConfig{}).picks.front() == top);
        CHECK(solve_exact(e, SolverConfig{}).picks.front() == top);
        CHECK(solve_greedy(e, SolverConfig{}).picks.front() == top);
    }
}

TEST_CASE("branch-and-bound agrees with exhaustive enumeration")
{
    std::mt19937_64 rng(2024);
    for (int i = 0; i < 150; ++i)
    {
        const std::size_t users = 1 + rng() % 4, aps = 1 + rng() % 4;
        const auto t = random_table(rng, users, aps, 0.35);
        const LinkEvaluator eval(t, kFe);
        for (auto scale : {ObjectiveScale::DbSum, ObjectiveScale::LinearSum})
        {
            auto cfg = small_config(8);
            cfg.scale = scale;
            try
            {
                const auto ex = solve_exhaustive(eval, cfg);
                cfg.check_bounds = true;
                const auto bb = solve_exact(eval, cfg);
                CHECK(bb.objective == ex.objective);
                CHECK(bb.links() == ex.links());
                CHECK(bb.proven_optimal);
                check_structure(bb, users);
                check_structure(ex, users);
            }
            catch (const InfeasibleUser &)
            {
                CHECK_THROWS_AS(solve_exact(eval, cfg), InfeasibleUser);
            }
        }
    }
}

TEST_CASE("greedy never beats the optimum")
{
    std::mt19937_64 rng(77);
    for (int i = 0; i < 100; ++i)
    {
        const std::size_t users = 2 + rng() % 5, aps = 2 + rng() % 5;
        const auto t = random_table(rng, users, aps, 0.3);
        const LinkEvaluator eval(t, kFe);
        const auto cfg = small_config(8);
        const auto g = solve_greedy(eval, cfg);
        const auto x = solve_exact(eval, cfg);
        check_structure(g, users);
        CHECK(g.objective <= x.objective + 1e-9 * (1 + std::abs(x.objective)));
        CHECK(g.objective == doctest::Approx(objective(g.links(), eval, cfg.scale)).epsilon(1e-12));
    }
}

TEST_CASE("greedy matches the optimum on spread desk-scale layouts")
{
    std::mt19937_64 rng(20260101);
    std::uniform_real_distribution<double> x(0.25, 3.75), y(0.25, 7.75);
    int matches = 0, runs = 0;
    for (int i = 0; i < 40; ++i)
    {
        std::vector<Vec3> users;
        for (int u = 0; u < 6; ++u)
            users.push_back({std::round(x(rng) * 4) / 4, std::round(y(rng) * 4) / 4, 1.0});
        const auto t = room_gains(RoomId::A, users);
        const LinkEvaluator eval(t, kFe);
        const auto g = solve_greedy(eval, SolverConfig{});
        const auto e = solve_exact(eval, SolverConfig{});
        ++runs;
        matches += std::abs(g.objective - e.objective) <= 1e-9 * (1 + std::abs(e.objective));
    }
    MESSAGE("greedy matched the optimum on " << matches << " of " << runs << " layouts");
    CHECK(matches >= 0.9 * runs);
}

TEST_CASE("candidate cap sensitivity")
{
    const std::vector<Vec3> users = {{0.5, 6.5, 1}, {0.5, 7.5, 1}, {1.5, 6.5, 1}, {1.5, 7.5, 1},
                                     {2.5, 0.5, 1}, {2.5, 1.5, 1}, {3.5, 0.5, 1}, {3.5, 1.5, 1}};
    const auto t = room_gains(RoomId::A, users);
    const LinkEvaluator eval(t, kFe);
    double prev = kNegInfDb;
    std::map<std::size_t, double> by_k;
    for (std::size_t k : {8, 16, 32})
    {
        auto cfg = small_config(k);
        const auto a = solve_exact(eval, cfg);
        CHECK(a.proven_optimal);
        check_structure(a, users.size());
        CHECK(a.objective >= prev);
        prev = a.objective;
        by_k[k] = a.objective;
    }
    CHECK(by_k[32] - by_k[16] < 0.5);
}

TEST_CASE("exhaustive refuses oversized spaces")
{
    std::mt19937_64 rng(8);
    const auto t = random_table(rng, 8, 8, 0.8);
    const LinkEvaluator eval(t, kFe);
    CHECK_THROWS_AS(solve_exhaustive(eval, SolverConfig{}), SearchSpaceTooLarge);
}

TEST_CASE("time limit returns an unproven incumbent")
{
    std::mt19937_64 rng(8);
    const auto t = random_table(rng, 12, 16, 0.9);
    const LinkEvaluator eval(t, kFe);
    auto cfg = SolverConfig{};
    cfg.time_limit = std::chrono::milliseconds(0);
    const auto a = solve_exact(eval, cfg);
    check_structure(a, 12);
    CHECK_FALSE(a.proven_optimal);
    CHECK(a.objective == doctest::Approx(objective(a.links(), eval, cfg.scale)).epsilon(1e-12));
}

TEST_CASE("adding a user never raises the optimum by more than its best free score")
{
    std::mt19937_64 rng(31);
    for (int i = 0; i < 60; ++i)
    {
        const std::size_t aps = 2 + rng() % 3;
        const auto big = random_table(rng, 4, aps, 0.4);
        GainTable small({{0, 0, 1}, {0, 0, 1}, {0, 0, 1}}, std::vector<PerWavelength<double>>(aps, {7.2, 4.5, 2.7, 2.7}), "sub");
        for (std::size_t u = 0; u < 3; ++u)
            for (std::size_t b = 0; b < 4; ++b)
                for (std::size_t a = 0; a < aps; ++a)
                    for (auto w : kWavelengths)
                        small.at(u, b, a, w) = big.at(u, b, a, w);
        const LinkEvaluator eb(big, kFe), es(small, kFe);
        const auto cfg = small_config(8);
        const double before = solve_exact(es, cfg).objective;
        const double after = solve_exact(eb, cfg).objective;
        const double newcomer = candidates(3, eb, cfg).front().free_sinr_db;
        CHECK(after <= before + newcomer + 1e-9);
    }
}

TEST_CASE("mirrored room B instance has a mirrored optimum")
{
    const std::vector<Vec3> users = {{0.5, 1.5, 1}, {1.5, 0.5, 1}, {2.5, 2.5, 1}};
    std::vector<Vec3> mirrored;
    for (const auto &p : users)
        mirrored.push_back({4.0 - p.x, 4.0 - p.y, p.z});
    const auto t = room_gains(RoomId::B, users);
    const auto m = room_gains(RoomId::B, mirrored);
    const LinkEvaluator et(t, kFe), em(m, kFe);
    const auto a = solve_exhaustive(et, SolverConfig{});
    const auto b = solve_exhaustive(em, SolverConfig{});
    CHECK(a.objective == doctest::Approx(b.objective).epsilon(1e-9));

    const std::size_t ap_map[] = {3, 2, 1, 0};
    std::vector<Link> mapped;
    for (const auto &l : a.links())
        mapped.push_back({ap_map[l.ap], (l.branch + 2) % 4, l.wavelength});
    CHECK(objective(mapped, em, ObjectiveScale::DbSum) == doctest::Approx(b.objective).epsilon(1e-9));
}

TEST_CASE("two users under one AP get different wavelengths")
{
    const auto t = room_gains(RoomId::B, {{0.75, 1.0, 1}, {1.25, 1.0, 1}});
    const LinkEvaluator eval(t, kFe);
    const auto a = solve_exhaustive(eval, SolverConfig{});
    check_structure(a, 2);
    CHECK(a.picks[0].link.ap == 0);
    CHECK(a.picks[1].link.ap == 0);
    CHECK(a.picks[0].link.wavelength != a.picks[1].link.wavelength);

    // Brute force over every feasible pair of positive-gain links.
    double best = kNegInfDb;
    for (std::size_t b0 = 0; b0 < 4; ++b0)
        for (std::size_t a0 = 0; a0 < 4; ++a0)
            for (auto w0 : kWavelengths)
                for (std::size_t b1 = 0; b1 < 4; ++b1)
                    for (std::size_t a1 = 0; a1 < 4; ++a1)
                        for (auto w1 : kWavelengths)
                        {
                            const std::vector<Link> l = {{a0, b0, w0}, {a1, b1, w1}};
                            if (is_feasible(l))
                                best = std::max(best, objective(l, eval, ObjectiveScale::DbSum));
                        }
    CHECK(a.objective == doctest::Approx(best).epsilon(1e-12));
}

TEST_CASE("solvers are deterministic")
{
    std::mt19937_64 rng(99);
    const auto t = random_table(rng, 6, 6, 0.4);
    const LinkEvaluator eval(t, kFe);
    CHECK(solve_exact(eval, SolverConfig{}).links() == solve_exact(eval, SolverConfig{}).links());
    CHECK(solve_greedy(eval, SolverConfig{}).links() == solve_greedy(eval, SolverConfig{}).links());
}

TEST_CASE("assignment CSV")
{
    Assignment a;
    a.picks = {{0, {2, 3, Wavelength::Yellow}, 20.0}, {1, {0, 0, Wavelength::Red}, 18.0}};
    std::ostringstream os;
    write_assignment_csv(os, a);
    CHECK(os.str() == "user,ap,branch,wavelength\n1,3,4,Yellow\n2,1,1,Red\n");
}
