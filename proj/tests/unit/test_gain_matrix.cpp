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


#include "owc/channel.hpp"

#include <doctest.h>

#include <cmath>
#include <sstream>

using namespace owc;

namespace
{
    void check_close(const ChannelMetrics &a, const ChannelMetrics &b, double rel)
    {
        CHECK(a.dc_gain == doctest::Approx(b.dc_gain).epsilon(rel));
        CHECK(a.bandwidth_hz == doctest::Approx(b.bandwidth_hz).epsilon(1e-6));
        CHECK(a.rms_delay_s == doctest::Approx(b.rms_delay_s).epsilon(1e-6));
        CHECK(a.los_blocked == b.los_blocked);
        CHECK(a.bandwidth_capped == b.bandwidth_capped);
    }
}

TEST_CASE("table cardinality")
{
    const Scene scene = validate(standard_room(RoomId::B));
    ChannelOptions o;
    o.max_order = 0;
    const std::vector<Vec3> users = {{0.5, 0.5, 1}};
    const auto t = gain_matrix(scene, users, o);
    CHECK(t.num_users() * t.num_branches() * t.num_aps() * kNumWavelengths == 64);
    std::ostringstream os;
    t.write_csv(os);
    std::size_t lines = 0;
    for (char ch : os.str())
        lines += ch == '\n';
    CHECK(lines == 64 + 2);
}

TEST_CASE("gains are equal across wavelengths with flat reflectivity")
{
    const Scene scene = validate(standard_room(RoomId::C));
    const std::vector<Vec3> users = {{0.5, 0.5, 1}, {1.5, 6.5, 1}};
    const auto t = gain_matrix(scene, users, ChannelOptions{});
    for (std::size_t u = 0; u < t.num_users(); ++u)
        for (std::size_t b = 0; b < t.num_branches(); ++b)
            for (std::size_t a = 0; a < t.num_aps(); ++a)
                for (auto w : kWavelengths)
                    CHECK(t.at(u, b, a, w) == t.at(u, b, a, Wavelength::Red));
}

TEST_CASE("wavelength-dependent reflectivity only changes reflected light")
{
    auto room = standard_room(RoomId::B);
    for (auto &s : room.surfaces)
        s.reflectivity[index(Wavelength::Blue)] = 0.1;
    const Scene scene = validate(room);
    const std::vector<Vec3> users = {{3.5, 3.5, 1}};
    const auto t = gain_matrix(scene, users, ChannelOptions{});
    bool lower_somewhere = false;
    for (std::size_t b = 0; b < 4; ++b)
        for (std::size_t a = 0; a < 4; ++a)
        {
            CHECK(t.at(0, b, a, Wavelength::Blue).dc_gain <= t.at(0, b, a, Wavelength::Red).dc_gain);
            lower_somewhere |= t.at(0, b, a, Wavelength::Blue).dc_gain < t.at(0, b, a, Wavelength::Red).dc_gain;
        }
    CHECK(lower_somewhere);
}

TEST_CASE("half-turn mirror symmetry in room B")
{
    const Scene scene = validate(standard_room(RoomId::B));
    const std::vector<Vec3> users = {{0.5, 1.5, 1}, {3.5, 2.5, 1}};
    const auto t = gain_matrix(scene, users, ChannelOptions{});
    const std::size_t ap_map[] = {3, 2, 1, 0};
    for (std::size_t b = 0; b < 4; ++b)
        for (std::size_t a = 0; a < 4; ++a)
            check_close(t.at(0, b, a, Wavelength::Red), t.at(1, (b + 2) % 4, ap_map[a], Wavelength::Red), 1e-9);
}

TEST_CASE("OpenMP kernel matches the serial reference")
{
    const Scene scene = validate(standard_room(RoomId::B));
    const std::vector<Vec3> users = {{0.5, 2.5, 1}, {2.5, 1.5, 1}, {3.5, 0.5, 1}};
    for (int order = 0; order <= 2; ++order)
    {
        ChannelOptions o;
        o.max_order = order;
        const auto serial = gain_matrix_serial(scene, users, o);
        const auto par = gain_matrix(scene, users, o, 4);
        CHECK(serial == par);
    }
}

TEST_CASE("results do not depend on the thread count")
{
    const Scene scene = validate(standard_room(RoomId::C));
    const std::vector<Vec3> users = {{0.5, 1.5, 1}, {1.5, 7.5, 1}, {0.5, 3.5, 1}};
    const auto one = gain_matrix(scene, users, ChannelOptions{}, 1);
    CHECK(one == gain_matrix(scene, users, ChannelOptions{}, 2));
    CHECK(one == gain_matrix(scene, users, ChannelOptions{}, 3));
    CHECK(one == gain_matrix(scene, users, ChannelOptions{}, 1));
}

TEST_CASE("metrics invariants hold across the table")
{
    const Scene scene = validate(standard_room(RoomId::A));
    const std::vector<Vec3> users = {{0.5, 6.5, 1}, {2.5, 1.5, 1}};
    const auto t = gain_matrix(scene, users, ChannelOptions{});
    for (std::size_t u = 0; u < t.num_users(); ++u)
        for (std::size_t b = 0; b < 4; ++b)
            for (std::size_t a = 0; a < t.num_aps(); ++a)
            {
                const auto &m = t.at(u, b, a, Wavelength::Green);
                CHECK(m.dc_gain >= 0.0);
                CHECK(m.bandwidth_hz > 0.0);
                CHECK(m.rms_delay_s >= 0.0);
            }
}

TEST_CASE("gain table CSV round trip")
{
    const Scene scene = validate(standard_room(RoomId::B));
    const std::vector<Vec3> users = {{0.5, 2.5, 1}, {3.5, 0.5, 1}};
    const auto t = gain_matrix(scene, users, ChannelOptions{});
    std::stringstream ss;
    t.write_csv(ss);
    const auto back = GainTable::read_csv(ss);
    CHECK(back == t);

    std::istringstream truncated(ss.str().substr(0, ss.str().size() / 2));
    CHECK_THROWS(GainTable::read_csv(truncated));
}

TEST_CASE("users outside the room are rejected")
{
    const Scene scene = validate(standard_room(RoomId::B));
    const std::vector<Vec3> users = {{9, 9, 1}};
    CHECK_THROWS(gain_matrix(scene, users, ChannelOptions{}));
    CHECK_THROWS(gain_matrix_serial(scene, users, ChannelOptions{}));
}
