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


#include "owc/scene.hpp"

#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <map>

using namespace owc;

namespace
{
    bool mentions(const std::vector<std::string> &issues, std::string_view text)
    {
        return std::any_of(issues.begin(), issues.end(), [&](const std::string &s) { return s.find(text) != std::string::npos; });
    }

    double surface_area(const RoomSpec &r, SurfaceId s)
    {
        switch (s)
        {
        case SurfaceId::Floor:
        case SurfaceId::Ceiling:
            return r.width * r.length;
        case SurfaceId::WallX0:
        case SurfaceId::WallX1:
            return r.length * r.height;
        default:
            return r.width * r.height;
        }
    }
}

TEST_CASE("standard rooms")
{
    const auto a = standard_room(RoomId::A);
    CHECK(a.width == 4.0);
    CHECK(a.length == 8.0);
    CHECK(a.height == 3.0);
    REQUIRE(a.aps.size() == 8);
    CHECK(a.aps[0].position == Vec3{1, 1, 3});

    const auto b = standard_room(RoomId::B);
    REQUIRE(b.aps.size() == 4);
    const std::vector<Vec3> expected = {{1, 1, 3}, {1, 3, 3}, {3, 1, 3}, {3, 3, 3}};
    for (std::size_t i = 0; i < 4; ++i)
        CHECK(b.aps[i].position == expected[i]);

    const auto c = standard_room(RoomId::C);
    CHECK(c.width == 2.0);
    CHECK(c.length == 8.0);
    REQUIRE(c.aps.size() == 4);
    for (const auto &ap : c.aps)
        CHECK(ap.position.x == 1.0);

    for (auto id : {RoomId::A, RoomId::B, RoomId::C})
    {
        const auto r = standard_room(id);
        CHECK(check_room(r).empty());
        CHECK(r.reflectivity(SurfaceId::Floor, Wavelength::Red) == 0.3);
        CHECK(r.reflectivity(SurfaceId::WallY1, Wavelength::Blue) == 0.8);
        CHECK(r.aps[0].power(Wavelength::Red) == doctest::Approx(7.2));
    }
}

TEST_CASE("room ids parse")
{
    CHECK(parse_room_id("A") == RoomId::A);
    CHECK(parse_room_id("c") == RoomId::C);
    CHECK_THROWS_AS(parse_room_id("D"), std::invalid_argument);
}

TEST_CASE("branch normals")
{
    const auto z = branch_normal(0, 90);
    CHECK(z.x == doctest::Approx(0).epsilon(1e-12));
    CHECK(z.y == doctest::Approx(0).epsilon(1e-12));
    CHECK(z.z == doctest::Approx(1));

    const auto n45 = branch_normal(45, 70);
    CHECK(n45.x == doctest::Approx(0.24185).epsilon(1e-4));
    CHECK(n45.y == doctest::Approx(0.24185).epsilon(1e-4));
    CHECK(n45.z == doctest::Approx(0.93969).epsilon(1e-4));

    const auto n315 = branch_normal(315, 70);
    CHECK(n315.x == doctest::Approx(0.24185).epsilon(1e-4));
    CHECK(n315.y == doctest::Approx(-0.24185).epsilon(1e-4));
    CHECK(n315.z == doctest::Approx(0.93969).epsilon(1e-4));

    CHECK_THROWS_AS(branch_normal(360, 70), std::invalid_argument);
    CHECK_THROWS_AS(branch_normal(-1, 70), std::invalid_argument);
    CHECK_THROWS_AS(branch_normal(0, 0), std::invalid_argument);
    CHECK_THROWS_AS(branch_normal(0, 91), std::invalid_argument);
}

TEST_CASE("branch normals have unit length")
{
    for (double az = 0; az < 360; az += 7.5)
        for (double el = 0.5; el <= 90; el += 4.5)
            CHECK(std::abs(norm(branch_normal(az, el)) - 1.0) < 1e-9);
}

TEST_CASE("default branches are 90 degree rotations of each other")
{
    const auto br = default_branches();
    for (std::size_t i = 0; i < kNumBranches; ++i)
    {
        const auto n = br[i].normal();
        const auto next = br[(i + 1) % kNumBranches].normal();
        const Vec3 rotated{-n.y, n.x, n.z};
        CHECK(norm(rotated - next) < 1e-12);
        CHECK(br[i].fov_deg == 25.0);
        CHECK(br[i].area_m2 == 20e-6);
    }
}

TEST_CASE("surface tiling")
{
    const auto b = standard_room(RoomId::B);
    for (auto wall : {SurfaceId::WallX0, SurfaceId::WallX1, SurfaceId::WallY0, SurfaceId::WallY1})
    {
        const auto tiles = tile_surface(b, wall, 0.5);
        CHECK(tiles.size() == 48);
        for (const auto &t : tiles)
            CHECK(t.area == doctest::Approx(0.25));
    }

    const auto a = standard_room(RoomId::A);
    CHECK(tile_surface(a, SurfaceId::Ceiling, 1.0).size() == 32);
    CHECK_THROWS(discretize(a, 0.0, 0.5));
    CHECK_THROWS(discretize(a, 0.25, -1.0));
    CHECK_THROWS(discretize(a, 3.5, 0.5));
}

TEST_CASE("tile normals point into the room")
{
    const auto a = standard_room(RoomId::A);
    const Vec3 centre{a.width / 2, a.length / 2, a.height / 2};
    for (auto s : kSurfaces)
        for (const auto &t : tile_surface(a, s, 0.5))
        {
            CHECK(dot(centre - t.center, t.normal) > 0.0);
            CHECK(a.contains(t.center));
        }
}

TEST_CASE("element areas tile every surface")
{
    for (auto id : {RoomId::A, RoomId::B, RoomId::C})
        for (double dx : {0.25, 0.3, 0.5, 0.7, 1.0})
        {
            const auto r = standard_room(id);
            for (auto s : kSurfaces)
            {
                double total = 0.0;
                for (const auto &t : tile_surface(r, s, dx))
                    total += t.area;
                CHECK(std::abs(total - surface_area(r, s)) <= 1e-3 * surface_area(r, s));
            }
        }
}

TEST_CASE("discretize is deterministic")
{
    const auto r = standard_room(RoomId::C);
    const Scene s1 = discretize(r, 0.25, 0.5);
    const Scene s2 = discretize(r, 0.25, 0.5);
    REQUIRE(s1.first_order_elements().size() == s2.first_order_elements().size());
    for (std::size_t i = 0; i < s1.first_order_elements().size(); ++i)
    {
        const auto &e1 = s1.first_order_elements()[i];
        const auto &e2 = s2.first_order_elements()[i];
        CHECK(e1.center == e2.center);
        CHECK(e1.area == e2.area);
        CHECK(e1.surface == e2.surface);
    }
    CHECK(s1.fingerprint() == s2.fingerprint());
    CHECK(s1.fingerprint() != discretize(r, 0.25, 0.25).fingerprint());
    CHECK(s1.second_order_elements().size() == 2 * (2 * 8 + 8 * 3 + 2 * 3) * 4);
}

TEST_CASE("validation reports every problem")
{
    CHECK_NOTHROW(validate(standard_room(RoomId::A)));

    auto bad_ap = standard_room(RoomId::A);
    bad_ap.aps[0].position = {5, 1, 3};
    auto issues = check_room(bad_ap);
    CHECK(mentions(issues, "AP outside footprint"));

    auto bad_rho = standard_room(RoomId::A);
    bad_rho.surfaces[index(SurfaceId::WallX0)].reflectivity[index(Wavelength::Red)] = 1.2;
    CHECK(mentions(check_room(bad_rho), "reflectivity out of range"));

    auto both = bad_ap;
    both.surfaces = bad_rho.surfaces;
    both.height = -3.0;
    try
    {
        validate(both);
        FAIL("validate accepted an invalid room");
    }
    catch (const ValidationError &e)
    {
        CHECK(mentions(e.issues(), "AP outside footprint"));
        CHECK(mentions(e.issues(), "reflectivity out of range"));
        CHECK(mentions(e.issues(), "nonpositive dimension"));
    }
}
