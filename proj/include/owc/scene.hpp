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

#include "owc/geometry.hpp"
#include "owc/wavelength.hpp"

#include <array>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace owc
{
    // The six planes of a rectangular room. Walls are named by the coordinate they sit on.
    enum class SurfaceId : unsigned char
    {
        Floor = 0,   // z = 0
        Ceiling = 1, // z = height
        WallX0 = 2,  // x = 0
        WallX1 = 3,  // x = width
        WallY0 = 4,  // y = 0
        WallY1 = 5   // y = length
    };

    inline constexpr std::size_t kNumSurfaces = 6;

    inline constexpr std::array<SurfaceId, kNumSurfaces> kSurfaces = {
        SurfaceId::Floor, SurfaceId::Ceiling, SurfaceId::WallX0,
        SurfaceId::WallX1, SurfaceId::WallY0, SurfaceId::WallY1};

    constexpr std::size_t index(SurfaceId s) { return static_cast<std::size_t>(s); }

    std::string_view name(SurfaceId s);

    struct SurfaceSpec
    {
        SurfaceId id = SurfaceId::Floor;
        PerWavelength<double> reflectivity{}; // 0..1 per wavelength
    };

    // One patch of a discretized surface. Normal points into the room.
    struct SurfaceElement
    {
        Vec3 center;
        Vec3 normal;
        double area = 0.0; // m^2
        SurfaceId surface = SurfaceId::Floor;
    };

    // Ceiling luminaire built from identical RYGB laser-diode units.
    struct AccessPointSpec
    {
        Vec3 position;
        Vec3 normal{0.0, 0.0, -1.0};
        double lambertian_order = 1.0;
        PerWavelength<double> ld_power{0.8, 0.5, 0.3, 0.3}; // W per LD unit, sums to 1.9 W
        int ld_count = 9;

        // Optical power radiated on one wavelength by the whole AP.
        double power(Wavelength w) const { return ld_power[index(w)] * ld_count; }
    };

    // One photodetector of the angle-diversity receiver.
    // Elevation is measured from the horizontal plane, so 90 deg points at the zenith.
    struct BranchSpec
    {
        double azimuth_deg = 0.0;
        double elevation_deg = 90.0;
        double fov_deg = 25.0; // half-angle
        double area_m2 = 20e-6;

        Vec3 normal() const;
    };

    inline constexpr std::size_t kNumBranches = 4;

    // Four 70 deg elevation branches at azimuths 45/135/225/315 deg, 25 deg FOV, 20 mm^2.
    std::array<BranchSpec, kNumBranches> default_branches();

    struct RoomSpec
    {
        std::string name;
        double width = 0.0;  // x extent
        double length = 0.0; // y extent
        double height = 0.0; // z extent
        std::array<SurfaceSpec, kNumSurfaces> surfaces{};
        std::vector<AccessPointSpec> aps;

        const SurfaceSpec &surface(SurfaceId s) const { return surfaces[index(s)]; }
        double reflectivity(SurfaceId s, Wavelength w) const { return surfaces[index(s)].reflectivity[index(w)]; }

        // Inclusive bounds test against the room box.
        bool contains(const Vec3 &p) const;
    };

    enum class RoomId : unsigned char
    {
        A,
        B,
        C
    };

    RoomId parse_room_id(std::string_view text);
    std::string_view name(RoomId id);

    // Walls/ceiling rho = 0.8 and floor rho = 0.3 on every wavelength.
    std::array<SurfaceSpec, kNumSurfaces> default_surfaces();

    // Rooms A (4x8x3 m, 8 APs), B (4x4x3 m, 4 APs) and C (2x8x3 m, 4 APs).
    RoomSpec standard_room(RoomId id);

    // Unit normal (cos El cos Az, cos El sin Az, sin El). Throws std::invalid_argument
    // when 0 <= az < 360 or 0 < el <= 90 does not hold.
    Vec3 branch_normal(double azimuth_deg, double elevation_deg);

    // Every invariant violation of a room description; empty when the room is valid.
    std::vector<std::string> check_room(const RoomSpec &room);

    class ValidationError : public std::invalid_argument
    {
    public:
        explicit ValidationError(std::vector<std::string> issues);
        const std::vector<std::string> &issues() const { return issues_; }

    private:
        std::vector<std::string> issues_;
    };

    struct Discretization
    {
        double first_order_dx = 0.25;  // m
        double second_order_dx = 0.5;  // m
    };

    // Square tiling of one room surface. Edge elements shrink when dx does not divide the side.
    std::vector<SurfaceElement> tile_surface(const RoomSpec &room, SurfaceId surface, double dx);

    // Validated, discretized room. Immutable once built and safe to share between threads.
    class Scene
    {
    public:
        const RoomSpec &room() const { return room_; }
        const Discretization &discretization() const { return disc_; }
        std::span<const SurfaceElement> first_order_elements() const { return first_; }
        std::span<const SurfaceElement> second_order_elements() const { return second_; }
        std::span<const AccessPointSpec> aps() const { return room_.aps; }

        // Stable hexadecimal digest of geometry, optics and discretization.
        const std::string &fingerprint() const { return fingerprint_; }

    private:
        friend Scene discretize(const RoomSpec &, double, double);
        Scene() = default;

        RoomSpec room_;
        Discretization disc_;
        std::vector<SurfaceElement> first_;
        std::vector<SurfaceElement> second_;
        std::string fingerprint_;
    };

    // Validates and tiles the room; throws ValidationError listing every problem found.
    Scene discretize(const RoomSpec &room, double first_order_dx, double second_order_dx);

    // discretize() at the default element sizes.
    Scene validate(const RoomSpec &room);
}
