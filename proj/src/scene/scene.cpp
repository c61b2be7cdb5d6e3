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

#include <algorithm>
#include <cctype>
#include <cmath>
#include <cstdint>
#include <cstdio>
#include <sstream>

namespace owc
{
    std::optional<Wavelength> parse_wavelength(std::string_view text)
    {
        std::string s(text);
        std::transform(s.begin(), s.end(), s.begin(), [](unsigned char c)
                       { return static_cast<char>(std::tolower(c)); });
        if (s == "red" || s == "r")
            return Wavelength::Red;
        if (s == "yellow" || s == "y")
            return Wavelength::Yellow;
        if (s == "green" || s == "g")
            return Wavelength::Green;
        if (s == "blue" || s == "b")
            return Wavelength::Blue;
        return std::nullopt;
    }

    std::string_view name(SurfaceId s)
    {
        switch (s)
        {
        case SurfaceId::Floor:
            return "floor";
        case SurfaceId::Ceiling:
            return "ceiling";
        case SurfaceId::WallX0:
            return "wall_x0";
        case SurfaceId::WallX1:
            return "wall_x1";
        case SurfaceId::WallY0:
            return "wall_y0";
        case SurfaceId::WallY1:
            return "wall_y1";
        }
        return "?";
    }

    Vec3 branch_normal(double azimuth_deg, double elevation_deg)
    {
        if (!(azimuth_deg >= 0.0 && azimuth_deg < 360.0))
            throw std::invalid_argument("Branch azimuth must lie in [0, 360) degrees.");
        if (!(elevation_deg > 0.0 && elevation_deg <= 90.0))
            throw std::invalid_argument("Branch elevation must lie in (0, 90] degrees.");

        const double az = deg2rad(azimuth_deg), el = deg2rad(elevation_deg);
        return {std::cos(el) * std::cos(az), std::cos(el) * std::sin(az), std::sin(el)};
    }

    Vec3 BranchSpec::normal() const { return branch_normal(azimuth_deg, elevation_deg); }

    std::array<BranchSpec, kNumBranches> default_branches()
    {
        return {BranchSpec{45.0, 70.0, 25.0, 20e-6},
                BranchSpec{135.0, 70.0, 25.0, 20e-6},
                BranchSpec{225.0, 70.0, 25.0, 20e-6},
                BranchSpec{315.0, 70.0, 25.0, 20e-6}};
    }

    bool RoomSpec::contains(const Vec3 &p) const
    {
        return p.x >= 0.0 && p.x <= width && p.y >= 0.0 && p.y <= length && p.z >= 0.0 && p.z <= height;
    }

    RoomId parse_room_id(std::string_view text)
    {
        if (text == "A" || text == "a")
            return RoomId::A;
        if (text == "B" || text == "b")
            return RoomId::B;
        if (text == "C" || text == "c")
            return RoomId::C;
        throw std::invalid_argument("Unknown room preset '" + std::string(text) + "' (expected A, B or C).");
    }

    std::string_view name(RoomId id)
    {
        switch (id)
        {
        case RoomId::A:
            return "A";
        case RoomId::B:
            return "B";
        case RoomId::C:
            return "C";
        }
        return "?";
    }

    std::array<SurfaceSpec, kNumSurfaces> default_surfaces()
    {
        std::array<SurfaceSpec, kNumSurfaces> out{};
        for (auto s : kSurfaces)
        {
            const double rho = (s == SurfaceId::Floor) ? 0.3 : 0.8;
            out[index(s)] = SurfaceSpec{s, {rho, rho, rho, rho}};
        }
        return out;
    }

    RoomSpec standard_room(RoomId id)
    {
        RoomSpec room;
        room.name = "Room " + std::string(name(id));
        room.height = 3.0;
        room.surfaces = default_surfaces();

        std::vector<std::pair<double, double>> xy;
        switch (id)
        {
        case RoomId::A:
            room.width = 4.0, room.length = 8.0;
            xy = {{1, 1}, {1, 3}, {1, 5}, {1, 7}, {3, 1}, {3, 3}, {3, 5}, {3, 7}};
            break;
        case RoomId::B:
            room.width = 4.0, room.length = 4.0;
            xy = {{1, 1}, {1, 3}, {3, 1}, {3, 3}};
            break;
        case RoomId::C:
            room.width = 2.0, room.length = 8.0;
            xy = {{1, 1}, {1, 3}, {1, 5}, {1, 7}};
            break;
        }
        for (auto [x, y] : xy)
        {
            AccessPointSpec ap;
            ap.position = {x, y, room.height};
            room.aps.push_back(ap);
        }
        return room;
    }

    namespace
    {
        std::string fmt_vec(const Vec3 &v)
        {
            char buf[96];
            std::snprintf(buf, sizeof(buf), "(%g, %g, %g)", v.x, v.y, v.z);
            return buf;
        }

        void check_dx(double dx, const char *label, const RoomSpec &room, std::vector<std::string> &issues)
        {
            const double min_dim = std::min({room.width, room.length, room.height});
            if (!(dx > 0.0) || !std::isfinite(dx))
                issues.push_back(std::string(label) + " element size must be positive");
            else if (min_dim > 0.0 && dx > min_dim)
                issues.push_back(std::string(label) + " element size exceeds the smallest room dimension");
        }

        // FNV-1a, 64 bit
        std::uint64_t fnv1a(std::string_view s)
        {
            std::uint64_t h = 1469598103934665603ull;
            for (unsigned char c : s)
            {
                h ^= c;
                h *= 1099511628211ull;
            }
            return h;
        }

        std::string make_fingerprint(const RoomSpec &room, const Discretization &d)
        {
            std::ostringstream os;
            os.precision(17);
            os << room.width << ' ' << room.length << ' ' << room.height << ';';
            for (const auto &s : room.surfaces)
                for (double r : s.reflectivity)
                    os << r << ' ';
            os << ';';
            for (const auto &ap : room.aps)
            {
                os << ap.position.x << ' ' << ap.position.y << ' ' << ap.position.z << ' '
                   << ap.normal.x << ' ' << ap.normal.y << ' ' << ap.normal.z << ' '
                   << ap.lambertian_order << ' ' << ap.ld_count;
                for (double p : ap.ld_power)
                    os << ' ' << p;
                os << ';';
            }
            os << d.first_order_dx << ' ' << d.second_order_dx;
            char buf[17];
            std::snprintf(buf, sizeof(buf), "%016llx", static_cast<unsigned long long>(fnv1a(os.str())));
            return buf;
        }
    }

    std::vector<std::string> check_room(const RoomSpec &room)
    {
        std::vector<std::string> issues;

        const auto positive = [](double v) { return v > 0.0 && std::isfinite(v); };
        const bool footprint_ok = positive(room.width) && positive(room.length);
        const bool dims_ok = footprint_ok && positive(room.height);
        if (!dims_ok)
            issues.push_back("nonpositive dimension: room must have positive finite width, length and height");

        for (std::size_t i = 0; i < kNumSurfaces; ++i)
        {
            const auto &s = room.surfaces[i];
            if (s.id != kSurfaces[i])
                issues.push_back("surface slot " + std::to_string(i) + " holds " + std::string(name(s.id)));
            for (auto w : kWavelengths)
            {
                const double r = s.reflectivity[index(w)];
                if (!(r >= 0.0 && r <= 1.0))
                    issues.push_back("reflectivity out of range: " + std::string(name(s.id)) + " " +
                                     std::string(name(w)) + " = " + std::to_string(r));
            }
        }

        if (room.aps.empty())
            issues.push_back("room has no access points");
        if (room.aps.size() > 64)
            issues.push_back("more than 64 access points are not supported");

        for (std::size_t i = 0; i < room.aps.size(); ++i)
        {
            const auto &ap = room.aps[i];
            const std::string tag = "AP " + std::to_string(i + 1) + " at " + fmt_vec(ap.position);
            if (!ap.position.is_finite())
            {
                issues.push_back(tag + " has a non-finite position");
                continue;
            }
            if (footprint_ok &&
                (ap.position.x < 0.0 || ap.position.x > room.width || ap.position.y < 0.0 || ap.position.y > room.length))
                issues.push_back(tag + ": AP outside footprint");
            if (positive(room.height) && std::abs(ap.position.z - room.height) > 1e-9)
                issues.push_back(tag + ": AP not on the ceiling plane");
            if (!ap.normal.is_finite() || std::abs(norm(ap.normal) - 1.0) > 1e-9)
                issues.push_back(tag + ": orientation normal is not a unit vector");
            if (!(ap.lambertian_order >= 1.0))
                issues.push_back(tag + ": Lambertian order must be >= 1");
            if (ap.ld_count < 1)
                issues.push_back(tag + ": LD count must be >= 1");
            for (auto w : kWavelengths)
                if (!(ap.ld_power[index(w)] > 0.0))
                    issues.push_back(tag + ": " + std::string(name(w)) + " power must be positive");
        }
        return issues;
    }

    namespace
    {
        std::string join(const std::vector<std::string> &issues)
        {
            std::string msg = "invalid room:";
            for (const auto &s : issues)
                msg += "\n  - " + s;
            return msg;
        }
    }

    ValidationError::ValidationError(std::vector<std::string> issues)
        : std::invalid_argument(join(issues)), issues_(std::move(issues))
    {
    }

    std::vector<SurfaceElement> tile_surface(const RoomSpec &room, SurfaceId surface, double dx)
    {
        if (!(dx > 0.0) || !std::isfinite(dx))
            throw std::invalid_argument("Element size must be positive.");

        const double W = room.width, L = room.length, H = room.height;

        // Side lengths along the two in-plane axes, and the map from (u, v) to a point.
        double U = 0.0, V = 0.0;
        Vec3 normal;
        auto point = [&](double u, double v) -> Vec3
        {
            switch (surface)
            {
            case SurfaceId::Floor:
                return {u, v, 0.0};
            case SurfaceId::Ceiling:
                return {u, v, H};
            case SurfaceId::WallX0:
                return {0.0, u, v};
            case SurfaceId::WallX1:
                return {W, u, v};
            case SurfaceId::WallY0:
                return {u, 0.0, v};
            case SurfaceId::WallY1:
                return {u, L, v};
            }
            return {};
        };
        switch (surface)
        {
        case SurfaceId::Floor:
            U = W, V = L, normal = {0, 0, 1};
            break;
        case SurfaceId::Ceiling:
            U = W, V = L, normal = {0, 0, -1};
            break;
        case SurfaceId::WallX0:
            U = L, V = H, normal = {1, 0, 0};
            break;
        case SurfaceId::WallX1:
            U = L, V = H, normal = {-1, 0, 0};
            break;
        case SurfaceId::WallY0:
            U = W, V = H, normal = {0, 1, 0};
            break;
        case SurfaceId::WallY1:
            U = W, V = H, normal = {0, -1, 0};
            break;
        }

        // Tolerate dx that divides a side up to rounding noise.
        const auto cells = [dx](double side)
        { return static_cast<std::size_t>(std::ceil(side / dx - 1e-9)); };
        const std::size_t nu = cells(U), nv = cells(V);

        std::vector<SurfaceElement> out;
        out.reserve(nu * nv);
        for (std::size_t i = 0; i < nu; ++i)
        {
            const double u0 = static_cast<double>(i) * dx, u1 = std::min(u0 + dx, U);
            for (std::size_t j = 0; j < nv; ++j)
            {
                const double v0 = static_cast<double>(j) * dx, v1 = std::min(v0 + dx, V);
                if (u1 - u0 <= 0.0 || v1 - v0 <= 0.0)
                    continue;
                out.push_back({point(0.5 * (u0 + u1), 0.5 * (v0 + v1)), normal, (u1 - u0) * (v1 - v0), surface});
            }
        }
        return out;
    }

    Scene discretize(const RoomSpec &room, double first_order_dx, double second_order_dx)
    {
        auto issues = check_room(room);
        check_dx(first_order_dx, "first-order", room, issues);
        check_dx(second_order_dx, "second-order", room, issues);
        if (!issues.empty())
            throw ValidationError(std::move(issues));

        Scene scene;
        scene.room_ = room;
        scene.disc_ = {first_order_dx, second_order_dx};
        for (auto s : kSurfaces)
        {
            auto a = tile_surface(room, s, first_order_dx);
            scene.first_.insert(scene.first_.end(), a.begin(), a.end());
            auto b = tile_surface(room, s, second_order_dx);
            scene.second_.insert(scene.second_.end(), b.begin(), b.end());
        }
        scene.fingerprint_ = make_fingerprint(room, scene.disc_);
        return scene;
    }

    Scene validate(const RoomSpec &room)
    {
        const Discretization d;
        return discretize(room, d.first_order_dx, d.second_order_dx);
    }
}
