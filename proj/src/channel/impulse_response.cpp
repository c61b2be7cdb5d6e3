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

#include "paths.hpp"

#include <cmath>
#include <ostream>
#include <stdexcept>

namespace owc
{
    ImpulseResponse::ImpulseResponse(double bin_width_s, double origin_s, std::vector<double> bins)
        : bin_width_(bin_width_s), origin_(origin_s), bins_(std::move(bins))
    {
        if (!(bin_width_s > 0.0))
            throw std::invalid_argument("Impulse response bin width must be positive.");
        for (double b : bins_)
            if (!(b >= 0.0))
                throw std::invalid_argument("Impulse response bins must be non-negative.");
    }

    void ImpulseResponse::add(double delay_s, double gain)
    {
        if (!(gain >= 0.0))
            throw std::invalid_argument("Impulse response contributions must be non-negative.");
        const double pos = (delay_s - origin_) / bin_width_;
        if (pos < -0.5)
            throw std::invalid_argument("Arrival time precedes the response origin.");
        const auto k = static_cast<std::size_t>(std::llround(pos));
        if (k >= bins_.size())
            bins_.resize(k + 1, 0.0);
        bins_[k] += gain;
    }

    void ImpulseResponse::write_csv(std::ostream &os) const
    {
        char buf[64];
        os << "time_s,gain_per_bin\n";
        for (std::size_t k = 0; k < bins_.size(); ++k)
        {
            std::snprintf(buf, sizeof(buf), "%.17g,%.17g\n", time(k), bins_[k]);
            os << buf;
        }
    }

    double dc_gain(const ImpulseResponse &ir)
    {
        double sum = 0.0;
        for (double b : ir.bins())
            sum += b;
        return sum;
    }
}

namespace owc::detail
{
    namespace
    {
        // Power fraction a Lambertian (order 1) element re-emits toward a receiver of the given area
        // and normal, including the receiver's own cosine. Zero when either side faces away.
        inline double diffuse_transfer(const Vec3 &from, const Vec3 &from_normal, const Vec3 &to,
                                       const Vec3 &to_normal, double to_area, double &distance)
        {
            const Vec3 v = to - from;
            const double d2 = dot(v, v);
            distance = std::sqrt(d2);
            const double cos_out = dot(from_normal, v) / distance;
            const double cos_in = -dot(to_normal, v) / distance;
            if (cos_out <= 0.0 || cos_in <= 0.0)
                return 0.0;
            return cos_out * cos_in * to_area / (pi * d2);
        }
    }

    Illumination illuminate(const AccessPointSpec &ap, std::span<const SurfaceElement> elements)
    {
        Illumination lit;
        lit.power.resize(elements.size(), 0.0);
        lit.distance.resize(elements.size(), 0.0);
        const double m = ap.lambertian_order;
        for (std::size_t i = 0; i < elements.size(); ++i)
        {
            const auto &e = elements[i];
            const Vec3 v = e.center - ap.position;
            const double d2 = dot(v, v);
            const double d = std::sqrt(d2);
            lit.distance[i] = d;
            const double cos_phi = dot(ap.normal, v) / d;
            const double cos_in = -dot(e.normal, v) / d;
            if (cos_phi <= 0.0 || cos_in <= 0.0)
                continue;
            lit.power[i] = (m + 1.0) / (2.0 * pi * d2) * std::pow(cos_phi, m) * cos_in * e.area;
        }
        return lit;
    }

    ApIllumination illuminate(const Scene &scene, const AccessPointSpec &ap, int max_order)
    {
        ApIllumination lit;
        if (max_order >= 1)
            lit.first = illuminate(ap, scene.first_order_elements());
        if (max_order >= 2)
            lit.second = illuminate(ap, scene.second_order_elements());
        return lit;
    }

    bool accumulate_paths(const Scene &scene, const AccessPointSpec &ap, const ApIllumination &lit,
                          const Vec3 &rx, const BranchSpec &branch, const ChannelOptions &opts,
                          PerWavelength<ImpulseResponse> &out)
    {
        for (auto &ir : out)
            ir = ImpulseResponse(opts.bin_width_s);

        const RoomSpec &room = scene.room();
        const Vec3 rx_normal = branch.normal();
        const double cos_fov = std::cos(deg2rad(branch.fov_deg));

        const auto los = los_contribution(ap, rx, branch);
        for (auto &ir : out)
            ir.add(los.delay_s, los.gain);
        const bool blocked = los.gain == 0.0;

        // Capture by the branch of light re-emitted from an element, FOV gated.
        auto to_receiver = [&](const SurfaceElement &e, double &distance)
        {
            const double g = diffuse_transfer(e.center, e.normal, rx, rx_normal, branch.area_m2, distance);
            if (g == 0.0)
                return 0.0;
            const double cos_in = -dot(rx_normal, rx - e.center) / distance;
            return cos_in >= cos_fov ? g : 0.0;
        };

        if (opts.max_order >= 1)
        {
            const auto elements = scene.first_order_elements();
            for (std::size_t i = 0; i < elements.size(); ++i)
            {
                const double p = lit.first.power[i];
                if (p == 0.0)
                    continue;
                double d_rx = 0.0;
                const double g = to_receiver(elements[i], d_rx);
                if (g == 0.0)
                    continue;
                const double delay = (lit.first.distance[i] + d_rx) / kSpeedOfLight;
                const double chain = p * g;
                for (auto w : kWavelengths)
                    out[index(w)].add(delay, chain * room.reflectivity(elements[i].surface, w));
            }
        }

        if (opts.max_order >= 2)
        {
            const auto elements = scene.second_order_elements();
            for (std::size_t j = 0; j < elements.size(); ++j)
            {
                const auto &last = elements[j];
                double d_rx = 0.0;
                const double g_rx = to_receiver(last, d_rx);
                if (g_rx == 0.0)
                    continue;
                for (std::size_t i = 0; i < elements.size(); ++i)
                {
                    const auto &first = elements[i];
                    const double p = lit.second.power[i];
                    if (p == 0.0 || first.surface == last.surface)
                        continue;
                    double d_mid = 0.0;
                    const double k = diffuse_transfer(first.center, first.normal, last.center, last.normal, last.area, d_mid);
                    if (k == 0.0)
                        continue;
                    const double delay = (lit.second.distance[i] + d_mid + d_rx) / kSpeedOfLight;
                    const double chain = p * k * g_rx;
                    for (auto w : kWavelengths)
                        out[index(w)].add(delay, chain * room.reflectivity(first.surface, w) *
                                                     room.reflectivity(last.surface, w));
                }
            }
        }
        return blocked;
    }

    void check_options(const ChannelOptions &opts)
    {
        if (opts.max_order < 0 || opts.max_order > 2)
            throw std::invalid_argument("Bounce order must be 0, 1 or 2.");
        if (!(opts.bin_width_s > 0.0))
            throw std::invalid_argument("Time bin width must be positive.");
        if (!(opts.f_cap_hz > 0.0) || !(opts.freq_resolution_hz > 0.0))
            throw std::invalid_argument("Frequency cap and resolution must be positive.");
    }
}

namespace owc
{
    PerWavelength<ImpulseResponse> impulse_responses(const Scene &scene, const AccessPointSpec &ap, const Vec3 &rx,
                                                     const BranchSpec &branch, const ChannelOptions &opts)
    {
        detail::check_options(opts);
        if (!scene.room().contains(rx))
            throw std::invalid_argument("Receiver lies outside the room.");
        const auto lit = detail::illuminate(scene, ap, opts.max_order);
        PerWavelength<ImpulseResponse> out{ImpulseResponse(opts.bin_width_s), ImpulseResponse(opts.bin_width_s),
                                           ImpulseResponse(opts.bin_width_s), ImpulseResponse(opts.bin_width_s)};
        detail::accumulate_paths(scene, ap, lit, rx, branch, opts, out);
        return out;
    }

    ImpulseResponse impulse_response(const Scene &scene, const AccessPointSpec &ap, const Vec3 &rx,
                                     const BranchSpec &branch, Wavelength w, const ChannelOptions &opts)
    {
        return impulse_responses(scene, ap, rx, branch, opts)[index(w)];
    }
}
