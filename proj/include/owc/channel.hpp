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

#include "owc/scene.hpp"

#include <iosfwd>
#include <span>
#include <string>
#include <vector>

namespace owc
{
    inline constexpr double kSpeedOfLight = 2.998e8; // m/s

    struct ChannelOptions
    {
        int max_order = 2;                  // reflections: 0 (LOS only), 1 or 2
        double bin_width_s = 0.05e-9;       // 20 GHz sampling
        double f_cap_hz = 10e9;             // reported when no -3 dB crossing exists below it
        double freq_resolution_hz = 10e6;   // transform grid spacing upper bound
    };

    // Received optical power per unit transmitted power, binned in time.
    // Bin k covers time origin + k * bin_width.
    class ImpulseResponse
    {
    public:
        explicit ImpulseResponse(double bin_width_s, double origin_s = 0.0, std::vector<double> bins = {});

        double bin_width() const { return bin_width_; }
        double origin() const { return origin_; }
        std::span<const double> bins() const { return bins_; }
        double time(std::size_t k) const { return origin_ + static_cast<double>(k) * bin_width_; }

        // Adds a contribution at the bin nearest to the given arrival time.
        void add(double delay_s, double gain);

        // Two columns: time_s, gain_per_bin.
        void write_csv(std::ostream &os) const;

        bool operator==(const ImpulseResponse &) const = default;

    private:
        double bin_width_;
        double origin_;
        std::vector<double> bins_;
    };

    struct LosContribution
    {
        double gain = 0.0;    // unitless
        double delay_s = 0.0; // d / c
    };

    // Lambertian line-of-sight gain (m+1)/(2 pi d^2) A cos^m(phi) cos(theta), zero outside the
    // branch FOV or behind the emitter. Throws when the AP and receiver coincide.
    LosContribution los_contribution(const AccessPointSpec &ap, const Vec3 &rx, const BranchSpec &branch);

    // LOS plus element chains up to the requested bounce order, all four wavelengths at once.
    PerWavelength<ImpulseResponse> impulse_responses(const Scene &scene, const AccessPointSpec &ap, const Vec3 &rx,
                                                     const BranchSpec &branch, const ChannelOptions &opts);

    ImpulseResponse impulse_response(const Scene &scene, const AccessPointSpec &ap, const Vec3 &rx,
                                     const BranchSpec &branch, Wavelength w, const ChannelOptions &opts);

    double dc_gain(const ImpulseResponse &ir);

    struct BandwidthEstimate
    {
        double hz = 0.0;
        bool capped = false; // no -3 dB crossing below the cap
    };

    // Lowest frequency where |H(f)|^2 / |H(0)|^2 = 0.5, from a zero-padded FFT with spacing at most
    // resolution_hz and linear interpolation between grid points. Throws on zero DC gain.
    BandwidthEstimate bandwidth_3db(const ImpulseResponse &ir, double f_cap_hz = 10e9, double resolution_hz = 10e6);

    // RMS delay spread with squared-power weighting. Throws on zero DC gain.
    double rms_delay_spread(const ImpulseResponse &ir);

    struct ChannelMetrics
    {
        double dc_gain = 0.0;
        double bandwidth_hz = 0.0;
        double rms_delay_s = 0.0;
        bool los_blocked = true;
        bool bandwidth_capped = false;

        bool operator==(const ChannelMetrics &) const = default;
    };

    // Metrics for one response. A zero-gain response reports the cap bandwidth and zero spread.
    ChannelMetrics channel_metrics(const ImpulseResponse &ir, bool los_blocked, const ChannelOptions &opts);

    // Dense [user][branch][AP][wavelength] table of channel metrics plus the AP powers needed to
    // turn gains into photocurrents.
    class GainTable
    {
    public:
        GainTable() = default;
        GainTable(std::vector<Vec3> users, std::vector<PerWavelength<double>> ap_power, std::string fingerprint);

        std::size_t num_users() const { return users_.size(); }
        std::size_t num_aps() const { return ap_power_.size(); }
        static constexpr std::size_t num_branches() { return kNumBranches; }

        const std::vector<Vec3> &users() const { return users_; }
        const std::string &fingerprint() const { return fingerprint_; }

        // Optical power radiated by an AP on one wavelength (W).
        double tx_power(std::size_t ap, Wavelength w) const { return ap_power_[ap][index(w)]; }

        const ChannelMetrics &at(std::size_t user, std::size_t branch, std::size_t ap, Wavelength w) const
        {
            return cells_[offset(user, branch, ap, w)];
        }
        ChannelMetrics &at(std::size_t user, std::size_t branch, std::size_t ap, Wavelength w)
        {
            return cells_[offset(user, branch, ap, w)];
        }

        bool operator==(const GainTable &) const = default;

        // Flat CSV keyed by (user, branch, ap, wavelength), indices 1-based, full double precision.
        void write_csv(std::ostream &os) const;
        static GainTable read_csv(std::istream &is);

    private:
        std::size_t offset(std::size_t user, std::size_t branch, std::size_t ap, Wavelength w) const
        {
            return ((user * kNumBranches + branch) * num_aps() + ap) * kNumWavelengths + index(w);
        }

        std::vector<Vec3> users_;
        std::vector<PerWavelength<double>> ap_power_;
        std::string fingerprint_;
        std::vector<ChannelMetrics> cells_;
    };

    // OpenMP kernel over (user, branch, AP). threads <= 0 uses the OpenMP default.
    // Results do not depend on the thread count.
    GainTable gain_matrix(const Scene &scene, std::span<const Vec3> users, const ChannelOptions &opts, int threads = 0);

    // Single-threaded reference: one impulse_responses() call per cell, nothing shared between cells.
    GainTable gain_matrix_serial(const Scene &scene, std::span<const Vec3> users, const ChannelOptions &opts);
}
