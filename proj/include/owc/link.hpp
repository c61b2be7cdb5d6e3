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

#include "owc/channel.hpp"

#include <cmath>
#include <compare>
#include <cstdint>
#include <iosfwd>
#include <limits>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace owc
{
    inline constexpr double kElectronCharge = 1.602e-19; // C

    // OOK operating point for BER 1e-9 (Q = 6, 10 log10(36) = 15.56 dB).
    inline constexpr double kSinrThresholdDb = 15.6;

    inline constexpr double kNegInfDb = -std::numeric_limits<double>::infinity();

    struct ReceiverFrontEnd
    {
        PerWavelength<double> responsivity{0.4, 0.35, 0.3, 0.2}; // A/W
        double noise_density = 4.47e-12;                         // A/sqrt(Hz)
        double bandwidth_hz = 5e9;
        double crosstalk = 0.0; // linear leakage of other modulated wavelengths into the demultiplexer output
    };

    std::vector<std::string> check_front_end(const ReceiverFrontEnd &fe);

    double photocurrent(double gain, double tx_power_w, Wavelength w, const ReceiverFrontEnd &fe);

    // Shot plus preamplifier noise: 2 q I B + N0^2 B.
    double noise_variance(double total_current, double bandwidth_hz, const ReceiverFrontEnd &fe);

    // What one user receives on: the serving AP, the selected receiver branch, the carrier wavelength.
    // Indices are 0-based.
    struct Link
    {
        std::size_t ap = 0;
        std::size_t branch = 0;
        Wavelength wavelength = Wavelength::Red;

        auto operator<=>(const Link &) const = default;
    };

    // Photocurrent on a user's selected branch due to one (AP, wavelength) emission.
    struct LightTerm
    {
        std::size_t ap = 0;
        Wavelength wavelength = Wavelength::Red;
        double current = 0.0;
    };

    // Modulated light for this user, co-channel light from other serving APs, and everything else.
    struct LightClassification
    {
        LightTerm signal;
        std::vector<LightTerm> interference;
        std::vector<LightTerm> background;
    };

    // assignment[u] is user u's link; its size must match the table's user count.
    LightClassification classify_light(std::size_t user, std::span<const Link> assignment, const GainTable &table,
                                       const ReceiverFrontEnd &fe);

    // Bit a of entry w is set when AP a carries data on wavelength w.
    using ServingSets = PerWavelength<std::uint64_t>;

    ServingSets serving_sets(std::span<const Link> links);

    inline double to_db(double linear) { return linear > 0.0 ? 10.0 * std::log10(linear) : kNegInfDb; }

    // Precomputed photocurrents and noise for a gain table. The noise variance on a branch depends only
    // on the table, since every (AP, wavelength) emits at full power whether modulated or not.
    class LinkEvaluator
    {
    public:
        LinkEvaluator(const GainTable &table, const ReceiverFrontEnd &fe);

        const GainTable &table() const { return *table_; }
        const ReceiverFrontEnd &front_end() const { return fe_; }
        std::size_t num_users() const { return table_->num_users(); }
        std::size_t num_aps() const { return table_->num_aps(); }

        double current(std::size_t user, std::size_t branch, std::size_t ap, Wavelength w) const
        {
            return currents_[((user * kNumBranches + branch) * num_aps() + ap) * kNumWavelengths + index(w)];
        }
        double total_current(std::size_t user, std::size_t branch) const { return totals_[user * kNumBranches + branch]; }
        double noise_variance(std::size_t user, std::size_t branch) const { return sigma2_[user * kNumBranches + branch]; }

        // I_sig^2 / (sigma^2 + sum of co-channel I^2). Zero when the link carries no signal.
        double sinr_linear(std::size_t user, const Link &link, const ServingSets &serving) const;
        double interference_free_sinr(std::size_t user, const Link &link) const;

    private:
        const GainTable *table_;
        ReceiverFrontEnd fe_;
        std::vector<double> currents_;
        std::vector<double> totals_;
        std::vector<double> sigma2_;
    };

    // SINR in dB; kNegInfDb when the user's own link has zero gain.
    double sinr(std::size_t user, std::span<const Link> assignment, const GainTable &table, const ReceiverFrontEnd &fe);

    struct RatePolicy
    {
        double threshold_db = kSinrThresholdDb;
        double floor_db = 6.0;      // below this the link is unsupported even with FEC
        double ook_factor = 0.7;    // channel bandwidth ~ 0.7 x bit rate
        double fec_code_rate = 0.874;
    };

    struct DataRate
    {
        double rate_bps = 0.0;
        bool fec_engaged = false;
    };

    class UnsupportedLink : public std::runtime_error
    {
    public:
        using std::runtime_error::runtime_error;
    };

    // B / 0.7, scaled by the FEC code rate between the floor and the threshold.
    DataRate data_rate(double bandwidth_hz, double sinr_db, const RatePolicy &policy = {});

    struct LinkReport
    {
        std::size_t user = 0;
        Link link;
        double sinr_db = 0.0;
        double effective_sinr_db = 0.0; // raw SINR, or the threshold when FEC restores it
        double bandwidth_hz = 0.0;
        bool bandwidth_capped = false;
        double rate_bps = 0.0;
        bool fec_engaged = false;
    };

    LinkReport link_report(std::size_t user, std::span<const Link> assignment, const GainTable &table,
                           const ReceiverFrontEnd &fe, const RatePolicy &policy = {});

    // Columns: user, room, scenario, ap, branch, wavelength, sinr_db, bandwidth_hz, rate_bps, fec (1-based ids).
    void write_report_csv(std::ostream &os, std::span<const LinkReport> reports, const std::string &room,
                          const std::string &scenario);
}
