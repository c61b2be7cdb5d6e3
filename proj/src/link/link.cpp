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

#include "owc/link.hpp"

#include <cstdio>
#include <ostream>

namespace owc
{
    std::vector<std::string> check_front_end(const ReceiverFrontEnd &fe)
    {
        std::vector<std::string> issues;
        for (auto w : kWavelengths)
            if (!(fe.responsivity[index(w)] > 0.0))
                issues.push_back(std::string(name(w)) + " responsivity must be positive");
        if (!(fe.noise_density > 0.0))
            issues.push_back("noise current spectral density must be positive");
        if (!(fe.bandwidth_hz > 0.0))
            issues.push_back("receiver bandwidth must be positive");
        if (!(fe.crosstalk >= 0.0 && fe.crosstalk <= 1.0))
            issues.push_back("crosstalk factor must lie in [0, 1]");
        return issues;
    }

    double photocurrent(double gain, double tx_power_w, Wavelength w, const ReceiverFrontEnd &fe)
    {
        return fe.responsivity[index(w)] * tx_power_w * gain;
    }

    double noise_variance(double total_current, double bandwidth_hz, const ReceiverFrontEnd &fe)
    {
        return 2.0 * kElectronCharge * total_current * bandwidth_hz + fe.noise_density * fe.noise_density * bandwidth_hz;
    }

    ServingSets serving_sets(std::span<const Link> links)
    {
        ServingSets s{};
        for (const auto &l : links)
            s[index(l.wavelength)] |= std::uint64_t{1} << l.ap;
        return s;
    }

    namespace
    {
        void check_assignment(std::size_t user, std::span<const Link> assignment, const GainTable &table)
        {
            if (assignment.size() != table.num_users() || user >= table.num_users())
                throw std::invalid_argument("Assignment does not cover user " + std::to_string(user + 1) + ".");
            for (const auto &l : assignment)
                if (l.ap >= table.num_aps() || l.branch >= kNumBranches)
                    throw std::invalid_argument("Assignment references an unknown AP or branch.");
        }
    }

    LightClassification classify_light(std::size_t user, std::span<const Link> assignment, const GainTable &table,
                                       const ReceiverFrontEnd &fe)
    {
        check_assignment(user, assignment, table);
        const Link own = assignment[user];
        const ServingSets serving = serving_sets(assignment);

        auto term = [&](std::size_t ap, Wavelength w)
        {
            return LightTerm{ap, w, photocurrent(table.at(user, own.branch, ap, w).dc_gain, table.tx_power(ap, w), w, fe)};
        };

        LightClassification out;
        out.signal = term(own.ap, own.wavelength);
        for (std::size_t a = 0; a < table.num_aps(); ++a)
            for (auto w : kWavelengths)
            {
                if (a == own.ap && w == own.wavelength)
                    continue;
                const bool modulated = (serving[index(w)] >> a) & 1u;
                if (modulated && w == own.wavelength)
                    out.interference.push_back(term(a, w));
                else
                    out.background.push_back(term(a, w));
            }
        return out;
    }

    LinkEvaluator::LinkEvaluator(const GainTable &table, const ReceiverFrontEnd &fe) : table_(&table), fe_(fe)
    {
        if (auto issues = check_front_end(fe); !issues.empty())
            throw std::invalid_argument("invalid receiver front end: " + issues.front());
        if (table.num_aps() > 64)
            throw std::invalid_argument("At most 64 access points are supported.");

        const std::size_t n_users = table.num_users(), n_aps = table.num_aps();
        currents_.resize(n_users * kNumBranches * n_aps * kNumWavelengths);
        totals_.resize(n_users * kNumBranches);
        sigma2_.resize(n_users * kNumBranches);
        std::size_t k = 0;
        for (std::size_t u = 0; u < n_users; ++u)
            for (std::size_t b = 0; b < kNumBranches; ++b)
            {
                double total = 0.0;
                for (std::size_t a = 0; a < n_aps; ++a)
                    for (auto w : kWavelengths)
                    {
                        const double i = photocurrent(table.at(u, b, a, w).dc_gain, table.tx_power(a, w), w, fe);
                        currents_[k++] = i;
                        total += i;
                    }
                totals_[u * kNumBranches + b] = total;
                sigma2_[u * kNumBranches + b] = owc::noise_variance(total, fe.bandwidth_hz, fe);
            }
    }

    double LinkEvaluator::sinr_linear(std::size_t user, const Link &link, const ServingSets &serving) const
    {
        const double signal = current(user, link.branch, link.ap, link.wavelength);
        if (!(signal > 0.0))
            return 0.0;

        double interference = 0.0;
        const std::uint64_t co_channel = serving[index(link.wavelength)];
        for (std::size_t a = 0; a < num_aps(); ++a)
            if (a != link.ap && ((co_channel >> a) & 1u))
            {
                const double i = current(user, link.branch, a, link.wavelength);
                interference += i * i;
            }
        if (fe_.crosstalk > 0.0)
            for (auto w : kWavelengths)
            {
                if (w == link.wavelength)
                    continue;
                for (std::size_t a = 0; a < num_aps(); ++a)
                    if ((serving[index(w)] >> a) & 1u)
                    {
                        const double i = fe_.crosstalk * current(user, link.branch, a, w);
                        interference += i * i;
                    }
            }
        return signal * signal / (noise_variance(user, link.branch) + interference);
    }

    double LinkEvaluator::interference_free_sinr(std::size_t user, const Link &link) const
    {
        return sinr_linear(user, link, ServingSets{});
    }

    double sinr(std::size_t user, std::span<const Link> assignment, const GainTable &table, const ReceiverFrontEnd &fe)
    {
        check_assignment(user, assignment, table);
        const LinkEvaluator eval(table, fe);
        return to_db(eval.sinr_linear(user, assignment[user], serving_sets(assignment)));
    }

    DataRate data_rate(double bandwidth_hz, double sinr_db, const RatePolicy &policy)
    {
        if (!(bandwidth_hz > 0.0))
            throw std::invalid_argument("Channel bandwidth must be positive.");
        const double raw = bandwidth_hz / policy.ook_factor;
        if (sinr_db >= policy.threshold_db)
            return {raw, false};
        if (sinr_db >= policy.floor_db)
            return {raw * policy.fec_code_rate, true};
        char buf[96];
        std::snprintf(buf, sizeof(buf), "SINR %.2f dB is below the %.2f dB FEC floor", sinr_db, policy.floor_db);
        throw UnsupportedLink(buf);
    }

    LinkReport link_report(std::size_t user, std::span<const Link> assignment, const GainTable &table,
                           const ReceiverFrontEnd &fe, const RatePolicy &policy)
    {
        LinkReport r;
        r.user = user;
        r.sinr_db = sinr(user, assignment, table, fe);
        r.link = assignment[user];
        if (r.sinr_db == kNegInfDb)
            throw UnsupportedLink("user " + std::to_string(user + 1) + " has no signal on its assigned link");
        const auto &cell = table.at(user, r.link.branch, r.link.ap, r.link.wavelength);
        r.bandwidth_hz = cell.bandwidth_hz;
        r.bandwidth_capped = cell.bandwidth_capped;
        const auto rate = data_rate(r.bandwidth_hz, r.sinr_db, policy);
        r.rate_bps = rate.rate_bps;
        r.fec_engaged = rate.fec_engaged;
        r.effective_sinr_db = rate.fec_engaged ? policy.threshold_db : r.sinr_db;
        return r;
    }

    void write_report_csv(std::ostream &os, std::span<const LinkReport> reports, const std::string &room,
                          const std::string &scenario)
    {
        os << "user,room,scenario,ap,branch,wavelength,sinr_db,bandwidth_hz,rate_bps,fec\n";
        char buf[256];
        for (const auto &r : reports)
        {
            std::snprintf(buf, sizeof(buf), ",%zu,%zu,%s,%.6f,%.6e,%.6e,%d\n", r.link.ap + 1, r.link.branch + 1,
                          std::string(name(r.link.wavelength)).c_str(), r.sinr_db, r.bandwidth_hz, r.rate_bps,
                          r.fec_engaged ? 1 : 0);
            os << r.user + 1 << ',' << room << ',' << scenario << buf;
        }
    }
}
