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

#include <charconv>
#include <cstdio>
#include <istream>
#include <map>
#include <ostream>
#include <sstream>
#include <stdexcept>

namespace owc
{
    GainTable::GainTable(std::vector<Vec3> users, std::vector<PerWavelength<double>> ap_power, std::string fingerprint)
        : users_(std::move(users)), ap_power_(std::move(ap_power)), fingerprint_(std::move(fingerprint))
    {
        cells_.resize(users_.size() * kNumBranches * ap_power_.size() * kNumWavelengths);
    }

    namespace
    {
        const char *kHeader = "user,x,y,z,branch,ap,wavelength,tx_power_w,dc_gain,bandwidth_hz,rms_delay_s,"
                              "los_blocked,bandwidth_capped";

        std::vector<std::string_view> split(std::string_view line)
        {
            std::vector<std::string_view> out;
            std::size_t start = 0;
            while (true)
            {
                const auto pos = line.find(',', start);
                out.push_back(line.substr(start, pos == std::string_view::npos ? std::string_view::npos : pos - start));
                if (pos == std::string_view::npos)
                    break;
                start = pos + 1;
            }
            return out;
        }

        [[noreturn]] void fail(std::size_t line, const std::string &what)
        {
            throw std::runtime_error("gain table CSV line " + std::to_string(line) + ": " + what);
        }

        double to_double(std::string_view s, std::size_t line)
        {
            double v = 0.0;
            const auto res = std::from_chars(s.data(), s.data() + s.size(), v);
            if (res.ec != std::errc() || res.ptr != s.data() + s.size())
                fail(line, "cannot parse number '" + std::string(s) + "'");
            return v;
        }

        std::size_t to_index(std::string_view s, std::size_t line)
        {
            std::size_t v = 0;
            const auto res = std::from_chars(s.data(), s.data() + s.size(), v);
            if (res.ec != std::errc() || res.ptr != s.data() + s.size() || v == 0)
                fail(line, "bad 1-based index '" + std::string(s) + "'");
            return v - 1;
        }

        struct Row
        {
            std::size_t user, branch, ap;
            Wavelength w;
            Vec3 pos;
            double power;
            ChannelMetrics m;
        };
    }

    void GainTable::write_csv(std::ostream &os) const
    {
        os << "# scene=" << fingerprint_ << '\n'
           << kHeader << '\n';
        char buf[512];
        for (std::size_t u = 0; u < num_users(); ++u)
            for (std::size_t b = 0; b < kNumBranches; ++b)
                for (std::size_t a = 0; a < num_aps(); ++a)
                    for (auto w : kWavelengths)
                    {
                        const auto &c = at(u, b, a, w);
                        const auto &p = users_[u];
                        std::snprintf(buf, sizeof(buf), "%zu,%.17g,%.17g,%.17g,%zu,%zu,%s,%.17g,%.17g,%.17g,%.17g,%d,%d\n",
                                      u + 1, p.x, p.y, p.z, b + 1, a + 1, std::string(name(w)).c_str(), tx_power(a, w),
                                      c.dc_gain, c.bandwidth_hz, c.rms_delay_s, c.los_blocked ? 1 : 0,
                                      c.bandwidth_capped ? 1 : 0);
                        os << buf;
                    }
    }

    GainTable GainTable::read_csv(std::istream &is)
    {
        std::string fingerprint;
        std::vector<Row> rows;
        std::size_t n_users = 0, n_aps = 0;
        std::string line;
        std::size_t line_no = 0;
        bool header_seen = false;

        while (std::getline(is, line))
        {
            ++line_no;
            if (!line.empty() && line.back() == '\r')
                line.pop_back();
            if (line.empty())
                continue;
            if (line[0] == '#')
            {
                const std::string key = "# scene=";
                if (line.rfind(key, 0) == 0)
                    fingerprint = line.substr(key.size());
                continue;
            }
            if (!header_seen)
            {
                if (line != kHeader)
                    fail(line_no, "unexpected header");
                header_seen = true;
                continue;
            }
            const auto f = split(line);
            if (f.size() != 13)
                fail(line_no, "expected 13 fields");
            Row r;
            r.user = to_index(f[0], line_no);
            r.pos = {to_double(f[1], line_no), to_double(f[2], line_no), to_double(f[3], line_no)};
            r.branch = to_index(f[4], line_no);
            r.ap = to_index(f[5], line_no);
            const auto w = parse_wavelength(f[6]);
            if (!w)
                fail(line_no, "unknown wavelength '" + std::string(f[6]) + "'");
            r.w = *w;
            r.power = to_double(f[7], line_no);
            r.m.dc_gain = to_double(f[8], line_no);
            r.m.bandwidth_hz = to_double(f[9], line_no);
            r.m.rms_delay_s = to_double(f[10], line_no);
            r.m.los_blocked = f[11] == "1";
            r.m.bandwidth_capped = f[12] == "1";
            if (r.branch >= kNumBranches)
                fail(line_no, "branch index out of range");
            if (!(r.m.dc_gain >= 0.0) || !(r.m.bandwidth_hz > 0.0) || !(r.m.rms_delay_s >= 0.0) || !(r.power > 0.0))
                fail(line_no, "channel metrics violate their invariants");
            n_users = std::max(n_users, r.user + 1);
            n_aps = std::max(n_aps, r.ap + 1);
            rows.push_back(r);
        }
        if (!header_seen)
            throw std::runtime_error("gain table CSV: missing header");

        std::vector<Vec3> users(n_users);
        std::vector<bool> user_seen(n_users, false);
        std::vector<PerWavelength<double>> power(n_aps, PerWavelength<double>{});
        for (const auto &r : rows)
        {
            if (user_seen[r.user] && !(users[r.user] == r.pos))
                throw std::runtime_error("gain table CSV: inconsistent position for user " + std::to_string(r.user + 1));
            users[r.user] = r.pos;
            user_seen[r.user] = true;
            auto &p = power[r.ap][index(r.w)];
            if (p != 0.0 && p != r.power)
                throw std::runtime_error("gain table CSV: inconsistent power for AP " + std::to_string(r.ap + 1));
            p = r.power;
        }

        GainTable table(std::move(users), std::move(power), fingerprint);
        std::vector<bool> filled(table.cells_.size(), false);
        for (const auto &r : rows)
        {
            const auto off = table.offset(r.user, r.branch, r.ap, r.w);
            if (filled[off])
                throw std::runtime_error("gain table CSV: duplicate cell for user " + std::to_string(r.user + 1));
            filled[off] = true;
            table.cells_[off] = r.m;
        }
        for (bool f : filled)
            if (!f)
                throw std::runtime_error("gain table CSV: table is incomplete");
        return table;
    }
}

namespace owc::detail
{
    void check_users(const Scene &scene, std::span<const Vec3> users)
    {
        for (std::size_t u = 0; u < users.size(); ++u)
            if (!users[u].is_finite() || !scene.room().contains(users[u]))
                throw std::invalid_argument("User " + std::to_string(u + 1) + " lies outside the room.");
    }

    GainTable empty_table(const Scene &scene, std::span<const Vec3> users)
    {
        std::vector<PerWavelength<double>> power;
        for (const auto &ap : scene.aps())
        {
            PerWavelength<double> p{};
            for (auto w : kWavelengths)
                p[index(w)] = ap.power(w);
            power.push_back(p);
        }
        return GainTable(std::vector<Vec3>(users.begin(), users.end()), std::move(power), scene.fingerprint());
    }
}
