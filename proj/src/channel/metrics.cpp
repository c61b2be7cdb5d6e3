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

#include <fftw3.h>

#include <cmath>
#include <map>
#include <memory>
#include <mutex>
#include <stdexcept>

namespace owc
{
    namespace
    {
        struct FftwFree
        {
            void operator()(void *p) const { fftw_free(p); }
        };

        // The FFTW planner is not thread-safe; plans are created once per size under a lock and
        // executed afterwards with the new-array interface, which is.
        fftw_plan r2c_plan(int n)
        {
            static std::mutex mutex;
            static std::map<int, fftw_plan> plans;
            std::lock_guard lock(mutex);
            auto it = plans.find(n);
            if (it != plans.end())
                return it->second;
            std::unique_ptr<double, FftwFree> in(fftw_alloc_real(n));
            std::unique_ptr<fftw_complex, FftwFree> out(fftw_alloc_complex(n / 2 + 1));
            fftw_plan p = fftw_plan_dft_r2c_1d(n, in.get(), out.get(), FFTW_ESTIMATE);
            plans.emplace(n, p);
            return p;
        }
    }

    BandwidthEstimate bandwidth_3db(const ImpulseResponse &ir, double f_cap_hz, double resolution_hz)
    {
        if (!(f_cap_hz > 0.0) || !(resolution_hz > 0.0))
            throw std::invalid_argument("Frequency cap and resolution must be positive.");
        const double h0 = dc_gain(ir);
        if (!(h0 > 0.0))
            throw std::invalid_argument("Bandwidth is undefined for a zero-gain response.");

        const auto bins = ir.bins();
        const double dt = ir.bin_width();
        const auto min_len = static_cast<std::size_t>(std::ceil(1.0 / (dt * resolution_hz) - 1e-9));
        const int n = static_cast<int>(std::max(min_len, bins.size()));
        const double df = 1.0 / (n * dt);

        std::unique_ptr<double, FftwFree> in(fftw_alloc_real(n));
        std::unique_ptr<fftw_complex, FftwFree> out(fftw_alloc_complex(n / 2 + 1));
        std::fill(in.get(), in.get() + n, 0.0);
        std::copy(bins.begin(), bins.end(), in.get());
        fftw_execute_dft_r2c(r2c_plan(n), in.get(), out.get());

        auto ratio = [&](int k)
        {
            const double re = out.get()[k][0], im = out.get()[k][1];
            return (re * re + im * im) / (h0 * h0);
        };

        double prev = 1.0;
        for (int k = 1; k <= n / 2; ++k)
        {
            const double f = k * df;
            if (f - df >= f_cap_hz)
                break;
            const double r = ratio(k);
            if (r <= 0.5)
            {
                const double crossing = (f - df) + (prev - 0.5) / (prev - r) * df;
                if (crossing > f_cap_hz)
                    break;
                return {crossing, false};
            }
            prev = r;
        }
        return {f_cap_hz, true};
    }

    double rms_delay_spread(const ImpulseResponse &ir)
    {
        if (!(dc_gain(ir) > 0.0))
            throw std::invalid_argument("Delay spread is undefined for a zero-gain response.");
        const auto bins = ir.bins();
        double w_sum = 0.0, wt_sum = 0.0;
        for (std::size_t k = 0; k < bins.size(); ++k)
        {
            const double w = bins[k] * bins[k];
            w_sum += w;
            wt_sum += w * ir.time(k);
        }
        const double mu = wt_sum / w_sum;
        double var = 0.0;
        for (std::size_t k = 0; k < bins.size(); ++k)
        {
            const double dt = ir.time(k) - mu;
            var += bins[k] * bins[k] * dt * dt;
        }
        return std::sqrt(var / w_sum);
    }

    ChannelMetrics channel_metrics(const ImpulseResponse &ir, bool los_blocked, const ChannelOptions &opts)
    {
        ChannelMetrics m;
        m.los_blocked = los_blocked;
        m.dc_gain = dc_gain(ir);
        if (m.dc_gain > 0.0)
        {
            const auto bw = bandwidth_3db(ir, opts.f_cap_hz, opts.freq_resolution_hz);
            m.bandwidth_hz = bw.hz;
            m.bandwidth_capped = bw.capped;
            m.rms_delay_s = rms_delay_spread(ir);
        }
        else
        {
            m.bandwidth_hz = opts.f_cap_hz;
            m.bandwidth_capped = true;
        }
        return m;
    }
}

namespace owc::detail
{
    PerWavelength<ChannelMetrics> wavelength_metrics(const PerWavelength<ImpulseResponse> &irs, bool los_blocked,
                                                     const ChannelOptions &opts)
    {
        PerWavelength<ChannelMetrics> out{};
        for (std::size_t w = 0; w < kNumWavelengths; ++w)
        {
            bool reused = false;
            for (std::size_t v = 0; v < w && !reused; ++v)
                if (irs[v] == irs[w])
                {
                    out[w] = out[v];
                    reused = true;
                }
            if (!reused)
                out[w] = channel_metrics(irs[w], los_blocked, opts);
        }
        return out;
    }
}
