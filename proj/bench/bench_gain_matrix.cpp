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


// Serial reference vs OpenMP gain matrix on the preset rooms.

#include "owc/experiment.hpp"

#include <benchmark/benchmark.h>

namespace
{
    using namespace owc;

    struct Fixture
    {
        Scene scene;
        std::vector<Vec3> users;
    };

    const Fixture &fixture(RoomId room)
    {
        static const Fixture a{validate(standard_room(RoomId::A)), scenario_preset(RoomId::A, 1)};
        static const Fixture b{validate(standard_room(RoomId::B)), scenario_preset(RoomId::B, 1)};
        static const Fixture c{validate(standard_room(RoomId::C)), scenario_preset(RoomId::C, 1)};
        return room == RoomId::A ? a : room == RoomId::B ? b : c;
    }

    ChannelOptions order(benchmark::State &state)
    {
        ChannelOptions o;
        o.max_order = static_cast<int>(state.range(1));
        return o;
    }

    void BM_GainMatrixSerial(benchmark::State &state)
    {
        const auto &f = fixture(static_cast<RoomId>(state.range(0)));
        const auto opts = order(state);
        for (auto _ : state)
            benchmark::DoNotOptimize(gain_matrix_serial(f.scene, f.users, opts));
    }

    void BM_GainMatrixOpenMP(benchmark::State &state)
    {
        const auto &f = fixture(static_cast<RoomId>(state.range(0)));
        const auto opts = order(state);
        const int threads = static_cast<int>(state.range(2));
        for (auto _ : state)
            benchmark::DoNotOptimize(gain_matrix(f.scene, f.users, opts, threads));
    }

    // Args: room (0 = A, 1 = B, 2 = C), bounce order[, threads].
    BENCHMARK(BM_GainMatrixSerial)->Args({0, 1})->Args({0, 2})->Args({1, 2})->Args({2, 2})->Unit(benchmark::kMillisecond);
    BENCHMARK(BM_GainMatrixOpenMP)
        ->Args({0, 1, 1})
        ->Args({0, 2, 1})
        ->Args({0, 2, 0})
        ->Args({1, 2, 0})
        ->Args({2, 2, 0})
        ->Unit(benchmark::kMillisecond);
}

BENCHMARK_MAIN();
