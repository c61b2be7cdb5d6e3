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

#include "owc/experiment.hpp"

#include <utility>

namespace owc
{
    namespace
    {
        using Layout = std::vector<std::pair<double, double>>;

        const Layout &layout(RoomId room, int scenario)
        {
            static const Layout a1 = {{0.5, 6.5}, {0.5, 7.5}, {1.5, 6.5}, {1.5, 7.5}, {2.5, 0.5}, {2.5, 1.5}, {3.5, 0.5}, {3.5, 1.5}};
            static const Layout b1 = {{0.5, 2.5}, {0.5, 3.5}, {1.5, 2.5}, {1.5, 3.5}, {2.5, 0.5}, {2.5, 1.5}, {3.5, 0.5}, {3.5, 1.5}};
            static const Layout c1 = {{0.5, 1.5}, {0.5, 0.5}, {0.5, 6.5}, {0.5, 7.5}, {1.5, 0.5}, {1.5, 1.5}, {1.5, 7.5}, {1.5, 6.5}};
            static const Layout a2 = {{0.5, 1.5}, {0.5, 5.5}, {0.5, 6.5}, {1.5, 3.5}, {2.5, 1.5}, {2.5, 6.5}, {3.5, 3.5}, {3.5, 5.5}};
            static const Layout b2 = {{0.5, 1.5}, {0.5, 2.5}, {1.5, 0.5}, {1.5, 3.5}, {2.5, 1.5}, {2.5, 2.5}, {2.5, 3.5}, {3.5, 0.5}};
            static const Layout c2 = {{0.5, 0.5}, {0.5, 3.5}, {0.5, 6.5}, {1.5, 1.5}, {1.5, 2.5}, {1.5, 4.5}, {1.5, 5.5}, {1.5, 6.5}};

            if (scenario == 1)
                return room == RoomId::A ? a1 : room == RoomId::B ? b1 : c1;
            if (scenario == 2)
                return room == RoomId::A ? a2 : room == RoomId::B ? b2 : c2;
            throw std::invalid_argument("Unknown scenario " + std::to_string(scenario) + " (expected 1 or 2).");
        }
    }

    std::vector<Vec3> scenario_preset(RoomId room, int scenario)
    {
        std::vector<Vec3> users;
        for (auto [x, y] : layout(room, scenario))
            users.push_back({x, y, kReceiverPlaneZ});
        return users;
    }

    ExperimentConfig preset_config(RoomId room, int scenario)
    {
        ExperimentConfig c;
        c.room = standard_room(room);
        c.room_label = std::string(name(room));
        c.scenario_label = std::to_string(scenario);
        c.users = scenario_preset(room, scenario);
        return c;
    }
}
