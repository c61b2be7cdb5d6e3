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

#include <array>
#include <cstddef>
#include <optional>
#include <string>
#include <string_view>

namespace owc
{
    // The four laser-diode colors of an RYGB access point, in canonical order.
    enum class Wavelength : unsigned char
    {
        Red = 0,
        Yellow = 1,
        Green = 2,
        Blue = 3
    };

    inline constexpr std::size_t kNumWavelengths = 4;

    inline constexpr std::array<Wavelength, kNumWavelengths> kWavelengths = {
        Wavelength::Red, Wavelength::Yellow, Wavelength::Green, Wavelength::Blue};

    template <typename T>
    using PerWavelength = std::array<T, kNumWavelengths>;

    constexpr std::size_t index(Wavelength w) { return static_cast<std::size_t>(w); }

    constexpr std::string_view name(Wavelength w)
    {
        switch (w)
        {
        case Wavelength::Red:
            return "Red";
        case Wavelength::Yellow:
            return "Yellow";
        case Wavelength::Green:
            return "Green";
        case Wavelength::Blue:
            return "Blue";
        }
        return "?";
    }

    // Case-insensitive; accepts full names and the R/Y/G/B initials.
    std::optional<Wavelength> parse_wavelength(std::string_view text);
}
