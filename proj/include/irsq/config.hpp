// SPDX-License-Identifier: Apache-2.0
//
// irsq - performance-loss analysis for IRS-aided links with discrete phase shifters
// Copyright (C) 2026 the irsq authors
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

#ifndef IRSQ_CONFIG_HPP
#define IRSQ_CONFIG_HPP

#include <optional>
#include <string>

namespace irsq {

enum class ChannelKind { los, rayleigh };

std::string to_string(ChannelKind kind);
ChannelKind channel_kind_from_string(const std::string& name);

/// Scenario parameters shared by every other module.
///
/// Angles are radians in [0, pi], distances meters, powers dBm, reference
/// path loss dB. gamma_* are the path-loss exponents; when unset, the
/// link budget picks the per-channel-kind defaults (2, 2, 2 for LoS and
/// 2.5, 2.5, 3.5 for Rayleigh). Setting a gamma overrides both kinds.
struct SystemConfig {
    int M = 128;                   // IRS element count
    std::optional<int> k = 3;      // quantization bits; nullopt = continuous phases
    double element_spacing_over_wavelength = 0.5; // d / lambda

    double theta_ai = 0.7853981633974483;  // pi/4
    double theta_ib = 1.8338073143709183;  // IRS->Bob direction in the default plane
    double theta_ab = 1.5707963267948966;  // pi/2

    double d_ab = 100.0; // Alice->Bob distance
    double d_ai = 30.0;  // Alice->IRS distance

    double transmit_power = 30.0;  // P_a, dBm
    double noise_power = -90.0;    // sigma^2, dBm

    double pl_ref_db = -30.0;     // PL_0
    double pl_ref_distance = 1.0; // d_0

    std::optional<double> gamma_ai;
    std::optional<double> gamma_ib;
    std::optional<double> gamma_ab;

    double alpha_ai = 0.5;
    double alpha_ib = 0.5;
    double alpha_ab = 0.5;

    // Throws std::invalid_argument listing every violated constraint.
    void validate() const;
};

/// Parses flat key=value text ('#' comments and blank lines allowed).
/// Keys must match SystemConfig field names exactly; unknown keys are errors.
/// k accepts a positive integer or "infinite" (case-insensitive).
SystemConfig parse_config(const std::string& text);

/// parse_config on the contents of `path`.
SystemConfig load_config(const std::string& path);

} // namespace irsq

#endif
