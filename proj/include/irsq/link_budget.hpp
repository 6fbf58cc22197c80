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

#ifndef IRSQ_LINK_BUDGET_HPP
#define IRSQ_LINK_BUDGET_HPP

#include "irsq/config.hpp"

namespace irsq {

/// Linear power gains for the three links. g_aib == g_ai * g_ib exactly.
struct LinkBudget {
    double g_ai = 0.0;
    double g_ib = 0.0;
    double g_ab = 0.0;
    double g_aib = 0.0;
    double d_ib = 0.0; // derived IRS->Bob distance, meters
};

double db_to_linear(double db);   // 10^(db/10)
double dbm_to_linear(double dbm); // linear milliwatts

/// PL_0 - 10 * gamma * log10(d / d_0), in dB.
double path_loss_db(double distance, double exponent, double ref_db, double ref_distance);

/// Euclidean IRS->Bob distance with Alice at the origin, Bob at polar
/// (d_ab, theta_ab) and the IRS at polar (d_ai, theta_ai) in a plane.
/// Coincident IRS and Bob positions are a degenerate geometry (error).
double derive_geometry(double d_ab, double d_ai, double theta_ab, double theta_ai);

/// Linear gains for the selected channel kind's exponent triple.
LinkBudget build_link_budget(const SystemConfig& config, ChannelKind kind);

/// sigma^2 such that noiseless_amplitude^2 / sigma^2 equals the target SNR.
double noise_power_for_target_snr(double target_snr_db, double noiseless_amplitude);

} // namespace irsq

#endif
