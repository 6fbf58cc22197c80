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

#ifndef IRSQ_ANALYTICS_HPP
#define IRSQ_ANALYTICS_HPP

#include <string>

#include "irsq/config.hpp"
#include "irsq/link_budget.hpp"

namespace irsq {

/// Tri-state quantization loss selector. NoLoss is an explicit variant rather
/// than k = infinity arithmetic, so "no loss" columns are exact.
struct QuantizationModel {
    enum class Kind { no_loss, exact_loss, approx_loss };

    Kind kind = Kind::no_loss;
    int bits = 0; // >= 1 unless kind == no_loss

    static QuantizationModel no_loss() { return {Kind::no_loss, 0}; }
    static QuantizationModel exact(int bits);
    static QuantizationModel approx(int bits);
};

std::string to_string(QuantizationModel::Kind kind);

/// Coherent-gain retention factor in (0, 1]:
///   NoLoss        -> 1
///   ExactLoss(k)  -> sin(pi/2^k) / (pi/2^k)
///   ApproxLoss(k) -> 1 - (1/6) * (pi/2^k)^2
double gain_factor(const QuantizationModel& model);

/// Upper tail of the standard normal distribution, accurate to better than
/// 1e-10 absolute over |z| <= 8.
double q_function(double z);

/// beta * Q(sqrt(mu * snr_per_bit)). QPSK uses beta = 1, mu = 2.
double ber_general(double snr_per_bit, double beta, double mu);

/// sqrt(g_aib * P_a) * M * factor + sqrt(g_ab * P_a), linear amplitude.
double receive_amplitude_los(const LinkBudget& budget, const SystemConfig& config,
                             const QuantizationModel& model);

/// sqrt(g_aib * P_a) * M * factor * (pi/2) * alpha_ai * alpha_ib
///   + sqrt(g_ab * P_a * pi/2) * alpha_ab, linear amplitude.
double receive_amplitude_rayleigh(const LinkBudget& budget, const SystemConfig& config,
                                  const QuantizationModel& model);

double receive_amplitude(const LinkBudget& budget, const SystemConfig& config,
                         ChannelKind kind, const QuantizationModel& model);

/// amplitude^2 / sigma^2 (linear noise power).
double snr(double amplitude, double noise_power_linear);

struct SnrLoss {
    double linear = 1.0;
    double db = 0.0;
};

/// Ratio of the NoLoss SNR to the model SNR. Transmit power and noise power
/// cancel; the result depends only on gains, M, the alphas and the factor.
SnrLoss snr_loss(const LinkBudget& budget, const SystemConfig& config,
                 ChannelKind kind, const QuantizationModel& model);

/// log2(1 + snr), bits/s/Hz.
double achievable_rate(double snr_linear);

/// QPSK bit error rate Q(sqrt(2 * snr)).
double ber(double snr_linear);

struct MetricReport {
    double snr_linear = 0.0;
    double snr_db = 0.0;
    double rate = 0.0;            // bits/s/Hz
    double ber = 0.0;             // in [0, 0.5]
    double loss_vs_noloss_db = 0.0;
};

/// Full report for one (config, channel kind, model) point; the loss column
/// is referenced to the NoLoss variant of the same config and channel.
MetricReport metric_report(const SystemConfig& config, ChannelKind kind,
                           const QuantizationModel& model);

} // namespace irsq

#endif
