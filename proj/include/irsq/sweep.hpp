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

#ifndef IRSQ_SWEEP_HPP
#define IRSQ_SWEEP_HPP

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "irsq/analytics.hpp"
#include "irsq/config.hpp"

namespace irsq {

/// One experiment family: which channel, which k and M grids, the nominal
/// no-loss SNR (rate/BER sweeps calibrate sigma^2 per (channel, M) so that
/// the NoLoss SNR hits it), and the Monte Carlo budget.
struct SweepSpec {
    ChannelKind channel = ChannelKind::los;
    std::vector<int> k_values = {1, 2, 3, 4, 5, 6};
    std::vector<int> m_values = {8, 64, 1024};
    std::optional<double> target_snr_db;
    std::size_t trials = 100000; // MC samples per estimator / symbols per BER row
    std::uint64_t seed = 1;
    SystemConfig config;

    void validate() const; // throws std::invalid_argument
};

struct SnrLossRow {
    ChannelKind channel;
    int m = 0;
    int k = 0;
    QuantizationModel::Kind variant;
    double snr_loss_db = 0.0;
};

struct RateRow {
    ChannelKind channel;
    int m = 0;
    int k = 0;
    QuantizationModel::Kind variant;
    double rate_bits = 0.0;
};

struct BerRow {
    ChannelKind channel;
    int m = 0;
    int k = 0;
    QuantizationModel::Kind variant;
    double ber_analytic = 0.0;
    double ber_mc = 0.0;
    double ber_mc_stderr = 0.0;
};

std::vector<SnrLossRow> sweep_snr_loss(const SweepSpec& spec);
std::vector<RateRow> sweep_rate(const SweepSpec& spec);       // needs target_snr_db
std::vector<BerRow> sweep_ber(const SweepSpec& spec);         // needs target_snr_db

// CSV emission: '# seed=<seed>' comment line, header row, one data row per
// entry, '.' decimal separator, 10 significant digits. Byte-identical across
// runs for a fixed spec and seed.
std::string run_sweep_snr_loss(const SweepSpec& spec);
std::string run_sweep_rate(const SweepSpec& spec);
std::string run_sweep_ber(const SweepSpec& spec);

struct VerifyCheck {
    std::string name;
    double expected = 0.0;
    double observed = 0.0;
    double std_error = 0.0;
    bool pass = false;
};

struct VerifyReport {
    std::vector<VerifyCheck> checks;
    bool all_pass = true;
    std::string text() const; // one line per check: name, expected, observed, std_error, verdict
};

/// Runs the simulation-vs-analysis suite: mc_gain_los against sinc(pi/2^k),
/// Rayleigh W/G against their expectations, and QPSK Monte Carlo BER against
/// Q(sqrt(2*snr)), each at 3 standard errors. gain_factor_tamper is a test
/// hook that scales the analytic expectations; anything but 1.0 must make the
/// suite fail.
VerifyReport run_verify(const SweepSpec& spec, double gain_factor_tamper = 1.0);

} // namespace irsq

#endif
