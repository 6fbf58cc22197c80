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

#ifndef IRSQ_MONTECARLO_HPP
#define IRSQ_MONTECARLO_HPP

#include <complex>
#include <cstddef>
#include <cstdint>
#include <optional>

#include "irsq/analytics.hpp"
#include "irsq/config.hpp"
#include "irsq/random.hpp"

namespace irsq {

/// (seed, n) fully determine the outcome. std_error is the sample standard
/// deviation divided by sqrt(n).
struct EstimatorResult {
    double mean = 0.0;
    double std_error = 0.0;
    std::size_t n = 0;
    std::uint64_t seed = 0;
};

struct ComplexEstimatorResult {
    std::complex<double> mean;
    double std_error_re = 0.0;
    double std_error_im = 0.0;
    std::size_t n = 0;
    std::uint64_t seed = 0;
};

struct WGEstimate {
    EstimatorResult w; // mean of |h_ib|*|h_ai|*cos(dphi)
    EstimatorResult g; // mean of |h_ib|*|h_ai|*sin(dphi)
};

struct TrialConfig {
    std::size_t trials = 1000;
    std::uint64_t seed = 1;
    std::size_t symbols_per_trial = 100000; // BER only
};

/// Complex sample mean of exp(j * dphi) over M*trials uniform quantization
/// errors. The real part estimates sinc(pi/2^k), the imaginary part 0.
ComplexEstimatorResult mc_gain_los(int element_count, int bits, std::size_t trials,
                                   const RandomStream& master);

/// mc_gain_los with an explicit error half-width (delta_x = 0 forces every
/// error to zero, making the mean exactly 1+0j).
ComplexEstimatorResult mc_gain_los_halfwidth(int element_count, double delta_x,
                                             std::size_t trials,
                                             const RandomStream& master);

/// Sample means of |h_ib|*|h_ai|*cos(dphi) and |h_ib|*|h_ai|*sin(dphi) over
/// M*trials independent (Rayleigh, Rayleigh, uniform) triples.
WGEstimate mc_w_g_rayleigh(int element_count, int bits, double alpha_ai,
                           double alpha_ib, std::size_t trials,
                           const RandomStream& master);

WGEstimate mc_w_g_rayleigh_halfwidth(int element_count, double delta_x,
                                     double alpha_ai, double alpha_ib,
                                     std::size_t trials, const RandomStream& master);

/// Mean composite noiseless receive amplitude over `trials` link realizations.
/// bits == nullopt selects continuous phases (no quantization error). LoS with
/// continuous phases has no randomness and returns the analytic amplitude with
/// zero standard error.
EstimatorResult mc_receive_amplitude(const SystemConfig& config, ChannelKind kind,
                                     std::optional<int> bits, std::size_t trials,
                                     const RandomStream& master);

/// Hard-decision Gray-mapped QPSK over AWGN: each quadrature carries
/// +-amplitude and receives independent Gaussian noise of variance
/// noise_power/2, the convention under which the closed form Q(sqrt(2*snr))
/// with snr = amplitude^2/noise_power is exact. Returns the bit error
/// fraction over 2*symbols bits with a binomial standard error.
EstimatorResult mc_ber_qpsk(double amplitude, double noise_power_linear,
                            std::size_t symbols, const RandomStream& master);

} // namespace irsq

#endif
