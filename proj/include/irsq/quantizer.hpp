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

#ifndef IRSQ_QUANTIZER_HPP
#define IRSQ_QUANTIZER_HPP

#include <cstddef>
#include <vector>

#include "irsq/random.hpp"

namespace irsq {

/// k-bit phase feasible set: 2^k codewords (2i+1)*pi/2^k in ascending order,
/// consecutive spacing 2*pi/2^k, half cell width delta_x = pi/2^k.
struct PhaseCodebook {
    int bits = 0;
    std::vector<double> omega;
    double delta_x = 0.0;
};

PhaseCodebook codebook(int bits);

struct QuantizedPhase {
    double quantized = 0.0; // member of omega
    double error = 0.0;     // phi - quantized, wrapped to (-pi, pi]; |error| <= delta_x
};

/// Nearest codeword under circular (mod 2*pi) distance. The input phase is
/// first reduced into [0, 2*pi). Exact midpoints resolve to the numerically
/// smaller codeword value.
QuantizedPhase quantize(double phi, const PhaseCodebook& book);

/// n independent draws uniform on [-delta_x, delta_x].
std::vector<double> sample_quantization_errors(const PhaseCodebook& book,
                                               std::size_t n, RandomStream& rng);

/// Continuous IRS phases phi_m = 2*pi*psi_ib(m) - 2*pi*psi_ai(m) that collapse
/// the cascaded LoS sum to exactly M.
std::vector<double> design_continuous_phases(double theta_ai, double theta_ib,
                                             int element_count,
                                             double spacing_over_wavelength);

} // namespace irsq

#endif
