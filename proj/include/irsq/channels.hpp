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

#ifndef IRSQ_CHANNELS_HPP
#define IRSQ_CHANNELS_HPP

#include <complex>
#include <cstddef>
#include <vector>

#include "irsq/random.hpp"

namespace irsq {

/// Uniform-linear-array steering vector. Every entry has unit modulus and
/// the phase function is antisymmetric about the array center, so
/// entries[m] == conj(entries[M+1-m]) (1-based).
struct SteeringVector {
    std::vector<std::complex<double>> entries;
};

/// Array phase profile for direction theta: entry m = exp(j*2*pi*psi(m)) with
/// psi(m) = -(m - (M+1)/2) * (d/lambda) * cos(theta), m = 1..M.
SteeringVector steering_vector(double theta, int element_count,
                               double spacing_over_wavelength);

/// Phase function psi_theta(m) of the steering vector, 1-based element index.
double steering_phase(double theta, int element_index, int element_count,
                      double spacing_over_wavelength);

/// Direct Alice->Bob channel in the LoS model: unit modulus, zero phase.
/// The closed forms add the direct term as a real coherent amplitude; any
/// fixed phase would be absorbed by the receiver phase reference.
std::complex<double> los_direct_channel();

struct RayleighDraw {
    std::vector<double> magnitudes; // nonnegative
    double alpha = 0.0;             // generating parameter
};

/// n independent draws from the Rayleigh density (x/alpha^2)*exp(-x^2/(2 alpha^2)),
/// via inverse CDF. Deterministic for a fixed stream state.
RayleighDraw sample_rayleigh_magnitudes(double alpha, std::size_t n, RandomStream& rng);

} // namespace irsq

#endif
