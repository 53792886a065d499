// Copyright 2026 The lambdaspec Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <span>
#include <string_view>

#include "lambdaspec/core/linalg.hpp"

// Data-parallel inner loops used by spectrum sampling and by the oracle's
// per-frequency Hessenberg solves. Each kernel has a scalar reference in
// namespace scalar and, on x86-64, an AVX2/FMA variant in namespace avx2.
// The public entry points dispatch at runtime on CPU support; the
// LAMBDASPEC_KERNELS=scalar environment variable forces the reference path.

namespace lambdaspec::kernels {

enum class Backend { Scalar, Avx2 };

std::string_view backend_name(Backend backend);
bool backend_available(Backend backend);
Backend active_backend();
/// Throws InvalidArgument if the backend is not available on this CPU/build.
void set_backend(Backend backend);
/// Back to automatic selection.
void reset_backend();

/// out[k] += Re sum_t weights[t] / (i * omega[k] - poles[t])
void accumulate_pole_sum(std::span<const double> omega, std::span<const Complex> poles,
                         std::span<const Complex> weights, std::span<double> out);

/// y += alpha * x
void caxpy(Complex alpha, std::span<const Complex> x, std::span<Complex> y);

namespace scalar {
void accumulate_pole_sum(std::span<const double> omega, std::span<const Complex> poles,
                         std::span<const Complex> weights, std::span<double> out);
void caxpy(Complex alpha, std::span<const Complex> x, std::span<Complex> y);
}  // namespace scalar

namespace avx2 {
void accumulate_pole_sum(std::span<const double> omega, std::span<const Complex> poles,
                         std::span<const Complex> weights, std::span<double> out);
void caxpy(Complex alpha, std::span<const Complex> x, std::span<Complex> y);
}  // namespace avx2

}  // namespace lambdaspec::kernels
