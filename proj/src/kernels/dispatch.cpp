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

#include <atomic>
#include <cstdlib>
#include <cstring>

#include "lambdaspec/core/errors.hpp"
#include "lambdaspec/kernels/kernels.hpp"

namespace lambdaspec::kernels {
namespace {

bool cpu_has_avx2() {
#if defined(LAMBDASPEC_HAVE_AVX2) && (defined(__GNUC__) || defined(__clang__))
  __builtin_cpu_init();
  return __builtin_cpu_supports("avx2") && __builtin_cpu_supports("fma");
#else
  return false;
#endif
}

Backend detect() {
  const char* env = std::getenv("LAMBDASPEC_KERNELS");
  if (env != nullptr && std::strcmp(env, "scalar") == 0) return Backend::Scalar;
  return cpu_has_avx2() ? Backend::Avx2 : Backend::Scalar;
}

std::atomic<Backend>& current() {
  static std::atomic<Backend> backend{detect()};
  return backend;
}

}  // namespace

#if !defined(LAMBDASPEC_HAVE_AVX2)
// Stubs so the avx2 namespace links on builds without the AVX2 translation unit.
namespace avx2 {
void accumulate_pole_sum(std::span<const double> omega, std::span<const Complex> poles,
                         std::span<const Complex> weights, std::span<double> out) {
  scalar::accumulate_pole_sum(omega, poles, weights, out);
}
void caxpy(Complex alpha, std::span<const Complex> x, std::span<Complex> y) { scalar::caxpy(alpha, x, y); }
}  // namespace avx2
#endif

std::string_view backend_name(Backend backend) {
  return backend == Backend::Avx2 ? "avx2" : "scalar";
}

bool backend_available(Backend backend) {
  return backend == Backend::Scalar || cpu_has_avx2();
}

Backend active_backend() { return current().load(std::memory_order_relaxed); }

void set_backend(Backend backend) {
  if (!backend_available(backend)) {
    throw InvalidArgument("kernel backend '" + std::string(backend_name(backend)) + "' not available");
  }
  current().store(backend, std::memory_order_relaxed);
}

void reset_backend() { current().store(detect(), std::memory_order_relaxed); }

void accumulate_pole_sum(std::span<const double> omega, std::span<const Complex> poles,
                         std::span<const Complex> weights, std::span<double> out) {
  if (poles.size() != weights.size() || omega.size() != out.size()) {
    throw InvalidArgument("accumulate_pole_sum: size mismatch");
  }
  if (active_backend() == Backend::Avx2) {
    avx2::accumulate_pole_sum(omega, poles, weights, out);
  } else {
    scalar::accumulate_pole_sum(omega, poles, weights, out);
  }
}

void caxpy(Complex alpha, std::span<const Complex> x, std::span<Complex> y) {
  if (x.size() != y.size()) throw InvalidArgument("caxpy: size mismatch");
  if (active_backend() == Backend::Avx2) {
    avx2::caxpy(alpha, x, y);
  } else {
    scalar::caxpy(alpha, x, y);
  }
}

}  // namespace lambdaspec::kernels
