#pragma once

// Data-parallel inner loops used by the linear algebra layer. Each ISA gets
// its own translation unit; the table for the running CPU is chosen once at
// first use. Set DMSEM_KERNELS=scalar|avx2|neon to force a variant.

#include <cstddef>
#include <span>
#include <vector>

namespace dmsem::kernels {

enum class Isa { scalar, avx2, neon };

const char* to_string(Isa isa) noexcept;

struct KernelTable {
  Isa isa;
  // sum_i x[i] * y[i]
  double (*dot)(const double* x, const double* y, std::size_t n);
  // y += a * x
  void (*axpy)(double a, const double* x, double* y, std::size_t n);
  // (x, y) <- (c x - s y, s x + c y)
  void (*rot)(double* x, double* y, std::size_t n, double c, double s);
  // out = x .* y
  void (*hadamard)(const double* x, const double* y, double* out, std::size_t n);
  // x *= a
  void (*scale)(double a, double* x, std::size_t n);
  // c = a * b, all n x n row-major; c must not alias a or b
  void (*gemm)(const double* a, const double* b, double* c, std::size_t n);
};

/// Table in use by the library.
const KernelTable& active() noexcept;

/// Table for a specific ISA, or nullptr when it was not compiled in or the
/// CPU lacks the instructions.
const KernelTable* table_for(Isa isa) noexcept;

/// Every ISA usable on this machine; scalar is always first.
std::vector<Isa> available();

inline double dot(std::span<const double> x, std::span<const double> y) {
  return active().dot(x.data(), y.data(), x.size());
}

inline void axpy(double a, std::span<const double> x, std::span<double> y) {
  active().axpy(a, x.data(), y.data(), x.size());
}

}  // namespace dmsem::kernels
