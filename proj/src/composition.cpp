#include "dmsem/composition.hpp"

#include <vector>

#include "dmsem/error.hpp"
#include "dmsem/kernels.hpp"

namespace dmsem {

std::string_view to_string(CompositionKind kind) noexcept {
  switch (kind) {
    case CompositionKind::spider: return "spider";
    case CompositionKind::fuzz: return "fuzz";
    case CompositionKind::phaser: return "phaser";
    case CompositionKind::mult: return "mult";
    case CompositionKind::diag: return "diag";
  }
  return "?";
}

std::optional<CompositionKind> parse_composition(std::string_view name) noexcept {
  for (auto kind : {CompositionKind::spider, CompositionKind::fuzz, CompositionKind::phaser, CompositionKind::mult,
                    CompositionKind::diag}) {
    if (name == to_string(kind)) return kind;
  }
  return std::nullopt;
}

bool uses_basis(CompositionKind kind) noexcept {
  return kind == CompositionKind::spider || kind == CompositionKind::fuzz || kind == CompositionKind::phaser;
}

namespace {

void require_same_dim(const Dmat& a, const Dmat& b) { dmsem::require_same_dim(a.matrix(), b.matrix()); }

}  // namespace

Dmat spider(const Dmat& a, const Dmat& b) {
  require_same_dim(a, b);
  const auto& basis = b.spectrum();
  const auto& k = kernels::active();
  const std::size_t n = a.dim();
  std::vector<double> values(n);
  std::vector<double> av(n);
  for (std::size_t i = 0; i < n; ++i) {
    const auto v = basis.eigenvector(i);
    for (std::size_t r = 0; r < n; ++r) av[r] = k.dot(a.matrix().row(r).data(), v.data(), n);
    values[i] = basis.eigenvalue(i) * k.dot(v.data(), av.data(), n);
  }
  return Dmat::from_spectrum(basis, values);
}

Dmat fuzz(const Dmat& a, const Dmat& b) {
  require_same_dim(a, b);
  const auto& basis = b.spectrum();
  const std::size_t n = a.dim();
  // Block mask in B's eigenbasis: x_g on (i, j) when i and j share an
  // eigenspace g, zero elsewhere.
  Matrix mask(n);
  std::size_t start = 0;
  for (const auto& space : basis.eigenspaces()) {
    for (std::size_t i = start; i < start + space.multiplicity; ++i) {
      for (std::size_t j = start; j < start + space.multiplicity; ++j) mask(i, j) = space.value;
    }
    start += space.multiplicity;
  }
  const Matrix coords = hadamard(basis.to_basis(a.matrix()), mask);
  return Dmat::make(symmetrized(basis.from_basis(coords)));
}

Dmat phaser(const Dmat& a, const Dmat& b) {
  require_same_dim(a, b);
  const Matrix root = sqrt_psd(b).matrix();
  return Dmat::make(symmetrized(matmul(matmul(root, a.matrix()), root)));
}

Dmat mult(const Dmat& a, const Dmat& b) {
  require_same_dim(a, b);
  return Dmat::make(hadamard(a.matrix(), b.matrix()));
}

Dmat diag_comp(const Dmat& a, const Dmat& b) {
  require_same_dim(a, b);
  return Dmat::make(matmul(diagonal_part(a.matrix()), diagonal_part(b.matrix())));
}

Dmat compose(const Dmat& first, const Dmat& second, CompositionKind kind, BasisSlot slot) {
  const Dmat& structural = slot == BasisSlot::first_operand ? first : second;
  const Dmat& updated = slot == BasisSlot::first_operand ? second : first;
  switch (kind) {
    case CompositionKind::spider: return spider(updated, structural);
    case CompositionKind::fuzz: return fuzz(updated, structural);
    case CompositionKind::phaser: return phaser(updated, structural);
    case CompositionKind::mult: return mult(first, second);
    case CompositionKind::diag: return diag_comp(first, second);
  }
  throw Error(Errc::InvalidArgument, "unknown composition");
}

}  // namespace dmsem
