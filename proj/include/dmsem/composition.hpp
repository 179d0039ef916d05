#pragma once

// Meaning-update compositions. In spider, fuzz and phaser the second
// argument is structural: its eigenbasis (or square root) is what the first
// argument gets projected through. mult and diag work in the computational
// basis and are symmetric in their arguments. Outputs are not normalized.

#include <optional>
#include <string_view>

#include "dmsem/spectral.hpp"

namespace dmsem {

enum class CompositionKind { spider, fuzz, phaser, mult, diag };

/// Which argument of compose() occupies the structural slot.
enum class BasisSlot { first_operand, second_operand };

std::string_view to_string(CompositionKind kind) noexcept;
std::optional<CompositionKind> parse_composition(std::string_view name) noexcept;
/// spider, fuzz and phaser depend on the basis slot; mult and diag do not.
bool uses_basis(CompositionKind kind) noexcept;

/// sum_i x_i <i|A|i> |i><i| over B's eigenbasis: the Hadamard product of A
/// and B in B's eigenbasis.
Dmat spider(const Dmat& a, const Dmat& b);

/// sum_i x_i P_i A P_i with P_i the eigenspace projectors of B.
Dmat fuzz(const Dmat& a, const Dmat& b);

/// B^{1/2} A B^{1/2}
Dmat phaser(const Dmat& a, const Dmat& b);

/// Entrywise product.
Dmat mult(const Dmat& a, const Dmat& b);

/// dg(A) dg(B)
Dmat diag_comp(const Dmat& a, const Dmat& b);

/// Dispatch; the operand named by `slot` is passed as the structural
/// argument of spider/fuzz/phaser, the other one as the updated argument.
Dmat compose(const Dmat& first, const Dmat& second, CompositionKind kind, BasisSlot slot);

}  // namespace dmsem
