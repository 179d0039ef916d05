#include "dmsem/pipeline.hpp"

#include "dmsem/error.hpp"

namespace dmsem {

std::string_view to_string(NegationKind kind) noexcept { return kind == NegationKind::sub ? "sub" : "inv"; }

std::string_view to_string(Basis basis) noexcept { return basis == Basis::w ? "w" : "c"; }

std::optional<NegationKind> parse_negation(std::string_view name) noexcept {
  if (name == "sub") return NegationKind::sub;
  if (name == "inv") return NegationKind::inv;
  return std::nullopt;
}

std::optional<Basis> parse_basis(std::string_view name) noexcept {
  if (name == "w") return Basis::w;
  if (name == "c") return Basis::c;
  return std::nullopt;
}

Dmat logical_negation(const Dmat& word, NegationKind kind, double support_weight) {
  return kind == NegationKind::sub ? neg_sub(word) : neg_inv(word, support_weight);
}

Dmat conversational_negate(const Dmat& word, const Dmat& context, const NegationConfig& cfg) {
  const Dmat negated = logical_negation(word, cfg.negation, cfg.support_weight);
  const BasisSlot slot = cfg.basis == Basis::w ? BasisSlot::first_operand : BasisSlot::second_operand;
  const Dmat composed = compose(negated, context, cfg.composition, slot);
  try {
    return scale_to_unit_max_eig(composed);
  } catch (const Error& e) {
    if (e.code() == Errc::ZeroMatrix) {
      throw Error(Errc::ZeroMatrix, "composition annihilated the negation; context is orthogonal to it");
    }
    throw;
  }
}

Dmat conversational_negate(const std::string& word, const NegationConfig& cfg, const Lexicon& lexicon,
                           const ContextProvider& context) {
  const Dmat& meaning = lexicon.at(word);
  return conversational_negate(meaning, context.context(word), cfg);
}

Dmat logical_negation_only(const std::string& word, const NegationConfig& cfg, const Lexicon& lexicon) {
  return scale_to_unit_max_eig(logical_negation(lexicon.at(word), cfg.negation, cfg.support_weight));
}

double plausibility(const Dmat& negated, const Dmat& alternative, Measure measure, Direction direction) {
  return direction == Direction::forward ? score(measure, negated, alternative) : score(measure, alternative, negated);
}

}  // namespace dmsem
