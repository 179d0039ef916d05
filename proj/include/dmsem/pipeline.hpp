#pragma once

// Conversational negation: negate the word, fetch its worldly context,
// compose the two, rescale to lambda_max = 1.

#include <optional>
#include <string>
#include <string_view>

#include "dmsem/composition.hpp"
#include "dmsem/context.hpp"
#include "dmsem/entailment.hpp"
#include "dmsem/lexicon.hpp"
#include "dmsem/negation.hpp"

namespace dmsem {

enum class NegationKind { sub, inv };

/// 'w': the negated word sets the eigenbasis (structural slot);
/// 'c': the worldly context does.
enum class Basis { w, c };

std::string_view to_string(NegationKind kind) noexcept;
std::string_view to_string(Basis basis) noexcept;
std::optional<NegationKind> parse_negation(std::string_view name) noexcept;
std::optional<Basis> parse_basis(std::string_view name) noexcept;

struct NegationConfig {
  NegationKind negation = NegationKind::sub;
  double support_weight = kDefaultSupportWeight;  // inv only
  CompositionKind composition = CompositionKind::phaser;
  Basis basis = Basis::w;  // ignored by mult and diag
};

Dmat logical_negation(const Dmat& word, NegationKind kind, double support_weight = kDefaultSupportWeight);

/// neg([[word]]) composed with the word's worldly context, rescaled to
/// lambda_max = 1. Throws UnknownWord, IsolatedWord, and ZeroMatrix when the
/// composition annihilates everything.
Dmat conversational_negate(const std::string& word, const NegationConfig& cfg, const Lexicon& lexicon,
                           const ContextProvider& context);

/// Same composition for an already-looked-up word and context.
Dmat conversational_negate(const Dmat& word, const Dmat& context, const NegationConfig& cfg);

/// neg([[word]]) alone, rescaled to lambda_max = 1: the no-context baseline.
Dmat logical_negation_only(const std::string& word, const NegationConfig& cfg, const Lexicon& lexicon);

/// 1: measure(negated, alternative); 2: measure(alternative, negated).
enum class Direction { forward = 1, backward = 2 };

double plausibility(const Dmat& negated, const Dmat& alternative, Measure measure, Direction direction);

}  // namespace dmsem
