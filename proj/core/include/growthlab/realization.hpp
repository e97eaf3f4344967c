#pragma once

#include "growthlab/grigorchuk.hpp"
#include "growthlab/group_spec.hpp"
#include "growthlab/matrix.hpp"
#include "growthlab/word.hpp"
#include "growthlab/wreath.hpp"

#include <memory>
#include <string>
#include <variant>
#include <vector>

namespace growthlab::groups {

/// Normal-form data of one element. Matrix, wreath and free-word payloads
/// are canonical (payload equality decides element equality); Grigorchuk
/// payloads are reduced words whose equality is decided by the exact
/// triviality procedure instead.
using Payload = std::variant<RatMatrix, WreathElement, Word, GrigWord>;

class GroupRealization;
using RealizationPtr = std::shared_ptr<const GroupRealization>;

/// Immutable element of a concrete realization. All arithmetic is exact.
class Element {
 public:
  Element() = default;
  Element(RealizationPtr realization, Payload payload)
      : realization_(std::move(realization)), payload_(std::move(payload)) {}

  const RealizationPtr& realization() const noexcept { return realization_; }
  const Payload& payload() const noexcept { return payload_; }

 private:
  RealizationPtr realization_;
  Payload payload_;
};

/// A concrete finitely generated group: the kind tag, its marked generating
/// tuple, and the family parameters needed for exact arithmetic.
class GroupRealization {
 public:
  cli::GroupKind kind = cli::GroupKind::Free;
  int generator_count = 0;
  std::vector<std::string> generator_names;
  std::vector<Payload> generator_payloads;

  int lamp_modulus = 0;    // lamplighter
  OmegaSequence omega;     // grigorchuk

  /// Portrait depth of the coarse Grigorchuk key. Correctness never depends
  /// on it; callers resolve key collisions with equal().
  static constexpr int kPortraitDepth = 6;

  /// True when canonical keys are injective (all kinds except Grigorchuk).
  bool injective_keys() const {
    return kind != cli::GroupKind::Grigorchuk;
  }
};

RealizationPtr make_realization(const cli::GroupSpec& spec);

/// Builds a matrix-kind realization directly from generator matrices.
RealizationPtr make_matrix_realization(std::vector<RatMatrix> generators);

Element identity_element(const RealizationPtr& r);
Element generator_element(const RealizationPtr& r, int index);

/// Exact product. Throws SemanticError on mixed realizations.
Element multiply(const Element& x, const Element& y);

Element invert(const Element& x);

/// True iff x and y represent the same group element. Always terminates:
/// the Grigorchuk recursion strictly shrinks word length.
bool equal(const Element& x, const Element& y);

bool is_identity(const Element& x);

/// Injective serialization of the normal form for matrix/wreath/free kinds;
/// depth-6 portrait (coarse) for the Grigorchuk kind.
std::string canonical_key(const Element& x);

/// Deterministic tie-break among elements sharing a coarse key. Empty for
/// kinds with injective keys.
std::string key_tiebreak(const Element& x);

/// Left-to-right product of generator letters; the empty word gives the
/// identity. Throws SemanticError on out-of-range generator indices.
Element evaluate_word(const RealizationPtr& r, const Word& w);

/// The closed neighbor alphabet X together with inverses, deduplicated with
/// exact equality, in a fixed order (g0, g0^-1, g1, ...).
std::vector<Element> neighbor_alphabet(const RealizationPtr& r);

}  // namespace growthlab::groups
