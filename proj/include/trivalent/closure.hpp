#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <istream>
#include <optional>
#include <ostream>
#include <set>
#include <span>
#include <string_view>
#include <unordered_map>
#include <string>
#include <vector>

#include "trivalent/formula.hpp"

namespace trivalent {

/// Finite, duplicate-free set of inferences in canonical order.
class InferenceSet {
 public:
  InferenceSet() = default;
  InferenceSet(std::initializer_list<Inference> members) : members_(members) {}
  explicit InferenceSet(std::set<Inference> members) : members_(std::move(members)) {}

  bool insert(Inference inference) { return members_.insert(std::move(inference)).second; }
  bool contains(const Inference& inference) const { return members_.count(inference) != 0; }
  std::size_t size() const noexcept { return members_.size(); }
  bool empty() const noexcept { return members_.empty(); }

  auto begin() const { return members_.begin(); }
  auto end() const { return members_.end(); }

  bool is_subset_of(const InferenceSet& other) const;
  InferenceSet united(const InferenceSet& other) const;
  InferenceSet intersected(const InferenceSet& other) const;
  InferenceSet without(const InferenceSet& other) const;

  friend bool operator==(const InferenceSet&, const InferenceSet&) = default;

 private:
  std::set<Inference> members_;
};

class Universe;

/// Subset of a universe's inferences as a bitset. Bits are grouped by
/// premise set so that all conclusions drawn from one premise set form a
/// contiguous row.
class UniverseSet {
 public:
  UniverseSet() = default;
  explicit UniverseSet(const Universe& u);

  bool test(std::size_t id) const { return (words_[word_of(id)] >> (id % formulas_ % kWordBits_)) & 1U; }
  void set(std::size_t id) { words_[word_of(id)] |= std::uint64_t{1} << (id % formulas_ % kWordBits_); }
  void reset(std::size_t id) { words_[word_of(id)] &= ~(std::uint64_t{1} << (id % formulas_ % kWordBits_)); }

  std::size_t count() const;
  bool empty() const { return count() == 0; }
  std::vector<std::size_t> ids() const;

  /// Relative complement within the universe.
  UniverseSet complement() const;
  UniverseSet& operator|=(const UniverseSet& other);
  UniverseSet& operator&=(const UniverseSet& other);
  /// Set difference.
  UniverseSet& operator-=(const UniverseSet& other);
  friend UniverseSet operator|(UniverseSet a, const UniverseSet& b) { return a |= b; }
  friend UniverseSet operator&(UniverseSet a, const UniverseSet& b) { return a &= b; }
  friend UniverseSet operator-(UniverseSet a, const UniverseSet& b) { return a -= b; }
  bool is_subset_of(const UniverseSet& other) const;

  friend bool operator==(const UniverseSet&, const UniverseSet&) = default;

  std::size_t formula_count() const noexcept { return formulas_; }
  std::size_t premise_set_count() const noexcept { return premise_sets_; }
  std::size_t words_per_row() const noexcept { return row_words_; }
  std::uint64_t* row(std::size_t premise_set) { return words_.data() + premise_set * row_words_; }
  const std::uint64_t* row(std::size_t premise_set) const { return words_.data() + premise_set * row_words_; }

 private:
  static constexpr std::size_t kWordBits_ = 64;
  std::size_t word_of(std::size_t id) const {
    return (id / formulas_) * row_words_ + (id % formulas_) / kWordBits_;
  }
  friend class Universe;

  std::size_t formulas_ = 0;
  std::size_t premise_sets_ = 0;
  std::size_t row_words_ = 0;
  std::vector<std::uint64_t> words_;
};

inline constexpr std::size_t kDefaultInferenceCap = 5'000'000;

/// Parameters of an enumerated universe, as written in the header line of
/// an inference-set file: `atoms=p,q; depth=1; cap=2; reserve=r`.
struct UniverseParams {
  std::set<std::string> atoms{"p", "q"};
  std::size_t depth = 1;
  std::size_t premise_cap = 2;
  std::set<std::string> reserve{"r"};

  std::string to_header() const;
  static UniverseParams parse_header(std::string_view line);
  friend bool operator==(const UniverseParams&, const UniverseParams&) = default;
};

/// Finite carrier for closure computations: a set of formulas and a cap on
/// premise-set size. Its inferences are all Γ => φ with Γ a subset of the
/// formulas of size at most the cap and φ one of the formulas. Reserve atoms
/// are variables set aside as fresh; inferences mentioning them are excluded
/// from comparisons that need a fresh variable.
///
/// Inference ids are `premise_set_id * formula_count + formula_index`.
/// Premise sets are numbered by size, then in colexicographic order of their
/// formula indices.
class Universe {
 public:
  /// Formulas are deduplicated, keeping first occurrences. Throws
  /// PreconditionError for an empty formula list or a zero cap, and
  /// ResourceError when the inference count exceeds `inference_cap`.
  Universe(std::vector<Formula> formulas, std::size_t premise_cap, std::set<std::string> reserve_atoms = {},
           std::size_t inference_cap = kDefaultInferenceCap);

  /// Formulas are enumerate_formulas(atoms, depth) followed by each reserve
  /// atom as a bare variable.
  static Universe enumerated(const UniverseParams& params, std::size_t inference_cap = kDefaultInferenceCap);

  const std::vector<Formula>& formulas() const noexcept { return formulas_; }
  std::size_t formula_count() const noexcept { return formulas_.size(); }
  std::size_t premise_cap() const noexcept { return premise_cap_; }
  const std::set<std::string>& reserve_atoms() const noexcept { return reserve_; }
  std::size_t premise_set_count() const noexcept { return premise_offsets_.back(); }
  std::size_t inference_count() const noexcept { return premise_set_count() * formula_count(); }

  std::optional<std::size_t> formula_index(const Formula& f) const;
  /// Id of the premise set with these formula indices (any order, no
  /// duplicates); empty when larger than the cap.
  std::optional<std::size_t> premise_set_id(std::span<const std::uint32_t> indices) const;
  std::span<const std::uint32_t> premise_set(std::size_t id) const;

  Inference inference(std::size_t id) const;
  std::optional<std::size_t> inference_id(const Inference& inference) const;
  bool uses_reserve(std::size_t id) const;

  /// Inferences mentioning no reserve atom.
  const UniverseSet& reserve_free() const noexcept { return reserve_free_; }
  UniverseSet all() const;
  UniverseSet select(const std::function<bool(const Inference&)>& predicate) const;

  /// Throws PreconditionError for inferences outside the universe.
  UniverseSet encode(const InferenceSet& set) const;
  InferenceSet decode(const UniverseSet& set) const;

  /// Combinatorial rank helpers shared by the closure algorithms.
  std::size_t binomial(std::size_t n, std::size_t k) const;
  std::size_t size_offset(std::size_t size) const { return premise_offsets_[size]; }

 private:
  std::vector<Formula> formulas_;
  std::size_t premise_cap_;
  std::set<std::string> reserve_;
  std::vector<std::size_t> premise_offsets_;  // first id of each premise-set size; back() is the total
  std::vector<std::uint32_t> premise_members_;  // flattened, premise_cap_ slots per set
  std::vector<std::uint8_t> premise_sizes_;
  std::vector<std::vector<std::size_t>> binomials_;
  std::vector<bool> formula_uses_reserve_;
  UniverseSet reserve_free_;
  std::unordered_map<Formula, std::uint32_t> index_;
};

/// All inferences expressible in `u`, in id order.
InferenceSet universe_inferences(const Universe& u);

/// Least superset of `base` (within `u`) closed under cut: whenever some
/// nonempty Δ (|Δ| <= cap) has Δ => φ in the set and Γ => δ in the set for
/// every δ in Δ, Γ => φ is in the set. `shuffle_seed` permutes the order in
/// which premise sets are revisited; the result does not depend on it.
UniverseSet transitive_closure(const UniverseSet& base, const Universe& u,
                               std::optional<std::uint64_t> shuffle_seed = std::nullopt);
InferenceSet transitive_closure(const InferenceSet& base, const Universe& u);

/// Greatest subset of `base` whose relative complement is closed under cut.
/// Computed by peeling members derivable in one step from the complement.
UniverseSet dual_transitive_closure(const UniverseSet& base, const Universe& u);
InferenceSet dual_transitive_closure(const InferenceSet& base, const Universe& u);

/// Least superset of `base` closed under reflexivity, monotonicity (up to
/// the premise cap), cut, and universe-preserving substitution: substitution
/// instances whose formulas all stay inside the universe.
UniverseSet tarskian_closure(const UniverseSet& base, const Universe& u);
InferenceSet tarskian_closure(const InferenceSet& base, const Universe& u);

/// Law names reported by check_operator_laws.
struct OperatorLawReport {
  std::size_t samples = 0;
  std::size_t checks = 0;
  std::vector<std::string> failures;
  bool passed() const { return failures.empty(); }
};

struct OperatorLawSample {
  UniverseSet base;
  /// Superset of `base` used for the monotonicity laws.
  UniverseSet larger;
};

/// Checks, on every sample: extensivity, monotonicity and idempotence of T;
/// contraction, monotonicity and idempotence of T^d; independence of T from
/// the revisit order; and both complement identities linking T and T^d.
OperatorLawReport check_operator_laws(const Universe& u, std::span<const OperatorLawSample> samples,
                                      std::uint64_t order_seed = 1);

/// Inference-set file: optional universe header line, then one inference
/// per line; `#` starts a comment.
struct InferenceSetDocument {
  std::optional<UniverseParams> universe;
  InferenceSet inferences;
};

InferenceSetDocument read_inference_set(std::istream& in);
void write_inference_set(std::ostream& out, const InferenceSet& set,
                         const std::optional<UniverseParams>& universe = std::nullopt);

}  // namespace trivalent
