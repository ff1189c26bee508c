#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <map>
#include <memory>
#include <ostream>
#include <set>
#include <string>
#include <vector>

namespace trivalent {

enum class Connective : std::uint8_t { kVar, kNeg, kAnd, kOr };

/// Immutable propositional formula over negation, conjunction and
/// disjunction. Copies share structure; equality and ordering are
/// structural.
class Formula {
 public:
  static Formula var(std::string name);
  static Formula neg(Formula child);
  static Formula conj(Formula left, Formula right);
  static Formula disj(Formula left, Formula right);

  Connective connective() const noexcept;
  bool is_var() const noexcept { return connective() == Connective::kVar; }

  /// Variable name. Only meaningful for variables.
  const std::string& name() const;
  /// Operand of a negation.
  const Formula& child() const;
  const Formula& left() const;
  const Formula& right() const;

  /// Connective nesting depth; variables have depth 0.
  std::size_t depth() const noexcept;
  std::size_t size() const noexcept;
  std::size_t hash() const noexcept;

  friend bool operator==(const Formula& a, const Formula& b);
  friend std::strong_ordering operator<=>(const Formula& a, const Formula& b);

 private:
  struct Node;
  explicit Formula(std::shared_ptr<const Node> node) : node_(std::move(node)) {}
  std::shared_ptr<const Node> node_;
};

inline Formula operator~(Formula f) { return Formula::neg(std::move(f)); }
inline Formula operator&(Formula a, Formula b) { return Formula::conj(std::move(a), std::move(b)); }
inline Formula operator|(Formula a, Formula b) { return Formula::disj(std::move(a), std::move(b)); }

/// Prints with the minimal parentheses needed by the grammar accepted by
/// `parse` (`~` binds tighter than `&`, which binds tighter than `|`; both
/// binary connectives associate to the left).
std::string to_string(const Formula& f);
std::ostream& operator<<(std::ostream& os, const Formula& f);

/// Premise set plus single conclusion. Premises are kept sorted and free of
/// duplicates, so structural equality of inferences is set equality.
class Inference {
 public:
  Inference(std::vector<Formula> premises, Formula conclusion);

  const std::vector<Formula>& premises() const noexcept { return premises_; }
  const Formula& conclusion() const noexcept { return conclusion_; }

  friend bool operator==(const Inference&, const Inference&) = default;
  friend std::strong_ordering operator<=>(const Inference& a, const Inference& b);

 private:
  std::vector<Formula> premises_;
  Formula conclusion_;
};

std::string to_string(const Inference& inference);
std::ostream& operator<<(std::ostream& os, const Inference& inference);

/// Sorts and deduplicates a list of formulas into canonical set form.
std::vector<Formula> canonical_set(std::vector<Formula> formulas);

std::set<std::string> atoms(const Formula& f);
std::set<std::string> atoms(const std::vector<Formula>& formulas);
std::set<std::string> atoms(const Inference& inference);

/// Finite map from variable names to formulas, identity elsewhere.
class Substitution {
 public:
  Substitution() = default;
  explicit Substitution(std::map<std::string, Formula> mapping) : mapping_(std::move(mapping)) {}

  Formula operator()(const Formula& f) const;
  Inference operator()(const Inference& inference) const;

  /// `then(tau)` applies this substitution first and `tau` second.
  Substitution then(const Substitution& tau) const;

  const std::map<std::string, Formula>& mapping() const noexcept { return mapping_; }

 private:
  std::map<std::string, Formula> mapping_;
};

Formula substitute(const Formula& f, const Substitution& s);

inline constexpr std::size_t kDefaultFormulaCap = 1'000'000;

/// Number of formulas `enumerate_formulas` would produce, saturating at
/// SIZE_MAX.
std::size_t count_formulas(std::size_t atom_count, std::size_t depth);

/// All formulas over `atom_names` whose depth is at most `depth`.
///
/// Order: level by level. Level 0 is the atoms in name order. Level d lists
/// the negations of the exact-depth d-1 formulas, then every conjunction
/// (l, r) with l, r drawn from levels < d and at least one of depth d-1,
/// iterating l in outer and r in inner list order, then the disjunctions in
/// the same order. Hence the output for depth d is a prefix of the output
/// for depth d+1.
///
/// Throws ResourceError when the count would exceed `cap`.
std::vector<Formula> enumerate_formulas(const std::set<std::string>& atom_names, std::size_t depth,
                                        std::size_t cap = kDefaultFormulaCap);

}  // namespace trivalent

template <>
struct std::hash<trivalent::Formula> {
  std::size_t operator()(const trivalent::Formula& f) const noexcept { return f.hash(); }
};
