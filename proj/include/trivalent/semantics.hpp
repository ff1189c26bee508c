#pragma once

#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <set>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "trivalent/formula.hpp"
#include "trivalent/scheme.hpp"

namespace trivalent {

/// Default ceiling on the number of atoms a validity question may involve
/// (3^12 valuations).
inline constexpr std::size_t kDefaultAtomCap = 12;

/// Assignment of truth values to a declared, finite set of atoms.
class Valuation {
 public:
  Valuation() = default;
  explicit Valuation(std::map<std::string, TruthValue> assignment) : assignment_(std::move(assignment)) {}

  /// Throws MissingAtomError for undeclared atoms.
  TruthValue at(const std::string& atom) const;
  bool covers(const std::set<std::string>& atom_names) const;
  void set(const std::string& atom, TruthValue value) { assignment_[atom] = value; }

  const std::map<std::string, TruthValue>& assignment() const noexcept { return assignment_; }

  friend bool operator==(const Valuation&, const Valuation&) = default;

 private:
  std::map<std::string, TruthValue> assignment_;
};

/// "p=1 q=0 r=i".
std::string to_string(const Valuation& v);

/// Set of designated values for judging a single formula.
class FormulaStandard {
 public:
  constexpr FormulaStandard() = default;
  constexpr explicit FormulaStandard(std::uint8_t mask) : mask_(mask & 7U) {}

  static constexpr FormulaStandard strict() { return FormulaStandard(1U << index_of(TruthValue::T)); }
  static constexpr FormulaStandard tolerant() {
    return FormulaStandard((1U << index_of(TruthValue::T)) | (1U << index_of(TruthValue::I)));
  }

  constexpr bool contains(TruthValue v) const { return (mask_ >> index_of(v)) & 1U; }
  constexpr std::uint8_t mask() const { return mask_; }

  /// Characters from {0, i, 1}; the empty string is the empty standard.
  static FormulaStandard parse(std::string_view text);
  /// Values in 0, i, 1 order.
  std::string to_string() const;

  friend constexpr bool operator==(FormulaStandard, FormulaStandard) = default;

 private:
  std::uint8_t mask_ = 0;
};

/// Premise standard and conclusion standard.
struct Standard {
  FormulaStandard premise;
  FormulaStandard conclusion;

  static constexpr Standard ss() { return {FormulaStandard::strict(), FormulaStandard::strict()}; }
  static constexpr Standard tt() { return {FormulaStandard::tolerant(), FormulaStandard::tolerant()}; }
  static constexpr Standard st() { return {FormulaStandard::strict(), FormulaStandard::tolerant()}; }
  static constexpr Standard ts() { return {FormulaStandard::tolerant(), FormulaStandard::strict()}; }

  /// `ss`, `tt`, `st`, `ts`, or `X:Y` with X, Y strings over {0, i, 1}.
  static Standard parse(std::string_view text);
  /// The two-letter name for the four presets, `X:Y` otherwise.
  std::string name() const;

  friend constexpr bool operator==(const Standard&, const Standard&) = default;
};

/// A scheme together with a standard: decides membership in one set of
/// valid inferences.
class LogicSpec {
 public:
  /// Throws SchemeError when the scheme is not BNM, unless `allow_non_bnm`.
  LogicSpec(Scheme scheme, Standard standard, std::string label = {}, bool allow_non_bnm = false);

  const Scheme& scheme() const noexcept { return scheme_; }
  const Standard& standard() const noexcept { return standard_; }
  /// Label given at construction, else "<scheme>/<standard>".
  std::string label() const;

 private:
  Scheme scheme_;
  Standard standard_;
  std::string label_;
};

TruthValue eval(const Scheme& s, const Valuation& v, const Formula& f);

bool satisfies(const Scheme& s, const Valuation& v, const Formula& f, FormulaStandard x);
bool satisfies_inference(const Scheme& s, const Valuation& v, const Inference& inference, const Standard& standard);

bool is_valid(const LogicSpec& logic, const Inference& inference, std::size_t atom_cap = kDefaultAtomCap);
bool is_classically_valid(const Inference& inference, std::size_t atom_cap = kDefaultAtomCap);

/// First falsifying valuation over atoms(inference) in canonical order:
/// atoms sorted by name, the first atom most significant, values F < I < T.
std::optional<Valuation> find_countervaluation(const LogicSpec& logic, const Inference& inference,
                                               std::size_t atom_cap = kDefaultAtomCap);

/// Every valuation puts `f` into the conclusion standard.
bool is_theorem(const LogicSpec& logic, const Formula& f, std::size_t atom_cap = kDefaultAtomCap);
/// No valuation puts every member of `gamma` into the premise standard.
bool is_antitheorem(const LogicSpec& logic, std::span<const Formula> gamma,
                    std::size_t atom_cap = kDefaultAtomCap);

/// Classical counterparts used for the star set of classical logic.
bool is_classical_tautology(const Formula& f, std::size_t atom_cap = kDefaultAtomCap);
bool is_classically_unsatisfiable(std::span<const Formula> gamma, std::size_t atom_cap = kDefaultAtomCap);

/// Values of a set of formulas under every valuation of a fixed atom list,
/// rows in canonical order. Shared by the validity deciders; also useful
/// when one inference is checked against many schemes.
class TruthTable {
 public:
  /// Throws ResourceError when `atom_names` exceeds `atom_cap`.
  TruthTable(const Scheme& s, std::vector<std::string> atom_names, std::size_t atom_cap = kDefaultAtomCap);

  std::size_t rows() const noexcept { return rows_; }
  const std::vector<std::string>& atom_names() const noexcept { return atom_names_; }

  /// Column of values of `f` across all rows; atoms(f) must be listed.
  std::vector<TruthValue> column(const Formula& f) const;
  Valuation valuation(std::size_t row) const;

 private:
  Scheme scheme_;
  std::vector<std::string> atom_names_;
  std::size_t rows_;
};

}  // namespace trivalent
