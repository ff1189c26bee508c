#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace trivalent {

/// The three truth values. The enumerator order (F < I < T) is the order
/// used for canonical valuation enumeration; it is not a logical order.
enum class TruthValue : std::uint8_t { F = 0, I = 1, T = 2 };

inline constexpr std::array<TruthValue, 3> kTruthValues{TruthValue::F, TruthValue::I, TruthValue::T};

constexpr std::size_t index_of(TruthValue v) { return static_cast<std::size_t>(v); }

/// "0", "i" or "1".
char to_char(TruthValue v);
std::optional<TruthValue> truth_value_from_char(char c);

/// Information order: the middle value sits below both classical values.
/// Reflexive, so info_leq(a, a) holds for every a.
constexpr bool info_leq(TruthValue a, TruthValue b) { return a == b || a == TruthValue::I; }

class Scheme {
 public:
  using UnaryTable = std::array<TruthValue, 3>;
  using BinaryTable = std::array<std::array<TruthValue, 3>, 3>;

  Scheme(UnaryTable neg, BinaryTable conj, BinaryTable disj, std::string name = {});

  TruthValue neg(TruthValue a) const { return neg_[index_of(a)]; }
  TruthValue conj(TruthValue a, TruthValue b) const { return conj_[index_of(a)][index_of(b)]; }
  TruthValue disj(TruthValue a, TruthValue b) const { return disj_[index_of(a)][index_of(b)]; }

  const UnaryTable& neg_table() const noexcept { return neg_; }
  const BinaryTable& conj_table() const noexcept { return conj_; }
  const BinaryTable& disj_table() const noexcept { return disj_; }

  const std::string& name() const noexcept { return name_; }
  Scheme renamed(std::string name) const;

  /// Table equality; names are ignored.
  friend bool operator==(const Scheme& a, const Scheme& b);

 private:
  UnaryTable neg_;
  BinaryTable conj_;
  BinaryTable disj_;
  std::string name_;
};

bool is_boolean_normal(const Scheme& s);
bool is_monotonic(const Scheme& s);

/// A pair of argument tuples a <= b (componentwise information order)
/// whose images are not ordered.
struct MonotonicityViolation {
  std::string connective;  // "not", "and" or "or"
  std::vector<TruthValue> lower;
  std::vector<TruthValue> upper;
  TruthValue lower_value;
  TruthValue upper_value;
};

struct NormalityViolation {
  std::string connective;
  std::vector<TruthValue> arguments;
  TruthValue value;
  TruthValue expected;
};

std::optional<MonotonicityViolation> find_monotonicity_violation(const Scheme& s);
std::optional<NormalityViolation> find_normality_violation(const Scheme& s);
std::string describe(const MonotonicityViolation& v);
std::string describe(const NormalityViolation& v);

/// Number of Boolean-normal monotonic schemes.
inline constexpr unsigned kBnmSchemeCount = 16;

/// BNM scheme for a 4-bit code. Every middle-value cell is forced except
/// four; bit 3 sets and(0,i) = i (else 0), bit 2 sets and(i,0) = i (else 0),
/// bit 1 sets or(1,i) = i (else 1), bit 0 sets or(i,1) = i (else 1).
/// Code 0 is strong Kleene, code 15 weak Kleene, code 5 middle Kleene.
Scheme bnm_scheme(unsigned code);

/// Inverse of `bnm_scheme`; empty for schemes outside the BNM class.
std::optional<unsigned> bnm_code(const Scheme& s);

/// "id:0b0101".
std::string code_label(unsigned code);

/// All 16 BNM schemes ordered by code.
std::vector<Scheme> enumerate_bnm_schemes();

/// "strong", "weak" or "middle". Throws SchemeError for anything else.
Scheme preset(std::string_view name);

/// Human-oriented label: the scheme name when set, else its code label, else
/// "custom".
std::string scheme_label(const Scheme& s);

/// Resolves `strong|weak|middle`, `id:<code>` (decimal, 0b binary or 0x hex)
/// or, when `allow_files` is set, a path to a scheme document.
Scheme resolve_scheme(std::string_view selector, bool allow_non_bnm = false, bool allow_files = true);

/// Scheme document: one `key = value` entry per table cell, keys
/// `not(a)`, `and(a,b)`, `or(a,b)` with values in {0, i, 1}, plus an
/// optional `name = ...`; `#` starts a comment. All 21 cells are required.
/// Rejects non-BNM tables unless `allow_non_bnm` is set.
Scheme parse_scheme_document(std::string_view text, bool allow_non_bnm = false);
std::string format_scheme_document(const Scheme& s);

}  // namespace trivalent
