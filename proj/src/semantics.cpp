#include "trivalent/semantics.hpp"

#include <algorithm>
#include <sstream>

#include "trivalent/error.hpp"

namespace trivalent {

using TV = TruthValue;

TruthValue Valuation::at(const std::string& atom) const {
  auto it = assignment_.find(atom);
  if (it == assignment_.end()) throw MissingAtomError(atom);
  return it->second;
}

bool Valuation::covers(const std::set<std::string>& atom_names) const {
  return std::all_of(atom_names.begin(), atom_names.end(),
                     [&](const std::string& a) { return assignment_.count(a) != 0; });
}

std::string to_string(const Valuation& v) {
  std::string out;
  for (const auto& [atom, value] : v.assignment()) {
    if (!out.empty()) out += ' ';
    out += atom;
    out += '=';
    out += to_char(value);
  }
  return out;
}

FormulaStandard FormulaStandard::parse(std::string_view text) {
  std::uint8_t mask = 0;
  for (std::size_t i = 0; i < text.size(); ++i) {
    auto v = truth_value_from_char(text[i]);
    if (!v) throw ParseError("formula standard values must be drawn from 0, i, 1", i);
    mask |= static_cast<std::uint8_t>(1U << index_of(*v));
  }
  return FormulaStandard(mask);
}

std::string FormulaStandard::to_string() const {
  std::string out;
  for (TV v : {TV::F, TV::I, TV::T}) {
    if (contains(v)) out += to_char(v);
  }
  return out;
}

Standard Standard::parse(std::string_view text) {
  if (text == "ss") return ss();
  if (text == "tt") return tt();
  if (text == "st") return st();
  if (text == "ts") return ts();
  const auto colon = text.find(':');
  if (colon == std::string_view::npos) {
    throw ParseError("standard must be ss, tt, st, ts or X:Y over {0,i,1}", 0);
  }
  return {FormulaStandard::parse(text.substr(0, colon)), FormulaStandard::parse(text.substr(colon + 1))};
}

std::string Standard::name() const {
  const auto s = FormulaStandard::strict();
  const auto t = FormulaStandard::tolerant();
  if ((premise == s || premise == t) && (conclusion == s || conclusion == t)) {
    return std::string(1, premise == s ? 's' : 't') + (conclusion == s ? 's' : 't');
  }
  return premise.to_string() + ":" + conclusion.to_string();
}

LogicSpec::LogicSpec(Scheme scheme, Standard standard, std::string label, bool allow_non_bnm)
    : scheme_(std::move(scheme)), standard_(standard), label_(std::move(label)) {
  if (!allow_non_bnm && !(is_boolean_normal(scheme_) && is_monotonic(scheme_))) {
    throw SchemeError("scheme '" + scheme_label(scheme_) + "' is not Boolean normal and monotonic");
  }
}

std::string LogicSpec::label() const {
  return label_.empty() ? scheme_label(scheme_) + "/" + standard_.name() : label_;
}

TruthValue eval(const Scheme& s, const Valuation& v, const Formula& f) {
  switch (f.connective()) {
    case Connective::kVar: return v.at(f.name());
    case Connective::kNeg: return s.neg(eval(s, v, f.child()));
    case Connective::kAnd: return s.conj(eval(s, v, f.left()), eval(s, v, f.right()));
    case Connective::kOr: return s.disj(eval(s, v, f.left()), eval(s, v, f.right()));
  }
  return TV::I;
}

bool satisfies(const Scheme& s, const Valuation& v, const Formula& f, FormulaStandard x) {
  return x.contains(eval(s, v, f));
}

bool satisfies_inference(const Scheme& s, const Valuation& v, const Inference& inference,
                         const Standard& standard) {
  for (const auto& gamma : inference.premises()) {
    if (!satisfies(s, v, gamma, standard.premise)) return true;
  }
  return satisfies(s, v, inference.conclusion(), standard.conclusion);
}

namespace {

void check_atom_cap(std::size_t count, std::size_t atom_cap) {
  if (count > atom_cap) {
    throw ResourceError(std::to_string(count) + " atoms exceed the atom cap of " + std::to_string(atom_cap));
  }
}

std::size_t power(std::size_t base, std::size_t exponent) {
  std::size_t out = 1;
  for (std::size_t i = 0; i < exponent; ++i) out *= base;
  return out;
}

std::vector<std::string> sorted_atoms(const Inference& inference) {
  const auto names = atoms(inference);
  return {names.begin(), names.end()};
}

// Index of the first row where the inference fails, if any.
std::optional<std::size_t> first_failing_row(const TruthTable& table, const Inference& inference,
                                             const Standard& standard) {
  std::vector<bool> premises_hold(table.rows(), true);
  for (const auto& gamma : inference.premises()) {
    const auto column = table.column(gamma);
    for (std::size_t r = 0; r < table.rows(); ++r) {
      if (!standard.premise.contains(column[r])) premises_hold[r] = false;
    }
  }
  const auto conclusion = table.column(inference.conclusion());
  for (std::size_t r = 0; r < table.rows(); ++r) {
    if (premises_hold[r] && !standard.conclusion.contains(conclusion[r])) return r;
  }
  return std::nullopt;
}

// Two-valued columns, evaluated directly with Boolean operators.
std::vector<bool> classical_column(const Formula& f, const std::vector<std::string>& names) {
  const std::size_t n = names.size();
  const std::size_t rows = std::size_t{1} << n;
  switch (f.connective()) {
    case Connective::kVar: {
      const auto it = std::lower_bound(names.begin(), names.end(), f.name());
      if (it == names.end() || *it != f.name()) throw MissingAtomError(f.name());
      const std::size_t shift = n - 1 - static_cast<std::size_t>(it - names.begin());
      std::vector<bool> out(rows);
      for (std::size_t r = 0; r < rows; ++r) out[r] = (r >> shift) & 1U;
      return out;
    }
    case Connective::kNeg: {
      auto out = classical_column(f.child(), names);
      out.flip();
      return out;
    }
    case Connective::kAnd:
    case Connective::kOr: {
      auto out = classical_column(f.left(), names);
      const auto rhs = classical_column(f.right(), names);
      const bool is_and = f.connective() == Connective::kAnd;
      for (std::size_t r = 0; r < rows; ++r) out[r] = is_and ? (out[r] && rhs[r]) : (out[r] || rhs[r]);
      return out;
    }
  }
  return {};
}

std::vector<bool> classical_premise_rows(std::span<const Formula> gamma, const std::vector<std::string>& names) {
  std::vector<bool> hold(std::size_t{1} << names.size(), true);
  for (const auto& g : gamma) {
    const auto column = classical_column(g, names);
    for (std::size_t r = 0; r < hold.size(); ++r) hold[r] = hold[r] && column[r];
  }
  return hold;
}

}  // namespace

TruthTable::TruthTable(const Scheme& s, std::vector<std::string> atom_names, std::size_t atom_cap)
    : scheme_(s), atom_names_(std::move(atom_names)) {
  std::sort(atom_names_.begin(), atom_names_.end());
  atom_names_.erase(std::unique(atom_names_.begin(), atom_names_.end()), atom_names_.end());
  check_atom_cap(atom_names_.size(), atom_cap);
  rows_ = power(3, atom_names_.size());
}

std::vector<TruthValue> TruthTable::column(const Formula& f) const {
  switch (f.connective()) {
    case Connective::kVar: {
      const auto it = std::lower_bound(atom_names_.begin(), atom_names_.end(), f.name());
      if (it == atom_names_.end() || *it != f.name()) throw MissingAtomError(f.name());
      const std::size_t stride = power(3, atom_names_.size() - 1 - static_cast<std::size_t>(it - atom_names_.begin()));
      std::vector<TruthValue> out(rows_);
      for (std::size_t r = 0; r < rows_; ++r) out[r] = kTruthValues[(r / stride) % 3];
      return out;
    }
    case Connective::kNeg: {
      auto out = column(f.child());
      for (auto& v : out) v = scheme_.neg(v);
      return out;
    }
    case Connective::kAnd: {
      auto out = column(f.left());
      const auto rhs = column(f.right());
      for (std::size_t r = 0; r < rows_; ++r) out[r] = scheme_.conj(out[r], rhs[r]);
      return out;
    }
    case Connective::kOr: {
      auto out = column(f.left());
      const auto rhs = column(f.right());
      for (std::size_t r = 0; r < rows_; ++r) out[r] = scheme_.disj(out[r], rhs[r]);
      return out;
    }
  }
  return {};
}

Valuation TruthTable::valuation(std::size_t row) const {
  Valuation v;
  std::size_t stride = rows_;
  for (const auto& name : atom_names_) {
    stride /= 3;
    v.set(name, kTruthValues[(row / stride) % 3]);
  }
  return v;
}

bool is_valid(const LogicSpec& logic, const Inference& inference, std::size_t atom_cap) {
  return !find_countervaluation(logic, inference, atom_cap);
}

std::optional<Valuation> find_countervaluation(const LogicSpec& logic, const Inference& inference,
                                               std::size_t atom_cap) {
  const TruthTable table(logic.scheme(), sorted_atoms(inference), atom_cap);
  if (auto row = first_failing_row(table, inference, logic.standard())) return table.valuation(*row);
  return std::nullopt;
}

bool is_classically_valid(const Inference& inference, std::size_t atom_cap) {
  const auto names = sorted_atoms(inference);
  check_atom_cap(names.size(), atom_cap);
  const auto hold = classical_premise_rows(inference.premises(), names);
  const auto conclusion = classical_column(inference.conclusion(), names);
  for (std::size_t r = 0; r < hold.size(); ++r) {
    if (hold[r] && !conclusion[r]) return false;
  }
  return true;
}

bool is_theorem(const LogicSpec& logic, const Formula& f, std::size_t atom_cap) {
  const auto names = atoms(f);
  const TruthTable table(logic.scheme(), {names.begin(), names.end()}, atom_cap);
  const auto column = table.column(f);
  return std::all_of(column.begin(), column.end(),
                     [&](TruthValue v) { return logic.standard().conclusion.contains(v); });
}

bool is_antitheorem(const LogicSpec& logic, std::span<const Formula> gamma, std::size_t atom_cap) {
  const auto names = atoms(std::vector<Formula>(gamma.begin(), gamma.end()));
  const TruthTable table(logic.scheme(), {names.begin(), names.end()}, atom_cap);
  std::vector<bool> all_designated(table.rows(), true);
  for (const auto& g : gamma) {
    const auto column = table.column(g);
    for (std::size_t r = 0; r < table.rows(); ++r) {
      if (!logic.standard().premise.contains(column[r])) all_designated[r] = false;
    }
  }
  return std::none_of(all_designated.begin(), all_designated.end(), [](bool b) { return b; });
}

bool is_classical_tautology(const Formula& f, std::size_t atom_cap) {
  const auto set = atoms(f);
  const std::vector<std::string> names(set.begin(), set.end());
  check_atom_cap(names.size(), atom_cap);
  const auto column = classical_column(f, names);
  return std::all_of(column.begin(), column.end(), [](bool b) { return b; });
}

bool is_classically_unsatisfiable(std::span<const Formula> gamma, std::size_t atom_cap) {
  const auto set = atoms(std::vector<Formula>(gamma.begin(), gamma.end()));
  const std::vector<std::string> names(set.begin(), set.end());
  check_atom_cap(names.size(), atom_cap);
  const auto hold = classical_premise_rows(gamma, names);
  return std::none_of(hold.begin(), hold.end(), [](bool b) { return b; });
}

}  // namespace trivalent
