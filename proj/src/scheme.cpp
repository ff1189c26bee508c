#include "trivalent/scheme.hpp"

#include <fstream>
#include <map>
#include <sstream>

#include "trivalent/error.hpp"

namespace trivalent {

using TV = TruthValue;

char to_char(TruthValue v) {
  switch (v) {
    case TV::F: return '0';
    case TV::I: return 'i';
    case TV::T: return '1';
  }
  return '?';
}

std::optional<TruthValue> truth_value_from_char(char c) {
  switch (c) {
    case '0': return TV::F;
    case 'i':
    case 'I': return TV::I;
    case '1': return TV::T;
    default: return std::nullopt;
  }
}

Scheme::Scheme(UnaryTable neg, BinaryTable conj, BinaryTable disj, std::string name)
    : neg_(neg), conj_(conj), disj_(disj), name_(std::move(name)) {}

Scheme Scheme::renamed(std::string name) const { return Scheme(neg_, conj_, disj_, std::move(name)); }

bool operator==(const Scheme& a, const Scheme& b) {
  return a.neg_ == b.neg_ && a.conj_ == b.conj_ && a.disj_ == b.disj_;
}

namespace {

bool is_classical(TV v) { return v != TV::I; }
TV from_bool(bool b) { return b ? TV::T : TV::F; }
bool to_bool(TV v) { return v == TV::T; }

}  // namespace

std::optional<NormalityViolation> find_normality_violation(const Scheme& s) {
  for (TV a : kTruthValues) {
    if (!is_classical(a)) continue;
    const TV expected = from_bool(!to_bool(a));
    if (s.neg(a) != expected) return NormalityViolation{"not", {a}, s.neg(a), expected};
  }
  for (TV a : kTruthValues) {
    for (TV b : kTruthValues) {
      if (!is_classical(a) || !is_classical(b)) continue;
      const TV and_expected = from_bool(to_bool(a) && to_bool(b));
      if (s.conj(a, b) != and_expected) return NormalityViolation{"and", {a, b}, s.conj(a, b), and_expected};
      const TV or_expected = from_bool(to_bool(a) || to_bool(b));
      if (s.disj(a, b) != or_expected) return NormalityViolation{"or", {a, b}, s.disj(a, b), or_expected};
    }
  }
  return std::nullopt;
}

std::optional<MonotonicityViolation> find_monotonicity_violation(const Scheme& s) {
  for (TV a : kTruthValues) {
    for (TV a2 : kTruthValues) {
      if (info_leq(a, a2) && !info_leq(s.neg(a), s.neg(a2))) {
        return MonotonicityViolation{"not", {a}, {a2}, s.neg(a), s.neg(a2)};
      }
    }
  }
  for (TV a : kTruthValues) {
    for (TV b : kTruthValues) {
      for (TV a2 : kTruthValues) {
        for (TV b2 : kTruthValues) {
          if (!info_leq(a, a2) || !info_leq(b, b2)) continue;
          if (!info_leq(s.conj(a, b), s.conj(a2, b2))) {
            return MonotonicityViolation{"and", {a, b}, {a2, b2}, s.conj(a, b), s.conj(a2, b2)};
          }
          if (!info_leq(s.disj(a, b), s.disj(a2, b2))) {
            return MonotonicityViolation{"or", {a, b}, {a2, b2}, s.disj(a, b), s.disj(a2, b2)};
          }
        }
      }
    }
  }
  return std::nullopt;
}

bool is_boolean_normal(const Scheme& s) { return !find_normality_violation(s); }
bool is_monotonic(const Scheme& s) { return !find_monotonicity_violation(s); }

namespace {

std::string tuple_string(const std::string& connective, const std::vector<TV>& args) {
  std::string out = connective + "(";
  for (std::size_t i = 0; i < args.size(); ++i) {
    if (i) out += ',';
    out += to_char(args[i]);
  }
  return out + ")";
}

}  // namespace

std::string describe(const MonotonicityViolation& v) {
  return tuple_string(v.connective, v.lower) + " = " + to_char(v.lower_value) + " but " +
         tuple_string(v.connective, v.upper) + " = " + to_char(v.upper_value) +
         " although the arguments are ordered";
}

std::string describe(const NormalityViolation& v) {
  return tuple_string(v.connective, v.arguments) + " = " + to_char(v.value) + ", Boolean value is " +
         to_char(v.expected);
}

Scheme bnm_scheme(unsigned code) {
  if (code >= kBnmSchemeCount) throw SchemeError("BNM scheme code out of range: " + std::to_string(code));
  const TV F = TV::F, I = TV::I, T = TV::T;
  Scheme::UnaryTable neg{T, I, F};
  // Rows and columns are indexed F, I, T.
  Scheme::BinaryTable conj{{{F, (code & 8) ? I : F, F},
                            {(code & 4) ? I : F, I, I},
                            {F, I, T}}};
  Scheme::BinaryTable disj{{{F, I, T},
                            {I, I, (code & 1) ? I : T},
                            {T, (code & 2) ? I : T, T}}};
  return Scheme(neg, conj, disj, code_label(code));
}

std::optional<unsigned> bnm_code(const Scheme& s) {
  for (unsigned code = 0; code < kBnmSchemeCount; ++code) {
    if (bnm_scheme(code) == s) return code;
  }
  return std::nullopt;
}

std::string code_label(unsigned code) {
  std::string bits;
  for (int b = 3; b >= 0; --b) bits += ((code >> b) & 1U) ? '1' : '0';
  return "id:0b" + bits;
}

std::vector<Scheme> enumerate_bnm_schemes() {
  std::vector<Scheme> out;
  out.reserve(kBnmSchemeCount);
  for (unsigned code = 0; code < kBnmSchemeCount; ++code) out.push_back(bnm_scheme(code));
  return out;
}

Scheme preset(std::string_view name) {
  if (name == "strong") return bnm_scheme(0b0000).renamed("strong");
  if (name == "weak") return bnm_scheme(0b1111).renamed("weak");
  if (name == "middle") return bnm_scheme(0b0101).renamed("middle");
  throw SchemeError("unknown scheme preset '" + std::string(name) + "' (expected strong, weak or middle)");
}

std::string scheme_label(const Scheme& s) {
  if (!s.name().empty()) return s.name();
  if (auto code = bnm_code(s)) return code_label(*code);
  return "custom";
}

namespace {

std::optional<unsigned> parse_code(std::string_view text) {
  int base = 10;
  if (text.size() > 2 && text[0] == '0' && (text[1] == 'b' || text[1] == 'B')) {
    base = 2;
    text.remove_prefix(2);
  } else if (text.size() > 2 && text[0] == '0' && (text[1] == 'x' || text[1] == 'X')) {
    base = 16;
    text.remove_prefix(2);
  }
  if (text.empty()) return std::nullopt;
  try {
    std::size_t used = 0;
    const unsigned long value = std::stoul(std::string(text), &used, base);
    if (used != text.size() || value >= kBnmSchemeCount) return std::nullopt;
    return static_cast<unsigned>(value);
  } catch (const std::exception&) {
    return std::nullopt;
  }
}

std::string trim(std::string_view s) {
  const auto first = s.find_first_not_of(" \t\r");
  if (first == std::string_view::npos) return {};
  const auto last = s.find_last_not_of(" \t\r");
  return std::string(s.substr(first, last - first + 1));
}

}  // namespace

Scheme resolve_scheme(std::string_view selector, bool allow_non_bnm, bool allow_files) {
  if (selector == "strong" || selector == "weak" || selector == "middle") return preset(selector);
  if (selector.substr(0, 3) == "id:") {
    if (auto code = parse_code(selector.substr(3))) return bnm_scheme(*code);
    throw SchemeError("invalid scheme id '" + std::string(selector) + "' (expected id:0b0000 .. id:0b1111)");
  }
  if (allow_files) {
    std::ifstream in{std::string(selector)};
    if (in) {
      std::stringstream buffer;
      buffer << in.rdbuf();
      Scheme s = parse_scheme_document(buffer.str(), allow_non_bnm);
      return s.name().empty() ? s.renamed(std::string(selector)) : s;
    }
  }
  throw SchemeError("unknown scheme '" + std::string(selector) + "'");
}

Scheme parse_scheme_document(std::string_view text, bool allow_non_bnm) {
  std::map<std::string, TV> cells;
  std::string name;
  std::size_t offset = 0;
  while (offset <= text.size()) {
    std::size_t end = text.find('\n', offset);
    if (end == std::string_view::npos) end = text.size();
    std::string_view line = text.substr(offset, end - offset);
    const std::size_t line_start = offset;
    offset = end + 1;

    if (auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);
    if (trim(line).empty()) continue;
    const auto eq = line.find('=');
    if (eq == std::string_view::npos) throw ParseError("expected 'key = value'", line_start);
    std::string key;
    for (char c : line.substr(0, eq)) {
      if (c != ' ' && c != '\t') key += c;
    }
    const std::string value = trim(line.substr(eq + 1));
    if (key == "name") {
      name = value;
      continue;
    }
    if (value.size() != 1 || !truth_value_from_char(value[0])) {
      throw ParseError("value for '" + key + "' must be one of 0, i, 1", line_start + eq + 1);
    }
    if (!cells.emplace(key, *truth_value_from_char(value[0])).second) {
      throw ParseError("duplicate entry '" + key + "'", line_start);
    }
  }

  auto take = [&](const std::string& key) {
    auto it = cells.find(key);
    if (it == cells.end()) throw SchemeError("scheme document is missing entry '" + key + "'");
    TV v = it->second;
    cells.erase(it);
    return v;
  };

  Scheme::UnaryTable neg{};
  Scheme::BinaryTable conj{};
  Scheme::BinaryTable disj{};
  for (TV a : kTruthValues) neg[index_of(a)] = take(std::string("not(") + to_char(a) + ")");
  for (TV a : kTruthValues) {
    for (TV b : kTruthValues) {
      const std::string args = std::string("(") + to_char(a) + "," + to_char(b) + ")";
      conj[index_of(a)][index_of(b)] = take("and" + args);
      disj[index_of(a)][index_of(b)] = take("or" + args);
    }
  }
  if (!cells.empty()) throw SchemeError("unknown scheme entry '" + cells.begin()->first + "'");

  Scheme s(neg, conj, disj, name);
  if (!allow_non_bnm) {
    if (auto v = find_normality_violation(s)) throw SchemeError("scheme is not Boolean normal: " + describe(*v));
    if (auto v = find_monotonicity_violation(s)) throw SchemeError("scheme is not monotonic: " + describe(*v));
  }
  return s;
}

std::string format_scheme_document(const Scheme& s) {
  std::ostringstream os;
  if (!s.name().empty()) os << "name = " << s.name() << '\n';
  for (TV a : kTruthValues) os << "not(" << to_char(a) << ") = " << to_char(s.neg(a)) << '\n';
  for (TV a : kTruthValues) {
    for (TV b : kTruthValues) os << "and(" << to_char(a) << ',' << to_char(b) << ") = " << to_char(s.conj(a, b)) << '\n';
  }
  for (TV a : kTruthValues) {
    for (TV b : kTruthValues) os << "or(" << to_char(a) << ',' << to_char(b) << ") = " << to_char(s.disj(a, b)) << '\n';
  }
  return os.str();
}

}  // namespace trivalent
