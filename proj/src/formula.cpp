#include "trivalent/formula.hpp"

#include <algorithm>
#include <limits>
#include <sstream>

#include "trivalent/error.hpp"

namespace trivalent {

struct Formula::Node {
  Connective connective;
  std::string name;
  std::vector<Formula> children;
  std::size_t hash;
  std::size_t depth;
  std::size_t size;
};

namespace {

std::size_t mix(std::size_t seed, std::size_t value) {
  return seed ^ (value + 0x9e3779b97f4a7c15ULL + (seed << 6) + (seed >> 2));
}

}  // namespace

Formula Formula::var(std::string name) {
  const std::size_t h = mix(0, std::hash<std::string>{}(name));
  return Formula(std::make_shared<const Node>(Node{Connective::kVar, std::move(name), {}, h, 0, 1}));
}

Formula Formula::neg(Formula child) {
  const std::size_t h = mix(1, child.hash());
  const std::size_t d = child.depth() + 1;
  const std::size_t s = child.size() + 1;
  return Formula(std::make_shared<const Node>(Node{Connective::kNeg, {}, {std::move(child)}, h, d, s}));
}

Formula Formula::conj(Formula left, Formula right) {
  const std::size_t h = mix(mix(2, left.hash()), right.hash());
  const std::size_t d = std::max(left.depth(), right.depth()) + 1;
  const std::size_t s = left.size() + right.size() + 1;
  return Formula(std::make_shared<const Node>(
      Node{Connective::kAnd, {}, {std::move(left), std::move(right)}, h, d, s}));
}

Formula Formula::disj(Formula left, Formula right) {
  const std::size_t h = mix(mix(3, left.hash()), right.hash());
  const std::size_t d = std::max(left.depth(), right.depth()) + 1;
  const std::size_t s = left.size() + right.size() + 1;
  return Formula(std::make_shared<const Node>(
      Node{Connective::kOr, {}, {std::move(left), std::move(right)}, h, d, s}));
}

Connective Formula::connective() const noexcept { return node_->connective; }
const std::string& Formula::name() const { return node_->name; }
const Formula& Formula::child() const { return node_->children.at(0); }
const Formula& Formula::left() const { return node_->children.at(0); }
const Formula& Formula::right() const { return node_->children.at(1); }
std::size_t Formula::depth() const noexcept { return node_->depth; }
std::size_t Formula::size() const noexcept { return node_->size; }
std::size_t Formula::hash() const noexcept { return node_->hash; }

bool operator==(const Formula& a, const Formula& b) {
  if (a.node_ == b.node_) return true;
  if (a.hash() != b.hash() || a.size() != b.size() || a.connective() != b.connective()) return false;
  if (a.is_var()) return a.name() == b.name();
  return a.node_->children == b.node_->children;
}

std::strong_ordering operator<=>(const Formula& a, const Formula& b) {
  if (a.node_ == b.node_) return std::strong_ordering::equal;
  if (auto c = a.connective() <=> b.connective(); c != 0) return c;
  if (a.is_var()) return a.name() <=> b.name();
  const auto& ac = a.node_->children;
  const auto& bc = b.node_->children;
  for (std::size_t i = 0; i < ac.size(); ++i) {
    if (auto c = ac[i] <=> bc[i]; c != 0) return c;
  }
  return std::strong_ordering::equal;
}

namespace {

// Binding strength used by the printer: higher binds tighter.
int precedence(Connective c) {
  switch (c) {
    case Connective::kOr: return 1;
    case Connective::kAnd: return 2;
    case Connective::kNeg: return 3;
    case Connective::kVar: return 4;
  }
  return 0;
}

void print(std::ostream& os, const Formula& f);

void print_operand(std::ostream& os, const Formula& f, int min_precedence) {
  if (precedence(f.connective()) < min_precedence) {
    os << '(';
    print(os, f);
    os << ')';
  } else {
    print(os, f);
  }
}

void print(std::ostream& os, const Formula& f) {
  switch (f.connective()) {
    case Connective::kVar:
      os << f.name();
      break;
    case Connective::kNeg:
      os << '~';
      print_operand(os, f.child(), 3);
      break;
    case Connective::kAnd:
      print_operand(os, f.left(), 2);
      os << " & ";
      print_operand(os, f.right(), 3);
      break;
    case Connective::kOr:
      print_operand(os, f.left(), 1);
      os << " | ";
      print_operand(os, f.right(), 2);
      break;
  }
}

}  // namespace

std::string to_string(const Formula& f) {
  std::ostringstream os;
  print(os, f);
  return os.str();
}

std::ostream& operator<<(std::ostream& os, const Formula& f) {
  print(os, f);
  return os;
}

std::vector<Formula> canonical_set(std::vector<Formula> formulas) {
  std::sort(formulas.begin(), formulas.end());
  formulas.erase(std::unique(formulas.begin(), formulas.end()), formulas.end());
  return formulas;
}

Inference::Inference(std::vector<Formula> premises, Formula conclusion)
    : premises_(canonical_set(std::move(premises))), conclusion_(std::move(conclusion)) {}

std::strong_ordering operator<=>(const Inference& a, const Inference& b) {
  if (auto c = a.premises_.size() <=> b.premises_.size(); c != 0) return c;
  for (std::size_t i = 0; i < a.premises_.size(); ++i) {
    if (auto c = a.premises_[i] <=> b.premises_[i]; c != 0) return c;
  }
  return a.conclusion_ <=> b.conclusion_;
}

std::string to_string(const Inference& inference) {
  std::ostringstream os;
  os << inference;
  return os.str();
}

std::ostream& operator<<(std::ostream& os, const Inference& inference) {
  bool first = true;
  for (const auto& p : inference.premises()) {
    if (!first) os << ", ";
    os << p;
    first = false;
  }
  os << (first ? "=> " : " => ") << inference.conclusion();
  return os;
}

namespace {

void collect_atoms(const Formula& f, std::set<std::string>& out) {
  switch (f.connective()) {
    case Connective::kVar:
      out.insert(f.name());
      break;
    case Connective::kNeg:
      collect_atoms(f.child(), out);
      break;
    case Connective::kAnd:
    case Connective::kOr:
      collect_atoms(f.left(), out);
      collect_atoms(f.right(), out);
      break;
  }
}

}  // namespace

std::set<std::string> atoms(const Formula& f) {
  std::set<std::string> out;
  collect_atoms(f, out);
  return out;
}

std::set<std::string> atoms(const std::vector<Formula>& formulas) {
  std::set<std::string> out;
  for (const auto& f : formulas) collect_atoms(f, out);
  return out;
}

std::set<std::string> atoms(const Inference& inference) {
  auto out = atoms(inference.premises());
  collect_atoms(inference.conclusion(), out);
  return out;
}

Formula Substitution::operator()(const Formula& f) const {
  switch (f.connective()) {
    case Connective::kVar: {
      auto it = mapping_.find(f.name());
      return it == mapping_.end() ? f : it->second;
    }
    case Connective::kNeg:
      return Formula::neg((*this)(f.child()));
    case Connective::kAnd:
      return Formula::conj((*this)(f.left()), (*this)(f.right()));
    case Connective::kOr:
      return Formula::disj((*this)(f.left()), (*this)(f.right()));
  }
  return f;
}

Inference Substitution::operator()(const Inference& inference) const {
  std::vector<Formula> premises;
  premises.reserve(inference.premises().size());
  for (const auto& p : inference.premises()) premises.push_back((*this)(p));
  return Inference(std::move(premises), (*this)(inference.conclusion()));
}

Substitution Substitution::then(const Substitution& tau) const {
  std::map<std::string, Formula> composed = tau.mapping_;
  for (const auto& [name, image] : mapping_) composed.insert_or_assign(name, tau(image));
  return Substitution(std::move(composed));
}

Formula substitute(const Formula& f, const Substitution& s) { return s(f); }

namespace {

constexpr std::size_t kSaturated = std::numeric_limits<std::size_t>::max();

std::size_t sat_add(std::size_t a, std::size_t b) { return a > kSaturated - b ? kSaturated : a + b; }

std::size_t sat_mul(std::size_t a, std::size_t b) {
  if (a != 0 && b > kSaturated / a) return kSaturated;
  return a * b;
}

}  // namespace

std::size_t count_formulas(std::size_t atom_count, std::size_t depth) {
  std::size_t previous_total = 0;  // formulas of depth < d-1
  std::size_t total = atom_count;  // formulas of depth <= d-1
  std::size_t exact = atom_count;  // formulas of depth == d-1
  for (std::size_t d = 1; d <= depth; ++d) {
    const std::size_t pairs = sat_mul(total, total) == kSaturated
                                  ? kSaturated
                                  : sat_mul(total, total) - sat_mul(previous_total, previous_total);
    const std::size_t next_exact = sat_add(exact, sat_mul(2, pairs));
    previous_total = total;
    total = sat_add(total, next_exact);
    exact = next_exact;
  }
  return total;
}

std::vector<Formula> enumerate_formulas(const std::set<std::string>& atom_names, std::size_t depth,
                                        std::size_t cap) {
  if (atom_names.empty()) throw PreconditionError("enumerate_formulas needs at least one atom");
  const std::size_t expected = count_formulas(atom_names.size(), depth);
  if (expected > cap) {
    throw ResourceError("enumerating " + std::to_string(atom_names.size()) + " atoms to depth " +
                        std::to_string(depth) + " exceeds the formula cap of " + std::to_string(cap));
  }

  std::vector<Formula> out;
  out.reserve(expected);
  for (const auto& name : atom_names) out.push_back(Formula::var(name));

  std::size_t level_begin = 0;  // first index of exact depth d-1
  for (std::size_t d = 1; d <= depth; ++d) {
    const std::size_t level_end = out.size();
    for (std::size_t i = level_begin; i < level_end; ++i) out.push_back(Formula::neg(out[i]));
    for (int op = 0; op < 2; ++op) {
      for (std::size_t i = 0; i < level_end; ++i) {
        for (std::size_t j = 0; j < level_end; ++j) {
          if (i < level_begin && j < level_begin) continue;
          out.push_back(op == 0 ? Formula::conj(out[i], out[j]) : Formula::disj(out[i], out[j]));
        }
      }
    }
    level_begin = level_end;
  }
  return out;
}

}  // namespace trivalent
