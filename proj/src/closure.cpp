#include "trivalent/closure.hpp"

#include <algorithm>
#include <bit>
#include <numeric>
#include <random>
#include <sstream>

#include "trivalent/error.hpp"
#include "trivalent/parse.hpp"

namespace trivalent {

bool InferenceSet::is_subset_of(const InferenceSet& other) const {
  return std::includes(other.members_.begin(), other.members_.end(), members_.begin(), members_.end());
}

InferenceSet InferenceSet::united(const InferenceSet& other) const {
  std::set<Inference> out = members_;
  out.insert(other.members_.begin(), other.members_.end());
  return InferenceSet(std::move(out));
}

InferenceSet InferenceSet::intersected(const InferenceSet& other) const {
  std::set<Inference> out;
  std::set_intersection(members_.begin(), members_.end(), other.members_.begin(), other.members_.end(),
                        std::inserter(out, out.end()));
  return InferenceSet(std::move(out));
}

InferenceSet InferenceSet::without(const InferenceSet& other) const {
  std::set<Inference> out;
  std::set_difference(members_.begin(), members_.end(), other.members_.begin(), other.members_.end(),
                      std::inserter(out, out.end()));
  return InferenceSet(std::move(out));
}

// ---------------------------------------------------------------------------
// UniverseSet

UniverseSet::UniverseSet(const Universe& u)
    : formulas_(u.formula_count()),
      premise_sets_(u.premise_set_count()),
      row_words_((u.formula_count() + kWordBits_ - 1) / kWordBits_),
      words_(premise_sets_ * row_words_, 0) {}

std::size_t UniverseSet::count() const {
  std::size_t total = 0;
  for (auto w : words_) total += static_cast<std::size_t>(std::popcount(w));
  return total;
}

std::vector<std::size_t> UniverseSet::ids() const {
  std::vector<std::size_t> out;
  for (std::size_t p = 0; p < premise_sets_; ++p) {
    const auto* r = row(p);
    for (std::size_t w = 0; w < row_words_; ++w) {
      for (auto bits = r[w]; bits != 0; bits &= bits - 1) {
        out.push_back(p * formulas_ + w * kWordBits_ + static_cast<std::size_t>(std::countr_zero(bits)));
      }
    }
  }
  return out;
}

UniverseSet UniverseSet::complement() const {
  UniverseSet out = *this;
  const std::size_t tail = formulas_ % kWordBits_;
  const std::uint64_t tail_mask = tail == 0 ? ~std::uint64_t{0} : (std::uint64_t{1} << tail) - 1;
  for (std::size_t p = 0; p < premise_sets_; ++p) {
    auto* r = out.row(p);
    for (std::size_t w = 0; w < row_words_; ++w) r[w] = ~r[w];
    r[row_words_ - 1] &= tail_mask;
  }
  return out;
}

UniverseSet& UniverseSet::operator|=(const UniverseSet& other) {
  for (std::size_t i = 0; i < words_.size(); ++i) words_[i] |= other.words_[i];
  return *this;
}

UniverseSet& UniverseSet::operator&=(const UniverseSet& other) {
  for (std::size_t i = 0; i < words_.size(); ++i) words_[i] &= other.words_[i];
  return *this;
}

UniverseSet& UniverseSet::operator-=(const UniverseSet& other) {
  for (std::size_t i = 0; i < words_.size(); ++i) words_[i] &= ~other.words_[i];
  return *this;
}

bool UniverseSet::is_subset_of(const UniverseSet& other) const {
  for (std::size_t i = 0; i < words_.size(); ++i) {
    if ((words_[i] & ~other.words_[i]) != 0) return false;
  }
  return true;
}

// ---------------------------------------------------------------------------
// Universe

namespace {

std::string join(const std::set<std::string>& names) {
  std::string out;
  for (const auto& n : names) {
    if (!out.empty()) out += ',';
    out += n;
  }
  return out;
}

std::string trim(std::string_view s) {
  const auto first = s.find_first_not_of(" \t\r");
  if (first == std::string_view::npos) return {};
  const auto last = s.find_last_not_of(" \t\r");
  return std::string(s.substr(first, last - first + 1));
}

std::set<std::string> parse_atom_list(const std::string& text, std::size_t position) {
  std::set<std::string> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    item = trim(item);
    if (item.empty()) continue;
    Formula f = parse(item);
    if (!f.is_var()) throw ParseError("'" + item + "' is not an atom", position);
    out.insert(item);
  }
  return out;
}

std::size_t parse_count(const std::string& text, std::size_t position) {
  std::size_t used = 0;
  try {
    const unsigned long value = std::stoul(text, &used);
    if (used == text.size()) return value;
  } catch (const std::exception&) {
  }
  throw ParseError("expected a natural number, got '" + text + "'", position);
}

}  // namespace

std::string UniverseParams::to_header() const {
  return "atoms=" + join(atoms) + "; depth=" + std::to_string(depth) + "; cap=" + std::to_string(premise_cap) +
         "; reserve=" + join(reserve);
}

UniverseParams UniverseParams::parse_header(std::string_view line) {
  UniverseParams out;
  bool saw_atoms = false;
  std::size_t start = 0;
  while (start <= line.size()) {
    std::size_t end = line.find(';', start);
    if (end == std::string_view::npos) end = line.size();
    const std::string field = trim(line.substr(start, end - start));
    const std::size_t position = start;
    start = end + 1;
    if (field.empty()) continue;
    const auto eq = field.find('=');
    if (eq == std::string::npos) throw ParseError("expected key=value in universe header", position);
    const std::string key = trim(std::string_view(field).substr(0, eq));
    const std::string value = trim(std::string_view(field).substr(eq + 1));
    if (key == "atoms") {
      out.atoms = parse_atom_list(value, position);
      saw_atoms = true;
    } else if (key == "depth") {
      out.depth = parse_count(value, position);
    } else if (key == "cap") {
      out.premise_cap = parse_count(value, position);
    } else if (key == "reserve") {
      out.reserve = parse_atom_list(value, position);
    } else {
      throw ParseError("unknown universe key '" + key + "'", position);
    }
  }
  if (!saw_atoms) throw ParseError("universe header must list atoms", 0);
  return out;
}

Universe::Universe(std::vector<Formula> formulas, std::size_t premise_cap, std::set<std::string> reserve_atoms,
                   std::size_t inference_cap)
    : premise_cap_(premise_cap), reserve_(std::move(reserve_atoms)) {
  for (auto& f : formulas) {
    if (index_.emplace(f, static_cast<std::uint32_t>(formulas_.size())).second) formulas_.push_back(std::move(f));
  }
  if (formulas_.empty()) throw PreconditionError("a universe needs at least one formula");
  if (premise_cap_ == 0) throw PreconditionError("the premise cap must be at least 1");

  const std::size_t n = formulas_.size();
  const std::size_t k = std::min(premise_cap_, n);
  const auto too_large = [&] {
    return ResourceError("universe with " + std::to_string(n) + " formulas and premise cap " +
                         std::to_string(premise_cap_) + " exceeds the inference cap of " +
                         std::to_string(inference_cap));
  };

  // Count premise sets before allocating anything.
  const std::size_t budget = inference_cap / n;
  premise_offsets_.assign(1, 0);
  long double c = 1;
  std::size_t total = 0;
  for (std::size_t j = 0; j <= k; ++j) {
    if (j > 0) c = c * static_cast<long double>(n - j + 1) / static_cast<long double>(j);
    if (c > static_cast<long double>(budget) || total + static_cast<std::size_t>(c + 0.5L) > budget) throw too_large();
    total += static_cast<std::size_t>(c + 0.5L);
    premise_offsets_.push_back(total);
  }

  binomials_.assign(n + 1, std::vector<std::size_t>(k + 2, 0));
  for (std::size_t m = 0; m <= n; ++m) {
    binomials_[m][0] = 1;
    for (std::size_t j = 1; j <= std::min(m, k + 1); ++j) {
      binomials_[m][j] = binomials_[m - 1][j - 1] + (j <= m - 1 ? binomials_[m - 1][j] : 0);
    }
  }

  premise_members_.assign(total * std::max<std::size_t>(k, 1), 0);
  premise_sizes_.assign(total, 0);
  std::vector<std::uint32_t> combo;
  for (std::size_t j = 1; j <= k; ++j) {
    combo.resize(j);
    std::iota(combo.begin(), combo.end(), 0U);
    for (std::size_t id = premise_offsets_[j]; id < premise_offsets_[j + 1]; ++id) {
      std::copy(combo.begin(), combo.end(), premise_members_.begin() + static_cast<std::ptrdiff_t>(id * k));
      premise_sizes_[id] = static_cast<std::uint8_t>(j);
      // Colexicographic successor.
      std::size_t i = 0;
      while (i + 1 < j && combo[i] + 1 == combo[i + 1]) ++i;
      ++combo[i];
      for (std::size_t t = 0; t < i; ++t) combo[t] = static_cast<std::uint32_t>(t);
    }
  }

  formula_uses_reserve_.resize(n);
  for (std::size_t i = 0; i < n; ++i) {
    const auto names = atoms(formulas_[i]);
    formula_uses_reserve_[i] =
        std::any_of(names.begin(), names.end(), [&](const std::string& a) { return reserve_.count(a) != 0; });
  }
  reserve_free_ = UniverseSet(*this);
  for (std::size_t p = 0; p < total; ++p) {
    const auto members = premise_set(p);
    if (std::any_of(members.begin(), members.end(), [&](std::uint32_t m) { return formula_uses_reserve_[m]; })) {
      continue;
    }
    for (std::size_t f = 0; f < n; ++f) {
      if (!formula_uses_reserve_[f]) reserve_free_.set(p * n + f);
    }
  }
}

Universe Universe::enumerated(const UniverseParams& params, std::size_t inference_cap) {
  auto formulas = enumerate_formulas(params.atoms, params.depth);
  for (const auto& r : params.reserve) {
    if (params.atoms.count(r) != 0) throw PreconditionError("reserve atom '" + r + "' is also a regular atom");
    formulas.push_back(Formula::var(r));
  }
  return Universe(std::move(formulas), params.premise_cap, params.reserve, inference_cap);
}

std::size_t Universe::binomial(std::size_t n, std::size_t k) const {
  if (k > n) return 0;
  return binomials_[n][k];
}

std::optional<std::size_t> Universe::formula_index(const Formula& f) const {
  auto it = index_.find(f);
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

std::optional<std::size_t> Universe::premise_set_id(std::span<const std::uint32_t> indices) const {
  std::vector<std::uint32_t> sorted(indices.begin(), indices.end());
  std::sort(sorted.begin(), sorted.end());
  if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) return std::nullopt;
  if (sorted.size() > std::min(premise_cap_, formulas_.size())) return std::nullopt;
  if (!sorted.empty() && sorted.back() >= formulas_.size()) return std::nullopt;
  std::size_t rank = 0;
  for (std::size_t i = 0; i < sorted.size(); ++i) rank += binomial(sorted[i], i + 1);
  return premise_offsets_[sorted.size()] + rank;
}

std::span<const std::uint32_t> Universe::premise_set(std::size_t id) const {
  const std::size_t k = std::min(premise_cap_, formulas_.size());
  return {premise_members_.data() + id * k, premise_sizes_[id]};
}

Inference Universe::inference(std::size_t id) const {
  const std::size_t n = formulas_.size();
  std::vector<Formula> premises;
  for (auto m : premise_set(id / n)) premises.push_back(formulas_[m]);
  return Inference(std::move(premises), formulas_[id % n]);
}

std::optional<std::size_t> Universe::inference_id(const Inference& inference) const {
  std::vector<std::uint32_t> members;
  for (const auto& g : inference.premises()) {
    auto i = formula_index(g);
    if (!i) return std::nullopt;
    members.push_back(static_cast<std::uint32_t>(*i));
  }
  auto c = formula_index(inference.conclusion());
  auto p = premise_set_id(members);
  if (!c || !p) return std::nullopt;
  return *p * formulas_.size() + *c;
}

bool Universe::uses_reserve(std::size_t id) const { return !reserve_free_.test(id); }

UniverseSet Universe::all() const { return UniverseSet(*this).complement(); }

UniverseSet Universe::select(const std::function<bool(const Inference&)>& predicate) const {
  UniverseSet out(*this);
  for (std::size_t id = 0; id < inference_count(); ++id) {
    if (predicate(inference(id))) out.set(id);
  }
  return out;
}

UniverseSet Universe::encode(const InferenceSet& set) const {
  UniverseSet out(*this);
  for (const auto& inf : set) {
    auto id = inference_id(inf);
    if (!id) throw PreconditionError("inference '" + to_string(inf) + "' is outside the universe");
    out.set(*id);
  }
  return out;
}

InferenceSet Universe::decode(const UniverseSet& set) const {
  std::set<Inference> out;
  for (auto id : set.ids()) out.insert(inference(id));
  return InferenceSet(std::move(out));
}

InferenceSet universe_inferences(const Universe& u) { return u.decode(u.all()); }

// ---------------------------------------------------------------------------
// Closures

namespace {

// Calls `visit(premise_set_id)` for every nonempty subset of `elems` (sorted
// formula indices) with at most `max_size` members, stopping early when
// `visit` returns true. Returns whether it stopped early.
template <typename Visit>
bool for_each_subset(const Universe& u, const std::vector<std::uint32_t>& elems, std::size_t start,
                     std::size_t size, std::size_t rank, std::size_t max_size, Visit& visit) {
  for (std::size_t i = start; i < elems.size(); ++i) {
    const std::size_t r = rank + u.binomial(elems[i], size + 1);
    if (visit(u.size_offset(size + 1) + r)) return true;
    if (size + 1 < max_size && for_each_subset(u, elems, i + 1, size + 1, r, max_size, visit)) return true;
  }
  return false;
}

template <typename Visit>
bool for_each_subset(const Universe& u, const std::vector<std::uint32_t>& elems, Visit&& visit) {
  const std::size_t max_size = std::min(u.premise_cap(), u.formula_count());
  return for_each_subset(u, elems, 0, 0, 0, max_size, visit);
}

void row_members(const std::uint64_t* row, std::size_t words, std::vector<std::uint32_t>& out) {
  out.clear();
  for (std::size_t w = 0; w < words; ++w) {
    for (auto bits = row[w]; bits != 0; bits &= bits - 1) {
      out.push_back(static_cast<std::uint32_t>(w * 64 + static_cast<std::size_t>(std::countr_zero(bits))));
    }
  }
}

bool row_test(const std::uint64_t* row, std::size_t f) { return (row[f / 64] >> (f % 64)) & 1U; }

void check_same_universe(const UniverseSet& s, const Universe& u) {
  if (s.formula_count() != u.formula_count() || s.premise_set_count() != u.premise_set_count()) {
    throw PreconditionError("inference set does not belong to this universe");
  }
}

}  // namespace

UniverseSet transitive_closure(const UniverseSet& base, const Universe& u, std::optional<std::uint64_t> shuffle_seed) {
  check_same_universe(base, u);
  UniverseSet out = base;
  const std::size_t words = out.words_per_row();
  std::vector<std::size_t> order(u.premise_set_count());
  std::iota(order.begin(), order.end(), std::size_t{0});
  if (shuffle_seed) std::shuffle(order.begin(), order.end(), std::mt19937_64(*shuffle_seed));

  std::vector<std::uint32_t> elems;
  std::vector<std::uint64_t> acc(words);
  bool changed = true;
  while (changed) {
    changed = false;
    for (auto pid : order) {
      std::uint64_t* row = out.row(pid);
      row_members(row, words, elems);
      if (elems.empty()) continue;
      std::copy(row, row + words, acc.begin());
      for_each_subset(u, elems, [&](std::size_t delta) {
        const std::uint64_t* d = out.row(delta);
        for (std::size_t w = 0; w < words; ++w) acc[w] |= d[w];
        return false;
      });
      if (!std::equal(acc.begin(), acc.end(), row)) {
        std::copy(acc.begin(), acc.end(), row);
        changed = true;
      }
    }
  }
  return out;
}

InferenceSet transitive_closure(const InferenceSet& base, const Universe& u) {
  return u.decode(transitive_closure(u.encode(base), u));
}

UniverseSet dual_transitive_closure(const UniverseSet& base, const Universe& u) {
  check_same_universe(base, u);
  UniverseSet inside = base;
  const std::size_t n = u.formula_count();
  const std::size_t words = inside.words_per_row();
  std::vector<std::uint32_t> members;
  std::vector<std::uint32_t> outside;
  bool changed = true;
  while (changed) {
    changed = false;
    for (std::size_t pid = 0; pid < u.premise_set_count(); ++pid) {
      std::uint64_t* row = inside.row(pid);
      row_members(row, words, members);
      if (members.empty()) continue;
      outside.clear();
      for (std::uint32_t f = 0; f < n; ++f) {
        if (!row_test(row, f)) outside.push_back(f);
      }
      for (auto phi : members) {
        // Γ => φ leaves when some Δ outside row Γ has Δ => φ outside too.
        const bool derivable = for_each_subset(u, outside, [&](std::size_t delta) {
          return !row_test(inside.row(delta), phi);
        });
        if (!derivable) continue;
        row[phi / 64] &= ~(std::uint64_t{1} << (phi % 64));
        outside.insert(std::lower_bound(outside.begin(), outside.end(), phi), phi);
        changed = true;
      }
    }
  }
  return inside;
}

InferenceSet dual_transitive_closure(const InferenceSet& base, const Universe& u) {
  return u.decode(dual_transitive_closure(u.encode(base), u));
}

namespace {

// Universe formulas plus all their subformulas, hash-consed, so that
// substitution instances can be computed on indices. The first
// formula_count() nodes are the universe formulas in universe order.
class SubformulaTable {
 public:
  explicit SubformulaTable(const Universe& u) : universe_size_(u.formula_count()) {
    nodes_.resize(universe_size_);
    for (std::size_t i = 0; i < universe_size_; ++i) ids_.emplace(u.formulas()[i], static_cast<std::uint32_t>(i));
    for (std::size_t i = 0; i < universe_size_; ++i) nodes_[i] = make_node(u.formulas()[i]);
    for (std::uint32_t i = 0; i < nodes_.size(); ++i) {
      const Node& node = nodes_[i];
      lookup_.emplace(key(node.connective, node.a, node.b), i);
    }
  }

  std::size_t size() const { return nodes_.size(); }
  std::size_t atom_count() const { return atom_names_.size(); }
  std::uint64_t atom_mask(std::uint32_t node) const { return nodes_[node].atoms; }

  // Image of `node` under the substitution atom -> image[atom]; empty when an
  // intermediate result is not in the table (then the final result cannot be
  // a universe formula either).
  std::optional<std::uint32_t> apply(std::uint32_t node, const std::vector<std::uint32_t>& image) const {
    const Node& n = nodes_[node];
    switch (n.connective) {
      case Connective::kVar: return image[n.a];
      case Connective::kNeg: {
        auto c = apply(n.a, image);
        if (!c) return std::nullopt;
        return find(Connective::kNeg, *c, 0);
      }
      case Connective::kAnd:
      case Connective::kOr: {
        auto l = apply(n.a, image);
        if (!l) return std::nullopt;
        auto r = apply(n.b, image);
        if (!r) return std::nullopt;
        return find(n.connective, *l, *r);
      }
    }
    return std::nullopt;
  }

 private:
  struct Node {
    Connective connective;
    std::uint32_t a = 0;  // atom id for variables, else first child
    std::uint32_t b = 0;
    std::uint64_t atoms = 0;
  };

  static std::uint64_t key(Connective c, std::uint32_t a, std::uint32_t b) {
    return (static_cast<std::uint64_t>(c) << 62) | (static_cast<std::uint64_t>(a) << 31) | b;
  }

  std::optional<std::uint32_t> find(Connective c, std::uint32_t a, std::uint32_t b) const {
    auto it = lookup_.find(key(c, a, b));
    if (it == lookup_.end()) return std::nullopt;
    return it->second;
  }

  std::uint32_t intern(const Formula& f) {
    auto it = ids_.find(f);
    if (it != ids_.end()) return it->second;
    Node node = make_node(f);
    const auto id = static_cast<std::uint32_t>(nodes_.size());
    nodes_.push_back(node);
    ids_.emplace(f, id);
    return id;
  }

  Node make_node(const Formula& f) {
    Node node{f.connective()};
    switch (f.connective()) {
      case Connective::kVar: {
        auto it = std::find(atom_names_.begin(), atom_names_.end(), f.name());
        if (it == atom_names_.end()) {
          if (atom_names_.size() == 64) throw ResourceError("substitution closure supports at most 64 atoms");
          atom_names_.push_back(f.name());
          it = atom_names_.end() - 1;
        }
        node.a = static_cast<std::uint32_t>(it - atom_names_.begin());
        node.atoms = std::uint64_t{1} << node.a;
        break;
      }
      case Connective::kNeg:
        node.a = intern(f.child());
        node.atoms = nodes_[node.a].atoms;
        break;
      case Connective::kAnd:
      case Connective::kOr:
        node.a = intern(f.left());
        node.b = intern(f.right());
        node.atoms = nodes_[node.a].atoms | nodes_[node.b].atoms;
        break;
    }
    return node;
  }

  std::size_t universe_size_;
  std::vector<Node> nodes_;
  std::unordered_map<Formula, std::uint32_t> ids_;
  std::unordered_map<std::uint64_t, std::uint32_t> lookup_;
  std::vector<std::string> atom_names_;
};

// Adds every universe-preserving substitution instance of inference `id`.
void add_instances(const Universe& u, const SubformulaTable& table, std::size_t id, UniverseSet& out) {
  const std::size_t n = u.formula_count();
  const auto premises = u.premise_set(id / n);
  const auto conclusion = static_cast<std::uint32_t>(id % n);

  std::uint64_t mask = table.atom_mask(conclusion);
  for (auto m : premises) mask |= table.atom_mask(m);
  std::vector<std::uint32_t> used;
  for (std::uint32_t a = 0; a < table.atom_count(); ++a) {
    if ((mask >> a) & 1U) used.push_back(a);
  }

  // Each used atom ranges over every table node: an atom's image is a
  // subformula of some resulting universe formula.
  std::vector<std::uint32_t> image(table.atom_count(), 0);
  std::vector<std::uint32_t> choice(used.size(), 0);
  std::vector<std::uint32_t> mapped;
  const auto candidates = static_cast<std::uint32_t>(table.size());
  while (true) {
    for (std::size_t i = 0; i < used.size(); ++i) image[used[i]] = choice[i];
    bool ok = true;
    mapped.clear();
    for (auto m : premises) {
      auto r = table.apply(m, image);
      if (!r || *r >= n) {
        ok = false;
        break;
      }
      mapped.push_back(*r);
    }
    std::optional<std::uint32_t> c;
    if (ok) c = table.apply(conclusion, image);
    if (ok && c && *c < n) {
      std::sort(mapped.begin(), mapped.end());
      mapped.erase(std::unique(mapped.begin(), mapped.end()), mapped.end());
      if (auto pid = u.premise_set_id(mapped)) out.set(*pid * n + *c);
    }

    std::size_t i = 0;
    while (i < choice.size() && ++choice[i] == candidates) choice[i++] = 0;
    if (i == choice.size()) break;
  }
}

}  // namespace

UniverseSet tarskian_closure(const UniverseSet& base, const Universe& u) {
  check_same_universe(base, u);
  const std::size_t n = u.formula_count();
  const std::size_t words = base.words_per_row();
  const SubformulaTable table(u);

  UniverseSet out = base;
  for (std::uint32_t f = 0; f < n; ++f) {
    const std::uint32_t single[] = {f};
    out.set(*u.premise_set_id(single) * n + f);
  }

  std::vector<bool> substituted(u.inference_count(), false);
  std::vector<std::uint32_t> smaller;
  while (true) {
    const UniverseSet before = out;

    // (M): premise sets are numbered by size, so one ascending pass
    // propagates through every chain of one-element extensions.
    for (std::size_t pid = 1; pid < u.premise_set_count(); ++pid) {
      const auto members = u.premise_set(pid);
      std::uint64_t* row = out.row(pid);
      for (std::size_t skip = 0; skip < members.size(); ++skip) {
        smaller.clear();
        for (std::size_t i = 0; i < members.size(); ++i) {
          if (i != skip) smaller.push_back(members[i]);
        }
        const std::uint64_t* sub = out.row(*u.premise_set_id(smaller));
        for (std::size_t w = 0; w < words; ++w) row[w] |= sub[w];
      }
    }

    out = transitive_closure(out, u);

    // (S)
    for (auto id : out.ids()) {
      if (substituted[id]) continue;
      substituted[id] = true;
      add_instances(u, table, id, out);
    }

    if (out == before) break;
  }
  return out;
}

InferenceSet tarskian_closure(const InferenceSet& base, const Universe& u) {
  return u.decode(tarskian_closure(u.encode(base), u));
}

OperatorLawReport check_operator_laws(const Universe& u, std::span<const OperatorLawSample> samples,
                                      std::uint64_t order_seed) {
  OperatorLawReport report;
  std::size_t index = 0;
  for (const auto& sample : samples) {
    const auto& x = sample.base;
    const auto& y = sample.larger;
    auto expect = [&](bool holds, const std::string& law) {
      ++report.checks;
      if (!holds) report.failures.push_back("sample " + std::to_string(index) + ": " + law);
    };
    if (!x.is_subset_of(y)) {
      report.failures.push_back("sample " + std::to_string(index) + ": larger set does not contain the base");
      ++index;
      continue;
    }

    const auto tx = transitive_closure(x, u);
    const auto ty = transitive_closure(y, u);
    expect(x.is_subset_of(tx), "T is not extensive");
    expect(tx.is_subset_of(ty), "T is not monotone");
    expect(transitive_closure(tx, u) == tx, "T is not idempotent");
    expect(transitive_closure(x, u, order_seed + index) == tx, "T depends on the revisit order");

    const auto dx = dual_transitive_closure(x, u);
    const auto dy = dual_transitive_closure(y, u);
    expect(dx.is_subset_of(x), "T^d is not contracting");
    expect(dx.is_subset_of(dy), "T^d is not monotone");
    expect(dual_transitive_closure(dx, u) == dx, "T^d is not idempotent");

    expect(dx == transitive_closure(x.complement(), u).complement(), "T^d(X) differs from the complement of T of the complement");
    expect(tx == dual_transitive_closure(x.complement(), u).complement(),
           "T(X) differs from the complement of T^d of the complement");
    ++report.samples;
    ++index;
  }
  return report;
}

// ---------------------------------------------------------------------------
// Files

namespace {

bool is_header(const std::string& line) {
  const auto eq = line.find('=');
  return eq != std::string::npos && line.find("=>") == std::string::npos && trim(line.substr(0, eq)) == "atoms";
}

}  // namespace

InferenceSetDocument read_inference_set(std::istream& in) {
  InferenceSetDocument doc;
  std::string line;
  std::size_t number = 0;
  while (std::getline(in, line)) {
    ++number;
    if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    if (trim(line).empty()) continue;
    try {
      if (is_header(line)) {
        if (doc.universe || !doc.inferences.empty()) {
          throw ParseError("the universe header must come first and only once", 0);
        }
        doc.universe = UniverseParams::parse_header(line);
      } else {
        doc.inferences.insert(parse_inference(line));
      }
    } catch (const ParseError& e) {
      throw ParseError("line " + std::to_string(number) + ": " + e.message(), e.position());
    }
  }
  return doc;
}

void write_inference_set(std::ostream& out, const InferenceSet& set, const std::optional<UniverseParams>& universe) {
  if (universe) out << universe->to_header() << '\n';
  for (const auto& inf : set) out << inf << '\n';
}

}  // namespace trivalent
