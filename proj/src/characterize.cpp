#include "trivalent/characterize.hpp"

#include <algorithm>
#include <random>

#include "trivalent/error.hpp"
#include "trivalent/parse.hpp"

namespace trivalent {

std::vector<Formula> delta_witness(const Inference& inference) {
  std::vector<Formula> delta = inference.premises();
  for (const auto& a : atoms(inference.conclusion())) {
    const Formula p = Formula::var(a);
    delta.push_back(p | ~p);
  }
  return canonical_set(std::move(delta));
}

bool DerivationWitness::accepted() const {
  return ss_check.holds &&
         std::all_of(tt_checks.begin(), tt_checks.end(), [](const WitnessCheck& c) { return c.holds; });
}

std::optional<DerivationWitness> derive_classical(const Inference& inference, const LogicSpec& tt_logic,
                                                  const LogicSpec& ss_logic, std::size_t atom_cap) {
  if (tt_logic.standard() != Standard::tt()) throw PreconditionError("the first logic must use the tt standard");
  if (ss_logic.standard() != Standard::ss()) throw PreconditionError("the second logic must use the ss standard");
  if (!is_classically_valid(inference, atom_cap)) return std::nullopt;

  auto delta = delta_witness(inference);
  std::vector<WitnessCheck> tt_checks;
  for (const auto& d : delta) {
    Inference step(inference.premises(), d);
    const bool holds = is_valid(tt_logic, step, atom_cap);
    tt_checks.push_back({std::move(step), holds});
  }
  Inference last(delta, inference.conclusion());
  const bool holds = is_valid(ss_logic, last, atom_cap);
  return DerivationWitness{std::move(delta), std::move(tt_checks), {std::move(last), holds}, tt_logic, ss_logic};
}

bool replay_witness(const Inference& target, const DerivationWitness& witness) {
  std::vector<Formula> formulas = target.premises();
  formulas.insert(formulas.end(), witness.delta.begin(), witness.delta.end());
  formulas.push_back(target.conclusion());
  const std::size_t cap = std::max<std::size_t>({target.premises().size(), witness.delta.size(), 1});
  const Universe u(std::move(formulas), cap);

  InferenceSet steps;
  for (const auto& c : witness.tt_checks) steps.insert(c.inference);
  steps.insert(witness.ss_check.inference);
  const auto closed = transitive_closure(u.encode(steps), u);
  return closed.test(*u.inference_id(target));
}

// ---------------------------------------------------------------------------
// Deciders and star sets

Decider::Decider(LogicSpec logic) : conjuncts_{logic}, label_(logic.label()) {}

Decider::Decider(std::vector<LogicSpec> conjuncts, std::string label)
    : conjuncts_(std::move(conjuncts)), label_(std::move(label)) {
  if (conjuncts_.empty()) throw PreconditionError("a decider needs at least one logic");
}

Decider Decider::classical() {
  Decider d;
  d.classical_ = true;
  d.label_ = "CL";
  return d;
}

bool Decider::contains(const Inference& inference) const {
  if (classical_) return is_classically_valid(inference);
  return std::all_of(conjuncts_.begin(), conjuncts_.end(),
                     [&](const LogicSpec& l) { return is_valid(l, inference); });
}

bool Decider::has_theorem(const Formula& f) const {
  if (classical_) return is_classical_tautology(f);
  return std::all_of(conjuncts_.begin(), conjuncts_.end(), [&](const LogicSpec& l) { return is_theorem(l, f); });
}

bool Decider::has_antitheorem(std::span<const Formula> gamma) const {
  if (classical_) return is_classically_unsatisfiable(gamma);
  return std::all_of(conjuncts_.begin(), conjuncts_.end(),
                     [&](const LogicSpec& l) { return is_antitheorem(l, gamma); });
}

bool Decider::in_star(const Inference& inference) const {
  return has_antitheorem(inference.premises()) || has_theorem(inference.conclusion());
}

UniverseSet members(const Decider& d, const Universe& u) {
  return u.select([&](const Inference& inf) { return d.contains(inf); });
}

UniverseSet star_members(const Decider& d, const Universe& u) {
  const std::size_t n = u.formula_count();
  std::vector<bool> theorem(n);
  for (std::size_t f = 0; f < n; ++f) theorem[f] = d.has_theorem(u.formulas()[f]);

  UniverseSet out(u);
  std::vector<Formula> gamma;
  for (std::size_t p = 0; p < u.premise_set_count(); ++p) {
    gamma.clear();
    for (auto m : u.premise_set(p)) gamma.push_back(u.formulas()[m]);
    const bool anti = d.has_antitheorem(gamma);
    for (std::size_t f = 0; f < n; ++f) {
      if (anti || theorem[f]) out.set(p * n + f);
    }
  }
  return out;
}

InferenceSet star_set(const LogicSpec& logic, const Universe& u) { return u.decode(star_members(Decider(logic), u)); }

namespace {

// Records every inference in `a` but not `b` and vice versa.
void compare_sets(Report& report, const Universe& u, const UniverseSet& a, const UniverseSet& b,
                  const std::string& check, const std::string& a_name, const std::string& b_name) {
  for (auto id : (a - b).ids()) {
    report.fail({check, u.inference(id), std::nullopt, std::nullopt, std::nullopt,
                 "in " + a_name + " but not in " + b_name});
  }
  for (auto id : (b - a).ids()) {
    report.fail({check, u.inference(id), std::nullopt, std::nullopt, std::nullopt,
                 "in " + b_name + " but not in " + a_name});
  }
}

void expect_equal(Report& report, const Universe& u, const UniverseSet& a, const UniverseSet& b,
                  const std::string& check, const std::string& a_name, const std::string& b_name) {
  ++report.instances;
  compare_sets(report, u, a, b, check, a_name, b_name);
}

Counterexample semantic_failure(const std::string& check, const Inference& inf, const LogicSpec& logic,
                                std::optional<Valuation> v, std::string detail) {
  return {check, inf, scheme_label(logic.scheme()), logic.standard().name(), std::move(v), std::move(detail)};
}

}  // namespace

Report check_td_equals_star(const Decider& logic, const Universe& u) {
  Report report;
  const auto& free = u.reserve_free();
  const auto lhs = dual_transitive_closure(members(logic, u), u) & free;
  const auto rhs = star_members(logic, u) & free;
  report.instances = free.count();
  compare_sets(report, u, lhs, rhs, "T^d(" + logic.label() + ") = " + logic.label() + "★", "T^d", "the star set");
  return report;
}

Report check_ts_collapse(const LogicSpec& ss_logic, const LogicSpec& tt_logic, const Universe& u) {
  Report report;
  const Decider meet({ss_logic, tt_logic}, ss_logic.label() + " ∩ " + tt_logic.label());
  const auto m = members(meet, u);
  report.expect_with(!m.empty(), [&] {
    return Counterexample{"SS∩TT is nonempty", std::nullopt, std::nullopt, std::nullopt, std::nullopt,
                          "the intersection has no members in the universe"};
  });
  const auto td = dual_transitive_closure(m, u) & u.reserve_free();
  report.instances += u.reserve_free().count();
  for (auto id : td.ids()) {
    report.fail({"T^d(SS∩TT) = ∅", u.inference(id), std::nullopt, std::nullopt, std::nullopt,
                 "survives the dual transitive closure of " + meet.label()});
  }
  return report;
}

Report check_union_gap(const LogicSpec& ss_logic, const LogicSpec& tt_logic) {
  Report report;
  const LogicSpec ts_logic(ss_logic.scheme(), Standard::ts());
  const Inference gap = parse_inference("p | q & ~q => p & (r | ~r)");

  report.expect(is_classically_valid(gap), {"gap inference is classically valid", gap, std::nullopt, std::nullopt,
                                            std::nullopt, "classically invalid"});
  for (const auto* logic : {&ss_logic, &tt_logic, &ts_logic}) {
    auto cv = find_countervaluation(*logic, gap);
    report.expect_with(cv.has_value(), [&] {
      return semantic_failure("gap inference is " + logic->standard().name() + "-invalid", gap, *logic,
                              std::nullopt, "no countervaluation");
    });
  }

  Valuation strict_falsifier({{"p", TruthValue::T}, {"q", TruthValue::F}, {"r", TruthValue::I}});
  Valuation tolerant_falsifier({{"p", TruthValue::F}, {"q", TruthValue::I}, {"r", TruthValue::F}});
  report.expect_with(!satisfies_inference(ss_logic.scheme(), strict_falsifier, gap, Standard::ss()), [&] {
    return semantic_failure("printed ss falsifier", gap, ss_logic, strict_falsifier, "does not falsify");
  });
  report.expect_with(!satisfies_inference(tt_logic.scheme(), tolerant_falsifier, gap, Standard::tt()), [&] {
    return semantic_failure("printed tt falsifier", gap, tt_logic, tolerant_falsifier, "does not falsify");
  });

  const Inference explosion = parse_inference("p & ~p => r");
  const Inference excluded_middle = parse_inference("=> p | ~p");
  auto expect_validity = [&](const LogicSpec& logic, const Inference& inf, bool expected) {
    const bool valid = is_valid(logic, inf);
    report.expect_with(valid == expected, [&] {
      return semantic_failure("SS and TT are incomparable", inf, logic,
                              valid ? std::nullopt : find_countervaluation(logic, inf),
                              expected ? "expected valid" : "expected invalid");
    });
  };
  expect_validity(ss_logic, explosion, true);
  expect_validity(tt_logic, explosion, false);
  expect_validity(ss_logic, excluded_middle, false);
  expect_validity(tt_logic, excluded_middle, true);
  return report;
}

Report check_union_closure_sound(const LogicSpec& ss_logic, const LogicSpec& tt_logic, const LogicSpec& st_logic,
                                 const Universe& u) {
  Report report;
  const auto base = members(Decider(ss_logic), u) | members(Decider(tt_logic), u);
  const auto closed = transitive_closure(base, u);
  for (auto id : closed.ids()) {
    const Inference inf = u.inference(id);
    report.expect_with(is_valid(st_logic, inf), [&] {
      return semantic_failure("T(SS ∪ TT) ⊆ ST", inf, st_logic, find_countervaluation(st_logic, inf),
                              "derived by cut but not st-valid");
    });
    report.expect_with(is_classically_valid(inf), [&] {
      return Counterexample{"T(SS ∪ TT) ⊆ CL", inf, std::nullopt, std::nullopt, std::nullopt,
                            "derived by cut but not classically valid"};
    });
  }
  return report;
}

// ---------------------------------------------------------------------------
// Lattices

namespace {

constexpr unsigned kSSBit = 1, kTTBit = 2, kSTBit = 4;

bool element_leq(LatticeElement a, LatticeElement b) {
  return a == b || a == LatticeElement::kMeet || b == LatticeElement::kST;
}

}  // namespace

std::string to_string(LatticeElement e) {
  switch (e) {
    case LatticeElement::kMeet: return "SS∩TT";
    case LatticeElement::kSS: return "SS";
    case LatticeElement::kTT: return "TT";
    case LatticeElement::kST: return "ST";
  }
  return "?";
}

LatticeFamily LatticeFamily::uniform(const Scheme& s) { return mixed(s, s, s); }

LatticeFamily LatticeFamily::mixed(const Scheme& ss_scheme, const Scheme& tt_scheme, const Scheme& st_scheme) {
  return {LogicSpec(ss_scheme, Standard::ss()), LogicSpec(tt_scheme, Standard::tt()),
          LogicSpec(st_scheme, Standard::st())};
}

LogicSpec LatticeFamily::ts() const { return LogicSpec(ss.scheme(), Standard::ts()); }

Decider LatticeFamily::decider(LatticeElement e) const { return trivalent::decider(*this, lattice_value(e)); }

std::string LatticeFamily::label() const { return ss.label() + ", " + tt.label() + ", " + st.label(); }

LatticeValue lattice_value(LatticeElement e) {
  switch (e) {
    case LatticeElement::kMeet: return {e, kSSBit | kTTBit};
    case LatticeElement::kSS: return {e, kSSBit};
    case LatticeElement::kTT: return {e, kTTBit};
    case LatticeElement::kST: return {e, kSTBit};
  }
  return {e, 0};
}

LatticeValue lattice_join(LatticeValue a, LatticeValue b) {
  if (element_leq(a.element, b.element)) return lattice_value(b.element);
  if (element_leq(b.element, a.element)) return lattice_value(a.element);
  return lattice_value(LatticeElement::kST);
}

LatticeValue lattice_meet(LatticeValue a, LatticeValue b) {
  LatticeElement e = LatticeElement::kMeet;
  if (element_leq(a.element, b.element)) e = a.element;
  else if (element_leq(b.element, a.element)) e = b.element;
  return {e, a.conjuncts | b.conjuncts};
}

Decider decider(const LatticeFamily& family, LatticeValue v) {
  std::vector<LogicSpec> conjuncts;
  if (v.conjuncts & kSSBit) conjuncts.push_back(family.ss);
  if (v.conjuncts & kTTBit) conjuncts.push_back(family.tt);
  if (v.conjuncts & kSTBit) conjuncts.push_back(family.st);
  if (conjuncts.size() == 1) return Decider(conjuncts.front());
  std::string label;
  for (const auto& c : conjuncts) label += (label.empty() ? "" : " ∩ ") + c.label();
  return Decider(std::move(conjuncts), label);
}

Report verify_lattices(const LatticeFamily& family, std::span<const Inference> sample) {
  Report report;
  std::vector<LatticeValue> elements;
  for (auto e : kLatticeElements) elements.push_back(lattice_value(e));

  for (const auto& inf : sample) {
    unsigned bits = 0;
    if (is_valid(family.ss, inf)) bits |= kSSBit;
    if (is_valid(family.tt, inf)) bits |= kTTBit;
    if (is_valid(family.st, inf)) bits |= kSTBit;
    const auto in = [&](LatticeValue v) { return (bits & v.conjuncts) == v.conjuncts; };
    const auto expect = [&](bool holds, const std::string& law) {
      report.expect_with(holds, [&] {
        return Counterexample{law, inf, std::nullopt, std::nullopt, std::nullopt,
                              "membership differs for " + family.label()};
      });
    };

    for (auto x : elements) {
      const std::string xs = to_string(x.element);
      expect(in(lattice_join(x, x)) == in(x), "idempotence of join at " + xs);
      expect(in(lattice_meet(x, x)) == in(x), "idempotence of meet at " + xs);
      for (auto y : elements) {
        const std::string xy = xs + ", " + to_string(y.element);
        if (element_leq(x.element, y.element)) expect(!in(x) || in(y), "inclusion order at " + xy);
        const auto m = lattice_meet(x, y);
        const auto j = lattice_join(x, y);
        expect(in(m) == in(lattice_value(m.element)), "meet names its element at " + xy);
        expect(!(in(x) || in(y)) || in(j), "join bounds both arguments at " + xy);
        expect(in(j) == in(lattice_join(y, x)), "commutativity of join at " + xy);
        expect(in(m) == in(lattice_meet(y, x)), "commutativity of meet at " + xy);
        expect(in(lattice_join(x, m)) == in(x), "absorption x ⊔ (x ⊓ y) at " + xy);
        expect(in(lattice_meet(x, j)) == in(x), "absorption x ⊓ (x ⊔ y) at " + xy);
        for (auto z : elements) {
          const std::string xyz = xy + ", " + to_string(z.element);
          expect(in(lattice_join(lattice_join(x, y), z)) == in(lattice_join(x, lattice_join(y, z))),
                 "associativity of join at " + xyz);
          expect(in(lattice_meet(lattice_meet(x, y), z)) == in(lattice_meet(x, lattice_meet(y, z))),
                 "associativity of meet at " + xyz);
        }
      }
    }
    const auto ss_tt = lattice_join(lattice_value(LatticeElement::kSS), lattice_value(LatticeElement::kTT));
    expect(in(ss_tt) == is_classically_valid(inf), "SS ⊔ TT agrees with classical validity");
  }
  return report;
}

Report check_lattice_order(const LatticeFamily& family, const Universe& u) {
  Report report;
  std::vector<UniverseSet> sets;
  for (auto e : kLatticeElements) sets.push_back(members(family.decider(e), u));
  for (std::size_t x = 0; x < sets.size(); ++x) {
    for (std::size_t y = 0; y < sets.size(); ++y) {
      const bool included = sets[x].is_subset_of(sets[y]);
      const bool absorbed = transitive_closure(sets[x] | sets[y], u) == sets[y];
      report.expect_with(included == absorbed, [&] {
        return Counterexample{"X ⊆ Y iff T(X ∪ Y) = Y", std::nullopt, std::nullopt, std::nullopt, std::nullopt,
                              "X = " + to_string(kLatticeElements[x]) + ", Y = " + to_string(kLatticeElements[y]) +
                                  (included ? ": included but not absorbed" : ": absorbed but not included")};
      });
    }
  }
  return report;
}

Report verify_star_lattice(const LatticeFamily& family, const Universe& u) {
  Report report;
  const auto& free = u.reserve_free();
  const Decider ss(family.ss), tt(family.tt), st(family.st), ts(family.ts());
  const Decider cl = Decider::classical();

  const auto ss_star = star_members(ss, u);
  const auto tt_star = star_members(tt, u);
  const auto st_star = star_members(st, u);
  const auto cl_star = star_members(cl, u);
  const auto ts_star = star_members(ts, u);
  const auto top = ss_star | tt_star;
  const UniverseSet empty(u);

  expect_equal(report, u, top, st_star, "SS★ ∪ TT★ = ST★", "SS★ ∪ TT★", "ST★");
  expect_equal(report, u, st_star, cl_star, "ST★ = CL★", "ST★", "CL★");
  expect_equal(report, u, ts_star, empty, "TS★ = ∅", "TS★", "∅");
  expect_equal(report, u, dual_transitive_closure(empty, u), ts_star, "T^d(∅) = TS★", "T^d(∅)", "TS★");
  expect_equal(report, u, dual_transitive_closure(top, u) & free, top & free, "T^d(SS★ ∪ TT★) = SS★ ∪ TT★",
               "T^d(SS★ ∪ TT★)", "SS★ ∪ TT★");
  expect_equal(report, u, dual_transitive_closure(ss_star & tt_star, u) & free, ts_star & free,
               "T^d(SS★ ∩ TT★) = TS★", "T^d(SS★ ∩ TT★)", "TS★");
  report.expect(ts_star.is_subset_of(ss_star) && ts_star.is_subset_of(tt_star),
                {"TS★ ⊆ SS★, TT★", std::nullopt, std::nullopt, std::nullopt, std::nullopt, "inclusion fails"});

  // The four elements and their operations, compared on reserve-free inferences.
  const std::vector<std::pair<std::string, UniverseSet>> elements{
      {"TS★", ts_star}, {"SS★", ss_star}, {"TT★", tt_star}, {"SS★ ∪ TT★", top}};
  const auto meet = [&](const UniverseSet& a, const UniverseSet& b) { return dual_transitive_closure(a & b, u); };
  const auto same = [&](const UniverseSet& a, const UniverseSet& b) { return (a & free) == (b & free); };
  const auto law = [&](bool holds, const std::string& name) {
    report.expect(holds, {name, std::nullopt, std::nullopt, std::nullopt, std::nullopt, "set identity fails"});
  };
  for (const auto& [xn, x] : elements) {
    law(same(meet(x, x), x), "idempotence of star meet at " + xn);
    for (const auto& [yn, y] : elements) {
      const std::string xy = xn + ", " + yn;
      const auto m = meet(x, y);
      const bool included = (x & free).is_subset_of(y & free);
      law(included == same(m, x), "X★ ⊆ Y★ iff T^d(X★ ∩ Y★) = X★ at " + xy);
      law(std::any_of(elements.begin(), elements.end(), [&](const auto& e) { return same(m, e.second); }),
          "star meet stays in the carrier at " + xy);
      law(same(m, meet(y, x)), "commutativity of star meet at " + xy);
      law(same(x | m, x), "absorption X★ ∪ (X★ ⊓ Y★) at " + xy);
      law(same(meet(x, x | y), x), "absorption X★ ⊓ (X★ ∪ Y★) at " + xy);
      for (const auto& [zn, z] : elements) {
        law(same(meet(m, z), meet(x, meet(y, z))), "associativity of star meet at " + xy + ", " + zn);
      }
    }
  }

  const auto membership = [&](const Decider& d, const std::string& text, bool expected) {
    const Inference inf = parse_inference(text);
    report.expect(d.in_star(inf) == expected,
                  {"star membership", inf, std::nullopt, std::nullopt, std::nullopt,
                   std::string(expected ? "expected in " : "expected outside ") + d.label() + "★"});
  };
  membership(ss, "p & ~p => q", true);
  membership(tt, "p & ~p => q", false);
  membership(tt, "p => q | ~q", true);
  membership(ss, "p => q | ~q", false);
  membership(ss, "p & ~p => q | ~q", true);
  membership(tt, "p & ~p => q | ~q", true);
  membership(ts, "p & ~p => q | ~q", false);
  return report;
}

// ---------------------------------------------------------------------------
// Tarskian properties

Report check_tarskian_properties(const Decider& logic, std::span<const Inference> sample, std::uint64_t seed) {
  Report report;
  if (sample.empty()) return report;
  std::mt19937_64 rng(seed);
  const auto pick = [&](std::size_t n) { return static_cast<std::size_t>(rng() % n); };
  const auto fail = [&](const std::string& property, const Inference& inf, const std::string& detail) {
    return Counterexample{property, inf, std::nullopt, std::nullopt, std::nullopt, logic.label() + ": " + detail};
  };

  const std::size_t n = sample.size();
  for (std::size_t i = 0; i < n; ++i) {
    const Inference& inf = sample[i];
    const Inference& next = sample[(i + 1) % n];
    const auto& gamma = inf.premises();
    const bool valid = logic.contains(inf);

    std::vector<Formula> formulas = gamma;
    formulas.push_back(inf.conclusion());
    for (const auto& f : formulas) {
      const Inference refl({f}, f);
      report.expect_with(logic.contains(refl), [&] { return fail("reflexivity", refl, "φ => φ rejected"); });
    }

    if (valid) {
      std::vector<Formula> more = gamma;
      more.push_back(next.conclusion());
      const Inference weakened(more, inf.conclusion());
      report.expect_with(logic.contains(weakened),
                         [&] { return fail("monotonicity", weakened, "weakening of " + to_string(inf) + " rejected"); });
    }

    // Cut through {φ_i}, then through the premises of the next sample.
    const Inference target(gamma, next.conclusion());
    if (valid && logic.contains(Inference({inf.conclusion()}, next.conclusion()))) {
      report.expect_with(logic.contains(target), [&] { return fail("transitivity", target, "cut through the conclusion"); });
    }
    if (!next.premises().empty() && logic.contains(next) &&
        std::all_of(next.premises().begin(), next.premises().end(),
                    [&](const Formula& d) { return logic.contains(Inference(gamma, d)); })) {
      report.expect_with(logic.contains(target), [&] { return fail("transitivity", target, "cut through premises"); });
    }

    if (valid) {
      std::map<std::string, Formula> mapping;
      for (const auto& a : atoms(inf)) {
        const Inference& donor = sample[pick(n)];
        const std::size_t k = pick(donor.premises().size() + 1);
        mapping.emplace(a, k < donor.premises().size() ? donor.premises()[k] : donor.conclusion());
      }
      const Inference instance = Substitution(mapping)(inf);
      report.expect_with(logic.contains(instance),
                         [&] { return fail("structurality", instance, "instance of " + to_string(inf) + " rejected"); });
    }
  }
  return report;
}

Report check_tarskian_join(const LogicSpec& ss_logic, const LogicSpec& tt_logic, const Universe& u) {
  Report report;
  const auto l1 = members(Decider(ss_logic), u);
  const auto l2 = members(Decider(tt_logic), u);
  expect_equal(report, u, tarskian_closure(l1, u), l1, "Tar(SS) = SS", "Tar(SS)", "SS");
  expect_equal(report, u, tarskian_closure(l2, u), l2, "Tar(TT) = TT", "Tar(TT)", "TT");
  const auto both = l1 | l2;
  expect_equal(report, u, tarskian_closure(both, u), transitive_closure(both, u), "Tar(SS ∪ TT) = T(SS ∪ TT)",
               "Tar(SS ∪ TT)", "T(SS ∪ TT)");
  return report;
}

}  // namespace trivalent
