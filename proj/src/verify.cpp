#include "trivalent/verify.hpp"

#include <algorithm>
#include <array>
#include <chrono>
#include <functional>
#include <map>
#include <optional>
#include <random>
#include <set>

#include "trivalent/characterize.hpp"
#include "trivalent/closure.hpp"
#include "trivalent/corpus.hpp"
#include "trivalent/error.hpp"
#include "trivalent/scheme.hpp"
#include "trivalent/semantics.hpp"

namespace trivalent {

bool VerifyResult::passed() const {
  return std::all_of(claims.begin(), claims.end(), [](const ClaimResult& c) { return c.report.passed(); });
}

namespace {

using TV = TruthValue;

// Validity of one inference under all 16 schemes; bit c is scheme code c.
struct Profile {
  std::uint16_t ss = 0, tt = 0, st = 0, ts = 0;
  std::uint16_t all_i_refutes_ts = 0;
  bool classical = false;
};

Profile profile_of(const Inference& inf, const std::vector<Scheme>& schemes) {
  Profile out;
  out.classical = is_classically_valid(inf);
  const auto names = atoms(inf);
  Valuation all_i;
  for (const auto& a : names) all_i.set(a, TV::I);

  for (std::size_t c = 0; c < schemes.size(); ++c) {
    const TruthTable table(schemes[c], {names.begin(), names.end()});
    std::vector<bool> strict(table.rows(), true), tolerant(table.rows(), true);
    for (const auto& g : inf.premises()) {
      const auto column = table.column(g);
      for (std::size_t r = 0; r < table.rows(); ++r) {
        strict[r] = strict[r] && column[r] == TV::T;
        tolerant[r] = tolerant[r] && column[r] != TV::F;
      }
    }
    const auto conclusion = table.column(inf.conclusion());
    bool ss = true, tt = true, st = true, ts = true;
    for (std::size_t r = 0; r < table.rows(); ++r) {
      const bool c_strict = conclusion[r] == TV::T;
      const bool c_tolerant = conclusion[r] != TV::F;
      ss = ss && (!strict[r] || c_strict);
      tt = tt && (!tolerant[r] || c_tolerant);
      st = st && (!strict[r] || c_tolerant);
      ts = ts && (!tolerant[r] || c_strict);
    }
    const auto bit = static_cast<std::uint16_t>(1U << c);
    if (ss) out.ss |= bit;
    if (tt) out.tt |= bit;
    if (st) out.st |= bit;
    if (ts) out.ts |= bit;
    if (!satisfies_inference(schemes[c], all_i, inf, Standard::ts())) out.all_i_refutes_ts |= bit;
  }
  return out;
}

class Context {
 public:
  explicit Context(const VerifyOptions& options) : options_(options), schemes_(enumerate_bnm_schemes()) {}

  const VerifyOptions& options() const { return options_; }
  const std::vector<Scheme>& schemes() const { return schemes_; }

  const std::vector<Inference>& corpus_a() {
    if (!corpus_a_) corpus_a_ = exhaustive_corpus();
    return *corpus_a_;
  }
  const std::vector<Inference>& corpus_b() {
    if (!corpus_b_) corpus_b_ = random_corpus(options_.corpus_size, options_.seed);
    return *corpus_b_;
  }
  std::span<const Inference> reduced() {
    const auto& b = corpus_b();
    return {b.data(), std::min(options_.reduced_size, b.size())};
  }
  const std::vector<Profile>& profiles_a() { return profiles(corpus_a(), profiles_a_); }
  const std::vector<Profile>& profiles_b() { return profiles(corpus_b(), profiles_b_); }

  // Default closure universe and the depth-2 one.
  const Universe& u1() {
    if (!u1_) u1_ = Universe::enumerated({{"p", "q"}, 1, 2, {"r"}});
    return *u1_;
  }
  const Universe& u2() {
    if (!u2_) u2_ = Universe::enumerated({{"p"}, 2, 2, {"q"}});
    return *u2_;
  }

 private:
  const std::vector<Profile>& profiles(const std::vector<Inference>& corpus, std::optional<std::vector<Profile>>& slot) {
    if (!slot) {
      slot.emplace();
      slot->reserve(corpus.size());
      for (const auto& inf : corpus) slot->push_back(profile_of(inf, schemes_));
    }
    return *slot;
  }

  VerifyOptions options_;
  std::vector<Scheme> schemes_;
  std::optional<std::vector<Inference>> corpus_a_, corpus_b_;
  std::optional<std::vector<Profile>> profiles_a_, profiles_b_;
  std::optional<Universe> u1_, u2_;
};

Counterexample semantic(const std::string& check, const Inference& inf, const Scheme& s, const Standard& standard,
                        const std::string& detail) {
  const LogicSpec logic(s, standard);
  return {check, inf, scheme_label(s), standard.name(), find_countervaluation(logic, inf), detail};
}

Counterexample note(const std::string& check, const std::string& detail) {
  return {check, std::nullopt, std::nullopt, std::nullopt, std::nullopt, detail};
}

// ---------------------------------------------------------------------------
// Scheme enumeration

bool leq(TV a, TV b) { return a == b || a == TV::I; }
bool classical_value(TV v) { return v != TV::I; }

std::vector<Scheme::UnaryTable> brute_force_negations() {
  std::vector<Scheme::UnaryTable> out;
  for (std::size_t code = 0; code < 27; ++code) {
    Scheme::UnaryTable t{};
    for (std::size_t i = 0, c = code; i < 3; ++i, c /= 3) t[i] = kTruthValues[c % 3];
    bool ok = t[index_of(TV::F)] == TV::T && t[index_of(TV::T)] == TV::F;
    for (TV a : kTruthValues) {
      for (TV b : kTruthValues) ok = ok && (!leq(a, b) || leq(t[index_of(a)], t[index_of(b)]));
    }
    if (ok) out.push_back(t);
  }
  return out;
}

std::vector<Scheme::BinaryTable> brute_force_binary(bool conjunction) {
  std::vector<Scheme::BinaryTable> out;
  for (std::size_t code = 0; code < 19683; ++code) {
    Scheme::BinaryTable t{};
    std::size_t c = code;
    for (std::size_t i = 0; i < 3; ++i) {
      for (std::size_t j = 0; j < 3; ++j, c /= 3) t[i][j] = kTruthValues[c % 3];
    }
    bool ok = true;
    for (TV a : kTruthValues) {
      for (TV b : kTruthValues) {
        if (classical_value(a) && classical_value(b)) {
          const bool x = a == TV::T, y = b == TV::T;
          ok = ok && t[index_of(a)][index_of(b)] == (((conjunction ? (x && y) : (x || y))) ? TV::T : TV::F);
        }
        for (TV a2 : kTruthValues) {
          for (TV b2 : kTruthValues) {
            if (leq(a, a2) && leq(b, b2)) ok = ok && leq(t[index_of(a)][index_of(b)], t[index_of(a2)][index_of(b2)]);
          }
        }
      }
    }
    if (ok) out.push_back(t);
  }
  return out;
}

Report claim_schemes(Context& ctx) {
  Report r;
  const auto& all = ctx.schemes();
  r.expect(all.size() == kBnmSchemeCount, note("16 BNM schemes", "enumeration returned " + std::to_string(all.size())));

  const Scheme strong = preset("strong");
  for (std::size_t i = 0; i < all.size(); ++i) {
    const Scheme& s = all[i];
    const std::string label = scheme_label(s);
    r.expect(is_boolean_normal(s), note("Boolean normality", label));
    r.expect(is_monotonic(s), note("monotonicity", label));
    r.expect(s.neg(TV::I) == TV::I && s.conj(TV::I, TV::I) == TV::I && s.disj(TV::I, TV::I) == TV::I,
             note("middle value is absorbing on all-middle arguments", label));
    bool same_classical = true;
    for (TV a : {TV::F, TV::T}) {
      same_classical = same_classical && s.neg(a) == strong.neg(a);
      for (TV b : {TV::F, TV::T}) {
        same_classical = same_classical && s.conj(a, b) == strong.conj(a, b) && s.disj(a, b) == strong.disj(a, b);
      }
    }
    r.expect(same_classical, note("two-valued restrictions coincide", label));
    for (std::size_t j = i + 1; j < all.size(); ++j) {
      r.expect(!(s == all[j]), note("schemes are pairwise distinct", label + " = " + scheme_label(all[j])));
    }
  }

  for (const char* name : {"strong", "weak", "middle"}) {
    const Scheme p = preset(name);
    r.expect(std::find(all.begin(), all.end(), p) != all.end(), note("presets are enumerated", name));
  }

  const TV F = TV::F, I = TV::I, T = TV::T;
  const Scheme::BinaryTable strong_and{{{F, F, F}, {F, I, I}, {F, I, T}}};
  const Scheme::BinaryTable strong_or{{{F, I, T}, {I, I, T}, {T, T, T}}};
  const Scheme::BinaryTable weak_and{{{F, I, F}, {I, I, I}, {F, I, T}}};
  const Scheme::BinaryTable weak_or{{{F, I, T}, {I, I, I}, {T, I, T}}};
  const Scheme::UnaryTable kleene_not{T, I, F};
  r.expect(strong == Scheme(kleene_not, strong_and, strong_or), note("strong preset matches its printed tables", ""));
  r.expect(preset("weak") == Scheme(kleene_not, weak_and, weak_or), note("weak preset matches its printed tables", ""));

  // Per-connective filter over all tables, then the product.
  const auto negs = brute_force_negations();
  const auto conjs = brute_force_binary(true);
  const auto disjs = brute_force_binary(false);
  const std::size_t product = negs.size() * conjs.size() * disjs.size();
  r.expect(product == all.size(), note("brute-force filter agrees on the count",
                                       std::to_string(negs.size()) + " x " + std::to_string(conjs.size()) + " x " +
                                           std::to_string(disjs.size()) + " = " + std::to_string(product)));
  for (const auto& n : negs) {
    for (const auto& c : conjs) {
      for (const auto& d : disjs) {
        r.expect(std::find(all.begin(), all.end(), Scheme(n, c, d)) != all.end(),
                 note("brute-force scheme is enumerated", format_scheme_document(Scheme(n, c, d))));
      }
    }
  }
  return r;
}

// ---------------------------------------------------------------------------
// Validity claims over the corpora

Report claim_theorem1(Context& ctx) {
  Report r;
  const auto run = [&](const std::vector<Inference>& corpus, const std::vector<Profile>& profiles) {
    for (std::size_t i = 0; i < corpus.size(); ++i) {
      for (std::size_t c = 0; c < ctx.schemes().size(); ++c) {
        const bool st = (profiles[i].st >> c) & 1U;
        r.expect_with(st == profiles[i].classical, [&] {
          return semantic("st-validity coincides with classical validity", corpus[i], ctx.schemes()[c],
                          Standard::st(), st ? "st-valid but classically invalid" : "classically valid but st-invalid");
        });
      }
    }
  };
  run(ctx.corpus_a(), ctx.profiles_a());
  run(ctx.corpus_b(), ctx.profiles_b());
  return r;
}

Report claim_theorem2(Context& ctx) {
  Report r;
  const auto run = [&](const std::vector<Inference>& corpus, const std::vector<Profile>& profiles) {
    for (std::size_t i = 0; i < corpus.size(); ++i) {
      for (std::size_t c = 0; c < ctx.schemes().size(); ++c) {
        const Scheme& s = ctx.schemes()[c];
        r.expect_with(!((profiles[i].ts >> c) & 1U), [&] {
          return semantic("no inference is ts-valid", corpus[i], s, Standard::ts(), "ts-valid");
        });
        r.expect_with((profiles[i].all_i_refutes_ts >> c) & 1U, [&] {
          return semantic("the all-middle valuation refutes ts", corpus[i], s, Standard::ts(),
                          "all-middle valuation satisfies the inference");
        });
      }
    }
  };
  run(ctx.corpus_a(), ctx.profiles_a());
  run(ctx.corpus_b(), ctx.profiles_b());
  return r;
}

Report claim_theorem3(Context& ctx) {
  Report r;
  const auto& schemes = ctx.schemes();
  for (const auto& a : schemes) {
    for (const auto& b : schemes) {
      r.merge(check_union_gap(LogicSpec(a, Standard::ss()), LogicSpec(b, Standard::tt())));
    }
  }

  // Some corpus inference is classically valid but in neither SS nor TT.
  const auto& profiles = ctx.profiles_b();
  for (std::size_t a = 0; a < schemes.size(); ++a) {
    for (std::size_t b = 0; b < schemes.size(); ++b) {
      const bool separated = std::any_of(profiles.begin(), profiles.end(), [&](const Profile& p) {
        return p.classical && !((p.ss >> a) & 1U) && !((p.tt >> b) & 1U);
      });
      r.expect(separated, note("corpus separates SS ∪ TT from ST",
                               "no separating inference for ss over " + scheme_label(schemes[a]) + ", tt over " +
                                   scheme_label(schemes[b])));
    }
  }
  return r;
}

Report claim_facts(Context& ctx) {
  Report r;
  const auto& schemes = ctx.schemes();
  const auto& corpus = ctx.corpus_b();
  const auto& profiles = ctx.profiles_b();
  for (std::size_t i = 0; i < corpus.size(); ++i) {
    const Profile& p = profiles[i];
    for (std::size_t c = 0; c < schemes.size(); ++c) {
      const auto bit = static_cast<std::uint16_t>(1U << c);
      r.expect_with(!(p.ss & bit) || (p.st & bit), [&] {
        return semantic("SS ⊆ ST", corpus[i], schemes[c], Standard::st(), "ss-valid but st-invalid");
      });
      r.expect_with(!(p.tt & bit) || (p.st & bit), [&] {
        return semantic("TT ⊆ ST", corpus[i], schemes[c], Standard::st(), "tt-valid but st-invalid");
      });
    }
  }

  // Antitheorems and theorems against validity with a fresh atom.
  const Formula fresh = Formula::var("s");
  const auto sample = ctx.reduced();
  for (std::size_t i = 0; i < sample.size(); ++i) {
    const Inference& inf = sample[i];
    const Inference& other = sample[(i + 1) % sample.size()];
    for (const auto& s : schemes) {
      for (const Standard standard : {Standard::ss(), Standard::tt()}) {
        const LogicSpec logic(s, standard);
        const bool anti = is_antitheorem(logic, inf.premises());
        const Inference to_fresh(inf.premises(), fresh);
        r.expect_with(anti == is_valid(logic, to_fresh), [&] {
          return semantic("antitheorem iff valid with a fresh conclusion", to_fresh, s, standard,
                          anti ? "antitheorem but not valid" : "valid but not an antitheorem");
        });
        const Inference any_conclusion(inf.premises(), other.conclusion());
        r.expect_with(!anti || is_valid(logic, any_conclusion), [&] {
          return semantic("an antitheorem entails everything", any_conclusion, s, standard, "invalid");
        });

        const bool theorem = is_theorem(logic, inf.conclusion());
        const Inference from_fresh({fresh}, inf.conclusion());
        r.expect_with(theorem == is_valid(logic, from_fresh), [&] {
          return semantic("theorem iff valid from a fresh premise", from_fresh, s, standard,
                          theorem ? "theorem but not valid" : "valid but not a theorem");
        });
        const Inference any_premises(other.premises(), inf.conclusion());
        r.expect_with(!theorem || is_valid(logic, any_premises), [&] {
          return semantic("a theorem follows from anything", any_premises, s, standard, "invalid");
        });
      }
    }
  }
  return r;
}

// ---------------------------------------------------------------------------
// Factorization through TT and SS

Report claim_theorem4(Context& ctx) {
  Report r;
  const auto& schemes = ctx.schemes();
  std::vector<Scheme> pair_schemes = schemes;
  if (ctx.options().theorem4_pairs == SchemePairs::kNamed) {
    pair_schemes = {preset("strong"), preset("weak"), preset("middle")};
  }

  std::map<std::size_t, bool> replayed;
  const auto run = [&](std::span<const Inference> corpus, const Scheme& tt_scheme, const Scheme& ss_scheme) {
    const LogicSpec tt(tt_scheme, Standard::tt());
    const LogicSpec ss(ss_scheme, Standard::ss());
    for (std::size_t i = 0; i < corpus.size(); ++i) {
      if (!ctx.profiles_b()[i].classical) continue;
      const Inference& inf = corpus[i];
      const auto witness = derive_classical(inf, tt, ss);
      r.expect_with(witness.has_value(), [&] { return note("a witness exists", to_string(inf)); });
      if (!witness) continue;
      for (const auto& step : witness->tt_checks) {
        r.expect_with(step.holds, [&] {
          return semantic("Γ => δ is tt-valid", step.inference, tt_scheme, Standard::tt(), "witness step fails");
        });
      }
      r.expect_with(witness->ss_check.holds, [&] {
        return semantic("Δ => φ is ss-valid", witness->ss_check.inference, ss_scheme, Standard::ss(),
                        "witness step fails");
      });
      // Δ depends on the inference alone, so one replay serves every pair.
      if (replayed.emplace(i, true).second) {
        r.expect_with(replay_witness(inf, *witness), [&] {
          return Counterexample{"replay through transitive closure", inf, std::nullopt, std::nullopt, std::nullopt,
                                "the closure of the witness steps misses the target"};
        });
      }
    }
  };

  for (const auto& tt_scheme : pair_schemes) {
    for (const auto& ss_scheme : pair_schemes) run(ctx.reduced(), tt_scheme, ss_scheme);
  }
  const Scheme strong = preset("strong");
  run(ctx.corpus_b(), strong, strong);

  r.merge(check_union_closure_sound(LogicSpec(strong, Standard::ss()), LogicSpec(strong, Standard::tt()),
                                    LogicSpec(strong, Standard::st()), ctx.u1()));
  r.merge(check_union_closure_sound(LogicSpec(strong, Standard::ss()), LogicSpec(preset("weak"), Standard::tt()),
                                    LogicSpec(preset("middle"), Standard::st()), ctx.u1()));
  return r;
}

// ---------------------------------------------------------------------------
// Closure claims

std::vector<std::pair<std::string, LatticeFamily>> families() {
  return {{"strong", LatticeFamily::uniform(preset("strong"))},
          {"weak", LatticeFamily::uniform(preset("weak"))},
          {"mixed", LatticeFamily::mixed(preset("weak"), preset("strong"), preset("middle"))}};
}

Report claim_theorem5(Context& ctx) {
  Report r;
  const Formula p = Formula::var("p");
  for (const Universe* u : {&ctx.u1(), &ctx.u2()}) {
    for (const auto& [name, family] : families()) {
      for (auto e : kLatticeElements) r.merge(check_td_equals_star(family.decider(e), *u));
      r.merge(check_ts_collapse(family.ss, family.tt, *u));

      // Non-reflexivity: the identity inference does not survive.
      const auto base = members(family.decider(LatticeElement::kMeet), *u);
      const auto id = *u->inference_id(Inference({p}, p));
      r.expect(base.test(id) && !dual_transitive_closure(base, *u).test(id),
               note("T^d of SS∩TT is not reflexive", name + " family: p => p survives"));
    }
  }
  return r;
}

Report claim_operator_laws(Context& ctx) {
  Report r;
  std::size_t index = 0;
  for (const Universe* u : {&ctx.u1(), &ctx.u2()}) {
    std::mt19937_64 rng(ctx.options().seed + 1000 * ++index);
    std::vector<OperatorLawSample> samples;
    for (std::size_t s = 0; s < ctx.options().law_samples; ++s) {
      OperatorLawSample sample{UniverseSet(*u), UniverseSet(*u)};
      for (int k = 0; k < 20; ++k) sample.base.set(draw(rng, u->inference_count()));
      sample.larger = sample.base;
      for (int k = 0; k < 20; ++k) sample.larger.set(draw(rng, u->inference_count()));
      samples.push_back(std::move(sample));
    }
    const auto laws = check_operator_laws(*u, samples, ctx.options().seed);
    r.instances += laws.checks;
    for (const auto& f : laws.failures) r.fail(note("closure and interior laws", f));
  }
  return r;
}

Report claim_lattice(Context& ctx) {
  Report r;
  for (const auto& [name, family] : families()) {
    if (name == "weak") continue;
    r.merge(verify_lattices(family, ctx.corpus_b()));
    r.merge(check_lattice_order(family, ctx.u1()));
    r.merge(check_lattice_order(family, ctx.u2()));
  }
  return r;
}

Report claim_star_lattice(Context& ctx) {
  Report r;
  for (const auto& [name, family] : families()) {
    r.merge(verify_star_lattice(family, ctx.u1()));
    r.merge(verify_star_lattice(family, ctx.u2()));
  }
  return r;
}

Report claim_prop3(Context& ctx) {
  Report r;
  for (const auto& [name, family] : families()) {
    if (name == "weak") continue;
    r.merge(check_tarskian_join(family.ss, family.tt, ctx.u1()));
    for (auto e : kLatticeElements) {
      r.merge(check_tarskian_properties(family.decider(e), ctx.corpus_b(), ctx.options().seed));
    }
  }
  return r;
}

struct Claim {
  ClaimInfo info;
  std::function<Report(Context&)> run;
};

const std::vector<Claim>& registry() {
  static const std::vector<Claim> all{
      {{"schemes", "exactly 16 BNM schemes, matching a per-connective brute-force filter"}, claim_schemes},
      {{"theorem1", "st-validity coincides with classical validity for every BNM scheme"}, claim_theorem1},
      {{"theorem2", "no inference is ts-valid; the all-middle valuation refutes each"}, claim_theorem2},
      {{"theorem3", "a classically valid inference outside SS ∪ TT for every scheme pair"}, claim_theorem3},
      {{"facts", "SS, TT ⊆ ST; theorems and antitheorems match fresh-atom validity"}, claim_facts},
      {{"theorem4", "classical inferences factor through TT then SS; T(SS ∪ TT) ⊆ ST"}, claim_theorem4},
      {{"theorem5-prop2", "T^d(L) is the star set of L, and T^d(SS ∩ TT) is empty"}, claim_theorem5},
      {{"operator-laws", "T is a closure operator, T^d an interior operator, and they are dual"},
       claim_operator_laws},
      {{"lattice", "SS∩TT, SS, TT, ST form a lattice under intersection and closed union"}, claim_lattice},
      {{"star-lattice", "TS★, SS★, TT★, SS★ ∪ TT★ form the dual lattice"}, claim_star_lattice},
      {{"prop3-lemma1", "the four logics are Tarskian and their Tarskian join is the transitive closure"},
       claim_prop3},
  };
  return all;
}

}  // namespace

std::vector<ClaimInfo> claims() {
  std::vector<ClaimInfo> out;
  for (const auto& c : registry()) out.push_back(c.info);
  return out;
}

VerifyResult run_verification(const VerifyOptions& options) {
  for (const auto& id : options.only) {
    const auto& all = registry();
    if (std::none_of(all.begin(), all.end(), [&](const Claim& c) { return c.info.id == id; })) {
      throw PreconditionError("unknown claim '" + id + "'");
    }
  }
  Context ctx(options);
  VerifyResult result;
  for (const auto& claim : registry()) {
    if (!options.only.empty() && std::find(options.only.begin(), options.only.end(), claim.info.id) == options.only.end()) {
      continue;
    }
    const auto start = std::chrono::steady_clock::now();
    Report report = claim.run(ctx);
    const std::chrono::duration<double, std::milli> elapsed = std::chrono::steady_clock::now() - start;
    result.claims.push_back({claim.info.id, claim.info.description, std::move(report), elapsed.count()});
  }
  return result;
}

}  // namespace trivalent
