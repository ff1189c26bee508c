#include <doctest.h>

#include "oracles.hpp"
#include "trivalent/characterize.hpp"
#include "trivalent/corpus.hpp"
#include "trivalent/error.hpp"
#include "trivalent/parse.hpp"

using namespace trivalent;

namespace {

LogicSpec logic(const char* scheme, Standard standard) { return LogicSpec(preset(scheme), standard); }

const Inference kGap = parse_inference("p | q & ~q => p & (r | ~r)");

void require_clean(const Report& r) {
  for (const auto& f : r.failures) {
    FAIL_CHECK(f.check << (f.inference ? ": " + to_string(*f.inference) : std::string()) << " " << f.detail);
  }
  CHECK(r.passed());
  CHECK(r.instances > 0);
}

}  // namespace

TEST_CASE("delta witness") {
  CHECK(delta_witness(kGap) == canonical_set({parse("p | q & ~q"), parse("p | ~p"), parse("r | ~r")}));
  CHECK(delta_witness(parse_inference("=> p | ~p")) == std::vector<Formula>{parse("p | ~p")});
  CHECK(delta_witness(parse_inference("q => q")) == canonical_set({parse("q"), parse("q | ~q")}));
}

TEST_CASE("derive_classical") {
  for (const char* tt : {"strong", "weak", "middle"}) {
    const auto w = derive_classical(kGap, logic(tt, Standard::tt()), logic("strong", Standard::ss()));
    REQUIRE(w);
    CHECK(w->accepted());
    CHECK(w->tt_checks.size() == 3);
    CHECK(w->ss_check.inference == Inference(w->delta, kGap.conclusion()));
    CHECK(replay_witness(kGap, *w));
  }
  CHECK_FALSE(derive_classical(parse_inference("p => q"), logic("strong", Standard::tt()),
                               logic("strong", Standard::ss())));
  CHECK_THROWS_AS(derive_classical(kGap, logic("strong", Standard::ss()), logic("strong", Standard::ss())),
                  PreconditionError);
}

TEST_CASE("derive_classical succeeds for every scheme pair on valid samples") {
  const auto corpus = random_corpus(120, 77);
  const auto schemes = enumerate_bnm_schemes();
  for (const auto& inf : corpus) {
    if (!oracle::classically_valid(inf)) continue;
    for (const auto& tt : schemes)
      for (const auto& ss : schemes) {
        const auto w = derive_classical(inf, LogicSpec(tt, Standard::tt()), LogicSpec(ss, Standard::ss()));
        REQUIRE(w);
        CHECK(w->accepted());
      }
  }
}

TEST_CASE("star sets") {
  // p & ~p and q | ~q have depth 2.
  const Universe u = Universe::enumerated({{"p", "q"}, 2, 1, {"r"}});
  const auto ss = star_set(logic("strong", Standard::ss()), u);
  CHECK(ss.contains(parse_inference("p & ~p => q")));
  CHECK_FALSE(ss.contains(parse_inference("p => q | ~q")));
  const auto tt = star_set(logic("strong", Standard::tt()), u);
  CHECK(tt.contains(parse_inference("p => q | ~q")));
  CHECK_FALSE(tt.contains(parse_inference("p & ~p => q")));
  for (const auto& s : enumerate_bnm_schemes()) CHECK(star_set(LogicSpec(s, Standard::ts()), u).empty());
}

TEST_CASE("interior of each logic matches the oracle star set") {
  const Universe u = Universe::enumerated({});
  const oracle::Space space(std::set<Formula>(u.formulas().begin(), u.formulas().end()), 2);
  const auto reserve_free = space.select([](const Inference& i) { return oracle::atoms_of(i).count("r") == 0; });
  for (unsigned code : {0u, 15u}) {
    const auto t = oracle::tables_of(bnm_scheme(code));
    for (auto [x, y] : {std::pair{oracle::kStrict, oracle::kStrict}, std::pair{oracle::kTolerant, oracle::kTolerant},
                        std::pair{oracle::kStrict, oracle::kTolerant}}) {
      const auto valid = space.select([&](const Inference& i) { return oracle::valid(t, x, y, i); });
      const auto star = space.select([&](const Inference& i) {
        return oracle::antitheorem(t, x, i.premises()) || oracle::theorem(t, y, i.conclusion());
      });
      const auto interior = oracle::dual_transitive(space, valid);
      for (std::size_t i = 0; i < space.size(); ++i)
        if (reserve_free[i]) CHECK(interior[i] == star[i]);
    }
  }
}

TEST_CASE("check_td_equals_star and the ts collapse") {
  const Universe u = Universe::enumerated({});
  require_clean(check_td_equals_star(Decider(logic("strong", Standard::ss())), u));
  require_clean(check_td_equals_star(Decider(logic("strong", Standard::tt())), u));
  require_clean(check_td_equals_star(Decider(logic("strong", Standard::st())), u));
  require_clean(check_ts_collapse(logic("strong", Standard::ss()), logic("strong", Standard::tt()), u));
  require_clean(check_ts_collapse(logic("strong", Standard::ss()), logic("weak", Standard::tt()), u));
}

TEST_CASE("union gap") {
  for (const auto& ss : enumerate_bnm_schemes())
    for (const auto& tt : enumerate_bnm_schemes())
      require_clean(check_union_gap(LogicSpec(ss, Standard::ss()), LogicSpec(tt, Standard::tt())));
}

TEST_CASE("closure of SS and TT is sound for ST") {
  const Universe u = Universe::enumerated({});
  require_clean(check_union_closure_sound(logic("strong", Standard::ss()), logic("strong", Standard::tt()),
                                          logic("strong", Standard::st()), u));
  require_clean(check_union_closure_sound(logic("weak", Standard::ss()), logic("strong", Standard::tt()),
                                          logic("middle", Standard::st()), u));
}

TEST_CASE("lattice operations") {
  using E = LatticeElement;
  const auto family = LatticeFamily::uniform(preset("strong"));
  const auto v = [](E e) { return lattice_value(e); };
  CHECK(lattice_join(v(E::kSS), v(E::kTT)).element == E::kST);
  CHECK(lattice_join(v(E::kMeet), v(E::kTT)) == v(E::kTT));
  CHECK(lattice_join(v(E::kSS), v(E::kSS)) == v(E::kSS));
  CHECK(lattice_meet(v(E::kSS), v(E::kTT)).element == E::kMeet);

  const Decider meet = decider(family, lattice_meet(v(E::kSS), v(E::kTT)));
  CHECK(meet.contains(parse_inference("p => p")));
  CHECK_FALSE(meet.contains(parse_inference("p & ~p => r")));

  const Decider st_ss = decider(family, lattice_meet(v(E::kST), v(E::kSS)));
  const Decider ss = family.decider(E::kSS);
  for (const auto& inf : random_corpus(300, 2)) {
    CHECK(st_ss.contains(inf) == ss.contains(inf));
    CHECK(decider(family, lattice_join(v(E::kSS), v(E::kTT))).contains(inf) == oracle::classically_valid(inf));
  }
}

TEST_CASE("lattice verification on samples and universes") {
  const auto sample = random_corpus(400, 8);
  const Universe u = Universe::enumerated({});
  for (const auto& family : {LatticeFamily::uniform(preset("strong")),
                             LatticeFamily::mixed(preset("weak"), preset("strong"), preset("middle"))}) {
    require_clean(verify_lattices(family, sample));
    require_clean(check_lattice_order(family, u));
    require_clean(verify_star_lattice(family, u));
  }
}

TEST_CASE("Tarskian properties and join") {
  const auto sample = random_corpus(80, 4);
  const auto family = LatticeFamily::uniform(preset("strong"));
  for (auto e : kLatticeElements) require_clean(check_tarskian_properties(family.decider(e), sample, 1));
  // TS has no valid inferences, so reflexivity must fail.
  CHECK_FALSE(check_tarskian_properties(Decider(family.ts()), sample, 1).passed());
  require_clean(check_tarskian_join(logic("strong", Standard::ss()), logic("strong", Standard::tt()),
                                    Universe::enumerated({})));
}
