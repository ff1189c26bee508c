#include <doctest.h>

#include <random>
#include <sstream>

#include "oracles.hpp"
#include "trivalent/closure.hpp"
#include "trivalent/error.hpp"
#include "trivalent/parse.hpp"

using namespace trivalent;

namespace {

InferenceSet set_of(std::initializer_list<const char*> texts) {
  InferenceSet out;
  for (const char* t : texts) out.insert(parse_inference(t));
  return out;
}

Universe atoms_only(std::vector<std::string> names, std::size_t cap) {
  std::vector<Formula> fs;
  for (auto& n : names) fs.push_back(Formula::var(n));
  return Universe(fs, cap);
}

std::vector<bool> to_bits(const oracle::Space& s, const InferenceSet& set) {
  std::vector<bool> bits(s.size());
  for (const auto& inf : set) {
    const long id = s.find(inf);
    REQUIRE(id >= 0);
    bits[id] = true;
  }
  return bits;
}

InferenceSet random_subset(const Universe& u, std::mt19937_64& rng, std::size_t size) {
  InferenceSet out;
  while (out.size() < size) out.insert(u.inference(rng() % u.inference_count()));
  return out;
}

}  // namespace

TEST_CASE("universe inference counts") {
  CHECK(universe_inferences(atoms_only({"p"}, 1)) == set_of({"=> p", "p => p"}));
  CHECK(universe_inferences(atoms_only({"p", "q"}, 1)).size() == 6);
  CHECK(universe_inferences(atoms_only({"p", "q"}, 2)).size() == 8);

  const Universe u1 = Universe::enumerated({});
  CHECK(u1.formula_count() == 13);
  CHECK(u1.inference_count() == 13 * (1 + 13 + 78));
  const Universe u2 = Universe::enumerated({{"p"}, 2, 2, {"q"}});
  CHECK(u2.formula_count() == 38);
  CHECK(u2.inference_count() == 28196);

  CHECK_THROWS_AS(Universe({}, 1), PreconditionError);
  CHECK_THROWS_AS(Universe::enumerated({{"p", "q"}, 2, 3, {}}), ResourceError);
}

TEST_CASE("inference ids round-trip") {
  const Universe u = Universe::enumerated({});
  for (std::size_t id = 0; id < u.inference_count(); ++id) {
    const auto back = u.inference_id(u.inference(id));
    REQUIRE(back);
    CHECK(*back == id);
    CHECK(u.uses_reserve(id) == atoms(u.inference(id)).count("r"));
  }
  CHECK_FALSE(u.inference_id(parse_inference("s => p")));
  CHECK_FALSE(u.inference_id(parse_inference("p, q, ~p => p")));
  CHECK(u.decode(u.encode(set_of({"p => q", "p, ~q => r"}))) == set_of({"p => q", "p, ~q => r"}));
  CHECK_THROWS_AS(u.encode(set_of({"s => p"})), PreconditionError);
}

TEST_CASE("transitive closure examples") {
  const Universe u = atoms_only({"p", "q", "r"}, 1);
  const auto closed = transitive_closure(set_of({"p => q", "q => r"}), u);
  CHECK(closed == set_of({"p => q", "q => r", "p => r"}));
  CHECK(transitive_closure(closed, u) == closed);

  const Universe v = atoms_only({"g", "a", "b", "c"}, 2);
  const auto two = transitive_closure(set_of({"g => a", "g => b", "a, b => c"}), v);
  CHECK(two.contains(parse_inference("g => c")));
}

TEST_CASE("dual transitive closure examples") {
  const Universe u = atoms_only({"p", "q"}, 1);
  CHECK(dual_transitive_closure(universe_inferences(u), u) == universe_inferences(u));
  CHECK(dual_transitive_closure(set_of({"p => p"}), u).empty());
  CHECK(dual_transitive_closure(InferenceSet{}, u).empty());
}

TEST_CASE("closures match the brute-force oracle on small universes") {
  std::mt19937_64 rng(99);
  const std::vector<std::pair<UniverseParams, std::size_t>> cases{
      {{{"p", "q"}, 0, 2, {"r"}}, 6}, {{{"p"}, 1, 2, {"q"}}, 12}, {{{"p", "q"}, 1, 2, {"r"}}, 60}};
  for (const auto& [params, size] : cases) {
    const Universe u = Universe::enumerated(params);
    std::set<Formula> fs(u.formulas().begin(), u.formulas().end());
    std::set<Formula> expected = oracle::formulas({params.atoms.begin(), params.atoms.end()}, params.depth);
    for (const auto& a : params.reserve) expected.insert(Formula::var(a));
    REQUIRE(fs == expected);
    const oracle::Space space(fs, params.premise_cap);
    REQUIRE(space.size() == u.inference_count());

    for (int trial = 0; trial < 8; ++trial) {
      const InferenceSet base = random_subset(u, rng, size);
      const auto bits = to_bits(space, base);
      CHECK(oracle::plain(transitive_closure(base, u)) == space.to_set(oracle::transitive(space, bits)));
      CHECK(oracle::plain(dual_transitive_closure(base, u)) == space.to_set(oracle::dual_transitive(space, bits)));
      const auto t = transitive_closure(u.encode(base), u);
      CHECK(transitive_closure(u.encode(base), u, 1234) == t);
    }
  }
}

TEST_CASE("Tarskian closure matches the brute-force oracle") {
  std::mt19937_64 rng(5);
  const UniverseParams params{{"p"}, 1, 2, {"q"}};
  const Universe u = Universe::enumerated(params);
  const oracle::Space space(std::set<Formula>(u.formulas().begin(), u.formulas().end()), 2);
  const std::vector<std::string> names{"p", "q"};

  const auto empty = tarskian_closure(InferenceSet{}, u);
  CHECK(oracle::plain(empty) == space.to_set(oracle::tarskian(space, std::vector<bool>(space.size()), names)));
  for (const auto& f : u.formulas()) {
    CHECK(empty.contains(Inference({f}, f)));
    for (const auto& g : u.formulas()) CHECK(empty.contains(Inference({f, g}, f)));
  }

  for (int trial = 0; trial < 5; ++trial) {
    const InferenceSet base = random_subset(u, rng, 4);
    const auto got = tarskian_closure(base, u);
    CHECK(base.is_subset_of(got));
    CHECK(oracle::plain(got) == space.to_set(oracle::tarskian(space, to_bits(space, base), names)));
  }
}

TEST_CASE("operator laws on random samples") {
  std::mt19937_64 rng(17);
  const Universe u = Universe::enumerated({});
  std::vector<OperatorLawSample> samples;
  for (int i = 0; i < 10; ++i) {
    const auto base = u.encode(random_subset(u, rng, 20));
    auto larger = base | u.encode(random_subset(u, rng, 20));
    samples.push_back({base, larger});
  }
  const auto report = check_operator_laws(u, samples);
  CHECK(report.samples == samples.size());
  CHECK(report.checks > 0);
  for (const auto& f : report.failures) FAIL_CHECK(f);
  CHECK(report.passed());
}

TEST_CASE("operator-law checker notices a broken sample") {
  const Universe u = Universe::enumerated({});
  const auto base = u.encode(set_of({"p => q", "q => p"}));
  // `larger` is not a superset, so monotonicity has nothing to compare and
  // the checker must reject the sample rather than pass it.
  const std::vector<OperatorLawSample> samples{{base, u.encode(set_of({"p => q"}))}};
  CHECK_FALSE(check_operator_laws(u, samples).passed());
}

TEST_CASE("non-reflexivity of the interior of a structural logic") {
  // All ss-valid inferences of the universe, a structural non-trivial base
  // containing p => p.
  const Universe u = Universe::enumerated({});
  const oracle::Space space(std::set<Formula>(u.formulas().begin(), u.formulas().end()), 2);
  const auto strong = oracle::tables_of(preset("strong"));
  const auto bits = space.select([&](const Inference& i) { return oracle::valid(strong, 4, 4, i); });
  const auto base = u.encode(InferenceSet(space.to_set(bits)));
  const auto interior = dual_transitive_closure(base, u);
  CHECK(base.test(*u.inference_id(parse_inference("p => p"))));
  CHECK_FALSE(interior.test(*u.inference_id(parse_inference("p => p"))));
}

TEST_CASE("inference-set files") {
  std::istringstream in("# comment\natoms=p,q; depth=1; cap=2; reserve=r\np => q\n\n  q, p => ~r  # trailing\n");
  const auto doc = read_inference_set(in);
  REQUIRE(doc.universe);
  CHECK(*doc.universe == UniverseParams{});
  CHECK(doc.inferences == set_of({"p => q", "p, q => ~r"}));

  std::ostringstream out;
  write_inference_set(out, doc.inferences, doc.universe);
  std::istringstream again(out.str());
  const auto reread = read_inference_set(again);
  CHECK(reread.inferences == doc.inferences);
  CHECK(reread.universe == doc.universe);

  std::istringstream bad("p => q\np =>\n");
  try {
    read_inference_set(bad);
    FAIL("expected a parse error");
  } catch (const ParseError& e) {
    CHECK(std::string(e.what()).find("line 2") != std::string::npos);
  }
  std::istringstream late("p => q\natoms=p; depth=0; cap=1; reserve=\n");
  CHECK_THROWS_AS(read_inference_set(late), ParseError);
  CHECK(UniverseParams::parse_header("atoms=p,q; depth=2; cap=1; reserve=").to_header() ==
        "atoms=p,q; depth=2; cap=1; reserve=");
}
