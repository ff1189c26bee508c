#include <doctest.h>

#include <random>

#include "oracles.hpp"
#include "trivalent/corpus.hpp"
#include "trivalent/error.hpp"
#include "trivalent/formula.hpp"
#include "trivalent/parse.hpp"

using namespace trivalent;

namespace {

const Formula p = Formula::var("p");
const Formula q = Formula::var("q");
const Formula r = Formula::var("r");

}  // namespace

TEST_CASE("parse respects precedence and associativity") {
  CHECK(parse("~p & q") == (~p & q));
  CHECK(parse("p | q & r") == (p | (q & r)));
  CHECK(parse("p & q & r") == ((p & q) & r));
  CHECK(parse("p | q | r") == ((p | q) | r));
  CHECK(parse("~~p") == ~~p);
  CHECK(parse("~(p | q)") == ~(p | q));
  CHECK(parse("  (p)  ") == p);
  CHECK(parse("x_1'") == Formula::var("x_1'"));
}

TEST_CASE("parse reports errors with a position") {
  CHECK_THROWS_AS(parse("p &"), ParseError);
  CHECK_THROWS_AS(parse(""), ParseError);
  CHECK_THROWS_AS(parse("(p"), ParseError);
  CHECK_THROWS_AS(parse("p q"), ParseError);
  CHECK_THROWS_AS(parse("p => q"), ParseError);
  try {
    parse("p & ");
    FAIL("expected a parse error");
  } catch (const ParseError& e) {
    CHECK(e.position() == 4);
  }
}

TEST_CASE("parse_inference") {
  const Inference a = parse_inference("p & ~p => r");
  CHECK(a.premises() == std::vector<Formula>{p & ~p});
  CHECK(a.conclusion() == r);

  const Inference b = parse_inference("=> p | ~p");
  CHECK(b.premises().empty());
  CHECK(b.conclusion() == (p | ~p));

  const Inference c = parse_inference("p, p => p");
  CHECK(c == Inference({p}, p));
  CHECK(parse_inference("q, p => r") == parse_inference("p, q => r"));

  CHECK_THROWS_AS(parse_inference("p, => q"), ParseError);
  CHECK_THROWS_AS(parse_inference("p"), ParseError);
  CHECK_THROWS_AS(parse_inference("p => q => r"), ParseError);
}

TEST_CASE("printing round-trips") {
  for (const auto& f : enumerate_formulas({"p", "q"}, 2)) {
    CHECK(parse(to_string(f)) == f);
  }
  CHECK(to_string(p | (q & r)) == "p | q & r");
  CHECK(to_string((p | q) & r) == "(p | q) & r");
  CHECK(to_string(p & (q & r)) == "p & (q & r)");
  CHECK(to_string(~(p & q)) == "~(p & q)");
  const Inference inf({p | (q & ~q)}, p & (r | ~r));
  CHECK(parse_inference(to_string(inf)) == inf);
  CHECK(to_string(Inference({}, p)) == "=> p");
}

TEST_CASE("atoms") {
  CHECK(atoms(p | (q & ~q)) == std::set<std::string>{"p", "q"});
  CHECK(atoms(p) == std::set<std::string>{"p"});
  CHECK(atoms(Inference({p & ~p}, r)) == std::set<std::string>{"p", "r"});
  CHECK(atoms(Inference({}, q)) == std::set<std::string>{"q"});
}

TEST_CASE("substitution") {
  CHECK(substitute(~p, Substitution({{"p", q & q}})) == ~(q & q));
  CHECK(substitute(p | r, Substitution()) == (p | r));
  CHECK(substitute(p | r, Substitution({{"p", r}})) == (r | r));
  CHECK(Substitution({{"p", q}})(Inference({p}, p | r)) == Inference({q}, q | r));
}

TEST_CASE("substitution laws on random formulas") {
  std::mt19937_64 rng(7);
  const std::vector<std::string> names{"p", "q", "r"};
  const auto random_sub = [&] {
    std::map<std::string, Formula> m;
    for (const auto& n : names) m.emplace(n, random_formula(rng, names, 2));
    return Substitution(m);
  };
  for (int i = 0; i < 300; ++i) {
    const Formula f = random_formula(rng, names, 3);
    const Substitution sigma = random_sub();
    const Substitution tau = random_sub();
    CHECK(tau(sigma(f)) == sigma.then(tau)(f));

    std::set<std::string> expected;
    for (const auto& a : atoms(f)) {
      const auto more = atoms(sigma.mapping().at(a));
      expected.insert(more.begin(), more.end());
    }
    CHECK(atoms(sigma(f)) == expected);
    CHECK(oracle::apply(f, sigma.mapping()) == sigma(f));
  }
}

TEST_CASE("enumerate_formulas against a set-growing oracle") {
  CHECK(enumerate_formulas({"p"}, 0) == std::vector<Formula>{p});
  CHECK(enumerate_formulas({"p"}, 1) == std::vector<Formula>{p, ~p, p & p, p | p});

  for (std::size_t depth = 0; depth <= 2; ++depth) {
    for (const std::vector<std::string>& names : {std::vector<std::string>{"p"}, std::vector<std::string>{"p", "q"}}) {
      const auto expected = oracle::formulas(names, depth);
      const auto got = enumerate_formulas({names.begin(), names.end()}, depth);
      CHECK(std::set<Formula>(got.begin(), got.end()) == expected);
      CHECK(got.size() == expected.size());
      CHECK(count_formulas(names.size(), depth) == expected.size());
      for (const auto& f : got) CHECK(f.depth() <= depth);
    }
  }
  CHECK(enumerate_formulas({"p", "q"}, 1).size() == 12);
  CHECK(enumerate_formulas({"p"}, 2).size() == 37);
}

TEST_CASE("enumerate_formulas is deterministic and prefix-monotone in depth") {
  const auto d1 = enumerate_formulas({"p", "q"}, 1);
  const auto d2 = enumerate_formulas({"p", "q"}, 2);
  CHECK(d1 == enumerate_formulas({"p", "q"}, 1));
  REQUIRE(d1.size() < d2.size());
  CHECK(std::equal(d1.begin(), d1.end(), d2.begin()));
}

TEST_CASE("enumerate_formulas enforces its cap") {
  CHECK_THROWS_AS(enumerate_formulas({"p", "q"}, 3, 1000), ResourceError);
  CHECK_THROWS_AS(enumerate_formulas({"p", "q", "r"}, 4), ResourceError);
  CHECK_THROWS_AS(enumerate_formulas({}, 1), PreconditionError);
}

TEST_CASE("random corpus is reproducible") {
  const auto a = random_corpus(50, 42);
  const auto b = random_corpus(50, 42);
  CHECK(a == b);
  CHECK(a != random_corpus(50, 43));
  for (const auto& inf : a) {
    CHECK(inf.premises().size() <= 3);
    CHECK(inf.conclusion().depth() <= 3);
    for (const auto& atom : atoms(inf)) CHECK((atom == "p" || atom == "q" || atom == "r"));
  }
}

TEST_CASE("exhaustive corpus size") {
  const auto corpus = exhaustive_corpus();
  CHECK(corpus.size() == 12 * (1 + 12 + 66));
  CHECK(std::set<Inference>(corpus.begin(), corpus.end()).size() == corpus.size());
}
