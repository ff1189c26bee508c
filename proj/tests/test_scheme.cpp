#include <doctest.h>

#include "oracles.hpp"
#include "trivalent/error.hpp"
#include "trivalent/scheme.hpp"

using namespace trivalent;

namespace {

constexpr TruthValue F = TruthValue::F;
constexpr TruthValue I = TruthValue::I;
constexpr TruthValue T = TruthValue::T;

bool same_tables(const oracle::Tables& a, const oracle::Tables& b) {
  return a.neg == b.neg && a.conj == b.conj && a.disj == b.disj;
}

}  // namespace

TEST_CASE("information order") {
  CHECK(info_leq(I, F));
  CHECK(info_leq(I, T));
  CHECK_FALSE(info_leq(F, T));
  CHECK_FALSE(info_leq(T, F));
  CHECK_FALSE(info_leq(F, I));
  for (TruthValue v : kTruthValues) CHECK(info_leq(v, v));
}

TEST_CASE("presets match the printed tables") {
  const Scheme strong = preset("strong");
  const Scheme weak = preset("weak");
  CHECK(strong.conj(F, I) == F);
  CHECK(strong.conj(I, F) == F);
  CHECK(strong.disj(T, I) == T);
  CHECK(strong.conj(T, I) == I);
  CHECK(weak.conj(F, I) == I);
  CHECK(weak.disj(T, I) == I);
  CHECK(weak.disj(I, F) == I);
  CHECK(strong.neg(I) == I);

  const Scheme middle = preset("middle");
  CHECK(middle.conj(F, I) == F);
  CHECK(middle.conj(I, F) == I);
  CHECK(middle.disj(T, I) == T);
  CHECK(middle.disj(I, T) == I);

  CHECK_THROWS_AS(preset("lukasiewicz"), SchemeError);
}

TEST_CASE("Boolean normality and monotonicity") {
  CHECK(is_boolean_normal(preset("strong")));
  CHECK(is_boolean_normal(preset("weak")));
  CHECK(is_monotonic(preset("strong")));
  CHECK(is_monotonic(preset("weak")));

  const Scheme s = preset("strong");
  Scheme::UnaryTable neg = s.neg_table();
  neg[index_of(T)] = T;
  const Scheme bad_neg(neg, s.conj_table(), s.disj_table());
  CHECK_FALSE(is_boolean_normal(bad_neg));
  REQUIRE(find_normality_violation(bad_neg));
  CHECK(find_normality_violation(bad_neg)->connective == "not");

  Scheme::BinaryTable conj = s.conj_table();
  conj[index_of(I)][index_of(T)] = T;
  const Scheme bad_conj(s.neg_table(), conj, s.disj_table());
  CHECK(is_boolean_normal(bad_conj));
  CHECK_FALSE(is_monotonic(bad_conj));
  const auto v = find_monotonicity_violation(bad_conj);
  REQUIRE(v);
  CHECK(v->connective == "and");
  CHECK_FALSE(describe(*v).empty());
}

TEST_CASE("is_monotonic agrees with the oracle on perturbed schemes") {
  const Scheme base = preset("strong");
  for (std::size_t cell = 0; cell < 9; ++cell) {
    for (TruthValue v : kTruthValues) {
      Scheme::BinaryTable conj = base.conj_table();
      conj[cell / 3][cell % 3] = v;
      const Scheme s(base.neg_table(), conj, base.disj_table());
      const auto t = oracle::tables_of(s);
      CHECK(is_monotonic(s) ==
            (oracle::unary_monotone(t.neg) && oracle::binary_monotone(t.conj) && oracle::binary_monotone(t.disj)));
      CHECK(is_boolean_normal(s) == (oracle::unary_normal(t.neg) && oracle::binary_normal(t.conj, true) &&
                                     oracle::binary_normal(t.disj, false)));
    }
  }
}

TEST_CASE("exactly sixteen BNM schemes, matching the brute-force filter") {
  const auto schemes = enumerate_bnm_schemes();
  const auto expected = oracle::bnm_tables();
  REQUIRE(schemes.size() == 16);
  REQUIRE(expected.size() == 16);
  for (const auto& s : schemes) {
    CHECK(is_boolean_normal(s));
    CHECK(is_monotonic(s));
    const auto t = oracle::tables_of(s);
    CHECK(std::count_if(expected.begin(), expected.end(), [&](const auto& e) { return same_tables(e, t); }) == 1);
    CHECK(s.neg(I) == I);
    CHECK(s.conj(I, I) == I);
    CHECK(s.disj(I, I) == I);
  }
  for (std::size_t i = 0; i < schemes.size(); ++i)
    for (std::size_t j = i + 1; j < schemes.size(); ++j) CHECK_FALSE(schemes[i] == schemes[j]);

  const auto contains = [&](const Scheme& s) { return std::find(schemes.begin(), schemes.end(), s) != schemes.end(); };
  CHECK(contains(preset("strong")));
  CHECK(contains(preset("weak")));
  CHECK(contains(preset("middle")));
}

TEST_CASE("all BNM schemes agree on classical arguments") {
  const Scheme strong = preset("strong");
  for (const auto& s : enumerate_bnm_schemes()) {
    for (TruthValue a : {F, T}) {
      CHECK(s.neg(a) == strong.neg(a));
      for (TruthValue b : {F, T}) {
        CHECK(s.conj(a, b) == strong.conj(a, b));
        CHECK(s.disj(a, b) == strong.disj(a, b));
      }
    }
  }
}

TEST_CASE("scheme codes") {
  for (unsigned code = 0; code < 16; ++code) CHECK(bnm_code(bnm_scheme(code)) == code);
  CHECK(bnm_code(preset("strong")) == 0u);
  CHECK(bnm_code(preset("weak")) == 15u);
  CHECK(bnm_code(preset("middle")) == 5u);
  CHECK(code_label(5) == "id:0b0101");
  CHECK(resolve_scheme("id:0b0101") == preset("middle"));
  CHECK(resolve_scheme("id:15") == preset("weak"));
  CHECK(resolve_scheme("id:0xf") == preset("weak"));
  CHECK_THROWS_AS(resolve_scheme("id:16"), SchemeError);
  CHECK_THROWS_AS(bnm_scheme(16), SchemeError);
}

TEST_CASE("scheme documents round-trip and reject non-BNM tables") {
  for (const auto& s : enumerate_bnm_schemes()) {
    CHECK(parse_scheme_document(format_scheme_document(s)) == s);
  }
  const Scheme s = preset("strong");
  Scheme::BinaryTable conj = s.conj_table();
  conj[index_of(I)][index_of(T)] = T;
  const std::string text = format_scheme_document(Scheme(s.neg_table(), conj, s.disj_table()));
  CHECK_THROWS_AS(parse_scheme_document(text), SchemeError);
  CHECK_FALSE(is_monotonic(parse_scheme_document(text, true)));
  CHECK_THROWS_AS(parse_scheme_document("not(0) = 1\n"), SchemeError);
}
