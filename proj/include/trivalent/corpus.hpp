#pragma once

#include <cstddef>
#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "trivalent/formula.hpp"

namespace trivalent {

/// Every inference over atoms {p, q} with formulas of depth at most 1 and
/// at most 2 premises, in universe id order (948 inferences).
std::vector<Inference> exhaustive_corpus();

struct RandomCorpusParams {
  std::vector<std::string> atoms{"p", "q", "r"};
  std::size_t depth = 3;
  std::size_t max_premises = 3;
};

/// Uniform draw in [0, n) from the raw engine output. Used instead of
/// std::uniform_int_distribution, whose output differs between standard
/// libraries.
inline std::size_t draw(std::mt19937_64& rng, std::size_t n) { return static_cast<std::size_t>(rng() % n); }

/// Random formula of depth at most `depth`: at depth 0 an atom; otherwise an
/// atom, a negation, a conjunction or a disjunction with equal probability,
/// operands drawn at depth - 1.
Formula random_formula(std::mt19937_64& rng, const std::vector<std::string>& atom_names, std::size_t depth);

/// `count` inferences: premise count uniform in [0, max_premises], each
/// premise and the conclusion drawn by random_formula.
std::vector<Inference> random_corpus(std::size_t count, std::uint64_t seed, const RandomCorpusParams& params = {});

}  // namespace trivalent
