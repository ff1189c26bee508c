#include "trivalent/corpus.hpp"

#include "trivalent/closure.hpp"

namespace trivalent {

std::vector<Inference> exhaustive_corpus() {
  const Universe u(enumerate_formulas({"p", "q"}, 1), 2);
  std::vector<Inference> out;
  out.reserve(u.inference_count());
  for (std::size_t id = 0; id < u.inference_count(); ++id) out.push_back(u.inference(id));
  return out;
}

Formula random_formula(std::mt19937_64& rng, const std::vector<std::string>& atom_names, std::size_t depth) {
  const auto atom = [&] { return Formula::var(atom_names[draw(rng, atom_names.size())]); };
  if (depth == 0) return atom();
  switch (draw(rng, 4)) {
    case 0: return atom();
    case 1: return ~random_formula(rng, atom_names, depth - 1);
    case 2: {
      Formula l = random_formula(rng, atom_names, depth - 1);
      return l & random_formula(rng, atom_names, depth - 1);
    }
    default: {
      Formula l = random_formula(rng, atom_names, depth - 1);
      return l | random_formula(rng, atom_names, depth - 1);
    }
  }
}

std::vector<Inference> random_corpus(std::size_t count, std::uint64_t seed, const RandomCorpusParams& params) {
  std::mt19937_64 rng(seed);
  std::vector<Inference> out;
  out.reserve(count);
  for (std::size_t i = 0; i < count; ++i) {
    std::vector<Formula> premises;
    const std::size_t k = draw(rng, params.max_premises + 1);
    for (std::size_t j = 0; j < k; ++j) premises.push_back(random_formula(rng, params.atoms, params.depth));
    Formula conclusion = random_formula(rng, params.atoms, params.depth);
    out.emplace_back(std::move(premises), std::move(conclusion));
  }
  return out;
}

}  // namespace trivalent
