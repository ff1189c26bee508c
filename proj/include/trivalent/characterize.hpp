#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "trivalent/closure.hpp"
#include "trivalent/formula.hpp"
#include "trivalent/report.hpp"
#include "trivalent/semantics.hpp"

namespace trivalent {

/// Premises plus `a | ~a` for every atom of the conclusion, as a canonical
/// formula set.
std::vector<Formula> delta_witness(const Inference& inference);

struct WitnessCheck {
  Inference inference;
  bool holds;
};

/// Two-step derivation of Γ => φ from a tt-logic and an ss-logic: every
/// Γ => δ (δ in Δ) under the tt-logic, then Δ => φ under the ss-logic.
struct DerivationWitness {
  std::vector<Formula> delta;
  std::vector<WitnessCheck> tt_checks;
  WitnessCheck ss_check;
  LogicSpec tt_logic;
  LogicSpec ss_logic;

  bool accepted() const;
};

/// Empty when the inference is not classically valid. Otherwise returns the
/// witness built from delta_witness with every check evaluated; a witness
/// that is not accepted() signals a failed construction. Throws
/// PreconditionError unless the logics use the tt and ss standards.
std::optional<DerivationWitness> derive_classical(const Inference& inference, const LogicSpec& tt_logic,
                                                  const LogicSpec& ss_logic, std::size_t atom_cap = kDefaultAtomCap);

/// Runs transitive_closure on the witness's steps inside the smallest
/// universe holding Γ, Δ and φ, and reports whether Γ => φ comes out.
bool replay_witness(const Inference& target, const DerivationWitness& witness);

/// Membership predicate for a set of inferences: the intersection of the
/// valid inferences of one or more logics, or classical validity.
class Decider {
 public:
  explicit Decider(LogicSpec logic);
  Decider(std::vector<LogicSpec> conjuncts, std::string label);
  static Decider classical();

  bool contains(const Inference& inference) const;
  /// Theorem and antitheorem of every conjunct (classical tautology /
  /// unsatisfiable set for the classical decider).
  bool has_theorem(const Formula& f) const;
  bool has_antitheorem(std::span<const Formula> gamma) const;
  /// Antitheorem premise set or theorem conclusion.
  bool in_star(const Inference& inference) const;

  const std::vector<LogicSpec>& conjuncts() const noexcept { return conjuncts_; }
  bool is_classical() const noexcept { return classical_; }
  const std::string& label() const noexcept { return label_; }

 private:
  Decider() = default;
  std::vector<LogicSpec> conjuncts_;
  bool classical_ = false;
  std::string label_;
};

/// Members of `u` accepted by the decider.
UniverseSet members(const Decider& d, const Universe& u);
/// Members of `u` in the decider's star set.
UniverseSet star_members(const Decider& d, const Universe& u);
InferenceSet star_set(const LogicSpec& logic, const Universe& u);

/// T^d(L within u) against the star set of L, compared on reserve-free
/// inferences.
Report check_td_equals_star(const Decider& logic, const Universe& u);

/// T^d((SS ∩ TT) within u) is empty on reserve-free inferences, and the
/// intersection itself is not.
Report check_ts_collapse(const LogicSpec& ss_logic, const LogicSpec& tt_logic, const Universe& u);

/// The cut-gap inference p | q & ~q => p & (r | ~r) is classically valid
/// but neither ss- nor tt-valid, and ts-invalid; SS and TT are
/// incomparable on their two standard witnesses. The two printed
/// countervaluations are checked as falsifiers for the given schemes.
Report check_union_gap(const LogicSpec& ss_logic, const LogicSpec& tt_logic);

/// Every member of T((SS ∪ TT) within u) is st-valid (and hence classically
/// valid).
Report check_union_closure_sound(const LogicSpec& ss_logic, const LogicSpec& tt_logic, const LogicSpec& st_logic,
                                 const Universe& u);

enum class LatticeElement { kMeet, kSS, kTT, kST };

/// "SS∩TT", "SS", "TT", "ST".
std::string to_string(LatticeElement e);
inline constexpr LatticeElement kLatticeElements[] = {LatticeElement::kMeet, LatticeElement::kSS,
                                                      LatticeElement::kTT, LatticeElement::kST};

/// The ss, tt and st logics behind the four lattice elements, each over its
/// own BNM scheme.
struct LatticeFamily {
  LogicSpec ss;
  LogicSpec tt;
  LogicSpec st;

  static LatticeFamily uniform(const Scheme& s);
  static LatticeFamily mixed(const Scheme& ss_scheme, const Scheme& tt_scheme, const Scheme& st_scheme);

  /// The ts logic over the ss scheme.
  LogicSpec ts() const;
  Decider decider(LatticeElement e) const;
  std::string label() const;
};

/// Lattice value: the element it names plus the logics whose conjunction
/// decides membership (bit 0 ss, bit 1 tt, bit 2 st). Joins are decided by
/// the element order, with SS ⊔ TT = ST; meets conjoin deciders.
struct LatticeValue {
  LatticeElement element;
  unsigned conjuncts;

  friend bool operator==(const LatticeValue&, const LatticeValue&) = default;
};

LatticeValue lattice_value(LatticeElement e);
LatticeValue lattice_join(LatticeValue a, LatticeValue b);
LatticeValue lattice_meet(LatticeValue a, LatticeValue b);
Decider decider(const LatticeFamily& family, LatticeValue v);

/// Membership-level lattice laws on each sampled inference: inclusion order,
/// meet deciders against the element they name, join upper bounds, SS ⊔ TT
/// against classical validity, and commutativity, idempotence,
/// associativity and absorption of both operations.
Report verify_lattices(const LatticeFamily& family, std::span<const Inference> sample);

/// X ⊆ Y iff T(X ∪ Y) = Y for the four elements materialized in `u`.
Report check_lattice_order(const LatticeFamily& family, const Universe& u);

/// Star lattice on `u`: SS★ ∪ TT★ = ST★ = CL★, T^d of that union is
/// itself, T^d(SS★ ∩ TT★) = TS★ = T^d(∅) = ∅, TS★ below SS★ and TT★,
/// inclusion iff T^d of the intersection, and the lattice laws for
/// meet = T^d(X ∩ Y), join = X ∪ Y. Identities involving T^d are compared
/// on reserve-free inferences. Also checks the incomparability witnesses
/// and (p & ~p) => (q | ~q) in SS★ ∩ TT★ but not TS★.
Report verify_star_lattice(const LatticeFamily& family, const Universe& u);

/// Reflexivity, monotonicity, cut and substitution instances built from
/// the sample, checked against the decider.
Report check_tarskian_properties(const Decider& logic, std::span<const Inference> sample, std::uint64_t seed);

/// L1 = SS within u and L2 = TT within u are Tarskian-closed in u, and
/// Tar(L1 ∪ L2) = T(L1 ∪ L2).
Report check_tarskian_join(const LogicSpec& ss_logic, const LogicSpec& tt_logic, const Universe& u);

}  // namespace trivalent
