#ifndef RWA_DECIDE_HPP
#define RWA_DECIDE_HPP

#include <chrono>
#include <optional>
#include <string>
#include <vector>

#include "rwa/lang.hpp"
#include "rwa/monoid.hpp"
#include "rwa/ring.hpp"
#include "rwa/wfa.hpp"

namespace rwa {

/// Languages L_1..L_n, each given by a reversible automaton with exactly one
/// initial state.
struct Decomposition {
  Alphabet alphabet;
  std::vector<Nfa> languages;

  /// Throws Error naming the first member that is not over `alphabet`, not
  /// reversible, or lacks a unique initial state.
  void validate() const;
};

/// Nonempty subsets of {0..n-1}, by increasing size, then lexicographically.
std::vector<std::vector<std::size_t>> nonempty_subsets(std::size_t n);

/// Whether the syntactic monoid of L(d) has commuting idempotents.
EcomVerdict ecom_language_check(const Dfa& d);

struct ShiftResult {
  RingElement shift;
  std::size_t support_states = 0; // reachable vectors
  std::size_t minimal_states = 0;
  std::size_t monoid_size = 0;
  std::size_t idempotent_count = 0;
  EcomVerdict ecom;
  std::chrono::microseconds elapsed{0};
};

struct DecisionReport {
  bool reversible = true;
  Ring ring;
  Alphabet alphabet;
  std::size_t automaton_states = 0;
  bool restricted_to_subring = false;
  std::vector<ShiftResult> shifts; // in ring enumeration order
  std::chrono::microseconds elapsed{0};

  /// First shift whose support fails the check.
  const ShiftResult* first_failure() const;
};

struct DecideOptions {
  /// Enumerate shifts over the subring generated by the automaton's weights.
  bool use_generated_subring = false;
  /// Worker threads for the per-shift work; 0 picks the hardware concurrency.
  unsigned threads = 0;
};

/// Rebases `a` onto the subring generated by its weights.
WeightedAutomaton restrict_to_generated_subring(const WeightedAutomaton& a);

/// Reversibility of ||a|| over its ring: reversible iff for every shift x the
/// support of ||a|| + x Sigma* has a syntactic monoid with commuting idempotents.
DecisionReport decide_reversible_series(const WeightedAutomaton& a, const DecideOptions& opts = {});

/// Reversible automaton over F_2 realizing the characteristic series of
/// L_1 u ... u L_n: the disjoint union over nonempty X of the lifted
/// intersections of the L_i, i in X.
WeightedAutomaton witness_union_f2(const Decomposition& dec);

/// Reversible automaton over r realizing the characteristic series of
/// L(target), where L(target) must be the set of words lying in an odd number
/// of the L_i. Component X carries the scalar (-2)^(|X|-1).
WeightedAutomaton witness_char_series_over_ring(const Decomposition& dec, const Dfa& target,
                                                const Ring& r);

/// Minimal DFA of the words lying in an odd number of the L_i.
Dfa parity_support(const Decomposition& dec);

struct Classification {
  EcomVerdict ecom;
  bool omega_commute = true;
  OmegaOrderVerdict omega_below_one;

  /// Reversible in Pin's sense, per the pseudoinequalities
  /// x^w y^w = y^w x^w and x^w <= 1.
  bool pin_reversible() const noexcept { return omega_commute && omega_below_one.holds; }
};

Classification classify_language(const Dfa& d);

/// For each x in the ring, the minimal DFA of {w : (r, w) = x}; together they
/// express r as the step function sum_x x * char(level set).
std::vector<std::pair<RingElement, Dfa>> level_sets(const LinearRepresentation& lr);

} // namespace rwa

#endif // RWA_DECIDE_HPP
