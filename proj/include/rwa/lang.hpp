#ifndef RWA_LANG_HPP
#define RWA_LANG_HPP

#include <optional>
#include <set>
#include <vector>

#include "rwa/alphabet.hpp"
#include "rwa/ring.hpp"
#include "rwa/wfa.hpp"

namespace rwa {

/// Boolean nondeterministic automaton without epsilon transitions.
class Nfa {
public:
  Nfa(Alphabet alphabet, std::size_t states = 0);

  const Alphabet& alphabet() const noexcept { return alphabet_; }
  std::size_t num_states() const noexcept { return initial_.size(); }

  StateId add_state();
  void add_transition(StateId from, Symbol symbol, StateId to);
  void set_initial(StateId q, bool on = true);
  void set_final(StateId q, bool on = true);

  bool is_initial(StateId q) const { return initial_.at(q); }
  bool is_final(StateId q) const { return final_.at(q); }
  std::vector<StateId> initial_states() const;
  std::vector<StateId> final_states() const;
  const std::set<Transition>& transitions() const noexcept { return transitions_; }
  /// Successors of q on c, ascending.
  std::vector<StateId> successors(StateId q, Symbol c) const;

  bool accepts(const Word& w) const;

  bool operator==(const Nfa&) const = default;

private:
  void check_state(StateId q) const;

  Alphabet alphabet_;
  std::vector<bool> initial_;
  std::vector<bool> final_;
  std::set<Transition> transitions_;
};

/// Complete deterministic automaton: a total action states x alphabet -> states
/// and exactly one initial state.
class Dfa {
public:
  /// `table[q * |alphabet| + c]` is the target of q on c.
  Dfa(Alphabet alphabet, std::size_t states, StateId initial, std::vector<StateId> table,
      std::vector<bool> finals);

  const Alphabet& alphabet() const noexcept { return alphabet_; }
  std::size_t num_states() const noexcept { return finals_.size(); }
  StateId initial() const noexcept { return initial_; }
  bool is_final(StateId q) const { return finals_.at(q); }
  const std::vector<bool>& finals() const noexcept { return finals_; }
  StateId next(StateId q, Symbol c) const { return table_[q * alphabet_.size() + c]; }
  const std::vector<StateId>& table() const noexcept { return table_; }

  StateId run(StateId from, const Word& w) const;
  bool accepts(const Word& w) const { return is_final(run(initial_, w)); }

  Nfa to_nfa() const;

  bool operator==(const Dfa&) const = default;

private:
  Alphabet alphabet_;
  StateId initial_;
  std::vector<StateId> table_;
  std::vector<bool> finals_;
};

struct NfaReversibility {
  bool reversible = false;
  bool one_initial = false;
};

NfaReversibility nfa_reversibility(const Nfa& a);

/// Weight 1 on every transition, initial and final state of `a`.
WeightedAutomaton lift_to_wa(const Nfa& a, const Ring& r);

/// Reachable pair product of two reversible automata with one initial state each.
Nfa intersect_orev(const Nfa& a, const Nfa& b);

/// DFA over the reachable row vectors i mu(w); v is final iff v f + x != 0.
/// Recognizes supp(||A|| + x Sigma*). States are numbered in BFS order.
Dfa support_dfa(const LinearRepresentation& lr, RingElement x);

/// Subset construction; the result is complete (a sink is added when needed).
Dfa determinize(const Nfa& a);

/// Reachable states merged by partition refinement, then renumbered in BFS
/// order from the initial state over the sorted alphabet.
Dfa minimize(const Dfa& d);

/// Keeps the reachable states, numbered in BFS order.
Dfa trim_unreachable(const Dfa& d);

enum class BoolOp { union_, intersection, difference, symdiff };

Dfa dfa_boolean(const Dfa& a, const Dfa& b, BoolOp op);
Dfa dfa_complement(const Dfa& a);

/// Shortest (length-lexicographic) word accepted by exactly one of a and b.
std::optional<Word> distinguishing_word(const Dfa& a, const Dfa& b);
bool dfa_equivalence(const Dfa& a, const Dfa& b);

/// Shortest words reaching each state (BFS over the sorted alphabet);
/// unreachable states get std::nullopt.
std::vector<std::optional<Word>> access_words(const Dfa& d);

} // namespace rwa

#endif // RWA_LANG_HPP
