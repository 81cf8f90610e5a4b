#ifndef RWA_WFA_HPP
#define RWA_WFA_HPP

#include <map>
#include <optional>
#include <span>
#include <vector>

#include "rwa/alphabet.hpp"
#include "rwa/ring.hpp"

namespace rwa {

struct Transition {
  StateId from = 0;
  Symbol symbol = 0;
  StateId to = 0;

  friend auto operator<=>(const Transition&, const Transition&) = default;
};

/// A weighted automaton (Q, sigma, iota, tau) over a finite commutative ring.
///
/// States are 0..n-1. Transition weights are sparse; an absent entry means
/// zero, and setting a weight to zero removes the entry, so every stored
/// transition is nonzero.
class WeightedAutomaton {
public:
  WeightedAutomaton(Ring ring, Alphabet alphabet, std::size_t states = 0);

  const Ring& ring() const noexcept { return ring_; }
  const Alphabet& alphabet() const noexcept { return alphabet_; }
  std::size_t num_states() const noexcept { return initial_.size(); }

  StateId add_state();
  void set_initial(StateId q, RingElement w);
  void set_final(StateId q, RingElement w);
  void set_transition(StateId from, Symbol symbol, StateId to, RingElement w);

  RingElement initial(StateId q) const { return initial_.at(q); }
  RingElement final_weight(StateId q) const { return final_.at(q); }
  RingElement transition(StateId from, Symbol symbol, StateId to) const;
  const std::map<Transition, RingElement>& transitions() const noexcept { return transitions_; }

  /// States with nonzero initial weight, ascending.
  std::vector<StateId> initial_states() const;
  std::vector<StateId> final_states() const;

private:
  void check_state(StateId q) const;

  Ring ring_;
  Alphabet alphabet_;
  std::vector<RingElement> initial_;
  std::vector<RingElement> final_;
  std::map<Transition, RingElement> transitions_;
};

/// Dense square matrix over a ring.
class Matrix {
public:
  Matrix(const Ring& ring, std::size_t n);
  static Matrix identity(const Ring& ring, std::size_t n);

  std::size_t dim() const noexcept { return n_; }
  RingElement at(std::size_t row, std::size_t col) const { return data_[row * n_ + col]; }
  RingElement& at(std::size_t row, std::size_t col) { return data_[row * n_ + col]; }

  bool operator==(const Matrix&) const = default;

private:
  std::size_t n_;
  std::vector<RingElement> data_;
};

using RowVector = std::vector<RingElement>;

/// (n, i, mu, f) with coefficient (r, w) = i mu(w) f.
struct LinearRepresentation {
  Ring ring;
  Alphabet alphabet;
  std::size_t dim = 0;
  RowVector initial;
  std::vector<Matrix> mu; // indexed by Symbol
  RowVector final;
};

LinearRepresentation to_linear_representation(const WeightedAutomaton& a);

/// v * mu(c)
RowVector step(const LinearRepresentation& lr, const RowVector& v, Symbol c);
RingElement dot(const Ring& ring, const RowVector& v, const RowVector& f);

/// i mu(w) f; throws Error on symbols outside the alphabet.
RingElement coefficient(const LinearRepresentation& lr, const Word& w);
RingElement coefficient(const WeightedAutomaton& a, const Word& w);

/// Sum of run weights over all runs on w. Exponential in |w|; meant as an oracle.
RingElement coefficient_by_runs(const WeightedAutomaton& a, const Word& w);

struct ReversibilityVerdict {
  bool reversible = true;
  /// Two nonzero transitions violating determinism (same source and symbol)
  /// or codeterminism (same target and symbol).
  std::optional<std::pair<Transition, Transition>> violation;

  explicit operator bool() const noexcept { return reversible; }
};

ReversibilityVerdict is_reversible(const WeightedAutomaton& a);

/// Reversible with at most one initial and at most one final state.
bool is_bideterministic(const WeightedAutomaton& a);

/// Tagged union of the inputs; component k's states follow those of components < k.
/// An empty input yields the empty automaton, so `ring` and `alphabet` are
/// needed for that case.
WeightedAutomaton disjoint_union(std::span<const WeightedAutomaton> parts, const Ring& ring,
                                 const Alphabet& alphabet);
WeightedAutomaton disjoint_union(std::span<const WeightedAutomaton> parts);

enum class Side { left, right };

/// left: iota' = x iota; right: tau' = tau x.
WeightedAutomaton scalar_mul(const WeightedAutomaton& a, RingElement x, Side side = Side::left);

/// One automaton per state with nonzero initial weight, in state order.
std::vector<WeightedAutomaton> split_by_initial(const WeightedAutomaton& a);

/// Renames state q to perm[q]; perm must be a permutation of 0..n-1.
WeightedAutomaton relabel_states(const WeightedAutomaton& a, std::span<const StateId> perm);

} // namespace rwa

#endif // RWA_WFA_HPP
