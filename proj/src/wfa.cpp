#include "rwa/wfa.hpp"

#include <algorithm>
#include <numeric>

namespace rwa {

WeightedAutomaton::WeightedAutomaton(Ring ring, Alphabet alphabet, std::size_t states)
    : ring_(std::move(ring)), alphabet_(std::move(alphabet)),
      initial_(states, ring_.zero()), final_(states, ring_.zero()) {
  if (alphabet_.empty())
    throw Error("weighted automaton requires a nonempty alphabet");
}

StateId WeightedAutomaton::add_state() {
  initial_.push_back(ring_.zero());
  final_.push_back(ring_.zero());
  return static_cast<StateId>(initial_.size() - 1);
}

void WeightedAutomaton::check_state(StateId q) const {
  if (q >= num_states())
    throw Error("state " + std::to_string(q) + " out of range");
}

void WeightedAutomaton::set_initial(StateId q, RingElement w) {
  check_state(q);
  if (!ring_.contains(w))
    throw Error("initial weight is not an element of the automaton's ring");
  initial_[q] = w;
}

void WeightedAutomaton::set_final(StateId q, RingElement w) {
  check_state(q);
  if (!ring_.contains(w))
    throw Error("final weight is not an element of the automaton's ring");
  final_[q] = w;
}

void WeightedAutomaton::set_transition(StateId from, Symbol symbol, StateId to, RingElement w) {
  check_state(from);
  check_state(to);
  if (symbol >= alphabet_.size())
    throw Error("transition symbol out of range");
  if (!ring_.contains(w))
    throw Error("transition weight is not an element of the automaton's ring");
  Transition t{from, symbol, to};
  if (ring_.is_zero(w))
    transitions_.erase(t);
  else
    transitions_[t] = w;
}

RingElement WeightedAutomaton::transition(StateId from, Symbol symbol, StateId to) const {
  auto it = transitions_.find({from, symbol, to});
  return it == transitions_.end() ? ring_.zero() : it->second;
}

std::vector<StateId> WeightedAutomaton::initial_states() const {
  std::vector<StateId> out;
  for (StateId q = 0; q < num_states(); ++q)
    if (!ring_.is_zero(initial_[q]))
      out.push_back(q);
  return out;
}

std::vector<StateId> WeightedAutomaton::final_states() const {
  std::vector<StateId> out;
  for (StateId q = 0; q < num_states(); ++q)
    if (!ring_.is_zero(final_[q]))
      out.push_back(q);
  return out;
}

Matrix::Matrix(const Ring& ring, std::size_t n) : n_(n), data_(n * n, ring.zero()) {}

Matrix Matrix::identity(const Ring& ring, std::size_t n) {
  Matrix m(ring, n);
  for (std::size_t i = 0; i < n; ++i)
    m.at(i, i) = ring.one();
  return m;
}

LinearRepresentation to_linear_representation(const WeightedAutomaton& a) {
  const auto& R = a.ring();
  const std::size_t n = a.num_states();
  LinearRepresentation lr{R, a.alphabet(), n, RowVector(n, R.zero()), {}, RowVector(n, R.zero())};
  lr.mu.assign(a.alphabet().size(), Matrix(R, n));
  for (StateId q = 0; q < n; ++q) {
    lr.initial[q] = a.initial(q);
    lr.final[q] = a.final_weight(q);
  }
  for (const auto& [t, w] : a.transitions())
    lr.mu[t.symbol].at(t.from, t.to) = w;
  return lr;
}

RowVector step(const LinearRepresentation& lr, const RowVector& v, Symbol c) {
  const auto& R = lr.ring;
  const auto& m = lr.mu.at(c);
  RowVector out(lr.dim, R.zero());
  for (std::size_t p = 0; p < lr.dim; ++p) {
    if (R.is_zero(v[p]))
      continue;
    for (std::size_t q = 0; q < lr.dim; ++q) {
      auto w = m.at(p, q);
      if (!R.is_zero(w))
        out[q] = R.add(out[q], R.mul(v[p], w));
    }
  }
  return out;
}

RingElement dot(const Ring& ring, const RowVector& v, const RowVector& f) {
  RingElement acc = ring.zero();
  for (std::size_t q = 0; q < v.size(); ++q)
    acc = ring.add(acc, ring.mul(v[q], f[q]));
  return acc;
}

RingElement coefficient(const LinearRepresentation& lr, const Word& w) {
  RowVector v = lr.initial;
  for (Symbol c : w) {
    if (c >= lr.alphabet.size())
      throw Error("word contains a symbol outside the alphabet");
    v = step(lr, v, c);
  }
  return dot(lr.ring, v, lr.final);
}

RingElement coefficient(const WeightedAutomaton& a, const Word& w) {
  return coefficient(to_linear_representation(a), w);
}

namespace {

void sum_runs(const WeightedAutomaton& a, const std::vector<std::vector<std::pair<StateId, RingElement>>>& out_edges,
              const Word& w, std::size_t pos, StateId q, RingElement weight, RingElement& total) {
  const auto& R = a.ring();
  if (pos == w.size()) {
    total = R.add(total, R.mul(weight, a.final_weight(q)));
    return;
  }
  const std::size_t k = a.alphabet().size();
  for (const auto& [to, tw] : out_edges[q * k + w[pos]])
    sum_runs(a, out_edges, w, pos + 1, to, R.mul(weight, tw), total);
}

} // namespace

RingElement coefficient_by_runs(const WeightedAutomaton& a, const Word& w) {
  const auto& R = a.ring();
  const std::size_t k = a.alphabet().size();
  for (Symbol c : w)
    if (c >= k)
      throw Error("word contains a symbol outside the alphabet");
  std::vector<std::vector<std::pair<StateId, RingElement>>> out_edges(a.num_states() * k);
  for (const auto& [t, tw] : a.transitions())
    out_edges[t.from * k + t.symbol].emplace_back(t.to, tw);
  RingElement total = R.zero();
  for (StateId q : a.initial_states())
    sum_runs(a, out_edges, w, 0, q, a.initial(q), total);
  return total;
}

ReversibilityVerdict is_reversible(const WeightedAutomaton& a) {
  // transitions_ is ordered by (from, symbol, to), so determinism violations are adjacent
  const Transition* prev = nullptr;
  for (const auto& [t, w] : a.transitions()) {
    if (prev && prev->from == t.from && prev->symbol == t.symbol)
      return {false, std::pair{*prev, t}};
    prev = &t;
  }
  std::map<std::pair<StateId, Symbol>, Transition> into;
  for (const auto& [t, w] : a.transitions()) {
    auto [it, fresh] = into.emplace(std::pair{t.to, t.symbol}, t);
    if (!fresh)
      return {false, std::pair{it->second, t}};
  }
  return {};
}

bool is_bideterministic(const WeightedAutomaton& a) {
  return is_reversible(a).reversible && a.initial_states().size() <= 1 &&
         a.final_states().size() <= 1;
}

WeightedAutomaton disjoint_union(std::span<const WeightedAutomaton> parts, const Ring& ring,
                                 const Alphabet& alphabet) {
  std::size_t total = 0;
  for (const auto& p : parts) {
    if (!(p.ring() == ring))
      throw Error("disjoint union: automata over different rings");
    if (!(p.alphabet() == alphabet))
      throw Error("disjoint union: automata over different alphabets");
    total += p.num_states();
  }
  WeightedAutomaton out(ring, alphabet, total);
  StateId offset = 0;
  for (const auto& p : parts) {
    for (StateId q = 0; q < p.num_states(); ++q) {
      out.set_initial(offset + q, p.initial(q));
      out.set_final(offset + q, p.final_weight(q));
    }
    for (const auto& [t, w] : p.transitions())
      out.set_transition(offset + t.from, t.symbol, offset + t.to, w);
    offset += static_cast<StateId>(p.num_states());
  }
  return out;
}

WeightedAutomaton disjoint_union(std::span<const WeightedAutomaton> parts) {
  if (parts.empty())
    throw Error("disjoint union of no automata needs an explicit ring and alphabet");
  return disjoint_union(parts, parts.front().ring(), parts.front().alphabet());
}

WeightedAutomaton scalar_mul(const WeightedAutomaton& a, RingElement x, Side side) {
  const auto& R = a.ring();
  if (!R.contains(x))
    throw Error("scalar is not an element of the automaton's ring");
  WeightedAutomaton out = a;
  for (StateId q = 0; q < a.num_states(); ++q) {
    if (side == Side::left)
      out.set_initial(q, R.mul(x, a.initial(q)));
    else
      out.set_final(q, R.mul(a.final_weight(q), x));
  }
  return out;
}

std::vector<WeightedAutomaton> split_by_initial(const WeightedAutomaton& a) {
  std::vector<WeightedAutomaton> out;
  for (StateId q : a.initial_states()) {
    WeightedAutomaton part = a;
    for (StateId p = 0; p < a.num_states(); ++p)
      if (p != q)
        part.set_initial(p, a.ring().zero());
    out.push_back(std::move(part));
  }
  return out;
}

WeightedAutomaton relabel_states(const WeightedAutomaton& a, std::span<const StateId> perm) {
  const std::size_t n = a.num_states();
  if (perm.size() != n)
    throw Error("relabel_states: permutation has the wrong length");
  std::vector<bool> seen(n, false);
  for (StateId q : perm) {
    if (q >= n || seen[q])
      throw Error("relabel_states: not a permutation");
    seen[q] = true;
  }
  WeightedAutomaton out(a.ring(), a.alphabet(), n);
  for (StateId q = 0; q < n; ++q) {
    out.set_initial(perm[q], a.initial(q));
    out.set_final(perm[q], a.final_weight(q));
  }
  for (const auto& [t, w] : a.transitions())
    out.set_transition(perm[t.from], t.symbol, perm[t.to], w);
  return out;
}

} // namespace rwa
