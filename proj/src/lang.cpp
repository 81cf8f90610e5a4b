#include "rwa/lang.hpp"

#include <algorithm>
#include <map>
#include <queue>
#include <unordered_map>

namespace rwa {

namespace {

struct VectorHash {
  std::size_t operator()(const std::vector<std::uint32_t>& v) const noexcept {
    std::size_t h = v.size();
    for (auto x : v)
      h ^= x + 0x9e3779b97f4a7c15ull + (h << 6) + (h >> 2);
    return h;
  }
};

void require_same_alphabet(const Alphabet& a, const Alphabet& b) {
  if (!(a == b))
    throw Error("automata are over different alphabets");
}

} // namespace

// ---------------------------------------------------------------------------
// Nfa

Nfa::Nfa(Alphabet alphabet, std::size_t states)
    : alphabet_(std::move(alphabet)), initial_(states, false), final_(states, false) {
  if (alphabet_.empty())
    throw Error("automaton requires a nonempty alphabet");
}

StateId Nfa::add_state() {
  initial_.push_back(false);
  final_.push_back(false);
  return static_cast<StateId>(initial_.size() - 1);
}

void Nfa::check_state(StateId q) const {
  if (q >= num_states())
    throw Error("state " + std::to_string(q) + " out of range");
}

void Nfa::add_transition(StateId from, Symbol symbol, StateId to) {
  check_state(from);
  check_state(to);
  if (symbol >= alphabet_.size())
    throw Error("transition symbol out of range");
  transitions_.insert({from, symbol, to});
}

void Nfa::set_initial(StateId q, bool on) {
  check_state(q);
  initial_[q] = on;
}

void Nfa::set_final(StateId q, bool on) {
  check_state(q);
  final_[q] = on;
}

std::vector<StateId> Nfa::initial_states() const {
  std::vector<StateId> out;
  for (StateId q = 0; q < num_states(); ++q)
    if (initial_[q])
      out.push_back(q);
  return out;
}

std::vector<StateId> Nfa::final_states() const {
  std::vector<StateId> out;
  for (StateId q = 0; q < num_states(); ++q)
    if (final_[q])
      out.push_back(q);
  return out;
}

std::vector<StateId> Nfa::successors(StateId q, Symbol c) const {
  std::vector<StateId> out;
  for (auto it = transitions_.lower_bound({q, c, 0});
       it != transitions_.end() && it->from == q && it->symbol == c; ++it)
    out.push_back(it->to);
  return out;
}

bool Nfa::accepts(const Word& w) const {
  std::vector<bool> current = initial_;
  for (Symbol c : w) {
    if (c >= alphabet_.size())
      throw Error("word contains a symbol outside the alphabet");
    std::vector<bool> next(num_states(), false);
    for (const auto& t : transitions_)
      if (t.symbol == c && current[t.from])
        next[t.to] = true;
    current = std::move(next);
  }
  for (StateId q = 0; q < num_states(); ++q)
    if (current[q] && final_[q])
      return true;
  return false;
}

// ---------------------------------------------------------------------------
// Dfa

Dfa::Dfa(Alphabet alphabet, std::size_t states, StateId initial, std::vector<StateId> table,
         std::vector<bool> finals)
    : alphabet_(std::move(alphabet)), initial_(initial), table_(std::move(table)),
      finals_(std::move(finals)) {
  if (alphabet_.empty())
    throw Error("automaton requires a nonempty alphabet");
  if (states == 0)
    throw Error("a complete DFA needs at least one state");
  if (initial_ >= states)
    throw Error("DFA initial state out of range");
  if (finals_.size() != states)
    throw Error("DFA final-state vector has the wrong length");
  if (table_.size() != states * alphabet_.size())
    throw Error("DFA transition table is not total");
  for (auto q : table_)
    if (q >= states)
      throw Error("DFA transition target out of range");
}

StateId Dfa::run(StateId from, const Word& w) const {
  StateId q = from;
  for (Symbol c : w) {
    if (c >= alphabet_.size())
      throw Error("word contains a symbol outside the alphabet");
    q = next(q, c);
  }
  return q;
}

Nfa Dfa::to_nfa() const {
  Nfa out(alphabet_, num_states());
  out.set_initial(initial_);
  for (StateId q = 0; q < num_states(); ++q) {
    out.set_final(q, finals_[q]);
    for (Symbol c = 0; c < alphabet_.size(); ++c)
      out.add_transition(q, c, next(q, c));
  }
  return out;
}

// ---------------------------------------------------------------------------
// operations

NfaReversibility nfa_reversibility(const Nfa& a) {
  NfaReversibility r;
  r.one_initial = a.initial_states().size() == 1;
  r.reversible = true;
  std::set<std::pair<StateId, Symbol>> out_seen, in_seen;
  for (const auto& t : a.transitions()) {
    if (!out_seen.insert({t.from, t.symbol}).second || !in_seen.insert({t.to, t.symbol}).second) {
      r.reversible = false;
      break;
    }
  }
  return r;
}

WeightedAutomaton lift_to_wa(const Nfa& a, const Ring& r) {
  WeightedAutomaton out(r, a.alphabet(), a.num_states());
  for (StateId q = 0; q < a.num_states(); ++q) {
    if (a.is_initial(q))
      out.set_initial(q, r.one());
    if (a.is_final(q))
      out.set_final(q, r.one());
  }
  for (const auto& t : a.transitions())
    out.set_transition(t.from, t.symbol, t.to, r.one());
  return out;
}

Nfa intersect_orev(const Nfa& a, const Nfa& b) {
  require_same_alphabet(a.alphabet(), b.alphabet());
  for (const Nfa* x : {&a, &b}) {
    auto rev = nfa_reversibility(*x);
    if (!rev.reversible || !rev.one_initial)
      throw Error("intersect_orev requires reversible automata with exactly one initial state");
  }
  const std::size_t k = a.alphabet().size();
  std::map<std::pair<StateId, StateId>, StateId> ids;
  std::vector<std::pair<StateId, StateId>> pairs;
  auto intern = [&](std::pair<StateId, StateId> p) {
    auto [it, fresh] = ids.emplace(p, static_cast<StateId>(pairs.size()));
    if (fresh)
      pairs.push_back(p);
    return it->second;
  };
  intern({a.initial_states().front(), b.initial_states().front()});
  std::vector<Transition> edges;
  for (std::size_t i = 0; i < pairs.size(); ++i) {
    auto [p, q] = pairs[i];
    for (Symbol c = 0; c < k; ++c) {
      auto sa = a.successors(p, c);
      auto sb = b.successors(q, c);
      if (sa.empty() || sb.empty())
        continue;
      StateId target = intern({sa.front(), sb.front()});
      edges.push_back({static_cast<StateId>(i), c, target});
    }
  }
  Nfa out(a.alphabet(), pairs.size());
  out.set_initial(0);
  for (std::size_t i = 0; i < pairs.size(); ++i)
    out.set_final(static_cast<StateId>(i), a.is_final(pairs[i].first) && b.is_final(pairs[i].second));
  for (const auto& e : edges)
    out.add_transition(e.from, e.symbol, e.to);
  return out;
}

Dfa support_dfa(const LinearRepresentation& lr, RingElement x) {
  const auto& R = lr.ring;
  if (!R.contains(x))
    throw Error("shift is not an element of the representation's ring");
  const std::size_t k = lr.alphabet.size();

  auto key = [](const RowVector& v) {
    std::vector<std::uint32_t> out(v.size());
    for (std::size_t i = 0; i < v.size(); ++i)
      out[i] = v[i].index();
    return out;
  };
  std::unordered_map<std::vector<std::uint32_t>, StateId, VectorHash> ids;
  std::vector<RowVector> states;
  std::vector<StateId> table;
  auto intern = [&](const RowVector& v) {
    auto [it, fresh] = ids.emplace(key(v), static_cast<StateId>(states.size()));
    if (fresh)
      states.push_back(v);
    return it->second;
  };
  intern(lr.initial);
  for (std::size_t i = 0; i < states.size(); ++i)
    for (Symbol c = 0; c < k; ++c) {
      RowVector next = step(lr, states[i], c);
      table.push_back(intern(next));
    }
  std::vector<bool> finals(states.size());
  for (std::size_t i = 0; i < states.size(); ++i)
    finals[i] = !R.is_zero(R.add(dot(R, states[i], lr.final), x));
  return Dfa(lr.alphabet, states.size(), 0, std::move(table), std::move(finals));
}

Dfa determinize(const Nfa& a) {
  const std::size_t k = a.alphabet().size();
  std::map<std::vector<StateId>, StateId> ids;
  std::vector<std::vector<StateId>> subsets;
  auto intern = [&](std::vector<StateId> s) {
    auto [it, fresh] = ids.emplace(s, static_cast<StateId>(subsets.size()));
    if (fresh)
      subsets.push_back(std::move(s));
    return it->second;
  };
  intern(a.initial_states());
  std::vector<StateId> table;
  for (std::size_t i = 0; i < subsets.size(); ++i)
    for (Symbol c = 0; c < k; ++c) {
      std::vector<StateId> next;
      for (StateId q : subsets[i]) {
        auto succ = a.successors(q, c);
        next.insert(next.end(), succ.begin(), succ.end());
      }
      std::sort(next.begin(), next.end());
      next.erase(std::unique(next.begin(), next.end()), next.end());
      table.push_back(intern(std::move(next)));
    }
  std::vector<bool> finals(subsets.size(), false);
  for (std::size_t i = 0; i < subsets.size(); ++i)
    finals[i] = std::any_of(subsets[i].begin(), subsets[i].end(),
                            [&](StateId q) { return a.is_final(q); });
  return Dfa(a.alphabet(), subsets.size(), 0, std::move(table), std::move(finals));
}

Dfa trim_unreachable(const Dfa& d) {
  const std::size_t k = d.alphabet().size();
  constexpr StateId kUnseen = ~StateId{0};
  std::vector<StateId> renumber(d.num_states(), kUnseen);
  std::vector<StateId> order{d.initial()};
  renumber[d.initial()] = 0;
  for (std::size_t i = 0; i < order.size(); ++i)
    for (Symbol c = 0; c < k; ++c) {
      StateId t = d.next(order[i], c);
      if (renumber[t] == kUnseen) {
        renumber[t] = static_cast<StateId>(order.size());
        order.push_back(t);
      }
    }
  std::vector<StateId> table;
  std::vector<bool> finals;
  for (StateId q : order) {
    finals.push_back(d.is_final(q));
    for (Symbol c = 0; c < k; ++c)
      table.push_back(renumber[d.next(q, c)]);
  }
  return Dfa(d.alphabet(), order.size(), 0, std::move(table), std::move(finals));
}

Dfa minimize(const Dfa& input) {
  const Dfa d = trim_unreachable(input);
  const std::size_t n = d.num_states(), k = d.alphabet().size();

  // Moore refinement: split classes by (class, classes of successors) until stable
  std::vector<StateId> cls(n);
  for (StateId q = 0; q < n; ++q)
    cls[q] = d.is_final(q) ? 1 : 0;
  std::size_t count = 0;
  while (true) {
    std::map<std::vector<StateId>, StateId> sig_ids;
    std::vector<StateId> next(n);
    for (StateId q = 0; q < n; ++q) {
      std::vector<StateId> sig{cls[q]};
      for (Symbol c = 0; c < k; ++c)
        sig.push_back(cls[d.next(q, c)]);
      next[q] = sig_ids.emplace(std::move(sig), static_cast<StateId>(sig_ids.size())).first->second;
    }
    cls = std::move(next);
    if (sig_ids.size() == count)
      break;
    count = sig_ids.size();
  }

  std::vector<StateId> table(count * k);
  std::vector<bool> finals(count);
  for (StateId q = 0; q < n; ++q) {
    finals[cls[q]] = d.is_final(q);
    for (Symbol c = 0; c < k; ++c)
      table[cls[q] * k + c] = cls[d.next(q, c)];
  }
  return trim_unreachable(Dfa(d.alphabet(), count, cls[d.initial()], std::move(table), std::move(finals)));
}

Dfa dfa_boolean(const Dfa& a, const Dfa& b, BoolOp op) {
  require_same_alphabet(a.alphabet(), b.alphabet());
  const std::size_t k = a.alphabet().size();
  std::map<std::pair<StateId, StateId>, StateId> ids;
  std::vector<std::pair<StateId, StateId>> pairs;
  auto intern = [&](std::pair<StateId, StateId> p) {
    auto [it, fresh] = ids.emplace(p, static_cast<StateId>(pairs.size()));
    if (fresh)
      pairs.push_back(p);
    return it->second;
  };
  intern({a.initial(), b.initial()});
  std::vector<StateId> table;
  for (std::size_t i = 0; i < pairs.size(); ++i)
    for (Symbol c = 0; c < k; ++c) {
      auto [p, q] = pairs[i];
      table.push_back(intern({a.next(p, c), b.next(q, c)}));
    }
  std::vector<bool> finals(pairs.size());
  for (std::size_t i = 0; i < pairs.size(); ++i) {
    bool x = a.is_final(pairs[i].first), y = b.is_final(pairs[i].second);
    switch (op) {
    case BoolOp::union_:
      finals[i] = x || y;
      break;
    case BoolOp::intersection:
      finals[i] = x && y;
      break;
    case BoolOp::difference:
      finals[i] = x && !y;
      break;
    case BoolOp::symdiff:
      finals[i] = x != y;
      break;
    }
  }
  return Dfa(a.alphabet(), pairs.size(), 0, std::move(table), std::move(finals));
}

Dfa dfa_complement(const Dfa& a) {
  std::vector<bool> finals(a.num_states());
  for (StateId q = 0; q < a.num_states(); ++q)
    finals[q] = !a.is_final(q);
  return Dfa(a.alphabet(), a.num_states(), a.initial(), a.table(), std::move(finals));
}

std::optional<Word> distinguishing_word(const Dfa& a, const Dfa& b) {
  require_same_alphabet(a.alphabet(), b.alphabet());
  const std::size_t k = a.alphabet().size();
  struct Node {
    std::pair<StateId, StateId> states;
    std::size_t parent;
    Symbol via;
  };
  std::map<std::pair<StateId, StateId>, std::size_t> seen;
  std::vector<Node> nodes{{{a.initial(), b.initial()}, 0, 0}};
  seen[nodes[0].states] = 0;
  for (std::size_t i = 0; i < nodes.size(); ++i) {
    auto [p, q] = nodes[i].states;
    if (a.is_final(p) != b.is_final(q)) {
      Word w;
      for (std::size_t j = i; j != 0; j = nodes[j].parent)
        w.push_back(nodes[j].via);
      std::reverse(w.begin(), w.end());
      return w;
    }
    for (Symbol c = 0; c < k; ++c) {
      std::pair<StateId, StateId> next{a.next(p, c), b.next(q, c)};
      if (seen.emplace(next, nodes.size()).second)
        nodes.push_back({next, i, c});
    }
  }
  return std::nullopt;
}

bool dfa_equivalence(const Dfa& a, const Dfa& b) { return !distinguishing_word(a, b).has_value(); }

std::vector<std::optional<Word>> access_words(const Dfa& d) {
  std::vector<std::optional<Word>> out(d.num_states());
  out[d.initial()] = Word{};
  std::queue<StateId> queue;
  queue.push(d.initial());
  while (!queue.empty()) {
    StateId q = queue.front();
    queue.pop();
    for (Symbol c = 0; c < d.alphabet().size(); ++c) {
      StateId t = d.next(q, c);
      if (!out[t]) {
        Word w = *out[q];
        w.push_back(c);
        out[t] = std::move(w);
        queue.push(t);
      }
    }
  }
  return out;
}

} // namespace rwa
