#include "rwa/decide.hpp"

#include <algorithm>
#include <atomic>
#include <thread>

namespace rwa {

void Decomposition::validate() const {
  for (std::size_t i = 0; i < languages.size(); ++i) {
    const auto& l = languages[i];
    if (!(l.alphabet() == alphabet))
      throw Error("decomposition member " + std::to_string(i) + " is over a different alphabet");
    auto rev = nfa_reversibility(l);
    if (!rev.reversible)
      throw Error("decomposition member " + std::to_string(i) + " is not reversible");
    if (!rev.one_initial)
      throw Error("decomposition member " + std::to_string(i) +
                  " does not have exactly one initial state");
  }
}

std::vector<std::vector<std::size_t>> nonempty_subsets(std::size_t n) {
  std::vector<std::vector<std::size_t>> out;
  // combinations of each size in lexicographic order
  for (std::size_t size = 1; size <= n; ++size) {
    std::vector<std::size_t> c(size);
    for (std::size_t i = 0; i < size; ++i)
      c[i] = i;
    while (true) {
      out.push_back(c);
      std::size_t i = size;
      while (i > 0 && c[i - 1] == n - size + i - 1)
        --i;
      if (i == 0)
        break;
      ++c[i - 1];
      for (std::size_t j = i; j < size; ++j)
        c[j] = c[j - 1] + 1;
    }
  }
  return out;
}

EcomVerdict ecom_language_check(const Dfa& d) { return is_ecom(syntactic_monoid(d)); }

const ShiftResult* DecisionReport::first_failure() const {
  for (const auto& s : shifts)
    if (!s.ecom.holds)
      return &s;
  return nullptr;
}

WeightedAutomaton restrict_to_generated_subring(const WeightedAutomaton& a) {
  std::vector<RingElement> weights;
  for (StateId q = 0; q < a.num_states(); ++q) {
    weights.push_back(a.initial(q));
    weights.push_back(a.final_weight(q));
  }
  for (const auto& [t, w] : a.transitions())
    weights.push_back(w);
  const Subring sub = generated_subring(a.ring(), weights);
  WeightedAutomaton out(sub.ring, a.alphabet(), a.num_states());
  for (StateId q = 0; q < a.num_states(); ++q) {
    out.set_initial(q, sub.to_subring(a.initial(q)));
    out.set_final(q, sub.to_subring(a.final_weight(q)));
  }
  for (const auto& [t, w] : a.transitions())
    out.set_transition(t.from, t.symbol, t.to, sub.to_subring(w));
  return out;
}

namespace {

ShiftResult check_shift(const LinearRepresentation& lr, RingElement x) {
  const auto start = std::chrono::steady_clock::now();
  ShiftResult r;
  r.shift = x;
  const Dfa support = support_dfa(lr, x);
  r.support_states = support.num_states();
  const Dfa minimal = minimize(support);
  r.minimal_states = minimal.num_states();
  const TransitionMonoid m(minimal);
  r.monoid_size = m.size();
  r.idempotent_count = idempotents(m).size();
  r.ecom = is_ecom(m);
  r.elapsed = std::chrono::duration_cast<std::chrono::microseconds>(
      std::chrono::steady_clock::now() - start);
  return r;
}

} // namespace

DecisionReport decide_reversible_series(const WeightedAutomaton& input, const DecideOptions& opts) {
  const auto start = std::chrono::steady_clock::now();
  const WeightedAutomaton a = opts.use_generated_subring ? restrict_to_generated_subring(input) : input;
  const LinearRepresentation lr = to_linear_representation(a);
  const auto shifts = a.ring().elements();

  std::vector<ShiftResult> results(shifts.size());
  unsigned threads = opts.threads == 0 ? std::max(1u, std::thread::hardware_concurrency()) : opts.threads;
  threads = static_cast<unsigned>(std::min<std::size_t>(threads, shifts.size()));
  if (threads <= 1) {
    for (std::size_t i = 0; i < shifts.size(); ++i)
      results[i] = check_shift(lr, shifts[i]);
  } else {
    std::atomic<std::size_t> next{0};
    std::vector<std::jthread> pool;
    for (unsigned t = 0; t < threads; ++t)
      pool.emplace_back([&] {
        for (std::size_t i = next++; i < shifts.size(); i = next++)
          results[i] = check_shift(lr, shifts[i]);
      });
  }

  DecisionReport report{true, a.ring(), a.alphabet(), a.num_states(), opts.use_generated_subring,
                        std::move(results), {}};
  report.reversible = std::all_of(report.shifts.begin(), report.shifts.end(),
                                  [](const ShiftResult& s) { return s.ecom.holds; });
  report.elapsed = std::chrono::duration_cast<std::chrono::microseconds>(
      std::chrono::steady_clock::now() - start);
  return report;
}

namespace {

Nfa intersect_all(const Decomposition& dec, const std::vector<std::size_t>& subset) {
  Nfa acc = dec.languages[subset.front()];
  for (std::size_t i = 1; i < subset.size(); ++i)
    acc = intersect_orev(acc, dec.languages[subset[i]]);
  return acc;
}

} // namespace

WeightedAutomaton witness_union_f2(const Decomposition& dec) {
  dec.validate();
  const Ring f2 = Ring::from_spec(RingSpec::zn(2));
  std::vector<WeightedAutomaton> parts;
  for (const auto& subset : nonempty_subsets(dec.languages.size()))
    parts.push_back(lift_to_wa(intersect_all(dec, subset), f2));
  return disjoint_union(parts, f2, dec.alphabet);
}

Dfa parity_support(const Decomposition& dec) {
  dec.validate();
  // supp(sum of char(L_i)) over F_2
  const Ring f2 = Ring::from_spec(RingSpec::zn(2));
  std::vector<WeightedAutomaton> parts;
  for (const auto& l : dec.languages)
    parts.push_back(lift_to_wa(l, f2));
  const auto lr = to_linear_representation(disjoint_union(parts, f2, dec.alphabet));
  return minimize(support_dfa(lr, f2.zero()));
}

WeightedAutomaton witness_char_series_over_ring(const Decomposition& dec, const Dfa& target,
                                                const Ring& r) {
  dec.validate();
  if (!(target.alphabet() == dec.alphabet))
    throw Error("target DFA is over a different alphabet than the decomposition");
  if (auto w = distinguishing_word(parity_support(dec), target))
    throw Error("decomposition does not match the target language (differs on \"" +
                dec.alphabet.format(*w) + "\")");

  const RingElement minus_two = r.neg(r.add(r.one(), r.one()));
  std::vector<WeightedAutomaton> parts;
  for (const auto& subset : nonempty_subsets(dec.languages.size())) {
    RingElement scalar = r.one();
    for (std::size_t i = 1; i < subset.size(); ++i)
      scalar = r.mul(scalar, minus_two);
    parts.push_back(scalar_mul(lift_to_wa(intersect_all(dec, subset), r), scalar));
  }
  return disjoint_union(parts, r, dec.alphabet);
}

Classification classify_language(const Dfa& d) {
  const TransitionMonoid m = syntactic_monoid(d);
  Classification c;
  c.ecom = is_ecom(m);
  c.omega_commute = check_omega_commute(m);
  c.omega_below_one = check_xomega_leq_one(d);
  return c;
}

std::vector<std::pair<RingElement, Dfa>> level_sets(const LinearRepresentation& lr) {
  std::vector<std::pair<RingElement, Dfa>> out;
  for (auto x : lr.ring.elements())
    out.emplace_back(x, minimize(dfa_complement(support_dfa(lr, lr.ring.neg(x)))));
  return out;
}

} // namespace rwa
