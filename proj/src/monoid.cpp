#include "rwa/monoid.hpp"

namespace rwa {

Transformation compose(const Transformation& u, const Transformation& v) {
  Transformation out(u.size());
  for (std::size_t q = 0; q < u.size(); ++q)
    out[q] = v[u[q]];
  return out;
}

std::size_t TransitionMonoid::Hash::operator()(const Transformation& t) const noexcept {
  std::size_t h = t.size();
  for (auto x : t)
    h ^= x + 0x9e3779b97f4a7c15ull + (h << 6) + (h >> 2);
  return h;
}

TransitionMonoid::TransitionMonoid(const Dfa& d)
    : alphabet_(d.alphabet()), states_(d.num_states()) {
  const std::size_t k = alphabet_.size();
  Transformation id(states_);
  for (StateId q = 0; q < states_; ++q)
    id[q] = q;
  elements_.push_back(id);
  witnesses_.push_back({});
  index_.emplace(std::move(id), 0);

  std::vector<Transformation> letters(k, Transformation(states_));
  for (Symbol c = 0; c < k; ++c)
    for (StateId q = 0; q < states_; ++q)
      letters[c][q] = d.next(q, c);

  // right multiplication by generators reaches every element
  for (std::size_t i = 0; i < elements_.size(); ++i)
    for (Symbol c = 0; c < k; ++c) {
      Transformation t = compose(elements_[i], letters[c]);
      if (index_.count(t))
        continue;
      Word w = witnesses_[i];
      w.push_back(c);
      index_.emplace(t, elements_.size());
      elements_.push_back(std::move(t));
      witnesses_.push_back(std::move(w));
    }

  generators_.reserve(k);
  for (Symbol c = 0; c < k; ++c)
    generators_.push_back(index_.at(letters[c]));
}

TransitionMonoid::Element TransitionMonoid::multiply(Element e, Element f) const {
  return index_.at(compose(elements_.at(e), elements_.at(f)));
}

std::optional<TransitionMonoid::Element> TransitionMonoid::find(const Transformation& t) const {
  auto it = index_.find(t);
  if (it == index_.end())
    return std::nullopt;
  return it->second;
}

TransitionMonoid::Element TransitionMonoid::of_word(const Word& w) const {
  Element e = identity();
  for (Symbol c : w) {
    if (c >= alphabet_.size())
      throw Error("word contains a symbol outside the alphabet");
    e = multiply(e, generators_[c]);
  }
  return e;
}

TransitionMonoid transition_monoid(const Dfa& d) { return TransitionMonoid(d); }

TransitionMonoid syntactic_monoid(const Dfa& d) { return TransitionMonoid(minimize(d)); }

std::vector<TransitionMonoid::Element> idempotents(const TransitionMonoid& m) {
  std::vector<TransitionMonoid::Element> out;
  for (TransitionMonoid::Element e = 0; e < m.size(); ++e)
    if (m.multiply(e, e) == e)
      out.push_back(e);
  return out;
}

OmegaPower omega(const TransitionMonoid& m, TransitionMonoid::Element t) {
  if (t >= m.size())
    throw Error("element is not in the monoid");
  OmegaPower out{t, 1, t};
  // the powers of t enter a cycle after at most |m| steps, and the cycle holds one idempotent
  for (std::size_t k = 1; k <= m.size(); ++k) {
    if (m.multiply(out.value, out.value) == out.value) {
      out.exponent = k;
      return out;
    }
    out.value = m.multiply(out.value, t);
  }
  throw Error("omega power not found; monoid is inconsistent");
}

EcomVerdict is_ecom(const TransitionMonoid& m) {
  const auto idem = idempotents(m);
  for (std::size_t i = 0; i < idem.size(); ++i)
    for (std::size_t j = i + 1; j < idem.size(); ++j) {
      auto e = idem[i], f = idem[j];
      if (m.multiply(e, f) != m.multiply(f, e))
        return {false, IdempotentPair{e, f, m.witness(e), m.witness(f)}};
    }
  return {};
}

bool check_omega_commute(const TransitionMonoid& m) {
  std::vector<TransitionMonoid::Element> omegas(m.size());
  for (TransitionMonoid::Element t = 0; t < m.size(); ++t)
    omegas[t] = omega(m, t).value;
  for (TransitionMonoid::Element x = 0; x < m.size(); ++x)
    for (TransitionMonoid::Element y = 0; y < m.size(); ++y)
      if (m.multiply(omegas[x], omegas[y]) != m.multiply(omegas[y], omegas[x]))
        return false;
  return true;
}

OmegaOrderVerdict check_xomega_leq_one(const Dfa& d) {
  const Dfa minimal = minimize(d);
  const TransitionMonoid m(minimal);
  const auto access = access_words(minimal);
  const std::size_t n = minimal.num_states();

  for (TransitionMonoid::Element t = 0; t < m.size(); ++t) {
    const auto e = omega(m, t).value;
    const auto& te = m.transformation(e);
    for (StateId q = 0; q < n; ++q)
      for (TransitionMonoid::Element s = 0; s < m.size(); ++s) {
        const auto& ts = m.transformation(s);
        if (minimal.is_final(ts[te[q]]) && !minimal.is_final(ts[q]))
          return {false, OrderViolation{m.witness(t), m.witness(e), *access[q], m.witness(s)}};
      }
  }
  return {};
}

} // namespace rwa
