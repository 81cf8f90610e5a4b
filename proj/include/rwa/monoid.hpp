#ifndef RWA_MONOID_HPP
#define RWA_MONOID_HPP

#include <optional>
#include <unordered_map>
#include <vector>

#include "rwa/lang.hpp"

namespace rwa {

/// Total map on DFA states; the action of some word.
using Transformation = std::vector<StateId>;

/// Action of u followed by v.
Transformation compose(const Transformation& u, const Transformation& v);

/// The transformations induced by words on a complete DFA.
///
/// Element 0 is the identity (action of the empty word). Elements are found by
/// breadth-first search over the sorted alphabet, so each element's witness is
/// a length-lexicographically least word acting as it.
class TransitionMonoid {
public:
  using Element = std::size_t;

  explicit TransitionMonoid(const Dfa& d);

  std::size_t size() const noexcept { return elements_.size(); }
  Element identity() const noexcept { return 0; }
  const Transformation& transformation(Element e) const { return elements_.at(e); }
  const Word& witness(Element e) const { return witnesses_.at(e); }
  Element generator(Symbol c) const { return generators_.at(c); }
  const Alphabet& alphabet() const noexcept { return alphabet_; }
  std::size_t num_states() const noexcept { return states_; }

  /// e * f, i.e. the action of e's word followed by f's.
  Element multiply(Element e, Element f) const;
  std::optional<Element> find(const Transformation& t) const;
  Element of_word(const Word& w) const;

private:
  struct Hash {
    std::size_t operator()(const Transformation& t) const noexcept;
  };

  Alphabet alphabet_;
  std::size_t states_ = 0;
  std::vector<Transformation> elements_;
  std::vector<Word> witnesses_;
  std::vector<Element> generators_;
  std::unordered_map<Transformation, Element, Hash> index_;
};

TransitionMonoid transition_monoid(const Dfa& d);

/// Transition monoid of the minimal DFA.
TransitionMonoid syntactic_monoid(const Dfa& d);

std::vector<TransitionMonoid::Element> idempotents(const TransitionMonoid& m);

struct OmegaPower {
  TransitionMonoid::Element base = 0;
  std::size_t exponent = 1; // smallest k >= 1 with base^k idempotent
  TransitionMonoid::Element value = 0;
};

OmegaPower omega(const TransitionMonoid& m, TransitionMonoid::Element t);

struct IdempotentPair {
  TransitionMonoid::Element e = 0;
  TransitionMonoid::Element f = 0;
  Word e_word;
  Word f_word;
};

struct EcomVerdict {
  bool holds = true;
  /// A pair of idempotents with ef != fe.
  std::optional<IdempotentPair> witness;

  explicit operator bool() const noexcept { return holds; }
};

EcomVerdict is_ecom(const TransitionMonoid& m);

/// Whether x^w y^w = y^w x^w for all x, y.
bool check_omega_commute(const TransitionMonoid& m);

struct OrderViolation {
  /// The monoid element t with t^w not below 1, and a context (x, y) with
  /// x t^w y accepted but x y rejected.
  Word element_word;
  Word omega_word;
  Word left;
  Word right;
};

struct OmegaOrderVerdict {
  bool holds = true;
  std::optional<OrderViolation> violation;

  explicit operator bool() const noexcept { return holds; }
};

/// Whether t^w <= 1 in the syntactic order of L(d) for every t, where
/// u <= v iff every context accepting u also accepts v.
OmegaOrderVerdict check_xomega_leq_one(const Dfa& d);

} // namespace rwa

#endif // RWA_MONOID_HPP
