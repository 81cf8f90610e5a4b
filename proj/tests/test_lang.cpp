#include "doctest.h"

#include "support/oracles.hpp"

using namespace rwa;
using namespace rwa::testing;

namespace {

Nfa cycle_nfa(std::size_t n, bool all_initial = false) {
  Nfa a(alphabet_of(1), n);
  a.set_initial(0);
  if (all_initial)
    for (StateId q = 0; q < n; ++q)
      a.set_initial(q);
  a.set_final(0);
  for (StateId q = 0; q < n; ++q)
    a.add_transition(q, 0, static_cast<StateId>((q + 1) % n));
  return a;
}

Nfa sigma_star_nfa(std::size_t letters) {
  Nfa a(alphabet_of(letters), 1);
  a.set_initial(0);
  a.set_final(0);
  for (Symbol c = 0; c < letters; ++c)
    a.add_transition(0, c, 0);
  return a;
}

Nfa epsilon_nfa(std::size_t letters) {
  Nfa a(alphabet_of(letters), 1);
  a.set_initial(0);
  a.set_final(0);
  return a;
}

bool same_language_upto(const Dfa& d, auto member, std::size_t letters, std::size_t len) {
  for (const auto& w : all_words(letters, len))
    if (dfa_member(d, w) != member(w))
      return false;
  return true;
}

Dfa random_nfa_dfa(Rng& rng, std::size_t max_states, std::size_t letters) {
  return random_dfa(rng, 1 + rng() % max_states, letters);
}

} // namespace

TEST_CASE("nfa_reversibility") {
  CHECK(nfa_reversibility(sigma_star_nfa(2)).reversible);
  CHECK(nfa_reversibility(sigma_star_nfa(2)).one_initial);
  Nfa two(alphabet_of(1), 3);
  two.set_initial(0);
  two.add_transition(0, 0, 1);
  two.add_transition(0, 0, 2);
  CHECK_FALSE(nfa_reversibility(two).reversible);
  auto both = nfa_reversibility(cycle_nfa(2, true));
  CHECK(both.reversible);
  CHECK_FALSE(both.one_initial);
}

TEST_CASE("lift_to_wa") {
  SUBCASE("(aa)* over Z_6") {
    Ring z6 = zn(6);
    auto a = lift_to_wa(cycle_nfa(2), z6);
    for (const auto& w : all_words(1, 6))
      CHECK(coefficient(a, w) == (w.size() % 2 == 0 ? z6.one() : z6.zero()));
  }
  SUBCASE("Sigma* over GF(4)") {
    Ring f4 = gf4();
    auto a = lift_to_wa(sigma_star_nfa(2), f4);
    for (const auto& w : all_words(2, 4))
      CHECK(coefficient(a, w) == f4.one());
  }
  SUBCASE("ambiguous input over Z_2") {
    Nfa n(alphabet_of(1), 3);
    n.set_initial(0);
    n.add_transition(0, 0, 1);
    n.add_transition(0, 0, 2);
    n.set_final(1);
    n.set_final(2);
    CHECK(nfa_member(n, {0}));
    CHECK(coefficient(lift_to_wa(n, zn(2)), {0}) == zn(2).zero());
  }
  SUBCASE("complete DFA: support at 0 is the language") {
    Rng rng(41);
    for (int i = 0; i < 30; ++i) {
      Dfa d = random_nfa_dfa(rng, 4, 2);
      for (const auto& r : {zn(2), zn(6), gf4()}) {
        auto s = support_dfa(to_linear_representation(lift_to_wa(d.to_nfa(), r)), r.zero());
        CHECK(dfa_equivalence(s, d));
      }
    }
  }
}

TEST_CASE("intersect_orev") {
  SUBCASE("a* with (aa)*") {
    auto i = intersect_orev(cycle_nfa(1), cycle_nfa(2));
    CHECK(dfa_equivalence(determinize(i), determinize(cycle_nfa(2))));
  }
  SUBCASE("L with L") {
    auto l = cycle_nfa(3);
    CHECK(dfa_equivalence(determinize(intersect_orev(l, l)), determinize(l)));
  }
  SUBCASE("{eps} with Sigma*") {
    auto i = intersect_orev(epsilon_nfa(2), sigma_star_nfa(2));
    CHECK(dfa_equivalence(determinize(i), determinize(epsilon_nfa(2))));
  }
  SUBCASE("precondition") {
    CHECK_THROWS_AS(intersect_orev(cycle_nfa(2, true), cycle_nfa(2)), Error);
    Nfa two(alphabet_of(1), 3);
    two.set_initial(0);
    two.add_transition(0, 0, 1);
    two.add_transition(0, 0, 2);
    CHECK_THROWS_AS(intersect_orev(two, cycle_nfa(2)), Error);
    CHECK_THROWS_AS(intersect_orev(sigma_star_nfa(2), cycle_nfa(2)), Error);
  }
  SUBCASE("random pairs") {
    Rng rng(43);
    for (int i = 0; i < 50; ++i) {
      auto a = random_orev_nfa(rng, alphabet_of(2), 4);
      auto b = random_orev_nfa(rng, alphabet_of(2), 4);
      auto c = intersect_orev(a, b);
      auto rev = nfa_reversibility(c);
      CHECK(rev.reversible);
      CHECK(rev.one_initial);
      for (const auto& w : all_words(2, 6))
        REQUIRE(nfa_member(c, w) == (nfa_member(a, w) && nfa_member(b, w)));
    }
  }
}

TEST_CASE("support_dfa") {
  Ring z2 = zn(2);
  WeightedAutomaton zero(z2, alphabet_of(2), 1);
  auto lr = to_linear_representation(zero);
  auto s0 = minimize(support_dfa(lr, z2.zero()));
  auto s1 = minimize(support_dfa(lr, z2.one()));
  CHECK(s0.num_states() == 1);
  CHECK_FALSE(s0.is_final(0));
  CHECK(s1.num_states() == 1);
  CHECK(s1.is_final(0));

  SUBCASE("matches coefficients on random automata") {
    Rng rng(47);
    for (const auto& r : {zn(2), zn(6), gf4(), z2xz3()})
      for (int i = 0; i < 15; ++i) {
        auto a = random_wa(rng, r, alphabet_of(2), 3);
        auto l = to_linear_representation(a);
        auto x = random_element(rng, r);
        auto d = support_dfa(l, x);
        for (const auto& w : all_words(2, 6))
          REQUIRE(dfa_member(d, w) == !r.is_zero(r.add(coefficient_by_runs(a, w), x)));
      }
  }
}

TEST_CASE("determinize") {
  SUBCASE("complete deterministic input") {
    Dfa d = sigma_ab_sigma_dfa();
    auto e = determinize(d.to_nfa());
    CHECK(e.num_states() == d.num_states());
    CHECK(minimize(e) == minimize(d));
  }
  SUBCASE("no initial states") {
    Nfa a(alphabet_of(2), 2);
    a.set_final(0);
    auto d = determinize(a);
    CHECK(same_language_upto(d, [](const Word&) { return false; }, 2, 4));
  }
  SUBCASE("a* u bb* with two initial states") {
    Nfa a(alphabet_of(2), 3);
    a.set_initial(0);
    a.set_initial(1);
    a.set_final(0);
    a.set_final(2);
    a.add_transition(0, 0, 0);
    a.add_transition(1, 1, 2);
    a.add_transition(2, 1, 2);
    // bb* has no reversible automaton; the b-loop on 2 has two b-predecessors
    CHECK_FALSE(nfa_reversibility(a).reversible);
    auto d = determinize(a);
    auto member = [](const Word& w) {
      bool all_a = std::all_of(w.begin(), w.end(), [](Symbol c) { return c == 0; });
      bool bb = !w.empty() && std::all_of(w.begin(), w.end(), [](Symbol c) { return c == 1; });
      return all_a || bb;
    };
    CHECK(same_language_upto(d, member, 2, 5));
  }
  SUBCASE("random nfas") {
    Rng rng(53);
    for (int i = 0; i < 40; ++i) {
      Nfa a(alphabet_of(2), 1 + rng() % 4);
      for (StateId q = 0; q < a.num_states(); ++q) {
        if (rng() % 3 == 0)
          a.set_initial(q);
        if (rng() % 2 == 0)
          a.set_final(q);
        for (Symbol c = 0; c < 2; ++c)
          for (StateId p = 0; p < a.num_states(); ++p)
            if (rng() % 3 == 0)
              a.add_transition(q, c, p);
      }
      auto d = determinize(a);
      CHECK(same_language_upto(d, [&](const Word& w) { return nfa_member(a, w); }, 2, 6));
    }
  }
}

TEST_CASE("minimize") {
  CHECK(minimize(aplus_dfa()).num_states() == 2);
  Dfa empty = make_dfa(2, 3, 0, {1, 2, 0, 0, 2, 1}, {false, false, false});
  auto m = minimize(empty);
  CHECK(m.num_states() == 1);
  CHECK_FALSE(m.is_final(0));
  Dfa all = make_dfa(2, 2, 0, {1, 1, 0, 0}, {true, true});
  auto n = minimize(all);
  CHECK(n.num_states() == 1);
  CHECK(n.is_final(0));

  SUBCASE("idempotent, language-preserving, canonical") {
    Rng rng(59);
    for (int i = 0; i < 60; ++i) {
      Dfa d = random_nfa_dfa(rng, 5, 2);
      auto m1 = minimize(d);
      CHECK(minimize(m1) == m1);
      CHECK(same_language_upto(m1, [&](const Word& w) { return dfa_member(d, w); }, 2, 6));
      // a redundant copy of the same language minimizes to the same DFA
      auto doubled = dfa_boolean(d, make_dfa(2, 1, 0, {0, 0}, {true}), BoolOp::intersection);
      CHECK(minimize(doubled) == m1);
      // Myhill-Nerode: distinct states of the minimal DFA are distinguishable
      for (StateId p = 0; p < m1.num_states(); ++p)
        for (StateId q = p + 1; q < m1.num_states(); ++q) {
          bool separated = false;
          for (const auto& w : all_words(2, m1.num_states()))
            separated |= m1.is_final(dfa_run(m1, p, w)) != m1.is_final(dfa_run(m1, q, w));
          CHECK(separated);
        }
    }
  }
}

TEST_CASE("boolean operations") {
  Rng rng(61);
  Dfa ap = aplus_dfa();
  auto c = dfa_complement(ap);
  CHECK(same_language_upto(c, [](const Word& w) { return w.empty(); }, 1, 6));
  CHECK(minimize(dfa_boolean(ap, ap, BoolOp::symdiff)).num_states() == 1);
  CHECK_FALSE(minimize(dfa_boolean(ap, ap, BoolOp::symdiff)).is_final(0));
  CHECK_THROWS_AS(dfa_boolean(ap, sigma_ab_sigma_dfa(), BoolOp::union_), Error);

  for (int i = 0; i < 40; ++i) {
    Dfa a = random_nfa_dfa(rng, 3, 2), b = random_nfa_dfa(rng, 3, 2);
    auto lhs = dfa_boolean(dfa_boolean(a, b, BoolOp::union_),
                           dfa_complement(dfa_boolean(a, b, BoolOp::intersection)),
                           BoolOp::intersection);
    CHECK(dfa_equivalence(lhs, dfa_boolean(a, b, BoolOp::symdiff)));
    for (const auto& w : all_words(2, 6)) {
      bool x = dfa_member(a, w), y = dfa_member(b, w);
      REQUIRE(dfa_member(dfa_boolean(a, b, BoolOp::union_), w) == (x || y));
      REQUIRE(dfa_member(dfa_boolean(a, b, BoolOp::intersection), w) == (x && y));
      REQUIRE(dfa_member(dfa_boolean(a, b, BoolOp::difference), w) == (x && !y));
      REQUIRE(dfa_member(dfa_boolean(a, b, BoolOp::symdiff), w) == (x != y));
      REQUIRE(dfa_member(dfa_complement(a), w) == !x);
    }
  }
}

TEST_CASE("dfa_equivalence and distinguishing_word") {
  Dfa ap = aplus_dfa();
  CHECK(dfa_equivalence(ap, ap));
  Dfa empty = make_dfa(1, 1, 0, {0}, {false});
  Dfa eps = make_dfa(1, 2, 0, {1, 1}, {true, false});
  CHECK_FALSE(dfa_equivalence(empty, eps));
  CHECK(distinguishing_word(empty, eps) == Word{});
  Dfa aa4 = make_dfa(1, 4, 0, {1, 2, 3, 0}, {true, false, true, false});
  CHECK(dfa_equivalence(aa_star_dfa(), aa4));
  CHECK(distinguishing_word(aa_star_dfa(), ap) == Word{});
  CHECK(distinguishing_word(aa_star_dfa(), make_dfa(1, 1, 0, {0}, {true})) == Word{0});
}

TEST_CASE("Dfa validation and access words") {
  CHECK_THROWS_AS(make_dfa(1, 2, 0, {1}, {false, true}), Error);
  CHECK_THROWS_AS(make_dfa(1, 2, 2, {1, 1}, {false, true}), Error);
  CHECK_THROWS_AS(make_dfa(1, 2, 0, {1, 2}, {false, true}), Error);
  auto acc = access_words(sigma_ab_sigma_dfa());
  REQUIRE(acc.size() == 3);
  CHECK(acc[0] == Word{});
  CHECK(acc[1] == Word{0});
  CHECK(acc[2] == Word{0, 1});
  Dfa unreachable = make_dfa(1, 2, 0, {0, 1}, {false, true});
  CHECK_FALSE(access_words(unreachable)[1].has_value());
  CHECK(trim_unreachable(unreachable).num_states() == 1);
}
