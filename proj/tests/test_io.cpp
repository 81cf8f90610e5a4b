#include "doctest.h"

#include <filesystem>

#include "rwa/io.hpp"
#include "support/oracles.hpp"

using namespace rwa;
using namespace rwa::testing;
namespace fs = std::filesystem;
using rwa::io::json;

namespace {

fs::path fixture(const std::string& name) { return fs::path(RWA_FIXTURE_DIR) / name; }

template <class Parse>
void check_round_trip(const std::string& name, Parse parse) {
  INFO(name);
  const auto first = io::dump(io::to_json(parse(io::read_json_file(fixture(name)))));
  const auto second = io::dump(io::to_json(parse(io::parse_json_text(first))));
  CHECK(first == second);
}

} // namespace

TEST_CASE("fixture corpus round-trips") {
  for (auto name : {"z2.ring", "z6.ring", "gf4.ring", "z2xz3.ring"})
    check_round_trip(name, io::parse_ring_spec);
  for (auto name : {"char_aplus_z2.wa", "cycle_two_initial.wa", "empty.wa", "aplus_sum_z2.wa",
                    "lift_sigmastar_ab_f2.wa", "loop_bidet.wa", "two_successors.wa", "zero.wa"})
    check_round_trip(name, io::parse_automaton);
  for (auto name : {"aa_star.dfa", "aplus.dfa", "sigma_star.dfa", "sigmastar_ab.dfa"}) {
    check_round_trip(name, io::parse_dfa);
    check_round_trip(name, io::parse_nfa);
  }
  for (auto name : {"dec_aa_star.json", "dec_eps_sigmastar.json"})
    check_round_trip(name, io::parse_decomposition);
}

TEST_CASE("parsed objects survive a round trip unchanged") {
  Rng rng(131);
  for (const auto& r : {zn(6), gf4(), z2xz3(), Ring::from_spec(to_table_spec(zn(4)))}) {
    CHECK(Ring::from_spec(io::parse_ring_spec(io::to_json(r.spec()))) == r);
    for (int i = 0; i < 5; ++i) {
      auto a = random_wa(rng, r, alphabet_of(2), 3);
      auto b = io::parse_automaton(io::to_json(a));
      CHECK(b.num_states() == a.num_states());
      CHECK(b.transitions() == a.transitions());
      for (StateId q = 0; q < a.num_states(); ++q) {
        CHECK(b.initial(q) == a.initial(q));
        CHECK(b.final_weight(q) == a.final_weight(q));
      }
    }
  }
  for (int i = 0; i < 10; ++i) {
    Dfa d = random_dfa(rng, 1 + rng() % 4, 2);
    CHECK(io::parse_dfa(io::to_json(d)) == d);
    Nfa n = random_orev_nfa(rng, alphabet_of(2), 4);
    CHECK(io::parse_nfa(io::to_json(n)) == n);
  }
}

TEST_CASE("element encodings are canonical") {
  for (const auto& r : {zn(6), gf4(), z2xz3(), z2xz2()}) {
    std::set<std::string> seen;
    for (auto e : r.elements()) {
      auto text = io::format_element(r, e);
      CHECK(seen.insert(text).second);
      CHECK(io::parse_element(r, io::parse_json_text(text)) == e);
    }
  }
  CHECK(io::format_element(gf4(), gf4().element(2)) == "[0,1]");
  CHECK(io::format_element(z2xz3(), z2xz3().one()) == "[1,1]");
  CHECK_THROWS_AS(io::parse_element(zn(6), json(6)), Error);
  CHECK_THROWS_AS(io::parse_element(gf4(), json::parse("[1]")), Error);
  CHECK_THROWS_AS(io::parse_element(gf4(), json::parse("[2,0]")), Error);
  CHECK_THROWS_AS(io::parse_element(zn(6), json(-1)), Error);
}

TEST_CASE("malformed documents are rejected") {
  auto bad = [](const char* text, auto parse) {
    INFO(text);
    CHECK_THROWS_AS(parse(io::parse_json_text(text)), Error);
  };
  bad(R"({"kind":"zn","n":6,"extra":1})", io::parse_ring_spec);
  bad(R"({"kind":"zz","n":6})", io::parse_ring_spec);
  bad(R"({"kind":"zn"})", io::parse_ring_spec);
  bad(R"({"ring":{"kind":"zn","n":2},"alphabet":["a"],"states":1,"weights":{}})", io::parse_automaton);
  bad(R"({"ring":{"kind":"zn","n":2},"alphabet":["a"],"states":1,"initial":{"1":1}})", io::parse_automaton);
  bad(R"({"ring":{"kind":"zn","n":2},"alphabet":["a"],"states":1,"initial":{"x":1}})", io::parse_automaton);
  bad(R"({"ring":{"kind":"zn","n":2},"alphabet":["a"],"states":1,"transitions":[[0,"b",0,1]]})",
      io::parse_automaton);
  bad(R"({"ring":{"kind":"zn","n":2},"alphabet":["a"],"states":1,"transitions":[[0,"a",0,1],[0,"a",0,1]]})",
      io::parse_automaton);
  bad(R"({"ring":{"kind":"zn","n":2},"alphabet":[],"states":1})", io::parse_automaton);
  bad(R"({"ring":{"kind":"zn","n":2},"alphabet":["a","a"],"states":1})", io::parse_automaton);
  bad(R"({"alphabet":["a"],"states":1,"initial":[0],"final":[],"transitions":[],"accepting":[]})",
      io::parse_nfa);
  bad(R"({"alphabet":["a"],"states":1,"initial":[0],"final":[],"transitions":[[0,"a",0]]})", io::parse_dfa);
  bad(R"({"alphabet":["a"],"complete":true,"states":2,"initial":[0,1],"final":[],
          "transitions":[[0,"a",0],[1,"a",1]]})", io::parse_dfa);
  bad(R"({"alphabet":["a"],"complete":true,"states":1,"initial":[0],"final":[],
          "transitions":[[0,"a",0],[0,"a",0]]})", io::parse_dfa);
  bad(R"({"alphabet":["a"],"languages":[],"n":0})", io::parse_decomposition);
  CHECK_THROWS_AS(io::parse_json_text("{"), Error);
  CHECK_THROWS_AS(io::read_json_file(fixture("missing.json")), Error);
  CHECK_THROWS_AS(io::parse_dfa(io::read_json_file(fixture("incomplete.dfa"))), Error);
  CHECK_THROWS_AS(io::parse_decomposition(io::read_json_file(fixture("dec_invalid.json"))), Error);
}

TEST_CASE("decision report serialization") {
  auto a = io::parse_automaton(io::read_json_file(fixture("lift_sigmastar_ab_f2.wa")));
  auto rep = decide_reversible_series(a);
  auto j = io::to_json(rep);
  CHECK(j["verdict"] == "not-reversible");
  CHECK(j["shifts"].size() == 2);
  CHECK(j["shifts"][0]["witness"]["e"] == "a");
  CHECK(j["shifts"][0]["witness"]["f"] == "b");
  CHECK_FALSE(j["shifts"][0].contains("elapsed_us"));
  CHECK(io::to_json(rep, true)["shifts"][0].contains("elapsed_us"));
  CHECK(io::dump(j) == io::dump(io::to_json(decide_reversible_series(a))));
  auto text = io::format_report(rep);
  CHECK(text.find("not-reversible") != std::string::npos);
}
