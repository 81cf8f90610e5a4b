#include "doctest.h"

#include <filesystem>
#include <fstream>
#include <sstream>

#include "rwa/cli.hpp"
#include "rwa/io.hpp"
#include "support/oracles.hpp"

using namespace rwa;
namespace fs = std::filesystem;

namespace {

std::string fixture(const std::string& name) { return (fs::path(RWA_FIXTURE_DIR) / name).string(); }

struct Result {
  int code;
  std::string out;
  std::string err;
};

Result run(std::vector<std::string> args) {
  std::ostringstream out, err;
  int code = cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

bool has(const std::string& text, const std::string& needle) {
  return text.find(needle) != std::string::npos;
}

fs::path temp_file(const std::string& name) {
  auto dir = fs::temp_directory_path() / "rwa_cli_tests";
  fs::create_directories(dir);
  return dir / name;
}

} // namespace

TEST_CASE("eval") {
  auto r = run({"eval", fixture("aplus_sum_z2.wa"), "aaa"});
  CHECK(r.code == 0);
  CHECK(r.out == "1\n");
  CHECK(run({"eval", fixture("aplus_sum_z2.wa"), ""}).out == "0\n");
  CHECK(run({"eval", fixture("aplus_sum_z2.wa")}).out == "0\n");
  CHECK(run({"eval", fixture("zero.wa"), "a"}).out == "0\n");
  // 1 * x * (x+1) * x = x in GF(4)
  CHECK(run({"eval", fixture("loop_bidet.wa"), "ab"}).out == "[0,1]\n");
  auto bad = run({"eval", fixture("aplus_sum_z2.wa"), "ab"});
  CHECK(bad.code == 2);
  CHECK(has(bad.err, "unknown symbol"));
  CHECK(run({"eval", fixture("nope.wa"), "a"}).code == 2);

  auto words = temp_file("word.txt");
  std::ofstream(words) << "a\na\n";
  CHECK(run({"eval", fixture("aplus_sum_z2.wa"), "--word-file", words.string()}).out == "1\n");
}

TEST_CASE("check") {
  auto ok = run({"check", fixture("aplus_sum_z2.wa")});
  CHECK(ok.code == 0);
  CHECK(has(ok.out, "reversible: yes"));
  // the 2-state DFA of a^+ has two a-predecessors of its final state
  CHECK(has(run({"check", fixture("char_aplus_z2.wa")}).out, "reversible: no"));
  auto no = run({"check", fixture("two_successors.wa")});
  CHECK(no.code == 0);
  CHECK(has(no.out, "reversible: no"));
  CHECK(has(no.out, "violation: (0, \"a\", 1) (0, \"a\", 2)"));
  CHECK(run({"check", "--assert", fixture("two_successors.wa")}).code == 1);
  auto bidet = run({"check", fixture("loop_bidet.wa")});
  CHECK(has(bidet.out, "reversible: yes"));
  CHECK(has(bidet.out, "bideterministic: yes"));
  auto cyc = run({"check", fixture("cycle_two_initial.wa")});
  CHECK(has(cyc.out, "reversible: yes"));
  CHECK(has(cyc.out, "one-initial: no"));
}

TEST_CASE("decide") {
  auto pos = run({"decide", "--assert", fixture("char_aplus_z2.wa")});
  CHECK(pos.code == 0);
  CHECK(has(pos.out, "verdict: reversible"));
  auto neg = run({"decide", fixture("lift_sigmastar_ab_f2.wa")});
  CHECK(neg.code == 0);
  CHECK(has(neg.out, "verdict: not-reversible"));
  CHECK(has(neg.out, "e = \"a\", f = \"b\""));
  CHECK(run({"decide", "--assert", fixture("lift_sigmastar_ab_f2.wa")}).code == 1);
  CHECK(has(run({"decide", fixture("empty.wa")}).out, "verdict: reversible"));

  auto j1 = run({"decide", "--json", "--threads", "1", fixture("lift_sigmastar_ab_f2.wa")});
  auto j2 = run({"decide", "--json", "--threads", "3", fixture("lift_sigmastar_ab_f2.wa")});
  CHECK(j1.out == j2.out);
  auto doc = io::parse_json_text(j1.out);
  CHECK(doc["verdict"] == "not-reversible");
  CHECK(doc["failing_shift"] == 0);

  auto sub = io::parse_json_text(run({"decide", "--json", "--subring", fixture("loop_bidet.wa")}).out);
  CHECK(sub["subring"] == true);
  auto timed = run({"decide", "--timing", fixture("char_aplus_z2.wa")});
  CHECK(has(timed.out, " us"));
}

TEST_CASE("monoid and classify") {
  auto ap = run({"monoid", fixture("aplus.dfa")});
  CHECK(ap.code == 0);
  CHECK(has(ap.out, "monoid size: 2"));
  CHECK(has(ap.out, "ecom: yes"));
  CHECK(has(run({"monoid", fixture("sigma_star.dfa")}).out, "monoid size: 1"));
  auto ab = run({"monoid", fixture("sigmastar_ab.dfa")});
  CHECK(has(ab.out, "monoid size: 5"));
  CHECK(has(ab.out, "ecom: no (e = \"a\", f = \"b\")"));
  CHECK(run({"monoid", fixture("incomplete.dfa")}).code == 2);

  auto c = run({"classify", fixture("aplus.dfa")});
  CHECK(has(c.out, "ecom: yes"));
  CHECK(has(c.out, "pin-reversible: no"));
  CHECK(has(run({"classify", fixture("aa_star.dfa")}).out, "pin-reversible: yes"));
  CHECK(run({"classify", fixture("incomplete.dfa")}).code == 2);
}

TEST_CASE("witness") {
  auto out = temp_file("witness_z6.wa");
  auto r = run({"witness", fixture("dec_eps_sigmastar.json"), fixture("z6.ring"), "--out", out.string()});
  CHECK(r.code == 0);
  CHECK(has(r.out, "reversible: yes"));
  CHECK(has(r.out, "support matches target: yes"));
  CHECK(has(r.out, "0 mismatches"));
  CHECK(run({"eval", out.string(), "a"}).out == "1\n");
  CHECK(run({"eval", out.string(), ""}).out == "0\n");

  auto stdout_doc = run({"witness", fixture("dec_eps_sigmastar.json"), fixture("z2.ring"), fixture("aplus.dfa")});
  CHECK(stdout_doc.code == 0);
  CHECK(has(stdout_doc.err, "support matches target: yes"));
  auto a = io::parse_automaton(io::parse_json_text(stdout_doc.out));
  CHECK(is_reversible(a).reversible);

  auto single = run({"witness", fixture("dec_aa_star.json"), fixture("gf4.ring"), fixture("aa_star.dfa")});
  CHECK(single.code == 0);
  auto lift = io::parse_automaton(io::parse_json_text(single.out));
  CHECK(lift.num_states() == 2);

  CHECK(run({"witness", fixture("dec_invalid.json"), fixture("z6.ring")}).code == 2);
  auto mismatch = run({"witness", fixture("dec_eps_sigmastar.json"), fixture("z6.ring"), fixture("aa_star.dfa")});
  CHECK(mismatch.code == 2);
  CHECK(has(mismatch.err, "does not match"));
}

TEST_CASE("support") {
  auto r = run({"support", fixture("aplus_sum_z2.wa")});
  CHECK(r.code == 0);
  auto d = io::parse_dfa(io::parse_json_text(r.out));
  CHECK(d.num_states() == 2);
  CHECK(dfa_equivalence(d, testing::aplus_dfa()));

  auto all = io::parse_dfa(io::parse_json_text(run({"support", fixture("zero.wa"), "--shift", "1"}).out));
  CHECK(all.num_states() == 1);
  CHECK(all.is_final(0));
  auto none = io::parse_dfa(io::parse_json_text(run({"support", fixture("zero.wa")}).out));
  CHECK(none.num_states() == 1);
  CHECK_FALSE(none.is_final(0));
  CHECK(run({"support", fixture("zero.wa"), "--shift", "[1]"}).code == 2);
  CHECK(run({"support", fixture("zero.wa"), "--shift", "2"}).code == 2);
}

TEST_CASE("usage errors") {
  CHECK(run({}).code == 2);
  CHECK(run({"frobnicate"}).code == 2);
  CHECK(run({"eval"}).code == 2);
  CHECK(run({"--help"}).code == 0);
}

TEST_CASE("outputs are deterministic") {
  for (std::vector<std::string> args :
       {std::vector<std::string>{"decide", fixture("lift_sigmastar_ab_f2.wa")},
        std::vector<std::string>{"monoid", fixture("sigmastar_ab.dfa")},
        std::vector<std::string>{"classify", fixture("aplus.dfa")},
        std::vector<std::string>{"support", fixture("aplus_sum_z2.wa")}}) {
    CHECK(run(args).out == run(args).out);
  }
}
