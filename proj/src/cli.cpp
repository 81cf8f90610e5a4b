#include "rwa/cli.hpp"

#include <algorithm>
#include <fstream>

#include "CLI11.hpp"

#include "rwa/decide.hpp"
#include "rwa/io.hpp"
#include "rwa/monoid.hpp"

namespace rwa::cli {

namespace {

std::string quoted(const Alphabet& a, const Word& w) { return "\"" + a.format(w) + "\""; }

void write_document(const io::json& doc, const std::string& path, std::ostream& out) {
  if (path.empty()) {
    out << io::dump(doc);
    return;
  }
  std::ofstream file(path);
  if (!file)
    throw Error("cannot write " + path);
  file << io::dump(doc);
}

Word read_word(const Alphabet& alphabet, const std::string& word, const std::string& word_file) {
  if (word_file.empty())
    return alphabet.parse_word(word);
  std::ifstream in(word_file);
  if (!in)
    throw Error("cannot open " + word_file);
  std::vector<std::string> symbols;
  for (std::string line; std::getline(in, line);) {
    if (!line.empty() && line.back() == '\r')
      line.pop_back();
    if (!line.empty())
      symbols.push_back(line);
  }
  return alphabet.word_from_symbols(symbols);
}

int cmd_eval(const std::string& path, const std::string& word, const std::string& word_file,
             std::ostream& out) {
  const auto a = io::parse_automaton(io::read_json_file(path));
  const Word w = read_word(a.alphabet(), word, word_file);
  out << io::format_element(a.ring(), coefficient(a, w)) << "\n";
  return kOk;
}

int cmd_check(const std::string& path, bool assert_flag, std::ostream& out) {
  const auto a = io::parse_automaton(io::read_json_file(path));
  const auto rev = is_reversible(a);
  auto show = [&](const Transition& t) {
    return "(" + std::to_string(t.from) + ", \"" + a.alphabet().name(t.symbol) + "\", " +
           std::to_string(t.to) + ")";
  };
  out << "reversible: " << (rev.reversible ? "yes" : "no") << "\n";
  if (rev.violation)
    out << "violation: " << show(rev.violation->first) << " " << show(rev.violation->second) << "\n";
  out << "bideterministic: " << (is_bideterministic(a) ? "yes" : "no") << "\n";
  out << "one-initial: " << (a.initial_states().size() == 1 ? "yes" : "no") << "\n";
  return assert_flag && !rev.reversible ? kNegative : kOk;
}

int cmd_decide(const std::string& path, bool assert_flag, bool as_json, bool subring, bool timing,
               unsigned threads, std::ostream& out) {
  const auto a = io::parse_automaton(io::read_json_file(path));
  DecideOptions opts;
  opts.use_generated_subring = subring;
  opts.threads = threads;
  const auto report = decide_reversible_series(a, opts);
  if (as_json)
    out << io::dump(io::to_json(report, timing));
  else
    out << io::format_report(report, timing);
  return assert_flag && !report.reversible ? kNegative : kOk;
}

void print_monoid(const Dfa& d, std::ostream& out) {
  const Dfa minimal = minimize(d);
  const TransitionMonoid m(minimal);
  const auto idem = idempotents(m);
  out << "minimal states: " << minimal.num_states() << "\n";
  out << "monoid size: " << m.size() << "\n";
  out << "idempotents: " << idem.size() << " (";
  for (std::size_t i = 0; i < idem.size(); ++i)
    out << (i ? ", " : "") << quoted(m.alphabet(), m.witness(idem[i]));
  out << ")\n";
  const auto ecom = is_ecom(m);
  out << "ecom: " << (ecom.holds ? "yes" : "no");
  if (ecom.witness)
    out << " (e = " << quoted(m.alphabet(), ecom.witness->e_word)
        << ", f = " << quoted(m.alphabet(), ecom.witness->f_word) << ")";
  out << "\n";
}

int cmd_monoid(const std::string& path, std::ostream& out) {
  print_monoid(io::parse_dfa(io::read_json_file(path)), out);
  return kOk;
}

int cmd_classify(const std::string& path, std::ostream& out) {
  const Dfa d = io::parse_dfa(io::read_json_file(path));
  const auto& alphabet = d.alphabet();
  const auto c = classify_language(d);
  out << "ecom: " << (c.ecom.holds ? "yes" : "no");
  if (c.ecom.witness)
    out << " (e = " << quoted(alphabet, c.ecom.witness->e_word)
        << ", f = " << quoted(alphabet, c.ecom.witness->f_word) << ")";
  out << "\n";
  out << "omega-commute: " << (c.omega_commute ? "yes" : "no") << "\n";
  out << "omega-below-one: " << (c.omega_below_one.holds ? "yes" : "no");
  if (const auto& v = c.omega_below_one.violation)
    out << " (x = " << quoted(alphabet, v->element_word) << ", x^omega = "
        << quoted(alphabet, v->omega_word) << ", context " << quoted(alphabet, v->left) << " _ "
        << quoted(alphabet, v->right) << ")";
  out << "\n";
  out << "pin-reversible: " << (c.pin_reversible() ? "yes" : "no") << "\n";
  return kOk;
}

int cmd_witness(const std::string& dec_path, const std::string& ring_path,
                const std::string& target_path, const std::string& out_path,
                std::size_t check_length, std::ostream& out, std::ostream& err) {
  const Decomposition dec = io::parse_decomposition(io::read_json_file(dec_path));
  const Ring ring = Ring::from_spec(io::parse_ring_spec(io::read_json_file(ring_path)));
  const Dfa target = target_path.empty() ? parity_support(dec)
                                         : io::parse_dfa(io::read_json_file(target_path));
  if (!(target.alphabet() == dec.alphabet))
    throw Error("target DFA is over a different alphabet than the decomposition");
  if (auto w = distinguishing_word(parity_support(dec), target))
    throw Error("decomposition does not match the target language (differs on \"" +
                dec.alphabet.format(*w) + "\")");

  const WeightedAutomaton a = witness_char_series_over_ring(dec, target, ring);
  write_document(io::to_json(a), out_path, out);

  // verification summary goes to stdout only when the automaton went to a file
  std::ostream& summary = out_path.empty() ? err : out;
  const auto lr = to_linear_representation(a);
  const bool reversible = is_reversible(a).reversible;
  const bool support_ok = dfa_equivalence(support_dfa(lr, ring.zero()), target);
  std::size_t checked = 0, mismatches = 0;
  for (const auto& w : words_up_to(dec.alphabet.size(), check_length)) {
    ++checked;
    auto expected = target.accepts(w) ? ring.one() : ring.zero();
    if (coefficient(lr, w) != expected)
      ++mismatches;
  }
  summary << "ring: " << ring.name() << "\n";
  summary << "components: " << nonempty_subsets(dec.languages.size()).size() << "\n";
  summary << "states: " << a.num_states() << "\n";
  summary << "reversible: " << (reversible ? "yes" : "no") << "\n";
  summary << "support matches target: " << (support_ok ? "yes" : "no") << "\n";
  summary << "coefficients: " << checked << " words up to length " << check_length << ", "
          << mismatches << " mismatches\n";
  return reversible && support_ok && mismatches == 0 ? kOk : kNegative;
}

int cmd_support(const std::string& path, const std::string& shift, const std::string& out_path,
                std::ostream& out) {
  const auto a = io::parse_automaton(io::read_json_file(path));
  const RingElement x = shift.empty() ? a.ring().zero()
                                      : io::parse_element(a.ring(), io::parse_json_text(shift));
  const Dfa d = minimize(support_dfa(to_linear_representation(a), x));
  write_document(io::to_json(d), out_path, out);
  return kOk;
}

} // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Reversible weighted automata over finite commutative rings"};
  app.name("rwa");
  app.require_subcommand(1);

  std::string automaton, word, word_file, dfa, dec, ring, target, out_path, shift;
  bool assert_flag = false, as_json = false, subring = false, timing = false;
  unsigned threads = 0;
  std::size_t check_length = 6;

  auto* eval = app.add_subcommand("eval", "Coefficient of a word in the realized series");
  eval->add_option("automaton", automaton, "Weighted automaton file")->required();
  eval->add_option("word", word, "Word of single-character symbols (\"\" is the empty word)");
  eval->add_option("--word-file", word_file, "Word given as one symbol per line");

  auto* check = app.add_subcommand("check", "Structural reversibility report");
  check->add_option("automaton", automaton, "Weighted automaton file")->required();
  check->add_flag("--assert", assert_flag, "Exit 1 unless the automaton is reversible");

  auto* decide = app.add_subcommand("decide", "Decide whether the series is reversible");
  decide->add_option("automaton", automaton, "Weighted automaton file")->required();
  decide->add_flag("--assert", assert_flag, "Exit 1 on a negative verdict");
  decide->add_flag("--json", as_json, "Machine-readable report");
  decide->add_flag("--subring", subring, "Enumerate shifts over the subring generated by the weights");
  decide->add_flag("--timing", timing, "Include per-shift timings");
  decide->add_option("--threads", threads, "Worker threads (0 = hardware concurrency)");

  auto* monoid = app.add_subcommand("monoid", "Syntactic monoid summary of a DFA");
  monoid->add_option("dfa", dfa, "Complete DFA file")->required();

  auto* classify = app.add_subcommand("classify", "ECom and Pin-reversibility of a DFA's language");
  classify->add_option("dfa", dfa, "Complete DFA file")->required();

  auto* witness = app.add_subcommand("witness", "Build a reversible automaton from a decomposition");
  witness->add_option("decomposition", dec, "Decomposition file")->required();
  witness->add_option("ring", ring, "Ring file")->required();
  witness->add_option("target", target, "Target DFA (default: parity support of the decomposition)");
  witness->add_option("--out", out_path, "Output automaton file (default: stdout)");
  witness->add_option("--check-length", check_length, "Verify coefficients on words up to this length");

  auto* support = app.add_subcommand("support", "Minimal DFA of supp(||A|| + x Sigma*)");
  support->add_option("automaton", automaton, "Weighted automaton file")->required();
  support->add_option("--shift", shift, "Shift element encoding (default 0)");
  support->add_option("--out", out_path, "Output DFA file (default: stdout)");

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << "rwa: " << e.what() << "\n";
    return kBadInput;
  }

  try {
    if (eval->parsed())
      return cmd_eval(automaton, word, word_file, out);
    if (check->parsed())
      return cmd_check(automaton, assert_flag, out);
    if (decide->parsed())
      return cmd_decide(automaton, assert_flag, as_json, subring, timing, threads, out);
    if (monoid->parsed())
      return cmd_monoid(dfa, out);
    if (classify->parsed())
      return cmd_classify(dfa, out);
    if (witness->parsed())
      return cmd_witness(dec, ring, target, out_path, check_length, out, err);
    if (support->parsed())
      return cmd_support(automaton, shift, out_path, out);
  } catch (const Error& e) {
    err << "rwa: " << e.what() << "\n";
    return kBadInput;
  } catch (const nlohmann::json::exception& e) {
    err << "rwa: " << e.what() << "\n";
    return kBadInput;
  }
  return kBadInput;
}

} // namespace rwa::cli
