#include "rwa/io.hpp"

#include <algorithm>
#include <fstream>
#include <set>
#include <sstream>

namespace rwa::io {

namespace {

void expect_keys(const json& j, const char* what, std::initializer_list<const char*> required,
                 std::initializer_list<const char*> optional = {}) {
  if (!j.is_object())
    throw Error(std::string(what) + ": expected a JSON object");
  for (const char* k : required)
    if (!j.contains(k))
      throw Error(std::string(what) + ": missing field \"" + k + "\"");
  for (const auto& [key, value] : j.items()) {
    bool known = std::any_of(required.begin(), required.end(), [&](const char* k) { return key == k; }) ||
                 std::any_of(optional.begin(), optional.end(), [&](const char* k) { return key == k; });
    if (!known)
      throw Error(std::string(what) + ": unknown field \"" + key + "\"");
  }
}

std::uint64_t as_uint(const json& j, const std::string& what) {
  if (!j.is_number_unsigned() && !(j.is_number_integer() && j.get<std::int64_t>() >= 0))
    throw Error(what + ": expected a nonnegative integer");
  return j.get<std::uint64_t>();
}

std::uint32_t as_u32(const json& j, const std::string& what) {
  auto v = as_uint(j, what);
  if (v > 0xffffffffull)
    throw Error(what + ": integer too large");
  return static_cast<std::uint32_t>(v);
}

const json& as_array(const json& j, const std::string& what) {
  if (!j.is_array())
    throw Error(what + ": expected an array");
  return j;
}

std::vector<std::uint32_t> as_u32_vector(const json& j, const std::string& what) {
  std::vector<std::uint32_t> out;
  for (const auto& v : as_array(j, what))
    out.push_back(as_u32(v, what));
  return out;
}

Alphabet parse_alphabet(const json& j) {
  std::vector<std::string> symbols;
  for (const auto& s : as_array(j, "alphabet")) {
    if (!s.is_string())
      throw Error("alphabet: symbols must be strings");
    symbols.push_back(s.get<std::string>());
  }
  return Alphabet(std::move(symbols));
}

StateId parse_state(const json& j, std::size_t states, const std::string& what) {
  auto q = as_u32(j, what);
  if (q >= states)
    throw Error(what + ": state " + std::to_string(q) + " out of range");
  return q;
}

StateId parse_state_key(const std::string& key, std::size_t states, const std::string& what) {
  if (key.empty() || key.size() > 9 || !std::all_of(key.begin(), key.end(), ::isdigit))
    throw Error(what + ": state keys must be decimal integers, got \"" + key + "\"");
  auto q = static_cast<StateId>(std::stoul(key));
  if (q >= states)
    throw Error(what + ": state " + key + " out of range");
  return q;
}

std::size_t parse_state_count(const json& j) {
  auto n = as_uint(j, "states");
  if (n > (1u << 24))
    throw Error("states: too many states");
  return static_cast<std::size_t>(n);
}

Symbol parse_symbol(const json& j, const Alphabet& alphabet, const std::string& what) {
  if (!j.is_string())
    throw Error(what + ": symbol must be a string");
  auto name = j.get<std::string>();
  if (!alphabet.contains(name))
    throw Error(what + ": unknown symbol \"" + name + "\"");
  return alphabet.symbol(name);
}

json alphabet_json(const Alphabet& a) { return json(a.symbols()); }

json word_json(const Alphabet& a, const Word& w) { return a.format(w); }

} // namespace

RingSpec parse_ring_spec(const json& j) {
  if (!j.is_object() || !j.contains("kind") || !j["kind"].is_string())
    throw Error("ring: expected an object with a string \"kind\"");
  const auto kind = j["kind"].get<std::string>();
  if (kind == "zn") {
    expect_keys(j, "ring", {"kind", "n"});
    return RingSpec::zn(as_uint(j["n"], "ring.n"));
  }
  if (kind == "gf") {
    expect_keys(j, "ring", {"kind", "p", "k", "modulus"});
    return RingSpec::gf(as_u32(j["p"], "ring.p"), as_u32(j["k"], "ring.k"),
                        as_u32_vector(j["modulus"], "ring.modulus"));
  }
  if (kind == "product") {
    expect_keys(j, "ring", {"kind", "factors"});
    std::vector<RingSpec> factors;
    for (const auto& f : as_array(j["factors"], "ring.factors"))
      factors.push_back(parse_ring_spec(f));
    return RingSpec::product(std::move(factors));
  }
  if (kind == "table") {
    expect_keys(j, "ring", {"kind", "size", "add", "mul", "zero", "one"});
    auto size = as_u32(j["size"], "ring.size");
    auto table = [&](const json& t, const char* what) {
      std::vector<std::vector<std::uint32_t>> out;
      for (const auto& row : as_array(t, what))
        out.push_back(as_u32_vector(row, what));
      if (out.size() != size)
        throw Error(std::string(what) + ": expected " + std::to_string(size) + " rows");
      return out;
    };
    return RingSpec::table(table(j["add"], "ring.add"), table(j["mul"], "ring.mul"),
                           as_u32(j["zero"], "ring.zero"), as_u32(j["one"], "ring.one"));
  }
  throw Error("ring: unknown kind \"" + kind + "\"");
}

json to_json(const RingSpec& s) {
  switch (s.kind) {
  case RingKind::zn:
    return {{"kind", "zn"}, {"n", s.n}};
  case RingKind::gf:
    return {{"kind", "gf"}, {"p", s.p}, {"k", s.k}, {"modulus", s.modulus}};
  case RingKind::product: {
    json factors = json::array();
    for (const auto& f : s.factors)
      factors.push_back(to_json(f));
    return {{"kind", "product"}, {"factors", factors}};
  }
  case RingKind::table:
    return {{"kind", "table"}, {"size", s.size}, {"add", s.add},
            {"mul", s.mul},    {"zero", s.zero}, {"one", s.one}};
  }
  return {};
}

RingElement parse_element(const Ring& ring, const json& j) {
  switch (ring.kind()) {
  case RingKind::zn:
  case RingKind::table:
    return ring.from_residue(as_uint(j, "element of " + ring.name()));
  case RingKind::gf:
    return ring.from_coefficients(as_u32_vector(j, "element of " + ring.name()));
  case RingKind::product: {
    const auto& factors = ring.factors();
    const auto& arr = as_array(j, "element of " + ring.name());
    if (arr.size() != factors.size())
      throw Error("element of " + ring.name() + ": expected one component per factor");
    std::vector<RingElement> parts;
    for (std::size_t i = 0; i < factors.size(); ++i)
      parts.push_back(parse_element(factors[i], arr[i]));
    return ring.from_components(parts);
  }
  }
  throw Error("unsupported ring kind");
}

json element_to_json(const Ring& ring, RingElement e) {
  switch (ring.kind()) {
  case RingKind::zn:
  case RingKind::table:
    return ring.residue(e);
  case RingKind::gf:
    return ring.coefficients(e);
  case RingKind::product: {
    json out = json::array();
    const auto parts = ring.components(e);
    for (std::size_t i = 0; i < parts.size(); ++i)
      out.push_back(element_to_json(ring.factors()[i], parts[i]));
    return out;
  }
  }
  return {};
}

std::string format_element(const Ring& ring, RingElement e) { return element_to_json(ring, e).dump(); }

WeightedAutomaton parse_automaton(const json& j) {
  expect_keys(j, "automaton", {"ring", "alphabet", "states"}, {"initial", "final", "transitions"});
  const Ring ring = Ring::from_spec(parse_ring_spec(j["ring"]));
  const std::size_t n = parse_state_count(j["states"]);
  WeightedAutomaton a(ring, parse_alphabet(j["alphabet"]), n);

  for (const char* key : {"initial", "final"}) {
    if (!j.contains(key))
      continue;
    if (!j[key].is_object())
      throw Error(std::string("automaton.") + key + ": expected an object of state -> weight");
    for (const auto& [state, weight] : j[key].items()) {
      StateId q = parse_state_key(state, n, std::string("automaton.") + key);
      RingElement w = parse_element(ring, weight);
      if (std::string(key) == "initial")
        a.set_initial(q, w);
      else
        a.set_final(q, w);
    }
  }
  if (j.contains("transitions")) {
    std::set<Transition> seen;
    for (const auto& t : as_array(j["transitions"], "automaton.transitions")) {
      if (!t.is_array() || t.size() != 4)
        throw Error("automaton.transitions: each entry must be [from, symbol, to, weight]");
      Transition tr{parse_state(t[0], n, "automaton.transitions"),
                    parse_symbol(t[1], a.alphabet(), "automaton.transitions"),
                    parse_state(t[2], n, "automaton.transitions")};
      if (!seen.insert(tr).second)
        throw Error("automaton.transitions: duplicate transition");
      a.set_transition(tr.from, tr.symbol, tr.to, parse_element(ring, t[3]));
    }
  }
  return a;
}

json to_json(const WeightedAutomaton& a) {
  const auto& ring = a.ring();
  json initial = json::object(), final = json::object(), transitions = json::array();
  for (StateId q : a.initial_states())
    initial[std::to_string(q)] = element_to_json(ring, a.initial(q));
  for (StateId q : a.final_states())
    final[std::to_string(q)] = element_to_json(ring, a.final_weight(q));
  for (const auto& [t, w] : a.transitions())
    transitions.push_back({t.from, a.alphabet().name(t.symbol), t.to, element_to_json(ring, w)});
  return {{"ring", to_json(ring.spec())},
          {"alphabet", alphabet_json(a.alphabet())},
          {"states", a.num_states()},
          {"initial", initial},
          {"final", final},
          {"transitions", transitions}};
}

Nfa parse_nfa(const json& j) {
  expect_keys(j, "nfa", {"alphabet", "states"}, {"initial", "final", "transitions", "complete"});
  if (j.contains("complete") && !j["complete"].is_boolean())
    throw Error("nfa.complete: expected a boolean");
  const std::size_t n = parse_state_count(j["states"]);
  Nfa a(parse_alphabet(j["alphabet"]), n);
  for (const char* key : {"initial", "final"}) {
    if (!j.contains(key))
      continue;
    std::set<StateId> seen;
    for (const auto& s : as_array(j[key], std::string("nfa.") + key)) {
      StateId q = parse_state(s, n, std::string("nfa.") + key);
      if (!seen.insert(q).second)
        throw Error(std::string("nfa.") + key + ": duplicate state");
      if (std::string(key) == "initial")
        a.set_initial(q);
      else
        a.set_final(q);
    }
  }
  if (j.contains("transitions")) {
    for (const auto& t : as_array(j["transitions"], "nfa.transitions")) {
      if (!t.is_array() || t.size() != 3)
        throw Error("nfa.transitions: each entry must be [from, symbol, to]");
      Transition tr{parse_state(t[0], n, "nfa.transitions"),
                    parse_symbol(t[1], a.alphabet(), "nfa.transitions"),
                    parse_state(t[2], n, "nfa.transitions")};
      if (a.transitions().count(tr))
        throw Error("nfa.transitions: duplicate transition");
      a.add_transition(tr.from, tr.symbol, tr.to);
    }
  }
  return a;
}

json to_json(const Nfa& a) {
  json transitions = json::array();
  for (const auto& t : a.transitions())
    transitions.push_back({t.from, a.alphabet().name(t.symbol), t.to});
  return {{"alphabet", alphabet_json(a.alphabet())},
          {"states", a.num_states()},
          {"initial", a.initial_states()},
          {"final", a.final_states()},
          {"transitions", transitions}};
}

Dfa parse_dfa(const json& j) {
  if (!j.is_object() || !j.contains("complete") || j["complete"] != true)
    throw Error("dfa: a DFA document must declare \"complete\": true");
  const Nfa a = parse_nfa(j);
  const auto initial = a.initial_states();
  if (initial.size() != 1)
    throw Error("dfa: exactly one initial state is required");
  const std::size_t n = a.num_states(), k = a.alphabet().size();
  constexpr StateId kMissing = ~StateId{0};
  std::vector<StateId> table(n * k, kMissing);
  for (const auto& t : a.transitions()) {
    auto& slot = table[t.from * k + t.symbol];
    if (slot != kMissing)
      throw Error("dfa: state " + std::to_string(t.from) + " has two transitions on \"" +
                  a.alphabet().name(t.symbol) + "\"");
    slot = t.to;
  }
  for (std::size_t i = 0; i < table.size(); ++i)
    if (table[i] == kMissing)
      throw Error("dfa: transition function is not total (state " + std::to_string(i / k) +
                  ", symbol \"" + a.alphabet().name(static_cast<Symbol>(i % k)) + "\")");
  std::vector<bool> finals(n);
  for (StateId q = 0; q < n; ++q)
    finals[q] = a.is_final(q);
  return Dfa(a.alphabet(), n, initial.front(), std::move(table), std::move(finals));
}

json to_json(const Dfa& d) {
  json out = to_json(d.to_nfa());
  out["complete"] = true;
  return out;
}

Decomposition parse_decomposition(const json& j) {
  expect_keys(j, "decomposition", {"alphabet", "languages"});
  Decomposition dec{parse_alphabet(j["alphabet"]), {}};
  for (const auto& l : as_array(j["languages"], "decomposition.languages"))
    dec.languages.push_back(parse_nfa(l));
  dec.validate();
  return dec;
}

json to_json(const Decomposition& dec) {
  json languages = json::array();
  for (const auto& l : dec.languages)
    languages.push_back(to_json(l));
  return {{"alphabet", alphabet_json(dec.alphabet)}, {"languages", languages}};
}

json to_json(const DecisionReport& r, bool with_timing) {
  json shifts = json::array();
  for (const auto& s : r.shifts) {
    json entry = {{"shift", element_to_json(r.ring, s.shift)},
                  {"support_states", s.support_states},
                  {"minimal_states", s.minimal_states},
                  {"monoid_size", s.monoid_size},
                  {"idempotents", s.idempotent_count},
                  {"ecom", s.ecom.holds}};
    if (s.ecom.witness)
      entry["witness"] = {{"e", word_json(r.alphabet, s.ecom.witness->e_word)},
                          {"f", word_json(r.alphabet, s.ecom.witness->f_word)}};
    if (with_timing)
      entry["elapsed_us"] = s.elapsed.count();
    shifts.push_back(std::move(entry));
  }
  json out = {{"verdict", r.reversible ? "reversible" : "not-reversible"},
              {"ring",
               {{"name", r.ring.name()},
                {"size", r.ring.size()},
                {"characteristic", r.ring.characteristic()},
                {"spec", to_json(r.ring.spec())}}},
              {"alphabet", alphabet_json(r.alphabet)},
              {"states", r.automaton_states},
              {"subring", r.restricted_to_subring},
              {"shifts", shifts}};
  if (const auto* fail = r.first_failure())
    out["failing_shift"] = element_to_json(r.ring, fail->shift);
  if (with_timing)
    out["elapsed_us"] = r.elapsed.count();
  return out;
}

std::string format_report(const DecisionReport& r, bool with_timing) {
  std::ostringstream out;
  out << "ring: " << r.ring.name() << " (size " << r.ring.size() << ", characteristic "
      << r.ring.characteristic() << (r.restricted_to_subring ? ", generated subring" : "") << ")\n";
  out << "alphabet:";
  for (const auto& s : r.alphabet.symbols())
    out << ' ' << s;
  out << "\nstates: " << r.automaton_states << "\n";
  for (const auto& s : r.shifts) {
    out << "shift " << format_element(r.ring, s.shift) << ": support " << s.support_states
        << " states, minimal " << s.minimal_states << ", monoid " << s.monoid_size
        << ", idempotents " << s.idempotent_count << ", ecom " << (s.ecom.holds ? "yes" : "no");
    if (with_timing)
      out << ", " << s.elapsed.count() << " us";
    out << "\n";
    if (s.ecom.witness)
      out << "  non-commuting idempotents: e = \"" << r.alphabet.format(s.ecom.witness->e_word)
          << "\", f = \"" << r.alphabet.format(s.ecom.witness->f_word) << "\"\n";
  }
  if (with_timing)
    out << "elapsed: " << r.elapsed.count() << " us\n";
  out << "verdict: " << (r.reversible ? "reversible" : "not-reversible") << "\n";
  return out.str();
}

namespace {

bool expands(const std::string& key) {
  return key == "transitions" || key == "languages" || key == "add" || key == "mul" ||
         key == "shifts" || key == "factors";
}

void dump_value(const json& j, const std::string& key, int indent, std::string& out) {
  const std::string pad(indent, ' ');
  const std::string inner(indent + 2, ' ');
  if (j.is_object() && !j.empty()) {
    out += "{\n";
    std::size_t i = 0;
    for (const auto& [k, v] : j.items()) {
      out += inner + json(k).dump() + ": ";
      dump_value(v, k, indent + 2, out);
      out += (++i < j.size()) ? ",\n" : "\n";
    }
    out += pad + "}";
  } else if (j.is_array() && !j.empty() && expands(key)) {
    out += "[\n";
    for (std::size_t i = 0; i < j.size(); ++i) {
      out += inner;
      dump_value(j[i], "", indent + 2, out);
      out += (i + 1 < j.size()) ? ",\n" : "\n";
    }
    out += pad + "]";
  } else {
    out += j.dump();
  }
}

} // namespace

std::string dump(const json& j) {
  std::string out;
  dump_value(j, "", 0, out);
  out += "\n";
  return out;
}

json parse_json_text(const std::string& text) {
  try {
    return json::parse(text);
  } catch (const json::parse_error& e) {
    throw Error(std::string("invalid JSON: ") + e.what());
  }
}

json read_json_file(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in)
    throw Error("cannot open " + path.string());
  std::stringstream buf;
  buf << in.rdbuf();
  try {
    return json::parse(buf.str());
  } catch (const json::parse_error& e) {
    throw Error(path.string() + ": invalid JSON: " + e.what());
  }
}

} // namespace rwa::io
