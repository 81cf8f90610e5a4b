#ifndef RWA_IO_HPP
#define RWA_IO_HPP

#include <filesystem>
#include <string>

#include "json.hpp"

#include "rwa/decide.hpp"
#include "rwa/lang.hpp"
#include "rwa/ring.hpp"
#include "rwa/wfa.hpp"

// Document formats (UTF-8 JSON; unknown keys are rejected):
//
//   ring       {"kind":"zn","n":6}
//              {"kind":"gf","p":2,"k":2,"modulus":[1,1,1]}
//              {"kind":"product","factors":[ring,...]}
//              {"kind":"table","size":m,"add":[[...]],"mul":[[...]],"zero":i,"one":j}
//   element    zn: integer, gf: [c_0,...,c_{k-1}], product: [elt,...], table: index
//   automaton  {"ring":ring,"alphabet":[...],"states":n,"initial":{"q":elt},
//               "final":{"q":elt},"transitions":[[p,"sym",q,elt],...]}
//   nfa        {"alphabet":[...],"states":n,"initial":[...],"final":[...],
//               "transitions":[[p,"sym",q],...]}
//   dfa        nfa plus "complete":true; total, with a single initial state
//   decomposition {"alphabet":[...],"languages":[nfa,...]}

namespace rwa::io {

using json = nlohmann::json;

RingSpec parse_ring_spec(const json& j);
json to_json(const RingSpec& spec);

RingElement parse_element(const Ring& ring, const json& j);
json element_to_json(const Ring& ring, RingElement e);
/// Compact canonical encoding, e.g. "3" or "[1,0]".
std::string format_element(const Ring& ring, RingElement e);

WeightedAutomaton parse_automaton(const json& j);
json to_json(const WeightedAutomaton& a);

Nfa parse_nfa(const json& j);
json to_json(const Nfa& a);

Dfa parse_dfa(const json& j);
json to_json(const Dfa& d);

Decomposition parse_decomposition(const json& j);
json to_json(const Decomposition& dec);

/// Machine-readable decision report; timings only when requested so that
/// identical inputs give identical output.
json to_json(const DecisionReport& report, bool with_timing = false);
std::string format_report(const DecisionReport& report, bool with_timing = false);

/// Pretty printer used for every document: one key per line, with
/// "transitions", "languages", "add" and "mul" one entry per line.
std::string dump(const json& j);

/// Throws Error when the file cannot be read or is not valid JSON.
json read_json_file(const std::filesystem::path& path);
json parse_json_text(const std::string& text);

} // namespace rwa::io

#endif // RWA_IO_HPP
