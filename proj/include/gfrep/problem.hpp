#pragma once

#include <json.hpp>

#include <map>
#include <memory>
#include <string>
#include <vector>

#include "gfrep/littlegroups.hpp"
#include "gfrep/mackey.hpp"

namespace gfrep {

inline constexpr const char* kToolVersion = "0.1.0";

using Json = nlohmann::ordered_json;

struct NamedRepSpec {
  std::vector<std::string> subgroup_words;  // generators; empty = whole G
  std::vector<MatGF> images;                // aligned with the words
};

// Parsed and fully validated problem instance. The SemidirectGroup is
// heap-pinned so subgroup views and representations can reference it.
struct ProblemSpec {
  FieldPtr field;
  std::shared_ptr<SemidirectGroup> G;
  std::map<std::string, NamedRepSpec> reps;
  Json echo;  // the validated input, re-serialized
};

ProblemSpec parse_problem(const std::string& text);
ProblemSpec load_problem(const std::string& path);

// Element of G named by a word like "n0^2*h1" ("1" is the identity).
int parse_element_word(const SemidirectGroup& G, const std::string& word);
Subgroup parse_subgroup(const SemidirectGroup& G,
                        const std::vector<std::string>& words);
Representation materialize_rep(const ProblemSpec& spec,
                               const std::string& name);

struct CommandArgs {
  std::string rep;
  std::string rep2;
  std::vector<std::string> subgroup_words;
  uint64_t seed = 0;
  bool oracle = false;
};

struct Report {
  Json machine;
  std::string human;
};

// Dispatch: classify | verify | irr | intertwine | induce | mackey | match.
Report run_command(const std::string& command, const ProblemSpec& spec,
                   const CommandArgs& args);

Json gf_to_json(const GF& v);
Json matrix_to_json(const MatGF& m);

}  // namespace gfrep
