// Copyright 2026 The hgalg Authors
// SPDX-License-Identifier: Apache-2.0

#include "hgalg/job.hpp"

namespace hgalg {

namespace {

const char* kSweedler = R"({
  "name": "sweedler_h4",
  "field": "Q",
  "algebra": {
    "name": "H4",
    "generators": ["g", "x"],
    "rules": [
      {"lhs": ["g", "g"], "rhs": [{"coeff": "1", "word": []}], "label": "g*g -> 1"},
      {"lhs": ["x", "x"], "rhs": [], "label": "x*x -> 0"},
      {"lhs": ["x", "g"], "rhs": [{"coeff": "-1", "word": ["g", "x"]}], "label": "x*g -> -g*x"}
    ],
    "forbidden_characteristics": [2]
  },
  "mu": {
    "g": [{"coeff": "1", "factors": [["g"], ["g"], ["g"]]}],
    "x": [
      {"coeff": "1", "factors": [["x"], [], []]},
      {"coeff": "-1", "factors": [["g"], ["g", "x"], []]},
      {"coeff": "1", "factors": [["g"], ["g"], ["x"]]}
    ]
  },
  "alpha": {"g": "1", "x": "0"},
  "commands": ["check-hopf-galois", "convert galois-to-hopf"]
})";

std::string laurent_lambda(const std::string& name, const std::string& lambda) {
  return R"({
  "name": ")" + name + R"(",
  "field": "Q",
  "algebra": {
    "name": "k[g,g^-1,x]",
    "generators": [{"name": "g", "invertible": true}, "x"],
    "commutative": true
  },
  "bracket": [{"left": "x", "right": "g", "value": [{"coeff": ")" + lambda + R"(", "word": ["g", "x"]}]}],
  "mu": {
    "g": [{"coeff": "1", "factors": [["g"], ["g^-1"], ["g"]]}],
    "x": [
      {"coeff": "1", "factors": [[], [], ["x"]]},
      {"coeff": "-1", "factors": [[], ["g", "x"], ["g^-1"]]},
      {"coeff": "1", "factors": [["x"], ["g"], ["g^-1"]]}
    ]
  },
  "commands": ["check-hopf-galois", "check-poisson", "check-poisson-hg"]
})";
}

const char* kOreQ2 = R"({
  "name": "ore_q2",
  "field": "Q",
  "algebra": {
    "name": "k[g,g^-1]",
    "generators": [{"name": "g", "invertible": true}],
    "commutative": true
  },
  "mu": {"g": [{"coeff": "1", "factors": [["g"], ["g^-1"], ["g"]]}]},
  "ore": {
    "tau": {"g": [{"coeff": "2", "word": ["g"]}]},
    "tau_inverse": {"g": [{"coeff": "1/2", "word": ["g"]}]},
    "delta": {},
    "variable": "z",
    "cap": 8,
    "grouplike": [{"coeff": "1", "word": ["g"]}]
  },
  "commands": ["check-hopf-galois", "ore-extend", "check-thm28"]
})";

const char* kPoissonOre = R"({
  "name": "poisson_ore_delta_cg",
  "field": "Q",
  "algebra": {
    "name": "k[g,g^-1]",
    "generators": [{"name": "g", "invertible": true}],
    "commutative": true
  },
  "bracket": [],
  "mu": {"g": [{"coeff": "1", "factors": [["g"], ["g^-1"], ["g"]]}]},
  "poisson_ore": {
    "alpha": {},
    "delta": {"g": [{"coeff": "1", "word": ["g"]}]},
    "variable": "x",
    "cap": 8,
    "grouplike": [{"coeff": "1", "word": ["g"]}]
  },
  "commands": ["check-poisson-hg", "poisson-ore-extend", "check-thm44"]
})";

const char* kZ2 = R"({
  "name": "z2_zero_bracket",
  "field": "Q",
  "algebra": {
    "name": "k[Z/2]",
    "generators": ["g"],
    "rules": [{"lhs": ["g", "g"], "rhs": [{"coeff": "1", "word": []}], "label": "g*g -> 1"}],
    "commutative": true
  },
  "bracket": [],
  "mu": {"g": [{"coeff": "1", "factors": [["g"], ["g"], ["g"]]}]},
  "envelope": {"cap": 6},
  "commands": ["check-hopf-galois", "check-poisson-hg", "build-envelope", "check-thm59"]
})";

const char* kTruncated = R"({
  "name": "truncated_xy",
  "field": "Q",
  "algebra": {
    "name": "k[x,y]/(x,y)^3",
    "generators": ["x", "y"],
    "rules": [
      {"lhs": ["x", "x", "x"], "rhs": []},
      {"lhs": ["x", "x", "y"], "rhs": []},
      {"lhs": ["x", "y", "y"], "rhs": []},
      {"lhs": ["y", "y", "y"], "rhs": []}
    ],
    "commutative": true
  },
  "bracket": [{"left": "x", "right": "y", "value": [{"coeff": "1", "word": ["x"]}]}],
  "envelope": {"cap": 4},
  "commands": ["check-poisson", "build-envelope", "check-lemma55"]
})";

const char* kLaurentToZ2 = R"({
  "name": "laurent_to_z2",
  "field": "Q",
  "algebra": {
    "name": "k[g,g^-1]",
    "generators": [{"name": "g", "invertible": true}],
    "commutative": true
  },
  "mu": {"g": [{"coeff": "1", "factors": [["g"], ["g^-1"], ["g"]]}]},
  "pushforward": {
    "target": {
      "name": "k[Z/2]",
      "generators": ["g"],
      "rules": [{"lhs": ["g", "g"], "rhs": [{"coeff": "1", "word": []}]}],
      "commutative": true
    },
    "map": {"g": [{"coeff": "1", "word": ["g"]}]},
    "section": {"g": [{"coeff": "1", "word": ["g"]}]}
  },
  "commands": ["check-hopf-galois", "pushforward"]
})";

}  // namespace

const std::vector<Builtin>& builtins() {
  static const std::vector<Builtin> all = {
      {"sweedler_h4", "Example 2.5", kSweedler},
      {"laurent_lambda1", "Example 3.8 (lambda = 1)", laurent_lambda("laurent_lambda1", "1")},
      {"laurent_lambda2", "Example 3.8 (lambda = 2)", laurent_lambda("laurent_lambda2", "2")},
      {"ore_q2", "Theorem 2.8 q-example (q = 2)", kOreQ2},
      {"poisson_ore_delta_cg", "Theorem 4.4 delta(g) = c g example (c = 1)", kPoissonOre},
      {"z2_zero_bracket", "Theorem 5.9 Z/2 envelope", kZ2},
      {"truncated_xy", "Lemma 5.5 truncated k[x,y] with {x,y} = x", kTruncated},
      {"laurent_to_z2", "Remark 2.2 quotient pushforward", kLaurentToZ2},
  };
  return all;
}

const Builtin* find_builtin(std::string_view name) {
  for (const Builtin& b : builtins())
    if (b.name == name) return &b;
  return nullptr;
}

}  // namespace hgalg
