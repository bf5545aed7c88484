#pragma once

#include <algorithm>
#include <random>

#include "wawb_mcfg.hpp"

namespace testfix {

using namespace coword;

// At most 3 nonterminals of arity at most 2 and at most 6 productions; the first two are nullary.
struct McfgGen {
  std::mt19937& rng;
  int pick(int n) { return std::uniform_int_distribution<int>(0, n - 1)(rng); }

  Mcfg grammar() {
    Mcfg g;
    g.alphabet = {"a", "b"};
    g.initial = "S";
    g.separator = "";
    g.nonterminals = {{"S", 1}, {"A", 1 + pick(2)}, {"B", 1 + pick(2)}};
    std::vector<std::string> names = {"S", "A", "B"};
    const int n = 3 + pick(4);
    for (int k = 0; k < n; ++k) {
      const std::string head = k < 2 ? names[1 + k] : names[pick(3)];
      const int nb = k < 2 ? 0 : pick(3);
      std::vector<McfgAtom> body;
      std::vector<std::string> vars;
      for (int j = 0; j < nb; ++j) {
        McfgAtom a{names[1 + pick(2)], {}};
        for (int i = 0; i < g.nonterminals[a.pred]; ++i) {
          a.vars.push_back("v" + std::to_string(vars.size()));
          vars.push_back(a.vars.back());
        }
        body.push_back(a);
      }
      std::shuffle(vars.begin(), vars.end(), rng);
      std::vector<std::vector<std::string>> args(g.nonterminals[head]);
      for (const std::string& v : vars) args[pick(static_cast<int>(args.size()))].push_back(v);
      for (auto& arg : args)
        for (int t = pick(3); t > 0; --t)
          arg.insert(arg.begin() + pick(static_cast<int>(arg.size()) + 1), pick(2) ? "a" : "b");
      g.productions.push_back(rule(body, head, args));
    }
    return g;
  }
};

}  // namespace testfix
