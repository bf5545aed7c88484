#pragma once

#include "coword/llg.hpp"

namespace coword {

struct McfgAtom {
  std::string pred;
  std::vector<std::string> vars;
  bool operator==(const McfgAtom&) const = default;
};

// A head argument item: a terminal token or a body variable.
struct McfgSymbol {
  bool is_var = false;
  std::string name;
  auto operator<=>(const McfgSymbol&) const = default;
};

struct Production {
  std::vector<McfgAtom> body;
  std::string head;
  std::vector<std::vector<McfgSymbol>> args;
  bool operator==(const Production&) const = default;
};

struct Mcfg {
  std::map<std::string, int> nonterminals;  // name -> arity
  std::set<std::string> alphabet;
  std::string initial;
  std::vector<Production> productions;
  std::string separator = " ";
  bool operator==(const Mcfg&) const = default;
};

struct McfgReport {
  bool ok = true;
  std::string message;
};

McfgReport validate_mcfg(const Mcfg& g);
std::string production_to_string(const Production& p);

using McfgFacts = std::map<std::string, std::set<std::vector<Word>>>;

// Least fixpoint restricted to facts whose arguments have at most `bound` tokens each.
McfgFacts mcfg_derive(const Mcfg& g, int bound);
std::set<Word> mcfg_language(const Mcfg& g, int bound);

// Argument i of a k-ary predicate sits at points 2i-1 (right) and 2i (left).
Boundary predicate_boundary(int arity);
// The production as a cowordism from the tensor of its body predicates to its head.
Cowordism production_cowordism(const Mcfg& g, const Production& p);
Llg mcfg_to_llg(const Mcfg& g);

// An unlabeled matching; edges (source, target) sorted by source.
struct Pattern {
  Boundary boundary;
  std::vector<std::pair<int, int>> edges;
  auto operator<=>(const Pattern&) const = default;
};

Pattern pattern_of(const Multiword& m);
std::vector<Pattern> possible_patterns(const Boundary& x);
std::string pattern_key(const Pattern& p);
// Predicate name for a literal and pattern, e.g. "S#2.1" or "~P#2.1_4.3".
std::string pattern_predicate(const std::string& literal, const Pattern& p);

// Productions X1^p1(..), ..., Xn^pn(..) |- X^p(..) for every choice of input patterns
// that keeps the composite regular. Variables are named x_i_j.
std::vector<Production> prod_of_cowordism(const Cowordism& sigma, const std::vector<Boundary>& inputs,
                                          const std::vector<std::string>& input_names,
                                          const std::string& output_name);
// Requires a tensor-free lexicon.
Mcfg llg_to_mcfg(const Llg& g);

}  // namespace coword
