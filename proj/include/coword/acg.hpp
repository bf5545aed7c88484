#pragma once

#include "coword/lambda.hpp"
#include "coword/llg.hpp"

namespace coword {

// The string signature over an alphabet: one atom O, every token typed O -> O.
Signature string_signature(const std::set<std::string>& alphabet);
TypePtr str_type();
Interpretation xi0(const std::set<std::string>& alphabet);

// rho(a1 ... an) = \x. an (... (a1 x)); tokens apply in reading order.
TermPtr rho(const Word& w, const std::set<std::string>& alphabet);
// Inverse of rho up to beta-eta. Throws Error(Typing) if t is not a closed str term.
Word unrho(const TermPtr& t, const std::set<std::string>& alphabet);

struct StringAcg {
  Signature abstract_sig;
  std::set<std::string> alphabet;
  std::map<std::string, TypePtr> type_map;  // abstract atom -> object type
  std::map<std::string, TermPtr> term_map;  // abstract constant -> closed object term
  std::string initial;
  std::string separator = " ";
};

struct AcgReport {
  bool ok = true;
  std::string constant;  // offending constant, if any
  std::string message;
};

AcgReport validate_acg(const StringAcg& g);

TypePtr phi_type(const StringAcg& g, const TypePtr& a);
TermPtr phi_term(const StringAcg& g, const TermPtr& t);
// xi = xi0 after phi, on the abstract signature.
Interpretation acg_interpret(const StringAcg& g);

// Closed beta-normal eta-long terms of the given type with at most `budget` nodes.
// Constants weigh their token count; terms heavier than max_tokens (if >= 0) are skipped.
struct TermEnumeration {
  std::vector<TermPtr> terms;
  bool frontier_open = false;  // some candidate was cut by the budget
};

TermEnumeration enumerate_terms(const Signature& sigma, const TypePtr& type, int budget,
                                const std::map<std::string, int>& weight = {}, int max_tokens = -1);

struct AcgLanguageResult {
  std::set<Word> words;
  bool frontier_open = false;  // budget reached before the search space was exhausted
};

// Budget counts nodes of the beta-normal eta-long abstract term.
AcgLanguageResult acg_language(const StringAcg& g, int budget, int max_len = -1);
Word acg_yield(const StringAcg& g, const TermPtr& abstract_term);

// Types become formulas via A -o B = ~A | B; top-level pars are split into the sequent.
Llg acg_to_llg(const StringAcg& g);

}  // namespace coword
