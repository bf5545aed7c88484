#pragma once

#include "coword/acg.hpp"
#include "coword/mcfg.hpp"

namespace coword {

enum class GrammarKind { Acg, Llg, Mcfg };

// One [alphabet] section and exactly one grammar section. The alphabet and
// separator are mirrored into the active grammar.
struct GrammarFile {
  GrammarKind kind = GrammarKind::Llg;
  std::set<std::string> alphabet;
  std::string separator = " ";
  StringAcg acg;
  Llg llg;
  Mcfg mcfg;
};

// Throws Error(Parse) with a "line N:" prefix.
GrammarFile parse_grammar_file(const std::string& text);
GrammarFile load_grammar_file(const std::string& path);
std::string write_grammar_file(const GrammarFile& g);

// Empty when the grammar validates, else the first problem found.
std::string validate_grammar_file(const GrammarFile& g);
bool grammar_equal(const GrammarFile& a, const GrammarFile& b);

GrammarFile from_acg(const StringAcg& g);
GrammarFile from_llg(const Llg& g);
GrammarFile from_mcfg(const Mcfg& g);

}  // namespace coword
