#pragma once

#include <optional>

#include "coword/mll.hpp"

namespace coword {

struct Llg {
  std::set<std::string> atoms;
  Interpretation xi;  // only `atoms` is used
  std::set<std::string> alphabet;
  std::vector<AxiomJudgement> lexicon;
  std::string initial;
  std::string separator = " ";
};

struct LlgReport {
  bool ok = true;
  std::string message;
};

LlgReport validate_llg(const Llg& g);

// Full: the plain sequent rules. Focused: cuts grow one axiom at a time and absorb the pars
// they need; Times and Par only build duals of formulas found inside axioms. CutOnly: flat grammars.
enum class Strategy { Auto, Focused, Full, CutOnly };

struct GenerateOptions {
  int budget = 10;             // rule applications, Ex not counted
  int max_len = -1;            // prune items whose labels exceed this many tokens
  Strategy strategy = Strategy::Auto;
  std::size_t max_items = 3000000;
  int max_formulas = -1;       // optional cap on sequent length
  bool drop_singular = false;  // discard items carrying cycles
  std::optional<Word> target;  // keep only items whose labels are factors of this word
};

struct DerivedJudgement {
  Sequent sequent;
  Multiword body;
  int cost = 0;
  int item = -1;
};

struct ItemStore;

struct GenerateResult {
  std::vector<DerivedJudgement> judgements;  // conclusions |- S
  bool frontier_open = false;  // new items were still appearing at the budget
  bool truncated = false;      // the item cap was reached
  std::size_t items = 0;
  std::shared_ptr<const ItemStore> store;
};

// Auto picks CutOnly for flat grammars and Focused otherwise.
GenerateResult generate(const Llg& g, const GenerateOptions& opts);
GenerateResult generate_cut_only(const Llg& g, const GenerateOptions& opts);
// Rebuilds an explicit proof tree (with Ex nodes) for a stored item.
MllProof provenance(const GenerateResult& r, int item);

struct LanguageResult {
  std::set<Word> words;
  bool frontier_open = false;
  bool truncated = false;
};

LanguageResult language(const Llg& g, const GenerateOptions& opts);

struct MemberResult {
  bool yes = false;
  int budget = 0;  // cost of the proof found, else the budget searched
  std::optional<MllProof> proof;
};

MemberResult member(const Llg& g, const Word& w, GenerateOptions opts);

bool is_flat_llg(const Llg& g);
bool is_times_free(const Llg& g);
// Splits every par in axiom sequents; bodies are unchanged. Rejects tensors.
Llg flatten_par(const Llg& g);

}  // namespace coword
