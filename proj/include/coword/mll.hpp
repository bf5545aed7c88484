#pragma once

#include "coword/lambda.hpp"

namespace coword {

struct Formula;
using FormulaPtr = std::shared_ptr<const Formula>;

struct Formula {
  enum class Kind { Pos, Neg, Times, Par };
  Kind kind;
  std::string atom;
  FormulaPtr left;
  FormulaPtr right;
  std::string key;  // canonical printed form, used for ordering

  bool is_literal() const { return kind == Kind::Pos || kind == Kind::Neg; }
};

FormulaPtr pos(const std::string& p);
FormulaPtr neg(const std::string& p);
FormulaPtr times(FormulaPtr a, FormulaPtr b);
FormulaPtr par(FormulaPtr a, FormulaPtr b);
FormulaPtr negate(const FormulaPtr& a);
bool formula_equal(const FormulaPtr& a, const FormulaPtr& b);
std::string formula_to_string(const FormulaPtr& a);
// `p`, `~p`, `A * B`, `A | B`, parentheses; `*` binds tighter, both right associative.
FormulaPtr parse_formula(const std::string& text);
// Linear implication A -> B read as dual(A) par B.
FormulaPtr formula_of_type(const TypePtr& t);
void subformulas(const FormulaPtr& a, std::vector<FormulaPtr>& out);

using Sequent = std::vector<FormulaPtr>;
bool sequent_equal(const Sequent& a, const Sequent& b);
std::string sequent_to_string(const Sequent& s);
Sequent parse_sequent(const std::string& text);
bool is_flat(const Sequent& s);
bool has_times(const FormulaPtr& a);

Boundary interpret_formula(const Interpretation& xi, const FormulaPtr& a);
Boundary interpret_sequent(const Interpretation& xi, const Sequent& s);

// A cowordism typing judgement 1 -> xi(sequent) given by its body.
struct AxiomJudgement {
  std::string name;
  Sequent sequent;
  Multiword body;
};

struct MllProof {
  enum class Rule { Id, Cut, Ex, Par, Times, Axiom };
  Rule rule;
  Sequent conclusion;
  std::vector<MllProof> premises;
  // Ex: conclusion[k] = premise[permutation[k]]; an adjacent swap is the basic case.
  std::vector<int> permutation;
  // Axiom: name of the lexicon entry.
  std::string axiom;
};

MllProof id_proof(const FormulaPtr& x);
MllProof axiom_proof(const AxiomJudgement& a);
// Left premise ends with X, right premise starts with dual(X).
MllProof cut_proof(MllProof left, MllProof right);
MllProof ex_proof(MllProof p, std::vector<int> permutation);
MllProof swap_proof(MllProof p, int i);
MllProof par_proof(MllProof p);
MllProof times_proof(MllProof left, MllProof right);

CheckReport check_proof(const MllProof& pf, const std::vector<AxiomJudgement>& lexicon);
// Throws on malformed proofs or bodies that do not fit their sequents.
Cowordism interpret_proof(const Interpretation& xi, const MllProof& pf,
                          const std::vector<AxiomJudgement>& lexicon);
std::size_t proof_cost(const MllProof& pf);  // rule applications other than Ex
std::string proof_to_string(const MllProof& pf, int indent = 0);

}  // namespace coword
