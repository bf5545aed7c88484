#pragma once

#include <map>
#include <memory>
#include <set>

#include "coword/cowordism.hpp"

namespace coword {

struct LinType;
using TypePtr = std::shared_ptr<const LinType>;

// Either an atom (`from` and `to` null) or an implication from -> to.
struct LinType {
  std::string atom;
  TypePtr from;
  TypePtr to;
  bool is_atom() const { return from == nullptr; }
};

TypePtr atom_type(const std::string& name);
TypePtr arrow(TypePtr a, TypePtr b);
bool type_equal(const TypePtr& a, const TypePtr& b);
std::string type_to_string(const TypePtr& t);
// `A -> B` is right associative; parentheses group.
TypePtr parse_type(const std::string& text);
void collect_atoms(const TypePtr& t, std::set<std::string>& out);

struct Term;
using TermPtr = std::shared_ptr<const Term>;

struct Term {
  enum class Kind { Var, Const, App, Lam };
  Kind kind;
  std::string name;  // variable, constant or binder name
  TermPtr fun;       // App: function; Lam: body
  TermPtr arg;       // App: argument
};

TermPtr var(const std::string& x);
TermPtr constant(const std::string& c);
TermPtr app(TermPtr f, TermPtr a);
TermPtr app(TermPtr f, std::initializer_list<TermPtr> args);
TermPtr lam(const std::string& x, TermPtr body);
bool term_equal(const TermPtr& a, const TermPtr& b);
std::string term_to_string(const TermPtr& t);
// Unbound identifiers become constants unless listed in `free_vars`.
TermPtr parse_term(const std::string& text, const std::set<std::string>& free_vars = {});
std::size_t term_size(const TermPtr& t);
// Free variables in the order a linear typing context must list them.
std::vector<std::string> context_order(const TermPtr& t);
bool is_linear(const TermPtr& t);

struct Signature {
  std::set<std::string> atoms;
  std::map<std::string, TypePtr> constants;
};

using Context = std::vector<std::pair<std::string, TypePtr>>;

struct Derivation {
  enum class Rule { Id, SigAxiom, ImpI, ImpE };
  Rule rule;
  Context context;
  TermPtr term;
  TypePtr type;
  // ImpE: {argument, function}; ImpI: {premise}.
  std::vector<Derivation> premises;
  // ImpI: index of the discharged hypothesis in the premise context.
  int position = 0;
};

struct CheckReport {
  bool ok = true;
  std::string message;
};

CheckReport check_derivation(const Signature& sigma, const Derivation& d);
// Throws Error(Typing) when no derivation exists. Type variables left
// unconstrained by `expected` default to the first signature atom.
Derivation infer(const Signature& sigma, const Context& context, const TermPtr& t,
                 const TypePtr& expected = nullptr);

// Leftmost-outermost; throws Error(Typing) on non-linear input.
TermPtr beta_normalize(const TermPtr& t);
TermPtr rename_binders(const TermPtr& t);

struct Interpretation {
  std::map<std::string, Boundary> atoms;
  std::map<std::string, Multiword> constants;
};

Boundary interpret_type(const Interpretation& xi, const TypePtr& a);
Cowordism interpret_derivation(const Interpretation& xi, const Derivation& d);

}  // namespace coword
