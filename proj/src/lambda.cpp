#include "coword/lambda.hpp"

#include <algorithm>
#include <cctype>
#include <functional>

namespace coword {

// ---------------------------------------------------------------- types

TypePtr atom_type(const std::string& name) {
  auto t = std::make_shared<LinType>();
  t->atom = name;
  return t;
}

TypePtr arrow(TypePtr a, TypePtr b) {
  auto t = std::make_shared<LinType>();
  t->from = std::move(a);
  t->to = std::move(b);
  return t;
}

bool type_equal(const TypePtr& a, const TypePtr& b) {
  if (a == b) return true;
  if (!a || !b) return false;
  if (a->is_atom() != b->is_atom()) return false;
  if (a->is_atom()) return a->atom == b->atom;
  return type_equal(a->from, b->from) && type_equal(a->to, b->to);
}

std::string type_to_string(const TypePtr& t) {
  if (t->is_atom()) return t->atom;
  std::string l = type_to_string(t->from);
  if (!t->from->is_atom()) l = "(" + l + ")";
  return l + " -> " + type_to_string(t->to);
}

void collect_atoms(const TypePtr& t, std::set<std::string>& out) {
  if (t->is_atom()) {
    out.insert(t->atom);
  } else {
    collect_atoms(t->from, out);
    collect_atoms(t->to, out);
  }
}

namespace {

bool ident_char(char c) {
  return std::isalnum(static_cast<unsigned char>(c)) || c == '_' || c == '\'' ||
         (static_cast<unsigned char>(c) >= 0x80);
}

class TypeParser {
 public:
  explicit TypeParser(const std::string& s) : s_(s) {}

  TypePtr parse() {
    TypePtr t = arrow_type();
    skip();
    if (pos_ != s_.size()) fail("trailing input");
    return t;
  }

 private:
  void skip() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }
  [[noreturn]] void fail(const std::string& why) {
    throw Error(ErrorKind::Parse, "type '" + s_ + "': " + why + " at column " + std::to_string(pos_ + 1));
  }
  TypePtr arrow_type() {
    TypePtr left = primary();
    skip();
    if (s_.compare(pos_, 2, "->") == 0) {
      pos_ += 2;
      return arrow(left, arrow_type());
    }
    return left;
  }
  TypePtr primary() {
    skip();
    if (pos_ < s_.size() && s_[pos_] == '(') {
      ++pos_;
      TypePtr t = arrow_type();
      skip();
      if (pos_ >= s_.size() || s_[pos_] != ')') fail("expected ')'");
      ++pos_;
      return t;
    }
    const std::size_t start = pos_;
    while (pos_ < s_.size() && ident_char(s_[pos_])) ++pos_;
    if (pos_ == start) fail("expected an atom");
    return atom_type(s_.substr(start, pos_ - start));
  }

  const std::string& s_;
  std::size_t pos_ = 0;
};

}  // namespace

TypePtr parse_type(const std::string& text) { return TypeParser(text).parse(); }

// ---------------------------------------------------------------- terms

TermPtr var(const std::string& x) { return std::make_shared<Term>(Term{Term::Kind::Var, x, nullptr, nullptr}); }
TermPtr constant(const std::string& c) {
  return std::make_shared<Term>(Term{Term::Kind::Const, c, nullptr, nullptr});
}
TermPtr app(TermPtr f, TermPtr a) {
  return std::make_shared<Term>(Term{Term::Kind::App, "", std::move(f), std::move(a)});
}
TermPtr app(TermPtr f, std::initializer_list<TermPtr> args) {
  for (const TermPtr& a : args) f = app(f, a);
  return f;
}
TermPtr lam(const std::string& x, TermPtr body) {
  return std::make_shared<Term>(Term{Term::Kind::Lam, x, std::move(body), nullptr});
}

bool term_equal(const TermPtr& a, const TermPtr& b) {
  if (a == b) return true;
  if (a->kind != b->kind || a->name != b->name) return false;
  switch (a->kind) {
    case Term::Kind::Var:
    case Term::Kind::Const:
      return true;
    case Term::Kind::App:
      return term_equal(a->fun, b->fun) && term_equal(a->arg, b->arg);
    case Term::Kind::Lam:
      return term_equal(a->fun, b->fun);
  }
  return false;
}

std::string term_to_string(const TermPtr& t) {
  switch (t->kind) {
    case Term::Kind::Var:
    case Term::Kind::Const:
      return t->name;
    case Term::Kind::Lam:
      return "\\" + t->name + ". " + term_to_string(t->fun);
    case Term::Kind::App: {
      std::string f = term_to_string(t->fun);
      if (t->fun->kind == Term::Kind::Lam) f = "(" + f + ")";
      std::string a = term_to_string(t->arg);
      if (t->arg->kind == Term::Kind::App || t->arg->kind == Term::Kind::Lam) a = "(" + a + ")";
      return f + " " + a;
    }
  }
  return "";
}

namespace {

class TermParser {
 public:
  TermParser(const std::string& s, const std::set<std::string>& free) : s_(s), free_(free) {}

  TermPtr parse() {
    TermPtr t = term();
    skip();
    if (pos_ != s_.size()) fail("unexpected input");
    return t;
  }

 private:
  void skip() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }
  [[noreturn]] void fail(const std::string& why) {
    throw Error(ErrorKind::Parse, "term '" + s_ + "': " + why + " at column " + std::to_string(pos_ + 1));
  }
  bool at_lambda() {
    skip();
    if (pos_ < s_.size() && s_[pos_] == '\\') return true;
    return s_.compare(pos_, 2, "\xCE\xBB") == 0;
  }
  bool at_ident_start() {
    skip();
    if (pos_ >= s_.size()) return false;
    const char c = s_[pos_];
    return !std::isspace(static_cast<unsigned char>(c)) && c != '(' && c != ')' && c != '\\' && c != '.' &&
           !at_lambda();
  }
  std::string ident() {
    skip();
    const std::size_t start = pos_;
    while (pos_ < s_.size()) {
      const char c = s_[pos_];
      if (std::isspace(static_cast<unsigned char>(c)) || c == '(' || c == ')' || c == '\\' || c == '.') break;
      if (s_.compare(pos_, 2, "\xCE\xBB") == 0) break;
      ++pos_;
    }
    if (pos_ == start) fail("expected an identifier");
    return s_.substr(start, pos_ - start);
  }
  TermPtr term() {
    if (at_lambda()) return lambda();
    TermPtr t = atom();
    while (true) {
      skip();
      if (at_lambda()) return app(t, lambda());
      if (pos_ < s_.size() && (s_[pos_] == '(' || at_ident_start())) {
        t = app(t, atom());
      } else {
        return t;
      }
    }
  }
  TermPtr lambda() {
    pos_ += s_[pos_] == '\\' ? 1 : 2;
    std::vector<std::string> binders;
    while (true) {
      skip();
      if (pos_ < s_.size() && s_[pos_] == '.') break;
      binders.push_back(ident());
    }
    if (binders.empty()) fail("lambda without binder");
    ++pos_;
    for (const std::string& b : binders) bound_.push_back(b);
    TermPtr body = term();
    for (std::size_t k = 0; k < binders.size(); ++k) bound_.pop_back();
    for (auto it = binders.rbegin(); it != binders.rend(); ++it) body = lam(*it, body);
    return body;
  }
  TermPtr atom() {
    skip();
    if (pos_ < s_.size() && s_[pos_] == '(') {
      ++pos_;
      TermPtr t = term();
      skip();
      if (pos_ >= s_.size() || s_[pos_] != ')') fail("expected ')'");
      ++pos_;
      return t;
    }
    const std::string x = ident();
    if (std::find(bound_.begin(), bound_.end(), x) != bound_.end() || free_.count(x)) return var(x);
    return constant(x);
  }

  const std::string& s_;
  const std::set<std::string>& free_;
  std::vector<std::string> bound_;
  std::size_t pos_ = 0;
};

}  // namespace

TermPtr parse_term(const std::string& text, const std::set<std::string>& free_vars) {
  return TermParser(text, free_vars).parse();
}

std::size_t term_size(const TermPtr& t) {
  switch (t->kind) {
    case Term::Kind::Var:
    case Term::Kind::Const:
      return 1;
    case Term::Kind::App:
      return 1 + term_size(t->fun) + term_size(t->arg);
    case Term::Kind::Lam:
      return 1 + term_size(t->fun);
  }
  return 0;
}

std::vector<std::string> context_order(const TermPtr& t) {
  switch (t->kind) {
    case Term::Kind::Var:
      return {t->name};
    case Term::Kind::Const:
      return {};
    case Term::Kind::App: {
      std::vector<std::string> out = context_order(t->arg);
      std::vector<std::string> f = context_order(t->fun);
      out.insert(out.end(), f.begin(), f.end());
      return out;
    }
    case Term::Kind::Lam: {
      std::vector<std::string> out = context_order(t->fun);
      out.erase(std::remove(out.begin(), out.end(), t->name), out.end());
      return out;
    }
  }
  return {};
}

namespace {

// Counts free occurrences; returns false on a non-linear binder.
bool linear_rec(const TermPtr& t, std::map<std::string, int>& free) {
  switch (t->kind) {
    case Term::Kind::Var:
      ++free[t->name];
      return true;
    case Term::Kind::Const:
      return true;
    case Term::Kind::App:
      return linear_rec(t->fun, free) && linear_rec(t->arg, free);
    case Term::Kind::Lam: {
      std::map<std::string, int> inner;
      if (!linear_rec(t->fun, inner)) return false;
      if (inner[t->name] != 1) return false;
      inner.erase(t->name);
      for (auto& [x, n] : inner) free[x] += n;
      return true;
    }
  }
  return false;
}

}  // namespace

bool is_linear(const TermPtr& t) {
  std::map<std::string, int> free;
  if (!linear_rec(t, free)) return false;
  for (auto& [x, n] : free)
    if (n != 1) return false;
  return true;
}

// ---------------------------------------------------------------- checking

namespace {

std::string ctx_to_string(const Context& ctx) {
  std::string out;
  for (std::size_t k = 0; k < ctx.size(); ++k) {
    if (k) out += ", ";
    out += ctx[k].first + ":" + type_to_string(ctx[k].second);
  }
  return out;
}

bool ctx_equal(const Context& a, const Context& b) {
  if (a.size() != b.size()) return false;
  for (std::size_t k = 0; k < a.size(); ++k)
    if (a[k].first != b[k].first || !type_equal(a[k].second, b[k].second)) return false;
  return true;
}

CheckReport bad(const Derivation& d, const std::string& why) {
  return CheckReport{false, why + " at " + ctx_to_string(d.context) + " |- " + term_to_string(d.term) + " : " +
                                (d.type ? type_to_string(d.type) : "?")};
}

}  // namespace

CheckReport check_derivation(const Signature& sigma, const Derivation& d) {
  if (!d.term || !d.type) return CheckReport{false, "incomplete node"};
  std::set<std::string> names;
  for (const auto& [x, a] : d.context)
    if (!names.insert(x).second) return bad(d, "context repeats variable " + x);
  switch (d.rule) {
    case Derivation::Rule::Id:
      if (!d.premises.empty()) return bad(d, "Id has premises");
      if (d.context.size() != 1 || d.term->kind != Term::Kind::Var || d.term->name != d.context[0].first ||
          !type_equal(d.type, d.context[0].second))
        return bad(d, "Id must conclude x:A |- x:A");
      return {};
    case Derivation::Rule::SigAxiom: {
      if (!d.premises.empty()) return bad(d, "axiom has premises");
      if (!d.context.empty() || d.term->kind != Term::Kind::Const) return bad(d, "axiom must be |- c:T(c)");
      auto it = sigma.constants.find(d.term->name);
      if (it == sigma.constants.end()) return bad(d, "unknown constant " + d.term->name);
      if (!type_equal(it->second, d.type)) return bad(d, "axiom type differs from the signature");
      return {};
    }
    case Derivation::Rule::ImpI: {
      if (d.premises.size() != 1) return bad(d, "-o I needs one premise");
      const Derivation& p = d.premises[0];
      if (d.term->kind != Term::Kind::Lam || !term_equal(d.term->fun, p.term))
        return bad(d, "-o I term must abstract the premise term");
      if (d.type->is_atom() || !type_equal(d.type->to, p.type)) return bad(d, "-o I type mismatch");
      if (d.position < 0 || d.position >= static_cast<int>(p.context.size()))
        return bad(d, "-o I discharge position out of range");
      const auto& hyp = p.context[d.position];
      if (hyp.first != d.term->name || !type_equal(hyp.second, d.type->from))
        return bad(d, "-o I discharged hypothesis does not match the binder");
      Context rest = p.context;
      rest.erase(rest.begin() + d.position);
      if (!ctx_equal(rest, d.context)) return bad(d, "-o I context bookkeeping");
      return check_derivation(sigma, p);
    }
    case Derivation::Rule::ImpE: {
      if (d.premises.size() != 2) return bad(d, "-o E needs two premises");
      const Derivation& a = d.premises[0];
      const Derivation& f = d.premises[1];
      if (d.term->kind != Term::Kind::App || !term_equal(d.term->fun, f.term) || !term_equal(d.term->arg, a.term))
        return bad(d, "-o E term must apply the function premise to the argument premise");
      if (f.type->is_atom() || !type_equal(f.type->from, a.type) || !type_equal(f.type->to, d.type))
        return bad(d, "-o E type mismatch");
      Context joined = a.context;
      joined.insert(joined.end(), f.context.begin(), f.context.end());
      if (!ctx_equal(joined, d.context)) return bad(d, "-o E context must be argument context then function context");
      CheckReport r = check_derivation(sigma, a);
      if (!r.ok) return r;
      return check_derivation(sigma, f);
    }
  }
  return {};
}

// ---------------------------------------------------------------- inference

namespace {

class Unifier {
 public:
  int fresh() { return push(Node{Kind::Var, "", -1, -1, -1}); }
  int atom(const std::string& a) { return push(Node{Kind::Atom, a, -1, -1, -1}); }
  int arrow_node(int a, int b) { return push(Node{Kind::Arrow, "", a, b, -1}); }
  int from_type(const TypePtr& t) {
    if (t->is_atom()) return atom(t->atom);
    return arrow_node(from_type(t->from), from_type(t->to));
  }

  int find(int n) {
    while (nodes_[n].kind == Kind::Var && nodes_[n].bound >= 0) n = nodes_[n].bound;
    return n;
  }

  void unify(int a, int b) {
    a = find(a);
    b = find(b);
    if (a == b) return;
    Node& na = nodes_[a];
    Node& nb = nodes_[b];
    if (na.kind == Kind::Var) return bind(a, b);
    if (nb.kind == Kind::Var) return bind(b, a);
    if (na.kind == Kind::Atom && nb.kind == Kind::Atom) {
      if (na.atom != nb.atom) throw Error(ErrorKind::Typing, "cannot match atom " + na.atom + " with " + nb.atom);
      return;
    }
    if (na.kind != nb.kind) throw Error(ErrorKind::Typing, "cannot match an atom with an implication");
    const int a1 = na.a, a2 = na.b, b1 = nb.a, b2 = nb.b;
    unify(a1, b1);
    unify(a2, b2);
  }

  TypePtr resolve(int n, const std::string& fallback) {
    n = find(n);
    const Node& nd = nodes_[n];
    if (nd.kind == Kind::Atom) return atom_type(nd.atom);
    if (nd.kind == Kind::Arrow) {
      const int a = nd.a, b = nd.b;
      return arrow(resolve(a, fallback), resolve(b, fallback));
    }
    if (fallback.empty()) throw Error(ErrorKind::Typing, "type is not determined");
    return atom_type(fallback);
  }

 private:
  enum class Kind { Var, Atom, Arrow };
  struct Node {
    Kind kind;
    std::string atom;
    int a, b;
    int bound;
  };

  int push(Node n) {
    nodes_.push_back(std::move(n));
    return static_cast<int>(nodes_.size()) - 1;
  }
  bool occurs(int v, int n) {
    n = find(n);
    if (n == v) return true;
    if (nodes_[n].kind != Kind::Arrow) return false;
    const int a = nodes_[n].a, b = nodes_[n].b;
    return occurs(v, a) || occurs(v, b);
  }
  void bind(int v, int n) {
    if (occurs(v, n)) throw Error(ErrorKind::Typing, "cyclic type");
    nodes_[v].bound = n;
  }

  std::vector<Node> nodes_;
};

struct Ann {
  int type = -1;
  int binder = -1;
  std::vector<Ann> kids;
};

Ann annotate(const Signature& sigma, Unifier& u, const TermPtr& t, std::vector<std::pair<std::string, int>>& env) {
  Ann a;
  switch (t->kind) {
    case Term::Kind::Var: {
      for (auto it = env.rbegin(); it != env.rend(); ++it) {
        if (it->first == t->name) {
          a.type = it->second;
          return a;
        }
      }
      throw Error(ErrorKind::Typing, "unbound variable " + t->name);
    }
    case Term::Kind::Const: {
      auto it = sigma.constants.find(t->name);
      if (it == sigma.constants.end()) throw Error(ErrorKind::Typing, "unknown constant " + t->name);
      a.type = u.from_type(it->second);
      return a;
    }
    case Term::Kind::App: {
      Ann f = annotate(sigma, u, t->fun, env);
      Ann x = annotate(sigma, u, t->arg, env);
      a.type = u.fresh();
      u.unify(f.type, u.arrow_node(x.type, a.type));
      a.kids = {std::move(f), std::move(x)};
      return a;
    }
    case Term::Kind::Lam: {
      a.binder = u.fresh();
      env.emplace_back(t->name, a.binder);
      Ann b = annotate(sigma, u, t->fun, env);
      env.pop_back();
      a.type = u.arrow_node(a.binder, b.type);
      a.kids = {std::move(b)};
      return a;
    }
  }
  return a;
}

Derivation build(Unifier& u, const std::string& fallback, const TermPtr& t, const Ann& a, const Context& ctx) {
  Derivation d;
  d.context = ctx;
  d.term = t;
  d.type = u.resolve(a.type, fallback);
  switch (t->kind) {
    case Term::Kind::Var:
      d.rule = Derivation::Rule::Id;
      d.type = ctx.at(0).second;
      return d;
    case Term::Kind::Const:
      d.rule = Derivation::Rule::SigAxiom;
      return d;
    case Term::Kind::App: {
      d.rule = Derivation::Rule::ImpE;
      const std::size_t n_arg = context_order(t->arg).size();
      Context gamma(ctx.begin(), ctx.begin() + n_arg);
      Context delta(ctx.begin() + n_arg, ctx.end());
      d.premises.push_back(build(u, fallback, t->arg, a.kids[1], gamma));
      d.premises.push_back(build(u, fallback, t->fun, a.kids[0], delta));
      return d;
    }
    case Term::Kind::Lam: {
      d.rule = Derivation::Rule::ImpI;
      const std::vector<std::string> order = context_order(t->fun);
      const auto pos = std::find(order.begin(), order.end(), t->name) - order.begin();
      Context inner = ctx;
      inner.insert(inner.begin() + pos, {t->name, u.resolve(a.binder, fallback)});
      d.position = static_cast<int>(pos);
      d.premises.push_back(build(u, fallback, t->fun, a.kids[0], inner));
      return d;
    }
  }
  return d;
}

}  // namespace

Derivation infer(const Signature& sigma, const Context& context, const TermPtr& t, const TypePtr& expected) {
  if (!is_linear(t)) throw Error(ErrorKind::Typing, "term " + term_to_string(t) + " is not linear");
  std::vector<std::string> names;
  for (const auto& [x, a] : context) names.push_back(x);
  if (context_order(t) != names)
    throw Error(ErrorKind::Typing, "context [" + ctx_to_string(context) + "] does not list the free variables of " +
                                       term_to_string(t) + " in order");
  Unifier u;
  std::vector<std::pair<std::string, int>> env;
  for (const auto& [x, a] : context) env.emplace_back(x, u.from_type(a));
  Ann ann = annotate(sigma, u, t, env);
  if (expected) u.unify(ann.type, u.from_type(expected));
  const std::string fallback = sigma.atoms.empty() ? "" : *sigma.atoms.begin();
  Derivation d = build(u, fallback, t, ann, context);
  CheckReport r = check_derivation(sigma, d);
  if (!r.ok) throw Error(ErrorKind::Typing, r.message);
  return d;
}

// ---------------------------------------------------------------- reduction

namespace {

TermPtr rename_rec(const TermPtr& t, std::vector<std::pair<std::string, std::string>>& env, int& counter) {
  switch (t->kind) {
    case Term::Kind::Var:
      for (auto it = env.rbegin(); it != env.rend(); ++it)
        if (it->first == t->name) return var(it->second);
      return t;
    case Term::Kind::Const:
      return t;
    case Term::Kind::App:
      return app(rename_rec(t->fun, env, counter), rename_rec(t->arg, env, counter));
    case Term::Kind::Lam: {
      const std::string fresh = "_v" + std::to_string(counter++);
      env.emplace_back(t->name, fresh);
      TermPtr body = rename_rec(t->fun, env, counter);
      env.pop_back();
      return lam(fresh, body);
    }
  }
  return t;
}

TermPtr subst(const TermPtr& t, const std::string& x, const TermPtr& s) {
  switch (t->kind) {
    case Term::Kind::Var:
      return t->name == x ? s : t;
    case Term::Kind::Const:
      return t;
    case Term::Kind::App:
      return app(subst(t->fun, x, s), subst(t->arg, x, s));
    case Term::Kind::Lam:
      return lam(t->name, subst(t->fun, x, s));
  }
  return t;
}

TermPtr step(const TermPtr& t) {
  switch (t->kind) {
    case Term::Kind::Var:
    case Term::Kind::Const:
      return nullptr;
    case Term::Kind::Lam: {
      TermPtr b = step(t->fun);
      return b ? lam(t->name, b) : nullptr;
    }
    case Term::Kind::App: {
      if (t->fun->kind == Term::Kind::Lam) return subst(t->fun->fun, t->fun->name, t->arg);
      if (TermPtr f = step(t->fun)) return app(f, t->arg);
      if (TermPtr a = step(t->arg)) return app(t->fun, a);
      return nullptr;
    }
  }
  return nullptr;
}

}  // namespace

TermPtr rename_binders(const TermPtr& t) {
  std::vector<std::pair<std::string, std::string>> env;
  int counter = 0;
  return rename_rec(t, env, counter);
}

TermPtr beta_normalize(const TermPtr& t) {
  if (!is_linear(t)) throw Error(ErrorKind::Typing, "beta_normalize needs a linear term");
  TermPtr cur = rename_binders(t);
  while (TermPtr next = step(cur)) cur = next;
  return cur;
}

// ---------------------------------------------------------------- semantics

Boundary interpret_type(const Interpretation& xi, const TypePtr& a) {
  if (a->is_atom()) {
    auto it = xi.atoms.find(a->atom);
    if (it == xi.atoms.end()) throw Error(ErrorKind::Grammar, "atom " + a->atom + " has no boundary");
    return it->second;
  }
  return boundary_tensor(boundary_dual(interpret_type(xi, a->from)), interpret_type(xi, a->to));
}

namespace {

Boundary interpret_context(const Interpretation& xi, Context::const_iterator b, Context::const_iterator e) {
  Boundary out;
  for (auto it = b; it != e; ++it) out = boundary_tensor(out, interpret_type(xi, it->second));
  return out;
}

}  // namespace

Cowordism interpret_derivation(const Interpretation& xi, const Derivation& d) {
  switch (d.rule) {
    case Derivation::Rule::Id:
      return identity(interpret_type(xi, d.type));
    case Derivation::Rule::SigAxiom: {
      auto it = xi.constants.find(d.term->name);
      if (it == xi.constants.end()) throw Error(ErrorKind::Grammar, "constant " + d.term->name + " has no body");
      if (it->second.boundary != interpret_type(xi, d.type))
        throw Error(ErrorKind::BoundaryMismatch, "body of " + d.term->name + " does not fit its type");
      return point(it->second);
    }
    case Derivation::Rule::ImpI: {
      const Derivation& p = d.premises[0];
      const Context& c = p.context;
      const Boundary gamma = interpret_context(xi, c.begin(), c.begin() + d.position);
      const Boundary a = interpret_type(xi, c[d.position].second);
      const Boundary delta = interpret_context(xi, c.begin() + d.position + 1, c.end());
      Cowordism sigma = interpret_derivation(xi, p);
      Cowordism moved = compose(tensor(symmetry(a, gamma), identity(delta)), sigma);
      return curry(moved, a.size);
    }
    case Derivation::Rule::ImpE: {
      const Derivation& arg = d.premises[0];
      const Derivation& fun = d.premises[1];
      Cowordism sigma = interpret_derivation(xi, arg);
      Cowordism tau = interpret_derivation(xi, fun);
      const Boundary a = interpret_type(xi, arg.type);
      const Boundary delta = interpret_context(xi, fun.context.begin(), fun.context.end());
      return compose(tensor(sigma, identity(delta)), uncurry(tau, a.size));
    }
  }
  throw Error(ErrorKind::Typing, "unknown rule");
}

}  // namespace coword
