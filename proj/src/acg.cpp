#include "coword/acg.hpp"

#include <functional>

namespace coword {

Signature string_signature(const std::set<std::string>& alphabet) {
  Signature s;
  s.atoms = {"O"};
  for (const std::string& c : alphabet) s.constants[c] = str_type();
  return s;
}

TypePtr str_type() { return arrow(atom_type("O"), atom_type("O")); }

Interpretation xi0(const std::set<std::string>& alphabet) {
  Interpretation xi;
  xi.atoms["O"] = Boundary(1, {});
  for (const std::string& c : alphabet) xi.constants[c] = make_multiword(Boundary(2, {1}), {{1, {c}, 2}});
  return xi;
}

TermPtr rho(const Word& w, const std::set<std::string>& alphabet) {
  TermPtr body = var("x");
  for (const Token& a : w) {
    if (!alphabet.count(a)) throw Error(ErrorKind::Grammar, "token '" + a + "' is not in the alphabet");
    body = app(constant(a), body);
  }
  return lam("x", body);
}

Word unrho(const TermPtr& t, const std::set<std::string>& alphabet) {
  infer(string_signature(alphabet), {}, t, str_type());
  TermPtr n = beta_normalize(t);
  if (n->kind == Term::Kind::Const) return {n->name};
  if (n->kind != Term::Kind::Lam) throw Error(ErrorKind::Typing, "unexpected normal form " + term_to_string(n));
  Word rev;
  TermPtr cur = n->fun;
  while (cur->kind == Term::Kind::App) {
    if (cur->fun->kind != Term::Kind::Const)
      throw Error(ErrorKind::Typing, "unexpected normal form " + term_to_string(n));
    rev.push_back(cur->fun->name);
    cur = cur->arg;
  }
  if (cur->kind != Term::Kind::Var || cur->name != n->name)
    throw Error(ErrorKind::Typing, "unexpected normal form " + term_to_string(n));
  return Word(rev.rbegin(), rev.rend());
}

TypePtr phi_type(const StringAcg& g, const TypePtr& a) {
  if (a->is_atom()) {
    auto it = g.type_map.find(a->atom);
    if (it == g.type_map.end()) throw Error(ErrorKind::Grammar, "atom " + a->atom + " has no image");
    return it->second;
  }
  return arrow(phi_type(g, a->from), phi_type(g, a->to));
}

TermPtr phi_term(const StringAcg& g, const TermPtr& t) {
  switch (t->kind) {
    case Term::Kind::Var:
      return t;
    case Term::Kind::Const: {
      auto it = g.term_map.find(t->name);
      if (it == g.term_map.end()) throw Error(ErrorKind::Grammar, "constant " + t->name + " has no image");
      return it->second;
    }
    case Term::Kind::App:
      return app(phi_term(g, t->fun), phi_term(g, t->arg));
    case Term::Kind::Lam:
      return lam(t->name, phi_term(g, t->fun));
  }
  return t;
}

AcgReport validate_acg(const StringAcg& g) {
  auto fail = [](std::string c, std::string m) { return AcgReport{false, std::move(c), std::move(m)}; };
  if (!g.abstract_sig.atoms.count(g.initial)) return fail("", "initial type " + g.initial + " is not an atom");
  for (const std::string& a : g.abstract_sig.atoms)
    if (!g.type_map.count(a)) return fail("", "atom " + a + " has no image");
  for (const auto& [a, t] : g.type_map) {
    std::set<std::string> used;
    collect_atoms(t, used);
    if (used != std::set<std::string>{"O"} || !g.abstract_sig.atoms.count(a))
      return fail("", "type map entry " + a + " is not a string type");
  }
  if (!type_equal(phi_type(g, atom_type(g.initial)), str_type()))
    return fail("", "initial type " + g.initial + " does not map to str");
  const Signature obj = string_signature(g.alphabet);
  for (const auto& [c, type] : g.abstract_sig.constants) {
    auto it = g.term_map.find(c);
    if (it == g.term_map.end()) return fail(c, "constant " + c + " has no lexical entry");
    try {
      infer(obj, {}, it->second, phi_type(g, type));
    } catch (const Error& e) {
      return fail(c, "lexical entry of " + c + " is ill typed: " + e.what());
    }
  }
  return {};
}

Interpretation acg_interpret(const StringAcg& g) {
  const Interpretation base = xi0(g.alphabet);
  const Signature obj = string_signature(g.alphabet);
  Interpretation xi;
  for (const std::string& a : g.abstract_sig.atoms) xi.atoms[a] = interpret_type(base, phi_type(g, atom_type(a)));
  for (const auto& [c, type] : g.abstract_sig.constants)
    xi.constants[c] = interpret_derivation(base, infer(obj, {}, g.term_map.at(c), phi_type(g, type))).body;
  return xi;
}

namespace {

struct Enumerator {
  const Signature& sigma;
  const std::map<std::string, int>& weight;
  int max_tokens;
  bool open = false;

  struct Result {
    TermPtr term;
    int size;
    int tokens;
  };
  using Ctx = std::vector<std::pair<std::string, TypePtr>>;

  static void spine(const TypePtr& t, std::vector<TypePtr>& args, TypePtr& target) {
    TypePtr cur = t;
    while (!cur->is_atom()) {
      args.push_back(cur->from);
      cur = cur->to;
    }
    target = cur;
  }

  int token_weight(const std::string& c) const {
    auto it = weight.find(c);
    return it == weight.end() ? 0 : it->second;
  }

  std::vector<Result> gen(const Ctx& ctx, const TypePtr& type, int budget, int tokens, int depth) {
    std::vector<Result> out;
    if (max_tokens >= 0 && tokens > max_tokens) return out;
    if (budget < 1) {
      open = true;
      return out;
    }
    if (!type->is_atom()) {
      const std::string x = "x" + std::to_string(depth);
      Ctx inner = ctx;
      inner.emplace_back(x, type->from);
      for (Result& r : gen(inner, type->to, budget - 1, tokens, depth + 1))
        out.push_back({lam(x, r.term), r.size + 1, r.tokens});
      return out;
    }
    auto try_head = [&](TermPtr head, const TypePtr& htype, const Ctx& rest, int head_tokens) {
      std::vector<TypePtr> args;
      TypePtr target;
      spine(htype, args, target);
      if (target->atom != type->atom) return;
      const int n = static_cast<int>(args.size());
      if (max_tokens >= 0 && tokens + head_tokens > max_tokens) return;
      if (n == 0) {
        if (rest.empty()) out.push_back({head, 1, head_tokens});
        return;
      }
      if (budget < 1 + 2 * n) {
        open = true;
        return;
      }
      // Every context variable goes to exactly one argument.
      std::vector<int> owner(rest.size(), 0);
      while (true) {
        std::vector<Ctx> parts(n);
        for (std::size_t v = 0; v < rest.size(); ++v) parts[owner[v]].push_back(rest[v]);
        std::function<void(int, TermPtr, int, int)> fill = [&](int k, TermPtr acc, int size, int tok) {
          if (k == n) {
            if (max_tokens < 0 || tokens + tok <= max_tokens) out.push_back({acc, size, tok});
            return;
          }
          const int reserve = 2 * (n - k - 1);
          for (Result& r : gen(parts[k], args[k], budget - size - 1 - reserve, tokens + tok, depth))
            fill(k + 1, app(acc, r.term), size + 1 + r.size, tok + r.tokens);
        };
        fill(0, head, 1, head_tokens);
        std::size_t v = 0;
        while (v < owner.size() && ++owner[v] == n) owner[v++] = 0;
        if (v == owner.size()) break;
      }
    };
    for (const auto& [c, ctype] : sigma.constants) try_head(constant(c), ctype, ctx, token_weight(c));
    for (std::size_t i = 0; i < ctx.size(); ++i) {
      Ctx rest = ctx;
      rest.erase(rest.begin() + static_cast<long>(i));
      try_head(var(ctx[i].first), ctx[i].second, rest, 0);
    }
    return out;
  }
};

void split_pars(const FormulaPtr& f, Sequent& out) {
  if (f->kind == Formula::Kind::Par) {
    split_pars(f->left, out);
    split_pars(f->right, out);
  } else {
    out.push_back(f);
  }
}

int count_constants(const TermPtr& t) {
  switch (t->kind) {
    case Term::Kind::Var:
      return 0;
    case Term::Kind::Const:
      return 1;
    case Term::Kind::App:
      return count_constants(t->fun) + count_constants(t->arg);
    case Term::Kind::Lam:
      return count_constants(t->fun);
  }
  return 0;
}

}  // namespace

TermEnumeration enumerate_terms(const Signature& sigma, const TypePtr& type, int budget,
                                const std::map<std::string, int>& weight, int max_tokens) {
  Enumerator e{sigma, weight, max_tokens};
  TermEnumeration out;
  for (auto& r : e.gen({}, type, budget, 0, 0)) out.terms.push_back(r.term);
  out.frontier_open = e.open;
  return out;
}

Word acg_yield(const StringAcg& g, const TermPtr& abstract_term) {
  return unrho(phi_term(g, abstract_term), g.alphabet);
}

AcgLanguageResult acg_language(const StringAcg& g, int budget, int max_len) {
  std::map<std::string, int> weight;
  for (const auto& [c, t] : g.term_map) weight[c] = count_constants(t);
  TermEnumeration e = enumerate_terms(g.abstract_sig, atom_type(g.initial), budget, weight, max_len);
  AcgLanguageResult out;
  out.frontier_open = e.frontier_open;
  for (const TermPtr& t : e.terms) out.words.insert(acg_yield(g, t));
  return out;
}

Llg acg_to_llg(const StringAcg& g) {
  const Interpretation xi = acg_interpret(g);
  Llg l;
  l.atoms = g.abstract_sig.atoms;
  l.xi.atoms = xi.atoms;
  l.alphabet = g.alphabet;
  l.initial = g.initial;
  l.separator = g.separator;
  for (const auto& [c, type] : g.abstract_sig.constants) {
    Sequent s;
    split_pars(formula_of_type(type), s);
    l.lexicon.push_back(AxiomJudgement{c, s, xi.constants.at(c)});
  }
  return l;
}

}  // namespace coword
