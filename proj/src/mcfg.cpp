#include "coword/mcfg.hpp"

#include <algorithm>
#include <functional>

namespace coword {

McfgReport validate_mcfg(const Mcfg& g) {
  auto fail = [](std::string m) { return McfgReport{false, std::move(m)}; };
  auto ar = g.nonterminals.find(g.initial);
  if (ar == g.nonterminals.end()) return fail("initial nonterminal " + g.initial + " is not declared");
  if (ar->second != 1) return fail("initial nonterminal " + g.initial + " is not unary");
  for (const auto& [n, k] : g.nonterminals)
    if (k < 0) return fail("nonterminal " + n + " has negative arity");
  for (const Production& p : g.productions) {
    const std::string where = " in " + production_to_string(p);
    auto h = g.nonterminals.find(p.head);
    if (h == g.nonterminals.end()) return fail("undeclared nonterminal " + p.head + where);
    if (h->second != static_cast<int>(p.args.size())) return fail("wrong arity for " + p.head + where);
    std::map<std::string, int> uses;
    for (const McfgAtom& a : p.body) {
      auto b = g.nonterminals.find(a.pred);
      if (b == g.nonterminals.end()) return fail("undeclared nonterminal " + a.pred + where);
      if (b->second != static_cast<int>(a.vars.size())) return fail("wrong arity for " + a.pred + where);
      for (const std::string& v : a.vars)
        if (!uses.emplace(v, 0).second) return fail("variable " + v + " is bound twice" + where);
    }
    for (const auto& arg : p.args)
      for (const McfgSymbol& s : arg) {
        if (!s.is_var) {
          if (!g.alphabet.count(s.name)) return fail("token " + s.name + " is not in the alphabet" + where);
          continue;
        }
        auto u = uses.find(s.name);
        if (u == uses.end()) return fail("variable " + s.name + " is not bound" + where);
        ++u->second;
      }
    for (const auto& [v, n] : uses)
      if (n != 1) return fail("variable " + v + " is not used exactly once" + where);
  }
  return {};
}

std::string production_to_string(const Production& p) {
  auto atom = [](const std::string& pred, const std::vector<std::string>& items) {
    std::string s = pred + "(";
    for (std::size_t i = 0; i < items.size(); ++i) s += (i ? ", " : "") + items[i];
    return s + ")";
  };
  std::string out;
  for (std::size_t i = 0; i < p.body.size(); ++i) out += (i ? ", " : "") + atom(p.body[i].pred, p.body[i].vars);
  std::vector<std::string> args;
  for (const auto& arg : p.args) {
    std::string s;
    for (const McfgSymbol& sym : arg) s += (s.empty() ? "" : " ") + sym.name;
    args.push_back(s.empty() ? "eps" : s);
  }
  return out + (out.empty() ? "-> " : " -> ") + atom(p.head, args);
}

McfgFacts mcfg_derive(const Mcfg& g, int bound) {
  using Fact = std::vector<Word>;
  McfgFacts all, delta;
  auto fire = [&](const Production& p, const std::vector<const Fact*>& chosen, McfgFacts& next) {
    std::map<std::string, const Word*> env;
    for (std::size_t j = 0; j < p.body.size(); ++j)
      for (std::size_t i = 0; i < p.body[j].vars.size(); ++i) env[p.body[j].vars[i]] = &(*chosen[j])[i];
    Fact head;
    for (const auto& arg : p.args) {
      Word w;
      for (const McfgSymbol& s : arg) {
        if (s.is_var) {
          const Word& v = *env.at(s.name);
          w.insert(w.end(), v.begin(), v.end());
        } else {
          w.push_back(s.name);
        }
        if (static_cast<int>(w.size()) > bound) return;
      }
      head.push_back(std::move(w));
    }
    if (!all[p.head].count(head)) next[p.head].insert(std::move(head));
  };
  for (const Production& p : g.productions)
    if (p.body.empty()) fire(p, {}, delta);
  static const std::set<Fact> kNone;
  auto facts = [](const McfgFacts& m, const std::string& k) -> const std::set<Fact>& {
    auto it = m.find(k);
    return it == m.end() ? kNone : it->second;
  };
  while (!delta.empty()) {
    for (const auto& [k, s] : delta) all[k].insert(s.begin(), s.end());
    // `old` holds facts from earlier rounds; each firing uses at least one fact of the last round.
    McfgFacts old = all;
    for (const auto& [k, s] : delta)
      for (const Fact& f : s) old[k].erase(f);
    McfgFacts next;
    for (const Production& p : g.productions) {
      const std::size_t n = p.body.size();
      for (std::size_t pivot = 0; pivot < n; ++pivot) {
        std::vector<const Fact*> chosen(n);
        std::function<void(std::size_t)> rec = [&](std::size_t j) {
          if (j == n) {
            fire(p, chosen, next);
            return;
          }
          const McfgFacts& src = j < pivot ? old : j == pivot ? delta : all;
          for (const Fact& f : facts(src, p.body[j].pred)) {
            chosen[j] = &f;
            rec(j + 1);
          }
        };
        rec(0);
      }
    }
    delta = std::move(next);
  }
  return all;
}

std::set<Word> mcfg_language(const Mcfg& g, int bound) {
  std::set<Word> out;
  McfgFacts f = mcfg_derive(g, bound);
  for (const auto& fact : f[g.initial]) out.insert(fact.at(0));
  return out;
}

Boundary predicate_boundary(int arity) {
  std::vector<int> left;
  for (int i = 1; i <= arity; ++i) left.push_back(2 * i);
  return Boundary(2 * arity, left);
}

Cowordism production_cowordism(const Mcfg& g, const Production& p) {
  Boundary dom = unit_boundary();
  std::map<std::string, std::pair<int, int>> where;  // variable -> (right point, left point) in dom
  for (const McfgAtom& a : p.body) {
    const int off = dom.size;
    for (std::size_t i = 0; i < a.vars.size(); ++i)
      where[a.vars[i]] = {off + 2 * static_cast<int>(i) + 1, off + 2 * static_cast<int>(i) + 2};
    dom = boundary_tensor(dom, predicate_boundary(g.nonterminals.at(a.pred)));
  }
  const int d = dom.size;
  const Boundary cod = predicate_boundary(static_cast<int>(p.args.size()));
  std::vector<Edge> edges;
  for (std::size_t m = 1; m <= p.args.size(); ++m) {
    int start = d + 2 * static_cast<int>(m);
    Word label;
    for (const McfgSymbol& s : p.args[m - 1]) {
      if (!s.is_var) {
        label.push_back(s.name);
        continue;
      }
      const auto [r, l] = where.at(s.name);
      edges.push_back(Edge{start, label, d + 1 - l});
      start = d + 1 - r;
      label.clear();
    }
    edges.push_back(Edge{start, label, d + 2 * static_cast<int>(m) - 1});
  }
  return make_cowordism(dom, cod, make_multiword(boundary_tensor(boundary_dual(dom), cod), edges));
}

Llg mcfg_to_llg(const Mcfg& g) {
  McfgReport r = validate_mcfg(g);
  if (!r.ok) throw Error(ErrorKind::Grammar, r.message);
  Llg l;
  for (const auto& [n, k] : g.nonterminals) {
    l.atoms.insert(n);
    l.xi.atoms[n] = predicate_boundary(k);
  }
  l.alphabet = g.alphabet;
  l.initial = g.initial;
  l.separator = g.separator;
  for (std::size_t k = 0; k < g.productions.size(); ++k) {
    const Production& p = g.productions[k];
    Sequent s;
    for (auto it = p.body.rbegin(); it != p.body.rend(); ++it) s.push_back(neg(it->pred));
    s.push_back(pos(p.head));
    l.lexicon.push_back(AxiomJudgement{"p" + std::to_string(k + 1), s, production_cowordism(g, p).body});
  }
  return l;
}

Pattern pattern_of(const Multiword& m) {
  if (!m.is_regular()) throw Error(ErrorKind::InvalidMultiword, "a multiword with cycles has no pattern");
  Pattern p{m.boundary, {}};
  for (const Edge& e : m.regular) p.edges.emplace_back(e.source, e.target);
  std::sort(p.edges.begin(), p.edges.end());
  return p;
}

std::vector<Pattern> possible_patterns(const Boundary& x) {
  std::vector<int> right = x.right();
  if (right.size() != x.left.size()) return {};
  std::vector<Pattern> out;
  do {
    Pattern p{x, {}};
    for (std::size_t i = 0; i < right.size(); ++i) p.edges.emplace_back(x.left[i], right[i]);
    out.push_back(std::move(p));
  } while (std::next_permutation(right.begin(), right.end()));
  return out;
}

std::string pattern_key(const Pattern& p) {
  if (p.edges.empty()) return "-";
  std::string s;
  for (const auto& [a, b] : p.edges) s += (s.empty() ? "" : "_") + std::to_string(a) + "." + std::to_string(b);
  return s;
}

std::string pattern_predicate(const std::string& literal, const Pattern& p) {
  return literal + "#" + pattern_key(p);
}

std::vector<Production> prod_of_cowordism(const Cowordism& sigma, const std::vector<Boundary>& inputs,
                                          const std::vector<std::string>& input_names,
                                          const std::string& output_name) {
  if (inputs.size() != input_names.size()) throw Error(ErrorKind::OutOfRange, "one name per input is required");
  Boundary dom = unit_boundary();
  for (const Boundary& b : inputs) dom = boundary_tensor(dom, b);
  if (dom != sigma.dom) throw Error(ErrorKind::BoundaryMismatch, "inputs do not match the domain");
  if (!sigma.is_regular()) throw Error(ErrorKind::InvalidMultiword, "the cowordism carries cycles");

  std::vector<std::vector<Pattern>> choices;
  for (const Boundary& b : inputs) {
    choices.push_back(possible_patterns(b));
    if (choices.back().empty()) return {};
  }
  auto var_name = [](std::size_t i, std::size_t j) { return "x_" + std::to_string(i + 1) + "_" + std::to_string(j + 1); };

  std::vector<Production> out;
  std::vector<std::size_t> pick(inputs.size(), 0);
  while (true) {
    Production prod;
    std::set<std::string> vars;
    Multiword m = make_multiword(unit_boundary(), {});
    for (std::size_t i = 0; i < inputs.size(); ++i) {
      const Pattern& pi = choices[i][pick[i]];
      McfgAtom atom{pattern_predicate(input_names[i], pi), {}};
      std::vector<Edge> edges;
      for (std::size_t j = 0; j < pi.edges.size(); ++j) {
        atom.vars.push_back(var_name(i, j));
        vars.insert(atom.vars.back());
        edges.push_back(Edge{pi.edges[j].first, {atom.vars.back()}, pi.edges[j].second});
      }
      prod.body.push_back(std::move(atom));
      m = multiword_tensor(m, make_multiword(inputs[i], edges));
    }
    Cowordism c = compose(point(m), sigma);
    if (c.body.is_regular()) {
      const Pattern pc = pattern_of(c.body);
      prod.head = pattern_predicate(output_name, pc);
      for (const auto& [s, t] : pc.edges) {
        auto e = std::find_if(c.body.regular.begin(), c.body.regular.end(),
                              [s = s](const Edge& x) { return x.source == s; });
        std::vector<McfgSymbol> arg;
        for (const Token& tok : e->label) arg.push_back(McfgSymbol{vars.count(tok) > 0, tok});
        prod.args.push_back(std::move(arg));
      }
      out.push_back(std::move(prod));
    }
    std::size_t k = 0;
    while (k < pick.size() && ++pick[k] == choices[k].size()) pick[k++] = 0;
    if (k == pick.size()) break;
  }
  return out;
}

Mcfg llg_to_mcfg(const Llg& g) {
  for (const AxiomJudgement& a : g.lexicon)
    for (const FormulaPtr& f : a.sequent)
      if (has_times(f)) throw Error(ErrorKind::Unsupported, "axiom " + a.name + " contains a tensor: " + formula_to_string(f));
  const Llg f = flatten_par(g);
  Mcfg out;
  out.alphabet = f.alphabet;
  out.separator = f.separator;
  for (const Token& t : f.alphabet)
    if (t.rfind("x_", 0) == 0) throw Error(ErrorKind::Unsupported, "token " + t + " clashes with variable names");
  auto declare = [&](const std::string& name, int arity) {
    auto [it, fresh] = out.nonterminals.emplace(name, arity);
    if (!fresh && it->second != arity) throw Error(ErrorKind::Grammar, "inconsistent arity for " + name);
  };
  for (const AxiomJudgement& a : f.lexicon) {
    const int n = static_cast<int>(a.sequent.size());
    std::vector<int> sizes;
    std::vector<Boundary> lit;
    for (const FormulaPtr& x : a.sequent) {
      lit.push_back(interpret_formula(f.xi, x));
      sizes.push_back(lit.back().size);
    }
    for (int i = 0; i < n; ++i) {
      // Blocks i-1..0, then n-1..i+1, then the pivot i.
      std::vector<int> order;
      for (int k = i - 1; k >= 0; --k) order.push_back(k);
      for (int k = n - 1; k > i; --k) order.push_back(k);
      order.push_back(i);
      std::vector<Boundary> inputs;
      std::vector<std::string> names;
      Boundary dom = unit_boundary();
      for (int k = i + 1; k < n + i; ++k) {
        const FormulaPtr x = negate(a.sequent[k % n]);
        inputs.push_back(interpret_formula(f.xi, x));
        names.push_back(formula_to_string(x));
        dom = boundary_tensor(dom, inputs.back());
      }
      const Cowordism sigma = make_cowordism(dom, lit[i], permute_blocks(a.body, sizes, order));
      for (Production& p : prod_of_cowordism(sigma, inputs, names, formula_to_string(a.sequent[i]))) {
        declare(p.head, static_cast<int>(p.args.size()));
        for (const McfgAtom& b : p.body) declare(b.pred, static_cast<int>(b.vars.size()));
        out.productions.push_back(std::move(p));
      }
    }
  }
  const std::vector<Pattern> init = possible_patterns(f.xi.atoms.at(f.initial));
  if (init.size() != 1) throw Error(ErrorKind::Grammar, "the initial atom is not interpreted as a string");
  out.initial = pattern_predicate(f.initial, init[0]);
  declare(out.initial, 1);
  return out;
}

}  // namespace coword
