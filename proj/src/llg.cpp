#include "coword/llg.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <unordered_map>
#include <unordered_set>

namespace coword {

LlgReport validate_llg(const Llg& g) {
  auto bad = [](std::string m) { return LlgReport{false, std::move(m)}; };
  if (!g.atoms.count(g.initial)) return bad("initial type " + g.initial + " is not a declared atom");
  for (const std::string& a : g.atoms)
    if (!g.xi.atoms.count(a)) return bad("atom " + a + " has no boundary");
  const Boundary& s = g.xi.atoms.at(g.initial);
  if (s.size != 2 || s.left.size() != 1)
    return bad("initial type " + g.initial + " must have two endpoints with one left endpoint");
  std::set<std::string> names;
  for (const AxiomJudgement& ax : g.lexicon) {
    if (!names.insert(ax.name).second) return bad("axiom " + ax.name + " is declared twice");
    for (const FormulaPtr& f : ax.sequent) {
      std::vector<FormulaPtr> subs;
      subformulas(f, subs);
      for (const FormulaPtr& sf : subs)
        if (sf->is_literal() && !g.atoms.count(sf->atom))
          return bad("axiom " + ax.name + " uses undeclared atom " + sf->atom);
    }
    if (ax.body.boundary != interpret_sequent(g.xi, ax.sequent))
      return bad("axiom " + ax.name + ": body boundary " + boundary_to_string(ax.body.boundary) +
                 " differs from the interpreted sequent " + boundary_to_string(interpret_sequent(g.xi, ax.sequent)));
    ValidationReport r = validate(ax.body);
    if (!r.ok) return bad("axiom " + ax.name + ": " + r.message);
    if (!g.alphabet.empty()) {
      auto check_word = [&](const Word& w) {
        for (const Token& t : w)
          if (!g.alphabet.count(t)) return false;
        return true;
      };
      for (const Edge& e : ax.body.regular)
        if (!check_word(e.label)) return bad("axiom " + ax.name + " uses a token outside the alphabet");
      for (const Word& w : ax.body.singular)
        if (!check_word(w)) return bad("axiom " + ax.name + " uses a token outside the alphabet");
    }
  }
  return {};
}

bool is_flat_llg(const Llg& g) {
  return std::all_of(g.lexicon.begin(), g.lexicon.end(), [](const AxiomJudgement& a) { return is_flat(a.sequent); });
}

bool is_times_free(const Llg& g) {
  for (const AxiomJudgement& a : g.lexicon)
    for (const FormulaPtr& f : a.sequent)
      if (has_times(f)) return false;
  return true;
}

Llg flatten_par(const Llg& g) {
  Llg out = g;
  for (AxiomJudgement& a : out.lexicon) {
    for (const FormulaPtr& f : a.sequent)
      if (has_times(f)) throw Error(ErrorKind::Unsupported, "axiom " + a.name + " contains a tensor: " + f->key);
    Sequent flat;
    std::function<void(const FormulaPtr&)> split = [&](const FormulaPtr& f) {
      if (f->kind == Formula::Kind::Par) {
        split(f->left);
        split(f->right);
      } else {
        flat.push_back(f);
      }
    };
    for (const FormulaPtr& f : a.sequent) split(f);
    a.sequent = flat;
  }
  return out;
}

// ---------------------------------------------------------------- saturation

struct Item {
  enum class Rule { Axiom, Id, Par, Times, Cut };
  Sequent seq;
  Multiword body;
  int cost = 0;
  Rule rule = Rule::Axiom;
  int a = -1, b = -1;  // premise items
  int i = -1, j = -1;  // Par: positions in a; Times: i in a, j in b; Cut: i in a
  // Cut: positions of b assembling the dual of a.seq[i], and the preorder shape of that
  // assembly ('S' splits a par node, 'L' takes a whole formula).
  std::vector<int> leaves;
  std::string shape;
  int axiom = -1;
  FormulaPtr id_formula;
  std::vector<int> canon;  // raw position placed at each canonical position
};

struct ItemStore {
  std::vector<Item> items;
  std::vector<AxiomJudgement> lexicon;
};

namespace {

enum class Mode { CutOnly, Focused, Full };

std::vector<int> to_end(int n, int i) {
  std::vector<int> p;
  for (int k = 0; k < n; ++k)
    if (k != i) p.push_back(k);
  p.push_back(i);
  return p;
}

// Places `front` first (in order), then the remaining positions.
std::vector<int> to_front(int n, const std::vector<int>& front) {
  std::vector<int> p = front;
  for (int k = 0; k < n; ++k)
    if (std::find(front.begin(), front.end(), k) == front.end()) p.push_back(k);
  return p;
}

std::vector<int> pair_to_end(int n, int i, int j) {
  std::vector<int> p;
  for (int k = 0; k < n; ++k)
    if (k != i && k != j) p.push_back(k);
  p.push_back(i);
  p.push_back(j);
  return p;
}

bool is_identity(const std::vector<int>& p) {
  for (std::size_t k = 0; k < p.size(); ++k)
    if (p[k] != static_cast<int>(k)) return false;
  return true;
}

Sequent apply_perm(const Sequent& s, const std::vector<int>& p) {
  Sequent out;
  for (int k : p) out.push_back(s[k]);
  return out;
}

struct Assembly {
  std::vector<int> leaves;
  std::string shape;
  int pars = 0;
};

// All ways to assemble `d` from distinct positions of `s`, splitting par nodes when allowed.
void assemblies(const FormulaPtr& d, const Sequent& s, bool split, std::vector<bool>& used, Assembly& cur,
                const std::function<void()>& k) {
  for (int p = 0; p < static_cast<int>(s.size()); ++p) {
    if (used[p] || s[p]->key != d->key) continue;
    used[p] = true;
    cur.leaves.push_back(p);
    cur.shape.push_back('L');
    k();
    cur.shape.pop_back();
    cur.leaves.pop_back();
    used[p] = false;
  }
  if (split && d->kind == Formula::Kind::Par) {
    cur.shape.push_back('S');
    ++cur.pars;
    assemblies(d->left, s, split, used, cur, [&] { assemblies(d->right, s, split, used, cur, k); });
    --cur.pars;
    cur.shape.pop_back();
  }
}

class Saturator {
 public:
  Saturator(const Llg& g, const GenerateOptions& o, Mode mode) : g_(g), o_(o), mode_(mode) {
    store_ = std::make_shared<ItemStore>();
    store_->lexicon = g.lexicon;
    build_universe();
    goal_weight_ = weight(pos(g.initial));
    if (mode_ != Mode::Full && par_keys_.empty() && times_right_.empty()) compute_token_bounds();
    if (o_.target)
      for (const Token& t : *o_.target) ++target_counts_[t];
  }

  GenerateResult run() {
    GenerateResult res;
    const int budget = std::max(o_.budget, 0);
    levels_.assign(budget + 2, {});
    by_formula_.assign(budget + 2, {});
    if (budget >= 1) {
      for (std::size_t k = 0; k < g_.lexicon.size() && !stop(); ++k) {
        Item it;
        it.rule = Item::Rule::Axiom;
        it.axiom = static_cast<int>(k);
        it.cost = 1;
        add(std::move(it), g_.lexicon[k].sequent, g_.lexicon[k].body);
      }
      if (mode_ != Mode::CutOnly) {
        // Identities on atoms suffice: compound ones are derivable from them.
        for (const auto& [key, f] : universe_) {
          if (stop()) break;
          if (f->kind != Formula::Kind::Pos) continue;
          Item it;
          it.rule = Item::Rule::Id;
          it.id_formula = f;
          it.cost = 1;
          add(std::move(it), {negation(f), f}, identity(boundary_of(f)).body);
        }
      }
      index_level(1);
    }
    for (int c = 2; c <= budget && !stop(); ++c) {
      if (mode_ != Mode::CutOnly) unary(c);
      if (mode_ == Mode::Full) {
        for (int c1 = 1; c1 <= c - 2 && !stop(); ++c1) binary(c1, c - 1 - c1, c);
      } else {
        if (mode_ == Mode::Focused)
          for (int c1 = 1; c1 <= c - 2 && !stop(); ++c1) times_only(c1, c - 1 - c1, c);
        // A tree of axioms joined by cuts can always be grown one axiom at a time.
        for (int pars = 0; pars <= max_pars_ && !stop(); ++pars)
          if (c - 2 - pars >= 1) grow(c - 2 - pars, pars, c);
      }
      index_level(c);
    }
    for (std::size_t k = 0; k < store_->items.size(); ++k) {
      const Item& it = store_->items[k];
      if (it.seq.size() == 1 && it.seq[0]->kind == Formula::Kind::Pos && it.seq[0]->atom == g_.initial)
        res.judgements.push_back(DerivedJudgement{it.seq, it.body, it.cost, static_cast<int>(k)});
    }
    std::sort(res.judgements.begin(), res.judgements.end(), [](const DerivedJudgement& x, const DerivedJudgement& y) {
      return std::tie(x.body, x.cost) < std::tie(y.body, y.cost);
    });
    res.frontier_open =
        budget_pruned_ || (budget >= 1 && (!levels_[budget].empty() || (budget >= 2 && !levels_[budget - 1].empty())));
    res.truncated = truncated_;
    res.items = store_->items.size();
    res.store = store_;
    return res;
  }

 private:
  void build_universe() {
    std::vector<FormulaPtr> subs;
    for (const AxiomJudgement& a : g_.lexicon)
      for (const FormulaPtr& f : a.sequent) subformulas(f, subs);
    subs.push_back(pos(g_.initial));
    for (const FormulaPtr& f : subs) {
      universe_.emplace(f->key, f);
      FormulaPtr n = negate(f);
      universe_.emplace(n->key, n);
    }
    for (const auto& [key, f] : universe_) {
      if (f->kind == Formula::Kind::Par) {
        par_children_.insert(f->left->key);
        par_children_.insert(f->right->key);
        int pars = 0;
        std::vector<FormulaPtr> inner;
        subformulas(f, inner);
        for (const FormulaPtr& x : inner) pars += x->kind == Formula::Kind::Par;
        max_pars_ = std::max(max_pars_, pars);
      }
    }
    if (mode_ == Mode::Full) {
      for (const auto& [key, f] : universe_) buildable_.insert(key);
    } else if (mode_ == Mode::Focused) {
      // A formula is built by Times or Par only when its dual sits whole inside an axiom formula.
      for (const AxiomJudgement& a : g_.lexicon)
        for (const FormulaPtr& f : a.sequent) {
          std::vector<FormulaPtr> inner;
          subformulas(f, inner);
          for (const FormulaPtr& x : inner) {
            if (x->kind != Formula::Kind::Par) continue;
            std::vector<FormulaPtr> dual;
            subformulas(negate(x), dual);
            for (const FormulaPtr& y : dual) buildable_.insert(y->key);
          }
        }
    }
    if (mode_ == Mode::CutOnly) max_pars_ = 0;
    for (const auto& [key, f] : universe_) {
      if (!buildable_.count(key)) continue;
      if (f->kind == Formula::Kind::Times) times_right_[f->left->key].push_back(f->right);
      if (f->kind == Formula::Kind::Par) par_keys_.insert(key);
    }
  }

  FormulaPtr negation(const FormulaPtr& f) {
    auto it = neg_cache_.find(f->key);
    if (it != neg_cache_.end()) return it->second;
    FormulaPtr n = negate(f);
    neg_cache_.emplace(f->key, n);
    return n;
  }

  const Boundary& boundary_of(const FormulaPtr& f) {
    auto it = bcache_.find(f->key);
    if (it != bcache_.end()) return it->second;
    return bcache_.emplace(f->key, interpret_formula(g_.xi, f)).first->second;
  }

  std::vector<int> sizes(const Sequent& s) {
    std::vector<int> out;
    for (const FormulaPtr& f : s) out.push_back(boundary_of(f).size);
    return out;
  }

  // Lower bound on the cost of removing a formula: a par absorbs it for 1, a cut needs 2.
  int weight(const FormulaPtr& f) const { return par_children_.count(f->key) ? 1 : 2; }
  int potential(const Sequent& s) const {
    int p = 0;
    for (const FormulaPtr& f : s) p += weight(f);
    return p;
  }

  // Sorts formulas; ties between equal formulas are broken towards the least body.
  std::pair<std::vector<int>, Multiword> canonicalize(const Sequent& s, const Multiword& body) {
    const int n = static_cast<int>(s.size());
    std::vector<int> order(n);
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(), [&](int x, int y) { return s[x]->key < s[y]->key; });
    std::vector<std::pair<int, int>> groups;
    long long perms = 1;
    for (int k = 0; k < n;) {
      int e = k + 1;
      while (e < n && s[order[e]]->key == s[order[k]]->key) ++e;
      if (e - k > 1) {
        groups.emplace_back(k, e);
        for (int f = 2; f <= e - k; ++f) perms *= f;
      }
      k = e;
    }
    const std::vector<int> sz = sizes(s);
    if (groups.empty()) return {order, permute_blocks(body, sz, order)};
    if (perms <= 24) {
      std::vector<int> best_order;
      Multiword best;
      std::function<void(std::size_t)> rec = [&](std::size_t gi) {
        if (gi == groups.size()) {
          Multiword m = permute_blocks(body, sz, order);
          if (best_order.empty() || m < best) {
            best = std::move(m);
            best_order = order;
          }
          return;
        }
        auto [b, e] = groups[gi];
        std::sort(order.begin() + b, order.begin() + e);
        do {
          rec(gi + 1);
        } while (std::next_permutation(order.begin() + b, order.begin() + e));
      };
      rec(0);
      return {best_order, best};
    }
    // Large groups: order equal blocks by the labels of their incident edges.
    std::vector<int> start(n + 1, 0);
    for (int k = 0; k < n; ++k) start[k + 1] = start[k] + sz[k];
    std::vector<std::vector<Word>> sig(n);
    for (const Edge& e : body.regular) {
      for (int v : {e.source, e.target}) {
        const int blk = static_cast<int>(std::upper_bound(start.begin(), start.end(), v - 1) - start.begin()) - 1;
        sig[blk].push_back(e.label);
        sig[blk].back().insert(sig[blk].back().begin(), v == e.source ? ">" : "<");
      }
    }
    for (auto& sgn : sig) std::sort(sgn.begin(), sgn.end());
    for (auto [b, e] : groups)
      std::stable_sort(order.begin() + b, order.begin() + e, [&](int x, int y) { return sig[x] < sig[y]; });
    return {order, permute_blocks(body, sz, order)};
  }

  void add(Item it, const Sequent& raw, const Multiword& raw_body) {
    if (o_.max_len >= 0 && static_cast<int>(total_label_length(raw_body)) > o_.max_len) return;
    if (o_.max_formulas >= 0 && static_cast<int>(raw.size()) > o_.max_formulas) return;
    if (it.cost + potential(raw) - goal_weight_ > o_.budget) {
      budget_pruned_ = true;
      return;
    }
    if (token_bound_) {
      const long need = tokens_needed(raw);
      if (need >= kInf) return;
      if (o_.max_len >= 0 && static_cast<long>(total_label_length(raw_body)) + need > o_.max_len) return;
    }
    if (o_.drop_singular && !raw_body.is_regular()) return;
    if (o_.target) {
      std::map<Token, int> have;
      for (const Edge& e : raw_body.regular)
        for (const Token& t : e.label)
          if (++have[t] > target_counts_[t]) return;
      for (const Edge& e : raw_body.regular)
        if (!e.label.empty() &&
            std::search(o_.target->begin(), o_.target->end(), e.label.begin(), e.label.end()) == o_.target->end())
          return;
    }
    auto [perm, body] = canonicalize(raw, raw_body);
    Sequent seq = apply_perm(raw, perm);
    std::string key = sequent_to_string(seq) + "\n" + to_text(body);
    if (!seen_.insert(std::move(key)).second) return;
    if (store_->items.size() >= o_.max_items) {
      truncated_ = true;
      return;
    }
    if (o_.target && seq.size() == 1 && seq[0]->kind == Formula::Kind::Pos && seq[0]->atom == g_.initial &&
        body.is_regular() && body.regular.size() == 1 && body.regular[0].label == *o_.target)
      found_ = true;
    it.seq = std::move(seq);
    it.body = std::move(body);
    it.canon = std::move(perm);
    levels_[it.cost].push_back(static_cast<int>(store_->items.size()));
    store_->items.push_back(std::move(it));
  }

  void index_level(int c) {
    for (int id : levels_[c]) {
      const Item& it = store_->items[id];
      for (int k = 0; k < static_cast<int>(it.seq.size()); ++k) by_formula_[c][it.seq[k]->key].emplace_back(id, k);
    }
  }

  void unary(int c) {
    if (par_keys_.empty()) return;
    const std::vector<int> prev = levels_[c - 1];
    for (int id : prev) {
      const int n = static_cast<int>(store_->items[id].seq.size());
      for (int i = 0; i < n && !stop(); ++i)
        for (int j = 0; j < n && !stop(); ++j) {
          if (i == j) continue;
          const Item& p = store_->items[id];
          FormulaPtr f = par(p.seq[i], p.seq[j]);
          if (!par_keys_.count(f->key)) continue;
          const std::vector<int> perm = pair_to_end(n, i, j);
          Sequent raw = apply_perm(p.seq, perm);
          raw.pop_back();
          raw.back() = f;
          Multiword body = permute_blocks(p.body, sizes(p.seq), perm);
          Item it;
          it.rule = Item::Rule::Par;
          it.a = id;
          it.i = i;
          it.j = j;
          it.cost = c;
          add(std::move(it), raw, body);
        }
    }
  }

  // Unrestricted binary rules of the reference calculus.
  void binary(int c1, int c2, int c) {
    const std::vector<int> left = levels_[c1];
    for (int lid : left) {
      const int nl = static_cast<int>(store_->items[lid].seq.size());
      for (int i = 0; i < nl && !stop(); ++i) {
        const FormulaPtr x = store_->items[lid].seq[i];
        auto cut_it = by_formula_[c2].find(negation(x)->key);
        if (cut_it != by_formula_[c2].end()) {
          const auto partners = cut_it->second;
          for (auto [rid, j] : partners) {
            if (stop()) break;
            cut(lid, i, rid, Assembly{{j}, "L", 0}, c);
          }
        }
      }
    }
    times_only(c1, c2, c);
  }

  void times_only(int c1, int c2, int c) {
    if (times_right_.empty()) return;
    const std::vector<int> left = levels_[c1];
    for (int lid : left) {
      const int nl = static_cast<int>(store_->items[lid].seq.size());
      for (int i = 0; i < nl && !stop(); ++i) {
        const FormulaPtr x = store_->items[lid].seq[i];
        auto tr = times_right_.find(x->key);
        if (tr == times_right_.end()) continue;
        for (const FormulaPtr& y : tr->second) {
          auto yi = by_formula_[c2].find(y->key);
          if (yi == by_formula_[c2].end()) continue;
          const auto partners = yi->second;
          for (auto [rid, j] : partners) {
            if (stop()) break;
            times_step(lid, i, rid, j, c, times(x, y));
          }
        }
      }
    }
  }

  // Cuts between an item of cost c1 and a single axiom or identity, assembling the dual
  // with exactly `pars` par splits on one side.
  void grow(int c1, int pars, int c) {
    const std::vector<int> items = levels_[c1];
    const std::vector<int> atoms = levels_[1];
    for (int pid : items)
      for (int rid : atoms) {
        if (stop()) return;
        join(pid, rid, pars, c);
        if (pars > 0) join(rid, pid, pars, c);
      }
  }

  void join(int xid, int sid, int pars, int c) {
    const bool id_involved =
        store_->items[xid].rule == Item::Rule::Id || store_->items[sid].rule == Item::Rule::Id;
    const int nx = static_cast<int>(store_->items[xid].seq.size());
    for (int i = 0; i < nx && !stop(); ++i) {
      const FormulaPtr d = negation(store_->items[xid].seq[i]);
      if (pars == 0) {
        if (id_involved) continue;  // a cut against an identity changes nothing
        const Sequent ss = store_->items[sid].seq;
        for (int j = 0; j < static_cast<int>(ss.size()); ++j)
          if (ss[j]->key == d->key) cut(xid, i, sid, Assembly{{j}, "L", 0}, c);
        continue;
      }
      if (d->kind != Formula::Kind::Par) continue;
      const Sequent ss = store_->items[sid].seq;
      std::vector<bool> used(ss.size(), false);
      Assembly cur;
      std::vector<Assembly> found;
      assemblies(d, ss, true, used, cur, [&] {
        if (cur.pars == pars) found.push_back(cur);
      });
      for (const Assembly& asm_ : found) {
        if (stop()) break;
        cut(xid, i, sid, asm_, c);
      }
    }
  }

  void cut(int lid, int i, int rid, const Assembly& as, int c) {
    const Item& l = store_->items[lid];
    const Item& r = store_->items[rid];
    const int nl = static_cast<int>(l.seq.size());
    const int nr = static_cast<int>(r.seq.size());
    if (o_.max_len >= 0 &&
        static_cast<int>(total_label_length(l.body) + total_label_length(r.body)) > o_.max_len)
      return;
    int phi = potential(l.seq) + potential(r.seq) - weight(l.seq[i]);
    for (int j : as.leaves) phi -= weight(r.seq[j]);
    if (c + phi - goal_weight_ > o_.budget) {
      budget_pruned_ = true;
      return;
    }
    const std::vector<int> lp = to_end(nl, i);
    const std::vector<int> rp = to_front(nr, as.leaves);
    if (token_bound_) {
      Sequent rest(l.seq);
      rest.erase(rest.begin() + i);
      for (std::size_t k = as.leaves.size(); k < rp.size(); ++k) rest.push_back(r.seq[rp[k]]);
      const long need = tokens_needed(rest);
      if (need >= kInf) return;
      if (o_.max_len >= 0 &&
          static_cast<long>(total_label_length(l.body) + total_label_length(r.body)) + need > o_.max_len)
        return;
    }
    Sequent ls = apply_perm(l.seq, lp);
    Sequent rs = apply_perm(r.seq, rp);
    Multiword lb = permute_blocks(l.body, sizes(l.seq), lp);
    Multiword rb = permute_blocks(r.body, sizes(r.seq), rp);
    Sequent raw(ls.begin(), ls.end() - 1);
    int offset = 0;
    for (const FormulaPtr& f : raw) offset += boundary_of(f).size;
    Multiword body = iterated_contraction(multiword_tensor(lb, rb), offset, boundary_dual(boundary_of(ls.back())));
    raw.insert(raw.end(), rs.begin() + static_cast<long>(as.leaves.size()), rs.end());
    Item it;
    it.rule = Item::Rule::Cut;
    it.a = lid;
    it.i = i;
    it.b = rid;
    it.leaves = as.leaves;
    it.shape = as.shape;
    it.cost = c;
    add(std::move(it), raw, body);
  }

  void times_step(int lid, int i, int rid, int j, int c, const FormulaPtr& product) {
    const Item& l = store_->items[lid];
    const Item& r = store_->items[rid];
    const int nl = static_cast<int>(l.seq.size());
    const int nr = static_cast<int>(r.seq.size());
    if (o_.max_len >= 0 &&
        static_cast<int>(total_label_length(l.body) + total_label_length(r.body)) > o_.max_len)
      return;
    const int phi = potential(l.seq) + potential(r.seq) - weight(l.seq[i]) - weight(r.seq[j]) + weight(product);
    if (c + phi - goal_weight_ > o_.budget) {
      budget_pruned_ = true;
      return;
    }
    const std::vector<int> lp = to_end(nl, i);
    const std::vector<int> rp = to_front(nr, {j});
    Sequent ls = apply_perm(l.seq, lp);
    Sequent rs = apply_perm(r.seq, rp);
    Sequent raw(ls.begin(), ls.end() - 1);
    raw.push_back(product);
    raw.insert(raw.end(), rs.begin() + 1, rs.end());
    Multiword body = multiword_tensor(permute_blocks(l.body, sizes(l.seq), lp), permute_blocks(r.body, sizes(r.seq), rp));
    Item it;
    it.rule = Item::Rule::Times;
    it.a = lid;
    it.i = i;
    it.b = rid;
    it.j = j;
    it.cost = c;
    add(std::move(it), raw, body);
  }

  const Llg& g_;
  const GenerateOptions& o_;
  const Mode mode_;
  std::shared_ptr<ItemStore> store_;
  std::vector<std::vector<int>> levels_;
  std::vector<std::unordered_map<std::string, std::vector<std::pair<int, int>>>> by_formula_;
  std::unordered_set<std::string> seen_;
  std::map<std::string, FormulaPtr> universe_;
  std::unordered_set<std::string> buildable_;
  std::unordered_map<std::string, std::vector<FormulaPtr>> times_right_;
  std::unordered_set<std::string> par_keys_;
  std::unordered_set<std::string> par_children_;
  std::unordered_map<std::string, FormulaPtr> neg_cache_;
  std::unordered_map<std::string, Boundary> bcache_;
  std::map<Token, int> target_counts_;
  // Token lower bounds when every formula is removed by a cut against an axiom or identity.
  // tmin_: tokens any completion removing the formula adds; tstar_: the same when that
  // completion may keep the goal formula open.
  static constexpr long kInf = 1L << 40;
  bool token_bound_ = false;
  std::unordered_map<std::string, long> tmin_, tstar_;

  long tmin(const FormulaPtr& f) const {
    auto it = tmin_.find(f->key);
    return it == tmin_.end() ? kInf : it->second;
  }
  long tstar(const FormulaPtr& f) const {
    auto it = tstar_.find(f->key);
    return it == tstar_.end() ? kInf : it->second;
  }

  // Cost of removing every unskipped formula, plainly and with one goal carrier.
  std::pair<long, long> rest_cost(const Sequent& s, const std::vector<bool>& skip) const {
    long plain = 0;
    for (std::size_t k = 0; k < s.size(); ++k)
      if (!skip[k]) plain = std::min(kInf, plain + tmin(s[k]));
    long star = plain;
    for (std::size_t k = 0; k < s.size(); ++k) {
      if (skip[k]) continue;
      long v = tstar(s[k]);
      for (std::size_t o = 0; o < s.size() && v < kInf; ++o)
        if (o != k && !skip[o]) v = std::min(kInf, v + tmin(s[o]));
      star = std::min(star, v);
    }
    return {plain, star};
  }

  long tokens_needed(const Sequent& s) const { return rest_cost(s, std::vector<bool>(s.size(), false)).second; }

  void compute_token_bounds() {
    struct Partner {
      Sequent seq;
      long tok;
    };
    std::vector<Partner> partners;
    for (const AxiomJudgement& a : g_.lexicon) partners.push_back({a.sequent, static_cast<long>(total_label_length(a.body))});
    if (mode_ != Mode::CutOnly)
      for (const auto& [key, f] : universe_)
        if (f->kind == Formula::Kind::Pos) partners.push_back({{negate(f), f}, 0});
    const std::string goal = pos(g_.initial)->key;
    for (const auto& [key, f] : universe_) {
      tmin_[key] = kInf;
      tstar_[key] = key == goal ? 0 : kInf;
    }
    const bool split = mode_ != Mode::CutOnly;
    bool changed = true;
    while (changed) {
      changed = false;
      for (const auto& [key, f] : universe_) {
        long best = tmin_[key], best_star = tstar_[key];
        const FormulaPtr d = negate(f);
        for (const Partner& p : partners) {
          const int n = static_cast<int>(p.seq.size());
          // The partner supplies the dual, whole or assembled from several of its formulas.
          std::vector<bool> used(n, false);
          Assembly cur;
          assemblies(d, p.seq, split, used, cur, [&] {
            std::vector<bool> skip(n, false);
            for (int l : cur.leaves) skip[l] = true;
            auto [plain, star] = rest_cost(p.seq, skip);
            best = std::min(best, std::min(kInf, p.tok + plain));
            best_star = std::min(best_star, std::min(kInf, p.tok + star));
          });
          if (!split) continue;
          // The formula is one of several leaves cut against a tensor of the partner; the
          // partner's share is split evenly over the most leaves such a cut can take.
          for (int t = 0; t < n; ++t) {
            const FormulaPtr x = negate(p.seq[t]);
            if (x->kind != Formula::Kind::Par) continue;
            int leaves = 0;
            bool hit = false;
            std::function<void(const FormulaPtr&, bool)> walk = [&](const FormulaPtr& y, bool root) {
              if (!root && y->key == key) hit = true;
              if (y->kind == Formula::Kind::Par) {
                walk(y->left, false);
                walk(y->right, false);
              } else {
                ++leaves;
              }
            };
            walk(x, true);
            if (!hit) continue;
            std::vector<bool> skip(n, false);
            skip[t] = true;
            auto [plain, star] = rest_cost(p.seq, skip);
            if (plain < kInf) best = std::min(best, (p.tok + plain) / leaves);
            if (star < kInf) best_star = std::min(best_star, (p.tok + star) / leaves);
          }
        }
        best_star = std::min(best_star, best);
        if (best < tmin_[key] || best_star < tstar_[key]) {
          tmin_[key] = best;
          tstar_[key] = best_star;
          changed = true;
        }
      }
    }
    token_bound_ = true;
  }

  int max_pars_ = 0;
  int goal_weight_ = 2;
  bool budget_pruned_ = false;
  bool truncated_ = false;
  bool found_ = false;  // the target word was derived
  bool stop() const { return truncated_ || found_; }
};

MllProof with_ex(MllProof p, const std::vector<int>& perm) {
  if (is_identity(perm)) return p;
  return ex_proof(std::move(p), perm);
}

// Folds the formulas listed in `slots` (current positions, in leaf order) into `d` following
// `shape`, leaving the result last. `slots` is updated as formulas move.
void fold(MllProof& p, const FormulaPtr& d, const std::string& shape, std::size_t& at, std::vector<int>& slots,
          std::size_t& next_leaf, int& result) {
  const char node = shape.at(at++);
  if (node == 'L') {
    result = slots.at(next_leaf++);
    return;
  }
  int l = -1, r = -1;
  fold(p, d->left, shape, at, slots, next_leaf, l);
  fold(p, d->right, shape, at, slots, next_leaf, r);
  const int n = static_cast<int>(p.conclusion.size());
  const std::vector<int> perm = pair_to_end(n, l, r);
  // Track where every remaining slot moves.
  std::vector<int> where(n);
  for (int k = 0; k < n; ++k) where[perm[k]] = k;
  p = par_proof(with_ex(std::move(p), perm));
  for (int& s : slots) s = s == l || s == r ? -1 : where[s];
  result = n - 2;
}

MllProof rebuild(const ItemStore& st, int id) {
  const Item& it = st.items.at(id);
  MllProof raw{};
  switch (it.rule) {
    case Item::Rule::Axiom:
      raw = axiom_proof(st.lexicon[it.axiom]);
      break;
    case Item::Rule::Id:
      raw = id_proof(it.id_formula);
      break;
    case Item::Rule::Par: {
      const int n = static_cast<int>(st.items[it.a].seq.size());
      raw = par_proof(with_ex(rebuild(st, it.a), pair_to_end(n, it.i, it.j)));
      break;
    }
    case Item::Rule::Times: {
      const int nl = static_cast<int>(st.items[it.a].seq.size());
      const int nr = static_cast<int>(st.items[it.b].seq.size());
      raw = times_proof(with_ex(rebuild(st, it.a), to_end(nl, it.i)), with_ex(rebuild(st, it.b), to_front(nr, {it.j})));
      break;
    }
    case Item::Rule::Cut: {
      const int nl = static_cast<int>(st.items[it.a].seq.size());
      MllProof l = with_ex(rebuild(st, it.a), to_end(nl, it.i));
      MllProof r = rebuild(st, it.b);
      const FormulaPtr d = negate(st.items[it.a].seq[it.i]);
      std::vector<int> slots = it.leaves;
      std::size_t at = 0, next_leaf = 0;
      int result = -1;
      fold(r, d, it.shape, at, slots, next_leaf, result);
      r = with_ex(std::move(r), to_front(static_cast<int>(r.conclusion.size()), {result}));
      raw = cut_proof(std::move(l), std::move(r));
      break;
    }
  }
  return with_ex(std::move(raw), it.canon);
}

}  // namespace

GenerateResult generate(const Llg& g, const GenerateOptions& opts) {
  LlgReport r = validate_llg(g);
  if (!r.ok) throw Error(ErrorKind::Grammar, r.message);
  Mode mode = Mode::Focused;
  if (opts.strategy == Strategy::Full) mode = Mode::Full;
  if (opts.strategy == Strategy::CutOnly || (opts.strategy == Strategy::Auto && is_flat_llg(g))) {
    if (!is_flat_llg(g)) throw Error(ErrorKind::Unsupported, "cut-only generation needs literal-only axiom sequents");
    mode = Mode::CutOnly;
  }
  return Saturator(g, opts, mode).run();
}

GenerateResult generate_cut_only(const Llg& g, const GenerateOptions& opts) {
  GenerateOptions o = opts;
  o.strategy = Strategy::CutOnly;
  return generate(g, o);
}

MllProof provenance(const GenerateResult& r, int item) {
  if (!r.store) throw Error(ErrorKind::OutOfRange, "result has no item store");
  return rebuild(*r.store, item);
}

namespace {

std::optional<Word> single_word(const Multiword& m) {
  if (!m.is_regular() || m.regular.size() != 1) return std::nullopt;
  return m.regular[0].label;
}

}  // namespace

LanguageResult language(const Llg& g, const GenerateOptions& opts) {
  GenerateOptions o = opts;
  o.drop_singular = true;
  GenerateResult r = generate(g, o);
  LanguageResult out;
  for (const DerivedJudgement& j : r.judgements)
    if (auto w = single_word(j.body)) out.words.insert(*w);
  out.frontier_open = r.frontier_open;
  out.truncated = r.truncated;
  return out;
}

MemberResult member(const Llg& g, const Word& w, GenerateOptions opts) {
  if (opts.max_len < 0 || opts.max_len > static_cast<int>(w.size())) opts.max_len = static_cast<int>(w.size());
  opts.drop_singular = true;
  opts.target = w;
  const int budget = opts.budget;
  MemberResult out;
  out.budget = budget;
  // Iterative deepening: smaller budgets prune much harder.
  for (int b = std::min(budget, 1);; b = std::min(budget, b + 2)) {
    opts.budget = b;
    GenerateResult r = generate(g, opts);
    for (const DerivedJudgement& j : r.judgements) {
      auto x = single_word(j.body);
      if (x && *x == w) {
        out.yes = true;
        out.budget = j.cost;
        out.proof = provenance(r, j.item);
        return out;
      }
    }
    if (b >= budget) break;
  }
  return out;
}

}  // namespace coword
