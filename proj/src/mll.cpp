#include "coword/mll.hpp"

#include <algorithm>
#include <cctype>

namespace coword {

namespace {

std::string wrap(const FormulaPtr& a) { return a->is_literal() ? a->key : "(" + a->key + ")"; }

FormulaPtr make(Formula::Kind k, std::string atom, FormulaPtr l, FormulaPtr r) {
  auto f = std::make_shared<Formula>();
  f->kind = k;
  f->atom = std::move(atom);
  f->left = std::move(l);
  f->right = std::move(r);
  switch (k) {
    case Formula::Kind::Pos:
      f->key = f->atom;
      break;
    case Formula::Kind::Neg:
      f->key = "~" + f->atom;
      break;
    case Formula::Kind::Times:
      f->key = wrap(f->left) + " * " + wrap(f->right);
      break;
    case Formula::Kind::Par:
      f->key = wrap(f->left) + " | " + wrap(f->right);
      break;
  }
  return f;
}

}  // namespace

FormulaPtr pos(const std::string& p) { return make(Formula::Kind::Pos, p, nullptr, nullptr); }
FormulaPtr neg(const std::string& p) { return make(Formula::Kind::Neg, p, nullptr, nullptr); }
FormulaPtr times(FormulaPtr a, FormulaPtr b) { return make(Formula::Kind::Times, "", std::move(a), std::move(b)); }
FormulaPtr par(FormulaPtr a, FormulaPtr b) { return make(Formula::Kind::Par, "", std::move(a), std::move(b)); }

FormulaPtr negate(const FormulaPtr& a) {
  switch (a->kind) {
    case Formula::Kind::Pos:
      return neg(a->atom);
    case Formula::Kind::Neg:
      return pos(a->atom);
    case Formula::Kind::Times:
      return par(negate(a->right), negate(a->left));
    case Formula::Kind::Par:
      return times(negate(a->right), negate(a->left));
  }
  return a;
}

bool formula_equal(const FormulaPtr& a, const FormulaPtr& b) { return a->key == b->key; }
std::string formula_to_string(const FormulaPtr& a) { return a->key; }

namespace {

class FormulaParser {
 public:
  explicit FormulaParser(const std::string& s) : s_(s) {}
  FormulaPtr parse() {
    FormulaPtr f = par_level();
    skip();
    if (pos_ != s_.size()) fail("trailing input");
    return f;
  }

 private:
  void skip() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }
  [[noreturn]] void fail(const std::string& why) {
    throw Error(ErrorKind::Parse, "formula '" + s_ + "': " + why + " at column " + std::to_string(pos_ + 1));
  }
  FormulaPtr par_level() {
    FormulaPtr l = times_level();
    skip();
    if (pos_ < s_.size() && s_[pos_] == '|') {
      ++pos_;
      return par(l, par_level());
    }
    return l;
  }
  FormulaPtr times_level() {
    FormulaPtr l = primary();
    skip();
    if (pos_ < s_.size() && s_[pos_] == '*') {
      ++pos_;
      return times(l, times_level());
    }
    return l;
  }
  FormulaPtr primary() {
    skip();
    if (pos_ < s_.size() && s_[pos_] == '(') {
      ++pos_;
      FormulaPtr f = par_level();
      skip();
      if (pos_ >= s_.size() || s_[pos_] != ')') fail("expected ')'");
      ++pos_;
      return f;
    }
    bool negative = false;
    if (pos_ < s_.size() && s_[pos_] == '~') {
      negative = true;
      ++pos_;
      skip();
      if (pos_ < s_.size() && s_[pos_] == '(') return negate(primary());
    }
    const std::size_t start = pos_;
    while (pos_ < s_.size() && (std::isalnum(static_cast<unsigned char>(s_[pos_])) || s_[pos_] == '_' ||
                                static_cast<unsigned char>(s_[pos_]) >= 0x80))
      ++pos_;
    if (pos_ == start) fail("expected a literal");
    const std::string name = s_.substr(start, pos_ - start);
    return negative ? neg(name) : pos(name);
  }

  const std::string& s_;
  std::size_t pos_ = 0;
};

}  // namespace

FormulaPtr parse_formula(const std::string& text) { return FormulaParser(text).parse(); }

FormulaPtr formula_of_type(const TypePtr& t) {
  if (t->is_atom()) return pos(t->atom);
  return par(negate(formula_of_type(t->from)), formula_of_type(t->to));
}

void subformulas(const FormulaPtr& a, std::vector<FormulaPtr>& out) {
  out.push_back(a);
  if (!a->is_literal()) {
    subformulas(a->left, out);
    subformulas(a->right, out);
  }
}

bool sequent_equal(const Sequent& a, const Sequent& b) {
  if (a.size() != b.size()) return false;
  for (std::size_t k = 0; k < a.size(); ++k)
    if (!formula_equal(a[k], b[k])) return false;
  return true;
}

std::string sequent_to_string(const Sequent& s) {
  std::string out;
  for (std::size_t k = 0; k < s.size(); ++k) {
    if (k) out += ", ";
    out += s[k]->key;
  }
  return out;
}

Sequent parse_sequent(const std::string& text) {
  Sequent out;
  int depth = 0;
  std::string cur;
  auto flush = [&]() {
    if (cur.find_first_not_of(" \t") != std::string::npos) out.push_back(parse_formula(cur));
    else if (!out.empty() || text.find(',') != std::string::npos)
      throw Error(ErrorKind::Parse, "empty formula in sequent '" + text + "'");
    cur.clear();
  };
  for (char c : text) {
    if (c == '(') ++depth;
    if (c == ')') --depth;
    if (c == ',' && depth == 0) {
      flush();
    } else {
      cur += c;
    }
  }
  flush();
  return out;
}

bool has_times(const FormulaPtr& a) {
  if (a->is_literal()) return false;
  return a->kind == Formula::Kind::Times || has_times(a->left) || has_times(a->right);
}

bool is_flat(const Sequent& s) {
  return std::all_of(s.begin(), s.end(), [](const FormulaPtr& f) { return f->is_literal(); });
}

Boundary interpret_formula(const Interpretation& xi, const FormulaPtr& a) {
  switch (a->kind) {
    case Formula::Kind::Pos:
    case Formula::Kind::Neg: {
      auto it = xi.atoms.find(a->atom);
      if (it == xi.atoms.end()) throw Error(ErrorKind::Grammar, "atom " + a->atom + " has no boundary");
      return a->kind == Formula::Kind::Pos ? it->second : boundary_dual(it->second);
    }
    case Formula::Kind::Times:
    case Formula::Kind::Par:
      return boundary_tensor(interpret_formula(xi, a->left), interpret_formula(xi, a->right));
  }
  return Boundary{};
}

Boundary interpret_sequent(const Interpretation& xi, const Sequent& s) {
  Boundary out;
  for (const FormulaPtr& f : s) out = boundary_tensor(out, interpret_formula(xi, f));
  return out;
}

// ---------------------------------------------------------------- proofs

MllProof id_proof(const FormulaPtr& x) { return MllProof{MllProof::Rule::Id, {negate(x), x}, {}, {}, ""}; }

MllProof axiom_proof(const AxiomJudgement& a) { return MllProof{MllProof::Rule::Axiom, a.sequent, {}, {}, a.name}; }

MllProof cut_proof(MllProof left, MllProof right) {
  Sequent c(left.conclusion.begin(), left.conclusion.end() - (left.conclusion.empty() ? 0 : 1));
  if (!right.conclusion.empty()) c.insert(c.end(), right.conclusion.begin() + 1, right.conclusion.end());
  return MllProof{MllProof::Rule::Cut, c, {std::move(left), std::move(right)}, {}, ""};
}

MllProof ex_proof(MllProof p, std::vector<int> permutation) {
  Sequent c;
  for (int k : permutation) c.push_back(p.conclusion.at(k));
  return MllProof{MllProof::Rule::Ex, c, {std::move(p)}, std::move(permutation), ""};
}

MllProof swap_proof(MllProof p, int i) {
  std::vector<int> perm(p.conclusion.size());
  for (std::size_t k = 0; k < perm.size(); ++k) perm[k] = static_cast<int>(k);
  std::swap(perm.at(i), perm.at(i + 1));
  return ex_proof(std::move(p), perm);
}

MllProof par_proof(MllProof p) {
  Sequent c = p.conclusion;
  if (c.size() < 2) throw Error(ErrorKind::Grammar, "par needs two formulas");
  FormulaPtr y = c.back();
  c.pop_back();
  FormulaPtr x = c.back();
  c.back() = par(x, y);
  return MllProof{MllProof::Rule::Par, c, {std::move(p)}, {}, ""};
}

MllProof times_proof(MllProof left, MllProof right) {
  if (left.conclusion.empty() || right.conclusion.empty()) throw Error(ErrorKind::Grammar, "times needs formulas");
  Sequent c(left.conclusion.begin(), left.conclusion.end() - 1);
  c.push_back(times(left.conclusion.back(), right.conclusion.front()));
  c.insert(c.end(), right.conclusion.begin() + 1, right.conclusion.end());
  return MllProof{MllProof::Rule::Times, c, {std::move(left), std::move(right)}, {}, ""};
}

namespace {

CheckReport fail_at(const MllProof& pf, const std::string& why) {
  return CheckReport{false, why + " at |- " + sequent_to_string(pf.conclusion)};
}

}  // namespace

CheckReport check_proof(const MllProof& pf, const std::vector<AxiomJudgement>& lexicon) {
  const Sequent& c = pf.conclusion;
  auto arity = [&](std::size_t n) { return pf.premises.size() == n; };
  switch (pf.rule) {
    case MllProof::Rule::Id:
      if (!arity(0) || c.size() != 2 || !formula_equal(c[0], negate(c[1]))) return fail_at(pf, "Id must conclude |- X^, X");
      return {};
    case MllProof::Rule::Axiom: {
      if (!arity(0)) return fail_at(pf, "axiom has premises");
      for (const AxiomJudgement& a : lexicon)
        if (a.name == pf.axiom) {
          if (!sequent_equal(a.sequent, c)) return fail_at(pf, "axiom " + a.name + " has a different sequent");
          return {};
        }
      return fail_at(pf, "unknown axiom " + pf.axiom);
    }
    case MllProof::Rule::Cut: {
      if (!arity(2)) return fail_at(pf, "Cut needs two premises");
      const Sequent& l = pf.premises[0].conclusion;
      const Sequent& r = pf.premises[1].conclusion;
      if (l.empty() || r.empty() || !formula_equal(r.front(), negate(l.back())))
        return fail_at(pf, "Cut formulas are not dual");
      Sequent expect(l.begin(), l.end() - 1);
      expect.insert(expect.end(), r.begin() + 1, r.end());
      if (!sequent_equal(expect, c)) return fail_at(pf, "Cut context bookkeeping");
      break;
    }
    case MllProof::Rule::Ex: {
      if (!arity(1)) return fail_at(pf, "Ex needs one premise");
      const Sequent& p = pf.premises[0].conclusion;
      std::vector<int> sorted = pf.permutation;
      std::sort(sorted.begin(), sorted.end());
      if (sorted.size() != p.size()) return fail_at(pf, "Ex permutation has the wrong length");
      for (std::size_t k = 0; k < sorted.size(); ++k)
        if (sorted[k] != static_cast<int>(k)) return fail_at(pf, "Ex permutation is not a permutation");
      Sequent expect;
      for (int k : pf.permutation) expect.push_back(p[k]);
      if (!sequent_equal(expect, c)) return fail_at(pf, "Ex conclusion does not match the permutation");
      break;
    }
    case MllProof::Rule::Par: {
      if (!arity(1)) return fail_at(pf, "Par needs one premise");
      const Sequent& p = pf.premises[0].conclusion;
      if (p.size() < 2 || c.size() + 1 != p.size()) return fail_at(pf, "Par context bookkeeping");
      Sequent expect(p.begin(), p.end() - 2);
      expect.push_back(par(p[p.size() - 2], p.back()));
      if (!sequent_equal(expect, c)) return fail_at(pf, "Par conclusion mismatch");
      break;
    }
    case MllProof::Rule::Times: {
      if (!arity(2)) return fail_at(pf, "Times needs two premises");
      const Sequent& l = pf.premises[0].conclusion;
      const Sequent& r = pf.premises[1].conclusion;
      if (l.empty() || r.empty()) return fail_at(pf, "Times premises must be non-empty");
      Sequent expect(l.begin(), l.end() - 1);
      expect.push_back(times(l.back(), r.front()));
      expect.insert(expect.end(), r.begin() + 1, r.end());
      if (!sequent_equal(expect, c)) return fail_at(pf, "Times context bookkeeping");
      break;
    }
  }
  for (const MllProof& p : pf.premises) {
    CheckReport r = check_proof(p, lexicon);
    if (!r.ok) return r;
  }
  return {};
}

namespace {

Multiword proof_body(const Interpretation& xi, const MllProof& pf, const std::vector<AxiomJudgement>& lexicon) {
  switch (pf.rule) {
    case MllProof::Rule::Id:
      return identity(interpret_formula(xi, pf.conclusion[1])).body;
    case MllProof::Rule::Axiom:
      for (const AxiomJudgement& a : lexicon)
        if (a.name == pf.axiom) {
          if (a.body.boundary != interpret_sequent(xi, a.sequent))
            throw Error(ErrorKind::BoundaryMismatch, "axiom " + a.name + " body does not fit its sequent");
          return a.body;
        }
      throw Error(ErrorKind::Grammar, "unknown axiom " + pf.axiom);
    case MllProof::Rule::Cut: {
      const MllProof& l = pf.premises[0];
      Multiword m = multiword_tensor(proof_body(xi, l, lexicon), proof_body(xi, pf.premises[1], lexicon));
      Sequent gamma(l.conclusion.begin(), l.conclusion.end() - 1);
      return iterated_contraction(m, interpret_sequent(xi, gamma).size,
                                  boundary_dual(interpret_formula(xi, l.conclusion.back())));
    }
    case MllProof::Rule::Ex: {
      const MllProof& p = pf.premises[0];
      std::vector<int> sizes;
      for (const FormulaPtr& f : p.conclusion) sizes.push_back(interpret_formula(xi, f).size);
      return permute_blocks(proof_body(xi, p, lexicon), sizes, pf.permutation);
    }
    case MllProof::Rule::Par:
      return proof_body(xi, pf.premises[0], lexicon);
    case MllProof::Rule::Times:
      return multiword_tensor(proof_body(xi, pf.premises[0], lexicon), proof_body(xi, pf.premises[1], lexicon));
  }
  throw Error(ErrorKind::Grammar, "unknown rule");
}

}  // namespace

Cowordism interpret_proof(const Interpretation& xi, const MllProof& pf, const std::vector<AxiomJudgement>& lexicon) {
  CheckReport r = check_proof(pf, lexicon);
  if (!r.ok) throw Error(ErrorKind::Grammar, r.message);
  return point(proof_body(xi, pf, lexicon));
}

std::size_t proof_cost(const MllProof& pf) {
  std::size_t n = pf.rule == MllProof::Rule::Ex ? 0 : 1;
  for (const MllProof& p : pf.premises) n += proof_cost(p);
  return n;
}

std::string proof_to_string(const MllProof& pf, int indent) {
  static const char* names[] = {"Id", "Cut", "Ex", "Par", "Times", "Axiom"};
  std::string out(static_cast<std::size_t>(indent) * 2, ' ');
  out += names[static_cast<int>(pf.rule)];
  if (pf.rule == MllProof::Rule::Axiom) out += " " + pf.axiom;
  out += "  |- " + sequent_to_string(pf.conclusion) + "\n";
  for (const MllProof& p : pf.premises) out += proof_to_string(p, indent + 1);
  return out;
}

}  // namespace coword
