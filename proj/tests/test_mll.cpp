#include <random>

#include "coword/mll.hpp"
#include "doctest.h"

using namespace coword;

namespace {

FormulaPtr random_formula(std::mt19937& rng, int depth) {
  const char* atoms[] = {"p", "q", "r"};
  if (depth == 0 || rng() % 3 == 0) {
    std::string a = atoms[rng() % 3];
    return rng() % 2 ? pos(a) : neg(a);
  }
  FormulaPtr l = random_formula(rng, depth - 1), r = random_formula(rng, depth - 1);
  return rng() % 2 ? times(l, r) : par(l, r);
}

Interpretation pqr() {
  Interpretation xi;
  xi.atoms["p"] = Boundary(2, {2});
  xi.atoms["q"] = Boundary(1, {});
  xi.atoms["r"] = Boundary(3, {1, 3});
  return xi;
}

}  // namespace

TEST_CASE("negation") {
  CHECK(formula_equal(negate(pos("p")), neg("p")));
  CHECK(formula_equal(negate(neg("p")), pos("p")));
  CHECK(formula_equal(negate(times(pos("p"), pos("q"))), par(neg("q"), neg("p"))));
  CHECK(formula_to_string(negate(parse_formula("p * q"))) == "~q | ~p");
  std::mt19937 rng(1);
  Interpretation xi = pqr();
  for (int k = 0; k < 300; ++k) {
    FormulaPtr a = random_formula(rng, 4);
    CHECK(formula_equal(negate(negate(a)), a));
    CHECK(formula_equal(parse_formula(formula_to_string(a)), a));
    CHECK(interpret_formula(xi, negate(a)) == boundary_dual(interpret_formula(xi, a)));
  }
}

TEST_CASE("formula interpretation") {
  Interpretation xi = pqr();
  xi.atoms["S"] = Boundary(2, {2});
  CHECK(interpret_formula(xi, pos("S")) == Boundary(2, {2}));
  CHECK(interpret_formula(xi, parse_formula("p * (q | r)")) ==
        boundary_tensor(Boundary(2, {2}), boundary_tensor(Boundary(1, {}), Boundary(3, {1, 3}))));
  CHECK(interpret_sequent(xi, {}) == unit_boundary());
  Interpretation o;
  o.atoms["p"] = Boundary(1, {});
  CHECK(interpret_sequent(o, parse_sequent("~p, p")) == Boundary(2, {1}));
  // The implication translation agrees with the type interpretation.
  Interpretation t;
  t.atoms["A"] = Boundary(2, {2});
  t.atoms["B"] = Boundary(3, {1});
  for (const char* ty : {"A -> B", "(A -> B) -> A", "(B -> A) -> (A -> B) -> B"}) {
    TypePtr a = parse_type(ty);
    CHECK(interpret_type(t, a) == interpret_formula(t, formula_of_type(a)));
  }
  CHECK(formula_to_string(formula_of_type(parse_type("NP -> NP -> S"))) == "~NP | (~NP | S)");
}

TEST_CASE("sequent parsing") {
  Sequent s = parse_sequent("~S, (S * NP) | ~NP, S");
  CHECK(s.size() == 3);
  CHECK(sequent_to_string(s) == "~S, (S * NP) | ~NP, S");
  CHECK(is_flat(parse_sequent("~S, ~H, S")));
  CHECK_FALSE(is_flat(s));
  CHECK(parse_sequent("").empty());
}

TEST_CASE("proof checking") {
  CHECK(check_proof(id_proof(pos("p")), {}).ok);
  MllProof cut = cut_proof(id_proof(pos("p")), id_proof(pos("p")));
  CHECK(check_proof(cut, {}).ok);
  CHECK(sequent_equal(cut.conclusion, parse_sequent("~p, p")));

  MllProof bad = times_proof(id_proof(pos("p")), id_proof(pos("q")));
  bad.conclusion = parse_sequent("~p, p * ~q, q, ~p");
  CHECK_FALSE(check_proof(bad, {}).ok);

  AxiomJudgement ax{"a", parse_sequent("p"), make_multiword(Boundary(2, {2}), {{2, {"a"}, 1}})};
  CHECK(check_proof(axiom_proof(ax), {ax}).ok);
  CHECK_FALSE(check_proof(axiom_proof(ax), {}).ok);
}

TEST_CASE("proof interpretation") {
  Interpretation xi;
  xi.atoms["p"] = Boundary(1, {});
  Cowordism id = interpret_proof(xi, id_proof(pos("p")), {});
  CHECK(id.dom == unit_boundary());
  CHECK(id.body == make_multiword(Boundary(2, {1}), {{1, {}, 2}}));
  CHECK(interpret_proof(xi, cut_proof(id_proof(pos("p")), id_proof(pos("p"))), {}) == id);
  MllProof pp = par_proof(id_proof(pos("p")));
  CHECK(sequent_to_string(pp.conclusion) == "~p | p");
  CHECK(interpret_proof(xi, pp, {}).body == id.body);
}

TEST_CASE("exchange equals post-composition with a symmetry") {
  std::mt19937 rng(2);
  Interpretation xi = pqr();
  const char* lits[] = {"p", "~p", "q", "~q", "r", "~r"};
  for (int k = 0; k < 200; ++k) {
    Sequent s;
    const int n = 2 + static_cast<int>(rng() % 3);
    for (int j = 0; j < n; ++j) s.push_back(parse_formula(lits[rng() % 6]));
    Boundary b = interpret_sequent(xi, s);
    if (2 * static_cast<int>(b.left.size()) != b.size) continue;
    std::vector<int> right = b.right();
    std::shuffle(right.begin(), right.end(), rng);
    std::vector<Edge> edges;
    for (std::size_t e = 0; e < b.left.size(); ++e) edges.push_back(Edge{b.left[e], {"a"}, right[e]});
    AxiomJudgement ax{"ax", s, make_multiword(b, edges)};
    const int i = static_cast<int>(rng() % (n - 1));
    Cowordism swapped = interpret_proof(xi, swap_proof(axiom_proof(ax), i), {ax});
    Boundary gamma = interpret_sequent(xi, Sequent(s.begin(), s.begin() + i));
    Boundary x = interpret_formula(xi, s[i]), y = interpret_formula(xi, s[i + 1]);
    Boundary delta = interpret_sequent(xi, Sequent(s.begin() + i + 2, s.end()));
    Cowordism post = compose(point(ax.body), tensor(tensor(identity(gamma), symmetry(x, y)), identity(delta)));
    CHECK(swapped == post);
  }
}

TEST_CASE("cut invariance on curated pairs") {
  Interpretation xi;
  xi.atoms["p"] = Boundary(2, {2});
  xi.atoms["q"] = Boundary(2, {2});
  xi.atoms["r"] = Boundary(2, {2});
  AxiomJudgement a1{"a1", parse_sequent("p"), make_multiword(Boundary(2, {2}), {{2, {"a"}, 1}})};
  AxiomJudgement a2{"a2", parse_sequent("q"), make_multiword(Boundary(2, {2}), {{2, {"b"}, 1}})};
  AxiomJudgement b{"b", parse_sequent("~q, ~p, r"),
                   make_multiword(Boundary(6, {2, 4, 6}), {{6, {}, 1}, {2, {}, 3}, {4, {"c"}, 5}})};
  std::vector<AxiomJudgement> lex{a1, a2, b};

  // Cut on a compound formula against the cut on its atoms.
  MllProof bp = swap_proof(par_proof(ex_proof(axiom_proof(b), {2, 0, 1})), 0);
  CHECK(sequent_to_string(bp.conclusion) == "~q | ~p, r");
  MllProof with_compound = cut_proof(times_proof(axiom_proof(a1), axiom_proof(a2)), bp);
  MllProof atomic = cut_proof(axiom_proof(a1), cut_proof(axiom_proof(a2), axiom_proof(b)));
  Cowordism lhs = interpret_proof(xi, with_compound, lex);
  CHECK(lhs == interpret_proof(xi, atomic, lex));
  CHECK(lhs.body == make_multiword(Boundary(2, {2}), {{2, {"b", "a", "c"}, 1}}));

  // Cut against an identity.
  CHECK(interpret_proof(xi, cut_proof(axiom_proof(a1), id_proof(pos("p"))), lex) ==
        interpret_proof(xi, axiom_proof(a1), lex));

  // Identity on a compound formula against its expansion by Times and Par.
  FormulaPtr pq = times(pos("p"), pos("q"));
  MllProof expanded =
      swap_proof(par_proof(ex_proof(times_proof(id_proof(pos("p")), swap_proof(id_proof(pos("q")), 0)), {1, 2, 0})),
                 0);
  CHECK(sequent_equal(expanded.conclusion, id_proof(pq).conclusion));
  CHECK(interpret_proof(xi, expanded, {}) == interpret_proof(xi, id_proof(pq), {}));
}
