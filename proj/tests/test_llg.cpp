#include <regex>

#include "coword/llg.hpp"
#include "doctest.h"
#include "ssp_lexicon.hpp"

using namespace coword;

namespace {

const Token kBullet = "\xE2\x80\xA2";

Word tokens(const std::string& s) {
  Word w;
  for (std::size_t i = 0; i < s.size();) {
    if (s.compare(i, 3, kBullet) == 0) {
      w.push_back(kBullet);
      i += 3;
    } else {
      w.push_back(s.substr(i, 1));
      ++i;
    }
  }
  return w;
}

// Net value of each bullet-initiated slot; nullopt if the word does not start with a bullet.
std::optional<std::vector<int>> slot_values(const Word& w) {
  if (w.empty() || w[0] != kBullet) return std::nullopt;
  std::vector<int> v;
  for (const Token& t : w) {
    if (t == kBullet) v.push_back(0);
    else v.back() += t == "+" ? 1 : -1;
  }
  return v;
}

bool has_zero_subsum(const std::vector<int>& v) {
  const unsigned n = static_cast<unsigned>(v.size());
  for (unsigned m = 1; m < (1u << n); ++m) {
    int s = 0;
    for (unsigned i = 0; i < n; ++i)
      if (m >> i & 1) s += v[i];
    if (s == 0) return true;
  }
  return false;
}

std::set<std::string> judgement_keys(const GenerateResult& r) {
  std::set<std::string> out;
  for (const DerivedJudgement& j : r.judgements) out.insert(sequent_to_string(j.sequent) + "|" + to_text(j.body));
  return out;
}

Llg tiny_par_grammar() {
  Llg g;
  g.atoms = {"S", "A"};
  g.xi.atoms["S"] = Boundary(2, {2});
  g.xi.atoms["A"] = Boundary(2, {2});
  g.alphabet = {"a", "b"};
  g.initial = "S";
  g.lexicon.push_back({"lift", parse_sequent("~A | S"), make_multiword(Boundary(4, {2, 4}), {{2, {"b"}, 3}, {4, {}, 1}})});
  g.lexicon.push_back({"leaf", parse_sequent("A"), make_multiword(Boundary(2, {2}), {{2, {"a"}, 1}})});
  return g;
}

}  // namespace

TEST_CASE("ssp grammar validates") {
  CHECK(validate_llg(testfix::ssp_llg()).ok);
  CHECK(validate_llg(testfix::ssp_llg(true)).ok);
  CHECK(is_flat_llg(testfix::ssp_llg(true)));
  CHECK_FALSE(is_flat_llg(testfix::ssp_llg()));
  CHECK_FALSE(is_times_free(testfix::ssp_llg()));
}

TEST_CASE("validate_llg rejects broken grammars") {
  Llg g = testfix::ssp_llg();
  g.lexicon.push_back(g.lexicon[0]);
  CHECK_FALSE(validate_llg(g).ok);

  g = testfix::ssp_llg();
  g.lexicon[0].sequent = parse_sequent("T");
  CHECK_FALSE(validate_llg(g).ok);

  g = testfix::ssp_llg();
  g.lexicon[1].body = make_multiword(Boundary(2, {2}), {{2, {}, 1}});
  CHECK_FALSE(validate_llg(g).ok);

  g = testfix::ssp_llg();
  g.lexicon[0].body = make_multiword(Boundary(2, {2}), {{2, {"x"}, 1}});
  CHECK_FALSE(validate_llg(g).ok);

  g = testfix::ssp_llg();
  g.initial = "Q";
  CHECK_FALSE(validate_llg(g).ok);
}

TEST_CASE("small ssp language is sound and contains the basic words") {
  GenerateOptions o;
  o.budget = 13;
  o.max_len = 6;
  LanguageResult l = language(testfix::ssp_llg(), o);
  CHECK(l.words.count(tokens(kBullet)));
  CHECK(l.words.count(tokens("•+•-")));
  CHECK(l.words.count(tokens("•-•+")));
  CHECK_FALSE(l.words.count(tokens("+•")));
  CHECK_FALSE(l.words.count(tokens("•+")));
  for (const Word& w : l.words) {
    auto v = slot_values(w);
    REQUIRE(v);
    CHECK(has_zero_subsum(*v));
  }
}

TEST_CASE("provenance proofs check and reproduce their bodies") {
  Llg g = testfix::ssp_llg();
  GenerateOptions o;
  o.budget = 11;
  o.max_len = 6;
  GenerateResult r = generate(g, o);
  REQUIRE_FALSE(r.judgements.empty());
  for (const DerivedJudgement& j : r.judgements) {
    MllProof pf = provenance(r, j.item);
    CHECK(check_proof(pf, g.lexicon).ok);
    CHECK(static_cast<int>(proof_cost(pf)) == j.cost);
    Cowordism c = interpret_proof(g.xi, pf, g.lexicon);
    CHECK(c.body == j.body);
  }
}

TEST_CASE("focused search agrees with the full calculus on small budgets") {
  Llg g = testfix::ssp_llg();
  for (int b = 1; b <= 9; b += 2) {
    GenerateOptions o;
    o.budget = b;
    o.max_len = 5;
    o.strategy = Strategy::Full;
    auto full = language(g, o).words;
    o.strategy = Strategy::Focused;
    auto focused = language(g, o).words;
    CHECK_MESSAGE(full == focused, "budget " << b);
  }
}

TEST_CASE("cut-only generation matches the full calculus on the flat grammar") {
  Llg g = testfix::ssp_llg(true);
  for (int b : {3, 5, 7}) {
    GenerateOptions o;
    o.budget = b;
    o.max_len = 6;
    o.strategy = Strategy::Full;
    GenerateResult full = generate(g, o);
    GenerateResult cut = generate_cut_only(g, o);
    CHECK(judgement_keys(full) == judgement_keys(cut));
  }
  GenerateOptions o;
  o.strategy = Strategy::CutOnly;
  CHECK_THROWS_AS(generate(testfix::ssp_llg(), o), Error);
}

TEST_CASE("member finds proofs and rejects non-words") {
  Llg g = testfix::ssp_llg();
  GenerateOptions o;
  o.budget = 21;
  MemberResult yes = member(g, tokens("•+•-"), o);
  CHECK(yes.yes);
  REQUIRE(yes.proof);
  CHECK(check_proof(*yes.proof, g.lexicon).ok);
  Cowordism c = interpret_proof(g.xi, *yes.proof, g.lexicon);
  CHECK(c.body.regular.size() == 1);
  CHECK(c.body.regular[0].label == tokens("•+•-"));
  CHECK(static_cast<int>(proof_cost(*yes.proof)) == yes.budget);

  CHECK_FALSE(member(g, tokens("+•"), o).yes);
  CHECK_FALSE(member(g, tokens("•+"), o).yes);
}

TEST_CASE("flatten_par splits pars and rejects tensors") {
  Llg g = tiny_par_grammar();
  CHECK(validate_llg(g).ok);
  CHECK_FALSE(is_flat_llg(g));
  Llg f = flatten_par(g);
  CHECK(is_flat_llg(f));
  CHECK(f.lexicon[0].sequent.size() == 2);
  CHECK(f.lexicon[0].body == g.lexicon[0].body);
  CHECK_THROWS_AS(flatten_par(testfix::ssp_llg()), Error);

  GenerateOptions o;
  o.budget = 5;
  auto direct = language(g, o).words;
  auto flat = language(f, o).words;
  CHECK(direct == flat);
  CHECK(direct == std::set<Word>{Word{"a", "b"}});
}

TEST_CASE("language keeps only regular single-edge bodies") {
  Llg g = testfix::ssp_llg();
  GenerateOptions o;
  o.budget = 9;
  o.max_len = 5;
  GenerateResult r = generate(g, o);
  std::set<Word> expected;
  for (const DerivedJudgement& j : r.judgements)
    if (j.body.is_regular() && j.body.regular.size() == 1) expected.insert(j.body.regular[0].label);
  CHECK(language(g, o).words == expected);
}
