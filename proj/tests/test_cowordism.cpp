#include "doctest.h"
#include "coword/laws.hpp"
#include "gen.hpp"

using namespace coword;

namespace {

const Boundary O(1, {});

Cowordism letter(const std::string& a) {
  return make_cowordism(O, O, make_multiword(Boundary(2, {1}), {{1, {a}, 2}}));
}

// Unit 1 -> dual(X) (x) X carried by the body of the identity.
Cowordism unit_of(const Boundary& x) { return point(identity(x).body); }
// Counit X (x) dual(X) -> 1.
Cowordism counit_of(const Boundary& x) { return uncurry(identity(boundary_dual(x)), x.size); }

}  // namespace

TEST_CASE("identity cowordisms") {
  Cowordism i = identity(O);
  CHECK(i.body == make_multiword(Boundary(2, {1}), {{1, {}, 2}}));
  CHECK(identity(unit_boundary()).body == empty_multiword());
  Cowordism big = identity(Boundary(4, {3}));
  CHECK(big.body.boundary == Boundary(8, {1, 3, 4, 7}));
  CHECK(big.body.regular.size() == 4);
  for (const Edge& e : big.body.regular) CHECK(e.label.empty());
  CHECK(big.body.regular == std::vector<Edge>{{1, {}, 8}, {3, {}, 6}, {4, {}, 5}, {7, {}, 2}});
}

TEST_CASE("composition of letters concatenates") {
  Cowordism ab = compose(letter("a"), letter("b"));
  CHECK(ab.body == make_multiword(Boundary(2, {1}), {{1, {"a", "b"}, 2}}));
  CHECK_THROWS_AS(compose(letter("a"), identity(Boundary(2, {1}))), Error);
}

TEST_CASE("composition agrees with the path-walking oracle") {
  std::mt19937 rng(21);
  for (int k = 0; k < 500; ++k) {
    const int ch = gen::random_charge(rng, 2);
    Boundary x = gen::random_object(rng, 3, ch), y = gen::random_object(rng, 3, ch),
             z = gen::random_object(rng, 3, ch);
    Cowordism s = gen::random_cowordism(rng, x, y);
    Cowordism t = gen::random_cowordism(rng, y, z);
    Cowordism c = compose(s, t);
    CHECK(c == gen::compose_by_paths(s, t));
    CHECK(validate(c.body).ok);
  }
}

TEST_CASE("tensor, symmetry and dual instances") {
  Cowordism t = tensor(letter("a"), letter("b"));
  CHECK(t.dom == Boundary(2, {}));
  CHECK(t.body.boundary == Boundary(4, {1, 2}));
  CHECK(t.body.regular == std::vector<Edge>{{1, {"b"}, 4}, {2, {"a"}, 3}});
  Cowordism empty{unit_boundary(), unit_boundary(), empty_multiword()};
  CHECK(tensor(empty, letter("a")) == letter("a"));
  CHECK(tensor(letter("a"), empty) == letter("a"));

  Cowordism s = symmetry(O, O);
  CHECK(s.body.boundary == Boundary(4, {1, 2}));
  CHECK(s.body.regular == std::vector<Edge>{{1, {}, 3}, {2, {}, 4}});
  CHECK(symmetry(unit_boundary(), Boundary(3, {2})) == identity(Boundary(3, {2})));
  CHECK(symmetry(Boundary(3, {2}), unit_boundary()) == identity(Boundary(3, {2})));

  Cowordism d = dual(letter("a"));
  CHECK(d.dom == Boundary(1, {1}));
  CHECK(d.body == make_multiword(Boundary(2, {2}), {{2, {"a"}, 1}}));
}

TEST_CASE("category laws on random instances") {
  std::mt19937 rng(33);
  for (int k = 0; k < 300; ++k) {
    const int ch = gen::random_charge(rng, 2);
    Boundary x = gen::random_object(rng, 3, ch), y = gen::random_object(rng, 3, ch),
             z = gen::random_object(rng, 3, ch), w = gen::random_object(rng, 3, ch);
    Cowordism s = gen::random_cowordism(rng, x, y);
    Cowordism t = gen::random_cowordism(rng, y, z);
    Cowordism r = gen::random_cowordism(rng, z, w);
    CHECK(compose(compose(s, t), r) == compose(s, compose(t, r)));
    CHECK(compose(identity(x), s) == s);
    CHECK(compose(s, identity(y)) == s);
    CHECK(dual(dual(s)) == s);
    CHECK(dual(compose(s, t)) == compose(dual(t), dual(s)));
    CHECK(dual(identity(x)) == identity(boundary_dual(x)));
    CHECK(compose(symmetry(x, y), symmetry(y, x)) == identity(boundary_tensor(x, y)));
    CHECK(tensor(identity(x), identity(y)) == identity(boundary_tensor(x, y)));

    const int ch2 = gen::random_charge(rng, 2);
    Boundary p = gen::random_object(rng, 2, ch2), q = gen::random_object(rng, 2, ch2),
             u = gen::random_object(rng, 2, ch2);
    Cowordism s2 = gen::random_cowordism(rng, p, q);
    Cowordism t2 = gen::random_cowordism(rng, q, u);
    CHECK(tensor(compose(s, t), compose(s2, t2)) == compose(tensor(s, s2), tensor(t, t2)));
    CHECK(compose(tensor(s, s2), symmetry(y, q)) == compose(symmetry(x, p), tensor(s2, s)));
  }
}

TEST_CASE("snake equations") {
  std::mt19937 rng(44);
  for (int k = 0; k < 200; ++k) {
    Boundary x = gen::random_boundary(rng, 3);
    Boundary xd = boundary_dual(x);
    Cowordism left = compose(tensor(identity(x), unit_of(x)), tensor(counit_of(x), identity(x)));
    CHECK(left == identity(x));
    Cowordism right = compose(tensor(unit_of(x), identity(xd)), tensor(identity(xd), counit_of(x)));
    CHECK(right == identity(xd));
  }
  // Both single-point polarities, by hand.
  for (const Boundary& x : {Boundary(1, {}), Boundary(1, {1})}) {
    Cowordism left = compose(tensor(identity(x), unit_of(x)), tensor(counit_of(x), identity(x)));
    CHECK(left == identity(x));
  }
}

TEST_CASE("curry and uncurry") {
  std::mt19937 rng(55);
  Cowordism name = curry(identity(O), 1);
  CHECK(name.dom == unit_boundary());
  CHECK(name.cod == Boundary(2, {1}));
  CHECK(name.body == make_multiword(Boundary(2, {1}), {{1, {}, 2}}));
  for (int k = 0; k < 300; ++k) {
    Boundary y = gen::random_boundary(rng, 2);
    Boundary x = gen::random_boundary(rng, 2);
    const int charge = (y.size - 2 * static_cast<int>(y.left.size())) + (x.size - 2 * static_cast<int>(x.left.size()));
    Boundary z = gen::random_object(rng, std::max(4, std::abs(charge)), charge);
    Cowordism s = gen::random_cowordism(rng, boundary_tensor(y, x), z);
    Cowordism c = curry(s, y.size);
    CHECK(c.dom == x);
    CHECK(c.cod == boundary_tensor(boundary_dual(y), z));
    CHECK(uncurry(c, y.size) == s);
    // Currying agrees with bending the Y wire by a unit.
    Cowordism bent = compose(tensor(unit_of(y), identity(x)), tensor(identity(boundary_dual(y)), s));
    CHECK(bent == c);
  }
  CHECK_THROWS_AS(curry(identity(O), 2), Error);
}

TEST_CASE("text rendering round-trips") {
  std::mt19937 rng(66);
  for (int k = 0; k < 100; ++k) {
    const int ch = gen::random_charge(rng, 2);
    Cowordism s = gen::random_cowordism(rng, gen::random_object(rng, 3, ch), gen::random_object(rng, 3, ch));
    CHECK(parse_cowordism(render(s, RenderFormat::Text)) == s);
    CHECK(render(s, RenderFormat::Dot).find("digraph") == 0);
  }
  std::string t = render(identity(O), RenderFormat::Text);
  CHECK(t == "dom 1 left=\ncod 1 left=\nboundary 2 left=1\n1 -> 2 : eps\n");
}

TEST_CASE("law runner") {
  LawOptions o;
  o.cases = 60;
  o.seed = 9;
  std::vector<LawResult> r = run_laws(o);
  CHECK(r.size() == 11);
  for (const LawResult& l : r) CHECK_MESSAGE(l.failures == 0, l.law);
  CHECK(law_report(r) == law_report(run_laws(o)));

  o.mutant = true;
  std::vector<LawResult> m = run_laws(o);
  auto assoc = std::find_if(m.begin(), m.end(), [](const LawResult& l) { return l.law == "associativity"; });
  REQUIRE(assoc != m.end());
  CHECK(assoc->failures > 0);
  CHECK(assoc->counterexample.find("lhs:") != std::string::npos);
}
