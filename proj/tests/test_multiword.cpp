#include "doctest.h"
#include "gen.hpp"

using namespace coword;

namespace {

Word W(std::initializer_list<const char*> toks) {
  Word w;
  for (const char* t : toks) w.push_back(t);
  return w;
}

}  // namespace

TEST_CASE("boundary tensor and dual") {
  CHECK(boundary_tensor(Boundary(2, {2}), Boundary(2, {2})) == Boundary(4, {2, 4}));
  CHECK(boundary_tensor(Boundary(4, {3}), Boundary(4, {2})) == Boundary(8, {3, 6}));
  CHECK(boundary_tensor(unit_boundary(), Boundary(3, {1})) == Boundary(3, {1}));
  CHECK(boundary_dual(Boundary(2, {2})) == Boundary(2, {2}));
  CHECK(boundary_dual(Boundary(2, {1})) == Boundary(2, {1}));
  CHECK(boundary_dual(Boundary(3, {1})) == Boundary(3, {1, 2}));
  CHECK(boundary_dual(unit_boundary()) == unit_boundary());
  CHECK_THROWS_AS(Boundary(2, {3}), Error);
}

TEST_CASE("boundary dual properties") {
  std::mt19937 rng(11);
  for (int k = 0; k < 300; ++k) {
    Boundary x = gen::random_boundary(rng, 6);
    Boundary y = gen::random_boundary(rng, 6);
    CHECK(boundary_dual(boundary_dual(x)) == x);
    CHECK(boundary_dual(boundary_tensor(x, y)) == boundary_tensor(boundary_dual(y), boundary_dual(x)));
    CHECK(boundary_tensor(boundary_tensor(x, y), x) == boundary_tensor(x, boundary_tensor(y, x)));
    CHECK(is_subboundary(x, 0, x));
    CHECK(is_subboundary(boundary_tensor(x, y), x.size, y));
  }
}

TEST_CASE("subboundary and shift") {
  CHECK(is_subboundary(Boundary(4, {1, 3}), 2, Boundary(2, {1})));
  CHECK_FALSE(is_subboundary(Boundary(2, {1}), 1, Boundary(2, {1})));
  CHECK_FALSE(is_subboundary(Boundary(4, {1, 3}), 1, Boundary(2, {1})));
  CHECK(shift(2, 2, 1) == 1);
  CHECK(shift(2, 2, 2) == 4);
  CHECK(shift(3, 4, 5) == 9);
}

TEST_CASE("cyclic words canonicalize by least rotation") {
  CHECK(canonical_rotation(W({"b", "c", "a"})) == W({"a", "b", "c"}));
  CHECK(canonical_rotation(W({"b", "a", "b", "a"})) == W({"a", "b", "a", "b"}));
  std::mt19937 rng(3);
  for (int k = 0; k < 100; ++k) {
    Word w = gen::random_word(rng, 6);
    Word r = w;
    if (!r.empty()) std::rotate(r.begin(), r.begin() + rng() % r.size(), r.end());
    CHECK(canonical_rotation(w) == canonical_rotation(r));
  }
}

TEST_CASE("multiword tensor") {
  Multiword m = make_multiword(Boundary(2, {1}), {{1, W({"a"}), 2}});
  Multiword n = make_multiword(Boundary(2, {1}), {{1, W({"b"}), 2}});
  Multiword t = multiword_tensor(m, n);
  CHECK(t.boundary == Boundary(4, {1, 3}));
  CHECK(t.regular == std::vector<Edge>{{1, W({"a"}), 2}, {3, W({"b"}), 4}});
  CHECK(multiword_tensor(empty_multiword(), m) == m);
  Multiword c1 = make_multiword(unit_boundary(), {}, {W({"u"})});
  CHECK(multiword_tensor(c1, c1).singular.size() == 2);
}

TEST_CASE("elementary contraction") {
  Multiword m = make_multiword(Boundary(4, {1, 3}), {{1, W({"a", "b"}), 2}, {3, W({"c"}), 4}});
  Multiword r = elementary_contraction(m, 2);
  CHECK(r == make_multiword(Boundary(2, {1}), {{1, W({"a", "b", "c"}), 2}}));

  Multiword loop = make_multiword(Boundary(2, {2}), {{2, W({"w"}), 1}});
  Multiword c = elementary_contraction(loop, 1);
  CHECK(c.boundary == unit_boundary());
  CHECK(c.regular.empty());
  CHECK(c.singular == std::vector<Word>{W({"w"})});

  Multiword e = make_multiword(Boundary(4, {1, 3}), {{1, W({"w"}), 2}, {3, {}, 4}});
  CHECK(elementary_contraction(e, 2) == make_multiword(Boundary(2, {1}), {{1, W({"w"}), 2}}));

  try {
    elementary_contraction(m, 4);
    FAIL("expected an error");
  } catch (const Error& err) {
    CHECK(err.kind() == ErrorKind::OutOfRange);
  }
  Multiword same = make_multiword(Boundary(4, {1, 2}), {{1, {}, 3}, {2, {}, 4}});
  try {
    elementary_contraction(same, 1);
    FAIL("expected an error");
  } catch (const Error& err) {
    CHECK(err.kind() == ErrorKind::SamePolarity);
  }
}

TEST_CASE("iterated contraction reproduces the four-word sentence picture") {
  Multiword m = make_multiword(Boundary(8, {1, 3, 5, 7}),
                               {{1, W({"Jim"}), 2},
                                {3, W({"Ann"}), 4},
                                {7, W({"goes", "out", "with"}), 6},
                                {5, W({"a", "lot"}), 8}});
  Multiword r = iterated_contraction(m, 1, Boundary(3, {1, 3}));
  CHECK(r == make_multiword(Boundary(2, {1}), {{1, W({"Jim", "goes", "out", "with", "Ann", "a", "lot"}), 2}}));
  CHECK(iterated_contraction(m, 3, unit_boundary()) == m);
  CHECK_THROWS_AS(iterated_contraction(m, 0, Boundary(3, {1, 3})), Error);
}

TEST_CASE("single-step iterated contraction equals elementary contraction") {
  std::mt19937 rng(5);
  for (int k = 0; k < 200; ++k) {
    Boundary b = gen::random_boundary_with_charge(rng, 6, 0);
    Multiword m = gen::random_multiword(rng, b);
    for (int n = 1; n < 6; ++n) {
      if (b.is_left(n) == b.is_left(n + 1)) continue;
      Multiword e = elementary_contraction(m, n);
      CHECK(validate(e).ok);
      CHECK(iterated_contraction(m, n - 1, sub_boundary(b, n, 1)) == e);
    }
  }
}

TEST_CASE("disjoint contractions commute") {
  std::mt19937 rng(7);
  int checked = 0;
  for (int k = 0; k < 400; ++k) {
    Boundary b = gen::random_boundary_with_charge(rng, 6, 0);
    Multiword m = gen::random_multiword(rng, b);
    for (int p = 1; p < 6; ++p) {
      for (int q = p + 2; q < 6; ++q) {
        if (b.is_left(p) == b.is_left(p + 1) || b.is_left(q) == b.is_left(q + 1)) continue;
        Multiword first = elementary_contraction(elementary_contraction(m, p), q - 2);
        Multiword second = elementary_contraction(elementary_contraction(m, q), p);
        CHECK(first == second);
        ++checked;
      }
    }
  }
  CHECK(checked > 50);
}

TEST_CASE("validate reports the first violation") {
  Multiword bad{Boundary(4, {1}), {{1, W({"a"}), 2}, {1, W({"b"}), 3}}, {}};
  ValidationReport r = validate(bad);
  CHECK_FALSE(r.ok);
  CHECK(r.kind == ValidationReport::Kind::Degree);
  CHECK(r.vertex == 1);

  Multiword pol{Boundary(2, {1}), {{2, W({"a"}), 1}}, {}};
  r = validate(pol);
  CHECK(r.kind == ValidationReport::Kind::Polarity);
  CHECK(r.vertex == 2);

  Multiword range{Boundary(2, {1}), {{1, {}, 5}}, {}};
  CHECK(validate(range).kind == ValidationReport::Kind::OutOfRange);
  CHECK(validate(make_multiword(Boundary(2, {1}), {{1, {}, 2}})).ok);
}

TEST_CASE("text form round-trips") {
  std::mt19937 rng(9);
  for (int k = 0; k < 100; ++k) {
    Multiword m = gen::random_multiword(rng, gen::random_boundary_with_charge(rng, 6, 0));
    CHECK(parse_multiword(to_text(m)) == m);
  }
  Multiword p = parse_multiword("boundary 2 left=1; 1 -> 2 : a b");
  CHECK(p.regular.front().label == W({"a", "b"}));
  CHECK_THROWS_AS(parse_multiword("1 -> 2 : a"), Error);
}
