#include "coword/laws.hpp"

#include <algorithm>
#include <functional>
#include <random>
#include <sstream>

namespace coword {

namespace {

struct Gen {
  std::mt19937_64 rng;
  int max_size;
  int letters;

  int uniform(int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng); }

  Word word(int max_len) {
    Word w;
    for (int k = uniform(0, max_len); k > 0; --k) w.push_back(std::string(1, static_cast<char>('a' + uniform(0, letters - 1))));
    return w;
  }

  // A boundary with `charge` more right points than left points.
  Boundary object(int charge) {
    std::vector<int> sizes;
    for (int s = std::abs(charge); s <= max_size; ++s)
      if ((s - charge) % 2 == 0) sizes.push_back(s);
    const int n = sizes[uniform(0, static_cast<int>(sizes.size()) - 1)];
    std::vector<int> pts(n);
    for (int i = 0; i < n; ++i) pts[i] = i + 1;
    std::shuffle(pts.begin(), pts.end(), rng);
    return Boundary(n, std::vector<int>(pts.begin(), pts.begin() + (n - charge) / 2));
  }

  Boundary any_boundary() {
    const int n = uniform(0, max_size);
    std::vector<int> left;
    for (int i = 1; i <= n; ++i)
      if (uniform(0, 1)) left.push_back(i);
    return Boundary(n, left);
  }

  int charge() { return uniform(-2, 2); }

  Cowordism arrow(const Boundary& dom, const Boundary& cod) {
    const Boundary b = boundary_tensor(boundary_dual(dom), cod);
    std::vector<int> right = b.right();
    std::shuffle(right.begin(), right.end(), rng);
    std::vector<Edge> edges;
    for (std::size_t k = 0; k < b.left.size(); ++k) edges.push_back(Edge{b.left[k], word(2), right[k]});
    std::vector<Word> cycles;
    if (uniform(0, 5) == 0) cycles.push_back(word(2));
    return make_cowordism(dom, cod, make_multiword(b, edges, cycles));
  }
};

Cowordism reversed_compose(const Cowordism& s, const Cowordism& t) {
  Cowordism c = compose(s, t);
  std::vector<Edge> edges = c.body.regular;
  for (Edge& e : edges) std::reverse(e.label.begin(), e.label.end());
  return make_cowordism(c.dom, c.cod, make_multiword(c.body.boundary, edges, c.body.singular));
}

std::string show(const std::vector<std::pair<std::string, Cowordism>>& named) {
  std::string out;
  for (const auto& [n, c] : named) out += n + ":\n" + render(c, RenderFormat::Text);
  return out;
}

}  // namespace

std::vector<LawResult> run_laws(const LawOptions& opts) {
  Gen g{std::mt19937_64(opts.seed), opts.max_size, opts.letters};
  using Compose = std::function<Cowordism(const Cowordism&, const Cowordism&)>;
  const Compose comp = opts.mutant ? Compose(reversed_compose) : Compose([](const Cowordism& s, const Cowordism& t) { return compose(s, t); });
  auto unit_of = [](const Boundary& x) { return point(identity(x).body); };
  auto counit_of = [](const Boundary& x) { return uncurry(identity(boundary_dual(x)), x.size); };

  // Each law draws its own instance and returns the two sides with the inputs that produced them.
  using Instance = std::pair<std::pair<Cowordism, Cowordism>, std::vector<std::pair<std::string, Cowordism>>>;
  std::vector<std::pair<std::string, std::function<Instance()>>> laws = {
      {"associativity",
       [&] {
         const int c = g.charge();
         Boundary x = g.object(c), y = g.object(c), z = g.object(c), w = g.object(c);
         Cowordism s = g.arrow(x, y), t = g.arrow(y, z), r = g.arrow(z, w);
         return Instance{{comp(comp(s, t), r), comp(s, comp(t, r))}, {{"s", s}, {"t", t}, {"r", r}}};
       }},
      {"left unit",
       [&] {
         const int c = g.charge();
         Cowordism s = g.arrow(g.object(c), g.object(c));
         return Instance{{comp(identity(s.dom), s), s}, {{"s", s}}};
       }},
      {"right unit",
       [&] {
         const int c = g.charge();
         Cowordism s = g.arrow(g.object(c), g.object(c));
         return Instance{{comp(s, identity(s.cod)), s}, {{"s", s}}};
       }},
      {"symmetry involution",
       [&] {
         Boundary x = g.any_boundary(), y = g.any_boundary();
         return Instance{{comp(symmetry(x, y), symmetry(y, x)), identity(boundary_tensor(x, y))},
                         {{"id", identity(boundary_tensor(x, y))}}};
       }},
      {"symmetry naturality",
       [&] {
         const int c1 = g.charge(), c2 = g.charge();
         Cowordism s = g.arrow(g.object(c1), g.object(c1)), t = g.arrow(g.object(c2), g.object(c2));
         return Instance{{comp(tensor(s, t), symmetry(s.cod, t.cod)), comp(symmetry(s.dom, t.dom), tensor(t, s))},
                         {{"s", s}, {"t", t}}};
       }},
      {"tensor functoriality",
       [&] {
         const int c1 = g.charge(), c2 = g.charge();
         Boundary x = g.object(c1), y = g.object(c1), z = g.object(c1);
         Boundary p = g.object(c2), q = g.object(c2), u = g.object(c2);
         Cowordism s = g.arrow(x, y), t = g.arrow(y, z), s2 = g.arrow(p, q), t2 = g.arrow(q, u);
         return Instance{{tensor(comp(s, t), comp(s2, t2)), comp(tensor(s, s2), tensor(t, t2))},
                         {{"s", s}, {"t", t}, {"s2", s2}, {"t2", t2}}};
       }},
      {"tensor identity",
       [&] {
         Boundary x = g.any_boundary(), y = g.any_boundary();
         return Instance{{tensor(identity(x), identity(y)), identity(boundary_tensor(x, y))},
                         {{"id", identity(boundary_tensor(x, y))}}};
       }},
      {"dual involution",
       [&] {
         const int c = g.charge();
         Cowordism s = g.arrow(g.object(c), g.object(c));
         return Instance{{dual(dual(s)), s}, {{"s", s}}};
       }},
      {"dual contravariance",
       [&] {
         const int c = g.charge();
         Boundary x = g.object(c), y = g.object(c), z = g.object(c);
         Cowordism s = g.arrow(x, y), t = g.arrow(y, z);
         return Instance{{dual(comp(s, t)), comp(dual(t), dual(s))}, {{"s", s}, {"t", t}}};
       }},
      {"snake left",
       [&] {
         Boundary x = g.any_boundary();
         return Instance{{comp(tensor(identity(x), unit_of(x)), tensor(counit_of(x), identity(x))), identity(x)},
                         {{"id", identity(x)}}};
       }},
      {"snake right",
       [&] {
         Boundary x = g.any_boundary(), xd = boundary_dual(x);
         return Instance{{comp(tensor(unit_of(x), identity(xd)), tensor(identity(xd), counit_of(x))), identity(xd)},
                         {{"id", identity(xd)}}};
       }},
  };

  std::vector<LawResult> out;
  for (auto& [name, draw] : laws) {
    LawResult r{name, 0, 0, ""};
    for (int k = 0; k < opts.cases; ++k) {
      auto [sides, inputs] = draw();
      ++r.cases;
      if (sides.first == sides.second) continue;
      if (r.failures++ == 0) {
        inputs.emplace_back("lhs", sides.first);
        inputs.emplace_back("rhs", sides.second);
        r.counterexample = show(inputs);
      }
    }
    out.push_back(std::move(r));
  }
  return out;
}

std::string law_report(const std::vector<LawResult>& results) {
  std::ostringstream os;
  for (const LawResult& r : results) {
    os << (r.failures ? "FAIL " : "pass ") << r.law << " (" << r.cases - r.failures << "/" << r.cases << ")\n";
    if (r.failures) os << "counterexample:\n" << r.counterexample;
  }
  return os.str();
}

}  // namespace coword
