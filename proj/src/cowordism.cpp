#include "coword/cowordism.hpp"

#include <algorithm>
#include <sstream>

namespace coword {

Cowordism make_cowordism(Boundary dom, Boundary cod, Multiword body) {
  if (body.boundary != boundary_tensor(boundary_dual(dom), cod))
    throw Error(ErrorKind::BoundaryMismatch, "body boundary is not dual(dom) (x) cod");
  body = normalize_raw(std::move(body));
  ValidationReport rep = validate(body);
  if (!rep.ok) throw Error(ErrorKind::InvalidMultiword, rep.message);
  return Cowordism{std::move(dom), std::move(cod), std::move(body)};
}

Cowordism point(const Multiword& body) { return Cowordism{unit_boundary(), body.boundary, body}; }

Cowordism identity(const Boundary& x) {
  const int n = x.size;
  Multiword m;
  m.boundary = boundary_tensor(boundary_dual(x), x);
  for (int i = 1; i <= n; ++i) {
    if (x.is_left(i))
      m.regular.push_back(Edge{n + i, {}, n - i + 1});
    else
      m.regular.push_back(Edge{n - i + 1, {}, n + i});
  }
  std::sort(m.regular.begin(), m.regular.end());
  return Cowordism{x, x, std::move(m)};
}

Cowordism compose(const Cowordism& sigma, const Cowordism& tau) {
  if (sigma.cod != tau.dom)
    throw Error(ErrorKind::BoundaryMismatch, "cannot compose: codomain " + boundary_to_string(sigma.cod) +
                                                 " differs from domain " + boundary_to_string(tau.dom));
  Multiword glued = multiword_tensor(sigma.body, tau.body);
  Multiword body = iterated_contraction(glued, sigma.dom.size, boundary_dual(sigma.cod));
  return Cowordism{sigma.dom, tau.cod, std::move(body)};
}

Cowordism tensor(const Cowordism& sigma, const Cowordism& tau) {
  const int z = tau.dom.size;
  const int xy = sigma.dom.size + sigma.cod.size;
  Multiword m;
  m.boundary = boundary_tensor(boundary_dual(boundary_tensor(sigma.dom, tau.dom)),
                               boundary_tensor(sigma.cod, tau.cod));
  for (const Edge& e : sigma.body.regular) m.regular.push_back(Edge{e.source + z, e.label, e.target + z});
  for (const Edge& e : tau.body.regular)
    m.regular.push_back(Edge{shift(z + 1, xy, e.source), e.label, shift(z + 1, xy, e.target)});
  m.singular = sigma.body.singular;
  m.singular.insert(m.singular.end(), tau.body.singular.begin(), tau.body.singular.end());
  return Cowordism{boundary_tensor(sigma.dom, tau.dom), boundary_tensor(sigma.cod, tau.cod),
                   normalize_raw(std::move(m))};
}

Cowordism symmetry(const Boundary& x, const Boundary& y) {
  const int a = x.size;
  const int b = y.size;
  Multiword m;
  m.boundary = boundary_tensor(boundary_dual(boundary_tensor(x, y)), boundary_tensor(y, x));
  for (int i = 1; i <= b; ++i) {
    if (y.is_left(i))
      m.regular.push_back(Edge{a + b + i, {}, b - i + 1});
    else
      m.regular.push_back(Edge{b - i + 1, {}, a + b + i});
  }
  for (int i = 1; i <= a; ++i) {
    if (x.is_left(i))
      m.regular.push_back(Edge{a + 2 * b + i, {}, b + a - i + 1});
    else
      m.regular.push_back(Edge{b + a - i + 1, {}, a + 2 * b + i});
  }
  std::sort(m.regular.begin(), m.regular.end());
  return Cowordism{boundary_tensor(x, y), boundary_tensor(y, x), std::move(m)};
}

Cowordism dual(const Cowordism& sigma) {
  const int a = sigma.dom.size;
  const int b = sigma.cod.size;
  auto phi = [a, b](int i) { return i <= a ? i + b : i - a; };
  Multiword m;
  m.boundary = boundary_tensor(sigma.cod, boundary_dual(sigma.dom));
  for (const Edge& e : sigma.body.regular) m.regular.push_back(Edge{phi(e.source), e.label, phi(e.target)});
  std::sort(m.regular.begin(), m.regular.end());
  m.singular = sigma.body.singular;
  return Cowordism{boundary_dual(sigma.cod), boundary_dual(sigma.dom), std::move(m)};
}

Cowordism curry(const Cowordism& sigma, int y_size) {
  if (y_size < 0 || y_size > sigma.dom.size)
    throw Error(ErrorKind::OutOfRange, "curry split point " + std::to_string(y_size) + " out of range");
  const Boundary y = sub_boundary(sigma.dom, 0, y_size);
  const Boundary x = sub_boundary(sigma.dom, y_size, sigma.dom.size - y_size);
  return Cowordism{x, boundary_tensor(boundary_dual(y), sigma.cod), sigma.body};
}

Cowordism uncurry(const Cowordism& tau, int y_size) {
  if (y_size < 0 || y_size > tau.cod.size)
    throw Error(ErrorKind::OutOfRange, "uncurry split point " + std::to_string(y_size) + " out of range");
  const Boundary y = boundary_dual(sub_boundary(tau.cod, 0, y_size));
  const Boundary z = sub_boundary(tau.cod, y_size, tau.cod.size - y_size);
  return Cowordism{boundary_tensor(y, tau.dom), z, tau.body};
}

std::string render(const Cowordism& sigma, RenderFormat format) {
  if (format == RenderFormat::Text) {
    return "dom " + boundary_to_string(sigma.dom) + "\ncod " + boundary_to_string(sigma.cod) + "\n" +
           to_text(sigma.body);
  }
  // Points 1..|dom| of the body are dual(dom), listed bottom-up on the left.
  const int a = sigma.dom.size;
  const int n = sigma.body.boundary.size;
  std::ostringstream os;
  os << "digraph cowordism {\n  rankdir=LR;\n  node [shape=point];\n";
  os << "  subgraph cluster_dom { label=\"dom\";";
  for (int i = 1; i <= a; ++i) os << " p" << i << ";";
  os << " }\n  subgraph cluster_cod { label=\"cod\";";
  for (int i = a + 1; i <= n; ++i) os << " p" << i << ";";
  os << " }\n";
  for (int i = 1; i <= n; ++i)
    os << "  p" << i << " [xlabel=\"" << i << (sigma.body.boundary.is_left(i) ? "l" : "r") << "\"];\n";
  for (const Edge& e : sigma.body.regular)
    os << "  p" << e.source << " -> p" << e.target << " [label=\"" << word_to_string(e.label) << "\"];\n";
  int k = 0;
  for (const Word& w : sigma.body.singular)
    os << "  c" << k++ << " [shape=circle, label=\"" << word_to_string(w) << "\"];\n";
  os << "}\n";
  return os.str();
}

Cowordism parse_cowordism(const std::string& text) {
  std::istringstream is(text);
  std::string line;
  std::optional<Boundary> dom, cod;
  std::string rest;
  while (std::getline(is, line)) {
    const auto b = line.find_first_not_of(" \t");
    if (b != std::string::npos && line.compare(b, 4, "dom ") == 0) {
      dom = parse_boundary_line(line, "dom");
    } else if (b != std::string::npos && line.compare(b, 4, "cod ") == 0) {
      cod = parse_boundary_line(line, "cod");
    } else {
      rest += line + "\n";
    }
  }
  if (!dom || !cod) throw Error(ErrorKind::Parse, "cowordism text needs dom and cod lines");
  return make_cowordism(*dom, *cod, parse_multiword(rest));
}

}  // namespace coword
