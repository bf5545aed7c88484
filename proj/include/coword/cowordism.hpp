#pragma once

#include "coword/multiword.hpp"

namespace coword {

// A morphism dom -> cod carried by a multiword over dual(dom) (x) cod.
struct Cowordism {
  Boundary dom;
  Boundary cod;
  Multiword body;

  bool is_regular() const { return body.is_regular(); }
  auto operator<=>(const Cowordism&) const = default;
};

// Validates the body and its boundary; throws on mismatch.
Cowordism make_cowordism(Boundary dom, Boundary cod, Multiword body);
// The body read as a morphism from the unit boundary.
Cowordism point(const Multiword& body);

Cowordism identity(const Boundary& x);
// Applies sigma first, then tau.
Cowordism compose(const Cowordism& sigma, const Cowordism& tau);
Cowordism tensor(const Cowordism& sigma, const Cowordism& tau);
Cowordism symmetry(const Boundary& x, const Boundary& y);
Cowordism dual(const Cowordism& sigma);

// Hom(Y (x) X, Z) -> Hom(X, dual(Y) (x) Z), where |Y| = y_size.
Cowordism curry(const Cowordism& sigma, int y_size);
// Hom(X, dual(Y) (x) Z) -> Hom(Y (x) X, Z), where |Y| = y_size.
Cowordism uncurry(const Cowordism& tau, int y_size);

enum class RenderFormat { Text, Dot };
std::string render(const Cowordism& sigma, RenderFormat format);
Cowordism parse_cowordism(const std::string& text);

}  // namespace coword
