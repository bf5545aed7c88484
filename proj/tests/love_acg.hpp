#pragma once

#include "coword/acg.hpp"

namespace testfix {

inline coword::StringAcg love_acg(const std::string& initial = "S") {
  using namespace coword;
  StringAcg g;
  g.abstract_sig.atoms = {"NP", "S"};
  g.abstract_sig.constants["JOHN"] = parse_type("NP");
  g.abstract_sig.constants["MARY"] = parse_type("NP");
  g.abstract_sig.constants["LOVES"] = parse_type("NP -> NP -> S");
  g.abstract_sig.constants["MADLY"] = parse_type("(NP -> S) -> NP -> S");
  g.abstract_sig.constants["WHOM"] = parse_type("(NP -> S) -> NP -> NP");
  g.alphabet = {"John", "Mary", "loves", "madly", "whom"};
  g.type_map["NP"] = parse_type("O -> O");
  g.type_map["S"] = parse_type("O -> O");
  g.term_map["JOHN"] = parse_term("John");
  g.term_map["MARY"] = parse_term("Mary");
  g.term_map["LOVES"] = parse_term("\\x y z. x (loves (y z))");
  g.term_map["MADLY"] = parse_term("\\f x z. madly ((f x) z)");
  g.term_map["WHOM"] = parse_term("\\f x z. (f (\\y. y)) (whom (x z))");
  g.initial = initial;
  return g;
}

}  // namespace testfix
