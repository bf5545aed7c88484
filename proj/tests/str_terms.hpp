#pragma once

#include <random>

#include "coword/acg.hpp"

namespace gen {

using namespace coword;

inline std::vector<std::string> letters(int n) {
  std::vector<std::string> out;
  for (int i = 0; i < n; ++i) out.push_back(std::string(1, static_cast<char>('a' + i)));
  return out;
}

struct StrTermGen {
  std::mt19937& rng;
  std::vector<std::string> alphabet;
  int fresh = 0;

  std::string name() { return "v" + std::to_string(fresh++); }

  int pick(int n) { return std::uniform_int_distribution<int>(0, n - 1)(rng); }

  TermPtr word_term() {
    Word w;
    for (int k = pick(4); k > 0; --k) w.push_back(alphabet[pick(static_cast<int>(alphabet.size()))]);
    std::set<std::string> alpha(alphabet.begin(), alphabet.end());
    return rho(w, alpha);
  }

  // Subterms without free variables, addressed by their path of child choices.
  static void closed_paths(const TermPtr& t, std::vector<int>& path, std::vector<std::vector<int>>& out) {
    if (context_order(t).empty()) out.push_back(path);
    if (t->kind == Term::Kind::App || t->kind == Term::Kind::Lam) {
      path.push_back(0);
      closed_paths(t->fun, path, out);
      path.pop_back();
    }
    if (t->kind == Term::Kind::App) {
      path.push_back(1);
      closed_paths(t->arg, path, out);
      path.pop_back();
    }
  }

  static TermPtr at(const TermPtr& t, const std::vector<int>& path, std::size_t k = 0) {
    if (k == path.size()) return t;
    return at(path[k] == 0 ? t->fun : t->arg, path, k + 1);
  }

  static TermPtr replace(const TermPtr& t, const std::vector<int>& path, const TermPtr& s, std::size_t k = 0) {
    if (k == path.size()) return s;
    if (t->kind == Term::Kind::Lam) return lam(t->name, replace(t->fun, path, s, k + 1));
    if (path[k] == 0) return app(replace(t->fun, path, s, k + 1), t->arg);
    return app(t->fun, replace(t->arg, path, s, k + 1));
  }

  // A closed term of type str, built from rho images by beta-eta expansions.
  TermPtr str_term(int depth) {
    if (depth == 0) return word_term();
    switch (pick(5)) {
      case 0: {
        const std::string x = name();
        return lam(x, app(str_term(depth - 1), app(str_term(depth - 1), var(x))));
      }
      case 1: {
        const std::string y = name();
        return app(lam(y, var(y)), str_term(depth - 1));
      }
      case 2: {
        const std::string x = name();
        return lam(x, app(str_term(depth - 1), var(x)));
      }
      case 3: {
        TermPtr t = str_term(depth - 1);
        std::vector<int> path;
        std::vector<std::vector<int>> paths;
        closed_paths(t, path, paths);
        const std::vector<int>& p = paths[pick(static_cast<int>(paths.size()))];
        const std::string y = name();
        return app(lam(y, replace(t, p, var(y))), at(t, p));
      }
      default:
        return word_term();
    }
  }
};

}  // namespace gen
