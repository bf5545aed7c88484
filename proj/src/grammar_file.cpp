#include "coword/grammar_file.hpp"

#include <fstream>
#include <sstream>

namespace coword {

namespace {

std::string trim(const std::string& s) {
  const auto b = s.find_first_not_of(" \t\r");
  if (b == std::string::npos) return "";
  const auto e = s.find_last_not_of(" \t\r");
  return s.substr(b, e - b + 1);
}

std::vector<std::string> split_ws(const std::string& s) {
  std::istringstream is(s);
  std::vector<std::string> out;
  std::string t;
  while (is >> t) out.push_back(t);
  return out;
}

// Splits "lhs <sep> rhs" at the first occurrence of sep.
bool split_at(const std::string& s, const std::string& sep, std::string& lhs, std::string& rhs) {
  const auto k = s.find(sep);
  if (k == std::string::npos) return false;
  lhs = trim(s.substr(0, k));
  rhs = trim(s.substr(k + sep.size()));
  return true;
}

struct Parser {
  GrammarFile g;
  int line_no = 0;
  std::string section;
  std::set<std::string> seen;
  bool has_grammar = false;

  [[noreturn]] void fail(const std::string& msg) const {
    throw Error(ErrorKind::Parse, "line " + std::to_string(line_no) + ": " + msg);
  }

  void enter(const std::string& name) {
    if (name != "alphabet" && name != "acg" && name != "llg" && name != "mcfg") fail("unknown section [" + name + "]");
    if (!seen.insert(name).second) fail("section [" + name + "] appears twice");
    if (name != "alphabet") {
      if (has_grammar) fail("a file holds exactly one grammar section");
      has_grammar = true;
      g.kind = name == "acg" ? GrammarKind::Acg : name == "llg" ? GrammarKind::Llg : GrammarKind::Mcfg;
    }
    section = name;
  }

  void alphabet_line(const std::string& kw, const std::string& rest) {
    std::string lhs, rhs;
    if (!split_at(kw + " " + rest, "=", lhs, rhs)) fail("expected 'tokens = ...' or 'separator = ...'");
    if (lhs == "tokens") {
      for (const std::string& t : split_ws(rhs)) {
        if (t == "eps") fail("'eps' is reserved");
        g.alphabet.insert(t);
      }
    } else if (lhs == "separator") {
      if (rhs == "space")
        g.separator = " ";
      else if (rhs == "none")
        g.separator = "";
      else if (rhs.size() >= 2 && rhs.front() == '"' && rhs.back() == '"')
        g.separator = rhs.substr(1, rhs.size() - 2);
      else
        fail("separator must be space, none or a quoted string");
    } else {
      fail("unknown alphabet entry '" + lhs + "'");
    }
  }

  void acg_line(const std::string& kw, const std::string& rest) {
    StringAcg& a = g.acg;
    std::string lhs, rhs;
    if (kw == "atoms") {
      for (const std::string& t : split_ws(rest)) a.abstract_sig.atoms.insert(t);
    } else if (kw == "constant" || kw == "constants") {
      if (!split_at(rest, ":", lhs, rhs) || lhs.empty()) fail("expected 'constant NAME : TYPE'");
      if (a.abstract_sig.constants.count(lhs)) fail("constant " + lhs + " declared twice");
      a.abstract_sig.constants[lhs] = parse_type(rhs);
    } else if (kw == "lexicon") {
      if (!split_at(rest, "=", lhs, rhs) || lhs.empty()) fail("expected 'lexicon NAME = TERM'");
      if (a.term_map.count(lhs)) fail("lexical entry " + lhs + " given twice");
      a.term_map[lhs] = parse_term(rhs);
    } else if (kw == "map") {
      if (!split_at(rest, "=", lhs, rhs) || lhs.empty()) fail("expected 'map ATOM = TYPE'");
      a.type_map[lhs] = parse_type(rhs);
    } else if (kw == "initial") {
      a.initial = rest;
    } else {
      fail("unknown acg entry '" + kw + "'");
    }
  }

  void llg_line(const std::string& kw, const std::string& rest) {
    Llg& l = g.llg;
    std::string lhs, rhs;
    if (kw == "atom") {
      if (!split_at(rest, "=", lhs, rhs) || lhs.empty()) fail("expected 'atom NAME = boundary N left=...'");
      l.atoms.insert(lhs);
      l.xi.atoms[lhs] = parse_boundary_line(rhs, "boundary");
    } else if (kw == "axiom") {
      std::string name, tail, seq, body;
      if (!split_at(rest, ":", name, tail) || !split_at(tail, "=", seq, body) || name.empty())
        fail("expected 'axiom NAME : SEQUENT = MULTIWORD'");
      l.lexicon.push_back(AxiomJudgement{name, parse_sequent(seq), parse_multiword(body)});
    } else if (kw == "initial") {
      l.initial = rest;
    } else {
      fail("unknown llg entry '" + kw + "'");
    }
  }

  // "P(x, y)" starting at s[k]; advances k past the closing parenthesis.
  std::pair<std::string, std::vector<std::string>> atom(const std::string& s, std::size_t& k) {
    const auto open = s.find('(', k);
    if (open == std::string::npos) fail("expected '(' in '" + s + "'");
    const auto close = s.find(')', open);
    if (close == std::string::npos) fail("expected ')' in '" + s + "'");
    std::string pred = trim(s.substr(k, open - k));
    if (pred.empty()) fail("missing predicate name in '" + s + "'");
    std::vector<std::string> args;
    const std::string inner = s.substr(open + 1, close - open - 1);
    if (!trim(inner).empty()) {
      std::istringstream is(inner);
      std::string item;
      while (std::getline(is, item, ',')) args.push_back(trim(item));
    }
    k = close + 1;
    return {pred, args};
  }

  void mcfg_line(const std::string& kw, const std::string& rest) {
    Mcfg& m = g.mcfg;
    if (kw == "nonterminal") {
      const auto slash = rest.rfind('/');
      if (slash == std::string::npos) fail("expected 'nonterminal NAME/ARITY'");
      int arity = 0;
      try {
        arity = std::stoi(rest.substr(slash + 1));
      } catch (const std::exception&) {
        fail("bad arity in '" + rest + "'");
      }
      if (!m.nonterminals.emplace(trim(rest.substr(0, slash)), arity).second) fail("nonterminal declared twice");
    } else if (kw == "rule") {
      std::string body_text, head_text;
      if (!split_at(" " + rest, " ->", body_text, head_text)) fail("expected 'rule BODY -> HEAD'");
      Production p;
      std::set<std::string> vars;
      std::size_t k = 0;
      while (!trim(body_text.substr(k)).empty()) {
        auto [pred, args] = atom(body_text, k);
        for (const std::string& v : args) {
          if (v.empty() || v.find(' ') != std::string::npos) fail("body arguments must be single variables");
          vars.insert(v);
        }
        p.body.push_back(McfgAtom{pred, args});
        const auto next = body_text.find_first_not_of(" \t", k);
        if (next != std::string::npos) {
          if (body_text[next] != ',') fail("expected ',' between body atoms");
          k = next + 1;
        }
      }
      k = 0;
      auto [head, args] = atom(head_text, k);
      if (!trim(head_text.substr(k)).empty()) fail("trailing text after the head");
      p.head = head;
      for (const std::string& a : args) {
        std::vector<McfgSymbol> syms;
        for (const std::string& t : split_ws(a))
          if (t != "eps") syms.push_back(McfgSymbol{vars.count(t) > 0, t});
        p.args.push_back(std::move(syms));
      }
      m.productions.push_back(std::move(p));
    } else if (kw == "initial") {
      m.initial = rest;
    } else {
      fail("unknown mcfg entry '" + kw + "'");
    }
  }

  void line(const std::string& raw) {
    const std::string s = trim(raw);
    if (s.empty() || s[0] == '#') return;
    if (s.front() == '[') {
      if (s.back() != ']') fail("malformed section header");
      enter(trim(s.substr(1, s.size() - 2)));
      return;
    }
    if (section.empty()) fail("entry outside of any section");
    const auto sp = s.find_first_of(" \t=");
    const std::string kw = s.substr(0, sp);
    const std::string rest = sp == std::string::npos ? "" : trim(s.substr(sp));
    try {
      if (section == "alphabet")
        alphabet_line(kw, rest);
      else if (section == "acg")
        acg_line(kw, rest);
      else if (section == "llg")
        llg_line(kw, rest);
      else
        mcfg_line(kw, rest);
    } catch (const Error& e) {
      if (e.kind() == ErrorKind::Parse && std::string(e.what()).rfind("line ", 0) == 0) throw;
      fail(e.what());
    }
  }
};

void mirror_alphabet(GrammarFile& g) {
  g.acg.alphabet = g.llg.alphabet = g.mcfg.alphabet = g.alphabet;
  g.acg.separator = g.llg.separator = g.mcfg.separator = g.separator;
}

}  // namespace

GrammarFile parse_grammar_file(const std::string& text) {
  Parser p;
  std::istringstream is(text);
  std::string l;
  while (std::getline(is, l)) {
    ++p.line_no;
    p.line(l);
  }
  if (!p.has_grammar) throw Error(ErrorKind::Parse, "no [acg], [llg] or [mcfg] section");
  mirror_alphabet(p.g);
  return p.g;
}

GrammarFile load_grammar_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorKind::Parse, "cannot open " + path);
  std::stringstream ss;
  ss << in.rdbuf();
  try {
    return parse_grammar_file(ss.str());
  } catch (const Error& e) {
    throw Error(e.kind(), path + ": " + e.what());
  }
}

std::string write_grammar_file(const GrammarFile& g) {
  std::ostringstream os;
  os << "[alphabet]\ntokens =";
  for (const std::string& t : g.alphabet) os << " " << t;
  os << "\nseparator = "
     << (g.separator == " " ? std::string("space") : g.separator.empty() ? std::string("none") : '"' + g.separator + '"')
     << "\n\n";
  switch (g.kind) {
    case GrammarKind::Acg: {
      const StringAcg& a = g.acg;
      os << "[acg]\natoms";
      for (const std::string& t : a.abstract_sig.atoms) os << " " << t;
      os << "\n";
      for (const auto& [x, t] : a.type_map) os << "map " << x << " = " << type_to_string(t) << "\n";
      for (const auto& [c, t] : a.abstract_sig.constants) os << "constant " << c << " : " << type_to_string(t) << "\n";
      for (const auto& [c, t] : a.term_map) os << "lexicon " << c << " = " << term_to_string(t) << "\n";
      os << "initial " << a.initial << "\n";
      break;
    }
    case GrammarKind::Llg: {
      const Llg& l = g.llg;
      os << "[llg]\n";
      for (const std::string& p : l.atoms) os << "atom " << p << " = boundary " << boundary_to_string(l.xi.atoms.at(p)) << "\n";
      for (const AxiomJudgement& ax : l.lexicon) {
        std::string body = to_text(ax.body);
        while (!body.empty() && body.back() == '\n') body.pop_back();
        std::string inline_body;
        for (char c : body) inline_body += c == '\n' ? std::string("; ") : std::string(1, c);
        os << "axiom " << ax.name << " : " << sequent_to_string(ax.sequent) << " = " << inline_body << "\n";
      }
      os << "initial " << l.initial << "\n";
      break;
    }
    case GrammarKind::Mcfg: {
      const Mcfg& m = g.mcfg;
      os << "[mcfg]\n";
      for (const auto& [n, k] : m.nonterminals) os << "nonterminal " << n << "/" << k << "\n";
      for (const Production& p : m.productions) os << "rule " << production_to_string(p) << "\n";
      os << "initial " << m.initial << "\n";
      break;
    }
  }
  return os.str();
}

std::string validate_grammar_file(const GrammarFile& g) {
  switch (g.kind) {
    case GrammarKind::Acg: {
      AcgReport r = validate_acg(g.acg);
      return r.ok ? "" : r.message;
    }
    case GrammarKind::Llg: {
      LlgReport r = validate_llg(g.llg);
      return r.ok ? "" : r.message;
    }
    case GrammarKind::Mcfg: {
      McfgReport r = validate_mcfg(g.mcfg);
      return r.ok ? "" : r.message;
    }
  }
  return "";
}

bool grammar_equal(const GrammarFile& a, const GrammarFile& b) {
  if (a.kind != b.kind || a.alphabet != b.alphabet || a.separator != b.separator) return false;
  switch (a.kind) {
    case GrammarKind::Acg: {
      const StringAcg &x = a.acg, &y = b.acg;
      auto same_types = [](const std::map<std::string, TypePtr>& p, const std::map<std::string, TypePtr>& q) {
        if (p.size() != q.size()) return false;
        for (const auto& [k, t] : p)
          if (!q.count(k) || !type_equal(t, q.at(k))) return false;
        return true;
      };
      if (x.abstract_sig.atoms != y.abstract_sig.atoms || x.initial != y.initial) return false;
      if (!same_types(x.abstract_sig.constants, y.abstract_sig.constants) || !same_types(x.type_map, y.type_map))
        return false;
      if (x.term_map.size() != y.term_map.size()) return false;
      for (const auto& [k, t] : x.term_map)
        if (!y.term_map.count(k) || !term_equal(t, y.term_map.at(k))) return false;
      return true;
    }
    case GrammarKind::Llg: {
      const Llg &x = a.llg, &y = b.llg;
      if (x.atoms != y.atoms || x.xi.atoms != y.xi.atoms || x.initial != y.initial) return false;
      if (x.lexicon.size() != y.lexicon.size()) return false;
      for (std::size_t k = 0; k < x.lexicon.size(); ++k)
        if (x.lexicon[k].name != y.lexicon[k].name || !sequent_equal(x.lexicon[k].sequent, y.lexicon[k].sequent) ||
            !(x.lexicon[k].body == y.lexicon[k].body))
          return false;
      return true;
    }
    case GrammarKind::Mcfg:
      return a.mcfg == b.mcfg;
  }
  return false;
}

GrammarFile from_acg(const StringAcg& g) {
  GrammarFile f;
  f.kind = GrammarKind::Acg;
  f.alphabet = g.alphabet;
  f.separator = g.separator;
  f.acg = g;
  mirror_alphabet(f);
  return f;
}

GrammarFile from_llg(const Llg& g) {
  GrammarFile f;
  f.kind = GrammarKind::Llg;
  f.alphabet = g.alphabet;
  f.separator = g.separator;
  f.llg = g;
  mirror_alphabet(f);
  return f;
}

GrammarFile from_mcfg(const Mcfg& g) {
  GrammarFile f;
  f.kind = GrammarKind::Mcfg;
  f.alphabet = g.alphabet;
  f.separator = g.separator;
  f.mcfg = g;
  mirror_alphabet(f);
  return f;
}

}  // namespace coword
