#include "cli.hpp"

#include <fstream>
#include <sstream>

#include "CLI11.hpp"
#include "coword/grammar_file.hpp"
#include "coword/laws.hpp"

namespace coword {

namespace {

struct Usage : std::runtime_error {
  using std::runtime_error::runtime_error;
};

std::string show_word(const Word& w, const std::string& sep) { return w.empty() ? "ε" : word_to_string(w, sep); }

Word read_word(const std::string& text, const GrammarFile& g) {
  if (text.empty() || text == "ε") return {};
  Word w;
  if (g.separator == " ") {
    std::istringstream is(text);
    std::string t;
    while (is >> t) w.push_back(t);
  } else if (!g.separator.empty()) {
    std::size_t at = 0;
    while (true) {
      const auto k = text.find(g.separator, at);
      w.push_back(text.substr(at, k == std::string::npos ? std::string::npos : k - at));
      if (k == std::string::npos) break;
      at = k + g.separator.size();
    }
  } else {
    // Longest alphabet match at each position.
    std::size_t at = 0;
    while (at < text.size()) {
      std::string best;
      for (const std::string& t : g.alphabet)
        if (t.size() > best.size() && text.compare(at, t.size(), t) == 0) best = t;
      if (best.empty()) throw Usage("cannot split '" + text + "' into alphabet tokens");
      w.push_back(best);
      at += best.size();
    }
  }
  for (const Token& t : w)
    if (!g.alphabet.count(t)) throw Usage("token '" + t + "' is not in the alphabet");
  return w;
}

GrammarFile load_valid(const std::string& path) {
  GrammarFile g = load_grammar_file(path);
  const std::string problem = validate_grammar_file(g);
  if (!problem.empty()) throw Usage(path + ": " + problem);
  return g;
}

Llg as_llg(const GrammarFile& g) {
  switch (g.kind) {
    case GrammarKind::Acg:
      return acg_to_llg(g.acg);
    case GrammarKind::Mcfg:
      return mcfg_to_llg(g.mcfg);
    case GrammarKind::Llg:
      break;
  }
  return g.llg;
}

std::string inline_text(const Multiword& m) {
  std::string body = to_text(m), out;
  while (!body.empty() && body.back() == '\n') body.pop_back();
  for (char c : body) out += c == '\n' ? std::string("; ") : std::string(1, c);
  return out;
}

std::string fact_to_string(const std::string& pred, const std::vector<Word>& args, const std::string& sep) {
  std::string s = pred + "(";
  for (std::size_t i = 0; i < args.size(); ++i) s += (i ? ", " : "") + show_word(args[i], sep);
  return s + ")";
}

int cmd_generate(const std::string& file, int budget, int max_len, const std::string& format, std::ostream& out,
                 std::ostream& err) {
  const GrammarFile g = load_valid(file);
  const bool words = format == "words";
  std::set<std::string> lines;
  bool open = false;
  switch (g.kind) {
    case GrammarKind::Acg: {
      if (words) {
        AcgLanguageResult r = acg_language(g.acg, budget, max_len);
        open = r.frontier_open;
        for (const Word& w : r.words) out << show_word(w, g.separator) << "\n";
        break;
      }
      std::map<std::string, int> weight;
      for (const auto& [c, t] : g.acg.term_map) weight[c] = static_cast<int>(acg_yield(g.acg, constant(c)).size());
      TermEnumeration e = enumerate_terms(g.acg.abstract_sig, atom_type(g.acg.initial), budget, weight, max_len);
      open = e.frontier_open;
      for (const TermPtr& t : e.terms) lines.insert(term_to_string(t) + " => " + show_word(acg_yield(g.acg, t), g.separator));
      break;
    }
    case GrammarKind::Llg: {
      GenerateOptions o;
      o.budget = budget;
      o.max_len = max_len;
      if (words) {
        LanguageResult r = language(g.llg, o);
        open = r.frontier_open;
        for (const Word& w : r.words) out << show_word(w, g.separator) << "\n";
        break;
      }
      GenerateResult r = generate(g.llg, o);
      open = r.frontier_open;
      for (const DerivedJudgement& j : r.judgements) lines.insert("|- " + sequent_to_string(j.sequent) + " = " + inline_text(j.body));
      break;
    }
    case GrammarKind::Mcfg: {
      const int bound = max_len >= 0 ? max_len : budget;
      if (words) {
        for (const Word& w : mcfg_language(g.mcfg, bound)) out << show_word(w, g.separator) << "\n";
        break;
      }
      for (const auto& [pred, facts] : mcfg_derive(g.mcfg, bound))
        for (const auto& f : facts) lines.insert(fact_to_string(pred, f, g.separator));
      break;
    }
  }
  for (const std::string& l : lines) out << l << "\n";
  if (open) err << "note: derivations were still growing at budget " << budget << "\n";
  return 0;
}

int cmd_member(const std::string& file, const std::string& word, int budget, std::ostream& out) {
  const GrammarFile g = load_valid(file);
  const Word w = read_word(word, g);
  GenerateOptions o;
  o.budget = budget;
  MemberResult r = member(as_llg(g), w, o);
  if (!r.yes) {
    out << "no-at-budget " << budget << "\n";
    return 1;
  }
  out << "yes (cost " << r.budget << ")\n";
  if (r.proof) out << proof_to_string(*r.proof);
  return 0;
}

int cmd_compile(const std::string& file, const std::string& to, const std::string& path, std::ostream& out) {
  const GrammarFile g = load_valid(file);
  GrammarFile result;
  if (to == "llg") {
    result = from_llg(as_llg(g));
  } else {
    switch (g.kind) {
      case GrammarKind::Mcfg:
        result = g;
        break;
      case GrammarKind::Acg:
      case GrammarKind::Llg:
        result = from_mcfg(llg_to_mcfg(as_llg(g)));
        break;
    }
  }
  const std::string text = write_grammar_file(result);
  const GrammarFile back = parse_grammar_file(text);
  const std::string problem = validate_grammar_file(back);
  if (!problem.empty() || !grammar_equal(back, result)) throw Usage("emitted grammar does not re-parse: " + problem);
  if (path.empty()) {
    out << text;
  } else {
    std::ofstream f(path);
    if (!f) throw Usage("cannot write " + path);
    f << text;
  }
  return 0;
}

void derivation_steps(const Derivation& d, std::vector<const Derivation*>& out) {
  for (const Derivation& p : d.premises) derivation_steps(p, out);
  if (d.rule == Derivation::Rule::ImpE || d.rule == Derivation::Rule::ImpI) out.push_back(&d);
}

void proof_steps(const MllProof& p, std::vector<const MllProof*>& out) {
  for (const MllProof& q : p.premises) proof_steps(q, out);
  if (p.rule != MllProof::Rule::Ex) out.push_back(&p);
}

int cmd_render(const std::string& file, const std::string& id, const std::string& format, int budget, bool final_only,
               std::ostream& out) {
  const GrammarFile g = load_valid(file);
  const RenderFormat fmt = format == "dot" ? RenderFormat::Dot : RenderFormat::Text;
  std::vector<std::pair<std::string, Cowordism>> steps;
  if (g.kind == GrammarKind::Acg) {
    TermPtr t;
    Derivation d;
    try {
      t = parse_term(id);
      d = infer(g.acg.abstract_sig, {}, t);
    } catch (const Error& e) {
      throw Usage("unknown derivation '" + id + "': " + e.what());
    }
    const Interpretation xi = acg_interpret(g.acg);
    std::vector<const Derivation*> nodes;
    derivation_steps(d, nodes);
    if (nodes.empty()) nodes.push_back(&d);
    for (const Derivation* n : nodes)
      steps.emplace_back(term_to_string(n->term) + " : " + type_to_string(n->type), interpret_derivation(xi, *n));
  } else {
    const Llg l = as_llg(g);
    GenerateOptions o;
    o.budget = budget;
    MemberResult r = member(l, read_word(id, g), o);
    if (!r.yes || !r.proof) throw Usage("unknown derivation '" + id + "' at budget " + std::to_string(budget));
    std::vector<const MllProof*> nodes;
    proof_steps(*r.proof, nodes);
    static const char* names[] = {"Id", "Cut", "Ex", "Par", "Times", "Axiom"};
    for (const MllProof* n : nodes) {
      std::string label = names[static_cast<int>(n->rule)];
      if (n->rule == MllProof::Rule::Axiom) label += " " + n->axiom;
      steps.emplace_back(label + " |- " + sequent_to_string(n->conclusion), interpret_proof(l.xi, *n, l.lexicon));
    }
  }
  if (final_only) {
    out << render(steps.back().second, fmt);
    return 0;
  }
  for (std::size_t k = 0; k < steps.size(); ++k) {
    out << (fmt == RenderFormat::Dot ? "// " : "# ") << "step " << k + 1 << ": " << steps[k].first << "\n";
    out << render(steps[k].second, fmt);
    if (k + 1 < steps.size()) out << "\n";
  }
  return 0;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Grammars over multiwords and cowordisms", "coword"};
  app.require_subcommand(1);

  std::string file, word, id, format = "words", to, path, render_format = "text";
  int budget = 10, max_len = -1, cases = 500;
  std::uint64_t seed = 1;
  bool mutant = false, final_only = false;

  CLI::App* gen = app.add_subcommand("generate", "List words or judgements up to a budget");
  gen->add_option("file", file, "Grammar file")->required();
  gen->add_option("--budget", budget, "Search budget")->check(CLI::NonNegativeNumber);
  gen->add_option("--max-len", max_len, "Longest word kept, in tokens");
  gen->add_option("--format", format, "Output format")->check(CLI::IsMember({"words", "judgements"}));

  int member_budget = 20;
  CLI::App* mem = app.add_subcommand("member", "Decide membership at a budget and print the proof");
  mem->add_option("file", file, "Grammar file")->required();
  mem->add_option("word", word, "Word, tokens joined by the file separator")->required();
  mem->add_option("--budget", member_budget, "Search budget")->check(CLI::NonNegativeNumber);

  CLI::App* comp = app.add_subcommand("compile", "Translate a grammar");
  comp->add_option("file", file, "Grammar file")->required();
  comp->add_option("--to", to, "Target formalism")->required()->check(CLI::IsMember({"llg", "mcfg"}));
  comp->add_option("--out", path, "Output path (default stdout)");

  CLI::App* laws = app.add_subcommand("laws", "Run randomized category-law checks");
  laws->add_option("--seed", seed, "Random seed");
  laws->add_option("--cases", cases, "Cases per law")->check(CLI::PositiveNumber);
  laws->add_flag("--mutant", mutant, "Use a composition that reverses labels");

  int render_budget = 20;
  CLI::App* ren = app.add_subcommand("render", "Draw the cowordisms of a derivation");
  ren->add_option("file", file, "Grammar file")->required();
  ren->add_option("derivation", id, "Abstract term (ACG) or derived word (LLG, MCFG)")->required();
  ren->add_option("--format", render_format, "Diagram format")->check(CLI::IsMember({"text", "dot"}));
  ren->add_option("--budget", render_budget, "Search budget for words")->check(CLI::NonNegativeNumber);
  ren->add_flag("--final", final_only, "Only the final cowordism, without step headers");

  std::vector<const char*> argv;
  for (const std::string& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? 0 : 2;
  }

  try {
    if (gen->parsed()) return cmd_generate(file, budget, max_len, format, out, err);
    if (mem->parsed()) return cmd_member(file, word, member_budget, out);
    if (comp->parsed()) return cmd_compile(file, to, path, out);
    if (laws->parsed()) {
      LawOptions o;
      o.seed = seed;
      o.cases = cases;
      o.mutant = mutant;
      std::vector<LawResult> r = run_laws(o);
      out << law_report(r);
      for (const LawResult& l : r)
        if (l.failures) return 1;
      return 0;
    }
    if (ren->parsed()) return cmd_render(file, id, render_format, render_budget, final_only, out);
  } catch (const Usage& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  }
  return 2;
}

}  // namespace coword
