// powerfree: generate, check and search repetition-free words and the
// automata built around them.

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <iterator>
#include <sstream>
#include <string>

#include "powerfree/automata.hpp"
#include "powerfree/carpi.hpp"
#include "powerfree/constructions.hpp"
#include "powerfree/morphisms.hpp"
#include "powerfree/search.hpp"
#include "powerfree/text.hpp"
#include "powerfree/verify.hpp"

using namespace powerfree;

namespace {

constexpr int kOk = 0;
constexpr int kNone = 1;
constexpr int kUsage = 2;

struct IoError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

std::string read_input(const std::string& path) {
  if (path == "-") {
    return {std::istreambuf_iterator<char>(std::cin), std::istreambuf_iterator<char>()};
  }
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot open " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

void write_output(const std::string& path, const std::string& text) {
  if (path.empty() || path == "-") {
    std::cout << text;
    return;
  }
  std::ofstream out(path, std::ios::binary);
  if (!out || !(out << text)) throw IoError("cannot write " + path);
}

Constraint make_constraint(const std::string& kind, unsigned k) {
  return kind == "overlap" ? Constraint::overlap() : Constraint::kpower(k);
}

std::string describe(const Occurrence& o) {
  std::ostringstream s;
  s << (o.kind == Constraint::Kind::overlap ? "overlap" : std::to_string(o.exponent) + "-power")
    << " start " << o.start << " period " << o.period;
  return s.str();
}

struct GenWord {
  std::string family;
  unsigned k = 3;
  std::string base = "01x3";
  std::size_t i = 1;
  std::size_t length = 16;
  std::string morphism;

  int run() const {
    if (family == "thue-morse") {
      const Word t = morphism.empty() ? thue_morse_prefix(length)
                                      : fixed_point_prefix(Morphism::parse(morphism), 0, length);
      std::cout << render_word(t) << '\n';
      return kOk;
    }
    if (family == "circ-squarefree") {
      auto w = find_circularly_squarefree(length);
      if (!w) {
        std::cout << "none\n";
        return kNone;
      }
      std::cout << render_word(*w) << '\n';
      return kOk;
    }
    const Word w1 = parse_word(base);
    Word w;
    if (family == "wi") {
      w = build_w(w1, k, i);
    } else if (family == "wi-prime") {
      w = build_w_prime(w1, k, i);
    } else {
      w = simple_overlap_from_square(w1);
    }
    std::cout << render_word(w) << '\n';
    return kOk;
  }
};

struct GenDfa {
  unsigned k = 3;
  std::string base = "01x3";
  std::size_t i = 1;
  std::string out;
  std::string format = "json";
  bool show_dead = false;

  int run() const {
    const auto d = build_lower_bound_dfa(parse_word(base), k, i);
    if (format == "dot") {
      write_output(out, to_dot(d.dfa, &d.labels, {.show_dead = show_dead}));
    } else {
      write_output(out, to_json(d.dfa));
    }
    return kOk;
  }
};

struct Check {
  std::string kind;
  unsigned k = 2;
  std::string word;

  int run() const {
    const Word w = parse_word(word);
    if (kind == "primitive") {
      const bool yes = is_primitive(w);
      std::cout << (yes ? "primitive" : "not primitive") << '\n';
      return yes ? kOk : kNone;
    }
    if (kind == "simple-power") {
      const bool yes = is_simple_kpower(w, k);
      std::cout << (yes ? "simple " : "not simple ") << k << "-power\n";
      return yes ? kOk : kNone;
    }
    if (kind == "circ-squarefree") {
      const bool yes = is_circularly_squarefree(w);
      std::cout << (yes ? "circularly square-free" : "not circularly square-free") << '\n';
      return yes ? kOk : kNone;
    }
    const auto c = make_constraint(kind, k);
    if (auto o = find_repetition(w, c)) {
      std::cout << describe(*o) << '\n';
      return kNone;
    }
    std::cout << c.describe() << '\n';
    return kOk;
  }
};

struct SearchShortest {
  std::string file;
  std::string constraint = "kpower";
  unsigned k = 3;
  std::size_t max_len = 0;
  unsigned threads = 1;
  bool verbose = false;

  int run() const {
    const Dfa d = from_json(read_input(file));
    SearchOptions options{.max_len = max_len, .threads = threads};
    if (verbose) options.progress = &std::cerr;
    const auto r = shortest_free_accepted(d, make_constraint(constraint, k), options);
    if (verbose) std::cerr << "explored " << r.explored << " widest " << r.widest_level << '\n';
    switch (r.outcome) {
      case SearchResult::Outcome::found:
        std::cout << (r.word->empty() ? std::string("ε") : render_word(*r.word)) << '\n'
                  << "length " << r.word->size() << '\n';
        return kOk;
      case SearchResult::Outcome::none_exists:
        std::cout << "none (no such word exists)\n";
        return kNone;
      case SearchResult::Outcome::none_within_bound:
        break;
    }
    std::cout << "none up to length " << max_len << '\n';
    return kNone;
  }
};

struct CarpiCmd {
  std::string op;
  std::string arg;
  std::size_t max_len = 3;
  std::string out;

  static std::string show_binary(const Word& x) { return x.empty() ? "ε" : render_word(x); }
  static std::string show_codes(const Word& w) { return w.empty() ? "ε" : render_codes(w); }
  static Word codes(const std::string& text) {
    return text == "ε" || text.empty() ? Word(kCarpiAlphabet) : parse_codes(text, kCarpiAlphabet);
  }

  int run() const {
    if (op == "phi") {
      std::cout << show_binary(phi(codes(arg))) << '\n';
      return kOk;
    }
    if (op == "phi-split") {
      const auto [first, second] = phi_split(codes(arg));
      std::cout << show_binary(first) << ' ' << show_binary(second) << '\n';
      return kOk;
    }
    if (op == "invert") {
      const auto pre = invert_phi(parse_word(arg, 2), max_len);
      for (const auto& w : pre) std::cout << show_codes(w) << '\n';
      return pre.empty() ? kNone : kOk;
    }
    const Dfa d = from_json(read_input(arg));
    if (op == "build-psi") {
      const auto psi = build_psi_dfa(d);
      write_output(out, to_json(psi.dfa));
      return kOk;
    }
    const auto witness = shortest_overlap_free_via_psi(d, max_len);
    if (!witness) {
      std::cout << "none up to preimage length " << max_len << '\n';
      return kNone;
    }
    std::cout << show_binary(witness->image) << '\n'
              << "preimage " << show_codes(witness->preimage) << '\n';
    return kOk;
  }
};

struct ExportDot {
  std::string file;
  std::string out;
  bool show_dead = false;

  int run() const {
    write_output(out, to_dot(from_json(read_input(file)), nullptr, {.show_dead = show_dead}));
    return kOk;
  }
};

struct Verify {
  std::string suite = "all";
  VerifyOptions options;

  int run() const {
    std::vector<PropertyReport> reports;
    const auto take = [&](std::vector<PropertyReport> r) {
      reports.insert(reports.end(), r.begin(), r.end());
    };
    if (suite == "lemmas" || suite == "all") take(verify_lemmas(options));
    if (suite == "theorem7" || suite == "all") take(verify_theorem7(options));
    if (suite == "carpi" || suite == "all") take(verify_carpi(options));
    bool ok = true;
    for (const auto& r : reports) {
      std::cout << format_report(r) << '\n';
      ok = ok && r.passed();
    }
    return ok ? kOk : kNone;
  }
};

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Repetition-free words, their lower-bound automata and Carpi's Φ map"};
  app.require_subcommand(1);

  GenWord gen_word;
  auto* gw = app.add_subcommand("gen-word", "print a word from one of the built-in families");
  gw->add_option("--family", gen_word.family)
      ->required()
      ->check(CLI::IsMember({"thue-morse", "wi", "wi-prime", "circ-squarefree", "simple-overlap"}));
  gw->add_option("--k", gen_word.k, "exponent")->check(CLI::Range(2u, 64u));
  gw->add_option("--base", gen_word.base, "base word (simple k-power, or simple square)");
  gw->add_option("--i", gen_word.i, "family index")->check(CLI::Range(std::size_t{1}, std::size_t{16}));
  gw->add_option("--length", gen_word.length, "prefix or root length");
  gw->add_option("--morphism", gen_word.morphism, "fixed point of this morphism instead, e.g. 0->01,1->10");

  GenDfa gen_dfa;
  auto* gd = app.add_subcommand("gen-dfa", "build the lower-bound automaton D_i");
  gd->add_option("--k", gen_dfa.k)->check(CLI::Range(2u, 64u));
  gd->add_option("--base", gen_dfa.base);
  gd->add_option("--i", gen_dfa.i)->check(CLI::Range(std::size_t{1}, std::size_t{24}));
  gd->add_option("--out", gen_dfa.out, "output file (default stdout)");
  gd->add_option("--format", gen_dfa.format)->check(CLI::IsMember({"json", "dot"}));
  gd->add_flag("--show-dead", gen_dfa.show_dead, "draw the dead state in DOT output");

  Check check;
  auto* ck = app.add_subcommand("check", "test a word for a repetition property");
  ck->add_option("--kind", check.kind)
      ->required()
      ->check(CLI::IsMember({"primitive", "kpower", "overlap", "simple-power", "circ-squarefree"}));
  ck->add_option("--k", check.k)->check(CLI::Range(2u, 64u));
  ck->add_option("word", check.word)->required();

  SearchShortest search;
  auto* ss = app.add_subcommand("search-shortest", "shortest repetition-free word accepted by a DFA");
  ss->add_option("file", search.file, "DFA JSON, or - for stdin")->required();
  ss->add_option("--constraint", search.constraint)->check(CLI::IsMember({"kpower", "overlap"}));
  ss->add_option("--k", search.k)->check(CLI::Range(2u, 64u));
  ss->add_option("--max-len", search.max_len)->required();
  ss->add_option("--threads", search.threads)->check(CLI::Range(1u, 256u));
  ss->add_flag("--verbose", search.verbose, "per-level progress on stderr");

  CarpiCmd carpi;
  auto* cp = app.add_subcommand("carpi", "Φ images, preimages and the Ψ automaton");
  cp->add_option("op", carpi.op)
      ->required()
      ->check(CLI::IsMember({"phi", "phi-split", "invert", "build-psi", "via-psi"}));
  cp->add_option("arg", carpi.arg, "letter codes, binary word, or DFA file")->required();
  cp->add_option("--max-len", carpi.max_len, "preimage length bound");
  cp->add_option("--out", carpi.out);

  ExportDot export_dot;
  auto* ed = app.add_subcommand("export-dot", "render a DFA JSON file as Graphviz");
  ed->add_option("file", export_dot.file)->required();
  ed->add_option("--out", export_dot.out);
  ed->add_flag("--show-dead", export_dot.show_dead);

  Verify verify;
  auto* vf = app.add_subcommand("verify", "run property suites");
  vf->add_option("--suite", verify.suite)->check(CLI::IsMember({"lemmas", "theorem7", "carpi", "all"}));
  vf->add_option("--max-len", verify.options.max_len)->check(CLI::Range(std::size_t{1}, std::size_t{16}));
  vf->add_flag("--long", verify.options.long_tests, "include the i = 3 shortest-word search");
  vf->add_option("--seed", verify.options.seed);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kOk : kUsage;
  }

  try {
    if (gw->parsed()) return gen_word.run();
    if (gd->parsed()) return gen_dfa.run();
    if (ck->parsed()) return check.run();
    if (ss->parsed()) return search.run();
    if (cp->parsed()) return carpi.run();
    if (ed->parsed()) return export_dot.run();
    return verify.run();
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kUsage;
  }
}
