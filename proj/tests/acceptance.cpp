// Acceptance run: one PASS/FAIL line per criterion, each within its time
// budget. Pass --long to include the i = 3 shortest-word search.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <cstring>
#include <functional>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "powerfree/automata.hpp"
#include "powerfree/constructions.hpp"
#include "powerfree/search.hpp"
#include "powerfree/text.hpp"
#include "powerfree/verify.hpp"

using namespace powerfree;

namespace {

struct Outcome {
  bool ok = true;
  std::string detail;
};

using Clock = std::chrono::steady_clock;

int failures = 0;

void criterion(int number, const char* title, double budget_seconds, const std::function<Outcome()>& body) {
  const auto start = Clock::now();
  Outcome out;
  try {
    out = body();
  } catch (const std::exception& e) {
    out = {false, std::string("exception: ") + e.what()};
  }
  const double seconds = std::chrono::duration<double>(Clock::now() - start).count();
  const bool in_time = seconds <= budget_seconds;
  const bool pass = out.ok && in_time;
  failures += !pass;
  char timing[96];
  std::snprintf(timing, sizeof timing, "%.2f s of %.0f s", seconds, budget_seconds);
  std::cout << (pass ? "PASS" : "FAIL") << " criterion " << number << ": " << title << " [" << timing << "]";
  if (!in_time) std::cout << " over budget;";
  if (!out.detail.empty()) std::cout << ' ' << out.detail;
  std::cout << std::endl;
}

// Keeps the reports whose names start with one of the prefixes.
Outcome summarize(const std::vector<PropertyReport>& reports, std::initializer_list<const char*> prefixes) {
  Outcome out;
  std::ostringstream detail;
  for (const auto& r : reports) {
    bool wanted = false;
    for (const char* p : prefixes) wanted = wanted || r.name.rfind(p, 0) == 0;
    if (!wanted) continue;
    out.ok = out.ok && r.passed() && r.instances > 0;
    detail << "\n    " << format_report(r);
  }
  out.detail = detail.str();
  return out;
}

std::size_t ipow(std::size_t b, std::size_t e) {
  std::size_t r = 1;
  while (e--) r *= b;
  return r;
}

}  // namespace

int main(int argc, char** argv) {
  bool long_run = false;
  for (int a = 1; a < argc; ++a) {
    if (std::strcmp(argv[a], "--long") == 0) {
      long_run = true;
    } else {
      std::cerr << "usage: acceptance [--long]\n";
      return 2;
    }
  }

  const Word w1 = parse_word("01x3");
  const std::size_t n = w1.size();
  VerifyOptions options;

  criterion(1, "D_i state counts for w_1 = (01)^3, i = 1..5", 1, [&] {
    Outcome out;
    std::ostringstream detail;
    detail << "states";
    for (std::size_t i = 1; i <= 5; ++i) {
      const std::size_t got = build_lower_bound_dfa(w1, 3, i).dfa.state_count();
      detail << ' ' << got;
      out.ok = out.ok && got == (std::size_t{1} << (i - 1)) * (n - 1) + 2;
    }
    out.detail = detail.str() + " (expected 7 12 22 42 82)";
    return out;
  });

  const std::size_t top = long_run ? 3 : 2;
  criterion(2, long_run ? "shortest cube-free word of D_i equals cyc_0(w_i), i = 1..3"
                        : "shortest cube-free word of D_i equals cyc_0(w_i), i = 1..2",
            long_run ? 300 : 60, [&] {
              Outcome out;
              std::ostringstream detail;
              for (std::size_t i = 1; i <= top; ++i) {
                const Word expected = cyc(build_w(w1, 3, i), 0);
                const auto d = build_lower_bound_dfa(w1, 3, i);
                const auto r = shortest_free_accepted(d.dfa, Constraint::kpower(3), {.max_len = ipow(n, i)});
                const bool match = r.word && *r.word == expected;
                out.ok = out.ok && match;
                detail << "\n    i=" << i << " expected length " << expected.size() << ", found ";
                if (r.word) {
                  detail << "length " << r.word->size() << (match ? " (symbol-exact match)" : " (differs)");
                  if (!match) detail << ": " << render_word(*r.word);
                } else {
                  detail << "none";
                }
              }
              out.detail = detail.str();
              return out;
            });

  criterion(3, "lemma suites (conjugates, partial conjugates, simple powers, Thue-Morse roots, w_i family)", 120,
            [&] {
              return summarize(verify_lemmas(options),
                               {"lemma1.", "lemma2.", "lemma3.", "corollary4.", "lemma5i.", "lemma6."});
            });

  criterion(4, "circularly square-free witnesses for lengths 18..24, search vs enumeration for 1..12", 120,
            [&] { return summarize(verify_lemmas(options), {"lemma5ii."}); });

  criterion(5, "Psi automaton simulation and state semantics on 25 random DFAs", 180,
            [&] { return summarize(verify_carpi(options), {"theorem9."}); });

  criterion(6, "phi split identity, length law and growth bound on 10^4 random words", 30,
            [&] { return summarize(verify_carpi(options), {"phi."}); });

  criterion(7, "every overlap-free binary word up to length 16 has a bounded phi-preimage", 60,
            [&] { return summarize(verify_carpi(options), {"psi.overlap-free-preimage-exists"}); });

  criterion(8, "mu preserves overlap-freeness and k-power-freeness; mu doubles Thue-Morse prefixes", 60,
            [&] { return summarize(verify_lemmas(options), {"mu.preserves", "mu.prefix-law"}); });

  criterion(9, "growth table for i = 1..4", 60, [&] {
    Outcome out;
    std::ostringstream detail;
    detail << "\n      i  states  |cyc_0(w_i)|  measured  log|w|/(log N)^2";
    for (const auto& row : growth_table(w1, 3, 4, 2)) {
      const bool exact = row.states == (std::size_t{1} << (row.i - 1)) * (n - 1) + 2 &&
                         row.witness_length == ipow(n, row.i) - 1;
      out.ok = out.ok && exact;
      char line[128];
      std::snprintf(line, sizeof line, "\n    %3zu  %6zu  %12zu  %8s  %.4f", row.i, row.states, row.witness_length,
                    row.measured ? std::to_string(*row.measured).c_str() : "-", row.log_ratio);
      detail << line;
    }
    out.detail = detail.str();
    return out;
  });

  std::cout << (failures == 0 ? "all criteria passed" : std::to_string(failures) + " criteria failed") << std::endl;
  return failures == 0 ? 0 : 1;
}
