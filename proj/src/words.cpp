#include "powerfree/words.hpp"

#include <algorithm>

namespace powerfree {

namespace {

void check_symbols(std::span<const Symbol> symbols, std::size_t alphabet) {
  for (Symbol s : symbols) {
    if (s >= alphabet) {
      throw WordError("symbol " + std::to_string(s) + " outside alphabet of size " +
                      std::to_string(alphabet));
    }
  }
}

// Earliest start s such that w[s+j] == w[s+j+period] for `matches` consecutive
// j, i.e. the factor w[s .. s+period+matches-1] has the given period.
std::optional<std::size_t> earliest_periodic(std::span<const Symbol> w, std::size_t period,
                                             std::size_t matches) {
  const std::size_t n = w.size();
  if (period + matches > n) return std::nullopt;
  std::size_t run = 0;
  for (std::size_t j = 0; j + period < n; ++j) {
    run = (w[j] == w[j + period]) ? run + 1 : 0;
    if (run >= matches) return j + 1 - matches;
  }
  return std::nullopt;
}

std::optional<Occurrence> first_kpower(std::span<const Symbol> w, unsigned k,
                                       std::size_t period_limit) {
  std::optional<Occurrence> best;
  for (std::size_t p = 1; p < period_limit && p * k <= w.size(); ++p) {
    auto s = earliest_periodic(w, p, (k - 1) * p);
    if (s && (!best || *s < best->start)) {
      best = Occurrence{*s, p, Constraint::Kind::kpower, k};
    }
  }
  return best;
}

void require_nonempty(const Word& w, const char* what) {
  if (w.empty()) throw WordError(std::string(what) + ": empty word");
}

void require_k(unsigned k) {
  if (k < 2) throw WordError("exponent k must be at least 2, got " + std::to_string(k));
}

}  // namespace

Word::Word(std::size_t alphabet_size) : alphabet_(alphabet_size) {
  if (alphabet_size == 0) throw WordError("alphabet size must be positive");
}

Word::Word(std::vector<Symbol> symbols, std::size_t alphabet_size)
    : symbols_(std::move(symbols)), alphabet_(alphabet_size) {
  if (alphabet_size == 0) throw WordError("alphabet size must be positive");
  check_symbols(symbols_, alphabet_);
}

Word::Word(std::initializer_list<Symbol> symbols, std::size_t alphabet_size)
    : Word(std::vector<Symbol>(symbols), alphabet_size) {}

Word Word::fit(std::vector<Symbol> symbols) {
  Symbol top = 0;
  for (Symbol s : symbols) top = std::max(top, s);
  return Word(std::move(symbols), static_cast<std::size_t>(top) + 1);
}

void Word::push_back(Symbol s) {
  if (s >= alphabet_) {
    throw WordError("symbol " + std::to_string(s) + " outside alphabet of size " +
                    std::to_string(alphabet_));
  }
  symbols_.push_back(s);
}

void Word::append(const Word& other) {
  alphabet_ = std::max(alphabet_, other.alphabet_);
  symbols_.insert(symbols_.end(), other.symbols_.begin(), other.symbols_.end());
}

Word Word::factor(std::size_t start, std::size_t length) const {
  Word out(alphabet_);
  if (start >= symbols_.size()) return out;
  const std::size_t stop = std::min(symbols_.size(), start + length);
  out.symbols_.assign(symbols_.begin() + static_cast<std::ptrdiff_t>(start),
                      symbols_.begin() + static_cast<std::ptrdiff_t>(stop));
  return out;
}

Word Word::with_alphabet(std::size_t alphabet_size) const {
  return Word(symbols_, alphabet_size);
}

Word Word::power(std::size_t k) const {
  Word out(alphabet_);
  out.symbols_.reserve(symbols_.size() * k);
  for (std::size_t r = 0; r < k; ++r) {
    out.symbols_.insert(out.symbols_.end(), symbols_.begin(), symbols_.end());
  }
  return out;
}

Word operator+(const Word& a, const Word& b) {
  Word out = a;
  out.append(b);
  return out;
}

Constraint Constraint::kpower(unsigned k) {
  require_k(k);
  return {Kind::kpower, k};
}

std::string Constraint::describe() const {
  return kind == Kind::overlap ? std::string("overlap") : "kpower(" + std::to_string(k) + ")";
}

Word rotate(const Word& w, std::size_t i) {
  if (w.empty()) return w;
  i %= w.size();
  return w.factor(i, w.size()) + w.factor(0, i);
}

Word cyc(const Word& w, std::size_t i) {
  require_nonempty(w, "cyc");
  const std::size_t n = w.size();
  if (i > n) {
    throw WordError("cyc index " + std::to_string(i) + " exceeds word length " + std::to_string(n));
  }
  if (i == 0) return w.factor(0, n - 1);
  return w.factor(i, n) + w.factor(0, i - 1);
}

bool is_primitive(const Word& w) {
  require_nonempty(w, "is_primitive");
  const std::size_t n = w.size();
  for (std::size_t d = 1; d < n; ++d) {
    if (n % d != 0) continue;
    bool periodic = true;
    for (std::size_t j = d; j < n && periodic; ++j) periodic = w[j] == w[j - d];
    if (periodic) return false;
  }
  return true;
}

std::set<Word> distinct_conjugates(const Word& w) {
  require_nonempty(w, "distinct_conjugates");
  std::set<Word> out;
  for (std::size_t i = 0; i < w.size(); ++i) out.insert(rotate(w, i));
  return out;
}

std::optional<Occurrence> find_kpower(const Word& w, unsigned k) {
  require_k(k);
  return first_kpower(w.symbols(), k, w.size() + 1);
}

std::optional<Occurrence> find_overlap(const Word& w) {
  std::optional<Occurrence> best;
  const auto s = w.symbols();
  for (std::size_t p = 1; 2 * p + 1 <= s.size(); ++p) {
    auto start = earliest_periodic(s, p, p + 1);
    if (start && (!best || *start < best->start)) {
      best = Occurrence{*start, p, Constraint::Kind::overlap, 0};
    }
  }
  return best;
}

std::optional<Occurrence> find_repetition(const Word& w, const Constraint& c) {
  return c.kind == Constraint::Kind::overlap ? find_overlap(w) : find_kpower(w, c.k);
}

bool is_free(const Word& w, const Constraint& c) { return !find_repetition(w, c); }

bool has_forbidden_suffix(std::span<const Symbol> w, const Constraint& c) {
  const std::size_t n = w.size();
  const bool overlap = c.kind == Constraint::Kind::overlap;
  for (std::size_t p = 1;; ++p) {
    const std::size_t extent = overlap ? 2 * p + 1 : p * c.k;
    if (extent > n) return false;
    const std::size_t matches = extent - p;
    bool periodic = true;
    for (std::size_t j = 0; j < matches && periodic; ++j) {
      periodic = w[n - 1 - j] == w[n - 1 - j - p];
    }
    if (periodic) return true;
  }
}

bool is_free_extension(const Word& w, bool known_free, Symbol a, const Constraint& c) {
  if (a >= w.alphabet_size()) {
    throw WordError("symbol " + std::to_string(a) + " outside alphabet of size " +
                    std::to_string(w.alphabet_size()));
  }
  Word extended = w;
  extended.push_back(a);
  if (!known_free) return is_free(extended, c);
  return !has_forbidden_suffix(extended.symbols(), c);
}

bool is_simple_kpower(const Word& w, unsigned k) {
  require_k(k);
  const std::size_t n = w.size();
  if (n == 0 || n % k != 0) return false;
  const std::size_t root = n / k;
  for (std::size_t j = root; j < n; ++j) {
    if (w[j] != w[j - root]) return false;
  }
  // Any k-power factor with period >= root spans all of w.
  return !first_kpower(w.symbols(), k, root);
}

bool is_circularly_squarefree(const Word& w) {
  require_nonempty(w, "is_circularly_squarefree");
  for (std::size_t i = 0; i < w.size(); ++i) {
    if (find_kpower(rotate(w, i), 2)) return false;
  }
  return true;
}

}  // namespace powerfree
