#include "powerfree/search.hpp"

#include <algorithm>
#include <ostream>
#include <thread>

namespace powerfree {

namespace {

// Node 0 is the empty word.
constexpr std::uint32_t kRoot = 0;

struct Node {
  std::uint32_t parent;
  Symbol symbol;
  StateId state;
};

struct Child {
  std::uint32_t parent;
  Symbol symbol;
  StateId state;
  bool accepted;
};

void spell(const std::vector<Node>& nodes, std::uint32_t id, std::vector<Symbol>& out) {
  out.clear();
  for (std::uint32_t at = id; at != kRoot; at = nodes[at].parent) out.push_back(nodes[at].symbol);
  std::reverse(out.begin(), out.end());
}

// Children of frontier[begin, end) in frontier order, symbols ascending.
std::vector<Child> expand(const Dfa& d, const Constraint& c, const std::vector<bool>& live,
                          const std::vector<Node>& nodes, const std::vector<std::uint32_t>& frontier,
                          std::size_t begin, std::size_t end) {
  std::vector<Child> out;
  std::vector<Symbol> buffer;
  for (std::size_t f = begin; f < end; ++f) {
    const std::uint32_t id = frontier[f];
    spell(nodes, id, buffer);
    const StateId q = nodes[id].state;
    for (std::size_t a = 0; a < d.alphabet_size(); ++a) {
      const auto s = static_cast<Symbol>(a);
      const StateId t = d.next(q, s);
      if (!live[t]) continue;
      buffer.push_back(s);
      const bool free = !has_forbidden_suffix(buffer, c);
      buffer.pop_back();
      if (free) out.push_back({id, s, t, d.is_final(t)});
    }
  }
  return out;
}

}  // namespace

SearchResult shortest_free_accepted(const Dfa& d, const Constraint& c, const SearchOptions& options) {
  SearchResult result;
  const auto live = d.co_reachable();
  if (!live[d.initial()]) {
    result.outcome = SearchResult::Outcome::none_exists;
    return result;
  }
  if (d.is_final(d.initial())) {
    result.outcome = SearchResult::Outcome::found;
    result.word = Word(d.alphabet_size());
    result.explored = 1;
    result.widest_level = 1;
    return result;
  }

  std::vector<Node> nodes{{kRoot, 0, d.initial()}};
  std::vector<std::uint32_t> frontier{kRoot};
  result.explored = 1;
  result.widest_level = 1;

  const unsigned threads = std::max(1u, options.threads);
  for (std::size_t level = 1; level <= options.max_len; ++level) {
    std::vector<Child> children;
    if (threads == 1 || frontier.size() < 2 * threads) {
      children = expand(d, c, live, nodes, frontier, 0, frontier.size());
    } else {
      std::vector<std::vector<Child>> parts(threads);
      std::vector<std::jthread> workers;
      const std::size_t chunk = (frontier.size() + threads - 1) / threads;
      for (unsigned t = 0; t < threads; ++t) {
        const std::size_t begin = std::min(frontier.size(), t * chunk);
        const std::size_t end = std::min(frontier.size(), begin + chunk);
        workers.emplace_back([&, t, begin, end] {
          parts[t] = expand(d, c, live, nodes, frontier, begin, end);
        });
      }
      workers.clear();
      for (auto& part : parts) children.insert(children.end(), part.begin(), part.end());
    }

    if (options.progress) {
      *options.progress << "level " << level << " frontier " << children.size() << '\n';
    }
    result.explored += children.size();
    result.widest_level = std::max(result.widest_level, children.size());

    std::vector<std::uint32_t> next;
    next.reserve(children.size());
    for (const auto& child : children) {
      const auto id = static_cast<std::uint32_t>(nodes.size());
      nodes.push_back({child.parent, child.symbol, child.state});
      if (child.accepted) {
        std::vector<Symbol> symbols;
        spell(nodes, id, symbols);
        result.outcome = SearchResult::Outcome::found;
        result.word = Word(std::move(symbols), d.alphabet_size());
        return result;
      }
      next.push_back(id);
    }
    if (next.empty()) {
      result.outcome = SearchResult::Outcome::none_exists;
      return result;
    }
    frontier = std::move(next);
  }
  result.outcome = SearchResult::Outcome::none_within_bound;
  return result;
}

std::vector<Word> enumerate_free(std::size_t alphabet, const Constraint& c, std::size_t length) {
  std::vector<Word> layer{Word(alphabet)};
  for (std::size_t level = 0; level < length; ++level) {
    std::vector<Word> next;
    for (const auto& w : layer) {
      for (std::size_t a = 0; a < alphabet; ++a) {
        if (is_free_extension(w, true, static_cast<Symbol>(a), c)) {
          Word e = w;
          e.push_back(static_cast<Symbol>(a));
          next.push_back(std::move(e));
        }
      }
    }
    layer = std::move(next);
  }
  return layer;
}

std::uint64_t count_free(std::size_t alphabet, const Constraint& c, std::size_t length) {
  // Depth-first so memory stays linear in the length.
  std::vector<Symbol> word;
  std::vector<Symbol> next_symbol{0};
  std::uint64_t count = 0;
  if (length == 0) return 1;
  while (!next_symbol.empty()) {
    Symbol& a = next_symbol.back();
    if (a >= alphabet) {
      next_symbol.pop_back();
      if (!word.empty()) word.pop_back();
      continue;
    }
    word.push_back(a++);
    if (has_forbidden_suffix(word, c)) {
      word.pop_back();
      continue;
    }
    if (word.size() == length) {
      ++count;
      word.pop_back();
      continue;
    }
    next_symbol.push_back(0);
  }
  return count;
}

}  // namespace powerfree
