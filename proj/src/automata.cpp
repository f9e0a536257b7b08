#include "powerfree/automata.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <sstream>
#include <unordered_map>

#include <json.hpp>

#include "powerfree/constructions.hpp"

namespace powerfree {

namespace {

using Subscript = std::vector<unsigned>;

std::string at_state(std::size_t q) { return "state " + std::to_string(q); }

}  // namespace

Dfa::Dfa(std::size_t state_count, std::size_t alphabet_size, std::vector<StateId> table,
         StateId initial, std::vector<StateId> finals, std::optional<StateId> dead)
    : states_(state_count),
      alphabet_(alphabet_size),
      table_(std::move(table)),
      initial_(initial),
      finals_(std::move(finals)),
      final_mask_(state_count, false),
      dead_(dead) {
  if (states_ == 0) throw DfaError("automaton needs at least one state");
  if (alphabet_ == 0) throw DfaError("automaton needs a nonempty alphabet");
  if (table_.size() != states_ * alphabet_) {
    throw DfaError("transition table has " + std::to_string(table_.size()) + " entries, expected " +
                   std::to_string(states_ * alphabet_));
  }
  for (StateId t : table_) {
    if (t >= states_) throw DfaError("transition target " + std::to_string(t) + " out of range");
  }
  if (initial_ >= states_) throw DfaError("initial state out of range");
  std::sort(finals_.begin(), finals_.end());
  finals_.erase(std::unique(finals_.begin(), finals_.end()), finals_.end());
  for (StateId f : finals_) {
    if (f >= states_) throw DfaError("final state " + std::to_string(f) + " out of range");
    final_mask_[f] = true;
  }
  if (dead_) {
    if (*dead_ >= states_) throw DfaError("dead state out of range");
    if (final_mask_[*dead_]) throw DfaError("dead state cannot be final");
    for (std::size_t a = 0; a < alphabet_; ++a) {
      if (next(*dead_, static_cast<Symbol>(a)) != *dead_) {
        throw DfaError("dead state must loop on every symbol");
      }
    }
  }
}

StateId Dfa::run(StateId from, std::span<const Symbol> w) const {
  StateId q = from;
  for (Symbol a : w) {
    if (a >= alphabet_) {
      throw DfaError("symbol " + std::to_string(a) + " outside automaton alphabet of size " +
                     std::to_string(alphabet_));
    }
    q = next(q, a);
  }
  return q;
}

std::vector<bool> Dfa::co_reachable() const {
  std::vector<std::vector<StateId>> reverse(states_);
  for (std::size_t q = 0; q < states_; ++q) {
    for (std::size_t a = 0; a < alphabet_; ++a) {
      reverse[next(static_cast<StateId>(q), static_cast<Symbol>(a))].push_back(
          static_cast<StateId>(q));
    }
  }
  std::vector<bool> live(states_, false);
  std::vector<StateId> stack(finals_.begin(), finals_.end());
  for (StateId f : finals_) live[f] = true;
  while (!stack.empty()) {
    const StateId q = stack.back();
    stack.pop_back();
    for (StateId p : reverse[q]) {
      if (!live[p]) {
        live[p] = true;
        stack.push_back(p);
      }
    }
  }
  return live;
}

bool accepts(const Dfa& d, const Word& w) { return d.is_final(d.run(d.initial(), w.symbols())); }

std::optional<Word> shortest_accepted(const Dfa& d) {
  constexpr StateId kNone = static_cast<StateId>(-1);
  std::vector<StateId> parent(d.state_count(), kNone);
  std::vector<Symbol> via(d.state_count(), 0);
  std::vector<bool> seen(d.state_count(), false);
  std::deque<StateId> queue{d.initial()};
  seen[d.initial()] = true;
  while (!queue.empty()) {
    const StateId q = queue.front();
    queue.pop_front();
    if (d.is_final(q)) {
      std::vector<Symbol> reversed;
      for (StateId s = q; parent[s] != kNone; s = parent[s]) reversed.push_back(via[s]);
      return Word(std::vector<Symbol>(reversed.rbegin(), reversed.rend()), d.alphabet_size());
    }
    for (std::size_t a = 0; a < d.alphabet_size(); ++a) {
      const StateId t = d.next(q, static_cast<Symbol>(a));
      if (seen[t]) continue;
      seen[t] = true;
      parent[t] = q;
      via[t] = static_cast<Symbol>(a);
      queue.push_back(t);
    }
  }
  return std::nullopt;
}

Dfa product_intersection(const Dfa& d1, const Dfa& d2) {
  if (d1.alphabet_size() != d2.alphabet_size()) {
    throw DfaError("product of automata over different alphabets");
  }
  const std::size_t sigma = d1.alphabet_size();
  const auto is_dead = [&](StateId p, StateId q) { return d1.dead() == p || d2.dead() == q; };

  std::map<std::pair<StateId, StateId>, StateId> ids;
  std::vector<std::pair<StateId, StateId>> pairs;
  std::optional<StateId> dead;
  std::vector<StateId> table;

  const auto intern = [&](StateId p, StateId q) -> StateId {
    if (is_dead(p, q)) {
      if (!dead) {
        dead = static_cast<StateId>(pairs.size());
        pairs.emplace_back(p, q);
      }
      return *dead;
    }
    auto [it, fresh] = ids.try_emplace({p, q}, static_cast<StateId>(pairs.size()));
    if (fresh) pairs.emplace_back(p, q);
    return it->second;
  };

  intern(d1.initial(), d2.initial());
  for (std::size_t s = 0; s < pairs.size(); ++s) {
    const auto [p, q] = pairs[s];
    table.resize((s + 1) * sigma);
    for (std::size_t a = 0; a < sigma; ++a) {
      table[s * sigma + a] =
          (dead && s == *dead) ? *dead
                               : intern(d1.next(p, static_cast<Symbol>(a)), d2.next(q, static_cast<Symbol>(a)));
    }
  }
  std::vector<StateId> finals;
  for (std::size_t s = 0; s < pairs.size(); ++s) {
    if (dead && s == *dead) continue;
    if (d1.is_final(pairs[s].first) && d2.is_final(pairs[s].second)) {
      finals.push_back(static_cast<StateId>(s));
    }
  }
  return Dfa(pairs.size(), sigma, std::move(table), 0, std::move(finals), dead);
}

Dfa canonicalize(const Dfa& d) {
  constexpr StateId kUnset = static_cast<StateId>(-1);
  const std::size_t n = d.state_count();
  const std::size_t sigma = d.alphabet_size();
  std::vector<StateId> order;
  std::vector<StateId> rank(n, kUnset);
  const auto visit = [&](StateId q) {
    if (rank[q] == kUnset) {
      rank[q] = static_cast<StateId>(order.size());
      order.push_back(q);
    }
  };
  visit(d.initial());
  for (std::size_t i = 0; i < order.size(); ++i) {
    for (std::size_t a = 0; a < sigma; ++a) visit(d.next(order[i], static_cast<Symbol>(a)));
  }
  for (std::size_t q = 0; q < n; ++q) visit(static_cast<StateId>(q));

  std::vector<StateId> table(n * sigma);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t a = 0; a < sigma; ++a) {
      table[i * sigma + a] = rank[d.next(order[i], static_cast<Symbol>(a))];
    }
  }
  std::vector<StateId> finals;
  for (StateId f : d.finals()) finals.push_back(rank[f]);
  std::optional<StateId> dead;
  if (d.dead()) dead = rank[*d.dead()];
  return Dfa(n, sigma, std::move(table), 0, std::move(finals), dead);
}

std::string to_json(const Dfa& d) {
  nlohmann::ordered_json doc;
  doc["alphabet"] = d.alphabet_size();
  doc["states"] = d.state_count();
  doc["initial"] = d.initial();
  doc["finals"] = d.finals();
  doc["dead"] = d.dead() ? nlohmann::ordered_json(*d.dead()) : nlohmann::ordered_json(nullptr);
  auto rows = nlohmann::ordered_json::array();
  for (std::size_t q = 0; q < d.state_count(); ++q) {
    auto row = nlohmann::ordered_json::array();
    for (std::size_t a = 0; a < d.alphabet_size(); ++a) {
      row.push_back(d.next(static_cast<StateId>(q), static_cast<Symbol>(a)));
    }
    rows.push_back(std::move(row));
  }
  doc["transitions"] = std::move(rows);
  return doc.dump() + "\n";
}

Dfa from_json(std::string_view text) {
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw DfaError(std::string("malformed automaton document: ") + e.what());
  }
  if (!doc.is_object()) throw DfaError("automaton document must be a JSON object");

  const auto count = [&](const char* key) -> std::size_t {
    if (!doc.contains(key)) throw DfaError(std::string("missing field \"") + key + "\"");
    const auto& v = doc.at(key);
    if (!v.is_number_unsigned()) {
      throw DfaError(std::string("field \"") + key + "\" must be a non-negative integer");
    }
    return v.get<std::size_t>();
  };
  const std::size_t sigma = count("alphabet");
  const std::size_t states = count("states");
  const std::size_t initial = count("initial");
  if (initial >= states) throw DfaError("initial state out of range");

  const auto state_value = [&](const nlohmann::json& v, const std::string& where) -> StateId {
    if (!v.is_number_unsigned()) throw DfaError(where + " must be a non-negative integer");
    const auto q = v.get<std::size_t>();
    if (q >= states) throw DfaError(where + " = " + std::to_string(q) + " is not below \"states\"");
    return static_cast<StateId>(q);
  };

  if (!doc.contains("finals") || !doc.at("finals").is_array()) {
    throw DfaError("field \"finals\" must be an array");
  }
  std::vector<StateId> finals;
  for (const auto& f : doc.at("finals")) finals.push_back(state_value(f, "final state"));

  std::optional<StateId> dead;
  if (!doc.contains("dead")) throw DfaError("missing field \"dead\"");
  if (!doc.at("dead").is_null()) dead = state_value(doc.at("dead"), "dead state");

  if (!doc.contains("transitions") || !doc.at("transitions").is_array()) {
    throw DfaError("field \"transitions\" must be an array");
  }
  const auto& rows = doc.at("transitions");
  if (rows.size() != states) throw DfaError("\"transitions\" must have one row per state");
  std::vector<StateId> table;
  table.reserve(states * sigma);
  for (std::size_t q = 0; q < states; ++q) {
    const auto& row = rows[q];
    if (!row.is_array() || row.size() != sigma) {
      throw DfaError("transition row of " + at_state(q) + " must have one entry per symbol");
    }
    for (std::size_t a = 0; a < sigma; ++a) {
      table.push_back(state_value(row[a], "transition target of " + at_state(q)));
    }
  }
  return Dfa(states, sigma, std::move(table), static_cast<StateId>(initial), std::move(finals), dead);
}

std::string StateLabel::render() const {
  std::string out = "q_{";
  for (std::size_t i = 0; i < subscript.size(); ++i) {
    if (i) out += ',';
    out += std::to_string(subscript[i]);
  }
  return out + "}";
}

std::string to_dot(const Dfa& d, const StateLabels* labels, DotOptions options) {
  const auto hidden = [&](StateId q) { return !options.show_dead && d.dead() == q; };
  const auto name = [&](StateId q) {
    if (labels && q < labels->size() && (*labels)[q]) return "\"" + (*labels)[q]->render() + "\"";
    if (d.dead() == q) return std::string("\"q_d\"");
    return "\"" + std::to_string(q) + "\"";
  };

  std::ostringstream out;
  out << "digraph {\n  rankdir=LR;\n";
  for (std::size_t s = 0; s < d.state_count(); ++s) {
    const auto q = static_cast<StateId>(s);
    if (hidden(q)) continue;
    out << "  " << name(q) << " [shape=" << (d.is_final(q) ? "doublecircle" : "circle");
    if (q == d.initial()) out << ", penwidth=2";
    out << "];\n";
  }
  for (std::size_t s = 0; s < d.state_count(); ++s) {
    const auto q = static_cast<StateId>(s);
    if (hidden(q)) continue;
    // One edge per target, labelled with every symbol leading there.
    std::map<StateId, std::string> edges;
    for (std::size_t a = 0; a < d.alphabet_size(); ++a) {
      const StateId t = d.next(q, static_cast<Symbol>(a));
      if (hidden(t)) continue;
      auto& label = edges[t];
      if (!label.empty()) label += ',';
      label += std::to_string(a);
    }
    for (const auto& [t, label] : edges) {
      out << "  " << name(q) << " -> " << name(t) << " [label=\"" << label << "\"];\n";
    }
  }
  out << "}\n";
  return out.str();
}

std::optional<StateId> LabeledDfa::find(const StateLabel& label) const {
  for (std::size_t q = 0; q < labels.size(); ++q) {
    if (labels[q] && *labels[q] == label) return static_cast<StateId>(q);
  }
  return std::nullopt;
}

namespace {

// D_i under construction. Missing transitions lead to the dead state.
struct LabeledAutomaton {
  std::vector<Subscript> states;  // excluding the dead state
  std::map<Subscript, std::map<Symbol, Subscript>> delta;
  Subscript final_state;

  const Subscript* step(const Subscript& q, Symbol c) const {
    auto row = delta.find(q);
    if (row == delta.end()) return nullptr;
    auto it = row->second.find(c);
    return it == row->second.end() ? nullptr : &it->second;
  }
};

Subscript prepend(unsigned head, const Subscript& tail) {
  Subscript out{head};
  out.insert(out.end(), tail.begin(), tail.end());
  return out;
}

[[noreturn]] void inconsistent(const std::string& what) {
  throw DfaError("lower-bound automaton construction is inconsistent: " + what);
}

LabeledAutomaton first_automaton(const Word& w1) {
  const auto n = static_cast<unsigned>(w1.size());
  LabeledAutomaton d;
  for (unsigned j = 0; j < n; ++j) d.states.push_back({1, j});
  for (unsigned j = 0; j + 1 < n; ++j) d.delta[{1, j}][w1[j]] = {1, j + 1};
  d.final_state = {1, n - 1};
  return d;
}

// D_i -> D_{i+1}; `letter` is a_i and `previous` is a_{i-1}.
LabeledAutomaton next_automaton(const LabeledAutomaton& d, unsigned i, unsigned n, Symbol letter,
                                Symbol previous) {
  LabeledAutomaton out = d;  // old states and transitions are kept

  std::vector<Subscript> copied;
  for (const auto& t : d.states) {
    if (t == d.final_state) continue;
    copied.push_back(t);
    out.states.push_back(prepend(i + 1, t));
  }
  // The copy mirrors transitions between non-final live states.
  for (const auto& t : copied) {
    auto row = d.delta.find(t);
    if (row == d.delta.end()) continue;
    for (const auto& [c, s] : row->second) {
      if (s == d.final_state) continue;
      out.delta[prepend(i + 1, t)][c] = prepend(i + 1, s);
    }
  }

  // The new final state copies the level-i state that steps into q_{1,n-1}.
  const Subscript last = {1, n - 1};
  std::vector<Subscript> finals;
  for (const auto& t : copied) {
    if (t.empty() || t.front() != i) continue;
    auto row = d.delta.find(t);
    if (row == d.delta.end()) continue;
    for (const auto& [c, s] : row->second) {
      if (s == last) {
        finals.push_back(prepend(i + 1, t));
        break;
      }
    }
  }
  if (finals.size() != 1) {
    inconsistent("level " + std::to_string(i + 1) + " has " + std::to_string(finals.size()) +
                 " final states");
  }
  out.final_state = finals.front();

  // Leaving the old final state.
  out.delta[d.final_state][letter] = {1, 1};
  out.delta[d.final_state][previous] = {i + 1, 1, 0};

  if (i == 1) {
    for (unsigned j = 0; j + 2 < n; ++j) out.delta[{2, 1, j}][letter] = {1, j + 2};
  } else {
    for (const auto& t : copied) {
      const Subscript source = prepend(i + 1, t);
      if (source == out.final_state) continue;
      const Subscript* target = d.step(t, previous);
      if (!target || target->size() != 2 || target->front() != 1) continue;
      const unsigned j = (*target)[1];
      if (j + 1 >= n) {
        inconsistent("state " + StateLabel{source}.render() + " would step to q_{1," +
                     std::to_string(j + 1) + "}");
      }
      out.delta[source][letter] = {1, j + 1};
    }
  }
  return out;
}

}  // namespace

LabeledDfa build_lower_bound_dfa(const Word& w1, unsigned k, std::size_t i) {
  if (i == 0) throw DfaError("family index starts at 1");
  if (!is_simple_kpower(w1, k)) throw DfaError("base word is not a simple k-power");
  const std::size_t m = base_alphabet(k);
  for (Symbol s : w1) {
    if (s >= m) throw DfaError("base word must be over an alphabet of size " + std::to_string(m));
  }
  const auto n = static_cast<unsigned>(w1.size());

  LabeledAutomaton level = first_automaton(w1);
  for (std::size_t step = 1; step < i; ++step) {
    const auto letter = static_cast<Symbol>(m + step - 1);
    const Symbol previous = step == 1 ? w1[n - 1] : static_cast<Symbol>(m + step - 2);
    level = next_automaton(level, static_cast<unsigned>(step), n, letter, previous);
  }

  std::vector<Subscript> order = level.states;
  std::sort(order.begin(), order.end(), [](const Subscript& a, const Subscript& b) {
    return StateLabel{a} < StateLabel{b};
  });
  std::map<Subscript, StateId> id;
  for (std::size_t q = 0; q < order.size(); ++q) id[order[q]] = static_cast<StateId>(q);

  const std::size_t sigma = m + i - 1;
  const auto dead = static_cast<StateId>(order.size());
  const std::size_t count = order.size() + 1;
  std::vector<StateId> table(count * sigma, dead);
  for (const auto& [from, row] : level.delta) {
    for (const auto& [c, to] : row) {
      if (c >= sigma) inconsistent("symbol " + std::to_string(c) + " outside the alphabet");
      table[id.at(from) * sigma + c] = id.at(to);
    }
  }

  LabeledDfa out{Dfa(count, sigma, std::move(table), id.at({1, 0}), {id.at(level.final_state)}, dead),
                 {}};
  for (const auto& s : order) out.labels.push_back(StateLabel{s});
  out.labels.emplace_back(std::nullopt);
  return out;
}

}  // namespace powerfree
