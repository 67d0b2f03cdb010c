#pragma once

#include <map>
#include <sstream>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "glstar/errors.hpp"
#include "glstar/learner.hpp"
#include "glstar/moore.hpp"
#include "glstar/presentations.hpp"
#include "glstar/rational.hpp"
#include "glstar/rfsa.hpp"
#include "glstar/sorted.hpp"
#include "glstar/syntactic.hpp"
#include "glstar/weighted.hpp"

namespace glstar {

using Json = nlohmann::ordered_json;

namespace detail {

inline Json names_json(const Alphabet& a) { return Json(a.names()); }

inline Alphabet alphabet_from(const Json& j) {
  if (!j.is_array()) throw InvalidInput("\"alphabet\" must be an array of letter names");
  std::vector<std::string> names;
  for (const auto& x : j) names.push_back(x.get<std::string>());
  return Alphabet(std::move(names));
}

inline std::size_t index_key(const std::string& key, std::size_t bound, const char* what) {
  std::size_t pos = 0;
  unsigned long v = 0;
  try {
    v = std::stoul(key, &pos);
  } catch (const std::exception&) {
    pos = 0;
  }
  if (pos != key.size() || key.empty() || v >= bound) throw InvalidInput(std::string("bad ") + what + " '" + key + "'");
  return v;
}

inline const Json& field(const Json& j, const char* name) {
  if (!j.is_object() || !j.contains(name)) throw InvalidInput(std::string("missing field \"") + name + "\"");
  return j.at(name);
}

inline void expect_kind(const Json& j, const char* kind) {
  if (field(j, "kind") != kind) throw InvalidInput(std::string("expected \"kind\": \"") + kind + "\"");
}

template <class F>
auto guarded(F&& f) -> decltype(f()) {
  try {
    return f();
  } catch (const Json::exception& e) {
    throw InvalidInput(std::string("malformed JSON: ") + e.what());
  }
}

inline Json words_json(const Alphabet& a, const std::vector<Word>& ws) {
  Json out = Json::array();
  for (const auto& w : ws) out.push_back(a.format(w));
  return out;
}

}  // namespace detail

inline Json to_json(const MooreMachine& m) {
  Json j;
  j["kind"] = "moore";
  j["alphabet"] = detail::names_json(m.alphabet());
  j["states"] = m.size();
  j["initial"] = m.initial();
  Json out = Json::object(), trans = Json::object();
  for (State q = 0; q < m.size(); ++q) {
    out[std::to_string(q)] = m.output(q);
    Json row = Json::object();
    for (Letter a = 0; a < m.alphabet().size(); ++a) row[m.alphabet().name(a)] = m.next(q, a);
    trans[std::to_string(q)] = row;
  }
  j["output"] = out;
  j["transitions"] = trans;
  return j;
}

inline MooreMachine moore_from_json(const Json& j) {
  return detail::guarded([&] {
    detail::expect_kind(j, "moore");
    Alphabet sigma = detail::alphabet_from(detail::field(j, "alphabet"));
    std::size_t n = detail::field(j, "states").get<std::size_t>();
    State init = detail::field(j, "initial").get<State>();
    std::vector<bool> out(n, false), seen_out(n, false);
    for (const auto& [key, v] : detail::field(j, "output").items()) {
      std::size_t q = detail::index_key(key, n, "state");
      out[q] = v.get<bool>();
      seen_out[q] = true;
    }
    for (std::size_t q = 0; q < n; ++q)
      if (!seen_out[q]) throw InvalidInput("output missing for state " + std::to_string(q));
    const std::size_t k = sigma.size();
    std::vector<State> delta(n * k);
    std::vector<bool> seen(n * k, false);
    for (const auto& [key, row] : detail::field(j, "transitions").items()) {
      std::size_t q = detail::index_key(key, n, "state");
      for (const auto& [letter, target] : row.items()) {
        Letter a = sigma.index(letter);
        delta[q * k + a] = target.get<State>();
        seen[q * k + a] = true;
      }
    }
    for (std::size_t i = 0; i < n * k; ++i)
      if (!seen[i]) throw InvalidInput("transition table is not total");
    return MooreMachine(std::move(sigma), n, init, std::move(delta), std::move(out));
  });
}

inline Json to_json(const WeightedAutomaton& m) {
  auto vec = [](const Vector& v) {
    Json out = Json::array();
    for (const auto& x : v) out.push_back(format_rational(x));
    return out;
  };
  Json j;
  j["kind"] = "wfa";
  j["alphabet"] = detail::names_json(m.alphabet());
  j["states"] = m.dimension();
  j["initial"] = vec(m.initial());
  Json out = Json::object();
  for (std::size_t i = 0; i < m.dimension(); ++i) out[std::to_string(i)] = format_rational(m.final_weights()[i]);
  j["output"] = out;
  Json trans = Json::object();
  for (Letter a = 0; a < m.alphabet().size(); ++a) {
    Json rows = Json::array();
    for (const auto& r : m.matrix(a)) rows.push_back(vec(r));
    trans[m.alphabet().name(a)] = rows;
  }
  j["transitions"] = trans;
  return j;
}

inline WeightedAutomaton wfa_from_json(const Json& j) {
  return detail::guarded([&] {
    detail::expect_kind(j, "wfa");
    Alphabet sigma = detail::alphabet_from(detail::field(j, "alphabet"));
    std::size_t d = detail::field(j, "states").get<std::size_t>();
    auto vec = [](const Json& a) {
      if (!a.is_array()) throw InvalidInput("expected an array of rationals");
      Vector v;
      for (const auto& x : a) v.push_back(x.is_string() ? parse_rational(x.get<std::string>()) : Rational(x.get<long long>()));
      return v;
    };
    Vector init = vec(detail::field(j, "initial"));
    Vector fin(d);
    std::vector<bool> seen(d, false);
    for (const auto& [key, v] : detail::field(j, "output").items()) {
      std::size_t i = detail::index_key(key, d, "state");
      fin[i] = v.is_string() ? parse_rational(v.get<std::string>()) : Rational(v.get<long long>());
      seen[i] = true;
    }
    for (std::size_t i = 0; i < d; ++i)
      if (!seen[i]) throw InvalidInput("output missing for state " + std::to_string(i));
    std::vector<Matrix> mats(sigma.size());
    std::vector<bool> have(sigma.size(), false);
    for (const auto& [letter, rows] : detail::field(j, "transitions").items()) {
      Letter a = sigma.index(letter);
      for (const auto& r : rows) mats[a].push_back(vec(r));
      have[a] = true;
    }
    for (Letter a = 0; a < sigma.size(); ++a)
      if (!have[a]) throw InvalidInput("matrix missing for letter '" + sigma.name(a) + "'");
    if (init.size() != d) throw InvalidInput("initial vector has wrong dimension");
    return WeightedAutomaton(std::move(sigma), std::move(init), std::move(mats), std::move(fin));
  });
}

inline Json to_json(const SortedMachine& m) {
  const auto& sigma = m.alphabet();
  Json j;
  j["kind"] = "sorted";
  j["sorts"] = sigma.sorts();
  Json names = Json::array();
  for (const auto& l : sigma.letters()) names.push_back(l.name);
  j["alphabet"] = names;
  Json letters = Json::object();
  for (const auto& l : sigma.letters()) letters[sigma.sort_name(l.from) + ">" + sigma.sort_name(l.to)].push_back(l.name);
  j["letters"] = letters;
  Json gens = Json::array();
  for (const auto& g : sigma.generators()) gens.push_back({{"name", g.name}, {"sort", sigma.sort_name(g.sort)}});
  j["generators"] = gens;
  Json states = Json::object(), init = Json::object(), out = Json::object(), trans = Json::object();
  for (Sort s = 0; s < sigma.sort_count(); ++s) {
    const auto& sn = sigma.sort_name(s);
    states[sn] = m.states(s);
    init[sn] = Json::object();
    out[sn] = Json::object();
    trans[sn] = Json::object();
    for (State q = 0; q < m.states(s); ++q) {
      out[sn][std::to_string(q)] = m.output(s, q);
      Json row = Json::object();
      for (Letter a : sigma.letters_from(s)) row[sigma.letter(a).name] = m.next(a, q);
      trans[sn][std::to_string(q)] = row;
    }
  }
  for (std::size_t g = 0; g < sigma.generator_count(); ++g)
    init[sigma.sort_name(sigma.generator(g).sort)][sigma.generator(g).name] = m.initial(g);
  j["states"] = states;
  j["initial"] = init;
  j["output"] = out;
  j["transitions"] = trans;
  return j;
}

inline SortedMachine sorted_from_json(const Json& j) {
  return detail::guarded([&] {
    detail::expect_kind(j, "sorted");
    std::vector<std::string> sorts = detail::field(j, "sorts").get<std::vector<std::string>>();
    auto sort_of = [&](const std::string& name) -> Sort {
      for (Sort s = 0; s < sorts.size(); ++s)
        if (sorts[s] == name) return s;
      throw InvalidInput("unknown sort '" + name + "'");
    };
    std::map<std::string, std::pair<Sort, Sort>> typing;
    for (const auto& [key, names] : detail::field(j, "letters").items()) {
      auto gt = key.find('>');
      if (gt == std::string::npos) throw InvalidInput("letter group '" + key + "' is not of the form s>t");
      Sort from = sort_of(key.substr(0, gt)), to = sort_of(key.substr(gt + 1));
      for (const auto& n : names) typing[n.get<std::string>()] = {from, to};
    }
    std::vector<SortedLetter> letters;
    for (const auto& n : detail::field(j, "alphabet")) {
      auto name = n.get<std::string>();
      auto it = typing.find(name);
      if (it == typing.end()) throw InvalidInput("letter '" + name + "' has no sort typing");
      letters.push_back({name, it->second.first, it->second.second});
    }
    if (letters.size() != typing.size()) throw InvalidInput("\"letters\" and \"alphabet\" disagree");
    std::vector<Generator> gens;
    for (const auto& g : detail::field(j, "generators"))
      gens.push_back({detail::field(g, "name").get<std::string>(), sort_of(detail::field(g, "sort").get<std::string>())});
    SortedAlphabet sigma(sorts, letters, gens);

    std::vector<std::size_t> counts;
    for (const auto& s : sorts) counts.push_back(detail::field(detail::field(j, "states"), s.c_str()).get<std::size_t>());
    std::vector<State> init(gens.size());
    for (std::size_t g = 0; g < gens.size(); ++g)
      init[g] = detail::field(detail::field(detail::field(j, "initial"), sorts[gens[g].sort].c_str()), gens[g].name.c_str())
                    .get<State>();
    std::vector<std::vector<bool>> out(sorts.size());
    std::vector<std::vector<State>> delta(letters.size());
    for (Letter a = 0; a < letters.size(); ++a) delta[a].assign(counts[letters[a].from], 0);
    for (Sort s = 0; s < sorts.size(); ++s) {
      const Json& os = detail::field(detail::field(j, "output"), sorts[s].c_str());
      const Json& ts = detail::field(detail::field(j, "transitions"), sorts[s].c_str());
      for (State q = 0; q < counts[s]; ++q) {
        auto key = std::to_string(q);
        out[s].push_back(detail::field(os, key.c_str()).get<bool>());
        const Json& row = detail::field(ts, key.c_str());
        for (Letter a : sigma.letters_from(s)) delta[a][q] = detail::field(row, letters[a].name.c_str()).get<State>();
      }
    }
    return SortedMachine(std::move(sigma), std::move(counts), std::move(init), std::move(delta), std::move(out));
  });
}

inline Json to_json(const Rfsa& r) {
  Json j;
  j["kind"] = "rfsa";
  j["alphabet"] = detail::names_json(r.alphabet);
  j["states"] = r.states;
  j["initial"] = r.initial;
  Json trans = Json::object();
  for (State q = 0; q < r.states; ++q) {
    Json row = Json::object();
    for (Letter a = 0; a < r.alphabet.size(); ++a) row[r.alphabet.name(a)] = r.transitions[q][a];
    trans[std::to_string(q)] = row;
  }
  j["transitions"] = trans;
  Json acc = Json::array();
  for (State q = 0; q < r.states; ++q)
    if (r.accepting[q]) acc.push_back(q);
  j["accepting"] = acc;
  return j;
}

inline Rfsa rfsa_from_json(const Json& j) {
  return detail::guarded([&] {
    detail::expect_kind(j, "rfsa");
    Rfsa r;
    r.alphabet = detail::alphabet_from(detail::field(j, "alphabet"));
    r.states = detail::field(j, "states").get<std::size_t>();
    r.initial = detail::field(j, "initial").get<std::vector<State>>();
    r.transitions.assign(r.states, std::vector<std::vector<State>>(r.alphabet.size()));
    for (const auto& [key, row] : detail::field(j, "transitions").items()) {
      State q = detail::index_key(key, r.states, "state");
      for (const auto& [letter, targets] : row.items())
        r.transitions[q][r.alphabet.index(letter)] = targets.get<std::vector<State>>();
    }
    r.accepting.assign(r.states, false);
    for (const auto& q : detail::field(j, "accepting")) {
      State s = q.get<State>();
      if (s >= r.states) throw InvalidInput("accepting state out of range");
      r.accepting[s] = true;
    }
    r.validate();
    return r;
  });
}

inline Json to_json(const FiniteSemigroup& s, const Alphabet& base) {
  Json j;
  j["kind"] = "semigroup";
  j["size"] = s.size;
  j["mult"] = s.mult;
  Json acc = Json::array();
  for (std::size_t x = 0; x < s.size; ++x)
    if (s.accepting[x]) acc.push_back(x);
  j["accepting"] = acc;
  j["witnesses"] = detail::words_json(base, s.witness);
  return j;
}

inline Json to_json(const WilkeAlgebra& w, const Alphabet& base) {
  Json j;
  j["kind"] = "wilke";
  j["plus"] = w.plus;
  j["omega"] = w.omega;
  j["product"] = w.product;
  j["mixed"] = w.mixed;
  j["omega_power"] = w.omega_power;
  Json acc = Json::array();
  for (std::size_t z = 0; z < w.omega; ++z)
    if (w.accepting[z]) acc.push_back(z);
  j["accepting"] = acc;
  j["plus_witnesses"] = detail::words_json(base, w.plus_witness);
  Json lassos = Json::array();
  for (const auto& l : w.omega_witness) lassos.push_back({{"spoke", base.format(l.spoke)}, {"loop", base.format(l.loop)}});
  j["omega_witnesses"] = lassos;
  return j;
}

inline Json to_json(const LearnStats& s) {
  Json j;
  j["membership_queries"] = s.membership_queries;
  j["equivalence_queries"] = s.equivalence_queries;
  j["extend_s_calls"] = s.extend_s_calls;
  j["extend_t_calls"] = s.extend_t_calls;
  j["counterexamples"] = s.counterexamples;
  j["rounds"] = s.rounds;
  j["hypothesis_sizes"] = s.hypothesis_sizes;
  return j;
}

inline Json parse_json_text(const std::string& text) {
  try {
    return Json::parse(text);
  } catch (const Json::exception& e) {
    throw InvalidInput(std::string("malformed JSON: ") + e.what());
  }
}

namespace detail {

inline std::string dot_escape(const std::string& s) {
  std::string out;
  for (char c : s) {
    if (c == '"' || c == '\\') out += '\\';
    out += c;
  }
  return out;
}

}  // namespace detail

inline std::string to_dot(const MooreMachine& m) {
  std::ostringstream os;
  os << "digraph moore {\n  rankdir=LR;\n  start [shape=point];\n";
  for (State q = 0; q < m.size(); ++q)
    os << "  q" << q << " [label=\"" << q << "\", shape=" << (m.output(q) ? "doublecircle" : "circle") << "];\n";
  os << "  start -> q" << m.initial() << ";\n";
  for (State q = 0; q < m.size(); ++q) {
    std::map<State, std::string> labels;
    for (Letter a = 0; a < m.alphabet().size(); ++a) {
      auto& l = labels[m.next(q, a)];
      l += (l.empty() ? "" : ",") + m.alphabet().name(a);
    }
    for (const auto& [p, l] : labels) os << "  q" << q << " -> q" << p << " [label=\"" << detail::dot_escape(l) << "\"];\n";
  }
  os << "}\n";
  return os.str();
}

inline std::string to_dot(const SortedMachine& m) {
  const auto& sigma = m.alphabet();
  std::ostringstream os;
  os << "digraph sorted {\n  rankdir=LR;\n";
  for (Sort s = 0; s < sigma.sort_count(); ++s) {
    os << "  subgraph cluster_" << s << " {\n    label=\"" << detail::dot_escape(sigma.sort_name(s)) << "\";\n";
    for (State q = 0; q < m.states(s); ++q)
      os << "    s" << s << "_" << q << " [label=\"" << q << "\", shape=" << (m.output(s, q) ? "doublecircle" : "circle")
         << "];\n";
    os << "  }\n";
  }
  for (std::size_t g = 0; g < sigma.generator_count(); ++g) {
    const auto& gen = sigma.generator(g);
    os << "  in" << g << " [shape=plaintext, label=\"" << detail::dot_escape(gen.name) << "\"];\n";
    os << "  in" << g << " -> s" << gen.sort << "_" << m.initial(g) << ";\n";
  }
  for (Letter a = 0; a < sigma.letter_count(); ++a) {
    const auto& l = sigma.letter(a);
    for (State q = 0; q < m.states(l.from); ++q)
      os << "  s" << l.from << "_" << q << " -> s" << l.to << "_" << m.next(a, q) << " [label=\""
         << detail::dot_escape(l.name) << "\"];\n";
  }
  os << "}\n";
  return os.str();
}

}  // namespace glstar
