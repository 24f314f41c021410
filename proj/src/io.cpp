#include "forestalg/io.hpp"

#include <algorithm>

#include <fstream>
#include <map>
#include <sstream>

namespace forestalg {

namespace {

template <typename T>
T field(const Json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) throw ParseError(std::string("missing field '") + key + "'");
  try {
    return j.at(key).get<T>();
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(std::string("field '") + key + "' has the wrong type: " + e.what());
  }
}

int lookup(const std::map<std::string, int>& index, const std::string& name, const char* what) {
  const auto it = index.find(name);
  if (it == index.end()) throw ParseError(std::string("unknown ") + what + " '" + name + "'");
  return it->second;
}

std::map<std::string, int> name_index(const std::vector<std::string>& names, const char* what) {
  std::map<std::string, int> index;
  for (std::size_t i = 0; i < names.size(); ++i)
    if (!index.emplace(names[i], static_cast<int>(i)).second)
      throw ParseError(std::string("duplicate ") + what + " name '" + names[i] + "'");
  return index;
}

void check_range(int x, int size, const char* what) {
  if (x < 0 || x >= size) throw ParseError(std::string(what) + " index out of range: " + std::to_string(x));
}

}  // namespace

Json to_json(const ForestAutomaton& a) {
  Json j;
  j["alphabet"] = a.alphabet.symbols();
  j["states"] = a.states;
  j["zero"] = a.states[a.zero];
  Json plus = Json::array();
  for (int p = 0; p < a.size(); ++p) {
    Json row = Json::array();
    for (int q = 0; q < a.size(); ++q) row.push_back(a.add(p, q));
    plus.push_back(std::move(row));
  }
  j["plus"] = std::move(plus);
  Json delta = Json::object();
  for (std::size_t l = 0; l < a.alphabet.size(); ++l) delta[a.alphabet[l]] = a.delta[l];
  j["delta"] = std::move(delta);
  Json accept = Json::array();
  for (int q = 0; q < a.size(); ++q)
    if (a.accept[q]) accept.push_back(a.states[q]);
  j["accept"] = std::move(accept);
  return j;
}

ForestAutomaton automaton_from_json(const Json& j) {
  ForestAutomaton a;
  a.alphabet = Alphabet(field<std::vector<std::string>>(j, "alphabet"));
  a.states = field<std::vector<std::string>>(j, "states");
  const int n = a.size();
  if (n == 0) throw ParseError("an automaton needs at least one state");
  const auto index = name_index(a.states, "state");
  a.zero = lookup(index, field<std::string>(j, "zero"), "state");
  const auto plus = field<std::vector<std::vector<int>>>(j, "plus");
  if (static_cast<int>(plus.size()) != n) throw ParseError("plus needs one row per state");
  for (const auto& row : plus) {
    if (static_cast<int>(row.size()) != n) throw ParseError("plus rows need one entry per state");
    for (int q : row) {
      check_range(q, n, "plus");
      a.plus.push_back(q);
    }
  }
  const Json delta = field<Json>(j, "delta");
  if (!delta.is_object()) throw ParseError("delta must map labels to state arrays");
  for (const auto& [label, map] : delta.items())
    if (!a.alphabet.contains(label)) throw ParseError("delta uses label '" + label + "' outside the alphabet");
  for (std::size_t l = 0; l < a.alphabet.size(); ++l) {
    if (!delta.contains(a.alphabet[l])) throw ParseError("delta lacks label '" + a.alphabet[l] + "'");
    const auto map = delta.at(a.alphabet[l]).get<std::vector<int>>();
    if (static_cast<int>(map.size()) != n) throw ParseError("delta maps need one entry per state");
    for (int q : map) check_range(q, n, "delta");
    a.delta.push_back(map);
  }
  a.accept.assign(n, false);
  for (const auto& name : field<std::vector<std::string>>(j, "accept")) a.accept[lookup(index, name, "state")] = true;
  return a;
}

Json to_json(const Recognizer& r) {
  const ForestAlgebra& a = r.algebra();
  Json j;
  j["alphabet"] = r.morphism.alphabet.symbols();
  j["H"] = a.h_names();
  j["V"] = a.v_names();
  Json act = Json::array();
  for (int v = 0; v < a.v_size(); ++v) {
    Json row = Json::array();
    for (int h = 0; h < a.h_size(); ++h) row.push_back(a.act(v, h));
    act.push_back(std::move(row));
  }
  j["act"] = std::move(act);
  Json ins_l = Json::array(), ins_r = Json::array();
  for (int h = 0; h < a.h_size(); ++h) {
    ins_l.push_back(a.ins_left(h));
    ins_r.push_back(a.ins_right(h));
  }
  j["insL"] = std::move(ins_l);
  j["insR"] = std::move(ins_r);
  j["letters"] = r.morphism.letters;
  Json accept = Json::array();
  for (int h = 0; h < a.h_size(); ++h)
    if (r.accept[h]) accept.push_back(a.h_name(h));
  j["accept"] = std::move(accept);
  return j;
}

Recognizer recognizer_from_json(const Json& j) {
  const Alphabet alphabet(field<std::vector<std::string>>(j, "alphabet"));
  auto h_names = field<std::vector<std::string>>(j, "H");
  auto v_names = field<std::vector<std::string>>(j, "V");
  const auto h_index = name_index(h_names, "H element");
  name_index(v_names, "V element");
  const auto act = field<std::vector<std::vector<Elem>>>(j, "act");
  const auto ins_l = field<std::vector<Elem>>(j, "insL");
  const auto ins_r = field<std::vector<Elem>>(j, "insR");
  const auto letters = field<std::vector<Elem>>(j, "letters");
  if (letters.size() != alphabet.size()) throw ParseError("letters needs one V element per letter");
  for (Elem l : letters) check_range(l, static_cast<int>(v_names.size()), "letters");
  Recognizer r;
  r.morphism.algebra = ForestAlgebra::from_action(std::move(h_names), std::move(v_names), act, ins_l, ins_r);
  const auto report = check_axioms(r.algebra());
  if (!report.ok()) throw InvalidInput("algebra tables violate the axioms: " + report.violations.front());
  r.morphism.alphabet = alphabet;
  r.morphism.letters = letters;
  r.accept.assign(r.algebra().h_size(), false);
  for (const auto& name : field<std::vector<std::string>>(j, "accept"))
    r.accept[lookup(h_index, name, "H element")] = true;
  return r;
}

namespace {

LoadedRecognizer load_checked(const Json& j, const Limits& limits) {
  LoadedRecognizer out;
  if (j.is_object() && j.contains("states")) {
    out.automaton = automaton_from_json(j);
    const auto report = check_automaton(*out.automaton);
    if (!report.ok()) throw InvalidInput("invalid automaton: " + report.violations.front());
    out.recognizer = algebra_from_automaton(minimize(*out.automaton), limits);
  } else if (j.is_object() && j.contains("H")) {
    out.recognizer = recognizer_from_json(j);
  } else {
    throw ParseError("not a recognizer: expected an automaton (states, ...) or algebra tables (H, V, ...)");
  }
  return out;
}

}  // namespace

LoadedRecognizer load_recognizer(const Json& j, const Limits& limits) {
  try {
    return load_checked(j, limits);
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(std::string("malformed recognizer: ") + e.what());
  }
}

LoadedRecognizer load_recognizer_file(const std::string& path, const Limits& limits) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open '" + path + "'");
  Json j;
  try {
    j = Json::parse(in);
  } catch (const nlohmann::json::exception& e) {
    throw ParseError("'" + path + "' is not valid JSON: " + e.what());
  }
  return load_recognizer(j, limits);
}

Json to_json(const Witness& w, const ForestAlgebra& algebra) {
  auto side = [&](Elem e) { return w.sides_in_h ? algebra.h_name(e) : algebra.v_name(e); };
  Json j;
  j["identity"] = to_string(w.kind);
  j["equation"] = equation(w.kind);
  Json elems = Json::array();
  for (const auto& e : w.elements) {
    Json x;
    x["role"] = e.role;
    x["sort"] = e.in_h ? "H" : "V";
    x["name"] = e.name;
    x["expression"] = e.expression;
    elems.push_back(std::move(x));
  }
  j["elements"] = std::move(elems);
  j["left"] = side(w.left);
  j["right"] = side(w.right);
  return j;
}

Json to_json(const Verdict& v) {
  Json j;
  j["property"] = to_string(v.property);
  j["holds"] = to_string(v.holds);
  j["witness"] = v.witness && v.subject ? to_json(*v.witness, v.subject->algebra()) : Json();
  Json p;
  p["input"] = {{"H", v.provenance.h_input}, {"V", v.provenance.v_input}};
  p["syntactic"] = {{"H", v.provenance.h_syntactic}, {"V", v.provenance.v_syntactic}};
  if (v.provenance.h_reduced)
    p["tree_reduced"] = {{"H", *v.provenance.h_reduced}, {"V", *v.provenance.v_reduced}};
  if (!v.provenance.relation.empty()) {
    p["relation"] = v.provenance.relation;
    p["relation_pairs"] = v.provenance.relation_pairs;
  }
  if (v.provenance.bound) p["bound"] = *v.provenance.bound;
  if (!v.provenance.notes.empty()) p["notes"] = v.provenance.notes;
  j["provenance"] = std::move(p);
  return j;
}

Json to_json(const PieceRelation& rel, const ForestAlgebra& a, bool with_rules) {
  Json j;
  j["variant"] = to_string(rel.variant);
  if (rel.bound) j["bound"] = *rel.bound;
  Json pairs = Json::array();
  for (int v = 0; v < a.v_size(); ++v)
    for (int w = 0; w < a.v_size(); ++w) {
      if (!rel.related(v, w)) continue;
      Json pair = Json::array({a.v_name(v), a.v_name(w)});
      if (with_rules) pair.push_back(to_string(rel.origin(v, w)));
      pairs.push_back(std::move(pair));
    }
  j["V"] = std::move(pairs);
  Json h_pairs = Json::array();
  for (int g = 0; g < a.h_size(); ++g)
    for (int h = 0; h < a.h_size(); ++h)
      if (rel.related_h(g, h)) h_pairs.push_back(Json::array({a.h_name(g), a.h_name(h)}));
  j["H"] = std::move(h_pairs);
  return j;
}

Json to_json(const Refutation& r) {
  auto text = [](const Forest& f) {
    const std::string s = render(f);
    return s.empty() ? std::string("0") : s;
  };
  Json j;
  if (r.kind == RefutationKind::sim_n_violation) {
    j["kind"] = "sim_n_violation";
    j["member"] = text(r.s);
    j["non_member"] = text(r.t);
    j["variant"] = to_string(r.variant);
    j["n"] = r.n;
  } else {
    j["kind"] = "insertion_violation";
    j["p"] = render(r.p);
    j["q"] = render(r.q);
    j["t"] = text(r.t);
  }
  j["max_size"] = r.max_size;
  return j;
}

namespace {

// Like dump(2), except that arrays of scalars stay on one line.
void write_json(const Json& j, int indent, std::string& out) {
  const std::string pad(static_cast<std::size_t>(indent) + 2, ' ');
  if (j.is_array()) {
    const bool flat = std::all_of(j.begin(), j.end(), [](const Json& x) { return x.is_primitive(); });
    if (flat || j.empty()) {
      out += '[';
      for (std::size_t i = 0; i < j.size(); ++i) out += (i ? ", " : "") + j[i].dump();
      out += ']';
      return;
    }
    out += "[\n";
    for (std::size_t i = 0; i < j.size(); ++i) {
      out += pad;
      write_json(j[i], indent + 2, out);
      out += i + 1 < j.size() ? ",\n" : "\n";
    }
    out += std::string(static_cast<std::size_t>(indent), ' ') + ']';
  } else if (j.is_object() && !j.empty()) {
    out += "{\n";
    std::size_t i = 0;
    for (auto it = j.begin(); it != j.end(); ++it, ++i) {
      out += pad + Json(it.key()).dump() + ": ";
      write_json(it.value(), indent + 2, out);
      out += i + 1 < j.size() ? ",\n" : "\n";
    }
    out += std::string(static_cast<std::size_t>(indent), ' ') + '}';
  } else {
    out += j.dump();
  }
}

}  // namespace

std::string dump(const Json& j) {
  std::string out;
  write_json(j, 0, out);
  return out + "\n";
}

}  // namespace forestalg
