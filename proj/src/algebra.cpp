#include "forestalg/algebra.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <numeric>
#include <unordered_map>
#include <utility>

namespace forestalg {

namespace {

struct VectorHash {
  std::size_t operator()(const std::vector<int>& v) const noexcept {
    std::size_t h = v.size();
    for (int x : v) h = (h ^ static_cast<std::size_t>(x)) * 0x100000001b3ULL + 0x9e3779b97f4a7c15ULL;
    return h;
  }
};

/// Numbers classes of equal keys by first occurrence.
template <typename Key>
std::vector<int> classes_by_first_occurrence(const std::vector<Key>& keys) {
  std::map<Key, int> ids;
  std::vector<int> cls(keys.size());
  for (std::size_t i = 0; i < keys.size(); ++i)
    cls[i] = ids.try_emplace(keys[i], static_cast<int>(ids.size())).first->second;
  return cls;
}

std::vector<int> first_members(const std::vector<int>& cls) {
  const int n = cls.empty() ? 0 : *std::max_element(cls.begin(), cls.end()) + 1;
  std::vector<int> rep(n, -1);
  for (std::size_t i = 0; i < cls.size(); ++i)
    if (rep[cls[i]] < 0) rep[cls[i]] = static_cast<int>(i);
  return rep;
}

/// Quotient of a recognizer by a congruence given as class maps. A class is
/// accepting when any member is.
Recognizer quotient(const Recognizer& r, const std::vector<int>& h_class,
                    const std::vector<int>& v_class) {
  const ForestAlgebra& a = r.algebra();
  const auto h_rep = first_members(h_class);
  const auto v_rep = first_members(v_class);
  const int nh = static_cast<int>(h_rep.size());
  const int nv = static_cast<int>(v_rep.size());
  std::vector<std::string> h_names, v_names;
  for (int c = 0; c < nh; ++c) h_names.push_back(a.h_name(h_rep[c]));
  for (int c = 0; c < nv; ++c) v_names.push_back(a.v_name(v_rep[c]));
  std::vector<Elem> add(static_cast<std::size_t>(nh) * nh), mul(static_cast<std::size_t>(nv) * nv),
      act(static_cast<std::size_t>(nv) * nh), ins_l(nh), ins_r(nh);
  for (int g = 0; g < nh; ++g) {
    for (int h = 0; h < nh; ++h) add[g * nh + h] = h_class[a.add(h_rep[g], h_rep[h])];
    ins_l[g] = v_class[a.ins_left(h_rep[g])];
    ins_r[g] = v_class[a.ins_right(h_rep[g])];
  }
  for (int v = 0; v < nv; ++v) {
    for (int w = 0; w < nv; ++w) mul[v * nv + w] = v_class[a.mul(v_rep[v], v_rep[w])];
    for (int h = 0; h < nh; ++h) act[v * nh + h] = h_class[a.act(v_rep[v], h_rep[h])];
  }
  Recognizer out;
  out.morphism.algebra = ForestAlgebra::from_tables(
      std::move(h_names), std::move(v_names), h_class[a.zero()], v_class[a.unit()], std::move(add),
      std::move(mul), std::move(act), std::move(ins_l), std::move(ins_r));
  out.morphism.alphabet = r.morphism.alphabet;
  for (Elem l : r.morphism.letters) out.morphism.letters.push_back(v_class[l]);
  out.accept.assign(nh, false);
  for (std::size_t h = 0; h < h_class.size(); ++h)
    if (r.accept[h]) out.accept[h_class[h]] = true;
  return out;
}

/// Classes of V under the action on H given by `h_class`.
std::vector<int> v_classes_by_action(const ForestAlgebra& a, const std::vector<int>& h_class) {
  std::vector<std::vector<int>> sig(a.v_size());
  for (int v = 0; v < a.v_size(); ++v)
    for (int h = 0; h < a.h_size(); ++h) sig[v].push_back(h_class[a.act(v, h)]);
  return classes_by_first_occurrence(sig);
}

}  // namespace

// ---------------------------------------------------------------------------
// Automata

CheckReport check_automaton(const ForestAutomaton& a) {
  CheckReport report;
  auto& out = report.violations;
  const int n = a.size();
  if (n == 0) {
    out.push_back("automaton has no states");
    return report;
  }
  if (a.zero < 0 || a.zero >= n) out.push_back("zero is not a state");
  if (a.plus.size() != static_cast<std::size_t>(n) * n) out.push_back("plus table has wrong size");
  if (a.accept.size() != static_cast<std::size_t>(n)) out.push_back("accept vector has wrong size");
  if (a.delta.size() != a.alphabet.size()) out.push_back("one letter map per letter is required");
  for (std::size_t l = 0; l < a.delta.size(); ++l) {
    if (a.delta[l].size() != static_cast<std::size_t>(n))
      out.push_back("letter map for '" + a.alphabet[l] + "' has wrong size");
    for (int q : a.delta[l])
      if (q < 0 || q >= n) out.push_back("letter map for '" + a.alphabet[l] + "' leaves the state set");
  }
  for (int q : a.plus)
    if (q < 0 || q >= n) {
      out.push_back("plus table leaves the state set");
      break;
    }
  if (!out.empty()) return report;
  for (int p = 0; p < n; ++p) {
    if (a.add(a.zero, p) != p || a.add(p, a.zero) != p)
      out.push_back("zero is not an identity for state " + a.states[p]);
  }
  for (int p = 0; p < n && out.size() < 20; ++p)
    for (int q = 0; q < n && out.size() < 20; ++q)
      for (int r = 0; r < n && out.size() < 20; ++r)
        if (a.add(a.add(p, q), r) != a.add(p, a.add(q, r)))
          out.push_back("plus is not associative on (" + a.states[p] + ", " + a.states[q] + ", " +
                        a.states[r] + ")");
  return report;
}

namespace {

ForestAutomaton sub_automaton(const ForestAutomaton& a, const std::vector<int>& cls) {
  // cls maps every kept state to its class; -1 drops the state.
  const int n = cls.empty() ? 0 : *std::max_element(cls.begin(), cls.end()) + 1;
  std::vector<int> rep(n, -1);
  for (int q = 0; q < a.size(); ++q)
    if (cls[q] >= 0 && rep[cls[q]] < 0) rep[cls[q]] = q;
  ForestAutomaton out;
  out.alphabet = a.alphabet;
  for (int c = 0; c < n; ++c) out.states.push_back(a.states[rep[c]]);
  out.zero = cls[a.zero];
  out.plus.resize(static_cast<std::size_t>(n) * n);
  for (int c = 0; c < n; ++c)
    for (int d = 0; d < n; ++d) out.plus[c * n + d] = cls[a.add(rep[c], rep[d])];
  for (const auto& map : a.delta) {
    std::vector<int> m(n);
    for (int c = 0; c < n; ++c) m[c] = cls[map[rep[c]]];
    out.delta.push_back(std::move(m));
  }
  out.accept.assign(n, false);
  for (int c = 0; c < n; ++c) out.accept[c] = a.accept[rep[c]];
  return out;
}

}  // namespace

ForestAutomaton restrict_reachable(const ForestAutomaton& a) {
  std::vector<bool> seen(a.size(), false);
  std::vector<int> order{a.zero};
  seen[a.zero] = true;
  for (std::size_t head = 0; head < order.size(); ++head) {
    const int q = order[head];
    auto visit = [&](int r) {
      if (!seen[r]) {
        seen[r] = true;
        order.push_back(r);
      }
    };
    for (const auto& map : a.delta) visit(map[q]);
    for (std::size_t k = 0; k <= head; ++k) {
      visit(a.add(q, order[k]));
      visit(a.add(order[k], q));
    }
  }
  std::vector<int> cls(a.size(), -1);
  int next = 0;
  for (int q = 0; q < a.size(); ++q)
    if (seen[q]) cls[q] = next++;
  return sub_automaton(a, cls);
}

ForestAutomaton minimize(const ForestAutomaton& input) {
  const ForestAutomaton a = restrict_reachable(input);
  const int n = a.size();
  std::vector<int> cls(n);
  for (int q = 0; q < n; ++q) cls[q] = a.accept[q] ? 1 : 0;
  cls = classes_by_first_occurrence(cls);
  int count = *std::max_element(cls.begin(), cls.end()) + 1;
  for (;;) {
    std::vector<std::vector<int>> sig(n);
    for (int q = 0; q < n; ++q) {
      auto& s = sig[q];
      s.push_back(cls[q]);
      for (const auto& map : a.delta) s.push_back(cls[map[q]]);
      for (int g = 0; g < n; ++g) {
        s.push_back(cls[a.add(g, q)]);
        s.push_back(cls[a.add(q, g)]);
      }
    }
    auto refined = classes_by_first_occurrence(sig);
    const int refined_count = *std::max_element(refined.begin(), refined.end()) + 1;
    cls = std::move(refined);
    if (refined_count == count) break;
    count = refined_count;
  }
  return sub_automaton(a, cls);
}

ForestAutomaton restrict_to_trees(const ForestAutomaton& a) {
  static const char* kCount[] = {"/empty", "/tree", "/forest"};
  const int n = a.size();
  ForestAutomaton out;
  out.alphabet = a.alphabet;
  auto id = [](int q, int c) { return q * 3 + c; };
  for (int q = 0; q < n; ++q)
    for (int c = 0; c < 3; ++c) out.states.push_back(a.states[q] + kCount[c]);
  const int m = 3 * n;
  out.zero = id(a.zero, 0);
  out.plus.resize(static_cast<std::size_t>(m) * m);
  for (int p = 0; p < n; ++p)
    for (int c = 0; c < 3; ++c)
      for (int q = 0; q < n; ++q)
        for (int d = 0; d < 3; ++d) out.plus[id(p, c) * m + id(q, d)] = id(a.add(p, q), std::min(c + d, 2));
  for (const auto& map : a.delta) {
    std::vector<int> mm(m);
    for (int q = 0; q < n; ++q)
      for (int c = 0; c < 3; ++c) mm[id(q, c)] = id(map[q], 1);
    out.delta.push_back(std::move(mm));
  }
  out.accept.assign(m, false);
  for (int q = 0; q < n; ++q) out.accept[id(q, 1)] = a.accept[q];
  return restrict_reachable(out);
}

// ---------------------------------------------------------------------------
// ForestAlgebra

ForestAlgebra ForestAlgebra::from_tables(std::vector<std::string> h_names,
                                         std::vector<std::string> v_names, Elem zero, Elem unit,
                                         std::vector<Elem> add, std::vector<Elem> mul,
                                         std::vector<Elem> act, std::vector<Elem> ins_left,
                                         std::vector<Elem> ins_right) {
  ForestAlgebra a;
  a.h_names_ = std::move(h_names);
  a.v_names_ = std::move(v_names);
  a.zero_ = zero;
  a.unit_ = unit;
  a.add_ = std::move(add);
  a.mul_ = std::move(mul);
  a.act_ = std::move(act);
  a.ins_left_ = std::move(ins_left);
  a.ins_right_ = std::move(ins_right);
  return a;
}

ForestAlgebra ForestAlgebra::from_action(std::vector<std::string> h_names,
                                         std::vector<std::string> v_names,
                                         const std::vector<std::vector<Elem>>& act,
                                         std::vector<Elem> ins_left, std::vector<Elem> ins_right) {
  const int nh = static_cast<int>(h_names.size());
  const int nv = static_cast<int>(v_names.size());
  if (nh == 0 || nv == 0) throw InvalidInput("H and V must be nonempty");
  if (static_cast<int>(act.size()) != nv) throw InvalidInput("act table needs one row per V element");
  std::unordered_map<std::vector<int>, int, VectorHash> row_index;
  for (int v = 0; v < nv; ++v) {
    if (static_cast<int>(act[v].size()) != nh) throw InvalidInput("act row has wrong length");
    for (int h : act[v])
      if (h < 0 || h >= nh) throw InvalidInput("act table leaves H");
    if (!row_index.emplace(act[v], v).second)
      throw InvalidInput("action is not faithful: V elements " + v_names[row_index[act[v]]] +
                         " and " + v_names[v] + " act identically");
  }
  if (static_cast<int>(ins_left.size()) != nh || static_cast<int>(ins_right.size()) != nh)
    throw InvalidInput("insL/insR need one entry per H element");
  for (int g = 0; g < nh; ++g)
    if (ins_left[g] < 0 || ins_left[g] >= nv || ins_right[g] < 0 || ins_right[g] >= nv)
      throw InvalidInput("insL/insR leave V");
  std::vector<int> identity(nh);
  std::iota(identity.begin(), identity.end(), 0);
  const auto unit_it = row_index.find(identity);
  if (unit_it == row_index.end()) throw InvalidInput("V has no element acting as the identity");
  const Elem unit = unit_it->second;
  Elem zero = -1;
  for (int g = 0; g < nh && zero < 0; ++g)
    if (ins_left[g] == unit) zero = g;
  if (zero < 0) throw InvalidInput("H has no zero (no g with g+_ acting as the identity)");

  std::vector<Elem> add(static_cast<std::size_t>(nh) * nh), flat_act(static_cast<std::size_t>(nv) * nh),
      mul(static_cast<std::size_t>(nv) * nv);
  for (int v = 0; v < nv; ++v)
    for (int h = 0; h < nh; ++h) flat_act[v * nh + h] = act[v][h];
  for (int g = 0; g < nh; ++g)
    for (int h = 0; h < nh; ++h) add[g * nh + h] = act[ins_left[g]][h];
  for (int g = 0; g < nh; ++g)
    for (int h = 0; h < nh; ++h)
      if (act[ins_right[g]][h] != add[h * nh + g])
        throw InvalidInput("insR(" + h_names[g] + ") does not act as h -> h+" + h_names[g]);
  std::vector<int> row(nh);
  for (int v = 0; v < nv; ++v)
    for (int w = 0; w < nv; ++w) {
      for (int h = 0; h < nh; ++h) row[h] = act[v][act[w][h]];
      const auto it = row_index.find(row);
      if (it == row_index.end())
        throw InvalidInput("V is not closed under composition (" + v_names[v] + " * " + v_names[w] + ")");
      mul[v * nv + w] = it->second;
    }
  return from_tables(std::move(h_names), std::move(v_names), zero, unit, std::move(add),
                     std::move(mul), std::move(flat_act), std::move(ins_left), std::move(ins_right));
}

CheckReport check_axioms(const ForestAlgebra& a) {
  CheckReport report;
  auto& out = report.violations;
  const int nh = a.h_size(), nv = a.v_size();
  auto note = [&](std::string what) {
    if (out.size() < 20) out.push_back(std::move(what));
  };
  for (int h = 0; h < nh; ++h) {
    if (a.add(a.zero(), h) != h || a.add(h, a.zero()) != h) note("0 is not an identity of H at " + a.h_name(h));
    if (a.act(a.unit(), h) != h) note("the unit does not act trivially on " + a.h_name(h));
  }
  for (int v = 0; v < nv; ++v)
    if (a.mul(a.unit(), v) != v || a.mul(v, a.unit()) != v) note("unit is not an identity of V at " + a.v_name(v));
  for (int f = 0; f < nh; ++f)
    for (int g = 0; g < nh; ++g)
      for (int h = 0; h < nh; ++h)
        if (a.add(a.add(f, g), h) != a.add(f, a.add(g, h)))
          note("H addition not associative on (" + a.h_name(f) + ", " + a.h_name(g) + ", " + a.h_name(h) + ")");
  for (int u = 0; u < nv; ++u)
    for (int v = 0; v < nv; ++v) {
      const Elem uv = a.mul(u, v);
      for (int w = 0; w < nv; ++w)
        if (a.mul(uv, w) != a.mul(u, a.mul(v, w)))
          note("V multiplication not associative on (" + a.v_name(u) + ", " + a.v_name(v) + ", " + a.v_name(w) + ")");
      for (int h = 0; h < nh; ++h)
        if (a.act(u, a.act(v, h)) != a.act(uv, h))
          note("action law w(vh)=(wv)h fails on (" + a.v_name(u) + ", " + a.v_name(v) + ", " + a.h_name(h) + ")");
    }
  for (int v = 0; v < nv; ++v)
    for (int w = v + 1; w < nv; ++w) {
      bool same = true;
      for (int h = 0; h < nh && same; ++h) same = a.act(v, h) == a.act(w, h);
      if (same) note("action is not faithful: " + a.v_name(v) + " and " + a.v_name(w));
    }
  for (int g = 0; g < nh; ++g)
    for (int h = 0; h < nh; ++h) {
      if (a.act(a.ins_left(g), h) != a.add(g, h)) note("(g+_)h != g+h for g=" + a.h_name(g) + ", h=" + a.h_name(h));
      if (a.act(a.ins_right(g), h) != a.add(h, g)) note("(_+g)h != h+g for g=" + a.h_name(g) + ", h=" + a.h_name(h));
      if (a.mul(a.ins_left(g), a.ins_left(h)) != a.ins_left(a.add(g, h)))
        note("(g+_)(h+_) != (g+h)+_ for g=" + a.h_name(g) + ", h=" + a.h_name(h));
    }
  return report;
}

// ---------------------------------------------------------------------------
// Morphisms

Elem Morphism::letter(const Label& a) const {
  const auto i = alphabet.index(a);
  if (!i) throw InvalidInput("label '" + a + "' is not in the alphabet");
  return letters[*i];
}

namespace {

Elem eval_trees(const Morphism& m, const std::vector<Node>& trees) {
  const ForestAlgebra& a = m.algebra;
  Elem sum = a.zero();
  for (const auto& t : trees) sum = a.add(sum, a.act(m.letter(t.label), eval_trees(m, t.children)));
  return sum;
}

Elem eval_context_trees(const Morphism& m, const std::vector<Node>& trees) {
  const ForestAlgebra& a = m.algebra;
  std::size_t pos = trees.size();
  for (std::size_t i = 0; i < trees.size() && pos == trees.size(); ++i) {
    if (trees[i].hole) {
      pos = i;
      break;
    }
    NodeTable probe(std::vector<Node>{trees[i]});
    for (int x = 0; x < probe.size(); ++x)
      if (probe.is_hole(x)) {
        pos = i;
        break;
      }
  }
  const std::vector<Node> before(trees.begin(), trees.begin() + static_cast<std::ptrdiff_t>(pos));
  const std::vector<Node> after(trees.begin() + static_cast<std::ptrdiff_t>(pos) + 1, trees.end());
  const Node& mid = trees[pos];
  const Elem inner = mid.hole ? a.unit() : a.mul(m.letter(mid.label), eval_context_trees(m, mid.children));
  return a.mul(a.ins_left(eval_trees(m, before)), a.mul(a.ins_right(eval_trees(m, after)), inner));
}

}  // namespace

Elem eval_forest(const Morphism& m, const Forest& s) { return eval_trees(m, s.trees()); }
Elem eval_context(const Morphism& m, const Context& p) { return eval_context_trees(m, p.trees()); }
bool member(const Recognizer& r, const Forest& s) { return r.accept[eval_forest(r.morphism, s)]; }

Recognizer algebra_from_automaton(const ForestAutomaton& automaton, const Limits& limits) {
  const auto report = check_automaton(automaton);
  if (!report.ok()) throw InvalidInput("invalid automaton: " + report.violations.front());
  const int n = automaton.size();
  using Map = std::vector<int>;
  std::vector<Map> elements;
  std::unordered_map<Map, int, VectorHash> index;
  auto intern = [&](Map m) {
    auto [it, fresh] = index.emplace(m, static_cast<int>(elements.size()));
    if (fresh) {
      elements.push_back(std::move(m));
      if (elements.size() > limits.max_v_elements)
        throw CapExceeded("V exceeds the cap of " + std::to_string(limits.max_v_elements) + " elements");
    }
    return it->second;
  };
  Map identity(n);
  std::iota(identity.begin(), identity.end(), 0);
  const int unit = intern(identity);
  std::vector<int> letters, ins_l(n), ins_r(n);
  for (const auto& map : automaton.delta) letters.push_back(intern(map));
  for (int g = 0; g < n; ++g) {
    Map l(n), r(n);
    for (int h = 0; h < n; ++h) {
      l[h] = automaton.add(g, h);
      r[h] = automaton.add(h, g);
    }
    ins_l[g] = intern(std::move(l));
    ins_r[g] = intern(std::move(r));
  }
  std::vector<int> generators = letters;
  generators.insert(generators.end(), ins_l.begin(), ins_l.end());
  generators.insert(generators.end(), ins_r.begin(), ins_r.end());
  std::sort(generators.begin(), generators.end());
  generators.erase(std::unique(generators.begin(), generators.end()), generators.end());
  Map product(n);
  for (std::size_t e = 0; e < elements.size(); ++e)
    for (int g : generators) {
      for (int h = 0; h < n; ++h) product[h] = elements[e][elements[g][h]];
      intern(product);
    }

  const int nv = static_cast<int>(elements.size());
  std::vector<Elem> act(static_cast<std::size_t>(nv) * n), mul(static_cast<std::size_t>(nv) * nv);
  for (int v = 0; v < nv; ++v)
    for (int h = 0; h < n; ++h) act[v * n + h] = elements[v][h];
  for (int v = 0; v < nv; ++v)
    for (int w = 0; w < nv; ++w) {
      for (int h = 0; h < n; ++h) product[h] = elements[v][elements[w][h]];
      mul[static_cast<std::size_t>(v) * nv + w] = index.at(product);
    }
  std::vector<std::string> v_names;
  for (int v = 0; v < nv; ++v) v_names.push_back("v" + std::to_string(v));
  Recognizer r;
  r.morphism.algebra = ForestAlgebra::from_tables(automaton.states, std::move(v_names), automaton.zero,
                                                  unit, automaton.plus, std::move(mul), std::move(act),
                                                  std::move(ins_l), std::move(ins_r));
  r.morphism.alphabet = automaton.alphabet;
  r.morphism.letters = std::move(letters);
  r.accept = automaton.accept;
  return r;
}

bool Reachability::complete() const {
  return std::all_of(h.begin(), h.end(), [](bool b) { return b; }) &&
         std::all_of(v.begin(), v.end(), [](bool b) { return b; });
}

Reachability reachable(const Morphism& m) {
  const ForestAlgebra& a = m.algebra;
  Reachability r;
  r.h.assign(a.h_size(), false);
  r.v.assign(a.v_size(), false);
  std::vector<Elem> hs, vs, gens;
  std::vector<bool> is_gen(a.v_size(), false);
  auto add_h = [&](Elem h) {
    if (!r.h[h]) {
      r.h[h] = true;
      hs.push_back(h);
    }
  };
  auto add_v = [&](Elem v) {
    if (!r.v[v]) {
      r.v[v] = true;
      vs.push_back(v);
    }
  };
  auto add_gen = [&](Elem g) {
    add_v(g);
    if (!is_gen[g]) {
      is_gen[g] = true;
      gens.push_back(g);
    }
  };
  add_h(a.zero());
  add_v(a.unit());
  for (Elem l : m.letters) add_gen(l);
  std::size_t h_done = 0;
  bool changed = true;
  while (changed) {
    changed = false;
    const std::size_t before = hs.size() + vs.size() + gens.size();
    for (; h_done < hs.size(); ++h_done) {
      add_gen(a.ins_left(hs[h_done]));
      add_gen(a.ins_right(hs[h_done]));
    }
    for (std::size_t i = 0; i < vs.size(); ++i) {
      add_h(a.act(vs[i], a.zero()));
      for (std::size_t k = 0; k < gens.size(); ++k) add_v(a.mul(vs[i], gens[k]));
    }
    changed = hs.size() + vs.size() + gens.size() != before || h_done < hs.size();
  }
  return r;
}

Recognizer restrict_to_reachable(const Recognizer& r) {
  const ForestAlgebra& a = r.algebra();
  const Reachability reach = reachable(r.morphism);
  // First the subalgebra on reachable elements, then merge V elements that
  // act identically on the reachable H.
  std::vector<int> h_new(a.h_size(), -1), v_new(a.v_size(), -1), h_old, v_old;
  for (int h = 0; h < a.h_size(); ++h)
    if (reach.h[h]) {
      h_new[h] = static_cast<int>(h_old.size());
      h_old.push_back(h);
    }
  for (int v = 0; v < a.v_size(); ++v)
    if (reach.v[v]) {
      v_new[v] = static_cast<int>(v_old.size());
      v_old.push_back(v);
    }
  const int nh = static_cast<int>(h_old.size()), nv = static_cast<int>(v_old.size());
  std::vector<std::string> h_names, v_names;
  for (int h : h_old) h_names.push_back(a.h_name(h));
  for (int v : v_old) v_names.push_back(a.v_name(v));
  std::vector<Elem> add(static_cast<std::size_t>(nh) * nh), mul(static_cast<std::size_t>(nv) * nv),
      act(static_cast<std::size_t>(nv) * nh), ins_l(nh), ins_r(nh);
  for (int g = 0; g < nh; ++g) {
    for (int h = 0; h < nh; ++h) add[g * nh + h] = h_new[a.add(h_old[g], h_old[h])];
    ins_l[g] = v_new[a.ins_left(h_old[g])];
    ins_r[g] = v_new[a.ins_right(h_old[g])];
  }
  for (int v = 0; v < nv; ++v) {
    for (int w = 0; w < nv; ++w) mul[static_cast<std::size_t>(v) * nv + w] = v_new[a.mul(v_old[v], v_old[w])];
    for (int h = 0; h < nh; ++h) act[v * nh + h] = h_new[a.act(v_old[v], h_old[h])];
  }
  Recognizer sub;
  sub.morphism.algebra =
      ForestAlgebra::from_tables(std::move(h_names), std::move(v_names), h_new[a.zero()], v_new[a.unit()],
                                 std::move(add), std::move(mul), std::move(act), std::move(ins_l), std::move(ins_r));
  sub.morphism.alphabet = r.morphism.alphabet;
  for (Elem l : r.morphism.letters) sub.morphism.letters.push_back(v_new[l]);
  for (int h : h_old) sub.accept.push_back(r.accept[h]);

  std::vector<int> identity(nh);
  std::iota(identity.begin(), identity.end(), 0);
  return quotient(sub, identity, v_classes_by_action(sub.algebra(), identity));
}

Recognizer syntactic_quotient(const Recognizer& input) {
  const Recognizer r = reachable(input.morphism).complete() ? input : restrict_to_reachable(input);
  const ForestAlgebra& a = r.algebra();
  std::vector<std::vector<bool>> sig(a.h_size(), std::vector<bool>(a.v_size()));
  for (int h = 0; h < a.h_size(); ++h)
    for (int v = 0; v < a.v_size(); ++v) sig[h][v] = r.accept[a.act(v, h)];
  const auto h_class = classes_by_first_occurrence(sig);
  return quotient(r, h_class, v_classes_by_action(a, h_class));
}

Representatives representatives(const Morphism& m) {
  const ForestAlgebra& a = m.algebra;
  std::vector<std::optional<Forest>> h(a.h_size());
  std::vector<std::optional<Context>> v(a.v_size());
  v[a.unit()] = Context{};
  h[a.zero()] = Forest{};
  auto better_v = [&](Elem e, const Context& c) {
    if (!v[e] || c.size() < v[e]->size()) {
      v[e] = c;
      return true;
    }
    return false;
  };
  auto better_h = [&](Elem e, const Forest& f) {
    if (!h[e] || f.size() < h[e]->size()) {
      h[e] = f;
      return true;
    }
    return false;
  };
  bool changed = true;
  while (changed) {
    changed = false;
    for (int x = 0; x < a.v_size(); ++x) {
      if (!v[x]) continue;
      const Context base = *v[x];
      changed |= better_h(a.act(x, a.zero()), substitute(base, Forest{}));
      for (std::size_t l = 0; l < m.letters.size(); ++l)
        changed |= better_v(a.mul(x, m.letters[l]), compose(base, Context::letter(m.alphabet[l])));
      for (int g = 0; g < a.h_size(); ++g) {
        if (!h[g] || h[g]->empty()) continue;
        changed |= better_v(a.mul(x, a.ins_left(g)), compose(base, insert_left(*h[g])));
        changed |= better_v(a.mul(x, a.ins_right(g)), compose(base, insert_right(*h[g])));
      }
    }
  }
  Representatives out;
  for (auto& f : h) out.h.push_back(f ? *f : Forest{});
  for (auto& c : v) out.v.push_back(c ? *c : Context{});
  return out;
}

Recognizer syntactic(const Recognizer& r) {
  Recognizer s = syntactic_quotient(r);
  const auto reps = representatives(s.morphism);
  std::vector<std::string> names;
  for (const auto& c : reps.v) names.push_back("[" + render(c) + "]");
  s.morphism.algebra.rename_v(std::move(names));
  return s;
}

Recognizer syntactic(const ForestAutomaton& automaton, const Limits& limits) {
  return syntactic(algebra_from_automaton(minimize(automaton), limits));
}

bool isomorphic(const Recognizer& x, const Recognizer& y) {
  const ForestAlgebra& a = x.algebra();
  const ForestAlgebra& b = y.algebra();
  if (a.h_size() != b.h_size() || a.v_size() != b.v_size()) return false;
  if (x.morphism.alphabet != y.morphism.alphabet) return false;
  std::vector<Elem> hmap(a.h_size(), -1), vmap(a.v_size(), -1);
  bool ok = true;
  bool changed = false;
  auto pair_h = [&](Elem p, Elem q) {
    if (hmap[p] < 0) {
      hmap[p] = q;
      changed = true;
    } else if (hmap[p] != q) {
      ok = false;
    }
  };
  auto pair_v = [&](Elem p, Elem q) {
    if (vmap[p] < 0) {
      vmap[p] = q;
      changed = true;
    } else if (vmap[p] != q) {
      ok = false;
    }
  };
  pair_h(a.zero(), b.zero());
  pair_v(a.unit(), b.unit());
  for (std::size_t l = 0; l < x.morphism.letters.size(); ++l)
    pair_v(x.morphism.letters[l], y.morphism.letters[l]);
  do {
    changed = false;
    for (int g = 0; g < a.h_size() && ok; ++g) {
      if (hmap[g] < 0) continue;
      pair_v(a.ins_left(g), b.ins_left(hmap[g]));
      pair_v(a.ins_right(g), b.ins_right(hmap[g]));
    }
    for (int v = 0; v < a.v_size() && ok; ++v) {
      if (vmap[v] < 0) continue;
      for (int w = 0; w < a.v_size() && ok; ++w)
        if (vmap[w] >= 0) pair_v(a.mul(v, w), b.mul(vmap[v], vmap[w]));
      for (int h = 0; h < a.h_size() && ok; ++h)
        if (hmap[h] >= 0) pair_h(a.act(v, h), b.act(vmap[v], hmap[h]));
    }
  } while (changed && ok);
  if (!ok) return false;
  std::vector<bool> hit_h(b.h_size(), false), hit_v(b.v_size(), false);
  for (int h = 0; h < a.h_size(); ++h) {
    if (hmap[h] < 0 || hit_h[hmap[h]] || x.accept[h] != y.accept[hmap[h]]) return false;
    hit_h[hmap[h]] = true;
  }
  for (int v = 0; v < a.v_size(); ++v) {
    if (vmap[v] < 0 || hit_v[vmap[v]]) return false;
    hit_v[vmap[v]] = true;
  }
  return true;
}

Elem idempotent_power_v(const ForestAlgebra& a, Elem v) {
  Elem x = v;
  for (int k = 0; k <= a.v_size(); ++k) {
    if (a.mul(x, x) == x) return x;
    x = a.mul(x, v);
  }
  throw InvalidInput("no idempotent power found; V is not associative");
}

Elem idempotent_power_h(const ForestAlgebra& a, Elem h) {
  Elem x = h;
  for (int k = 0; k <= a.h_size(); ++k) {
    if (a.add(x, x) == x) return x;
    x = a.add(x, h);
  }
  throw InvalidInput("no idempotent power found; H is not associative");
}

ElementClass classify_elements(const Recognizer& r) {
  const ForestAlgebra& a = r.algebra();
  const auto& letters = r.morphism.letters;
  ElementClass c;
  c.reachable = reachable(r.morphism);
  c.tree_context_type.assign(a.v_size(), false);
  c.sum_form.assign(a.v_size(), false);
  for (Elem l : letters)
    for (int w = 0; w < a.v_size(); ++w)
      if (c.reachable.v[w]) c.tree_context_type[a.mul(l, w)] = true;
  for (int g = 0; g < a.h_size(); ++g)
    for (int h = 0; h < a.h_size(); ++h)
      if (c.reachable.h[g] && c.reachable.h[h]) c.sum_form[a.mul(a.ins_left(g), a.ins_right(h))] = true;

  // Tree values T and forest values F as a joint least fixpoint:
  // T = { a f : f in F },  F = closure of {0} under f + t.
  std::vector<bool> tree(a.h_size(), false), forest(a.h_size(), false);
  forest[a.zero()] = true;
  bool changed = true;
  while (changed) {
    changed = false;
    for (int f = 0; f < a.h_size(); ++f) {
      if (!forest[f]) continue;
      for (Elem l : letters) {
        const Elem t = a.act(l, f);
        if (!tree[t]) tree[t] = changed = true;
      }
    }
    for (int f = 0; f < a.h_size(); ++f) {
      if (!forest[f]) continue;
      for (int t = 0; t < a.h_size(); ++t)
        if (tree[t] && !forest[a.add(f, t)]) forest[a.add(f, t)] = changed = true;
    }
  }
  c.tree_type = tree;

  // Nonempty forest values: closure of T under +; non-tree images are 0 and
  // sums of two nonempty forest values.
  std::vector<bool> nonempty = tree;
  changed = true;
  while (changed) {
    changed = false;
    for (int f = 0; f < a.h_size(); ++f)
      for (int g = 0; g < a.h_size(); ++g)
        if (nonempty[f] && nonempty[g] && !nonempty[a.add(f, g)]) nonempty[a.add(f, g)] = changed = true;
  }
  c.non_tree_image.assign(a.h_size(), false);
  c.non_tree_image[a.zero()] = true;
  for (int f = 0; f < a.h_size(); ++f)
    for (int g = 0; g < a.h_size(); ++g)
      if (nonempty[f] && nonempty[g]) c.non_tree_image[a.add(f, g)] = true;
  return c;
}

JOrder j_order(const ForestAlgebra& a) {
  const int n = a.v_size();
  BitMatrix left(n, n), right(n, n), ideal(n, n);
  for (int u = 0; u < n; ++u)
    for (int k = 0; k < n; ++k) {
      left.set(k, a.mul(u, k));   // left(k) = V k
      right.set(k, a.mul(k, u));  // right(k) = k V
    }
  for (int x = 0; x < n; ++x)
    for (int k = 0; k < n; ++k)
      if (right.test(x, k)) ideal.or_row(x, left, k);
  JOrder out;
  out.leq = BitMatrix(n, n);
  for (int x = 0; x < n; ++x)
    for (int m = 0; m < n; ++m)
      if (ideal.test(x, m)) out.leq.set(m, x);
  for (int x = 0; x < n && out.j_trivial; ++x)
    for (int y = x + 1; y < n; ++y)
      if (out.leq.test(x, y) && out.leq.test(y, x)) {
        out.j_trivial = false;
        break;
      }
  std::vector<Elem> omega(n);
  for (int v = 0; v < n; ++v) omega[v] = idempotent_power_v(a, v);
  for (int x = 0; x < n && out.identity_holds; ++x)
    for (int m = 0; m < n; ++m) {
      const Elem e = omega[a.mul(x, m)];
      if (a.mul(e, x) != e || a.mul(m, e) != e) {
        out.identity_holds = false;
        out.violation = std::make_pair(x, m);
        break;
      }
    }
  return out;
}

bool is_j_trivial(const ForestAlgebra& a) { return j_order(a).j_trivial; }

TreeReductionCheck check_tree_reduction(const Recognizer& r) {
  const ForestAlgebra& a = r.algebra();
  const ElementClass c = classify_elements(r);
  const int nh = a.h_size();
  TreeReductionCheck out;
  out.related = BitMatrix(nh, nh);
  for (int g = 0; g < nh; ++g)
    for (int h = 0; h < nh; ++h) {
      bool rel = g == h || !(c.tree_type[g] && c.tree_type[h]);
      for (int v = 0; v < a.v_size() && rel; ++v)
        if (c.tree_context_type[v] && a.act(v, g) != a.act(v, h)) rel = false;
      if (rel) out.related.set(g, h);
    }
  const auto& rel = out.related;
  for (int f = 0; f < nh && out.equivalence; ++f)
    for (int g = 0; g < nh && out.equivalence; ++g) {
      if (!rel.test(f, g)) continue;
      for (int h = 0; h < nh; ++h)
        if (rel.test(g, h) && !rel.test(f, h)) {
          out.equivalence = false;
          out.failure = "not transitive: " + a.h_name(f) + " ~ " + a.h_name(g) + " ~ " + a.h_name(h) +
                        " but " + a.h_name(f) + " !~ " + a.h_name(h);
          break;
        }
    }
  for (int g = 0; g < nh && out.congruence; ++g)
    for (int h = 0; h < nh && out.congruence; ++h) {
      if (!rel.test(g, h)) continue;
      for (int f = 0; f < nh; ++f)
        if (!rel.test(a.add(f, g), a.add(f, h)) || !rel.test(a.add(g, f), a.add(h, f))) {
          out.congruence = false;
          out.failure = "not a congruence for +: " + a.h_name(g) + " ~ " + a.h_name(h) + " with " + a.h_name(f);
          break;
        }
      for (int v = 0; v < a.v_size() && out.congruence; ++v)
        if (!rel.test(a.act(v, g), a.act(v, h))) {
          out.congruence = false;
          out.failure = "not a congruence for the action: " + a.h_name(g) + " ~ " + a.h_name(h) +
                        " under " + a.v_name(v);
        }
    }
  return out;
}

std::optional<std::string> tree_language_violation(const Recognizer& input) {
  const Recognizer r = reachable(input.morphism).complete() ? input : restrict_to_reachable(input);
  const ForestAlgebra& a = r.algebra();
  const ElementClass c = classify_elements(r);
  for (int h = 0; h < a.h_size(); ++h)
    if (r.accept[h] && (!c.tree_type[h] || c.non_tree_image[h]))
      return "accepted element " + a.h_name(h) +
             (c.tree_type[h] ? " is also the image of a non-tree" : " is not a tree-type");
  return std::nullopt;
}

Recognizer tree_reduction(const Recognizer& input) {
  const Recognizer r = reachable(input.morphism).complete() ? input : restrict_to_reachable(input);
  const ForestAlgebra& a = r.algebra();
  const ElementClass c = classify_elements(r);
  for (int h = 0; h < a.h_size(); ++h)
    if (r.accept[h] && !c.tree_type[h])
      throw InvalidInput("accepted element " + a.h_name(h) + " is not a tree-type");
  const TreeReductionCheck check = check_tree_reduction(r);
  if (!check.equivalence || !check.congruence)
    throw InvalidInput("tree reduction relation rejected: " + check.failure);
  std::vector<int> h_class(a.h_size());
  for (int h = 0; h < a.h_size(); ++h) {
    h_class[h] = h;
    for (int g = 0; g < h; ++g)
      if (check.related.test(g, h)) {
        h_class[h] = h_class[g];
        break;
      }
  }
  h_class = classes_by_first_occurrence(h_class);
  return quotient(r, h_class, v_classes_by_action(a, h_class));
}

}  // namespace forestalg
