#include "forestalg/decide.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

namespace forestalg {

namespace {

struct PropertyName {
  Property property;
  const char* name;
  const char* flag;
};

constexpr PropertyName kProperties[] = {
    {Property::PT, "PT", "pt"},
    {Property::PT_alt, "PT_alt", "pt-alt"},
    {Property::ccaPT, "ccaPT", "cca"},
    {Property::ccaPT_alt, "ccaPT_alt", "cca-alt"},
    {Property::Sigma1, "Sigma1", "sigma1"},
    {Property::Commutative, "Commutative", "commutative"},
    {Property::CommPT, "CommPT", "comm-pt"},
    {Property::CommCcaPT, "CommCcaPT", "comm-cca"},
    {Property::TreePT, "TreePT", "tree-pt"},
    {Property::TreeCcaPT, "TreeCcaPT", "tree-cca"},
    {Property::HorizontalPT_experimental, "HorizontalPT_experimental", "horizontal"},
};

}  // namespace

std::string to_string(Property p) {
  for (const auto& e : kProperties)
    if (e.property == p) return e.name;
  return "?";
}

std::string flag_name(Property p) {
  for (const auto& e : kProperties)
    if (e.property == p) return e.flag;
  return "?";
}

Property parse_property(std::string_view name) {
  for (const auto& e : kProperties)
    if (name == e.name || name == e.flag) return e.property;
  throw InvalidInput("unknown property '" + std::string(name) + "'");
}

const std::vector<Property>& all_properties() {
  static const std::vector<Property> all = [] {
    std::vector<Property> out;
    for (const auto& e : kProperties) out.push_back(e.property);
    return out;
  }();
  return all;
}

std::string to_string(Truth t) {
  switch (t) {
    case Truth::yes: return "true";
    case Truth::no: return "false";
    case Truth::unknown: return "unknown";
  }
  return "unknown";
}

std::string to_string(IdentityKind k) {
  switch (k) {
    case IdentityKind::pt_left: return "pt-left";
    case IdentityKind::pt_right: return "pt-right";
    case IdentityKind::j_left: return "j-left";
    case IdentityKind::j_right: return "j-right";
    case IdentityKind::alt_left: return "alt-left";
    case IdentityKind::alt_right: return "alt-right";
    case IdentityKind::cca_middle: return "cca-middle";
    case IdentityKind::cca_right: return "cca-right";
    case IdentityKind::cca_sum_right: return "cca-sum-right";
    case IdentityKind::cca_sum_left: return "cca-sum-left";
    case IdentityKind::alt7: return "alt7";
    case IdentityKind::alt8: return "alt8";
    case IdentityKind::alt9_middle: return "alt9-middle";
    case IdentityKind::alt9_right: return "alt9-right";
    case IdentityKind::insertion: return "insertion";
    case IdentityKind::commutative: return "commutative";
  }
  return "?";
}

std::string equation(IdentityKind k) {
  switch (k) {
    case IdentityKind::pt_left: return "u^w v = u^w";
    case IdentityKind::pt_right: return "v u^w = u^w";
    case IdentityKind::j_left: return "(uv)^w u = (uv)^w";
    case IdentityKind::j_right: return "v (uv)^w = (uv)^w";
    case IdentityKind::alt_left: return "vh + w.(vuh) = w.(vuh)";
    case IdentityKind::alt_right: return "w.(vuh) + vh = w.(vuh)";
    case IdentityKind::cca_middle: return "u^w h = u^w v h";
    case IdentityKind::cca_right: return "u^w h = v u^w h";
    case IdentityKind::cca_sum_right: return "w.h = w.h + g";
    case IdentityKind::cca_sum_left: return "w.h = g + w.h";
    case IdentityKind::alt7: return "(uv)^w h = (uv)^w u h";
    case IdentityKind::alt8: return "(uv)^w = v (uv)^w";
    case IdentityKind::alt9_middle: return "(u(_+vwh))^w g = (u(_+vwh))^w u(_+vh) g";
    case IdentityKind::alt9_right: return "(u(_+vwh))^w g = u(_+vh) (u(_+vwh))^w g";
    case IdentityKind::insertion: return "wh in X implies wvh in X";
    case IdentityKind::commutative: return "g + h = h + g";
  }
  return "?";
}

const WitnessElement& Witness::get(std::string_view role) const {
  for (const auto& e : elements)
    if (e.role == role) return e;
  throw InvalidInput("witness has no element '" + std::string(role) + "'");
}

std::pair<Elem, Elem> evaluate(const ForestAlgebra& a, const Witness& w) {
  auto V = [&](const char* role) { return w.get(role).value; };
  auto wv = [&](Elem v) { return idempotent_power_v(a, v); };
  auto wh = [&](Elem h) { return idempotent_power_h(a, h); };
  switch (w.kind) {
    case IdentityKind::pt_left: {
      const Elem e = wv(V("u"));
      return {a.mul(e, V("v")), e};
    }
    case IdentityKind::pt_right: {
      const Elem e = wv(V("u"));
      return {a.mul(V("v"), e), e};
    }
    case IdentityKind::j_left: {
      const Elem e = wv(a.mul(V("u"), V("v")));
      return {a.mul(e, V("u")), e};
    }
    case IdentityKind::j_right: {
      const Elem e = wv(a.mul(V("u"), V("v")));
      return {a.mul(V("v"), e), e};
    }
    case IdentityKind::alt_left:
    case IdentityKind::alt_right: {
      const Elem vh = a.act(V("v"), V("h"));
      const Elem e = wh(a.act(a.mul(V("v"), V("u")), V("h")));
      return {w.kind == IdentityKind::alt_left ? a.add(vh, e) : a.add(e, vh), e};
    }
    case IdentityKind::cca_middle:
    case IdentityKind::cca_right: {
      const Elem e = wv(V("u"));
      const Elem left = a.act(e, V("h"));
      return {left, w.kind == IdentityKind::cca_middle ? a.act(e, a.act(V("v"), V("h")))
                                                       : a.act(V("v"), left)};
    }
    case IdentityKind::cca_sum_right:
    case IdentityKind::cca_sum_left: {
      const Elem e = wh(V("h"));
      return {e, w.kind == IdentityKind::cca_sum_right ? a.add(e, V("g")) : a.add(V("g"), e)};
    }
    case IdentityKind::alt7: {
      const Elem e = wv(a.mul(V("u"), V("v")));
      return {a.act(e, V("h")), a.act(e, a.act(V("u"), V("h")))};
    }
    case IdentityKind::alt8: {
      const Elem e = wv(a.mul(V("u"), V("v")));
      return {e, a.mul(V("v"), e)};
    }
    case IdentityKind::alt9_middle:
    case IdentityKind::alt9_right: {
      const Elem x = a.mul(V("u"), a.ins_right(a.act(V("v"), a.act(V("w"), V("h")))));
      const Elem y = a.mul(V("u"), a.ins_right(a.act(V("v"), V("h"))));
      const Elem e = wv(x);
      const Elem left = a.act(e, V("g"));
      return {left, w.kind == IdentityKind::alt9_middle ? a.act(e, a.act(y, V("g")))
                                                        : a.act(a.mul(y, e), V("g"))};
    }
    case IdentityKind::insertion:
      return {a.act(V("w"), V("h")), a.act(V("w"), a.act(V("v"), V("h")))};
    case IdentityKind::commutative:
      return {a.add(V("g"), V("h")), a.add(V("h"), V("g"))};
  }
  return {0, 0};
}

bool replay(const Recognizer& subject, const Witness& w) {
  const auto [left, right] = evaluate(subject.algebra(), w);
  if (left != w.left || right != w.right) return false;
  if (w.kind == IdentityKind::insertion) return subject.accept[left] && !subject.accept[right];
  return left != right;
}

namespace {

Witness make_witness(IdentityKind kind, std::vector<std::pair<const char*, Elem>> v_roles,
                     std::vector<std::pair<const char*, Elem>> h_roles, const ForestAlgebra& a) {
  Witness w;
  w.kind = kind;
  for (auto [role, e] : v_roles) w.elements.push_back({role, false, e, a.v_name(e), ""});
  for (auto [role, e] : h_roles) w.elements.push_back({role, true, e, a.h_name(e), ""});
  const auto [left, right] = evaluate(a, w);
  w.left = left;
  w.right = right;
  w.sides_in_h = kind != IdentityKind::pt_left && kind != IdentityKind::pt_right &&
                 kind != IdentityKind::j_left && kind != IdentityKind::j_right &&
                 kind != IdentityKind::alt8;
  return w;
}

/// Instance of (uv)^w u = (uv)^w = v (uv)^w failing at the pair (u, v).
Witness j_witness(const ForestAlgebra& a, std::pair<Elem, Elem> pair) {
  const auto [u, v] = pair;
  const Elem e = idempotent_power_v(a, a.mul(u, v));
  const auto kind = a.mul(e, u) != e ? IdentityKind::j_left : IdentityKind::j_right;
  return make_witness(kind, {{"u", u}, {"v", v}}, {}, a);
}

std::vector<Elem> omega_table(const ForestAlgebra& a) {
  std::vector<Elem> out(a.v_size());
  for (int v = 0; v < a.v_size(); ++v) out[v] = idempotent_power_v(a, v);
  return out;
}

std::vector<Elem> omega_table_h(const ForestAlgebra& a) {
  std::vector<Elem> out(a.h_size());
  for (int h = 0; h < a.h_size(); ++h) out[h] = idempotent_power_h(a, h);
  return out;
}

/// Tree-types plus 0, in element order.
std::vector<Elem> tree_types_or_empty(const ForestAlgebra& a, const ElementClass& c) {
  std::vector<Elem> out;
  for (int h = 0; h < a.h_size(); ++h)
    if (c.tree_type[h] || h == a.zero()) out.push_back(h);
  return out;
}

}  // namespace

// ---------------------------------------------------------------------------
// Classifier

Classifier::Classifier(const Recognizer& input, DecideOptions options) : options_(std::move(options)) {
  h_input_ = input.algebra().h_size();
  v_input_ = input.algebra().v_size();
  syntactic_ = std::make_shared<const Recognizer>(syntactic(input));
}

Classifier::Classifier(const ForestAutomaton& automaton, DecideOptions options)
    : options_(std::move(options)) {
  h_input_ = automaton.size();
  const Recognizer raw = algebra_from_automaton(minimize(automaton), options_.limits);
  v_input_ = raw.algebra().v_size();
  syntactic_ = std::make_shared<const Recognizer>(syntactic(raw));
}

std::shared_ptr<const Recognizer> Classifier::reduced() {
  if (!reduced_) {
    if (const auto why = tree_language_violation(*syntactic_)) throw InvalidInput("not a tree language: " + *why);
    Recognizer t = tree_reduction(*syntactic_);
    const auto reps = representatives(t.morphism);
    std::vector<std::string> names;
    for (const auto& c : reps.v) names.push_back("[" + render(c) + "]");
    t.morphism.algebra.rename_v(std::move(names));
    reduced_ = std::make_shared<const Recognizer>(std::move(t));
  }
  return reduced_;
}

Verdict Classifier::base(Property p, const std::shared_ptr<const Recognizer>& subject) const {
  Verdict v;
  v.property = p;
  v.subject = subject;
  v.provenance.h_input = h_input_;
  v.provenance.v_input = v_input_;
  v.provenance.h_syntactic = syntactic_->algebra().h_size();
  v.provenance.v_syntactic = syntactic_->algebra().v_size();
  if (subject != syntactic_) {
    v.provenance.h_reduced = subject->algebra().h_size();
    v.provenance.v_reduced = subject->algebra().v_size();
  }
  return v;
}

void Classifier::realize(Verdict& v) {
  if (!v.witness) return;
  const auto reps = representatives(v.subject->morphism);
  for (auto& e : v.witness->elements) {
    if (e.in_h) {
      const std::string text = render(reps.h[e.value]);
      e.expression = text.empty() ? "0" : text;
    } else {
      e.expression = render(reps.v[e.value]);
    }
  }
}

Verdict Classifier::pt(const std::shared_ptr<const Recognizer>& subject, Property p) {
  Verdict out = base(p, subject);
  const ForestAlgebra& a = subject->algebra();
  const PieceRelation rel = piece_relation_plain(*subject);
  out.provenance.relation = "plain";
  out.provenance.relation_pairs = rel.pair_count();
  const auto omega = omega_table(a);
  for (int u = 0; u < a.v_size() && !out.witness; ++u)
    for (int v = 0; v < a.v_size(); ++v) {
      if (!rel.related(v, u)) continue;
      const Elem e = omega[u];
      if (a.mul(e, v) != e) {
        out.witness = make_witness(IdentityKind::pt_left, {{"u", u}, {"v", v}}, {}, a);
        break;
      }
      if (a.mul(v, e) != e) {
        out.witness = make_witness(IdentityKind::pt_right, {{"u", u}, {"v", v}}, {}, a);
        break;
      }
    }
  out.holds = out.witness ? Truth::no : Truth::yes;
  // Every piecewise testable language has a J-trivial context monoid, so when
  // that already fails it is the clearer explanation; the verdict itself
  // comes from the pair check above.
  if (out.witness) {
    const JOrder j = j_order(a);
    if (j.violation) {
      const Witness& pair = *out.witness;
      out.provenance.notes.push_back("failing pair instance " + to_string(pair.kind) + " with u = " +
                                     pair.get("u").name + ", v = " + pair.get("v").name);
      out.witness = j_witness(a, *j.violation);
    }
  }
  realize(out);
  return out;
}

Verdict Classifier::pt_alt() {
  Verdict out = base(Property::PT_alt, syntactic_);
  const ForestAlgebra& a = syntactic_->algebra();
  const JOrder j = j_order(a);
  if (j.j_trivial != j.identity_holds)
    throw std::logic_error("J-triviality and the identity (uv)^w u = (uv)^w = v (uv)^w disagree");
  if (j.violation) out.witness = j_witness(a, *j.violation);
  const auto omega_h = omega_table_h(a);
  for (int v = 0; v < a.v_size() && !out.witness; ++v)
    for (int u = 0; u < a.v_size() && !out.witness; ++u) {
      const Elem vu = a.mul(v, u);
      for (int h = 0; h < a.h_size(); ++h) {
        const Elem vh = a.act(v, h);
        const Elem e = omega_h[a.act(vu, h)];
        if (a.add(vh, e) != e) {
          out.witness = make_witness(IdentityKind::alt_left, {{"u", u}, {"v", v}}, {{"h", h}}, a);
          break;
        }
        if (a.add(e, vh) != e) {
          out.witness = make_witness(IdentityKind::alt_right, {{"u", u}, {"v", v}}, {{"h", h}}, a);
          break;
        }
      }
    }
  out.holds = out.witness ? Truth::no : Truth::yes;
  realize(out);
  return out;
}

Verdict Classifier::cca(const std::shared_ptr<const Recognizer>& subject, Property p) {
  Verdict out = base(p, subject);
  const ForestAlgebra& a = subject->algebra();
  const ElementClass c = classify_elements(*subject);
  const PieceRelation rel = piece_relation_cca(*subject);
  out.provenance.relation = "cca";
  out.provenance.relation_pairs = rel.pair_count();
  out.provenance.notes.push_back("h ranges over tree-types and 0");
  const auto omega = omega_table(a);
  const auto hs = tree_types_or_empty(a, c);
  for (int u = 0; u < a.v_size() && !out.witness; ++u) {
    if (!c.tree_context_type[u]) continue;
    const Elem e = omega[u];
    for (int v = 0; v < a.v_size() && !out.witness; ++v) {
      if (!c.tree_context_type[v] || !rel.related(v, u)) continue;
      for (Elem h : hs) {
        const Elem left = a.act(e, h);
        if (a.act(e, a.act(v, h)) != left) {
          out.witness = make_witness(IdentityKind::cca_middle, {{"u", u}, {"v", v}}, {{"h", h}}, a);
          break;
        }
        if (a.act(v, left) != left) {
          out.witness = make_witness(IdentityKind::cca_right, {{"u", u}, {"v", v}}, {{"h", h}}, a);
          break;
        }
      }
    }
  }
  const auto omega_h = omega_table_h(a);
  for (int h = 0; h < a.h_size() && !out.witness; ++h)
    for (int g = 0; g < a.h_size(); ++g) {
      if (!rel.related_h(g, h)) continue;
      const Elem e = omega_h[h];
      if (a.add(e, g) != e) {
        out.witness = make_witness(IdentityKind::cca_sum_right, {}, {{"h", h}, {"g", g}}, a);
        break;
      }
      if (a.add(g, e) != e) {
        out.witness = make_witness(IdentityKind::cca_sum_left, {}, {{"h", h}, {"g", g}}, a);
        break;
      }
    }
  out.holds = out.witness ? Truth::no : Truth::yes;
  realize(out);
  return out;
}

Verdict Classifier::cca_alt() {
  Verdict out = base(Property::ccaPT_alt, syntactic_);
  const ForestAlgebra& a = syntactic_->algebra();
  const ElementClass c = classify_elements(*syntactic_);
  out.provenance.notes.push_back("h, g range over tree-types and 0; u in the third identity also over the unit");
  out.provenance.notes.push_back("v, w range over all of V");
  const auto omega = omega_table(a);
  const auto hs = tree_types_or_empty(a, c);
  const int nv = a.v_size();

  for (int u = 0; u < nv && !out.witness; ++u)
    for (int v = 0; v < nv && !out.witness; ++v) {
      const Elem e = omega[a.mul(u, v)];
      for (Elem h : hs)
        if (a.act(e, h) != a.act(e, a.act(u, h))) {
          out.witness = make_witness(IdentityKind::alt7, {{"u", u}, {"v", v}}, {{"h", h}}, a);
          break;
        }
    }
  for (int u = 0; u < nv && !out.witness; ++u) {
    if (!c.tree_context_type[u]) continue;
    for (int v = 0; v < nv; ++v) {
      if (!c.tree_context_type[v]) continue;
      const Elem e = omega[a.mul(u, v)];
      if (a.mul(v, e) != e) {
        out.witness = make_witness(IdentityKind::alt8, {{"u", u}, {"v", v}}, {}, a);
        break;
      }
    }
  }
  // Third identity. For fixed h only the pairs (v(wh), vh) of H values
  // matter, so they are collected once with their first realizing (v, w).
  std::vector<Elem> us;
  for (int u = 0; u < nv; ++u)
    if (c.tree_context_type[u] || u == a.unit()) us.push_back(u);
  for (Elem h : hs) {
    if (out.witness) break;
    std::map<Elem, Elem> first_w;  // wh -> first w
    for (int w = 0; w < nv; ++w) first_w.try_emplace(a.act(w, h), w);
    std::map<std::pair<Elem, Elem>, std::pair<Elem, Elem>> pairs;  // (vwh, vh) -> (v, w)
    for (int v = 0; v < nv; ++v)
      for (const auto& [k, w] : first_w) pairs.try_emplace({a.act(v, k), a.act(v, h)}, std::make_pair(v, w));
    std::vector<std::pair<std::pair<Elem, Elem>, std::pair<Elem, Elem>>> ordered(pairs.begin(), pairs.end());
    std::sort(ordered.begin(), ordered.end(), [](const auto& x, const auto& y) { return x.second < y.second; });
    for (Elem u : us) {
      if (out.witness) break;
      for (const auto& [values, vw] : ordered) {
        if (out.witness) break;
        const Elem x = a.mul(u, a.ins_right(values.first));
        const Elem y = a.mul(u, a.ins_right(values.second));
        const Elem e = omega[x];
        for (Elem g : hs) {
          const Elem left = a.act(e, g);
          const bool middle = a.act(e, a.act(y, g)) != left;
          if (middle || a.act(a.mul(y, e), g) != left) {
            out.witness = make_witness(middle ? IdentityKind::alt9_middle : IdentityKind::alt9_right,
                                       {{"u", u}, {"v", vw.first}, {"w", vw.second}}, {{"h", h}, {"g", g}}, a);
            break;
          }
        }
      }
    }
  }
  out.holds = out.witness ? Truth::no : Truth::yes;
  realize(out);
  return out;
}

Verdict Classifier::sigma1() {
  Verdict out = base(Property::Sigma1, syntactic_);
  const Recognizer& r = *syntactic_;
  const ForestAlgebra& a = r.algebra();
  const int nh = a.h_size(), nv = a.v_size();
  // h1 <=H h2 iff every context accepting h2 accepts h1.
  BitMatrix le_h(nh, nh);
  for (int h1 = 0; h1 < nh; ++h1)
    for (int h2 = 0; h2 < nh; ++h2) {
      bool le = true;
      for (int v = 0; v < nv && le; ++v) le = !r.accept[a.act(v, h2)] || r.accept[a.act(v, h1)];
      if (le) le_h.set(h1, h2);
    }
  for (int x = 0; x < nh; ++x)
    for (int y = x + 1; y < nh; ++y)
      if (le_h.test(x, y) && le_h.test(y, x))
        throw std::logic_error("the order on H is not antisymmetric on a syntactic algebra");
  auto le_v = [&](Elem v1, Elem v2) {
    for (int h = 0; h < nh; ++h)
      if (!le_h.test(a.act(v1, h), a.act(v2, h))) return false;
    return true;
  };
  for (int x = 0; x < nv; ++x)
    for (int y = x + 1; y < nv; ++y)
      if (le_v(x, y) && le_v(y, x))
        throw std::logic_error("the order on V is not antisymmetric on a syntactic algebra");
  for (int v = 0; v < nv && !out.witness; ++v)
    for (int h = 0; h < nh && !out.witness; ++h) {
      if (le_h.test(a.act(v, h), h)) continue;
      for (int w = 0; w < nv; ++w)
        if (r.accept[a.act(w, h)] && !r.accept[a.act(w, a.act(v, h))]) {
          out.witness = make_witness(IdentityKind::insertion, {{"v", v}, {"w", w}}, {{"h", h}}, a);
          break;
        }
    }
  out.holds = out.witness ? Truth::no : Truth::yes;
  realize(out);
  return out;
}

Verdict Classifier::commutative() {
  Verdict out = base(Property::Commutative, syntactic_);
  const ForestAlgebra& a = syntactic_->algebra();
  for (int g = 0; g < a.h_size() && !out.witness; ++g)
    for (int h = g + 1; h < a.h_size(); ++h)
      if (a.add(g, h) != a.add(h, g)) {
        out.witness = make_witness(IdentityKind::commutative, {}, {{"g", g}, {"h", h}}, a);
        break;
      }
  out.holds = out.witness ? Truth::no : Truth::yes;
  realize(out);
  return out;
}

Verdict Classifier::horizontal() {
  Verdict out = base(Property::HorizontalPT_experimental, syntactic_);
  const ForestAlgebra& a = syntactic_->algebra();
  const PieceRelation rel = piece_relation_horizontal(*syntactic_, options_.horizontal_bound, options_.limits);
  out.provenance.relation = "horizontal (semantic, under-approximation)";
  out.provenance.relation_pairs = rel.pair_count();
  out.provenance.bound = options_.horizontal_bound;
  out.provenance.notes.push_back("experimental: no failure within the bound yields unknown");
  const auto omega = omega_table(a);
  for (int u = 0; u < a.v_size() && !out.witness; ++u)
    for (int v = 0; v < a.v_size(); ++v) {
      if (!rel.related(v, u)) continue;
      const Elem e = omega[u];
      if (a.mul(e, v) != e || a.mul(v, e) != e) {
        const auto kind = a.mul(e, v) != e ? IdentityKind::pt_left : IdentityKind::pt_right;
        out.witness = make_witness(kind, {{"u", u}, {"v", v}}, {}, a);
        break;
      }
    }
  out.holds = out.witness ? Truth::no : Truth::unknown;
  realize(out);
  return out;
}

Verdict Classifier::decide(Property p) {
  switch (p) {
    case Property::PT: return pt(syntactic_, p);
    case Property::PT_alt: return pt_alt();
    case Property::ccaPT: return cca(syntactic_, p);
    case Property::ccaPT_alt: return cca_alt();
    case Property::Sigma1: return sigma1();
    case Property::Commutative: return commutative();
    case Property::CommPT:
    case Property::CommCcaPT: {
      Verdict comm = commutative();
      Verdict second = decide(p == Property::CommPT ? Property::PT : Property::ccaPT);
      Verdict& failed = comm.holds == Truth::no ? comm : second;
      Verdict out = failed;
      out.property = p;
      out.holds = comm.holds == Truth::yes && second.holds == Truth::yes ? Truth::yes : Truth::no;
      out.provenance.notes.push_back("conjunction of Commutative and " + to_string(second.property));
      return out;
    }
    case Property::TreePT: return pt(reduced(), p);
    case Property::TreeCcaPT: return cca(reduced(), p);
    case Property::HorizontalPT_experimental: return horizontal();
  }
  throw std::logic_error("unhandled property");
}

Verdict decide(const Recognizer& r, Property p, const DecideOptions& options) {
  return Classifier(r, options).decide(p);
}
Verdict decide_pt(const Recognizer& r) { return decide(r, Property::PT); }
Verdict decide_pt_alt(const Recognizer& r) { return decide(r, Property::PT_alt); }
Verdict decide_cca(const Recognizer& r) { return decide(r, Property::ccaPT); }
Verdict decide_cca_alt(const Recognizer& r) { return decide(r, Property::ccaPT_alt); }
Verdict decide_sigma1(const Recognizer& r) { return decide(r, Property::Sigma1); }
Verdict decide_commutative(const Recognizer& r) { return decide(r, Property::Commutative); }
Verdict decide_comm_pt(const Recognizer& r) { return decide(r, Property::CommPT); }
Verdict decide_comm_cca(const Recognizer& r) { return decide(r, Property::CommCcaPT); }
Verdict decide_tree_pt(const Recognizer& r) { return decide(r, Property::TreePT); }
Verdict decide_tree_cca(const Recognizer& r) { return decide(r, Property::TreeCcaPT); }
Verdict decide_horizontal(const Recognizer& r, std::size_t bound) {
  DecideOptions options;
  options.horizontal_bound = bound;
  return decide(r, Property::HorizontalPT_experimental, options);
}

}  // namespace forestalg
