#include "forestalg/cli.hpp"

#include <fstream>
#include <memory>
#include <sstream>

#include <CLI11.hpp>

#include "forestalg/corpus.hpp"
#include "forestalg/decide.hpp"
#include "forestalg/io.hpp"
#include "forestalg/oracle.hpp"
#include "forestalg/piecerel.hpp"

namespace forestalg {

namespace {

std::string forest_text(const Forest& f) {
  const std::string s = render(f);
  return s.empty() ? "0" : s;
}

std::string address(const NodeId& id) {
  std::string out;
  for (std::size_t i = 0; i < id.size(); ++i) out += (i ? "." : "") + std::to_string(id[i]);
  return out;
}

std::vector<std::string> split_list(const std::string& text) {
  std::vector<std::string> out;
  std::stringstream in(text);
  for (std::string item; std::getline(in, item, ',');)
    if (!item.empty()) out.push_back(item);
  return out;
}

Alphabet alphabet_for(const std::string& declared, const std::vector<std::string>& texts) {
  if (!declared.empty()) return Alphabet(split_list(declared));
  return Alphabet::infer(texts);
}

void write_file(const std::string& path, const std::string& text) {
  std::ofstream file(path, std::ios::binary);
  if (!file) throw InvalidInput("cannot write '" + path + "'");
  file << text;
}

// ---------------------------------------------------------------------------
// classify

void print_witness(std::ostream& out, const Witness& w, const ForestAlgebra& a) {
  out << "  witness: " << to_string(w.kind) << "  " << equation(w.kind) << "\n";
  for (const auto& e : w.elements)
    out << "    " << e.role << " = " << e.name << " in " << (e.in_h ? "H" : "V") << ", realized by "
        << (e.expression.empty() ? "0" : e.expression) << "\n";
  auto side = [&](Elem x) { return w.sides_in_h ? a.h_name(x) : a.v_name(x); };
  out << "    left side " << side(w.left) << ", right side " << side(w.right) << "\n";
}

void print_provenance(std::ostream& out, const Provenance& p) {
  out << "  provenance:\n";
  out << "    input |H| = " << p.h_input << ", |V| = " << p.v_input << "\n";
  out << "    syntactic |H| = " << p.h_syntactic << ", |V| = " << p.v_syntactic << "\n";
  if (p.h_reduced) out << "    tree reduced |H| = " << *p.h_reduced << ", |V| = " << *p.v_reduced << "\n";
  if (!p.relation.empty()) out << "    relation " << p.relation << ", " << p.relation_pairs << " pairs\n";
  if (p.bound) out << "    bound " << *p.bound << "\n";
  for (const auto& n : p.notes) out << "    note: " << n << "\n";
}

struct ClassifyArgs {
  std::string file;
  std::vector<std::string> properties;
  bool all = false;
  bool json = false;
  bool provenance = false;
  bool witness = true;
  std::size_t bound = 4;
};

int classify(const ClassifyArgs& args, std::ostream& out) {
  const Limits limits = Limits::from_env();
  const LoadedRecognizer loaded = load_recognizer_file(args.file, limits);
  DecideOptions options;
  options.horizontal_bound = args.bound;
  options.limits = limits;
  Classifier classifier(loaded.recognizer, options);

  std::vector<Property> wanted;
  for (const auto& name : args.properties) wanted.push_back(parse_property(name));
  bool skipped_tree = false;
  if (wanted.empty() || args.all) {
    wanted.clear();
    bool tree_language = true;
    try {
      classifier.reduced();
    } catch (const InvalidInput&) {
      tree_language = false;
    }
    for (Property p : all_properties()) {
      if (!tree_language && (p == Property::TreePT || p == Property::TreeCcaPT)) {
        skipped_tree = true;
        continue;
      }
      wanted.push_back(p);
    }
  }

  std::vector<Verdict> verdicts;
  for (Property p : wanted) verdicts.push_back(classifier.decide(p));

  bool any_false = false, any_unknown = false;
  for (const auto& v : verdicts) {
    any_false |= v.holds == Truth::no;
    any_unknown |= v.holds == Truth::unknown;
  }

  if (args.json) {
    Json j;
    j["file"] = args.file;
    Json list = Json::array();
    for (const auto& v : verdicts) {
      Json x = to_json(v);
      if (!args.witness) x.erase("witness");
      if (!args.provenance) x.erase("provenance");
      list.push_back(std::move(x));
    }
    j["verdicts"] = std::move(list);
    out << dump(j);
  } else {
    const auto& s = classifier.syntactic_recognizer().algebra();
    out << args.file << ": syntactic algebra |H| = " << s.h_size() << ", |V| = " << s.v_size() << "\n";
    if (skipped_tree) out << "tree properties skipped: not a tree language\n";
    for (const auto& v : verdicts) {
      out << to_string(v.property) << ": " << to_string(v.holds) << "\n";
      if (args.witness && v.witness && v.subject) print_witness(out, *v.witness, v.subject->algebra());
      if (args.provenance) print_provenance(out, v.provenance);
    }
  }
  return any_false ? kExitFails : any_unknown ? kExitUnknown : kExitHolds;
}

// ---------------------------------------------------------------------------
// algebra

struct AlgebraArgs {
  std::string file;
  bool json = false;
  bool omega = false;
  std::string output;
};

std::vector<std::vector<Elem>> j_classes(const ForestAlgebra& a, const JOrder& order) {
  std::vector<std::vector<Elem>> out;
  std::vector<bool> done(static_cast<std::size_t>(a.v_size()), false);
  for (Elem v = 0; v < a.v_size(); ++v) {
    if (done[v]) continue;
    std::vector<Elem> cls;
    for (Elem w = v; w < a.v_size(); ++w)
      if (order.leq.test(v, w) && order.leq.test(w, v)) {
        cls.push_back(w);
        done[w] = true;
      }
    out.push_back(std::move(cls));
  }
  return out;
}

int algebra(const AlgebraArgs& args, std::ostream& out) {
  const Limits limits = Limits::from_env();
  const LoadedRecognizer loaded = load_recognizer_file(args.file, limits);
  const Recognizer s = syntactic(loaded.recognizer);
  const ForestAlgebra& a = s.algebra();
  const ElementClass cls = classify_elements(s);
  const JOrder order = j_order(a);
  const auto classes = j_classes(a, order);

  if (!args.output.empty()) write_file(args.output, dump(to_json(s)));

  if (args.json) {
    Json j;
    j["file"] = args.file;
    if (loaded.automaton) j["automaton_states"] = loaded.automaton->size();
    j["input"] = {{"H", loaded.recognizer.algebra().h_size()}, {"V", loaded.recognizer.algebra().v_size()}};
    j["syntactic"] = {{"H", a.h_size()}, {"V", a.v_size()}};
    Json tt = Json::array(), tct = Json::array();
    for (Elem h = 0; h < a.h_size(); ++h)
      if (cls.tree_type[h]) tt.push_back(a.h_name(h));
    for (Elem v = 0; v < a.v_size(); ++v)
      if (cls.tree_context_type[v]) tct.push_back(a.v_name(v));
    j["tree_types"] = std::move(tt);
    j["tree_context_types"] = std::move(tct);
    j["j_trivial"] = order.j_trivial;
    Json jc = Json::array();
    for (const auto& c : classes) {
      Json names = Json::array();
      for (Elem v : c) names.push_back(a.v_name(v));
      jc.push_back(std::move(names));
    }
    j["j_classes"] = std::move(jc);
    if (args.omega) {
      Json w = Json::object();
      for (Elem v = 0; v < a.v_size(); ++v) w[a.v_name(v)] = a.v_name(idempotent_power_v(a, v));
      Json h = Json::object();
      for (Elem g = 0; g < a.h_size(); ++g) h[a.h_name(g)] = a.h_name(idempotent_power_h(a, g));
      j["omega"] = {{"V", std::move(w)}, {"H", std::move(h)}};
    }
    j["recognizer"] = to_json(s);
    out << dump(j);
    return kExitHolds;
  }

  if (loaded.automaton) out << "automaton states: " << loaded.automaton->size() << "\n";
  out << "input |H| = " << loaded.recognizer.algebra().h_size()
      << ", |V| = " << loaded.recognizer.algebra().v_size() << "\n";
  out << "syntactic |H| = " << a.h_size() << ", |V| = " << a.v_size() << "\n";
  out << "H:\n";
  for (Elem h = 0; h < a.h_size(); ++h) {
    out << "  " << a.h_name(h);
    if (h == a.zero()) out << "  zero";
    if (s.accepts(h)) out << "  accepting";
    if (cls.tree_type[h]) out << "  tree-type";
    if (args.omega) out << "  omega " << a.h_name(idempotent_power_h(a, h));
    out << "\n";
  }
  out << "V:\n";
  for (Elem v = 0; v < a.v_size(); ++v) {
    out << "  " << a.v_name(v);
    if (v == a.unit()) out << "  unit";
    if (cls.tree_context_type[v]) out << "  tree-context-type";
    if (args.omega) out << "  omega " << a.v_name(idempotent_power_v(a, v));
    out << "\n";
  }
  out << "J-trivial: " << (order.j_trivial ? "yes" : "no") << "\n";
  for (const auto& c : classes) {
    if (c.size() < 2) continue;
    out << "  J-class:";
    for (Elem v : c) out << " " << a.v_name(v);
    out << "\n";
  }
  return kExitHolds;
}

// ---------------------------------------------------------------------------
// piece, pieces

struct PieceArgs {
  std::string s, t;
  std::string variant = "plain";
  std::string alphabet;
  bool witness = false;
  bool json = false;
};

int piece(const PieceArgs& args, std::ostream& out) {
  const Limits limits = Limits::from_env();
  const Alphabet alphabet = alphabet_for(args.alphabet, {args.s, args.t});
  const Forest s = parse_forest(args.s, alphabet);
  const Forest t = parse_forest(args.t, alphabet);
  const PieceVariant variant = parse_variant(args.variant);
  const auto embedding = find_embedding(s, t, variant, limits);
  const bool by_deletion = variant == PieceVariant::plain || variant == PieceVariant::cca ||
                           variant == PieceVariant::horizontal;
  std::optional<std::vector<DeletionStep>> steps;
  if (embedding && args.witness && by_deletion) steps = deletion_sequence(s, t, variant, limits);

  const NodeTable nodes(s);
  if (args.json) {
    Json j;
    j["piece"] = forest_text(s);
    j["forest"] = forest_text(t);
    j["variant"] = to_string(variant);
    j["holds"] = embedding.has_value();
    if (embedding && args.witness) {
      Json image = Json::array();
      for (int x = 0; x < nodes.size(); ++x)
        image.push_back({{"node", address(nodes.id(x))}, {"image", address(embedding->image[x])}});
      j["embedding"] = std::move(image);
      if (steps) {
        Json del = Json::array();
        for (const auto& step : *steps) del.push_back({{"delete", address(step.node)}, {"label", step.label}});
        j["deletions"] = std::move(del);
      }
    }
    out << dump(j);
  } else {
    out << forest_text(s) << (embedding ? " is " : " is not ") << "a " << to_string(variant) << " piece of "
        << forest_text(t) << "\n";
    if (embedding && args.witness) {
      out << "embedding:\n";
      for (int x = 0; x < nodes.size(); ++x)
        out << "  " << nodes.label(x) << " at " << address(nodes.id(x)) << " -> " << address(embedding->image[x])
            << "\n";
      if (steps) {
        out << "deletions:\n";
        for (const auto& step : *steps) out << "  delete " << step.label << " at " << address(step.node) << "\n";
      }
    }
  }
  return embedding ? kExitHolds : kExitFails;
}

struct PiecesArgs {
  std::string forest;
  std::size_t n = 3;
  std::string variant = "plain";
  std::string alphabet;
  bool json = false;
};

int pieces(const PiecesArgs& args, std::ostream& out) {
  const Limits limits = Limits::from_env();
  const Alphabet alphabet = alphabet_for(args.alphabet, {args.forest});
  const Forest t = parse_forest(args.forest, alphabet);
  const auto list = enumerate_pieces(t, args.n, parse_variant(args.variant), limits);
  if (args.json) {
    Json j = Json::array();
    for (const auto& p : list) j.push_back(forest_text(p));
    out << dump(j);
  } else {
    for (const auto& p : list) out << forest_text(p) << "\n";
  }
  return kExitHolds;
}

// ---------------------------------------------------------------------------
// piecerel

struct PieceRelArgs {
  std::string file;
  std::string variant = "plain";
  std::size_t bound = 4;
  bool rules = false;
  bool json = false;
};

int piecerel(const PieceRelArgs& args, std::ostream& out) {
  const Limits limits = Limits::from_env();
  const LoadedRecognizer loaded = load_recognizer_file(args.file, limits);
  const Recognizer s = syntactic(loaded.recognizer);
  const ForestAlgebra& a = s.algebra();
  const PieceRelation rel = piece_relation(s, parse_variant(args.variant), args.bound, limits);
  if (args.json) {
    out << dump(to_json(rel, a, args.rules));
    return kExitHolds;
  }
  out << to_string(rel.variant) << " piece relation";
  if (rel.bound) out << " (contexts up to size " << *rel.bound << ")";
  out << ": " << rel.pair_count() << " pairs on V\n";
  for (Elem v = 0; v < a.v_size(); ++v)
    for (Elem w = 0; w < a.v_size(); ++w) {
      if (!rel.related(v, w)) continue;
      out << "  " << a.v_name(v) << " <= " << a.v_name(w);
      if (args.rules) out << "  (" << to_string(rel.origin(v, w)) << ")";
      out << "\n";
    }
  out << "on H:\n";
  for (Elem g = 0; g < a.h_size(); ++g)
    for (Elem h = 0; h < a.h_size(); ++h)
      if (rel.related_h(g, h)) out << "  " << a.h_name(g) << " <= " << a.h_name(h) << "\n";
  return kExitHolds;
}

// ---------------------------------------------------------------------------
// oracle

struct OracleArgs {
  std::string file;
  std::string check = "pt";
  std::size_t n = 2;
  std::size_t max_size = 5;
  std::string variant = "plain";
  bool json = false;
};

int oracle(const OracleArgs& args, std::ostream& out) {
  const Limits limits = Limits::from_env();
  const LoadedRecognizer loaded = load_recognizer_file(args.file, limits);
  std::optional<Refutation> ref;
  if (args.check == "pt") {
    ref = refute_pt(loaded.recognizer, args.n, args.max_size, parse_variant(args.variant), limits);
  } else if (args.check == "sigma1") {
    ref = refute_sigma1(loaded.recognizer, args.max_size, limits);
  } else {
    throw InvalidInput("unknown check '" + args.check + "' (expected pt or sigma1)");
  }
  if (args.json) {
    Json j;
    j["check"] = args.check;
    j["max_size"] = args.max_size;
    j["refutation"] = ref ? to_json(*ref) : Json();
    out << dump(j);
  } else if (!ref) {
    out << "no refutation among forests up to size " << args.max_size << "\n";
  } else if (ref->kind == RefutationKind::sim_n_violation) {
    out << "refuted: " << forest_text(ref->s) << " is in the language, " << forest_text(ref->t)
        << " is not, and they have the same " << to_string(ref->variant) << " pieces up to size " << ref->n
        << "\n";
  } else {
    out << "refuted: inserting " << render(ref->q) << " into " << render(ref->p) << " at " << forest_text(ref->t)
        << " leaves the language\n";
  }
  return ref ? kExitFails : kExitHolds;
}

// ---------------------------------------------------------------------------
// gen

struct GenArgs {
  std::string target;
  std::size_t n = 0;
  std::string variant = "plain";
  std::string alphabet;
  std::string universe = "automatic";
  std::string corpus;
  std::string output;
};

PieceUniverse parse_universe(const std::string& name) {
  if (name == "full") return PieceUniverse::full;
  if (name == "relevant") return PieceUniverse::relevant;
  if (name == "automatic") return PieceUniverse::automatic;
  throw InvalidInput("unknown universe '" + name + "'");
}

int gen(const GenArgs& args, std::ostream& out) {
  ForestAutomaton automaton;
  if (!args.corpus.empty()) {
    automaton = corpus_entry(args.corpus).automaton;
  } else {
    if (args.target.empty() && args.alphabet.empty())
      throw InvalidInput("gen needs --target (or --corpus)");
    const Alphabet alphabet = alphabet_for(args.alphabet, {args.target});
    const Forest target = parse_forest(args.target, alphabet);
    const std::size_t n = args.n ? args.n : target.size();
    const PieceVariant variant = parse_variant(args.variant);
    if (variant != PieceVariant::plain && variant != PieceVariant::cca)
      throw InvalidInput("piece algebras are generated for the plain and cca variants only");
    automaton = piece_automaton(alphabet, n, variant, target, parse_universe(args.universe), Limits::from_env());
  }
  const std::string text = dump(to_json(automaton));
  if (args.output.empty() || args.output == "-") {
    out << text;
  } else {
    write_file(args.output, text);
    out << "wrote " << args.output << ": " << automaton.size() << " states\n";
  }
  return kExitHolds;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Decides piecewise testability of regular forest languages.", "forestalg"};
  app.require_subcommand(1);

  ClassifyArgs ca;
  auto* cmd_classify = app.add_subcommand("classify", "decide properties of a recognized language");
  cmd_classify->add_option("file", ca.file, "automaton or algebra JSON")->required();
  for (Property p : all_properties()) {
    const std::string flag = flag_name(p);
    cmd_classify->add_flag_callback("--" + flag, [&ca, flag] { ca.properties.push_back(flag); },
                                    "decide " + to_string(p));
  }
  cmd_classify->add_flag("--all", ca.all, "every applicable property (the default)");
  cmd_classify->add_flag("--json", ca.json, "JSON report");
  cmd_classify->add_flag("--emit-provenance", ca.provenance, "print where each verdict came from");
  cmd_classify->add_flag("--emit-witness,!--no-witness", ca.witness, "print failing identity instances");
  cmd_classify->add_option("--bound", ca.bound, "context size bound of the horizontal check");

  AlgebraArgs aa;
  auto* cmd_algebra = app.add_subcommand("algebra", "report the syntactic forest algebra");
  cmd_algebra->add_option("file", aa.file, "automaton or algebra JSON")->required();
  cmd_algebra->add_flag("--json", aa.json, "JSON report");
  cmd_algebra->add_flag("--omega", aa.omega, "idempotent power of every element");
  cmd_algebra->add_option("-o,--output", aa.output, "write the syntactic algebra as JSON");

  PieceArgs pa;
  auto* cmd_piece = app.add_subcommand("piece", "is S a piece of T");
  cmd_piece->add_option("s", pa.s, "piece")->required();
  cmd_piece->add_option("t", pa.t, "forest")->required();
  cmd_piece->add_option("--variant", pa.variant, "plain, cca, horizontal, commutative or commutative-cca");
  cmd_piece->add_option("--alphabet", pa.alphabet, "comma separated labels (inferred by default)");
  cmd_piece->add_flag("--witness", pa.witness, "print the embedding and a deletion sequence");
  cmd_piece->add_flag("--json", pa.json, "JSON report");

  PiecesArgs ps;
  auto* cmd_pieces = app.add_subcommand("pieces", "list the pieces of a forest");
  cmd_pieces->add_option("forest", ps.forest, "forest")->required();
  cmd_pieces->add_option("--n", ps.n, "maximum piece size");
  cmd_pieces->add_option("--variant", ps.variant, "piece variant");
  cmd_pieces->add_option("--alphabet", ps.alphabet, "comma separated labels (inferred by default)");
  cmd_pieces->add_flag("--json", ps.json, "JSON list");

  PieceRelArgs pr;
  auto* cmd_piecerel = app.add_subcommand("piecerel", "piece relation on the syntactic algebra");
  cmd_piecerel->add_option("file", pr.file, "automaton or algebra JSON")->required();
  cmd_piecerel->add_option("--variant", pr.variant, "plain, cca or horizontal");
  cmd_piecerel->add_option("--bound", pr.bound, "context size bound of the horizontal relation");
  cmd_piecerel->add_flag("--rules", pr.rules, "show the rule that produced each pair");
  cmd_piecerel->add_flag("--json", pr.json, "JSON report");

  OracleArgs oa;
  auto* cmd_oracle = app.add_subcommand("oracle", "search small forests for a semantic refutation");
  cmd_oracle->add_option("file", oa.file, "automaton or algebra JSON")->required();
  cmd_oracle->add_option("--check", oa.check, "pt or sigma1");
  cmd_oracle->add_option("--n", oa.n, "piece size for pt");
  cmd_oracle->add_option("--max-size", oa.max_size, "largest forest enumerated");
  cmd_oracle->add_option("--variant", oa.variant, "piece variant for pt");
  cmd_oracle->add_flag("--json", oa.json, "JSON report");

  GenArgs ga;
  auto* cmd_gen = app.add_subcommand("gen", "write a piece-language automaton or a corpus entry");
  cmd_gen->add_flag("--piece-algebra", "generate a piece language (the default)");
  cmd_gen->add_option("--target", ga.target, "the piece");
  cmd_gen->add_option("--n", ga.n, "piece size tracked (target size by default)");
  cmd_gen->add_option("--variant", ga.variant, "plain or cca");
  cmd_gen->add_option("--alphabet", ga.alphabet, "comma separated labels (inferred by default)");
  cmd_gen->add_option("--universe", ga.universe, "full, relevant or automatic");
  cmd_gen->add_option("--corpus", ga.corpus, "write a bundled corpus entry instead");
  cmd_gen->add_option("-o,--output", ga.output, "output file (stdout by default)");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitHolds;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kExitHolds;
  } catch (const CLI::ParseError& e) {
    err << "forestalg: " << e.what() << "\n";
    return kExitInputError;
  }

  try {
    if (cmd_classify->parsed()) return classify(ca, out);
    if (cmd_algebra->parsed()) return algebra(aa, out);
    if (cmd_piece->parsed()) return piece(pa, out);
    if (cmd_pieces->parsed()) return pieces(ps, out);
    if (cmd_piecerel->parsed()) return piecerel(pr, out);
    if (cmd_oracle->parsed()) return oracle(oa, out);
    if (cmd_gen->parsed()) return gen(ga, out);
  } catch (const ParseError& e) {
    err << "forestalg: parse error: " << e.what() << "\n";
    return kExitInputError;
  } catch (const CapExceeded& e) {
    err << "forestalg: cap exceeded: " << e.what() << "\n";
    return kExitInputError;
  } catch (const Error& e) {
    err << "forestalg: invalid input: " << e.what() << "\n";
    return kExitInputError;
  } catch (const std::exception& e) {
    err << "forestalg: internal error: " << e.what() << "\n";
    return kExitInputError;
  }
  return kExitInputError;
}

}  // namespace forestalg
