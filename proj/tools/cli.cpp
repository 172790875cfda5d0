#include "cli.hpp"

#include <fstream>
#include <memory>
#include <optional>
#include <ostream>
#include <sstream>

#include "CLI11.hpp"
#include "json.hpp"
#include "stallings/equations.hpp"
#include "stallings/equivalence.hpp"
#include "stallings/io.hpp"

namespace stallings::cli {

namespace {

using nlohmann::ordered_json;

struct Outcome {
  ordered_json report;
  int code = kTrue;
};

std::string verdict(bool b) { return b ? "true" : "false"; }

Outcome decision(ordered_json report, bool holds) {
  report["verdict"] = verdict(holds);
  return {std::move(report), holds ? kTrue : kFalse};
}

// Reports are built with "verdict" first.
ordered_json report_head(std::string_view command) {
  ordered_json j;
  j["verdict"] = nullptr;
  j["command"] = std::string(command);
  return j;
}

void render(const ordered_json& j, std::ostream& os, int depth) {
  const std::string pad(static_cast<std::size_t>(depth) * 2, ' ');
  auto scalar = [](const ordered_json& v) { return v.is_string() ? v.get<std::string>() : v.dump(); };
  auto flat = [](const ordered_json& v) {
    if (!v.is_array()) return false;
    for (const auto& x : v)
      if (x.is_structured()) return false;
    return true;
  };
  if (j.is_object()) {
    for (const auto& [k, v] : j.items()) {
      if (!v.is_structured()) {
        os << pad << k << ": " << scalar(v) << "\n";
      } else if (flat(v)) {
        os << pad << k << ": ";
        bool first = true;
        for (const auto& x : v) {
          os << (first ? "" : ", ") << scalar(x);
          first = false;
        }
        os << (v.empty() ? "(none)" : "") << "\n";
      } else {
        os << pad << k << ":\n";
        render(v, os, depth + 1);
      }
    }
  } else if (j.is_array()) {
    for (const auto& v : j) {
      if (!v.is_structured() || flat(v)) {
        os << pad << "- ";
        if (v.is_array()) {
          bool first = true;
          for (const auto& x : v) {
            os << (first ? "" : ", ") << scalar(x);
            first = false;
          }
        } else {
          os << scalar(v);
        }
        os << "\n";
      } else {
        os << pad << "-\n";
        render(v, os, depth + 1);
      }
    }
  } else {
    os << pad << scalar(j) << "\n";
  }
}

std::string pretty(const ordered_json& j) {
  std::ostringstream os;
  render(j, os, 0);
  return os.str();
}

FiniteStructure load_structure(const std::string& path) { return FiniteStructure(load_structure_document(path).data); }

std::unique_ptr<SPregroup> load_pregroup(const std::string& path) {
  return std::make_unique<SPregroup>(spregroup_from_document(load_structure_document(path)));
}

std::vector<Elem> subset_of(const FiniteStructure& m, const std::string& text) {
  auto ids = split_ids(text);
  return m.elements(ids);
}

ordered_json ids_json(const FiniteStructure& m, const std::vector<Elem>& s) {
  ordered_json a = ordered_json::array();
  for (Elem e : s) a.push_back(m.id(e));
  return a;
}

// ---- subcommands --------------------------------------------------------

Outcome cmd_check(const std::string& path) {
  auto doc = load_structure_document(path);
  FiniteStructure m(doc.data);
  auto rep = check_axioms(m);
  auto by_sentence = evaluate_axiom_sentences(m);
  ordered_json j = report_head("check");
  j["size"] = m.size();
  ordered_json axioms = ordered_json::array();
  bool agree = true;
  for (const auto& a : rep.axioms) {
    ordered_json x;
    x["axiom"] = a.number;
    x["holds"] = a.holds;
    if (!a.holds) {
      x["witness"] = ids_json(m, a.witness);
      x["detail"] = a.detail;
    }
    axioms.push_back(x);
    agree = agree && by_sentence[static_cast<std::size_t>(a.number - 1)] == a.holds;
  }
  j["axioms"] = axioms;
  j["sentences_agree"] = agree;
  bool ok = rep.ok();
  if (ok && !doc.designated.empty()) {
    try {
      spregroup_from_document(doc);
      j["designated"] = "valid";
    } catch (const Error& e) {
      j["designated"] = std::string("invalid: ") + e.what();
      ok = false;
    }
  }
  return decision(std::move(j), ok);
}

Outcome cmd_sat(const std::string& path, const std::string& text) {
  auto m = load_structure(path);
  Formula f = parse_formula(text, m.signature());
  if (!is_sentence(f)) throw Error("formula has free variables; sat needs a sentence");
  ordered_json j = report_head("sat");
  j["formula"] = to_string(f);
  j["prenex"] = to_string(to_prenex(f));
  j["class"] = std::string(to_string(classify(f)));
  return decision(std::move(j), eval(m, f));
}

Outcome cmd_reduce(const std::string& path, const std::string& w) {
  auto p = load_pregroup(path);
  const auto& P = p->pregroup();
  Word word = parse_word(P, w);
  ordered_json j = report_head("reduce");
  j["verdict"] = "ok";
  j["word"] = format_word(P, word);
  j["reduced"] = format_word(P, reduce(P, word));
  j["input_reduced"] = !word.empty() && is_reduced(P, word);
  return {std::move(j), kTrue};
}

Outcome cmd_eqw(const std::string& path, const std::string& u, const std::string& v) {
  auto p = load_pregroup(path);
  const auto& P = p->pregroup();
  Word a = parse_word(P, u), b = parse_word(P, v);
  ordered_json j = report_head("eqw");
  j["u"] = format_word(P, reduce(P, a));
  j["v"] = format_word(P, reduce(P, b));
  return decision(std::move(j), equivalent(P, a, b));
}

Outcome cmd_mul(const std::string& path, const std::string& u, const std::string& v) {
  auto p = load_pregroup(path);
  const auto& P = p->pregroup();
  auto x = canonical(P, parse_word(P, u));
  auto y = canonical(P, parse_word(P, v));
  auto z = u_mul(x, y);
  ordered_json j = report_head("mul");
  j["verdict"] = "ok";
  j["u"] = x.str();
  j["v"] = y.str();
  j["product"] = z.str();
  j["length"] = z.length();
  return {std::move(j), kTrue};
}

Outcome cmd_inv(const std::string& path, const std::string& u) {
  auto p = load_pregroup(path);
  const auto& P = p->pregroup();
  auto x = canonical(P, parse_word(P, u));
  ordered_json j = report_head("inv");
  j["verdict"] = "ok";
  j["u"] = x.str();
  j["inverse"] = u_inv(x).str();
  return {std::move(j), kTrue};
}

std::string sidecar_path_for(const std::string& out) {
  std::filesystem::path p(out);
  if (p.extension() == ".json") p.replace_extension();
  return p.string() + ".sidecar.json";
}

struct ConstructResult {
  Outcome outcome;
  std::string document;
};

ConstructResult cmd_construct(const std::string& kind, const std::string& spec, const std::string& out,
                              const std::string& sidecar) {
  auto c = construct_from_spec(read_text_file(spec), parse_construction_kind(kind));
  std::string doc = format_structure_document(to_document(c.spregroup()));
  ordered_json side = ordered_json::object();
  for (const auto& [raw, id] : c.sidecar) side[raw] = id;
  std::string side_path = !sidecar.empty() ? sidecar : (!out.empty() ? sidecar_path_for(out) : "");
  if (!side_path.empty()) write_text_file(side_path, side.dump(2) + "\n");
  ordered_json j = report_head("construct");
  j["verdict"] = "ok";
  j["kind"] = kind;
  j["size"] = c.pregroup().size();
  j["carrier"] = c.pregroup().structure().carrier();
  j["axioms"] = check_axioms(c.pregroup().structure()).ok();
  if (!out.empty()) j["output"] = out;
  if (!side_path.empty()) j["sidecar"] = side_path;
  return {{std::move(j), kTrue}, doc};
}

Outcome cmd_iso(const std::string& a, const std::string& b, const std::string& subset) {
  auto m = load_structure(a);
  auto n = load_structure(b);
  auto s = subset_of(m, subset);
  auto phi = find_isomorphism(s, m, n);
  ordered_json j = report_head("iso");
  j["subset"] = ids_json(m, s);
  if (phi) {
    ordered_json map = ordered_json::object();
    for (std::size_t i = 0; i < phi->domain.size(); ++i) map[m.id(phi->domain[i])] = n.id(phi->image[i]);
    j["map"] = map;
  } else {
    j["map"] = nullptr;
  }
  return decision(std::move(j), phi.has_value());
}

Outcome cmd_charform(const std::string& path, const std::string& subset, const std::string& in) {
  auto m = load_structure(path);
  auto s = subset_of(m, subset);
  Formula f = characteristic_sentence(m, s);
  ordered_json j = report_head("charform");
  j["subset"] = ids_json(m, s);
  j["sentence"] = to_string(f);
  j["class"] = std::string(to_string(classify(f)));
  if (in.empty()) {
    j["verdict"] = "ok";
    return {std::move(j), kTrue};
  }
  auto n = load_structure(in);
  if (!(n.signature() == m.signature())) throw Error("the two structures have different signatures");
  return decision(std::move(j), eval(n, f));
}

EquationSystem system_for(const FiniteStructure& m, const std::vector<std::string>& eqs, const std::string& vars) {
  if (eqs.empty()) throw Error("no equations given");
  return parse_equation_system(eqs, m.signature(), split_ids(vars));
}

Outcome cmd_variety(const std::string& path, const std::vector<std::string>& eqs, const std::string& vars) {
  auto m = load_structure(path);
  auto sys = system_for(m, eqs, vars);
  auto sols = variety(m, sys);
  ordered_json j = report_head("variety");
  j["verdict"] = "ok";
  j["variables"] = sys.variables();
  j["count"] = sols.size();
  ordered_json rows = ordered_json::array();
  for (const auto& t : sols) rows.push_back(ids_json(m, t));
  j["solutions"] = rows;
  return {std::move(j), kTrue};
}

Outcome cmd_core(const std::string& path, const std::vector<std::string>& eqs, const std::string& vars) {
  auto m = load_structure(path);
  auto sys = system_for(m, eqs, vars);
  auto core = noetherian_core(m, sys);
  std::vector<bool> kept(sys.size(), false);
  for (const auto& e : core.equations())
    for (std::size_t i = 0; i < sys.size(); ++i)
      if (!kept[i] && sys.equations()[i] == e) {
        kept[i] = true;
        break;
      }
  ordered_json j = report_head("core");
  j["variables"] = sys.variables();
  ordered_json core_json = ordered_json::array();
  for (const auto& e : core.equations()) core_json.push_back(to_string(e));
  j["core"] = core_json;
  bool all = true;
  ordered_json dropped = ordered_json::array();
  for (std::size_t i = 0; i < sys.size(); ++i) {
    if (kept[i]) continue;
    Formula s = transfer_sentence(core, sys.equations()[i]);
    bool holds = eval(m, s);
    all = all && holds;
    ordered_json d;
    d["equation"] = to_string(sys.equations()[i]);
    d["sentence"] = to_string(s);
    d["holds"] = holds;
    dropped.push_back(d);
  }
  j["discarded"] = dropped;
  return decision(std::move(j), all);
}

std::vector<Word> word_list(const Pregroup& p, const std::string& text) {
  std::vector<Word> out;
  for (const auto& w : split_ids(text, ';')) out.push_back(parse_word(p, w));
  if (out.empty()) throw Error("no words given");
  return out;
}

Outcome cmd_transfer(const std::string& a, const std::string& b, const std::string& words) {
  auto p1 = load_pregroup(a);
  auto p2 = load_pregroup(b);
  auto r = transfer(*p1, *p2, word_list(p1->pregroup(), words));
  auto j = ordered_json::parse(format_transfer_report(r, *p1, *p2));
  return {std::move(j), r.ok() ? kTrue : kFalse};
}

Outcome cmd_harness(const std::string& a, const std::string& b, const HarnessOptions& opt) {
  auto c1 = construct_from_spec(read_text_file(a));
  auto c2 = construct_from_spec(read_text_file(b));
  auto r = application_harness(c1, c2, opt);
  auto j = ordered_json::parse(format_harness_report(r));
  return {std::move(j), r.ok() ? kTrue : kFalse};
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Finite pregroups, their universal groups and first-order structure", "stallings"};
  app.require_subcommand(1);
  app.fallthrough();
  bool pretty_flag = false;
  std::string output;
  app.add_flag("--pretty", pretty_flag, "Human-readable report instead of JSON");
  app.add_option("-o,--output", output, "Write the report (or constructed structure) to a file");

  std::string file, file2, formula, w, u, v, subset, in, vars, words, sidecar, kind;
  std::vector<std::string> eqs;
  HarnessOptions hopt;

  auto* check = app.add_subcommand("check", "Evaluate the eight pregroup axioms");
  check->add_option("pregroup", file, "Structure file")->required();

  auto* sat = app.add_subcommand("sat", "Evaluate a sentence in a structure");
  sat->add_option("structure", file)->required();
  sat->add_option("-f,--formula", formula, "Sentence")->required();

  auto* red = app.add_subcommand("reduce", "Reduce a word (leftmost first)");
  red->add_option("pregroup", file)->required();
  red->add_option("-w,--word", w, "Word, e.g. a,a,b")->required();

  auto* eqw = app.add_subcommand("eqw", "Decide equivalence of two words");
  eqw->add_option("pregroup", file)->required();
  eqw->add_option("-u", u, "First word")->required();
  eqw->add_option("-v", v, "Second word")->required();

  auto* mul = app.add_subcommand("mul", "Multiply in the universal group");
  mul->add_option("pregroup", file)->required();
  mul->add_option("-u", u)->required();
  mul->add_option("-v", v)->required();

  auto* inv = app.add_subcommand("inv", "Invert in the universal group");
  inv->add_option("pregroup", file)->required();
  inv->add_option("-u", u)->required();

  auto* cons = app.add_subcommand("construct", "Build a free product, amalgam or HNN pregroup");
  cons->add_option("kind", kind, "free, amalgam or hnn")->required()->check(CLI::IsMember({"free", "amalgam", "hnn"}));
  cons->add_option("spec", file, "Construction spec (JSON)")->required();
  cons->add_option("--sidecar", sidecar, "Where to write the raw-name -> carrier-id map");

  auto* iso = app.add_subcommand("iso", "Find an isomorphism of a subset into another structure");
  iso->add_option("source", file)->required();
  iso->add_option("target", file2)->required();
  iso->add_option("--subset", subset, "Element ids, comma separated")->required();

  auto* cf = app.add_subcommand("charform", "Characteristic existential sentence of a subset");
  cf->add_option("structure", file)->required();
  cf->add_option("--subset", subset)->required();
  cf->add_option("--in", in, "Evaluate the sentence in this structure");

  auto* var = app.add_subcommand("variety", "Solutions of a system of equations");
  var->add_option("structure", file)->required();
  var->add_option("-e,--equation", eqs, "Equation (repeatable)")->required();
  var->add_option("--vars", vars, "Variable order, comma separated");

  auto* core = app.add_subcommand("core", "Smallest subsystem with the same solutions");
  core->add_option("structure", file)->required();
  core->add_option("-e,--equation", eqs)->required();
  core->add_option("--vars", vars);

  auto* tr = app.add_subcommand("transfer", "Run the transfer construction on a word list");
  tr->add_option("first", file)->required();
  tr->add_option("second", file2)->required();
  tr->add_option("--words", words, "Words separated by ';', e.g. a,b;b,a")->required();

  auto* har = app.add_subcommand("harness", "Match subsets componentwise between two constructions");
  har->add_option("first", file, "Construction spec")->required();
  har->add_option("second", file2, "Construction spec")->required();
  har->add_option("--subset-size", hopt.subset_size);
  har->add_option("--hypothesis-size", hopt.hypothesis_size);
  har->add_option("--word-length", hopt.max_word_length);
  har->add_option("--seed", hopt.seed);

  std::vector<std::string> rev(args.rbegin(), args.rend());
  try {
    app.parse(rev);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e, out, err);
    return code == 0 ? kTrue : kInputError;
  }

  try {
    Outcome o;
    std::string document;
    if (*check) o = cmd_check(file);
    else if (*sat) o = cmd_sat(file, formula);
    else if (*red) o = cmd_reduce(file, w);
    else if (*eqw) o = cmd_eqw(file, u, v);
    else if (*mul) o = cmd_mul(file, u, v);
    else if (*inv) o = cmd_inv(file, u);
    else if (*cons) {
      auto r = cmd_construct(kind, file, output, sidecar);
      o = std::move(r.outcome);
      document = std::move(r.document);
    } else if (*iso) o = cmd_iso(file, file2, subset);
    else if (*cf) o = cmd_charform(file, subset, in);
    else if (*var) o = cmd_variety(file, eqs, vars);
    else if (*core) o = cmd_core(file, eqs, vars);
    else if (*tr) o = cmd_transfer(file, file2, words);
    else if (*har) o = cmd_harness(file, file2, hopt);

    std::string text = pretty_flag ? pretty(o.report) : o.report.dump(2) + "\n";
    if (*cons) {
      // the structure goes to -o (or stdout); the summary to stdout
      if (output.empty()) {
        out << document;
      } else {
        write_text_file(output, document);
        out << text;
      }
    } else if (!output.empty()) {
      write_text_file(output, text);
    } else {
      out << text;
    }
    return o.code;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kInputError;
  }
}

}  // namespace stallings::cli
