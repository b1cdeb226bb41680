#include "morsetree/cli.hpp"

#include <CLI11.hpp>

#include <cctype>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>

#include "morsetree/morsetree.hpp"

namespace morsetree::cli {
namespace {

bool color_enabled() {
  const char* v = std::getenv("MM_COLOR");
  return v && std::string(v) == "1";
}

std::string paint(const std::string& text, bool good) {
  if (!color_enabled()) return text;
  return (good ? "\033[32m" : "\033[31m") + text + "\033[0m";
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InputError("cannot read " + path);
  std::ostringstream s;
  s << in.rdbuf();
  return s.str();
}

class Session {
 public:
  Session(std::ostream& out, std::ostream& err) : out_(out), err_(err) {}

  std::ostream& err() { return err_; }

  // Writes to the -o file when given, else stdout.
  void emit(const std::string& text, const std::string& output) {
    if (output.empty()) {
      out_ << text;
      return;
    }
    std::ofstream f(output, std::ios::binary);
    if (!f) throw InputError("cannot write " + output);
    f << text;
  }
  void say(const std::string& text) { out_ << text; }

  LoadedFunction load_function(const std::string& path) {
    current_ = path;
    return parse_function(read_file(path));
  }
  PathFunction load_path(const std::string& path) {
    LoadedFunction f = load_function(path);
    if (f.path) return *f.path;
    if (auto p = as_path_function(f.function)) return *p;
    throw InputError("this command needs a function on a path");
  }
  ParsedTree load_tree(const std::string& path) {
    current_ = path;
    return parse_merge_tree(read_file(path));
  }

  const std::string& current() const { return current_; }

 private:
  std::ostream& out_;
  std::ostream& err_;
  std::string current_;
};

std::string dot_of_function(const DiscreteMorseFunction& f) {
  const SimplicialTree& t = f.complex();
  std::string out = "graph dmf {\n  node [shape=circle];\n";
  for (SimplexId v = 0; v < t.vertex_count(); ++v)
    out += "  v" + std::to_string(t.vertex_id(v)) + " [label=\"" + to_string(f.value(v)) + "\"];\n";
  for (SimplexId e = t.vertex_count(); e < t.simplex_count(); ++e)
    out += "  v" + std::to_string(t.edge(e).a) + " -- v" + std::to_string(t.edge(e).b) + " [label=\"" +
           to_string(f.value(e)) + "\"];\n";
  return out + "}\n";
}

void cmd_validate(Session& s, const std::string& file) {
  LoadedFunction lf = s.load_function(file);
  const DiscreteMorseFunction& f = lf.function;
  CriticalData d = validate(f);
  const SimplicialTree& t = f.complex();
  auto list = [](const std::vector<Rational>& v) {
    std::string r;
    for (std::size_t i = 0; i < v.size(); ++i) r += (i ? " " : "") + to_string(v[i]);
    return r.empty() ? std::string("-") : r;
  };
  std::ostringstream o;
  o << paint("valid", true) << " discrete Morse function on " << t.vertex_count() << " vertices\n";
  o << "critical vertex values: " << list(d.critical_vertex_values) << '\n';
  o << "critical edge values: " << list(d.critical_edge_values) << '\n';
  o << "matched pairs:";
  if (d.matched_pairs.empty()) o << " -";
  for (auto [v, e] : d.matched_pairs) o << ' ' << t.simplex_name(v) << '/' << t.simplex_name(e);
  o << '\n';
  o << "index-ordered: " << (is_index_ordered(f) ? "yes" : "no") << '\n';
  o << "sublevel-connected: " << (is_sublevel_connected(f) ? "yes" : "no") << '\n';
  s.say(o.str());
}

void cmd_induce(Session& s, const std::string& file, bool curry, const std::string& format,
                const std::string& output) {
  std::string text;
  if (curry) {
    CMlTree t = induced_cml_tree(s.load_path(file));
    if (format == "dot") text = to_dot(t.tree, &t.labels, "cml_tree");
    else if (format == "merge") text = to_text(t.tree) + "\n";
    else text = t.text() + "\n";
  } else {
    InducedTree ind = induce(s.load_function(file).function);
    if (format == "dot") text = to_dot(ind.ml.tree, &ind.ml.labels, "ml_tree");
    else if (format == "merge") text = to_text(ind.ml.tree) + "\n";
    else text = ind.ml.text() + "\n";
    if (ind.single_leaf && format != "dot") text = "# single leaf: no critical edge\n" + text;
  }
  s.emit(text, output);
}

void cmd_realize(Session& s, const std::string& file, const std::string& order, bool trace, bool mirror,
                 const std::string& output) {
  ParsedTree pt = s.load_tree(file);
  const MergeTree& t = pt.tree;
  Orientation o = mirror ? Orientation::mirrored : Orientation::forward;
  PathFunction f({Rational(0)});
  if (order == "index") {
    f = induced_dmf(t, labeling_from_order(t, index_morse_order(t)), o);
  } else if (order == "sublevel") {
    f = induced_dmf(t, labeling_from_order(t, sublevel_connected_morse_order(t)), o);
  } else if (order == "labels") {
    if (!pt.labels) throw InputError("--order labels needs a labeled tree");
    f = induced_dmf(t, *pt.labels, o);
  } else {
    std::vector<StepRecord> records;
    f = step_by_step_dmf(t, &records);
    if (mirror) std::reverse(f.values.begin(), f.values.end());
    if (trace) s.say(format_trace(records));
  }
  s.emit(format_path_function(f), output);
}

int cmd_equiv(Session& s, const std::string& relation, const std::string& a, const std::string& b,
              bool witness, bool allow_reversal) {
  EquivalenceResult r;
  if (relation == "shuffle") {
    LoadedFunction fa = s.load_function(a), fb = s.load_function(b);
    if (fa.path && fb.path) {
      r = shuffle_equivalent(*fa.path, *fb.path,
                             allow_reversal ? PathMatching::allow_reversal : PathMatching::identity);
    } else {
      if (!(fa.function.complex() == fb.function.complex()))
        throw InputError("shuffle equivalence of tree functions needs the same complex");
      r = shuffle_equivalent(fa.function, fb.function);
    }
  } else if (relation == "symmetry") {
    PathFunction fa = s.load_path(a), fb = s.load_path(b);
    r = symmetry_equivalent(fa, fb, witness);
  } else {
    DiscreteMorseFunction fa = s.load_function(a).function, fb = s.load_function(b).function;
    r = cm_equivalent(fa, fb, witness);
  }
  s.say(r.equivalent ? "equivalent\n" : "not equivalent\n");
  if (witness && r.witness) s.say(r.witness->describe());
  return r.equivalent ? 0 : 1;
}

void cmd_cm_to_path(Session& s, const std::string& file, bool log, const std::string& output) {
  std::vector<Reattachment> steps;
  PathFunction p = cm_to_path(s.load_function(file).function, &steps);
  if (log)
    for (const auto& r : steps)
      s.say("# level " + to_string(r.level) + ": edge {" + std::to_string(r.kept) + "," +
            std::to_string(r.detached) + "} moved to {" + std::to_string(r.kept) + "," +
            std::to_string(r.attached) + "}\n");
  std::string vertices;
  for (std::size_t i = 0; i < p.path.sequence().size(); ++i)
    vertices += (i ? " " : "") + std::to_string(p.path.sequence()[i]);
  s.say("# vertex order: " + vertices + "\n");
  s.emit(format_path_function(p), output);
}

void cmd_pl(Session& s, const std::string& mode, const std::string& file, const std::string& output) {
  if (mode == "to") {
    s.emit(format_pl(dmf_to_pl(s.load_path(file))), output);
  } else {
    PLFunction pl = parse_pl(read_file(file));
    s.emit(format_path_function(pl_to_dmf(pl)), output);
  }
}

int cmd_selftest(Session& s, std::size_t leaves, std::size_t vertices, std::size_t tree_vertices) {
  VerifyOptions o;
  o.max_leaves = leaves;
  o.max_vertices = vertices;
  o.max_tree_vertices = tree_vertices;
  EnumerationReport r = verify_theorems(o);
  s.say(r.format(color_enabled()));
  return r.ok() ? 0 : 1;
}

void cmd_export_dot(Session& s, const std::string& file, const std::string& output) {
  std::string text = read_file(file);
  std::size_t i = 0;
  for (;;) {
    while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i]))) ++i;
    if (i < text.size() && text[i] == '#') {
      while (i < text.size() && text[i] != '\n') ++i;
      continue;
    }
    break;
  }
  if (i < text.size() && (text[i] == '(' || text[i] == '*')) {
    ParsedTree t = parse_merge_tree(text);
    s.emit(to_dot(t.tree, t.labels ? &*t.labels : nullptr), output);
  } else {
    s.emit(dot_of_function(parse_function(text).function), output);
  }
}

void cmd_order(Session& s, const std::string& file, const std::string& kind) {
  ParsedTree t = s.load_tree(file);
  MorseOrder o = kind == "index" ? index_morse_order(t.tree) : sublevel_connected_morse_order(t.tree);
  s.say(format_order(t.tree, o) + "\n");
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Discrete Morse functions on paths and trees, and their merge trees."};
  app.name("morsetree");
  app.require_subcommand(1, 1);

  std::string file, file_b, output, format = "ml", order, relation, mode, kind = "index";
  bool curry = false, trace = false, mirror = false, witness = false, reversal = false, log = false;
  std::size_t leaves = 7, vertices = 5, tree_vertices = 5;

  auto* validate_cmd = app.add_subcommand("validate", "Check a function file and list its critical cells");
  validate_cmd->add_option("file", file, "path or tree function file")->required();

  auto* induce_cmd = app.add_subcommand("induce", "Print the merge tree induced by a function");
  induce_cmd->add_option("file", file)->required();
  induce_cmd->add_flag("--curry", curry, "take chirality from the path orientation");
  induce_cmd->add_option("--format", format)->check(CLI::IsMember({"ml", "merge", "dot"}));
  induce_cmd->add_option("-o,--output", output);

  auto* realize_cmd = app.add_subcommand("realize", "Realize a merge tree as a function on a path");
  realize_cmd->add_option("tree", file)->required();
  realize_cmd->add_option("--order", order)->required()->check(
      CLI::IsMember({"index", "sublevel", "step", "labels"}));
  realize_cmd->add_flag("--trace", trace, "print every step (with --order step)");
  realize_cmd->add_flag("--mirror", mirror, "use the reversed path orientation");
  realize_cmd->add_option("-o,--output", output);

  auto* equiv_cmd = app.add_subcommand("equiv", "Decide an equivalence; exit 0 if equivalent, 1 if not");
  equiv_cmd->add_option("--relation", relation)->required()->check(
      CLI::IsMember({"shuffle", "symmetry", "cm"}));
  equiv_cmd->add_option("a", file)->required();
  equiv_cmd->add_option("b", file_b)->required();
  equiv_cmd->add_flag("--witness", witness);
  equiv_cmd->add_flag("--allow-reversal", reversal, "shuffle: also try the reversed path");

  auto* cm_cmd = app.add_subcommand("cm-to-path", "Reduce a tree function to a path function");
  cm_cmd->add_option("file", file)->required();
  cm_cmd->add_flag("--log", log, "list the edge moves");
  cm_cmd->add_option("-o,--output", output);

  auto* pl_cmd = app.add_subcommand("pl", "Convert between path functions and piecewise-linear functions");
  pl_cmd->add_option("mode", mode)->required()->check(CLI::IsMember({"to", "from"}));
  pl_cmd->add_option("file", file)->required();
  pl_cmd->add_option("-o,--output", output);

  auto* self_cmd = app.add_subcommand("selftest", "Exhaustively check the theorems on small instances");
  self_cmd->add_option("--max-leaves", leaves)->check(CLI::Range(1, 9));
  self_cmd->add_option("--max-vertices", vertices)->check(CLI::Range(1, 6));
  self_cmd->add_option("--max-tree-vertices", tree_vertices)->check(CLI::Range(1, 6));

  auto* dot_cmd = app.add_subcommand("export-dot", "Graphviz rendering of a merge tree or function file");
  dot_cmd->add_option("file", file)->required();
  dot_cmd->add_option("-o,--output", output);

  auto* order_cmd = app.add_subcommand("order", "List the nodes of a merge tree in a Morse order");
  order_cmd->add_option("tree", file)->required();
  order_cmd->add_option("--kind", kind)->check(CLI::IsMember({"index", "sublevel"}));

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) {
      out << app.help();
      return 0;
    }
    err << "error: " << e.what() << "\n\n" << app.help();
    return 2;
  }

  Session s(out, err);
  try {
    if (*validate_cmd) cmd_validate(s, file);
    else if (*induce_cmd) cmd_induce(s, file, curry, format, output);
    else if (*realize_cmd) cmd_realize(s, file, order, trace, mirror, output);
    else if (*equiv_cmd) return cmd_equiv(s, relation, file, file_b, witness, reversal);
    else if (*cm_cmd) cmd_cm_to_path(s, file, log, output);
    else if (*pl_cmd) cmd_pl(s, mode, file, output);
    else if (*self_cmd) return cmd_selftest(s, leaves, vertices, tree_vertices);
    else if (*dot_cmd) cmd_export_dot(s, file, output);
    else if (*order_cmd) cmd_order(s, file, kind);
    return 0;
  } catch (const InputError& e) {
    err << (s.current().empty() ? std::string() : s.current() + ":") << e.what() << '\n';
  } catch (const MorseViolation& e) {
    err << s.current() << ": " << paint("invalid", false) << ": " << e.what() << '\n';
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
  }
  return 2;
}

}  // namespace morsetree::cli
