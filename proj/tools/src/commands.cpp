#include "selfsim/cli/commands.hpp"

#include "selfsim/cli/expr.hpp"
#include "selfsim/cli/spec_file.hpp"
#include "selfsim/diagonal.hpp"
#include "selfsim/error.hpp"
#include "selfsim/hausdorff.hpp"
#include "selfsim/partition.hpp"
#include "selfsim/zero.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <ostream>

namespace selfsim::cli {

namespace {

using json = nlohmann::ordered_json;

struct Options {
  std::string spec;
  std::string format = "text";
  std::string expect;
  std::string ring = "Z";
  long l_bound = 16;
  std::size_t max_len = 0;
  std::string vertex;
  std::string g;
  std::string expr, lhs, rhs, germ;
  std::size_t depth = 6;
  long window = 4;
  long diag_window = 2;
  std::string ms;
};

struct Report {
  json j;
  std::vector<std::string> lines;
  int code = kExitOk;
};

json path_json(const Graph& G, const Path& p) { return G.format(p); }

json terms_json(const Algebra& alg, const Element& a) {
  json arr = json::array();
  const Graph& G = alg.graph();
  for (const auto& [t, c] : a.terms())
    arr.push_back({{"coeff", to_string(c)},
                   {"alpha", G.format(t.alpha())},
                   {"g", alg.group().format(t.g())},
                   {"beta", G.format(t.beta())}});
  return arr;
}

json family_json(const Graph& G, const InfiniteFamily& f) {
  return {{"stem", path_json(G, f.stem)},
          {"cycle", path_json(G, f.cycle)},
          {"exit", path_json(G, f.exit)},
          {"k_min", f.k_min}};
}

std::string family_text(const Graph& G, const InfiniteFamily& f) {
  std::string s = "stem " + G.format(f.stem) + ", cycle " + G.format(f.cycle) + ", exit " + G.format(f.exit);
  if (f.k_min) s += ", k >= " + std::to_string(f.k_min);
  return s;
}

std::string join_paths(const Graph& G, const std::vector<Path>& ps) {
  std::string s;
  for (const auto& p : ps) s += (s.empty() ? "" : ", ") + G.format(p);
  return s;
}

VertexId vertex_arg(const Graph& G, const std::string& name) {
  if (name.empty()) throw SemanticError("--vertex is required");
  return G.vertex_by_name(name);
}

Report cmd_validate(const SpecFile& spec) {
  const auto& act = *spec.action;
  const Graph& G = act.graph();
  const Group& grp = act.group();
  Report r;
  std::string gname = grp.is_integers() ? "Z" : "finite of order " + std::to_string(grp.order());
  r.j = {{"valid", true},
         {"vertices", G.num_vertices()},
         {"edges", G.num_edges()},
         {"group", grp.is_integers() ? "Z" : "finite"},
         {"katsura", spec.katsura.has_value()}};
  if (grp.is_finite()) r.j["order"] = grp.order();
  r.lines.push_back("valid: " + std::to_string(G.num_vertices()) + " vertices, " +
                    std::to_string(G.num_edges()) + " edges, group " + gname +
                    (spec.katsura ? " (katsura)" : ""));
  return r;
}

Report cmd_hausdorff(const SpecFile& spec, const Options& o) {
  const auto& act = *spec.action;
  const Graph& G = act.graph();
  HausdorffOptions ho;
  ho.l_bound = o.l_bound;
  ho.max_len = o.max_len;
  HausdorffVerdict v = decide_hausdorff(act, ho);
  Report r;
  r.j["verdict"] = std::string(to_string(v.kind));
  if (v.kind == HausdorffVerdict::Kind::NonHausdorff) {
    r.j["g"] = act.group().format(*v.g);
    r.j["vertex"] = G.vertex_name(*v.vertex);
    if (v.family) r.j["family"] = family_json(G, *v.family);
    json mem = json::array();
    for (const auto& p : v.first_members) mem.push_back(path_json(G, p));
    r.j["first_members"] = mem;
    std::string gl = act.group().is_integers() ? "l=" : "g=";
    r.lines.push_back("NonHausdorff: " + gl + act.group().format(*v.g) + " vertex=" + G.vertex_name(*v.vertex) +
                      " family " + join_paths(G, v.first_members) + ", …");
    if (v.family) r.lines.push_back("certificate: " + family_text(G, *v.family));
  } else {
    r.lines.push_back(std::string(to_string(v.kind)));
  }
  r.j["report"] = v.report;
  for (const auto& l : v.report) r.lines.push_back("  " + l);
  if (o.expect == "hausdorff" && v.kind != HausdorffVerdict::Kind::Hausdorff) r.code = kExitExpectation;
  return r;
}

Report cmd_fixed_paths(const SpecFile& spec, const Options& o) {
  const auto& act = *spec.action;
  const Graph& G = act.graph();
  VertexId v = vertex_arg(G, o.vertex);
  if (o.g.empty()) throw SemanticError("--g is required");
  GroupElem g = act.group().elem(o.g);
  std::size_t max_len = o.max_len ? o.max_len : 2 * G.num_vertices() + 8;
  FixedPathVerdict fp = act.katsura() ? minimal_fixed_paths(act, v, g.value(), max_len)
                                      : bounded_fixed_paths(act, v, g, max_len);
  Report r;
  r.j["verdict"] = std::string(to_string(fp.kind));
  r.j["g"] = act.group().format(g);
  r.j["vertex"] = G.vertex_name(v);
  r.j["max_len"] = max_len;
  json ps = json::array();
  for (const auto& p : fp.paths) ps.push_back(path_json(G, p));
  r.j["paths"] = ps;
  r.j["listing_truncated"] = fp.listing_truncated;
  r.j["family"] = fp.family ? family_json(G, *fp.family) : json(nullptr);
  r.lines.push_back(std::string(to_string(fp.kind)) + ": " + std::to_string(fp.paths.size()) +
                    " minimal strongly fixed paths of length < " + std::to_string(max_len));
  for (const auto& p : fp.paths) r.lines.push_back("  " + G.format(p));
  if (fp.listing_truncated) r.lines.push_back("  (listing truncated)");
  if (fp.family) r.lines.push_back("certificate: " + family_text(G, *fp.family));
  return r;
}

Report cmd_eval(const SpecFile& spec, const Options& o, const Algebra& alg) {
  if (o.expr.empty() || o.germ.empty()) throw SemanticError("--expr and --germ are required");
  Element a = parse_expr(alg, o.expr);
  GermPoint p = parse_germ(alg.action(), o.germ);
  Rational val = alg.ring().normalize(fn_eval(pi_map(a), p));
  Report r;
  r.j = {{"germ", format_germ(alg.action(), p)}, {"value", to_string(val)}};
  r.lines.push_back(alg.ring().format(val));
  (void)spec;
  return r;
}

Report cmd_equal(const Options& o, const Algebra& alg) {
  if (o.lhs.empty() || o.rhs.empty()) throw SemanticError("--lhs and --rhs are required");
  Element a = parse_expr(alg, o.lhs);
  Element b = parse_expr(alg, o.rhs);
  ZeroOptions zo;
  zo.depth = o.depth;
  ZeroVerdict z = elem_is_zero(a - b, zo);
  Report r;
  r.j["verdict"] = std::string(to_string(z.kind));
  r.j["route"] = z.route;
  r.j["germs_checked"] = z.germs_checked;
  r.j["difference"] = terms_json(alg, alg.normal_form(a - b));
  switch (z.kind) {
    case ZeroVerdict::Kind::Zero:
      r.lines.push_back("Equal (certified: " + z.route + ")");
      break;
    case ZeroVerdict::Kind::NonZero:
      r.j["witness"] = format_germ(alg.action(), *z.witness);
      r.j["witness_value"] = to_string(z.witness_value);
      r.lines.push_back("NotEqual: difference is " + alg.ring().format(z.witness_value) + " at " +
                        format_germ(alg.action(), *z.witness));
      break;
    case ZeroVerdict::Kind::ZeroUpToDepth:
      r.lines.push_back("EqualUpToDepth " + std::to_string(o.depth) + ": no difference on " +
                        std::to_string(z.germs_checked) + " germs");
      break;
  }
  if (!z.detail.empty()) {
    r.j["detail"] = z.detail;
    r.lines.push_back("  " + z.detail);
  }
  if (o.expect == "zero" && z.kind != ZeroVerdict::Kind::Zero) r.code = kExitExpectation;
  return r;
}

Report cmd_grade(const Options& o, const Algebra& alg) {
  if (o.expr.empty()) throw SemanticError("--expr is required");
  ParsedExpr px = parse_expr_graded(alg, o.expr);
  GradeMap gm = alg.grade_decompose(px.value);
  Report r;
  json comps = json::array();
  for (const auto& [d, e] : gm) comps.push_back({{"degree", d}, {"terms", terms_json(alg, e)}});
  r.j["homogeneous"] = gm.size() <= 1;
  r.j["components"] = comps;
  r.j["written_degrees"] = px.written_degrees;
  r.j["zero"] = gm.empty();
  if (gm.empty()) {
    // Zero lies in every graded piece; report the degree the expression was written in.
    if (px.written_degrees.size() == 1) {
      r.j["degree"] = *px.written_degrees.begin();
      r.lines.push_back("homogeneous, degree " + std::to_string(*px.written_degrees.begin()) +
                        " (the element is zero)");
    } else {
      r.lines.push_back("zero element");
    }
  } else if (gm.size() == 1) {
    r.j["degree"] = gm.begin()->first;
    r.lines.push_back("homogeneous, degree " + std::to_string(gm.begin()->first));
  } else {
    std::string ds;
    for (const auto& [d, e] : gm) ds += (ds.empty() ? "" : ", ") + std::to_string(d);
    r.lines.push_back("inhomogeneous, degrees " + ds);
    for (const auto& [d, e] : gm) r.lines.push_back("  degree " + std::to_string(d) + ": " + print_expr(alg, e));
  }
  return r;
}

Report cmd_diagonal(const Options& o, const Algebra& alg) {
  const Graph& G = alg.graph();
  const Group& grp = alg.group();
  std::vector<VertexId> reps;
  if (!o.vertex.empty()) reps.push_back(G.vertex_by_name(o.vertex));
  DiagonalStructure d = diagonal_report(alg, reps, o.diag_window);
  Report r;
  json blocks = json::array();
  for (const auto& b : d.blocks) {
    json orbit = json::array(), trans = json::array(), stab = json::array(), gens = json::array();
    for (auto w : b.orbit) orbit.push_back(G.vertex_name(w));
    for (const auto& g : b.transversal) trans.push_back(grp.format(g));
    for (const auto& g : b.stabilizer) stab.push_back(grp.format(g));
    for (std::size_t k = 0; k < b.w_generators.size(); ++k)
      gens.push_back({{"g", grp.format(b.w_generators[k])}, {"W", print_expr(alg, b.w_elements[k])}});
    json units = json::array();
    for (std::size_t x = 0; x < b.orbit.size(); ++x)
      for (std::size_t y = 0; y < b.orbit.size(); ++y)
        units.push_back({{"row", G.vertex_name(b.orbit[x])},
                         {"col", G.vertex_name(b.orbit[y])},
                         {"unit", print_expr(alg, b.units[x][y])}});
    json blk = {{"representative", G.vertex_name(b.rep)},
                {"orbit", orbit},
                {"transversal", trans},
                {"matrix_units", units},
                {"w_generators", gens},
                {"units_ok", b.units_ok},
                {"star_ok", b.star_ok},
                {"group_law_ok", b.group_law_ok},
                {"summary", b.summary},
                {"failures", b.failures}};
    if (b.period) blk["stabilizer_period"] = b.period->str();
    else blk["stabilizer"] = stab;
    blocks.push_back(blk);

    std::string orb;
    for (auto w : b.orbit) orb += (orb.empty() ? "" : ", ") + G.vertex_name(w);
    std::string st = b.period ? (*b.period == 1 ? "Z" : b.period->str() + "Z")
                              : (b.stabilizer.size() == 1 ? "trivial" : "order " + std::to_string(b.stabilizer.size()));
    r.lines.push_back("orbit of " + G.vertex_name(b.rep) + ": {" + orb + "} size " + std::to_string(b.orbit.size()) +
                      ", stabilizer " + st + ", block " + b.summary);
    for (std::size_t x = 0; x < b.orbit.size(); ++x)
      for (std::size_t y = 0; y < b.orbit.size(); ++y)
        r.lines.push_back("  e_{" + G.vertex_name(b.orbit[x]) + "," + G.vertex_name(b.orbit[y]) +
                          "} = " + print_expr(alg, b.units[x][y]));
    for (std::size_t k = 0; k < b.w_generators.size(); ++k)
      r.lines.push_back("  W^" + grp.format(b.w_generators[k]) + " = " + print_expr(alg, b.w_elements[k]));
    r.lines.push_back(std::string("  matrix units ") + (b.units_ok && b.star_ok ? "verified" : "FAILED") +
                      ", group law " + (b.group_law_ok ? "verified" : "FAILED"));
    for (const auto& f : b.failures) r.lines.push_back("  failure: " + f);
  }
  r.j["blocks"] = blocks;
  r.j["summary"] = d.summary;
  r.j["ok"] = d.ok();
  r.lines.push_back("D = " + d.summary);
  if (!d.ok()) r.code = kExitExpectation;
  return r;
}

Report cmd_katsura_check(const SpecFile& spec, const Options& o, const Algebra& alg) {
  if (!spec.katsura) throw SemanticError("katsura-check needs a katsura block");
  ValidationReport rep = katsura_family_check(alg, o.window);
  Report r;
  r.j["ok"] = rep.ok();
  r.j["window"] = o.window;
  json v = json::array();
  for (const auto& x : rep.violations) v.push_back({{"code", x.code}, {"message", x.message}});
  r.j["violations"] = v;
  if (rep.ok()) {
    r.lines.push_back("all relations hold for |m| <= " + std::to_string(o.window));
  } else {
    r.lines.push_back(std::to_string(rep.violations.size()) + " relation failures");
    for (const auto& x : rep.violations) r.lines.push_back("  " + x.code + ": " + x.message);
    r.code = kExitExpectation;
  }
  return r;
}

Report cmd_partition(const Options& o, const Algebra& alg) {
  const Graph& G = alg.graph();
  const Group& grp = alg.group();
  VertexId u = vertex_arg(G, o.vertex);
  std::vector<GroupElem> ms;
  std::string cur;
  // Default: every element of a finite group, 0..3 for Z.
  std::string list = o.ms;
  if (list.empty() && grp.is_finite())
    for (const auto& g : grp.elements()) list += (list.empty() ? "" : ",") + grp.format(g);
  if (list.empty()) list = "0,1,2,3";
  for (std::size_t i = 0; i <= list.size(); ++i) {
    if (i == list.size() || list[i] == ',') {
      ms.push_back(grp.elem(cur));
      cur.clear();
    } else if (!std::isspace(static_cast<unsigned char>(list[i]))) {
      cur += list[i];
    }
  }
  PartitionReport rep = partition_units(alg, u, ms);
  Report r;
  r.j["applicable"] = rep.applicable;
  if (!rep.applicable) {
    r.j["note"] = rep.note;
    r.lines.push_back("not applicable: " + rep.note);
    return r;
  }
  json fs = json::array();
  r.lines.push_back("|F_" + G.vertex_name(u) + "| = " + std::to_string(rep.minimal.size()));
  for (std::size_t gi = 0; gi < rep.minimal.size(); ++gi) {
    json cls = json::array();
    std::string text;
    for (const auto& c : rep.classes[gi]) {
      json members = json::array();
      std::string ct;
      for (const auto& m : c) {
        members.push_back(grp.format(m));
        ct += (ct.empty() ? "" : ",") + grp.format(m);
      }
      cls.push_back(members);
      text += " {" + ct + "}";
    }
    json units = json::array();
    for (const auto& unit : rep.units)
      if (unit.gamma == gi)
        units.push_back({{"m", grp.format(unit.m)}, {"triple", format_triple(alg.action(), unit.triple)},
                         {"p_U", print_expr(alg, unit.p_U)}, {"class", unit.cls}});
    fs.push_back({{"gamma", G.format(rep.minimal[gi])}, {"classes", cls}, {"units", units}});
    r.lines.push_back("  " + G.format(rep.minimal[gi]) + ":" + text);
  }
  r.j["minimal"] = fs;
  std::vector<bool> ids(rep.identity_holds.begin(), rep.identity_holds.end());
  bool all = std::all_of(ids.begin(), ids.end(), [](bool b) { return b; });
  r.j["identities_hold"] = all;
  r.j["class_elements_equal"] = rep.class_elements_equal;
  r.lines.push_back(std::string("p_{u,m} = sum of p_U: ") + (all ? "verified" : "FAILED"));
  if (!all || !rep.class_elements_equal) r.code = kExitExpectation;
  return r;
}

void emit(const Report& rep, const std::string& command, const Options& o, std::ostream& out) {
  if (o.format == "json") {
    json j = {{"command", command}};
    for (auto it = rep.j.begin(); it != rep.j.end(); ++it) j[it.key()] = it.value();
    j["exit_code"] = rep.code;
    out << j.dump(2) << "\n";
  } else {
    for (const auto& l : rep.lines) out << l << "\n";
  }
}

}  // namespace

int run_command(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  Options o;
  CLI::App app{"Self-similar graph actions and their algebras", "selfsim"};
  app.require_subcommand(1);
  app.add_option("--format", o.format, "Output format")->check(CLI::IsMember({"text", "json"}));

  auto add_spec = [&](CLI::App* sc) { sc->add_option("spec", o.spec, "Spec file")->required(); };
  auto add_ring = [&](CLI::App* sc) { sc->add_option("--ring", o.ring, "Coefficient ring: Z, Q or Zn:N"); };
  auto add_format = [&](CLI::App* sc) {
    sc->add_option("--format", o.format, "Output format")->check(CLI::IsMember({"text", "json"}));
  };

  auto* validate = app.add_subcommand("validate", "Check a spec file");
  add_spec(validate);
  auto* hausdorff = app.add_subcommand("hausdorff", "Decide finiteness of minimal strongly fixed paths");
  add_spec(hausdorff);
  hausdorff->add_option("--l-bound", o.l_bound, "Katsura sweep bound on |l|");
  hausdorff->add_option("--max-len", o.max_len, "Search length (default 2N+8)");
  hausdorff->add_option("--expect", o.expect)->check(CLI::IsMember({"hausdorff"}));
  auto* fixed = app.add_subcommand("fixed-paths", "List minimal strongly fixed paths");
  add_spec(fixed);
  fixed->add_option("--vertex", o.vertex)->required();
  fixed->add_option("--g", o.g, "Group element")->required();
  fixed->add_option("--max-len", o.max_len, "List paths of length < max-len");
  auto* eval = app.add_subcommand("eval", "Evaluate the Steinberg image at a germ");
  add_spec(eval);
  eval->add_option("--expr", o.expr)->required();
  eval->add_option("--germ", o.germ, "[(alpha, g, beta), mu (rho)^inf]")->required();
  add_ring(eval);
  auto* equal = app.add_subcommand("equal", "Decide lhs == rhs");
  add_spec(equal);
  equal->add_option("--lhs", o.lhs)->required();
  equal->add_option("--rhs", o.rhs)->required();
  equal->add_option("--depth", o.depth, "Germ test set depth");
  equal->add_option("--expect", o.expect)->check(CLI::IsMember({"zero"}));
  add_ring(equal);
  auto* grade = app.add_subcommand("grade", "Degree decomposition");
  add_spec(grade);
  grade->add_option("--expr", o.expr)->required();
  add_ring(grade);
  auto* diagonal = app.add_subcommand("diagonal", "Diagonal subalgebra by vertex orbits");
  add_spec(diagonal);
  diagonal->add_option("--vertex", o.vertex, "Orbit representative");
  diagonal->add_option("--window", o.diag_window, "Z stabilizers: check k * period for |k| <= window");
  add_ring(diagonal);
  auto* kcheck = app.add_subcommand("katsura-check", "Verify the Katsura family relations");
  add_spec(kcheck);
  kcheck->add_option("--window", o.window, "Check |m| <= window");
  add_ring(kcheck);
  auto* partition = app.add_subcommand("partition", "Units U_(m, gamma) over F_u");
  add_spec(partition);
  partition->add_option("--vertex", o.vertex)->required();
  partition->add_option("--ms", o.ms, "Comma separated group elements");
  add_ring(partition);
  for (auto* sc : app.get_subcommands({})) add_format(sc);

  std::vector<std::string> rev(args.rbegin(), args.rend());
  try {
    app.parse(rev);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "usage error: " << e.what() << "\n";
    return kExitInput;
  }

  CLI::App* sc = app.get_subcommands().front();
  const std::string name = sc->get_name();
  try {
    SpecFile spec = load_spec(o.spec);
    Report rep;
    if (name == "validate") {
      rep = cmd_validate(spec);
    } else if (name == "hausdorff") {
      rep = cmd_hausdorff(spec, o);
    } else if (name == "fixed-paths") {
      rep = cmd_fixed_paths(spec, o);
    } else {
      Algebra alg(spec.action, Ring::parse(o.ring));
      if (name == "eval") rep = cmd_eval(spec, o, alg);
      else if (name == "equal") rep = cmd_equal(o, alg);
      else if (name == "grade") rep = cmd_grade(o, alg);
      else if (name == "diagonal") rep = cmd_diagonal(o, alg);
      else if (name == "katsura-check") rep = cmd_katsura_check(spec, o, alg);
      else rep = cmd_partition(o, alg);
    }
    emit(rep, name, o, out);
    return rep.code;
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return kExitInput;
  }
}

}  // namespace selfsim::cli
