#include "crosscap/cli.hpp"

#include "crosscap/analysis.hpp"
#include "crosscap/catalog.hpp"
#include "crosscap/error.hpp"
#include "crosscap/json_io.hpp"

#include "CLI11.hpp"

#include <functional>
#include <sstream>

namespace crosscap {
namespace {

using io::json;

struct Options {
  std::string format = "text";
  std::optional<std::string> catalog;
  long search_bound = 50;
  std::optional<std::string> file;
};

bool as_json(const Options& o) { return o.format == "json"; }

std::string matrix_text(const IntMatrix& m, const std::string& indent = "  ") {
  std::ostringstream s;
  for (Eigen::Index i = 0; i < m.rows(); ++i) {
    s << indent << "[";
    for (Eigen::Index j = 0; j < m.cols(); ++j) s << (j ? " " : "") << to_string(m(i, j));
    s << "]\n";
  }
  return s.str();
}

std::string join_terms(const std::vector<BoundTerm>& terms) {
  std::string s;
  for (const auto& t : terms) s += (s.empty() ? "" : ", ") + t.name + " " + std::to_string(t.value);
  return s;
}

// Matrix input for snf/signature: inline JSON text or --file.
IntMatrix read_matrix(const std::optional<std::string>& inline_text, const Options& o) {
  if (inline_text && o.file) throw Error(ErrorCode::InvalidInput, "give a matrix or --file, not both");
  if (o.file) {
    const json j = io::read_file(*o.file);
    return io::matrix_from_json(j.is_object() && j.contains("matrix") ? j["matrix"] : j);
  }
  if (!inline_text) throw Error(ErrorCode::InvalidInput, "no matrix given");
  return io::matrix_from_json(io::parse_text(*inline_text));
}

Catalog load_catalog(const Options& o) { return Catalog::load(resolve_catalog_dir(o.catalog)); }

// A link named in the catalog, or a catalog-format entry from --file.
CatalogLink resolve_link(const std::optional<std::string>& name, const Options& o) {
  if (name && o.file) throw Error(ErrorCode::InvalidInput, "give a link name or --file, not both");
  if (!name && !o.file) throw Error(ErrorCode::InvalidInput, "no link given");
  const Catalog cat = load_catalog(o);
  if (name) return cat.link(*name);
  return cat.parse_link(io::read_file(*o.file));
}

std::string target_equation(const OrientationCertificate& c) {
  switch (c.outcome) {
    case Outcome::FailA: return "q(p,q) = " + to_string(c.target_a) + " has no integral solution";
    case Outcome::FailB: return "q(r,s) = " + to_string(c.target_b) + " has no integral solution";
    case Outcome::FailParity: return "q(r,s) = " + to_string(c.target_b) + " is even but must be odd";
    case Outcome::FailPairs: return "no unimodular pair with even q(u,v) and even cross term";
    case Outcome::Unresolved: return "unresolved within the search bound";
    case Outcome::Witness: break;
  }
  const auto& w = *c.witness;
  return "witness (p,q) = (" + to_string(w.p) + "," + to_string(w.q) + "), P = [[" + to_string(w.r) + "," +
         to_string(w.u) + "],[" + to_string(w.s) + "," + to_string(w.v) + "]] giving n=" + to_string(w.normal_form.n) + " k=" + to_string(w.normal_form.k) +
         " m=" + to_string(w.normal_form.m);
}

void print_report_text(const ObstructionReport& r, std::ostream& out) {
  const auto& in = r.inputs;
  out << "H1 order " << to_string(in.h1_order);
  if (in.linking_form) out << ", linking form " << to_string(*in.linking_form);
  out << "\n";
  for (std::size_t i = 0; i < 2; ++i) {
    const auto& o = in.orientations[i];
    out << "orientation " << (o.label.empty() ? std::to_string(i) : o.label) << ": signature " << to_string(o.signature)
        << ", linking number " << to_string(o.linking_number) << "\n";
  }
  out << "candidate classes of det +-" << to_string(in.h1_order) << ": " << r.classes.size() << "\n";
  if (r.unsupported_classes) out << "  (classes of square discriminant were not enumerated)\n";
  if (r.heuristic_filter) out << "  (H1 not cyclic: classes filtered by invariant factors only)\n";
  for (const auto& c : r.classes) {
    out << "  " << to_string(c.form) << "  H1 " << to_string(c.cokernel);
    if (c.linking_form) out << ", linking form " << to_string(*c.linking_form);
    if (c.filter != ClassFilter::Survived) {
      out << "  excluded: " << to_string(c.filter) << "\n";
      continue;
    }
    out << "  survives\n";
    for (const auto& oc : c.orientations) {
      const auto& label = in.orientations[static_cast<std::size_t>(oc.orientation)].label;
      out << "    " << (label.empty() ? std::to_string(oc.orientation) : label) << ": " << target_equation(oc) << " ["
          << to_string(oc.method);
      if (oc.modulus) out << " mod " << *oc.modulus;
      out << "]\n";
    }
  }
  out << "verdict: " << to_string(r.verdict) << "\n";
}

json analysis_json(const LinkAnalysis& a) {
  json os = json::array();
  for (const auto& o : a.orientations) {
    json oj = {{"label", o.label}, {"flags", o.flags}};
    auto put = [&](const char* key, const std::optional<int>& v) { oj[key] = v ? json(*v) : json(nullptr); };
    put("linking_number", o.linking_number);
    put("sigma_white", o.sigma_white);
    put("sigma_black", o.sigma_black);
    put("sigma_seifert", o.sigma_seifert);
    os.push_back(oj);
  }
  json j = {{"name", a.name},
            {"goeritz_source", a.goeritz_source},
            {"goeritz", io::to_json(a.goeritz.matrix())},
            {"homology", io::to_json(a.homology)},
            {"min_generators", a.min_generators},
            {"orientations", os},
            {"interval", io::to_json(a.interval)}};
  j["linking_form"] = a.linking_form ? io::to_json(*a.linking_form) : json(nullptr);
  if (a.stats) j["crossings"] = {{"n", a.stats->n}, {"black", a.stats->n_black}, {"white", a.stats->n_white}};
  if (a.obstruction)
    j["obstruction"] = io::to_json(*a.obstruction);
  else
    j["obstruction_skipped"] = a.obstruction_note;
  return j;
}

void print_analysis_text(const LinkAnalysis& a, std::ostream& out) {
  out << "link " << a.name << "\n";
  if (a.stats)
    out << "diagram: " << a.stats->n << " crossings, " << a.stats->n_black << " black and " << a.stats->n_white
        << " white regions\n";
  out << "Goeritz matrix (" << a.goeritz_source << "):\n" << matrix_text(a.goeritz.matrix());
  out << "H1 of the double branched cover: " << to_string(a.homology) << ", minimal generators " << a.min_generators << "\n";
  if (a.linking_form) out << "linking form: " << to_string(*a.linking_form) << "\n";
  for (const auto& o : a.orientations) {
    out << "orientation " << o.label << ":";
    if (o.linking_number) out << " lk " << *o.linking_number;
    if (o.sigma_white) out << ", signature " << *o.sigma_white << " (both checkerboard surfaces)";
    if (o.sigma_seifert) out << ", Seifert signature " << *o.sigma_seifert;
    out << "\n";
  }
  if (a.obstruction) {
    out << "beta1 = 2 test:\n";
    std::ostringstream s;
    print_report_text(*a.obstruction, s);
    std::istringstream lines(s.str());
    for (std::string line; std::getline(lines, line);) out << "  " << line << "\n";
  } else {
    out << "beta1 = 2 test skipped: " << a.obstruction_note << "\n";
  }
  out << "lower bounds: " << join_terms(a.interval.lower_terms) << "\n";
  out << "upper bounds: " << join_terms(a.interval.upper_terms) << "\n";
  out << "crosscap = [" << a.interval.lower << "," << a.interval.upper << "]\n";
}

std::string branch_name(SplitBranch b) {
  switch (b) {
    case SplitBranch::FirstMixed: return "gamma1+2g2+1";
    case SplitBranch::SecondMixed: return "gamma2+2g1+1";
    case SplitBranch::Sum: return "gamma1+gamma2+1";
  }
  return "?";
}

int cmd_analyze(const std::optional<std::string>& name, const Options& o, std::ostream& out) {
  const LinkAnalysis a = analyze_link(resolve_link(name, o), {o.search_bound, 64});
  if (as_json(o))
    out << analysis_json(a).dump(2) << "\n";
  else
    print_analysis_text(a, out);
  return 0;
}

int cmd_enumerate(const std::string& det_text, bool both, const Options& o, std::ostream& out) {
  Integer det;
  try {
    det = Integer(det_text);
  } catch (const std::exception&) {
    throw Error(ErrorCode::InvalidInput, "--det must be an integer, got \"" + det_text + "\"");
  }
  const FormClassSet s = enumerate_classes(det, both ? DefiniteSigns::Both : DefiniteSigns::PositiveOnly);
  if (as_json(o)) {
    out << io::to_json(s).dump(2) << "\n";
    return 0;
  }
  out << "det " << to_string(det) << ": " << s.representatives.size() << " classes\n";
  for (const auto& f : s.representatives) out << "  " << to_string(f) << "\n";
  return 0;
}

int cmd_split_union(const std::string& k1, const std::string& k2, const Options& o, std::ostream& out) {
  const Catalog cat = load_catalog(o);
  const SplitUnionResult r = split_union_crosscap(cat.knot(k1), cat.knot(k2));
  std::vector<std::string> names;
  for (auto b : r.attaining) names.push_back(branch_name(b));
  const char* kind = r.collapsed ? "gamma1+gamma2" : "gamma1+gamma2+1";
  if (as_json(o)) {
    out << json{{"knots", {k1, k2}},
                {"value", r.value},
                {"branches", r.branches},
                {"attaining", names},
                {"collapsed", r.collapsed},
                {"classification", kind}}
               .dump(2)
        << "\n";
    return 0;
  }
  out << "crosscap(" << k1 << " o " << k2 << ") = " << r.value << "\n";
  out << "branches: " << r.branches[0] << ", " << r.branches[1] << ", " << r.branches[2] << "\n";
  out << "attained by:";
  for (const auto& n : names) out << " " << n;
  out << "\nequals " << kind << "\n";
  return 0;
}

int cmd_obstruct(const std::optional<std::string>& path, const Options& o, std::ostream& out) {
  const auto file = path ? path : o.file;
  if (!file) throw Error(ErrorCode::InvalidInput, "no invariants file given");
  const TwoComponentInvariants inv = io::invariants_from_json(io::read_file(*file));
  const ObstructionReport r = beta2_obstruction(inv, {o.search_bound, 64});
  verify_report(r);
  if (as_json(o))
    out << io::to_json(r).dump(2) << "\n";
  else
    print_report_text(r, out);
  return 0;
}

int cmd_snf(const std::optional<std::string>& m, const Options& o, std::ostream& out) {
  const IntMatrix a = read_matrix(m, o);
  const auto d = smith_normal_form(a);
  if (d.U * a * d.V != d.D) throw Error(ErrorCode::InvariantViolation, "U A V != D");
  const FinAbGroup g = cokernel(a);
  if (as_json(o)) {
    json f = json::array();
    for (const auto& x : d.invariant_factors()) f.push_back(io::to_json(x));
    out << json{{"D", io::to_json(d.D)}, {"U", io::to_json(d.U)}, {"V", io::to_json(d.V)},
                {"invariant_factors", f}, {"cokernel", to_string(g)}}
               .dump(2)
        << "\n";
    return 0;
  }
  out << "D =\n" << matrix_text(d.D) << "U =\n" << matrix_text(d.U) << "V =\n" << matrix_text(d.V);
  out << "cokernel: " << to_string(g) << "\n";
  return 0;
}

int cmd_signature(const std::optional<std::string>& m, bool seifert, const Options& o, std::ostream& out) {
  IntMatrix a = read_matrix(m, o);
  if (seifert) {
    if (a.rows() != a.cols()) throw Error(ErrorCode::InvalidInput, "a Seifert matrix must be square");
    a = IntMatrix(a + a.transpose());
  }
  const SymIntMatrix s(a);
  const int sig = signature(s);
  if (as_json(o))
    out << json{{"signature", sig}, {"determinant", io::to_json(determinant(s.matrix()))}}.dump(2) << "\n";
  else
    out << "signature " << sig << "\n";
  return 0;
}

int cmd_goeritz(const std::optional<std::string>& name, const std::string& surface, const Options& o,
                std::ostream& out) {
  SymIntMatrix g;
  std::optional<CrossingStats> stats;
  std::optional<Integer> euler;
  if (o.file && !name) {
    const json j = io::read_file(*o.file);
    if (j.contains("bands")) {
      g = goeritz_from_bands(io::band_surface_from_json(j));
    } else {
      const LinkDiagram d = io::diagram_from_json(j.contains("diagram") ? j["diagram"] : j);
      const Checkerboard cb = checkerboard(d);
      const Color c = surface == "white" ? Color::White : Color::Black;
      g = goeritz_from_diagram(d, cb, c);
      euler = euler_number(d, cb, c);
      stats = crossing_stats(d);
    }
  } else {
    const CatalogLink l = resolve_link(name, o);
    if (l.diagram) {
      const Checkerboard cb = checkerboard(*l.diagram);
      const Color c = surface == "white" ? Color::White : Color::Black;
      g = goeritz_from_diagram(*l.diagram, cb, c);
      euler = euler_number(*l.diagram, cb, c);
      stats = crossing_stats(*l.diagram);
    } else if (l.band_surface) {
      g = goeritz_from_bands(*l.band_surface);
    } else {
      throw Error(ErrorCode::InvalidInput, l.name + ": no diagram or band surface");
    }
  }
  const FinAbGroup h = homology_from_goeritz(g);
  std::optional<LinkingForm> lf;
  if (h.cyclic() && h.order() > 1) lf = linking_form(g);
  if (as_json(o)) {
    json j = {{"goeritz", io::to_json(g.matrix())},
              {"determinant", io::to_json(determinant(g.matrix()))},
              {"signature", signature(g)},
              {"homology", io::to_json(h)},
              {"min_generators", min_generators(h)}};
    j["linking_form"] = lf ? io::to_json(*lf) : json(nullptr);
    if (euler) j["euler_number"] = io::to_json(*euler);
    out << j.dump(2) << "\n";
    return 0;
  }
  out << "Goeritz matrix:\n" << matrix_text(g.matrix());
  out << "det " << to_string(determinant(g.matrix())) << ", signature " << signature(g) << "\n";
  if (euler) out << "normal Euler number " << to_string(*euler) << "\n";
  out << "H1 = " << to_string(h) << ", minimal generators " << min_generators(h) << "\n";
  if (lf) out << "linking form " << to_string(*lf) << "\n";
  return 0;
}

// Closed-form bounds only; `analyze` adds the beta1 = 2 obstruction.
int cmd_bounds(const std::optional<std::string>& name, const Options& o, std::ostream& out) {
  const CatalogLink l = resolve_link(name, o);
  LowerInputs lower;
  std::optional<CrossingStats> stats;
  if (l.diagram) {
    stats = crossing_stats(*l.diagram);
    lower.min_generators = min_generators(homology_from_goeritz(goeritz_from_diagram(*l.diagram, checkerboard(*l.diagram))));
  } else if (l.band_surface) {
    lower.min_generators = min_generators(homology_from_goeritz(goeritz_from_bands(*l.band_surface)));
  }
  const CrosscapInterval iv = aggregate(l.record, lower, stats);
  if (as_json(o)) {
    out << io::to_json(iv).dump(2) << "\n";
    return 0;
  }
  out << "lower bounds: " << join_terms(iv.lower_terms) << "\n";
  out << "upper bounds: " << join_terms(iv.upper_terms) << "\n";
  out << "crosscap = [" << iv.lower << "," << iv.upper << "]\n";
  return 0;
}

}  // namespace

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Crosscap numbers of two-component links"};
  app.require_subcommand(1);
  app.fallthrough();

  Options opt;
  app.add_option("--format", opt.format, "Output format")->check(CLI::IsMember({"text", "json"}));
  app.add_option("--catalog", opt.catalog, "Catalog directory");
  app.add_option("--search-bound", opt.search_bound, "Search bound for the bounded solution search")
      ->check(CLI::Range(1L, 100000L));
  app.add_option("--file", opt.file, "Input file");

  std::function<int()> action;

  std::optional<std::string> link_name;
  auto* analyze = app.add_subcommand("analyze", "Run the full pipeline on a link");
  analyze->add_option("link", link_name, "Catalog name");
  analyze->callback([&] { action = [&] { return cmd_analyze(link_name, opt, out); }; });

  std::string det;
  bool both = false;
  auto* enumerate = app.add_subcommand("enumerate-forms", "Congruence classes of binary forms of a determinant");
  enumerate->add_option("--det", det, "Determinant ac - b^2")->required();
  enumerate->add_flag("--both-signs", both, "Also list negative definite classes");
  enumerate->callback([&] { action = [&] { return cmd_enumerate(det, both, opt, out); }; });

  std::string k1, k2;
  auto* split = app.add_subcommand("split-union", "Crosscap number of a split union of two knots");
  split->add_option("knot1", k1)->required();
  split->add_option("knot2", k2)->required();
  split->callback([&] { action = [&] { return cmd_split_union(k1, k2, opt, out); }; });

  std::optional<std::string> inv_path;
  auto* obstruct = app.add_subcommand("obstruct", "Decide whether a link bounds a surface with beta1 = 2");
  obstruct->add_option("--invariants", inv_path, "Invariants JSON file");
  obstruct->callback([&] { action = [&] { return cmd_obstruct(inv_path, opt, out); }; });

  std::optional<std::string> matrix_text_arg;
  auto* snf = app.add_subcommand("snf", "Smith normal form of an integer matrix");
  snf->add_option("matrix", matrix_text_arg, "Matrix as JSON, e.g. [[2,0],[0,3]]");
  snf->callback([&] { action = [&] { return cmd_snf(matrix_text_arg, opt, out); }; });

  bool seifert = false;
  auto* sig = app.add_subcommand("signature", "Signature of a symmetric integer matrix");
  sig->add_option("matrix", matrix_text_arg, "Matrix as JSON");
  sig->add_flag("--seifert", seifert, "Symmetrize as V + V^T first");
  sig->callback([&] { action = [&] { return cmd_signature(matrix_text_arg, seifert, opt, out); }; });

  std::string surface = "black";
  auto* goeritz = app.add_subcommand("goeritz", "Goeritz matrix, homology and linking form of a diagram");
  goeritz->add_option("link", link_name, "Catalog name");
  goeritz->add_option("--surface", surface, "Checkerboard surface")->check(CLI::IsMember({"black", "white"}));
  goeritz->callback([&] { action = [&] { return cmd_goeritz(link_name, surface, opt, out); }; });

  auto* bounds = app.add_subcommand("bounds", "Closed-form crosscap bounds for a catalog link");
  bounds->add_option("link", link_name, "Catalog name");
  bounds->callback([&] { action = [&] { return cmd_bounds(link_name, opt, out); }; });

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    std::ostringstream o, e2;
    const int code = app.exit(e, o, e2);
    out << o.str();
    err << e2.str();
    return code == 0 ? 0 : 1;
  }

  try {
    return action();
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return e.code() == ErrorCode::InvariantViolation ? 2 : 1;
  } catch (const json::exception& e) {
    err << "error: InvalidInput: " << e.what() << "\n";
    return 1;
  } catch (const std::exception& e) {
    err << "internal error: " << e.what() << "\n";
    return 2;
  }
}

}  // namespace crosscap
