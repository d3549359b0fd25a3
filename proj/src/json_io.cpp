#include "crosscap/json_io.hpp"

#include "crosscap/error.hpp"

#include <fstream>
#include <limits>
#include <sstream>

namespace crosscap::io {
namespace {

[[noreturn]] void bad(const std::string& what) { throw Error(ErrorCode::InvalidInput, what); }

const json& field(const json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) bad(std::string("missing field \"") + key + "\"");
  return j.at(key);
}

bool bool_from_json(const json& j, const char* what) {
  if (!j.is_boolean()) bad(std::string(what) + " must be a boolean");
  return j.get<bool>();
}

std::string string_from_json(const json& j, const char* what) {
  if (!j.is_string()) bad(std::string(what) + " must be a string");
  return j.get<std::string>();
}

template <typename E>
E enum_from_json(const json& j, std::initializer_list<E> values, const char* what) {
  const std::string s = string_from_json(j, what);
  for (E v : values)
    if (to_string(v) == s) return v;
  bad(std::string("unknown ") + what + " \"" + s + "\"");
}

json witness_to_json(const SystemWitness& w) {
  return {{"p", to_json(w.p)}, {"q", to_json(w.q)}, {"r", to_json(w.r)}, {"s", to_json(w.s)},
          {"u", to_json(w.u)}, {"v", to_json(w.v)},
          {"normal_form", {{"n", to_json(w.normal_form.n)}, {"k", to_json(w.normal_form.k)}, {"m", to_json(w.normal_form.m)}}}};
}

SystemWitness witness_from_json(const json& j) {
  SystemWitness w;
  w.p = integer_from_json(field(j, "p"));
  w.q = integer_from_json(field(j, "q"));
  w.r = integer_from_json(field(j, "r"));
  w.s = integer_from_json(field(j, "s"));
  w.u = integer_from_json(field(j, "u"));
  w.v = integer_from_json(field(j, "v"));
  const json& nf = field(j, "normal_form");
  w.normal_form = {integer_from_json(field(nf, "n")), integer_from_json(field(nf, "k")), integer_from_json(field(nf, "m"))};
  return w;
}

}  // namespace

json to_json(const Integer& x) {
  if (x >= std::numeric_limits<std::int64_t>::min() && x <= std::numeric_limits<std::int64_t>::max())
    return x.convert_to<std::int64_t>();
  return x.str();
}

Integer integer_from_json(const json& j, const char* what) {
  if (j.is_number_integer()) return j.is_number_unsigned() ? Integer(j.get<std::uint64_t>()) : Integer(j.get<std::int64_t>());
  if (j.is_string()) {
    const auto s = j.get<std::string>();
    const std::size_t start = !s.empty() && s[0] == '-' ? 1 : 0;
    if (s.size() == start || s.find_first_not_of("0123456789", start) != std::string::npos)
      bad(std::string(what) + " \"" + s + "\" is not an integer");
    return Integer(s);
  }
  bad(std::string(what) + " must be an integer");
}

int int_from_json(const json& j, const char* what) {
  const Integer x = integer_from_json(j, what);
  if (x > std::numeric_limits<int>::max() || x < std::numeric_limits<int>::min()) bad(std::string(what) + " out of range");
  return x.convert_to<int>();
}

json to_json(const IntMatrix& m) {
  json rows = json::array();
  for (Eigen::Index i = 0; i < m.rows(); ++i) {
    json row = json::array();
    for (Eigen::Index k = 0; k < m.cols(); ++k) row.push_back(to_json(m(i, k)));
    rows.push_back(std::move(row));
  }
  return rows;
}

IntMatrix matrix_from_json(const json& j) {
  if (!j.is_array() || j.empty()) bad("matrix must be a non-empty array of rows");
  const std::size_t cols = j[0].is_array() ? j[0].size() : 0;
  if (cols == 0) bad("matrix rows must be non-empty arrays");
  IntMatrix m(static_cast<Eigen::Index>(j.size()), static_cast<Eigen::Index>(cols));
  for (std::size_t i = 0; i < j.size(); ++i) {
    if (!j[i].is_array() || j[i].size() != cols) bad("matrix rows must all have the same length");
    for (std::size_t k = 0; k < cols; ++k)
      m(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(k)) = integer_from_json(j[i][k], "matrix entry");
  }
  return m;
}

json to_json(const BinaryForm& f) { return json::array({to_json(f.a), to_json(f.b), to_json(f.c)}); }

BinaryForm form_from_json(const json& j) {
  if (!j.is_array() || j.size() != 3) bad("form must be a triple [a, b, c]");
  return {integer_from_json(j[0]), integer_from_json(j[1]), integer_from_json(j[2])};
}

json to_json(const FormClassSet& s) {
  json reps = json::array();
  for (const auto& f : s.representatives) reps.push_back(to_json(f));
  return {{"det", to_json(s.det)}, {"representatives", reps}};
}

json to_json(const FinAbGroup& g) {
  json out = json::array();
  for (const auto& d : g.invariant_factors) out.push_back(to_json(d));
  return out;
}

json to_json(const LinkingForm& f) { return {{"order", to_json(f.order)}, {"numerator", to_json(f.numerator)}}; }

LinkingForm linking_form_from_json(const json& j) {
  return LinkingForm(integer_from_json(field(j, "order"), "order"), integer_from_json(field(j, "numerator"), "numerator"));
}

json to_json(const TwoComponentInvariants& inv) {
  json j = {{"h1_order", to_json(inv.h1_order)}};
  if (inv.linking_form) j["linking_form"] = to_json(*inv.linking_form);
  if (!inv.h1_invariant_factors.empty()) {
    json f = json::array();
    for (const auto& d : inv.h1_invariant_factors) f.push_back(to_json(d));
    j["h1_invariant_factors"] = f;
  }
  json os = json::array();
  for (const auto& o : inv.orientations) {
    json oj = {{"signature", to_json(o.signature)}, {"linking_number", to_json(o.linking_number)}};
    if (!o.label.empty()) oj["label"] = o.label;
    os.push_back(oj);
  }
  j["orientations"] = os;
  return j;
}

TwoComponentInvariants invariants_from_json(const json& j) {
  TwoComponentInvariants inv;
  inv.h1_order = integer_from_json(field(j, "h1_order"), "h1_order");
  if (j.contains("linking_form") && !j["linking_form"].is_null()) inv.linking_form = linking_form_from_json(j["linking_form"]);
  if (j.contains("h1_invariant_factors"))
    for (const auto& d : j["h1_invariant_factors"]) inv.h1_invariant_factors.push_back(integer_from_json(d));
  const json& os = field(j, "orientations");
  if (!os.is_array() || os.size() != 2) bad("invariants need exactly two orientation records");
  for (std::size_t i = 0; i < 2; ++i) {
    inv.orientations[i].signature = integer_from_json(field(os[i], "signature"), "signature");
    inv.orientations[i].linking_number = integer_from_json(field(os[i], "linking_number"), "linking_number");
    if (os[i].contains("label")) inv.orientations[i].label = string_from_json(os[i]["label"], "label");
  }
  return inv;
}

json to_json(const ObstructionReport& r) {
  json classes = json::array();
  for (const auto& c : r.classes) {
    json cj = {{"form", to_json(c.form)},
               {"signature", c.signature},
               {"cokernel", to_json(c.cokernel)},
               {"filter", to_string(c.filter)}};
    if (c.linking_form) cj["linking_form"] = to_json(*c.linking_form);
    json os = json::array();
    for (const auto& o : c.orientations) {
      json oj = {{"orientation", o.orientation},
                 {"target_a", to_json(o.target_a)},
                 {"target_b", to_json(o.target_b)},
                 {"outcome", to_string(o.outcome)},
                 {"method", to_string(o.method)},
                 {"exact", o.exact},
                 {"solutions_a", o.solutions_a},
                 {"solutions_b", o.solutions_b}};
      if (o.modulus) oj["modulus"] = *o.modulus;
      if (o.witness) oj["witness"] = witness_to_json(*o.witness);
      os.push_back(oj);
    }
    cj["orientations"] = os;
    classes.push_back(cj);
  }
  return {{"verdict", to_string(r.verdict)},
          {"inputs", to_json(r.inputs)},
          {"config", {{"search_bound", r.config.search_bound}, {"max_modulus", r.config.max_modulus}}},
          {"heuristic_filter", r.heuristic_filter},
          {"unsupported_classes", r.unsupported_classes},
          {"classes", classes}};
}

ObstructionReport report_from_json(const json& j) {
  ObstructionReport r;
  r.verdict = enum_from_json(field(j, "verdict"), {Verdict::Obstructed, Verdict::Consistent, Verdict::Inconclusive}, "verdict");
  r.inputs = invariants_from_json(field(j, "inputs"));
  const json& cfg = field(j, "config");
  r.config.search_bound = to_int64(integer_from_json(field(cfg, "search_bound")));
  r.config.max_modulus = to_int64(integer_from_json(field(cfg, "max_modulus")));
  r.heuristic_filter = bool_from_json(field(j, "heuristic_filter"), "heuristic_filter");
  r.unsupported_classes = bool_from_json(field(j, "unsupported_classes"), "unsupported_classes");
  for (const auto& cj : field(j, "classes")) {
    ClassCertificate c;
    c.form = form_from_json(field(cj, "form"));
    c.signature = int_from_json(field(cj, "signature"));
    for (const auto& d : field(cj, "cokernel")) c.cokernel.invariant_factors.push_back(integer_from_json(d));
    c.filter = enum_from_json(field(cj, "filter"),
                              {ClassFilter::Survived, ClassFilter::NonCyclicCokernel, ClassFilter::LinkingFormMismatch,
                               ClassFilter::InvariantFactorMismatch},
                              "filter");
    if (cj.contains("linking_form")) c.linking_form = linking_form_from_json(cj["linking_form"]);
    for (const auto& oj : field(cj, "orientations")) {
      OrientationCertificate o;
      o.orientation = int_from_json(field(oj, "orientation"));
      o.target_a = integer_from_json(field(oj, "target_a"));
      o.target_b = integer_from_json(field(oj, "target_b"));
      o.outcome = enum_from_json(field(oj, "outcome"),
                                 {Outcome::Witness, Outcome::FailA, Outcome::FailB, Outcome::FailParity,
                                  Outcome::FailPairs, Outcome::Unresolved},
                                 "outcome");
      o.method = enum_from_json(field(oj, "method"),
                                {Method::Definite, Method::LocalModulus, Method::Parity, Method::BoundedSearch}, "method");
      o.exact = bool_from_json(field(oj, "exact"), "exact");
      o.solutions_a = to_int64(integer_from_json(field(oj, "solutions_a")));
      o.solutions_b = to_int64(integer_from_json(field(oj, "solutions_b")));
      if (oj.contains("modulus")) o.modulus = to_int64(integer_from_json(oj["modulus"]));
      if (oj.contains("witness")) o.witness = witness_from_json(oj["witness"]);
      c.orientations.push_back(std::move(o));
    }
    r.classes.push_back(std::move(c));
  }
  return r;
}

json to_json(const LinkDiagram& d) {
  json crossings = json::array();
  for (const auto& c : d.crossings()) {
    json cj = {{"edges", c.edges}};
    if (c.over != 1) cj["over"] = c.over;
    if (c.sign) cj["sign"] = *c.sign;
    crossings.push_back(cj);
  }
  json j = {{"components", d.component_count()}, {"crossings", crossings}, {"orientation", d.orientation()}};
  if (d.outer_corner()) j["outer_corner"] = {d.outer_corner()->crossing, d.outer_corner()->position};
  return j;
}

LinkDiagram diagram_from_json(const json& j) {
  const json& cs = field(j, "crossings");
  if (!cs.is_array()) bad("crossings must be an array");
  std::vector<Crossing> crossings;
  for (const auto& cj : cs) {
    Crossing c;
    const json& e = field(cj, "edges");
    if (!e.is_array() || e.size() != 4) bad("each crossing needs exactly four edges");
    for (std::size_t i = 0; i < 4; ++i) c.edges[i] = to_int64(integer_from_json(e[i], "edge label"));
    if (cj.contains("over")) c.over = int_from_json(cj["over"], "over");
    if (cj.contains("sign")) c.sign = int_from_json(cj["sign"], "sign");
    crossings.push_back(c);
  }
  std::vector<int> orientation;
  if (j.contains("orientation"))
    for (const auto& f : j["orientation"]) orientation.push_back(int_from_json(f, "orientation flag"));
  std::optional<Corner> outer;
  if (j.contains("outer_corner")) {
    const json& oc = j["outer_corner"];
    if (!oc.is_array() || oc.size() != 2) bad("outer_corner must be [crossing, position]");
    outer = Corner{int_from_json(oc[0]), int_from_json(oc[1])};
  }
  const int components = j.contains("components") ? int_from_json(j["components"], "components") : 1;
  const bool crossingless = crossings.empty();
  LinkDiagram d(std::move(crossings), std::move(orientation), outer, crossingless ? components : 1);
  if (j.contains("components") && d.component_count() != components)
    bad("diagram declares " + std::to_string(components) + " components but has " + std::to_string(d.component_count()));
  return d;
}

BandSurface band_surface_from_json(const json& j) {
  BandSurface s;
  for (const auto& bj : field(j, "bands"))
    s.bands.push_back({bool_from_json(field(bj, "orientable"), "orientable"), integer_from_json(field(bj, "self_delta"))});
  if (j.contains("cross_delta")) s.cross_delta = matrix_from_json(j["cross_delta"]);
  if (j.contains("core_linking")) s.core_linking = matrix_from_json(j["core_linking"]);
  s.validate();
  return s;
}

json to_json(const CrosscapInterval& iv) {
  auto terms = [](const std::vector<BoundTerm>& ts) {
    json a = json::array();
    for (const auto& t : ts) a.push_back({{"bound", t.name}, {"value", t.value}});
    return a;
  };
  return {{"lower", iv.lower}, {"upper", iv.upper}, {"lower_terms", terms(iv.lower_terms)}, {"upper_terms", terms(iv.upper_terms)}};
}

json read_file(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) bad("cannot open " + path.string());
  std::stringstream buf;
  buf << in.rdbuf();
  try {
    return json::parse(buf.str());
  } catch (const json::parse_error& e) {
    bad(path.string() + ": " + e.what());
  }
}

json parse_text(const std::string& text) {
  try {
    return json::parse(text);
  } catch (const json::parse_error& e) {
    bad(std::string("malformed JSON: ") + e.what());
  }
}

}  // namespace crosscap::io
