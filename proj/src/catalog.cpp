#include "crosscap/catalog.hpp"

#include "crosscap/error.hpp"

#include <algorithm>
#include <cstdlib>

#ifndef CROSSCAP_DEFAULT_CATALOG
#define CROSSCAP_DEFAULT_CATALOG "data/catalog"
#endif

namespace crosscap {
namespace {

using io::json;

const std::vector<std::string> kSources{"literature", "derived"};

std::string checked_source(const json& j, const std::string& what) {
  if (!j.is_object() || !j.contains("source") || !j["source"].is_string())
    throw Error(ErrorCode::InvalidInput, what + ": missing source tag");
  const auto s = j["source"].get<std::string>();
  if (std::find(kSources.begin(), kSources.end(), s) == kSources.end())
    throw Error(ErrorCode::InvalidInput, what + ": unknown source tag \"" + s + "\"");
  return s;
}

// Reads {"value": ..., "source": ...} and records the tag.
int sourced_int(const json& attrs, const char* key, std::map<std::string, std::string>& sources, const std::string& owner) {
  const json& a = attrs.at(key);
  sources[key] = checked_source(a, owner + "." + key);
  return io::int_from_json(a.at("value"), key);
}

KnotRecord parse_knot(const json& j) {
  if (!j.contains("name")) throw Error(ErrorCode::InvalidInput, "knot entry without a name");
  KnotRecord k;
  k.name = j["name"].get<std::string>();
  std::map<std::string, std::string> sources;
  k.genus = sourced_int(j, "genus", sources, k.name);
  k.crosscap = sourced_int(j, "crosscap", sources, k.name);
  k.crossing_number = sourced_int(j, "crossing_number", sources, k.name);
  k.validate();
  return k;
}

}  // namespace

Catalog Catalog::load(const std::filesystem::path& dir) {
  Catalog cat;
  const auto knots_path = dir / "knots.json";
  if (!std::filesystem::exists(knots_path))
    throw Error(ErrorCode::InvalidInput, "catalog not found: " + knots_path.string());
  const json kj = io::read_file(knots_path);
  for (const auto& entry : kj.at("knots")) {
    KnotRecord k = parse_knot(entry);
    cat.knots_.emplace(k.name, k);
  }
  const auto links_dir = dir / "links";
  if (std::filesystem::is_directory(links_dir)) {
    std::vector<std::filesystem::path> files;
    for (const auto& e : std::filesystem::directory_iterator(links_dir))
      if (e.path().extension() == ".json") files.push_back(e.path());
    std::sort(files.begin(), files.end());
    for (const auto& f : files) {
      try {
        cat.links_.push_back(cat.parse_link(io::read_file(f)));
      } catch (const Error& e) {
        throw Error(e.code() == ErrorCode::InvariantViolation ? e.code() : ErrorCode::InvalidInput,
                    f.filename().string() + ": " + e.what());
      }
    }
  }
  return cat;
}

const KnotRecord& Catalog::knot(const std::string& name) const {
  auto it = knots_.find(name);
  if (it == knots_.end()) throw Error(ErrorCode::UnknownName, "unknown knot \"" + name + "\"");
  return it->second;
}

bool Catalog::has_link(const std::string& name) const {
  for (const auto& l : links_)
    if (l.name == name || std::find(l.aliases.begin(), l.aliases.end(), name) != l.aliases.end()) return true;
  return false;
}

const CatalogLink& Catalog::link(const std::string& name) const {
  for (const auto& l : links_)
    if (l.name == name || std::find(l.aliases.begin(), l.aliases.end(), name) != l.aliases.end()) return l;
  throw Error(ErrorCode::UnknownName, "unknown link \"" + name + "\"");
}

CatalogLink Catalog::parse_link(const json& j) const {
  CatalogLink l;
  l.name = j.contains("name") ? j["name"].get<std::string>() : std::string("(unnamed)");
  l.record.name = l.name;
  if (j.contains("aliases")) l.aliases = j["aliases"].get<std::vector<std::string>>();
  if (j.contains("notes")) l.notes = j["notes"].get<std::string>();

  if (j.contains("diagram")) {
    l.sources["diagram"] = checked_source(j["diagram"], l.name + ".diagram");
    l.diagram = io::diagram_from_json(j["diagram"]);
    if (l.diagram->component_count() != 2)
      throw Error(ErrorCode::NotTwoComponents, l.name + ": catalog links must have two components");
  }
  if (j.contains("band_surface")) {
    l.sources["band_surface"] = checked_source(j["band_surface"], l.name + ".band_surface");
    l.band_surface = io::band_surface_from_json(j["band_surface"]);
  }
  if (j.contains("seifert")) {
    const json& s = j["seifert"];
    for (const char* key : {"fwd", "rev"}) {
      if (!s.contains(key)) continue;
      l.sources[std::string("seifert.") + key] = checked_source(s[key], l.name + ".seifert." + key);
      IntMatrix v = io::matrix_from_json(s[key].at("matrix"));
      if (v.rows() != v.cols()) throw Error(ErrorCode::InvalidInput, l.name + ": Seifert matrix must be square");
      (std::string(key) == "fwd" ? l.seifert_fwd : l.seifert_rev) = std::move(v);
    }
  }
  if (j.contains("attributes")) {
    const json& a = j["attributes"];
    if (a.contains("crossing_number")) l.record.crossing_number = sourced_int(a, "crossing_number", l.sources, l.name);
    if (a.contains("genus_fwd")) l.record.genus_fwd = sourced_int(a, "genus_fwd", l.sources, l.name);
    if (a.contains("genus_rev")) l.record.genus_rev = sourced_int(a, "genus_rev", l.sources, l.name);
    if (a.contains("splittable")) {
      l.sources["splittable"] = checked_source(a["splittable"], l.name + ".splittable");
      l.record.splittable = a["splittable"].at("value").get<bool>();
    }
  }
  if (j.contains("constituents")) {
    const json& c = j["constituents"];
    l.sources["constituents"] = checked_source(c, l.name + ".constituents");
    const auto names = c.at("knots").get<std::vector<std::string>>();
    if (names.size() != 2) throw Error(ErrorCode::InvalidInput, l.name + ": a split union has two constituents");
    l.record.constituents = std::make_pair(knot(names[0]), knot(names[1]));
  }
  if (j.contains("witnesses")) {
    for (const auto& w : j["witnesses"]) {
      checked_source(w, l.name + ".witnesses");
      l.record.witnesses.push_back({io::int_from_json(w.at("beta1"), "beta1"), w.value("note", std::string())});
    }
  }
  if (l.record.splittable && !l.record.constituents)
    throw Error(ErrorCode::InvalidInput, l.name + ": splittable link without constituents");
  return l;
}

std::filesystem::path resolve_catalog_dir(const std::optional<std::string>& flag) {
  if (flag && !flag->empty()) return *flag;
  if (const char* env = std::getenv("CROSSCAP_CATALOG"); env && *env) return env;
  return CROSSCAP_DEFAULT_CATALOG;
}

}  // namespace crosscap
