#pragma once

// Knot and link records shipped as JSON data files. Every stored attribute
// carries a source tag: "literature" (standard tables) or "derived"
// (computed offline and cross-checked).

#include "crosscap/bounds.hpp"
#include "crosscap/diagram.hpp"
#include "crosscap/json_io.hpp"

#include <filesystem>
#include <map>
#include <optional>
#include <string>
#include <vector>

namespace crosscap {

struct CatalogLink {
  std::string name;
  std::vector<std::string> aliases;
  std::optional<LinkDiagram> diagram;
  std::optional<BandSurface> band_surface;
  std::optional<IntMatrix> seifert_fwd;  ///< orientation flags (+1,+1)
  std::optional<IntMatrix> seifert_rev;  ///< orientation flags (+1,-1)
  LinkRecord record;
  std::map<std::string, std::string> sources;  ///< attribute -> source tag
  std::string notes;
};

class Catalog {
 public:
  /// Loads <dir>/knots.json and every <dir>/links/*.json.
  static Catalog load(const std::filesystem::path& dir);

  const KnotRecord& knot(const std::string& name) const;
  const CatalogLink& link(const std::string& name) const;
  bool has_knot(const std::string& name) const { return knots_.count(name) > 0; }
  bool has_link(const std::string& name) const;

  const std::map<std::string, KnotRecord>& knots() const noexcept { return knots_; }
  const std::vector<CatalogLink>& links() const noexcept { return links_; }

  /// Parses one link entry; constituents are resolved against this catalog's knots.
  CatalogLink parse_link(const io::json& j) const;

 private:
  std::map<std::string, KnotRecord> knots_;
  std::vector<CatalogLink> links_;
};

/// --catalog flag, then $CROSSCAP_CATALOG, then the compiled-in data path.
std::filesystem::path resolve_catalog_dir(const std::optional<std::string>& flag);

}  // namespace crosscap
