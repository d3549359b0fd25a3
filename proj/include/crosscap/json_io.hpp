#pragma once

// JSON encodings. Integers are written as JSON numbers when they fit in 64
// bits and as decimal strings otherwise; both forms are accepted on input.

#include "crosscap/bounds.hpp"
#include "crosscap/diagram.hpp"
#include "crosscap/double_cover.hpp"
#include "crosscap/linalg.hpp"
#include "crosscap/obstruction.hpp"
#include "crosscap/quadform.hpp"

#include "json.hpp"

#include <filesystem>

namespace crosscap::io {

using json = nlohmann::json;

json to_json(const Integer& x);
Integer integer_from_json(const json& j, const char* what = "integer");
int int_from_json(const json& j, const char* what = "integer");

json to_json(const IntMatrix& m);
IntMatrix matrix_from_json(const json& j);

json to_json(const BinaryForm& f);
BinaryForm form_from_json(const json& j);

json to_json(const FormClassSet& s);

json to_json(const FinAbGroup& g);

json to_json(const LinkingForm& f);
LinkingForm linking_form_from_json(const json& j);

json to_json(const TwoComponentInvariants& inv);
TwoComponentInvariants invariants_from_json(const json& j);

json to_json(const ObstructionReport& r);
ObstructionReport report_from_json(const json& j);

json to_json(const LinkDiagram& d);
LinkDiagram diagram_from_json(const json& j);

BandSurface band_surface_from_json(const json& j);

json to_json(const CrosscapInterval& iv);

/// Reads and parses a JSON file; parse failures become InvalidInput.
json read_file(const std::filesystem::path& path);
json parse_text(const std::string& text);

}  // namespace crosscap::io
