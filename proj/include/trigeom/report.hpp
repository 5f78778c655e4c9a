#pragma once

#include <optional>
#include <string>
#include <vector>

#include "json.hpp"
#include "trigeom/geomcheck.hpp"
#include "trigeom/poles.hpp"
#include "trigeom/tables.hpp"

namespace trigeom {

using Json = nlohmann::ordered_json;

// {form, field, n, poles: [{point, degree}], histogram,
//  upper_radical: [{basis, plucker}], variety: {i, g, verified}}.
// Only points of positive degree are listed under "poles"; the histogram
// covers every point. i is 1-based, and g is null when every point is a pole.
Json poles_json(const std::string& form, const ProjectiveSpace& space, const PoleReport& report,
                const std::vector<FpLine>& lines, const std::optional<VarietyResult>& variety);
std::string poles_text(const std::string& form, const ProjectiveSpace& space, const PoleReport& report,
                       const std::vector<FpLine>& lines, const std::optional<VarietyResult>& variety,
                       bool list);

Json variety_json(const VarietyResult& v);
std::string variety_text(const VarietyResult& v);

// {check, form, field, pass, witnesses, stats}.
Json verdict_json(const Verdict& v);
std::string verdict_text(const Verdict& v);

Json fingerprint_json(const Fingerprint& f);
Json table_json(const TableReport& r);
std::string table_text(const TableReport& r);

Json point_json(const ProjectiveSpace& space, const FpVector& v);

}  // namespace trigeom
