#pragma once

#include <iosfwd>
#include <string>

#include <json.hpp>

#include "dyn/classify/applications.hpp"
#include "dyn/classify/classify.hpp"
#include "dyn/classify/groups.hpp"
#include "dyn/dynamics/milnor.hpp"
#include "dyn/dynamics/normal_form.hpp"
#include "dyn/galois/frobenius.hpp"

namespace dyn::cli {

using nlohmann::json;

// Exact values (rationals, densities, frequencies) are strings "a/b"; L1
// distances are plain numbers. Keys come out sorted, so the output of a given
// invocation is byte-stable.
json to_json(const FrobeniusSample& s);
json to_json(const IdentificationReport& r);
json to_json(const ClassificationResult& c);
json to_json(const DensityResult& d);
json to_json(const std::vector<PeriodicScanEntry>& scan);
json to_json(const MilnorPoint& m);
json to_json(const NormalForm& nf);

// Description of one subgroup class of a catalog.
json group_info(const GroupCatalog& cat, std::size_t cls);
json subgroup_listing(const GroupCatalog& cat);

json error_json(const std::string& kind, const std::string& message);

// Flattens a document into "path  value" lines: object keys joined with '.',
// array elements indexed, arrays of scalars printed on one line.
void render_table(const json& doc, std::ostream& out);

}  // namespace dyn::cli
