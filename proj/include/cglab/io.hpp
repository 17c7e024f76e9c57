#pragma once

#include <json.hpp>

#include <iosfwd>
#include <string>

#include "cglab/counting.hpp"
#include "cglab/diagram.hpp"
#include "cglab/exponents.hpp"
#include "cglab/locality.hpp"
#include "cglab/presentation.hpp"

namespace cglab {

using nlohmann::json;

/// Presentation text format: `m=<int>` on the first line, one relator per
/// line in the a/A letter encoding, `#` starts a comment.
std::string to_text(const Presentation& p);
Presentation presentation_from_text(const std::string& text);

/// CountTable CSV: header `kind,base,length,count`, counts as decimal strings.
std::string to_csv(const CountTable& t);
CountTable count_table_from_csv(const std::string& csv);

json to_json(const ExponentEstimate& e);
json to_json(const EstimatePair& pair);
json to_json(const LocalityCertificate& cert);

/// Diagram serialization: half-edges with (mate, next, label), the boundary
/// anchor, and face tags.
json to_json(const Diagram& d);
Diagram diagram_from_json(const json& j);

/// Graph description for external rendering (dot digraph, one arc per edge).
std::string to_dot(const Diagram& d);

void write_file(const std::string& path, const std::string& content);
std::string read_file(const std::string& path);

}  // namespace cglab
