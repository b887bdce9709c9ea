#pragma once

#include <cstdint>
#include <string>

#include "json.hpp"
#include "openchi/glue.hpp"

namespace openchi {

// JSON interchange. All numbers travel as fraction strings ("2/3", "1"),
// object keys are emitted sorted, and parse(serialize(x)) is the identity
// on canonical documents.

nlohmann::json diagram_to_json(const Diagram& d);
Diagram diagram_from_json(const nlohmann::json& doc);

nlohmann::json family_to_json(const Diagram& d, const MarginalFamily& fam);
MarginalFamily family_from_json(const Diagram& d, const nlohmann::json& doc);

// Sparse label -> fraction object; absent labels carry weight zero.
nlohmann::json measure_to_json(const FiniteSpace& sp, const Measure& mu);
Measure measure_from_json(const FiniteSpace& sp, const nlohmann::json& doc);

// {"components": {"<element>": {"<src point>": "<dst point>"}}}
nlohmann::json morphism_to_json(const DiagramMorphism& m);
std::vector<SpaceMap> morphism_components_from_json(const Diagram& src,
                                                    const Diagram& dst,
                                                    const nlohmann::json& doc);

nlohmann::json farkas_to_json(const FarkasCertificate& cert);
FarkasCertificate farkas_from_json(const nlohmann::json& doc);

nlohmann::json ratvec_to_json(const RatVec& v);
RatVec ratvec_from_json(const nlohmann::json& doc);

// Reads and parses, mapping unreadable files and malformed JSON to
// ParseError.
nlohmann::json load_json_file(const std::string& path);

std::uint64_t fnv1a64(const std::string& bytes);

// FNV-1a of the raw file bytes, as 16 hex digits.
std::string file_digest(const std::string& path);

}  // namespace openchi
