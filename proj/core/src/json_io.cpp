#include "openchi/json_io.hpp"

#include <fstream>
#include <sstream>

#include "openchi/error.hpp"

namespace openchi {

using nlohmann::json;

namespace {

const json& expect(const json& doc, const char* key) {
  if (!doc.is_object() || !doc.contains(key))
    fail(Ec::ParseError, std::string("missing key \"") + key + "\"");
  return doc.at(key);
}

std::string expect_string(const json& v, const char* what) {
  if (!v.is_string()) fail(Ec::ParseError, std::string(what) + " must be a string");
  return v.get<std::string>();
}

}  // namespace

json diagram_to_json(const Diagram& d) {
  json doc;
  doc["elements"] = json::array();
  for (const auto& e : d.poset.elements) doc["elements"].push_back(e);

  doc["covers"] = json::array();
  for (const auto& [upper, lower] : d.poset.covers)
    doc["covers"].push_back(
        json::array({d.poset.elements[upper], d.poset.elements[lower]}));

  doc["spaces"] = json::object();
  for (int i = 0; i < d.poset.n(); ++i)
    doc["spaces"][d.poset.elements[i]] = d.space(i).points;

  doc["maps"] = json::object();
  for (const auto& [key, f] : d.maps) {
    const auto& [i, j] = key;
    json entry = json::object();
    for (int p = 0; p < d.space(i).size(); ++p)
      entry[d.space(i).points[p]] = d.space(j).points[f(p)];
    doc["maps"][d.poset.elements[i] + "->" + d.poset.elements[j]] = std::move(entry);
  }
  return doc;
}

Diagram diagram_from_json(const json& doc) {
  std::vector<std::string> elements;
  for (const auto& e : expect(doc, "elements"))
    elements.push_back(expect_string(e, "element"));

  std::vector<std::pair<std::string, std::string>> covers;
  for (const auto& pair : expect(doc, "covers")) {
    if (!pair.is_array() || pair.size() != 2)
      fail(Ec::ParseError, "covers entries must be [upper, lower] pairs");
    covers.push_back({expect_string(pair[0], "cover element"),
                      expect_string(pair[1], "cover element")});
  }
  Poset poset = validate_poset(elements, covers);

  const json& spaces_doc = expect(doc, "spaces");
  std::vector<FiniteSpace> spaces;
  for (const auto& e : elements) {
    if (!spaces_doc.contains(e))
      fail(Ec::ParseError, "no space listed for element " + e);
    std::vector<std::string> points;
    for (const auto& p : spaces_doc.at(e))
      points.push_back(expect_string(p, "point label"));
    spaces.push_back(make_space(e, std::move(points)));
  }

  const json& maps_doc = expect(doc, "maps");
  std::map<std::pair<int, int>, SpaceMap> maps;
  for (const auto& [key, entry] : maps_doc.items()) {
    auto arrow = key.find("->");
    if (arrow == std::string::npos)
      fail(Ec::ParseError, "map key must look like \"i->j\": " + key);
    int i = poset.index_of(key.substr(0, arrow));
    int j = poset.index_of(key.substr(arrow + 2));
    std::vector<int> assignment;
    for (int p = 0; p < spaces[i].size(); ++p) {
      const std::string& label = spaces[i].points[p];
      if (!entry.contains(label))
        fail(Ec::MissingMap, "map " + key + " does not cover point " + label);
      assignment.push_back(
          spaces[j].point_index(expect_string(entry.at(label), "map value")));
    }
    maps.emplace(std::make_pair(i, j),
                 make_space_map(spaces[i], spaces[j], std::move(assignment)));
  }

  return validate_diagram(std::move(poset), std::move(spaces), std::move(maps));
}

json measure_to_json(const FiniteSpace& sp, const Measure& mu) {
  json doc = json::object();
  for (const auto& [label, w] : measure_to_labels(sp, mu)) doc[label] = rat_str(w);
  return doc;
}

Measure measure_from_json(const FiniteSpace& sp, const json& doc) {
  if (!doc.is_object()) fail(Ec::ParseError, "measure must be an object");
  std::map<std::string, Rat> weights;
  for (const auto& [label, value] : doc.items())
    weights[label] = rat_parse(expect_string(value, "weight"));
  return measure_from_labels(sp, weights);
}

json family_to_json(const Diagram& d, const MarginalFamily& fam) {
  json components = json::object();
  for (int i = 0; i < d.poset.n(); ++i)
    components[d.poset.elements[i]] =
        measure_to_json(d.space(i), fam.components[i]);
  return json{{"components", std::move(components)}};
}

MarginalFamily family_from_json(const Diagram& d, const json& doc) {
  const json& components = expect(doc, "components");
  MarginalFamily fam;
  for (int i = 0; i < d.poset.n(); ++i) {
    const std::string& e = d.poset.elements[i];
    if (!components.contains(e))
      fail(Ec::ParseError, "family has no component for element " + e);
    fam.components.push_back(measure_from_json(d.space(i), components.at(e)));
  }
  return fam;
}

json morphism_to_json(const DiagramMorphism& m) {
  json components = json::object();
  for (int i = 0; i < m.source.poset.n(); ++i) {
    json entry = json::object();
    for (int x = 0; x < m.source.space(i).size(); ++x)
      entry[m.source.space(i).points[x]] =
          m.target.space(i).points[m.components[i](x)];
    components[m.source.poset.elements[i]] = std::move(entry);
  }
  return json{{"components", std::move(components)}};
}

std::vector<SpaceMap> morphism_components_from_json(const Diagram& src,
                                                    const Diagram& dst,
                                                    const json& doc) {
  const json& components = expect(doc, "components");
  std::vector<SpaceMap> out;
  for (int i = 0; i < src.poset.n(); ++i) {
    const std::string& e = src.poset.elements[i];
    if (!components.contains(e))
      fail(Ec::ParseError, "morphism has no component for element " + e);
    const json& entry = components.at(e);
    std::vector<int> assignment;
    for (int x = 0; x < src.space(i).size(); ++x) {
      const std::string& label = src.space(i).points[x];
      if (!entry.contains(label))
        fail(Ec::MissingMap,
             "component at " + e + " does not cover point " + label);
      assignment.push_back(
          dst.space(i).point_index(expect_string(entry.at(label), "image point")));
    }
    out.push_back(make_space_map(src.space(i), dst.space(i), std::move(assignment)));
  }
  return out;
}

json ratvec_to_json(const RatVec& v) {
  json arr = json::array();
  for (const auto& x : v) arr.push_back(rat_str(x));
  return arr;
}

RatVec ratvec_from_json(const json& doc) {
  if (!doc.is_array()) fail(Ec::ParseError, "expected an array of fractions");
  RatVec v;
  for (const auto& x : doc) v.push_back(rat_parse(expect_string(x, "fraction")));
  return v;
}

json farkas_to_json(const FarkasCertificate& cert) {
  return json{{"ineqMult", ratvec_to_json(cert.ineq_mult)},
              {"eqMult", ratvec_to_json(cert.eq_mult)}};
}

FarkasCertificate farkas_from_json(const json& doc) {
  FarkasCertificate cert;
  cert.ineq_mult = ratvec_from_json(expect(doc, "ineqMult"));
  cert.eq_mult = ratvec_from_json(expect(doc, "eqMult"));
  return cert;
}

json load_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) fail(Ec::ParseError, "cannot read " + path);
  try {
    return json::parse(in);
  } catch (const json::parse_error& e) {
    fail(Ec::ParseError, std::string("malformed JSON in ") + path + ": " + e.what());
  }
}

std::uint64_t fnv1a64(const std::string& bytes) {
  std::uint64_t h = 0xcbf29ce484222325ull;
  for (unsigned char c : bytes) {
    h ^= c;
    h *= 0x100000001b3ull;
  }
  return h;
}

std::string file_digest(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) fail(Ec::ParseError, "cannot read " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  char hex[17];
  std::snprintf(hex, sizeof hex, "%016llx",
                static_cast<unsigned long long>(fnv1a64(buf.str())));
  return std::string(hex);
}

}  // namespace openchi
