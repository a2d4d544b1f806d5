#include "jonesrt/diagram_io.h"

#include <fstream>
#include <sstream>

#include "jonesrt/errors.h"
#include "json_internal.h"

namespace jonesrt {
namespace internal {
namespace {

int SignFrom(const Json& v, const std::string& where) {
  if (v.is_string()) {
    const auto& s = v.get_ref<const std::string&>();
    if (s == "+") return 1;
    if (s == "-") return -1;
  } else if (v.is_number_integer()) {
    int s = v.get<int>();
    if (s == 1 || s == -1) return s;
  }
  throw InputError(where + ": expected \"+\", \"-\", 1 or -1");
}

int IntFrom(const Json& v, const std::string& where) {
  if (!v.is_number_integer()) throw InputError(where + ": expected an integer");
  return v.get<int>();
}

std::vector<int> IntList(const Json& v, const std::string& where) {
  if (!v.is_array()) throw InputError(where + ": expected an array");
  std::vector<int> out;
  for (std::size_t i = 0; i < v.size(); ++i) {
    out.push_back(IntFrom(v[i], where + "[" + std::to_string(i) + "]"));
  }
  return out;
}

const Json& Field(const Json& j, const char* key, const std::string& where) {
  auto it = j.find(key);
  if (it == j.end()) throw InputError(where + ": missing \"" + key + "\"");
  return *it;
}

}  // namespace

Json ParseJsonText(std::string_view text) {
  try {
    return Json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw InputError(std::string("malformed JSON: ") + e.what());
  }
}

LinkDiagram DiagramFromJson(const Json& j, const std::string& where) {
  if (!j.is_object()) throw InputError(where + ": expected an object");
  LinkDiagram d;
  const Json& xs = Field(j, "crossings", where);
  if (!xs.is_array()) throw InputError(where + ".crossings: expected an array");
  for (std::size_t i = 0; i < xs.size(); ++i) {
    const std::string loc = where + ".crossings[" + std::to_string(i) + "]";
    const Json& x = xs[i];
    if (!x.is_array() || x.size() != 5) throw InputError(loc + ": expected [e1,e2,e3,e4,sign]");
    Crossing c;
    for (int s = 0; s < 4; ++s) c.edges[s] = IntFrom(x[s], loc + "[" + std::to_string(s) + "]");
    c.sign = SignFrom(x[4], loc + "[4]");
    d.crossings.push_back(c);
  }
  const Json& comps = Field(j, "components", where);
  if (!comps.is_array()) throw InputError(where + ".components: expected an array");
  for (std::size_t i = 0; i < comps.size(); ++i) {
    d.components.push_back(IntList(comps[i], where + ".components[" + std::to_string(i) + "]"));
  }
  if (auto it = j.find("orientations"); it != j.end()) {
    if (!it->is_array()) throw InputError(where + ".orientations: expected an array");
    for (std::size_t i = 0; i < it->size(); ++i) {
      d.orientations.push_back(
          SignFrom((*it)[i], where + ".orientations[" + std::to_string(i) + "]"));
    }
  } else {
    d.orientations.assign(d.components.size(), 1);
  }
  if (auto it = j.find("framings"); it != j.end()) {
    d.framings = IntList(*it, where + ".framings");
  } else {
    d.framings.assign(d.components.size(), 0);
  }
  if (auto it = j.find("twist_sites"); it != j.end()) {
    if (!it->is_array()) throw InputError(where + ".twist_sites: expected an array");
    for (std::size_t i = 0; i < it->size(); ++i) {
      const std::string loc = where + ".twist_sites[" + std::to_string(i) + "]";
      const Json& s = (*it)[i];
      if (!s.is_object()) throw InputError(loc + ": expected an object");
      auto edges = IntList(Field(s, "edges", loc), loc + ".edges");
      if (edges.size() != 2) throw InputError(loc + ".edges: expected two edges");
      TwistSite site;
      site.edges = {edges[0], edges[1]};
      site.sign = s.contains("sign") ? SignFrom(s["sign"], loc + ".sign") : 1;
      d.twist_sites.push_back(site);
    }
  }
  if (auto it = j.find("twist_regions"); it != j.end()) {
    if (!it->is_array()) throw InputError(where + ".twist_regions: expected an array");
    for (std::size_t i = 0; i < it->size(); ++i) {
      const std::string loc = where + ".twist_regions[" + std::to_string(i) + "]";
      const Json& r = (*it)[i];
      if (!r.is_object()) throw InputError(loc + ": expected an object");
      TwistRegion reg;
      const Json& levels = Field(r, "levels", loc);
      const Json& blocks = Field(r, "blocks", loc);
      const Json& upward = Field(r, "upward", loc);
      if (!levels.is_array() || !blocks.is_array() || !upward.is_array()) {
        throw InputError(loc + ": levels, blocks and upward must be arrays");
      }
      for (std::size_t m = 0; m < levels.size(); ++m) {
        reg.levels.push_back(IntList(levels[m], loc + ".levels[" + std::to_string(m) + "]"));
      }
      for (std::size_t m = 0; m < blocks.size(); ++m) {
        reg.blocks.push_back(IntList(blocks[m], loc + ".blocks[" + std::to_string(m) + "]"));
      }
      for (std::size_t p = 0; p < upward.size(); ++p) {
        if (!upward[p].is_boolean()) throw InputError(loc + ".upward: expected booleans");
        reg.upward.push_back(upward[p].get<bool>());
      }
      d.twist_regions.push_back(std::move(reg));
    }
  }
  ValidateDiagram(d);
  return d;
}

Json DiagramToJson(const LinkDiagram& d) {
  Json j = Json::object();
  Json xs = Json::array();
  for (const auto& c : d.crossings) {
    xs.push_back(
        Json::array({c.edges[0], c.edges[1], c.edges[2], c.edges[3], c.sign > 0 ? "+" : "-"}));
  }
  j["crossings"] = std::move(xs);
  j["components"] = d.components;
  j["orientations"] = d.orientations;
  j["framings"] = d.framings;
  Json sites = Json::array();
  for (const auto& s : d.twist_sites) {
    Json o = Json::object();
    o["edges"] = Json::array({s.edges[0], s.edges[1]});
    o["sign"] = s.sign > 0 ? "+" : "-";
    sites.push_back(std::move(o));
  }
  j["twist_sites"] = std::move(sites);
  if (!d.twist_regions.empty()) {
    Json regions = Json::array();
    for (const auto& r : d.twist_regions) {
      Json o = Json::object();
      o["levels"] = r.levels;
      o["blocks"] = r.blocks;
      Json up = Json::array();
      for (bool b : r.upward) up.push_back(b);
      o["upward"] = std::move(up);
      regions.push_back(std::move(o));
    }
    j["twist_regions"] = std::move(regions);
  }
  return j;
}

}  // namespace internal

LinkDiagram ParseDiagram(std::string_view text) {
  return internal::DiagramFromJson(internal::ParseJsonText(text), "diagram");
}

std::string SerializeDiagram(const LinkDiagram& d) {
  return internal::DiagramToJson(d).dump() + "\n";
}

std::string ReadTextFile(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot open " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

}  // namespace jonesrt
