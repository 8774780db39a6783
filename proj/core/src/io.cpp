// Copyright 2026 The edgeguard Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "edgeguard/io.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>

#include "edgeguard/errors.hpp"
#include "json.hpp"

namespace edgeguard {

namespace {

using Json = nlohmann::ordered_json;

[[noreturn]] void malformed(const std::string& what) {
  throw Error(ErrorCode::kMalformedDocument, what);
}

Json parse(std::string_view text) {
  try {
    return Json::parse(text);
  } catch (const Json::parse_error& e) {
    malformed(e.what());
  }
}

int as_int(const Json& j, const char* what) {
  if (!j.is_number_integer()) malformed(std::string(what) + " must be an integer");
  return j.get<int>();
}

const Json& field(const Json& obj, const char* key) {
  auto it = obj.find(key);
  if (it == obj.end()) malformed(std::string("missing field \"") + key + "\"");
  return *it;
}

}  // namespace

RotationSystem parse_graph_document(std::string_view text) {
  const Json doc = parse(text);
  if (!doc.is_object()) malformed("graph document must be an object");
  RotationSystem spec;
  spec.n = as_int(field(doc, "n"), "n");
  const Json& rots = field(doc, "rotations");
  if (!rots.is_array()) malformed("rotations must be an array");
  for (const Json& r : rots) {
    if (!r.is_array()) malformed("each rotation must be an array");
    std::vector<VertexId> list;
    for (const Json& v : r) list.push_back(as_int(v, "neighbor"));
    spec.rotations.push_back(std::move(list));
  }
  if (auto it = doc.find("nesting"); it != doc.end() && !it->is_null()) {
    if (!it->is_array()) malformed("nesting must be an array");
    for (const Json& h : *it) {
      if (!h.is_object()) malformed("nesting entries must be objects");
      const Json& inside = field(h, "inside");
      if (!inside.is_object()) malformed("inside must be an object");
      NestingHint nh;
      nh.component = as_int(field(h, "component"), "component");
      nh.inside_component = as_int(field(inside, "component"), "component");
      nh.walk = as_int(field(inside, "walk"), "walk");
      spec.nesting.push_back(nh);
    }
  }
  if (auto it = doc.find("coords"); it != doc.end() && !it->is_null()) {
    if (!it->is_array()) malformed("coords must be an array");
    std::vector<Point> pts;
    for (const Json& p : *it) {
      if (!p.is_array() || p.size() != 2 || !p[0].is_number() ||
          !p[1].is_number()) {
        malformed("each coordinate must be a pair of numbers");
      }
      pts.push_back({p[0].get<double>(), p[1].get<double>()});
    }
    spec.coords = std::move(pts);
  }
  return spec;
}

std::string write_graph_document(const RotationSystem& spec) {
  Json doc;
  doc["n"] = spec.n;
  doc["rotations"] = Json::array();
  for (const auto& r : spec.rotations) doc["rotations"].push_back(r);
  if (!spec.nesting.empty()) {
    doc["nesting"] = Json::array();
    for (const NestingHint& nh : spec.nesting) {
      Json h;
      h["component"] = nh.component;
      h["inside"]["component"] = nh.inside_component;
      h["inside"]["walk"] = nh.walk;
      doc["nesting"].push_back(h);
    }
  }
  if (spec.coords) {
    doc["coords"] = Json::array();
    for (const Point& p : *spec.coords) doc["coords"].push_back({p.x, p.y});
  }
  return doc.dump() + "\n";
}

GuardDocument parse_guard_document(std::string_view text) {
  const Json doc = parse(text);
  if (!doc.is_object()) malformed("guard document must be an object");
  GuardDocument out;
  const Json& edges = field(doc, "edges");
  if (!edges.is_array()) malformed("edges must be an array");
  for (const Json& e : edges) {
    if (!e.is_array() || e.size() != 2) malformed("each edge must be a pair");
    out.edges.emplace_back(as_int(e[0], "endpoint"), as_int(e[1], "endpoint"));
  }
  if (auto it = doc.find("algorithm"); it != doc.end()) {
    if (!it->is_string()) malformed("algorithm must be a string");
    out.algorithm = it->get<std::string>();
  }
  if (auto it = doc.find("bound"); it != doc.end()) {
    if (!it->is_string()) malformed("bound must be a string");
    out.bound = it->get<std::string>();
  }
  return out;
}

std::string write_guard_document(const GuardDocument& doc) {
  Json j;
  j["edges"] = Json::array();
  for (const auto& [u, v] : doc.edges) j["edges"].push_back({u, v});
  j["algorithm"] = doc.algorithm;
  j["bound"] = doc.bound;
  return j.dump() + "\n";
}

GuardDocument to_document(const PlaneGraph& g, const GuardSet& gs) {
  GuardDocument doc;
  for (EdgeId e : gs.edges) {
    auto [u, v] = g.endpoints(e);
    if (u > v) std::swap(u, v);
    doc.edges.emplace_back(u, v);
  }
  std::sort(doc.edges.begin(), doc.edges.end());
  doc.algorithm = gs.algorithm;
  doc.bound = gs.bound.to_string();
  return doc;
}

std::vector<EdgeId> resolve_edges(const PlaneGraph& g,
                                  const GuardDocument& doc) {
  std::vector<EdgeId> out;
  for (const auto& [u, v] : doc.edges) {
    const auto e = g.find_edge(u, v);
    if (!e) {
      throw Error(ErrorCode::kUnknownEdge,
                  "no edge " + std::to_string(u) + "-" + std::to_string(v));
    }
    out.push_back(*e);
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

std::string read_text_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) malformed("cannot read " + path);
  std::ostringstream os;
  os << in.rdbuf();
  return os.str();
}

void write_text_file(const std::string& path, std::string_view text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) malformed("cannot write " + path);
  out << text;
}

PlaneGraph load_graph(const std::string& path) {
  return PlaneGraph::build(parse_graph_document(read_text_file(path)));
}

}  // namespace edgeguard
