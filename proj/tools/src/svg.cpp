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

#include "edgeguard/cli/svg.hpp"

#include <algorithm>
#include <cstdio>
#include <set>
#include <sstream>
#include <string>

namespace edgeguard::cli {
namespace {

constexpr double kWidth = 640;
constexpr double kMargin = 36;

std::string num(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.2f", v);
  return buf;
}

}  // namespace

std::string render_svg(const PlaneGraph& g, const Layout& layout,
                       const std::vector<EdgeId>& guards) {
  const auto vs = g.vertices();
  double x0 = layout.pos[vs[0]].x, x1 = x0;
  double y0 = layout.pos[vs[0]].y, y1 = y0;
  for (VertexId v : vs) {
    x0 = std::min(x0, layout.pos[v].x);
    x1 = std::max(x1, layout.pos[v].x);
    y0 = std::min(y0, layout.pos[v].y);
    y1 = std::max(y1, layout.pos[v].y);
  }
  const double w = std::max(x1 - x0, 1e-9);
  const double h = std::max(y1 - y0, 1e-9);
  const double scale = (kWidth - 2 * kMargin) / std::max(w, h);
  const double height = 2 * kMargin + h * scale;
  auto px = [&](VertexId v) { return kMargin + (layout.pos[v].x - x0) * scale; };
  // Flip so that larger y points up, as in the stored coordinates.
  auto py = [&](VertexId v) { return height - kMargin - (layout.pos[v].y - y0) * scale; };

  const std::set<EdgeId> guarded(guards.begin(), guards.end());
  std::ostringstream s;
  s << "<?xml version=\"1.0\" encoding=\"UTF-8\" standalone=\"no\"?>\n"
    << "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\""
    << num(kWidth) << "\" height=\"" << num(height) << "\" viewBox=\"0 0 "
    << num(kWidth) << ' ' << num(height) << "\">\n"
    << "<style>\n"
    << "  .edge { stroke: #555; stroke-width: 1.5; }\n"
    << "  .guard { stroke: #d62728; stroke-width: 4; }\n"
    << "  .vertex { fill: #fff; stroke: #222; stroke-width: 1.5; }\n"
    << "  .label { font: 10px sans-serif; text-anchor: middle; }\n"
    << "  .face { font: italic 9px sans-serif; fill: #1f77b4; text-anchor: middle; }\n"
    << "</style>\n";

  s << "<g id=\"faces\">\n";
  for (FaceId f : g.faces()) {
    double fx = kMargin / 2;
    double fy = kMargin / 2;
    const auto fv = g.face_vertices(f);
    if (g.host_walk(f) != nullptr && !fv.empty()) {
      fx = fy = 0;
      for (VertexId v : fv) {
        fx += px(v);
        fy += py(v);
      }
      fx /= fv.size();
      fy /= fv.size();
    }
    s << "  <text class=\"face\" x=\"" << num(fx) << "\" y=\"" << num(fy)
      << "\">f" << f << "</text>\n";
  }
  s << "</g>\n<g id=\"edges\">\n";
  for (EdgeId e : g.edges()) {
    const auto [a, b] = g.endpoints(e);
    s << "  <line class=\"edge" << (guarded.count(e) ? " guard" : "")
      << "\" data-edge=\"" << e << "\" x1=\"" << num(px(a)) << "\" y1=\""
      << num(py(a)) << "\" x2=\"" << num(px(b)) << "\" y2=\"" << num(py(b))
      << "\"/>\n";
  }
  s << "</g>\n<g id=\"vertices\">\n";
  for (VertexId v : vs) {
    s << "  <circle class=\"vertex\" cx=\"" << num(px(v)) << "\" cy=\""
      << num(py(v)) << "\" r=\"7\"/>\n"
      << "  <text class=\"label\" x=\"" << num(px(v)) << "\" y=\""
      << num(py(v) + 3.5) << "\">" << v << "</text>\n";
  }
  s << "</g>\n</svg>\n";
  return s.str();
}

}  // namespace edgeguard::cli
