#include "geomcut/fence.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <functional>
#include <map>
#include <numeric>
#include <sstream>

#include "geomcut/errors.hpp"

namespace geomcut {

Fence extract_fence(const Arrangement& arr, const DualGraph& g, const Cut& cut) {
  std::vector<int> arr_edges;
  for (int e : cut.edges) {
    if (e < 0 || e >= static_cast<int>(g.edges.size()))
      throw ProvenanceMismatch("cut references dual edge " + std::to_string(e));
    for (int ae : g.edges[e].provenance) {
      if (ae < 0 || ae >= static_cast<int>(arr.edges.size()))
        throw ProvenanceMismatch("dual edge cites arrangement edge " + std::to_string(ae));
      arr_edges.push_back(ae);
    }
  }
  std::sort(arr_edges.begin(), arr_edges.end());
  arr_edges.erase(std::unique(arr_edges.begin(), arr_edges.end()), arr_edges.end());

  Fence fence;
  for (int ae : arr_edges) {
    fence.segments.push_back(arr.edge_segment(ae));
    fence.total_length += arr.edges[ae].length;
  }
  double tol = 1e-9 * std::max(1.0, std::abs(cut.value));
  if (std::abs(fence.total_length - cut.value) > tol)
    throw ProvenanceMismatch("fence length " + std::to_string(fence.total_length) +
                             " does not reproduce cut value " + std::to_string(cut.value));
  fence.source_cut = cut;
  return fence;
}

namespace {

bool on_closed_segment(const Point& p, const Segment& s) {
  if (orientation(s.a, s.b, p) != 0) return false;
  const auto& [xlo, xhi] = std::minmax(s.a.x, s.b.x);
  if (p.x < xlo || xhi < p.x) return false;
  const auto& [ylo, yhi] = std::minmax(s.a.y, s.b.y);
  return !(p.y < ylo || yhi < p.y);
}

}  // namespace

SeparationReport validate_fence(const Instance& inst, const Fence& fence) {
  SeparationReport rep;
  if (inst.objects.empty()) {
    rep.valid = true;
    return rep;
  }

  for (std::size_t i = 0; i < fence.segments.size(); ++i)
    if (!is_free(fence.segments[i], inst)) {
      rep.notes.push_back("fence segment " + std::to_string(i) +
                          " crosses an object interior");
      rep.valid = false;
      return rep;
    }

  std::vector<Segment> segs;
  for (const auto& obj : inst.objects) {
    std::size_t n = obj.vertices.size();
    for (std::size_t i = 0; i < n; ++i)
      segs.push_back(canonical({obj.vertices[i], obj.vertices[(i + 1) % n]}));
  }
  segs.insert(segs.end(), fence.segments.begin(), fence.segments.end());

  Arrangement arr = build_arrangement(segs);
  locate_object_faces(arr, inst);

  // An arrangement edge blocks passage iff some fence segment covers it.
  std::vector<char> blocked(arr.edges.size(), 0);
  for (std::size_t e = 0; e < arr.edges.size(); ++e) {
    Segment s = arr.edge_segment(static_cast<int>(e));
    Point m = midpoint(s.a, s.b);
    for (const auto& fs : fence.segments)
      if (on_closed_segment(m, fs)) {
        blocked[e] = 1;
        break;
      }
  }

  std::vector<int> parent(arr.faces.size());
  std::iota(parent.begin(), parent.end(), 0);
  std::function<int(int)> find = [&](int x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  for (std::size_t e = 0; e < arr.edges.size(); ++e) {
    if (blocked[e]) continue;
    auto [f1, f2] = arr.edge_faces(static_cast<int>(e));
    if (f1 != f2) parent[find(f1)] = find(f2);
  }

  // first object of each color present in each fence-free region
  std::map<int, std::map<int, int>> region_colors;
  for (const auto& f : arr.faces) {
    if (!f.object) continue;
    int obj = *f.object;
    int color = inst.objects[obj].color;
    auto& colors = region_colors[find(f.id)];
    auto [it, fresh] = colors.insert({color, obj});
    if (!fresh) it->second = std::min(it->second, obj);
  }
  rep.valid = true;
  for (const auto& [root, colors] : region_colors) {
    if (colors.size() < 2) continue;
    rep.valid = false;
    for (auto it = colors.begin(); it != colors.end(); ++it)
      for (auto jt = std::next(it); jt != colors.end(); ++jt) {
        int a = std::min(it->second, jt->second);
        int b = std::max(it->second, jt->second);
        rep.violations.push_back({a, b});
      }
  }
  std::sort(rep.violations.begin(), rep.violations.end());
  rep.violations.erase(std::unique(rep.violations.begin(), rep.violations.end()),
                       rep.violations.end());
  return rep;
}

namespace {

const char* kPalette[] = {"#d62728", "#2ca02c", "#1f77b4", "#ff7f0e", "#9467bd",
                          "#8c564b", "#e377c2", "#17becf", "#bcbd22", "#7f7f7f"};

std::string fmt2(double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.2f", v);
  // avoid the two distinct zeros
  if (std::string(buf) == "-0.00") return "0.00";
  return buf;
}

}  // namespace

std::string render_svg(const Instance& inst, const Fence* fence) {
  // y axis flipped so larger y draws upward
  double xlo = 0, xhi = 1, ylo = 0, yhi = 1;
  bool first = true;
  auto grow = [&](const Point& p) {
    double x = p.x.to_double(), y = -p.y.to_double();
    if (first) {
      xlo = xhi = x;
      ylo = yhi = y;
      first = false;
    } else {
      xlo = std::min(xlo, x);
      xhi = std::max(xhi, x);
      ylo = std::min(ylo, y);
      yhi = std::max(yhi, y);
    }
  };
  for (const auto& obj : inst.objects)
    for (const auto& p : obj.vertices) grow(p);
  if (fence)
    for (const auto& s : fence->segments) {
      grow(s.a);
      grow(s.b);
    }

  double w = xhi - xlo, h = yhi - ylo;
  double margin = 0.05 * std::max({w, h, 1.0});
  double vx = xlo - margin, vy = ylo - margin;
  double vw = w + 2 * margin, vh = h + 2 * margin;
  double stroke = 0.004 * std::max({vw, vh});

  std::ostringstream os;
  os << "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" viewBox=\""
     << fmt2(vx) << " " << fmt2(vy) << " " << fmt2(vw) << " " << fmt2(vh) << "\">\n";
  for (const auto& obj : inst.objects) {
    os << "  <path d=\"";
    for (std::size_t i = 0; i < obj.vertices.size(); ++i) {
      const auto& p = obj.vertices[i];
      os << (i == 0 ? "M " : "L ") << fmt2(p.x.to_double()) << " "
         << fmt2(-p.y.to_double()) << " ";
    }
    os << "Z\" fill=\"" << kPalette[obj.color % 10] << "\" fill-opacity=\"0.65\"/>\n";
  }
  if (fence)
    for (const auto& s : fence->segments)
      os << "  <line x1=\"" << fmt2(s.a.x.to_double()) << "\" y1=\""
         << fmt2(-s.a.y.to_double()) << "\" x2=\"" << fmt2(s.b.x.to_double())
         << "\" y2=\"" << fmt2(-s.b.y.to_double()) << "\" stroke=\"black\" stroke-width=\""
         << fmt2(stroke) << "\" stroke-linecap=\"round\"/>\n";
  os << "</svg>\n";
  return os.str();
}

void export_svg(const Instance& inst, const Fence* fence, const std::string& path) {
  std::string svg = render_svg(inst, fence);
  std::ofstream out(path, std::ios::binary);
  if (!out) throw SinkWriteFailure("cannot open " + path + " for writing");
  out << svg;
  out.flush();
  if (!out) throw SinkWriteFailure("failed writing " + path);
}

Pipeline build_pipeline(Instance inst) {
  ValidationReport rep = validate_instance(inst);
  if (!rep.ok()) {
    std::string msg = "invalid instance:";
    for (const auto& e : rep.errors) msg += "\n  " + e.message;
    throw InputError(msg);
  }
  Pipeline p;
  p.instance = std::move(inst);
  p.segments = free_segments(p.instance);
  p.arr = build_arrangement(p.segments.segments);
  locate_object_faces(p.arr, p.instance);
  p.dual = build_dual(p.arr, p.instance);
  return p;
}

SolveResult solve_instance(Instance inst, Method method, std::uint64_t budget) {
  ValidationReport rep = validate_instance(inst);
  if (!rep.ok()) {
    std::string msg = "invalid instance:";
    for (const auto& e : rep.errors) msg += "\n  " + e.message;
    throw InputError(msg);
  }

  std::vector<char> used(inst.num_colors, 0);
  for (const auto& obj : inst.objects) used[obj.color] = 1;
  int used_colors = static_cast<int>(std::count(used.begin(), used.end(), 1));

  if (method == Method::Auto)
    method = inst.num_colors == 2 ? Method::Exact2 : Method::Isolation;
  if (method == Method::Exact2 && inst.num_colors != 2)
    throw InputError("the exact flow solver requires exactly 2 colors");

  // nothing to separate: no fence needed, regardless of solver
  if (used_colors <= 1 &&
      (method == Method::Exact2 || inst.num_colors == 1 || inst.objects.empty())) {
    SolveResult r;
    r.cut.labeling = std::vector<int>{};
    r.fence.source_cut = r.cut;
    return r;
  }

  Pipeline p = build_pipeline(std::move(inst));
  Cut cut;
  switch (method) {
    case Method::Exact2: {
      cut = max_flow_min_cut(p.dual, p.dual.terminals[0], p.dual.terminals[1]);
      // side 0 holds the color-0 terminals, so sides are already colors
      break;
    }
    case Method::Isolation: {
      cut = isolation_heuristic(add_apexes(p.dual, p.instance.num_colors));
      break;
    }
    case Method::BruteForce: {
      cut = brute_force_labeling(p.dual, p.instance.num_colors, budget);
      break;
    }
    case Method::Auto:
      throw InternalError("unresolved method");
  }

  SolveResult r;
  r.fence = extract_fence(p.arr, p.dual, cut);
  r.cut = std::move(cut);
  return r;
}

Fence solve_two_color(const Instance& inst) {
  if (inst.num_colors != 2) throw InputError("solve_two_color requires k = 2");
  return solve_instance(inst, Method::Exact2).fence;
}

}  // namespace geomcut
