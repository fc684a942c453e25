#include "pgeo/script/render.hpp"

#include <cmath>
#include <fstream>
#include <iomanip>
#include <sstream>

namespace pgeo::script {

namespace {

constexpr int kSize = 640;
constexpr int kConicSamples = 128;

double to_double(const Rat& r) { return r.raw().convert_to<double>(); }

Rat rat_from_double(double x) { return Rat(BigRat(x)); }

struct Mapper {
  Viewport vp;

  double px(double x) const { return (x - vp.x0) / (vp.x1 - vp.x0) * kSize; }
  double py(double y) const { return kSize - (y - vp.y0) / (vp.y1 - vp.y0) * kSize; }
  bool inside(double x, double y, double margin = 0.0) const {
    return x >= vp.x0 - margin && x <= vp.x1 + margin && y >= vp.y0 - margin &&
           y <= vp.y1 + margin;
  }
};

struct SvgOut {
  std::ostringstream os;

  SvgOut() {
    os << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << kSize << "\" height=\"" << kSize
       << "\" viewBox=\"0 0 " << kSize << ' ' << kSize << "\">\n";
    os << "<rect width=\"" << kSize << "\" height=\"" << kSize
       << "\" fill=\"white\" stroke=\"#cccccc\"/>\n";
    os << std::fixed << std::setprecision(2);
  }

  void label(double x, double y, const std::string& text) {
    os << "<text x=\"" << x + 6 << "\" y=\"" << y - 6 << "\" font-size=\"14\" fill=\"#222222\">"
       << text << "</text>\n";
  }

  std::string finish() {
    os << "</svg>\n";
    return os.str();
  }
};

void draw_point(SvgOut& svg, const Mapper& map, const HomPoint& p, const std::string& name) {
  if (p.at_infinity()) {
    // direction arrow on the boundary
    double dx = to_double(p.x());
    double dy = to_double(p.y());
    double norm = std::hypot(dx, dy);
    if (norm == 0) return;
    dx /= norm;
    dy /= norm;
    double cx = (map.vp.x0 + map.vp.x1) / 2;
    double cy = (map.vp.y0 + map.vp.y1) / 2;
    double half_w = (map.vp.x1 - map.vp.x0) / 2;
    double half_h = (map.vp.y1 - map.vp.y0) / 2;
    double t = std::min(dx != 0 ? half_w / std::abs(dx) : 1e30,
                        dy != 0 ? half_h / std::abs(dy) : 1e30);
    double bx = map.px(cx + t * dx);
    double by = map.py(cy + t * dy);
    double tx = map.px(cx + 0.92 * t * dx);
    double ty = map.py(cy + 0.92 * t * dy);
    svg.os << "<path class=\"inf-arrow\" d=\"M " << tx << ' ' << ty << " L " << bx << ' ' << by
           << "\" stroke=\"#aa2222\" stroke-width=\"2\" marker-end=\"none\"/>\n";
    svg.os << "<path class=\"inf-arrow-head\" d=\"M " << bx << ' ' << by << " l "
           << -6 * dx - 3 * dy << ' ' << 6 * dy - 3 * dx << " M " << bx << ' ' << by << " l "
           << -6 * dx + 3 * dy << ' ' << 6 * dy + 3 * dx << "\" stroke=\"#aa2222\" stroke-width=\"2\"/>\n";
    svg.label(tx, ty, name);
    return;
  }
  double x = to_double(p.x() / p.z());
  double y = to_double(p.y() / p.z());
  svg.os << "<circle cx=\"" << map.px(x) << "\" cy=\"" << map.py(y)
         << "\" r=\"4\" fill=\"#113388\"/>\n";
  svg.label(map.px(x), map.py(y), name);
}

void draw_line(SvgOut& svg, const Mapper& map, const HomLine& l, const std::string& name) {
  double a = to_double(l.a());
  double b = to_double(l.b());
  double c = to_double(l.c());
  if (a == 0 && b == 0) return;  // line at infinity has no affine trace

  struct Pt {
    double x, y;
  };
  std::vector<Pt> hits;
  auto push = [&](double x, double y) {
    for (const Pt& q : hits)
      if (std::abs(q.x - x) < 1e-9 && std::abs(q.y - y) < 1e-9) return;
    hits.push_back({x, y});
  };
  const Viewport& vp = map.vp;
  if (b != 0) {
    double y_left = -(c + a * vp.x0) / b;
    double y_right = -(c + a * vp.x1) / b;
    if (y_left >= vp.y0 && y_left <= vp.y1) push(vp.x0, y_left);
    if (y_right >= vp.y0 && y_right <= vp.y1) push(vp.x1, y_right);
  }
  if (a != 0) {
    double x_bottom = -(c + b * vp.y0) / a;
    double x_top = -(c + b * vp.y1) / a;
    if (x_bottom >= vp.x0 && x_bottom <= vp.x1) push(x_bottom, vp.y0);
    if (x_top >= vp.x0 && x_top <= vp.x1) push(x_top, vp.y1);
  }
  if (hits.size() < 2) return;  // outside the viewport
  svg.os << "<line x1=\"" << map.px(hits[0].x) << "\" y1=\"" << map.py(hits[0].y) << "\" x2=\""
         << map.px(hits[1].x) << "\" y2=\"" << map.py(hits[1].y)
         << "\" stroke=\"#333333\" stroke-width=\"1.5\"/>\n";
  double mx = (hits[0].x + hits[1].x) / 2;
  double my = (hits[0].y + hits[1].y) / 2;
  svg.label(map.px(mx), map.py(my), name);
}

void draw_conic(SvgOut& svg, const Mapper& map, const Conic& k, const std::string& name) {
  const HomPoint& u = k.base_u();
  std::vector<std::pair<bool, std::pair<double, double>>> samples;  // (finite, xy)

  for (int i = 0; i < kConicSamples; ++i) {
    double theta = M_PI * (i + 0.25) / kConicSamples;
    Vec3 l;
    if (u.at_infinity()) {
      // lines through an infinite point: fixed direction, varying offset
      double spread = std::max(map.vp.x1 - map.vp.x0, map.vp.y1 - map.vp.y0);
      double offset = std::tan(theta - M_PI / 2) * spread;
      l = vec3(u.y(), -u.x(), rat_from_double(offset));
    } else {
      Rat dx = rat_from_double(std::cos(theta));
      Rat dy = rat_from_double(std::sin(theta));
      HomPoint dir(dx, dy, Rat(0));
      if (dir == u) continue;
      l = u.v.cross(dir.v);
    }
    Vec3 img = k.steiner_map().apply_raw(primitive_canonical(l));
    Vec3 x = l.cross(img);
    if (exactly_zero(x)) continue;
    HomPoint pt(x);
    if (pt.at_infinity()) {
      samples.push_back({false, {0, 0}});
      continue;
    }
    double px = to_double(pt.x() / pt.z());
    double py = to_double(pt.y() / pt.z());
    samples.push_back({true, {px, py}});
  }

  // split into polyline runs at infinite or far-outside samples
  double margin = (map.vp.x1 - map.vp.x0);
  std::vector<std::vector<std::pair<double, double>>> runs(1);
  for (const auto& s : samples) {
    if (!s.first || !map.inside(s.second.first, s.second.second, margin)) {
      if (!runs.back().empty()) runs.emplace_back();
      continue;
    }
    runs.back().push_back(s.second);
  }
  bool labeled = false;
  for (const auto& run : runs) {
    if (run.size() < 2) continue;
    svg.os << "<polyline fill=\"none\" stroke=\"#117733\" stroke-width=\"1.5\" points=\"";
    for (const auto& [x, y] : run) svg.os << map.px(x) << ',' << map.py(y) << ' ';
    svg.os << "\"/>\n";
    if (!labeled) {
      svg.label(map.px(run.front().first), map.py(run.front().second), name);
      labeled = true;
    }
  }
}

}  // namespace

std::string render_svg_text(const Env& env, const Viewport& vp) {
  SvgOut svg;
  Mapper map{vp};
  for (const auto& [name, value] : env.ordered) {
    if (const HomPoint* p = std::get_if<HomPoint>(&value)) draw_point(svg, map, *p, name);
    if (const HomLine* l = std::get_if<HomLine>(&value)) draw_line(svg, map, *l, name);
    if (const Conic* k = std::get_if<Conic>(&value)) draw_conic(svg, map, *k, name);
  }
  return svg.finish();
}

void render_svg(const Env& env, const std::string& path, const Viewport& vp) {
  std::ofstream out(path);
  if (!out) throw Error("IoError", "cannot open '" + path + "' for writing");
  out << render_svg_text(env, vp);
  if (!out) throw Error("IoError", "failed writing '" + path + "'");
}

}  // namespace pgeo::script
