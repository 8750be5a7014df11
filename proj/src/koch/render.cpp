#include "koch/render.hpp"

#include "koch/arrangement.hpp"
#include "koch/error.hpp"

#include <algorithm>
#include <cstdio>
#include <sstream>

namespace koch {

namespace {

std::string num(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.3f", v);
  std::string s(buf);
  if (s == "-0.000") s = "0.000";
  return s;
}

// World window [x0, x1] x [y0, y1] mapped onto a width x height canvas.
struct Viewport {
  double x0, x1, y0, y1;
  int width, height;

  double px(const Rational& x) const {
    return (x.to_double() - x0) / (x1 - x0) * width;
  }
  double py(const Rational& y) const {
    return (y1 - y.to_double()) / (y1 - y0) * height;
  }
};

void open_svg(std::ostringstream& os, int width, int height) {
  os << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << width
     << "\" height=\"" << height << "\" viewBox=\"0 0 " << width << " "
     << height << "\">\n";
  os << "<rect width=\"" << width << "\" height=\"" << height
     << "\" fill=\"white\"/>\n";
}

void add_triangles(std::ostringstream& os, const Viewport& vp, const Chain& c,
                   std::size_t lo, std::size_t hi) {
  if (hi - lo < 2) return;
  const std::size_t mid = (lo + hi) / 2;
  os << "<polygon points=\"";
  for (std::size_t i : {lo, mid, hi}) {
    os << num(vp.px(c.points[i].x)) << "," << num(vp.py(c.points[i].y))
       << (i == hi ? "" : " ");
  }
  os << "\" fill=\"black\" fill-opacity=\"0.08\" stroke=\"gray\" "
        "stroke-width=\"0.5\"/>\n";
  add_triangles(os, vp, c, lo, mid);
  add_triangles(os, vp, c, mid, hi);
}

std::string render_primal(const Chain& chain, int width) {
  const int height = width * 6 / 11;
  const Viewport vp{-1.1, 1.1, -1.1, 0.1, width, height};
  std::ostringstream os;
  open_svg(os, width, height);
  if (chain.points.size() >= 3) {
    add_triangles(os, vp, chain, 0, chain.points.size() - 1);
  }
  os << "<polyline fill=\"none\" stroke=\"black\" stroke-width=\"1\" points=\"";
  for (std::size_t i = 0; i < chain.points.size(); ++i) {
    os << (i ? " " : "") << num(vp.px(chain.points[i].x)) << ","
       << num(vp.py(chain.points[i].y));
  }
  os << "\"/>\n";
  const bool labels = chain.points.size() <= 33;
  for (std::size_t i = 0; i < chain.points.size(); ++i) {
    const double x = vp.px(chain.points[i].x);
    const double y = vp.py(chain.points[i].y);
    os << "<circle cx=\"" << num(x) << "\" cy=\"" << num(y)
       << "\" r=\"3\" fill=\"black\"/>\n";
    if (labels) {
      os << "<text x=\"" << num(x + 4) << "\" y=\"" << num(y - 4)
         << "\" font-size=\"10\" font-family=\"sans-serif\">"
         << chain.logical_index(i) << "</text>\n";
    }
  }
  os << "</svg>\n";
  return os.str();
}

std::pair<Rational, Rational> window_interval(const Line& l, const Rational& m) {
  if (l.slope.sign() == 0) return {-m, m};
  Rational t1 = (l.offset - m) / l.slope;
  Rational t2 = (l.offset + m) / l.slope;
  if (t2 < t1) std::swap(t1, t2);
  return {std::max(-m, t1), std::min(m, t2)};
}

std::string render_dual(const Chain& chain, const RenderOptions& options) {
  const Arrangement arr = build_dual_arrangement(chain);
  const Rational v = options.clip.value_or(arr.clip_half_width);
  if (v.sign() <= 0) {
    throw Error(ErrorCode::InvalidArgument, "render window must be positive");
  }
  const double vd = v.to_double();
  const int size = options.width_px;
  const Viewport vp{-vd, vd, -vd, vd, size, size};
  std::ostringstream os;
  open_svg(os, size, size);

  for (std::size_t i = 0; i < arr.lines.size(); ++i) {
    const Line& l = arr.lines[i];
    const auto [a, b] = window_interval(l, v);
    if (!(a < b)) continue;
    os << "<line x1=\"" << num(vp.px(a)) << "\" y1=\"" << num(vp.py(l.y_at(a)))
       << "\" x2=\"" << num(vp.px(b)) << "\" y2=\"" << num(vp.py(l.y_at(b)))
       << "\" stroke=\"black\" stroke-width=\"1\"><title>"
       << chain.logical_index(i) << "</title></line>\n";
  }

  if (options.label_faces) {
    const Rational edge_x = v * Rational(23, 25);
    Rational top_y = arr.lines.front().y_at(0);
    Rational bottom_y = top_y;
    for (const auto& l : arr.lines) {
      top_y = std::max(top_y, l.y_at(0));
      bottom_y = std::min(bottom_y, l.y_at(0));
    }
    for (const auto& f : arr.faces) {
      Point at;
      switch (f.kind) {
        case FaceKind::Bounded: {
          Rational sx(0), sy(0);
          for (std::size_t id : f.corners) {
            sx += arr.vertices[id].x;
            sy += arr.vertices[id].y;
          }
          const Rational k(static_cast<std::int64_t>(f.corners.size()));
          at = {sx / k, sy / k};
          break;
        }
        case FaceKind::TopUnbounded: at = {0, (top_y + v) / 2}; break;
        case FaceKind::BottomUnbounded: at = {0, (bottom_y - v) / 2}; break;
        case FaceKind::LeftUnbounded:
        case FaceKind::RightUnbounded: {
          const Rational x = f.kind == FaceKind::LeftUnbounded ? -edge_x : edge_x;
          Rational y(0);
          for (std::size_t line : f.ray_lines) y += arr.lines[line].y_at(x);
          at = {x, y / Rational(static_cast<std::int64_t>(f.ray_lines.size()))};
          break;
        }
      }
      if (at.x.abs() >= v || at.y.abs() >= v) continue;
      os << "<text x=\"" << num(vp.px(at.x)) << "\" y=\"" << num(vp.py(at.y))
         << "\" font-size=\"9\" font-family=\"sans-serif\" fill=\"gray\" "
            "text-anchor=\"middle\">"
         << f.edge_count << "</text>\n";
    }
  }
  os << "</svg>\n";
  return os.str();
}

}  // namespace

std::string render_svg(const Chain& chain, const RenderOptions& options) {
  if (options.width_px < 16 || options.width_px > 100000) {
    throw Error(ErrorCode::InvalidArgument, "render width out of range");
  }
  return options.mode == RenderMode::Primal ? render_primal(chain, options.width_px)
                                            : render_dual(chain, options);
}

}  // namespace koch
