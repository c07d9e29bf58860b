#include "polybisim/svg.hpp"

#include <algorithm>
#include <cmath>
#include <iomanip>
#include <ostream>

#include "polybisim/error.hpp"

namespace polybisim {

std::vector<Point> closure_vertices(const Cell& c) {
  if (c.dimension() != 2) throw Error(ErrorCode::kDimension, "closure_vertices needs a 2-D cell");
  const auto& rows = c.constraints();
  auto in_closure = [&](const Point& x) {
    return std::all_of(rows.begin(), rows.end(),
                       [&](const Constraint& r) { return dot(r.normal, x) <= r.offset; });
  };

  std::vector<Point> pts;
  for (std::size_t i = 0; i < rows.size(); ++i) {
    for (std::size_t j = i + 1; j < rows.size(); ++j) {
      const auto& a = rows[i].normal;
      const auto& b = rows[j].normal;
      const Rational det = a[0] * b[1] - a[1] * b[0];
      if (det == 0) continue;
      Point x{(rows[i].offset * b[1] - a[1] * rows[j].offset) / det,
              (a[0] * rows[j].offset - rows[i].offset * b[0]) / det};
      if (in_closure(x) && std::find(pts.begin(), pts.end(), x) == pts.end()) pts.push_back(std::move(x));
    }
  }
  if (pts.size() < 3) return pts;

  Rational cx = 0, cy = 0;
  for (const auto& p : pts) {
    cx += p[0];
    cy += p[1];
  }
  cx /= static_cast<long>(pts.size());
  cy /= static_cast<long>(pts.size());
  std::sort(pts.begin(), pts.end(), [&](const Point& p, const Point& q) {
    const double ap = std::atan2(to_double(p[1] - cy), to_double(p[0] - cx));
    const double aq = std::atan2(to_double(q[1] - cy), to_double(q[0] - cx));
    return ap < aq;
  });
  return pts;
}

namespace {

class Canvas {
 public:
  Canvas(std::ostream& out, const Box& view) : out_(out) {
    x0_ = to_double(view.lo[0]);
    y1_ = to_double(view.hi[1]);
    const double w = to_double(view.hi[0]) - x0_;
    const double h = y1_ - to_double(view.lo[1]);
    scale_ = (kSize - 2 * kMargin) / std::max(w, h);
    out_ << std::fixed << std::setprecision(2);
    out_ << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << kSize << "\" height=\"" << kSize
         << "\" viewBox=\"0 0 " << kSize << ' ' << kSize << "\">\n";
    out_ << "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";
  }
  ~Canvas() { out_ << "</svg>\n"; }

  void shape(const Cell& c, const char* fill, const char* stroke, double width, const char* extra = "") {
    const auto pts = closure_vertices(c);
    if (pts.empty()) return;
    if (pts.size() == 1) {
      out_ << "<circle cx=\"" << px(pts[0]) << "\" cy=\"" << py(pts[0]) << "\" r=\"1.5\" fill=\"" << stroke
           << "\"/>\n";
      return;
    }
    out_ << (pts.size() == 2 ? "<polyline" : "<polygon") << " points=\"";
    for (std::size_t i = 0; i < pts.size(); ++i) out_ << (i ? " " : "") << px(pts[i]) << ',' << py(pts[i]);
    out_ << "\" fill=\"" << (pts.size() == 2 ? "none" : fill) << "\" stroke=\"" << stroke
         << "\" stroke-width=\"" << width << '"' << extra << "/>\n";
  }

 private:
  static constexpr double kSize = 640;
  static constexpr double kMargin = 20;

  double px(const Point& p) const { return kMargin + (to_double(p[0]) - x0_) * scale_; }
  double py(const Point& p) const { return kMargin + (y1_ - to_double(p[1])) * scale_; }

  std::ostream& out_;
  double x0_ = 0;
  double y1_ = 0;
  double scale_ = 1;
};

const char* fill_for(const Observation& o) {
  switch (o.kind()) {
    case Observation::Kind::kTarget: return "#d0d0d0";
    case Observation::Kind::kRegion: return "#a8dba8";
    case Observation::Kind::kEmpty: break;
  }
  return "#ffffff";
}

}  // namespace

bool write_svg(std::ostream& out, const Workspace& ws, const Partition& p, const Region& highlight) {
  if (ws.dimension() != 2) return false;
  const auto view = bounding_box(ws.working_set());
  if (!view) return false;

  Canvas canvas(out, *view);
  for (const Block& b : p.blocks()) canvas.shape(b.cell, fill_for(b.observation), "#404040", 0.4);
  for (const Cell& c : highlight.cells()) canvas.shape(c, "#8e44ad", "#5b2c6f", 0.4, " fill-opacity=\"0.7\"");
  for (std::size_t i = 0; i < ws.levels().gammas.size(); ++i) {
    canvas.shape(sublevel_cell(ws.lf(), ws.levels()[i]), "none", "#1f4e79", 1.0,
                 " stroke-dasharray=\"4 3\"");
  }
  return true;
}

}  // namespace polybisim
