#include "vcvis/render.hpp"

#include <algorithm>
#include <array>
#include <bit>
#include <cstdio>
#include <sstream>

namespace vcvis {

std::string_view palette_color(std::size_t size, std::size_t point_count) {
  static constexpr std::array<std::string_view, 7> kRamp = {
      "#d62728", "#8c564b", "#90ee90", "#87cefa", "#dda0dd", "#f0e68c", "#d3d3d3"};
  if (size == 0) return "#ffffff";
  std::size_t deficit = point_count > size ? point_count - size : 0;
  return kRamp[std::min(deficit, kRamp.size() - 1)];
}

namespace {

class Frame {
 public:
  Frame(const std::vector<ExactPoint>& v, double width) {
    lo_x_ = hi_x_ = to_double(v[0].x);
    lo_y_ = hi_y_ = to_double(v[0].y);
    for (const auto& p : v) {
      lo_x_ = std::min(lo_x_, to_double(p.x));
      hi_x_ = std::max(hi_x_, to_double(p.x));
      lo_y_ = std::min(lo_y_, to_double(p.y));
      hi_y_ = std::max(hi_y_, to_double(p.y));
    }
    double span = std::max(hi_x_ - lo_x_, 1e-12);
    scale_ = (width - 2 * kMargin) / span;
    width_ = width;
    height_ = (hi_y_ - lo_y_) * scale_ + 2 * kMargin;
  }

  std::string x(const Rational& value) const {
    return number((to_double(value) - lo_x_) * scale_ + kMargin);
  }
  std::string y(const Rational& value) const {
    return number((hi_y_ - to_double(value)) * scale_ + kMargin);
  }
  std::string xy(const ExactPoint& p) const { return x(p.x) + "," + y(p.y); }
  double width() const { return width_; }
  double height() const { return height_; }

  static std::string number(double value) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.2f", value);
    std::string s = buf;
    if (s == "-0.00") s = "0.00";
    return s;
  }

 private:
  static constexpr double kMargin = 20.0;
  double lo_x_, hi_x_, lo_y_, hi_y_, scale_, width_, height_;
};


}  // namespace

void render_svg(const FaceDecomposition& dec, const PointSet& points, std::ostream& out,
                const RenderOptions& options) {
  std::vector<ExactPoint> all;
  for (const Face& f : dec.faces) {
    all.insert(all.end(), f.boundary.vertices().begin(), f.boundary.vertices().end());
  }
  const Frame frame(all, options.width);
  const std::size_t n = points.size();

  out << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n";
  out << "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\""
      << Frame::number(frame.width()) << "\" height=\"" << Frame::number(frame.height())
      << "\" viewBox=\"0 0 " << Frame::number(frame.width()) << " "
      << Frame::number(frame.height()) << "\">\n";
  out << "<g id=\"faces\" stroke=\"#555555\" stroke-width=\"0.5\">\n";
  for (std::size_t i = 0; i < dec.faces.size(); ++i) {
    const Face& f = dec.faces[i];
    out << "<polygon data-face=\"" << i << "\" data-signature=\""
        << format_signature(f.signature) << "\" fill=\""
        << palette_color(static_cast<std::size_t>(std::popcount(f.signature)), n)
        << "\" points=\"";
    const auto& v = f.boundary.vertices();
    for (std::size_t k = 0; k < v.size(); ++k) out << (k ? " " : "") << frame.xy(v[k]);
    out << "\"/>\n";
  }
  out << "</g>\n";

  out << "<g id=\"chords\" stroke=\"#000000\" stroke-width=\"1\" stroke-dasharray=\"4,3\">\n";
  auto chord = [&](const Segment& s) {
    out << "<line x1=\"" << frame.x(s.a.x) << "\" y1=\"" << frame.y(s.a.y) << "\" x2=\""
        << frame.x(s.b.x) << "\" y2=\"" << frame.y(s.b.y) << "\"/>\n";
  };
  for (const L1Cut& cut : dec.cuts) {
    for (const Segment& s : cut.chords) chord(s);
  }
  for (const Segment& w : dec.windows) chord(w);
  out << "</g>\n";

  if (options.signature_labels) {
    out << "<g id=\"signatures\" font-family=\"sans-serif\" font-size=\"9\" "
           "text-anchor=\"middle\">\n";
    for (const Face& f : dec.faces) {
      out << "<text x=\"" << frame.x(f.representative.x) << "\" y=\""
          << frame.y(f.representative.y) << "\">" << format_signature(f.signature)
          << "</text>\n";
    }
    out << "</g>\n";
  }

  out << "<g id=\"points\" font-family=\"sans-serif\" font-size=\"12\">\n";
  for (const LabeledPoint& lp : points.points) {
    std::string cx = frame.x(lp.position.x), cy = frame.y(lp.position.y);
    out << "<circle cx=\"" << cx << "\" cy=\"" << cy << "\" r=\"4\" fill=\"#000000\"/>\n";
    out << "<text x=\"" << cx << "\" y=\"" << cy << "\" dx=\"6\" dy=\"-6\">" << lp.label
        << "</text>\n";
  }
  out << "</g>\n</svg>\n";
}

std::string render_svg(const FaceDecomposition& dec, const PointSet& points,
                       const RenderOptions& options) {
  std::ostringstream out;
  render_svg(dec, points, out, options);
  return out.str();
}

}  // namespace vcvis
