#include <cmath>
#include <cstdio>
#include <sstream>
#include <string>
#include <vector>

#include "ncg/curves.hpp"

namespace ncg {

  namespace {
    constexpr double kRadius = 200.0;
    constexpr double kMargin = 30.0;
    constexpr double kCenter = kRadius + kMargin;

    struct Point {
      double x = 0;
      double y = 0;  // mathematical orientation, y grows upwards
    };

    std::string num(double v) {
      char buf[32];
      std::snprintf(buf, sizeof buf, "%.2f", v);
      return buf;
    }

    // Screen coordinates.
    double sx(const Point& p) { return kCenter + p.x; }
    double sy(const Point& p) { return kCenter - p.y; }

    double puncture_height(int j, int n) {
      return -kRadius + 2.0 * kRadius * j / (n + 1);
    }

    struct Layout {
      int n = 1;
      // Per curve: word, and the heights of its out/in arcs at x_0.
      std::vector<const TautCurve*> curves;
      // gate_orders[j] as merged slots, puncture end first.
      std::vector<std::vector<GateSlot>> gate_orders;
      std::vector<GateSlot> basepoint_order;
    };

    Point gate_point(const Layout& l, int curve, int crossing) {
      const FreeWord& w = l.curves[static_cast<std::size_t>(curve)]->word();
      int j = w[static_cast<std::size_t>(crossing)].index;
      const auto& slots = l.gate_orders[static_cast<std::size_t>(j - 1)];
      std::size_t r = 0;
      while (r < slots.size() && !(slots[r].curve == curve && slots[r].crossing == crossing)) ++r;
      double y = puncture_height(j, l.n);
      double x0 = 0.0;
      double x1 = std::sqrt(std::max(0.0, kRadius * kRadius - y * y)) - 4.0;
      double t = (static_cast<double>(r) + 1.0) / (static_cast<double>(slots.size()) + 1.0);
      return {x0 + t * (x1 - x0), y};
    }

    Point terminal_point(const Layout& l, int curve, int which) {
      std::size_t h = 0;
      while (h < l.basepoint_order.size() &&
             !(l.basepoint_order[h].curve == curve && l.basepoint_order[h].crossing == which)) {
        ++h;
      }
      double spread = 6.0;
      double mid = (static_cast<double>(l.basepoint_order.size()) - 1.0) / 2.0;
      return {-kRadius + 2.0, (static_cast<double>(h) - mid) * spread};
    }

    std::string curve_path(const Layout& l, int curve) {
      const FreeWord& w = l.curves[static_cast<std::size_t>(curve)]->word();
      std::vector<Point> pts;
      std::vector<Point> tangent;
      pts.push_back(terminal_point(l, curve, 0));
      tangent.push_back({1.0, 0.0});
      for (std::size_t k = 0; k < w.size(); ++k) {
        pts.push_back(gate_point(l, curve, static_cast<int>(k)));
        tangent.push_back({0.0, static_cast<double>(w[k].sign)});
      }
      pts.push_back(terminal_point(l, curve, 1));
      tangent.push_back({-1.0, 0.0});
      std::ostringstream os;
      os << "M " << num(sx(pts[0])) << ' ' << num(sy(pts[0]));
      for (std::size_t i = 0; i + 1 < pts.size(); ++i) {
        const Point& p = pts[i];
        const Point& q = pts[i + 1];
        double d = 0.4 * std::hypot(q.x - p.x, q.y - p.y) + 10.0;
        Point c1{p.x + tangent[i].x * d, p.y + tangent[i].y * d};
        Point c2{q.x - tangent[i + 1].x * d, q.y - tangent[i + 1].y * d};
        os << " C " << num(sx(c1)) << ' ' << num(sy(c1)) << ", " << num(sx(c2)) << ' '
           << num(sy(c2)) << ", " << num(sx(q)) << ' ' << num(sy(q));
      }
      return os.str();
    }

    std::string document(const Layout& l) {
      std::ostringstream os;
      const double size = 2.0 * kCenter;
      os << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n";
      os << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << num(size) << "\" height=\""
         << num(size) << "\" viewBox=\"0 0 " << num(size) << ' ' << num(size) << "\">\n";
      os << "  <circle cx=\"" << num(kCenter) << "\" cy=\"" << num(kCenter) << "\" r=\""
         << num(kRadius) << "\" fill=\"none\" stroke=\"#bbbbbb\"/>\n";
      for (int j = 1; j <= l.n; ++j) {
        Point p{0.0, puncture_height(j, l.n)};
        Point e{std::sqrt(kRadius * kRadius - p.y * p.y), p.y};
        os << "  <line class=\"gate\" x1=\"" << num(sx(p)) << "\" y1=\"" << num(sy(p)) << "\" x2=\""
           << num(sx(e)) << "\" y2=\"" << num(sy(e))
           << "\" stroke=\"#dddddd\" stroke-dasharray=\"2 3\"/>\n";
      }
      const char* colors[] = {"#1f4e9c", "#b03a2e"};
      for (std::size_t c = 0; c < l.curves.size(); ++c) {
        os << "  <path class=\"curve\" d=\"" << curve_path(l, static_cast<int>(c))
           << "\" fill=\"none\" stroke=\"" << colors[c % 2] << "\" stroke-width=\"2\"";
        if (c == 1) os << " stroke-dasharray=\"8 5\"";
        os << "/>\n";
      }
      for (int j = 1; j <= l.n; ++j) {
        Point p{0.0, puncture_height(j, l.n)};
        os << "  <circle class=\"puncture\" cx=\"" << num(sx(p)) << "\" cy=\"" << num(sy(p))
           << "\" r=\"5\" fill=\"black\"/>\n";
        os << "  <text x=\"" << num(sx(p) - 22.0) << "\" y=\"" << num(sy(p) + 4.0)
           << "\" font-size=\"12\">x" << j << "</text>\n";
      }
      Point b{-kRadius, 0.0};
      os << "  <rect class=\"basepoint\" x=\"" << num(sx(b) - 5.0) << "\" y=\"" << num(sy(b) - 5.0)
         << "\" width=\"10\" height=\"10\" fill=\"white\" stroke=\"black\"/>\n";
      os << "  <text x=\"" << num(sx(b) - 26.0) << "\" y=\"" << num(sy(b) + 4.0)
         << "\" font-size=\"12\">x0</text>\n";
      os << "</svg>\n";
      return os.str();
    }
  }  // namespace

  std::string render_svg(const TautCurve& curve) {
    Layout l;
    l.n = curve.rank().value();
    l.curves = {&curve};
    l.gate_orders.resize(curve.gate_orders().size());
    for (std::size_t j = 0; j < curve.gate_orders().size(); ++j) {
      for (int k : curve.gate_orders()[j]) l.gate_orders[j].push_back(GateSlot{0, k});
    }
    if (curve.out_below_in()) {
      l.basepoint_order = {{0, 0}, {0, 1}};
    } else {
      l.basepoint_order = {{0, 1}, {0, 0}};
    }
    return document(l);
  }

  std::string render_svg(const PairDiagram& diagram) {
    Layout l;
    l.n = diagram.first.rank().value();
    l.curves = {&diagram.first, &diagram.second};
    l.gate_orders = diagram.gate_orders;
    l.basepoint_order = diagram.basepoint_order;
    return document(l);
  }

}  // namespace ncg
