#include "markovgeo/svg.hpp"

#include <cstdio>
#include <sstream>
#include <stdexcept>

namespace markovgeo {

namespace {

double as_double(const Rational& r) { return r.convert_to<double>(); }
double as_double(const QuadExt& v) { return to_float(v, 64).to_double(); }

// fixed two-decimal pixel coordinates keep the output byte-stable
std::string px(double v) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.2f", v + 0.0);   // avoid "-0.00"
    if (std::string(buf) == "-0.00") return "0.00";
    return buf;
}

struct Frame {
    double x_min, scale, height;
    double X(double x) const { return (x - x_min) * scale; }
    double Y(double y) const { return height - y * scale; }
};

void emit_semicircle(std::ostream& os, const Frame& f, double a, double b,
                     const char* klass) {
    if (a > b) std::swap(a, b);
    double r = (b - a) / 2 * f.scale;
    os << "  <path class=\"" << klass << "\" d=\"M " << px(f.X(a)) << ' '
       << px(f.Y(0)) << " A " << px(r) << ' ' << px(r) << " 0 0 1 "
       << px(f.X(b)) << ' ' << px(f.Y(0)) << "\"/>\n";
}

void emit_vertical(std::ostream& os, const Frame& f, double x, const char* klass) {
    os << "  <line class=\"" << klass << "\" x1=\"" << px(f.X(x)) << "\" y1=\""
       << px(f.Y(0)) << "\" x2=\"" << px(f.X(x)) << "\" y2=\"0.00\"/>\n";
}

} // namespace

std::string render_svg(const RenderSpec& spec) {
    if (!(spec.x_min < spec.x_max)) throw std::invalid_argument("window must have x_min < x_max");
    if (spec.q_max < 1) throw std::invalid_argument("q_max must be at least 1");
    if (spec.scale <= 0) throw std::invalid_argument("scale must be positive");

    std::vector<Horocycle> circles = ford_circles(spec.q_max, spec.x_min, spec.x_max);
    Horocycle line_at_top = circles.back();   // h(1,0), always appended last
    circles.pop_back();

    Frame f{as_double(spec.x_min), double(spec.scale), 1.25 * double(spec.scale)};
    double width = (as_double(spec.x_max) - as_double(spec.x_min)) * f.scale;

    std::ostringstream os;
    os << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << px(width)
       << "\" height=\"" << px(f.height) << "\" viewBox=\"0 0 " << px(width)
       << ' ' << px(f.height) << "\">\n";
    os << "  <style>.ford{fill:none;stroke:#202020;stroke-width:1}"
          ".farey{fill:none;stroke:#9090a0;stroke-width:0.7}"
          ".geo{fill:none;stroke:#c02020;stroke-width:1.5}</style>\n";
    os << "  <rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";
    os << "  <line class=\"ford\" x1=\"0.00\" y1=\"" << px(f.Y(0)) << "\" x2=\""
       << px(width) << "\" y2=\"" << px(f.Y(0)) << "\"/>\n";

    if (spec.farey_edges) {
        // tangent pairs among the visible circles are exactly the Farey edges
        for (size_t i = 0; i < circles.size(); ++i)
            for (size_t j = i + 1; j < circles.size(); ++j) {
                Rational det = circles[i].p() * circles[j].q() - circles[j].p() * circles[i].q();
                if (det != 1 && det != -1) continue;
                emit_semicircle(os, f, as_double(Rational(circles[i].p() / circles[i].q())),
                                as_double(Rational(circles[j].p() / circles[j].q())), "farey");
            }
        // edges up to the cusp at infinity sit above the integers
        for (const Horocycle& h : circles)
            if (h.q() == 1) emit_vertical(os, f, as_double(h.p()), "farey");
    }

    for (const Horocycle& h : circles) {
        Rational d = h.euclidean_diameter();
        os << "  <circle class=\"ford\" cx=\"" << px(f.X(as_double(h.center().value())))
           << "\" cy=\"" << px(f.Y(as_double(Rational(d / 2)))) << "\" r=\""
           << px(as_double(Rational(d / 2)) * f.scale) << "\"/>\n";
    }
    os << "  <line class=\"ford\" x1=\"0.00\" y1=\"" << px(f.Y(as_double(line_at_top.height())))
       << "\" x2=\"" << px(width) << "\" y2=\"" << px(f.Y(as_double(line_at_top.height())))
       << "\"/>\n";

    for (const Geodesic& g : spec.geodesics) {
        if (g.is_vertical())
            emit_vertical(os, f, as_double(g.e1().value()), "geo");
        else
            emit_semicircle(os, f, as_double(g.e1().value()), as_double(g.e2().value()), "geo");
    }

    os << "</svg>\n";
    return os.str();
}

} // namespace markovgeo
