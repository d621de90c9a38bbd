#include "pftil/svg.hpp"

#include <sstream>

namespace pftil {

namespace {

constexpr int kScale = 24;
constexpr int kMargin = 12;

struct Frame {
    int n;
    int ox() const { return kMargin + (n + 1) * kScale; }
    int oy() const { return kMargin + (n + 1) * kScale; }
    // Square-lattice (x, y) to viewport; y grows upward in lattice terms.
    int px(double x) const { return static_cast<int>(ox() + x * kScale); }
    int py(double y) const { return static_cast<int>(oy() - y * kScale); }
    int side() const { return 2 * kMargin + 2 * (n + 1) * kScale; }
};

void svg_header(std::ostringstream& os, const Frame& f) {
    os << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << f.side()
       << "\" height=\"" << f.side() << "\" viewBox=\"0 0 " << f.side() << " "
       << f.side() << "\">\n";
}

}  // namespace

std::string tiling_to_svg(const DominoTiling& t) {
    Frame f{t.region().n()};
    std::ostringstream os;
    svg_header(os, f);
    for (const auto& [s1, s2] : t.dominoes()) {
        const bool horizontal = s1.b == s2.b;
        const int w = horizontal ? 2 : 1;
        const int h = horizontal ? 1 : 2;
        os << "  <rect x=\"" << f.px(s1.a) << "\" y=\"" << f.py(s1.b + h) << "\" width=\""
           << w * kScale << "\" height=\"" << h * kScale << "\" fill=\""
           << (horizontal ? "#e8b84b" : "#4b8fe8")
           << "\" stroke=\"#333333\" stroke-width=\"1\"/>\n";
    }
    os << "</svg>\n";
    return os.str();
}

std::string family_to_svg(const PathGraph& g, const Family& fam) {
    Frame f{g.order() + 1};
    std::ostringstream os;
    svg_header(os, f);
    for (int v = 0; v < g.vertexCount(); ++v) {
        GridPoint p = g.point(v);
        os << "  <circle cx=\"" << f.px(p.a) << "\" cy=\"" << f.py(p.b + 0.5)
           << "\" r=\"2\" fill=\"#bbbbbb\"/>\n";
    }
    for (const Path& path : fam) {
        os << "  <polyline fill=\"none\" stroke=\"#c0392b\" stroke-width=\"2\" points=\"";
        for (std::size_t k = 0; k < path.size(); ++k) {
            GridPoint p = g.point(path[k]);
            if (k) os << " ";
            os << f.px(p.a) << "," << f.py(p.b + 0.5);
        }
        os << "\"/>\n";
    }
    os << "</svg>\n";
    return os.str();
}

}  // namespace pftil
