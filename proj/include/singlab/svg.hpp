#pragma once

#include <algorithm>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

namespace singlab {

/// Minimal polyline rendering of (x, y) samples; plotting is an optional
/// convenience and never load-bearing.
inline std::string svg_polyline(const std::vector<double>& xs,
                                const std::vector<double>& ys, int width = 640,
                                int height = 400) {
    double x0 = *std::min_element(xs.begin(), xs.end());
    double x1 = *std::max_element(xs.begin(), xs.end());
    double y0 = *std::min_element(ys.begin(), ys.end());
    double y1 = *std::max_element(ys.begin(), ys.end());
    if (x1 == x0) x1 = x0 + 1.0;
    if (y1 == y0) y1 = y0 + 1.0;
    std::ostringstream os;
    os << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << width
       << "\" height=\"" << height << "\">\n<polyline fill=\"none\" "
       << "stroke=\"black\" stroke-width=\"1\" points=\"";
    os.precision(7);
    for (size_t i = 0; i < xs.size(); ++i) {
        double px = (xs[i] - x0) / (x1 - x0) * (width - 20) + 10;
        double py = height - 10 - (ys[i] - y0) / (y1 - y0) * (height - 20);
        os << px << "," << py << " ";
    }
    os << "\"/>\n</svg>\n";
    return os.str();
}

inline void write_svg(const std::string& path, const std::string& body) {
    std::ofstream os(path, std::ios::binary);
    os << body;
}

}  // namespace singlab
