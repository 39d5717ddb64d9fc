#include "sgst/metric/f_catalog.hpp"

#include <cmath>

#include "sgst/core/error.hpp"

namespace sgst {

namespace {

Mat4d pat(std::initializer_list<double> v) {
    Mat4d m;
    auto it = v.begin();
    for (int r = 0; r < 4; ++r)
        for (int c = 0; c < 4; ++c) m(r, c) = *it++;
    return m;
}

Mat4c coord(std::initializer_list<Complex> v) {
    Mat4c m;
    auto it = v.begin();
    for (int r = 0; r < 4; ++r)
        for (int c = 0; c < 4; ++c) m(r, c) = *it++;
    return m;
}

const Complex J(0.0, 1.0);

std::vector<FCatalogEntry> build_catalog() {
    std::vector<FCatalogEntry> cat;

    cat.push_back({"F1",
                   pat({2, 0, -2, 0,   0, 2, 2, 0,   -2, 2, 4, 0,   0, 0, 0, -4}),
                   pat({0, 0, 0, 2,   0, 0, 0, 2,    0, 0, 0, 0,   2, 2, 0, 0}),
                   coord({-1, 0, 1, -J,   0, -1, -1, -J,   1, 0, -1, -J,   0, J, J, 1}),
                   {"x'=-x+z-it", "y'=-y-z-it", "z'=x-z-it", "t'=iy+iz+t"}});

    cat.push_back({"F2",
                   pat({2, 0, -2, 0,   0, 2, -2, 0,   -2, -2, 4, 0,   0, 0, 0, -4}),
                   pat({0, 0, 0, 2,   0, 0, 0, -2,    0, 0, 0, 0,   2, -2, 0, 0}),
                   coord({-1, 0, 1, -J,   0, -1, 1, J,   1, 0, -1, -J,   0, -J, J, 1}),
                   {"x'=-x+z-it", "y'=-y+z+it", "z'=x-z-it", "t'=-iy+iz+t"}});

    cat.push_back({"F3",
                   pat({2, 0, 2, 0,   0, 2, 2, 0,   2, 2, 4, 0,   0, 0, 0, -4}),
                   pat({0, 0, 0, -2,   0, 0, 0, 2,   0, 0, 0, 0,   -2, 2, 0, 0}),
                   coord({-1, 0, -1, J,   0, -1, -1, -J,   -1, 0, -1, -J,   0, J, J, 1}),
                   {"x'=-x-z+it", "y'=-y-z-it", "z'=-x-z-it", "t'=iy+iz+t"}});

    cat.push_back({"F4",
                   pat({2, 0, 2, 0,   0, 2, -2, 0,   2, -2, 4, 0,   0, 0, 0, -4}),
                   pat({0, 0, 0, -2,   0, 0, 0, -2,   0, 0, 0, 0,   -2, -2, 0, 0}),
                   coord({-1, 0, -1, J,   0, -1, 1, J,   -1, 0, -1, -J,   0, -J, J, 1}),
                   {"x'=-x-z+it", "y'=-y+z+it", "z'=-x-z-it", "t'=-iy+iz+t"}});

    cat.push_back({"F5",
                   pat({2, 0, 2, 0,   0, 2, -2, 0,   2, -2, 4, 0,   0, 0, 0, -4}),
                   pat({0, 0, 0, 2,   0, 0, 0, 2,   0, 0, 0, 0,   2, 2, 0, 0}),
                   coord({-1, 0, -1, -J,   0, -1, 1, -J,   0, 1, -1, -J,   J, 0, J, 1}),
                   {"x'=-x-z-it", "y'=-y+z-it", "z'=y-z-it", "t'=ix+iz+t"}});

    cat.push_back({"F6",
                   pat({2, 0, -2, 0,   0, 2, -2, 0,   -2, -2, 4, 0,   0, 0, 0, -4}),
                   pat({0, 0, 0, -2,   0, 0, 0, 2,   0, 0, 0, 0,   -2, 2, 0, 0}),
                   coord({-1, 0, 1, J,   0, -1, 1, -J,   0, 1, -1, -J,   -J, 0, J, 1}),
                   {"x'=-x+z+it", "y'=-y+z-it", "z'=y-z-it", "t'=-ix+iz+t"}});

    cat.push_back({"F7",
                   pat({2, 0, 2, 0,   0, 2, 2, 0,   2, 2, 4, 0,   0, 0, 0, -4}),
                   pat({0, 0, 0, 2,   0, 0, 0, -2,   0, 0, 0, 0,   2, -2, 0, 0}),
                   coord({-1, 0, -1, -J,   0, -1, -1, J,   0, -1, -1, -J,   J, 0, J, 1}),
                   {"x'=-x-z-it", "y'=-y-z+it", "z'=-y-z-it", "t'=ix+iz+t"}});

    cat.push_back({"F8",
                   pat({2, 0, -2, 0,   0, 2, 2, 0,   -2, 2, 4, 0,   0, 0, 0, -4}),
                   pat({0, 0, 0, -2,   0, 0, 0, -2,   0, 0, 0, 0,   -2, -2, 0, 0}),
                   coord({-1, 0, 1, J,   0, -1, -1, J,   0, -1, -1, -J,   -J, 0, J, 1}),
                   {"x'=-x+z+it", "y'=-y-z+it", "z'=-y-z-it", "t'=-ix+iz+t"}});

    return cat;
}

}  // namespace

Metric4 FCatalogEntry::metric_at(double alpha) const {
    const double C = std::cos(alpha), S = std::sin(alpha);
    const Mat4d real = C * pattern_cos + S * pattern_sin;
    return Metric4(real.cast<Complex>());
}

const std::vector<FCatalogEntry>& f_metric_catalog() {
    static const std::vector<FCatalogEntry> cat = build_catalog();
    return cat;
}

Metric4 f_metric(int index, double alpha) {
    if (index < 1 || index > 8) throw ParameterError("f_metric: index must be 1..8");
    return f_metric_catalog()[std::size_t(index - 1)].metric_at(alpha);
}

}  // namespace sgst
