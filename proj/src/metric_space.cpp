#include "ukc/metric_space.hpp"

#include <cmath>
#include <sstream>

#include "ukc/errors.hpp"

namespace ukc {

std::string MetricViolation::describe() const {
    std::ostringstream os;
    switch (axiom) {
        case Axiom::dimension:
            os << "dimension must be positive";
            break;
        case Axiom::shape:
            if (i < 0)
                os << "matrix is empty";
            else
                os << "matrix row " << i << " has the wrong length";
            break;
        case Axiom::nonfinite:
            os << "non-finite entry at (" << i << "," << j << ")";
            break;
        case Axiom::diagonal:
            os << "nonzero diagonal at (" << i << "," << i << ")";
            break;
        case Axiom::symmetry:
            os << "asymmetry at (" << i << "," << j << ")";
            break;
        case Axiom::negativity:
            os << "negative entry at (" << i << "," << j << ")";
            break;
        case Axiom::triangle:
            os << "triangle violation (" << i << "," << j << ") via " << k;
            break;
    }
    return os.str();
}

double distance(const Space& space, const Point& a, const Point& b) {
    if (space.kind == SpaceKind::euclidean) {
        if (static_cast<int>(a.coords.size()) != space.dim ||
            static_cast<int>(b.coords.size()) != space.dim) {
            std::ostringstream os;
            os << "distance: point dimension (" << a.coords.size() << ", " << b.coords.size()
               << ") does not match space dim " << space.dim;
            throw InputError(os.str());
        }
        double sq = 0.0;
        for (int i = 0; i < space.dim; ++i) {
            const double d = a.coords[i] - b.coords[i];
            sq += d * d;
        }
        return std::sqrt(sq);
    }
    const int m = static_cast<int>(space.matrix.size());
    if (a.index < 0 || a.index >= m || b.index < 0 || b.index >= m) {
        std::ostringstream os;
        os << "distance: index (" << a.index << ", " << b.index << ") out of range [0," << m << ")";
        throw InputError(os.str());
    }
    return space.matrix[a.index][b.index];
}

std::vector<MetricViolation> validate_space(const Space& space) {
    using Axiom = MetricViolation::Axiom;
    std::vector<MetricViolation> out;

    if (space.kind == SpaceKind::euclidean) {
        if (space.dim < 1) out.push_back({Axiom::dimension, -1, -1, -1});
        return out;
    }

    const auto& m = space.matrix;
    const int n = static_cast<int>(m.size());
    if (n == 0) {
        out.push_back({Axiom::shape, -1, -1, -1});
        return out;
    }
    for (int i = 0; i < n; ++i) {
        if (static_cast<int>(m[i].size()) != n) {
            out.push_back({Axiom::shape, i, -1, -1});
            return out;  // entry checks need a square matrix
        }
    }
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j) {
            if (!std::isfinite(m[i][j])) out.push_back({Axiom::nonfinite, i, j, -1});
        }
    }
    if (!out.empty()) return out;

    for (int i = 0; i < n; ++i) {
        if (std::abs(m[i][i]) > kMetricSlack) out.push_back({Axiom::diagonal, i, i, -1});
        for (int j = i + 1; j < n; ++j) {
            if (std::abs(m[i][j] - m[j][i]) > kMetricSlack)
                out.push_back({Axiom::symmetry, i, j, -1});
        }
        for (int j = 0; j < n; ++j) {
            if (m[i][j] < -kMetricSlack) out.push_back({Axiom::negativity, i, j, -1});
        }
    }
    for (int i = 0; i < n; ++i)
        for (int k = i + 1; k < n; ++k)
            for (int j = 0; j < n; ++j)
                if (m[i][k] > m[i][j] + m[j][k] + kMetricSlack) {
                    // one witness per unordered pair is enough
                    out.push_back({Axiom::triangle, i, k, j});
                    break;
                }
    return out;
}

}  // namespace ukc
