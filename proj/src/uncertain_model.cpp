#include "ukc/uncertain_model.hpp"

#include <cmath>
#include <istream>
#include <iterator>
#include <sstream>

#include <json.hpp>

namespace ukc {

using nlohmann::json;

namespace {

std::string at_point(std::size_t i) {
    std::ostringstream os;
    os << " at points[" << i << "]";
    return os.str();
}

std::string at_location(std::size_t i, std::size_t j) {
    std::ostringstream os;
    os << " at points[" << i << "].locations[" << j << "]";
    return os.str();
}

Point location_from_json(const json& loc, const Space& space, std::size_t i, std::size_t j) {
    if (space.kind == SpaceKind::euclidean) {
        if (!loc.is_array())
            throw InputError("location must be an array of reals" + at_location(i, j));
        if (static_cast<int>(loc.size()) != space.dim) {
            std::ostringstream os;
            os << "location dimension " << loc.size() << " != space dim " << space.dim
               << at_location(i, j);
            throw InputError(os.str());
        }
        std::vector<double> coords;
        coords.reserve(loc.size());
        for (const auto& c : loc) {
            if (!c.is_number())
                throw InputError("location coordinate must be a real" + at_location(i, j));
            const double v = c.get<double>();
            if (!std::isfinite(v))
                throw InputError("non-finite coordinate" + at_location(i, j));
            coords.push_back(v);
        }
        return Point::euclidean(std::move(coords));
    }
    if (!loc.is_number_integer())
        throw InputError("location must be an integer index" + at_location(i, j));
    const auto idx = loc.get<std::int64_t>();
    const auto m = static_cast<std::int64_t>(space.size());
    if (idx < 0 || idx >= m) {
        std::ostringstream os;
        os << "location index " << idx << " out of range [0," << m << ")" << at_location(i, j);
        throw InputError(os.str());
    }
    return Point::finite(static_cast<int>(idx));
}

Space space_from_json(const json& s) {
    if (!s.is_object()) throw InputError("space must be a JSON object");
    if (!s.contains("kind") || !s.at("kind").is_string())
        throw InputError("space.kind must be \"euclidean\" or \"finite\"");
    const std::string kind = s.at("kind").get<std::string>();
    if (kind == "euclidean") {
        if (!s.contains("dim") || !s.at("dim").is_number_integer() ||
            s.at("dim").get<std::int64_t>() < 1)
            throw InputError("space.dim must be a positive integer");
        return Space::euclidean(static_cast<int>(s.at("dim").get<std::int64_t>()));
    }
    if (kind == "finite") {
        if (!s.contains("matrix") || !s.at("matrix").is_array())
            throw InputError("space.matrix must be an array of rows");
        std::vector<std::vector<double>> m;
        m.reserve(s.at("matrix").size());
        for (const auto& row : s.at("matrix")) {
            if (!row.is_array()) throw InputError("space.matrix rows must be arrays");
            std::vector<double> r;
            r.reserve(row.size());
            for (const auto& v : row) {
                if (!v.is_number()) throw InputError("space.matrix entries must be reals");
                r.push_back(v.get<double>());
            }
            m.push_back(std::move(r));
        }
        Space space = Space::finite(std::move(m));
        const auto violations = validate_space(space);
        if (!violations.empty())
            throw InputError("space.matrix: " + violations.front().describe());
        return space;
    }
    throw InputError("space.kind must be \"euclidean\" or \"finite\"");
}

json location_to_json(const Point& p) {
    if (p.index >= 0 && p.coords.empty()) return json(p.index);
    return json(p.coords);
}

}  // namespace

Instance parse_instance(const std::string& text) {
    json j;
    try {
        j = json::parse(text);
    } catch (const json::parse_error& e) {
        throw InputError(std::string("malformed JSON: ") + e.what());
    }
    if (!j.is_object()) throw InputError("instance must be a JSON object");
    if (!j.contains("space")) throw InputError("missing field: space");
    if (!j.contains("points")) throw InputError("missing field: points");

    Instance inst;
    inst.space = space_from_json(j.at("space"));

    const json& pts = j.at("points");
    if (!pts.is_array() || pts.empty()) throw InputError("points must be a nonempty array");
    inst.points.reserve(pts.size());
    for (std::size_t i = 0; i < pts.size(); ++i) {
        const json& pj = pts[i];
        if (!pj.is_object() || !pj.contains("locations") || !pj.contains("probs"))
            throw InputError("point must have locations and probs" + at_point(i));
        const json& locs = pj.at("locations");
        const json& probs = pj.at("probs");
        if (!locs.is_array() || !probs.is_array() || locs.empty() || locs.size() != probs.size())
            throw InputError("locations and probs must have equal nonzero length" + at_point(i));

        UncertainPoint p;
        p.locations.reserve(locs.size());
        p.probs.reserve(probs.size());
        for (std::size_t k = 0; k < locs.size(); ++k)
            p.locations.push_back(location_from_json(locs[k], inst.space, i, k));
        double sum = 0.0;
        for (std::size_t k = 0; k < probs.size(); ++k) {
            if (!probs[k].is_number())
                throw InputError("probability must be a real" + at_point(i));
            const double v = probs[k].get<double>();
            if (!(v >= 0.0)) {
                std::ostringstream os;
                os << "negative probability at points[" << i << "].probs[" << k << "]";
                throw InputError(os.str());
            }
            p.probs.push_back(v);
            sum += v;
        }
        if (std::abs(sum - 1.0) > kProbSlack) {
            std::ostringstream os;
            os << "probability sum " << sum << " out of tolerance" << at_point(i);
            throw InputError(os.str());
        }
        inst.points.push_back(std::move(p));
    }
    return inst;
}

Instance parse_instance(std::istream& in) {
    return parse_instance(
        std::string(std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()));
}

std::string emit_instance(const Instance& instance) {
    json space;
    if (instance.space.kind == SpaceKind::euclidean) {
        space["kind"] = "euclidean";
        space["dim"] = instance.space.dim;
    } else {
        space["kind"] = "finite";
        space["matrix"] = instance.space.matrix;
    }
    json points = json::array();
    for (const auto& p : instance.points) {
        json locs = json::array();
        for (const auto& l : p.locations) locs.push_back(location_to_json(l));
        points.push_back(json{{"locations", std::move(locs)}, {"probs", p.probs}});
    }
    json j;
    j["space"] = std::move(space);
    j["points"] = std::move(points);
    return j.dump();
}

Instance generate_instance(int n, int z, SpaceKind kind, int dim_or_m, std::uint64_t seed) {
    if (n < 1 || z < 1) throw InputError("generate_instance: n and z must be >= 1");
    if (dim_or_m < 1) throw InputError("generate_instance: dim/m must be >= 1");

    Rng rng(seed);
    Instance inst;
    if (kind == SpaceKind::euclidean) {
        inst.space = Space::euclidean(dim_or_m);
    } else {
        const int m = dim_or_m;
        std::vector<std::pair<double, double>> embedded(m);
        for (auto& e : embedded) {
            e.first = rng.uniform01();
            e.second = rng.uniform01();
        }
        std::vector<std::vector<double>> matrix(m, std::vector<double>(m, 0.0));
        for (int i = 0; i < m; ++i)
            for (int j = i + 1; j < m; ++j) {
                const double dx = embedded[i].first - embedded[j].first;
                const double dy = embedded[i].second - embedded[j].second;
                matrix[i][j] = matrix[j][i] = std::sqrt(dx * dx + dy * dy);
            }
        inst.space = Space::finite(std::move(matrix));
    }

    inst.points.reserve(n);
    for (int i = 0; i < n; ++i) {
        UncertainPoint p;
        p.locations.reserve(z);
        for (int j = 0; j < z; ++j) {
            if (kind == SpaceKind::euclidean) {
                std::vector<double> coords(dim_or_m);
                for (auto& c : coords) c = rng.uniform01();
                p.locations.push_back(Point::euclidean(std::move(coords)));
            } else {
                p.locations.push_back(Point::finite(static_cast<int>(rng.below(dim_or_m))));
            }
        }
        std::vector<double> w(z);
        double sum = 0.0;
        for (auto& v : w) {
            v = rng.uniform01_pos();
            sum += v;
        }
        p.probs.resize(z);
        for (int j = 0; j < z; ++j) p.probs[j] = w[j] / sum;
        inst.points.push_back(std::move(p));
    }
    return inst;
}

std::uint64_t realization_count(const Instance& instance) {
    std::uint64_t total = 1;
    for (const auto& p : instance.points) {
        const std::uint64_t z = p.support();
        if (z != 0 && total > UINT64_MAX / z) return UINT64_MAX;
        total *= z;
    }
    return total;
}

std::vector<Realization> enumerate_realizations(const Instance& instance, std::uint64_t cap) {
    std::vector<Realization> out;
    out.reserve(static_cast<std::size_t>(std::min<std::uint64_t>(realization_count(instance), cap)));
    for_each_realization(instance, cap, [&](const Realization& r) { out.push_back(r); });
    return out;
}

namespace detail {
void throw_realization_cap(std::uint64_t total, std::uint64_t cap) {
    std::ostringstream os;
    os << "realization count " << total << " exceeds cap " << cap
       << "; use the exact evaluator instead";
    throw SizeError(os.str());
}
}  // namespace detail

std::uint64_t fnv1a64(std::string_view bytes) {
    std::uint64_t h = 0xcbf29ce484222325ull;
    for (unsigned char c : bytes) {
        h ^= c;
        h *= 0x100000001b3ull;
    }
    return h;
}

std::uint64_t splitmix64(std::uint64_t x) {
    x += 0x9e3779b97f4a7c15ull;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ull;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebull;
    return x ^ (x >> 31);
}

std::string digest_string(std::string_view bytes) {
    const std::uint64_t h = fnv1a64(bytes);
    static const char* hex = "0123456789abcdef";
    std::string s(16, '0');
    for (int i = 0; i < 16; ++i) s[15 - i] = hex[(h >> (4 * i)) & 0xf];
    return s;
}

std::string instance_digest(const Instance& instance) {
    return digest_string(emit_instance(instance));
}

}  // namespace ukc
