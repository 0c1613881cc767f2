#include "lrc/geometry.hpp"

#include <algorithm>
#include <set>
#include <unordered_set>

#include "lrc/constructions.hpp"

namespace lrc {

Matrix PointSet::as_columns() const {
    Matrix M(dim, points.size());
    for (std::size_t j = 0; j < points.size(); ++j)
        for (std::size_t i = 0; i < dim; ++i) M.at(i, j) = points[j][i];
    return M;
}

namespace {

// Scales so the first nonzero coordinate is 1.
Word normalized(const Field& F, Word v) {
    for (Elem x : v) {
        if (x == 0) continue;
        const Elem s = F.inv(x);
        for (auto& y : v) y = F.mul(y, s);
        break;
    }
    return v;
}

bool well_formed(const PointSet& ps) {
    if (!ps.field) return false;
    for (const auto& p : ps.points) {
        if (p.size() != ps.dim) return false;
        for (Elem x : p)
            if (!ps.field->contains(x)) return false;
    }
    return true;
}

bool is_power_of_two(std::uint64_t x) { return x && !(x & (x - 1)); }

std::uint32_t log2_exact(std::uint64_t x) {
    std::uint32_t e = 0;
    while ((std::uint64_t{1} << e) < x) ++e;
    return e;
}

}  // namespace

bool points_distinct(const PointSet& ps) {
    if (!well_formed(ps)) return false;
    std::set<Word> seen;
    for (const auto& p : ps.points) {
        if (std::all_of(p.begin(), p.end(), [](Elem x) { return x == 0; })) return false;
        if (!seen.insert(normalized(*ps.field, p)).second) return false;
    }
    return true;
}

PointSet elliptic_quadric(std::uint64_t q) {
    require(q > 2, Errc::BadParameters, "the elliptic quadric needs q > 2");
    FieldPtr F = field_of_order(q);
    Elem a = 0;
    for (;; ++a) {
        require(a < q, Errc::Internal, "no rootless x^2 + x + a");
        bool rootless = true;
        for (Elem x = 0; x < q && rootless; ++x)
            rootless = F->add(F->add(F->mul(x, x), x), a) != 0;
        if (rootless) break;
    }
    PointSet ps{F, 4, {}};
    ps.points.push_back({0, 0, 1, 0});
    for (Elem x = 0; x < q; ++x)
        for (Elem y = 0; y < q; ++y) {
            const Elem z = F->add(F->add(F->mul(x, x), F->mul(x, y)), F->mul(a, F->mul(y, y)));
            ps.points.push_back({x, y, z, 1});
        }
    return ps;
}

PointSet tits_ovoid(std::uint64_t q) {
    const std::uint32_t m = log2_exact(q);
    require(is_power_of_two(q) && m % 2 == 1 && m >= 3, Errc::WrongFieldForm,
            "the Tits ovoid needs q = 2^(2e+1) with e >= 1, got q = " + std::to_string(q));
    FieldPtr F = field_of_order(q);
    const std::int64_t s = std::int64_t{1} << ((m - 1) / 2 + 1);
    PointSet ps{F, 4, {}};
    ps.points.push_back({0, 0, 1, 0});
    for (Elem x = 0; x < q; ++x)
        for (Elem y = 0; y < q; ++y) {
            const Elem z = F->add(F->add(F->pow(x, s), F->mul(x, y)), F->pow(y, s + 2));
            ps.points.push_back({x, y, z, 1});
        }
    return ps;
}

bool is_ovoid(const PointSet& ps) {
    if (!well_formed(ps) || ps.dim != 4) return false;
    const Field& F = *ps.field;
    const std::uint64_t q = F.order();
    if (ps.size() != q * q + 1 || !points_distinct(ps)) return false;
    auto key = [q](const Word& w) {
        std::uint64_t k = 0;
        for (Elem x : w) k = k * q + x;
        return k;
    };
    std::unordered_set<std::uint64_t> members;
    for (const auto& p : ps.points) members.insert(key(normalized(F, p)));
    // Three points are dependent exactly when the third lies on the line through the
    // other two, i.e. is a multiple of a + t b for some t != 0.
    const std::size_t n = ps.size();
    Word v(4);
    for (std::size_t a = 0; a < n; ++a)
        for (std::size_t b = a + 1; b < n; ++b)
            for (Elem t = 1; t < q; ++t) {
                for (std::size_t i = 0; i < 4; ++i) v[i] = F.add(ps.points[a][i], F.mul(t, ps.points[b][i]));
                if (members.count(key(normalized(F, v)))) return false;
            }
    return true;
}

LinearCode ovoid_code(const PointSet& ps) {
    require(is_ovoid(ps), Errc::NotAnOvoid, "the point set is not an ovoid");
    const std::size_t q = ps.field->order();
    LinearCode C = LinearCode::from_generator(ps.field, ps.as_columns()).with_label("C_o(" + std::to_string(q) + ")");
    assert_parameters(C, q * q + 1, 4, q * q - q, C.label());
    return C;
}

PointSet denniston_arc(std::uint64_t q, std::uint64_t h) {
    const std::uint32_t m = log2_exact(q);
    const std::uint32_t i = log2_exact(h);
    require(is_power_of_two(q) && m >= 3, Errc::BadParameters, "Denniston arcs need q = 2^m with m >= 3");
    require(is_power_of_two(h) && i >= 2 && i < m, Errc::BadParameters,
            "Denniston arcs need h = 2^i with 2 <= i < m, got h = " + std::to_string(h));
    FieldPtr F = field_of_order(q);
    Elem c = 1;
    while (absolute_trace(*F, c) != 1) ++c;
    PointSet ps{F, 3, {}};
    for (Elem x = 0; x < q; ++x)
        for (Elem y = 0; y < q; ++y) {
            const Elem v = F->add(F->add(F->mul(x, x), F->mul(x, y)), F->mul(c, F->mul(y, y)));
            if (v < h) ps.points.push_back({x, y, 1});
        }
    if (ps.size() != h * q + h - q) fail(Errc::Internal, "Denniston arc has the wrong size");
    return ps;
}

bool is_maximal_arc(const PointSet& ps, std::uint64_t h) {
    if (!well_formed(ps) || ps.dim != 3) return false;
    const Field& F = *ps.field;
    const std::uint64_t q = F.order();
    if (h < 1 || ps.size() != h * q + h - q || !points_distinct(ps)) return false;
    // Lines of PG(2, q) are the normalized nonzero triples (a, b, c).
    const Matrix lines = projective_points(ps.field, 3);
    for (std::size_t l = 0; l < lines.cols; ++l) {
        std::uint64_t hits = 0;
        for (const auto& p : ps.points) {
            Elem s = 0;
            for (std::size_t i = 0; i < 3; ++i) s = F.add(s, F.mul(lines.at(i, l), p[i]));
            if (s == 0) ++hits;
        }
        if (hits != 0 && hits != h) return false;
    }
    return true;
}

LinearCode arc_code(const PointSet& ps) {
    require(ps.field != nullptr, Errc::NotMaximalArc, "point set has no field");
    const std::uint64_t q = ps.field->order();
    const std::uint64_t n = ps.size();
    require((n + q) % (q + 1) == 0, Errc::NotMaximalArc, "size " + std::to_string(n) + " is not hq + h - q");
    const std::uint64_t h = (n + q) / (q + 1);
    require(is_maximal_arc(ps, h), Errc::NotMaximalArc, "some line meets the set in neither 0 nor h points");
    LinearCode C = LinearCode::from_generator(ps.field, ps.as_columns())
                       .with_label("C_A(" + std::to_string(q) + "," + std::to_string(h) + ")");
    assert_parameters(C, n, 3, n - h, C.label());
    return C;
}

}  // namespace lrc
