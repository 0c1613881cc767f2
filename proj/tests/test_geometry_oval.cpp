#include "doctest.h"

#include <set>

#include "lrc/error.hpp"
#include "lrc/geometry.hpp"
#include "lrc/oval.hpp"
#include "lrc/poly.hpp"
#include "lrc/weights.hpp"
#include "oracle.hpp"

using namespace lrc;

namespace {

// No three points collinear: every triple spans a plane.
bool no_three_collinear(const PointSet& ps) {
    const Field& F = *ps.field;
    for (std::size_t a = 0; a < ps.size(); ++a)
        for (std::size_t b = a + 1; b < ps.size(); ++b) {
            if (oracle::rank(F, {ps.points[a], ps.points[b]}) < 2) return false;
            for (std::size_t c = b + 1; c < ps.size(); ++c)
                if (oracle::rank(F, {ps.points[a], ps.points[b], ps.points[c]}) < 3) return false;
        }
    return true;
}

// Intersection sizes of every line of PG(2, q) with the set. Lines are dual points:
// each nonzero (a, b, c), taken up to scalars by requiring the first nonzero entry be 1.
std::multiset<std::size_t> line_intersections(const PointSet& ps) {
    const Field& F = *ps.field;
    const Elem q = F.order();
    std::multiset<std::size_t> out;
    for (Elem a = 0; a < q; ++a)
        for (Elem b = 0; b < q; ++b)
            for (Elem c = 0; c < q; ++c) {
                const Elem first = a ? a : b ? b : c;
                if (first != 1) continue;
                std::size_t hits = 0;
                for (const auto& p : ps.points) hits += oracle::dot(F, {a, b, c}, p) == 0;
                out.insert(hits);
            }
    return out;
}

// The definition, applied literally: a permutation fixing 0 and 1 such that every
// x -> f(x) + u x with u != 0 takes each value in its image exactly twice.
bool oval_by_definition(const Field& F, const Poly& f) {
    const Elem q = F.order();
    if (f.eval(0) != 0 || f.eval(1) != 1) return false;
    std::set<Elem> image;
    for (Elem x = 0; x < q; ++x) image.insert(f.eval(x));
    if (image.size() != q) return false;
    for (Elem u = 1; u < q; ++u) {
        std::map<Elem, int> count;
        for (Elem x = 0; x < q; ++x) ++count[F.add(f.eval(x), F.mul(u, x))];
        for (const auto& [y, c] : count)
            if (c != 2) return false;
    }
    return true;
}

Poly monomial(const FieldPtr& F, std::size_t e) { return Poly::monomial(F, 1, e); }

}  // namespace

TEST_CASE("elliptic quadrics are ovoids") {
    for (std::uint64_t q : {3, 4, 5, 7, 8}) {
        const auto ps = elliptic_quadric(q);
        CHECK(ps.size() == q * q + 1);
        CHECK(points_distinct(ps));
        CHECK(is_ovoid(ps));
        if (q <= 5) CHECK(no_three_collinear(ps));
    }
    CHECK_THROWS_AS(elliptic_quadric(2), Error);
}

TEST_CASE("ovoid codes") {
    const auto C = ovoid_code(elliptic_quadric(4));
    CHECK(C.length() == 17);
    CHECK(C.dimension() == 4);
    CHECK(oracle::weights(C) == oracle::dist(17, {{0, 1}, {12, 204}, {16, 51}}));
    for (std::uint64_t q : {3, 5}) {
        const auto D = ovoid_code(elliptic_quadric(q));
        const std::uint64_t n = q * q + 1;
        CHECK(oracle::weights(D) == oracle::dist(n, {{0, 1}, {q * q - q, (q * q - q) * (q * q + 1)}, {q * q, (q - 1) * (q * q + 1)}}));
    }
}

TEST_CASE("Tits ovoid") {
    const auto T = tits_ovoid(8);
    CHECK(T.size() == 65);
    CHECK(is_ovoid(T));
    const auto C = ovoid_code(T);
    CHECK(C.length() == 65);
    CHECK(C.dimension() == 4);
    CHECK(oracle::min_distance(C) == 56);
    CHECK_THROWS_AS(tits_ovoid(16), Error);
    CHECK_THROWS_AS(tits_ovoid(9), Error);
}

TEST_CASE("non-ovoids are rejected") {
    auto ps = elliptic_quadric(4);
    // Replace one point with a point on the line through two others.
    const Field& F = *ps.field;
    Word extra(4);
    for (std::size_t j = 0; j < 4; ++j) extra[j] = F.add(ps.points[0][j], ps.points[1][j]);
    ps.points.back() = extra;
    CHECK_FALSE(is_ovoid(ps));
    try {
        ovoid_code(ps);
        FAIL("expected NotAnOvoid");
    } catch (const Error& e) {
        CHECK(e.code() == Errc::NotAnOvoid);
    }
}

TEST_CASE("Denniston maximal arcs") {
    const auto A = denniston_arc(8, 4);
    CHECK(A.size() == 28);
    CHECK(is_maximal_arc(A, 4));
    const auto hits = line_intersections(A);
    CHECK(hits.size() == 73);
    for (auto h : hits) CHECK((h == 0 || h == 4));

    const auto C = arc_code(A);
    CHECK(C.length() == 28);
    CHECK(C.dimension() == 3);
    CHECK(oracle::weights(C) == oracle::dist(28, {{0, 1}, {24, 441}, {28, 70}}));

    for (auto [q, h] : std::vector<std::pair<std::uint64_t, std::uint64_t>>{{16, 4}, {16, 8}, {32, 4}}) {
        const auto B = denniston_arc(q, h);
        CHECK(B.size() == h * q + h - q);
        CHECK(is_maximal_arc(B, h));
    }
    CHECK_THROWS_AS(denniston_arc(8, 2), Error);
    CHECK_THROWS_AS(denniston_arc(8, 8), Error);
}

TEST_CASE("random point sets are not maximal arcs") {
    const auto F = field_of_order(8);
    std::mt19937_64 rng(21);
    std::uniform_int_distribution<Elem> pick(0, 7);
    for (int trial = 0; trial < 5; ++trial) {
        PointSet ps{F, 3, {}};
        std::set<Word> seen;
        while (ps.size() < 28) {
            Word p{pick(rng), pick(rng), 1};
            if (seen.insert(p).second) ps.points.push_back(p);
        }
        CHECK_FALSE(is_maximal_arc(ps, 4));
        CHECK_THROWS_AS(arc_code(ps), Error);
    }
}

TEST_CASE("oval polynomial test agrees with the definition") {
    const auto F8 = field_of_order(8);
    for (std::size_t e = 1; e < 8; ++e) CHECK(is_oval_polynomial(*F8, monomial(F8, e)) == oval_by_definition(*F8, monomial(F8, e)));
    CHECK(is_oval_polynomial(*F8, monomial(F8, 2)));
    CHECK(is_oval_polynomial(*F8, monomial(F8, 6)));
    CHECK_FALSE(is_oval_polynomial(*F8, monomial(F8, 3)));

    const auto F16 = field_of_order(16);
    for (std::size_t e = 1; e < 16; ++e)
        CHECK(is_oval_polynomial(*F16, monomial(F16, e)) == oval_by_definition(*F16, monomial(F16, e)));
}

TEST_CASE("oval families") {
    const auto t = oval_poly(OvalFamily::Translation, 8, 1);
    CHECK(t.poly == monomial(t.field, 2));
    CHECK(t.tag() == "translation(h=1)");
    CHECK(oval_poly(OvalFamily::Segre, 8).poly == monomial(t.field, 6));
    CHECK_THROWS_AS(oval_poly(OvalFamily::Segre, 16), Error);
    CHECK_THROWS_AS(oval_poly(OvalFamily::Translation, 16, 2), Error);
    CHECK(parse_oval_family("glynn2") == OvalFamily::Glynn2);
    CHECK_THROWS_AS(parse_oval_family("parabola"), Error);

    for (std::uint64_t q : {4, 8, 16, 32}) {
        const auto cat = oval_catalog(q);
        CHECK_FALSE(cat.empty());
        for (const auto& f : cat) CHECK(oval_by_definition(*f.field, f.poly));
    }
    const auto payne = oval_poly(OvalFamily::Payne, 32);
    CHECK(oval_by_definition(*payne.field, payne.poly));
}

TEST_CASE("oval-polynomial codes") {
    const auto x2 = oval_poly(OvalFamily::Translation, 8, 1);
    const auto x6 = oval_poly(OvalFamily::Segre, 8);
    for (const auto& f : {x2, x6}) {
        const auto B = code_Bf_bar(f);
        CHECK(B.length() == 11);
        CHECK(B.dimension() == 3);
        CHECK(oracle::weights(B) == oracle::dist(11, {{0, 1}, {8, 35}, {9, 280}, {10, 28}, {11, 168}}));

        const auto G = code_Gf(f);
        CHECK(G.length() == 9);
        CHECK(G.dimension() == 3);
        CHECK(oracle::weights(G) == oracle::dist(9, {{0, 1}, {6, 42}, {7, 126}, {8, 189}, {9, 154}}));

        const auto Gb = code_Gf_bar(f);
        CHECK(Gb.length() == 10);
        CHECK(Gb.dimension() == 3);
        CHECK(oracle::min_distance(Gb) == 7);
    }

    const auto F8 = field_of_order(8);
    try {
        code_Gf(user_oval_polynomial(monomial(F8, 3)));
        FAIL("expected HypothesisViolated");
    } catch (const Error& e) {
        CHECK(e.code() == Errc::HypothesisViolated);
    }
    // Even m is outside the hypotheses of the G codes.
    CHECK_THROWS_AS(code_Gf(oval_poly(OvalFamily::Translation, 16, 1)), Error);
}
