#include "lrc/io.hpp"

#include <fstream>
#include <limits>
#include <sstream>

namespace lrc {

Json big_json(const BigInt& x) {
    if (x >= 0 && x <= std::numeric_limits<std::uint64_t>::max()) return x.convert_to<std::uint64_t>();
    if (x < 0 && x >= std::numeric_limits<std::int64_t>::min()) return x.convert_to<std::int64_t>();
    return x.str();
}

Json field_json(const Field& F) {
    Json j;
    j["p"] = F.characteristic();
    j["m"] = F.prime_degree();
    j["q"] = F.order();
    j["modulus"] = F.modulus();
    if (F.is_tower()) j["tower_base"] = field_json(*F.base());
    return j;
}

Json weight_distribution_json(const WeightDistribution& wd) {
    Json a = Json::array();
    for (const auto& c : wd.counts) a.push_back(big_json(c));
    return a;
}

Json locality_json(const LocalityReport& rep) {
    Json j;
    j["n"] = rep.n;
    j["k"] = rep.k;
    j["d_perp"] = rep.d_perp;
    j["r_min"] = rep.r_min;
    j["w_star"] = rep.w_star;
    j["is_dperp_minus_1"] = rep.is_dperp_minus_1;
    j["cyclic_fast_path"] = rep.cyclic_fast_path;
    j["method"] = method_name(rep.method);
    Json cov = Json::object();
    for (const auto& [w, coords] : rep.coverage_by_weight) cov[std::to_string(w)] = coords;
    j["coverage_by_weight"] = cov;
    j["repair_options"] = rep.repair_options;
    return j;
}

Json bounds_json(const BoundsReport& b) {
    Json j;
    j["singleton_like_rhs"] = b.singleton_like_rhs;
    j["d_optimal"] = b.d_optimal;
    j["almost_d_optimal"] = b.almost_d_optimal;
    j["cm_rhs_ub"] = b.cm_rhs_ub;
    j["k_optimal_certified"] = b.k_optimal_certified;
    Json terms = Json::array();
    for (const auto& t : b.k_opt_components)
        terms.push_back({{"t", t.t}, {"n_prime", t.n_prime}, {"k_opt", t.k_opt}, {"bound", t.bound}, {"value", t.value}});
    j["k_opt_components"] = terms;
    return j;
}

Json design_json(const DesignReport& d) {
    Json j;
    j["n"] = d.n;
    j["block_size"] = d.block_size;
    j["block_count"] = d.blocks.size();
    Json tl = Json::object();
    for (const auto& [t, lambda] : d.t_lambda) tl[std::to_string(t)] = lambda;
    j["t_lambda"] = tl;
    j["is_steiner"] = d.is_steiner;
    j["blocks"] = d.blocks;
    return j;
}

Json point_set_json(const PointSet& ps) {
    Json j;
    j["field"] = field_json(*ps.field);
    j["points"] = ps.points;
    return j;
}

Json oval_json(const OvalPolynomial& f) {
    Json j;
    j["field"] = field_json(*f.field);
    j["family"] = oval_family_name(f.family);
    if (f.family == OvalFamily::Translation) j["h"] = f.param;
    j["coefficients"] = f.poly.coeffs();
    j["poly"] = f.poly.to_string();
    return j;
}

void write_matrix(std::ostream& out, const LinearCode& C) {
    // Readers rebuild the flat field of order q, so tower encodings would not round-trip.
    require(!C.field()->is_tower(), Errc::WrongFieldForm, "matrix files hold codes over the flat field of order q");
    const Matrix& G = C.generator();
    out << C.field()->order() << ' ' << C.length() << ' ' << C.dimension() << '\n';
    for (std::size_t i = 0; i < G.rows; ++i) {
        for (std::size_t j = 0; j < G.cols; ++j) out << (j ? " " : "") << G.at(i, j);
        out << '\n';
    }
}

LinearCode read_matrix(std::istream& in) {
    std::uint64_t q = 0, n = 0, k = 0;
    require(static_cast<bool>(in >> q >> n >> k), Errc::ParseError, "expected a header line \"q n k\"");
    require(k <= n, Errc::ParseError, "k exceeds n in the header");
    FieldPtr F;
    try {
        F = field_of_order(q);
    } catch (const Error& e) {
        if (e.is_cap()) throw;
        fail(Errc::ParseError, "q = " + std::to_string(q) + " is not a prime power");
    }
    std::vector<Word> rows(k, Word(n));
    for (std::uint64_t i = 0; i < k; ++i)
        for (std::uint64_t j = 0; j < n; ++j) {
            std::uint64_t v = 0;
            require(static_cast<bool>(in >> v), Errc::ParseError,
                    "row " + std::to_string(i + 1) + " has fewer than " + std::to_string(n) + " entries");
            require(v < q, Errc::ParseError, "entry " + std::to_string(v) + " is not an element of GF(" + std::to_string(q) + ")");
            rows[i][j] = static_cast<Elem>(v);
        }
    std::string extra;
    require(!(in >> extra), Errc::ParseError, "trailing data after " + std::to_string(k) + " rows");
    LinearCode C = k ? LinearCode::from_generator(F, rows, n) : LinearCode::zero_code(F, n);
    require(C.dimension() == k, Errc::ParseError, "the rows are linearly dependent");
    return C;
}

void write_matrix_file(const std::string& path, const LinearCode& C) {
    std::ofstream out(path);
    require(static_cast<bool>(out), Errc::ParseError, "cannot open " + path + " for writing");
    write_matrix(out, C);
    require(static_cast<bool>(out), Errc::ParseError, "failed writing " + path);
}

LinearCode read_matrix_file(const std::string& path) {
    std::ifstream in(path);
    require(static_cast<bool>(in), Errc::ParseError, "cannot open " + path);
    return read_matrix(in);
}

}  // namespace lrc
