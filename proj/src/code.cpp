#include "lrc/code.hpp"

#include <algorithm>
#include <set>

namespace lrc {

// ---- Matrix ----------------------------------------------------------------

Matrix Matrix::from_rows(const std::vector<Word>& rows, std::size_t cols) {
    if (cols == npos) {
        require(!rows.empty(), Errc::RaggedRows, "cannot infer the length of an empty row list");
        cols = rows.front().size();
    }
    Matrix m(rows.size(), cols);
    for (std::size_t i = 0; i < rows.size(); ++i) {
        require(rows[i].size() == cols, Errc::RaggedRows,
                "row " + std::to_string(i) + " has length " + std::to_string(rows[i].size()) +
                    ", expected " + std::to_string(cols));
        std::copy(rows[i].begin(), rows[i].end(), m.data.begin() + i * cols);
    }
    return m;
}

std::vector<Word> Matrix::to_rows() const {
    std::vector<Word> out;
    out.reserve(rows);
    for (std::size_t i = 0; i < rows; ++i) out.push_back(row(i));
    return out;
}

Matrix Matrix::columns(const std::vector<std::size_t>& keep) const {
    Matrix out(rows, keep.size());
    for (std::size_t i = 0; i < rows; ++i)
        for (std::size_t j = 0; j < keep.size(); ++j) out.at(i, j) = at(i, keep[j]);
    return out;
}

Matrix Matrix::transposed() const {
    Matrix out(cols, rows);
    for (std::size_t i = 0; i < rows; ++i)
        for (std::size_t j = 0; j < cols; ++j) out.at(j, i) = at(i, j);
    return out;
}

Echelon rref(const Field& F, Matrix m) {
    std::vector<std::size_t> pivots;
    std::size_t r = 0;
    for (std::size_t c = 0; c < m.cols && r < m.rows; ++c) {
        std::size_t piv = r;
        while (piv < m.rows && m.at(piv, c) == 0) ++piv;
        if (piv == m.rows) continue;
        if (piv != r)
            for (std::size_t j = 0; j < m.cols; ++j) std::swap(m.at(piv, j), m.at(r, j));
        const Elem s = F.inv(m.at(r, c));
        for (std::size_t j = c; j < m.cols; ++j) m.at(r, j) = F.mul(m.at(r, j), s);
        for (std::size_t i = 0; i < m.rows; ++i) {
            if (i == r) continue;
            const Elem f = m.at(i, c);
            if (!f) continue;
            for (std::size_t j = c; j < m.cols; ++j)
                if (m.at(r, j)) m.at(i, j) = F.sub(m.at(i, j), F.mul(f, m.at(r, j)));
        }
        pivots.push_back(c);
        ++r;
    }
    m.data.resize(r * m.cols);
    m.rows = r;
    return {std::move(m), std::move(pivots)};
}

std::size_t rank(const Field& F, const Matrix& m) { return rref(F, m).rank(); }

Matrix null_space(const Field& F, const Matrix& m) {
    Echelon e = rref(F, m);
    const std::size_t n = m.cols;
    std::vector<bool> is_pivot(n, false);
    for (auto p : e.pivots) is_pivot[p] = true;
    Matrix out(n - e.rank(), n);
    std::size_t row = 0;
    for (std::size_t f = 0; f < n; ++f) {
        if (is_pivot[f]) continue;
        out.at(row, f) = 1;
        for (std::size_t r = 0; r < e.rank(); ++r) out.at(row, e.pivots[r]) = F.neg(e.m.at(r, f));
        ++row;
    }
    return rref(F, std::move(out)).m;
}

// ---- LinearCode --------------------------------------------------------------

LinearCode::LinearCode(FieldPtr field, std::size_t n, Echelon e)
    : field_(std::move(field)), n_(n), gen_(std::move(e.m)), pivots_(std::move(e.pivots)) {}

LinearCode LinearCode::from_generator(FieldPtr field, const Matrix& gen) {
    require(field != nullptr, Errc::BadParameters, "code without a field");
    for (Elem v : gen.data)
        require(v < field->order(), Errc::FieldMismatch,
                std::to_string(v) + " is not an element of " + field->name());
    const std::size_t n = gen.cols;
    Echelon e = rref(*field, gen);
    return LinearCode(std::move(field), n, std::move(e));
}

LinearCode LinearCode::from_generator(FieldPtr field, const std::vector<Word>& rows, std::size_t n) {
    return from_generator(std::move(field), Matrix::from_rows(rows, n));
}

LinearCode LinearCode::from_parity_check(FieldPtr field, const std::vector<Word>& rows, std::size_t n) {
    Matrix h = Matrix::from_rows(rows, n);
    for (Elem v : h.data)
        require(v < field->order(), Errc::FieldMismatch,
                std::to_string(v) + " is not an element of " + field->name());
    return from_generator(field, null_space(*field, h));
}

LinearCode LinearCode::zero_code(FieldPtr field, std::size_t n) { return from_generator(std::move(field), Matrix(0, n)); }

LinearCode LinearCode::full_space(FieldPtr field, std::size_t n) {
    Matrix id(n, n);
    for (std::size_t i = 0; i < n; ++i) id.at(i, i) = 1;
    return from_generator(std::move(field), id);
}

Matrix LinearCode::parity_check() const {
    // Read the dual straight off the systematic form: for free column f the vector with
    // 1 at f and -G[r][f] at pivot r.
    const Field& F = *field_;
    std::vector<bool> is_pivot(n_, false);
    for (auto p : pivots_) is_pivot[p] = true;
    Matrix h(n_ - dimension(), n_);
    std::size_t row = 0;
    for (std::size_t f = 0; f < n_; ++f) {
        if (is_pivot[f]) continue;
        h.at(row, f) = 1;
        for (std::size_t r = 0; r < pivots_.size(); ++r) h.at(row, pivots_[r]) = F.neg(gen_.at(r, f));
        ++row;
    }
    return h;
}

LinearCode LinearCode::with_label(std::string label) const {
    LinearCode c = *this;
    c.label_ = std::move(label);
    return c;
}

bool LinearCode::is_shift_invariant() const {
    for (std::size_t i = 0; i < dimension(); ++i) {
        Word w(n_);
        for (std::size_t j = 0; j < n_; ++j) w[(j + 1) % n_] = gen_.at(i, j);
        if (!contains(w)) return false;
    }
    return true;
}

LinearCode LinearCode::mark_cyclic() const {
    require(is_shift_invariant(), Errc::Internal, "code is not invariant under the cyclic shift");
    LinearCode c = *this;
    c.cyclic_ = true;
    return c;
}

Word LinearCode::encode(const Word& message) const {
    require(message.size() == dimension(), Errc::BadParameters, "message length differs from k");
    const Field& F = *field_;
    Word w(n_, 0);
    for (std::size_t i = 0; i < message.size(); ++i) {
        if (!message[i]) continue;
        for (std::size_t j = 0; j < n_; ++j)
            if (gen_.at(i, j)) w[j] = F.add(w[j], F.mul(message[i], gen_.at(i, j)));
    }
    return w;
}

bool LinearCode::contains(const Word& word) const {
    if (word.size() != n_) return false;
    // In systematic form the message is the word restricted to the pivot columns.
    Word msg(dimension());
    for (std::size_t r = 0; r < pivots_.size(); ++r) msg[r] = word[pivots_[r]];
    return encode(msg) == word;
}

bool operator==(const LinearCode& a, const LinearCode& b) {
    return a.field_->same_as(*b.field_) && a.n_ == b.n_ && a.gen_ == b.gen_;
}

// ---- derived codes -----------------------------------------------------------

namespace {

std::vector<std::size_t> checked_set(const LinearCode& C, const std::vector<std::size_t>& T) {
    std::set<std::size_t> s;
    for (auto t : T) {
        require(t < C.length(), Errc::BadCoordinate,
                "coordinate " + std::to_string(t) + " outside [0, " + std::to_string(C.length()) + ")");
        require(s.insert(t).second, Errc::BadCoordinate, "coordinate " + std::to_string(t) + " repeated");
    }
    return {s.begin(), s.end()};
}

std::vector<std::size_t> complement(std::size_t n, const std::vector<std::size_t>& T) {
    std::vector<bool> drop(n, false);
    for (auto t : T) drop[t] = true;
    std::vector<std::size_t> keep;
    for (std::size_t j = 0; j < n; ++j)
        if (!drop[j]) keep.push_back(j);
    return keep;
}

}  // namespace

LinearCode dual(const LinearCode& C) {
    LinearCode D = LinearCode::from_generator(C.field(), C.parity_check());
    return C.is_cyclic() ? D.mark_cyclic() : D;
}

LinearCode puncture(const LinearCode& C, const std::vector<std::size_t>& T) {
    auto t = checked_set(C, T);
    return LinearCode::from_generator(C.field(), C.generator().columns(complement(C.length(), t)));
}

LinearCode shorten(const LinearCode& C, const std::vector<std::size_t>& T) {
    auto t = checked_set(C, T);
    const Field& F = *C.field();
    const Matrix& G = C.generator();
    // Messages m with (mG)_T = 0 form the null space of (G_T)^T.
    Matrix coeffs = null_space(F, G.columns(t).transposed());
    Matrix sub(coeffs.rows, C.length());
    for (std::size_t r = 0; r < coeffs.rows; ++r) {
        Word w = C.encode(coeffs.row(r));
        std::copy(w.begin(), w.end(), sub.data.begin() + r * C.length());
    }
    return LinearCode::from_generator(C.field(), sub.columns(complement(C.length(), t)));
}

LinearCode extend(const LinearCode& C) {
    const Field& F = *C.field();
    const std::size_t n = C.length();
    Matrix g(C.dimension(), n + 1);
    for (std::size_t i = 0; i < C.dimension(); ++i) {
        Elem sum = 0;
        for (std::size_t j = 0; j < n; ++j) {
            g.at(i, j) = C.generator().at(i, j);
            sum = F.add(sum, g.at(i, j));
        }
        g.at(i, n) = F.neg(sum);
    }
    return LinearCode::from_generator(C.field(), g);
}

LinearCode augment(const LinearCode& C) {
    Word ones(C.length(), 1);
    require(!C.contains(ones), Errc::AllOneAlreadyPresent, "the all-one vector is already a codeword");
    auto rows = C.generator().to_rows();
    rows.push_back(ones);
    return LinearCode::from_generator(C.field(), rows, C.length());
}

std::size_t hamming_weight(const Word& w) {
    return static_cast<std::size_t>(std::count_if(w.begin(), w.end(), [](Elem x) { return x != 0; }));
}

std::vector<std::size_t> support_of(const Word& w) {
    std::vector<std::size_t> s;
    for (std::size_t i = 0; i < w.size(); ++i)
        if (w[i]) s.push_back(i);
    return s;
}

}  // namespace lrc
