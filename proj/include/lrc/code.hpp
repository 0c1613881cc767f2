#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "lrc/gf.hpp"

namespace lrc {

using Word = std::vector<Elem>;

/// Dense row-major matrix of field elements.
struct Matrix {
    std::size_t rows = 0;
    std::size_t cols = 0;
    std::vector<Elem> data;

    Matrix() = default;
    Matrix(std::size_t r, std::size_t c) : rows(r), cols(c), data(r * c, 0) {}

    /// RaggedRows unless every row has `cols` entries; `cols` is taken from the first row
    /// when not given.
    static Matrix from_rows(const std::vector<Word>& rows, std::size_t cols = npos);

    Elem& at(std::size_t i, std::size_t j) { return data[i * cols + j]; }
    Elem at(std::size_t i, std::size_t j) const { return data[i * cols + j]; }
    Word row(std::size_t i) const { return Word(data.begin() + i * cols, data.begin() + (i + 1) * cols); }
    std::vector<Word> to_rows() const;
    Matrix columns(const std::vector<std::size_t>& keep) const;
    Matrix transposed() const;

    friend bool operator==(const Matrix&, const Matrix&) = default;

    static constexpr std::size_t npos = static_cast<std::size_t>(-1);
};

struct Echelon {
    Matrix m;                         // reduced row echelon form, zero rows dropped
    std::vector<std::size_t> pivots;  // pivot column of each row
    std::size_t rank() const { return pivots.size(); }
};

Echelon rref(const Field& F, Matrix m);
std::size_t rank(const Field& F, const Matrix& m);
/// Basis (as rows, in reduced echelon form) of {x : m x^T = 0}.
Matrix null_space(const Field& F, const Matrix& m);

/**
 * A linear [n, k] code over GF(q), held as a reduced-row-echelon generator matrix.
 * Two codes are equal when their fields, lengths and canonical generators agree.
 */
class LinearCode {
public:
    static LinearCode from_generator(FieldPtr field, const std::vector<Word>& rows,
                                     std::size_t n = Matrix::npos);
    static LinearCode from_generator(FieldPtr field, const Matrix& gen);
    static LinearCode from_parity_check(FieldPtr field, const std::vector<Word>& rows,
                                        std::size_t n = Matrix::npos);
    static LinearCode zero_code(FieldPtr field, std::size_t n);
    static LinearCode full_space(FieldPtr field, std::size_t n);

    const FieldPtr& field() const { return field_; }
    std::size_t length() const { return n_; }
    std::size_t dimension() const { return gen_.rows; }
    const Matrix& generator() const { return gen_; }
    const std::vector<std::size_t>& pivots() const { return pivots_; }
    /// Generator matrix of the dual code.
    Matrix parity_check() const;

    const std::string& label() const { return label_; }
    LinearCode with_label(std::string label) const;

    /// Set only by constructors that build the code from a generator polynomial (and kept
    /// by dual()); verified structurally by mark_cyclic().
    bool is_cyclic() const { return cyclic_; }
    LinearCode mark_cyclic() const;
    /// Direct test: the cyclic shift of every generator row stays in the code.
    bool is_shift_invariant() const;

    Word encode(const Word& message) const;
    bool contains(const Word& word) const;

    friend bool operator==(const LinearCode& a, const LinearCode& b);

private:
    LinearCode(FieldPtr field, std::size_t n, Echelon e);

    FieldPtr field_;
    std::size_t n_ = 0;
    Matrix gen_;
    std::vector<std::size_t> pivots_;
    std::string label_;
    bool cyclic_ = false;
};

LinearCode dual(const LinearCode& C);
/// Deletes the coordinates in T. BadCoordinate for out-of-range or repeated entries.
LinearCode puncture(const LinearCode& C, const std::vector<std::size_t>& T);
/// The subcode vanishing on T, then punctured on T.
LinearCode shorten(const LinearCode& C, const std::vector<std::size_t>& T);
/// Appends the negated coordinate sum to every codeword.
LinearCode extend(const LinearCode& C);
/// Adjoins the all-one vector. AllOneAlreadyPresent if it is already a codeword.
LinearCode augment(const LinearCode& C);

std::size_t hamming_weight(const Word& w);
std::vector<std::size_t> support_of(const Word& w);

}  // namespace lrc
