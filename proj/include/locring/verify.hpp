#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "locring/quotient.hpp"

namespace locring {

/// Dense row-major matrix over one field.
class Matrix {
   public:
    Matrix(Field field, std::size_t rows, std::size_t cols);

    const Field& field() const noexcept { return field_; }
    std::size_t rows() const noexcept { return rows_; }
    std::size_t cols() const noexcept { return cols_; }
    const Element& at(std::size_t r, std::size_t c) const { return entries_[r * cols_ + c]; }
    void set(std::size_t r, std::size_t c, const Element& value);

    std::vector<Element> apply(const std::vector<Element>& v) const;
    static Matrix identity(const Field& field, std::size_t n);

    bool operator==(const Matrix& rhs) const;
    std::string to_string() const;

   private:
    Field field_;
    std::size_t rows_;
    std::size_t cols_;
    std::vector<Element> entries_;
};

/// Columns are the images of the source basis. When sigma fixes K the basis
/// is X^i over K; otherwise K is finite and the matrix is over the prime
/// subfield with basis g^j X^i (g the generator), ordered by (i, j).
Matrix morphism_matrix(const StabilizingMorphism& f);

/// Null space by exact Gauss-Jordan elimination; one vector per free column.
std::vector<std::vector<Element>> kernel_basis(const Matrix& m);
std::size_t rank(const Matrix& m);

/// Injective and equal dimensions.
bool certify_isomorphism(const StabilizingMorphism& f);

struct MorphismLawCheck {
    bool ok = true;
    std::string law;  // "additive" or "multiplicative" when violated
    std::optional<std::pair<QuotientElement, QuotientElement>> witness;
};

/// Every pair of source elements; sources above 2^10 elements are TooLarge.
MorphismLawCheck exhaustive_morphism_check(const StabilizingMorphism& f);

}  // namespace locring
