#include "locring/verify.hpp"

namespace locring {

Matrix::Matrix(Field field, std::size_t rows, std::size_t cols)
    : field_(field), rows_(rows), cols_(cols), entries_(rows * cols, field.zero()) {}

void Matrix::set(std::size_t r, std::size_t c, const Element& value) {
    if (!(value.field() == field_)) raise(ErrorKind::DescriptorMismatch, "matrix entry not in " + field_.name());
    entries_[r * cols_ + c] = value;
}

std::vector<Element> Matrix::apply(const std::vector<Element>& v) const {
    if (v.size() != cols_) raise(ErrorKind::InvalidArgument, "vector length does not match the column count");
    std::vector<Element> out(rows_, field_.zero());
    for (std::size_t r = 0; r < rows_; ++r)
        for (std::size_t c = 0; c < cols_; ++c)
            if (!at(r, c).is_zero()) out[r] += at(r, c) * v[c];
    return out;
}

Matrix Matrix::identity(const Field& field, std::size_t n) {
    Matrix m(field, n, n);
    for (std::size_t i = 0; i < n; ++i) m.set(i, i, field.one());
    return m;
}

bool Matrix::operator==(const Matrix& rhs) const {
    return field_ == rhs.field_ && rows_ == rhs.rows_ && cols_ == rhs.cols_ && entries_ == rhs.entries_;
}

std::string Matrix::to_string() const {
    std::string s = "[";
    for (std::size_t r = 0; r < rows_; ++r) {
        s += r ? ",[" : "[";
        for (std::size_t c = 0; c < cols_; ++c) s += (c ? "," : "") + at(r, c).to_string();
        s += "]";
    }
    return s + "]";
}

Matrix morphism_matrix(const StabilizingMorphism& f) {
    const Field& k = f.source().field();
    const Poly& m2 = f.target().modulus();
    const std::size_t src_dim = f.source().dimension();
    const std::size_t dst_dim = f.target().dimension();

    if (f.sigma().acts_trivially_on(k)) {
        Matrix m(k, dst_dim, src_dim);
        Poly img = Poly::constant(k.one());  // q^i
        for (std::size_t i = 0; i < src_dim; ++i) {
            for (std::size_t r = 0; r < dst_dim; ++r) m.set(r, i, img.coeff(r));
            img = mulmod(img, f.q_image(), m2);
        }
        return m;
    }

    // Semilinear over K, linear over F_p.
    const Field fp = k.prime_subfield();
    const auto deg = static_cast<std::size_t>(k.degree_over_prime());
    Matrix m(fp, dst_dim * deg, src_dim * deg);
    const Element sigma_g = apply_automorphism(f.sigma(), k.generator());
    Poly x_power = Poly::constant(k.one());
    for (std::size_t i = 0; i < src_dim; ++i) {
        Element g_power = k.one();
        for (std::size_t j = 0; j < deg; ++j) {
            const Poly img = x_power * g_power;
            for (std::size_t r = 0; r < dst_dim; ++r) {
                const auto coords = img.coeff(r).prime_coordinates();
                for (std::size_t t = 0; t < deg; ++t) m.set(r * deg + t, i * deg + j, coords[t]);
            }
            g_power *= sigma_g;
        }
        x_power = mulmod(x_power, f.q_image(), m2);
    }
    return m;
}

namespace {

/// Reduced row echelon form in place; returns the pivot column of each row.
std::vector<std::size_t> rref(std::vector<std::vector<Element>>& a, std::size_t cols) {
    std::vector<std::size_t> pivots;
    std::size_t row = 0;
    for (std::size_t c = 0; c < cols && row < a.size(); ++c) {
        std::size_t p = row;
        while (p < a.size() && a[p][c].is_zero()) ++p;
        if (p == a.size()) continue;
        std::swap(a[row], a[p]);
        const Element inv = a[row][c].inverse();
        for (auto& x : a[row]) x *= inv;
        for (std::size_t r = 0; r < a.size(); ++r) {
            if (r == row || a[r][c].is_zero()) continue;
            const Element factor = a[r][c];
            for (std::size_t j = c; j < cols; ++j) a[r][j] -= factor * a[row][j];
        }
        pivots.push_back(c);
        ++row;
    }
    return pivots;
}

std::vector<std::vector<Element>> rows_of(const Matrix& m) {
    std::vector<std::vector<Element>> a(m.rows());
    for (std::size_t r = 0; r < m.rows(); ++r)
        for (std::size_t c = 0; c < m.cols(); ++c) a[r].push_back(m.at(r, c));
    return a;
}

}  // namespace

std::vector<std::vector<Element>> kernel_basis(const Matrix& m) {
    auto a = rows_of(m);
    const auto pivots = rref(a, m.cols());
    std::vector<bool> is_pivot(m.cols(), false);
    for (auto c : pivots) is_pivot[c] = true;

    std::vector<std::vector<Element>> basis;
    for (std::size_t free = 0; free < m.cols(); ++free) {
        if (is_pivot[free]) continue;
        std::vector<Element> v(m.cols(), m.field().zero());
        v[free] = m.field().one();
        for (std::size_t r = 0; r < pivots.size(); ++r) v[pivots[r]] = -a[r][free];
        basis.push_back(std::move(v));
    }
    return basis;
}

std::size_t rank(const Matrix& m) {
    auto a = rows_of(m);
    return rref(a, m.cols()).size();
}

bool certify_isomorphism(const StabilizingMorphism& f) {
    if (f.source().dimension() != f.target().dimension()) return false;
    return kernel_basis(morphism_matrix(f)).empty();
}

MorphismLawCheck exhaustive_morphism_check(const StabilizingMorphism& f) {
    const auto size = f.source().size();
    constexpr std::uint64_t limit = 1024;
    if (!size || *size > limit)
        raise(ErrorKind::TooLarge, f.source().to_string() + " has more than 2^10 elements");

    std::vector<QuotientElement> elems;
    std::vector<QuotientElement> images;
    for (std::uint64_t i = 0; i < *size; ++i) {
        elems.push_back(f.source().element_at(i));
        images.push_back(f(elems.back()));
    }

    MorphismLawCheck out;
    auto violated = [&](const char* law, std::uint64_t i, std::uint64_t j) {
        out.ok = false;
        out.law = law;
        out.witness.emplace(elems[i], elems[j]);
        return out;
    };
    for (std::uint64_t i = 0; i < *size; ++i) {
        for (std::uint64_t j = i; j < *size; ++j) {
            const std::uint64_t sum = (elems[i] + elems[j]).rep().index();
            if (!(images[sum] == images[i] + images[j])) return violated("additive", i, j);
            const std::uint64_t prod = (elems[i] * elems[j]).rep().index();
            if (!(images[prod] == images[i] * images[j])) return violated("multiplicative", i, j);
        }
    }
    return out;
}

}  // namespace locring
