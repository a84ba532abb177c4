#pragma once

// Exact rational linear algebra on tensor products of based spaces.
//
// A MultiLinMap is a dense matrix whose rows are indexed by the basis of
// the codomain tensor product and whose columns are indexed by the basis of
// the domain tensor product. Tensor bases are flattened row-major: the basis
// tuple (i1, ..., ik) over factor dims (d1, ..., dk) sits at
// i1*d2*...*dk + i2*d3*...*dk + ... + ik.

#include <gmpxx.h>

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace crossprod {

class Scalar {
public:
    Scalar() = default;
    Scalar(long value) : value_(value) {}  // NOLINT(google-explicit-constructor)
    Scalar(long numerator, long denominator);
    explicit Scalar(mpq_class value);

    // Accepts "n", "-n", "p/q" (q > 0 after sign normalization, q != 0).
    static Scalar parse(std::string_view text);

    const mpq_class& value() const noexcept { return value_; }
    bool is_zero() const noexcept { return sgn(value_) == 0; }
    bool is_integer() const noexcept { return value_.get_den() == 1; }
    // gcd(|num|, den) == 1 and den > 0.
    bool is_canonical() const;
    std::optional<long> as_long() const;

    // Shortest canonical form: "n" for integers, "p/q" otherwise.
    std::string to_string() const;

    Scalar& operator+=(const Scalar& other);
    Scalar& operator-=(const Scalar& other);
    Scalar& operator*=(const Scalar& other);
    Scalar& operator/=(const Scalar& other);

    friend Scalar operator+(Scalar a, const Scalar& b) { return a += b; }
    friend Scalar operator-(Scalar a, const Scalar& b) { return a -= b; }
    friend Scalar operator*(Scalar a, const Scalar& b) { return a *= b; }
    friend Scalar operator/(Scalar a, const Scalar& b) { return a /= b; }
    Scalar operator-() const { return Scalar(mpq_class(-value_)); }

    friend bool operator==(const Scalar& a, const Scalar& b) { return a.value_ == b.value_; }

private:
    mpq_class value_;
};

using Vector = std::vector<Scalar>;

// A based finite-dimensional space: a name plus one distinct label per basis vector.
class Space {
public:
    Space(std::string name, std::vector<std::string> labels);

    // Labels "e0", "e1", ...
    static Space with_dim(std::string name, std::size_t dim);
    // The ground field as a one-dimensional space, basis label "1".
    static Space ground();

    const std::string& name() const noexcept { return name_; }
    std::size_t dim() const noexcept { return labels_.size(); }
    const std::vector<std::string>& labels() const noexcept { return labels_; }
    const std::string& label(std::size_t i) const { return labels_.at(i); }
    std::optional<std::size_t> index_of(std::string_view label) const;

    bool operator==(const Space&) const = default;

private:
    std::string name_;
    std::vector<std::string> labels_;
};

// Tensor product space "X⊗Y" with labels "x⊗y", ordered row-major.
Space tensor(const Space& left, const Space& right);

using Factors = std::vector<Space>;

std::vector<std::size_t> dims_of(const Factors& factors);
std::size_t total_dim(const Factors& factors);
Factors concat(Factors left, const Factors& right);

std::size_t flatten(std::span<const std::size_t> index, std::span<const std::size_t> dims);
std::vector<std::size_t> unflatten(std::size_t flat, std::span<const std::size_t> dims);

// "(x,y,z)" built from the labels of each factor.
std::string basis_tuple(const Factors& factors, std::size_t flat);

class MultiLinMap {
public:
    // Zero map.
    MultiLinMap(Factors domain, Factors codomain);
    // Entries row-major, rows = total codomain dim, cols = total domain dim.
    MultiLinMap(Factors domain, Factors codomain, std::vector<Scalar> entries);

    static MultiLinMap identity(const Factors& factors);
    static MultiLinMap identity(const Space& space) { return identity(Factors{space}); }

    const Factors& domain() const noexcept { return domain_; }
    const Factors& codomain() const noexcept { return codomain_; }
    std::size_t rows() const noexcept { return rows_; }
    std::size_t cols() const noexcept { return cols_; }

    const Scalar& at(std::size_t row, std::size_t col) const { return entries_[row * cols_ + col]; }
    void set(std::size_t row, std::size_t col, Scalar value);
    const std::vector<Scalar>& entries() const noexcept { return entries_; }
    Vector column(std::size_t col) const;

    // Same matrix, new factor split. Totals must agree.
    MultiLinMap with_factors(Factors domain, Factors codomain) const;

    friend MultiLinMap operator*(const Scalar& s, const MultiLinMap& f);
    friend MultiLinMap operator+(const MultiLinMap& f, const MultiLinMap& g);

private:
    Factors domain_;
    Factors codomain_;
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<Scalar> entries_;
};

MultiLinMap kron(const MultiLinMap& f, const MultiLinMap& g);
// kron(f1, kron(f2, ...)) over a nonempty list.
MultiLinMap kron_all(std::span<const MultiLinMap> maps);

// f ∘ g. Only total dimensions must agree; the result's domain is g.domain()
// and its codomain is f.codomain(). Throws DimensionMismatch otherwise.
MultiLinMap compose(const MultiLinMap& f, const MultiLinMap& g);
// maps[0] ∘ maps[1] ∘ ... ∘ maps[n-1].
MultiLinMap compose_all(std::span<const MultiLinMap> maps);

// e_i ⊗ e_j ↦ e_j ⊗ e_i, domain [x, y], codomain [y, x].
MultiLinMap swap(const Space& x, const Space& y);
MultiLinMap swap(std::size_t m, std::size_t n);

// The map k → X sending 1 to `point`.
MultiLinMap point_embed(const Space& space, const Vector& point);

Vector apply(const MultiLinMap& f, const Vector& v);
Vector tensor_vector(const Vector& u, const Vector& w);
Vector basis_vector(std::size_t dim, std::size_t i);

// Same total domain/codomain dims and identical entries.
bool maps_equal(const MultiLinMap& f, const MultiLinMap& g);

// First (column, row) where f and g differ, scanning columns in increasing
// order and rows within each column. Throws DimensionMismatch on shape mismatch.
std::optional<std::pair<std::size_t, std::size_t>> first_difference(const MultiLinMap& f,
                                                                    const MultiLinMap& g);

}  // namespace crossprod
