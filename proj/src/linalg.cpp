#include "crossprod/linalg.hpp"

#include "crossprod/errors.hpp"

#include <algorithm>
#include <set>

namespace crossprod {

// ---------------------------------------------------------------- Scalar

Scalar::Scalar(long numerator, long denominator) {
    if (denominator == 0) throw Error("zero denominator");
    value_ = mpq_class(numerator, denominator);
    value_.canonicalize();
}

Scalar::Scalar(mpq_class value) : value_(std::move(value)) { value_.canonicalize(); }

Scalar Scalar::parse(std::string_view text) {
    auto digits = [](std::string_view s, bool allow_sign) {
        if (allow_sign && !s.empty() && (s.front() == '-' || s.front() == '+')) s.remove_prefix(1);
        return !s.empty() && std::all_of(s.begin(), s.end(), [](char c) { return c >= '0' && c <= '9'; });
    };
    const auto slash = text.find('/');
    std::string_view num = text.substr(0, slash);
    std::string_view den = slash == std::string_view::npos ? std::string_view{"1"} : text.substr(slash + 1);
    if (!digits(num, true) || !digits(den, false)) {
        throw Error("malformed scalar '" + std::string(text) + "'");
    }
    mpz_class n(std::string(num.front() == '+' ? num.substr(1) : num), 10);
    mpz_class d(std::string(den), 10);
    if (d == 0) throw Error("zero denominator in scalar '" + std::string(text) + "'");
    return Scalar(mpq_class(n, d));
}

bool Scalar::is_canonical() const {
    if (sgn(value_.get_den()) <= 0) return false;
    mpz_class g;
    mpz_class num_abs = abs(value_.get_num());
    mpz_gcd(g.get_mpz_t(), num_abs.get_mpz_t(), value_.get_den_mpz_t());
    if (sgn(value_.get_num()) == 0) return value_.get_den() == 1;
    return g == 1;
}

std::optional<long> Scalar::as_long() const {
    if (!is_integer() || !value_.get_num().fits_slong_p()) return std::nullopt;
    return value_.get_num().get_si();
}

std::string Scalar::to_string() const {
    if (is_integer()) return value_.get_num().get_str();
    return value_.get_num().get_str() + "/" + value_.get_den().get_str();
}

Scalar& Scalar::operator+=(const Scalar& other) {
    value_ += other.value_;
    return *this;
}
Scalar& Scalar::operator-=(const Scalar& other) {
    value_ -= other.value_;
    return *this;
}
Scalar& Scalar::operator*=(const Scalar& other) {
    value_ *= other.value_;
    return *this;
}
Scalar& Scalar::operator/=(const Scalar& other) {
    if (other.is_zero()) throw Error("division by zero");
    value_ /= other.value_;
    return *this;
}

// ---------------------------------------------------------------- Space

Space::Space(std::string name, std::vector<std::string> labels)
    : name_(std::move(name)), labels_(std::move(labels)) {
    if (labels_.empty()) throw InvalidSpace("space '" + name_ + "' has dimension 0");
    std::set<std::string_view> seen;
    for (const auto& l : labels_) {
        if (!seen.insert(l).second) {
            throw InvalidSpace("space '" + name_ + "' repeats basis label '" + l + "'");
        }
    }
}

Space Space::with_dim(std::string name, std::size_t dim) {
    std::vector<std::string> labels;
    labels.reserve(dim);
    for (std::size_t i = 0; i < dim; ++i) labels.push_back("e" + std::to_string(i));
    return Space(std::move(name), std::move(labels));
}

Space Space::ground() { return Space("k", {"1"}); }

std::optional<std::size_t> Space::index_of(std::string_view label) const {
    auto it = std::find(labels_.begin(), labels_.end(), label);
    if (it == labels_.end()) return std::nullopt;
    return static_cast<std::size_t>(it - labels_.begin());
}

Space tensor(const Space& left, const Space& right) {
    std::vector<std::string> labels;
    labels.reserve(left.dim() * right.dim());
    for (const auto& a : left.labels())
        for (const auto& b : right.labels()) labels.push_back(a + "⊗" + b);
    return Space(left.name() + "⊗" + right.name(), std::move(labels));
}

std::vector<std::size_t> dims_of(const Factors& factors) {
    std::vector<std::size_t> dims;
    dims.reserve(factors.size());
    for (const auto& f : factors) dims.push_back(f.dim());
    return dims;
}

std::size_t total_dim(const Factors& factors) {
    std::size_t n = 1;
    for (const auto& f : factors) n *= f.dim();
    return n;
}

Factors concat(Factors left, const Factors& right) {
    left.insert(left.end(), right.begin(), right.end());
    return left;
}

std::size_t flatten(std::span<const std::size_t> index, std::span<const std::size_t> dims) {
    if (index.size() != dims.size()) throw DimensionMismatch("index arity differs from factor count");
    std::size_t flat = 0;
    for (std::size_t k = 0; k < dims.size(); ++k) {
        if (index[k] >= dims[k]) throw DimensionMismatch("basis index out of range");
        flat = flat * dims[k] + index[k];
    }
    return flat;
}

std::vector<std::size_t> unflatten(std::size_t flat, std::span<const std::size_t> dims) {
    std::vector<std::size_t> index(dims.size());
    for (std::size_t k = dims.size(); k-- > 0;) {
        index[k] = flat % dims[k];
        flat /= dims[k];
    }
    if (flat != 0) throw DimensionMismatch("flat index out of range");
    return index;
}

std::string basis_tuple(const Factors& factors, std::size_t flat) {
    const auto dims = dims_of(factors);
    const auto index = unflatten(flat, dims);
    std::string out = "(";
    for (std::size_t k = 0; k < index.size(); ++k) {
        if (k) out += ",";
        out += factors[k].label(index[k]);
    }
    return out + ")";
}

// ---------------------------------------------------------------- MultiLinMap

MultiLinMap::MultiLinMap(Factors domain, Factors codomain)
    : domain_(std::move(domain)),
      codomain_(std::move(codomain)),
      rows_(total_dim(codomain_)),
      cols_(total_dim(domain_)),
      entries_(rows_ * cols_) {}

MultiLinMap::MultiLinMap(Factors domain, Factors codomain, std::vector<Scalar> entries)
    : domain_(std::move(domain)),
      codomain_(std::move(codomain)),
      rows_(total_dim(codomain_)),
      cols_(total_dim(domain_)),
      entries_(std::move(entries)) {
    if (entries_.size() != rows_ * cols_) {
        throw DimensionMismatch("matrix has " + std::to_string(entries_.size()) + " entries, expected " +
                                std::to_string(rows_) + "x" + std::to_string(cols_));
    }
}

MultiLinMap MultiLinMap::identity(const Factors& factors) {
    MultiLinMap id(factors, factors);
    for (std::size_t i = 0; i < id.rows_; ++i) id.entries_[i * id.cols_ + i] = Scalar(1);
    return id;
}

void MultiLinMap::set(std::size_t row, std::size_t col, Scalar value) {
    if (row >= rows_ || col >= cols_) throw DimensionMismatch("entry index out of range");
    entries_[row * cols_ + col] = std::move(value);
}

Vector MultiLinMap::column(std::size_t col) const {
    Vector out(rows_);
    for (std::size_t r = 0; r < rows_; ++r) out[r] = at(r, col);
    return out;
}

MultiLinMap MultiLinMap::with_factors(Factors domain, Factors codomain) const {
    if (total_dim(domain) != cols_ || total_dim(codomain) != rows_) {
        throw DimensionMismatch("refactoring changes total dimension");
    }
    return MultiLinMap(std::move(domain), std::move(codomain), entries_);
}

MultiLinMap operator*(const Scalar& s, const MultiLinMap& f) {
    MultiLinMap out = f;
    for (auto& e : out.entries_) e *= s;
    return out;
}

MultiLinMap operator+(const MultiLinMap& f, const MultiLinMap& g) {
    if (f.rows_ != g.rows_ || f.cols_ != g.cols_) throw DimensionMismatch("sum of maps of different shape");
    MultiLinMap out = f;
    for (std::size_t i = 0; i < out.entries_.size(); ++i) out.entries_[i] += g.entries_[i];
    return out;
}

MultiLinMap kron(const MultiLinMap& f, const MultiLinMap& g) {
    MultiLinMap out(concat(f.domain(), g.domain()), concat(f.codomain(), g.codomain()));
    const std::size_t gr = g.rows(), gc = g.cols();
    for (std::size_t rf = 0; rf < f.rows(); ++rf) {
        for (std::size_t cf = 0; cf < f.cols(); ++cf) {
            const Scalar& a = f.at(rf, cf);
            if (a.is_zero()) continue;
            for (std::size_t rg = 0; rg < gr; ++rg) {
                for (std::size_t cg = 0; cg < gc; ++cg) {
                    const Scalar& b = g.at(rg, cg);
                    if (b.is_zero()) continue;
                    out.set(rf * gr + rg, cf * gc + cg, a * b);
                }
            }
        }
    }
    return out;
}

MultiLinMap kron_all(std::span<const MultiLinMap> maps) {
    if (maps.empty()) throw DimensionMismatch("kron of an empty list");
    MultiLinMap out = maps.back();
    for (std::size_t i = maps.size() - 1; i-- > 0;) out = kron(maps[i], out);
    return out;
}

MultiLinMap compose(const MultiLinMap& f, const MultiLinMap& g) {
    if (f.cols() != g.rows()) {
        throw DimensionMismatch("cannot compose: inner dimensions " + std::to_string(f.cols()) + " and " +
                                std::to_string(g.rows()));
    }
    std::vector<Scalar> entries(f.rows() * g.cols());
    const std::size_t n = g.cols();
    for (std::size_t i = 0; i < f.rows(); ++i) {
        Scalar* row = entries.data() + i * n;
        for (std::size_t k = 0; k < f.cols(); ++k) {
            const Scalar& a = f.at(i, k);
            if (a.is_zero()) continue;
            for (std::size_t j = 0; j < n; ++j) {
                const Scalar& b = g.at(k, j);
                if (b.is_zero()) continue;
                row[j] += a * b;
            }
        }
    }
    return MultiLinMap(g.domain(), f.codomain(), std::move(entries));
}

MultiLinMap compose_all(std::span<const MultiLinMap> maps) {
    if (maps.empty()) throw DimensionMismatch("composition of an empty list");
    MultiLinMap out = maps.back();
    for (std::size_t i = maps.size() - 1; i-- > 0;) out = compose(maps[i], out);
    return out;
}

MultiLinMap swap(const Space& x, const Space& y) {
    MultiLinMap out({x, y}, {y, x});
    for (std::size_t i = 0; i < x.dim(); ++i)
        for (std::size_t j = 0; j < y.dim(); ++j) out.set(j * x.dim() + i, i * y.dim() + j, Scalar(1));
    return out;
}

MultiLinMap swap(std::size_t m, std::size_t n) { return swap(Space::with_dim("X", m), Space::with_dim("Y", n)); }

MultiLinMap point_embed(const Space& space, const Vector& point) {
    if (point.size() != space.dim()) throw DimensionMismatch("point does not lie in space '" + space.name() + "'");
    return MultiLinMap({Space::ground()}, {space}, point);
}

Vector apply(const MultiLinMap& f, const Vector& v) {
    if (v.size() != f.cols()) throw DimensionMismatch("vector length does not match map domain");
    Vector out(f.rows());
    for (std::size_t r = 0; r < f.rows(); ++r)
        for (std::size_t c = 0; c < f.cols(); ++c)
            if (!f.at(r, c).is_zero() && !v[c].is_zero()) out[r] += f.at(r, c) * v[c];
    return out;
}

Vector tensor_vector(const Vector& u, const Vector& w) {
    Vector out;
    out.reserve(u.size() * w.size());
    for (const auto& a : u)
        for (const auto& b : w) out.push_back(a * b);
    return out;
}

Vector basis_vector(std::size_t dim, std::size_t i) {
    Vector out(dim);
    out.at(i) = Scalar(1);
    return out;
}

bool maps_equal(const MultiLinMap& f, const MultiLinMap& g) {
    return f.rows() == g.rows() && f.cols() == g.cols() && f.entries() == g.entries();
}

std::optional<std::pair<std::size_t, std::size_t>> first_difference(const MultiLinMap& f,
                                                                    const MultiLinMap& g) {
    if (f.rows() != g.rows() || f.cols() != g.cols()) {
        throw DimensionMismatch("cannot compare maps of shape " + std::to_string(f.rows()) + "x" +
                                std::to_string(f.cols()) + " and " + std::to_string(g.rows()) + "x" +
                                std::to_string(g.cols()));
    }
    for (std::size_t c = 0; c < f.cols(); ++c)
        for (std::size_t r = 0; r < f.rows(); ++r)
            if (!(f.at(r, c) == g.at(r, c))) return std::pair{c, r};
    return std::nullopt;
}

}  // namespace crossprod
