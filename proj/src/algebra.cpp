#include "crossprod/algebra.hpp"

#include "crossprod/errors.hpp"

#include <algorithm>
#include <optional>

namespace crossprod {

Algebra::Algebra(Space space, MultiLinMap mult, Vector unit)
    : space_(std::move(space)), mult_(std::move(mult)), unit_(std::move(unit)) {
    const std::size_t d = space_.dim();
    if (mult_.rows() != d || mult_.cols() != d * d) {
        throw DimensionMismatch("multiplication of '" + space_.name() + "' must be " + std::to_string(d) + "x" +
                                std::to_string(d * d));
    }
    if (unit_.size() != d) throw DimensionMismatch("unit of '" + space_.name() + "' has wrong length");
    mult_ = mult_.with_factors({space_, space_}, {space_});
}

Algebra Algebra::renamed(std::string name) const {
    Space s(std::move(name), space_.labels());
    return Algebra(s, mult_.with_factors({s, s}, {s}), unit_);
}

bool Algebra::operator==(const Algebra& other) const {
    return space_ == other.space_ && maps_equal(mult_, other.mult_) && unit_ == other.unit_;
}

bool same_structure(const Algebra& a, const Algebra& b) {
    return maps_equal(a.mult(), b.mult()) && a.unit() == b.unit();
}

PointedSpace::PointedSpace(Space space, Vector point) : space_(std::move(space)), point_(std::move(point)) {
    if (point_.size() != space_.dim()) {
        throw DimensionMismatch("distinguished element does not lie in '" + space_.name() + "'");
    }
    if (std::all_of(point_.begin(), point_.end(), [](const Scalar& s) { return s.is_zero(); })) {
        throw Error("distinguished element of '" + space_.name() + "' is zero");
    }
}

PointedSpace pointed(const Algebra& a) { return PointedSpace(a.space(), a.unit()); }

MultiLinMap unit_embed(const Algebra& a) { return point_embed(a.space(), a.unit()); }

CheckReport check_algebra(const Algebra& a) {
    const auto id = MultiLinMap::identity(a.space());
    const auto& mu = a.mult();
    const auto unit = unit_embed(a);
    CheckReport report;
    report.items.push_back(check_identity("assoc", compose(mu, kron(mu, id)), compose(mu, kron(id, mu))));
    report.items.push_back(check_identity("unit-left", compose(mu, kron(unit, id)), id));
    report.items.push_back(check_identity("unit-right", compose(mu, kron(id, unit)), id));
    return report;
}

Algebra group_algebra(const CayleyTable& table, std::vector<std::string> labels, std::string name) {
    const std::size_t n = table.size();
    if (n == 0) throw NotAGroup("empty Cayley table");
    for (const auto& row : table) {
        if (row.size() != n) throw NotAGroup("Cayley table is not square");
        std::vector<bool> seen(n, false);
        for (auto g : row) {
            if (g >= n) throw NotAGroup("Cayley table entry out of range");
            if (seen[g]) throw NotAGroup("Cayley table is not a Latin square");
            seen[g] = true;
        }
    }
    for (std::size_t j = 0; j < n; ++j) {
        std::vector<bool> seen(n, false);
        for (std::size_t i = 0; i < n; ++i) {
            if (seen[table[i][j]]) throw NotAGroup("Cayley table is not a Latin square");
            seen[table[i][j]] = true;
        }
    }
    std::optional<std::size_t> neutral;
    for (std::size_t e = 0; e < n && !neutral; ++e) {
        bool ok = true;
        for (std::size_t g = 0; g < n && ok; ++g) ok = table[e][g] == g && table[g][e] == g;
        if (ok) neutral = e;
    }
    if (!neutral) throw NotAGroup("no identity element");
    for (std::size_t g = 0; g < n; ++g)
        for (std::size_t h = 0; h < n; ++h)
            for (std::size_t k = 0; k < n; ++k)
                if (table[table[g][h]][k] != table[g][table[h][k]]) {
                    throw NotAGroup("operation is not associative at (" + std::to_string(g) + "," +
                                    std::to_string(h) + "," + std::to_string(k) + ")");
                }
    for (std::size_t g = 0; g < n; ++g) {
        if (std::find(table[g].begin(), table[g].end(), *neutral) == table[g].end()) {
            throw NotAGroup("element " + std::to_string(g) + " has no inverse");
        }
    }

    if (labels.empty()) {
        for (std::size_t g = 0; g < n; ++g) labels.push_back("g" + std::to_string(g));
    }
    if (labels.size() != n) throw NotAGroup("label count differs from group order");
    Space space(std::move(name), std::move(labels));
    MultiLinMap mult({space, space}, {space});
    for (std::size_t g = 0; g < n; ++g)
        for (std::size_t h = 0; h < n; ++h) mult.set(table[g][h], g * n + h, Scalar(1));
    return Algebra(space, std::move(mult), basis_vector(n, *neutral));
}

Algebra truncated_poly(std::size_t n, std::string name) {
    if (n == 0) throw InvalidSpace("k[x]/(x^0) is the zero algebra");
    std::vector<std::string> labels;
    for (std::size_t i = 0; i < n; ++i) labels.push_back(i == 0 ? "1" : i == 1 ? "x" : "x^" + std::to_string(i));
    if (name.empty()) name = n == 1 ? "k" : "k[x]/(x^" + std::to_string(n) + ")";
    Space space(std::move(name), std::move(labels));
    MultiLinMap mult({space, space}, {space});
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; i + j < n; ++j) mult.set(i + j, i * n + j, Scalar(1));
    return Algebra(space, std::move(mult), basis_vector(n, 0));
}

Algebra ground_algebra() { return truncated_poly(1, "k"); }

CayleyTable cyclic_table(std::size_t n) {
    CayleyTable t(n, std::vector<std::size_t>(n));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) t[i][j] = (i + j) % n;
    return t;
}

CayleyTable product_table(const CayleyTable& g, const CayleyTable& h) {
    const std::size_t m = g.size(), n = h.size();
    CayleyTable t(m * n, std::vector<std::size_t>(m * n));
    for (std::size_t a = 0; a < m * n; ++a)
        for (std::size_t b = 0; b < m * n; ++b) t[a][b] = g[a / n][b / n] * n + h[a % n][b % n];
    return t;
}

}  // namespace crossprod
