#pragma once

#include "crossprod/linalg.hpp"
#include "crossprod/report.hpp"

#include <cstddef>
#include <string>
#include <vector>

namespace crossprod {

// Finite-dimensional algebra given by structure constants. The constructor
// checks shapes only; associativity and unitality are checked by check_algebra.
class Algebra {
public:
    Algebra(Space space, MultiLinMap mult, Vector unit);

    const Space& space() const noexcept { return space_; }
    std::size_t dim() const noexcept { return space_.dim(); }
    // space ⊗ space → space
    const MultiLinMap& mult() const noexcept { return mult_; }
    const Vector& unit() const noexcept { return unit_; }

    // Same structure constants, space renamed.
    Algebra renamed(std::string name) const;

    bool operator==(const Algebra& other) const;

private:
    Space space_;
    MultiLinMap mult_;
    Vector unit_;
};

// Structure tensors and units coincide entrywise (spaces may be named differently).
bool same_structure(const Algebra& a, const Algebra& b);

// A space with a distinguished nonzero element.
class PointedSpace {
public:
    PointedSpace(Space space, Vector point);

    const Space& space() const noexcept { return space_; }
    const Vector& point() const noexcept { return point_; }
    // k → space, 1 ↦ point
    MultiLinMap embed() const { return point_embed(space_, point_); }

    bool operator==(const PointedSpace&) const = default;

private:
    Space space_;
    Vector point_;
};

// The pointed space (A, 1_A).
PointedSpace pointed(const Algebra& a);

// The map k → A, 1 ↦ 1_A.
MultiLinMap unit_embed(const Algebra& a);

// Items "assoc", "unit-left", "unit-right".
CheckReport check_algebra(const Algebra& a);

using CayleyTable = std::vector<std::vector<std::size_t>>;

// Group algebra k[G]; labels default to "g0", "g1", ... Throws NotAGroup.
Algebra group_algebra(const CayleyTable& table, std::vector<std::string> labels = {},
                      std::string name = "k[G]");

// k[x]/(x^n) with basis 1, x, x^2, ..., x^(n-1).
Algebra truncated_poly(std::size_t n, std::string name = "");

// The ground field as a one-dimensional algebra.
Algebra ground_algebra();

// Z/n with elements 0..n-1 under addition.
CayleyTable cyclic_table(std::size_t n);
// G×H with (g,h) at index g*|H| + h.
CayleyTable product_table(const CayleyTable& g, const CayleyTable& h);

}  // namespace crossprod
