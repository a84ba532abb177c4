#include "crossprod/gallery.hpp"

#include "crossprod/errors.hpp"

#include <array>

namespace crossprod {

namespace {

void check_grading(const Algebra& alg, const Grading& grading) {
    const std::size_t d = alg.dim();
    const std::string name = alg.space().name();
    if (grading.size() != d) throw NotGraded("grading of '" + name + "' has wrong length");
    for (int p : grading)
        if (p != 0 && p != 1) throw NotGraded("parities must be 0 or 1");
    for (std::size_t i = 0; i < d; ++i)
        if (!alg.unit()[i].is_zero() && grading[i] != 0) throw NotGraded("unit of '" + name + "' is not even");
    for (std::size_t i = 0; i < d; ++i)
        for (std::size_t j = 0; j < d; ++j)
            for (std::size_t r = 0; r < d; ++r)
                if (!alg.mult().at(r, i * d + j).is_zero() && grading[r] != (grading[i] + grading[j]) % 2) {
                    throw NotGraded("product " + alg.space().label(i) + "·" + alg.space().label(j) + " in '" + name +
                                    "' is not homogeneous of the summed parity");
                }
}

// (A, V = k[G], R trivial, σ(g⊗h) = c(g,h) 1⊗gh) without validating c.
CrossedData cocycle_datum(const Algebra& group, const CayleyTable& table, const CocycleTable& cocycle) {
    const Algebra field = ground_algebra();
    const Space& v = group.space();
    const std::size_t n = v.dim();
    MultiLinMap sigma({v, v}, {field.space(), v});
    for (std::size_t g = 0; g < n; ++g)
        for (std::size_t h = 0; h < n; ++h) sigma.set(table[g][h], g * n + h, cocycle[g][h]);
    return CrossedData(field, pointed(group), swap(v, field.space()), std::move(sigma));
}

// Q(w⊗v) = e(w,v) v⊗w on basis vectors.
MultiLinMap scaled_flip(const Space& w, const Space& v, const std::vector<std::vector<Scalar>>& e) {
    MultiLinMap q = swap(w, v);
    for (std::size_t i = 0; i < w.dim(); ++i)
        for (std::size_t j = 0; j < v.dim(); ++j) q.set(j * w.dim() + i, i * v.dim() + j, e[i][j]);
    return q;
}

Algebra dual_numbers() { return truncated_poly(2); }
Algebra c2_algebra() { return group_algebra(cyclic_table(2), {"1", "x"}, "k[C2]"); }
Algebra c3_algebra() { return group_algebra(cyclic_table(3), {"1", "g", "g^2"}, "k[C3]"); }
CayleyTable klein_table() { return product_table(cyclic_table(2), cyclic_table(2)); }
const std::vector<std::string> kKleinLabels{"1", "j", "i", "k"};
Algebra klein_algebra() { return group_algebra(klein_table(), kKleinLabels, "k[C2×C2]"); }

CrossedData cocycle_c2() {
    return cocycle_crossed(cyclic_table(2), {{1, 1}, {1, -1}}, {"1", "x"}, "k[C2]");
}

// Quaternion cocycle on C2×C2: c(g,h) = (-1)^(a·a' + b·b' + b·a') for g = (a,b), h = (a',b').
CrossedData cocycle_klein() {
    CocycleTable c(4, std::vector<Scalar>(4));
    for (std::size_t g = 0; g < 4; ++g)
        for (std::size_t h = 0; h < 4; ++h) {
            const std::size_t a1 = g / 2, b1 = g % 2, a2 = h / 2, b2 = h % 2;
            c[g][h] = (a1 * a2 + b1 * b2 + b1 * a2) % 2 ? Scalar(-1) : Scalar(1);
        }
    return cocycle_crossed(klein_table(), c, kKleinLabels, "k[C2×C2]");
}

TwistingMap super_twist(const Algebra& a, const Algebra& b) { return sign_twist(a, {0, 1}, b, {0, 1}); }

IterationData super_triple() {
    const Algebra d = dual_numbers();
    const auto r = super_twist(d, d);
    return example_iterated_ttp(d, d, d, r, r, r);
}

}  // namespace

// ------------------------------------------------------------------ constructors

CheckItem check_braid_equation(const TwistingMap& r1, const TwistingMap& r2, const TwistingMap& r3) {
    const auto id_a = MultiLinMap::identity(r1.a().space());
    const auto id_b = MultiLinMap::identity(r1.b().space());
    const auto id_c = MultiLinMap::identity(r2.b().space());
    return check_identity("braid",
                          compose_all(std::array{kron(id_a, r2.map()), kron(r3.map(), id_b), kron(id_c, r1.map())}),
                          compose_all(std::array{kron(r1.map(), id_c), kron(id_b, r3.map()), kron(r2.map(), id_a)}));
}

IterationData example_iterated_ttp(const Algebra& a, const Algebra& b, const Algebra& c, const TwistingMap& r1,
                                   const TwistingMap& r2, const TwistingMap& r3) {
    if (!(r1.a() == a && r1.b() == b && r2.a() == b && r2.b() == c && r3.a() == a && r3.b() == c)) {
        throw DimensionMismatch("twisting maps do not connect A, B and C as B⊗A, C⊗B and C⊗A");
    }
    require(check_twisting_map(r1), "R1 is not a twisting map");
    require(check_twisting_map(r2), "R2 is not a twisting map");
    require(check_twisting_map(r3), "R3 is not a twisting map");
    require(CheckReport{{check_braid_equation(r1, r2, r3)}}, "R1, R2, R3 violate the braid equation");
    return IterationData(twisted_to_crossed(r1, Verify::unchecked), twisted_to_crossed(r3, Verify::unchecked),
                         r2.map());
}

IterationData example_trivial_extension(const CrossedData& c, const Algebra& w) {
    require(check_crossed_axioms(c), "not a crossed product datum");
    require(check_algebra(w), "W is not an algebra");
    const Algebra& a = c.alg();
    CrossedData right(a, pointed(w), swap(w.space(), a.space()), kron(unit_embed(a), w.mult()));
    return IterationData(c, std::move(right), swap(w.space(), c.space()));
}

TwistingMap sign_twist(const Algebra& a, const Grading& grading_a, const Algebra& b, const Grading& grading_b) {
    check_grading(a, grading_a);
    check_grading(b, grading_b);
    const std::size_t da = a.dim(), db = b.dim();
    MultiLinMap r({b.space(), a.space()}, {a.space(), b.space()});
    for (std::size_t i = 0; i < da; ++i)
        for (std::size_t j = 0; j < db; ++j) r.set(i * db + j, j * da + i, grading_a[i] && grading_b[j] ? -1 : 1);
    return TwistingMap(a, b, std::move(r));
}

CrossedData cocycle_crossed(const CayleyTable& table, const CocycleTable& cocycle, std::vector<std::string> labels,
                            std::string name) {
    const Algebra group = group_algebra(table, std::move(labels), std::move(name));
    const std::size_t n = table.size();
    if (cocycle.size() != n) throw NotACocycle("cocycle table has wrong size");
    for (const auto& row : cocycle) {
        if (row.size() != n) throw NotACocycle("cocycle table has wrong size");
        for (const auto& s : row)
            if (s.is_zero()) throw NotACocycle("cocycle takes the value 0");
    }
    std::size_t e = 0;
    while (group.unit()[e].is_zero()) ++e;
    for (std::size_t g = 0; g < n; ++g) {
        if (!(cocycle[e][g] == Scalar(1)) || !(cocycle[g][e] == Scalar(1))) {
            throw NotACocycle("cocycle is not normalized at " + group.space().label(g));
        }
    }
    for (std::size_t g = 0; g < n; ++g)
        for (std::size_t h = 0; h < n; ++h)
            for (std::size_t l = 0; l < n; ++l)
                if (!(cocycle[g][h] * cocycle[table[g][h]][l] == cocycle[h][l] * cocycle[g][table[h][l]])) {
                    const auto& s = group.space();
                    throw NotACocycle("cocycle identity fails at (" + s.label(g) + "," + s.label(h) + "," +
                                      s.label(l) + ")");
                }
    return cocycle_datum(group, table, cocycle);
}

// ------------------------------------------------------------------ corpus

std::vector<Instance<Algebra>> bundled_algebras() {
    return {
        {"k", ground_algebra(), {}},
        {"dual", dual_numbers(), {}},
        {"trunc3", truncated_poly(3), {}},
        {"c2", c2_algebra(), {}},
        {"c3", c3_algebra(), {}},
        {"klein", klein_algebra(), {}},
        {"quaternions", build_crossed_algebra(cocycle_klein()), {}},
        {"super-plane", build_twisted_tensor(super_twist(dual_numbers(), dual_numbers())), {}},
    };
}

std::vector<Instance<TwistingMap>> bundled_twisting_maps() {
    const Algebra d = dual_numbers();
    TwistingMap corrupted = super_twist(d, d);
    MultiLinMap r = corrupted.map();
    r.set(0, 0, Scalar(-1));  // R(1⊗1) = -1⊗1
    return {
        {"flip-c2-c2", flip_twist(c2_algebra(), c2_algebra()), {}},
        {"flip-dual-c3", flip_twist(d, c3_algebra()), {}},
        {"sign-dual-dual", super_twist(d, d), {}},
        {"sign-dual-c2", super_twist(d, c2_algebra()), {}},
        {"broken-unit-sign", TwistingMap(d, d, std::move(r)), "unit-A"},
    };
}

std::vector<Instance<CrossedData>> bundled_crossed() {
    const Algebra field = ground_algebra();
    const Algebra d = dual_numbers();
    const Algebra c2 = c2_algebra();
    std::vector<Instance<CrossedData>> out{
        {"trivial-field", twisted_to_crossed(flip_twist(field, field)), {}},
        {"trivial-dual", twisted_to_crossed(flip_twist(d, d)), {}},
        {"sign-twist-dual", twisted_to_crossed(super_twist(d, d)), {}},
        {"sign-twist-dual-c2", twisted_to_crossed(super_twist(d, c2)), {}},
        {"ttp-flip-c2-c3", twisted_to_crossed(flip_twist(c2, c3_algebra())), {}},
        {"cocycle-c2", cocycle_c2(), {}},
        {"cocycle-klein", cocycle_klein(), {}},
    };

    {  // R(1⊗1) = -1⊗1
        auto t = bundled_twisting_maps().back().data;
        out.push_back({"broken-brz1", twisted_to_crossed(t, Verify::unchecked), "brz1"});
    }
    // σ(1⊗x) = 2·1⊗x
    out.push_back({"broken-brz2", cocycle_datum(c2, cyclic_table(2), {{1, 2}, {1, -1}}), "brz2"});
    {  // A = k[x]/(x^3), V = k[C2], R(x⊗a) = 2a⊗x for a = x only: not multiplicative in A
        const Algebra t3 = truncated_poly(3);
        TwistingMap twist = flip_twist(t3, c2);
        MultiLinMap r = twist.map();
        r.set(1 * 2 + 1, 1 * 3 + 1, Scalar(2));
        out.push_back(
            {"broken-brz3", twisted_to_crossed(TwistingMap(t3, c2, std::move(r)), Verify::unchecked), "brz3"});
    }
    {  // normalized but not a 2-cocycle on C3
        CocycleTable c{{1, 1, 1}, {1, 2, 1}, {1, 1, 1}};
        out.push_back({"broken-brz4", cocycle_datum(c3_algebra(), cyclic_table(3), c), "brz4"});
    }
    {  // A = dual numbers, V = k[C2], R(x⊗x) = 2x⊗x: compatible with μ_A but not with σ
        TwistingMap twist = flip_twist(d, c2);
        MultiLinMap r = twist.map();
        r.set(1 * 2 + 1, 1 * 2 + 1, Scalar(2));
        out.push_back({"broken-brz5", twisted_to_crossed(TwistingMap(d, c2, std::move(r)), Verify::unchecked),
                       "brz5"});
    }
    return out;
}

std::vector<Instance<IterationData>> bundled_iterations() {
    const Algebra field = ground_algebra();
    const Algebra d = dual_numbers();
    const Algebra c2 = c2_algebra();
    const Algebra c3 = c3_algebra();
    const Algebra t3 = truncated_poly(3);

    std::vector<Instance<IterationData>> out;
    out.push_back({"all-trivial",
                   example_iterated_ttp(d, c2, t3, flip_twist(d, c2), flip_twist(c2, t3), flip_twist(d, t3)),
                   {}});
    out.push_back({"super-triple", super_triple(), {}});
    out.push_back({"super-mixed-triple",
                   example_iterated_ttp(d, c2, d, super_twist(d, c2), super_twist(c2, d), super_twist(d, d)),
                   {}});
    out.push_back({"trivial-extension-c2", example_trivial_extension(cocycle_c2(), c2), {}});
    out.push_back(
        {"trivial-extension-sign-c3", example_trivial_extension(twisted_to_crossed(super_twist(d, d)), c3), {}});
    out.push_back({"trivial-extension-poly", example_trivial_extension(twisted_to_crossed(flip_twist(d, d)), d), {}});
    out.push_back({"cocycle-klein-c3", example_trivial_extension(cocycle_klein(), c3), {}});
    {  // Q(w⊗v) = (-1)^{|w||v|} v⊗w between two C2-graded crossed products over k
        const CrossedData left = cocycle_c2();
        const CrossedData right = twisted_to_crossed(flip_twist(field, c2));
        auto q = scaled_flip(right.space(), left.space(), {{1, 1}, {1, -1}});
        out.push_back({"cocycle-c2-signed-q", IterationData(left, right, std::move(q)), {}});
    }

    {  // Q = -flip
        const auto base = example_trivial_extension(cocycle_c2(), c2);
        out.push_back({"broken-unitq", IterationData(base.left(), base.right(), Scalar(-1) * base.q_map()), "unitQ"});
    }
    {  // Q(x⊗x) = -x⊗x + x⊗1: unital but breaks the braid relation at (x,x,x)
        const auto base = super_triple();
        MultiLinMap q = base.q_map();
        q.set(1 * 2 + 0, 1 * 2 + 1, Scalar(1));
        out.push_back({"broken-braid", IterationData(base.left(), base.right(), std::move(q)), "braid"});
    }
    {  // Q(x⊗x) = 2 x⊗x: not multiplicative in V
        const auto base = example_trivial_extension(cocycle_c2(), c2);
        auto q = scaled_flip(base.right().space(), base.left().space(), {{1, 1}, {1, 2}});
        out.push_back({"broken-hex-sigma", IterationData(base.left(), base.right(), std::move(q)), "hex-sigma"});
    }
    {  // V = dual numbers, W = k[C2], Q(x_W ⊗ x_V) = 2 x_V⊗x_W: multiplicative in V, not in W
        const CrossedData left = twisted_to_crossed(flip_twist(field, d));
        const CrossedData right = twisted_to_crossed(flip_twist(field, c2));
        auto q = scaled_flip(right.space(), left.space(), {{1, 1}, {1, 2}});
        out.push_back({"broken-hex-nu", IterationData(left, right, std::move(q)), "hex-nu"});
    }
    return out;
}

}  // namespace crossprod
