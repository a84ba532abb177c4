#include "crossprod/iteration.hpp"

#include "crossprod/errors.hpp"

#include <array>
#include <map>
#include <stdexcept>

namespace crossprod {

namespace {

// One nonzero output term of a map applied to a basis tensor.
struct Leg {
    std::vector<std::size_t> out;
    Scalar coeff;
};

std::vector<Leg> legs(const MultiLinMap& f, std::initializer_list<std::size_t> input) {
    const auto in_dims = dims_of(f.domain());
    const auto out_dims = dims_of(f.codomain());
    const std::size_t col = flatten(std::vector<std::size_t>(input), in_dims);
    std::vector<Leg> result;
    for (std::size_t r = 0; r < f.rows(); ++r) {
        if (!f.at(r, col).is_zero()) result.push_back({unflatten(r, out_dims), f.at(r, col)});
    }
    return result;
}

using Element = std::map<std::size_t, Scalar>;

// x · e_b in the algebra.
Element times_basis(const Algebra& alg, const Element& x, std::size_t b) {
    Element out;
    const std::size_t d = alg.dim();
    for (const auto& [i, c] : x) {
        for (std::size_t r = 0; r < d; ++r) {
            const Scalar& m = alg.mult().at(r, i * d + b);
            if (!m.is_zero()) out[r] += c * m;
        }
    }
    return out;
}

Element product(const Algebra& alg, std::initializer_list<std::size_t> factors) {
    auto it = factors.begin();
    Element x{{*it, Scalar(1)}};
    for (++it; it != factors.end(); ++it) x = times_basis(alg, x, *it);
    return x;
}

void add_to(MultiLinMap& f, std::size_t row, std::size_t col, const Scalar& value) {
    f.set(row, col, f.at(row, col) + value);
}

}  // namespace

IterationData::IterationData(CrossedData left, CrossedData right, MultiLinMap q_map)
    : left_(std::move(left)), right_(std::move(right)), q_map_(std::move(q_map)) {
    if (!(left_.alg() == right_.alg())) {
        throw Error("iteration data: both crossed products must share the algebra A");
    }
    const Space& v = left_.space();
    const Space& w = right_.space();
    if (q_map_.rows() != v.dim() * w.dim() || q_map_.cols() != w.dim() * v.dim()) {
        throw DimensionMismatch("Q : W⊗V → V⊗W has the wrong shape");
    }
    q_map_ = q_map_.with_factors({w, v}, {v, w});
}

bool IterationData::operator==(const IterationData& other) const {
    return left_ == other.left_ && right_ == other.right_ && maps_equal(q_map_, other.q_map_);
}

CheckReport check_hypotheses(const IterationData& d) {
    const auto& r = d.left().r_map();
    const auto& sigma = d.left().sigma();
    const auto& p = d.right().r_map();
    const auto& nu = d.right().sigma();
    const auto& q = d.q_map();
    const auto id_a = MultiLinMap::identity(d.alg().space());
    const auto id_v = MultiLinMap::identity(d.left().space());
    const auto id_w = MultiLinMap::identity(d.right().space());
    const auto point_v = d.left().pointed().embed();
    const auto point_w = d.right().pointed().embed();

    CheckReport report;
    report.items.push_back(check_identities(
        "unitQ", {{compose(q, kron(point_w, id_v)), kron(id_v, point_w)},
                  {compose(q, kron(id_w, point_v)), kron(point_v, id_w)}}));
    report.items.push_back(check_identity(
        "braid", compose_all(std::array{kron(id_a, q), kron(p, id_v), kron(id_w, r)}),
        compose_all(std::array{kron(r, id_w), kron(id_v, p), kron(q, id_a)})));
    report.items.push_back(check_identity(
        "hex-sigma", compose_all(std::array{kron(id_a, q), kron(p, id_v), kron(id_w, sigma)}),
        compose_all(std::array{kron(sigma, id_w), kron(id_v, q), kron(q, id_v)})));
    report.items.push_back(check_identity(
        "hex-nu", compose(kron(id_a, q), kron(nu, id_v)),
        compose_all(std::array{kron(r, id_w), kron(id_v, nu), kron(q, id_w), kron(id_w, q)})));
    return report;
}

MultiLinMap s_map_from_coordinates(const IterationData& d) {
    const Space& a = d.alg().space();
    const Space& v = d.left().space();
    const Space& w = d.right().space();
    MultiLinMap s({v, w, a}, {a, v, w});
    const std::array dom{v.dim(), w.dim(), a.dim()};
    const std::array cod{a.dim(), v.dim(), w.dim()};
    for (std::size_t vi = 0; vi < v.dim(); ++vi)
        for (std::size_t wi = 0; wi < w.dim(); ++wi)
            for (std::size_t ai = 0; ai < a.dim(); ++ai) {
                const std::size_t col = flatten(std::array{vi, wi, ai}, dom);
                for (const auto& p : legs(d.right().r_map(), {wi, ai}))          // a_P ⊗ w_P
                    for (const auto& r : legs(d.left().r_map(), {vi, p.out[0]}))  // (a_P)_R ⊗ v_R
                        add_to(s, flatten(std::array{r.out[0], r.out[1], p.out[1]}, cod), col, p.coeff * r.coeff);
            }
    return s;
}

MultiLinMap theta_from_coordinates(const IterationData& d) {
    const Algebra& alg = d.alg();
    const Space& a = alg.space();
    const Space& v = d.left().space();
    const Space& w = d.right().space();
    MultiLinMap theta({v, w, v, w}, {a, v, w});
    const std::array dom{v.dim(), w.dim(), v.dim(), w.dim()};
    const std::array cod{a.dim(), v.dim(), w.dim()};
    for (std::size_t col = 0; col < theta.cols(); ++col) {
        const auto idx = unflatten(col, dom);
        const std::size_t v1 = idx[0], w1 = idx[1], v2 = idx[2], w2 = idx[3];
        for (const auto& q : legs(d.q_map(), {w1, v2}))                    // v'_Q ⊗ w_Q
            for (const auto& s : legs(d.left().sigma(), {v1, q.out[0]}))    // σ(v, v'_Q)
                for (const auto& n : legs(d.right().sigma(), {q.out[1], w2}))  // ν(w_Q, w')
                    for (const auto& r : legs(d.left().r_map(), {s.out[1], n.out[0]})) {
                        const Scalar coeff = q.coeff * s.coeff * n.coeff * r.coeff;
                        for (const auto& [x, c] : product(alg, {s.out[0], r.out[0]})) {
                            add_to(theta, flatten(std::array{x, r.out[1], n.out[1]}, cod), col, coeff * c);
                        }
                    }
    }
    return theta;
}

MultiLinMap closed_form_mult(const IterationData& d) {
    const Algebra& alg = d.alg();
    const Space& a = alg.space();
    const Space& v = d.left().space();
    const Space& w = d.right().space();
    const auto& r_map = d.left().r_map();
    MultiLinMap mult({a, v, w, a, v, w}, {a, v, w});
    const std::array dom{a.dim(), v.dim(), w.dim(), a.dim(), v.dim(), w.dim()};
    const std::array cod{a.dim(), v.dim(), w.dim()};
    for (std::size_t col = 0; col < mult.cols(); ++col) {
        const auto idx = unflatten(col, dom);
        const std::size_t a1 = idx[0], v1 = idx[1], w1 = idx[2], a2 = idx[3], v2 = idx[4], w2 = idx[5];
        for (const auto& p : legs(d.right().r_map(), {w1, a2}))  // a'_P ⊗ w_P
            for (const auto& r1 : legs(r_map, {v1, p.out[0]}))    // (a'_P)_R' ⊗ v_R'
                for (const auto& q : legs(d.q_map(), {p.out[1], v2}))  // v'_Q ⊗ (w_P)_Q
                    for (const auto& s : legs(d.left().sigma(), {r1.out[1], q.out[0]}))
                        for (const auto& n : legs(d.right().sigma(), {q.out[1], w2}))
                            for (const auto& r2 : legs(r_map, {s.out[1], n.out[0]})) {
                                const Scalar coeff = p.coeff * r1.coeff * q.coeff * s.coeff * n.coeff * r2.coeff;
                                for (const auto& [x, c] : product(alg, {a1, r1.out[0], s.out[0], r2.out[0]})) {
                                    add_to(mult, flatten(std::array{x, r2.out[1], n.out[1]}, cod), col, coeff * c);
                                }
                            }
    }
    return mult;
}

DerivedMaps derive_maps(const IterationData& d) {
    const auto& r = d.left().r_map();
    const auto& sigma = d.left().sigma();
    const auto& p = d.right().r_map();
    const auto& nu = d.right().sigma();
    const auto& q = d.q_map();
    const auto id_a = MultiLinMap::identity(d.alg().space());
    const auto id_v = MultiLinMap::identity(d.left().space());
    const auto id_w = MultiLinMap::identity(d.right().space());

    DerivedMaps maps{
        compose(kron(r, id_w), kron(id_v, p)),
        compose_all(std::array{kron_all(std::array{d.alg().mult(), id_v, id_w}), kron_all(std::array{id_a, r, id_w}),
                               kron(sigma, nu), kron_all(std::array{id_v, q, id_w})}),
        compose(kron(id_a, q), kron(p, id_v)),
        compose(kron_all(std::array{id_a, d.left().pointed().embed(), id_w}), nu),
    };
    if (!maps_equal(maps.s_map, s_map_from_coordinates(d)) || !maps_equal(maps.theta, theta_from_coordinates(d))) {
        throw std::logic_error("S or θ disagrees with its coordinate formula");
    }
    return maps;
}

CrossedData left_iterated_data(const IterationData& d, const DerivedMaps& maps) {
    const auto& v = d.left().pointed();
    const auto& w = d.right().pointed();
    PointedSpace vw(tensor(v.space(), w.space()), tensor_vector(v.point(), w.point()));
    return CrossedData(d.alg(), std::move(vw), maps.s_map, maps.theta);
}

CrossedData right_iterated_data(const IterationData& d, const DerivedMaps& maps) {
    return CrossedData(build_crossed_algebra(d.left(), Verify::unchecked), d.right().pointed(), maps.t_map, maps.eta);
}

Algebra iterate_left(const IterationData& d, Verify verify) {
    if (verify == Verify::checked) require(check_hypotheses(d), "iteration hypotheses fail");
    const auto data = left_iterated_data(d, derive_maps(d));
    return build_crossed_algebra(data, verify);
}

Algebra iterate_right(const IterationData& d, Verify verify) {
    if (verify == Verify::checked) {
        require(check_hypotheses(d), "iteration hypotheses fail");
        require(check_crossed_axioms(d.left()), "inner crossed product datum is invalid");
    }
    const auto data = right_iterated_data(d, derive_maps(d));
    return build_crossed_algebra(data, verify);
}

bool TheoremCertificate::passed() const {
    return hypothesis_report.passed() && left_axioms.passed() && right_axioms.passed() && tensors_equal.pass &&
           explicit_matches.pass;
}

CheckReport TheoremCertificate::items() const {
    CheckReport out = hypothesis_report;
    for (auto item : left_axioms.items) {
        item.name += "(left)";
        out.items.push_back(std::move(item));
    }
    for (auto item : right_axioms.items) {
        item.name += "(right)";
        out.items.push_back(std::move(item));
    }
    out.items.push_back(tensors_equal);
    out.items.push_back(explicit_matches);
    return out;
}

TheoremCertificate verify_theorem(const IterationData& d) {
    TheoremCertificate cert;
    cert.hypothesis_report = check_hypotheses(d);
    const auto maps = derive_maps(d);
    const auto left_data = left_iterated_data(d, maps);
    const auto right_data = right_iterated_data(d, maps);
    cert.left_axioms = check_crossed_axioms(left_data);
    cert.right_axioms = check_crossed_axioms(right_data);

    const auto left_alg = build_crossed_algebra(left_data, Verify::unchecked);
    const auto right_alg = build_crossed_algebra(right_data, Verify::unchecked);
    cert.tensors_equal = check_identity("tensors-equal", left_alg.mult(), right_alg.mult());
    if (cert.tensors_equal.pass && left_alg.unit() != right_alg.unit()) {
        cert.tensors_equal = CheckItem{"tensors-equal", false, "unit"};
    }

    const auto closed = closed_form_mult(d);
    cert.explicit_matches = check_identity("explicit-matches", closed, left_alg.mult());
    if (cert.explicit_matches.pass) {
        cert.explicit_matches = check_identity("explicit-matches", closed, right_alg.mult());
    }
    return cert;
}

}  // namespace crossprod
