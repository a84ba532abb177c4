#include "crossprod/crossed.hpp"

#include "crossprod/errors.hpp"

#include <array>

namespace crossprod {

namespace {

void check_shape(const MultiLinMap& f, std::size_t rows, std::size_t cols, const std::string& what) {
    if (f.rows() != rows || f.cols() != cols) {
        throw DimensionMismatch(what + " must be " + std::to_string(rows) + "x" + std::to_string(cols) + ", got " +
                                std::to_string(f.rows()) + "x" + std::to_string(f.cols()));
    }
}

}  // namespace

void require(const CheckReport& report, const std::string& what) {
    if (const CheckItem* bad = report.first_failure()) {
        throw AxiomViolation(bad->name, what + ": " + format_item(*bad));
    }
}

// ---------------------------------------------------------------- twisting maps

TwistingMap::TwistingMap(Algebra a, Algebra b, MultiLinMap map)
    : a_(std::move(a)), b_(std::move(b)), map_(std::move(map)) {
    const std::size_t n = a_.dim() * b_.dim();
    check_shape(map_, n, n, "twisting map");
    map_ = map_.with_factors({b_.space(), a_.space()}, {a_.space(), b_.space()});
}

bool TwistingMap::operator==(const TwistingMap& other) const {
    return a_ == other.a_ && b_ == other.b_ && maps_equal(map_, other.map_) &&
           map_.domain() == other.map_.domain() && map_.codomain() == other.map_.codomain();
}

TwistingMap flip_twist(const Algebra& a, const Algebra& b) { return TwistingMap(a, b, swap(b.space(), a.space())); }

CheckReport check_twisting_map(const TwistingMap& t) {
    const auto& r = t.map();
    const auto id_a = MultiLinMap::identity(t.a().space());
    const auto id_b = MultiLinMap::identity(t.b().space());
    const auto unit_a = unit_embed(t.a());
    const auto unit_b = unit_embed(t.b());
    const auto& mu_a = t.a().mult();
    const auto& mu_b = t.b().mult();

    CheckReport report;
    report.items.push_back(check_identity("unit-A", compose(r, kron(id_b, unit_a)), kron(unit_a, id_b)));
    report.items.push_back(check_identity("unit-B", compose(r, kron(unit_b, id_a)), kron(id_a, unit_b)));
    report.items.push_back(check_identity(
        "mult-A", compose(r, kron(id_b, mu_a)),
        compose_all(std::array{kron(mu_a, id_b), kron(id_a, r), kron(r, id_a)})));
    report.items.push_back(check_identity(
        "mult-B", compose(r, kron(mu_b, id_a)),
        compose_all(std::array{kron(id_a, mu_b), kron(r, id_b), kron(id_b, r)})));
    return report;
}

Algebra build_twisted_tensor(const TwistingMap& t, Verify verify) {
    if (verify == Verify::checked) require(check_twisting_map(t), "not a twisting map");
    const auto id_a = MultiLinMap::identity(t.a().space());
    const auto id_b = MultiLinMap::identity(t.b().space());
    const Space space = tensor(t.a().space(), t.b().space());
    auto mult = compose(kron(t.a().mult(), t.b().mult()), kron_all(std::array{id_a, t.map(), id_b}));
    return Algebra(space, std::move(mult), tensor_vector(t.a().unit(), t.b().unit()));
}

// ---------------------------------------------------------------- crossed data

CrossedData::CrossedData(Algebra alg, PointedSpace pointed, MultiLinMap r_map, MultiLinMap sigma)
    : alg_(std::move(alg)), pointed_(std::move(pointed)), r_map_(std::move(r_map)), sigma_(std::move(sigma)) {
    const Space& a = alg_.space();
    const Space& v = pointed_.space();
    check_shape(r_map_, a.dim() * v.dim(), v.dim() * a.dim(), "R : V⊗A → A⊗V");
    check_shape(sigma_, a.dim() * v.dim(), v.dim() * v.dim(), "σ : V⊗V → A⊗V");
    r_map_ = r_map_.with_factors({v, a}, {a, v});
    sigma_ = sigma_.with_factors({v, v}, {a, v});
}

bool CrossedData::operator==(const CrossedData& other) const {
    return alg_ == other.alg_ && pointed_ == other.pointed_ && maps_equal(r_map_, other.r_map_) &&
           maps_equal(sigma_, other.sigma_);
}

CrossedData twisted_to_crossed(const TwistingMap& t, Verify verify) {
    if (verify == Verify::checked) require(check_twisting_map(t), "not a twisting map");
    auto sigma = kron(unit_embed(t.a()), t.b().mult());
    return CrossedData(t.a(), pointed(t.b()), t.map(), std::move(sigma));
}

CheckReport check_crossed_axioms(const CrossedData& c) {
    const auto& r = c.r_map();
    const auto& sigma = c.sigma();
    const auto& mu = c.alg().mult();
    const auto id_a = MultiLinMap::identity(c.alg().space());
    const auto id_v = MultiLinMap::identity(c.space());
    const auto unit_a = unit_embed(c.alg());
    const auto point_v = c.pointed().embed();
    const auto mu_v = kron(mu, id_v);

    CheckReport report;
    report.items.push_back(check_identities(
        "brz1", {{compose(r, kron(point_v, id_a)), kron(id_a, point_v)},
                 {compose(r, kron(id_v, unit_a)), kron(unit_a, id_v)}}));
    report.items.push_back(check_identities(
        "brz2", {{compose(sigma, kron(point_v, id_v)), kron(unit_a, id_v)},
                 {compose(sigma, kron(id_v, point_v)), kron(unit_a, id_v)}}));
    report.items.push_back(check_identity(
        "brz3", compose(r, kron(id_v, mu)), compose_all(std::array{mu_v, kron(id_a, r), kron(r, id_a)})));
    report.items.push_back(check_identity(
        "brz4", compose_all(std::array{mu_v, kron(id_a, sigma), kron(r, id_v), kron(id_v, sigma)}),
        compose_all(std::array{mu_v, kron(id_a, sigma), kron(sigma, id_v)})));
    report.items.push_back(check_identity(
        "brz5", compose_all(std::array{mu_v, kron(id_a, sigma), kron(r, id_v), kron(id_v, r)}),
        compose_all(std::array{mu_v, kron(id_a, r), kron(sigma, id_a)})));
    return report;
}

Algebra build_crossed_algebra(const CrossedData& c, Verify verify) {
    if (verify == Verify::checked) require(check_crossed_axioms(c), "not a crossed product datum");
    const auto& mu = c.alg().mult();
    const auto id_a = MultiLinMap::identity(c.alg().space());
    const auto id_v = MultiLinMap::identity(c.space());
    const auto mu2 = compose(mu, kron(id_a, mu));
    auto mult = compose_all(std::array{kron(mu2, id_v), kron_all(std::array{id_a, id_a, c.sigma()}),
                                       kron_all(std::array{id_a, c.r_map(), id_v})});
    const Space space = tensor(c.alg().space(), c.space());
    return Algebra(space, std::move(mult), tensor_vector(c.alg().unit(), c.pointed().point()));
}

}  // namespace crossprod
