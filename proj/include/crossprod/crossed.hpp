#pragma once

// Twisting maps, crossed-product data and the algebras they afford.

#include "crossprod/algebra.hpp"
#include "crossprod/linalg.hpp"
#include "crossprod/report.hpp"

namespace crossprod {

// Whether build_* operations re-run the axiom checks of their inputs first.
enum class Verify { checked, unchecked };

// A linear map R : B ⊗ A → A ⊗ B between two algebras.
class TwistingMap {
public:
    // Throws DimensionMismatch if `map` is not (dim B · dim A) square.
    TwistingMap(Algebra a, Algebra b, MultiLinMap map);

    const Algebra& a() const noexcept { return a_; }
    const Algebra& b() const noexcept { return b_; }
    const MultiLinMap& map() const noexcept { return map_; }

    bool operator==(const TwistingMap&) const;

private:
    Algebra a_;
    Algebra b_;
    MultiLinMap map_;
};

// The ordinary tensor product twist b ⊗ a ↦ a ⊗ b.
TwistingMap flip_twist(const Algebra& a, const Algebra& b);

// Items "unit-A", "unit-B", "mult-A", "mult-B".
CheckReport check_twisting_map(const TwistingMap& t);

// A ⊗ B with (a⊗b)(a'⊗b') = a a'_R ⊗ b_R b' and unit 1_A ⊗ 1_B.
// Throws AxiomViolation when checked and check_twisting_map fails.
Algebra build_twisted_tensor(const TwistingMap& t, Verify verify = Verify::checked);

// Data (A, V, R, σ) for a crossed product A ⊗_{R,σ} V.
class CrossedData {
public:
    // r_map : V ⊗ A → A ⊗ V, sigma : V ⊗ V → A ⊗ V. Factor lists are
    // normalized to [V, A] etc.; only total dimensions are checked.
    CrossedData(Algebra alg, PointedSpace pointed, MultiLinMap r_map, MultiLinMap sigma);

    const Algebra& alg() const noexcept { return alg_; }
    const PointedSpace& pointed() const noexcept { return pointed_; }
    const Space& space() const noexcept { return pointed_.space(); }
    const MultiLinMap& r_map() const noexcept { return r_map_; }
    const MultiLinMap& sigma() const noexcept { return sigma_; }

    bool operator==(const CrossedData&) const;

private:
    Algebra alg_;
    PointedSpace pointed_;
    MultiLinMap r_map_;
    MultiLinMap sigma_;
};

// σ(b ⊗ b') = 1_A ⊗ bb', R = t.map(), V = (B, 1_B).
CrossedData twisted_to_crossed(const TwistingMap& t, Verify verify = Verify::checked);

// Items "brz1" .. "brz5", each an exact operator identity.
CheckReport check_crossed_axioms(const CrossedData& c);

// A ⊗ V with multiplication (μ₂ ⊗ id_V)∘(id_A ⊗ id_A ⊗ σ)∘(id_A ⊗ R ⊗ id_V),
// μ₂ = μ∘(id_A ⊗ μ), and unit 1_A ⊗ 1_V.
Algebra build_crossed_algebra(const CrossedData& c, Verify verify = Verify::checked);

// Throws AxiomViolation naming the first failing item of `report`.
void require(const CheckReport& report, const std::string& what);

}  // namespace crossprod
