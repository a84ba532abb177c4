#pragma once

// Iterating two crossed products A ⊗_{R,σ} V and A ⊗_{P,ν} W along an
// exchange map Q : W ⊗ V → V ⊗ W.
//
// Under the hypotheses checked by check_hypotheses, the data
//   S = (R ⊗ id_W)∘(id_V ⊗ P)
//   θ = (μ_A ⊗ id_V ⊗ id_W)∘(id_A ⊗ R ⊗ id_W)∘(σ ⊗ ν)∘(id_V ⊗ Q ⊗ id_W)
// define a crossed product A ⊗_{S,θ} (V⊗W), the data
//   T = (id_A ⊗ Q)∘(P ⊗ id_V)
//   η(w ⊗ w') = (ν₁(w,w') ⊗ 1_V) ⊗ ν₂(w,w')
// define a crossed product (A ⊗_{R,σ} V) ⊗_{T,η} W, and the two algebras
// coincide on the row-major flattened basis of A⊗V⊗W.

#include "crossprod/crossed.hpp"

namespace crossprod {

class IterationData {
public:
    // left = (A, V, R, σ), right = (A, W, P, ν), q_map : W ⊗ V → V ⊗ W.
    // Both data must share the same algebra A.
    IterationData(CrossedData left, CrossedData right, MultiLinMap q_map);

    const CrossedData& left() const noexcept { return left_; }
    const CrossedData& right() const noexcept { return right_; }
    const MultiLinMap& q_map() const noexcept { return q_map_; }
    const Algebra& alg() const noexcept { return left_.alg(); }

    bool operator==(const IterationData&) const;

private:
    CrossedData left_;
    CrossedData right_;
    MultiLinMap q_map_;
};

struct DerivedMaps {
    MultiLinMap s_map;  // (V⊗W) ⊗ A → A ⊗ (V⊗W)
    MultiLinMap theta;  // (V⊗W) ⊗ (V⊗W) → A ⊗ (V⊗W)
    MultiLinMap t_map;  // W ⊗ (A⊗V) → (A⊗V) ⊗ W
    MultiLinMap eta;    // W ⊗ W → (A⊗V) ⊗ W
};

// Items "unitQ", "braid", "hex-sigma", "hex-nu".
CheckReport check_hypotheses(const IterationData& d);

// Builds S, θ, T, η as operator composites. S and θ are also rebuilt from
// their coordinate formulas and must agree exactly (std::logic_error otherwise).
DerivedMaps derive_maps(const IterationData& d);

// Coordinate constructions, evaluated leg by leg on basis tensors:
//   S(v⊗w⊗a) = (a_P)_R ⊗ v_R ⊗ w_P
//   θ(v⊗w⊗v'⊗w') = σ₁(v, v'_Q) ν₁(w_Q, w')_R ⊗ σ₂(v, v'_Q)_R ⊗ ν₂(w_Q, w')
MultiLinMap s_map_from_coordinates(const IterationData& d);
MultiLinMap theta_from_coordinates(const IterationData& d);

// The multiplication of A⊗V⊗W written out in coordinates:
//   (a⊗v⊗w)(a'⊗v'⊗w') = a (a'_P)_R' σ₁(v_R', v'_Q) ν₁((w_P)_Q, w')_R
//                         ⊗ σ₂(v_R', v'_Q)_R ⊗ ν₂((w_P)_Q, w')
MultiLinMap closed_form_mult(const IterationData& d);

// (A, V⊗W pointed by 1_V ⊗ 1_W, S, θ).
CrossedData left_iterated_data(const IterationData& d, const DerivedMaps& maps);
// (A ⊗_{R,σ} V, W pointed by 1_W, T, η). The inner algebra is built unchecked.
CrossedData right_iterated_data(const IterationData& d, const DerivedMaps& maps);

// A ⊗_{S,θ} (V⊗W). When checked, throws AxiomViolation if a hypothesis or
// one of brz1..brz5 for (S, θ) fails.
Algebra iterate_left(const IterationData& d, Verify verify = Verify::checked);
// (A ⊗_{R,σ} V) ⊗_{T,η} W, same contract.
Algebra iterate_right(const IterationData& d, Verify verify = Verify::checked);

struct TheoremCertificate {
    CheckReport hypothesis_report;
    CheckReport left_axioms;   // brz1..brz5 for (S, θ)
    CheckReport right_axioms;  // brz1..brz5 for (T, η)
    CheckItem tensors_equal;     // iterate_left and iterate_right agree entrywise
    CheckItem explicit_matches;  // both agree with closed_form_mult

    bool passed() const;
    // Flattened items: unitQ, braid, hex-sigma, hex-nu, brz1(left)..brz5(left),
    // brz1(right)..brz5(right), tensors-equal, explicit-matches.
    CheckReport items() const;
};

// Computes every field, even after a failure.
TheoremCertificate verify_theorem(const IterationData& d);

}  // namespace crossprod
