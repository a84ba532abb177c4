#pragma once

// Example constructors and the fixed instance corpus used by the tests,
// the acceptance suite and `crossprod examples`.

#include "crossprod/iteration.hpp"

#include <optional>
#include <string>
#include <vector>

namespace crossprod {

// Iterated twisted tensor product of A, B, C with
//   r1 : B⊗A → A⊗B,  r2 : C⊗B → B⊗C,  r3 : C⊗A → A⊗C
// as the iteration datum V = B, W = C, R = r1, P = r3, Q = r2 with
// σ(b⊗b') = 1_A ⊗ bb' and ν(c⊗c') = 1_A ⊗ cc'. Throws AxiomViolation if a
// twisting map is invalid or the braid equation
//   (id_A⊗r2)∘(r3⊗id_B)∘(id_C⊗r1) = (r1⊗id_C)∘(id_B⊗r3)∘(r2⊗id_A)
// fails; DimensionMismatch if the maps do not connect a, b and c.
IterationData example_iterated_ttp(const Algebra& a, const Algebra& b, const Algebra& c, const TwistingMap& r1,
                                   const TwistingMap& r2, const TwistingMap& r3);

// The braid equation above as a single check item named "braid".
CheckItem check_braid_equation(const TwistingMap& r1, const TwistingMap& r2, const TwistingMap& r3);

// Right extension of a crossed product by an algebra W: P and Q are flips
// and ν(w⊗w') = 1_A ⊗ ww'. Throws AxiomViolation if c or w is invalid.
IterationData example_trivial_extension(const CrossedData& c, const Algebra& w);

// Parities are 0 (even) or 1 (odd), one per basis vector.
using Grading = std::vector<int>;

// R(b⊗a) = (-1)^{|a||b|} a⊗b on basis vectors. Throws NotGraded unless
// both gradings are algebra gradings (unit even, products homogeneous of
// summed parity).
TwistingMap sign_twist(const Algebra& a, const Grading& grading_a, const Algebra& b, const Grading& grading_b);

using CocycleTable = std::vector<std::vector<Scalar>>;

// A = k, V = k[G] pointed at the neutral element, R trivial,
// σ(g⊗h) = c(g,h) · 1 ⊗ gh. Throws NotACocycle unless c is nowhere zero,
// normalized and satisfies c(g,h)c(gh,l) = c(h,l)c(g,hl); NotAGroup for a
// bad table.
CrossedData cocycle_crossed(const CayleyTable& table, const CocycleTable& cocycle,
                            std::vector<std::string> labels = {}, std::string name = "k[G]");

// ------------------------------------------------------------------ corpus

inline constexpr int kCorpusVersion = 1;

template <class T>
struct Instance {
    std::string name;
    T data;
    // Name of the first check expected to fail; empty for positives.
    std::optional<std::string> fails_at;
};

std::vector<Instance<Algebra>> bundled_algebras();
std::vector<Instance<TwistingMap>> bundled_twisting_maps();
std::vector<Instance<CrossedData>> bundled_crossed();
std::vector<Instance<IterationData>> bundled_iterations();

}  // namespace crossprod
