#pragma once

// Pointwise reference evaluations for the tests. Every map here is built by
// walking Sweedler legs basis vector by basis vector, never by composing
// operators, so it is independent of the library's kron/compose pipeline.

#include "crossprod/gallery.hpp"
#include "crossprod/iteration.hpp"

#include <functional>
#include <map>
#include <vector>

namespace oracle {

using namespace crossprod;

using Index = std::vector<std::size_t>;
using Terms = std::map<Index, Scalar>;

// f(e_in) as a sparse sum over codomain basis tuples.
inline Terms legs(const MultiLinMap& f, const Index& in) {
    const auto ddims = dims_of(f.domain());
    const auto cdims = dims_of(f.codomain());
    const std::size_t col = flatten(in, ddims);
    Terms out;
    for (std::size_t row = 0; row < f.rows(); ++row) {
        const Scalar& c = f.at(row, col);
        if (!c.is_zero()) out.emplace(unflatten(row, cdims), c);
    }
    return out;
}

// Product of two basis elements of A.
inline Terms times(const Algebra& a, std::size_t i, std::size_t j) { return legs(a.mult(), {i, j}); }

inline void add(Terms& t, const Index& k, const Scalar& c) {
    auto [it, fresh] = t.emplace(k, c);
    if (!fresh) it->second += c;
}

// Matrix whose column for the basis tuple `in` is fn(in).
inline MultiLinMap tabulate(const Factors& dom, const Factors& cod, const std::function<Terms(const Index&)>& fn) {
    MultiLinMap m(dom, cod);
    const auto ddims = dims_of(dom);
    const auto cdims = dims_of(cod);
    for (std::size_t col = 0; col < m.cols(); ++col) {
        for (const auto& [k, c] : fn(unflatten(col, ddims))) m.set(flatten(k, cdims), col, m.at(flatten(k, cdims), col) + c);
    }
    return m;
}

// ------------------------------------------------------------ crossed product

// (aa')_R ⊗ v_R  on  v ⊗ a ⊗ a'
inline MultiLinMap brz6_lhs(const CrossedData& c) {
    const Algebra& A = c.alg();
    return tabulate({c.space(), A.space(), A.space()}, {A.space(), c.space()}, [&](const Index& x) {
        Terms out;
        for (const auto& [m, c1] : times(A, x[1], x[2]))
            for (const auto& [r, c2] : legs(c.r_map(), {x[0], m[0]})) add(out, r, c1 * c2);
        return out;
    });
}

// a_R a'_r ⊗ (v_R)_r
inline MultiLinMap brz6_rhs(const CrossedData& c) {
    const Algebra& A = c.alg();
    return tabulate({c.space(), A.space(), A.space()}, {A.space(), c.space()}, [&](const Index& x) {
        Terms out;
        for (const auto& [r1, c1] : legs(c.r_map(), {x[0], x[1]}))
            for (const auto& [r2, c2] : legs(c.r_map(), {r1[1], x[2]}))
                for (const auto& [m, c3] : times(A, r1[0], r2[0])) add(out, {m[0], r2[1]}, c1 * c2 * c3);
        return out;
    });
}

// σ₁(y,z)_R σ₁(x_R, σ₂(y,z)) ⊗ σ₂(x_R, σ₂(y,z))  on  x ⊗ y ⊗ z
inline MultiLinMap brz7_lhs(const CrossedData& c) {
    const Algebra& A = c.alg();
    const Space& V = c.space();
    return tabulate({V, V, V}, {A.space(), V}, [&](const Index& x) {
        Terms out;
        for (const auto& [s, c1] : legs(c.sigma(), {x[1], x[2]}))
            for (const auto& [r, c2] : legs(c.r_map(), {x[0], s[0]}))
                for (const auto& [t, c3] : legs(c.sigma(), {r[1], s[1]}))
                    for (const auto& [m, c4] : times(A, r[0], t[0])) add(out, {m[0], t[1]}, c1 * c2 * c3 * c4);
        return out;
    });
}

// σ₁(x,y) σ₁(σ₂(x,y), z) ⊗ σ₂(σ₂(x,y), z)
inline MultiLinMap brz7_rhs(const CrossedData& c) {
    const Algebra& A = c.alg();
    const Space& V = c.space();
    return tabulate({V, V, V}, {A.space(), V}, [&](const Index& x) {
        Terms out;
        for (const auto& [s, c1] : legs(c.sigma(), {x[0], x[1]}))
            for (const auto& [t, c2] : legs(c.sigma(), {s[1], x[2]}))
                for (const auto& [m, c3] : times(A, s[0], t[0])) add(out, {m[0], t[1]}, c1 * c2 * c3);
        return out;
    });
}

// (a_R)_r σ₁(v_r, v'_R) ⊗ σ₂(v_r, v'_R)  on  v ⊗ v' ⊗ a
inline MultiLinMap brz8_lhs(const CrossedData& c) {
    const Algebra& A = c.alg();
    const Space& V = c.space();
    return tabulate({V, V, A.space()}, {A.space(), V}, [&](const Index& x) {
        Terms out;
        for (const auto& [r1, c1] : legs(c.r_map(), {x[1], x[2]}))
            for (const auto& [r2, c2] : legs(c.r_map(), {x[0], r1[0]}))
                for (const auto& [s, c3] : legs(c.sigma(), {r2[1], r1[1]}))
                    for (const auto& [m, c4] : times(A, r2[0], s[0])) add(out, {m[0], s[1]}, c1 * c2 * c3 * c4);
        return out;
    });
}

// σ₁(v,v') a_R ⊗ σ₂(v,v')_R
inline MultiLinMap brz8_rhs(const CrossedData& c) {
    const Algebra& A = c.alg();
    const Space& V = c.space();
    return tabulate({V, V, A.space()}, {A.space(), V}, [&](const Index& x) {
        Terms out;
        for (const auto& [s, c1] : legs(c.sigma(), {x[0], x[1]}))
            for (const auto& [r, c2] : legs(c.r_map(), {s[1], x[2]}))
                for (const auto& [m, c3] : times(A, s[0], r[0])) add(out, {m[0], r[1]}, c1 * c2 * c3);
        return out;
    });
}

// (a ⊗ v)(a' ⊗ v') = a a'_R σ₁(v_R, v') ⊗ σ₂(v_R, v')
inline MultiLinMap crossed_mult(const CrossedData& c) {
    const Algebra& A = c.alg();
    const Space& V = c.space();
    return tabulate({A.space(), V, A.space(), V}, {A.space(), V}, [&](const Index& x) {
        Terms out;
        for (const auto& [r, c1] : legs(c.r_map(), {x[1], x[2]}))
            for (const auto& [s, c2] : legs(c.sigma(), {r[1], x[3]}))
                for (const auto& [m1, c3] : times(A, x[0], r[0]))
                    for (const auto& [m2, c4] : times(A, m1[0], s[0])) add(out, {m2[0], s[1]}, c1 * c2 * c3 * c4);
        return out;
    });
}

// ------------------------------------------------------------ iteration

// (a_R)_P ⊗ (v_R)_Q ⊗ (w_P)_Q  on  w ⊗ v ⊗ a
inline MultiLinMap braid_lhs(const IterationData& d) {
    const Space& A = d.alg().space();
    const Space& V = d.left().space();
    const Space& W = d.right().space();
    return tabulate({W, V, A}, {A, V, W}, [&](const Index& x) {
        Terms out;
        for (const auto& [r, c1] : legs(d.left().r_map(), {x[1], x[2]}))
            for (const auto& [p, c2] : legs(d.right().r_map(), {x[0], r[0]}))
                for (const auto& [q, c3] : legs(d.q_map(), {p[1], r[1]})) add(out, {p[0], q[0], q[1]}, c1 * c2 * c3);
        return out;
    });
}

// (a_P)_R ⊗ (v_Q)_R ⊗ (w_Q)_P
inline MultiLinMap braid_rhs(const IterationData& d) {
    const Space& A = d.alg().space();
    const Space& V = d.left().space();
    const Space& W = d.right().space();
    return tabulate({W, V, A}, {A, V, W}, [&](const Index& x) {
        Terms out;
        for (const auto& [q, c1] : legs(d.q_map(), {x[0], x[1]}))
            for (const auto& [p, c2] : legs(d.right().r_map(), {q[1], x[2]}))
                for (const auto& [r, c3] : legs(d.left().r_map(), {q[0], p[0]})) add(out, {r[0], r[1], p[1]}, c1 * c2 * c3);
        return out;
    });
}

// σ₁(v,v')_P ⊗ σ₂(v,v')_Q ⊗ (w_P)_Q  on  w ⊗ v ⊗ v'
inline MultiLinMap pqsigma_lhs(const IterationData& d) {
    const Space& A = d.alg().space();
    const Space& V = d.left().space();
    const Space& W = d.right().space();
    return tabulate({W, V, V}, {A, V, W}, [&](const Index& x) {
        Terms out;
        for (const auto& [s, c1] : legs(d.left().sigma(), {x[1], x[2]}))
            for (const auto& [p, c2] : legs(d.right().r_map(), {x[0], s[0]}))
                for (const auto& [q, c3] : legs(d.q_map(), {p[1], s[1]})) add(out, {p[0], q[0], q[1]}, c1 * c2 * c3);
        return out;
    });
}

// σ₁(v_Q, v'_q) ⊗ σ₂(v_Q, v'_q) ⊗ (w_Q)_q
inline MultiLinMap pqsigma_rhs(const IterationData& d) {
    const Space& A = d.alg().space();
    const Space& V = d.left().space();
    const Space& W = d.right().space();
    return tabulate({W, V, V}, {A, V, W}, [&](const Index& x) {
        Terms out;
        for (const auto& [q1, c1] : legs(d.q_map(), {x[0], x[1]}))
            for (const auto& [q2, c2] : legs(d.q_map(), {q1[1], x[2]}))
                for (const auto& [s, c3] : legs(d.left().sigma(), {q1[0], q2[0]}))
                    add(out, {s[0], s[1], q2[1]}, c1 * c2 * c3);
        return out;
    });
}

// ν₁(w,w') ⊗ v_Q ⊗ ν₂(w,w')_Q  on  w ⊗ w' ⊗ v
inline MultiLinMap rqniu_lhs(const IterationData& d) {
    const Space& A = d.alg().space();
    const Space& V = d.left().space();
    const Space& W = d.right().space();
    return tabulate({W, W, V}, {A, V, W}, [&](const Index& x) {
        Terms out;
        for (const auto& [n, c1] : legs(d.right().sigma(), {x[0], x[1]}))
            for (const auto& [q, c2] : legs(d.q_map(), {n[1], x[2]})) add(out, {n[0], q[0], q[1]}, c1 * c2);
        return out;
    });
}

// ν₁(w_q, w'_Q)_R ⊗ ((v_Q)_q)_R ⊗ ν₂(w_q, w'_Q)
inline MultiLinMap rqniu_rhs(const IterationData& d) {
    const Space& A = d.alg().space();
    const Space& V = d.left().space();
    const Space& W = d.right().space();
    return tabulate({W, W, V}, {A, V, W}, [&](const Index& x) {
        Terms out;
        for (const auto& [q1, c1] : legs(d.q_map(), {x[1], x[2]}))
            for (const auto& [q2, c2] : legs(d.q_map(), {x[0], q1[0]}))
                for (const auto& [n, c3] : legs(d.right().sigma(), {q2[1], q1[1]}))
                    for (const auto& [r, c4] : legs(d.left().r_map(), {q2[0], n[0]}))
                        add(out, {r[0], r[1], n[1]}, c1 * c2 * c3 * c4);
        return out;
    });
}

// (a⊗v⊗w)(a'⊗v'⊗w') = a (a'_P)_𝓡 σ₁(v_𝓡, v'_Q) ν₁((w_P)_Q, w')_r ⊗ σ₂(v_𝓡, v'_Q)_r ⊗ ν₂((w_P)_Q, w')
inline MultiLinMap explicit_mult(const IterationData& d) {
    const Algebra& alg = d.alg();
    const Space& A = alg.space();
    const Space& V = d.left().space();
    const Space& W = d.right().space();
    return tabulate({A, V, W, A, V, W}, {A, V, W}, [&](const Index& x) {
        Terms out;
        for (const auto& [p, c1] : legs(d.right().r_map(), {x[2], x[3]}))          // a'_P ⊗ w_P
            for (const auto& [r1, c2] : legs(d.left().r_map(), {x[1], p[0]}))      // (a'_P)_𝓡 ⊗ v_𝓡
                for (const auto& [q, c3] : legs(d.q_map(), {p[1], x[4]}))          // v'_Q ⊗ (w_P)_Q
                    for (const auto& [s, c4] : legs(d.left().sigma(), {r1[1], q[0]}))
                        for (const auto& [n, c5] : legs(d.right().sigma(), {q[1], x[5]}))
                            for (const auto& [r2, c6] : legs(d.left().r_map(), {s[1], n[0]}))
                                for (const auto& [m1, k1] : times(alg, x[0], r1[0]))
                                    for (const auto& [m2, k2] : times(alg, m1[0], s[0]))
                                        for (const auto& [m3, k3] : times(alg, m2[0], r2[0]))
                                            add(out, {m3[0], r2[1], n[1]}, c1 * c2 * c3 * c4 * c5 * c6 * k1 * k2 * k3);
        return out;
    });
}

// (a⊗b⊗c)(a'⊗b'⊗c') = a(a'_{R₃})_{R₁} ⊗ b_{R₁}b'_{R₂} ⊗ (c_{R₃})_{R₂}c'
inline MultiLinMap iterated_ttp(const Algebra& a, const Algebra& b, const Algebra& c, const MultiLinMap& r1,
                                const MultiLinMap& r2, const MultiLinMap& r3) {
    return tabulate({a.space(), b.space(), c.space(), a.space(), b.space(), c.space()},
                    {a.space(), b.space(), c.space()}, [&](const Index& x) {
                        Terms out;
                        for (const auto& [t3, c1] : legs(r3, {x[2], x[3]}))           // a'_{R3} ⊗ c_{R3}
                            for (const auto& [t1, c2] : legs(r1, {x[1], t3[0]}))      // (a'_{R3})_{R1} ⊗ b_{R1}
                                for (const auto& [t2, c3] : legs(r2, {t3[1], x[4]}))  // b'_{R2} ⊗ (c_{R3})_{R2}
                                    for (const auto& [ma, k1] : times(a, x[0], t1[0]))
                                        for (const auto& [mb, k2] : times(b, t1[1], t2[0]))
                                            for (const auto& [mc, k3] : times(c, t2[1], x[5]))
                                                add(out, {ma[0], mb[0], mc[0]}, c1 * c2 * c3 * k1 * k2 * k3);
                        return out;
                    });
}

// Sign twist built straight from the definition: b⊗a ↦ (-1)^{|a||b|} a⊗b.
inline MultiLinMap sign_map(const Algebra& a, const std::vector<int>& pa, const Algebra& b, const std::vector<int>& pb) {
    return tabulate({b.space(), a.space()}, {a.space(), b.space()}, [&](const Index& x) {
        return Terms{{{x[1], x[0]}, Scalar(pa[x[1]] && pb[x[0]] ? -1 : 1)}};
    });
}

// Brute-force associativity / unit scan over basis triples.
inline bool associative(const Algebra& a) {
    const std::size_t n = a.dim();
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            for (std::size_t k = 0; k < n; ++k) {
                Terms lhs, rhs;
                for (const auto& [m, c1] : times(a, i, j))
                    for (const auto& [t, c2] : times(a, m[0], k)) add(lhs, t, c1 * c2);
                for (const auto& [m, c1] : times(a, j, k))
                    for (const auto& [t, c2] : times(a, i, m[0])) add(rhs, t, c1 * c2);
                std::erase_if(lhs, [](const auto& kv) { return kv.second.is_zero(); });
                std::erase_if(rhs, [](const auto& kv) { return kv.second.is_zero(); });
                if (lhs != rhs) return false;
            }
    return true;
}

}  // namespace oracle
