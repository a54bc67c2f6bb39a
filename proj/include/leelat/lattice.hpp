#ifndef LEELAT_LATTICE_HPP
#define LEELAT_LATTICE_HPP

#include <functional>
#include <optional>
#include <string>

#include "leelat/codes.hpp"
#include "leelat/zq.hpp"

namespace leelat {

struct PromiseViolation : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// k linearly independent integer rows spanning a rank-k lattice in Z^n.
struct LatticeBasis {
    std::size_t n = 0;
    IntMat rows;  // k x n

    LatticeBasis() = default;
    LatticeBasis(std::size_t ambient, IntMat basis_rows);

    std::size_t k() const { return rows.size(); }
    bool full_rank() const { return rows.size() == n; }
};

// --- exact integer linear algebra -----------------------------------------

Int determinant(const IntMat& a);                 // square, Bareiss
Int determinant(const LatticeBasis& b);           // requires k == n
Int gram_det(const LatticeBasis& b);              // det(B * B^T)
IntMat adjugate(const IntMat& a);                 // Adj(A) * A = det(A) * I
IntMat mat_mul(const IntMat& a, const IntMat& b);
IntMat transpose(const IntMat& a);

// Row-style Hermite normal form with positive pivots; zero rows dropped.
// If `transform` is given, it receives a unimodular U with U * A = HNF
// restricted to the surviving rows (only meaningful when no row collapses,
// i.e. rank == row count).
IntMat hnf(const IntMat& a, IntMat* transform = nullptr);

// Canonical-form equality of the generated lattices.
bool same_lattice(const LatticeBasis& a, const LatticeBasis& b);

// --- Construction A / A_G -------------------------------------------------

// Full-rank canonical (HNF) basis of C + qZ^n.
struct ConstructionA {
    LinearCode code;
    LatticeBasis basis;  // n x n, HNF
};

// Sublattice generated over Z by the center-lifted generator rows.
struct ConstructionAG {
    LinearCode code;
    LatticeBasis basis;  // k x n, the lifted rows unmodified
};

ConstructionA construction_a(const LinearCode& c);
ConstructionAG construction_ag(const LinearCode& c);

// --- membership -----------------------------------------------------------

struct MemberResult {
    bool member = false;
    IntVec witness;  // z with z * B = v, valid when member
};

MemberResult member(const LatticeBasis& b, const IntVec& v);

// --- exact l1 enumeration -------------------------------------------------

// Visits every lattice vector v with ||v - center||_1 <= radius (the zero
// vector included when it qualifies). Exhaustive via DFS over an HNF basis.
void enumerate_l1_ball(const LatticeBasis& b, const IntVec& center,
                       const Int& radius,
                       const std::function<void(const IntVec&)>& fn);

struct ShortVector {
    Int norm;
    IntVec vec;
};

// Exact lambda_1 via enumeration within `radius`; requires a lattice vector
// of norm <= radius to exist. Witness ties broken lexicographically.
ShortVector lambda1_l1(const LatticeBasis& b, const Int& radius);
// Shortest vector that is not an integer multiple of the lambda_1 witness.
ShortVector lambda2_l1(const LatticeBasis& b, const Int& radius);

// Construction A overloads; search radius q is always valid since
// (q, 0, ..., 0) is a lattice vector.
ShortVector lambda1_l1(const ConstructionA& a);
ShortVector lambda2_l1(const ConstructionA& a);

struct ClosestResult {
    IntVec vec;
    Int dist;
};

// Exact l1-closest lattice vector, ties lexicographic. The generic version
// seeds the search radius with a Babai-style rounding step.
ClosestResult closest_vector_l1_bruteforce(const LatticeBasis& b, const IntVec& r);
// Coset-separable exact CVP for Construction A lattices.
ClosestResult closest_vector_l1_bruteforce(const ConstructionA& a, const IntVec& r);

// --- promise problems -----------------------------------------------------

// BDD_alpha: requires d_1(r, L) <= alpha * lambda1 (verified, else
// PromiseViolation); returns the closest vector.
IntVec solve_bdd(const LatticeBasis& b, const IntVec& r, const Rat& alpha);
IntVec solve_bdd(const ConstructionA& a, const IntVec& r, const Rat& alpha);

// uSVP_gamma: requires lambda2 > gamma * lambda1 (verified); returns a
// lambda1 witness. `radius` bounds the lambda1 search for generic bases.
IntVec solve_usvp(const LatticeBasis& b, const Rat& gamma, const Int& radius);
IntVec solve_usvp(const ConstructionA& a, const Rat& gamma);

// --- text format ----------------------------------------------------------

// Line 1 "k n", then k rows of n integers.
std::string lattice_to_text(const LatticeBasis& b);
LatticeBasis lattice_from_text(const std::string& text);

}  // namespace leelat

#endif
