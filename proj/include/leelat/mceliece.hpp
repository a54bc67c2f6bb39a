#ifndef LEELAT_MCELIECE_HPP
#define LEELAT_MCELIECE_HPP

#include "leelat/reductions.hpp"
#include "leelat/rng.hpp"

namespace leelat {

// Signed permutation: phi(x)_i = signs[i] * x[perm[i]] mod q. Signed
// permutations preserve the Lee weight for every q.
struct LeeIsometry {
    std::vector<std::size_t> perm;  // image position i takes input position perm[i]
    std::vector<int> signs;         // +1 or -1

    ZqVec apply(const ZqVec& x) const;
    ZqVec apply_inverse(const ZqVec& x) const;
};

LeeIsometry identity_isometry(std::size_t n);
LeeIsometry random_isometry(std::size_t n, Rng& rng);

struct KeyPair {
    LinearCode secret;               // G_sec
    LinearCode pub;                  // G_pub = phi(G_sec) applied row-wise
    LeeIsometry phi;
    std::int64_t w = 0;              // error capacity
    std::vector<std::size_t> info_set;  // columns with unit-determinant submatrix
};

struct Ciphertext {
    ZqVec c;
};

// Exact count of vectors in Z_q^n of Lee weight exactly w (dynamic
// programming over coordinates).
Int count_fixed_lee_weight(std::int64_t q, std::size_t n, std::int64_t w);

// Uniform over the weight-w sphere, coordinate by coordinate with
// DP-count-proportional probabilities.
ZqVec sample_fixed_lee_weight(std::int64_t q, std::size_t n, std::int64_t w,
                              Rng& rng);

// Rejection-samples G_sec until 2w < min{q, d_L(C_sec)} and an information
// set with unit-determinant submatrix exists.
KeyPair keygen(std::int64_t q, std::size_t n, std::size_t k, std::int64_t w,
               Rng& rng, int max_retries = 1000);

Ciphertext encrypt(const KeyPair& kp, const ZqVec& m, Rng& rng);
ZqVec decrypt(const KeyPair& kp, const Ciphertext& ct);

enum class AttackPath { kLeedpToBdd, kUsvpEmbedding };

// Treats the ciphertext as a LeeDP instance on the public code and solves it
// through the lattice reduction; recovers m over the public information set.
ZqVec message_recovery_attack(const KeyPair& kp, const Ciphertext& ct,
                              AttackPath path = AttackPath::kLeedpToBdd,
                              const Int& mu = 1);

// Solve m from a known codeword m * G using the information set columns.
ZqVec message_from_codeword(const LinearCode& code,
                            const std::vector<std::size_t>& info_set,
                            const ZqVec& codeword);

// Information set with a unit-determinant k x k submatrix, if any.
std::optional<std::vector<std::size_t>> find_information_set(const LinearCode& c);

}  // namespace leelat

#endif
