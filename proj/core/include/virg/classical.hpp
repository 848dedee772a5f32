#pragma once

#include "virg/linalg.hpp"
#include "virg/scalar.hpp"
#include "virg/session.hpp"

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

namespace virg {

// Highest weight theory over Vir[Z b]. Indices are integers m standing for m b;
// the embedding is iota(m b) = m * index_scale (default 1, i.e. iota(b) = 1).
//
// Basis of level n: d_{-k_1} ... d_{-k_r} v with k_1 >= ... >= k_r >= 1 and
// sum k_j = n. d_m v = 0 for m > 0, d_0 v = h v, C v = c v.

using Partition = std::vector<int>;  // weakly decreasing parts

std::vector<Partition> partitions(int n);
// p(0..L) by the pentagonal-number recurrence.
std::vector<std::int64_t> partition_counts(int L);

using VermaVector = std::map<Partition, Scalar>;

class TruncatedVermaModule {
public:
    // c and h come from the session bindings (free symbols or rationals).
    TruncatedVermaModule(Session session, int level_cap, Rational index_scale = Rational(1));

    const Session& session() const { return session_; }
    int level_cap() const { return level_cap_; }
    const Scalar& c() const { return c_; }
    const Scalar& h() const { return h_; }

    const std::vector<Partition>& basis(int level) const;
    std::vector<std::int64_t> dims() const;

    // d_m applied to a basis vector; C acts by c. Exact, no truncation.
    VermaVector act(int m, const Partition& word) const;
    VermaVector act(int m, const VermaVector& v) const;
    VermaVector act_central(const VermaVector& v) const;
    // d_0 eigenvalue of level n vectors: h - n * index_scale.
    Scalar weight(int level) const;

    // Coefficient matrix of d_k: level n -> level n - k (rows: target basis).
    Matrix<Scalar> raising_matrix(int k, int level) const;

private:
    Session session_;
    int level_cap_;
    Rational scale_;
    Scalar c_;
    Scalar h_;
    std::vector<std::vector<Partition>> bases_;
};

std::vector<std::int64_t> verma_dims(const Session& session, int L);

struct SingularVectorReport {
    int level = 0;
    std::vector<VermaVector> kernel;  // joint kernel of d_1..d_n at this level
    // Stacked d_1, d_2 matrix when square: its determinant vanishes exactly when
    // a singular vector exists at this level.
    std::optional<Poly> raising_condition;
    // Determinant of the contravariant (Gram) matrix at this level.
    std::optional<Poly> gram_condition;
};

SingularVectorReport find_singular(const Session& session, int n, Rational index_scale = Rational(1));

// Dimensions of the Verma module modulo the submodule generated by the
// singular vectors found at levels 1..L. Requires c and h bound to rationals.
std::vector<std::int64_t> quotient_dims_after_singular(const Session& session, int L,
                                                       Rational index_scale = Rational(1));

// Dimensions of the irreducible quotient L(c, h): ranks of the Gram matrices.
std::vector<std::int64_t> irreducible_dims(const Session& session, int L, Rational index_scale = Rational(1));

// Gram matrix at level n: entry (i, j) is the coefficient of v in
// sigma(w_i) w_j v, where sigma reverses words and maps d_{-k} to d_k.
Matrix<Scalar> gram_matrix(const TruncatedVermaModule& module, int n);

std::string partition_to_string(const Partition& p);

} // namespace virg
