#pragma once

#include "hopfhc/cocyclic.hpp"

#include <memory>
#include <optional>
#include <string>
#include <vector>

namespace hopfhc {

struct LedgerEntry {
    std::string name;
    std::string degrees;
    bool pass = true;
    bool fatal = true;    // informational entries never gate the exit code
    std::string witness;  // first counterexample / explanatory note
};

struct IdentityLedger {
    std::vector<LedgerEntry> entries;
    void add(LedgerEntry e) { entries.push_back(std::move(e)); }
    void append(const IdentityLedger& o);
    bool all_fatal_pass() const;
};

/// Commutator subspace I at one degree of T_*(X, Y): the span of
/// [L_b, tau^{+-j}] images over basis words b and basis chains, 1 <= j <=
/// j_bound, closed under tau^{+-1} and every L_b (fixed-point iteration).
struct DegreeSubspace {
    int degree = 0;
    SubspaceBasis basis;
    bool tau_stable = false;
    bool lb_stable = false;
};
DegreeSubspace commutator_subspace(const ModuleCoalgebra* X, const CoefficientModule* Y,
                                   int degree, int j_bound);
/// Explicit matrix containment d0(I_n) inside I_{n+1}.
bool verify_d0_stability(const ModuleCoalgebra* X, const CoefficientModule* Y,
                         const DegreeSubspace& at_n, const DegreeSubspace& at_np1);

/// Quotient by span{eps(b) m - b m}; actions come with their counit values.
struct Coinvariants {
    std::vector<Index> representatives;
    SparseMatrix projection;
};
Coinvariants coinvariants(Index space_dim,
                          const std::vector<std::pair<SparseMatrix, Scalar>>& actions);

enum class Route { PImage, CoinvariantQuotient };

/// Finite-rank presentation of a degreewise cocyclic module: per-degree
/// dimensions, face matrices C^n -> C^{n+1} (j = 0..n+1), cyclic operators,
/// and the ledger of verified identities.
struct CocyclicData {
    std::string route;
    int max_degree = 0;                          // spaces exist for 0..max_degree
    std::vector<Index> dims;
    std::vector<std::vector<SparseMatrix>> faces; // faces[n][j] for n < max_degree
    std::vector<SparseMatrix> t_inv;              // per degree
    std::vector<SparseMatrix> t;                  // exact inverse of t_inv
    /// T_n -> C^n: the coinvariant projection, or the matrix of p_n.
    std::vector<SparseMatrix> projections;
    IdentityLedger ledger;
};

struct BuildOptions {
    int j_bound = 2;
    bool verify_identities = true;
};

/// Assemble CM_*(X, Y) up to max_degree.
///   Route::PImage            - H^(x)n (x) Y with d_j = p face_j i (needs Hopf
///                              self-X, stable aYD Y; refuses otherwise).
///   Route::CoinvariantQuotient - coinvariants of T_*(X,Y)/I (needs 0-stable Y).
CocyclicData build_cm_complex(std::shared_ptr<const ModuleCoalgebra> X,
                              std::shared_ptr<const CoefficientModule> Y, int max_degree,
                              Route route, const BuildOptions& opts = {});

/// Per-degree dimension and t-characteristic-polynomial agreement.
IdentityLedger compare_routes(const CocyclicData& a, const CocyclicData& b);

struct HomologyReport {
    std::string theory;
    int max_degree = 0;
    std::vector<Index> ranks; // rank of H^n / HC^n for n = 0..max_degree
    IdentityLedger ledger;
};

/// Exact Hochschild cohomology of the cochain complex with b = alternating
/// face sum; verifies b^2 = 0 first. Needs data.max_degree >= N+1.
HomologyReport hochschild_cohomology(const CocyclicData& data, int N);

/// Exact cyclic cohomology through the first-quadrant cyclic bicomplex with
/// columns alternating b and -b', rows alternating (1 - lambda) and the norm,
/// lambda_n = (-1)^n t_n^{-1}; verifies the row/column identities and the
/// anticommuting squares exactly. Needs data.max_degree >= N+1.
HomologyReport cyclic_cohomology_bicomplex(const CocyclicData& data, int N);

/// B/J as a module coalgebra plus the quotient-lemma certificate.
struct QuotientCoalgebraResult {
    std::shared_ptr<const ModuleCoalgebra> quotient;
    std::vector<Index> cm_dims;            // coinvariant-route CM of (B, Y)
    std::vector<Index> quotient_coinv_dims; // coinvariants of T_*(B/J, Y)
    IdentityLedger ledger;
};
/// Verifies the coideal property exactly (throws NotCoideal), checks the
/// hypothesis that every J-slab dies in the coinvariant-quotient CM complex
/// (throws HypothesisFailed with a witness), and certifies
/// CM_*(B,Y) ~ coinv T_*(B/J,Y) by per-degree dimension equality up to cap.
QuotientCoalgebraResult quotient_module_coalgebra(std::shared_ptr<const HopfPreset> B,
                                                  const std::vector<std::string>& ideal_generators,
                                                  std::shared_ptr<const CoefficientModule> Y,
                                                  int cap_degree);

/// Desk-scale verification of the U_q(sl2) vanishing relations. Enumerates
/// chains of total generator degree <= chain_degree (default cap - 1) in
/// cochain degrees <= n_max over Y = coalgebra_self, and certifies both
/// fundamental relations by exact chain-identity decompositions into
/// commutator terms (inside I) and counit-killed L-images, plus the pointwise
/// projector equalities in degree 0.
struct UqVanishingReport {
    IdentityLedger ledger;
    std::size_t chains_checked = 0;
};
UqVanishingReport uq_vanishing_check(const Scalar& q, int cap, int n_max, int chain_degree = -1);

/// Worker cap from HOPFHC_THREADS (defaults to hardware concurrency).
unsigned worker_threads();

} // namespace hopfhc
