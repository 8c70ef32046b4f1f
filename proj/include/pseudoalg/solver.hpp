#pragma once

#include "pseudoalg/identities.hpp"
#include "pseudoalg/linalg.hpp"
#include "pseudoalg/tensor.hpp"

#include <map>
#include <stdexcept>
#include <string>
#include <vector>

namespace pseudoalg {

struct NonlinearOccurrence : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// A structure constant treated as unknown, with per-slot degree bounds.
/// Antisymmetric unknowns range over a square box and use the basis
/// s^(a) (x) s^(b) - s^(b) (x) s^(a), a < b.
struct UnknownTensor {
    enum class Symmetry { None, Antisymmetric };

    std::string name;
    int max_a = 0;
    int max_b = 0;
    Symmetry symmetry = Symmetry::None;

    std::vector<Tensor2> basis() const;
};

/// Exact linear system "residual = 0" for one identity with one unknown.
/// Columns follow UnknownTensor::basis() order; one row per H^(3) monomial.
struct LinearSystem {
    std::string identity_id;
    std::vector<Tensor2> columns;             // unknown-coefficient basis
    std::vector<Tensor3::Key> row_monomials;  // provenance per row
    RatMatrix matrix;

    /// Nullspace vectors mapped back to tensors.
    std::vector<Tensor2> nullspace() const;
};

/// Builds the linear system for `identity(template_id)` with every slot bound
/// in `known` except `unknown.name`.  Throws NonlinearOccurrence when the
/// unknown appears twice in one term (e.g. eta11 in eq212).
LinearSystem residual_as_linear_map(const std::string& template_id,
                                    const std::map<std::string, Tensor2>& known,
                                    const UnknownTensor& unknown);

enum class CohomologyVariant { Lie, Leibniz, Trivial };

std::string to_string(CohomologyVariant v);

struct CohomologyReport {
    CohomologyVariant variant = CohomologyVariant::Lie;
    Rat lambda;
    Rat kappa;
    int degree_bound = 0;
    int solution_dim = 0;
    int coboundary_dim = 0;
    int h2_dim = 0;
    std::vector<Tensor2> basis;        // representatives mod coboundaries
    std::vector<Tensor2> coboundaries; // basis of the coboundary space

    /// Canonical representative of t modulo the coboundary space (same
    /// reduction used to produce `basis`).
    Tensor2 reduce(const Tensor2& t) const;
};

/// Solution space of the second-cohomology identity for the chosen variant at
/// (lambda, kappa), modulo basis-change coboundaries, both within per-slot
/// degree `degree_bound`.
CohomologyReport cohomology(CohomologyVariant variant, const Rat& lambda, const Rat& kappa,
                            int degree_bound);

struct MTypePoint {
    int m = 0;
    Rat lambda1;
    bool solvable = false;
    Rat lambda2;                // the weight that admits a solution, if any
    std::vector<Tensor2> basis; // solutions with top slot degree exactly m
};

/// For each m <= m_max and each grid value of lambda1 (kappa1 = 0), decides
/// whether a nonzero antisymmetric alpha'_m with top slot degree exactly m
/// satisfies the extension identity, scanning the finitely many admissible
/// second weights lambda2 = 2 lambda1 - d, d = m..2m-1.
std::vector<MTypePoint> enumerate_mtype(int m_max, int degree_bound,
                                        const std::vector<Rat>& lambda_grid);

/// Joint solution space for the [e1, e2]-constant eta at (lambda1, kappa1):
/// the linear identity is imposed for every second weight, then the quadratic
/// symmetry identity is verified on the resulting space.
std::vector<Tensor2> solve_eta(int degree_bound, const Rat& lambda1, const Rat& kappa1);

} // namespace pseudoalg
