#pragma once

#include "pseudoalg/linalg.hpp"
#include "pseudoalg/tensor.hpp"

#include <map>
#include <optional>
#include <string>
#include <vector>

namespace pseudoalg {

/// Parameters of a rank-one module over the Virasoro conformal algebra:
/// beta = lambda s(x)1 - 1(x)s + kappa (x)1.  Irreducible iff lambda != 1.
struct CKParams {
    Rat lambda;
    Rat kappa;

    Tensor2 beta() const {
        Tensor2 t;
        t.add_to(1, 0, lambda);
        t.add_to(0, 1, Rat(-1));
        t.add_to(0, 0, kappa);
        return t;
    }
    bool irreducible() const { return lambda != Rat(1); }
};

/// alpha = s(x)1 - 1(x)s, the Virasoro structure constant.
inline Tensor2 virasoro_alpha() {
    Tensor2 t;
    t.add_to(1, 0, Rat(1));
    t.add_to(0, 1, Rat(-1));
    return t;
}

struct CheckFailure {
    enum class Kind { Skew, Jacobi };
    Kind kind;
    int i = 0;
    int j = 0;
    int l = 0;       // third index, Jacobi only
    int component = 0;
    Tensor2 skew_residual;   // set for Kind::Skew
    Tensor3 jacobi_residual; // set for Kind::Jacobi
};

struct CheckReport {
    bool skew_pass = true;
    bool jacobi_pass = true;
    std::vector<CheckFailure> failures;

    bool lie() const { return skew_pass && jacobi_pass; }
};

enum class AlgebraClass { Lie, LeibnizNotLie, NotLeibniz };

inline std::string to_string(AlgebraClass c) {
    switch (c) {
    case AlgebraClass::Lie: return "lie";
    case AlgebraClass::LeibnizNotLie: return "leibniz-not-lie";
    case AlgebraClass::NotLeibniz: return "not-leibniz";
    }
    return "?";
}

/// Free rank-n module with pseudobracket structure constants
/// gamma(i,j)[k] in H (x) H, the e_k-component of [e_i, e_j].
/// Missing (i,j) entries denote the zero bracket.  Immutable in spirit:
/// build once, then only query.
class PseudoAlgebra {
  public:
    PseudoAlgebra() = default;
    PseudoAlgebra(std::string name, int rank) : name_(std::move(name)), rank_(rank) {
        if (rank < 0)
            throw std::invalid_argument("PseudoAlgebra: negative rank");
    }

    const std::string& name() const { return name_; }
    void set_name(std::string n) { name_ = std::move(n); }
    int rank() const { return rank_; }

    void set_bracket(int i, int j, int k, Tensor2 value) {
        check_index(i);
        check_index(j);
        check_index(k);
        auto& row = gamma_[{i, j}];
        row.resize(static_cast<size_t>(rank_));
        row[static_cast<size_t>(k)] = std::move(value);
        prune(i, j);
    }

    void add_bracket(int i, int j, int k, const Tensor2& value) {
        check_index(i);
        check_index(j);
        check_index(k);
        auto& row = gamma_[{i, j}];
        row.resize(static_cast<size_t>(rank_));
        row[static_cast<size_t>(k)] += value;
        prune(i, j);
    }

    /// The e_k-component of [e_i, e_j].
    Tensor2 gamma(int i, int j, int k) const {
        check_index(i);
        check_index(j);
        check_index(k);
        auto it = gamma_.find({i, j});
        if (it == gamma_.end())
            return Tensor2();
        return it->second[static_cast<size_t>(k)];
    }

    bool bracket_is_zero(int i, int j) const {
        return gamma_.find({i, j}) == gamma_.end();
    }

    const std::map<std::string, Rat>& params() const { return params_; }
    void set_param(const std::string& key, Rat v) { params_[key] = std::move(v); }

    const std::optional<CheckReport>& verification() const { return verification_; }
    void set_verification(CheckReport r) { verification_ = std::move(r); }

  private:
    void check_index(int i) const {
        if (i < 0 || i >= rank_)
            throw std::out_of_range("PseudoAlgebra: basis index out of range");
    }
    void prune(int i, int j) {
        auto it = gamma_.find({i, j});
        for (const Tensor2& t : it->second)
            if (!t.is_zero())
                return;
        gamma_.erase(it);
    }

    std::string name_;
    int rank_ = 0;
    std::map<std::pair<int, int>, std::vector<Tensor2>> gamma_;
    std::map<std::string, Rat> params_;
    std::optional<CheckReport> verification_;
};

/// Residual gamma(j,i)^k + (12) gamma(i,j)^k for every triple; all must vanish.
CheckReport check_skew(const PseudoAlgebra& A);

/// Jacobi residual for every (i, j, l) and output component m:
///   sum_k comp_left(gamma_ij^k, gamma_kl^m)
///   - sum_k comp_right(gamma_jl^k, gamma_ik^m)
///   + (12) sum_k comp_right(gamma_il^k, gamma_jk^m).
CheckReport check_jacobi(const PseudoAlgebra& A);

/// Both checks merged into one report.
CheckReport check_all(const PseudoAlgebra& A);

AlgebraClass classify(const PseudoAlgebra& A);

/// Coordinates of module elements in the e-basis.
struct SubmoduleBasis {
    std::vector<std::vector<HPoly>> generators;

    static SubmoduleBasis full(int rank) {
        SubmoduleBasis b;
        for (int i = 0; i < rank; ++i) {
            std::vector<HPoly> v(static_cast<size_t>(rank));
            v[static_cast<size_t>(i)] = HPoly::one();
            b.generators.push_back(std::move(v));
        }
        return b;
    }
};

/// Generators of the submodule [X, Y]: the canonical-form action vectors of
/// all pairwise brackets of generators.
SubmoduleBasis bracket_submodules(const PseudoAlgebra& A, const SubmoduleBasis& X,
                                  const SubmoduleBasis& Y);

struct DerivedStep {
    int rank = 0;
    bool is_zero = false;
};

/// Ranks (over k(s)) along A, A^(1) = [A,A], A^(2), ...  Stops after the first
/// zero term or after max_steps brackets.
std::vector<DerivedStep> derived_series(const PseudoAlgebra& A, int max_steps);

/// Change of basis e_i' = e_i + A(s) e_j (i != j); brackets recomputed by
/// H-bilinearity.  The inverse substitution is e_i = e_i' - A(s) e_j.
PseudoAlgebra change_basis_add(const PseudoAlgebra& A, int i, int j, const HPoly& a);

} // namespace pseudoalg
