#include "pseudoalg/pseudoalgebra.hpp"

#include <cstdlib>
#include <future>
#include <string>

namespace pseudoalg {

namespace {

int thread_cap() {
    const char* env = std::getenv("PSEUDOALG_THREADS");
    if (!env)
        return 1;
    int n = std::atoi(env);
    return n < 1 ? 1 : n;
}

Tensor3 jacobi_residual(const PseudoAlgebra& A, int i, int j, int l, int m) {
    Tensor3 r;
    const int n = A.rank();
    for (int k = 0; k < n; ++k) {
        const Tensor2 gij = A.gamma(i, j, k);
        if (!gij.is_zero())
            r += comp_left(gij, A.gamma(k, l, m));
        const Tensor2 gjl = A.gamma(j, l, k);
        if (!gjl.is_zero())
            r -= comp_right(gjl, A.gamma(i, k, m));
        const Tensor2 gil = A.gamma(i, l, k);
        if (!gil.is_zero())
            r += t3_swap12(comp_right(gil, A.gamma(j, k, m)));
    }
    return r;
}

} // namespace

CheckReport check_skew(const PseudoAlgebra& A) {
    CheckReport rep;
    const int n = A.rank();
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            for (int k = 0; k < n; ++k) {
                Tensor2 res = A.gamma(j, i, k) + t2_swap(A.gamma(i, j, k));
                if (!res.is_zero()) {
                    rep.skew_pass = false;
                    CheckFailure f;
                    f.kind = CheckFailure::Kind::Skew;
                    f.i = j;
                    f.j = i;
                    f.component = k;
                    f.skew_residual = std::move(res);
                    rep.failures.push_back(std::move(f));
                }
            }
    return rep;
}

CheckReport check_jacobi(const PseudoAlgebra& A) {
    CheckReport rep;
    const int n = A.rank();
    if (n == 0)
        return rep;

    std::vector<std::array<int, 3>> triples;
    triples.reserve(static_cast<size_t>(n) * n * n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            for (int l = 0; l < n; ++l)
                triples.push_back({i, j, l});

    auto run = [&](size_t lo, size_t hi) {
        std::vector<CheckFailure> out;
        for (size_t t = lo; t < hi; ++t) {
            auto [i, j, l] = triples[t];
            for (int m = 0; m < n; ++m) {
                Tensor3 res = jacobi_residual(A, i, j, l, m);
                if (!res.is_zero()) {
                    CheckFailure f;
                    f.kind = CheckFailure::Kind::Jacobi;
                    f.i = i;
                    f.j = j;
                    f.l = l;
                    f.component = m;
                    f.jacobi_residual = std::move(res);
                    out.push_back(std::move(f));
                }
            }
        }
        return out;
    };

    const int cap = thread_cap();
    if (cap <= 1 || triples.size() < 8) {
        auto fails = run(0, triples.size());
        rep.jacobi_pass = fails.empty();
        rep.failures = std::move(fails);
        return rep;
    }

    // Chunked fan-out; results merged in index order so reports are
    // deterministic regardless of scheduling.
    const size_t chunks = std::min<size_t>(static_cast<size_t>(cap), triples.size());
    std::vector<std::future<std::vector<CheckFailure>>> futs;
    const size_t per = (triples.size() + chunks - 1) / chunks;
    for (size_t c = 0; c < chunks; ++c) {
        size_t lo = c * per, hi = std::min(triples.size(), lo + per);
        if (lo >= hi)
            break;
        futs.push_back(std::async(std::launch::async, run, lo, hi));
    }
    for (auto& f : futs) {
        auto part = f.get();
        rep.failures.insert(rep.failures.end(), std::make_move_iterator(part.begin()),
                            std::make_move_iterator(part.end()));
    }
    rep.jacobi_pass = rep.failures.empty();
    return rep;
}

CheckReport check_all(const PseudoAlgebra& A) {
    CheckReport skew = check_skew(A);
    CheckReport jac = check_jacobi(A);
    CheckReport rep;
    rep.skew_pass = skew.skew_pass;
    rep.jacobi_pass = jac.jacobi_pass;
    rep.failures = std::move(skew.failures);
    rep.failures.insert(rep.failures.end(), std::make_move_iterator(jac.failures.begin()),
                        std::make_move_iterator(jac.failures.end()));
    return rep;
}

AlgebraClass classify(const PseudoAlgebra& A) {
    if (!check_jacobi(A).jacobi_pass)
        return AlgebraClass::NotLeibniz;
    return check_skew(A).skew_pass ? AlgebraClass::Lie : AlgebraClass::LeibnizNotLie;
}

SubmoduleBasis bracket_submodules(const PseudoAlgebra& A, const SubmoduleBasis& X,
                                  const SubmoduleBasis& Y) {
    const int n = A.rank();
    SubmoduleBasis out;
    for (const auto& x : X.generators) {
        for (const auto& y : Y.generators) {
            // [x, y] = sum_{i,j} ((f_i (x) g_j) gamma_ij^k) (x)_H e_k
            std::vector<Tensor2> comp(static_cast<size_t>(n));
            for (int i = 0; i < n; ++i) {
                if (x[static_cast<size_t>(i)].is_zero())
                    continue;
                for (int j = 0; j < n; ++j) {
                    if (y[static_cast<size_t>(j)].is_zero() || A.bracket_is_zero(i, j))
                        continue;
                    Tensor2 fg = t2_outer(x[static_cast<size_t>(i)], y[static_cast<size_t>(j)]);
                    for (int k = 0; k < n; ++k) {
                        Tensor2 g = A.gamma(i, j, k);
                        if (!g.is_zero())
                            comp[static_cast<size_t>(k)] += t2_mul(fg, g);
                    }
                }
            }
            // Canonical form per component, collected per lambda-degree.
            std::map<int, std::vector<HPoly>> by_degree;
            for (int k = 0; k < n; ++k) {
                CanonicalPair cp = normal_form(comp[static_cast<size_t>(k)]);
                for (auto& [d, h] : cp.terms) {
                    auto& vec = by_degree[d];
                    vec.resize(static_cast<size_t>(n));
                    vec[static_cast<size_t>(k)] = std::move(h);
                }
            }
            for (auto& [d, vec] : by_degree) {
                vec.resize(static_cast<size_t>(n));
                out.generators.push_back(std::move(vec));
            }
        }
    }
    return out;
}

std::vector<DerivedStep> derived_series(const PseudoAlgebra& A, int max_steps) {
    if (max_steps < 1)
        throw std::invalid_argument("derived_series: max_steps must be >= 1");
    const int n = A.rank();
    std::vector<DerivedStep> steps;
    SubmoduleBasis current = SubmoduleBasis::full(n);
    steps.push_back({n, n == 0});
    for (int it = 0; it < max_steps && !steps.back().is_zero; ++it) {
        SubmoduleBasis next = bracket_submodules(A, current, current);
        // Echelon-reduce the generator list; keeps the module, bounds growth.
        PolyRowModule mod(static_cast<size_t>(n));
        for (auto& g : next.generators)
            mod.insert(std::move(g));
        SubmoduleBasis reduced;
        reduced.generators = mod.rows();
        steps.push_back({static_cast<int>(mod.rank()), mod.is_zero()});
        current = std::move(reduced);
    }
    return steps;
}

PseudoAlgebra change_basis_add(const PseudoAlgebra& A, int i, int j, const HPoly& a) {
    if (i == j)
        throw std::invalid_argument("change_basis_add: indices must differ");
    const int n = A.rank();
    PseudoAlgebra B(A.name() + "'", n);

    // e_i' = e_i + a e_j.  Old-basis coordinates of the new basis:
    auto coords = [&](int r) {
        std::vector<HPoly> v(static_cast<size_t>(n));
        v[static_cast<size_t>(r)] = HPoly::one();
        if (r == i)
            v[static_cast<size_t>(j)] += a;
        return v;
    };

    for (int p = 0; p < n; ++p) {
        for (int q = 0; q < n; ++q) {
            auto x = coords(p), y = coords(q);
            std::vector<Tensor2> comp(static_cast<size_t>(n));
            for (int u = 0; u < n; ++u) {
                if (x[static_cast<size_t>(u)].is_zero())
                    continue;
                for (int v = 0; v < n; ++v) {
                    if (y[static_cast<size_t>(v)].is_zero() || A.bracket_is_zero(u, v))
                        continue;
                    Tensor2 fg = t2_outer(x[static_cast<size_t>(u)], y[static_cast<size_t>(v)]);
                    for (int k = 0; k < n; ++k) {
                        Tensor2 g = A.gamma(u, v, k);
                        if (!g.is_zero())
                            comp[static_cast<size_t>(k)] += t2_mul(fg, g);
                    }
                }
            }
            // Rewrite outputs in the new basis: e_k = e_k' for k != i, and
            // e_i = e_i' - a e_j, pushing the k[s] factor through (x)_H.
            for (int k = 0; k < n; ++k) {
                const Tensor2& t = comp[static_cast<size_t>(k)];
                if (t.is_zero())
                    continue;
                if (k != i) {
                    B.add_bracket(p, q, k, t);
                } else {
                    B.add_bracket(p, q, i, t);
                    B.add_bracket(p, q, j, -right_delta_action(t, a));
                }
            }
        }
    }
    return B;
}

} // namespace pseudoalg
