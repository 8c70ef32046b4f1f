#include "pseudoalg/solver.hpp"

#include <algorithm>
#include <set>

namespace pseudoalg {

namespace {

/// Coordinate layout for tensors in the (0..box) x (0..box) square,
/// lex order on (a, b).
struct BoxCoords {
    int box;

    size_t size() const { return static_cast<size_t>(box + 1) * static_cast<size_t>(box + 1); }
    size_t index(int a, int b) const {
        return static_cast<size_t>(a) * static_cast<size_t>(box + 1) + static_cast<size_t>(b);
    }
    bool holds(const Tensor2& t) const {
        return t.max_left() <= box && t.max_right() <= box;
    }
    std::vector<Rat> flatten(const Tensor2& t) const {
        std::vector<Rat> v(size());
        for (const auto& [k, c] : t.terms()) {
            if (k.first > box || k.second > box)
                throw std::out_of_range("BoxCoords: tensor exceeds box");
            v[index(k.first, k.second)] = c;
        }
        return v;
    }
    Tensor2 unflatten(const std::vector<Rat>& v) const {
        Tensor2 t;
        for (int a = 0; a <= box; ++a)
            for (int b = 0; b <= box; ++b) {
                const Rat& c = v[index(a, b)];
                if (!c.is_zero())
                    t.add_to(a, b, c);
            }
        return t;
    }
};

Tensor2 ck_tensor(const Rat& lambda, const Rat& kappa) {
    Tensor2 t;
    t.add_to(1, 0, lambda);
    t.add_to(0, 1, Rat(-1));
    t.add_to(0, 0, kappa);
    return t;
}

Tensor2 alpha_tensor() {
    Tensor2 t;
    t.add_to(1, 0, Rat(1));
    t.add_to(0, 1, Rat(-1));
    return t;
}

/// Coboundary of the basis change e0 -> e0 + A e1 for the given variant:
///   lie:      (1 (x) A) eta1 + (A (x) 1) eta2 - alpha Delta(A)
///   leibniz:  (1 (x) A) eta1 - alpha Delta(A)
///   trivial:  - alpha Delta(A)
Tensor2 coboundary_of(CohomologyVariant variant, const Tensor2& eta1, const Tensor2& eta2,
                      const HPoly& a) {
    Tensor2 r = -t2_mul(alpha_tensor(), hp_coproduct(a));
    if (variant != CohomologyVariant::Trivial)
        r += t2_mul(t2_outer(HPoly::one(), a), eta1);
    if (variant == CohomologyVariant::Lie)
        r += t2_mul(t2_outer(a, HPoly::one()), eta2);
    return r;
}

} // namespace

std::vector<Tensor2> UnknownTensor::basis() const {
    std::vector<Tensor2> out;
    if (symmetry == Symmetry::Antisymmetric) {
        const int box = std::max(max_a, max_b);
        for (int a = 0; a <= box; ++a)
            for (int b = a + 1; b <= box; ++b) {
                Tensor2 t;
                t.add_to(a, b, Rat(1));
                t.add_to(b, a, Rat(-1));
                out.push_back(std::move(t));
            }
    } else {
        for (int a = 0; a <= max_a; ++a)
            for (int b = 0; b <= max_b; ++b)
                out.push_back(Tensor2::basis(a, b));
    }
    return out;
}

std::vector<Tensor2> LinearSystem::nullspace() const {
    std::vector<Tensor2> out;
    for (const auto& v : matrix.nullspace()) {
        Tensor2 t;
        for (size_t c = 0; c < columns.size(); ++c)
            if (!v[c].is_zero())
                t += columns[c].scaled(v[c]);
        out.push_back(std::move(t));
    }
    return out;
}

LinearSystem residual_as_linear_map(const std::string& template_id,
                                    const std::map<std::string, Tensor2>& known,
                                    const UnknownTensor& unknown) {
    const IdentityTemplate& tpl = identity(template_id);

    bool mentions = false;
    for (const auto& t : tpl.terms) {
        const bool in_first = t.first == unknown.name;
        const bool in_second = t.second == unknown.name;
        if (in_first && in_second)
            throw NonlinearOccurrence("identity " + template_id + ": unknown '" + unknown.name +
                                      "' occurs quadratically");
        mentions = mentions || in_first || in_second;
    }
    if (!mentions)
        throw std::invalid_argument("identity " + template_id + " does not mention unknown '" +
                                    unknown.name + "'");

    LinearSystem sys;
    sys.identity_id = template_id;
    sys.columns = unknown.basis();

    // Residual of each unknown-basis tensor; terms free of the unknown vanish
    // under the homogeneous substitution unknown = 0 and are rejected here.
    for (const auto& t : tpl.terms) {
        if (t.first != unknown.name && t.second != unknown.name) {
            auto it = known.find(t.first);
            auto jt = known.find(t.second);
            if (it == known.end() || jt == known.end())
                throw std::invalid_argument("identity " + template_id + ": unbound slot");
            Tensor2 second = t.swap_second ? t2_swap(jt->second) : jt->second;
            Tensor3 val = t.op == IdentityTerm::Op::CompLeft ? comp_left(it->second, second)
                                                             : comp_right(it->second, second);
            if (!val.is_zero())
                throw std::invalid_argument("identity " + template_id +
                                            ": constant term is nonzero; system is not "
                                            "homogeneous in '" +
                                            unknown.name + "'");
        }
    }

    std::vector<Tensor3> residuals;
    residuals.reserve(sys.columns.size());
    std::set<Tensor3::Key> monomials;
    for (const auto& col : sys.columns) {
        std::map<std::string, Tensor2> bind = known;
        bind[unknown.name] = col;
        Tensor3 r;
        for (const auto& t : tpl.terms) {
            if (t.first != unknown.name && t.second != unknown.name)
                continue;
            Tensor2 first = t.first == unknown.name ? col : bind.at(t.first);
            Tensor2 second = t.second == unknown.name ? col : bind.at(t.second);
            if (t.swap_second)
                second = t2_swap(second);
            Tensor3 val = t.op == IdentityTerm::Op::CompLeft ? comp_left(first, second)
                                                             : comp_right(first, second);
            if (t.swap_after)
                val = t3_swap12(val);
            r += val.scaled(t.coeff);
        }
        for (const auto& [k, c] : r.terms())
            monomials.insert(k);
        residuals.push_back(std::move(r));
    }

    sys.row_monomials.assign(monomials.begin(), monomials.end());
    sys.matrix = RatMatrix(sys.row_monomials.size(), sys.columns.size());
    for (size_t row = 0; row < sys.row_monomials.size(); ++row) {
        const auto& key = sys.row_monomials[row];
        for (size_t c = 0; c < residuals.size(); ++c) {
            auto it = residuals[c].terms().find(key);
            if (it != residuals[c].terms().end())
                sys.matrix.at(row, c) = it->second;
        }
    }
    return sys;
}

std::string to_string(CohomologyVariant v) {
    switch (v) {
    case CohomologyVariant::Lie: return "lie";
    case CohomologyVariant::Leibniz: return "leibniz";
    case CohomologyVariant::Trivial: return "trivial";
    }
    return "?";
}

Tensor2 CohomologyReport::reduce(const Tensor2& t) const {
    const int box = std::max({degree_bound, t.max_left(), t.max_right()});
    BoxCoords bc{box};
    RowSpace cob(bc.size());
    for (const auto& c : coboundaries)
        cob.insert(bc.flatten(c));
    return bc.unflatten(cob.reduce(bc.flatten(t)));
}

CohomologyReport cohomology(CohomologyVariant variant, const Rat& lambda, const Rat& kappa,
                            int degree_bound) {
    CohomologyReport rep;
    rep.variant = variant;
    rep.lambda = lambda;
    rep.kappa = kappa;
    rep.degree_bound = degree_bound;

    const Tensor2 eta1 = ck_tensor(lambda, kappa);
    const Tensor2 eta2 = -t2_swap(eta1);

    std::map<std::string, Tensor2> known;
    known["alpha"] = alpha_tensor();
    std::string tpl;
    switch (variant) {
    case CohomologyVariant::Lie:
        tpl = "aa1";
        known["eta1"] = eta1;
        known["eta2"] = eta2;
        break;
    case CohomologyVariant::Leibniz:
        tpl = "L8";
        known["eta1"] = eta1;
        break;
    case CohomologyVariant::Trivial:
        tpl = "L15";
        break;
    }

    UnknownTensor unknown{"alphap", degree_bound, degree_bound, UnknownTensor::Symmetry::None};
    LinearSystem sys = residual_as_linear_map(tpl, known, unknown);
    std::vector<Tensor2> solutions = sys.nullspace();
    rep.solution_dim = static_cast<int>(solutions.size());

    // Coboundaries that stay inside the degree box.  Images of higher-degree
    // basis changes are formed in a larger box and intersected with it.
    const int big = degree_bound + 3;
    BoxCoords big_bc{big};
    std::vector<std::vector<Rat>> images;
    for (int d = 0; d <= degree_bound + 2; ++d) {
        Tensor2 c = coboundary_of(variant, eta1, eta2, HPoly::basis(d));
        images.push_back(big_bc.flatten(c));
    }
    std::vector<size_t> outside;
    for (int a = 0; a <= big; ++a)
        for (int b = 0; b <= big; ++b)
            if (a > degree_bound || b > degree_bound)
                outside.push_back(big_bc.index(a, b));
    RatMatrix constraint(outside.size(), images.size());
    for (size_t r = 0; r < outside.size(); ++r)
        for (size_t c = 0; c < images.size(); ++c)
            constraint.at(r, c) = images[c][outside[r]];

    BoxCoords bc{degree_bound};
    RowSpace cob_space(bc.size());
    std::vector<Tensor2> cob_basis;
    for (const auto& combo : constraint.nullspace()) {
        std::vector<Rat> w(big_bc.size());
        for (size_t c = 0; c < images.size(); ++c) {
            if (combo[c].is_zero())
                continue;
            for (size_t idx = 0; idx < w.size(); ++idx)
                w[idx] += combo[c] * images[c][idx];
        }
        std::vector<Rat> inside(bc.size());
        for (int a = 0; a <= degree_bound; ++a)
            for (int b = 0; b <= degree_bound; ++b)
                inside[bc.index(a, b)] = w[big_bc.index(a, b)];
        if (cob_space.insert(inside)) {
            RatMatrix::normalize_int(inside);
            cob_basis.push_back(bc.unflatten(inside));
        }
    }
    rep.coboundary_dim = static_cast<int>(cob_space.dim());
    rep.coboundaries = std::move(cob_basis);

    // Representatives: solution vectors reduced against the coboundary space,
    // then against the representatives already accepted.
    RowSpace quotient(bc.size());
    for (const auto& s : solutions) {
        std::vector<Rat> v = cob_space.reduce(bc.flatten(s));
        v = quotient.reduce(std::move(v));
        bool zero = std::all_of(v.begin(), v.end(), [](const Rat& x) { return x.is_zero(); });
        if (zero)
            continue;
        quotient.insert(v);
        RatMatrix::normalize_int(v);
        rep.basis.push_back(bc.unflatten(v));
    }
    rep.h2_dim = rep.solution_dim - rep.coboundary_dim;
    return rep;
}

std::vector<MTypePoint> enumerate_mtype(int m_max, int degree_bound,
                                        const std::vector<Rat>& lambda_grid) {
    if (m_max > 8)
        throw std::invalid_argument("enumerate_mtype: m_max must be <= 8");
    (void)degree_bound; // residuals are exact; the unknown box is the m-square
    std::vector<MTypePoint> table;
    for (int m = 1; m <= m_max; ++m) {
        for (const Rat& l1 : lambda_grid) {
            MTypePoint pt;
            pt.m = m;
            pt.lambda1 = l1;
            for (int d = m; d <= 2 * m - 1 && !pt.solvable; ++d) {
                Rat l2 = Rat(2) * l1 - Rat(d);
                std::map<std::string, Tensor2> known;
                known["beta1"] = ck_tensor(l1, Rat(0));
                known["beta2"] = ck_tensor(l2, Rat(0));
                UnknownTensor unknown{"alpham", m, m, UnknownTensor::Symmetry::Antisymmetric};
                LinearSystem sys = residual_as_linear_map("eq218", known, unknown);
                std::vector<Tensor2> sol = sys.nullspace();
                std::vector<Tensor2> top;
                for (const auto& t : sol)
                    if (std::max(t.max_left(), t.max_right()) == m)
                        top.push_back(t);
                if (!top.empty()) {
                    pt.solvable = true;
                    pt.lambda2 = l2;
                    pt.basis = std::move(top);
                }
            }
            table.push_back(std::move(pt));
        }
    }
    return table;
}

std::vector<Tensor2> solve_eta(int degree_bound, const Rat& lambda1, const Rat& kappa1) {
    // eta is linear in the extension identity once the second weight is fixed;
    // imposing the identity for every second weight splits it into three
    // homogeneous systems (the constant part and the two weight directions).
    const Tensor2 beta1 = ck_tensor(lambda1, kappa1);
    auto weight_part = [](int a, int b) { return Tensor2::basis(a, b); };

    UnknownTensor unknown{"eta", degree_bound, degree_bound, UnknownTensor::Symmetry::None};
    std::vector<Tensor2> cols = unknown.basis();
    BoxCoords bc{degree_bound + 2};

    auto g_part = [&](const Tensor2& e, const Tensor2& x) {
        return t3_swap12(comp_right(x, e)) - comp_right(e, x);
    };

    std::vector<Tensor3> residuals;
    std::set<Tensor3::Key> monomials;
    for (const auto& e : cols) {
        Tensor3 r = comp_left(beta1, e) + g_part(e, -weight_part(0, 1)); // beta2 = -1 (x) s part
        Tensor3 r1 = g_part(e, weight_part(1, 0));                       // lambda2 direction
        Tensor3 r2 = g_part(e, weight_part(0, 0));                       // kappa2 direction
        // Stack the three residuals into disjoint monomial namespaces by
        // shifting the first slot; degrees are bounded so shifts cannot clash.
        Tensor3 stacked;
        const int shift = 4 * (degree_bound + 8);
        for (const auto& [k, c] : r.terms())
            stacked.add_to(k[0], k[1], k[2], c);
        for (const auto& [k, c] : r1.terms())
            stacked.add_to(k[0] + shift, k[1], k[2], c);
        for (const auto& [k, c] : r2.terms())
            stacked.add_to(k[0] + 2 * shift, k[1], k[2], c);
        for (const auto& [k, c] : stacked.terms())
            monomials.insert(k);
        residuals.push_back(std::move(stacked));
    }

    std::vector<Tensor3::Key> rows(monomials.begin(), monomials.end());
    RatMatrix mat(rows.size(), cols.size());
    for (size_t r = 0; r < rows.size(); ++r)
        for (size_t c = 0; c < cols.size(); ++c) {
            auto it = residuals[c].terms().find(rows[r]);
            if (it != residuals[c].terms().end())
                mat.at(r, c) = it->second;
        }

    std::vector<Tensor2> lin;
    for (const auto& v : mat.nullspace()) {
        Tensor2 t;
        for (size_t c = 0; c < cols.size(); ++c)
            if (!v[c].is_zero())
                t += cols[c].scaled(v[c]);
        lin.push_back(std::move(t));
    }

    // The remaining symmetry identity is quadratic; verify it on the linear
    // solution space (the bilinear residual must vanish on every pair).
    auto quad = [](const Tensor2& x, const Tensor2& y) {
        return comp_right(x, y) - t3_swap12(comp_right(x, y));
    };
    for (const auto& a : lin)
        for (const auto& b : lin) {
            Tensor3 r = quad(a, b) + quad(b, a);
            if (!r.is_zero())
                throw std::runtime_error(
                    "solve_eta: quadratic identity does not vanish on the linear "
                    "solution space; refine the degree bound");
        }
    return lin;
}

} // namespace pseudoalg
