#include "pseudoalg/identities.hpp"

#include <algorithm>
#include <stdexcept>

namespace pseudoalg {

namespace {

using Op = IdentityTerm::Op;

IdentityTerm term(long long c, Op op, std::string first, std::string second,
                  bool swap_second = false, bool swap_after = false) {
    return IdentityTerm{Rat(c), op, std::move(first), std::move(second), swap_second, swap_after};
}

std::vector<IdentityTemplate> build_templates() {
    std::vector<IdentityTemplate> v;

    // Rank-two radical identities: [e0,e0] = alpha (x) e0 + alpha' (x) e1,
    // [e0,e1] = eta1 (x) e1, [e1,e0] = eta2 (x) e1, [e1,e1] = 0.
    v.push_back({"aa1",
                 {term(1, Op::CompLeft, "alpha", "alphap"),
                  term(1, Op::CompLeft, "alphap", "eta2"),
                  term(-1, Op::CompRight, "alpha", "alphap"),
                  term(1, Op::CompRight, "alpha", "alphap", false, true),
                  term(-1, Op::CompRight, "alphap", "eta1"),
                  term(1, Op::CompRight, "alphap", "eta1", false, true)}});
    v.push_back({"aa2",
                 {term(1, Op::CompLeft, "alpha", "eta1"),
                  term(-1, Op::CompRight, "eta1", "eta1"),
                  term(1, Op::CompRight, "eta1", "eta1", false, true)}});
    v.push_back({"aa3",
                 {term(1, Op::CompLeft, "eta2", "eta2"),
                  term(-1, Op::CompRight, "alpha", "eta2"),
                  term(1, Op::CompRight, "eta2", "eta1", false, true)}});
    v.push_back({"aa4",
                 {term(1, Op::CompLeft, "eta1", "eta2"),
                  term(-1, Op::CompRight, "eta2", "eta1"),
                  term(1, Op::CompRight, "alpha", "eta2", false, true)}});
    v.push_back({"L8",
                 {term(1, Op::CompLeft, "alpha", "alphap"),
                  term(-1, Op::CompRight, "alpha", "alphap"),
                  term(1, Op::CompRight, "alpha", "alphap", false, true),
                  term(-1, Op::CompRight, "alphap", "eta1"),
                  term(1, Op::CompRight, "alphap", "eta1", false, true)}});
    v.push_back({"L15",
                 {term(1, Op::CompLeft, "alpha", "alphap"),
                  term(-1, Op::CompRight, "alpha", "alphap"),
                  term(1, Op::CompRight, "alpha", "alphap", false, true)}});

    // Rank-four identities for brackets
    // [e0,ei] = beta_i (x) ei, [e1,e1] = alpham (x) e2, [e1,e2] = eta (x) e2,
    // [e1,e3] = eta11 (x) e1 + eta12 (x) e2, [e2,e3] = eta21 (x) e1 + eta22 (x) e2.
    v.push_back({"eq25a", {term(1, Op::CompLeft, "alpham", "eta21")}});
    v.push_back({"eq25b", {term(1, Op::CompLeft, "eta", "eta21")}});
    v.push_back({"eq26",
                 {term(1, Op::CompLeft, "alpham", "eta22"),
                  term(-1, Op::CompRight, "eta11", "alpham"),
                  term(1, Op::CompRight, "eta11", "alpham", false, true),
                  term(-1, Op::CompRight, "eta12", "eta"),
                  term(1, Op::CompRight, "eta12", "eta", false, true)}});
    v.push_back({"eq27",
                 {term(1, Op::CompLeft, "eta", "eta22"),
                  term(-1, Op::CompRight, "eta21", "alpham"),
                  term(-1, Op::CompRight, "eta22", "eta"),
                  term(-1, Op::CompRight, "eta11", "eta", true, true)}});
    v.push_back({"eq28",
                 {term(1, Op::CompLeft, "beta1", "eta11"),
                  term(-1, Op::CompRight, "eta11", "beta1"),
                  term(1, Op::CompRight, "beta3", "eta11", false, true)}});
    v.push_back({"eq29",
                 {term(1, Op::CompLeft, "beta1", "eta12"),
                  term(-1, Op::CompRight, "eta12", "beta2"),
                  term(1, Op::CompRight, "beta3", "eta12", false, true)}});
    v.push_back({"eq210",
                 {term(1, Op::CompLeft, "beta2", "eta21"),
                  term(-1, Op::CompRight, "eta21", "beta1"),
                  term(1, Op::CompRight, "beta3", "eta21", false, true)}});
    v.push_back({"eq211",
                 {term(1, Op::CompLeft, "beta2", "eta22"),
                  term(-1, Op::CompRight, "eta22", "beta2"),
                  term(1, Op::CompRight, "beta3", "eta22", false, true)}});
    v.push_back({"eq212",
                 {term(1, Op::CompLeft, "eta11", "eta11"),
                  term(1, Op::CompLeft, "eta12", "eta21"),
                  term(-1, Op::CompRight, "eta11", "eta11", true, true),
                  term(-1, Op::CompRight, "eta12", "eta21", true, true)}});
    v.push_back({"eq213",
                 {term(1, Op::CompLeft, "eta11", "eta12"),
                  term(1, Op::CompLeft, "eta12", "eta22"),
                  term(-1, Op::CompRight, "eta11", "eta12", true, true),
                  term(-1, Op::CompRight, "eta12", "eta22", true, true)}});
    v.push_back({"eq214",
                 {term(1, Op::CompLeft, "eta21", "eta11"),
                  term(1, Op::CompLeft, "eta22", "eta21"),
                  term(-1, Op::CompRight, "eta21", "eta11", true, true),
                  term(-1, Op::CompRight, "eta22", "eta21", true, true)}});
    v.push_back({"eq215",
                 {term(1, Op::CompLeft, "eta21", "eta12"),
                  term(1, Op::CompLeft, "eta22", "eta22"),
                  term(-1, Op::CompRight, "eta21", "eta12", true, true),
                  term(-1, Op::CompRight, "eta22", "eta22", true, true)}});
    v.push_back({"eq216",
                 {term(1, Op::CompRight, "eta21", "eta", true, false),
                  term(-1, Op::CompRight, "eta21", "eta", true, true)}});
    v.push_back({"eq217",
                 {term(1, Op::CompLeft, "beta1", "eta"),
                  term(-1, Op::CompRight, "eta", "beta2"),
                  term(1, Op::CompRight, "beta2", "eta", false, true)}});
    v.push_back({"eq218",
                 {term(1, Op::CompLeft, "beta1", "alpham"),
                  term(-1, Op::CompRight, "alpham", "beta2"),
                  term(1, Op::CompRight, "beta1", "alpham", false, true)}});
    v.push_back({"eq219",
                 {term(1, Op::CompLeft, "alpham", "eta", true, false),
                  term(1, Op::CompRight, "alpham", "eta"),
                  term(-1, Op::CompRight, "alpham", "eta", false, true)}});
    v.push_back({"eq220",
                 {term(1, Op::CompRight, "eta", "eta"),
                  term(-1, Op::CompRight, "eta", "eta", false, true)}});
    return v;
}

} // namespace

std::vector<std::string> IdentityTemplate::slots() const {
    std::vector<std::string> out;
    for (const auto& t : terms) {
        if (std::find(out.begin(), out.end(), t.first) == out.end())
            out.push_back(t.first);
        if (std::find(out.begin(), out.end(), t.second) == out.end())
            out.push_back(t.second);
    }
    return out;
}

Tensor3 IdentityTemplate::evaluate(const std::map<std::string, Tensor2>& bind) const {
    Tensor3 r;
    for (const auto& t : terms) {
        auto a = bind.find(t.first);
        auto b = bind.find(t.second);
        if (a == bind.end() || b == bind.end())
            throw std::invalid_argument("identity " + id + ": unbound slot");
        Tensor2 second = t.swap_second ? t2_swap(b->second) : b->second;
        Tensor3 val = t.op == IdentityTerm::Op::CompLeft ? comp_left(a->second, second)
                                                         : comp_right(a->second, second);
        if (t.swap_after)
            val = t3_swap12(val);
        r += val.scaled(t.coeff);
    }
    return r;
}

const std::vector<IdentityTemplate>& identity_templates() {
    static const std::vector<IdentityTemplate> all = build_templates();
    return all;
}

const IdentityTemplate& identity(const std::string& id) {
    for (const auto& t : identity_templates())
        if (t.id == id)
            return t;
    throw std::invalid_argument("unknown identity template: " + id);
}

} // namespace pseudoalg
