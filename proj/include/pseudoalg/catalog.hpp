#pragma once

#include "pseudoalg/pseudoalgebra.hpp"

#include <cstdint>
#include <functional>
#include <random>
#include <stdexcept>
#include <string>
#include <vector>

namespace pseudoalg {

struct UnknownFamily : std::runtime_error {
    using std::runtime_error::runtime_error;
};
struct ParamDomainViolation : std::runtime_error {
    using std::runtime_error::runtime_error;
};
struct PaperFormulaFails : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Parameter record for family constructors.  Scalars cover almost every
/// family; a few take a polynomial or a whole tensor.
struct Params {
    std::map<std::string, Rat> scalars;
    std::map<std::string, HPoly> polys;
    std::map<std::string, Tensor2> tensors;

    Rat scalar(const std::string& name) const;
    Rat scalar_or(const std::string& name, const Rat& fallback) const;
    const HPoly& poly(const std::string& name) const;
    const Tensor2& tensor(const std::string& name) const;
    bool has(const std::string& name) const;

    static Params of(std::initializer_list<std::pair<std::string, Rat>> kv);
};

enum class ParamKind { Scalar, Poly, Tensor };

struct ParamSpec {
    std::string name;
    ParamKind kind = ParamKind::Scalar;
    std::string constraint; // human-readable domain note, "" when free
};

struct FamilySpec {
    std::string id;
    int rank = 0;
    std::string note;
    std::vector<ParamSpec> params;
    /// True when the printed item admits no realization; build() throws and
    /// refutation_certificate() documents why.
    bool refuted = false;

    std::function<PseudoAlgebra(const Params&)> build;
    std::function<Params(std::mt19937_64&, int)> sample;
    std::function<AlgebraClass(const Params&)> expected;
};

/// All families, ordered by id.
const std::vector<FamilySpec>& list_families();

const FamilySpec& family(const std::string& id); // throws UnknownFamily

/// Validates parameters, assembles the algebra, verifies it (the full check
/// report is embedded) and throws PaperFormulaFails if the expected checks do
/// not hold.
PseudoAlgebra build(const std::string& id, const Params& params);

/// Machine-readable record of a deviation from a printed display.
struct Correction {
    std::string family;
    std::string field;
    std::string printed;
    std::string used;
    std::string note;
};

const std::vector<Correction>& corrections();
std::string corrections_json();

/// For a refuted family: re-derives the emptiness certificate (the governing
/// linear system has no admissible solution and the printed instance fails
/// the checks).  Returns a human-readable summary; throws if the certificate
/// does not hold.
std::string refutation_certificate(const std::string& id);

struct FamilyResult {
    std::string id;
    int draws = 0;
    bool pass = false;
    bool refuted = false;
    std::string detail;
};

struct VerifySummary {
    bool all_pass = false;
    std::vector<FamilyResult> rows;
};

/// Builds every family at `draws` random parameter points and classifies the
/// result; refuted families are re-certified instead.
VerifySummary verify_all(int draws, std::uint64_t seed);

/// Uniform random rational with numerator in [-9, 9], denominator in [1, 9].
Rat random_rational(std::mt19937_64& rng, bool nonzero = false);

} // namespace pseudoalg
