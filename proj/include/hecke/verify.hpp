#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace hecke {

// Options shared by the verification suites; all defaults match the CLI.
struct VerifyOptions {
    int max_r = 5;
    std::uint64_t seed = 0;
    std::uint64_t budget = 10'000'000;
    int langlands_trials = 200;
};

struct VerifyResult {
    std::string suite;
    bool ok = false;
    std::vector<std::string> lines;  // deterministic, one per check

    std::string str() const;
};

// Ring axioms, symmetric reduction round trips, evaluation homomorphism,
// canonical-form properties on seeded random polynomials.
VerifyResult verify_poly(const VerifyOptions& opt);

// Duality identities, Levi expansion, central normal form, generator
// expression round trips, Hecke polynomial closed form and degree.
VerifyResult verify_hecke(const VerifyOptions& opt);

// Weyl invariance, hat involution, Frobenius orbit polynomial, degree
// formulas against Lagrangian counts.
VerifyResult verify_siegel(const VerifyOptions& opt);

// Subspace enumeration against Gaussian binomials, q-Vandermonde, reduction
// censuses against closed forms, profile counts, bidegree consistency,
// quadratic-structure properties, Hodge and invariant generators.
VerifyResult verify_geometry(const VerifyOptions& opt);

// Seeded random comparisons of the Hecke polynomial against the numeric
// eigenvalue-product oracle for every (r, n) up to max_r.
VerifyResult verify_langlands(const VerifyOptions& opt);

// All suites in a fixed order.
std::vector<VerifyResult> verify_all(const VerifyOptions& opt);

std::vector<std::string> verify_suite_names();
VerifyResult run_suite(const std::string& name, const VerifyOptions& opt);

}  // namespace hecke
