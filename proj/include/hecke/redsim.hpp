#pragma once

#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "hecke/finvec.hpp"

namespace hecke {

// A point of the modular object is modeled by its torsion space F^r together
// with the kernel D of the reduction map; the flavor fixes D's shape.
enum class Flavor { Ordinary, Siegel, NonOrdinary, Quadratic };

class ModelPoint {
public:
    // D = span of the last n standard basis vectors (any choice is
    // equivalent under the transitive GL action).
    static ModelPoint ordinary(const PrimePowerField& F, int r, int n);
    // ambient F^{2g} with the standard symplectic form; D = the Lagrangian
    // spanned by the first g basis vectors.
    static ModelPoint siegel(const PrimePowerField& F, int g);
    // n = 1 with dim D = 2, the generic non-ordinary shape.
    static ModelPoint nonordinary(const PrimePowerField& F, int r);
    // F_{q^2}-structured space of quadratic dimension m over prime F; D is
    // F_{q^2}-stable of quadratic dimension d2 (the torsion space of a point
    // with inert quadratic multiplication).
    static ModelPoint quadratic(const PrimePowerField& F, int m, int d2);
    // the unitary signature-(r-n, n) model: quadratic with d2 = max(r-n, n).
    static ModelPoint unitary(const PrimePowerField& F, int r, int n);

    Flavor flavor() const { return flavor_; }
    const PrimePowerField& field() const { return *F_; }
    int ambient() const { return r_; }   // over the base field
    int n() const { return n_; }         // n, g, or the quadratic dim of D
    const Subspace& D() const { return D_; }

    // Quadratic flavor only: the declared structure and D over F_{q^2}.
    const Fq2Structure& structure() const;
    const Subspace& D_quadratic() const;

private:
    ModelPoint(const PrimePowerField& F, int r, int n, Flavor flavor, Subspace D)
        : F_(&F), r_(r), n_(n), flavor_(flavor), D_(std::move(D)) {}
    const PrimePowerField* F_;
    int r_;
    int n_;
    Flavor flavor_;
    Subspace D_;
    std::shared_ptr<Fq2Structure> fq2_;
    std::shared_ptr<Subspace> d_quad_;
};

// Isogeny kernels of the degree-j Hecke correspondence at t: all j-dim
// subspaces (ordinary / non-ordinary), the Lagrangians (siegel, j = g), or
// the subspaces of quadratic dimension j over F_{q^2} (quadratic flavor).
std::vector<Subspace> hecke_orbit(const ModelPoint& t, int j,
                                  std::uint64_t budget = kDefaultBudget);

// Reduction type: dim(W & D), taken over F_{q^2} for the quadratic flavor.
int reduction_type(const ModelPoint& t, const Subspace& W);

// Closed points are keyed by (W & D, span(W, D)); the Siegel flavor needs
// the intersection only (the span is determined through the pairing), so its
// span slot stays empty.
std::pair<Subspace, std::optional<Subspace>> closed_point_key(const ModelPoint& t,
                                                              const Subspace& W);

struct CensusRow {
    int i = 0;
    std::uint64_t classes = 0;
    std::uint64_t fiber = 0;          // common fiber size (checked constant)
    std::uint64_t formula_classes = 0;
    std::uint64_t formula_fiber = 0;
    bool match = false;
};

struct ReductionCensus {
    int r = 0, n = 0, j = 0, q = 0;   // q = field size used by the formulas
    Flavor flavor = Flavor::Ordinary;
    std::vector<CensusRow> rows;      // ascending i
    std::uint64_t total = 0;          // sum of classes * fiber
    std::uint64_t expected_total = 0; // g(j,r) resp. the Lagrangian count
    bool all_match = false;

    std::string csv() const;
    nlohmann::json to_json() const;
};

// Groups the orbit by closed-point key and checks the per-type class counts
// and fiber sizes against the closed forms.
ReductionCensus census(const ModelPoint& t, int j, std::uint64_t budget = kDefaultBudget);

// Classification of T_1-kernels at a non-ordinary (or quadratic) point with
// n = 1: the sub-D lines form the Frobenius-image class (uniqueness is
// conjectural and reported, not asserted), the rest group by linear span
// with D over F_q, or over F_{q^2} for the quadratic flavor.
struct NonordinaryReport {
    Flavor flavor = Flavor::NonOrdinary;
    int r = 0, q = 0, dim_d = 0;
    std::uint64_t lines_in_d = 0;                 // candidates for the Psi_1 point
    std::vector<std::uint64_t> span_class_sizes;  // outside lines per span class
    bool conjectural = true;

    std::string str() const;
    nlohmann::json to_json() const;
};
NonordinaryReport nonordinary_census(const ModelPoint& t,
                                     std::uint64_t budget = kDefaultBudget);

}  // namespace hecke
