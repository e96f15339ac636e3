#include "hecke/redsim.hpp"

#include <algorithm>
#include <map>
#include <sstream>

namespace hecke {

namespace {

Subspace last_coords(const PrimePowerField& F, int ambient, int count) {
    std::vector<std::vector<int>> rows;
    for (int i = 0; i < count; ++i) {
        std::vector<int> row(ambient, 0);
        row[ambient - count + i] = 1;
        rows.push_back(std::move(row));
    }
    return Subspace::from_rows(F, ambient, std::move(rows));
}

Subspace first_coords(const PrimePowerField& F, int ambient, int count) {
    std::vector<std::vector<int>> rows;
    for (int i = 0; i < count; ++i) {
        std::vector<int> row(ambient, 0);
        row[i] = 1;
        rows.push_back(std::move(row));
    }
    return Subspace::from_rows(F, ambient, std::move(rows));
}

}  // namespace

ModelPoint ModelPoint::ordinary(const PrimePowerField& F, int r, int n) {
    if (r < 1 || n < 0 || n > r) throw std::invalid_argument("ModelPoint: need 0 <= n <= r");
    return ModelPoint(F, r, n, Flavor::Ordinary, last_coords(F, r, n));
}

ModelPoint ModelPoint::siegel(const PrimePowerField& F, int g) {
    if (g < 1) throw std::invalid_argument("ModelPoint: g must be >= 1");
    Subspace D = first_coords(F, 2 * g, g);
    if (!is_isotropic(D, g)) throw std::logic_error("ModelPoint: default D not Lagrangian");
    return ModelPoint(F, 2 * g, g, Flavor::Siegel, std::move(D));
}

ModelPoint ModelPoint::nonordinary(const PrimePowerField& F, int r) {
    if (r < 2) throw std::invalid_argument("ModelPoint: non-ordinary needs r >= 2");
    return ModelPoint(F, r, 1, Flavor::NonOrdinary, last_coords(F, r, 2));
}

ModelPoint ModelPoint::quadratic(const PrimePowerField& F, int m, int d2) {
    if (d2 < 0 || d2 > m) throw std::invalid_argument("ModelPoint: need 0 <= d2 <= m");
    auto fq2 = std::make_shared<Fq2Structure>(F, m);
    Subspace d_quad = last_coords(fq2->extension_field(), m, d2);
    Subspace d_base = fq2->to_base(d_quad);
    ModelPoint t(F, 2 * m, d2, Flavor::Quadratic, std::move(d_base));
    t.fq2_ = std::move(fq2);
    t.d_quad_ = std::make_shared<Subspace>(std::move(d_quad));
    return t;
}

ModelPoint ModelPoint::unitary(const PrimePowerField& F, int r, int n) {
    if (n < 0 || n > r) throw std::invalid_argument("ModelPoint: need 0 <= n <= r");
    return quadratic(F, r, std::max(r - n, n));
}

const Fq2Structure& ModelPoint::structure() const {
    if (!fq2_) throw std::logic_error("ModelPoint: no quadratic structure declared");
    return *fq2_;
}

const Subspace& ModelPoint::D_quadratic() const {
    if (!d_quad_) throw std::logic_error("ModelPoint: no quadratic structure declared");
    return *d_quad_;
}

std::vector<Subspace> hecke_orbit(const ModelPoint& t, int j, std::uint64_t budget) {
    switch (t.flavor()) {
        case Flavor::Ordinary:
        case Flavor::NonOrdinary:
            return enumerate_subspaces(t.ambient(), j, t.field(), budget);
        case Flavor::Siegel: {
            int g = t.ambient() / 2;
            if (j != g)
                throw std::invalid_argument("hecke_orbit: Siegel kernels are Lagrangian (j = g)");
            return enumerate_isotropic(g, g, t.field(), budget);
        }
        case Flavor::Quadratic: {
            const Fq2Structure& s = t.structure();
            return enumerate_subspaces(s.quadratic_dim(), j, s.extension_field(), budget);
        }
    }
    throw std::logic_error("hecke_orbit: bad flavor");
}

int reduction_type(const ModelPoint& t, const Subspace& W) {
    if (t.flavor() == Flavor::Quadratic)
        return intersect(W, t.D_quadratic()).dim();
    return intersect(W, t.D()).dim();
}

std::pair<Subspace, std::optional<Subspace>> closed_point_key(const ModelPoint& t,
                                                              const Subspace& W) {
    if (t.flavor() == Flavor::Siegel)
        return {intersect(W, t.D()), std::nullopt};
    const Subspace& D = t.flavor() == Flavor::Quadratic ? t.D_quadratic() : t.D();
    return {intersect(W, D), span_of(W, D)};
}

ReductionCensus census(const ModelPoint& t, int j, std::uint64_t budget) {
    ReductionCensus out;
    out.flavor = t.flavor();
    out.j = j;

    // model parameters seen by the closed forms
    int r, n, q;
    switch (t.flavor()) {
        case Flavor::Ordinary:
        case Flavor::NonOrdinary:
            r = t.ambient();
            n = t.D().dim();
            q = t.field().size();
            break;
        case Flavor::Siegel:
            r = t.ambient() / 2;  // reported as g
            n = r;
            q = t.field().size();
            break;
        case Flavor::Quadratic:
            r = t.structure().quadratic_dim();
            n = t.n();
            q = t.structure().extension_field().size();
            break;
        default:
            throw std::logic_error("census: bad flavor");
    }
    out.r = r;
    out.n = n;
    out.q = q;

    std::map<int, std::map<std::pair<Subspace, std::optional<Subspace>>, std::uint64_t>> types;
    for (const auto& W : hecke_orbit(t, j, budget))
        ++types[reduction_type(t, W)][closed_point_key(t, W)];

    const bool siegel = t.flavor() == Flavor::Siegel;
    const int g = siegel ? r : 0;
    if (siegel) {
        // independent Lagrangian count: prod (p^i + 1)
        std::uint64_t expect = 1, p_pow = 1;
        for (int i = 1; i <= g; ++i) {
            p_pow *= q;
            expect *= p_pow + 1;
        }
        out.expected_total = expect;
    } else {
        out.expected_total = gaussian_binomial_count(j, r, q);
    }

    out.all_match = true;
    for (const auto& [i, fibers] : types) {
        CensusRow row;
        row.i = i;
        row.classes = fibers.size();
        row.fiber = fibers.begin()->second;
        bool constant = true;
        for (const auto& [key, size] : fibers) constant = constant && size == row.fiber;

        if (siegel) {
            row.formula_classes = gaussian_binomial_count(i, g, q);
            std::uint64_t f = 1;
            for (int e = 0; e < (g + 1 - i) * (g - i) / 2; ++e) f *= q;
            row.formula_fiber = f;
        } else {
            row.formula_classes = gaussian_binomial_count(i, n, q) *
                                  gaussian_binomial_count(j - i, r - n, q);
            std::uint64_t f = 1;
            for (int e = 0; e < (j - i) * (n - i); ++e) f *= q;
            row.formula_fiber = f;
        }
        row.match = constant && row.classes == row.formula_classes &&
                    row.fiber == row.formula_fiber;
        out.total += row.classes * row.fiber;
        out.all_match = out.all_match && row.match;
        out.rows.push_back(row);
    }
    // missing types must be predicted empty
    for (int i = 0; i <= std::min(j, n); ++i) {
        if (types.count(i)) continue;
        std::uint64_t predicted =
            siegel ? gaussian_binomial_count(i, g, q)
                   : gaussian_binomial_count(i, n, q) *
                         gaussian_binomial_count(j - i, r - n, q);
        if (predicted != 0) out.all_match = false;
    }
    out.all_match = out.all_match && out.total == out.expected_total;
    return out;
}

std::string ReductionCensus::csv() const {
    std::ostringstream os;
    os << "i,classes,fiber,formula_classes,formula_fiber,match\n";
    for (const auto& row : rows)
        os << row.i << "," << row.classes << "," << row.fiber << "," << row.formula_classes
           << "," << row.formula_fiber << "," << (row.match ? "yes" : "no") << "\n";
    return os.str();
}

nlohmann::json ReductionCensus::to_json() const {
    nlohmann::json j;
    j["r"] = r;
    j["n"] = n;
    j["j"] = this->j;
    j["q"] = q;
    j["total"] = total;
    j["expected_total"] = expected_total;
    j["all_match"] = all_match;
    auto& rows_json = j["rows"] = nlohmann::json::array();
    for (const auto& row : rows)
        rows_json.push_back({{"i", row.i},
                             {"classes", row.classes},
                             {"fiber", row.fiber},
                             {"formula_classes", row.formula_classes},
                             {"formula_fiber", row.formula_fiber},
                             {"match", row.match}});
    return j;
}

NonordinaryReport nonordinary_census(const ModelPoint& t, std::uint64_t budget) {
    if (t.flavor() != Flavor::NonOrdinary && t.flavor() != Flavor::Quadratic)
        throw std::invalid_argument("nonordinary_census: wrong flavor");
    NonordinaryReport rep;
    rep.flavor = t.flavor();
    rep.r = t.ambient();
    rep.q = t.field().size();
    rep.dim_d = t.D().dim();

    std::map<Subspace, std::uint64_t> span_classes;
    for (const auto& W : enumerate_subspaces(t.ambient(), 1, t.field(), budget)) {
        if (t.D().contains(W)) {
            ++rep.lines_in_d;
            continue;
        }
        Subspace sp = span_of(W, t.D());
        if (t.flavor() == Flavor::Quadratic) sp = t.structure().quadratic_span(sp);
        ++span_classes[sp];
    }
    for (const auto& [key, size] : span_classes) rep.span_class_sizes.push_back(size);
    return rep;
}

std::string NonordinaryReport::str() const {
    std::ostringstream os;
    os << (flavor == Flavor::Quadratic ? "quadratic" : "non-ordinary") << " census r=" << r
       << " q=" << q << " dim(D)=" << dim_d << " [CONJECTURAL]\n";
    os << "  lines inside D (Frobenius-image candidates, conjecturally one closed point): "
       << lines_in_d << "\n";
    os << "  span classes outside D: " << span_class_sizes.size() << " of sizes (";
    for (size_t i = 0; i < span_class_sizes.size(); ++i)
        os << (i ? "," : "") << span_class_sizes[i];
    os << ")\n";
    return os.str();
}

nlohmann::json NonordinaryReport::to_json() const {
    nlohmann::json j;
    j["flavor"] = flavor == Flavor::Quadratic ? "quadratic" : "nonordinary";
    j["r"] = r;
    j["q"] = q;
    j["dim_d"] = dim_d;
    j["lines_in_d"] = lines_in_d;
    j["span_class_sizes"] = span_class_sizes;
    j["conjectural"] = conjectural;
    return j;
}

}  // namespace hecke
