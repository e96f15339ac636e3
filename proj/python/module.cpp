#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <string>
#include <vector>

#include "hecke/degrees.hpp"
#include "hecke/finvec.hpp"
#include "hecke/frobchar.hpp"
#include "hecke/hecke_gl.hpp"
#include "hecke/hodge.hpp"
#include "hecke/motive_inv.hpp"
#include "hecke/poly.hpp"
#include "hecke/redsim.hpp"
#include "hecke/siegel.hpp"
#include "hecke/verify.hpp"

namespace py = pybind11;
using namespace hecke;

namespace {

Rational parse_rational(const std::string& s) {
    auto slash = s.find('/');
    if (slash == std::string::npos) return Rational::from_strings(s, "1");
    return Rational::from_strings(s.substr(0, slash), s.substr(slash + 1));
}

// Small exact-polynomial handle for the smoke tests; the full surface lives
// in the C++ library and the CLI.
struct PyPoly {
    LaurentPoly p;
    std::string str() const { return p.str(); }
    std::string json() const { return p.to_json().dump(); }
};

PyPoly py_variable(int r, const std::string& name, int exp) {
    return {LaurentPoly::variable(VarSet::gl(r), name, exp)};
}

PyPoly py_sigma(int r, int i) {
    GLContext ctx(r, 0, false);
    return {elementary_symmetric(ctx.vars, ctx.all_indices(), i)};
}

std::string py_satake(const std::string& group, int r_or_g, int n, const std::string& elem,
                      int i, bool quotient) {
    if (group == "gsp") {
        SiegelContext ctx(r_or_g);
        return (elem == "Tp" ? satake_Tp(ctx) : satake_phi(ctx, i)).image().str();
    }
    GLContext ctx(r_or_g, n, quotient);
    HeckeElement e = elem == "Phi"   ? satake_Phi(ctx, i)
                     : elem == "Psi" ? satake_Psi(ctx, i)
                                     : satake_T(ctx, i);
    return e.image().str();
}

std::string py_dual(int r, int n, const std::string& elem, int i) {
    GLContext ctx(r, n, true);
    HeckeElement e = elem == "Phi"   ? satake_Phi(ctx, i)
                     : elem == "Psi" ? satake_Psi(ctx, i)
                                     : satake_T(ctx, i);
    HeckeElement d = dual(e);
    return (elem == "T" ? express_in_T_generators(d) : express_in_levi_generators(d)).str();
}

std::vector<std::tuple<int, int, int>> py_levi_expand(int r, int n, int j) {
    std::vector<std::tuple<int, int, int>> out;
    for (const auto& t : levi_expand(GLContext(r, n, false), j))
        out.emplace_back(t.q_exponent, t.psi_index, t.phi_index);
    return out;
}

std::string py_gaussian(int k, int l, int q) {
    if (q > 0) return gaussian_binomial(k, l, Rational(q)).str();
    return gaussian_binomial(k, l).str();
}

std::string py_census(const std::string& flavor, int r, int n, int j, int q) {
    PrimePowerField F(q);
    if (flavor == "siegel") return census(ModelPoint::siegel(F, r), r).to_json().dump();
    if (flavor == "unitary") return census(ModelPoint::unitary(F, r, n), j).to_json().dump();
    if (flavor == "nonordinary")
        return nonordinary_census(ModelPoint::nonordinary(F, r)).to_json().dump();
    if (flavor == "quadratic")
        return nonordinary_census(ModelPoint::quadratic(F, r / 2, n)).to_json().dump();
    return census(ModelPoint::ordinary(F, r, n), j).to_json().dump();
}

std::vector<std::string> py_profile(const std::string& family, int i, int j, int r, int n) {
    BidegreeProfile p = family == "T"         ? profile_T(j, r)
                        : family == "Phi"     ? profile_Phi(i, r, n)
                        : family == "Psi"     ? profile_Psi(i, r, n)
                        : family == "siegel"  ? profile_siegel_phi(i, r)
                                              : profile_summand(i, j, r, n);
    return {p.d1s.str(), p.d1ns.str(), p.d2s.str(), p.d2ns.str()};
}

std::pair<bool, std::string> py_verify(const std::string& suite, int max_r,
                                       std::uint64_t seed, int trials) {
    VerifyOptions vo;
    vo.max_r = max_r;
    vo.seed = seed;
    vo.langlands_trials = trials;
    std::string text;
    bool ok = true;
    auto results = suite == "all" ? verify_all(vo)
                                  : std::vector<VerifyResult>{run_suite(suite, vo)};
    for (const auto& r : results) {
        text += r.str();
        ok = ok && r.ok;
    }
    return {ok, text};
}

}  // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "exact Hecke-algebra Satake computations (GL_r and GSp_2g)";

    py::class_<PyPoly>(m, "Poly")
        .def("__str__", &PyPoly::str)
        .def("__repr__", &PyPoly::str)
        .def("json", &PyPoly::json)
        .def("__add__", [](const PyPoly& a, const PyPoly& b) { return PyPoly{a.p + b.p}; })
        .def("__sub__", [](const PyPoly& a, const PyPoly& b) { return PyPoly{a.p - b.p}; })
        .def("__mul__", [](const PyPoly& a, const PyPoly& b) { return PyPoly{a.p * b.p}; })
        .def("__pow__", [](const PyPoly& a, int e) { return PyPoly{a.p.pow(e)}; })
        .def("__eq__", [](const PyPoly& a, const PyPoly& b) { return a.p == b.p; })
        .def("evaluate", [](const PyPoly& a, const std::map<std::string, std::string>& assign) {
            std::map<std::string, Rational> values;
            for (const auto& [k, v] : assign) values.emplace(k, parse_rational(v));
            return a.p.evaluate(values).str();
        });

    m.def("variable", &py_variable, py::arg("r"), py::arg("name"), py::arg("exp") = 1,
          "variable U1..Ur or Q over the rank-r torus");
    m.def("elementary_symmetric", &py_sigma, py::arg("r"), py::arg("i"));

    m.def("satake", &py_satake, py::arg("group"), py::arg("r"), py::arg("n"), py::arg("elem"),
          py::arg("i") = 0, py::arg("quotient") = false,
          "Satake image of T_i / Phi_i / Psi_i (gl) or phi_i / Tp (gsp)");
    m.def("dual", &py_dual, py::arg("r"), py::arg("n"), py::arg("elem"), py::arg("i"),
          "duality involution expressed in generators");
    m.def("levi_expand", &py_levi_expand, py::arg("r"), py::arg("n"), py::arg("j"),
          "terms (q_exponent, psi, phi) of the Levi expansion of T_j");

    m.def("hecke_charpoly", [](int r, int n) { return hecke_charpoly(r, n).to_json().dump(); },
          py::arg("r"), py::arg("n"));
    m.def("hecke_charpoly_str", [](int r, int n) { return hecke_charpoly(r, n).str(); },
          py::arg("r"), py::arg("n"));
    m.def("charpoly_degree", &charpoly_degree, py::arg("r"), py::arg("n"));
    m.def("langlands_check",
          [](int r, int n, int trials, std::uint64_t seed) {
              LanglandsReport rep = langlands_oracle_check(r, n, trials, seed);
              return std::make_pair(rep.all_equal, rep.str());
          },
          py::arg("r"), py::arg("n"), py::arg("trials") = 50, py::arg("seed") = 0);

    m.def("siegel_frob_charpoly", [](int g) { return siegel_frob_charpoly(g).str(); },
          py::arg("g"));
    m.def("siegel_degrees",
          [](int g, int i, int p) {
              auto v = profile_siegel_phi(i, g).at(Rational(p));
              return std::make_tuple(v[0].str(), v[1].str(), v[2].str(), v[3].str());
          },
          py::arg("g"), py::arg("i"), py::arg("p"));

    m.def("gaussian_binomial", &py_gaussian, py::arg("k"), py::arg("l"), py::arg("q") = 0,
          "symbolic when q=0");
    m.def("count_subspaces",
          [](int r, int j, int q) {
              PrimePowerField F(q);
              return enumerate_subspaces(r, j, F).size();
          },
          py::arg("r"), py::arg("j"), py::arg("q"));
    m.def("count_lagrangian",
          [](int g, int p) { return count_lagrangian(g, PrimePowerField(p)); }, py::arg("g"),
          py::arg("p"));

    m.def("census", &py_census, py::arg("flavor"), py::arg("r"), py::arg("n"), py::arg("j"),
          py::arg("q"), "reduction census as a JSON string");
    m.def("bidegree_profile", &py_profile, py::arg("family"), py::arg("i"), py::arg("j"),
          py::arg("r"), py::arg("n"), "(d1s, d1ns, d2s, d2ns) symbolic in Q");
    m.def("degrees_consistent", [](int r, int n) { return consistency_report(r, n).ok; },
          py::arg("r"), py::arg("n"));

    m.def("siegel_hodge", [](int g) { return siegel_hodge(g).h; }, py::arg("g"));
    m.def("unitary_hodge", [](int r, int n) { return unitary_hodge(r, n).h; }, py::arg("r"),
          py::arg("n"));

    m.def("enumerate_invariants",
          [](long long r, long long n, int nu_max) {
              std::vector<std::pair<int, std::vector<long long>>> out;
              for (const auto& inv : enumerate_invariants(r, n, nu_max))
                  out.emplace_back(inv.nu, inv.k);
              return out;
          },
          py::arg("r"), py::arg("n"), py::arg("nu_max") = 1);
    m.def("hodge_pink_weights",
          [](int nu, const std::vector<long long>& k) {
              return to_weights(NilpotentInvariants{nu, k});
          },
          py::arg("nu"), py::arg("k"));

    m.def("verify", &py_verify, py::arg("suite") = "all", py::arg("max_r") = 3,
          py::arg("seed") = 0, py::arg("trials") = 25,
          "run a verification suite, returns (ok, report)");

    m.attr("__version__") = "0.1.0";
}
