#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <sstream>

#include "simpdelta/chain_complex.hpp"
#include "simpdelta/cli.hpp"
#include "simpdelta/em_transform.hpp"
#include "simpdelta/errors.hpp"
#include "simpdelta/operations.hpp"
#include "simpdelta/relations.hpp"

namespace py = pybind11;
using namespace simpdelta;

namespace {

EMTransform transform_named(const std::string& name, int k) {
    if (name == "D") return shuffle_D();
    if (name == "Dk") return build_Dk(k);
    if (name == "Ak") return build_Ak(k);
    if (name == "phi") return phi(k);
    if (name == "delta") return diagonal_delta();
    if (name == "bd-left") return boundary_left();
    if (name == "bd-right") return boundary_right();
    if (name == "id") return identity_transform();
    throw BadRange("unknown transform: " + name);
}

template <class M>
py::list betti_rows(const M& model, int max_degree) {
    const auto a = betti_table(associated_complex(model, max_degree));
    const auto n = betti_table(normalized_complex(model, max_degree));
    py::list out;
    for (std::size_t q = 0; q < a.size(); ++q) {
        py::dict row;
        row["degree"] = a[q].degree;
        row["dim"] = a[q].dim;
        row["rank_d"] = a[q].rank_d;
        row["betti"] = a[q].betti;
        row["dim_normalized"] = n[q].dim;
        row["betti_normalized"] = n[q].betti;
        out.append(row);
    }
    return out;
}

py::list homology(const std::string& model, int n, int max_degree, int poly) {
    if (max_degree < 1 || max_degree > 12) throw BadRange("max_degree must be in 1..12");
    if (n < 0 || n > 8) throw BadRange("n must be in 0..8");
    if (model == "sphere") return betti_rows(sphere_model(n, max_degree), max_degree);
    if (model == "delta") return betti_rows(SimplicialSetModel::delta(n, max_degree), max_degree);
    if (model == "boundary")
        return betti_rows(SimplicialSetModel::boundary_delta(n, max_degree), max_degree);
    if (model == "algebra") {
        if (poly < 2 || poly > 4) throw BadRange("poly must be in 2..4");
        return betti_rows(algebra_model(n, max_degree, poly), max_degree);
    }
    throw BadRange("unknown model: " + model);
}

py::list shuffle_pairs(const std::vector<ShufflePair>& pairs) {
    py::list out;
    for (const auto& p : pairs) out.append(py::make_tuple(p.mu, p.nu));
    return out;
}

}  // namespace

PYBIND11_MODULE(_simpdelta, m) {
    m.doc() = "Python bindings for the simpdelta core library";

    auto error = py::register_exception<Error>(m, "Error", PyExc_RuntimeError);
    py::register_exception<OutOfRange>(m, "OutOfRange", error);
    py::register_exception<BadRange>(m, "BadRange", error);
    py::register_exception<ParseError>(m, "ParseError", error);
    py::register_exception<TruncationOverflow>(m, "TruncationOverflow", error);
    py::register_exception<NotNormalizedCycle>(m, "NotNormalizedCycle", error);
    py::register_exception<UnknownRelation>(m, "UnknownRelation", error);

    m.def(
        "normalize",
        [](const std::string& word, int degree) -> std::optional<std::string> {
            const auto nf = normalize(SimplicialWord::parse(word), degree);
            if (nf.is_null()) return std::nullopt;
            return nf.to_string();
        },
        py::arg("word"), py::arg("degree"),
        "Normal form of a word applied in the given degree; None if it passes below degree 0.");
    m.def(
        "reduce",
        [](const std::string& word) { return reduce_formal(SimplicialWord::parse(word)).to_string(); },
        py::arg("word"));
    m.def(
        "suspend",
        [](const std::string& word, int times) {
            return suspend_word(SimplicialWord::parse(word), times).to_string();
        },
        py::arg("word"), py::arg("times") = 1);

    m.def(
        "dump_transform",
        [](const std::string& name, int i, int j, int k) {
            if (k < 0 || k > 8) throw BadRange("k must be in 0..8");
            return dump_transform_json(transform_named(name, k), Bidegree{i, j});
        },
        py::arg("name"), py::arg("i"), py::arg("j"), py::arg("k") = 0,
        "JSON terms of a named transform at bidegree (i, j).");

    m.def("relation_catalog", &relation_catalog);
    m.def(
        "check_relation",
        [](const std::string& name, int max_total, unsigned threads) {
            py::gil_scoped_release release;
            return report_json(check_relation(name, max_total, threads));
        },
        py::arg("name"), py::arg("max_total") = 6, py::arg("threads") = 1,
        "JSON report of a relation checked on i + j <= max_total.");

    m.def("enumerate_U", [](int q, int i) { return shuffle_pairs(enumerate_U(q, i)); },
          py::arg("q"), py::arg("i"));
    m.def("enumerate_V", [](int q, int i) { return shuffle_pairs(enumerate_V(q, i)); },
          py::arg("q"), py::arg("i"));
    m.def(
        "delta",
        [](int q, int i) {
            if (q < 1 || q > 4) throw BadRange("q must be in 1..4");
            return delta_report_json(delta_report(q, i));
        },
        py::arg("q"), py::arg("i"), "JSON report for delta_i of the fundamental class of Sym(Sphere(q)).");

    m.def("homology", &homology, py::arg("model") = "sphere", py::arg("n") = 2,
          py::arg("max_degree") = 5, py::arg("poly") = 2,
          "Betti numbers of the associated and normalized complexes, one dict per degree.");

    m.def(
        "run_cli",
        [](const std::vector<std::string>& args) {
            std::ostringstream out, err;
            int code;
            {
                py::gil_scoped_release release;
                code = run_cli(args, out, err);
            }
            return py::make_tuple(code, out.str(), err.str());
        },
        py::arg("args"), "Run the command-line driver; returns (exit_code, stdout, stderr).");
}
