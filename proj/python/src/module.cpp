#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <sstream>

#include "partialcramer/determinant.hpp"
#include "partialcramer/io.hpp"
#include "partialcramer/oracle.hpp"
#include "partialcramer/partial.hpp"

namespace py = pybind11;
using namespace cramer;

namespace {

Scalar scalar_from_py(const py::handle& v, ScalarKind kind) {
    if (py::isinstance<Scalar>(v)) {
        return v.cast<Scalar>();
    }
    if (py::isinstance<py::int_>(v)) {
        return Scalar::rational(v.cast<long long>()).to_kind(kind);
    }
    if (py::isinstance<py::float_>(v) && kind == ScalarKind::float64) {
        return Scalar::float64(v.cast<double>());
    }
    if (py::isinstance<py::str>(v)) {
        return io::parse_scalar_literal(v.cast<std::string>(), kind);
    }
    throw Error("cannot convert value to a " + to_string(kind) + " scalar");
}

std::vector<Scalar> scalars_from_py(const py::sequence& seq, ScalarKind kind) {
    std::vector<Scalar> out;
    out.reserve(seq.size());
    for (const auto& v : seq) {
        out.push_back(scalar_from_py(v, kind));
    }
    return out;
}

Matrix matrix_from_rows(const py::sequence& rows, ScalarKind kind) {
    if (rows.size() == 0) {
        throw DimensionError("matrix needs at least one row");
    }
    std::vector<Scalar> entries;
    const index_t nrows = rows.size();
    index_t ncols = 0;
    for (index_t i = 0; i < nrows; ++i) {
        auto row = rows[i].cast<py::sequence>();
        if (i == 0) {
            ncols = row.size();
        } else if (row.size() != ncols) {
            throw DimensionError("matrix rows have unequal lengths");
        }
        for (const auto& v : row) {
            entries.push_back(scalar_from_py(v, kind));
        }
    }
    return make_matrix(nrows, ncols, std::move(entries));
}

ScalarKind kind_from_name(const std::string& name) {
    if (name == "rational") {
        return ScalarKind::rational;
    }
    if (name == "float") {
        return ScalarKind::float64;
    }
    throw Error("scalar kind must be 'rational' or 'float', got '" + name + "'");
}

}  // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "Cramer's rule, including its partial-variable generalization";

    py::register_exception<ParseError>(m, "ParseError");
    py::register_exception<DimensionError>(m, "DimensionError");
    py::register_exception<ScalarKindError>(m, "ScalarKindError");
    py::register_exception<SingularMatrixError>(m, "SingularMatrixError");
    py::register_exception<ZeroLeadingMinorError>(m, "ZeroLeadingMinorError");
    py::register_exception<Error>(m, "CramerError");

    py::class_<Scalar>(m, "Scalar")
        .def_static("rational",
                    [](long long num, long long den) { return Scalar::rational(num, den); },
                    py::arg("numerator"), py::arg("denominator") = 1)
        .def_static("float64", &Scalar::float64)
        .def_property_readonly("kind", [](const Scalar& s) { return to_string(s.kind()); })
        .def("is_zero", &Scalar::is_zero)
        .def("as_float", [](const Scalar& s) {
            return s.kind() == ScalarKind::float64 ? s.as_float()
                                                   : s.to_kind(ScalarKind::float64).as_float();
        })
        .def("__eq__", [](const Scalar& a, const Scalar& b) { return a == b; })
        .def("__add__", [](const Scalar& a, const Scalar& b) { return a + b; })
        .def("__sub__", [](const Scalar& a, const Scalar& b) { return a - b; })
        .def("__mul__", [](const Scalar& a, const Scalar& b) { return a * b; })
        .def("__truediv__", [](const Scalar& a, const Scalar& b) { return a / b; })
        .def("__neg__", [](const Scalar& a) { return -a; })
        .def("__str__", &Scalar::to_string)
        .def("__repr__", [](const Scalar& s) { return "Scalar(" + s.to_string() + ")"; });

    m.def("rat", [](long long num, long long den) { return Scalar::rational(num, den); },
          py::arg("numerator"), py::arg("denominator") = 1, "Exact rational scalar");
    m.def("rat", [](const std::string& text) {
        return io::parse_scalar_literal(text, ScalarKind::rational);
    });
    m.def("flt", &Scalar::float64, "IEEE double scalar");

    py::class_<Matrix>(m, "Matrix")
        .def(py::init([](const py::sequence& rows, const std::string& scalar) {
                 return matrix_from_rows(rows, kind_from_name(scalar));
             }),
             py::arg("rows"), py::arg("scalar") = "rational",
             "Build from nested lists; entries may be Scalars, ints, or 'p/q' strings.")
        .def_property_readonly("rows", &Matrix::rows)
        .def_property_readonly("cols", &Matrix::cols)
        .def_property_readonly("kind", [](const Matrix& mt) { return to_string(mt.kind()); })
        .def("at", &Matrix::at, py::arg("i"), py::arg("j"), "1-based element access")
        .def("__eq__", [](const Matrix& a, const Matrix& b) { return a == b; })
        .def("__repr__", [](const Matrix& mt) {
            std::ostringstream os;
            os << "Matrix(" << mt.rows() << "x" << mt.cols() << ")";
            return os.str();
        });

    py::class_<ColumnVector>(m, "ColumnVector")
        .def(py::init([](const py::sequence& vals, const std::string& scalar) {
                 return ColumnVector(scalars_from_py(vals, kind_from_name(scalar)));
             }),
             py::arg("values"), py::arg("scalar") = "rational")
        .def_property_readonly("dim", &ColumnVector::dim)
        .def("at", &ColumnVector::at, py::arg("i"), "1-based element access")
        .def("to_list", [](const ColumnVector& v) {
            std::vector<std::string> out;
            for (index_t i = 1; i <= v.dim(); ++i) {
                out.push_back(v.at(i).to_string());
            }
            return out;
        })
        .def("__eq__", [](const ColumnVector& a, const ColumnVector& b) { return a == b; })
        .def("__len__", &ColumnVector::dim);

    py::class_<SystemSpec>(m, "SystemSpec")
        .def(py::init<Matrix, ColumnVector>(), py::arg("r"), py::arg("x_prime"))
        .def_property_readonly("n", &SystemSpec::n)
        .def_property_readonly("r", &SystemSpec::r)
        .def_property_readonly("x_prime", &SystemSpec::x_prime);

    py::class_<MinorSequence>(m, "MinorSequence")
        .def_property_readonly("n", [](const MinorSequence& ms) { return ms.n; })
        .def("minor", &MinorSequence::minor, py::arg("j"))
        .def("to_list", [](const MinorSequence& ms) {
            std::vector<std::string> out;
            for (const Scalar& v : ms.values) {
                out.push_back(v.to_string());
            }
            return out;
        });

    py::class_<FullSolution>(m, "FullSolution")
        .def_readonly("x", &FullSolution::x)
        .def_readonly("det_r", &FullSolution::det_r);

    py::class_<PerpContribution>(m, "PerpContribution")
        .def_readonly("j", &PerpContribution::j)
        .def_readonly("coeffs", &PerpContribution::coeffs);

    py::class_<AffineSolution>(m, "AffineSolution")
        .def_readonly("j", &AffineSolution::j)
        .def_readonly("d_j", &AffineSolution::d_j)
        .def_readonly("prime_coeffs", &AffineSolution::prime_coeffs)
        .def_readonly("tail_coeffs", &AffineSolution::tail_coeffs)
        .def_property_readonly("n", &AffineSolution::n)
        .def("evaluate", &AffineSolution::evaluate, py::arg("prime_values"),
             py::arg("tail_values"))
        .def("format", [](const AffineSolution& s) { return io::format_affine(s); })
        .def("__eq__",
             [](const AffineSolution& a, const AffineSolution& b) { return a == b; });

    py::class_<EliminationTrace::Step>(m, "TraceStep")
        .def_readonly("j", &EliminationTrace::Step::j)
        .def_readonly("minor", &EliminationTrace::Step::minor)
        .def_readonly("solution", &EliminationTrace::Step::solution);

    py::class_<EliminationTrace>(m, "EliminationTrace")
        .def_readonly("steps", &EliminationTrace::steps);

    py::class_<OracleSolution>(m, "OracleSolution")
        .def_readonly("x", &OracleSolution::x)
        .def_readonly("pivot_permutation", &OracleSolution::pivot_permutation);

    py::class_<ReorderedSystem>(m, "ReorderedSystem")
        .def_readonly("system", &ReorderedSystem::system)
        .def_readonly("row_permutation", &ReorderedSystem::row_permutation);

    py::class_<ChainSpec>(m, "ChainSpec")
        .def(py::init([](const py::sequence& masses, const py::handle& acceleration,
                         const std::string& scalar) {
                 ScalarKind kind = kind_from_name(scalar);
                 return ChainSpec(scalars_from_py(masses, kind),
                                  scalar_from_py(acceleration, kind));
             }),
             py::arg("masses"), py::arg("acceleration"), py::arg("scalar") = "rational")
        .def_property_readonly("n", &ChainSpec::n);

    m.def("make_matrix", [](index_t rows, index_t cols, const py::sequence& entries,
                            const std::string& scalar) {
              return make_matrix(rows, cols, scalars_from_py(entries, kind_from_name(scalar)));
          },
          py::arg("rows"), py::arg("cols"), py::arg("entries"), py::arg("scalar") = "rational");
    m.def("identity",
          [](index_t n, const std::string& scalar) {
              return Matrix::identity(n, kind_from_name(scalar));
          },
          py::arg("n"), py::arg("scalar") = "rational");
    m.def("leading_submatrix", &leading_submatrix, py::arg("m"), py::arg("j"));
    m.def("replace_column", &replace_column, py::arg("m"), py::arg("i"), py::arg("v"));
    m.def("multiply_mm", py::overload_cast<const Matrix&, const Matrix&>(&multiply));
    m.def("multiply_mv", py::overload_cast<const Matrix&, const ColumnVector&>(&multiply));

    m.def("det_leibniz", &det_leibniz, py::arg("m"));
    m.def("det_fast", &det_fast, py::arg("m"));
    m.def("leading_minors", &leading_minors, py::arg("m"));

    m.def("solve_full", [](const SystemSpec& sys) { return solve_full(sys); }, py::arg("sys"));
    m.def("residual", &residual, py::arg("sys"), py::arg("x"));

    m.def("perp_contribution", &perp_contribution, py::arg("r"), py::arg("j"));
    m.def("solve_partial",
          [](const SystemSpec& sys, index_t j) { return solve_partial(sys, j); },
          py::arg("sys"), py::arg("j"));
    m.def("eliminate_stepwise",
          [](const SystemSpec& sys) { return eliminate_stepwise(sys); }, py::arg("sys"));
    m.def("check_induction_identity", &check_induction_identity, py::arg("r"), py::arg("p"),
          py::arg("x"), py::arg("x_prime"));
    m.def("reorder_for_nonzero_minors",
          [](const SystemSpec& sys) { return reorder_for_nonzero_minors(sys); },
          py::arg("sys"));

    m.def("solve_elimination", &solve_elimination, py::arg("sys"));
    m.def("partial_solve_by_substitution", &partial_solve_by_substitution, py::arg("sys"),
          py::arg("j"));

    m.def("build_chain_system", &build_chain_system, py::arg("spec"));
    m.def("chain_closed_form", &chain_closed_form, py::arg("spec"));
    m.def("chain_inverse_matrix",
          [](index_t n) { return chain_inverse_matrix(n, ScalarKind::rational); },
          py::arg("n"));

    m.def("parse_system", &io::parse_system, py::arg("text"),
          "Parse the plain-text system format");
    m.def("parse_chain_model", &io::parse_chain_model, py::arg("text"),
          "Parse the JSON model format");
    m.def("format_affine", &io::format_affine, py::arg("solution"));
    m.def("affine_to_json",
          [](const AffineSolution& s) { return io::affine_to_json(s).dump(); },
          py::arg("solution"));
    m.def("affine_from_json", [](const std::string& text) {
        return io::affine_from_json(nlohmann::json::parse(text));
    });
}
