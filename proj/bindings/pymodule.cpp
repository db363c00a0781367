#include "conifold/cli.hpp"
#include "conifold/fibered.hpp"
#include "conifold/localmodel.hpp"
#include "conifold/presets.hpp"
#include "conifold/quintic.hpp"
#include "conifold/relations.hpp"
#include "conifold/serialize.hpp"
#include "conifold/surgery.hpp"
#include "conifold/zlinalg.hpp"

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <sstream>
#include <string>
#include <vector>

namespace py = pybind11;

namespace {

// Python ints are already arbitrary precision, so entries cross the boundary
// as decimal strings in both directions; no width is ever truncated.
conifold::Integer integer_from_object(const py::handle& obj) {
    if (!py::isinstance<py::int_>(obj))
        throw conifold::DataError("matrix entries must be integers");
    return conifold::Integer(py::str(obj).cast<std::string>());
}

py::object integer_to_object(const conifold::Integer& x) {
    return py::module_::import("builtins").attr("int")(conifold::integer_to_string(x));
}

conifold::IntegerMatrix matrix_from_rows(const py::sequence& rows) {
    const std::size_t row_count = static_cast<std::size_t>(py::len(rows));
    std::size_t col_count = 0;
    if (row_count > 0) col_count = static_cast<std::size_t>(py::len(rows[0]));
    conifold::IntegerMatrix m(row_count, col_count);
    for (std::size_t r = 0; r < row_count; ++r) {
        const py::sequence row = rows[r].cast<py::sequence>();
        if (static_cast<std::size_t>(py::len(row)) != col_count)
            throw conifold::DataError("rows must all have the same length");
        for (std::size_t c = 0; c < col_count; ++c) m.at(r, c) = integer_from_object(row[c]);
    }
    return m;
}

py::list matrix_to_rows(const conifold::IntegerMatrix& m) {
    py::list rows;
    for (std::size_t r = 0; r < m.rows; ++r) {
        py::list row;
        for (std::size_t c = 0; c < m.cols; ++c) row.append(integer_to_object(m.at(r, c)));
        rows.append(row);
    }
    return rows;
}

std::vector<conifold::Integer> vector_from_sequence(const py::sequence& seq) {
    std::vector<conifold::Integer> v;
    v.reserve(static_cast<std::size_t>(py::len(seq)));
    for (const py::handle& item : seq) v.push_back(integer_from_object(item));
    return v;
}

conifold::FiberClass fiber_class_from(const py::sequence& seq) {
    if (py::len(seq) != 2) throw conifold::DataError("a fiber class has two entries");
    return {integer_from_object(seq[0]), integer_from_object(seq[1])};
}

conifold::CycleConfiguration config_from_text(const std::string& text) {
    return conifold::config_from_json(conifold::parse_json(text, "configuration"));
}

}  // namespace

PYBIND11_MODULE(_conifold, m) {
    m.doc() = "exact bookkeeping for symplectic surgeries on 6-manifolds: integer "
              "linear algebra, good relations, transition formulas, and the quintic "
              "pipeline; documents cross this boundary as JSON strings";

    py::register_exception<conifold::DataError>(m, "DataError", PyExc_ValueError);
    py::register_exception<conifold::VerificationError>(m, "VerificationError",
                                                        PyExc_RuntimeError);

    m.attr("SCHEMA_VERSION") = conifold::kSchemaVersion;

    // ---- exact linear algebra on list-of-list integer matrices ----

    m.def(
        "rank", [](const py::sequence& rows) { return conifold::rank_exact(matrix_from_rows(rows)); },
        py::arg("rows"), "exact rank of an integer matrix");
    m.def(
        "kernel",
        [](const py::sequence& rows) {
            return matrix_to_rows(conifold::kernel_basis(matrix_from_rows(rows)));
        },
        py::arg("rows"), "basis rows of the left kernel, primitive with positive pivots");
    m.def(
        "smith_diagonal",
        [](const py::sequence& rows) {
            py::list diagonal;
            for (const conifold::Integer& d :
                 conifold::smith_normal_form(matrix_from_rows(rows)).diagonal())
                diagonal.append(integer_to_object(d));
            return diagonal;
        },
        py::arg("rows"), "Smith normal form diagonal, nonnegative with divisibility");
    m.def(
        "in_row_span",
        [](const py::sequence& rows, const py::sequence& v) {
            return conifold::in_row_span(matrix_from_rows(rows), vector_from_sequence(v));
        },
        py::arg("rows"), py::arg("v"), "whether v is a rational combination of the rows");

    // ---- surgery bookkeeping ----

    py::class_<conifold::SixManifoldTopology>(m, "Topology",
                                              "betti/euler record of a closed oriented "
                                              "6-manifold")
        .def(py::init([](long long b2, long long b3, long long b4, long long euler,
                         bool simply_connected, bool c1_zero, bool null_sphere) {
                 conifold::SixManifoldTopology t;
                 t.b2 = b2;
                 t.b3 = b3;
                 t.b4 = b4;
                 t.euler = euler;
                 t.simply_connected = simply_connected;
                 t.c1_zero = c1_zero;
                 t.has_null_homologous_surgered_sphere = null_sphere;
                 conifold::validate(t);
                 return t;
             }),
             py::arg("b2"), py::arg("b3"), py::arg("b4"), py::arg("euler"),
             py::arg("simply_connected") = true, py::arg("c1_zero") = true,
             py::arg("null_sphere") = false)
        .def_readwrite("b2", &conifold::SixManifoldTopology::b2)
        .def_readwrite("b3", &conifold::SixManifoldTopology::b3)
        .def_readwrite("b4", &conifold::SixManifoldTopology::b4)
        .def_readwrite("euler", &conifold::SixManifoldTopology::euler)
        .def_readwrite("simply_connected", &conifold::SixManifoldTopology::simply_connected)
        .def_readwrite("c1_zero", &conifold::SixManifoldTopology::c1_zero)
        .def_readwrite("null_sphere",
                       &conifold::SixManifoldTopology::has_null_homologous_surgered_sphere)
        .def("__eq__",
             [](const conifold::SixManifoldTopology& a, const conifold::SixManifoldTopology& b) {
                 return a == b;
             })
        .def("__repr__", [](const conifold::SixManifoldTopology& t) {
            std::ostringstream out;
            out << "Topology(b2=" << t.b2 << ", b3=" << t.b3 << ", b4=" << t.b4
                << ", euler=" << t.euler << ", simply_connected=" << (t.simply_connected ? "True" : "False")
                << ", c1_zero=" << (t.c1_zero ? "True" : "False")
                << ", null_sphere=" << (t.has_null_homologous_surgered_sphere ? "True" : "False")
                << ")";
            return out.str();
        });

    py::class_<conifold::ObstructionFlags>(m, "Flags",
                                           "qualitative consequences read off a surgered "
                                           "topology")
        .def_readonly("non_kahler_by_b3", &conifold::ObstructionFlags::non_kahler_by_b3)
        .def_readonly("hard_lefschetz_violated",
                      &conifold::ObstructionFlags::hard_lefschetz_violated)
        .def_readonly("c2_omega_increases", &conifold::ObstructionFlags::c2_omega_increases)
        .def("__repr__", [](const conifold::ObstructionFlags& f) {
            std::ostringstream out;
            out << "Flags(non_kahler_by_b3=" << (f.non_kahler_by_b3 ? "True" : "False")
                << ", hard_lefschetz_violated=" << (f.hard_lefschetz_violated ? "True" : "False")
                << ", c2_omega_increases=" << (f.c2_omega_increases ? "True" : "False") << ")";
            return out.str();
        });

    m.def("transition", &conifold::conifold_transition, py::arg("topology"), py::arg("n"),
          py::arg("r"), py::arg("good") = true,
          "surgery replacing n 3-spheres spanning r dimensions by 2-spheres");
    m.def("reverse", &conifold::reverse_transition, py::arg("topology"), py::arg("n"),
          py::arg("r"), "formal inverse transition, restoring the smoothing");
    m.def("flags", &conifold::obstruction_flags, py::arg("topology"),
          py::arg("producing_n") = 0, "obstruction flags of a surgered topology");

    // ---- configurations and relations (JSON string boundary) ----

    m.def(
        "preset_product",
        [](int count) {
            return conifold::render_json(conifold::config_to_json(conifold::preset_product(count)));
        },
        py::arg("m"), "configuration JSON for m disjoint null-homologous spheres");
    m.def(
        "preset_hard_lefschetz",
        [] {
            const conifold::HardLefschetzScenario scenario = conifold::preset_hard_lefschetz();
            conifold::Json report;
            report["schema_version"] = conifold::kSchemaVersion;
            report["before"] = conifold::topology_to_json(scenario.before);
            report["after"] = conifold::topology_to_json(scenario.after);
            report["flags"] = conifold::Json{
                {"non_kahler_by_b3", scenario.flags.non_kahler_by_b3},
                {"hard_lefschetz_violated", scenario.flags.hard_lefschetz_violated},
                {"c2_omega_increases", scenario.flags.c2_omega_increases}};
            report["config"] = conifold::config_to_json(scenario.config);
            report["notes"] = scenario.notes;
            return conifold::render_json(report);
        },
        "scenario JSON: one null-homologous sphere surgered with n = 1, r = 0");
    m.def(
        "is_good_subset",
        [](const std::string& config_json, const std::vector<int>& subset) {
            return conifold::is_good_subset(config_from_text(config_json), subset);
        },
        py::arg("config_json"), py::arg("subset"),
        "whether a full-support integer relation exists on the subset");
    m.def(
        "good_relation",
        [](const std::string& config_json, const std::vector<int>& subset) -> py::object {
            const conifold::CycleConfiguration config = config_from_text(config_json);
            const std::optional<conifold::GoodRelation> relation =
                conifold::good_relation(config, subset);
            if (!relation) return py::none();
            conifold::verify_relation(config, *relation);
            py::list coefficients;
            for (const conifold::Integer& c : relation->coefficients)
                coefficients.append(integer_to_object(c));
            return coefficients;
        },
        py::arg("config_json"), py::arg("subset"),
        "coefficients of a full-support relation on the subset, or None");
    m.def(
        "span_dim",
        [](const std::string& config_json, const std::vector<int>& subset) {
            return conifold::span_dim(config_from_text(config_json), subset);
        },
        py::arg("config_json"), py::arg("subset"), "rank of the subset's class rows");
    m.def(
        "search",
        [](const std::string& config_json, int size_min, int size_max, std::uint64_t seed) {
            return conifold::render_json(conifold::search_report_to_json(
                conifold::search_good_subsets(config_from_text(config_json), size_min, size_max,
                                              seed)));
        },
        py::arg("config_json"), py::arg("size_min"), py::arg("size_max"), py::arg("seed") = 0,
        "report JSON of the disjoint good-subset search, one result per size");

    // ---- quintic pipeline ----

    m.def(
        "quintic_configuration",
        [](double lam, int threads) {
            return conifold::render_json(conifold::config_to_json(
                conifold::quintic_configuration(lam, conifold::OffsetProfile::standard(),
                                                threads)));
        },
        py::arg("lam") = 1.0, py::arg("threads") = 1,
        "configuration JSON of the 625 spanning cycles and 125 vanishing rows");
    m.def(
        "quintic_topology",
        [] { return conifold::quintic_topology(); },
        "betti/euler record of the smooth quintic 3-fold");

    // ---- local model residuals ----

    m.def(
        "verify_localmodel",
        [](int samples, std::uint64_t seed) {
            return conifold::render_json(
                conifold::residual_report_to_json(conifold::verify_all(samples, seed)));
        },
        py::arg("samples") = 1000, py::arg("seed") = 0,
        "residual report JSON for the cotangent chart and moment map formulas");

    // ---- fiber classes ----

    m.def(
        "fiber_pairing",
        [](const py::sequence& c, const py::sequence& d) {
            return integer_to_object(
                conifold::fiber_pairing(fiber_class_from(c), fiber_class_from(d)));
        },
        py::arg("c"), py::arg("d"), "determinant pairing of two fiber classes");
    m.def(
        "picard_lefschetz_transport",
        [](const py::sequence& c, const py::sequence& v) {
            const conifold::FiberClass out =
                conifold::picard_lefschetz_transport(fiber_class_from(c), fiber_class_from(v));
            return py::make_tuple(integer_to_object(out[0]), integer_to_object(out[1]));
        },
        py::arg("c"), py::arg("v"), "monodromy action c + <c, v> v around a nodal fiber");

    // ---- full command line, in process ----

    m.def(
        "run_cli",
        [](const std::vector<std::string>& args) {
            std::ostringstream out, err;
            const int code = conifold::run_cli(args, out, err);
            return py::make_tuple(code, out.str(), err.str());
        },
        py::arg("args"),
        "run a command line invocation in process; returns (exit_code, stdout, stderr)");
}
