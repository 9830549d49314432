#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "entronet/cli.hpp"

namespace py = pybind11;
using namespace entronet;

namespace {

py::object to_py(const json_io::Json& j) {
    return py::module_::import("json").attr("loads")(j.dump());
}

// Accept a builtin name / file path / JSON string, or a python dict.
std::string as_ref(const py::object& obj) {
    if (py::isinstance<py::str>(obj)) return obj.cast<std::string>();
    return py::module_::import("json").attr("dumps")(obj).cast<std::string>();
}

py::object finish(cli::CommandResult res) {
    res.payload["exit_code"] = res.exit_code;
    return to_py(res.payload);
}

}  // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "entropy vectors, information inequalities and multicast network codes";

    py::register_exception<Error>(m, "EntronetError", PyExc_ValueError);

    m.def(
        "check",
        [](const py::object& vector, const std::string& family, bool permutations,
           const std::string& a) {
            return finish(cli::cmd_check(as_ref(vector), family, permutations, parse_rational(a)));
        },
        py::arg("vector"), py::arg("family") = "all", py::arg("permutations") = true,
        py::arg("a") = "1",
        "Cone membership checks (gamma|ingleton|zy|all) for a set-function vector");

    m.def(
        "prove",
        [](const py::object& inequality, int n) { return finish(cli::cmd_prove(as_ref(inequality), n)); },
        py::arg("inequality"), py::arg("n") = 0,
        "Shannon provability with an exact certificate either way");

    m.def(
        "group_vector",
        [](const py::object& group) { return finish(cli::cmd_group_vector(as_ref(group))); },
        py::arg("group"), "Entropy vector of a finite group with marked subgroups");

    m.def(
        "solve",
        [](const py::object& group, bool verify, bool emit_network) {
            return finish(cli::cmd_solve(as_ref(group), emit_network, verify));
        },
        py::arg("group"), py::arg("verify") = true, py::arg("emit_network") = false,
        "Build MP(h) for the group vector and solve it with zero error");

    m.def(
        "demo",
        [](const std::string& name, const std::string& a) {
            return finish(cli::cmd_demo(name, parse_rational(a)));
        },
        py::arg("name"), py::arg("a") = "1", "Built-in vectors (pg13, zy-gap) and their conclusions");

    m.def(
        "builtin_vector",
        [](const std::string& name, const std::string& a) {
            auto v = mpnet::builtin_vector(name, parse_rational(a));
            if (!v) throw Error("unknown builtin '" + name + "'");
            return to_py(json_io::set_function_to_json(*v));
        },
        py::arg("name"), py::arg("a") = "1");

    m.def(
        "mp_network",
        [](const py::object& vector, const std::string& a) {
            auto h = cli::load_vector(as_ref(vector), parse_rational(a));
            return to_py(json_io::mp_instance_to_json(mpnet::build_mp(h)));
        },
        py::arg("vector"), py::arg("a") = "1",
        "The induced multicast problem MP(h): network, rates, and receiver manifest");

    m.def(
        "elemental_inequalities",
        [](int n) {
            py::list out;
            for (const auto& ineq : cones::elemental_inequalities(n))
                out.append(to_py(json_io::inequality_to_json(ineq, n)));
            return out;
        },
        py::arg("n") = 4);
}
