#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "branchkit/branchkit.hpp"

namespace py = pybind11;
namespace bk = branchkit;

namespace {

using Mults = std::map<int, bk::Count>;

py::int_ to_pyint(const bk::BigInt& value) {
    return py::reinterpret_steal<py::int_>(PyLong_FromString(value.str().c_str(), nullptr, 10));
}

bk::DominantWeight make_weight(int n, const std::optional<std::vector<int>>& weight,
                               const std::optional<std::vector<int>>& partition) {
    if (weight.has_value() == partition.has_value())
        throw bk::InvalidInput("give exactly one of weight= or partition=");
    if (weight)
        return bk::DominantWeight(n, *weight);
    return bk::partition_to_omega(bk::Partition(*partition), n);
}

std::vector<int> to_vector(std::span<const int> s) { return {s.begin(), s.end()}; }

bk::PivotRule parse_pivot(const std::string& name) {
    if (name == "largest")
        return bk::PivotRule::largest;
    if (name == "smallest")
        return bk::PivotRule::smallest;
    throw bk::InvalidInput("pivot must be 'largest' or 'smallest'");
}

} // namespace

PYBIND11_MODULE(_branchkit, m) {
    m.doc() = "Restriction of irreducible sl_n representations to sl2-subalgebras";

    static py::exception<bk::Error> error(m, "BranchkitError", PyExc_RuntimeError);
    static py::exception<bk::InvalidInput> invalid(m, "InvalidInput", PyExc_ValueError);
    static py::exception<bk::BudgetExceeded> budget(m, "BudgetExceeded", error.ptr());
    static py::exception<bk::ConsistencyError> inconsistent(m, "ConsistencyError", error.ptr());
    py::register_exception_translator([](std::exception_ptr p) {
        try {
            if (p)
                std::rethrow_exception(p);
        } catch (const bk::InvalidInput& e) {
            PyErr_SetString(invalid.ptr(), e.what());
        } catch (const bk::BudgetExceeded& e) {
            PyErr_SetString(budget.ptr(), e.what());
        } catch (const bk::ConsistencyError& e) {
            PyErr_SetString(inconsistent.ptr(), e.what());
        } catch (const bk::Error& e) {
            PyErr_SetString(error.ptr(), e.what());
        }
    });

    m.def(
        "branch",
        [](int n, const std::vector<int>& type, std::optional<std::vector<int>> weight,
           std::optional<std::vector<int>> partition) -> Mults {
            const bk::SubalgebraType t(n, type);
            const auto w = make_weight(n, weight, partition);
            py::gil_scoped_release release;
            return bk::branch(t, w).entries();
        },
        py::arg("n"), py::arg("type"), py::kw_only(), py::arg("weight") = py::none(),
        py::arg("partition") = py::none(),
        "Multiplicities {j: m_j} of F_j in L(lambda) restricted to the type-`type` subalgebra.");

    m.def(
        "fundamental_branching",
        [](int n, const std::vector<int>& type, int k, bool verify) -> Mults {
            bk::FundamentalOptions opts;
            opts.verify = verify;
            return bk::fundamental_branching(bk::SubalgebraType(n, type), k, opts).entries();
        },
        py::arg("n"), py::arg("type"), py::arg("k"), py::arg("verify") = false);

    m.def(
        "oracle_branch",
        [](int n, const std::vector<int>& type, std::optional<std::vector<int>> weight,
           std::optional<std::vector<int>> partition, std::uint64_t budget) -> Mults {
            const bk::SubalgebraType t(n, type);
            const auto w = make_weight(n, weight, partition);
            py::gil_scoped_release release;
            return bk::oracle_branch(t, w, budget).entries();
        },
        py::arg("n"), py::arg("type"), py::kw_only(), py::arg("weight") = py::none(),
        py::arg("partition") = py::none(), py::arg("budget") = bk::kDefaultOracleBudget);

    m.def(
        "pieri_set",
        [](int n, const std::vector<int>& weight, int k) {
            std::vector<std::vector<int>> out;
            for (const auto& mu : bk::pieri_set(bk::DominantWeight(n, weight), k))
                out.push_back(to_vector(mu.coeffs()));
            return out;
        },
        py::arg("n"), py::arg("weight"), py::arg("k"));

    m.def(
        "dim_irrep", [](int n, const std::vector<int>& weight) { return to_pyint(bk::dim_irrep(bk::DominantWeight(n, weight))); },
        py::arg("n"), py::arg("weight"));
    m.def(
        "omega_to_partition",
        [](int n, const std::vector<int>& weight) {
            return to_vector(bk::omega_to_partition(bk::DominantWeight(n, weight)).parts());
        },
        py::arg("n"), py::arg("weight"));
    m.def(
        "partition_to_omega",
        [](const std::vector<int>& partition, int n) {
            return to_vector(bk::partition_to_omega(bk::Partition(partition), n).coeffs());
        },
        py::arg("partition"), py::arg("n"));

    m.def("pi", &bk::pi, py::arg("n"), py::arg("k"), py::arg("d"),
          "Partitions of d into at most k parts, each at most n.");
    m.def(
        "gaussian_binomial",
        [](int a, int b) {
            const auto g = bk::gaussian_binomial(a, b);
            std::vector<bk::Count> coeffs(static_cast<std::size_t>(g.degree() + 1));
            for (int d = 0; d <= g.degree(); ++d)
                coeffs[static_cast<std::size_t>(d)] = g.coefficient(d);
            return coeffs;
        },
        py::arg("a"), py::arg("b"), "Coefficients of [a choose b]_q, constant term first.");

    m.def(
        "subalgebra_types",
        [](int n) {
            std::vector<std::vector<int>> out;
            for (const auto& t : bk::subalgebra_types(n))
                out.push_back(to_vector(t.blocks().parts()));
            return out;
        },
        py::arg("n"));
    m.def(
        "h_diagonal", [](int n, const std::vector<int>& type) { return bk::h_diagonal(bk::SubalgebraType(n, type)); },
        py::arg("n"), py::arg("type"));
    m.def(
        "build_triple",
        [](int n, const std::vector<int>& type) {
            const auto tr = bk::build_triple(bk::SubalgebraType(n, type));
            py::dict out;
            out["H"] = tr.h.rows();
            out["X"] = tr.x.rows();
            out["Y"] = tr.y.rows();
            out["relations_ok"] = bk::satisfies_sl2_relations(tr);
            return out;
        },
        py::arg("n"), py::arg("type"));

    py::class_<bk::BranchingEngine>(m, "Engine", "A private memo, independent of the module-level branch().")
        .def(py::init([](const std::string& pivot) { return std::make_unique<bk::BranchingEngine>(parse_pivot(pivot)); }),
             py::arg("pivot") = "largest")
        .def(
            "branch",
            [](bk::BranchingEngine& self, int n, const std::vector<int>& type, std::optional<std::vector<int>> weight,
               std::optional<std::vector<int>> partition) -> Mults {
                const bk::SubalgebraType t(n, type);
                const auto w = make_weight(n, weight, partition);
                py::gil_scoped_release release;
                return self.branch(t, w).entries();
            },
            py::arg("n"), py::arg("type"), py::kw_only(), py::arg("weight") = py::none(),
            py::arg("partition") = py::none())
        .def("memo_size", &bk::BranchingEngine::memo_size)
        .def("stats",
             [](const bk::BranchingEngine& self) {
                 const auto s = self.stats();
                 py::dict out;
                 out["computed"] = s.computed;
                 out["memo_hits"] = s.memo_hits;
                 return out;
             })
        .def("load_cache", [](bk::BranchingEngine& self, const std::string& path) { return bk::load_cache(path, self); })
        .def("save_cache", [](const bk::BranchingEngine& self, const std::string& path) { bk::save_cache(path, self); })
        .def("clear", &bk::BranchingEngine::clear);
}
