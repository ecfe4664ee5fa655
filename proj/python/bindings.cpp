#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <sstream>

#include "cli.hpp"
#include "combinlab/complexity.hpp"
#include "combinlab/dp.hpp"
#include "combinlab/graph.hpp"
#include "combinlab/oracles.hpp"
#include "combinlab/search_games.hpp"
#include "combinlab/sorting.hpp"
#include "combinlab/tournament.hpp"

namespace py = pybind11;
using namespace combinlab;

namespace {

// (sorted keys, comparisons)
py::tuple sorted_with_count(const std::vector<std::int64_t>& keys, const std::string& algo) {
    CountingComparator cmp(keys);
    Ids ids;
    if (algo == "merge-insertion") ids = merge_insertion_sort(cmp);
    else if (algo == "insertion") ids = insertion_sort(cmp);
    else if (algo == "mergesort") ids = merge_sort_grouped(cmp);
    else throw py::value_error("unknown algorithm: " + algo);
    std::vector<std::int64_t> out;
    for (auto i : ids) out.push_back(keys[i]);
    return py::make_tuple(out, cmp.count());
}

// Literals are DIMACS style: +i for x_i, -i for not x_i.
CnfFormula to_cnf(std::size_t n, const std::vector<std::vector<long>>& clauses) {
    CnfFormula f{n, {}};
    for (const auto& c : clauses) {
        std::vector<Literal> cl;
        for (auto l : c) {
            if (l == 0) throw py::value_error("literal 0");
            cl.push_back({std::size_t(l < 0 ? -l : l), l > 0});
        }
        f.clauses.push_back(cl);
    }
    f.validate();
    return f;
}

}  // namespace

PYBIND11_MODULE(_combinlab, m) {
    m.doc() = "combinlab core bindings";

    py::register_exception<InputError>(m, "InputError", PyExc_ValueError);
    py::register_exception<LimitError>(m, "LimitError", PyExc_RuntimeError);

    m.def("run", [](const std::vector<std::string>& args) {
        std::ostringstream out, err;
        int code = cli_main(args, out, err);
        return py::make_tuple(code, out.str(), err.str());
    }, "Run the command line tool in-process; returns (exit code, stdout, stderr).");

    m.def("sort", &sorted_with_count, py::arg("keys"), py::arg("algo") = "merge-insertion");
    m.def("select", [](const std::vector<std::int64_t>& keys, std::size_t t) {
        CountingComparator cmp(keys);
        auto id = select_t_linear(t, cmp);
        return py::make_tuple(keys.at(id), cmp.count());
    }, py::arg("keys"), py::arg("t"), "t-th largest key by linear selection, with the comparison count.");

    m.def("insertion_count", &insertion_count);
    m.def("ford_johnson_count", &ford_johnson_count);

    m.def("counterfeit", [](std::size_t n, std::size_t coin, bool heavier) {
        CoinWorld w(n, coin, heavier);
        auto v = find_counterfeit(n, w);
        py::object verdict = py::none();
        if (v.kind == CoinVerdict::Kind::Counterfeit) verdict = py::make_tuple(v.index, v.heavier);
        return py::make_tuple(verdict, w.count());
    }, py::arg("n"), py::arg("coin") = 0, py::arg("heavier") = true);

    m.def("knapsack", [](const std::vector<std::int64_t>& values, const std::vector<std::int64_t>& volumes,
                         std::int64_t capacity) {
        auto r = knapsack_pareto(values, volumes, capacity);
        return py::make_tuple(r.value, r.set);
    });
    m.def("matrix_chain", [](const std::vector<std::int64_t>& dims) {
        auto r = matrix_chain(dims);
        return py::make_tuple(py::int_(py::str(r.cost.str())), r.parenthesization);
    });

    m.def("scc", [](std::size_t n, const std::vector<std::pair<std::size_t, std::size_t>>& arcs) {
        return scc_kosaraju(Digraph(n, arcs));
    });

    // None when unsatisfiable
    m.def("twosat", [](std::size_t n, const std::vector<std::vector<long>>& clauses) -> py::object {
        auto r = twosat_solve(to_cnf(n, clauses));
        if (!r.satisfiable) return py::none();
        return py::cast(r.assignment);
    });
}
