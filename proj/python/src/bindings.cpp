// Python bindings. Partitions cross the boundary as lists of ints padded to
// length m; boxes as (row, col) tuples; structured results as dicts.

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "mhrg/analysis.hpp"
#include "mhrg/errors.hpp"
#include "mhrg/records.hpp"
#include "mhrg/verify.hpp"

namespace py = pybind11;
using namespace mhrg;

namespace {

using Parts = std::vector<int>;
using BoxTuple = std::pair<int, int>;

Box to_box(BoxTuple b)
{
    return {b.first, b.second};
}

// nlohmann -> Python via the json module; the documents are small.
py::object to_python(const nlohmann::json& doc)
{
    return py::module_::import("json").attr("loads")(doc.dump());
}

Partition partition(int m, int n, const Parts& parts)
{
    return make_partition(make_board(m, n), parts);
}

std::vector<Parts> parts_of(const std::set<Partition>& ps)
{
    std::vector<Parts> out;
    for (const auto& p : ps) {
        out.push_back(p.parts);
    }
    return out;
}

} // namespace

PYBIND11_MODULE(_mhrg, mod)
{
    mod.doc() = "Multiple hook removing game on Young diagrams";

    py::register_exception<ResourceLimit>(mod, "ResourceLimitError", PyExc_RuntimeError);

    mod.def("board_params", [](int m, int n) {
        const auto b = make_board(m, n);
        return py::dict(py::arg("m") = b.m(), py::arg("n") = b.n(), py::arg("chi") = b.chi(),
                        py::arg("c") = b.c());
    });
    mod.def("all_partitions", [](int m, int n) {
        std::vector<Parts> out;
        for (const auto& p : all_partitions(make_board(m, n))) {
            out.push_back(p.parts);
        }
        return out;
    });
    mod.def("index_set", [](int m, int n, const Parts& parts) {
        return index_set(make_board(m, n), partition(m, n, parts)).elements;
    });
    mod.def("partition_of_index_set", [](int m, int n, const Parts& elements) {
        const auto board = make_board(m, n);
        return partition_of_index_set(board, make_index_set(board, elements)).parts;
    });
    mod.def("dual", [](int m, int n, const Parts& parts) {
        return dual(make_board(m, n), partition(m, n, parts)).parts;
    });
    mod.def("unimodal_label", [](int m, int n, int i, int j) { return unimodal_label(make_board(m, n), i, j); });
    mod.def("hook_multiset", [](int m, int n, const Parts& parts, BoxTuple box) {
        return hook_multiset(make_board(m, n), partition(m, n, parts), to_box(box)).labels;
    });
    mod.def("remove_hook", [](int m, int n, const Parts& parts, BoxTuple box) {
        return remove_hook(partition(m, n, parts), to_box(box)).parts;
    });
    mod.def("transition_indices", [](int m, int n, const Parts& parts, BoxTuple box) {
        const auto lr = transition_indices(make_board(m, n), partition(m, n, parts), to_box(box));
        return std::make_pair(lr.l, lr.r);
    });
    mod.def("diagonal_expression", [](int m, int n, const Parts& parts) {
        return diagonal_expression(make_board(m, n), partition(m, n, parts)).counts;
    });
    mod.def("partition_of_diagonal", [](int m, int n, const std::vector<int>& counts) {
        return partition_of_diagonal(make_board(m, n), {counts}).parts;
    });
    mod.def("apply_lr", [](int m, int n, const Parts& parts, int l, int r) -> std::optional<Parts> {
        const auto out = apply_lr(make_board(m, n), partition(m, n, parts), l, r);
        if (!out) {
            return std::nullopt;
        }
        return out->parts;
    });

    mod.def("f_value", [](int m, int n, const Parts& parts, BoxTuple box) {
        return f_value(make_board(m, n), partition(m, n, parts), to_box(box));
    });
    mod.def("mhr_move", [](int m, int n, const Parts& parts, BoxTuple box) {
        return to_python(to_json(mhr_move(make_board(m, n), partition(m, n, parts), to_box(box))));
    });
    mod.def("options", [](int m, int n, const Parts& parts) {
        return parts_of(options(make_board(m, n), partition(m, n, parts)));
    });
    mod.def("reachable_positions", [](int m, int n) {
        const GameGraph graph = reachable_graph(make_board(m, n));
        std::vector<Parts> out;
        for (const auto& [p, recs] : graph.moves()) {
            out.push_back(p.parts);
        }
        return out;
    });

    mod.def("grundy_values", [](int m, int n) {
        const GrundyTable table = grundy_table(reachable_graph(make_board(m, n)));
        py::dict out;
        for (const auto& [p, g] : table.values) {
            out[py::tuple(py::cast(p.parts))] = g;
        }
        return out;
    });
    mod.def("member_by_index_sets", [](int m, int n, const Parts& parts) {
        return member_by_index_sets(make_board(m, n), partition(m, n, parts));
    });
    mod.def("member_by_parts", [](int m, int n, const Parts& parts) {
        return member_by_parts(make_board(m, n), partition(m, n, parts));
    });
    mod.def("p_positions_m2_closed_form", [](int n) { return parts_of(p_positions_m2_closed_form(n)); });
    mod.def("p_positions_two_rows_closed_form",
            [](int m, int n) { return parts_of(p_positions_two_rows_closed_form(m, n)); });

    mod.def("position", [](int m, int n, const Parts& parts) {
        const auto data = analyze_board(make_board(m, n));
        return to_python(position_detail_json(data, partition(m, n, parts)));
    });
    mod.def("graph", [](int m, int n) { return to_python(graph_to_json(analyze_board(make_board(m, n)))); });
    mod.def("graph_dot", [](int m, int n) { return graph_to_dot(analyze_board(make_board(m, n))); });

    mod.def("verify_main_theorem", [](int m, int n) { return to_python(to_json(verify_main_theorem(make_board(m, n)))); });
    mod.def("verify_t_rows", [](int t, int m, int n) { return to_python(to_json(verify_t_rows(t, m, n))); });
    mod.def("verify_closed_form_m2", [](int n) { return to_python(to_json(verify_closed_form_m2(n))); });
    mod.def("verify_closed_form_two_rows",
            [](int m, int n) { return to_python(to_json(verify_closed_form_two_rows(m, n))); });

    mod.def("position_limit", &position_limit);
}
