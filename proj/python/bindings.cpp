#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "specht/classifier.hpp"

namespace py = pybind11;
using namespace specht;

namespace {

Partition to_partition(const std::vector<std::int64_t>& parts) { return Partition(parts); }

py::list slots_of(const MultiSequence& ms, const Partition& lambda) {
    py::list out;
    const SlotLayout layout(lambda);
    for (std::size_t col = 0; col < ms.size(); ++col) {
        if (ms.values[col] == 0) continue;
        const SlotIndex s = layout.slot(col);
        py::dict d;
        d["r"] = s.r;
        d["s"] = s.s;
        d["i"] = s.i;
        d["v"] = ms.values[col];
        out.append(d);
    }
    return out;
}

py::dict classification(const std::vector<std::int64_t>& parts, std::int64_t p) {
    const Partition lambda = to_partition(parts);
    const Classification c = ext1_dim(lambda, Prime(p));
    py::dict d;
    d["p"] = c.p;
    d["lambda"] = lambda.parts();
    d["h0"] = c.h0;
    d["ext1_B"] = c.ext1_dim;
    py::dict h1;
    h1["value"] = c.ext1_dim;
    h1["exact"] = c.h1_exact;
    d["h1"] = h1;
    d["case"] = c.case_tag;
    d["witness"] = c.witness ? py::object(slots_of(*c.witness, lambda)) : py::object(py::none());
    d["witness_verified"] = c.witness_verified;
    return d;
}

py::dict two_part(std::int64_t a, std::int64_t b, std::int64_t p) {
    const TwoPartClass cls = classify_two_part(a, b, Prime(p));
    py::dict d;
    if (std::holds_alternative<James>(cls)) {
        d["kind"] = "James";
    } else if (const auto* pt = std::get_if<Pointed>(&cls)) {
        d["kind"] = "Pointed";
        d["beta"] = pt->beta;
        d["b_hat"] = pt->b_hat;
    } else {
        d["kind"] = "Split";
    }
    return d;
}

py::dict triple(std::int64_t a, std::int64_t b, std::int64_t c, std::int64_t p) {
    const TripleVerdict t = triple_verdict(a, b, c, Prime(p));
    py::dict d;
    d["nonsplit"] = t.nonsplit;
    d["ext1_B"] = t.ext1_dim;
    d["case"] = t.case_tag;
    d["witness"] = t.witness ? py::object(slots_of(*t.witness, Partition{a, b, c})) : py::object(py::none());
    return d;
}

} // namespace

PYBIND11_MODULE(_specht, m) {
    m.doc() = "H^0 and Ext^1_B dimensions for Specht modules over F_p";

    m.def("len_p", [](std::int64_t a, std::int64_t p) { return len_p(a, Prime(p)); }, py::arg("a"), py::arg("p"));
    m.def("val_p", [](std::int64_t a, std::int64_t p) { return val_p(a, Prime(p)); }, py::arg("a"), py::arg("p"));
    m.def("digits_base_p", [](std::int64_t a, std::int64_t p) { return digits_base_p(a, Prime(p)).digits; },
          py::arg("a"), py::arg("p"));
    m.def("binom_mod_p", [](std::int64_t a, std::int64_t b, std::int64_t p) { return binom_mod_p(a, b, Prime(p)); },
          py::arg("a"), py::arg("b"), py::arg("p"));

    m.def("is_james_pair", [](std::int64_t a, std::int64_t b, std::int64_t p) { return is_james_pair(a, b, Prime(p)); },
          py::arg("a"), py::arg("b"), py::arg("p"));
    m.def("is_james_partition",
          [](const std::vector<std::int64_t>& l, std::int64_t p) { return is_james_partition(to_partition(l), Prime(p)); },
          py::arg("lam"), py::arg("p"));
    m.def("classify_two_part", &two_part, py::arg("a"), py::arg("b"), py::arg("p"));
    m.def("james_index",
          [](const std::vector<std::int64_t>& l, std::int64_t p) { return james_index(to_partition(l), Prime(p)); },
          py::arg("lam"), py::arg("p"));
    m.def("enumerate_partitions",
          [](std::int64_t d, int max_parts) {
              std::vector<std::vector<std::int64_t>> out;
              for (const auto& l : enumerate_partitions(d, max_parts)) out.push_back(l.parts());
              return out;
          },
          py::arg("d"), py::arg("max_parts"));

    m.def("dim_E", [](const std::vector<std::int64_t>& l, std::int64_t p) { return dim_E(to_partition(l), Prime(p)); },
          py::arg("lam"), py::arg("p"));
    m.def("ext1_dim_oracle",
          [](const std::vector<std::int64_t>& l, std::int64_t p) { return ext1_dim_oracle(to_partition(l), Prime(p)); },
          py::arg("lam"), py::arg("p"));
    m.def("nullspace",
          [](const std::vector<std::int64_t>& l, std::int64_t p) {
              std::vector<std::vector<std::uint32_t>> out;
              for (auto& v : nullspace(build_relation_system(to_partition(l), Prime(p)))) out.push_back(std::move(v.values));
              return out;
          },
          py::arg("lam"), py::arg("p"));
    m.def("standard_multisequence",
          [](const std::vector<std::int64_t>& l, std::int64_t p) {
              return standard_multisequence(to_partition(l), Prime(p)).values;
          },
          py::arg("lam"), py::arg("p"));
    m.def("canonical_multisequence",
          [](const std::vector<std::int64_t>& l, std::int64_t p) {
              return canonical_multisequence(to_partition(l), Prime(p)).values;
          },
          py::arg("lam"), py::arg("p"));
    m.def("is_coherent",
          [](const std::vector<std::uint32_t>& values, const std::vector<std::int64_t>& l, std::int64_t p) {
              return is_coherent(MultiSequence{values}, to_partition(l), Prime(p));
          },
          py::arg("values"), py::arg("lam"), py::arg("p"));

    m.def("h0_dim", [](const std::vector<std::int64_t>& l, std::int64_t p) { return h0_dim(to_partition(l), Prime(p)); },
          py::arg("lam"), py::arg("p"));
    m.def("james_ext_dim",
          [](const std::vector<std::int64_t>& l, std::int64_t p) { return james_ext_dim(to_partition(l), Prime(p)); },
          py::arg("lam"), py::arg("p"));
    m.def("classify", &classification, py::arg("lam"), py::arg("p"),
          "Closed-form report: dict with p, lambda, h0, ext1_B, h1, case, witness.");
    m.def("triple_verdict", &triple, py::arg("a"), py::arg("b"), py::arg("c"), py::arg("p"));
    m.def("gl2_ext_dim",
          [](std::int64_t r, std::int64_t s, std::int64_t t, std::int64_t u, std::int64_t p) {
              return gl2_ext_dim(r, s, t, u, Prime(p));
          },
          py::arg("r"), py::arg("s"), py::arg("t"), py::arg("u"), py::arg("p"));
    m.def("sl2_ext_dim",
          [](std::int64_t r, std::int64_t s, std::int64_t p) {
              const Sl2Verdict v = sl2_ext_dim(r, s, Prime(p));
              return py::make_tuple(v.dim, v.reason);
          },
          py::arg("r"), py::arg("s"), py::arg("p"));
}
