#include <pybind11/functional.h>
#include <pybind11/operators.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "supchar/anclasses.hpp"
#include "supchar/enumerate.hpp"
#include "supchar/io.hpp"
#include "supchar/numtheory.hpp"

namespace py = pybind11;
using namespace supchar;

namespace {

py::int_ to_py(const Integer& z) { return py::int_(py::module_::import("builtins").attr("int")(z.get_str())); }

py::list to_py(const std::vector<Integer>& zs) {
  py::list out;
  for (const Integer& z : zs) out.append(to_py(z));
  return out;
}

// pybind11 holders cannot be shared_ptr<const T>; tables are still never
// mutated through this alias.
using PyTable = std::shared_ptr<CharacterTable>;

PyTable py_table(const TablePtr& t) { return std::const_pointer_cast<CharacterTable>(t); }

py::dict stats_dict(const EnumerationStats& s) {
  py::dict d;
  d["candidates"] = s.candidates;
  d["rejected_by_grouping"] = s.rejected_by_grouping;
  d["rejected_by_verify"] = s.rejected_by_verify;
  d["wall_seconds"] = s.wall_seconds;
  return d;
}

}  // namespace

PYBIND11_MODULE(_supchar, m) {
  m.doc() = "Exact character tables and supercharacter theories";

  py::register_exception<ParseError>(m, "ParseError", PyExc_ValueError);
  py::register_exception<InvalidTable>(m, "InvalidTable", PyExc_ValueError);
  py::register_exception<FormatError>(m, "FormatError", PyExc_ValueError);
  py::register_exception<ConstructionError>(m, "ConstructionError", PyExc_ValueError);
  py::register_exception<CandidateLimitExceeded>(m, "CandidateLimitExceeded", PyExc_RuntimeError);

  py::class_<Cyclotomic>(m, "Cyclotomic")
      .def(py::init<>())
      .def(py::init<long>())
      .def(py::init([](const std::string& text) { return parse_cyclotomic(text); }))
      .def_static("E", &Cyclotomic::root_of_unity, py::arg("n"), py::arg("exponent") = 1)
      .def_property_readonly("conductor", &Cyclotomic::conductor)
      .def("conjugate", &Cyclotomic::conjugate)
      .def("galois", &Cyclotomic::galois, py::arg("u"))
      .def("classify", [](const Cyclotomic& c) { return std::string(to_string(c.classify())); })
      .def("is_rational", &Cyclotomic::is_rational)
      .def(py::self + py::self)
      .def(py::self - py::self)
      .def(py::self * py::self)
      .def(-py::self)
      .def(py::self == py::self)
      .def("__pow__", &Cyclotomic::pow)
      .def("__hash__", &Cyclotomic::hash)
      .def("__str__", &Cyclotomic::to_string)
      .def("__repr__", [](const Cyclotomic& c) { return "Cyclotomic('" + c.to_string() + "')"; });
  m.def("parse", &parse_cyclotomic, py::arg("text"));

  py::class_<CharacterTable, PyTable>(m, "CharacterTable")
      .def_property_readonly("name", &CharacterTable::name)
      .def_property_readonly("k", &CharacterTable::size)
      .def_property_readonly("class_labels", &CharacterTable::class_labels)
      .def_property_readonly("char_labels", &CharacterTable::char_labels)
      .def_property_readonly("conductor", &CharacterTable::conductor)
      .def_property_readonly("group_order", [](const CharacterTable& t) { return to_py(t.class_data().group_order); })
      .def_property_readonly("class_sizes", [](const CharacterTable& t) { return to_py(t.class_data().class_sizes); })
      .def_property_readonly("centralizer_orders",
                             [](const CharacterTable& t) { return to_py(t.class_data().centralizer_orders); })
      .def_property_readonly("degrees",
                             [](const CharacterTable& t) {
                               py::list out;
                               for (std::size_t i = 0; i < t.size(); ++i) out.append(to_py(t.degree(i)));
                               return out;
                             })
      .def("value", &CharacterTable::value, py::arg("row"), py::arg("col"))
      .def_property_readonly("inverse_class_map", &CharacterTable::inverse_class_map)
      .def("galois_action",
           [](const CharacterTable& t, long long u) {
             GaloisAction a = galois_action(t, u);
             return py::make_tuple(a.rows, a.columns);
           })
      .def("to_json", [](const CharacterTable& t) { return dump_table(t); })
      .def("__eq__", [](const CharacterTable& a, const CharacterTable& b) { return a == b; });

  m.def("gen_cyclic", [](std::uint32_t n) { return py_table(gen_cyclic(n)); }, py::arg("n"));
  m.def("gen_suzuki", [](std::uint64_t q) { return py_table(gen_suzuki(q)); }, py::arg("q"));
  m.def("load_table", [](const std::string& document) { return py_table(load_table(document)); }, py::arg("document"));
  m.def("load_table_file", [](const std::string& path) { return py_table(load_table_file(path)); }, py::arg("path"));

  py::class_<SuperTheory>(m, "SuperTheory")
      .def_property_readonly("characters", [](const SuperTheory& s) { return s.characters.blocks(); })
      .def_property_readonly("classes", [](const SuperTheory& s) { return s.classes.blocks(); })
      .def_property_readonly("table", [](const SuperTheory& s) { return py_table(s.table); })
      .def("to_json", [](const SuperTheory& s) { return theory_to_json(s).dump(); })
      .def("__eq__", [](const SuperTheory& a, const SuperTheory& b) { return a == b; })
      .def("__repr__", [](const SuperTheory& s) { return "SuperTheory(" + theory_to_json(s).dump() + ")"; });

  m.def(
      "verify",
      [](const PyTable& t, const SetPartition::Blocks& characters, const SetPartition::Blocks& classes) {
        const SctReport r = sct_verify_blocks(t, characters, classes);
        py::list failures;
        for (const Failure& f : r.failures) failures.append(py::make_tuple(std::string(to_string(f.condition)), f.detail));
        return py::make_tuple(r.verdict, failures);
      },
      py::arg("table"), py::arg("characters"), py::arg("classes"));
  m.def("fine", [](const PyTable& t) { return sct_trivial_fine(t); });
  m.def("coarse", [](const PyTable& t) { return sct_trivial_coarse(t); });
  m.def("conjugation", [](const PyTable& t) { return sct_conjugation(t); });
  m.def("galois", [](const PyTable& t) { return sct_galois(t); });
  m.def(
      "pair", [](const PyTable& t, std::size_t chi, std::size_t cls) { return sct_pair(t, chi, cls); }, py::arg("table"),
      py::arg("chi"), py::arg("cls"));
  m.def("join", &sct_join);

  m.def(
      "enumerate",
      [](const PyTable& t, unsigned workers, std::uint64_t limit) {
        EnumerationResult r;
        {
          py::gil_scoped_release release;
          r = enumerate_all(t, {workers, limit});
        }
        return py::make_tuple(r.theories, stats_dict(r.stats));
      },
      py::arg("table"), py::arg("workers") = 1, py::arg("limit") = EnumerationOptions{}.candidate_limit);
  m.def(
      "count",
      [](const PyTable& t, unsigned workers, std::uint64_t limit) {
        py::gil_scoped_release release;
        return count_scts(t, {workers, limit});
      },
      py::arg("table"), py::arg("workers") = 1, py::arg("limit") = EnumerationOptions{}.candidate_limit);
  m.def("naive_enumerate", [](const PyTable& t) { return naive_enumerate(t).theories; });

  m.def("is_prime", &is_prime);
  m.def("divisor_count", &divisor_count);
  m.def("prime_profile", [](std::uint64_t p) {
    const PrimeProfile r = prime_profile(p);
    py::dict d;
    d["p"] = r.p;
    d["is_prime"] = r.is_prime;
    d["is_sophie_germain"] = r.is_sophie_germain;
    d["is_safe"] = r.is_safe;
    return d;
  });
  m.def("safe_primes_upto", &safe_primes_upto);
  m.def("s_cyclic", &s_cyclic);
  m.def("classify_small_s", &classify_small_s);

  m.def("odd_distinct_partitions", [](unsigned n) {
    std::vector<std::vector<unsigned>> out;
    for (const auto& c : odd_distinct_partitions(n)) out.push_back(c.parts);
    return out;
  });
  m.def("split_profile", [](std::vector<unsigned> parts) {
    const SplitClassProfile p = split_profile(CycleType{std::move(parts)});
    return py::make_tuple(p.splits, p.nonreal_pair);
  });
  m.def("nonreal_pair_count", &nonreal_pair_count);
  m.def("classify_n", [](unsigned bound) {
    const NClassification c = classify_n(bound);
    return py::make_tuple(c.all_real, c.exactly_one, c.two_or_more);
  });
}
