#include "a3res/analysis.hpp"
#include "a3res/bott.hpp"
#include "a3res/format.hpp"
#include "a3res/lr.hpp"
#include "a3res/resolution.hpp"
#include "a3res/scan.hpp"

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

namespace py = pybind11;
using namespace a3res;

namespace {

Multiplicities to_mult(const std::vector<int>& v) {
    if (v.size() != 6) throw py::value_error("expected six multiplicities (a, b, c, d, e, f)");
    std::array<int, 6> a{};
    std::copy(v.begin(), v.end(), a.begin());
    return Multiplicities::from_array(a);
}

py::tuple to_tuple(const std::vector<int>& v) {
    py::tuple t(v.size());
    for (std::size_t k = 0; k < v.size(); ++k) t[k] = v[k];
    return t;
}

py::tuple to_tuple(const Partition& p) { return to_tuple(p.parts()); }

template <std::size_t N>
py::tuple to_tuple(const std::array<int, N>& a) {
    return to_tuple(std::vector<int>(a.begin(), a.end()));
}

py::int_ to_int(const BigInt& x) {
    const std::string s = x.str();
    return py::reinterpret_steal<py::int_>(PyLong_FromString(s.c_str(), nullptr, 10));
}

ShiftConvention to_shift(const std::string& s) {
    if (s == "standard") return ShiftConvention::Standard;
    if (s == "example") return ShiftConvention::Example;
    throw py::value_error("shift must be 'standard' or 'example'");
}

py::tuple triple_tuple(const SchurTriple& t) { return py::make_tuple(to_tuple(t.w1), to_tuple(t.w2), to_tuple(t.w3)); }

py::dict audit_dict(const EngineAudit& a) {
    py::dict d;
    d["pairs_visited"] = a.pairs_visited;
    d["pairs_pruned"] = a.pairs_pruned;
    d["triples_enumerated"] = a.triples_enumerated;
    d["triples_nonvanishing"] = a.triples_nonvanishing;
    d["negative_degree"] = a.negative_degree;
    d["violations"] = a.violation_count;
    return d;
}

py::object optional_bool(const std::optional<bool>& b) { return b ? py::object(py::bool_(*b)) : py::object(py::none()); }

}  // namespace

PYBIND11_MODULE(_a3res, m) {
    m.doc() = "Free resolutions of orbit closures for the A3 quiver 1 -> 2 <- 3";

    py::class_<FlagData>(m, "Flag")
        .def(py::init([](const std::array<int, 3>& beta, const std::array<int, 3>& gamma) {
                 for (int k = 0; k < 3; ++k)
                     if (beta[k] < 0 || gamma[k] < 0) throw py::value_error("flag dimensions must be nonnegative");
                 return FlagData{beta, gamma};
             }),
             py::arg("beta"), py::arg("gamma"))
        .def_property_readonly("beta", [](const FlagData& f) { return to_tuple(f.beta); })
        .def_property_readonly("gamma", [](const FlagData& f) { return to_tuple(f.gamma); })
        .def_property_readonly("alpha", [](const FlagData& f) { return to_tuple(f.alpha()); })
        .def("as_reineke", [](const FlagData& f) -> py::object {
            const auto r = f.as_reineke();
            return r ? py::object(to_tuple(r->to_array())) : py::object(py::none());
        })
        .def("__eq__", [](const FlagData& a, const FlagData& b) { return a == b; })
        .def("__repr__", [](const FlagData& f) { return "Flag(" + f.to_string() + ")"; });

    py::class_<BettiEntry>(m, "BettiEntry")
        .def_readonly("i", &BettiEntry::i)
        .def_readonly("t", &BettiEntry::t)
        .def_readonly("N", &BettiEntry::N)
        .def_readonly("mult", &BettiEntry::mult)
        .def_property_readonly("w1", [](const BettiEntry& e) { return to_tuple(e.triple.w1); })
        .def_property_readonly("w2", [](const BettiEntry& e) { return to_tuple(e.triple.w2); })
        .def_property_readonly("w3", [](const BettiEntry& e) { return to_tuple(e.triple.w3); })
        .def_property_readonly("triple", [](const BettiEntry& e) { return triple_tuple(e.triple); })
        .def_property_readonly("dim", [](const BettiEntry& e) { return to_int(e.dim); })
        .def_property_readonly("shift_standard", &BettiEntry::shift_standard)
        .def_property_readonly("shift_example", &BettiEntry::shift_example)
        .def("render", [](const BettiEntry& e, const std::string& shift) { return render_entry(e, to_shift(shift)); },
             py::arg("shift") = "standard")
        .def("__repr__", [](const BettiEntry& e) {
            return "BettiEntry(i=" + std::to_string(e.i) + ", " + render_entry(e, ShiftConvention::Standard) + ")";
        });

    py::class_<BettiTable>(m, "BettiTable")
        .def_readonly("flag", &BettiTable::flag)
        .def_readonly("xi_dim", &BettiTable::xi_dim)
        .def_readonly("flag_dim", &BettiTable::flag_dim)
        .def_readonly("max_degree", &BettiTable::max_degree)
        .def_readonly("entries", &BettiTable::entries)
        .def_property_readonly("codim", &BettiTable::codim)
        .def_property_readonly("top_degree", &BettiTable::top_degree)
        .def_property_readonly("mult", [](const BettiTable& t) -> py::object {
            return t.mult ? py::object(to_tuple(t.mult->to_array())) : py::object(py::none());
        })
        .def_property_readonly("audit", [](const BettiTable& t) { return audit_dict(t.audit); })
        .def("degree", &BettiTable::degree, py::arg("i"))
        .def("total_dim", [](const BettiTable& t, int i) { return to_int(t.total_dim(i)); }, py::arg("i"))
        .def("ranks", [](const BettiTable& t) {
            py::list out;
            for (int i = 0; i <= t.top_degree(); ++i) out.append(to_int(t.total_dim(i)));
            return out;
        })
        .def("text", [](const BettiTable& t, const std::string& shift) {
                 return render_text(t, to_shift(shift), verdicts_for(t));
             },
             py::arg("shift") = "standard")
        .def("csv", [](const BettiTable& t, const std::string& shift) { return render_csv(t, to_shift(shift)); },
             py::arg("shift") = "standard")
        .def("json", [](const BettiTable& t) { return table_json(t, verdicts_for(t)).dump(); })
        .def("verdicts", [](const BettiTable& t) {
            const Verdicts v = verdicts_for(t);
            py::dict d;
            d["normal"] = optional_bool(v.normal);
            d["gorenstein"] = optional_bool(v.gorenstein);
            d["self_dual"] = optional_bool(v.self_dual);
            return d;
        })
        .def("__repr__", [](const BettiTable& t) {
            return "BettiTable(flag=" + t.flag.to_string() + ", codim=" + std::to_string(t.codim()) +
                   ", entries=" + std::to_string(t.entries.size()) + ")";
        });

    m.def("reineke_flag", [](const std::vector<int>& mult) { return reineke_flag(to_mult(mult)); }, py::arg("mult"));

    m.def(
        "resolve",
        [](std::optional<std::vector<int>> mult, std::optional<FlagData> flag, std::optional<int> max_degree, int jobs) {
            if (mult.has_value() == flag.has_value()) throw py::value_error("give exactly one of mult and flag");
            const FlagData f = mult ? reineke_flag(to_mult(*mult)) : *flag;
            ResolutionOptions opts;
            opts.max_degree = max_degree;
            opts.jobs = jobs;
            py::gil_scoped_release release;
            return compute_resolution(f, opts);
        },
        py::arg("mult") = py::none(), py::arg("flag") = py::none(), py::arg("max_degree") = py::none(),
        py::arg("jobs") = 1, "Minimal free resolution pushed forward from the flag; terms up to max_degree if given.");

    m.def("codim", [](const std::vector<int>& mult) { return codim(to_mult(mult)); }, py::arg("mult"));

    m.def(
        "bott",
        [](const std::vector<int>& weight) -> py::object {
            const auto r = bott_normalize(weight);
            if (!r) return py::none();
            return py::make_tuple(to_tuple(r->weight.entries()), r->exchanges);
        },
        py::arg("weight"), "(dominant weight, exchanges), or None when the cohomology vanishes.");

    m.def(
        "lr",
        [](const std::vector<int>& lambda, const std::vector<int>& mu, int rows) {
            py::dict out;
            for (const auto& [nu, c] : lr_expand(Partition(lambda), Partition(mu), rows)) out[to_tuple(nu)] = c;
            return out;
        },
        py::arg("lam"), py::arg("mu"), py::arg("rows") = -1, "Littlewood-Richardson expansion {nu: coefficient}.");

    m.def(
        "generators",
        [](const std::vector<int>& mult) {
            const auto g = minimal_generators(to_mult(mult));
            py::list out;
            for (const auto& fam : g.families) {
                py::dict d;
                d["matrix"] = fam.matrix;
                d["size"] = fam.size;
                d["cols_phi"] = fam.cols_phi;
                d["cols_psi"] = fam.cols_psi;
                d["count"] = to_int(fam.count);
                out.append(d);
            }
            return out;
        },
        py::arg("mult"));

    m.def(
        "f1_closed_form",
        [](const std::vector<int>& mult) {
            py::list out;
            for (const auto& w : f1_closed_form(to_mult(mult))) out.append(py::make_tuple(triple_tuple(w.triple), w.mult));
            return out;
        },
        py::arg("mult"));

    m.def(
        "top_term",
        [](const std::vector<int>& mult) { return top_term(reineke_flag(to_mult(mult))); }, py::arg("mult"),
        "The degree-codim term predicted by the top weight, or None when it vanishes.");

    m.def(
        "gorenstein",
        [](const std::vector<int>& mult, int jobs) {
            const Multiplicities mm = to_mult(mult);
            GorensteinReport r;
            {
                py::gil_scoped_release release;
                r = gorenstein_report(mm, jobs);
            }
            py::dict d;
            d["gorenstein"] = r.gorenstein;
            d["top_degree"] = r.top_degree;
            d["top_dim"] = to_int(r.top_dim);
            d["family"] = r.family ? py::object(py::int_(*r.family)) : py::object(py::none());
            d["reason"] = r.reason;
            return d;
        },
        py::arg("mult"), py::arg("jobs") = 1);

    m.def(
        "normality",
        [](const std::vector<int>& mult) {
            ResolutionOptions opts;
            opts.max_degree = 0;
            const auto rep = normality_report(compute_resolution(reineke_flag(to_mult(mult)), opts));
            static const char* names[] = {"normal", "violation", "not applicable"};
            return py::make_tuple(names[static_cast<int>(rep.status)], rep.message);
        },
        py::arg("mult"));

    m.def("self_dual", &self_duality_check, py::arg("table"));

    m.def(
        "hom_ext",
        [](const std::vector<int>& x, const std::vector<int>& y) {
            const auto r = hom_ext(RepresentationA3::from_multiplicities(to_mult(x)),
                                   RepresentationA3::from_multiplicities(to_mult(y)));
            return py::make_tuple(r.hom, r.ext);
        },
        py::arg("x"), py::arg("y"), "(dim Hom, dim Ext^1) between the representations with these multiplicities.");

    m.def(
        "scan",
        [](int max_mult, const std::string& checks, int jobs) {
            const unsigned bits = parse_checks(checks);
            std::vector<ScanRecord> records;
            {
                py::gil_scoped_release release;
                scan(max_mult, bits, jobs, [&](const ScanRecord& r) { records.push_back(r); });
            }
            py::list out;
            for (const auto& r : records) {
                py::dict d;
                d["mult"] = to_tuple(r.mult.to_array());
                d["codim"] = r.codim;
                d["xi_dim"] = r.xi_dim;
                d["triples"] = r.triples;
                d["gorenstein"] = r.gorenstein ? py::object(py::bool_(r.gorenstein->gorenstein)) : py::object(py::none());
                d["self_dual"] = optional_bool(r.self_dual);
                d["failures"] = r.failures;
                out.append(d);
            }
            return out;
        },
        py::arg("max_mult"), py::arg("checks") = "all", py::arg("jobs") = 1);

    py::register_exception_translator([](std::exception_ptr p) {
        try {
            if (p) std::rethrow_exception(p);
        } catch (const std::domain_error& e) {
            PyErr_SetString(PyExc_ValueError, e.what());
        }
    });
}
