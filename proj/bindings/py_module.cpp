// Python bindings for the selection rules, audits, and generators. Exact
// values cross the boundary as canonical "p/q" strings so callers can lift
// them into fractions.Fraction without precision loss.

#include "proprep/audit.hpp"
#include "proprep/ear.hpp"
#include "proprep/generators.hpp"
#include "proprep/io.hpp"
#include "proprep/tgc.hpp"

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <sstream>

namespace py = pybind11;
using namespace proprep;

namespace {

Rational rational_arg(const std::string& text) {
    auto r = Rational::parse(text);
    if (!r) throw py::value_error("not a rational: " + text);
    return *r;
}

py::object ext_to_py(const ExtRational& v) {
    if (v.is_infinite()) return py::str("inf");
    return py::str(v.finite().str());
}

py::dict report_to_py(const AuditReport& report) {
    py::dict out;
    out["check"] = check_name(report.check);
    out["alpha"] = report.alpha.str();
    out["t_lo"] = report.t_lo;
    out["t_hi"] = report.t_hi;
    out["measured"] = ext_to_py(report.measured);
    out["measured_decimal"] = report.measured.decimal();
    if (report.bound) {
        out["bound"] = report.bound->str();
        out["bound_decimal"] = report.bound->decimal();
        out["satisfied"] = *report.satisfied;
    }
    if (report.witness) {
        py::dict w;
        w["coalition"] = report.witness->coalition;
        w["t"] = report.witness->t;
        w["targets"] = report.witness->targets;
        if (report.witness->voter >= 0) w["voter"] = report.witness->voter;
        out["witness"] = w;
    }
    if (report.monitor_ratio) out["monitor_ratio"] = ext_to_py(*report.monitor_ratio);
    out["zero_convention"] = report.zero_convention;
    out["lower_bound_only"] = report.lower_bound_only;
    return out;
}

AuditOptions options_from(int cap, long long samples, unsigned long long sample_seed) {
    AuditOptions opts;
    opts.cap = cap;
    opts.sample_count = samples;
    opts.sample_seed = sample_seed;
    return opts;
}

RuleBound rule_from(const std::string& name) {
    if (name == "ear") return RuleBound::ear;
    if (name == "tgc") return RuleBound::tgc;
    if (name == "none" || name.empty()) return RuleBound::none;
    throw py::value_error("bound must be ear, tgc or none");
}

}  // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "proportionally representative committee selection and exact audits";

    py::register_exception<Error>(m, "ProprepError");

    py::class_<Instance>(m, "Instance")
        .def_readonly("n", &Instance::n)
        .def_readonly("m", &Instance::m)
        .def_readonly("k", &Instance::k)
        .def_readonly("full", &Instance::full)
        .def_readonly("labels", &Instance::labels)
        .def("d", [](const Instance& inst, int v, int c) { return inst.d_vc(v, c).str(); },
             py::arg("voter"), py::arg("candidate"),
             "exact voter-candidate distance as a rational string")
        .def("validate",
             [](const Instance& inst) {
                 ValidationResult res = validate_metric(inst);
                 py::dict out;
                 out["ok"] = res.ok;
                 out["partial"] = res.partial;
                 if (!res.ok) out["message"] = res.message;
                 return out;
             })
        .def("__repr__", [](const Instance& inst) {
            std::ostringstream ss;
            ss << "Instance(n=" << inst.n << ", m=" << inst.m << ", k=" << inst.k << ")";
            return ss.str();
        });

    py::class_<RankedProfile>(m, "RankedProfile")
        .def_readonly("n", &RankedProfile::n)
        .def_readonly("m", &RankedProfile::m)
        .def_readonly("order", &RankedProfile::order)
        .def("position", &RankedProfile::position, py::arg("voter"), py::arg("candidate"));

    py::class_<CoverageRecord>(m, "CoverageRecord")
        .def_readonly("n", &CoverageRecord::n)
        .def_readonly("m", &CoverageRecord::m)
        .def_readonly("k", &CoverageRecord::k)
        .def_readonly("p", &CoverageRecord::p)
        .def_readonly("uncovered", &CoverageRecord::uncovered)
        .def_readonly("ops", &CoverageRecord::ops)
        .def_property_readonly("kind",
                               [](const CoverageRecord& rec) {
                                   return rec.kind == CoverageRecord::Kind::ear ? "ear" : "tgc";
                               })
        .def("committee", &CoverageRecord::committee)
        .def("seats", [](const CoverageRecord& rec) {
            py::list seats;
            for (const auto& seat : rec.seats) {
                py::dict s;
                s["candidate"] = seat.candidate;
                s["filler"] = seat.filler;
                s["voters"] = seat.voters;
                if (rec.kind == CoverageRecord::Kind::ear)
                    s["tau"] = seat.tau;
                else
                    s["delta"] = seat.delta.str();
                seats.append(s);
            }
            return seats;
        });

    m.def("hare_quota", &hare_quota, py::arg("n"), py::arg("k"));
    m.def("derive_rankings", &derive_rankings, py::arg("instance"));
    m.def(
        "ear_select", [](const RankedProfile& p, int k) { return ear_select(p, k); },
        py::arg("profile"), py::arg("k"));
    m.def("tgc_select", &tgc_select, py::arg("instance"));
    m.def("single_winner", &single_winner, py::arg("profile"));
    m.def("single_winner_via_ear", &single_winner_via_ear, py::arg("profile"));

    m.def(
        "pf_gamma",
        [](const Instance& inst, const std::vector<int>& committee, const std::string& bound) {
            return report_to_py(pf_gamma(inst, committee, rule_from(bound)));
        },
        py::arg("instance"), py::arg("committee"), py::arg("bound") = "none");
    m.def(
        "core_beta",
        [](const Instance& inst, const std::vector<int>& committee, const std::string& alpha,
           const std::string& bound) {
            return report_to_py(core_beta(inst, committee, rational_arg(alpha),
                                          rule_from(bound)));
        },
        py::arg("instance"), py::arg("committee"), py::arg("alpha") = "1",
        py::arg("bound") = "none");
    m.def(
        "pr_gamma",
        [](const Instance& inst, const std::vector<int>& committee, const std::string& alpha,
           int t_lo, int t_hi, bool strong, int cap, long long samples,
           unsigned long long sample_seed, const std::string& bound) {
            AuditOptions opts = options_from(cap, samples, sample_seed);
            int hi = t_hi > 0 ? t_hi : inst.k;
            AuditReport report =
                strong ? pr_strong_gamma(inst, committee, rational_arg(alpha), t_lo, hi, opts,
                                         rule_from(bound))
                       : pr_gamma(inst, committee, rational_arg(alpha), t_lo, hi, opts,
                                  rule_from(bound));
            return report_to_py(report);
        },
        py::arg("instance"), py::arg("committee"), py::arg("alpha") = "1", py::arg("t_lo") = 1,
        py::arg("t_hi") = 0, py::arg("strong") = false, py::arg("cap") = 20,
        py::arg("samples") = 0, py::arg("sample_seed") = 1, py::arg("bound") = "none");
    m.def(
        "cor_single_audit",
        [](const Instance& inst, const CoverageRecord& coverage, const std::string& alpha,
           int cap, const std::string& bound) {
            return report_to_py(cor_single_audit(inst, coverage, rational_arg(alpha),
                                                 options_from(cap, 0, 1), rule_from(bound)));
        },
        py::arg("instance"), py::arg("coverage"), py::arg("alpha") = "1", py::arg("cap") = 20,
        py::arg("bound") = "none");
    m.def(
        "stability_rho",
        [](const Instance& inst, const CoverageRecord& coverage, const std::string& variant,
           int cap) {
            StabilityVariant v = variant == "cardinal" ? StabilityVariant::cardinal
                                                       : StabilityVariant::ordinal;
            return report_to_py(stability_rho(inst, coverage, v, options_from(cap, 0, 1)));
        },
        py::arg("instance"), py::arg("coverage"), py::arg("variant") = "ordinal",
        py::arg("cap") = 20);
    m.def(
        "distortion",
        [](const Instance& inst, int winner) { return ext_to_py(distortion(inst, winner)); },
        py::arg("instance"), py::arg("winner"));
    m.def(
        "no_augmentation_monitor",
        [](const Instance& inst, const std::vector<int>& committee, int t_lo, int t_hi,
           int cap) {
            int hi = t_hi > 0 ? t_hi : inst.k;
            return report_to_py(
                no_augmentation_monitor(inst, committee, t_lo, hi, options_from(cap, 0, 1)));
        },
        py::arg("instance"), py::arg("committee"), py::arg("t_lo") = 1, py::arg("t_hi") = 0,
        py::arg("cap") = 20);

    m.def(
        "gen_two_cluster",
        [](const std::string& alpha, const std::string& far) {
            return gen_two_cluster(rational_arg(alpha), rational_arg(far));
        },
        py::arg("alpha"), py::arg("far") = "1000");
    m.def(
        "gen_diverging",
        [](const std::string& alpha) { return gen_diverging(rational_arg(alpha)); },
        py::arg("alpha"));
    m.def("gen_refined", &gen_refined, py::arg("n"), py::arg("k"));
    m.def(
        "gen_separation",
        [](const std::string& eps) {
            SeparationElection el = gen_separation(rational_arg(eps));
            return py::make_tuple(el.instance, el.profile);
        },
        py::arg("eps") = "1/100");
    m.def(
        "gen_random",
        [](int n, int m_, int k, int dim, const std::string& norm, unsigned long long seed) {
            return gen_random(n, m_, k, dim, norm == "linf" ? Norm::linf : Norm::l1, seed);
        },
        py::arg("n"), py::arg("m"), py::arg("k"), py::arg("dim") = 2, py::arg("norm") = "l1",
        py::arg("seed") = 1);

    m.def(
        "read_election",
        [](const std::string& path) {
            ElectionFile el = read_election_file(path);
            return py::make_tuple(el.instance,
                                  el.profile ? py::cast(*el.profile) : py::none());
        },
        py::arg("path"));
    m.def(
        "write_election",
        [](const std::string& path, const Instance& inst, py::object profile) {
            if (profile.is_none()) {
                write_election_file(path, inst);
            } else {
                auto p = profile.cast<RankedProfile>();
                write_election_file(path, inst, &p);
            }
        },
        py::arg("path"), py::arg("instance"), py::arg("profile") = py::none());
    m.def("read_coverage", &read_coverage_file, py::arg("path"));
    m.def("write_coverage", &write_coverage_file, py::arg("path"), py::arg("coverage"));
    m.def("read_committee", &read_committee_file, py::arg("path"));
    m.def("write_committee", &write_committee_file, py::arg("path"), py::arg("committee"));
}
