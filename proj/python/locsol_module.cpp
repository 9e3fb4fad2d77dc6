#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "locsol/assembly.hpp"
#include "locsol/fpcount.hpp"
#include "locsol/padic.hpp"
#include "locsol/realvol.hpp"
#include "locsol/recursion.hpp"

namespace py = pybind11;
using namespace locsol;

namespace {

recursion::ModelKind parse_model(const std::string& s) {
    if (s == "gbq") return recursion::ModelKind::GeneralizedBQ;
    if (s == "quartic") return recursion::ModelKind::PlainBQ;
    throw py::value_error("model must be 'gbq' or 'quartic'");
}

py::dict interval_dict(const DyadicInterval& iv, int decimals = 9) {
    py::dict d;
    d["lo"] = iv.lo().to_string();
    d["hi"] = iv.hi().to_string();
    d["lo_decimal"] = decimal_string(iv.lo().to_rational(), decimals, Round::Down);
    d["hi_decimal"] = decimal_string(iv.hi().to_rational(), decimals, Round::Up);
    return d;
}

padic::GBQInt gbq_from(const std::vector<std::string>& coeffs) {
    if (coeffs.size() != 8) throw py::value_error("need 8 coefficients: l m n a b c d e");
    padic::GBQInt q;
    Integer* slots[8] = {&q.l, &q.m, &q.n, &q.a, &q.b, &q.c, &q.d, &q.e};
    for (int i = 0; i < 8; ++i)
        if (mpz_set_str(slots[i]->get_mpz_t(), coeffs[i].c_str(), 10) != 0)
            throw py::value_error("bad integer '" + coeffs[i] + "'");
    return q;
}

py::dict count_table_dict(const fpcount::CountTable& t) {
    py::dict d;
    for (size_t i = 0; i < t.labels.size(); ++i) {
        py::dict row;
        row["count"] = t.counts[i];
        row["probability"] = fraction_string(t.probs[i]);
        d[t.labels[i].c_str()] = row;
    }
    d["total"] = t.total;
    return d;
}

}  // namespace

PYBIND11_MODULE(locsol, m) {
    m.doc() = "Local solubility densities for generalized binary quartics";

    m.def(
        "local_density",
        [](unsigned long p, const std::string& model) {
            return fraction_string(recursion::local_density(p, parse_model(model)));
        },
        py::arg("p"), py::arg("model") = "gbq", "Exact local density at p as a fraction string");

    m.def(
        "r_of_p", [](unsigned long p) { return fraction_string(recursion::r_of(p)); }, py::arg("p"),
        "R(p) as a fraction string");

    m.def("r_rational_function", [] { return recursion::r_rational_function().to_string(); });

    m.def(
        "density_report",
        [](unsigned long p, bool solve) {
            auto rep = solve ? recursion::solve_recursion(p) : recursion::closed_forms(p);
            py::dict d;
            for (const auto& [name, value] : recursion::report_fields(rep)) d[name.c_str()] = fraction_string(value);
            return d;
        },
        py::arg("p"), py::arg("solve") = true, "All probabilities of the local recursion at p, as fraction strings");

    m.def(
        "count_gbq_types", [](unsigned p, bool star) { return count_table_dict(fpcount::count_gbq_types(p, star)); },
        py::arg("p"), py::arg("star") = false);

    m.def(
        "count_quartic_patterns",
        [](unsigned p, bool monic) { return count_table_dict(fpcount::count_quartic_patterns(p, monic)); },
        py::arg("p"), py::arg("monic") = false);

    m.def(
        "decide",
        [](unsigned long p, const std::vector<std::string>& coeffs, int depth) {
            auto v = padic::decide(p, gbq_from(coeffs), depth);
            py::dict d;
            const char* names[] = {"soluble", "insoluble", "undecided"};
            d["verdict"] = names[static_cast<int>(v.kind)];
            d["depth_used"] = v.depth_used;
            if (v.witness) {
                py::dict w;
                w["kind"] = v.witness->kind == padic::Witness::Kind::Exact ? "exact" : "hensel";
                w["x"] = v.witness->x.get_str();
                w["y"] = v.witness->y.get_str();
                w["z"] = v.witness->z.get_str();
                w["modulus_exp"] = v.witness->modulus_exp;
                w["verified"] = padic::verify_witness(p, gbq_from(coeffs), *v.witness);
                d["witness"] = w;
            }
            return d;
        },
        py::arg("p"), py::arg("coefficients"), py::arg("depth") = padic::kDefaultDepth,
        "Q_p-solubility of z^2 + h z = f for integer coefficients [l,m,n,a,b,c,d,e]");

    m.def(
        "monte_carlo_local",
        [](unsigned long p, const std::string& model, long long n, std::uint64_t seed, unsigned digits, int workers) {
            auto r = padic::monte_carlo_local(p, parse_model(model), n, seed, digits, workers);
            py::dict d;
            d["soluble"] = fraction_string(r.soluble_frac);
            d["insoluble"] = fraction_string(r.insoluble_frac);
            d["undecided"] = fraction_string(r.undecided_frac);
            d["soluble_float"] = mpq_get_d(r.soluble_frac.get_mpq_t());
            return d;
        },
        py::arg("p"), py::arg("model") = "gbq", py::arg("n") = 10000, py::arg("seed") = 1, py::arg("digits") = 24,
        py::arg("workers") = 0);

    m.def(
        "real_bounds",
        [](int depth, const std::string& method, int workers) {
            realvol::RunOptions opt;
            opt.depth = depth;
            opt.method = method == "plain5d" ? realvol::Method::Plain5D : realvol::Method::Scaled4D;
            opt.workers = workers;
            auto rep = realvol::run_bounds(opt);
            py::dict d;
            d["lower"] = fraction_string(rep.rho_lower);
            d["upper"] = fraction_string(rep.rho_upper);
            d["lower_decimal"] = decimal_string(rep.rho_lower, 6, Round::Down);
            d["upper_decimal"] = decimal_string(rep.rho_upper, 6, Round::Up);
            d["boxes_processed"] = rep.boxes_processed;
            return d;
        },
        py::arg("depth") = 12, py::arg("method") = "scaled4d", py::arg("workers") = 0,
        "Rigorous enclosure of the real-place density");

    m.def(
        "monte_carlo_real",
        [](const std::string& model, long long n, std::uint64_t seed, int workers) {
            auto r = realvol::monte_carlo_real(parse_model(model), n, seed, workers);
            py::dict d;
            d["estimate"] = mpq_get_d(r.estimate.get_mpq_t());
            d["err4"] = r.err4;
            d["soluble"] = r.soluble;
            d["samples"] = r.samples;
            return d;
        },
        py::arg("model") = "quartic", py::arg("n") = 100000, py::arg("seed") = 1, py::arg("workers") = 0);

    m.def(
        "tail_bound", [](unsigned long P) { return interval_dict(assembly::tail_bound(P)); }, py::arg("pmax"),
        "Certified enclosure of the Euler product tail beyond pmax");

    m.def(
        "finite_product",
        [](unsigned long P, const std::string& model) {
            return interval_dict(assembly::finite_product(P, parse_model(model)));
        },
        py::arg("pmax"), py::arg("model") = "quartic");

    m.def(
        "rho_interval",
        [](const std::string& model, const std::string& real_lo, const std::string& real_hi, bool rigorous,
           unsigned long P) {
            auto real_part = DyadicInterval::from_rationals(parse_rational(real_lo), parse_rational(real_hi), 128);
            auto rep = assembly::rho_interval(parse_model(model), real_part, rigorous, P);
            py::dict d;
            d["rho"] = interval_dict(rep.rho);
            d["real_part"] = interval_dict(rep.real_part);
            d["finite_product"] = interval_dict(rep.finite_product);
            d["tail"] = interval_dict(rep.tail);
            d["rigorous"] = rep.rigorous;
            return d;
        },
        py::arg("model"), py::arg("real_lo"), py::arg("real_hi"), py::arg("rigorous"), py::arg("pmax"),
        "Assembled global density from a trusted real-place interval (endpoints as fractions)");
}
