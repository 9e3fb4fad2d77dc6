#include "locsol/cli.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <iostream>

#include "CLI11.hpp"
#include "json.hpp"
#include "locsol/assembly.hpp"
#include "locsol/fpcount.hpp"
#include "locsol/padic.hpp"
#include "locsol/realvol.hpp"
#include "locsol/recursion.hpp"

namespace locsol::cli {

namespace {

using json = nlohmann::ordered_json;
using recursion::ModelKind;

constexpr const char* kSchema = "locsol-report v1";

ModelKind parse_model(const std::string& s) {
    if (s == "gbq") return ModelKind::GeneralizedBQ;
    if (s == "quartic") return ModelKind::PlainBQ;
    throw CLI::ValidationError("--model", "must be 'gbq' or 'quartic'");
}

json rational_json(const Rational& q, int decimals, Round mode = Round::Nearest) {
    return json{{"exact", fraction_string(q)}, {"decimal", decimal_string(q, decimals, mode)}};
}

json dyadic_json(const Dyadic& d, int decimals, Round mode) {
    return json{{"exact", d.to_string()}, {"decimal", decimal_string(d.to_rational(), decimals, mode)}};
}

json interval_json(const DyadicInterval& iv, int decimals) {
    return json{{"lo", dyadic_json(iv.lo(), decimals, Round::Down)},
                {"hi", dyadic_json(iv.hi(), decimals, Round::Up)}};
}

void emit(const json& doc) { std::cout << doc.dump(2) << "\n"; }

// Text-mode runs record their full parameter set in a header line.
void text_header(const std::string& cmd, const json& params) {
    std::cout << "# locsol " << cmd;
    for (const auto& [key, value] : params.items())
        std::cout << " " << key << "=" << (value.is_string() ? value.get<std::string>() : value.dump());
    std::cout << "\n";
}

std::string dec(const Rational& q, int decimals, Round mode = Round::Nearest) {
    return decimal_string(q, decimals, mode);
}

unsigned long check_prime_arg(unsigned long p) {
    if (!is_prime(p))
        throw CLI::ValidationError("p", std::to_string(p) + " is not prime");
    return p;
}

// Accepts "0.873954", "151285/157456", or "3".
Rational parse_decimal_or_fraction(const std::string& s) {
    auto dot = s.find('.');
    if (dot == std::string::npos) return parse_rational(s);
    std::string digits = s.substr(0, dot) + s.substr(dot + 1);
    size_t places = s.size() - dot - 1;
    Rational q = parse_rational(digits);
    Integer pow10;
    mpz_ui_pow_ui(pow10.get_mpz_t(), 10, places);
    q /= Rational(pow10);
    q.canonicalize();
    return q;
}

// ---------------------------------------------------------------------------

struct CommonOpts {
    bool json_mode = false;
    int decimals = 6;
};

void add_common(CLI::App* cmd, CommonOpts& c) {
    cmd->add_flag("--json", c.json_mode, "machine-readable output");
    cmd->add_option("--decimals", c.decimals, "decimal places in renderings")->check(CLI::Range(1, 60));
}

int cmd_r_of_p(unsigned long p, const std::string& model_s, const CommonOpts& c) {
    check_prime_arg(p);
    ModelKind model = parse_model(model_s);
    Rational r = recursion::local_density(p, model);
    json params{{"p", p}, {"model", model_s}, {"decimals", c.decimals}};
    if (c.json_mode) {
        json doc{{"schema", kSchema},
                 {"command", "r-of-p"},
                 {"params", params},
                 {"result", {{"density", rational_json(r, c.decimals)}}}};
        emit(doc);
    } else {
        text_header("r-of-p", params);
        std::cout << fraction_string(r) << " ≈ " << dec(r, c.decimals) << "\n";
    }
    return 0;
}

int cmd_recursion(unsigned long p, bool symbolic, const CommonOpts& c) {
    if (symbolic) {
        auto rep = recursion::solve_recursion_symbolic();
        bool matches = rep.rho == recursion::r_rational_function();
        json params{{"symbolic", true}};
        if (c.json_mode) {
            json doc{{"schema", kSchema},
                     {"command", "recursion"},
                     {"params", params},
                     {"result",
                      {{"rho", rep.rho.to_string()},
                       {"tau4", rep.tau4.to_string()},
                       {"sigma4", rep.sigma4.to_string()},
                       {"rho_matches_R", matches}}}};
            emit(doc);
        } else {
            text_header("recursion", params);
            std::cout << "rho(t)  = " << rep.rho.to_string() << "\n";
            std::cout << "tau4(t) = " << rep.tau4.to_string() << "\n";
            std::cout << "rho == R(t): " << (matches ? "yes" : "NO") << "\n";
        }
        return matches ? 0 : 3;
    }
    check_prime_arg(p);
    auto solved = recursion::solve_recursion(p);
    auto closed = recursion::closed_forms(p);
    std::string mismatch;
    bool equal = recursion::reports_equal(solved, closed, &mismatch);
    auto fields = recursion::report_fields(solved);
    json params{{"p", p}, {"decimals", c.decimals}};
    if (c.json_mode) {
        json vals = json::object();
        for (const auto& [name, q] : fields) vals[name] = rational_json(q, c.decimals);
        json doc{{"schema", kSchema},
                 {"command", "recursion"},
                 {"params", params},
                 {"result", {{"fields", vals}, {"solve_matches_closed_forms", equal}}}};
        emit(doc);
    } else {
        text_header("recursion", params);
        for (const auto& [name, q] : fields)
            std::printf("%-12s %-24s %s\n", name.c_str(), fraction_string(q).c_str(), dec(q, c.decimals).c_str());
        std::cout << "solve == closed forms: " << (equal ? "yes" : ("NO (" + mismatch + ")")) << "\n";
    }
    return equal ? 0 : 3;
}

json table_json(const fpcount::CountTable& t, int decimals) {
    json rows = json::array();
    for (size_t i = 0; i < t.labels.size(); ++i)
        rows.push_back(json{{"class", t.labels[i]},
                            {"count", t.counts[i]},
                            {"probability", rational_json(t.probs[i], decimals)}});
    return json{{"rows", rows}, {"total", t.total}};
}

void print_table(const fpcount::CountTable& t, int decimals) {
    for (size_t i = 0; i < t.labels.size(); ++i)
        std::printf("%-16s %12lld   %s\n", t.labels[i].c_str(), t.counts[i], dec(t.probs[i], decimals).c_str());
    std::printf("%-16s %12lld\n", "total", t.total);
}

int cmd_fp_counts(unsigned long p, bool quartics, bool star, bool monic, const CommonOpts& c) {
    check_prime_arg(p);
    unsigned up = static_cast<unsigned>(p);
    bool can_enumerate = quartics ? (p <= 7) : (p <= 3);
    fpcount::CountTable formula =
        quartics ? fpcount::quartic_pattern_formula_counts(up, monic) : fpcount::gbq_type_formula_counts(up, star);
    std::optional<fpcount::CountTable> enumerated;
    if (can_enumerate)
        enumerated = quartics ? fpcount::count_quartic_patterns(up, monic) : fpcount::count_gbq_types(up, star);
    bool match = !enumerated || enumerated->counts == formula.counts;
    json params{{"p", p}, {"quartics", quartics}, {"star", star}, {"monic", monic}, {"decimals", c.decimals}};
    if (c.json_mode) {
        json doc{{"schema", kSchema},
                 {"command", "fp-counts"},
                 {"params", params},
                 {"result", json::object()}};
        doc["result"]["formula"] = table_json(formula, c.decimals);
        if (enumerated) doc["result"]["enumerated"] = table_json(*enumerated, c.decimals);
        doc["result"]["enumeration_matches"] = match;
        emit(doc);
    } else {
        text_header("fp-counts", params);
        if (enumerated) {
            std::cout << "enumerated:\n";
            print_table(*enumerated, c.decimals);
            std::cout << "formula counts " << (match ? "match" : "MISMATCH") << "\n";
        } else {
            std::cout << "formula (enumeration capped at this p):\n";
            print_table(formula, c.decimals);
        }
    }
    return match ? 0 : 3;
}

json witness_json(const padic::Witness& w) {
    return json{{"kind", w.kind == padic::Witness::Kind::Exact ? "exact" : "hensel"},
                {"chart", w.chart},
                {"variable", w.var == 0 ? "u" : "z"},
                {"x", w.x.get_str()},
                {"y", w.y.get_str()},
                {"z", w.z.get_str()},
                {"modulus_exp", w.modulus_exp}};
}

int cmd_padic_decide(unsigned long p, const std::vector<std::string>& coeffs, int depth, const CommonOpts& c) {
    check_prime_arg(p);
    if (coeffs.size() != 8)
        throw CLI::ValidationError("coefficients", "need exactly 8 integers: l m n a b c d e");
    padic::GBQInt q;
    Integer* slots[8] = {&q.l, &q.m, &q.n, &q.a, &q.b, &q.c, &q.d, &q.e};
    for (int i = 0; i < 8; ++i) {
        if (mpz_set_str(slots[i]->get_mpz_t(), coeffs[i].c_str(), 10) != 0)
            throw CLI::ValidationError("coefficients", "bad integer '" + coeffs[i] + "'");
    }
    auto verdict = padic::decide(p, q, depth);
    const char* names[] = {"soluble", "insoluble", "undecided"};
    const char* name = names[static_cast<int>(verdict.kind)];
    bool verified = verdict.witness ? padic::verify_witness(p, q, *verdict.witness) : true;
    json params{{"p", p}, {"coefficients", coeffs}, {"depth", depth}};
    if (c.json_mode) {
        json doc{{"schema", kSchema},
                 {"command", "padic-decide"},
                 {"params", params},
                 {"result", {{"verdict", name}, {"depth_used", verdict.depth_used}}}};
        if (verdict.witness) {
            doc["result"]["witness"] = witness_json(*verdict.witness);
            doc["result"]["witness_verified"] = verified;
        }
        emit(doc);
    } else {
        text_header("padic-decide", params);
        std::cout << name << " (depth " << verdict.depth_used << ")\n";
        if (verdict.witness) {
            const auto& w = *verdict.witness;
            std::cout << "witness: " << (w.kind == padic::Witness::Kind::Exact ? "exact point" : "hensel") << " (x:y:z)=("
                      << w.x.get_str() << ":" << w.y.get_str() << ":" << w.z.get_str() << ")";
            if (w.kind == padic::Witness::Kind::Hensel)
                std::cout << " mod " << p << "^" << w.modulus_exp << ", var " << (w.var == 0 ? "u" : "z");
            std::cout << ", verified " << (verified ? "yes" : "NO") << "\n";
        }
    }
    return verified ? 0 : 3;
}

int cmd_padic_mc(unsigned long p, const std::string& model_s, long long samples, std::uint64_t seed, unsigned digits,
                 int workers, const CommonOpts& c) {
    check_prime_arg(p);
    ModelKind model = parse_model(model_s);
    auto res = padic::monte_carlo_local(p, model, samples, seed, digits, workers);
    Rational ref = recursion::local_density(p, model);
    double est = mpq_get_d(res.soluble_frac.get_mpq_t());
    double rf = mpq_get_d(ref.get_mpq_t());
    double sigma = std::sqrt(std::max(rf * (1.0 - rf), 1e-12) / static_cast<double>(samples));
    json params{{"p", p},      {"model", model_s},  {"samples", samples},
                {"seed", seed}, {"digits", digits},  {"workers", workers}};
    if (c.json_mode) {
        json doc{{"schema", kSchema},
                 {"command", "padic-mc"},
                 {"params", params},
                 {"result",
                  {{"soluble", rational_json(res.soluble_frac, c.decimals)},
                   {"insoluble", rational_json(res.insoluble_frac, c.decimals)},
                   {"undecided", rational_json(res.undecided_frac, c.decimals)},
                   {"reference_density", rational_json(ref, c.decimals)}}}};
        emit(doc);
    } else {
        text_header("padic-mc", params);
        std::printf("soluble   %s  (reference %s, deviation %+.6f = %+.2f sigma)\n", dec(res.soluble_frac, c.decimals).c_str(),
                    dec(ref, c.decimals).c_str(), est - rf, sigma > 0 ? (est - rf) / sigma : 0.0);
        std::printf("insoluble %s\n", dec(res.insoluble_frac, c.decimals).c_str());
        std::printf("undecided %s\n", dec(res.undecided_frac, c.decimals).c_str());
    }
    return 0;
}

int cmd_real_bounds(int depth, const std::string& method_s, int workers, const std::string& checkpoint,
                    const std::string& resume, std::size_t box_limit, const CommonOpts& c) {
    realvol::RunOptions opt;
    opt.depth = depth;
    opt.method = method_s == "plain5d" ? realvol::Method::Plain5D : realvol::Method::Scaled4D;
    opt.workers = workers;
    opt.box_limit = box_limit;
    if (!checkpoint.empty()) opt.checkpoint_out = checkpoint;
    if (!resume.empty()) opt.resume_from = resume;
    auto rep = realvol::run_bounds(opt);
    json params{{"depth", depth},           {"method", method_s}, {"workers", workers},
                {"checkpoint", checkpoint}, {"resume", resume},   {"box_limit", box_limit},
                {"decimals", c.decimals}};
    if (c.json_mode) {
        json doc{{"schema", kSchema},
                 {"command", "real-bounds"},
                 {"params", params},
                 {"result",
                  {{"rho_inf_lower", rational_json(rep.rho_lower, c.decimals, Round::Down)},
                   {"rho_inf_upper", rational_json(rep.rho_upper, c.decimals, Round::Up)},
                   {"v1", rep.v1.to_string()},
                   {"v2", rep.v2.to_string()},
                   {"undecided", rep.undecided.to_string()},
                   {"boxes_processed", rep.boxes_processed}}}};
        emit(doc);
    } else {
        text_header("real-bounds", params);
        std::printf("Depth   Lower bound   Upper bound\n");
        std::printf("%5d   %s   %s\n", depth, dec(rep.rho_lower, c.decimals, Round::Down).c_str(),
                    dec(rep.rho_upper, c.decimals, Round::Up).c_str());
        std::printf("boxes processed: %llu, undecided volume %s of %s\n",
                    static_cast<unsigned long long>(rep.boxes_processed), rep.undecided.to_string().c_str(),
                    fraction_string(rep.total).c_str());
    }
    return 0;
}

int cmd_real_mc(const std::string& model_s, long long samples, std::uint64_t seed, int workers, const CommonOpts& c) {
    ModelKind model = parse_model(model_s);
    auto res = realvol::monte_carlo_real(model, samples, seed, workers);
    json params{{"model", model_s}, {"samples", samples}, {"seed", seed}, {"workers", workers}};
    if (c.json_mode) {
        json doc{{"schema", kSchema},
                 {"command", "real-mc"},
                 {"params", params},
                 {"result",
                  {{"estimate", rational_json(res.estimate, c.decimals)},
                   {"err4", res.err4},
                   {"soluble", res.soluble},
                   {"samples", res.samples}}}};
        emit(doc);
    } else {
        text_header("real-mc", params);
        std::printf("estimate %s +- %.6f (4 sigma), %lld/%lld soluble\n", dec(res.estimate, c.decimals).c_str(),
                    res.err4, res.soluble, res.samples);
    }
    return 0;
}

int cmd_rho(const std::string& model_s, unsigned long pmax, int real_depth, const std::string& real_method,
            const std::string& real_lo, const std::string& real_hi, long long samples, std::uint64_t seed,
            int workers, unsigned precision, const CommonOpts& c) {
    ModelKind model = parse_model(model_s);
    DyadicInterval real_part;
    bool rigorous = false;
    std::vector<std::pair<std::string, std::string>> prov;
    if (!real_lo.empty() || !real_hi.empty()) {
        if (real_lo.empty() || real_hi.empty())
            throw CLI::ValidationError("--real-lo/--real-hi", "both endpoints are required");
        real_part = DyadicInterval::from_rationals(parse_decimal_or_fraction(real_lo),
                                                   parse_decimal_or_fraction(real_hi), precision);
        rigorous = model == ModelKind::PlainBQ;  // trusted input on the rigorous path
        prov.emplace_back("real_part", "trusted [" + real_lo + ", " + real_hi + "]");
    } else if (model == ModelKind::PlainBQ) {
        realvol::RunOptions opt;
        opt.depth = real_depth;
        opt.method = real_method == "plain5d" ? realvol::Method::Plain5D : realvol::Method::Scaled4D;
        opt.workers = workers;
        auto rep = realvol::run_bounds(opt);
        real_part = DyadicInterval::from_rationals(rep.rho_lower, rep.rho_upper, precision);
        rigorous = true;
        prov.emplace_back("real_part", "run_bounds depth=" + std::to_string(real_depth) + " method=" + real_method);
    } else {
        auto mc = realvol::monte_carlo_real(model, samples, seed, workers);
        Rational err(mc.err4);
        real_part = DyadicInterval::from_rationals(mc.estimate - err, mc.estimate + err, precision);
        rigorous = false;
        prov.emplace_back("real_part", "monte-carlo n=" + std::to_string(samples) + " seed=" + std::to_string(seed));
    }
    auto rep = assembly::rho_interval(model, real_part, rigorous, pmax, precision);
    rep.provenance.insert(rep.provenance.end(), prov.begin(), prov.end());
    json params{{"model", model_s},   {"pmax", pmax},       {"real_depth", real_depth},
                {"real_method", real_method}, {"real_lo", real_lo}, {"real_hi", real_hi},
                {"samples", samples},  {"seed", seed},       {"workers", workers},
                {"precision", precision}, {"decimals", c.decimals}};
    if (c.json_mode) {
        json doc{{"schema", kSchema},
                 {"command", "rho"},
                 {"params", params},
                 {"result", json::object()}};
        doc["result"]["model"] = model_s;
        doc["result"]["real_part"] = interval_json(rep.real_part, c.decimals);
        doc["result"]["finite_product"] = interval_json(rep.finite_product, c.decimals);
        doc["result"]["tail"] = interval_json(rep.tail, c.decimals);
        doc["result"]["rho"] = interval_json(rep.rho, c.decimals);
        doc["result"]["rigorous"] = rep.rigorous;
        json prov_j = json::object();
        for (const auto& [k, v] : rep.provenance) prov_j[k] = v;
        doc["result"]["provenance"] = prov_j;
        emit(doc);
    } else {
        text_header("rho", params);
        auto show = [&](const char* name, const DyadicInterval& iv) {
            std::printf("%-15s [%s, %s]\n", name, dec(iv.lo().to_rational(), c.decimals, Round::Down).c_str(),
                        dec(iv.hi().to_rational(), c.decimals, Round::Up).c_str());
        };
        show("real place", rep.real_part);
        show("finite product", rep.finite_product);
        show("tail", rep.tail);
        show("rho", rep.rho);
        std::cout << "rigorous: " << (rep.rigorous ? "yes" : "no") << "\n";
    }
    return 0;
}

}  // namespace

int run(const std::vector<std::string>& args) {
    CLI::App app{"locsol: local solubility densities for generalized binary quartics"};
    app.require_subcommand(1);

    // r-of-p
    auto* c_rofp = app.add_subcommand("r-of-p", "local density R(p) (or rho(2) for the quartic model)");
    unsigned long p_rofp = 0;
    std::string model_rofp = "gbq";
    CommonOpts co_rofp;
    c_rofp->add_option("p", p_rofp, "prime")->required();
    c_rofp->add_option("--model", model_rofp, "gbq | quartic");
    add_common(c_rofp, co_rofp);

    // recursion
    auto* c_rec = app.add_subcommand("recursion", "all probabilities of the local recursion at p");
    unsigned long p_rec = 0;
    bool symbolic = false;
    CommonOpts co_rec;
    c_rec->add_option("p", p_rec, "prime");
    c_rec->add_flag("--symbolic", symbolic, "solve over the rational-function field");
    add_common(c_rec, co_rec);

    // fp-counts
    auto* c_fp = app.add_subcommand("fp-counts", "finite-field count tables");
    unsigned long p_fp = 0;
    bool quartics = false, star = false, monic = false;
    CommonOpts co_fp;
    c_fp->add_option("p", p_fp, "prime")->required();
    c_fp->add_flag("--quartics", quartics, "quartic root patterns instead of GBQ types");
    c_fp->add_flag("--star", star, "restrict to condition (*)");
    c_fp->add_flag("--monic", monic, "monic column (with --quartics)");
    add_common(c_fp, co_fp);

    // padic-decide
    auto* c_dec = app.add_subcommand("padic-decide", "decide Q_p-solubility of one equation");
    unsigned long p_dec = 0;
    std::vector<std::string> coeffs;
    int depth_dec = padic::kDefaultDepth;
    CommonOpts co_dec;
    c_dec->add_option("p", p_dec, "prime")->required();
    c_dec->add_option("coefficients", coeffs, "l m n a b c d e")->required()->expected(8);
    c_dec->add_option("--depth", depth_dec, "refinement depth cap");
    add_common(c_dec, co_dec);

    // padic-mc
    auto* c_pmc = app.add_subcommand("padic-mc", "Monte Carlo local density cross-check");
    unsigned long p_pmc = 0;
    std::string model_pmc = "gbq";
    long long samples_pmc = 100000;
    std::uint64_t seed_pmc = 1;
    unsigned digits = 24;
    int workers_pmc = 0;
    CommonOpts co_pmc;
    c_pmc->add_option("p", p_pmc, "prime")->required();
    c_pmc->add_option("--model", model_pmc, "gbq | quartic");
    c_pmc->add_option("--samples", samples_pmc, "sample count");
    c_pmc->add_option("--seed", seed_pmc, "RNG seed");
    c_pmc->add_option("--digits", digits, "p-adic digits of sampling precision");
    c_pmc->add_option("--workers", workers_pmc, "worker threads (0 = auto)");
    add_common(c_pmc, co_pmc);

    // real-bounds
    auto* c_rb = app.add_subcommand("real-bounds", "rigorous enclosure of rho(infinity)");
    int depth_rb = 20;
    std::string method_rb = "scaled4d";
    int workers_rb = 0;
    std::string checkpoint, resume;
    std::size_t box_limit = 8'000'000;
    CommonOpts co_rb;
    c_rb->add_option("--depth", depth_rb, "bisection depth");
    c_rb->add_option("--method", method_rb, "plain5d | scaled4d")
        ->check(CLI::IsMember({"plain5d", "scaled4d"}));
    c_rb->add_option("--workers", workers_rb, "worker threads (0 = auto)");
    c_rb->add_option("--checkpoint", checkpoint, "write state here on completion or overflow");
    c_rb->add_option("--resume", resume, "resume from a checkpoint file");
    c_rb->add_option("--box-limit", box_limit, "pending-queue memory bound (boxes)");
    add_common(c_rb, co_rb);

    // real-mc
    auto* c_rmc = app.add_subcommand("real-mc", "Monte Carlo estimate of the real density");
    std::string model_rmc = "quartic";
    long long samples_rmc = 1000000;
    std::uint64_t seed_rmc = 1;
    int workers_rmc = 0;
    CommonOpts co_rmc;
    c_rmc->add_option("--model", model_rmc, "gbq | quartic");
    c_rmc->add_option("--samples", samples_rmc, "sample count");
    c_rmc->add_option("--seed", seed_rmc, "RNG seed");
    c_rmc->add_option("--workers", workers_rmc, "worker threads (0 = auto)");
    add_common(c_rmc, co_rmc);

    // rho
    auto* c_rho = app.add_subcommand("rho", "assembled global density");
    std::string model_rho = "quartic";
    unsigned long pmax = 10000;
    int real_depth = 20;
    std::string real_method = "scaled4d", real_lo, real_hi;
    long long samples_rho = 1000000;
    std::uint64_t seed_rho = 1;
    int workers_rho = 0;
    unsigned precision = 128;
    CommonOpts co_rho;
    c_rho->add_option("--model", model_rho, "gbq | quartic");
    c_rho->add_option("--pmax", pmax, "prime cutoff for the finite product");
    c_rho->add_option("--real-depth", real_depth, "depth for the native real-place run");
    c_rho->add_option("--real-method", real_method, "plain5d | scaled4d")
        ->check(CLI::IsMember({"plain5d", "scaled4d"}));
    c_rho->add_option("--real-lo", real_lo, "trusted lower bound for rho(infinity)");
    c_rho->add_option("--real-hi", real_hi, "trusted upper bound for rho(infinity)");
    c_rho->add_option("--samples", samples_rho, "Monte Carlo samples (gbq model)");
    c_rho->add_option("--seed", seed_rho, "RNG seed (gbq model)");
    c_rho->add_option("--workers", workers_rho, "worker threads (0 = auto)");
    c_rho->add_option("--precision", precision, "interval precision in bits");
    add_common(c_rho, co_rho);

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        if (c_rofp->parsed()) return cmd_r_of_p(p_rofp, model_rofp, co_rofp);
        if (c_rec->parsed()) return cmd_recursion(p_rec, symbolic, co_rec);
        if (c_fp->parsed()) return cmd_fp_counts(p_fp, quartics, star, monic, co_fp);
        if (c_dec->parsed()) return cmd_padic_decide(p_dec, coeffs, depth_dec, co_dec);
        if (c_pmc->parsed()) return cmd_padic_mc(p_pmc, model_pmc, samples_pmc, seed_pmc, digits, workers_pmc, co_pmc);
        if (c_rb->parsed())
            return cmd_real_bounds(depth_rb, method_rb, workers_rb, checkpoint, resume, box_limit, co_rb);
        if (c_rmc->parsed()) return cmd_real_mc(model_rmc, samples_rmc, seed_rmc, workers_rmc, co_rmc);
        if (c_rho->parsed())
            return cmd_rho(model_rho, pmax, real_depth, real_method, real_lo, real_hi, samples_rho, seed_rho,
                           workers_rho, precision, co_rho);
        std::cerr << "no subcommand given\n";
        return 2;
    } catch (const CLI::ValidationError& e) {
        std::cerr << e.what() << "\n";
        return 2;
    } catch (const realvol::resource_error& e) {
        std::cerr << "resource error: " << e.what() << "\n";
        return 3;
    } catch (const realvol::checkpoint_error& e) {
        std::cerr << "checkpoint error: " << e.what() << "\n";
        return 3;
    } catch (const std::invalid_argument& e) {
        std::cerr << "usage error: " << e.what() << "\n";
        return 2;
    } catch (const std::domain_error& e) {
        std::cerr << "usage error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 3;
    }
}

int run(int argc, char** argv) {
    std::vector<std::string> args(argv + 1, argv + argc);
    return run(args);
}

}  // namespace locsol::cli
