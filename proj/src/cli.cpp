#include "ratdist/cli.hpp"

#include <algorithm>
#include <iostream>

#include <CLI11.hpp>
#include <json.hpp>

#include "ratdist/configmap.hpp"
#include "ratdist/elliptic.hpp"
#include "ratdist/local_census.hpp"
#include "ratdist/reduction.hpp"
#include "ratdist/three_distance.hpp"

namespace ratdist::cli {

namespace {

using nlohmann::json;

json slope_json(const SlopePair& s) {
    json j{{"slope", to_string(s.slope)}};
    j["witness"] = s.hyp ? json(to_string(*s.hyp)) : json(nullptr);
    return j;
}

json point_json(const ECPoint& p) {
    if (p.is_infinity()) return "O";
    return json::array({to_string(p.x()), to_string(p.y())});
}

void cmd_classify(const std::string& eta_text, bool as_json, std::ostream& out) {
    const MatrixEta eta = parse_matrix(eta_text);
    const FiberClass fc = classify_fiber(eta);
    if (as_json) {
        json j{{"class", to_string(fc.kind)}, {"discriminant", to_string(h_discriminant(eta))}};
        if (fc.lambda) j["lambda"] = to_string(*fc.lambda);
        out << j.dump() << '\n';
        return;
    }
    out << to_string(fc.kind);
    if (fc.lambda) out << " λ=" << to_string(*fc.lambda);
    out << '\n';
}

void cmd_reduce(const std::string& eta_text, const std::string& point_text, bool as_json, std::ostream& out) {
    const MatrixEta eta = parse_matrix(eta_text);
    const WProjPoint p = parse_point(point_text);
    const ReductionWitness w = reduce_to_triangular(eta, p);
    if (as_json) {
        out << json{{"r", to_string(w.r)},
                    {"s", to_string(w.s)},
                    {"r1", to_string(w.r1)},
                    {"r2", to_string(w.r2)},
                    {"scale", to_string(w.scale)}}
                   .dump()
            << '\n';
        return;
    }
    out << "r = " << to_string(w.r) << '\n'
        << "s = " << to_string(w.s) << '\n'
        << "r1 = " << to_string(w.r1) << '\n'
        << "r2 = " << to_string(w.r2) << '\n'
        << "scale = " << to_string(w.scale) << '\n';
}

void cmd_torsion(const std::string& r_text, const std::string& s_text, bool as_json, std::ostream& out) {
    const BigRational r = parse_rational(r_text);
    const BigRational s = parse_rational(s_text);
    const TorsionVerdict verdict = classify_minus1_point(r, s);
    const WCurve curve = e_rs(r, s);
    const ECPoint base(-1, r);
    std::vector<ECPoint> chain;
    if (verdict != TorsionVerdict::NonTorsion) {
        ECPoint acc = base;
        chain.push_back(acc);
        while (!acc.is_infinity()) {
            acc = ec_add(curve, acc, base);
            chain.push_back(acc);
        }
    }
    if (as_json) {
        json j{{"verdict", to_string(verdict)}, {"r", to_string(r)}, {"s", to_string(s)}};
        json arr = json::array();
        for (const auto& q : chain) arr.push_back(point_json(q));
        j["chain"] = arr;
        out << j.dump() << '\n';
        return;
    }
    out << to_string(verdict) << '\n';
    for (std::size_t k = 0; k < chain.size(); ++k) out << (k + 1) << "P = " << to_string(chain[k]) << '\n';
}

void cmd_verify(const std::string& eta_text, const std::string& point_text, bool as_json, std::ostream& out) {
    const MatrixEta eta = parse_matrix(eta_text);
    const WProjPoint p = parse_point(point_text);
    const auto [alpha1, alpha2] = phi(eta, p);
    const bool on_f = f_contains(eta, alpha1.slope, alpha2.slope);
    const bool degenerate = is_degenerate(eta, p);
    if (as_json) {
        out << json{{"point", to_string(p)},
                    {"alpha1", slope_json(alpha1)},
                    {"alpha2", slope_json(alpha2)},
                    {"on_f_eta", on_f},
                    {"degenerate", degenerate}}
                   .dump()
            << '\n';
        return;
    }
    auto witness = [](const SlopePair& s) { return s.hyp ? to_string(*s.hyp) : std::string("none"); };
    out << "point = " << to_string(p) << '\n'
        << "alpha1 = (" << to_string(alpha1.slope) << ") witness " << witness(alpha1) << '\n'
        << "alpha2 = (" << to_string(alpha2.slope) << ") witness " << witness(alpha2) << '\n'
        << "on F_eta = " << (on_f ? "true" : "false") << '\n'
        << "degenerate = " << (degenerate ? "true" : "false") << '\n';
}

void require_multiple_cap(long n, long cap) {
    if (n > cap) {
        throw PreconditionError("requested multiple " + std::to_string(n) + " exceeds --max-multiple " +
                                std::to_string(cap));
    }
}

void cmd_three_distance(const std::string& t_text, long n_max, long cap, std::ostream& out) {
    const BigRational t = parse_rational(t_text);
    require_multiple_cap(n_max, cap);
    const ThreeDistanceGenerator gen(t);
    for (long n = 1; n <= n_max; ++n) {
        auto sol = gen.solution(n);
        if (!sol) continue;
        out << json{{"t", to_string(sol->t)},
                    {"n", sol->n},
                    {"x", to_string(sol->x)},
                    {"y", to_string(sol->y)},
                    {"d1", to_string(sol->d1)},
                    {"d2", to_string(sol->d2)},
                    {"d3", to_string(sol->d3)},
                    {"map", std::string(QuarticWeierstrassMaps::normalization)}}
                   .dump()
            << '\n';
    }
}

void cmd_decompose(const std::string& mode, const std::string& target_text, int count, long cap,
                   std::ostream& out) {
    const BigRational target = parse_rational(target_text);
    if (count <= 0) throw PreconditionError("--count must be positive");
    require_multiple_cap(count, cap);
    std::vector<SlopeTuple> tuples;
    if (mode == "sum") {
        tuples = sum_decompose(target, count);
    } else if (mode == "three-sum") {
        tuples = three_sum(target, count);
    } else {
        tuples = three_product(target, count);
    }
    for (const auto& tuple : tuples) {
        json slopes = json::array();
        json witnesses = json::array();
        for (const auto& s : tuple.slopes) slopes.push_back(to_string(s));
        for (const auto& h : tuple.hyps) witnesses.push_back(to_string(h));
        out << json{{"mode", mode}, {"target", to_string(target)}, {"slopes", slopes}, {"witnesses", witnesses}}
                   .dump()
            << '\n';
    }
}

void cmd_census(const CensusOptions& options, bool summary_only, std::ostream& out) {
    auto sink = [&](const CensusRecord& record) {
        if (summary_only) return;
        json verdicts = json::array();
        for (const auto& [p, v] : record.verdicts) verdicts.push_back(json{{"p", p}, {"verdict", to_string(v)}});
        out << json{{"eta", {record.eta.a, record.eta.b, record.eta.c, record.eta.d}},
                    {"det", record.det},
                    {"verdicts", verdicts},
                    {"overall", record.locally_ruled_out ? "LocallyRuledOut" : "Candidate"}}
                   .dump()
            << '\n';
    };
    const CensusSummary summary = census_box(options, sink);
    const BigRational fraction = summary.fraction();
    out << json{{"summary",
                 {{"x", summary.box},
                  {"prime_bound", summary.prime_bound},
                  {"mode", summary.sampled ? "sampled" : "exhaustive"},
                  {"seed", summary.seed},
                  {"examined", summary.examined},
                  {"survivors", summary.survivors},
                  {"obstructed", summary.obstructed},
                  {"survivor_fraction", to_string(fraction)},
                  {"survivor_fraction_approx", fraction.get_d()}}}}
               .dump()
        << '\n';
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Exact arithmetic on the genus-one family H_eta and rational distance problems", "ratdist"};
    app.require_subcommand(1);
    app.fallthrough();
    bool as_json = false;
    app.add_flag("--json", as_json, "Emit JSON lines");

    std::string eta_text, point_text, r_text, s_text, t_text, target_text, mode;
    long n_max = 10;
    long cap = 64;
    int count = 3;
    CensusOptions census;
    std::int64_t sample = 0;
    bool summary_only = false;

    auto* classify = app.add_subcommand("classify", "Classify the fibre H_eta");
    classify->add_option("--eta", eta_text, "Matrix a,b,c,d")->required();

    auto* reduce = app.add_subcommand("reduce", "Reduce a soluble fibre to triangular form");
    reduce->add_option("--eta", eta_text, "Matrix a,b,c,d")->required();
    reduce->add_option("--point", point_text, "Point x:y:z on H_eta")->required();

    auto* torsion = app.add_subcommand("torsion", "Order of (-1, r) on E_{r,s}");
    torsion->add_option("--r", r_text, "Rational r")->required();
    torsion->add_option("--s", s_text, "Rational s")->required();

    auto* verify = app.add_subcommand("verify", "Slope pair of a point of H_eta");
    verify->add_option("--eta", eta_text, "Matrix a,b,c,d")->required();
    verify->add_option("--point", point_text, "Point x:y:z on H_eta")->required();

    auto* three = app.add_subcommand("three-distance", "Points at rational distance from (0,0), (0,1), (1,1)");
    three->add_option("--t", t_text, "Line parameter t, not 0 or +-1")->required();
    three->add_option("--n-max", n_max, "Largest multiple n")->check(CLI::PositiveNumber);
    three->add_option("--max-multiple", cap, "Cap on n")->check(CLI::PositiveNumber);

    auto* decompose = app.add_subcommand("decompose", "Sums and products of Pythagorean slopes");
    decompose->add_option("--mode", mode, "sum | three-sum | three-product")
        ->required()
        ->check(CLI::IsMember({"sum", "three-sum", "three-product"}));
    decompose->add_option("--target", target_text, "Target rational")->required();
    decompose->add_option("--count", count, "Number of tuples")->check(CLI::PositiveNumber);
    decompose->add_option("--max-multiple", cap, "Cap on the count")->check(CLI::PositiveNumber);

    auto* census_cmd = app.add_subcommand("census", "Local solubility census over an integer box");
    census_cmd->add_option("--x", census.box, "Box half-width X")->required();
    census_cmd->add_option("--prime-bound", census.prime_bound, "Largest prime checked")->required();
    census_cmd->add_option("--sample", sample, "Sample this many matrices instead of enumerating");
    census_cmd->add_option("--seed", census.seed, "Sampling seed");
    census_cmd->add_option("--k-max", census.k_max, "p-adic precision override");
    census_cmd->add_flag("--summary-only", summary_only, "Print only the summary line");

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return kExitOk;
    } catch (const CLI::ParseError& e) {
        err << "usage error: " << e.what() << '\n';
        return kExitUsage;
    }

    try {
        if (*classify) {
            cmd_classify(eta_text, as_json, out);
        } else if (*reduce) {
            cmd_reduce(eta_text, point_text, as_json, out);
        } else if (*torsion) {
            cmd_torsion(r_text, s_text, as_json, out);
        } else if (*verify) {
            cmd_verify(eta_text, point_text, as_json, out);
        } else if (*three) {
            cmd_three_distance(t_text, n_max, cap, out);
        } else if (*decompose) {
            cmd_decompose(mode, target_text, count, cap, out);
        } else if (*census_cmd) {
            if (sample != 0) census.sample = sample;
            cmd_census(census, summary_only, out);
        }
    } catch (const ParseError& e) {
        err << "usage error: " << e.what() << '\n';
        return kExitUsage;
    } catch (const PreconditionError& e) {
        err << "error: " << e.what() << '\n';
        return kExitPrecondition;
    }
    return kExitOk;
}

}  // namespace ratdist::cli
