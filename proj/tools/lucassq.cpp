// lucassq: compute Lucas sequences U_n(P,Q), detect their periods mod m,
// classify (P,Q,n) against the mod-4 non-square criteria, and run the
// verification sweeps. Data goes to stdout (or --out FILE), diagnostics to
// stderr. Exit codes: 0 ok, 1 verification failures found, 2 usage or
// domain errors.

#include <chrono>
#include <fstream>
#include <iostream>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "lucassq/criteria.hpp"
#include "lucassq/lucas.hpp"
#include "lucassq/periods.hpp"
#include "lucassq/verify.hpp"

using json = nlohmann::ordered_json;
using namespace lucassq;

namespace {

enum class Format { text, jsonl, csv };

struct Options {
    Format format = Format::text;
    unsigned jobs = 1;
    std::uint64_t seed = 0;
    std::string out_path;
    bool digits_only = false;
};

std::string csv_quote(const std::string& field)
{
    if (field.find_first_of(",\"\n") == std::string::npos)
        return field;
    std::string quoted = "\"";
    for (char c : field) {
        if (c == '"')
            quoted += '"';
        quoted += c;
    }
    quoted += '"';
    return quoted;
}

std::string join(const std::vector<std::uint64_t>& values)
{
    std::string s;
    for (std::size_t i = 0; i < values.size(); ++i) {
        if (i)
            s += ' ';
        s += std::to_string(values[i]);
    }
    return s;
}

void emit_csv_row(std::ostream& out, const std::vector<std::string>& fields)
{
    for (std::size_t i = 0; i < fields.size(); ++i) {
        if (i)
            out << ',';
        out << csv_quote(fields[i]);
    }
    out << '\n';
}

json report_to_json(const VerificationReport& r)
{
    json mismatches = json::array();
    for (const auto& m : r.residue_mismatches)
        mismatches.push_back({{"p", m.p.get_str()},
                              {"q", m.q.get_str()},
                              {"n", m.n},
                              {"expected", m.expected},
                              {"actual", m.actual}});
    json violations = json::array();
    for (const auto& v : r.square_violations)
        violations.push_back({{"p", v.p.get_str()},
                              {"q", v.q.get_str()},
                              {"n", v.n},
                              {"value", v.value.get_str()}});
    return {{"check", r.check},
            {"triples_checked", r.triples_checked},
            {"residue_mismatches", mismatches},
            {"square_violations", violations}};
}

void print_reports(std::ostream& out, const Options& opt,
                   const std::vector<VerificationReport>& reports)
{
    if (opt.format == Format::csv)
        emit_csv_row(out, {"check", "triples_checked", "residue_mismatches",
                           "square_violations"});
    for (const auto& r : reports) {
        switch (opt.format) {
        case Format::text:
            out << r.check << ": " << r.triples_checked
                << " triples checked, " << r.residue_mismatches.size()
                << " residue mismatches, " << r.square_violations.size()
                << " square violations"
                << (r.ok() ? " [ok]" : " [FAIL]") << '\n';
            for (const auto& m : r.residue_mismatches)
                out << "  mismatch P=" << m.p << " Q=" << m.q
                    << " n=" << m.n << " expected=" << m.expected
                    << " actual=" << m.actual << '\n';
            for (const auto& v : r.square_violations)
                out << "  square P=" << v.p << " Q=" << v.q << " n=" << v.n
                    << " U_n=" << v.value << '\n';
            break;
        case Format::jsonl:
            out << report_to_json(r).dump() << '\n';
            break;
        case Format::csv:
            emit_csv_row(out,
                         {r.check, std::to_string(r.triples_checked),
                          std::to_string(r.residue_mismatches.size()),
                          std::to_string(r.square_violations.size())});
            break;
        }
    }
}

int reports_exit_code(const std::vector<VerificationReport>& reports)
{
    for (const auto& r : reports)
        if (!r.ok())
            return 1;
    return 0;
}

long long checked_stoll(const std::string& s)
{
    std::size_t pos = 0;
    long long v = std::stoll(s, &pos);
    if (pos != s.size())
        throw domain_error("not an integer: " + s);
    return v;
}

std::uint64_t checked_u64(const std::string& s)
{
    const long long v = checked_stoll(s);
    if (v < 0)
        throw domain_error("must be nonnegative: " + s);
    return static_cast<std::uint64_t>(v);
}

double elapsed_ms(const std::chrono::steady_clock::time_point& start)
{
    return std::chrono::duration<double, std::milli>(
               std::chrono::steady_clock::now() - start)
        .count();
}

void run_bench(std::ostream& out, std::uint64_t seed)
{
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<long> coeff(-9, 9);
    const LucasParams params{BigInt(coeff(rng) | 1), BigInt(coeff(rng) | 1)};
    out << "bench with P=" << params.p << " Q=" << params.q << '\n';
    out << "method          n        time_ms\n";
    auto row = [&](const char* name, SequenceIndex n, auto&& fn) {
        auto start = std::chrono::steady_clock::now();
        fn();
        std::ostringstream line;
        line.setf(std::ios::fixed);
        line.precision(3);
        line << name << "  " << n << "  " << elapsed_ms(start);
        out << line.str() << '\n';
    };
    for (SequenceIndex n : {1000u, 10000u, 100000u}) {
        row("u_rec   ", n, [&] { u_rec(params, n); });
        row("u_matrix", n, [&] { u_matrix(params, n); });
    }
    for (SequenceIndex n : {1000u, 4000u}) {
        row("u_closed", n, [&] { u_closed(params, n); });
    }
    row("u_mod   ", 1000000000000ull,
        [&] { u_mod(params, 1000000000000ull, 4); });
}

int dispatch(CLI::App& app, const Options& opt, std::ostream& out)
{
    if (auto* cmd = app.get_subcommand("compute"); cmd->parsed()) {
        const LucasParams params{
            BigInt(cmd->get_option("--p")->as<std::string>()),
            BigInt(cmd->get_option("--q")->as<std::string>())};
        const auto n = checked_u64(cmd->get_option("--n")->as<std::string>());
        std::string method = "matrix";
        if (cmd->count("--method"))
            method = cmd->get_option("--method")->as<std::string>();
        BigInt value;
        if (method == "rec")
            value = u_rec(params, n);
        else if (method == "closed")
            value = u_closed(params, n);
        else
            value = u_matrix(params, n);
        const std::string rendered =
            opt.digits_only
                ? std::to_string(value.get_str().size() -
                                 (sgn(value) < 0 ? 1 : 0))
                : value.get_str();
        switch (opt.format) {
        case Format::text:
            out << rendered << '\n';
            break;
        case Format::jsonl:
            out << json{{"p", params.p.get_str()},
                        {"q", params.q.get_str()},
                        {"n", n},
                        {"method", method},
                        {opt.digits_only ? "digits" : "value", rendered}}
                       .dump()
                << '\n';
            break;
        case Format::csv:
            emit_csv_row(out, {"p", "q", "n", "method",
                               opt.digits_only ? "digits" : "value"});
            emit_csv_row(out, {params.p.get_str(), params.q.get_str(),
                               std::to_string(n), method, rendered});
            break;
        }
        return 0;
    }

    if (auto* cmd = app.get_subcommand("mod"); cmd->parsed()) {
        const LucasParams params{
            BigInt(cmd->get_option("--p")->as<std::string>()),
            BigInt(cmd->get_option("--q")->as<std::string>())};
        const auto n = checked_u64(cmd->get_option("--n")->as<std::string>());
        const auto m = checked_u64(cmd->get_option("--modulus")->as<std::string>());
        const auto r = u_mod(params, n, m);
        switch (opt.format) {
        case Format::text:
            out << r.value << '\n';
            break;
        case Format::jsonl:
            out << json{{"p", params.p.get_str()},
                        {"q", params.q.get_str()},
                        {"n", n},
                        {"modulus", m},
                        {"residue", r.value}}
                       .dump()
                << '\n';
            break;
        case Format::csv:
            emit_csv_row(out, {"p", "q", "n", "modulus", "residue"});
            emit_csv_row(out,
                         {params.p.get_str(), params.q.get_str(),
                          std::to_string(n), std::to_string(m),
                          std::to_string(r.value)});
            break;
        }
        return 0;
    }

    if (auto* cmd = app.get_subcommand("period"); cmd->parsed()) {
        const LucasParams params{
            BigInt(cmd->get_option("--p")->as<std::string>()),
            BigInt(cmd->get_option("--q")->as<std::string>())};
        const auto m = checked_u64(cmd->get_option("--modulus")->as<std::string>());
        const auto info = period_mod(params, m);
        switch (opt.format) {
        case Format::text:
            out << "modulus=" << info.modulus
                << " preperiod=" << info.preperiod
                << " period=" << info.period << '\n';
            out << "prefix: [" << join(info.prefix) << "]\n";
            out << "cycle: [" << join(info.cycle) << "]\n";
            break;
        case Format::jsonl:
            out << json{{"p", params.p.get_str()},
                        {"q", params.q.get_str()},
                        {"modulus", info.modulus},
                        {"preperiod", info.preperiod},
                        {"period", info.period},
                        {"prefix", info.prefix},
                        {"cycle", info.cycle}}
                       .dump()
                << '\n';
            break;
        case Format::csv:
            emit_csv_row(out, {"p", "q", "modulus", "preperiod", "period",
                               "prefix", "cycle"});
            emit_csv_row(out, {params.p.get_str(), params.q.get_str(),
                               std::to_string(info.modulus),
                               std::to_string(info.preperiod),
                               std::to_string(info.period),
                               join(info.prefix), join(info.cycle)});
            break;
        }
        return 0;
    }

    if (auto* cmd = app.get_subcommand("classify"); cmd->parsed()) {
        const LucasParams params{
            BigInt(cmd->get_option("--p")->as<std::string>()),
            BigInt(cmd->get_option("--q")->as<std::string>())};
        const auto n = checked_u64(cmd->get_option("--n")->as<std::string>());
        const auto verdict = classify(params, n);
        const std::string conclusion =
            verdict.proved_non_square ? "PROVED_NON_SQUARE" : "INCONCLUSIVE";
        std::vector<std::string> ids;
        json criteria = json::array();
        for (const auto& [id, residue] : verdict.predicted_residues_mod4) {
            ids.push_back(to_string(id) + ":" + std::to_string(residue));
            criteria.push_back(
                {{"id", to_string(id)}, {"residue_mod4", residue}});
        }
        switch (opt.format) {
        case Format::text:
            out << conclusion << '\n' << explain(verdict);
            break;
        case Format::jsonl:
            out << json{{"p", params.p.get_str()},
                        {"q", params.q.get_str()},
                        {"n", n},
                        {"conclusion", conclusion},
                        {"criteria", criteria}}
                       .dump()
                << '\n';
            break;
        case Format::csv: {
            std::string joined;
            for (std::size_t i = 0; i < ids.size(); ++i)
                joined += (i ? " " : "") + ids[i];
            emit_csv_row(out, {"p", "q", "n", "conclusion", "criteria"});
            emit_csv_row(out, {params.p.get_str(), params.q.get_str(),
                               std::to_string(n), conclusion, joined});
            break;
        }
        }
        return 0;
    }

    if (auto* cmd = app.get_subcommand("verify"); cmd->parsed()) {
        const auto name =
            cmd->get_option("--criterion")->as<std::string>();
        const auto p_bound =
            checked_stoll(cmd->get_option("--p-bound")->as<std::string>());
        const auto q_bound =
            checked_stoll(cmd->get_option("--q-bound")->as<std::string>());
        const auto n_max = checked_u64(cmd->get_option("--n-max")->as<std::string>());
        const auto direct_limit = checked_u64(cmd->get_option("--direct-limit")->as<std::string>());
        const auto grid =
            GridSpec::symmetric(p_bound, q_bound, 0, n_max, direct_limit);
        std::vector<VerificationReport> reports;
        if (name == "ALL")
            reports = verify_all(grid, opt.jobs);
        else
            reports.push_back(verify_criterion(criterion_from_string(name),
                                               grid, opt.jobs));
        print_reports(out, opt, reports);
        return reports_exit_code(reports);
    }

    if (auto* cmd = app.get_subcommand("equiv"); cmd->parsed()) {
        const auto p_bound =
            checked_stoll(cmd->get_option("--p-bound")->as<std::string>());
        const auto q_bound =
            checked_stoll(cmd->get_option("--q-bound")->as<std::string>());
        const auto n_max = checked_u64(cmd->get_option("--n-max")->as<std::string>());
        std::vector<VerificationReport> reports{
            check_equivalence(p_bound, q_bound, n_max, opt.jobs)};
        print_reports(out, opt, reports);
        return reports_exit_code(reports);
    }

    if (auto* cmd = app.get_subcommand("census"); cmd->parsed()) {
        const LucasParams params{
            BigInt(cmd->get_option("--p")->as<std::string>()),
            BigInt(cmd->get_option("--q")->as<std::string>())};
        const auto n_max = checked_u64(cmd->get_option("--n-max")->as<std::string>());
        const auto report = census(params, n_max);
        json squares = json::array();
        std::string squares_flat;
        for (const auto& [n, root] : report.square_indices) {
            squares.push_back({{"n", n}, {"root", root.get_str()}});
            if (!squares_flat.empty())
                squares_flat += ' ';
            squares_flat += std::to_string(n) + ":" + root.get_str();
        }
        switch (opt.format) {
        case Format::text:
            out << "zero indices: [" << join(report.zero_indices) << "]\n";
            out << "nonzero-square indices (n:root):";
            for (const auto& [n, root] : report.square_indices)
                out << ' ' << n << ':' << root;
            out << '\n';
            break;
        case Format::jsonl:
            out << json{{"p", params.p.get_str()},
                        {"q", params.q.get_str()},
                        {"n_max", n_max},
                        {"zero_indices", report.zero_indices},
                        {"square_indices", squares}}
                       .dump()
                << '\n';
            break;
        case Format::csv:
            emit_csv_row(out, {"p", "q", "n_max", "zero_indices",
                               "square_indices"});
            emit_csv_row(out, {params.p.get_str(), params.q.get_str(),
                               std::to_string(n_max),
                               join(report.zero_indices), squares_flat});
            break;
        }
        return 0;
    }

    if (auto* cmd = app.get_subcommand("rm-check"); cmd->parsed()) {
        const auto p_max =
            checked_stoll(cmd->get_option("--p-max")->as<std::string>());
        const auto q_bound =
            checked_stoll(cmd->get_option("--q-bound")->as<std::string>());
        const auto n_max = checked_u64(cmd->get_option("--n-max")->as<std::string>());
        std::vector<VerificationReport> reports{
            check_rm_subset(p_max, q_bound, n_max, opt.jobs)};
        print_reports(out, opt, reports);
        return reports_exit_code(reports);
    }

    if (auto* cmd = app.get_subcommand("bench"); cmd->parsed()) {
        run_bench(out, opt.seed);
        return 0;
    }

    std::cerr << app.help();
    return 2;
}

} // namespace

int main(int argc, char** argv)
{
    CLI::App app{"Lucas sequence square-obstruction toolkit"};
    app.require_subcommand(0, 1);

    Options opt;
    std::string format_name = "text";
    app.add_option("--format", format_name, "output format")
        ->check(CLI::IsMember({"text", "jsonl", "csv"}));
    app.add_option("--jobs", opt.jobs, "parallelism degree");
    app.add_option("--seed", opt.seed, "seed for randomized sweeps");
    app.add_option("--out", opt.out_path, "write data to FILE");
    app.add_flag("--digits-only", opt.digits_only,
                 "print digit counts instead of full values");

    auto add_pq = [](CLI::App* cmd) {
        cmd->add_option("--p")->required();
        cmd->add_option("--q")->required();
    };

    auto* compute = app.add_subcommand("compute", "evaluate U_n(P,Q)");
    add_pq(compute);
    compute->add_option("--n")->required();
    compute->add_option("--method")->check(
        CLI::IsMember({"rec", "closed", "matrix"}));

    auto* mod = app.add_subcommand("mod", "evaluate U_n(P,Q) mod m");
    add_pq(mod);
    mod->add_option("--n")->required();
    mod->add_option("--modulus")->required();

    auto* period =
        app.add_subcommand("period", "eventual period of U_n mod m");
    add_pq(period);
    period->add_option("--modulus")->required();

    auto* cls =
        app.add_subcommand("classify", "apply the non-square criteria");
    add_pq(cls);
    cls->add_option("--n")->required();

    auto* verify =
        app.add_subcommand("verify", "sweep a criterion over a grid");
    verify->add_option("--criterion")
        ->required()
        ->check(CLI::IsMember({"T31A", "T31B", "T32", "T33", "T34", "ALL"}));
    verify->add_option("--p-bound")->required();
    verify->add_option("--q-bound")->required();
    verify->add_option("--n-max")->required();
    verify->add_option("--direct-limit")->required();

    auto* equiv =
        app.add_subcommand("equiv", "check the three evaluators agree");
    equiv->add_option("--p-bound")->required();
    equiv->add_option("--q-bound")->required();
    equiv->add_option("--n-max")->required();

    auto* cen = app.add_subcommand("census", "zero and square indices");
    add_pq(cen);
    cen->add_option("--n-max")->required();

    auto* rm = app.add_subcommand("rm-check",
                                  "square indices subset cross-check");
    rm->add_option("--p-max")->required();
    rm->add_option("--q-bound")->required();
    rm->add_option("--n-max")->required();

    app.add_subcommand("bench", "timing table for the evaluators");

    // global flags may appear after the subcommand
    for (auto* sub : app.get_subcommands([](const CLI::App*) { return true; }))
        sub->fallthrough();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        std::ostringstream sink;
        int code = app.exit(e, sink, sink);
        std::cerr << sink.str();
        return code == 0 ? 0 : 2;
    }

    try {
        if (!opt.out_path.empty()) {
            std::ofstream file(opt.out_path);
            if (!file) {
                std::cerr << "cannot open " << opt.out_path << '\n';
                return 2;
            }
            if (format_name == "jsonl")
                opt.format = Format::jsonl;
            else if (format_name == "csv")
                opt.format = Format::csv;
            return dispatch(app, opt, file);
        }
        if (format_name == "jsonl")
            opt.format = Format::jsonl;
        else if (format_name == "csv")
            opt.format = Format::csv;
        return dispatch(app, opt, std::cout);
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    } catch (const std::out_of_range& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    }
}
