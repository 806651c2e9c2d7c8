#include <CLI11.hpp>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>

#include "wprm/verify.hpp"

using namespace wprm;
using nlohmann::json;

namespace {

WeightVector parse_weights(const std::string& s) {
    std::vector<int> w;
    std::stringstream ss(s);
    std::string tok;
    while (std::getline(ss, tok, ',')) w.push_back(std::stoi(tok));
    return WeightVector(w);
}

// a degree or an inclusive range "a..b"
std::vector<long long> parse_degrees(const std::string& s) {
    auto pos = s.find("..");
    if (pos == std::string::npos) return {std::stoll(s)};
    long long a = std::stoll(s.substr(0, pos)), b = std::stoll(s.substr(pos + 2));
    std::vector<long long> out;
    for (long long d = a; d <= b; ++d) out.push_back(d);
    return out;
}

Layout parse_layout(const std::string& s) {
    if (s == "canonical") return Layout::canonical;
    if (s == "standard") return Layout::standard;
    if (s == "structured") return Layout::structured;
    throw precondition_error("unknown layout: " + s);
}

void emit(const json& j, const std::string& out_path) {
    std::string text = j.dump(2);
    text.push_back('\n');
    if (out_path.empty()) {
        std::cout << text;
        return;
    }
    std::string tmp = out_path + ".tmp";
    {
        std::ofstream f(tmp, std::ios::binary);
        if (!f) throw std::runtime_error("cannot write " + tmp);
        f << text;
    }
    if (std::rename(tmp.c_str(), out_path.c_str()) != 0)
        throw std::runtime_error("cannot move output into place");
}

json params_payload(const Field& F, const WeightVector& w, long long d) {
    WprmCode C = build_wprm(F, w, d);
    json j;
    j["n"] = C.code.n();
    j["k"] = C.code.dim();
    j["nondegenerate"] = C.nondegenerate;
    if (C.code.dim() > 0) {
        auto h = C.code.hierarchy();
        j["d1"] = h.front();
        j["hierarchy"] = h;
    }
    return j;
}

int run_verify(const std::string& suite, const Field* F, const WeightVector& w,
               const std::vector<long long>& degrees, int qprime, long long d1, long long d2,
               long long dstar, int m, const std::string& out_path) {
    json results = json::array();
    bool all_pass = true;
    for (long long d : degrees.empty() ? std::vector<long long>{0} : degrees) {
        VerifyResult r;
        if (suite == "recursive")
            r = verify_recursive(*F, w, d);
        else if (suite == "dual")
            r = verify_dual_recursive(*F, w, d);
        else if (suite == "ssc")
            r = verify_ssc(*F, Field::of_order(qprime), w, d);
        else if (suite == "wprs")
            r = verify_wprs(*F, w[0], w[1], d);
        else if (suite == "hull")
            r = verify_hull(*F, w, d);
        else if (suite == "dual-monomial")
            r = verify_dual_monomial(*F, w, d, dstar);
        else if (suite == "schur")
            r = verify_schur(*F, w, d1, d2);
        else if (suite == "idp")
            r = verify_idp(w, d1, d2);
        else if (suite == "delta")
            r = verify_delta(*F, w, d);
        else if (suite == "prm-dual")
            r = verify_prm_dual(*F, m, d);
        else if (suite == "bounds-sandwich")
            r = verify_bounds_sandwich(*F, w, d);
        else
            throw precondition_error("unknown suite: " + suite);
        all_pass = all_pass && r.pass;
        json one;
        one["pass"] = r.pass;
        one["report"] = r.report;
        if (!degrees.empty()) one["d"] = d;
        results.push_back(std::move(one));
        if (suite == "schur" || suite == "idp") break;  // degree pair commands run once
    }
    json j;
    j["suite"] = suite;
    j["pass"] = all_pass;
    j["results"] = std::move(results);
    emit(j, out_path);
    return all_pass ? 0 : 1;
}

json table_row(const json& row) {
    std::string kind = row.at("kind");
    json out;
    out["label"] = row.value("label", kind);
    const Field& F = Field::of_order(row.at("q").get<int>());
    if (kind == "wprm") {
        WeightVector w(row.at("w").get<std::vector<int>>());
        out.update(params_payload(F, w, row.at("d").get<long long>()));
    } else if (kind == "wrm" || kind == "wrm_congruence") {
        WeightVector wt(row.at("w").get<std::vector<int>>());
        AffineGrid grid = AffineGrid::lex(F, wt.size());
        long long d = row.at("d").get<long long>();
        LinearCode C = kind == "wrm"
                           ? build_wrm(F, wt, d, grid)
                           : build_wrm_congruence(F, row.at("w0").get<int>(), wt, d, grid);
        out["n"] = C.n();
        out["k"] = C.dim();
        if (C.dim() > 0) out["hierarchy"] = C.hierarchy();
    } else if (kind == "wprs") {
        auto p = wprs_params(F.q(), row.at("w0").get<int>(), row.at("w1").get<int>(),
                             row.at("d").get<long long>());
        out.update(p.to_json());
    } else if (kind == "bound") {
        WeightVector w(row.at("w").get<std::vector<int>>());
        out["values"] = lower_bound_hierarchy(F, w, row.at("d").get<long long>());
    } else if (kind == "bound-maxima") {
        WeightVector w(row.at("w").get<std::vector<int>>());
        auto rep = best_over_orderings(F, w, row.at("d").get<long long>());
        out["values"] = rep.maxima;
    } else if (kind == "exact") {
        WeightVector w(row.at("w").get<std::vector<int>>());
        out["values"] = build_wprm(F, w, row.at("d").get<long long>()).code.hierarchy();
    } else {
        throw precondition_error("unknown table row kind: " + kind);
    }
    return out;
}

std::string table_csv(const json& rows) {
    std::ostringstream csv;
    csv << "label,n,k,hierarchy\n";
    for (const auto& r : rows) {
        csv << r.value("label", "") << ",";
        csv << (r.contains("n") ? r["n"].dump() : "") << ",";
        csv << (r.contains("k") ? r["k"].dump() : "") << ",";
        std::string h;
        if (r.contains("hierarchy"))
            for (const auto& v : r["hierarchy"]) h += (h.empty() ? "" : " ") + v.dump();
        if (r.contains("values"))
            for (const auto& v : r["values"]) h += (h.empty() ? "" : " ") + v.dump();
        csv << "\"(" << h << ")\"\n";
    }
    return csv.str();
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"weighted projective Reed-Muller code toolkit"};
    app.require_subcommand(1);

    std::string w_str, layout_str = "canonical", out_path, suite, spec_path, format = "json";
    int q = 0, qprime = 0, m = 2;
    std::string d_str;
    long long d1 = 0, d2 = 0, dstar = 0, seed = 0, budget = 0;

    auto add_common = [&](CLI::App* cmd, bool need_w) {
        cmd->add_option("--q", q, "field size")->required();
        auto* wopt = cmd->add_option("--w", w_str, "comma-separated weights");
        if (need_w) wopt->required();
        cmd->add_option("--out", out_path, "write JSON to this path atomically");
        cmd->add_option("--seed", seed, "seed for sampled checks (default 0)");
        cmd->add_option("--ghw-budget", budget, "override search budgets");
    };

    auto* points = app.add_subcommand("points", "representative points of P(w)(F_q)");
    add_common(points, true);
    points->add_option("--layout", layout_str, "canonical | standard | structured");

    auto* params = app.add_subcommand("params", "[n, k, d1, hierarchy] of WPRM_d(w)");
    add_common(params, true);
    params->add_option("--d", d_str, "degree or range a..b")->required();

    auto* code = app.add_subcommand("code", "canonical generator matrix of WPRM_d(w)");
    add_common(code, true);
    code->add_option("--d", d_str, "degree or range a..b")->required();
    code->add_option("--layout", layout_str, "canonical | standard | structured");

    auto* verify = app.add_subcommand("verify", "run a verification suite");
    verify->add_option("suite", suite, "suite name")->required();
    add_common(verify, false);
    verify->add_option("--d", d_str, "degree or range a..b");
    verify->add_option("--qprime", qprime, "subfield size (ssc)");
    verify->add_option("--d1", d1, "first degree (schur, idp)");
    verify->add_option("--d2", d2, "second degree (schur, idp)");
    verify->add_option("--dstar", dstar, "dual-monomial degree d*");
    verify->add_option("--m", m, "projective dimension (prm-dual)");

    auto* table = app.add_subcommand("table", "evaluate a table specification file");
    table->add_option("--spec", spec_path, "JSON spec with a rows array")->required();
    table->add_option("--out", out_path, "output path");
    table->add_option("--format", format, "json | csv");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        return app.exit(e) == 0 ? 0 : 2;
    }

    try {
        if (budget > 0) setenv("WPRM_BUDGET", std::to_string(budget).c_str(), 1);

        if (points->parsed()) {
            const Field& F = Field::of_order(q);
            RepresentativeSet R = enumerate_points(F, parse_weights(w_str), parse_layout(layout_str));
            json j;
            j["command"] = "points";
            j["count"] = R.size();
            j["set"] = R.to_json();
            emit(j, out_path);
            return 0;
        }
        if (params->parsed() || code->parsed()) {
            const Field& F = Field::of_order(q);
            WeightVector w = parse_weights(w_str);
            json results = json::array();
            bool exhausted = false;
            for (long long d : parse_degrees(d_str)) {
                json one;
                one["d"] = d;
                try {
                    if (params->parsed()) {
                        one.update(params_payload(F, w, d));
                    } else {
                        WprmCode C = build_wprm(F, w, d, parse_layout(layout_str));
                        one.update(C.to_json());
                    }
                } catch (const budget_error& e) {
                    one["budget_exceeded"] = true;
                    one["error"] = e.what();
                    exhausted = true;
                }
                results.push_back(std::move(one));
            }
            json j;
            j["command"] = params->parsed() ? "params" : "code";
            j["q"] = q;
            j["w"] = w.w;
            j["results"] = std::move(results);
            emit(j, out_path);
            return exhausted ? 3 : 0;
        }
        if (verify->parsed()) {
            const Field& F = Field::of_order(q);
            WeightVector w = w_str.empty() ? WeightVector{1} : parse_weights(w_str);
            std::vector<long long> degrees =
                d_str.empty() ? std::vector<long long>{} : parse_degrees(d_str);
            return run_verify(suite, &F, w, degrees, qprime, d1, d2, dstar, m, out_path);
        }
        if (table->parsed()) {
            std::ifstream f(spec_path);
            if (!f) throw precondition_error("cannot read spec file " + spec_path);
            json spec = json::parse(f);
            json rows = json::array();
            for (const auto& row : spec.value("rows", json::array())) rows.push_back(table_row(row));
            if (format == "csv") {
                std::string csv = table_csv(rows);
                if (out_path.empty()) {
                    std::cout << csv;
                } else {
                    std::ofstream o(out_path + ".tmp", std::ios::binary);
                    o << csv;
                    o.close();
                    std::rename((out_path + ".tmp").c_str(), out_path.c_str());
                }
            } else {
                json j;
                j["command"] = "table";
                j["rows"] = std::move(rows);
                emit(j, out_path);
            }
            return 0;
        }
    } catch (const budget_error& e) {
        std::cerr << "budget error: " << e.what() << "\n";
        return 3;
    } catch (const precondition_error& e) {
        std::cerr << "precondition error: " << e.what() << "\n";
        return 2;
    } catch (const std::domain_error& e) {
        std::cerr << "precondition error: " << e.what() << "\n";
        return 2;
    } catch (const std::invalid_argument& e) {
        std::cerr << "precondition error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "verification failure: " << e.what() << "\n";
        return 1;
    }
    return 0;
}
