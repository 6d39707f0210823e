// orthowg: exact orthogonal Weingarten calculus from the command line.
// Subcommands: wg, moment, cov, cumulant, limit, mc, verify.
#include <CLI11.hpp>
#include <json.hpp>

#include <orthowg/asymptotics.hpp>
#include <orthowg/montecarlo.hpp>
#include <orthowg/trace.hpp>
#include <orthowg/verify.hpp>
#include <orthowg/weingarten.hpp>
#include <orthowg/wordparse.hpp>

#include <cstdio>
#include <fstream>
#include <iostream>
#include <optional>

using json = nlohmann::json;
using namespace orthowg;

namespace {

MatrixSet load_matrices(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open matrix file '" + path + "'");
    json j = json::parse(in);
    int d = j.at("d").get<int>();
    MatrixSet mats(d);
    for (const auto& [id, rows] : j.at("matrices").items()) {
        std::vector<std::vector<Rat>> m;
        for (const auto& row : rows) {
            std::vector<Rat> r;
            for (const auto& v : row) {
                if (v.is_number_integer())
                    r.push_back(Rat(v.get<long>()));
                else
                    r.push_back(rat_from_string(v.get<std::string>()));
            }
            m.push_back(std::move(r));
        }
        mats.insert(id, SparseMat::from_dense(m));
    }
    return mats;
}

json expression_to_json(const TraceExpression& e) {
    json terms = json::object();
    for (const auto& [mono, coeff] : e.terms()) terms[mono.to_string()] = coeff.to_string();
    return terms;
}

void emit(const json& j, bool as_json, const std::string& fallback) {
    if (as_json)
        std::cout << j.dump(2) << "\n";
    else
        std::cout << fallback << "\n";
}

json pairing_blocks(const Pairing& p) {
    json blocks = json::array();
    for (auto [r, s] : p.pairs()) blocks.push_back({r, s});
    return blocks;
}

int cmd_wg(int n, std::optional<long> d, bool symbolic, bool allow_n8, bool as_json) {
    json out;
    out["n"] = n;
    json entries = json::object();
    std::string text;
    if (symbolic) {
        auto t = weingarten_symbolic(n, allow_n8);
        out["mode"] = "symbolic";
        const auto& basis = t.basis();
        for (const auto& p : basis) out["basis"].push_back(pairing_blocks(p));
        for (size_t i = 0; i < basis.size(); ++i)
            for (size_t j = i; j < basis.size(); ++j) {
                std::string key = basis[i].to_string() + "|" + basis[j].to_string();
                entries[key] = t.entry_symbolic(static_cast<int>(i), static_cast<int>(j)).to_string();
                text += key + " -> " + entries[key].get<std::string>() + "\n";
            }
    } else {
        if (!d) throw CLI::ValidationError("--d or --symbolic is required");
        auto t = weingarten_numeric(n, Rat(*d));
        out["mode"] = "numeric";
        out["d"] = *d;
        const auto& basis = t.basis();
        for (const auto& p : basis) out["basis"].push_back(pairing_blocks(p));
        for (size_t i = 0; i < basis.size(); ++i)
            for (size_t j = i; j < basis.size(); ++j) {
                std::string key = basis[i].to_string() + "|" + basis[j].to_string();
                entries[key] = rat_to_string(t.entry(static_cast<int>(i), static_cast<int>(j)));
                text += key + " -> " + entries[key].get<std::string>() + "\n";
            }
    }
    out["entries"] = entries;
    emit(out, as_json, text);
    return 0;
}

int cmd_moment(const std::string& word_text, const std::string& matrices, bool symbolic,
               std::optional<long> d, bool allow_n8, bool as_json) {
    WordSpec spec = to_word_spec(parse_word(word_text));
    EngineOptions opts;
    opts.allow_n8_symbolic = allow_n8;
    json out;
    out["word"] = word_text;
    if (!matrices.empty()) {
        MatrixSet mats = load_matrices(matrices);
        Rat v = expected_trace_numeric(spec, mats, opts);
        out["d"] = mats.dim();
        out["value"] = rat_to_string(v);
        emit(out, as_json, "E = " + rat_to_string(v) + "  (exact, d = " + std::to_string(mats.dim()) + ")");
        return 0;
    }
    TraceExpression e = symbolic ? expected_trace_symbolic(spec, opts)
                                 : expected_trace_at(spec, Rat(d.value_or(0)), opts);
    if (!symbolic && !d) throw CLI::ValidationError("--symbolic, --d, or --matrices is required");
    out["mode"] = symbolic ? "symbolic" : "numeric-at-d";
    if (!symbolic) out["d"] = *d;
    out["expression"] = expression_to_json(e);
    emit(out, as_json, "E = " + e.to_string());
    return 0;
}

int cmd_cov(const std::string& w1, const std::string& w2, const std::string& matrices,
            bool symbolic, bool allow_n8, bool as_json) {
    WordSpec x = to_word_spec(parse_word(w1)), y = to_word_spec(parse_word(w2));
    EngineOptions opts;
    opts.allow_n8_symbolic = allow_n8;
    json out;
    out["word"] = w1;
    out["word2"] = w2;
    if (!matrices.empty()) {
        MatrixSet mats = load_matrices(matrices);
        Rat v = covariance_numeric(x, y, mats, opts);
        out["d"] = mats.dim();
        out["value"] = rat_to_string(v);
        emit(out, as_json, "cov = " + rat_to_string(v) + "  (exact, d = " + std::to_string(mats.dim()) + ")");
        return 0;
    }
    if (!symbolic) throw CLI::ValidationError("--symbolic or --matrices is required");
    TraceExpression e = covariance_symbolic(x, y, opts);
    out["expression"] = expression_to_json(e);
    emit(out, as_json, "cov = " + e.to_string());
    return 0;
}

int cmd_cumulant(const std::vector<std::string>& words, const std::string& matrices,
                 bool as_json) {
    if (words.empty()) throw CLI::ValidationError("at least one --word is required");
    MatrixSet mats = load_matrices(matrices);
    std::vector<WordSpec> specs;
    for (const auto& w : words) specs.push_back(to_word_spec(parse_word(w)));
    Rat v = exact_cumulant(specs, mats);
    json out;
    out["r"] = words.size();
    out["d"] = mats.dim();
    out["value"] = rat_to_string(v);
    emit(out, as_json,
         "k_" + std::to_string(words.size()) + " = " + rat_to_string(v) + "  (exact, d = " +
             std::to_string(mats.dim()) + ")");
    return 0;
}

int cmd_limit_cov_powers(long m, long n, bool as_json) {
    auto v = limit_cov_powers(m, n);
    json out;
    out["m"] = m;
    out["n"] = n;
    out["engine_value"] = v.engine_value;
    out["both_families_value"] = v.both_families_value;
    emit(out, as_json,
         "lim cov(Tr(O^" + std::to_string(m) + "), Tr(O^" + std::to_string(n) + ")) = " +
             std::to_string(v.engine_value) + "  (two-family count: " +
             std::to_string(v.both_families_value) + ")");
    return 0;
}

int cmd_limit_spoke(const std::string& path, bool as_json) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open spoke spec '" + path + "'");
    json j = json::parse(in);
    std::vector<long> k = j.at("k").get<std::vector<long>>();
    std::vector<long> l = j.at("l").get<std::vector<long>>();
    auto phi = j.at("phi").get<std::vector<std::vector<double>>>();
    auto phi_t = j.at("phi_t").get<std::vector<std::vector<double>>>();
    double v = limit_covariance_spoke(phi, phi_t, k, l);
    json out;
    out["engine_value"] = v;
    emit(out, as_json, "limit covariance = " + std::to_string(v));
    return 0;
}

int cmd_mc(const std::vector<std::string>& words, const std::string& matrices, int d,
           long samples, std::uint64_t seed, int cumulant_r, int haar_count, bool as_json) {
    if (words.empty()) throw CLI::ValidationError("at least one --word is required");
    if (cumulant_r > 0 && cumulant_r != static_cast<int>(words.size()))
        throw CLI::ValidationError("--cumulant r must equal the number of words");
    std::vector<WordSpec> specs;
    for (const auto& w : words) specs.push_back(to_word_spec(parse_word(w)));
    std::optional<MatrixSet> exact_mats;
    MatrixSetD mats(d);
    if (!matrices.empty()) {
        exact_mats = load_matrices(matrices);
        if (exact_mats->dim() != d) throw std::runtime_error("--d disagrees with the matrix file");
        mats = MatrixSetD::from_exact(*exact_mats);
    }
    SamplerConfig cfg{d, samples, seed, haar_count, 50};
    Estimate est = cumulant_r > 0 ? estimate_cumulant(specs, mats, cfg)
                                  : estimate_moment(specs, mats, cfg);
    json out;
    out["value"] = est.value;
    out["stderr"] = est.stderr_;
    out["samples"] = est.samples;
    out["seed"] = seed;
    // exact engine value alongside, when the engine can compute it
    try {
        MatrixSet em = exact_mats ? *exact_mats : MatrixSet(d);
        Rat exact = cumulant_r == 2 ? covariance_numeric(specs[0], specs[1], em)
                    : cumulant_r > 0 ? exact_cumulant(specs, em)
                                     : [&] {
                                           WordSpec all;
                                           for (const auto& s : specs)
                                               all = WordSpec::concat(all, s);
                                           return expected_trace_numeric(all, em);
                                       }();
        out["exact"] = rat_to_string(exact);
    } catch (const std::exception&) {
        // engine value unavailable (caps, unknown symbols, d < n)
    }
    std::string text = "estimate = " + std::to_string(est.value) + " +- " +
                       std::to_string(est.stderr_) + "  (" + std::to_string(est.samples) +
                       " samples, seed " + std::to_string(seed) + ")";
    if (out.contains("exact")) text += "  exact = " + out["exact"].get<std::string>();
    emit(out, as_json, text);
    return 0;
}

int cmd_verify(const std::string& suite, bool n8, long mc_samples, std::uint64_t mc_seed,
               bool as_json) {
    VerifyOptions opts;
    opts.weingarten_n8 = n8;
    opts.mc_samples = mc_samples;
    opts.mc_seed = mc_seed;
    VerifyReport rep = run_verify(suite_from_name(suite), opts);
    if (as_json) {
        json out;
        out["suite"] = suite;
        out["mc_seed"] = mc_seed;
        out["mc_samples"] = mc_samples;
        json checks = json::array();
        for (const auto& c : rep.checks)
            checks.push_back({{"name", c.name},
                              {"status", c.finding ? "finding" : (c.pass ? "pass" : "fail")},
                              {"detail", c.detail}});
        out["checks"] = checks;
        out["all_passed"] = rep.all_passed();
        std::cout << out.dump(2) << "\n";
    } else {
        for (const auto& c : rep.checks) {
            const char* tag = c.finding ? "FINDING" : (c.pass ? "PASS" : "FAIL");
            std::printf("[%s] %s\n    %s\n", tag, c.name.c_str(), c.detail.c_str());
        }
        std::printf("%s (mc seed %llu, %ld samples)\n",
                    rep.all_passed() ? "all checks passed" : "FAILURES PRESENT",
                    static_cast<unsigned long long>(mc_seed), mc_samples);
    }
    return rep.all_passed() ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact moments, covariances and cumulants of traces of words in Haar "
                 "orthogonal matrices"};
    app.require_subcommand(1);
    bool as_json = false;
    app.add_flag("--json", as_json, "emit JSON on stdout");

    // wg
    auto* wg = app.add_subcommand("wg", "print a Weingarten table");
    int wg_n = 2;
    std::optional<long> wg_d;
    bool wg_sym = false, wg_n8 = false;
    wg->add_option("--n", wg_n, "number of O factors (even)")->required();
    wg->add_option("--d", wg_d, "dimension for the numeric table");
    wg->add_flag("--symbolic", wg_sym, "entries as rational functions of d");
    wg->add_flag("--allow-n8", wg_n8, "permit the (slow) symbolic n = 8 table");

    // moment
    auto* moment = app.add_subcommand("moment", "expected trace of a word");
    std::string m_word, m_matrices;
    bool m_sym = false, m_n8 = false;
    std::optional<long> m_d;
    moment->add_option("--word", m_word, "trace word, e.g. \"o a1 o^-1 a2\"")->required();
    moment->add_option("--matrices", m_matrices, "JSON matrix file");
    moment->add_option("--d", m_d, "evaluate Weingarten weights at this dimension");
    moment->add_flag("--symbolic", m_sym, "symbolic in d");
    moment->add_flag("--allow-n8", m_n8, "permit symbolic n = 8");

    // cov
    auto* cov = app.add_subcommand("cov", "covariance of two trace words");
    std::string c_w1, c_w2, c_matrices;
    bool c_sym = false, c_n8 = false;
    cov->add_option("--word", c_w1, "first word")->required();
    cov->add_option("--word2", c_w2, "second word")->required();
    cov->add_option("--matrices", c_matrices, "JSON matrix file");
    cov->add_flag("--symbolic", c_sym, "symbolic in d");
    cov->add_flag("--allow-n8", c_n8, "permit symbolic n = 8");

    // cumulant
    auto* cum = app.add_subcommand("cumulant", "exact joint cumulant of trace words");
    std::vector<std::string> k_words;
    std::string k_matrices;
    cum->add_option("--word", k_words, "trace word (repeat for each variable)")->required();
    cum->add_option("--matrices", k_matrices, "JSON matrix file")->required();

    // limit
    auto* limit = app.add_subcommand("limit", "second-order limit evaluators");
    std::vector<long> l_powers;
    std::string l_spoke;
    limit->add_option("--cov-powers", l_powers, "m n: lim cov(Tr(O^m), Tr(O^n))")
        ->expected(2);
    limit->add_option("--spoke", l_spoke, "JSON file with k, l, phi, phi_t tables");

    // mc
    auto* mc = app.add_subcommand("mc", "Monte Carlo estimation");
    std::vector<std::string> mc_words, mc_words2;
    std::string mc_matrices;
    int mc_d = 8, mc_r = 0, mc_haar = 1;
    long mc_samples = 100000;
    std::uint64_t mc_seed = 1;
    mc->add_option("--word", mc_words, "trace word (repeatable)")->required();
    mc->add_option("--word2", mc_words2, "additional word, appended after --word");
    mc->add_option("--d", mc_d, "dimension")->required();
    mc->add_option("--samples", mc_samples, "sample count (default 100000)");
    mc->add_option("--seed", mc_seed, "RNG seed (default 1)");
    mc->add_option("--cumulant", mc_r, "estimate the joint cumulant of the given words");
    mc->add_option("--haar-count", mc_haar, "independent Haar matrices per sample");
    mc->add_option("--matrices", mc_matrices, "JSON matrix file");

    // verify
    auto* verify = app.add_subcommand("verify", "run the built-in verification suites");
    std::string v_suite = "all";
    bool v_n8 = false;
    long v_mc_samples = 200000;
    std::uint64_t v_mc_seed = 20240901;
    verify->add_option("--suite", v_suite, "intro|weingarten|spoke|cumulant|all");
    verify->add_flag("--n8", v_n8, "include the flagged n = 8 Weingarten sweep");
    verify->add_option("--mc-samples", v_mc_samples, "Monte Carlo samples (default 200000)");
    verify->add_option("--mc-seed", v_mc_seed, "Monte Carlo seed (default 20240901)");

    for (CLI::App* sub : app.get_subcommands(nullptr)) sub->fallthrough();

    CLI11_PARSE(app, argc, argv);

    try {
        if (wg->parsed()) return cmd_wg(wg_n, wg_d, wg_sym, wg_n8, as_json);
        if (moment->parsed()) return cmd_moment(m_word, m_matrices, m_sym, m_d, m_n8, as_json);
        if (cov->parsed()) return cmd_cov(c_w1, c_w2, c_matrices, c_sym, c_n8, as_json);
        if (cum->parsed()) return cmd_cumulant(k_words, k_matrices, as_json);
        if (limit->parsed()) {
            if (!l_powers.empty()) return cmd_limit_cov_powers(l_powers[0], l_powers[1], as_json);
            if (!l_spoke.empty()) return cmd_limit_spoke(l_spoke, as_json);
            throw CLI::ValidationError("limit needs --cov-powers or --spoke");
        }
        if (mc->parsed()) {
            mc_words.insert(mc_words.end(), mc_words2.begin(), mc_words2.end());
            return cmd_mc(mc_words, mc_matrices, mc_d, mc_samples, mc_seed, mc_r, mc_haar, as_json);
        }
        if (verify->parsed()) return cmd_verify(v_suite, v_n8, v_mc_samples, v_mc_seed, as_json);
    } catch (const ParseError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 0;
}
