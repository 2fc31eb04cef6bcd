// command-line front end: construct and analyze skew cyclic codes, compute
// distance bounds with certificates, and reproduce the worked examples

#include <fstream>
#include <iostream>

#include "CLI11.hpp"
#include "json.hpp"
#include "skewcyc/bounds.hpp"
#include "skewcyc/bridge.hpp"
#include "skewcyc/format.hpp"
#include "skewcyc/gabidulin.hpp"

using json = nlohmann::ordered_json;
using namespace skewcyc;

namespace {

struct TowerOpts {
    u64 q = 2;
    u32 m = 1, r = 1, n = 1;
};

void add_tower_options(CLI::App* app, TowerOpts& o) {
    app->add_option("--q", o.q, "base field size (prime power)")->required();
    app->add_option("--m", o.m, "coefficient field degree m")->required();
    app->add_option("--r", o.r, "Frobenius step r")->required();
    app->add_option("--n", o.n, "code length n")->required();
}

TowerParams to_params(const TowerOpts& o) {
    // factor q = p^s
    u64 q = o.q;
    if (q < 2) fail("UsageError", "q must be at least 2");
    u32 p = 0;
    for (u64 c = 2; c * c <= q; ++c)
        if (q % c == 0) { p = (u32)c; break; }
    if (p == 0) p = (u32)q;
    u32 s = 0;
    u64 acc = 1;
    while (acc < q) { acc *= p; ++s; }
    if (acc != q) fail("UsageError", "q is not a prime power");
    return TowerParams{p, s, o.m, o.r, o.n};
}

json elem_json(const Tower& t, const FieldElem& e) {
    json j;
    if (t.power_notation_available())
        j["pow"] = elem_to_string(t, e);
    else
        j["pow"] = nullptr;
    j["radix"] = elem_to_radix_string(t, e);
    return j;
}

json linpoly_json(const Tower& t, const LinPoly& f) {
    json j;
    j["text"] = linpoly_to_string(t, f);
    json coeffs = json::array();
    for (const auto& c : f.c) coeffs.push_back(elem_json(t, c));
    j["coeffs"] = coeffs;  // [c_0, ..., c_d]
    return j;
}

json subspace_json(const Tower& t, const Subspace& s) {
    json j;
    j["d"] = s.d;
    j["dim"] = s.dim();
    json basis = json::array();
    for (const auto& row : s.rows) {
        json r = json::array();
        for (const auto& e : row) r.push_back(elem_json(t, e));
        basis.push_back(r);
    }
    j["basis"] = basis;
    return j;
}

json code_json(const Tower& t, const SkewCyclicCode& c) {
    json j;
    j["schema"] = "skewcyc/1";
    j["tower"] = t.header();
    j["G"] = linpoly_json(t, c.G);
    j["H"] = linpoly_json(t, c.H);
    j["k"] = c.k;
    j["root_space"] = subspace_json(t, rho(t, c));
    return j;
}

json cert_json(const Tower& t, const HTCertificate& c) {
    json j;
    j["alpha"] = elem_json(t, c.alpha);
    j["c"] = c.c;
    j["delta"] = c.delta;
    j["s"] = c.s;
    return j;
}

json sequence_json(const Tower& t, const IndependentSequence& seq) {
    json steps = json::array();
    for (const auto& st : seq.steps) {
        json s;
        s["rule"] = std::string(1, st.rule);
        s["from"] = st.from;
        if (st.rule == 'a')
            s["beta"] = elem_json(t, st.beta);
        else
            s["b"] = st.b;
        steps.push_back(s);
    }
    json j;
    j["final_dim"] = seq.final_dim();
    j["steps"] = steps;
    return j;
}

void emit(const json& j) { std::cout << j.dump(2) << "\n"; }

// code construction shared by `code`, `bounds` and `lattice`
struct CodeSpec {
    std::string gen;
    std::string roots;
    std::string alpha;
    u32 delta = 0;
    std::string cyclic_gen;
};

void add_code_options(CLI::App* app, CodeSpec& s) {
    app->add_option("--gen", s.gen, "generator polynomial, e.g. \"X^[2]+a^4*X^[1]+a^6*X^[0]\"");
    app->add_option("--roots", s.roots, "comma-separated root space generators (rho inverse)");
    app->add_option("--alpha", s.alpha, "rank-BCH defining element");
    app->add_option("--delta", s.delta, "rank-BCH designed distance");
    app->add_option("--cyclic-gen", s.cyclic_gen,
                    "classical cyclic generator coefficients over F_q, low degree first, e.g. \"1,1,1\"");
}

std::vector<std::string> split_list(const std::string& s) {
    std::vector<std::string> out;
    size_t pos = 0;
    while (pos <= s.size()) {
        size_t comma = s.find(',', pos);
        if (comma == std::string::npos) {
            out.push_back(s.substr(pos));
            break;
        }
        out.push_back(s.substr(pos, comma - pos));
        pos = comma + 1;
    }
    return out;
}

SkewCyclicCode build_code(const Tower& t, const CodeSpec& s) {
    if (!s.gen.empty()) return code_from_generator(t, parse_linpoly(t, s.gen));
    if (!s.roots.empty()) {
        std::vector<FieldElem> gens;
        for (const auto& tok : split_list(s.roots)) gens.push_back(parse_elem(t, tok));
        return rho_inverse(t, span_of(t, t.params().r, gens));
    }
    if (!s.alpha.empty()) return rank_bch_code(t, parse_elem(t, s.alpha), s.delta ? s.delta : 2);
    if (!s.cyclic_gen.empty()) {
        BridgeContext ctx = make_bridge(t);
        std::vector<u32> coeffs;
        for (const auto& tok : split_list(s.cyclic_gen)) coeffs.push_back((u32)std::stoul(tok));
        ClassicCyclicCode c = classic_cyclic(t.fq(), fqp_from(coeffs), t.params().n);
        return hat_code(t, ctx, c);
    }
    fail("UsageError", "no code construction given (--gen/--roots/--alpha/--cyclic-gen)");
}

int run_reproduce_idempotent() {
    Tower t = Tower::build({2, 1, 3, 1, 3});
    FieldElem a = t.primitive_element();
    SkewCyclicCode c = code_from_generator(t, lp_from_coeffs(t, {t.pow(a, 6), t.pow(a, 4), t.one()}));
    LinPoly e = idempotent_generator(t, c);
    LinPoly xe = residue_reduce(t, lp_sub(t, lp_identity(t), e));
    SkewCyclicCode ch = code_from_generator(t, lp_from_coeffs(t, {a, t.one()}));
    json j;
    j["schema"] = "skewcyc/1";
    j["tower"] = t.header();
    j["G"] = linpoly_json(t, c.G);
    j["H"] = linpoly_json(t, c.H);
    j["E"] = linpoly_json(t, e);
    j["E_is_G"] = (e == c.G);
    j["E_idempotent"] = (sym_mul_mod(t, e, e) == e);
    j["x_minus_E"] = linpoly_json(t, xe);
    j["x_minus_E_generates_H"] = (code_from_generator(t, xe).G == ch.G);
    emit(j);
    bool ok = j["E_is_G"].get<bool>() && j["E_idempotent"].get<bool>() &&
              j["x_minus_E_generates_H"].get<bool>();
    return ok ? 0 : 1;
}

int run_reproduce_ht() {
    Tower t = Tower::build({2, 1, 31, 1, 62});
    FieldElem alpha = t.find_normal_basis(1);
    Subspace T = zero_subspace(t, 1);
    for (u32 b : {0u, 1u, 2u, 5u, 6u, 7u, 10u, 11u, 12u, 15u, 16u, 17u})
        T = sum(t, T, cyclotomic_space(t, t.frobenius(alpha, b)));
    SkewCyclicCode code = rho_inverse(t, T);
    BchCertificate bch{alpha, 4};
    HTCertificate ht{alpha, 5, 4, 3};
    bool bch_ok = verify_bch_certificate(t, T, bch);
    bool ht_ok = verify_ht_certificate(t, T, ht);
    IndependentSequence seq = ht_to_independent_sequence(t, ht, T);
    bool seq_ok = verify_independent_sequence(t, seq, T);
    json j;
    j["schema"] = "skewcyc/1";
    j["tower"] = t.header();
    j["alpha"] = elem_json(t, alpha);
    j["dim_T"] = T.dim();
    j["code_dim"] = code.k;
    j["bch"] = {{"delta", bch.delta}, {"verified", bch_ok}};
    j["ht"] = cert_json(t, ht);
    j["ht"]["value"] = ht.value();
    j["ht"]["verified"] = ht_ok;
    j["sequence"] = sequence_json(t, seq);
    j["sequence"]["verified"] = seq_ok;
    emit(j);
    bool ok = T.dim() == 24 && code.k == 38 && bch_ok && ht_ok && seq_ok && seq.final_dim() == 7;
    return ok ? 0 : 1;
}

int run_reproduce_bridge() {
    json j;
    j["schema"] = "skewcyc/1";
    bool all_ok = true;
    {
        Tower t = Tower::build({2, 1, 3, 1, 3});
        BridgeContext ctx = make_bridge(t);
        ClassicCyclicCode rep = classic_cyclic(t.fq(), fqp_from({1, 1, 1}), 3);
        SkewCyclicCode hat = hat_code(t, ctx, rep);
        u32 dh = min_hamming_distance(t.fq(), rep);
        u32 dr = min_rank_distance(t, hat);
        json r;
        r["tower"] = t.header();
        r["classical"] = {{"k", rep.k}, {"d_H", dh}, {"MDS", dh == rep.n - rep.k + 1}};
        r["hat"] = {{"k", hat.k}, {"d_R", dr}, {"MRD", dr == t.params().n - hat.k + 1}};
        all_ok = all_ok && dh == 3 && dr == 3;
        j["repetition"] = r;
    }
    {
        Tower t = Tower::build({2, 1, 4, 1, 4});
        BridgeContext ctx = make_bridge(t);
        ClassicCyclicCode c = classic_cyclic(t.fq(), fqp_from({1, 0, 1}), 4);
        SkewCyclicCode hat = hat_code(t, ctx, c);
        u32 dh = min_hamming_distance(t.fq(), c);
        u32 dr = min_rank_distance(t, hat);
        json r;
        r["tower"] = t.header();
        r["classical"] = {{"k", c.k}, {"d_H", dh}};
        r["hat"] = {{"k", hat.k}, {"d_R", dr}, {"min_generator", linpoly_to_string(t, hat.G)}};
        all_ok = all_ok && dh == 2 && dr == 2 && hat.k == 2;
        j["even_length"] = r;
    }
    emit(j);
    return all_ok ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"skew cyclic rank-metric code toolbox"};
    app.require_subcommand(1);

    TowerOpts topts;
    CodeSpec cspec;
    int jobs = 0;

    // tower info
    auto* tower_cmd = app.add_subcommand("tower", "tower operations");
    auto* tower_info = tower_cmd->add_subcommand("info", "print the tower header");
    add_tower_options(tower_info, topts);

    // code <construct>
    auto* code_cmd = app.add_subcommand("code", "construct and analyze codes");
    CLI::App* code_sub[5];
    const char* code_names[5] = {"from-gen", "from-roots", "bch", "gabidulin", "from-cyclic"};
    u32 gab_k = 1;
    std::string gab_beta;
    for (int i = 0; i < 5; ++i) {
        code_sub[i] = code_cmd->add_subcommand(code_names[i], "");
        add_tower_options(code_sub[i], topts);
        if (i != 3) add_code_options(code_sub[i], cspec);
    }
    code_sub[3]->add_option("--k", gab_k, "dimension");
    code_sub[3]->add_option("--beta", gab_beta, "evaluation points (default: normal basis orbit)");
    auto* code_analyze = code_cmd->add_subcommand("analyze", "matrices, dual, idempotent, rho");
    add_tower_options(code_analyze, topts);
    add_code_options(code_analyze, cspec);

    // bounds
    auto* bounds_cmd = app.add_subcommand("bounds", "distance bounds with certificates");
    add_tower_options(bounds_cmd, topts);
    add_code_options(bounds_cmd, cspec);
    bool opt_bch = false, opt_ht = false, opt_shift = false, opt_truedist = false;
    u64 opt_cap = 1u << 20;
    std::string verify_cert_file;
    bounds_cmd->add_flag("--bch", opt_bch, "rank-BCH certificate search");
    bounds_cmd->add_flag("--ht", opt_ht, "rank-HT certificate search");
    bounds_cmd->add_flag("--shift", opt_shift, "sound shift bound (min over root-space supersets)");
    bounds_cmd->add_flag("--true-distance", opt_truedist, "brute-force minimum rank distance");
    bounds_cmd->add_option("--cap", opt_cap, "enumeration cap for --true-distance");
    bounds_cmd->add_option("--verify-cert", verify_cert_file, "verify a certificate JSON file");
    bounds_cmd->add_option("--jobs", jobs, "threads for partitioned enumeration");

    // lattice
    auto* lattice_cmd = app.add_subcommand("lattice", "lattice operations");
    std::string gen_a, gen_b;
    u64 max_size = 4096;
    CLI::App* lat_sub[4];
    const char* lat_names[4] = {"meet", "join", "complement", "enumerate"};
    for (int i = 0; i < 4; ++i) {
        lat_sub[i] = lattice_cmd->add_subcommand(lat_names[i], "");
        add_tower_options(lat_sub[i], topts);
    }
    for (int i = 0; i < 3; ++i) {
        lat_sub[i]->add_option("--gen-a", gen_a, "first generator")->required();
        lat_sub[i]->add_option("--gen-b", gen_b, "second generator")->required();
    }
    lat_sub[3]->add_option("--max-size", max_size, "largest field size to enumerate");

    // reproduce
    auto* repro_cmd = app.add_subcommand("reproduce", "run the worked case studies");
    auto* rep_idem = repro_cmd->add_subcommand("idempotent-example", "");
    auto* rep_ht = repro_cmd->add_subcommand("ht-example", "");
    auto* rep_bridge = repro_cmd->add_subcommand("bridge-example", "");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        if (tower_info->parsed()) {
            Tower t = Tower::build(to_params(topts));
            json j;
            j["schema"] = "skewcyc/1";
            j["tower"] = t.header();
            j["primitive_element"] = elem_json(t, t.primitive_element());
            emit(j);
            return 0;
        }
        for (int i = 0; i < 5; ++i) {
            if (!code_sub[i]->parsed()) continue;
            Tower t = Tower::build(to_params(topts));
            if (i == 3) {  // gabidulin
                std::vector<FieldElem> beta;
                if (!gab_beta.empty()) {
                    for (const auto& tok : split_list(gab_beta)) beta.push_back(parse_elem(t, tok));
                } else {
                    FieldElem cur = t.find_normal_basis(t.big_degree() / t.params().m);
                    for (u32 ii = 0; ii < t.params().n; ++ii) {
                        beta.push_back(cur);
                        cur = t.frobenius(cur, t.params().r);
                    }
                }
                LinearCode c = gabidulin_code(t, beta, gab_k);
                json j;
                j["schema"] = "skewcyc/1";
                j["tower"] = t.header();
                j["k"] = c.k;
                json rows = json::array();
                for (const auto& row : c.gen) {
                    json rj = json::array();
                    for (const auto& e : row) rj.push_back(elem_json(t, e));
                    rows.push_back(rj);
                }
                j["generator_matrix"] = rows;
                emit(j);
                return 0;
            }
            SkewCyclicCode c = build_code(t, cspec);
            json j = code_json(t, c);
            if (i == 4) {  // from-cyclic: include the classical side
                std::vector<u32> coeffs;
                for (const auto& tok : split_list(cspec.cyclic_gen))
                    coeffs.push_back((u32)std::stoul(tok));
                ClassicCyclicCode cc = classic_cyclic(t.fq(), fqp_from(coeffs), t.params().n);
                json cj;
                cj["q"] = t.fq().q();
                cj["n"] = cc.n;
                cj["g"] = cc.g.c;
                std::string csv = "weight,count\n";
                auto dist = hamming_weight_distribution(t.fq(), cc);
                for (u32 w = 0; w < dist.size(); ++w)
                    csv += std::to_string(w) + "," + std::to_string(dist[w]) + "\n";
                cj["weight_distribution_csv"] = csv;
                j["classical"] = cj;
            }
            emit(j);
            return 0;
        }
        if (code_analyze->parsed()) {
            Tower t = Tower::build(to_params(topts));
            SkewCyclicCode c = build_code(t, cspec);
            json j = code_json(t, c);
            j["generator_matrix_csv"] = matrix_to_csv(t, generator_matrix(t, c));
            j["parity_matrix_csv"] = matrix_to_csv(t, parity_matrix(t, c));
            SkewCyclicCode d = dual(t, c);
            j["dual"] = {{"G", linpoly_json(t, d.G)}, {"k", d.k}};
            try {
                LinPoly e = idempotent_generator(t, c);
                j["idempotent"] = linpoly_json(t, e);
            } catch (const Error& err) {
                j["idempotent"] = err.code;
            }
            emit(j);
            return 0;
        }
        if (bounds_cmd->parsed()) {
            Tower t = Tower::build(to_params(topts));
            SkewCyclicCode c = build_code(t, cspec);
            Subspace T = rho(t, c);
            json j;
            j["schema"] = "skewcyc/1";
            j["tower"] = t.header();
            j["k"] = c.k;
            bool verify_ok = true;
            if (!verify_cert_file.empty()) {
                std::ifstream in(verify_cert_file);
                if (!in) fail("UsageError", "cannot open " + verify_cert_file);
                json cj = json::parse(in);
                HTCertificate cert;
                cert.alpha = parse_elem(t, cj["alpha"].is_object()
                                               ? cj["alpha"]["radix"].get<std::string>()
                                               : cj["alpha"].get<std::string>());
                cert.c = cj.value("c", 1u);
                cert.delta = cj.value("delta", 1u);
                cert.s = cj.value("s", 0u);
                bool ok = verify_ht_certificate(t, T, cert);
                verify_ok = verify_ok && ok;
                j["verify_cert"] = {{"value", cert.value()}, {"verified", ok}};
                if (ok) {
                    IndependentSequence seq = ht_to_independent_sequence(t, cert, T);
                    bool sok = verify_independent_sequence(t, seq, T);
                    verify_ok = verify_ok && sok;
                    j["verify_cert"]["sequence"] = sequence_json(t, seq);
                    j["verify_cert"]["sequence"]["verified"] = sok;
                }
            }
            if (opt_bch) {
                BchCertificate cert = rank_bch_bound(t, T);
                bool ok = verify_bch_certificate(t, T, cert);
                verify_ok = verify_ok && ok;
                j["bch"] = {{"designed_delta", cert.delta},
                            {"alpha", elem_json(t, cert.alpha)},
                            {"verified", ok}};
            }
            if (opt_ht) {
                HTCertificate cert = rank_ht_bound(t, T);
                bool ok = verify_ht_certificate(t, T, cert);
                verify_ok = verify_ok && ok;
                j["ht"] = cert_json(t, cert);
                j["ht"]["value"] = cert.value();
                j["ht"]["verified"] = ok;
            }
            if (opt_shift) {
                ShiftBoundResult res = shift_bound(t, T);
                j["shift"] = {{"value", res.value}, {"zero_code", res.zero_code}};
                if (!res.zero_code) {
                    bool ok = verify_independent_sequence(t, res.witness, res.binding_space);
                    verify_ok = verify_ok && ok;
                    j["shift"]["witness"] = sequence_json(t, res.witness);
                    j["shift"]["witness"]["verified"] = ok;
                    j["shift"]["binding_space_dim"] = res.binding_space.dim();
                } else {
                    j["shift"]["note"] = "no nonzero codewords to bound";
                }
            }
            if (opt_truedist) {
                if (c.k == 0) {
                    j["true_distance"] = nullptr;
                } else {
                    MinDistanceOptions opt;
                    opt.cap = opt_cap;
                    opt.jobs = jobs;
                    j["true_distance"] = min_rank_distance(t, c, opt);
                }
            }
            emit(j);
            return verify_ok ? 0 : 1;
        }
        for (int i = 0; i < 3; ++i) {
            if (!lat_sub[i]->parsed()) continue;
            Tower t = Tower::build(to_params(topts));
            SkewCyclicCode a = code_from_generator(t, parse_linpoly(t, gen_a));
            SkewCyclicCode b = code_from_generator(t, parse_linpoly(t, gen_b));
            json j;
            j["schema"] = "skewcyc/1";
            j["tower"] = t.header();
            if (i == 0) j["meet"] = code_json(t, meet(t, a, b));
            if (i == 1) j["join"] = code_json(t, join(t, a, b));
            if (i == 2) j["complementary"] = are_complementary(t, a, b);
            emit(j);
            return 0;
        }
        if (lat_sub[3]->parsed()) {
            Tower t = Tower::build(to_params(topts));
            if (t.field_size() > (u128)max_size)
                fail("UsageError", "field too large for lattice enumeration (see --max-size)");
            // all root spaces = closure of {0} under adding cyclotomic spaces
            auto spaces = root_space_supersets(t, zero_subspace(t, t.params().r));
            spaces.push_back(full_subspace(t, t.params().r));
            json list = json::array();
            for (const auto& T : spaces) {
                SkewCyclicCode c = rho_inverse(t, T);
                json e;
                e["dim_T"] = T.dim();
                e["k"] = c.k;
                e["G"] = linpoly_to_string(t, c.G);
                list.push_back(e);
            }
            json j;
            j["schema"] = "skewcyc/1";
            j["tower"] = t.header();
            j["codes"] = list;
            j["count"] = list.size();
            emit(j);
            return 0;
        }
        if (rep_idem->parsed()) return run_reproduce_idempotent();
        if (rep_ht->parsed()) return run_reproduce_ht();
        if (rep_bridge->parsed()) return run_reproduce_bridge();
        std::cerr << "no subcommand\n";
        return 2;
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return e.code == "UsageError" || e.code == "ParseError" ? 2 : 1;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
}
