#include "tc/cli.hpp"

#include <cstdlib>
#include <fstream>
#include <functional>
#include <iostream>
#include <optional>
#include <sstream>

#include "CLI11.hpp"

#include "tc/cache.hpp"
#include "tc/characters.hpp"
#include "tc/diagram_schur.hpp"
#include "tc/json_io.hpp"
#include "tc/key_lemma.hpp"
#include "tc/selftest.hpp"
#include "tc/super_schur.hpp"
#include "tc/tensor_action.hpp"

namespace tc {

namespace {

enum class Format { text, tsv, json };

struct CliState {
    Format format = Format::text;
    std::string cache_path;
    std::uint64_t seed = 20250801;
    LrCache lr;
    bool cache_loaded = false;
    std::ostream* out = nullptr;
    std::ostream* err = nullptr;

    void ensure_cache_loaded() {
        if (!cache_path.empty() && !cache_loaded) {
            load_cache_file_into(lr, cache_path);
            lr.mark_clean();
            cache_loaded = true;
        }
    }

    void flush_cache() {
        if (!cache_path.empty() && lr.dirty()) {
            store_cache_file(lr, cache_path);
            lr.mark_clean();
        }
    }

    void emit(const Json& json, const std::vector<std::string>& tsv_rows, const std::string& text) {
        switch (format) {
            case Format::json:
                *out << json.dump() << '\n';
                break;
            case Format::tsv:
                for (const auto& row : tsv_rows) *out << row << '\n';
                break;
            case Format::text:
                *out << text;
                if (!text.empty() && text.back() != '\n') *out << '\n';
                break;
        }
    }
};

std::string join_tabs(const std::vector<std::string>& fields) {
    std::string row;
    for (std::size_t i = 0; i < fields.size(); ++i) {
        if (i) row += '\t';
        row += fields[i];
    }
    return row;
}

Json int_json(const Int& v) {
    // Exact integers; beyond int64 range emit a decimal string.
    if (v.fits_slong_p()) return Json(v.get_si());
    return Json(v.get_str());
}

std::string read_text_source(const std::string& arg) {
    if (arg == "-") {
        std::ostringstream ss;
        ss << std::cin.rdbuf();
        return ss.str();
    }
    std::ifstream in(arg);
    if (!in.is_open()) throw std::invalid_argument("cannot open file '" + arg + "'");
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

Morphism load_morphism(const std::string& arg) {
    return morphism_from_json(parse_json_text(read_text_source(arg)));
}

// ---- subcommand handlers ----

void cmd_partition_dim(CliState& st, const std::string& lambda_text) {
    Partition lambda = Partition::parse(lambda_text);
    Int d = dim_irrep(lambda);
    Json j{{"lambda", lambda.to_string()}, {"dim", int_json(d)}};
    st.emit(j, {join_tabs({lambda.to_string(), d.get_str()})}, d.get_str());
}

void cmd_partition_conj(CliState& st, const std::string& lambda_text) {
    Partition lambda = Partition::parse(lambda_text);
    Partition c = lambda.conjugate();
    Json j{{"lambda", lambda.to_string()}, {"conjugate", c.to_string()}};
    st.emit(j, {join_tabs({lambda.to_string(), c.to_string()})}, c.to_string());
}

void cmd_partition_char(CliState& st, const std::string& lambda_text, const std::string& rho_text) {
    Partition lambda = Partition::parse(lambda_text);
    Partition rho = Partition::parse(rho_text);
    Int v = character(lambda, rho);
    Json j{{"lambda", lambda.to_string()}, {"cycle_type", rho.to_string()}, {"value", int_json(v)}};
    st.emit(j, {join_tabs({lambda.to_string(), rho.to_string(), v.get_str()})}, v.get_str());
}

void cmd_partition_lr(CliState& st, const std::string& lambda_text, const std::string& mu_text,
                      const std::string& nu_text) {
    Partition lambda = Partition::parse(lambda_text);
    Partition mu = Partition::parse(mu_text);
    Partition nu = Partition::parse(nu_text);
    st.ensure_cache_loaded();
    Int c = st.lr.coefficient(lambda, mu, nu);
    st.flush_cache();
    Json j{{"lambda", lambda.to_string()},
           {"mu", mu.to_string()},
           {"nu", nu.to_string()},
           {"coeff", int_json(c)}};
    st.emit(j, {join_tabs({lambda.to_string(), mu.to_string(), nu.to_string(), c.get_str()})}, c.get_str());
}

void cmd_schur_dim(CliState& st, const std::string& lambda_text, const std::string& dim_text) {
    Partition lambda = Partition::parse(lambda_text);
    SuperDim d = SuperDim::parse(dim_text);
    st.ensure_cache_loaded();
    Int v = schur_dim(lambda, d, st.lr);
    st.flush_cache();
    Json j{{"lambda", lambda.to_string()}, {"p", d.p}, {"q", d.q}, {"dim", int_json(v)}};
    st.emit(j, {join_tabs({lambda.to_string(), d.to_string(), v.get_str()})}, v.get_str());
}

void cmd_schur_vanishes(CliState& st, const std::string& lambda_text, const std::string& dim_text) {
    Partition lambda = Partition::parse(lambda_text);
    SuperDim d = SuperDim::parse(dim_text);
    bool v = vanishes(lambda, d);
    const std::string text = v ? "true" : "false";
    Json j{{"lambda", lambda.to_string()}, {"p", d.p}, {"q", d.q}, {"vanishes", v}};
    st.emit(j, {join_tabs({lambda.to_string(), d.to_string(), text})}, text);
}

void cmd_schur_decompose(CliState& st, const std::string& dim_text, int n) {
    SuperDim d = SuperDim::parse(dim_text);
    if (n < 0) throw std::invalid_argument("--n must be nonnegative");
    st.ensure_cache_loaded();
    auto rows = tensor_power_decomposition(d, n, st.lr);
    st.flush_cache();
    Json j{{"p", d.p}, {"q", d.q}, {"n", n}, {"rows", Json::array()}};
    std::vector<std::string> tsv;
    std::string text;
    for (const auto& row : rows) {
        j["rows"].push_back(Json{{"lambda", row.lambda.to_string()},
                                 {"mult", int_json(row.multiplicity)},
                                 {"schur_dim", int_json(row.dim)}});
        tsv.push_back(join_tabs({row.lambda.to_string(), row.multiplicity.get_str(), row.dim.get_str()}));
        text += row.lambda.to_string() + ": mult " + row.multiplicity.get_str() + ", dim " +
                row.dim.get_str() + "\n";
    }
    st.emit(j, tsv, text);
}

void cmd_schur_length(CliState& st, const std::string& dim_text, int n_max) {
    SuperDim d = SuperDim::parse(dim_text);
    if (n_max < 1) throw std::invalid_argument("--n-max must be positive");
    auto rows = length_growth_report(d, n_max);
    Json j{{"p", d.p}, {"q", d.q}, {"rows", Json::array()}};
    std::vector<std::string> tsv;
    std::string text;
    for (const auto& row : rows) {
        j["rows"].push_back(Json{{"n", row.n},
                                 {"length", int_json(row.length)},
                                 {"bound", int_json(row.bound)},
                                 {"admissible_sum", int_json(row.admissible_sum)}});
        tsv.push_back(join_tabs({std::to_string(row.n), row.length.get_str(), row.bound.get_str(),
                                 row.admissible_sum.get_str()}));
        text += "n=" + std::to_string(row.n) + " length=" + row.length.get_str() +
                " bound=" + row.bound.get_str() + " admissible_sum=" + row.admissible_sum.get_str() + "\n";
    }
    st.emit(j, tsv, text);
}

DiagObject object_from_cli(int size, const std::string& signs) {
    if (signs.empty()) return DiagObject(size);
    DiagObject obj(DiagObject::parse_sign_word(signs));
    if (size >= 0 && obj.size() != size)
        throw std::invalid_argument("sign word length disagrees with --bottom/--top size");
    return obj;
}

void cmd_diagram_hom(CliState& st, int bottom, int top, const std::string& bottom_signs,
                     const std::string& top_signs) {
    if (bottom_signs.empty() != top_signs.empty())
        throw std::invalid_argument("oriented objects need both --bottom-signs and --top-signs");
    DiagObject x = object_from_cli(bottom, bottom_signs);
    DiagObject y = object_from_cli(top, top_signs);
    auto basis = hom_basis(x, y);
    Json j{{"source", to_json(x)}, {"target", to_json(y)}, {"count", basis.size()}, {"diagrams", Json::array()}};
    std::vector<std::string> tsv;
    std::string text = std::to_string(basis.size()) + " diagrams\n";
    for (const auto& d : basis) {
        j["diagrams"].push_back(to_json(d));
        std::string pairs;
        for (const auto& [a, b] : d.pairs()) {
            if (!pairs.empty()) pairs += ' ';
            pairs += std::to_string(a) + "-" + std::to_string(b);
        }
        tsv.push_back(pairs);
        text += d.to_string() + "\n";
    }
    st.emit(j, tsv, text);
}

void describe_morphism(CliState& st, const Morphism& m) {
    Json j = to_json(m);
    std::vector<std::string> tsv;
    std::string text;
    if (m.is_zero()) text = "0\n";
    for (const auto& [d, c] : m.terms()) {
        std::string pairs;
        for (const auto& [a, b] : d.pairs()) {
            if (!pairs.empty()) pairs += ' ';
            pairs += std::to_string(a) + "-" + std::to_string(b);
        }
        tsv.push_back(join_tabs({c.to_string(), pairs}));
        text += "(" + c.to_string() + ") * " + d.to_string() + "\n";
    }
    st.emit(j, tsv, text);
}

void cmd_diagram_compose(CliState& st, const std::string& g_arg, const std::string& f_arg) {
    Morphism g = load_morphism(g_arg);
    Morphism f = load_morphism(f_arg);
    describe_morphism(st, compose(g, f));
}

void cmd_diagram_trace(CliState& st, int identity_size, const std::string& morphism_arg) {
    RationalFunction tr;
    if (!morphism_arg.empty()) {
        tr = closure_trace(load_morphism(morphism_arg));
    } else {
        if (identity_size < 0) throw std::invalid_argument("need --identity N or --morphism FILE");
        tr = closure_trace(Morphism::identity(DiagObject(identity_size)));
    }
    Json j{{"trace", tr.to_string()}};
    st.emit(j, {tr.to_string()}, tr.to_string());
}

void cmd_diagram_schurdim(CliState& st, const std::string& lambda_text, const std::string& kind_text) {
    Partition lambda = Partition::parse(lambda_text);
    DiagKind kind;
    if (kind_text == "unoriented")
        kind = DiagKind::unoriented;
    else if (kind_text == "oriented")
        kind = DiagKind::oriented;
    else
        throw std::invalid_argument("unknown kind '" + kind_text + "'");
    RationalFunction dim = symmetrizer_closure_dim(lambda, kind);
    Json j{{"lambda", lambda.to_string()}, {"kind", kind_text}, {"dim", dim.to_string()}};
    st.emit(j, {join_tabs({lambda.to_string(), kind_text, dim.to_string()})}, dim.to_string());
}

void cmd_diagram_gram(CliState& st, int k) {
    GramForm gram = gram_determinant(k);
    Json roots = Json::array();
    std::string roots_text;
    for (const auto& r : gram.rational_roots) {
        roots.push_back(r.to_string());
        if (!roots_text.empty()) roots_text += ",";
        roots_text += r.to_string();
    }
    Json j{{"k", k},
           {"basis_size", gram.matrix.rows()},
           {"det", gram.determinant.to_string()},
           {"rational_roots", roots}};
    st.emit(j, {join_tabs({std::to_string(k), gram.determinant.to_string(), roots_text})},
            "det = " + gram.determinant.to_string() + "\nrational roots: " +
                (roots_text.empty() ? "none" : roots_text) + "\n");
}

void cmd_diagram_idem(CliState& st, const std::string& morphism_arg) {
    Morphism e = load_morphism(morphism_arg);
    IdempotentCheck chk = idempotent_check(e);
    Json j{{"is_idempotent", chk.is_idempotent}, {"is_zero", chk.is_zero}};
    std::string text = std::string("idempotent: ") + (chk.is_idempotent ? "true" : "false") +
                       "\nzero: " + (chk.is_zero ? "true" : "false") + "\n";
    st.emit(j, {join_tabs({chk.is_idempotent ? "true" : "false", chk.is_zero ? "true" : "false"})}, text);
}

void cmd_keylemma_delta(CliState& st, const std::string& dim_text, int n) {
    SuperDim d = SuperDim::parse(dim_text);
    if (n < 0) throw std::invalid_argument("--n must be nonnegative");
    PairedSymElement power = delta_power(d, n);
    Json j{{"p", d.p},
           {"q", d.q},
           {"n", n},
           {"is_zero", power.is_zero()},
           {"terms", power.terms().size()},
           {"sym_dim", int_json(sym_dim(d, n))}};
    std::string text = power.is_zero() ? "delta^" + std::to_string(n) + " = 0"
                                       : "delta^" + std::to_string(n) + " has " +
                                             std::to_string(power.terms().size()) + " terms";
    st.emit(j, {join_tabs({d.to_string(), std::to_string(n), power.is_zero() ? "zero" : "nonzero"})}, text);
}

void cmd_keylemma_inverse(CliState& st, const std::string& dim_text, int guard) {
    SuperDim d = SuperDim::parse(dim_text);
    GeometricInverse inv = geometric_inverse(d, guard);
    Json j;
    if (inv.nilpotent) {
        j = Json{{"p", d.p},
                 {"q", d.q},
                 {"delta_nilpotency_index", inv.index},
                 {"inverse_verified", inv.product_verified}};
    } else {
        j = Json{{"p", d.p},
                 {"q", d.q},
                 {"delta_nilpotency_index", nullptr},
                 {"inverse_verified", false},
                 {"first_unverified_power", inv.index}};
    }
    std::string text = inv.nilpotent
                           ? "nilpotency index " + std::to_string(inv.index) + ", inverse verified: " +
                                 (inv.product_verified ? "true" : "false")
                           : "not nilpotent up to guard (first unverified power " +
                                 std::to_string(inv.index) + ")";
    st.emit(j,
            {join_tabs({d.to_string(), inv.nilpotent ? std::to_string(inv.index) : "none",
                        inv.product_verified ? "true" : "false"})},
            text);
}

void cmd_keylemma_hooklemma(CliState& st, int m, int n, int k) {
    HookLemmaReport rep = hook_partition_lemma_report(m, n, k);
    Json counterexamples = Json::array();
    std::string ce_text;
    for (const auto& p : rep.counterexamples) {
        counterexamples.push_back(p.to_string());
        if (!ce_text.empty()) ce_text += "; ";
        ce_text += p.to_string();
    }
    Json j{{"m", m}, {"n", n}, {"k", k}, {"holds", rep.holds}, {"counterexamples", counterexamples}};
    std::string text = rep.holds ? "true" : "false";
    if (!rep.hypothesis_met) {
        j["hypothesis_met"] = false;
        text += " (hypothesis k > m*n not met";
        text += rep.counterexamples.empty() ? ")" : "; box partitions exist: " + ce_text + ")";
    } else if (!rep.holds) {
        text += " (counterexamples: " + ce_text + ")";
    }
    st.emit(j, {join_tabs({std::to_string(m), std::to_string(n), std::to_string(k), rep.holds ? "true" : "false", ce_text})},
            text);
}

int cmd_selftest(CliState& st, const std::string& filter) {
    SelftestOptions opt;
    opt.filter = filter;
    opt.seed = st.seed;
    auto results = run_acceptance(opt, *st.out);
    return all_passed(results) ? 0 : 1;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CliState st;
    st.out = &out;
    st.err = &err;
    if (const char* env = std::getenv("TC_CACHE")) st.cache_path = env;

    CLI::App app{"Exact Schur-functor and diagram-category calculator"};
    app.require_subcommand(1);
    std::string format_text = "text";
    app.add_option("--format", format_text, "Output format: json, tsv or text")
        ->check(CLI::IsMember({"json", "tsv", "text"}));
    app.add_option("--cache", st.cache_path, "LR coefficient cache file (overrides TC_CACHE)");
    app.add_option("--seed", st.seed, "Seed for randomized checks");

    std::string lambda_text, mu_text, nu_text, rho_text, dim_text = "0,0";
    std::string bottom_signs, top_signs, kind_text = "unoriented";
    std::string f_arg, g_arg, morphism_arg, filter;
    int n = 0, n_max = 6, bottom = 0, top = 0, gram_k = 1, identity_size = -1;
    int hook_m = 0, hook_n = 0, hook_k = 0, guard = 8;

    int rc = 0;
    auto defer = [&rc](int code) { rc = code; };

    CLI::App* partition = app.add_subcommand("partition", "Partition combinatorics");
    partition->require_subcommand(1);
    auto* p_dim = partition->add_subcommand("dim", "dim V_lambda by the hook length formula");
    p_dim->add_option("--lambda", lambda_text, "Partition, e.g. 3,2,1")->required();
    auto* p_conj = partition->add_subcommand("conj", "Conjugate partition");
    p_conj->add_option("--lambda", lambda_text)->required();
    auto* p_char = partition->add_subcommand("char", "Character chi^lambda(cycle type)");
    p_char->add_option("--lambda", lambda_text)->required();
    p_char->add_option("--cycle-type", rho_text)->required();
    auto* p_lr = partition->add_subcommand("lr", "Littlewood-Richardson coefficient");
    p_lr->add_option("--lambda", lambda_text)->required();
    p_lr->add_option("--mu", mu_text)->required();
    p_lr->add_option("--nu", nu_text)->required();

    CLI::App* schur = app.add_subcommand("schur", "Schur functors on super vector spaces");
    schur->require_subcommand(1);
    auto* s_dim = schur->add_subcommand("dim", "dim S_lambda(k^{p|q})");
    s_dim->add_option("--lambda", lambda_text)->required();
    s_dim->add_option("--dim", dim_text, "Super dimension p,q")->required();
    auto* s_van = schur->add_subcommand("vanishes", "Hook criterion for S_lambda(k^{p|q}) = 0");
    s_van->add_option("--lambda", lambda_text)->required();
    s_van->add_option("--dim", dim_text)->required();
    auto* s_dec = schur->add_subcommand("decompose", "Decomposition of the n-th tensor power");
    s_dec->add_option("--dim", dim_text)->required();
    s_dec->add_option("--n", n)->required();
    auto* s_len = schur->add_subcommand("length", "Length growth table");
    s_len->add_option("--dim", dim_text)->required();
    s_len->add_option("--n-max", n_max);

    CLI::App* diagram = app.add_subcommand("diagram", "Interpolation diagram categories");
    diagram->require_subcommand(1);
    auto* d_hom = diagram->add_subcommand("hom", "Basis of Hom(bottom, top)");
    d_hom->add_option("--bottom", bottom)->required();
    d_hom->add_option("--top", top)->required();
    d_hom->add_option("--bottom-signs", bottom_signs, "Sign word, e.g. +-");
    d_hom->add_option("--top-signs", top_signs);
    auto* d_comp = diagram->add_subcommand("compose", "Compose morphisms (g after f)");
    d_comp->add_option("--g", g_arg, "Morphism JSON file ('-' = stdin)")->required();
    d_comp->add_option("--f", f_arg)->required();
    auto* d_trace = diagram->add_subcommand("trace", "Closure trace of an endomorphism");
    d_trace->add_option("--identity", identity_size, "Trace of id_N");
    d_trace->add_option("--morphism", morphism_arg, "Morphism JSON file ('-' = stdin)");
    auto* d_schur = diagram->add_subcommand("schurdim", "Categorical dimension of the lambda image");
    d_schur->add_option("--lambda", lambda_text)->required();
    d_schur->add_option("--kind", kind_text)->check(CLI::IsMember({"unoriented", "oriented"}));
    auto* d_gram = diagram->add_subcommand("gram", "Gram determinant of Hom(0, 2k)");
    d_gram->add_option("--k", gram_k)->required();
    auto* d_idem = diagram->add_subcommand("idem", "Idempotency check");
    d_idem->add_option("--morphism", morphism_arg, "Morphism JSON file ('-' = stdin)")->required();

    CLI::App* keylemma = app.add_subcommand("keylemma", "Coevaluation nilpotency machinery");
    keylemma->require_subcommand(1);
    auto* k_delta = keylemma->add_subcommand("delta", "delta^n in Sym(M) (x) Sym(M*)");
    k_delta->add_option("--dim", dim_text)->required();
    k_delta->add_option("--n", n)->required();
    auto* k_inv = keylemma->add_subcommand("inverse", "Geometric inverse of 1 - delta");
    k_inv->add_option("--dim", dim_text)->required();
    k_inv->add_option("--guard", guard, "Highest power to test");
    auto* k_hook = keylemma->add_subcommand("hooklemma", "Row/column escape for partitions of k");
    k_hook->add_option("--m", hook_m)->required();
    k_hook->add_option("--n", hook_n)->required();
    k_hook->add_option("--k", hook_k)->required();

    CLI::App* selftest = app.add_subcommand("selftest", "Run the acceptance criteria");
    selftest->add_option("--filter", filter, "Run only criteria whose name contains this text");

    // Let global flags (--format, --cache, --seed) appear after the subcommand.
    for (CLI::App* sub : {partition, schur, diagram, keylemma, selftest}) {
        sub->fallthrough();
        for (CLI::App* nested : sub->get_subcommands([](const CLI::App*) { return true; }))
            nested->fallthrough();
    }

    // Callbacks run once the whole command line is parsed.
    auto with_format = [&st, &format_text](std::function<void()> fn) {
        return [&st, &format_text, fn = std::move(fn)] {
            st.format = format_text == "json" ? Format::json
                        : format_text == "tsv" ? Format::tsv
                                               : Format::text;
            fn();
        };
    };

    p_dim->callback(with_format([&] { cmd_partition_dim(st, lambda_text); }));
    p_conj->callback(with_format([&] { cmd_partition_conj(st, lambda_text); }));
    p_char->callback(with_format([&] { cmd_partition_char(st, lambda_text, rho_text); }));
    p_lr->callback(with_format([&] { cmd_partition_lr(st, lambda_text, mu_text, nu_text); }));
    s_dim->callback(with_format([&] { cmd_schur_dim(st, lambda_text, dim_text); }));
    s_van->callback(with_format([&] { cmd_schur_vanishes(st, lambda_text, dim_text); }));
    s_dec->callback(with_format([&] { cmd_schur_decompose(st, dim_text, n); }));
    s_len->callback(with_format([&] { cmd_schur_length(st, dim_text, n_max); }));
    d_hom->callback(with_format([&] { cmd_diagram_hom(st, bottom, top, bottom_signs, top_signs); }));
    d_comp->callback(with_format([&] { cmd_diagram_compose(st, g_arg, f_arg); }));
    d_trace->callback(with_format([&] { cmd_diagram_trace(st, identity_size, morphism_arg); }));
    d_schur->callback(with_format([&] { cmd_diagram_schurdim(st, lambda_text, kind_text); }));
    d_gram->callback(with_format([&] { cmd_diagram_gram(st, gram_k); }));
    d_idem->callback(with_format([&] { cmd_diagram_idem(st, morphism_arg); }));
    k_delta->callback(with_format([&] { cmd_keylemma_delta(st, dim_text, n); }));
    k_inv->callback(with_format([&] { cmd_keylemma_inverse(st, dim_text, guard); }));
    k_hook->callback(with_format([&] { cmd_keylemma_hooklemma(st, hook_m, hook_n, hook_k); }));
    selftest->callback(with_format([&] { defer(cmd_selftest(st, filter)); }));

    try {
        // CLI11's vector overload expects the arguments reversed.
        app.parse(std::vector<std::string>(args.rbegin(), args.rend()));
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e, out, err);
        return code == 0 ? 0 : 2;
    } catch (const std::invalid_argument& e) {
        err << "usage error: " << e.what() << '\n';
        return 2;
    } catch (const nlohmann::json::exception& e) {
        err << "usage error: " << e.what() << '\n';
        return 2;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << '\n';
        return 1;
    }
    return rc;
}

}  // namespace tc
