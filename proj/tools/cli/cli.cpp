#include "cli.hpp"

#include "hurwitz/cutjoin.hpp"
#include "hurwitz/json_io.hpp"
#include "hurwitz/oracle.hpp"
#include "hurwitz/spectral.hpp"
#include "hurwitz/surfaces.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <functional>
#include <optional>
#include <random>
#include <sstream>

namespace hurwitz::cli {

using nlohmann::json;

namespace {

const std::vector<std::string> kKeys{"budget", "g_max", "n_max", "m_max", "threads", "output"};

std::string trim(const std::string& s) {
    const auto b = s.find_first_not_of(" \t\r");
    if (b == std::string::npos) return {};
    return s.substr(b, s.find_last_not_of(" \t\r") - b + 1);
}

std::uint64_t parse_positive(const std::string& key, const std::string& v) {
    std::size_t used = 0;
    unsigned long long x = 0;
    try {
        x = std::stoull(v, &used);
    } catch (const std::exception&) {
        throw std::invalid_argument(key + ": expected a positive integer, got '" + v + "'");
    }
    if (used != v.size() || x == 0 || v.front() == '-')
        throw std::invalid_argument(key + ": expected a positive integer, got '" + v + "'");
    return x;
}

void apply(RunConfig& cfg, const std::map<std::string, std::string>& layer) {
    for (const auto& [k, v] : layer) {
        if (k == "budget") cfg.budget = parse_positive(k, v);
        else if (k == "g_max") cfg.g_max = static_cast<int>(parse_positive(k, v));
        else if (k == "n_max") cfg.n_max = static_cast<int>(parse_positive(k, v));
        else if (k == "m_max") cfg.m_max = static_cast<int>(parse_positive(k, v));
        else if (k == "threads") cfg.threads = static_cast<unsigned>(parse_positive(k, v));
        else if (k == "output") {
            if (v != "text" && v != "json") throw std::invalid_argument("output: expected text or json, got '" + v + "'");
            cfg.output = v;
        } else {
            throw std::invalid_argument("unknown setting '" + k + "'");
        }
    }
}

struct BudgetRefusal : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Everything a subcommand may read, filled by CLI11 before the handler runs.
struct Options {
    int n = 0;
    int g = 0;
    std::string lambda;
    std::string graph_file;
    std::string edges;
    std::string config_file;
    std::string cache_dir;
    std::string method = "auto";
    std::string normalization = "plain";
    std::uint64_t seed = 20240611;
    int trials = 100;
    int max_edges = 5;
    bool exhaustive = false;
    bool collect_graphs = false;
    bool full_series = false;
    bool fail_on_counterexample = false;
    std::map<std::string, std::string> flag_settings;
};

class Runner {
public:
    Runner(const Options& o, const RunConfig& cfg, std::ostream& out) : o_(o), cfg_(cfg), out_(out) {}

    bool json_output() const { return cfg_.output == "json"; }

    OracleOptions oracle() const {
        OracleOptions opts;
        opts.budget = cfg_.budget;
        opts.threads = cfg_.threads;
        return opts;
    }

    void emit(const json& j) { out_ << j.dump(2) << '\n'; }

    std::optional<CycleType> lambda() const {
        if (o_.lambda.empty()) return std::nullopt;
        return parse_cycle_type(o_.lambda);
    }

    WPolynomial oracle_poly() {
        auto lam = lambda();
        std::filesystem::path cached;
        if (!o_.cache_dir.empty()) {
            std::string key = lam ? "lambda_" + lam->to_string() : "n" + std::to_string(o_.n);
            for (char& c : key)
                if (c == ',') c = '_';
            cached = std::filesystem::path(o_.cache_dir) / ("P_" + key + "_g" + std::to_string(o_.g) + ".json");
            if (std::ifstream in(cached); in) {
                std::stringstream buf;
                buf << in.rdbuf();
                return wpolynomial_from_json(buf.str());
            }
        }
        WPolynomial p = lam ? hurwitz_poly_lambda(*lam, o_.g, oracle()) : hurwitz_poly(o_.n, o_.g, oracle());
        if (!cached.empty()) {
            std::filesystem::create_directories(cached.parent_path());
            std::ofstream(cached) << to_json(p) << '\n';
        }
        return p;
    }

    MultiGraph graph() const {
        if (!o_.edges.empty()) return MultiGraph::parse(o_.edges);
        std::ifstream in(o_.graph_file);
        if (!in) throw std::invalid_argument("cannot read graph file '" + o_.graph_file + "'");
        std::stringstream buf;
        buf << in.rdbuf();
        return MultiGraph::parse(buf.str());
    }

    void print_poly(const WPolynomial& p) {
        if (json_output()) emit(json::parse(to_json(p)));
        else out_ << p.to_string() << '\n';
    }

    void print_series(const GraphSeries& s) {
        if (json_output()) {
            emit(json::parse(to_json(s)));
            return;
        }
        for (const auto& [c, coef] : s) out_ << to_string(coef) << "  " << c.to_string() << '\n';
    }

    int hurwitz_poly_cmd() {
        require_n_or_lambda();
        print_poly(oracle_poly());
        return kOk;
    }

    int hurwitz_number_cmd() {
        require_n_or_lambda();
        auto lam = lambda();
        const int n = lam ? lam->size() : o_.n;
        Rational h = oracle_poly().evaluate_at(1) / Rational(factorial(static_cast<unsigned>(n)));
        if (json_output()) emit({{"n", n}, {"g", o_.g}, {"lambda", lam ? lam->to_string() : ""}, {"h", to_string(h)}});
        else out_ << to_string(h) << '\n';
        return kOk;
    }

    int tree_poly_cmd() {
        require_n();
        TreeMethod m = TreeMethod::automatic;
        if (o_.method == "kirchhoff") m = TreeMethod::kirchhoff;
        else if (o_.method == "pruefer") m = TreeMethod::pruefer;
        print_poly(tree_poly(o_.n, m));
        return kOk;
    }

    int rgn_cmd() {
        require_n();
        WPolynomial p = o_.full_series ? R_part(o_.g, o_.n) : r_part(o_.g, o_.n);
        if (o_.collect_graphs) print_series(collect(p));
        else print_poly(p);
        return kOk;
    }

    int verify_div_cmd() {
        require_n();
        auto rep = verify_div(o_.g, o_.n, oracle());
        if (json_output()) {
            emit({{"n", o_.n}, {"g", o_.g}, {"equal", rep.equal}, {"difference", json::parse(to_json(rep.difference))}});
        } else if (rep.equal) {
            out_ << "P_{" << o_.g << "," << o_.n << "} = " << o_.n + 2 * o_.g - 1 << "! T_n R_{g,n}: equal\n";
        } else {
            out_ << "mismatch, enumerated - closed form = " << rep.difference.to_string() << '\n';
        }
        return rep.equal ? kOk : kVerificationFailed;
    }

    int hurwitz_closed_cmd() {
        require_n();
        Rational h = hurwitz_closed(o_.g, o_.n);
        Rational r = rho(o_.g, o_.n);
        if (json_output()) emit({{"n", o_.n}, {"g", o_.g}, {"rho", to_string(r)}, {"h", to_string(h)}});
        else out_ << "rho = " << to_string(r) << "\nh = " << to_string(h) << '\n';
        return kOk;
    }

    int embeddings_cmd() {
        auto g = graph();
        auto c = embedding_census(g, cfg_.budget);
        json by = json::object();
        for (std::size_t f = 0; f < c.by_faces.size(); ++f)
            if (c.by_faces[f] != 0) by[std::to_string(f)] = c.by_faces[f].get_str();
        if (json_output()) {
            emit({{"emb", c.total.get_str()}, {"one_faced", c.one_faced.get_str()}, {"by_faces", by}});
        } else {
            out_ << "embeddings: " << c.total.get_str() << "\none-faced: " << c.one_faced.get_str() << '\n';
            for (const auto& [f, k] : by.items()) out_ << "  " << f << " faces: " << k.get<std::string>() << '\n';
        }
        return kOk;
    }

    int decorations_cmd() {
        auto g = graph();
        auto ds = decorations(g);
        Rational sum = 0;
        for (const auto& d : ds) sum += d.weight;
        if (json_output()) {
            json list = json::array();
            for (const auto& d : ds) {
                json chosen = json::object();
                for (std::size_t x = 1; x < d.chosen.size(); ++x)
                    if (!d.chosen[x].empty()) chosen[std::to_string(x)] = d.chosen[x];
                list.push_back({{"chosen", chosen}, {"weight", to_string(d.weight)}});
            }
            emit({{"count", ds.size()}, {"sum", to_string(sum)}, {"decorations", list}});
        } else {
            for (const auto& d : ds) {
                for (std::size_t x = 1; x < d.chosen.size(); ++x) {
                    if (d.chosen[x].empty()) continue;
                    out_ << "v" << x << ":{";
                    for (std::size_t k = 0; k < d.chosen[x].size(); ++k) out_ << (k ? "," : "") << d.chosen[x][k];
                    out_ << "} ";
                }
                out_ << "weight " << to_string(d.weight) << '\n';
            }
            out_ << ds.size() << " decorations, sum " << to_string(sum) << '\n';
        }
        return kOk;
    }

    int verify_spiders_cmd() {
        if (!o_.exhaustive) {
            auto rep = verify_spiders(graph(), cfg_.budget);
            if (json_output()) {
                emit({{"emb", rep.emb.get_str()},
                      {"one_faced", rep.one_faced.get_str()},
                      {"decoration_sum", to_string(rep.decoration_sum)},
                      {"check", rep.check}});
            } else {
                out_ << to_string(rep.decoration_sum) << " × " << rep.emb.get_str() << " = "
                     << Rational(rep.decoration_sum * Rational(rep.emb)).get_str() << ", one-faced "
                     << rep.one_faced.get_str() << (rep.check ? ": ok" : ": MISMATCH") << '\n';
            }
            return rep.check ? kOk : kVerificationFailed;
        }
        std::size_t checked = 0;
        json failures = json::array();
        for (const auto& g : connected_multigraphs(o_.max_edges, true)) {
            const int b = g.betti1();
            if (b < 2 || b % 2) continue;
            auto rep = verify_spiders(g, cfg_.budget);
            ++checked;
            if (!rep.check) failures.push_back(g.to_string());
        }
        if (json_output()) emit({{"max_edges", o_.max_edges}, {"graphs", checked}, {"failures", failures}});
        else {
            out_ << checked << " graphs checked, " << failures.size() << " failures\n";
            for (const auto& f : failures) out_ << "  " << f.get<std::string>() << '\n';
        }
        return failures.empty() ? kOk : kVerificationFailed;
    }

    int verify_cutjoin_cmd() {
        PNormalization norm = PNormalization::plain;
        if (o_.normalization == "aut") norm = PNormalization::aut;
        else if (o_.normalization != "plain") throw CLI::ValidationError("--normalization", "expected plain or aut");
        auto rep = verify_cutjoin(cfg_.n_max, cfg_.m_max, oracle(), norm);
        if (json_output()) {
            json j{{"n_max", cfg_.n_max},
                   {"m_max", cfg_.m_max},
                   {"equal", rep.equal},
                   {"blocks_checked", rep.blocks_checked},
                   {"terms_compared", rep.terms_compared}};
            if (rep.first_difference) {
                const auto& d = *rep.first_difference;
                j["first_difference"] = {{"n", d.n}, {"m", d.m}, {"term", to_string(d.term)},
                                         {"lhs", to_string(d.lhs)}, {"rhs", to_string(d.rhs)}};
            }
            emit(j);
        } else {
            out_ << rep.blocks_checked << " blocks, " << rep.terms_compared << " terms: "
                 << (rep.equal ? "equal" : "MISMATCH") << '\n';
            if (rep.first_difference) {
                const auto& d = *rep.first_difference;
                out_ << "  block (" << d.n << "," << d.m << ") " << to_string(d.term) << ": lhs " << to_string(d.lhs)
                     << ", rhs " << to_string(d.rhs) << '\n';
            }
        }
        return rep.equal ? kOk : kVerificationFailed;
    }

    int sumsign_cmd() {
        require_n();
        WPolynomial exact = oracle_poly();
        std::mt19937_64 rng(o_.seed);
        std::uniform_int_distribution<int> digit(1, 9);
        double worst = 0, worst_kirchhoff = 0;
        bool warned = false;
        for (int t = 0; t < o_.trials; ++t) {
            std::map<EdgeVar, Rational> w;
            for (int i = 1; i <= o_.n; ++i)
                for (int j = i + 1; j <= o_.n; ++j) w[EdgeVar(i, j)] = ratio(digit(rng), digit(rng));
            auto rep = eval_sumsign(o_.g, o_.n, [&](EdgeVar e) { return w.at(e); }, exact);
            worst = std::max(worst, rep.relative_error);
            worst_kirchhoff = std::max(worst_kirchhoff, rep.kirchhoff_relative_error);
            warned = warned || rep.multiplicity_warning;
        }
        const bool ok = worst < 1e-8 && worst_kirchhoff < 1e-8;
        if (json_output()) {
            emit({{"n", o_.n}, {"g", o_.g}, {"trials", o_.trials}, {"seed", o_.seed},
                  {"max_relative_error", worst}, {"max_kirchhoff_error", worst_kirchhoff},
                  {"multiplicity_warning", warned}, {"ok", ok}});
        } else {
            out_ << o_.trials << " trials, max relative error " << worst << ", sigma product vs n T_n "
                 << worst_kirchhoff << (warned ? " (multiplicity warning)" : "") << (ok ? "" : " FAILED") << '\n';
        }
        return ok ? kOk : kVerificationFailed;
    }

    int positivity_scan_cmd() {
        json nonpositive = json::array();
        std::size_t coefficients = 0;
        for (int g = 1; g <= cfg_.g_max; ++g)
            for (int n = 2; n <= cfg_.n_max; ++n)
                for (const auto& [c, coef] : collect(R_part(g, n))) {
                    ++coefficients;
                    if (coef <= 0)
                        nonpositive.push_back({{"g", g}, {"n", n}, {"graph", c.to_string()}, {"coeff", to_string(coef)}});
                }
        if (json_output()) {
            emit({{"g_max", cfg_.g_max}, {"n_max", cfg_.n_max}, {"coefficients", coefficients},
                  {"nonpositive", nonpositive}});
        } else {
            out_ << coefficients << " coefficients scanned (g <= " << cfg_.g_max << ", n <= " << cfg_.n_max << "), "
                 << nonpositive.size() << " not positive\n";
            for (const auto& e : nonpositive)
                out_ << "  g=" << e["g"] << " n=" << e["n"] << " " << e["graph"].get<std::string>() << " "
                     << e["coeff"].get<std::string>() << '\n';
        }
        return nonpositive.empty() || !o_.fail_on_counterexample ? kOk : kVerificationFailed;
    }

private:
    void require_n() const {
        if (o_.n < 1) throw CLI::ValidationError("--n", "a positive --n is required");
    }
    void require_n_or_lambda() const {
        if (o_.lambda.empty()) require_n();
    }

    const Options& o_;
    const RunConfig& cfg_;
    std::ostream& out_;
};

}  // namespace

std::map<std::string, std::string> parse_config_text(const std::string& text) {
    std::map<std::string, std::string> out;
    std::istringstream in(text);
    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
        line = trim(line);
        if (line.empty()) continue;
        auto eq = line.find('=');
        if (eq == std::string::npos) throw std::invalid_argument("config line " + std::to_string(lineno) + ": expected key=value");
        std::string key = trim(line.substr(0, eq)), value = trim(line.substr(eq + 1));
        if (value.size() >= 2 && value.front() == '"' && value.back() == '"') value = value.substr(1, value.size() - 2);
        if (std::find(kKeys.begin(), kKeys.end(), key) == kKeys.end())
            throw std::invalid_argument("config line " + std::to_string(lineno) + ": unknown key '" + key + "'");
        out[key] = value;
    }
    return out;
}

RunConfig resolve_config(const std::map<std::string, std::string>& file, const std::map<std::string, std::string>& env,
                         const std::map<std::string, std::string>& flags) {
    RunConfig cfg;
    apply(cfg, file);
    apply(cfg, env);
    apply(cfg, flags);
    return cfg;
}

std::map<std::string, std::string> environment_settings() {
    std::map<std::string, std::string> out;
    for (const auto& key : kKeys) {
        std::string var = "HF_";
        for (char c : key) var += static_cast<char>(std::toupper(static_cast<unsigned char>(c)));
        if (const char* v = std::getenv(var.c_str())) out[key] = v;
    }
    return out;
}

int dispatch(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Hurwitz polynomials: enumeration, closed forms, embedded graphs, cut-and-join"};
    app.require_subcommand(1);
    Options o;

    auto settings = [&](CLI::App* sub) {
        sub->add_option("--config", o.config_file, "key=value settings file");
        sub->add_option("--format", o.flag_settings["output"], "text or json");
        sub->add_option("--budget", o.flag_settings["budget"], "maximum enumeration leaves");
        sub->add_option("--threads", o.flag_settings["threads"], "worker threads");
    };
    auto ng = [&](CLI::App* sub) {
        sub->add_option("--n", o.n, "number of sheets");
        sub->add_option("--g", o.g, "genus");
    };
    auto graph_input = [&](CLI::App* sub) {
        sub->add_option("--graph", o.graph_file, "graph file, e.g. 1-2;1-2;1-2");
        sub->add_option("--edges", o.edges, "graph given inline");
    };

    std::map<std::string, std::function<int(Runner&)>> handlers;
    auto add = [&](const std::string& name, const std::string& help, std::function<int(Runner&)> fn) {
        CLI::App* sub = app.add_subcommand(name, help);
        settings(sub);
        handlers[name] = std::move(fn);
        return sub;
    };

    auto* hp = add("hurwitz-poly", "enumerate P_{g,n} or P_{g,lambda}", &Runner::hurwitz_poly_cmd);
    ng(hp);
    hp->add_option("--lambda", o.lambda, "target cycle type, e.g. 2,1,1");
    hp->add_option("--cache", o.cache_dir, "directory memoizing enumerated polynomials");
    auto* hn = add("hurwitz-number", "h_{g,n} = P(1)/n! by enumeration", &Runner::hurwitz_number_cmd);
    ng(hn);
    hn->add_option("--lambda", o.lambda, "target cycle type");
    hn->add_option("--cache", o.cache_dir, "directory memoizing enumerated polynomials");
    auto* tp = add("tree-poly", "T_n", &Runner::tree_poly_cmd);
    tp->add_option("--n", o.n, "number of vertices");
    tp->add_option("--method", o.method, "auto, kirchhoff or pruefer");
    auto* rg = add("rgn", "r_{g,n} (or R_{g,n} with --full)", &Runner::rgn_cmd);
    ng(rg);
    rg->add_flag("--collect", o.collect_graphs, "print in the graph basis");
    rg->add_flag("--full", o.full_series, "R_{g,n} instead of r_{g,n}");
    ng(add("verify-div", "compare P_{g,n} with (n+2g-1)! T_n R_{g,n}", &Runner::verify_div_cmd));
    ng(add("hurwitz-closed", "closed-form h_{g,n}", &Runner::hurwitz_closed_cmd));
    graph_input(add("embeddings", "rotation-system census of a graph", &Runner::embeddings_cmd));
    graph_input(add("decorations", "decorations of a graph and their weights", &Runner::decorations_cmd));
    auto* vs = add("verify-spiders", "decoration sum x Emb = one-faced embeddings", &Runner::verify_spiders_cmd);
    graph_input(vs);
    vs->add_flag("--exhaustive", o.exhaustive, "all connected multigraphs up to --max-edges");
    vs->add_option("--max-edges", o.max_edges, "edge bound for --exhaustive");
    auto* cj = add("verify-cutjoin", "check the cut-and-join equation on a truncation", &Runner::verify_cutjoin_cmd);
    cj->add_option("--n-max", o.flag_settings["n_max"], "p-weight bound");
    cj->add_option("--m-max", o.flag_settings["m_max"], "w-degree bound");
    cj->add_option("--report", o.flag_settings["output"], "text or json");
    cj->add_option("--normalization", o.normalization, "plain or aut");
    auto* ss = add("sumsign", "eigenvalue formula against the exact polynomial", &Runner::sumsign_cmd);
    ng(ss);
    ss->add_option("--seed", o.seed, "random seed");
    ss->add_option("--trials", o.trials, "number of random weight assignments");
    auto* ps = add("positivity-scan", "signs of the collected R_g coefficients", &Runner::positivity_scan_cmd);
    ps->add_option("--g-max", o.flag_settings["g_max"], "genus bound");
    ps->add_option("--n-max", o.flag_settings["n_max"], "vertex bound");
    ps->add_flag("--fail-on-counterexample", o.fail_on_counterexample, "exit 1 if a coefficient is not positive");

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e, out, err);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e, out, err);
    } catch (const CLI::ParseError& e) {
        app.exit(e, err, err);
        return kUsage;
    }

    try {
        std::map<std::string, std::string> flags;
        for (const auto& [k, v] : o.flag_settings)
            if (!v.empty()) flags[k] = v;
        std::map<std::string, std::string> file;
        if (!o.config_file.empty()) {
            std::ifstream in(o.config_file);
            if (!in) throw std::invalid_argument("cannot read config file '" + o.config_file + "'");
            std::stringstream buf;
            buf << in.rdbuf();
            file = parse_config_text(buf.str());
        }
        RunConfig cfg = resolve_config(file, environment_settings(), flags);
        Runner runner(o, cfg, out);
        return handlers.at(app.get_subcommands().front()->get_name())(runner);
    } catch (const BudgetExceeded& e) {
        err << "refused: " << e.what() << '\n';
        return kBudgetRefused;
    } catch (const EnumerationBudgetExceeded& e) {
        err << "refused: " << e.what() << '\n';
        return kBudgetRefused;
    } catch (const CLI::ValidationError& e) {
        err << e.what() << '\n';
        return kUsage;
    } catch (const std::invalid_argument& e) {
        err << "error: " << e.what() << '\n';
        return kUsage;
    }
}

}  // namespace hurwitz::cli
