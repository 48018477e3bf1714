#include "cli.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <cmath>
#include <filesystem>
#include <fstream>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "autopos/chow.hpp"
#include "autopos/hyperbolicity.hpp"
#include "autopos/plethysm_cache.hpp"
#include "autopos/positivity.hpp"
#include "autopos/rootdata.hpp"
#include "autopos/symfunc.hpp"

namespace autopos::cli {

namespace {

using Json = nlohmann::ordered_json;

constexpr int max_g = 8;
constexpr int max_degree = 40;
constexpr int progress_degree = 24;
constexpr double max_region_points = 2e6;

struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct RunConfig {
    std::string format = "text";
    int g = 2;
    std::string p_text;
    std::string lambda_text;
    std::string mu_text;
    std::string weight_text;
    std::string partition_text;
    std::string box_text = "-44:5";
    std::string out_dir = ".";
    std::string cache_dir;
    std::string fixture_path;
    int k = 0;
    int max_height = 0;
    int g_max = 6;
    unsigned threads = 0;
    bool stats = false;
    bool explain = false;
    bool unsafe_large = false;
};

std::int64_t parse_int(const std::string& text, const char* what) {
    std::size_t used = 0;
    std::int64_t v = 0;
    try {
        v = std::stoll(text, &used);
    } catch (const std::exception&) {
        throw UsageError(std::string("invalid ") + what + ": '" + text + "'");
    }
    if (used != text.size()) throw UsageError(std::string("invalid ") + what + ": '" + text + "'");
    return v;
}

std::int64_t parse_prime(const std::string& text) {
    if (text.empty()) throw UsageError("--p is required");
    return parse_int(text, "prime");
}

std::vector<std::int64_t> parse_prime_list(const std::string& text) {
    std::vector<std::int64_t> out;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) out.push_back(parse_int(item, "prime"));
    if (out.empty()) throw UsageError("empty prime list");
    return out;
}

Partition parse_partition(const std::string& text) {
    try {
        return Partition::parse(text);
    } catch (const std::invalid_argument& e) {
        throw UsageError(e.what());
    }
}

Weight parse_weight(const std::string& text) {
    try {
        return Weight::parse(text);
    } catch (const std::invalid_argument& e) {
        throw UsageError(e.what());
    }
}

RegionBox parse_box(const std::string& text) {
    auto colon = text.find(':');
    if (colon == std::string::npos) throw UsageError("--box expects lo:hi");
    RegionBox box;
    box.lo = parse_int(text.substr(0, colon), "box bound");
    box.hi = parse_int(text.substr(colon + 1), "box bound");
    if (box.lo > box.hi) throw UsageError("--box lower bound exceeds upper bound");
    return box;
}

void check_g(int g) {
    if (g < 1 || g > max_g) throw UsageError("--g must lie in 1.." + std::to_string(max_g));
}

void require_prime(std::int64_t p) {
    if (!is_prime(p)) throw std::invalid_argument(std::to_string(p) + " is not prime");
}

std::optional<PlethysmCache> open_cache(const std::string& flag) {
    if (!flag.empty()) return PlethysmCache(flag);
    if (auto dir = PlethysmCache::directory_from_env()) return PlethysmCache(*dir);
    return std::nullopt;
}

std::function<void(std::size_t, std::size_t)> progress_printer(std::ostream& err, const std::string& label) {
    auto last = std::make_shared<std::size_t>(static_cast<std::size_t>(-1));
    return [&err, label, last](std::size_t done, std::size_t total) {
        std::size_t pct = total ? done * 100 / total : 100;
        if (pct == *last) return;
        *last = pct;
        err << label << ": block " << done << "/" << total << " (" << pct << "%)\n";
        err.flush();
    };
}

Json big_json(const BigInt& v) {
    if (v.fits_slong_p()) return Json(static_cast<std::int64_t>(v.get_si()));
    return Json(v.get_str());
}

Json weight_json(const Weight& w) { return Json(w.coords()); }
Json partition_json(const Partition& p) { return Json(p.vec()); }

Json certificate_json(const AmpleCertificate& c) {
    Json j;
    j["weight"] = weight_json(c.weight);
    j["route"] = to_string(c.route);
    j["min_prime"] = c.min_prime ? Json(*c.min_prime) : Json(nullptr);
    j["orbit_ratio"] = c.orbit_ratio ? Json(to_string(*c.orbit_ratio)) : Json(nullptr);
    j["z_empty_ok"] = c.z_empty_ok;
    j["notes"] = c.notes;
    return j;
}

std::string yes_no(bool b) { return b ? "yes" : "no"; }

std::vector<std::string> explain_certificate(const Weight& lambda, std::int64_t p) {
    std::vector<std::string> lines;
    const int g = lambda.rank();
    const Weight rho2 = rho_L_doubled(g);
    const Weight gamma = shifted_weight(lambda);
    lines.push_back("gamma = 2*" + lambda.to_string() + " + " + rho2.to_string() + " = " + gamma.to_string());
    if (lambda.is_parallel() && g > 0 && lambda[0] < 0) {
        lines.push_back("parallel: lambda = " + std::to_string(lambda[0]) + "*(1,...,1) with " +
                        std::to_string(lambda[0]) + " < 0");
    }
    bool z_ok = true;
    std::string levi;
    for (int i = 0; i + 1 < g; ++i) {
        auto d = gamma[i] - gamma[i + 1];
        z_ok = z_ok && d > 0;
        if (!levi.empty()) levi += ", ";
        levi += "g" + std::to_string(i + 1) + "-g" + std::to_string(i + 2) + "=" + std::to_string(d);
    }
    std::string outer;
    for (int i = 0; i < g; ++i) {
        z_ok = z_ok && gamma[i] < 0;
        if (!outer.empty()) outer += ", ";
        outer += "g" + std::to_string(i + 1) + "=" + std::to_string(gamma[i]);
    }
    for (int i = 0; i < g; ++i) {
        for (int j = i + 1; j < g; ++j) {
            auto s = gamma[i] + gamma[j];
            z_ok = z_ok && s < 0;
            outer += ", g" + std::to_string(i + 1) + "+g" + std::to_string(j + 1) + "=" + std::to_string(s);
        }
    }
    lines.push_back("Z_empty-ample: " + yes_no(z_ok) + " (need > 0: " + (levi.empty() ? "none" : levi) +
                    "; need < 0: " + outer + ")");
    const RootDatumC datum(g);
    if (auto ratio = orbit_ratio_max(gamma, datum)) {
        lines.push_back("orbit ratio " + to_string(*ratio) + " <= p-1 = " + std::to_string(p - 1) + ": " +
                        yes_no(*ratio <= Rational(p - 1)));
    } else {
        lines.push_back("orbit ratio undefined (gamma = 0)");
    }
    if (g > 0 && lambda[0] <= -1) {
        const auto bound = tensor_power_bound(lambda);
        lines.push_back("tensor bound (g+1)|lambda_g|+g = " + std::to_string(g + 1) + "*" +
                        std::to_string(std::llabs(lambda.coords().back())) + "+" + std::to_string(g) + " = " +
                        std::to_string(bound) + " <= p = " + std::to_string(p) + ": " + yes_no(bound <= p));
    } else {
        lines.push_back("tensor bound: not applicable (lambda_1 = " + std::to_string(g > 0 ? lambda[0] : 0) +
                        " > -1)");
    }
    return lines;
}

void emit_json(std::ostream& out, const Json& j) { out << j.dump(2) << "\n"; }

int cmd_plethysm(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
    const Partition lambda = parse_partition(cfg.lambda_text);
    const Partition mu = parse_partition(cfg.mu_text);
    const int degree = lambda.size() * mu.size();
    if (degree > max_degree && !cfg.unsafe_large) {
        throw UsageError("degree " + std::to_string(degree) + " exceeds " + std::to_string(max_degree) +
                         "; pass --unsafe-large to proceed");
    }
    if (cfg.max_height < 0) throw UsageError("--max-height must be nonnegative");
    PlethysmOptions options;
    options.max_height = cfg.max_height;
    options.threads = cfg.threads;
    if (degree >= progress_degree) options.progress = progress_printer(err, "plethysm");
    auto cache = open_cache(cfg.cache_dir);
    const Decomposition result = cached_plethysm(lambda, mu, options, cache ? &*cache : nullptr);
    const DecompositionStats st = stats(result);

    if (cfg.format == "json") {
        Json j;
        j["command"] = "plethysm";
        j["lambda"] = partition_json(lambda);
        j["mu"] = partition_json(mu);
        j["max_height"] = cfg.max_height > 0 ? Json(cfg.max_height) : Json(nullptr);
        Json rows = Json::array();
        for (const auto& c : result) rows.push_back({{"partition", partition_json(c.shape)}, {"multiplicity", c.multiplicity}});
        j["constituents"] = rows;
        j["stats"] = {{"partitions", st.distinct}, {"max_multiplicity", st.max_multiplicity}, {"total", big_json(st.total)}};
        emit_json(out, j);
    } else if (cfg.format == "csv") {
        if (cfg.stats) {
            out << "partitions,max_mult,total\n" << st.distinct << "," << st.max_multiplicity << "," << st.total << "\n";
        } else {
            out << "partition,multiplicity\n";
            for (const auto& c : result) out << "\"" << c.shape.to_string() << "\"," << c.multiplicity << "\n";
        }
    } else if (cfg.stats) {
        out << "partitions=" << st.distinct << " max_mult=" << st.max_multiplicity << " total=" << st.total << "\n";
    } else {
        for (const auto& c : result) out << c.shape.to_string() << " " << c.multiplicity << "\n";
    }
    return ok;
}

int cmd_lambda_sym2(const RunConfig& cfg, std::ostream& out) {
    check_g(cfg.g);
    if (cfg.k < 1) throw UsageError("--k must be positive");
    if (2 * cfg.k > max_degree && !cfg.unsafe_large) {
        throw UsageError("degree " + std::to_string(2 * cfg.k) + " exceeds " + std::to_string(max_degree) +
                         "; pass --unsafe-large to proceed");
    }
    const auto terms = lambda_k_sym2_terms(cfg.k, cfg.g);
    if (cfg.format == "json") {
        Json j;
        j["command"] = "lambda-sym2";
        j["k"] = cfg.k;
        j["g"] = cfg.g;
        Json rows = Json::array();
        for (const auto& [strict, shape] : terms) {
            rows.push_back({{"strict", partition_json(strict)},
                            {"partition", partition_json(shape)},
                            {"multiplicity", 1},
                            {"weight", weight_json(automorphic_weight(shape, cfg.g))}});
        }
        j["constituents"] = rows;
        emit_json(out, j);
    } else if (cfg.format == "csv") {
        out << "strict,partition,weight\n";
        for (const auto& [strict, shape] : terms) {
            out << "\"" << strict.to_string() << "\",\"" << shape.to_string() << "\",\""
                << automorphic_weight(shape, cfg.g).to_string() << "\"\n";
        }
    } else {
        for (const auto& [strict, shape] : terms) {
            out << "2" << strict.to_string() << " = " << shape.to_string()
                << " weight=" << automorphic_weight(shape, cfg.g).to_string() << "\n";
        }
    }
    return ok;
}

Weight weight_for_g(const RunConfig& cfg) {
    check_g(cfg.g);
    if (cfg.weight_text.empty()) throw UsageError("--weight is required");
    const Weight w = parse_weight(cfg.weight_text);
    if (w.rank() != cfg.g) {
        throw UsageError("weight " + w.to_string() + " does not have " + std::to_string(cfg.g) + " entries");
    }
    return w;
}

int cmd_certify(const RunConfig& cfg, std::ostream& out) {
    const Weight w = weight_for_g(cfg);
    const std::int64_t p = parse_prime(cfg.p_text);
    const AmpleCertificate cert = certify(w, p, RootDatumC(cfg.g));
    if (cfg.format == "json") {
        Json j;
        j["command"] = "certify";
        j["g"] = cfg.g;
        j["p"] = p;
        j["certificate"] = certificate_json(cert);
        if (cfg.explain) j["explain"] = explain_certificate(w, p);
        emit_json(out, j);
    } else {
        out << "weight=" << w.to_string() << " p=" << p << " route=" << to_string(cert.route);
        out << " min_prime=" << (cert.min_prime ? std::to_string(*cert.min_prime) : "none") << "\n";
        if (cfg.explain) {
            for (const auto& line : explain_certificate(w, p)) out << "  " << line << "\n";
            if (!cert.notes.empty()) out << "  notes: " << cert.notes << "\n";
        }
    }
    return cert.route == Route::none ? negative_verdict : ok;
}

int cmd_min_prime(const RunConfig& cfg, std::ostream& out) {
    const Weight w = weight_for_g(cfg);
    const auto p = min_certifying_prime(w, RootDatumC(cfg.g));
    if (cfg.format == "json") {
        Json j;
        j["command"] = "min-prime";
        j["g"] = cfg.g;
        j["weight"] = weight_json(w);
        j["min_prime"] = p ? Json(*p) : Json(nullptr);
        emit_json(out, j);
    } else {
        out << "weight=" << w.to_string() << " min_prime=" << (p ? std::to_string(*p) : "none") << "\n";
    }
    return p ? ok : negative_verdict;
}

int cmd_figure1(const RunConfig& cfg, std::ostream& out) {
    check_g(cfg.g);
    const RegionBox box = parse_box(cfg.box_text);
    const auto primes = parse_prime_list(cfg.p_text.empty() ? "5,11,31" : cfg.p_text);
    for (auto p : primes) require_prime(p);
    const double side = static_cast<double>(box.hi - box.lo + 1);
    if (std::pow(side, cfg.g) > max_region_points && !cfg.unsafe_large) {
        throw UsageError("box has too many points for g=" + std::to_string(cfg.g) + "; pass --unsafe-large to proceed");
    }
    const std::filesystem::path dir(cfg.out_dir);
    std::filesystem::create_directories(dir);
    Json files = Json::array();
    for (auto p : primes) {
        const RegionScan scan = region_scan(cfg.g, p, box);
        const std::string name = "g=" + std::to_string(cfg.g) + "p=" + std::to_string(p) + ".txt";
        std::ofstream f(dir / name, std::ios::binary);
        if (!f) throw std::runtime_error("cannot write " + (dir / name).string());
        f << region_rows(scan);
        if (!f) throw std::runtime_error("write failed for " + (dir / name).string());
        files.push_back({{"p", p}, {"file", name}, {"points", scan.points.size()}, {"tensor_only", scan.tensor_only.size()}});
    }
    if (cfg.format == "json") {
        Json j;
        j["command"] = "figure1";
        j["g"] = cfg.g;
        j["box"] = {box.lo, box.hi};
        j["files"] = files;
        emit_json(out, j);
    } else {
        for (const auto& f : files) {
            out << f["file"].get<std::string>() << " points=" << f["points"].get<std::size_t>()
                << " tensor_only=" << f["tensor_only"].get<std::size_t>() << "\n";
        }
    }
    return ok;
}

int cmd_hyperbolicity(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
    check_g(cfg.g);
    if (cfg.partition_text.empty()) throw UsageError("--partition is required");
    const Partition lambda = parse_partition(cfg.partition_text);
    const std::int64_t p = parse_prime(cfg.p_text);
    const int degree = 2 * lambda.size();
    if (degree > max_degree && !cfg.unsafe_large) {
        throw UsageError("degree " + std::to_string(degree) + " exceeds " + std::to_string(max_degree) +
                         "; pass --unsafe-large to proceed");
    }
    auto cache = open_cache(cfg.cache_dir);
    std::function<void(std::size_t, std::size_t)> progress;
    if (degree >= progress_degree && !lambda.is_column()) progress = progress_printer(err, "hyperbolicity");
    const HyperbolicityReport r = analyze(lambda, cfg.g, p, cache ? &*cache : nullptr, progress);

    if (cfg.format == "json") {
        Json j;
        j["command"] = "hyperbolicity";
        j["g"] = r.g;
        j["p"] = r.p;
        j["partition"] = partition_json(r.lambda);
        j["filtration_ok"] = r.filtration_ok;
        j["closed_form"] = r.closed_form;
        j["cross_checked"] = r.cross_checked;
        Json rows = Json::array();
        for (const auto& c : r.constituents) {
            Json row;
            row["partition"] = partition_json(c.shape);
            row["multiplicity"] = c.multiplicity;
            row["weight"] = weight_json(c.weight);
            row["strict"] = c.bracket_source ? partition_json(*c.bracket_source) : Json(nullptr);
            row["certificate"] = certificate_json(c.certificate);
            if (cfg.explain) row["explain"] = explain_certificate(c.weight, p);
            rows.push_back(row);
        }
        j["constituents"] = rows;
        j["verdict"] = to_string(r.verdict);
        Json uncovered = Json::array();
        for (const auto& w : r.uncovered) uncovered.push_back(weight_json(w));
        j["uncovered"] = uncovered;
        j["notes"] = r.notes;
        emit_json(out, j);
    } else {
        out << "S_" << r.lambda.to_string() << " o Sym^2, g=" << r.g << ", p=" << r.p << "\n";
        out << "filtration: " << (r.filtration_ok ? "ok" : "fails") << "\n";
        for (const auto& c : r.constituents) {
            if (c.bracket_source) out << "2" << c.bracket_source->to_string() << " = ";
            out << c.shape.to_string() << " x" << c.multiplicity << " -> weight " << c.weight.to_string()
                << " route=" << to_string(c.certificate.route) << " min_prime="
                << (c.certificate.min_prime ? std::to_string(*c.certificate.min_prime) : "none") << "\n";
            if (cfg.explain) {
                for (const auto& line : explain_certificate(c.weight, p)) out << "    " << line << "\n";
            }
        }
        for (const auto& n : r.notes) out << "note: " << n << "\n";
        out << "verdict: " << to_string(r.verdict) << "\n";
    }
    if (r.verdict == Verdict::filtration_fails) return precondition_failed;
    return r.verdict == Verdict::certified ? ok : negative_verdict;
}

int cmd_chow_verify(const RunConfig& cfg, std::ostream& out) {
    check_g(cfg.g);
    EOFixture fx;
    if (!cfg.fixture_path.empty()) {
        fx = load_fixture(cfg.fixture_path);
    } else {
        auto text = builtin_fixture_text(cfg.g);
        if (text.empty()) throw UsageError("no built-in fixture for g=" + std::to_string(cfg.g) + "; pass --fixture");
        fx = parse_fixture(text);
    }
    if (fx.g != cfg.g) throw UsageError("fixture is for g=" + std::to_string(fx.g));
    const auto dims = quotient_dimensions(fx.g);
    const auto checks = verify_fixture(fx);
    std::optional<Weight> nef_weight;
    std::optional<std::int64_t> nef_p;
    std::optional<NefWitness> witness;
    if (!cfg.weight_text.empty()) {
        nef_weight = weight_for_g(cfg);
        nef_p = parse_prime(cfg.p_text);
        require_prime(*nef_p);
        witness = not_nef_witness(fx, *nef_weight, *nef_p);
    }
    int matched = 0, mismatched = 0, inert = 0;
    for (const auto& c : checks) {
        if (c.status == ProductStatus::matched) ++matched;
        else if (c.status == ProductStatus::mismatched) ++mismatched;
        else ++inert;
    }
    int total = 0;
    for (int d : dims) total += d;

    if (cfg.format == "json") {
        Json j;
        j["command"] = "chow-verify";
        j["g"] = fx.g;
        j["quotient_dimensions"] = dims;
        Json rows = Json::array();
        for (const auto& c : checks) {
            Json row;
            row["label"] = c.label;
            row["status"] = to_string(c.status);
            row["expected"] = c.expected;
            row["computed"] = c.status == ProductStatus::inert ? Json(nullptr) : Json(c.computed);
            row["reason"] = c.reason;
            rows.push_back(row);
        }
        j["products"] = rows;
        if (nef_weight) {
            Json w;
            w["weight"] = weight_json(*nef_weight);
            w["p"] = *nef_p;
            w["label"] = witness ? Json(witness->label) : Json(nullptr);
            w["value"] = witness ? Json(to_string(witness->value)) : Json(nullptr);
            j["not_nef_witness"] = w;
        }
        emit_json(out, j);
    } else {
        out << "quotient dimensions:";
        for (int d : dims) out << " " << d;
        out << " (total " << total << ")\n";
        for (const auto& c : checks) {
            out << c.label << " " << to_string(c.status);
            if (c.status == ProductStatus::matched) out << ": " << c.computed;
            else if (c.status == ProductStatus::mismatched) out << ": expected " << c.expected << ", computed " << c.computed;
            else out << " (" << c.reason << "): expected " << c.expected;
            out << "\n";
        }
        out << "products: " << matched << " matched, " << mismatched << " mismatched, " << inert << " inert\n";
        if (nef_weight) {
            out << "not-nef witness at " << nef_weight->to_string() << ", p=" << *nef_p << ": ";
            if (witness) out << witness->label << " value=" << to_string(witness->value) << "\n";
            else out << "none\n";
        }
    }
    return mismatched == 0 ? ok : negative_verdict;
}

int cmd_thresholds(const RunConfig& cfg, std::ostream& out) {
    if (cfg.g_max < 1 || cfg.g_max > max_g) throw UsageError("--g-max must lie in 1.." + std::to_string(max_g));
    Json rows = Json::array();
    for (int g = 1; g <= cfg.g_max; ++g) {
        rows.push_back({{"g", g}, {"k_threshold", k_threshold(g)}, {"p_threshold", p_threshold(g)}});
    }
    if (cfg.format == "json") {
        Json j;
        j["command"] = "thresholds";
        j["rows"] = rows;
        emit_json(out, j);
    } else if (cfg.format == "csv") {
        out << "g,k_threshold,p_threshold\n";
        for (const auto& r : rows) out << r["g"] << "," << r["k_threshold"] << "," << r["p_threshold"] << "\n";
    } else {
        for (const auto& r : rows) {
            out << "g=" << r["g"] << " k_threshold=" << r["k_threshold"] << " p_threshold=" << r["p_threshold"] << "\n";
        }
    }
    return ok;
}

void add_format(CLI::App* sub, RunConfig& cfg, std::vector<std::string> allowed) {
    sub->add_option("--format", cfg.format, "Output format")->check(CLI::IsMember(std::move(allowed)));
}

} // namespace

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
    RunConfig cfg;
    CLI::App app{"Exact plethysm, positivity certificates and tautological-ring checks for Siegel modular varieties",
                 "autopos"};
    app.require_subcommand(1);

    auto* pleth = app.add_subcommand("plethysm", "Decompose S_lambda o S_mu into Schur functors");
    pleth->add_option("lambda", cfg.lambda_text, "Outer partition, e.g. [4,2]")->required();
    pleth->add_option("mu", cfg.mu_text, "Inner partition, e.g. [3,1]")->required();
    pleth->add_option("--max-height", cfg.max_height, "Keep constituents with at most this many rows");
    pleth->add_option("--cache-dir", cfg.cache_dir, "Plethysm cache directory (default: $AUTOPOS_CACHE_DIR)");
    pleth->add_option("--threads", cfg.threads, "Worker threads (0 = all cores)");
    pleth->add_flag("--stats", cfg.stats, "Print summary counts only");
    pleth->add_flag("--unsafe-large", cfg.unsafe_large, "Allow degree above 40");
    add_format(pleth, cfg, {"text", "json", "csv"});

    auto* lsym = app.add_subcommand("lambda-sym2", "Constituents of Lambda^k o Sym^2 with at most g rows");
    lsym->add_option("--k", cfg.k, "Exterior power")->required();
    lsym->add_option("--g", cfg.g, "Genus");
    lsym->add_flag("--unsafe-large", cfg.unsafe_large, "Allow degree above 40");
    add_format(lsym, cfg, {"text", "json", "csv"});

    auto* cert = app.add_subcommand("certify", "Certify (phi,D)-ampleness of an automorphic weight");
    cert->add_option("--g", cfg.g, "Genus");
    cert->add_option("--weight", cfg.weight_text, "Weight, e.g. (-1,-3)")->required();
    cert->add_option("--p", cfg.p_text, "Prime")->required();
    cert->add_flag("--explain", cfg.explain, "Show the inequalities with numbers substituted");
    add_format(cert, cfg, {"text", "json"});

    auto* minp = app.add_subcommand("min-prime", "Smallest prime at which a weight is certified");
    minp->add_option("--g", cfg.g, "Genus");
    minp->add_option("--weight", cfg.weight_text, "Weight, e.g. (-1,-3)")->required();
    add_format(minp, cfg, {"text", "json"});

    auto* fig = app.add_subcommand("figure1", "Write certified-region files g=<g>p=<p>.txt");
    fig->add_option("--g", cfg.g, "Genus");
    fig->add_option("--p", cfg.p_text, "Comma-separated primes (default 5,11,31)");
    fig->add_option("--box", cfg.box_text, "Coordinate range lo:hi (default -44:5)");
    fig->add_option("--out-dir", cfg.out_dir, "Output directory");
    fig->add_flag("--unsafe-large", cfg.unsafe_large, "Allow very large boxes");
    add_format(fig, cfg, {"text", "json"});

    auto* hyp = app.add_subcommand("hyperbolicity", "Certify every constituent of S_lambda o Sym^2");
    hyp->add_option("--g", cfg.g, "Genus");
    hyp->add_option("--p", cfg.p_text, "Prime")->required();
    hyp->add_option("--partition", cfg.partition_text, "Partition, e.g. [1,1,1]")->required();
    hyp->add_option("--cache-dir", cfg.cache_dir, "Plethysm cache directory (default: $AUTOPOS_CACHE_DIR)");
    hyp->add_flag("--explain", cfg.explain, "Show the inequalities with numbers substituted");
    hyp->add_flag("--unsafe-large", cfg.unsafe_large, "Allow degree above 40");
    add_format(hyp, cfg, {"text", "json"});

    auto* chow = app.add_subcommand("chow-verify", "Check intersection products against an EO fixture");
    chow->add_option("--g", cfg.g, "Genus");
    chow->add_option("--fixture", cfg.fixture_path, "Fixture file (default: built-in for g=2,3)");
    chow->add_option("--weight", cfg.weight_text, "Also search for a not-nef witness at this weight");
    chow->add_option("--p", cfg.p_text, "Prime for the not-nef search");
    add_format(chow, cfg, {"text", "json"});

    auto* thr = app.add_subcommand("thresholds", "k and p thresholds of the hyperbolicity argument");
    thr->add_option("--g-max", cfg.g_max, "Largest genus listed (default 6)");
    add_format(thr, cfg, {"text", "json", "csv"});

    if (argc <= 1) {
        err << app.help();
        return usage_error;
    }
    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return ok;
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) {
            out << app.help();
            return ok;
        }
        err << "error: " << e.what() << "\n";
        err << "run with --help for usage\n";
        return usage_error;
    }

    try {
        if (*pleth) return cmd_plethysm(cfg, out, err);
        if (*lsym) return cmd_lambda_sym2(cfg, out);
        if (*cert) return cmd_certify(cfg, out);
        if (*minp) return cmd_min_prime(cfg, out);
        if (*fig) return cmd_figure1(cfg, out);
        if (*hyp) return cmd_hyperbolicity(cfg, out, err);
        if (*chow) return cmd_chow_verify(cfg, out);
        if (*thr) return cmd_thresholds(cfg, out);
    } catch (const UsageError& e) {
        err << "error: " << e.what() << "\n";
        return usage_error;
    } catch (const std::invalid_argument& e) {
        err << "precondition failed: " << e.what() << "\n";
        return precondition_failed;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return precondition_failed;
    }
    return usage_error;
}

} // namespace autopos::cli
