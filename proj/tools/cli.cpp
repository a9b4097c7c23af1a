#include "cli.hpp"

#include <cstdlib>
#include <ctime>
#include <filesystem>
#include <fstream>
#include <iomanip>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "qseries/identities.hpp"
#include "qseries/partitions.hpp"
#include "qseries/series_io.hpp"
#include "qseries/theta.hpp"

namespace qseries::cli {

namespace {

constexpr std::int64_t kFallbackPrec = 120;

std::string trim(const std::string &s)
{
    auto b = s.find_first_not_of(" \t\r");
    if (b == std::string::npos)
        return {};
    return s.substr(b, s.find_last_not_of(" \t\r") - b + 1);
}

std::int64_t to_int(const std::string &key, const std::string &v)
{
    try {
        std::size_t used = 0;
        long long x = std::stoll(v, &used);
        if (used == v.size())
            return x;
    } catch (const std::exception &) {
    }
    throw DomainError("config: " + key + " needs an integer, got '" + v + "'");
}

Output parse_output(const std::string &v)
{
    if (v == "text")
        return Output::text;
    if (v == "json")
        return Output::json;
    if (v == "tsv")
        return Output::tsv;
    throw DomainError("output must be text, json or tsv, got '" + v + "'");
}

std::string timestamp_now()
{
    std::time_t t = std::time(nullptr);
    std::tm tm{};
    gmtime_r(&t, &tm);
    std::ostringstream ss;
    ss << std::put_time(&tm, "%Y-%m-%dT%H:%M:%SZ");
    return ss.str();
}

Stat parse_stat(const std::string &s)
{
    if (s == "rank")
        return Stat::rank;
    if (s == "crank")
        return Stat::crank;
    throw DomainError("expected rank or crank, got '" + s + "'");
}

std::int64_t arg_int(const std::string &s)
{
    try {
        std::size_t used = 0;
        long long x = std::stoll(s, &used);
        if (used == s.size())
            return x;
    } catch (const std::exception &) {
    }
    throw DomainError("expected an integer, got '" + s + "'");
}

/// expand targets: J a m | Jbar a m | g a m | f0 | f1 | pq
IntSeries expand_target(const std::vector<std::string> &target, bool neg, std::int64_t prec)
{
    if (target.empty())
        throw DomainError("missing expand target");
    const std::string &name = target[0];
    auto want = [&](std::size_t n) {
        if (target.size() != n + 1)
            throw DomainError(name + " takes " + std::to_string(n) + " argument(s)");
    };
    if (neg && name != "g")
        throw DomainError("--neg only applies to g");
    if (name == "J" || name == "Jbar" || name == "g") {
        want(2);
        const std::int64_t a = arg_int(target[1]);
        const std::int64_t m = arg_int(target[2]);
        if (m <= 0)
            throw DomainError("m must be positive");
        if (name == "J")
            return atom_series(ThetaAtom::J(a, m), prec);
        if (name == "Jbar")
            return atom_series(ThetaAtom::Jbar(a, m), prec);
        return mock_g(GSpec{neg ? -1 : 1, a, m}, prec);
    }
    want(0);
    if (name == "f0")
        return eulerian_sum(Eulerian::f0, prec);
    if (name == "f1")
        return eulerian_sum(Eulerian::f1, prec);
    if (name == "pq")
        return partition_series(prec);
    throw DomainError("unknown expand target '" + name + "'");
}

template <class R>
void print_series(std::ostream &out, const Series<R> &s, Output fmt)
{
    if (fmt == Output::json)
        out << to_json(s).dump() << '\n';
    else
        out << to_text(s);
}

void print_table(std::ostream &out, const CountTable &t, std::int64_t max_n, Output fmt,
                 const std::function<Integer(std::int64_t, std::int64_t)> &count)
{
    const auto M = static_cast<std::int64_t>(t.modulus());
    if (fmt == Output::json) {
        nlohmann::ordered_json rows = nlohmann::ordered_json::array();
        for (std::int64_t n = 0; n <= max_n; ++n) {
            const std::string p = partition_count(n).get_str();
            for (std::int64_t a = 0; a < M; ++a)
                rows.push_back({{"n", n}, {"a", a}, {"count", count(a, n).get_str()}, {"p(n)", p}});
        }
        out << rows.dump(1) << '\n';
        return;
    }
    std::vector<std::vector<std::string>> cells;
    std::vector<std::string> head{"n"};
    for (std::int64_t a = 0; a < M; ++a)
        head.push_back("a=" + std::to_string(a));
    head.push_back("p(n)");
    cells.push_back(head);
    for (std::int64_t n = 0; n <= max_n; ++n) {
        std::vector<std::string> row{std::to_string(n)};
        for (std::int64_t a = 0; a < M; ++a)
            row.push_back(count(a, n).get_str());
        row.push_back(partition_count(n).get_str());
        cells.push_back(row);
    }
    std::vector<std::size_t> width(head.size(), 0);
    for (const auto &r : cells)
        for (std::size_t i = 0; i < r.size(); ++i)
            width[i] = std::max(width[i], r[i].size());
    for (const auto &r : cells) {
        for (std::size_t i = 0; i < r.size(); ++i) {
            if (fmt == Output::tsv)
                out << (i ? "\t" : "") << r[i];
            else
                out << (i ? "  " : "") << std::setw(static_cast<int>(width[i])) << r[i];
        }
        out << '\n';
    }
}

struct CongruenceCase {
    Stat stat;
    std::int64_t r;
};

CongruenceCase congruence_for(std::int64_t ell)
{
    switch (ell) {
    case 5: return {Stat::rank, 4};
    case 7: return {Stat::rank, 5};
    case 11: return {Stat::crank, 6};
    default: throw DomainError("check-congruence takes 5, 7 or 11");
    }
}

std::optional<std::filesystem::path> config_path(const std::string &flag)
{
    if (!flag.empty())
        return flag;
    if (const char *env = std::getenv("QSERIES_CONFIG"); env && *env)
        return std::filesystem::path(env);
    if (std::filesystem::exists("qseries.conf"))
        return std::filesystem::path("qseries.conf");
    return std::nullopt;
}

CliConfig load_config(const std::string &flag)
{
    auto path = config_path(flag);
    if (!path)
        return {};
    std::ifstream in(*path);
    if (!in)
        throw DomainError("cannot read config file " + path->string());
    std::stringstream ss;
    ss << in.rdbuf();
    return parse_config(ss.str());
}

} // namespace

CliConfig parse_config(const std::string &text)
{
    CliConfig c;
    std::istringstream in(text);
    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        if (auto hash = line.find('#'); hash != std::string::npos)
            line.erase(hash);
        line = trim(line);
        if (line.empty())
            continue;
        auto eq = line.find('=');
        if (eq == std::string::npos)
            throw DomainError("config line " + std::to_string(lineno) + ": expected key=value");
        const std::string key = trim(line.substr(0, eq));
        const std::string value = trim(line.substr(eq + 1));
        if (key == "default_prec") {
            c.default_prec = to_int(key, value);
            if (*c.default_prec < 10)
                throw DomainError("config: default_prec must be at least 10");
        } else if (key == "enumeration_cap") {
            c.enumeration_cap = to_int(key, value);
            if (c.enumeration_cap < 0)
                throw DomainError("config: enumeration_cap must be nonnegative");
        } else if (key == "output") {
            c.output = parse_output(value);
        } else if (key == "report_path") {
            c.report_path = value;
        } else {
            throw DomainError("config: unknown key '" + key + "'");
        }
    }
    return c;
}

int run_cli(int argc, const char *const *argv, std::ostream &out, std::ostream &err)
{
    CLI::App app{"Exact q-series verification of rank and crank dissection identities", "qseries"};
    app.require_subcommand(1);
    std::string config_flag;
    app.add_option("--config", config_flag, "key=value config file (else $QSERIES_CONFIG, else ./qseries.conf)");

    std::optional<std::string> format_flag;
    auto add_format = [&](CLI::App *sub, const std::vector<std::string> &allowed) {
        sub->add_flag_callback(
            "--json", [&] { format_flag = "json"; }, "JSON output");
        if (std::find(allowed.begin(), allowed.end(), "tsv") != allowed.end())
            sub->add_flag_callback(
                "--tsv", [&] { format_flag = "tsv"; }, "tab-separated output");
    };

    // verify
    auto *verify = app.add_subcommand("verify", "check registry entries");
    std::string id_pattern;
    std::optional<std::int64_t> verify_prec;
    std::string report_flag;
    unsigned threads = 0;
    verify->add_option("--id", id_pattern, "glob over entry ids, e.g. 'NC-*'");
    verify->add_option("--prec", verify_prec, "precision for every selected entry")->check(CLI::Range(10, 100000));
    verify->add_option("--report", report_flag, "also write the JSON report to this file");
    verify->add_option("--threads", threads, "worker threads, 0 for one per core");
    add_format(verify, {"json"});

    // table
    auto *table = app.add_subcommand("table", "residue-count table N(a,M;n) or C(a,M;n)");
    std::string table_stat;
    std::int64_t table_M = 0, table_max = 0;
    bool oracle = false;
    table->add_option("stat", table_stat, "rank or crank")->required();
    table->add_option("--modulus", table_M, "M")->required()->check(CLI::Range(1, 1000));
    table->add_option("--max-n", table_max, "last n")->required()->check(CLI::Range(0, 100000));
    table->add_flag("--oracle", oracle, "count by enumerating partitions instead");
    add_format(table, {"json", "tsv"});

    // deviation
    auto *deviation = app.add_subcommand("deviation", "D(a,M) or D_C(a,M) coefficients");
    std::string dev_stat;
    std::int64_t dev_M = 0, dev_a = 0;
    std::optional<std::int64_t> dev_prec;
    deviation->add_option("stat", dev_stat, "rank or crank")->required();
    deviation->add_option("--modulus", dev_M, "M")->required()->check(CLI::Range(1, 1000));
    deviation->add_option("--a", dev_a, "residue")->required();
    deviation->add_option("--prec", dev_prec, "precision")->check(CLI::Range(1, 100000));
    add_format(deviation, {"json"});

    // expand
    auto *expand = app.add_subcommand("expand", "series of J a m, Jbar a m, g [--neg] a m, f0, f1 or pq");
    std::vector<std::string> expand_args;
    bool expand_neg = false;
    std::optional<std::int64_t> expand_prec;
    expand->add_option("target", expand_args, "target and its arguments")->required();
    expand->add_flag("--neg", expand_neg, "g(-q^a; q^m) instead of g(q^a; q^m)");
    expand->add_option("--prec", expand_prec, "precision")->check(CLI::Range(1, 100000));
    add_format(expand, {"json"});

    // dissect
    auto *dissect = app.add_subcommand("dissect", "sum_n c(t n + r) q^n of an expand target");
    std::vector<std::string> dissect_args;
    bool dissect_neg = false;
    std::int64_t dis_t = 0, dis_r = 0;
    std::optional<std::int64_t> dissect_prec;
    dissect->add_option("--t", dis_t, "modulus of the progression")->required()->check(CLI::Range(1, 10000));
    dissect->add_option("--r", dis_r, "residue")->required();
    dissect->add_option("target", dissect_args, "expand target and its arguments")->required();
    dissect->add_flag("--neg", dissect_neg, "g(-q^a; q^m)");
    dissect->add_option("--prec", dissect_prec, "precision of the dissected series")->check(CLI::Range(1, 100000));
    add_format(dissect, {"json"});

    // check-congruence
    auto *congr = app.add_subcommand("check-congruence", "p(ln+r) = 0 (mod l) and equal residue counts");
    std::int64_t ell = 0, congr_max = 0;
    congr->add_option("ell", ell, "5, 7 or 11")->required();
    congr->add_option("--max", congr_max, "largest argument checked")->required()->check(CLI::Range(0, 100000));

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp &e) {
        out << app.help();
        return 0;
    } catch (const CLI::CallForAllHelp &e) {
        out << app.help("", CLI::AppFormatMode::All);
        return 0;
    } catch (const CLI::ParseError &e) {
        err << "qseries: " << e.what() << "\n\n" << app.help();
        return 2;
    }

    try {
        const CliConfig cfg = load_config(config_flag);
        const Output fmt = format_flag ? parse_output(*format_flag) : cfg.output;
        const std::int64_t fallback_prec = cfg.default_prec.value_or(kFallbackPrec);

        if (*verify) {
            const auto prec = verify_prec ? verify_prec : cfg.default_prec;
            auto reports = verify_all(prec, id_pattern, threads);
            const std::string js = report_json(reports, prec.value_or(0), timestamp_now());
            if (fmt == Output::json)
                out << js;
            else
                out << report_text(reports);
            const std::string report_path = !report_flag.empty() ? report_flag : cfg.report_path.value_or("");
            if (!report_path.empty()) {
                std::ofstream f(report_path);
                if (!f)
                    throw DomainError("cannot write report to " + report_path);
                f << js;
            }
            return all_passed(reports) ? 0 : 1;
        }

        if (*table) {
            const Stat stat = parse_stat(table_stat);
            const auto M = static_cast<std::size_t>(table_M);
            CountTable t(stat, M, table_max + 1);
            if (oracle) {
                if (table_max > cfg.enumeration_cap)
                    throw DomainError("--oracle enumerates partitions only up to n = " +
                                      std::to_string(cfg.enumeration_cap));
                std::vector<std::vector<Integer>> counts;
                for (std::int64_t n = 0; n <= table_max; ++n) {
                    std::vector<Integer> row(M, Integer(0));
                    for (const auto &p : enumerate_partitions(static_cast<int>(n), static_cast<int>(cfg.enumeration_cap))) {
                        // the empty partition sits at a = 0
                        int s = p.empty() ? 0 : stat == Stat::rank ? rank_of(p) : crank_of(p);
                        row[static_cast<std::size_t>(residue(s, table_M))] += 1;
                    }
                    counts.push_back(std::move(row));
                }
                print_table(out, t, table_max, fmt, [&](std::int64_t a, std::int64_t n) {
                    return counts[static_cast<std::size_t>(n)][static_cast<std::size_t>(a)];
                });
            } else {
                print_table(out, t, table_max, fmt, [&](std::int64_t a, std::int64_t n) { return t.count(a, n); });
            }
            return 0;
        }

        if (*deviation) {
            const auto s = deviation_series(parse_stat(dev_stat), dev_a, static_cast<std::size_t>(dev_M),
                                            dev_prec.value_or(fallback_prec));
            print_series(out, s, fmt);
            return 0;
        }

        if (*expand) {
            print_series(out, expand_target(expand_args, expand_neg, expand_prec.value_or(fallback_prec)), fmt);
            return 0;
        }

        if (*dissect) {
            if (dis_r < 0 || dis_r >= dis_t)
                throw DomainError("--r must lie in [0, t)");
            const std::int64_t P = dissect_prec.value_or(fallback_prec);
            auto s = expand_target(dissect_args, dissect_neg, dis_t * P + dis_r);
            print_series(out, s.dissect(dis_t, dis_r).deflate(dis_t, dis_r), fmt);
            return 0;
        }

        if (*congr) {
            const auto c = congruence_for(ell);
            const auto M = static_cast<std::size_t>(ell);
            CountTable t(c.stat, M, congr_max + 1);
            bool ok = true;
            std::int64_t checked = 0;
            for (std::int64_t n = c.r; n <= congr_max; n += ell) {
                const Integer p = partition_count(n);
                if (p % ell != 0) {
                    out << "p(" << n << ") = " << p.get_str() << " is not divisible by " << ell << '\n';
                    ok = false;
                    continue;
                }
                const Integer share = p / ell;
                for (std::int64_t a = 0; a < ell; ++a) {
                    if (t.count(a, n) != share) {
                        out << (c.stat == Stat::rank ? "N(" : "C(") << a << ',' << ell << ';' << n
                            << ") = " << t.count(a, n).get_str() << ", expected " << share.get_str() << '\n';
                        ok = false;
                    }
                }
                ++checked;
            }
            out << (ok ? "ok" : "FAILED") << ": p(" << ell << "n+" << c.r << ") = 0 (mod " << ell << ") and "
                << (c.stat == Stat::rank ? "rank" : "crank") << " classes mod " << ell << " equal p/" << ell
                << " for " << checked << " arguments up to " << congr_max << '\n';
            return ok ? 0 : 1;
        }
    } catch (const DomainError &e) {
        err << "qseries: " << e.what() << '\n';
        return 2;
    } catch (const WindowError &e) {
        err << "qseries: " << e.what() << '\n';
        return 2;
    } catch (const std::exception &e) {
        err << "qseries: internal error: " << e.what() << '\n';
        return 3;
    }
    return 3;
}

} // namespace qseries::cli
