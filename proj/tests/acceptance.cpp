// One PASS/FAIL line per acceptance criterion; exit status 0 iff all pass.

#include <algorithm>
#include <chrono>
#include <functional>
#include <iostream>
#include <map>
#include <sstream>

#include "cli.hpp"
#include "qseries/identities.hpp"
#include "qseries/partitions.hpp"
#include "qseries/theta.hpp"

using namespace qseries;

namespace {

struct Context {
    std::vector<VerificationReport> reports;
    std::map<std::string, const VerificationReport *> by_id;
    std::map<std::string, const IdentityEntry *> entry_by_id;
    double seconds = 0;
    int cli_exit = -1;
};

struct Verdict {
    bool ok = true;
    std::string detail;

    void fail(const std::string &why)
    {
        if (ok)
            detail = why;
        ok = false;
    }
};

bool starts_with(const std::string &s, const std::string &prefix) { return s.rfind(prefix, 0) == 0; }

/// Every entry whose id satisfies pred passed through at least q^{through}; also
/// requires at least one such entry.
void require_entries(const Context &ctx, Verdict &v, const std::function<bool(const IdentityEntry &)> &pred,
                     std::int64_t through, const std::string &what)
{
    int seen = 0;
    for (const auto &e : registry()) {
        if (!pred(e))
            continue;
        ++seen;
        const auto &r = *ctx.by_id.at(e.id);
        if (r.status != Status::pass)
            v.fail(e.id + " is " + status_name(r.status));
        else if (r.verified_through < through)
            v.fail(e.id + " only verified through " + std::to_string(r.verified_through));
    }
    if (seen == 0)
        v.fail("no entries for " + what);
}

void require_ids(const Context &ctx, Verdict &v, const std::vector<std::string> &ids, std::int64_t through)
{
    for (const auto &id : ids)
        require_entries(ctx, v, [&](const IdentityEntry &e) { return e.id == id; }, through, id);
}

Verdict criterion1(const Context &ctx)
{
    Verdict v;
    if (ctx.cli_exit != 0)
        v.fail("qseries verify exited " + std::to_string(ctx.cli_exit));
    if (!all_passed(ctx.reports))
        v.fail("registry has failing entries");
    if (ctx.seconds > 120)
        v.fail("full run took " + std::to_string(ctx.seconds) + " s");
    for (const auto &e : registry())
        if (ctx.by_id.at(e.id)->verified_through < e.default_prec - 1 && e.kind != Kind::inequality)
            v.fail(e.id + " stopped short of its default precision");
    std::ostringstream ss;
    ss << ctx.reports.size() << " entries in " << ctx.seconds << " s";
    if (v.ok)
        v.detail = ss.str();
    return v;
}

Verdict criterion2(const Context &ctx)
{
    Verdict v;
    require_ids(ctx, v, {"mock-theta-f0", "mock-theta-f1"}, 99);
    return v;
}

Verdict criterion3(const Context &ctx)
{
    Verdict v;
    const std::vector<std::string> groups{"D4", "DC4", "D8", "DC8", "M5", "M7"};
    for (const auto &g : groups)
        require_entries(ctx, v, [&](const IdentityEntry &e) { return e.group == g; }, 99, g);
    const std::vector<std::string> lines{
        "D04-deviant-alt", "D14-deviant-alt", "D24-deviant-alt", "DC04-deviant-final", "DC14-deviant-final",
        "DC24-deviant-final", "D04-deviant", "D14-deviant", "D24-deviant", "D08-deviant-final", "D18-deviant-final",
        "D28-deviant-final", "D38-deviant-final", "D48-deviant-final", "D08-deviant-pre", "D18-deviant-pre",
        "D28-deviant-pre", "D38-deviant-pre", "D48-deviant-pre", "DC08-deviant-final", "DC18-deviant-final",
        "DC28-deviant-final", "DC38-deviant-final", "DC48-deviant-final", "M5-D05", "M5-D15", "M5-D25", "M5-DC05",
        "M5-DC15", "M5-DC25", "M7-D07", "M7-D17", "M7-D27", "M7-D37", "M7-DC07", "M7-DC17", "M7-DC27", "M7-DC37"};
    require_ids(ctx, v, lines, 99);
    for (const char *fam : {"D4", "DC4", "D8", "DC8", "D5", "DC5", "D7", "DC7"})
        require_ids(ctx, v, {std::string("sum-zero/") + fam}, 99);
    return v;
}

Verdict criterion4()
{
    Verdict v;
    for (std::size_t M : {4u, 5u, 7u, 8u, 11u}) {
        CountTable ranks(Stat::rank, M, 36);
        CountTable cranks(Stat::crank, M, 36);
        const auto m = static_cast<std::int64_t>(M);
        for (int n = 1; n <= 35; ++n) {
            std::vector<Integer> r(M, Integer(0)), c(M, Integer(0));
            for (const auto &p : enumerate_partitions(n)) {
                r[static_cast<std::size_t>(residue(rank_of(p), m))] += 1;
                c[static_cast<std::size_t>(residue(crank_of(p), m))] += 1;
            }
            for (std::int64_t a = 0; a < m; ++a) {
                if (ranks.count(a, n) != r[static_cast<std::size_t>(a)])
                    v.fail("N(" + std::to_string(a) + "," + std::to_string(M) + ";" + std::to_string(n) + ")");
                if (n >= 2 && cranks.count(a, n) != c[static_cast<std::size_t>(a)])
                    v.fail("C(" + std::to_string(a) + "," + std::to_string(M) + ";" + std::to_string(n) + ")");
            }
        }
        // generating-function convention at n = 1
        for (std::int64_t a = 0; a < m; ++a) {
            const long want = a == 0 ? -1 : (a == 1 || a == m - 1) ? 1 : 0;
            if (cranks.count(a, 1) != want)
                v.fail("crank anomaly at a=" + std::to_string(a) + ", M=" + std::to_string(M));
        }
    }
    return v;
}

Verdict criterion5()
{
    Verdict v;
    struct Case {
        Stat stat;
        std::int64_t ell, r, max;
    };
    for (const Case &c : {Case{Stat::rank, 5, 4, 200}, Case{Stat::rank, 7, 5, 200}, Case{Stat::crank, 11, 6, 150}}) {
        CountTable t(c.stat, static_cast<std::size_t>(c.ell), c.max + 1);
        for (std::int64_t n = c.r; n <= c.max; n += c.ell) {
            const Integer p = partition_count(n);
            for (std::int64_t a = 0; a < c.ell; ++a)
                if (t.count(a, n) * c.ell != p)
                    v.fail(stat_name(c.stat) + " class " + std::to_string(a) + " mod " + std::to_string(c.ell) +
                           " at n=" + std::to_string(n));
        }
    }
    for (auto [ell, r] : std::vector<std::pair<long, long>>{{5, 4}, {7, 5}, {11, 6}})
        for (long n = r; n <= 200; n += ell)
            if (partition_count(n) % ell != 0)
                v.fail("p(" + std::to_string(n) + ") mod " + std::to_string(ell));
    return v;
}

/// Entry passes and its deflated window reaches every argument t n + r <= limit.
void require_progression(const Context &ctx, Verdict &v, const std::string &id, std::int64_t t, std::int64_t r,
                         std::int64_t limit)
{
    const auto &rep = *ctx.by_id.at(id);
    if (rep.status != Status::pass)
        v.fail(id + " is " + status_name(rep.status));
    else if (t * (rep.verified_through + 1) + r <= limit)
        v.fail(id + " stops at argument " + std::to_string(t * rep.verified_through + r));
}

Verdict criterion6(const Context &ctx)
{
    Verdict v;
    const std::vector<std::pair<std::int64_t, std::int64_t>> prog{{2, 0}, {2, 1}, {4, 0}, {4, 1}, {4, 2},
                                                                   {4, 3}, {4, 0}, {4, 1}, {4, 2}, {4, 3}};
    for (int i = 0; i < 10; ++i)
        require_progression(ctx, v, "NC-" + std::to_string(8 + i), prog[static_cast<std::size_t>(i)].first,
                            prog[static_cast<std::size_t>(i)].second, 300);
    return v;
}

Verdict criterion7(const Context &ctx)
{
    Verdict v;
    require_progression(ctx, v, "ABCKM-id7.5", 2, 0, 300);
    require_progression(ctx, v, "ABCKM-id7.6", 2, 1, 300);
    return v;
}

Verdict criterion8(const Context &ctx)
{
    Verdict v;
    require_ids(ctx, v,
                {"g2-plus-support", "g2-minus-support", "g6-plus-support", "g6-minus-support", "g2-plus", "g2-minus",
                 "g6-plus", "g6-minus"},
                99);
    const std::map<std::string, std::int64_t> residues{
        {"g2-plus-support", 2}, {"g2-minus-support", 0}, {"g6-plus-support", 1}, {"g6-minus-support", 3}};
    for (const auto &[id, r] : residues) {
        const auto &e = *ctx.entry_by_id.at(id);
        if (e.kind != Kind::support || e.support.t != 4 || e.support.allowed != std::vector<std::int64_t>{r})
            v.fail(id + " has the wrong support spec");
    }
    return v;
}

Verdict criterion9(const Context &ctx)
{
    Verdict v;
    require_ids(ctx, v,
                {"L-conj-prop-id", "L-conj-k0", "L-conj-k1", "L-conj-k2", "L-conj-k3", "L-conj-pre", "lewis-000",
                 "lewis-001", "lewis-002", "lewis-003", "last-stop", "the-end"},
                99);
    require_ids(ctx, v, {"the-end-positivity"}, 150);
    const std::vector<std::tuple<std::string, std::int64_t, std::int64_t>> ineq{
        {"lewis-ineq-0", 1, 2}, {"lewis-ineq-1", 2, 2}, {"lewis-ineq-2", 3, 1}};
    for (const auto &[id, r, threshold] : ineq) {
        const auto &e = *ctx.entry_by_id.at(id);
        if (e.inequality.t != 4 || e.inequality.r != r || e.inequality.threshold != threshold)
            v.fail(id + " has the wrong progression or threshold");
        require_progression(ctx, v, id, 1, 0, 400);
    }
    return v;
}

Verdict criterion10(const Context &ctx)
{
    Verdict v;
    const auto atoms = cached_atoms();
    if (atoms.size() < 50)
        v.fail("only " + std::to_string(atoms.size()) + " atoms were touched");
    for (const auto &atom : atoms)
        if (!(theta_sum(atom, 200) == theta_product(atom, 200)))
            v.fail("sum and product differ for " + atom.str());
    for (const char *batch : {"jsplit/", "jsplitgen/", "H1Thm1.1/", "H1Thm1.2B/", "Weierstrass/", "H1Thm1.0/",
                              "quintuple-spec/", "hecke-phi-id/", "hecke-phi-id-alt/", "gsplit/", "rootsof1n2k0/",
                              "rootsof1n2k1/", "1.7/", "1.8/", "1.10/", "1.11/", "1.12/", "rearrangement/"})
        require_entries(
            ctx, v, [&](const IdentityEntry &e) { return starts_with(e.id, batch); }, 99, batch);
    if (v.ok)
        v.detail = std::to_string(atoms.size()) + " atoms";
    return v;
}

Verdict criterion11()
{
    Verdict v;
    std::vector<IdentityEntry> clone = registry();
    std::map<std::string, std::int64_t> expected;
    for (std::size_t i = 3; i < clone.size(); i += 17) {
        auto &e = clone[i];
        std::int64_t exponent = e.default_prec / 3;
        Rational delta(Integer(1), Integer(7));
        switch (e.kind) {
        case Kind::equality:
            break;
        case Kind::support:
            while (std::find(e.support.allowed.begin(), e.support.allowed.end(), residue(exponent, e.support.t)) !=
                   e.support.allowed.end())
                ++exponent;
            break;
        case Kind::positivity:
            delta = Rational(-1000000000);
            break;
        case Kind::inequality:
            exponent = e.inequality.t * (exponent / e.inequality.t + 1) + e.inequality.r;
            delta = Rational(-1000000000);
            break;
        }
        e = perturb(e, exponent, delta);
        expected[e.id] = exponent;
    }
    auto reports = verify_all(clone, std::nullopt, "", 0);
    for (const auto &r : reports) {
        auto it = expected.find(r.id);
        if (it == expected.end()) {
            if (r.status != Status::pass)
                v.fail("unperturbed " + r.id + " is " + status_name(r.status));
        } else if (r.status != Status::fail || !r.first_mismatch || r.first_mismatch->exponent != it->second) {
            v.fail("perturbed " + r.id + " did not fail at q^" + std::to_string(it->second));
        }
    }
    if (v.ok)
        v.detail = std::to_string(expected.size()) + " perturbed of " + std::to_string(reports.size());
    return v;
}

} // namespace

int main()
{
    Context ctx;
    const auto start = std::chrono::steady_clock::now();
    {
        const char *argv[] = {"qseries", "verify"};
        std::ostringstream sink, err;
        ctx.cli_exit = cli::run_cli(2, argv, sink, err);
    }
    ctx.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    ctx.reports = verify_all();
    for (const auto &r : ctx.reports)
        ctx.by_id[r.id] = &r;
    for (const auto &e : registry())
        ctx.entry_by_id[e.id] = &e;

    const std::vector<std::pair<std::string, std::function<Verdict()>>> criteria{
        {"full registry passes at default precision within 120 s", [&] { return criterion1(ctx); }},
        {"f0 and f1 equal their g-expressions to O(q^100)", [&] { return criterion2(ctx); }},
        {"dissection theorems and deviation sums to O(q^100)", [&] { return criterion3(ctx); }},
        {"generating-function counts match enumeration, crank n=1 convention", [] { return criterion4(); }},
        {"rank/crank equinumerosity and p(n) congruences", [] { return criterion5(); }},
        {"NC-8 to NC-17 for arguments up to 300", [&] { return criterion6(ctx); }},
        {"ABCKM (7.5) and (7.6) for arguments up to 300", [&] { return criterion7(ctx); }},
        {"g2/g6 support lemmas to O(q^100)", [&] { return criterion8(ctx); }},
        {"modulus 8 rank-crank identities, inequalities and positivity", [&] { return criterion9(ctx); }},
        {"toolkit batches and sum/product agreement for every atom", [&] { return criterion10(ctx); }},
        {"fault injection flips exactly the perturbed entries", [] { return criterion11(); }},
    };

    bool all = true;
    for (std::size_t i = 0; i < criteria.size(); ++i) {
        Verdict v;
        try {
            v = criteria[i].second();
        } catch (const std::exception &e) {
            v.fail(std::string("exception: ") + e.what());
        }
        all = all && v.ok;
        std::cout << (v.ok ? "PASS" : "FAIL") << " criterion " << (i + 1) << ": " << criteria[i].first;
        if (!v.detail.empty())
            std::cout << " (" << v.detail << ")";
        std::cout << '\n';
    }
    return all ? 0 : 1;
}
