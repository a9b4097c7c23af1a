#include "qseries/identities.hpp"

#include <fnmatch.h>

#include <algorithm>
#include <atomic>
#include <chrono>
#include <map>
#include <sstream>
#include <thread>

#include <json.hpp>

namespace qseries {

std::string kind_name(Kind k)
{
    switch (k) {
    case Kind::equality: return "equality";
    case Kind::support: return "support";
    case Kind::positivity: return "positivity";
    case Kind::inequality: return "inequality";
    }
    return "?";
}

std::string status_name(Status s)
{
    switch (s) {
    case Status::pass: return "pass";
    case Status::fail: return "fail";
    case Status::error: return "error";
    }
    return "?";
}

std::string CountSelector::str() const
{
    return std::string(stat == Stat::rank ? "N" : "C") + "(" + std::to_string(a) + "," + std::to_string(M) + ")";
}

bool glob_match(const std::string &pattern, const std::string &text)
{
    return fnmatch(pattern.c_str(), text.c_str(), 0) == 0;
}

CheckOutcome support_check(const RatSeries &f, std::int64_t t, const std::vector<std::int64_t> &allowed)
{
    if (t <= 0)
        throw DomainError("support_check: t must be positive");
    for (auto r : allowed)
        if (r < 0 || r >= t)
            throw DomainError("support_check: residue " + std::to_string(r) + " outside [0, t)");
    CheckOutcome out;
    for (std::int64_t e = f.min_exp(); e < f.prec(); ++e) {
        const Rational &c = f.coeff(e);
        if (c == Rational(0))
            continue;
        if (std::find(allowed.begin(), allowed.end(), residue(e, t)) == allowed.end()) {
            out.passed = false;
            out.failure = MismatchReport{e, c.str(), "0"};
            break;
        }
    }
    return out;
}

CheckOutcome positivity_check(const RatSeries &f, std::int64_t from_n, std::int64_t max_n)
{
    if (max_n >= f.prec())
        throw WindowError("positivity_check: series known below q^" + std::to_string(f.prec()) + ", asked for q^" +
                          std::to_string(max_n));
    CheckOutcome out;
    for (std::int64_t n = from_n; n <= max_n; ++n) {
        const Rational c = f.coeff(n);
        if (!(Rational(0) < c)) {
            out.passed = false;
            out.failure = MismatchReport{n, c.str(), "> 0"};
            break;
        }
    }
    return out;
}

CheckOutcome inequality_check(const CountTable &greater, std::int64_t a_greater, const CountTable &lesser,
                              std::int64_t a_lesser, std::int64_t t, std::int64_t r, std::int64_t threshold,
                              std::int64_t max_n, const std::vector<std::pair<std::int64_t, Integer>> &injected)
{
    if (t <= 0 || r < 0 || threshold < 0)
        throw DomainError("inequality_check: need t > 0, r >= 0, threshold >= 0");
    const std::int64_t last = t * max_n + r;
    if (last >= greater.prec() || last >= lesser.prec())
        throw WindowError("inequality_check: counts known below n=" +
                          std::to_string(std::min(greater.prec(), lesser.prec())) + ", need n=" +
                          std::to_string(last));
    std::map<std::int64_t, Integer> faults;
    for (const auto &[e, d] : injected)
        faults[e] += d;

    CheckOutcome out;
    for (std::int64_t n = 0; n <= max_n; ++n) {
        const std::int64_t e = t * n + r;
        Integer g = greater.count(a_greater, e);
        if (auto it = faults.find(e); it != faults.end())
            g += it->second;
        const Integer l = lesser.count(a_lesser, e);
        if (g >= l)
            continue;
        if (n < threshold) {
            out.exceptions.push_back(n);
            continue;
        }
        out.passed = false;
        out.failure = MismatchReport{e, g.get_str(), l.get_str()};
        break;
    }
    return out;
}

namespace {

constexpr int kMaxEscalations = 8;

struct Timer {
    std::chrono::steady_clock::time_point start = std::chrono::steady_clock::now();
    [[nodiscard]] std::int64_t ms() const
    {
        return std::chrono::duration_cast<std::chrono::milliseconds>(std::chrono::steady_clock::now() - start)
            .count();
    }
};

/// Evaluates lhs at a working precision that leaves every side known through q^{P-1}.
RatSeries lhs_through(const IdentityEntry &e, std::int64_t P)
{
    std::int64_t work = P;
    for (int attempt = 0;; ++attempt) {
        RatSeries f = e.lhs(work);
        if (f.prec() >= P)
            return f.truncated(P);
        if (attempt == kMaxEscalations)
            throw WindowError("series only known below q^" + std::to_string(f.prec()) + " after escalation");
        work += P - f.prec();
    }
}

void verify_equality(const IdentityEntry &e, std::int64_t P, VerificationReport &rep)
{
    std::int64_t work = P;
    for (int attempt = 0;; ++attempt) {
        std::vector<RatSeries> sides;
        sides.push_back(e.lhs(work));
        sides.push_back(e.rhs(work));
        for (const auto &c : e.chain)
            sides.push_back(c(work));
        std::int64_t end = P;
        for (const auto &s : sides)
            end = std::min(end, s.prec());
        if (end < P) {
            if (attempt == kMaxEscalations)
                throw WindowError("comparison window ends at q^" + std::to_string(end) + ", below requested q^" +
                                  std::to_string(P));
            work += P - end;
            continue;
        }
        std::optional<MismatchReport> first;
        for (std::size_t i = 1; i < sides.size(); ++i) {
            auto cmp = compare(sides[0].truncated(P), sides[i].truncated(P));
            if (cmp.equal)
                continue;
            const auto &m = *cmp.first_mismatch;
            if (!first || m.exponent < first->exponent)
                first = MismatchReport{m.exponent, m.lhs.str(), m.rhs.str()};
        }
        if (first) {
            rep.status = Status::fail;
            rep.verified_through = first->exponent - 1;
            rep.first_mismatch = first;
        } else {
            rep.status = Status::pass;
            rep.verified_through = P - 1;
        }
        return;
    }
}

void record(const CheckOutcome &o, std::int64_t through, VerificationReport &rep)
{
    if (o.passed) {
        rep.status = Status::pass;
        rep.verified_through = through;
    } else {
        rep.status = Status::fail;
        rep.first_mismatch = o.failure;
        rep.verified_through = o.failure->exponent - 1;
    }
}

} // namespace

VerificationReport verify_identity(const IdentityEntry &entry, std::optional<std::int64_t> prec)
{
    VerificationReport rep;
    rep.id = entry.id;
    rep.paper_label = entry.paper_label;
    Timer timer;
    const std::int64_t P = prec.value_or(entry.default_prec);
    try {
        if (P < 10)
            throw DomainError("precision " + std::to_string(P) + " is below the minimum of 10");
        switch (entry.kind) {
        case Kind::equality:
            verify_equality(entry, P, rep);
            break;
        case Kind::support:
            record(support_check(lhs_through(entry, P), entry.support.t, entry.support.allowed), P - 1, rep);
            break;
        case Kind::positivity:
            record(positivity_check(lhs_through(entry, P), entry.from_n, P - 1), P - 1, rep);
            break;
        case Kind::inequality: {
            const auto &q = entry.inequality;
            const std::int64_t max_n = floor_div(P - 1 - q.r, q.t);
            if (max_n < 0)
                throw DomainError("precision too small for progression " + std::to_string(q.t) + "n+" +
                                  std::to_string(q.r));
            CountTable g(q.greater.stat, q.greater.M, P);
            CountTable l(q.lesser.stat, q.lesser.M, P);
            auto o = inequality_check(g, q.greater.a, l, q.lesser.a, q.t, q.r, q.threshold, max_n, entry.injected);
            record(o, q.t * max_n + q.r, rep);
            if (!o.exceptions.empty()) {
                std::ostringstream ss;
                ss << q.greater.str() << " < " << q.lesser.str() << " below threshold at n =";
                for (auto n : o.exceptions)
                    ss << ' ' << n;
                rep.notes = ss.str();
            }
            break;
        }
        }
    } catch (const std::exception &ex) {
        rep.status = Status::error;
        rep.verified_through = -1;
        rep.first_mismatch.reset();
        rep.error = ex.what();
    }
    rep.ms = timer.ms();
    return rep;
}

std::vector<VerificationReport> verify_all(const std::vector<IdentityEntry> &entries, std::optional<std::int64_t> prec,
                                           const std::string &filter, unsigned threads)
{
    std::vector<const IdentityEntry *> selected;
    for (const auto &e : entries)
        if (filter.empty() || glob_match(filter, e.id))
            selected.push_back(&e);

    std::vector<VerificationReport> out(selected.size());
    if (threads == 0)
        threads = std::max(1u, std::thread::hardware_concurrency());
    threads = std::min<unsigned>(threads, static_cast<unsigned>(std::max<std::size_t>(selected.size(), 1)));

    std::atomic<std::size_t> next{0};
    auto worker = [&] {
        for (std::size_t i = next++; i < selected.size(); i = next++)
            out[i] = verify_identity(*selected[i], prec);
    };
    std::vector<std::thread> pool;
    for (unsigned i = 1; i < threads; ++i)
        pool.emplace_back(worker);
    worker();
    for (auto &t : pool)
        t.join();
    return out;
}

std::vector<VerificationReport> verify_all(std::optional<std::int64_t> prec, const std::string &filter,
                                           unsigned threads)
{
    return verify_all(registry(), prec, filter, threads);
}

bool all_passed(const std::vector<VerificationReport> &reports)
{
    return std::all_of(reports.begin(), reports.end(), [](const auto &r) { return r.status == Status::pass; });
}

IdentityEntry perturb(const IdentityEntry &entry, std::int64_t exponent, const Rational &delta)
{
    IdentityEntry e = entry;
    auto bump = [exponent, delta](Builder b) -> Builder {
        return [b = std::move(b), exponent, delta](std::int64_t prec) {
            RatSeries s = b(prec);
            if (exponent < s.prec())
                s = s + RatSeries::monomial(delta, exponent, s.prec());
            return s;
        };
    };
    switch (e.kind) {
    case Kind::equality:
        e.rhs = bump(e.rhs);
        break;
    case Kind::support:
    case Kind::positivity:
        e.lhs = bump(e.lhs);
        break;
    case Kind::inequality:
        if (delta.den() != 1)
            throw DomainError("perturb: inequality faults must be integral");
        e.injected.emplace_back(exponent, delta.num());
        break;
    }
    return e;
}

std::string report_json(const std::vector<VerificationReport> &reports, std::int64_t prec_default,
                        const std::string &timestamp, bool include_timing)
{
    using nlohmann::ordered_json;
    ordered_json results = ordered_json::array();
    for (const auto &r : reports) {
        ordered_json j;
        j["id"] = r.id;
        j["paper_label"] = r.paper_label;
        j["status"] = status_name(r.status);
        j["verified_through"] = r.verified_through;
        if (r.first_mismatch)
            j["first_mismatch"] = {{"exponent", r.first_mismatch->exponent},
                                   {"lhs", r.first_mismatch->lhs},
                                   {"rhs", r.first_mismatch->rhs}};
        else
            j["first_mismatch"] = nullptr;
        j["ms"] = include_timing ? r.ms : 0;
        results.push_back(std::move(j));
    }
    ordered_json doc;
    doc["run"] = {{"prec_default", prec_default}, {"timestamp", timestamp}};
    doc["results"] = std::move(results);
    return doc.dump(2) + "\n";
}

std::string report_text(const std::vector<VerificationReport> &reports)
{
    std::ostringstream out;
    std::size_t passed = 0;
    for (const auto &r : reports) {
        out << (r.status == Status::pass ? "PASS " : r.status == Status::fail ? "FAIL " : "ERROR") << ' ' << r.id
            << " (" << r.paper_label << ")";
        if (r.status == Status::pass)
            out << " through q^" << r.verified_through;
        if (r.first_mismatch)
            out << " first mismatch at q^" << r.first_mismatch->exponent << ": " << r.first_mismatch->lhs
                << " != " << r.first_mismatch->rhs;
        if (!r.error.empty())
            out << ": " << r.error;
        out << " [" << r.ms << " ms]\n";
        if (!r.notes.empty())
            out << "      note: " << r.notes << '\n';
        passed += r.status == Status::pass;
    }
    out << passed << '/' << reports.size() << " passed\n";
    return out.str();
}

} // namespace qseries
