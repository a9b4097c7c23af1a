#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "qseries/partitions.hpp"
#include "qseries/theta.hpp"

namespace qseries {

enum class Kind { equality, support, positivity, inequality };
enum class Status { pass, fail, error };

std::string kind_name(Kind k);
std::string status_name(Status s);

/// Deferred series constructor; the argument is the requested precision.
using Builder = std::function<RatSeries(std::int64_t)>;

/// N(a,M;n) for stat == rank, C(a,M;n) for crank.
struct CountSelector {
    Stat stat = Stat::rank;
    std::int64_t a = 0;
    std::size_t M = 1;

    [[nodiscard]] std::string str() const;
};

struct SupportSpec {
    std::int64_t t = 1;
    std::vector<std::int64_t> allowed;
};

/// greater(t n + r) >= lesser(t n + r) for threshold <= n <= max_n.
struct InequalitySpec {
    CountSelector greater;
    CountSelector lesser;
    std::int64_t t = 1;
    std::int64_t r = 0;
    std::int64_t threshold = 0;
};

struct IdentityEntry {
    std::string id;
    std::string paper_label;
    std::string group;
    Kind kind = Kind::equality;
    /// Equality: lhs == rhs == every chain member. Support and positivity
    /// only use lhs. Inequality uses none of the builders.
    Builder lhs;
    Builder rhs;
    std::vector<Builder> chain;
    SupportSpec support;
    /// Positivity: coefficients from from_n through prec - 1 must be > 0.
    std::int64_t from_n = 0;
    InequalitySpec inequality;
    /// Faults added to the greater side of an inequality, keyed by exponent.
    std::vector<std::pair<std::int64_t, Integer>> injected;
    /// For inequalities the count tables reach q^{default_prec - 1}.
    std::int64_t default_prec = 100;
};

struct MismatchReport {
    std::int64_t exponent = 0;
    std::string lhs;
    std::string rhs;
};

struct VerificationReport {
    std::string id;
    std::string paper_label;
    Status status = Status::error;
    /// Last exponent (or progression argument) that was checked and agreed.
    std::int64_t verified_through = -1;
    std::optional<MismatchReport> first_mismatch;
    std::int64_t ms = 0;
    std::string notes;
    std::string error;
};

struct CheckOutcome {
    bool passed = true;
    std::optional<MismatchReport> failure;
    /// Inequality arguments below the threshold where greater < lesser.
    std::vector<std::int64_t> exceptions;
};

const std::vector<IdentityEntry> &registry();
std::vector<IdentityEntry> build_registry();

/// Shell-style match with '*' and '?'.
bool glob_match(const std::string &pattern, const std::string &text);

CheckOutcome support_check(const RatSeries &f, std::int64_t t, const std::vector<std::int64_t> &allowed);
CheckOutcome positivity_check(const RatSeries &f, std::int64_t from_n, std::int64_t max_n);
/// Throws WindowError if either table stops before t * max_n + r.
CheckOutcome inequality_check(const CountTable &greater, std::int64_t a_greater, const CountTable &lesser,
                              std::int64_t a_lesser, std::int64_t t, std::int64_t r, std::int64_t threshold,
                              std::int64_t max_n, const std::vector<std::pair<std::int64_t, Integer>> &injected = {});

VerificationReport verify_identity(const IdentityEntry &entry, std::optional<std::int64_t> prec = std::nullopt);

/// Reports come back in registry order. threads == 0 picks the hardware count.
std::vector<VerificationReport> verify_all(const std::vector<IdentityEntry> &entries,
                                           std::optional<std::int64_t> prec = std::nullopt,
                                           const std::string &filter = "", unsigned threads = 0);
std::vector<VerificationReport> verify_all(std::optional<std::int64_t> prec = std::nullopt,
                                           const std::string &filter = "", unsigned threads = 0);

bool all_passed(const std::vector<VerificationReport> &reports);

/// Copy of entry with delta q^exponent added to the checked side
/// (rhs for equalities, lhs for support/positivity, the greater count for
/// inequalities).
IdentityEntry perturb(const IdentityEntry &entry, std::int64_t exponent, const Rational &delta);

std::string report_json(const std::vector<VerificationReport> &reports, std::int64_t prec_default,
                        const std::string &timestamp, bool include_timing = true);
std::string report_text(const std::vector<VerificationReport> &reports);

} // namespace qseries
