#include <mutex>
#include <set>

#include "qseries/identities.hpp"
#include "registry_dsl.hpp"

namespace qseries {

namespace {

using namespace dsl;

constexpr std::int64_t kTheta = 200;
constexpr std::int64_t kMock = 100;

Rational frac(long n, long d) { return Rational(Integer(n), Integer(d)); }

std::string signed_power(int sign, std::int64_t a)
{
    return std::string(sign < 0 ? "-" : "") + "q^" + std::to_string(a);
}

/// x = sign q^a on base q^m, written for ids.
std::string spec_tag(int sign, std::int64_t a, std::int64_t m)
{
    return "x=" + signed_power(sign, a) + ",m=" + std::to_string(m);
}

/// sum_n (-1)^n qsign^{C(n,2)} xsign^n q^{m C(n,2) + a n}, i.e. j(xsign q^a; qsign q^m).
Expr twisted_theta_sum(int xsign, std::int64_t a, int qsign, std::int64_t m)
{
    return custom([=](std::int64_t prec) {
        auto E = [&](std::int64_t n) { return m * n * (n - 1) / 2 + a * n; };
        const std::int64_t centre = floor_div(m - 2 * a, 2 * m);
        const std::int64_t lo = std::min(E(centre), E(centre + 1));
        if (lo >= prec)
            return RatSeries(Rational(0), prec);
        std::vector<Rational> c(static_cast<std::size_t>(prec - lo), Rational(0));
        auto add = [&](std::int64_t n) {
            int sgn = residue(n, 2) == 1 ? -1 : 1;
            if (qsign < 0 && residue(n * (n - 1) / 2, 2) == 1)
                sgn = -sgn;
            if (xsign < 0 && residue(n, 2) == 1)
                sgn = -sgn;
            c[static_cast<std::size_t>(E(n) - lo)] += Rational(sgn);
        };
        for (std::int64_t n = centre; E(n) < prec; --n)
            add(n);
        for (std::int64_t n = centre + 1; E(n) < prec; ++n)
            add(n);
        return RatSeries(Rational(0), lo, prec, std::move(c));
    });
}

/// Classical single-residue generating functions for ranks and cranks:
/// (1/(q)_inf) sum_{k>=1} (-1)^{k-1} q^{E(k) + |m| k} (1 - q^k) summed over m = a (mod M),
/// with E(k) = k(3k-1)/2 for ranks and k(k-1)/2 for cranks.
Expr classical_count(Stat stat, std::int64_t a, std::size_t M)
{
    return custom([=](std::int64_t prec) {
        const auto mod = static_cast<std::int64_t>(M);
        std::vector<Integer> c(static_cast<std::size_t>(std::max<std::int64_t>(prec, 0)), Integer(0));
        auto bump = [&](std::int64_t e, long v) {
            if (e >= 0 && e < prec)
                c[static_cast<std::size_t>(e)] += v;
        };
        for (std::int64_t m = -prec; m <= prec; ++m) {
            if (residue(m - a, mod) != 0)
                continue;
            const std::int64_t am = m < 0 ? -m : m;
            for (std::int64_t k = 1;; ++k) {
                const std::int64_t base = (stat == Stat::rank ? k * (3 * k - 1) / 2 : k * (k - 1) / 2) + am * k;
                if (base >= prec)
                    break;
                const long sgn = k % 2 == 1 ? 1 : -1;
                bump(base, sgn);
                bump(base + k, -sgn);
            }
        }
        IntSeries inner(Integer(0), 0, prec, std::move(c));
        IntSeries out = inner * pochhammer_infinite(1, 1, 1, prec).invert();
        if (stat == Stat::rank && residue(a, mod) == 0)
            out = out + Integer(1);
        return to_rational(out);
    });
}

struct Registry {
    std::vector<IdentityEntry> out;
    std::string group;

    IdentityEntry &add(std::string id, std::string label, Kind kind, std::int64_t prec)
    {
        IdentityEntry e;
        e.id = std::move(id);
        e.paper_label = std::move(label);
        e.group = group;
        e.kind = kind;
        e.default_prec = prec;
        out.push_back(std::move(e));
        return out.back();
    }

    void eq(std::string id, std::string label, const Expr &lhs, const Expr &rhs, std::int64_t prec,
            const std::vector<Expr> &chain = {})
    {
        auto &e = add(std::move(id), std::move(label), Kind::equality, prec);
        e.lhs = build(lhs);
        e.rhs = build(rhs);
        for (const auto &c : chain)
            e.chain.push_back(build(c));
    }

    void support(std::string id, std::string label, const Expr &f, std::int64_t t, std::vector<std::int64_t> allowed,
                 std::int64_t prec)
    {
        auto &e = add(std::move(id), std::move(label), Kind::support, prec);
        e.lhs = build(f);
        e.support = {t, std::move(allowed)};
    }

    void positive(std::string id, std::string label, const Expr &f, std::int64_t from_n, std::int64_t prec)
    {
        auto &e = add(std::move(id), std::move(label), Kind::positivity, prec);
        e.lhs = build(f);
        e.from_n = from_n;
    }

    void inequality(std::string id, std::string label, CountSelector greater, CountSelector lesser, std::int64_t t,
                    std::int64_t r, std::int64_t threshold, std::int64_t prec)
    {
        auto &e = add(std::move(id), std::move(label), Kind::inequality, prec);
        e.inequality = {greater, lesser, t, r, threshold};
    }
};

// Recurring quotients over J_4.
Expr over_J4(std::vector<Factor> num, std::int64_t shift = 0, const Rational &coef = Rational(1))
{
    return quot(std::move(num), {Jm(4)}, shift, coef);
}

Expr J12J14(const Rational &c) { return over_J4({J(1, 2), J(1, 4)}, 0, c); }
Expr Jb12Jb14(const Rational &c) { return over_J4({Jb(1, 2), Jb(1, 4)}, 0, c); }

// ---------------------------------------------------------------- toolkit

void toolkit(Registry &R)
{
    R.group = "toolkit";
    const std::string pr = "product-rearrangements";
    R.eq("rearrangement/Jbar(0,1)", pr, quot({Jb(0, 1)}), quot({Jb(1, 4)}, {}, 0, 2), kTheta,
         {quot({Jm(2, 2)}, {Jm(1)}, 0, 2)});
    R.eq("rearrangement/Jbar(1,2)", pr, quot({Jb(1, 2)}), quot({Jm(2, 5)}, {Jm(1, 2), Jm(4, 2)}), kTheta);
    R.eq("rearrangement/J(1,2)", pr, quot({J(1, 2)}), quot({Jm(1, 2)}, {Jm(2)}), kTheta);
    R.eq("rearrangement/Jbar(1,3)", pr, quot({Jb(1, 3)}), quot({Jm(2), Jm(3, 2)}, {Jm(1), Jm(6)}), kTheta);
    R.eq("rearrangement/J(1,4)", pr, quot({J(1, 4)}), quot({Jm(1), Jm(4)}, {Jm(2)}), kTheta);
    R.eq("rearrangement/J(1,6)", pr, quot({J(1, 6)}), quot({Jm(1), Jm(6, 2)}, {Jm(2), Jm(3)}), kTheta);
    R.eq("rearrangement/Jbar(1,6)", pr, quot({Jb(1, 6)}), quot({Jm(2, 2), Jm(3), Jm(12)}, {Jm(1), Jm(4), Jm(6)}),
         kTheta);

    // Quintuple product: j(q^m x^3; q^{3m}) + x j(q^{2m} x^3; q^{3m}) = J_m j(x^2; q^m) / j(x; q^m).
    auto quintuple = [&](const std::string &id, const std::string &label, int s, std::int64_t a, std::int64_t m) {
        R.eq(id + "/" + spec_tag(s, a, m), label,
             quot({jx(s, m + 3 * a, 3 * m)}) + quot({jx(s, 2 * m + 3 * a, 3 * m)}, {}, a, s),
             quot({Jm(m), J(2 * a, m)}, {jx(s, a, m)}), kTheta);
    };
    for (auto [s, a, m] : std::vector<std::tuple<int, std::int64_t, std::int64_t>>{
             {1, 1, 3}, {-1, 1, 3}, {1, 1, 4}, {-1, 2, 5}, {1, 2, 7}, {-1, 3, 7}, {1, 1, 2}, {-1, 0, 4}, {1, 3, 8},
             {-1, 5, 9}})
        quintuple("H1Thm1.0", "H1Thm1.0", s, a, m);
    for (auto [s, a] : std::vector<std::pair<int, std::int64_t>>{{1, 5}, {1, 10}, {-1, 5}, {1, 3}})
        quintuple("quintuple-spec", "quintuple-spec", s, a, 25);

    // j(q x; q) = -x^{-1} j(x; q), sum form on the left.
    for (auto [s, a, m] : std::vector<std::tuple<int, std::int64_t, std::int64_t>>{
             {1, 1, 3}, {-1, 2, 5}, {1, 3, 7}, {-1, -4, 6}, {1, -2, 9}})
        R.eq("1.8/" + spec_tag(s, a, m), "1.8", atom_sum({s, a + m, m}), quot({jx(s, a, m)}, {}, -a, -s), kTheta);
    // j(x; q) = j(q/x; q)
    for (auto [s, a, m] : std::vector<std::tuple<int, std::int64_t, std::int64_t>>{
             {1, 1, 4}, {-1, 3, 5}, {1, 5, 8}, {-1, -2, 7}, {1, 9, 4}})
        R.eq("1.7/" + spec_tag(s, a, m), "1.7", atom_sum({s, a, m}), quot({jx(s, m - a, m)}), kTheta);
    // j(x; q) = J_1 j(x; q^2) j(q x; q^2) / J_2^2
    for (auto [s, a, m] : std::vector<std::tuple<int, std::int64_t, std::int64_t>>{
             {1, 1, 3}, {-1, 1, 4}, {1, 2, 5}, {-1, 3, 7}, {1, -1, 6}, {-1, 0, 2}})
        R.eq("1.10/" + spec_tag(s, a, m), "1.10", atom_sum({s, a, m}),
             quot({Jm(m), jx(s, a, 2 * m), jx(s, a + m, 2 * m)}, {Jm(2 * m, 2)}), kTheta);
    // j(x; -q) = j(x; q^2) j(-q x; q^2) / J_{1,4}; x = s q^a = s (-1)^a (-q)^a.
    for (auto [s, a] : std::vector<std::pair<int, std::int64_t>>{{-1, 0}, {-1, 2}, {1, 1}, {1, 3}, {-1, -2}, {1, -1}})
        R.eq("1.11/" + spec_tag(s, a, 1), "1.11", flipped(atom_sum({(a % 2 == 0) ? s : -s, a, 1})),
             quot({jx(s, a, 2), jx(-s, a + 1, 2)}, {J(1, 4)}), kTheta);

    // n = 2 case of the root-of-unity product, read over base q: j(x^2; q^2) = J_2 j(x; q) j(-x; q) / J_1^2.
    for (auto [s, a, m] : std::vector<std::tuple<int, std::int64_t, std::int64_t>>{
             {1, 1, 3}, {-1, 1, 4}, {1, 2, 5}, {-1, 3, 7}, {1, -2, 6}})
        R.eq("1.12/n=2," + spec_tag(s, a, m), "1.12", quot({jx(1, 2 * a, 2 * m)}),
             quot({Jm(2 * m), jx(s, a, m), jx(-s, a, m)}, {Jm(m, 2)}), kTheta);

    // General m-dissection of j(z; q^b) at z = s q^a.
    auto jsplitgen = [&](std::int64_t mm, int s, std::int64_t a, std::int64_t b) {
        Expr rhs = zero();
        for (std::int64_t k = 0; k < mm; ++k) {
            const int coef = ((k % 2 == 0) ? 1 : -1) * ((s < 0 && k % 2 == 1) ? -1 : 1);
            const int inner_sign = ((mm + 1) % 2 == 0 ? 1 : -1) * ((s < 0 && mm % 2 == 1) ? -1 : 1);
            const std::int64_t e = b * (mm * (mm - 1) / 2 + mm * k) + a * mm;
            rhs = rhs + quot({jx(inner_sign, e, b * mm * mm)}, {}, b * k * (k - 1) / 2 + a * k, coef);
        }
        R.eq("jsplitgen/n=" + std::to_string(mm) + "," + spec_tag(s, a, b), "jsplitgen", atom_sum({s, a, b}), rhs,
             kTheta);
    };
    for (auto [mm, s, a, b] : std::vector<std::tuple<std::int64_t, int, std::int64_t, std::int64_t>>{
             {3, 1, 1, 1}, {3, -1, 2, 5}, {5, 1, 1, 3}, {5, -1, 1, 2}, {7, 1, 2, 7}, {7, -1, 3, 4}, {7, 1, 1, 3}})
        jsplitgen(mm, s, a, b);

    // j(z; q^b) = j(-q^b z^2; q^{4b}) - z j(-q^{3b} z^2; q^{4b})
    std::vector<std::tuple<int, std::int64_t, std::int64_t>> jsplit_specs{
        {1, 1, 2}, {1, 1, 4}, {-1, 1, 2}, {-1, 1, 4}, {1, 4, 8}, {-1, 0, 8}, {1, 2, 16}, {1, 6, 16}};
    for (std::int64_t i = 0; jsplit_specs.size() < 20; ++i) {
        const int s = i % 2 == 0 ? 1 : -1;
        const std::int64_t b = 1 + i % 5;
        const std::int64_t a = (i * 7) % 11 - 4;
        if (s == 1 && residue(a, b) == 0)
            continue;
        jsplit_specs.emplace_back(s, a, b);
    }
    for (auto [s, a, b] : jsplit_specs)
        R.eq("jsplit/" + spec_tag(s, a, b), "jsplit", atom_sum({s, a, b}),
             quot({jx(-1, b + 2 * a, 4 * b)}) - quot({jx(-1, 3 * b + 2 * a, 4 * b)}, {}, a, s), kTheta);

    // Two-variable product formulas at x = s1 q^a, y = s2 q^b over base q^m.
    std::vector<std::tuple<int, std::int64_t, int, std::int64_t, std::int64_t>> pairs;
    for (std::int64_t i = 0; pairs.size() < 20; ++i) {
        const int s1 = (i / 2) % 2 == 0 ? 1 : -1;
        const int s2 = i % 2 == 0 ? -1 : 1;
        const std::int64_t m = 2 + i % 6;
        const std::int64_t a = (i * 5) % 9 - 3;
        const std::int64_t b = (i * 3) % 7 - 1;
        pairs.emplace_back(s1, a, s2, b, m);
    }
    for (auto [s1, a, s2, b, m] : pairs) {
        const int ss = s1 * s2;
        const std::string tag = "x=" + signed_power(s1, a) + ",y=" + signed_power(s2, b) + ",m=" + std::to_string(m);
        R.eq("H1Thm1.1/" + tag, "H1Thm1.1", quot({jx(s1, a, m), jx(s2, b, m)}),
             quot({jx(-ss, a + b, 2 * m), jx(-ss, m - a + b, 2 * m)}) -
                 quot({jx(-ss, m + a + b, 2 * m), jx(-ss, b - a, 2 * m)}, {}, a, s1),
             kTheta);
        R.eq("H1Thm1.2B/" + tag, "H1Thm1.2B",
             quot({jx(-s1, a, m), jx(s2, b, m)}) + quot({jx(s1, a, m), jx(-s2, b, m)}),
             quot({jx(ss, a + b, 2 * m), jx(ss, m - a + b, 2 * m)}, {}, 0, 2), kTheta);
    }

    // j(ac,a/c,bd,b/d) = j(ad,a/d,bc,b/c) + (b/c) j(ab,a/b,cd,c/d) with signed powers of q.
    struct SP {
        int s;
        std::int64_t e;
    };
    auto prod4 = [](SP x, SP y, SP u, SP v, std::int64_t m) {
        return quot({jx(x.s * y.s, x.e + y.e, m), jx(x.s * y.s, x.e - y.e, m), jx(u.s * v.s, u.e + v.e, m),
                     jx(u.s * v.s, u.e - v.e, m)});
    };
    std::vector<std::tuple<SP, SP, SP, SP, std::int64_t>> wspecs{
        {{-1, 32}, {1, 20}, {1, 16}, {-1, 8}, 64}, {{1, 1}, {1, 2}, {-1, 3}, {1, 5}, 7},
        {{-1, 1}, {1, 3}, {1, 2}, {-1, 1}, 6},     {{1, 2}, {-1, 5}, {1, 1}, {1, 3}, 9},
        {{-1, 4}, {-1, 1}, {1, 6}, {1, 2}, 11},    {{1, 3}, {1, 1}, {-1, 0}, {1, 2}, 5},
        {{1, 0}, {-1, 2}, {1, 5}, {-1, 3}, 8},     {{-1, 2}, {1, 7}, {-1, 3}, {1, 1}, 10},
        {{1, 5}, {1, 2}, {1, 4}, {-1, 6}, 13},     {{-1, 1}, {-1, 4}, {1, 2}, {1, 9}, 12}};
    for (auto [a, b, c, d, m] : wspecs) {
        const std::string tag = "a=" + signed_power(a.s, a.e) + ",b=" + signed_power(b.s, b.e) + ",c=" +
                                signed_power(c.s, c.e) + ",d=" + signed_power(d.s, d.e) + ",m=" + std::to_string(m);
        R.eq("Weierstrass/" + tag, "Weierstrass", prod4(a, c, b, d, m),
             prod4(a, d, b, c, m) + qpow(b.e - c.e, Rational(b.s * c.s) * prod4(a, b, c, d, m)), kTheta);
    }

    for (int s : {1, -1}) {
        for (std::int64_t a : {-1, 0, 1, 2, 3}) {
            // j(q^2x;q^4)j(q^5x;q^8) + (q/x) j(x;q^4)j(qx;q^8) = (J_1/J_4) j(-q^3x;q^4)j(q^3x;q^8)
            R.eq("hecke-phi-id/" + spec_tag(s, a, 1), "hecke-phi-id",
                 quot({jx(s, 2 + a, 4), jx(s, 5 + a, 8)}) + quot({jx(s, a, 4), jx(s, 1 + a, 8)}, {}, 1 - a, s),
                 quot({Jm(1), jx(-s, 3 + a, 4), jx(s, 3 + a, 8)}, {Jm(4)}), kTheta);
            // j(-x;q^4)j(-q^5x;q^8) - j(-q^2x;q^4)j(-qx;q^8) = x (J_1/J_4) j(q^3x;q^4)j(-q^7x;q^8)
            R.eq("hecke-phi-id-alt/" + spec_tag(s, a, 1), "hecke-phi-id-alt",
                 quot({jx(-s, a, 4), jx(-s, 5 + a, 8)}) - quot({jx(-s, 2 + a, 4), jx(-s, 1 + a, 8)}),
                 quot({Jm(1), jx(s, 3 + a, 4), jx(-s, 7 + a, 8)}, {Jm(4)}, a, s), kTheta);
        }
    }
}

/// Every g(s q^a; q^m) the registry evaluates, with 2a < m.
const std::vector<std::pair<std::int64_t, std::int64_t>> &g_arguments()
{
    static const std::vector<std::pair<std::int64_t, std::int64_t>> v{
        {2, 16}, {6, 16}, {2, 10}, {4, 10}, {1, 4},  {12, 64}, {20, 64},
        {4, 64}, {28, 64}, {5, 25}, {10, 25}, {7, 49}, {21, 49}, {14, 49}};
    return v;
}

void mock_toolkit(Registry &R)
{
    R.group = "toolkit";
    for (auto [a, m] : g_arguments()) {
        for (int s : {1, -1}) {
            // g(x) = -x^{-1} + q x^{-3} g(-q x^{-2}; q^4) - q g(-q x^2; q^4) + J_2 J_{2,4}^2 / (x j(x) j(-q x^2; q^2))
            R.eq("gsplit/" + spec_tag(s, a, m), "gsplit", g(s, a, m),
                 qpow(-a, cst(-s)) + g(-1, m - 2 * a, 4 * m, m - 3 * a, s) - g(-1, m + 2 * a, 4 * m, m) +
                     quot({Jm(2 * m), J(2 * m, 4 * m, 2)}, {jx(s, a, m), jx(-1, m + 2 * a, 2 * m)}, -a, s),
                 kMock);
        }
        R.eq("rootsof1n2k0/" + spec_tag(1, a, m), "rootsof1n2k0", g(1, a, m) + g(-1, a, m),
             g(-1, m + 2 * a, 4 * m, m, -2) +
                 quot({Jm(2 * m), Jb(m, 4 * m, 2)}, {jx(-1, m + 2 * a, 4 * m), J(2 * a, 2 * m)}, 0, 2),
             kMock);
        R.eq("rootsof1n2k1/" + spec_tag(1, a, m), "rootsof1n2k1", g(1, a, m) - g(-1, a, m),
             qpow(-a, cst(-2)) + g(-1, m - 2 * a, 4 * m, m - 3 * a, 2) +
                 quot({Jm(2 * m), Jb(m, 4 * m, 2)}, {jx(-1, 3 * m + 2 * a, 4 * m), J(2 * a, 2 * m)}, -a, 2),
             kMock);
    }
}

// ------------------------------------------------------------ mock theta

void mock_theta(Registry &R)
{
    R.group = "mock-theta";
    R.eq("mock-theta-f0", "f0-identity", eulerian(Eulerian::f0),
         g(1, 2, 10, 2, -2) + quot({J(5, 10), J(2, 5)}, {Jm(1)}), kMock);
    R.eq("mock-theta-f1", "f1-identity", eulerian(Eulerian::f1),
         g(1, 4, 10, 3, -2) + quot({J(5, 10), J(1, 5)}, {Jm(1)}), kMock);
}

// ------------------------------------------------------ deviations, M = 4

Expr thmD4(std::int64_t a)
{
    switch (a) {
    case 0: return comb(Family::theta4, {-5, 3, 1, 1}) + Rational(2) * comb(Family::G4, {-1, 0});
    case 1:
    case 3: return comb(Family::theta4, {3, -1, -3, 1}) + comb(Family::G4, {1, 1});
    default: return comb(Family::theta4, {-1, -1, 5, -3}) + Rational(2) * comb(Family::G4, {0, -1});
    }
}

Expr thmDC4(std::int64_t a)
{
    switch (a) {
    case 0: return comb(Family::theta4, {3, -1, 1, -3});
    case 1:
    case 3: return comb(Family::theta4, {-1, -1, 1, 1});
    default: return comb(Family::theta4, {-1, 3, -3, 1});
    }
}

Expr propD4(std::int64_t a)
{
    switch (a) {
    case 0:
        return cst(2) + g(-1, 2, 16, 2, -2) + over_J4({Jb(4, 8), Jb(6, 16)}, 0, -2) + Jb12Jb14(frac(1, 2)) +
               J12J14(frac(1, 4));
    case 1:
        return cst(-1) + g(-1, 2, 16, 2) + g(-1, 6, 16, 5) + over_J4({Jb(4, 8), J(1, 4)}) + J12J14(frac(-1, 4));
    default:
        return g(-1, 6, 16, 5, -2) + over_J4({Jb(4, 8), Jb(2, 16)}, 1, 2) + Jb12Jb14(frac(-1, 2)) +
               J12J14(frac(1, 4));
    }
}

/// (1/J_4)[Jb48 Jb6,16 + s2 q^2 Jb08 Jb14,16] + s1 (q/J_4)[Jb48 Jb14,16 + t Jb08 Jb6,16]
Expr split4(int s2, int s1, int t)
{
    return over_J4({Jb(4, 8), Jb(6, 16)}) + over_J4({Jb(0, 8), Jb(14, 16)}, 2, s2) +
           over_J4({Jb(4, 8), Jb(14, 16)}, 1, s1) + over_J4({Jb(0, 8), Jb(6, 16)}, 1, s1 * t);
}

void deviations4(Registry &R)
{
    R.group = "D4";
    R.eq("D04-deviant-alt", "D04-deviant-alt", dev(Stat::rank, 0, 4), thmD4(0), kMock);
    R.eq("D14-deviant-alt", "D14-deviant-alt", dev(Stat::rank, 1, 4), thmD4(1), kMock, {dev(Stat::rank, 3, 4)});
    R.eq("D24-deviant-alt", "D24-deviant-alt", dev(Stat::rank, 2, 4), thmD4(2), kMock);

    R.eq("D04-deviant", "D04-deviant", dev(Stat::rank, 0, 4), propD4(0), kMock);
    R.eq("D14-deviant", "D14-deviant", dev(Stat::rank, 1, 4), propD4(1), kMock, {dev(Stat::rank, 3, 4)});
    R.eq("D24-deviant", "D24-deviant", dev(Stat::rank, 2, 4), propD4(2), kMock);
    R.eq("D04-final", "D04-final", dev(Stat::rank, 0, 4), propD4(0), kMock);
    R.eq("D14-final", "D14-final", dev(Stat::rank, 1, 4), propD4(1), kMock);
    R.eq("D24-final", "D24-final", dev(Stat::rank, 2, 4),
         g(-1, 6, 16, 5, -2) + over_J4({Jb(4, 8), Jb(2, 16)}, 1, 2) +
             quot({Jb(1, 2), J(2, 4)}, {Jm(1)}, 0, frac(-1, 2)) + J12J14(frac(1, 4)),
         kMock);

    R.eq("D04-prefinal", "D04-prefinal", dev(Stat::rank, 0, 4),
         g(-1, 1, 4, 1) - g(1, 1, 4, 1) + Jb12Jb14(frac(1, 2)) + J12J14(frac(1, 4)), kMock);
    R.eq("D14-prefinal", "D14-prefinal", dev(Stat::rank, 1, 4), g(-1, 1, 4, 1, -1) + J12J14(frac(-1, 4)), kMock);
    R.eq("D24-prefinal", "D24-prefinal", dev(Stat::rank, 2, 4),
         g(-1, 1, 4, 1) + g(1, 1, 4, 1) - Jb12Jb14(frac(1, 2)) + J12J14(frac(1, 4)), kMock);

    for (std::int64_t a = 0; a < 3; ++a)
        R.eq("D" + std::to_string(a) + "4-prop-vs-thm", "D4-rewrite-1", propD4(a), thmD4(a), kMock);

    const Expr inv_J4 = quot({}, {Jm(4)});
    R.eq("D4-rewrite-1", "D4-rewrite-1", J12J14(1), split4(1, -1, 1), kTheta,
         {inv_J4 * (quot({Jb(4, 8)}) - quot({Jb(0, 8)}, {}, 1)) * (quot({Jb(6, 16)}) - quot({Jb(14, 16)}, {}, 1))});
    R.eq("D4-rewrite-2", "D4-rewrite-2", Jb12Jb14(1), split4(1, 1, 1), kTheta);
    R.eq("D4-rewrite-3", "D4-rewrite-3", over_J4({Jb(4, 8), J(1, 4)}),
         over_J4({Jb(4, 8), Jb(6, 16)}) - over_J4({Jb(4, 8), Jb(14, 16)}, 1), kTheta);

    R.group = "DC4";
    R.eq("DC04-deviant-final", "DC04-deviant-final", dev(Stat::crank, 0, 4), thmDC4(0), kTheta);
    R.eq("DC14-deviant-final", "DC14-deviant-final", dev(Stat::crank, 1, 4), thmDC4(1), kTheta,
         {dev(Stat::crank, 3, 4)});
    R.eq("DC24-deviant-final", "DC24-deviant-final", dev(Stat::crank, 2, 4), thmDC4(2), kTheta);
    R.eq("DC04-prefinal", "DC04-prefinal", dev(Stat::crank, 0, 4),
         over_J4({J(1, 2), Jb(1, 4)}, 0, frac(1, 2)) + J12J14(frac(1, 4)), kTheta,
         {quot({Jm(1), Jm(2)}, {Jm(4)}, 0, frac(1, 2)) + quot({Jm(1, 3)}, {Jm(2, 2)}, 0, frac(1, 4))});
    R.eq("DC-rewrite-1", "DC-rewrite-1", over_J4({J(1, 2), Jb(1, 4)}), split4(-1, 1, -1), kTheta);

    R.group = "ABCKM";
    const Expr mock16 = cst(2) + g(-1, 2, 16, 2, -2) + g(-1, 6, 16, 5, 2);
    R.eq("ABCKM-Thm1.6", "ABCKM-Thm1.6", N(0, 4) - N(2, 4),
         mock16 - over_J4({J(2, 4), Jb(6, 16)}) + over_J4({J(2, 4), Jb(2, 16)}, 1), kMock);
    R.eq("ABCKM-Thm1.6-prefinal", "ABCKM-Thm1.6-prefinal", dev(Stat::rank, 0, 4) - dev(Stat::rank, 2, 4),
         mock16 - over_J4({J(1, 2), Jb(1, 4)}), kMock,
         {mock16 - over_J4({Jb(4, 8), Jb(6, 16)}) + over_J4({Jb(0, 8), Jb(14, 16)}, 2) -
              over_J4({Jb(4, 8), Jb(14, 16)}, 1) + over_J4({Jb(0, 8), Jb(6, 16)}, 1),
          mock16 - inv_J4 * (quot({Jb(4, 8)}) - quot({Jb(0, 8)}, {}, 1)) *
                       (quot({Jb(6, 16)}) + quot({Jb(14, 16)}, {}, 1))});
    R.eq("ABCKM-productid", "ABCKM-productid", over_J4({Jb(1, 4), J(1, 2)}), over_J4({J(2, 4), J(1, 4)}), kTheta,
         {over_J4({J(2, 4)}) * (quot({Jb(6, 16)}) - quot({Jb(14, 16)}, {}, 1))});
    R.eq("ABCKM-Thm1.7A", "ABCKM-Thm1.7A", N(0, 8) - N(4, 8),
         cst(2) + g(1, 2, 16, 2, 2) - over_J4({Jb(2, 4), J(6, 16)}) + over_J4({Jb(2, 4), J(2, 16)}, 1), kMock);
    R.eq("ABCKM-Thm1.7B", "ABCKM-Thm1.7B", N(1, 8) - N(3, 8),
         cst(-1) + g(1, 2, 16, 2, -1) + g(1, 6, 16, 5) + over_J4({Jb(2, 4), J(6, 16)}), kMock);
    R.eq("ABCKM-id7.5", "ABCKM-id7.5", deflated(N(0, 4) - N(2, 4), 2, 0), flipped(deflated(N(0, 8) - N(4, 8), 2, 0)),
         151);
    R.eq("ABCKM-id7.6", "ABCKM-id7.6", deflated(N(0, 4) - N(2, 4), 2, 1),
         flipped(deflated(N(0, 8) + Rational(2) * N(1, 8) - Rational(2) * N(3, 8) - N(4, 8), 2, 1)), 150);
}

// ------------------------------------------------------ deviations, M = 8

Expr thmD8(std::int64_t a)
{
    using F = Family;
    switch (a) {
    case 0: return comb(F::theta8, {-9, 7, -3, 5, -1, -1, 5, -3}) + comb(F::G8, {1, -1, 0, 0});
    case 1:
    case 7: return comb(F::theta8, {7, -5, -3, 1, 3, -1, -3, 1}) + frac(1, 2) * comb(F::G8, {-1, 1, 1, 1});
    case 2:
    case 6: return comb(F::theta8, {-1, -1, 5, -3, -1, -1, 5, -3}) + comb(F::G8, {0, 0, 0, -1});
    case 3:
    case 5: return comb(F::theta8, {-1, 3, -3, 1, -5, 7, -3, 1}) + frac(1, 2) * comb(F::G8, {1, 1, -1, 1});
    default: return comb(F::theta8, {-1, -1, 5, -3, 7, -9, -3, 5}) + comb(F::G8, {-1, -1, 0, 0});
    }
}

Expr thmDC8(std::int64_t a)
{
    using F = Family;
    switch (a) {
    case 0: return comb(F::theta8, {3, -1, 1, -3, -1, 3, 1, -3}) + comb(F::theta8prime, {1, -1, -1, 1});
    case 1:
    case 7: return comb(F::theta8, {-1, -1, 1, 1, -1, -1, 1, 1}) + comb(F::theta8prime, {0, 1, 0, -1});
    case 2:
    case 6: return comb(F::theta8, {-1, 3, -3, 1, 3, -1, -3, 1});
    case 3:
    case 5: return comb(F::theta8, {-1, -1, 1, 1, -1, -1, 1, 1}) + comb(F::theta8prime, {0, -1, 0, 1});
    default: return comb(F::theta8, {3, -1, 1, -3, -1, 3, 1, -3}) + comb(F::theta8prime, {-1, 1, 1, -1});
    }
}

void deviations8(Registry &R)
{
    R.group = "D8";
    const std::string d8[] = {"D08", "D18", "D28", "D38", "D48"};
    for (std::int64_t a = 0; a <= 4; ++a) {
        std::vector<Expr> mirror;
        if (a != 0 && a != 4)
            mirror.push_back(dev(Stat::rank, 8 - a, 8));
        const std::string label = d8[a] + "-deviant-final";
        R.eq(label, label, dev(Stat::rank, a, 8), thmD8(a), kMock, mirror);
    }

    const Expr P = quot({Jm(8), Jb(1, 2), J(1, 8), Jb(3, 8)}, {Jm(4, 2), Jm(16)});
    const Expr g2p = g(1, 2, 16, 2), g2m = g(-1, 2, 16, 2), g6p = g(1, 6, 16, 5), g6m = g(-1, 6, 16, 5);
    const Rational h = frac(1, 2);
    R.eq("D08-deviant-pre", "D08-deviant-pre", dev(Stat::rank, 0, 8),
         cst(2) + g2p - g2m - over_J4({Jb(4, 8), Jb(6, 16)}) - over_J4({Jb(4, 8), J(6, 16)}) +
             Jb12Jb14(frac(1, 4)) + J12J14(frac(1, 8)) + h * P,
         kMock);
    R.eq("D18-deviant-pre", "D18-deviant-pre", dev(Stat::rank, 1, 8),
         cst(-1) - h * g2p + h * g2m + h * g6p + h * g6m + over_J4({Jb(4, 8), J(1, 4)}, 0, h) -
             over_J4({Jb(4, 8), J(2, 16)}, 1, h) + over_J4({Jb(4, 8), J(6, 16)}, 0, h) + J12J14(frac(-1, 8)) +
             over_J4({Jb(1, 2), J(14, 16)}, 1, h),
         kMock);
    R.eq("D28-deviant-pre", "D28-deviant-pre", dev(Stat::rank, 2, 8),
         -g6m + over_J4({Jb(4, 8), Jb(14, 16)}, 1) + Jb12Jb14(frac(-1, 4)) + J12J14(frac(1, 8)), kMock);
    R.eq("D38-deviant-pre", "D38-deviant-pre", dev(Stat::rank, 3, 8),
         h * g2p + h * g2m - h * g6p + h * g6m + over_J4({Jb(4, 8), J(1, 4)}, 0, h) +
             over_J4({Jb(4, 8), J(2, 16)}, 1, h) - over_J4({Jb(4, 8), J(6, 16)}, 0, h) + J12J14(frac(-1, 8)) -
             over_J4({Jb(1, 2), J(2, 16)}, 1, h),
         kMock);
    R.eq("D48-deviant-pre", "D48-deviant-pre", dev(Stat::rank, 4, 8),
         -g2p - g2m - over_J4({Jb(4, 8), Jb(6, 16)}) + over_J4({Jb(4, 8), J(6, 16)}) + Jb12Jb14(frac(1, 4)) +
             J12J14(frac(1, 8)) - h * P,
         kMock);

    R.eq("D8-rewrite-1", "D8-rewrite-1", P,
         over_J4({Jb(4, 8), J(6, 16)}) - over_J4({Jb(0, 8), J(14, 16)}, 2) + over_J4({Jb(0, 8), J(6, 16)}, 1) -
             over_J4({Jb(4, 8), J(14, 16)}, 1),
         kTheta,
         {quot({Jm(8)}, {Jm(4, 2), Jm(16)}) * (quot({Jb(4, 8)}) + quot({Jb(0, 8)}, {}, 1)) *
          (quot({J(6, 16), J(12, 16)}) - quot({J(14, 16), J(4, 16)}, {}, 1))});

    R.eq("base-splits/Jbar(6,16)", "base-splits", quot({Jb(6, 16)}), quot({Jb(28, 64)}) + quot({Jb(60, 64)}, {}, 6),
         kTheta);
    R.eq("base-splits/Jbar(2,16)", "base-splits", quot({Jb(2, 16)}), quot({Jb(20, 64)}) + quot({Jb(52, 64)}, {}, 2),
         kTheta);
    R.eq("base-splits/J(6,16)", "base-splits", quot({J(6, 16)}), quot({Jb(28, 64)}) - quot({Jb(60, 64)}, {}, 6),
         kTheta);
    R.eq("base-splits/J(2,16)", "base-splits", quot({J(2, 16)}), quot({Jb(20, 64)}) - quot({Jb(52, 64)}, {}, 2),
         kTheta);

    R.eq("D18-D28-sum", "D18-D28-sum", dev(Stat::rank, 1, 8) + dev(Stat::rank, 2, 8),
         cst(-1) - h * g2p + h * g2m + h * g6p - h * g6m + comb(Family::theta8, {6, -6, 2, -2, 2, -2, 2, -2}),
         kMock);
    R.eq("D38-D48-sum", "D38-D48-sum", dev(Stat::rank, 3, 8) + dev(Stat::rank, 4, 8),
         -h * g2p - h * g2m - h * g6p + h * g6m + comb(Family::theta8, {-2, 2, 2, -2, 2, -2, -6, 6}), kMock);

    R.group = "DC8";
    for (std::int64_t a = 0; a <= 4; ++a) {
        std::vector<Expr> mirror;
        if (a != 0 && a != 4)
            mirror.push_back(dev(Stat::crank, 8 - a, 8));
        const std::string label = "D" + std::string("C") + std::to_string(a) + "8-deviant-final";
        R.eq(label, label, dev(Stat::crank, a, 8), thmDC8(a), kTheta, mirror);
    }
    R.eq("DC08-pre-prefinal", "DC08-pre-prefinal", dev(Stat::crank, 0, 8),
         over_J4({J(4, 8), J(6, 16)}, 0, h) - over_J4({J(4, 8), J(2, 16)}, 1, h) +
             over_J4({J(1, 2), Jb(1, 4)}, 0, frac(1, 4)) + J12J14(frac(1, 8)),
         kTheta);
    R.eq("DC08-prefinal", "DC08-prefinal", dev(Stat::crank, 0, 8),
         over_J4({Jb(4, 8), Jb(6, 16)}, 0, frac(3, 8)) - over_J4({Jb(0, 8), Jb(14, 16)}, 2, frac(1, 8)) +
             over_J4({Jb(4, 8), Jb(14, 16)}, 1, frac(1, 8)) - over_J4({Jb(0, 8), Jb(6, 16)}, 1, frac(3, 8)) +
             over_J4({J(4, 8), J(6, 16)}, 0, h) - over_J4({J(4, 8), J(2, 16)}, 1, h),
         kTheta);
    R.eq("DC28-pre-final", "DC28-pre-final", dev(Stat::crank, 2, 8),
         over_J4({J(1, 2), Jb(1, 4)}, 0, frac(-1, 4)) + J12J14(frac(1, 8)), kTheta,
         {quot({Jm(1), Jm(2)}, {Jm(4)}, 0, frac(-1, 4)) + quot({Jm(1, 3)}, {Jm(2, 2)}, 0, frac(1, 8))});
    R.eq("DC28-2-dissection", "DC28-2-dissection", dev(Stat::crank, 2, 8),
         over_J4({Jb(4, 8), Jb(6, 16)}, 0, frac(-1, 8)) + over_J4({Jb(0, 8), Jb(14, 16)}, 2, frac(3, 8)) -
             over_J4({Jb(4, 8), Jb(14, 16)}, 1, frac(3, 8)) + over_J4({Jb(0, 8), Jb(6, 16)}, 1, frac(1, 8)),
         kTheta);
    R.eq("DC08-DC18-sum", "DC08-DC18-sum", dev(Stat::crank, 0, 8) + dev(Stat::crank, 1, 8),
         comb(Family::theta8, {2, -2, 2, -2, -2, 2, 2, -2}) + comb(Family::theta8prime, {1, 0, -1, 0}), kTheta);
    R.eq("DC38-DC48-sum", "DC38-DC48-sum", dev(Stat::crank, 3, 8) + dev(Stat::crank, 4, 8),
         comb(Family::theta8, {2, -2, 2, -2, -2, 2, 2, -2}) + comb(Family::theta8prime, {-1, 0, 1, 0}), kTheta);
}

// ------------------------------------------------- rank-crank relations

void rank_crank(Registry &R)
{
    R.group = "rank-crank";
    auto arg_prec = [](std::int64_t t, std::int64_t r) { return (300 - r) / t + 1; };
    auto rel = [&](const std::string &id, std::int64_t t, std::int64_t r, const std::vector<Expr> &members) {
        std::vector<Expr> chain;
        for (std::size_t i = 2; i < members.size(); ++i)
            chain.push_back(deflated(members[i], t, r));
        R.eq(id, id, deflated(members[0], t, r), deflated(members[1], t, r), arg_prec(t, r), chain);
    };
    rel("NC-8", 2, 0, {N(2, 4), C(1, 4)});
    rel("NC-9", 2, 1, {N(0, 4), C(1, 4)});
    rel("NC-10", 4, 0, {C(1, 8), C(3, 8), N(2, 8), N(4, 8)});
    rel("NC-11", 4, 1, {C(0, 8) + C(1, 8), C(3, 8) + C(4, 8), N(1, 8) + N(2, 8), N(3, 8) + N(4, 8)});
    rel("NC-12", 4, 2, {C(1, 8), C(3, 8), N(0, 8), N(2, 8)});
    rel("NC-13", 4, 3, {C(0, 8) + C(1, 8), C(3, 8) + C(4, 8), N(0, 8) + N(1, 8), N(2, 8) + N(3, 8)});
    rel("NC-14", 4, 0, {N(3, 8), C(2, 8)});
    rel("NC-15", 4, 1, {N(3, 8), C(2, 8)});
    rel("NC-16", 4, 2, {N(1, 8), C(2, 8)});
    rel("NC-17", 4, 3, {N(1, 8), C(2, 8)});
}

// ---------------------------------------------------------- support lemmas

void support_lemmas(Registry &R)
{
    R.group = "support";
    const Expr g2p = g(1, 2, 16, 2), g2m = g(-1, 2, 16, 2), g6p = g(1, 6, 16, 5), g6m = g(-1, 6, 16, 5);
    R.eq("g2-plus", "g2-plus", g2p + g2m,
         g(-1, 20, 64, 18, -2) + quot({Jm(32), Jb(16, 64, 2)}, {Jb(20, 64), J(4, 32)}, 2, 2), kMock);
    R.eq("g6-minus", "g6-minus", g6p - g6m,
         qpow(-1, cst(-2)) + g(-1, 4, 64, 3, 2) + quot({Jm(32), Jb(16, 64, 2)}, {Jb(60, 64), J(12, 32)}, -1, 2),
         kMock);
    R.eq("g2-minus", "g2-minus", g2p - g2m,
         cst(-2) + g(-1, 12, 64, 12, 2) + quot({Jm(32), Jb(16, 64, 2)}, {Jb(52, 64), J(4, 32)}, 0, 2), kMock);
    R.eq("g6-plus", "g6-plus", g6p + g6m,
         g(-1, 28, 64, 21, -2) + quot({Jm(32), Jb(16, 64, 2)}, {Jb(28, 64), J(12, 32)}, 5, 2), kMock);
    R.support("g2-plus-support", "g2-plus", g2p + g2m, 4, {2}, kMock);
    R.support("g6-minus-support", "g6-minus", g6p - g6m, 4, {3}, kMock);
    R.support("g2-minus-support", "g2-minus", g2p - g2m, 4, {0}, kMock);
    R.support("g6-plus-support", "g6-plus", g6p + g6m, 4, {1}, kMock);
}

// ------------------------------------------------------------- M = 5, 7

Expr thmM5(Stat s, std::int64_t a)
{
    using F = Family;
    a = std::min(a, 5 - a);
    if (s == Stat::rank) {
        switch (a) {
        case 0: return Rational(2) * comb(F::theta5, {2, 2, -1, 1}) + Rational(2) * comb(F::G5, {-1, 0});
        case 1: return comb(F::theta5, {-1, -1, 3, -3}) + comb(F::G5, {1, -1});
        default: return comb(F::theta5, {-1, -1, -2, 2}) + comb(F::G5, {0, 1});
        }
    }
    switch (a) {
    case 0: return Rational(2) * comb(F::theta5, {2, -3, -1, 1});
    case 1: return comb(F::theta5, {-1, 4, -2, -3});
    default: return comb(F::theta5, {-1, -1, 3, 2});
    }
}

Expr thmM7(Stat s, std::int64_t a)
{
    using F = Family;
    a = std::min(a, 7 - a);
    if (s == Stat::rank) {
        switch (a) {
        case 0: return Rational(2) * comb(F::theta7, {-4, 3, -1, 2, 1, -2}) + Rational(2) * comb(F::G7, {1, 0, 0});
        case 1: return comb(F::theta7, {6, -1, 5, -3, 2, 3}) + comb(F::G7, {-1, 1, 0});
        case 2: return comb(F::theta7, {-1, -1, -2, 4, -5, 3}) + comb(F::G7, {0, -1, 1});
        default: return comb(F::theta7, {-1, -1, -2, -3, 2, -4}) + comb(F::G7, {0, 0, -1});
        }
    }
    switch (a) {
    case 0: return Rational(2) * comb(F::theta7, {3, -4, -1, 2, 1, -2});
    case 1: return comb(F::theta7, {-1, 6, -2, -3, -5, 3});
    case 2: return comb(F::theta7, {-1, -1, 5, -3, 2, -4});
    default: return comb(F::theta7, {-1, -1, -2, 4, 2, 3});
    }
}

void moduli57(Registry &R)
{
    R.group = "M5";
    for (Stat s : {Stat::rank, Stat::crank}) {
        for (std::int64_t a = 0; a <= 2; ++a) {
            const std::string tag = std::string(s == Stat::rank ? "D" : "DC") + std::to_string(a) + "5";
            const std::string label = s == Stat::rank ? "M5-dissection" : tag + "-deviant";
            std::vector<Expr> mirror;
            if (a != 0)
                mirror.push_back(dev(s, 5 - a, 5));
            R.eq("M5-" + tag, label, dev(s, a, 5), thmM5(s, a), s == Stat::rank ? kMock : kTheta, mirror);
        }
    }
    R.eq("J5-J7/5", "J5-J7", quot({J(1, 5), J(2, 5)}), quot({Jm(1), Jm(5)}), kTheta);
    R.eq("M5-rearrangement", "M5-dissection", quot({J(5, 25), J(10, 25)}), quot({Jm(5), Jm(25)}), kTheta);
    R.eq("DC15-prefinal", "DC15-prefinal", dev(Stat::crank, 1, 5),
         quot({Jm(1), J(10, 25)}, {Jm(5)}, 0, frac(-1, 5)) + quot({Jm(1), J(5, 25)}, {Jm(5)}, 1, frac(3, 5)), kTheta,
         {quot({Jm(25), J(10, 25, 2)}, {Jm(5), J(5, 25)}, 0, frac(-1, 5)) +
          quot({Jm(25), J(10, 25)}, {Jm(5)}, 1, frac(4, 5)) + quot({Jm(25), J(5, 25)}, {Jm(5)}, 2, frac(-2, 5)) +
          quot({Jm(25), J(5, 25, 2)}, {Jm(5), J(10, 25)}, 3, frac(-3, 5))});
    // First line printed with J_{50,25}; the split of j(q;q^3) gives J_{50,75}.
    R.eq("J[1]-quintuple", "J[1]-quintuple", quot({J(1, 3)}),
         quot({J(35, 75)}) - quot({J(50, 75)}, {}, 1) + quot({J(65, 75)}, {}, 5) - quot({J(80, 75)}, {}, 12) +
             quot({J(95, 75)}, {}, 22),
         kTheta,
         {quot({J(35, 75)}) + quot({J(65, 75)}, {}, 5) - quot({J(20, 75)}, {}, 2) - quot({J(80, 75)}, {}, 12) -
              quot({Jm(25)}, {}, 1),
          quot({Jm(25), J(10, 25)}, {J(5, 25)}) - quot({Jm(25), J(20, 25)}, {J(10, 25)}, 2) - quot({Jm(25)}, {}, 1)});

    R.group = "M7";
    for (Stat s : {Stat::rank, Stat::crank}) {
        for (std::int64_t a = 0; a <= 3; ++a) {
            const std::string tag = std::string(s == Stat::rank ? "D" : "DC") + std::to_string(a) + "7";
            std::vector<Expr> mirror;
            if (a != 0)
                mirror.push_back(dev(s, 7 - a, 7));
            R.eq("M7-" + tag, "M7-dissection", dev(s, a, 7), thmM7(s, a), s == Stat::rank ? kMock : kTheta, mirror);
        }
    }
    R.eq("J5-J7/7", "J5-J7", quot({J(1, 7), J(2, 7), J(3, 7)}), quot({Jm(1), Jm(7, 2)}), kTheta);
}

/// Sum over residues of the theorem right-hand sides.
void deviation_sums(Registry &R)
{
    R.group = "deviation-sums";
    struct Fam {
        std::string id;
        std::string label;
        Stat stat;
        std::size_t M;
        std::function<Expr(std::int64_t)> rhs;
        std::int64_t prec;
    };
    const std::vector<Fam> fams{
        {"D4", "D4-deviants", Stat::rank, 4, thmD4, kMock},
        {"DC4", "DC4-deviants", Stat::crank, 4, thmDC4, kTheta},
        {"D8", "D8-deviants", Stat::rank, 8, thmD8, kMock},
        {"DC8", "DC8-deviants", Stat::crank, 8, thmDC8, kTheta},
        {"D5", "M5-dissection", Stat::rank, 5, [](std::int64_t a) { return thmM5(Stat::rank, a); }, kMock},
        {"DC5", "M5-dissection", Stat::crank, 5, [](std::int64_t a) { return thmM5(Stat::crank, a); }, kTheta},
        {"D7", "M7-dissection", Stat::rank, 7, [](std::int64_t a) { return thmM7(Stat::rank, a); }, kMock},
        {"DC7", "M7-dissection", Stat::crank, 7, [](std::int64_t a) { return thmM7(Stat::crank, a); }, kTheta},
    };
    for (const auto &f : fams) {
        Expr devs = zero();
        Expr rhs = zero();
        for (std::size_t a = 0; a < f.M; ++a) {
            devs = devs + dev(f.stat, static_cast<std::int64_t>(a), f.M);
            rhs = rhs + f.rhs(static_cast<std::int64_t>(a));
        }
        R.eq("sum-zero/" + f.id, f.label, devs, zero(), f.prec, {rhs});
    }

    R.group = "deviation-defs";
    for (auto [s, a, M] : std::vector<std::tuple<Stat, std::int64_t, std::size_t>>{
             {Stat::rank, 0, 4}, {Stat::rank, 1, 5}, {Stat::rank, 2, 7}, {Stat::rank, 3, 8},
             {Stat::crank, 0, 4}, {Stat::crank, 1, 5}, {Stat::crank, 2, 7}, {Stat::crank, 3, 8}}) {
        const std::string label = s == Stat::rank ? "rd-def" : "cd-def";
        const Rational inv(Integer(1), Integer(static_cast<long>(M)));
        R.eq(label + "/a=" + std::to_string(a) + ",M=" + std::to_string(M), label, dev(s, a, M),
             count(s, a, M) - quot({}, {Jm(1)}, 0, inv), kMock);
    }
}

void generating_functions(Registry &R)
{
    R.group = "generating-functions";
    for (std::size_t M : {4u, 5u, 7u, 8u, 11u}) {
        for (std::int64_t a = 0; a <= static_cast<std::int64_t>(M) / 2; ++a) {
            const std::string tag = "a=" + std::to_string(a) + ",M=" + std::to_string(M);
            R.eq("N-generating-fn/" + tag, "N-generating-fn", N(a, M), classical_count(Stat::rank, a, M), kMock);
            R.eq("crank-product/" + tag, "crank-product", C(a, M), classical_count(Stat::crank, a, M), kMock);
        }
    }
}

void congruences(Registry &R)
{
    R.group = "congruences";
    struct Case {
        Stat stat;
        std::int64_t M;
        std::int64_t r;
        std::int64_t prec;
        const char *label;
    };
    for (const Case &c : {Case{Stat::rank, 5, 4, 201, "rank-congruence"}, Case{Stat::rank, 7, 5, 201, "rank-congruence"},
                          Case{Stat::crank, 5, 4, 201, "crank-congruence"}, Case{Stat::crank, 7, 5, 201, "crank-congruence"},
                          Case{Stat::crank, 11, 6, 151, "crank-congruence"}}) {
        std::vector<std::int64_t> allowed;
        for (std::int64_t k = 0; k < c.M; ++k)
            if (k != c.r)
                allowed.push_back(k);
        for (std::int64_t a = 0; a <= c.M / 2; ++a)
            R.support("equinumerous/" + stat_name(c.stat) + ",a=" + std::to_string(a) + ",M=" + std::to_string(c.M),
                      c.label, dev(c.stat, a, static_cast<std::size_t>(c.M)), c.M, allowed, c.prec);
    }
}

// ----------------------------------------------------------------- Lewis

void lewis(Registry &R)
{
    R.group = "lewis";
    const std::vector<Factor> den{J(8, 64, 2), J(16, 64), J(24, 64, 2), J(32, 64)};
    auto over_den = [&](std::vector<Factor> num, std::int64_t shift, const Rational &c) {
        num.push_back(Jm(64, 2));
        return quot(std::move(num), den, shift, c);
    };
    const Expr A = over_den({Jb(4, 64, 2), Jb(20, 64, 2), Jb(28, 64)}, 0, 1);
    const Expr B = over_den({Jb(12, 64, 2), Jb(20, 64), Jb(28, 64, 2)}, 0, 1);
    const Expr Cq = over_den({Jb(4, 64, 2), Jb(12, 64), Jb(20, 64), Jb(28, 64)}, 0, 1);
    const Expr E = over_den({Jb(4, 64), Jb(12, 64, 2), Jb(20, 64), Jb(28, 64)}, 0, 1);

    const Expr diff = dev(Stat::rank, 0, 8) - dev(Stat::crank, 0, 8);
    const Expr conj = g(-1, 12, 64, 12, 2) + qpow(8, Rational(-2) * A) + qpow(1, Rational(2) * B) +
                      qpow(10, Rational(-2) * Cq) + qpow(7, Rational(2) * E);
    R.eq("L-conj-prop-id", "L-conj-prop-id", diff, conj, kMock);
    for (std::int64_t k = 0; k < 4; ++k)
        R.eq("L-conj-k" + std::to_string(k), "L-conj-prop-id", deflated(N(0, 8) - C(0, 8), 4, k),
             deflated(conj, 4, k), kMock);

    const Expr lead = quot({Jm(32), Jb(16, 64, 2)}, {Jb(52, 64), J(4, 32)}, 0, 2);
    R.eq("L-conj-pre", "L-conj-pre", diff,
         g(-1, 12, 64, 12, 2) + lead - over_J4({Jb(16, 32), Jb(28, 64)}, 0, 2) - over_J4({Jb(0, 32), Jb(28, 64)}, 4) +
             over_J4({Jb(8, 32), Jb(52, 64)}, 4, 2) + over_J4({Jb(8, 32), Jb(28, 64)}, 1, 2) -
             over_J4({Jb(0, 32), Jb(20, 64)}, 5) - over_J4({Jb(0, 32), Jb(60, 64)}, 10) +
             over_J4({Jb(0, 32), Jb(52, 64)}, 7),
         kMock);

    auto q4 = [&](std::string id, std::string label, const Expr &lhs, const Expr &rhs,
                  const std::vector<Expr> &chain = {}) {
        R.eq(std::move(id), std::move(label), lhs, rhs, kTheta, chain);
    };
    q4("lewis-000", "lewis-000",
       lead - over_J4({Jb(16, 32), Jb(28, 64)}, 0, 2) - over_J4({Jb(0, 32), Jb(28, 64)}, 4) +
           over_J4({Jb(8, 32), Jb(52, 64)}, 4, 2),
       qpow(8, Rational(-2) * A));
    q4("lewis-001", "lewis-001", over_J4({Jb(8, 32), Jb(28, 64)}, 0, 2) - over_J4({Jb(0, 32), Jb(20, 64)}, 4),
       Rational(2) * B);
    q4("lewis-002", "lewis-002", over_J4({Jb(0, 32), Jb(60, 64)}, 8), qpow(8, Rational(2) * Cq));
    q4("lewis-003", "lewis-003", over_J4({Jb(0, 32), Jb(52, 64)}, 4), qpow(4, Rational(2) * E));
    q4("J4-expansion", "J4-expansion", quot({Jm(4)}),
       quot({J(8, 64, 2), J(16, 64), J(24, 64, 2), J(32, 64), Jb(32, 128)},
            {Jb(4, 64), Jb(12, 64), Jb(20, 64), Jb(28, 64), Jm(64, 2)}),
       {quot({J(4, 12)})});
    q4("lewis-001-reduced", "lewis-001", quot({Jb(8, 32), Jb(28, 64)}, {}, 0, 2) - quot({Jb(0, 32), Jb(20, 64)}, {}, 4),
       quot({Jb(12, 64), Jb(28, 64), Jb(32, 128)}, {Jb(4, 64)}, 0, 2));
    q4("lewis-001-prefinal", "lewis-001-prefinal",
       quot({Jb(4, 64), Jb(8, 32), Jb(28, 64)}) - quot({Jb(4, 64), Jb(20, 64), Jb(32, 128)}, {}, 4),
       quot({Jb(12, 64), Jb(28, 64), Jb(32, 128)}));
    q4("lewis-001-prefinal-proof", "lewis-001-prefinal", quot({Jb(4, 64), Jb(8, 32), Jb(28, 64)}),
       quot({Jb(12, 64), Jb(28, 64), Jb(32, 128)}) + quot({Jb(4, 64), Jb(20, 64), Jb(32, 128)}, {}, 4),
       {quot({Jb(32, 128)}) * (quot({Jb(12, 64), Jb(28, 64)}) + quot({Jb(4, 64), Jb(20, 64)}, {}, 4)),
        quot({Jb(32, 128), Jb(4, 32), Jb(8, 32)})});
    q4("lewis-000-reduced", "lewis-000",
       quot({Jb(16, 32), J(4, 16), J(8, 32), Jb(32, 128)}, {J(4, 32), Jb(12, 64)}) -
           quot({Jb(16, 32), Jb(28, 64)}) - quot({Jb(32, 128), Jb(28, 64)}, {}, 4) +
           quot({Jb(8, 32), Jb(52, 64)}, {}, 4),
       quot({Jb(4, 64), Jb(20, 64), Jb(32, 128)}, {Jb(12, 64)}, 8, -1));
    q4("lewis-000-prefinal-id1", "lewis-000-prefinal-id1",
       quot({Jb(16, 32), J(4, 16), J(8, 32), Jb(32, 128)}) - quot({Jb(16, 32), Jb(28, 64), J(4, 32), Jb(12, 64)}) -
           quot({Jb(32, 128), Jb(28, 64), J(4, 32), Jb(12, 64)}, {}, 4) +
           quot({Jb(8, 32), Jb(52, 64), J(4, 32), Jb(12, 64)}, {}, 4),
       quot({Jb(4, 64), Jb(20, 64), Jb(32, 128), J(4, 32)}, {}, 8, -1));
    q4("lewis-000-prefinal-piece1", "lewis-000-prefinal-piece1",
       quot({Jb(32, 128), Jb(28, 64), J(4, 32), Jb(12, 64)}, {}, 4) -
           quot({Jb(4, 64), Jb(20, 64), Jb(32, 128), J(4, 32)}, {}, 8),
       quot({Jb(32, 128), J(4, 32, 2), J(8, 32)}, {}, 4),
       {qpow(4, quot({Jb(32, 128), J(4, 32)}) *
                    (quot({Jb(12, 64), Jb(28, 64)}) - quot({Jb(4, 64), Jb(20, 64)}, {}, 4)))});
    const Expr inner = quot({Jb(16, 32), J(4, 16)}) - quot({J(4, 32, 2)}, {}, 4);
    q4("lewis-000-prefinal-piece2", "lewis-000-prefinal-piece2",
       quot({Jb(16, 32), J(4, 16), J(8, 32), Jb(32, 128)}) - quot({Jb(32, 128), J(4, 32, 2), J(8, 32)}, {}, 4),
       quot({J(4, 32, 2), J(24, 64, 2)}),
       {quot({Jb(32, 128), J(8, 32)}) * inner, quot({J(8, 64), J(40, 64)}) * inner,
        quot({J(8, 64), J(40, 64)}) * (quot({J(4, 32, 2), Jb(4, 32), J(20, 32)}, {J(8, 64), J(16, 64)}) -
                                       quot({J(4, 32, 2)}, {}, 4)),
        quot({J(8, 64), J(40, 64)}) *
            (quot({J(4, 32, 2)}, {J(8, 64)}) * twisted_theta_sum(-1, 4, -1, 16) - quot({J(4, 32, 2)}, {}, 4))});
    q4("lewis-000-factored", "lewis-000-prefinal-id1",
       quot({J(4, 32), J(24, 64, 2)}) - quot({Jb(16, 32), Jb(28, 64), Jb(12, 64)}) +
           quot({Jb(8, 32), Jb(52, 64), Jb(12, 64)}, {}, 4),
       zero());
    q4("last-stop", "last-stop", quot({J(24, 64, 2), J(4, 64), J(36, 64)}) + quot({Jb(12, 64, 2), Jb(8, 64), Jb(40, 64)}, {}, 4),
       quot({Jb(12, 64), Jb(28, 64), Jb(16, 64), Jb(48, 64)}));

    const Expr end = quot({Jb(0, 8), Jb(13, 16)}, {Jm(1)}, 1);
    R.eq("the-end", "the-end", deflated(N(0, 8) - C(0, 8), 4, 3), end, kMock);
    R.positive("the-end-positivity", "the-end", end, 1, 151);

    const CountSelector N08{Stat::rank, 0, 8}, C08{Stat::crank, 0, 8};
    R.inequality("lewis-ineq-0", "L-ineq-0", N08, C08, 4, 1, 2, 404);
    R.inequality("lewis-ineq-1", "L-ineq-1", C08, N08, 4, 2, 2, 404);
    R.inequality("lewis-ineq-2", "L-ineq-2", N08, C08, 4, 3, 1, 404);
}

} // namespace

std::vector<IdentityEntry> build_registry()
{
    Registry R;
    toolkit(R);
    mock_toolkit(R);
    mock_theta(R);
    deviations4(R);
    deviations8(R);
    rank_crank(R);
    support_lemmas(R);
    moduli57(R);
    deviation_sums(R);
    generating_functions(R);
    congruences(R);
    lewis(R);
    return std::move(R.out);
}

const std::vector<IdentityEntry> &registry()
{
    static const std::vector<IdentityEntry> r = build_registry();
    return r;
}

} // namespace qseries
