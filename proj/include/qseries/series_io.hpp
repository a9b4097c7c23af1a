#pragma once

#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "qseries/series.hpp"

namespace qseries {

// Text form:
//   ring=integer min_exp=0 prec=5
//   1,1,2,3,5
// Cyclic coefficients are written "[c0 c1 ... cM-1]", rationals "num/den".

template <class R>
std::string to_text(const Series<R> &s)
{
    std::string out = "ring=" + s.ring_tag() + " min_exp=" + std::to_string(s.min_exp()) +
                      " prec=" + std::to_string(s.prec()) + "\n";
    for (std::size_t i = 0; i < s.coeffs().size(); ++i) {
        if (i)
            out += ',';
        out += RingTraits<R>::str(s.coeffs()[i]);
    }
    return out + "\n";
}

template <class R>
nlohmann::json to_json(const Series<R> &s)
{
    nlohmann::json coeffs = nlohmann::json::array();
    for (const auto &c : s.coeffs())
        coeffs.push_back(RingTraits<R>::str(c));
    return {{"ring", s.ring_tag()}, {"min_exp", s.min_exp()}, {"prec", s.prec()}, {"coeffs", coeffs}};
}

namespace detail {

struct ParsedHeader {
    std::string ring;
    std::int64_t min_exp = 0;
    std::int64_t prec = 0;
};

ParsedHeader parse_header(const std::string &line);
std::vector<std::string> split_coefficients(const std::string &line);
std::size_t cyclic_modulus_from_tag(const std::string &tag);
CyclicLaurent parse_cyclic(const std::string &text, std::size_t modulus);

template <class R>
struct ElementParser;

template <>
struct ElementParser<Integer> {
    static Integer proto(const std::string &tag)
    {
        if (tag != "integer")
            throw RingMismatchError("expected ring=integer, got " + tag);
        return 0;
    }
    static Integer parse(const std::string &text, const Integer &) { return parse_integer(text); }
};

template <>
struct ElementParser<Rational> {
    static Rational proto(const std::string &tag)
    {
        if (tag != "rational")
            throw RingMismatchError("expected ring=rational, got " + tag);
        return {};
    }
    static Rational parse(const std::string &text, const Rational &) { return Rational::parse(text); }
};

template <>
struct ElementParser<CyclicLaurent> {
    static CyclicLaurent proto(const std::string &tag) { return CyclicLaurent(cyclic_modulus_from_tag(tag)); }
    static CyclicLaurent parse(const std::string &text, const CyclicLaurent &p)
    {
        return parse_cyclic(text, p.modulus());
    }
};

template <class R>
Series<R> assemble(const ParsedHeader &h, const std::vector<std::string> &items)
{
    R proto = ElementParser<R>::proto(h.ring);
    std::vector<R> coeffs;
    coeffs.reserve(items.size());
    for (const auto &item : items)
        coeffs.push_back(ElementParser<R>::parse(item, proto));
    return Series<R>(proto, h.min_exp, h.prec, std::move(coeffs));
}

} // namespace detail

/// Inverse of to_text. Throws DomainError on malformed input and
/// RingMismatchError when the ring tag does not match R.
template <class R>
Series<R> series_from_text(const std::string &text)
{
    std::istringstream in(text);
    std::string header;
    std::string body;
    std::getline(in, header);
    std::getline(in, body);
    return detail::assemble<R>(detail::parse_header(header), detail::split_coefficients(body));
}

template <class R>
Series<R> series_from_json(const nlohmann::json &j)
{
    detail::ParsedHeader h;
    try {
        h.ring = j.at("ring").get<std::string>();
        h.min_exp = j.at("min_exp").get<std::int64_t>();
        h.prec = j.at("prec").get<std::int64_t>();
        std::vector<std::string> items = j.at("coeffs").get<std::vector<std::string>>();
        return detail::assemble<R>(h, items);
    } catch (const nlohmann::json::exception &e) {
        throw DomainError(std::string("malformed series json: ") + e.what());
    }
}

} // namespace qseries
