#include "qseries/series_io.hpp"

#include <charconv>

namespace qseries::detail {

namespace {

std::int64_t parse_i64(const std::string &text, const std::string &what)
{
    std::int64_t v = 0;
    auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), v);
    if (ec != std::errc() || ptr != text.data() + text.size())
        throw DomainError("bad " + what + ": '" + text + "'");
    return v;
}

std::string trim(const std::string &s)
{
    auto b = s.find_first_not_of(" \t\r");
    if (b == std::string::npos)
        return {};
    auto e = s.find_last_not_of(" \t\r");
    return s.substr(b, e - b + 1);
}

} // namespace

ParsedHeader parse_header(const std::string &line)
{
    ParsedHeader h;
    bool have_ring = false, have_min = false, have_prec = false;
    std::istringstream in(line);
    std::string field;
    while (in >> field) {
        auto eq = field.find('=');
        if (eq == std::string::npos)
            throw DomainError("bad series header field '" + field + "'");
        std::string key = field.substr(0, eq);
        std::string value = field.substr(eq + 1);
        if (key == "ring") {
            h.ring = value;
            have_ring = true;
        } else if (key == "min_exp") {
            h.min_exp = parse_i64(value, "min_exp");
            have_min = true;
        } else if (key == "prec") {
            h.prec = parse_i64(value, "prec");
            have_prec = true;
        } else {
            throw DomainError("unknown series header key '" + key + "'");
        }
    }
    if (!have_ring || !have_min || !have_prec)
        throw DomainError("series header needs ring, min_exp and prec");
    return h;
}

std::vector<std::string> split_coefficients(const std::string &line)
{
    std::vector<std::string> out;
    std::string body = trim(line);
    if (body.empty())
        return out;
    std::size_t start = 0;
    while (true) {
        auto comma = body.find(',', start);
        out.push_back(trim(body.substr(start, comma - start)));
        if (comma == std::string::npos)
            break;
        start = comma + 1;
    }
    return out;
}

std::size_t cyclic_modulus_from_tag(const std::string &tag)
{
    const std::string prefix = "cyclic-laurent(";
    if (tag.rfind(prefix, 0) != 0 || tag.back() != ')')
        throw RingMismatchError("expected ring=cyclic-laurent(M), got " + tag);
    auto m = parse_i64(tag.substr(prefix.size(), tag.size() - prefix.size() - 1), "cyclic modulus");
    if (m < 1)
        throw DomainError("cyclic modulus must be positive");
    return static_cast<std::size_t>(m);
}

CyclicLaurent parse_cyclic(const std::string &text, std::size_t modulus)
{
    std::string t = trim(text);
    if (t.size() < 2 || t.front() != '[' || t.back() != ']')
        throw DomainError("bad cyclic coefficient '" + text + "'");
    std::istringstream in(t.substr(1, t.size() - 2));
    std::vector<Integer> counts;
    std::string item;
    while (in >> item)
        counts.push_back(parse_integer(item));
    return CyclicLaurent(modulus, std::move(counts));
}

} // namespace qseries::detail
