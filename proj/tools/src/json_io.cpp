#include "oddref_cli/json_io.hpp"

#include <fstream>
#include <sstream>

namespace oddref::io {

namespace {

const Json& field(const Json& j, const char* key)
{
    if (!j.is_object())
        throw FormatError(std::string("expected an object with key \"") + key + "\"");
    const auto it = j.find(key);
    if (it == j.end())
        throw FormatError(std::string("missing key \"") + key + "\"");
    return *it;
}

const Json& array(const Json& j, const char* what)
{
    if (!j.is_array())
        throw FormatError(std::string(what) + " must be an array");
    return j;
}

ParitySeq parity_from(const Json& doc)
{
    const Json& p = field(doc, "parity");
    if (!p.is_string())
        throw FormatError("parity must be a string of '+' and '-'");
    return ParitySeq::parse(p.get<std::string>());
}

}  // namespace

Json to_json(const Rational& r) { return r.to_string(); }

Json to_json(const FactoredPoly& p)
{
    Json out = Json::array();
    for (const auto& r : p.roots())
        out.push_back(to_json(r));
    return out;
}

Json to_json(const DensePoly& p)
{
    Json out = Json::array();
    for (const auto& c : p.coeffs())
        out.push_back(to_json(c));
    return out;
}

Json to_json(const RatB& r) { return Json{{"num", to_json(r.num())}, {"den", to_json(r.den())}}; }

Json to_json(const LWeight& z)
{
    Json out = Json::array();
    for (const auto& c : z.components())
        out.push_back(to_json(c));
    return out;
}

Json to_json(const QChar& q)
{
    Json out = Json::array();
    for (const auto& [z, mult] : q.terms())
        out.push_back(Json{{"lweight", to_json(z)}, {"mult", mult}});
    return out;
}

Json to_json(const BAESystem& sys)
{
    Json y = Json::array();
    for (const auto& p : sys.y())
        y.push_back(to_json(p));
    return Json{{"parity", sys.parity().to_string()}, {"zeta", to_json(sys.zeta())}, {"y", y}};
}

Json lweight_document(const LWeight& z) { return Json{{"parity", z.parity().to_string()}, {"lweight", to_json(z)}}; }

Json qchar_document(const QChar& q) { return Json{{"parity", q.parity().to_string()}, {"qchar", to_json(q)}}; }

Rational rational_from(const Json& j)
{
    if (j.is_string())
        return Rational::parse(j.get<std::string>());
    if (j.is_number_integer())
        return Rational(j.get<long>());
    throw FormatError("rational must be a string \"p/q\" or an integer");
}

FactoredPoly factored_from(const Json& j)
{
    std::vector<Rational> roots;
    for (const auto& r : array(j, "root list"))
        roots.push_back(rational_from(r));
    return FactoredPoly(std::move(roots));
}

DensePoly dense_from(const Json& j)
{
    std::vector<Rational> coeffs;
    for (const auto& c : array(j, "coefficient list"))
        coeffs.push_back(rational_from(c));
    return DensePoly(std::move(coeffs));
}

RatB ratb_from(const Json& j) { return {factored_from(field(j, "num")), factored_from(field(j, "den"))}; }

LWeight lweight_from(const ParitySeq& s, const Json& components)
{
    std::vector<RatB> comps;
    for (const auto& c : array(components, "lweight"))
        comps.push_back(ratb_from(c));
    return {s, std::move(comps)};
}

QChar qchar_from(const ParitySeq& s, const Json& terms)
{
    QChar q(s);
    for (const auto& t : array(terms, "qchar")) {
        const Json& mult = field(t, "mult");
        if (!mult.is_number_integer())
            throw FormatError("mult must be an integer");
        q.add(lweight_from(s, field(t, "lweight")), mult.get<std::int64_t>());
    }
    return q;
}

LWeight lweight_document_from(const Json& doc) { return lweight_from(parity_from(doc), field(doc, "lweight")); }

QChar qchar_document_from(const Json& doc) { return qchar_from(parity_from(doc), field(doc, "qchar")); }

BAESystem system_from(const Json& doc)
{
    const ParitySeq s = parity_from(doc);
    std::vector<DensePoly> y;
    for (const auto& p : array(field(doc, "y"), "y"))
        y.push_back(dense_from(p));
    return {s, lweight_from(s, field(doc, "zeta")), std::move(y)};
}

Json parse_text(const std::string& text)
{
    try {
        return Json::parse(text);
    } catch (const nlohmann::json::parse_error& e) {
        throw FormatError(std::string("invalid JSON: ") + e.what());
    }
}

Json read_file(const std::string& path)
{
    std::ifstream in(path);
    if (!in)
        throw FormatError("cannot read " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    return parse_text(buf.str());
}

}  // namespace oddref::io
