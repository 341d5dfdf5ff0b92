#pragma once

#include "oddref/bethe.hpp"
#include "oddref/diffop.hpp"
#include "oddref/lweight.hpp"

#include <json.hpp>

#include <stdexcept>
#include <string>

namespace oddref::io {

using Json = nlohmann::ordered_json;

/// Malformed document: wrong shape, missing key, wrong JSON type.
class FormatError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

Json to_json(const Rational& r);
Json to_json(const FactoredPoly& p);
Json to_json(const DensePoly& p);
Json to_json(const RatB& r);
Json to_json(const LWeight& z);  ///< bare component array
Json to_json(const QChar& q);    ///< bare term array
Json to_json(const BAESystem& sys);

Json lweight_document(const LWeight& z);
Json qchar_document(const QChar& q);

Rational rational_from(const Json& j);
FactoredPoly factored_from(const Json& j);
DensePoly dense_from(const Json& j);
RatB ratb_from(const Json& j);
LWeight lweight_from(const ParitySeq& s, const Json& components);
QChar qchar_from(const ParitySeq& s, const Json& terms);

/// {"parity": "+-", "lweight": [{"num": [...], "den": [...]}, ...]}
LWeight lweight_document_from(const Json& doc);
/// {"parity": "+-", "qchar": [{"lweight": [...], "mult": n}, ...]}
QChar qchar_document_from(const Json& doc);
/// {"parity": "+-", "zeta": [...], "y": [[coeffs lowest first], ...]}
BAESystem system_from(const Json& doc);

Json parse_text(const std::string& text);
/// Reads and parses a file; FormatError when unreadable or not JSON.
Json read_file(const std::string& path);

}  // namespace oddref::io
