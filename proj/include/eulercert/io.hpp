#pragma once

// JSON encoding of every file format. Rationals travel as exact "p/q" or
// integer strings; bounds and epsilons as decimals rounded up to 12 places.
// Parse errors name the JSON path of the offending value.

#include <json.hpp>
#include <stdexcept>
#include <string>

#include "eulercert/certify.hpp"

namespace eulercert {

using Json = nlohmann::ordered_json;

class InputError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

Json to_json(const Rational& q);
Json to_json(const Point& p);
Json to_json(const Polytope& p);
Json to_json(const ConstructibleFunction& f);
Json to_json(const SheafSum& s);
Json to_json(const AffineMap& f);
Json to_json(const Certificate& c);

Rational rational_from_json(const Json& j, const std::string& path = "");
Point point_from_json(const Json& j, const std::string& path = "");
Polytope polytope_from_json(const Json& j, const std::string& path = "");
ConstructibleFunction cf_from_json(const Json& j, const std::string& path = "");
SheafSum sheaf_from_json(const Json& j, const std::string& path = "");
AffineMap map_from_json(const Json& j, const std::string& path = "");
Certificate certificate_from_json(const Json& j, const std::string& path = "");

// "1/2,0" or "0.5, 0".
Point parse_point(const std::string& text);

Json read_json_file(const std::string& filename);

}  // namespace eulercert
