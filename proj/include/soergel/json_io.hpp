#ifndef SOERGEL_JSON_IO_HPP
#define SOERGEL_JSON_IO_HPP

#include <string>
#include <vector>

#include <json.hpp>

#include "soergel/bimodule.hpp"
#include "soergel/realization.hpp"

namespace soergel {

using json = nlohmann::json;

// Coefficient-ring descriptor:
//   {"kind":"integers"} | {"kind":"prime_field","p":2}
//   | {"kind":"quotient","modulus":[-1,-1,1]}   (ascending coefficients)
//   | {"kind":"bivariate_integers"}
json descriptor_to_json(const CoefDescriptor& d);
DescrPtr descriptor_from_json(const json& j);

// Ring elements: a plain integer for integers / prime fields, an ascending
// coefficient array for quotient rings, an array of [ex, ey, c] triples
// for Z[X,Y]. Integers are accepted everywhere as constants.
json coef_to_json(const CoefElem& c);
CoefElem coef_from_json(const DescrPtr& d, const json& j);

// Realization config: {"m": 3 | "universal", "coef": {...}, "rank": 2,
// "alpha_s": [...], ..., optional "delta_s"/"delta_t"}.
RealizationConfig realization_config_from_json(const json& j, const std::string& name = "");
json realization_to_json(const Realization& r);

// RPoly: array of [exponent-array, coefficient] pairs.
json rpoly_to_json(const RPoly& p);
RPoly rpoly_from_json(const Realization& r, const json& j);

// Localized element: {"word":"stst", "components": {"0101": {"num": RPoly,
// "den": ["s", "sts", ...]}, ...}}; missing components are zero.
json localized_to_json(const Localized& x);
Localized localized_from_json(const RealizationPtr& r, const json& j);

// Catalog of named built-in realizations, shipped as data files. Names
// resolve inside the bundled data directory; the SOERGEL_DATA_DIR
// environment variable overrides the built-in location.
std::vector<std::string> catalog_names();
RealizationPtr load_catalog_realization(const std::string& name);
// Accepts a file path or a catalog name.
RealizationPtr load_realization(const std::string& path_or_name);

std::string data_directory();

} // namespace soergel

#endif
