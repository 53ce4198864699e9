#pragma once

#include <string>

#include <json.hpp>

#include "genergy/bounds.hpp"
#include "genergy/ensemble.hpp"
#include "genergy/extremal.hpp"

namespace genergy {

// Key order in every object is fixed; nlohmann's ordered_json keeps insertion
// order and prints doubles in shortest round-trip form.
using Json = nlohmann::ordered_json;

Json to_json(const BoundReport& r);
Json to_json(const CertificationReport& r);
Json to_json(const EnsembleStats& s);
Json to_json(const SearchResult& r);

std::string_view to_string(SearchMethod m);

/// 12 significant digits; integral values keep a trailing ".0".
std::string format_text(double x);

}  // namespace genergy
