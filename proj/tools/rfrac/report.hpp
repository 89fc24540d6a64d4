#pragma once

#include <string>

#include "rfrac/run.hpp"

namespace rfrac::cli {

// Array of records; numbers use %.17g, non-finite numbers become null.
std::string to_json(const Report& r);
// Header line plus one row per record; complex values split into _re/_im columns.
std::string to_csv(const Report& r);
std::string render(const Report& r, Format f);

} // namespace rfrac::cli
