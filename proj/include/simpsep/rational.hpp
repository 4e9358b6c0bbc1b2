#pragma once

#include <boost/multiprecision/gmp.hpp>

#include <string>

namespace simpsep {

// Exact rational arithmetic throughout; no floating point in the core.
using Rat = boost::multiprecision::mpq_rational;

// Parses "p/q" or "p". Throws std::invalid_argument on malformed input or q = 0.
Rat parse_rat(const std::string& s);

// Canonical form: "p" when the denominator is 1, "p/q" otherwise.
std::string rat_str(const Rat& r);

}  // namespace simpsep
