#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

#include "polardesign/incidence.hpp"

namespace polar {

class CertificateError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Canonical JSON text of a design certificate:
///   { "blocks": [[[row codes]...]...], "family", "k", "lambda", "n",
///     "provenance": {"method", "nodes", "seed"}, "q", "t" }
/// Keys are sorted and the text ends with a newline, so writing what was
/// read reproduces the input byte for byte.
std::string write_certificate(const DesignInstance& instance);

/// Parses a certificate. Blocks are brought to RREF; malformed input (bad
/// JSON, unknown family, out-of-range codes, dependent rows) throws
/// CertificateError naming the offending block.
DesignInstance read_certificate(std::string_view text);

}  // namespace polar
