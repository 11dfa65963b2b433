#pragma once

#include <iosfwd>
#include <string>

#include "dgt/certify.hpp"

namespace dgt {

/// Structured text for a Verdict: a single block of key = value lines with
/// exact fractions. Parses back into an equal Verdict.
std::string serialize_verdict(const Verdict& v);
Verdict parse_verdict(const std::string& text);

bool verdict_equal(const Verdict& a, const Verdict& b);

/// Structured text for a CertReport; round-trips like serialize_verdict.
std::string serialize_cert_report(const CertReport& r);
CertReport parse_cert_report(const std::string& text);

bool cert_report_equal(const CertReport& a, const CertReport& b);

/// Human-readable one-per-condition rendering with evidence lists.
std::string describe_cert_report(const CertReport& r);

std::string describe_verdict(const Verdict& v);

}  // namespace dgt
