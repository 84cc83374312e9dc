#pragma once

#include <string>

#include <json.hpp>

#include "charzero/suite.hpp"

namespace charzero {

using Json = nlohmann::ordered_json;

Json to_json(const StarReport& r);
Json to_json(const OneClassReport& r);
Json to_json(const BurnsideReport& r);
Json to_json(const TwoPrimeReport& r);
Json to_json(const CorollaryReport& r);
Json to_json(const VerifyReport& r);
Json to_json(const GroupResult& r);
Json suite_json(const SuiteResult& r);

std::string render_text(const StarReport& r);
std::string render_text(const OneClassReport& r);
std::string render_text(const VerifyReport& r);
std::string render_text(const GroupResult& r);
std::string render_text(const CorollaryReport& r);

/// One block per group, then the simple-group section and the verdicts.
std::string render_suite_text(const SuiteResult& r);
/// Compact table of verdicts, one line per group.
std::string render_summary(const SuiteResult& r);

/// "3 4 5", or "-" when empty.
std::string join_degrees(const std::vector<std::uint64_t>& v);

}  // namespace charzero
