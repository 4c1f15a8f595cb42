#pragma once

#include <string>
#include <vector>

namespace qpslab {

/// The frozen sign and normalization choices, one line each. Reports embed a
/// hash of this list so results are comparable across builds.
const std::vector<std::string>& convention_ledger();

/// FNV-1a 64 of the ledger lines joined by newlines, as 16 hex digits.
std::string convention_ledger_hash();

std::string fnv1a64_hex(const std::string& data);

}  // namespace qpslab
