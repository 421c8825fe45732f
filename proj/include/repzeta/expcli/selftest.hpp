#pragma once

#include <filesystem>
#include <ostream>

namespace repzeta::expcli {

/// Small end-to-end runs of every experiment plus a cache round trip in `scratch`.
/// One PASS/FAIL line per item; true when all pass.
bool run_selftest(std::ostream& out, const std::filesystem::path& scratch);

}  // namespace repzeta::expcli
