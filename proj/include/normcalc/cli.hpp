#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "normcalc/normprinciple.hpp"

namespace normcalc {

/// Exit codes: 0 success/verified, 1 verification refuted, 2 usage error,
/// 3 capability error (unsupported type).
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

/// Line-oriented key=value override format (keys: beta_image, gamma_kernel,
/// relations). Strict parse; errors carry file:line:col.
ScenarioOverrides parse_override_text(const std::string& text, const std::string& filename);
ScenarioOverrides load_override_file(const std::string& path);

} // namespace normcalc
