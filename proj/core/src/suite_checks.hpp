#pragma once

#include <string>

#include "lambda_lab/report.hpp"
#include "lambda_lab/suite.hpp"

namespace lambda_lab::detail {

/// Runs one named suite against the configured instance. Names are the
/// entries of SuiteConfig::known_suites().
CheckReport run_one_suite(const std::string& name, const SuiteConfig& config);

}  // namespace lambda_lab::detail
