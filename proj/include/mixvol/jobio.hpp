#pragma once

#include "mixvol/applications.hpp"

#include "json.hpp"

#include <string>

namespace mixvol::jobio {

using Json = nlohmann::ordered_json;

struct Flags {
    bool oracle = false;  // force the polarization route
    bool check = false;   // run both routes and compare
};

struct Document {
    Json body;
    int exit_code = 0;  // 0 success, 1 property check failed
};

/// Parses a job file. Throws InvalidInput on malformed JSON.
Json parse_job_text(const std::string &text);

/// Dispatches one subcommand over a parsed job. Schema violations throw
/// InvalidInput (exit 2), failed checks throw PropertyViolation or return a
/// document with exit code 1.
Document run(const std::string &command, const Flags &flags, const Json &job);

/// Plain-text rendering of a result document.
std::string render_text(const Json &body);

const std::vector<std::string> &commands();

}  // namespace mixvol::jobio
