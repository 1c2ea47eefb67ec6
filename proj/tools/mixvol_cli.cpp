// Command-line front end; everything runs through the shared library's C API.

#include "mixvol.h"

#include "CLI11.hpp"

#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

namespace {

constexpr int kExitCheckFailed = 1;
constexpr int kExitInvalidInput = 2;

int run_command(const std::string &command, const std::string &job_path, bool oracle, bool check, bool json) {
    std::ifstream in(job_path);
    if (!in) {
        std::cerr << "error: cannot open job file '" << job_path << "'\n";
        return kExitInvalidInput;
    }
    std::ostringstream buf;
    buf << in.rdbuf();
    const std::string text = buf.str();

    char *err = nullptr;
    mixvol_job *job = nullptr;
    mixvol_status status = mixvol_job_parse(text.c_str(), &job, &err);
    if (status != MIXVOL_OK) {
        std::cerr << "error: " << (err ? err : "job parsing failed") << "\n";
        mixvol_string_free(err);
        return kExitInvalidInput;
    }

    unsigned flags = 0;
    if (oracle) flags |= MIXVOL_FLAG_ORACLE;
    if (check) flags |= MIXVOL_FLAG_CHECK;

    mixvol_result *result = nullptr;
    status = mixvol_run(job, command.c_str(), flags, &result, &err);
    mixvol_job_free(job);

    int code = 0;
    switch (status) {
        case MIXVOL_OK:
            code = 0;
            break;
        case MIXVOL_CHECK_FAILED:
            code = kExitCheckFailed;
            break;
        case MIXVOL_INVALID_INPUT:
            code = kExitInvalidInput;
            break;
        case MIXVOL_INTERNAL_ERROR:
            code = kExitCheckFailed;  // an internal invariant is still a failed check
            break;
    }
    if (result) {
        std::cout << (json ? mixvol_result_json(result) : mixvol_result_text(result));
        mixvol_result_free(result);
    }
    if (err) {
        std::cerr << "error: " << err << "\n";
        mixvol_string_free(err);
    }
    return code;
}

}  // namespace

int main(int argc, char **argv) {
    CLI::App app{"Exact mixed volumes of lattice polytopes and suture systems of semi-interlaced families"};
    app.require_subcommand(1);

    bool oracle = false, check = false, json = false;
    app.add_flag("--oracle", oracle, "force the polarization (inclusion-exclusion) route");
    app.add_flag("--check", check, "run both routes and fail on mismatch");
    app.add_flag("--json", json, "emit the machine-readable document");

    std::istringstream names(mixvol_commands());
    std::string picked;
    std::string job_path;
    for (std::string name; names >> name;) {
        auto *sub = app.add_subcommand(name);
        sub->fallthrough();  // let the global flags appear after the subcommand
        sub->add_option("job", job_path, "job file (JSON)")->required();
        sub->callback([name, &picked] { picked = name; });
    }

    CLI11_PARSE(app, argc, argv);
    return run_command(picked, job_path, oracle, check, json);
}
