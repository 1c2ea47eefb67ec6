#include "mixvol.h"

#include "mixvol/jobio.hpp"

#include <cstring>
#include <string>

struct mixvol_job {
    mixvol::jobio::Json doc;
};

struct mixvol_result {
    std::string json_text;
    std::string plain_text;
    int exit_code = 0;
};

namespace {

char *dup_string(const std::string &s) {
    char *out = static_cast<char *>(std::malloc(s.size() + 1));
    if (out) std::memcpy(out, s.c_str(), s.size() + 1);
    return out;
}

void set_error(char **out_error, const std::string &msg) {
    if (out_error) *out_error = dup_string(msg);
}

}  // namespace

extern "C" {

const char *mixvol_version(void) { return "0.1.0"; }

const char *mixvol_commands(void) {
    static const std::string joined = [] {
        std::string s;
        for (const auto &c : mixvol::jobio::commands()) {
            if (!s.empty()) s += ' ';
            s += c;
        }
        return s;
    }();
    return joined.c_str();
}

mixvol_status mixvol_job_parse(const char *json_text, mixvol_job **out_job, char **out_error) {
    if (out_error) *out_error = nullptr;
    if (!json_text || !out_job) {
        set_error(out_error, "null argument");
        return MIXVOL_INVALID_INPUT;
    }
    *out_job = nullptr;
    try {
        auto job = std::make_unique<mixvol_job>();
        job->doc = mixvol::jobio::parse_job_text(json_text);
        *out_job = job.release();
        return MIXVOL_OK;
    } catch (const mixvol::InvalidInput &e) {
        set_error(out_error, e.what());
        return MIXVOL_INVALID_INPUT;
    } catch (const std::exception &e) {
        set_error(out_error, e.what());
        return MIXVOL_INTERNAL_ERROR;
    }
}

void mixvol_job_free(mixvol_job *job) { delete job; }

mixvol_status mixvol_run(const mixvol_job *job, const char *command, unsigned flags, mixvol_result **out_result,
                         char **out_error) {
    if (out_error) *out_error = nullptr;
    if (!job || !command || !out_result) {
        set_error(out_error, "null argument");
        return MIXVOL_INVALID_INPUT;
    }
    *out_result = nullptr;
    try {
        mixvol::jobio::Flags f;
        f.oracle = flags & MIXVOL_FLAG_ORACLE;
        f.check = flags & MIXVOL_FLAG_CHECK;
        mixvol::jobio::Document doc = mixvol::jobio::run(command, f, job->doc);
        auto result = std::make_unique<mixvol_result>();
        result->json_text = doc.body.dump(2) + "\n";
        result->plain_text = mixvol::jobio::render_text(doc.body);
        result->exit_code = doc.exit_code;
        mixvol_status status = doc.exit_code == 0 ? MIXVOL_OK : MIXVOL_CHECK_FAILED;
        *out_result = result.release();
        return status;
    } catch (const mixvol::InvalidInput &e) {
        set_error(out_error, e.what());
        return MIXVOL_INVALID_INPUT;
    } catch (const mixvol::PropertyViolation &e) {
        set_error(out_error, e.what());
        return MIXVOL_CHECK_FAILED;
    } catch (const std::exception &e) {
        set_error(out_error, e.what());
        return MIXVOL_INTERNAL_ERROR;
    }
}

const char *mixvol_result_json(const mixvol_result *result) { return result ? result->json_text.c_str() : nullptr; }

const char *mixvol_result_text(const mixvol_result *result) { return result ? result->plain_text.c_str() : nullptr; }

void mixvol_result_free(mixvol_result *result) { delete result; }

void mixvol_string_free(char *s) { std::free(s); }

}  // extern "C"
