#include "pairedkernel.h"

#include <string>

#include "pk/error.hpp"
#include "pk/json_io.hpp"

struct pk_report {
  std::string text;
};

namespace {

thread_local std::string g_last_error;

pk_status status_of(pk::ErrorCode code) {
  using pk::ErrorCode;
  switch (code) {
    case ErrorCode::ParseError:
      return PK_ERR_PARSE;
    case ErrorCode::VerificationMismatch:
      return PK_ERR_VERIFY;
    case ErrorCode::Internal:
      return PK_ERR_INTERNAL;
    default:
      return PK_ERR_PRECONDITION;
  }
}

template <typename Fn>
pk_status run(Fn&& fn, pk_report** out) {
  if (out) *out = nullptr;
  g_last_error.clear();
  try {
    pk::CommandResult res = fn();
    if (out) *out = new pk_report{pk::dump_report(res.report)};
    if (!res.verified_ok) {
      g_last_error = "engine result failed numerical verification";
      return PK_ERR_VERIFY;
    }
    return PK_OK;
  } catch (const pk::Error& e) {
    g_last_error = e.what();
    return status_of(e.code());
  } catch (const std::exception& e) {
    g_last_error = e.what();
    return PK_ERR_INTERNAL;
  }
}

std::string text_of(const char* s) { return s ? std::string(s) : std::string(); }

}  // namespace

extern "C" {

pk_status pk_kernel(const char* pair_json, const char* config_json, pk_report** out) {
  return run([&] { return pk::cmd_kernel(text_of(pair_json), text_of(config_json)); }, out);
}

pk_status pk_minimal(const char* request_json, const char* config_json, pk_report** out) {
  return run([&] { return pk::cmd_minimal(text_of(request_json), text_of(config_json)); }, out);
}

pk_status pk_atto(const char* spec_json, const char* config_json, pk_report** out) {
  return run([&] { return pk::cmd_atto(text_of(spec_json), text_of(config_json)); }, out);
}

pk_status pk_verify(const char* request_json, const char* config_json, pk_report** out) {
  return run([&] { return pk::cmd_verify(text_of(request_json), text_of(config_json)); }, out);
}

pk_status pk_decompose(const char* pair_json, int k, const char* config_json, pk_report** out) {
  return run([&] { return pk::cmd_decompose(text_of(pair_json), k, text_of(config_json)); }, out);
}

const char* pk_report_json(const pk_report* report) { return report ? report->text.c_str() : ""; }

void pk_report_free(pk_report* report) { delete report; }

const char* pk_last_error(void) { return g_last_error.c_str(); }

const char* pk_version(void) { return "0.1.0"; }

}  // extern "C"
